#pragma once

#include "singular_mrl/acceptance.hpp"
#include "singular_mrl/cantor_gaps.hpp"
#include "singular_mrl/distribution.hpp"
#include "singular_mrl/errors.hpp"
#include "singular_mrl/fixedpoint.hpp"
#include "singular_mrl/integration.hpp"
#include "singular_mrl/mrl.hpp"
#include "singular_mrl/params.hpp"
#include "singular_mrl/pricing.hpp"
#include "singular_mrl/serialize.hpp"
