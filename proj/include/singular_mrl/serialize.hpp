#pragma once

// CSV and JSON encodings. CSV always carries a header row, uses '.' as the
// decimal separator, '\n' line endings and 17 significant digits, so printed
// values re-parse to the exact doubles.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "singular_mrl/distribution.hpp"
#include "singular_mrl/fixedpoint.hpp"
#include "singular_mrl/pricing.hpp"

namespace singular_mrl {

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Streams `a,b` rows after a header, e.g. for visit_point_cloud.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::string& header) : os_(os) { os_ << header << '\n'; }

  void row(double a, double b) {
    os_ << format_real(a) << ',' << format_real(b) << '\n';
  }
  void operator()(double a, double b) { row(a, b); }

 private:
  std::ostream& os_;
};

/// Streams a JSON array of [a, b] pairs without building a DOM.
class JsonPairWriter {
 public:
  explicit JsonPairWriter(std::ostream& os) : os_(os) { os_ << '['; }
  JsonPairWriter(const JsonPairWriter&) = delete;
  JsonPairWriter& operator=(const JsonPairWriter&) = delete;
  ~JsonPairWriter() { os_ << "]\n"; }

  void operator()(double a, double b) {
    os_ << (first_ ? "" : ",") << '[' << format_real(a) << ',' << format_real(b) << ']';
    first_ = false;
  }

 private:
  std::ostream& os_;
  bool first_ = true;
};

inline void write_csv(std::ostream& os, const PointCloud& cloud) {
  CsvWriter w(os, "x,F");
  for (const auto& pt : cloud.points) w.row(pt.x, pt.F);
}

inline void write_csv(std::ostream& os, const std::vector<PayoffPoint>& curve) {
  CsvWriter w(os, "price,payoff");
  for (const auto& pt : curve) w.row(pt.price, pt.payoff);
}

inline void to_json(nlohmann::json& j, const CloudPoint& pt) { j = nlohmann::json::array({pt.x, pt.F}); }
inline void from_json(const nlohmann::json& j, CloudPoint& pt) {
  pt.x = j.at(0).get<double>();
  pt.F = j.at(1).get<double>();
}

/// A point cloud is encoded as a bare array of [x, F] pairs.
inline void to_json(nlohmann::json& j, const PointCloud& cloud) { j = cloud.points; }

inline void to_json(nlohmann::json& j, const PayoffPoint& pt) {
  j = {{"price", pt.price}, {"payoff", pt.payoff}};
}
inline void from_json(const nlohmann::json& j, PayoffPoint& pt) {
  j.at("price").get_to(pt.price);
  j.at("payoff").get_to(pt.payoff);
}

inline void to_json(nlohmann::json& j, const PricingResult& r) {
  j = {{"p", r.p}, {"optimal_price", r.optimal_price}, {"expected_payoff", r.expected_payoff}};
  j["payoff_curve"] = r.payoff_curve ? nlohmann::json(*r.payoff_curve) : nlohmann::json(nullptr);
}
inline void from_json(const nlohmann::json& j, PricingResult& r) {
  j.at("p").get_to(r.p);
  j.at("optimal_price").get_to(r.optimal_price);
  j.at("expected_payoff").get_to(r.expected_payoff);
  if (j.contains("payoff_curve") && !j.at("payoff_curve").is_null()) {
    r.payoff_curve = j.at("payoff_curve").get<std::vector<PayoffPoint>>();
  } else {
    r.payoff_curve.reset();
  }
}

inline void to_json(nlohmann::json& j, const FixedPointResult& r) {
  j = {{"x_star", r.x_star},
       {"residual", r.residual},
       {"bracket", {r.bracket.first, r.bracket.second}},
       {"closed_form", r.closed_form},
       {"sign_changes", r.sign_changes}};
}

}  // namespace singular_mrl
