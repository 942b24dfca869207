// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>
#include <string>

#include "singular_mrl/acceptance.hpp"

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failed = 0;
  for (const auto& c : singular_mrl::acceptance_criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto r = singular_mrl::detail::timed(c.title, c.run);
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", r.passed ? "PASS" : "FAIL", c.id,
                c.title.c_str(), r.seconds, r.detail.empty() || r.detail[0] == '\n' ? "" : ": ",
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
