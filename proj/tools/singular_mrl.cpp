#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "singular_mrl/acceptance.hpp"
#include "singular_mrl/singular_mrl.hpp"

namespace sm = singular_mrl;
using nlohmann::json;

namespace {

enum ExitCode {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kParameter = 4,
  kResource = 5,
  kConvergence = 6,
  kIo = 7,
};

struct Options {
  double p = 1.0;
  double x = 0.0;
  double tolerance = 1e-10;
  std::size_t grid = 1000;
  std::size_t n_initial = 1000;
  int iterations = 17;
  std::uint64_t seed = 20240917;
  std::string format = "text";
  std::string out;
  std::vector<double> p_list{0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0};
  std::size_t curve = 0;
  std::string series = "cloud";
  std::string suite = "all";
  int only = 0;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string real(double v) { return sm::format_real(v); }

void print_value(std::ostream& os, const Options& o, const char* name, double x, double value,
                 double error_bound) {
  if (o.format == "csv") {
    os << "p,x," << name << ",error_bound\n"
       << real(o.p) << ',' << real(x) << ',' << real(value) << ',' << real(error_bound) << '\n';
  } else if (o.format == "json") {
    os << json{{"p", o.p}, {"x", x}, {name, value}, {"error_bound", error_bound}}.dump(2) << '\n';
  } else {
    os << name << "(" << real(x) << ") = " << real(value) << "  (error bound " << real(error_bound)
       << ", p = " << real(o.p) << ")\n";
  }
}

int run_fixpoint(std::ostream& os, const Options& o) {
  const sm::PSingularParams params(o.p);
  const sm::FixedPointResult r = sm::fixed_point_solve(params, {o.tolerance}, o.grid);
  if (o.format == "csv") {
    os << "p,x_star,residual,bracket_lo,bracket_hi,closed_form,sign_changes\n"
       << real(o.p) << ',' << real(r.x_star) << ',' << real(r.residual) << ','
       << real(r.bracket.first) << ',' << real(r.bracket.second) << ',' << real(r.closed_form)
       << ',' << r.sign_changes << '\n';
  } else if (o.format == "json") {
    json j = r;
    j["p"] = o.p;
    os << j.dump(2) << '\n';
  } else {
    os << "p            " << real(o.p) << '\n'
       << "x*           " << real(r.x_star) << '\n'
       << "residual     " << real(r.residual) << '\n'
       << "bracket      [" << real(r.bracket.first) << ", " << real(r.bracket.second) << "]\n"
       << "closed form  " << real(r.closed_form) << '\n'
       << "sign changes " << r.sign_changes << '\n';
  }
  return r.sign_changes == 1 ? kOk : kVerificationFailed;
}

void print_pricing(std::ostream& os, const Options& o, const std::vector<sm::PricingResult>& rs) {
  if (o.format == "csv") {
    os << "p,optimal_price,expected_payoff\n";
    for (const auto& r : rs) {
      os << real(r.p) << ',' << real(r.optimal_price) << ',' << real(r.expected_payoff) << '\n';
    }
    for (const auto& r : rs) {
      if (r.payoff_curve) {
        os << '\n';
        sm::write_csv(os, *r.payoff_curve);
      }
    }
  } else if (o.format == "json") {
    const json j = rs.size() == 1 ? json(rs.front()) : json(rs);
    os << j.dump(2) << '\n';
  } else {
    os << "p                        optimal price            expected payoff\n";
    for (const auto& r : rs) {
      char line[128];
      std::snprintf(line, sizeof line, "%-24s %-24s %s\n", real(r.p).c_str(),
                    real(r.optimal_price).c_str(), real(r.expected_payoff).c_str());
      os << line;
    }
    for (const auto& r : rs) {
      if (!r.payoff_curve) continue;
      os << "\npayoff curve (price, payoff):\n";
      for (const auto& pt : *r.payoff_curve) os << real(pt.price) << ' ' << real(pt.payoff) << '\n';
    }
  }
}

int run_plot_data(std::ostream& os, const Options& o) {
  const sm::PSingularParams params(o.p);
  if (o.series == "mrl") {
    const sm::EvalConfig config{o.tolerance};
    const auto xs = sm::augmented_grid(o.grid, sm::kScanGapLevel);
    auto emit = [&](auto& writer) {
      for (double x : xs) writer(x, sm::mrl(params, x, config).value);
    };
    if (o.format == "json") {
      sm::JsonPairWriter w(os);
      emit(w);
    } else {
      sm::CsvWriter w(os, "x,m");
      emit(w);
    }
    return kOk;
  }
  if (o.format == "json") {
    sm::JsonPairWriter w(os);
    sm::visit_point_cloud(params, o.n_initial, o.iterations, w);
  } else {
    sm::CsvWriter w(os, "x,F");
    sm::visit_point_cloud(params, o.n_initial, o.iterations, w);
  }
  return kOk;
}

void report(std::ostream& os, const std::string& label, const sm::CheckResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  os << (r.passed ? "[PASS] " : "[FAIL] ") << label << " (" << secs << " s)";
  if (!r.detail.empty()) os << (r.detail.front() == '\n' ? "" : ": ") << r.detail;
  os << '\n';
}

int run_verify(std::ostream& os, const Options& o) {
  bool ok = true;
  if (o.suite == "all" || o.suite == "acceptance") {
    for (const auto& c : sm::acceptance_criteria(o.seed)) {
      if (o.only != 0 && c.id != o.only) continue;
      const std::string label = "criterion " + std::to_string(c.id) + ": " + c.title;
      const sm::CheckResult r = sm::detail::timed(label, c.run);
      report(os, label, r);
      os.flush();
      ok = ok && r.passed;
    }
  }
  if (o.suite == "all" || o.suite == "invariants") {
    const sm::PSingularParams params(o.p);
    for (const auto& r : sm::invariant_suite(params, {o.tolerance}, o.seed)) {
      report(os, r.name + " [p = " + sm::detail::describe(o.p) + "]", r);
      ok = ok && r.passed;
    }
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and analyse p-singular Cantor-type distributions"};
  app.require_subcommand(1);
  Options o;

  app.add_option("--p", o.p, "Family parameter p > 0")->capture_default_str();
  app.add_option("--tolerance", o.tolerance, "Absolute accuracy target")
      ->envname("SINGULAR_MRL_TOLERANCE")
      ->capture_default_str();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Output file (default standard output)");
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();

  auto* cdf = app.add_subcommand("cdf", "F_p(x) with error bound");
  auto* mrl = app.add_subcommand("mrl", "Mean residual life m_p(x)");
  auto* gmrl = app.add_subcommand("gmrl", "Generalized mean residual life m_p(x)/x");
  for (auto* sub : {cdf, mrl, gmrl}) sub->add_option("--x", o.x, "Point in [0, 1]")->required();

  auto* fixpoint = app.add_subcommand("fixpoint", "Solve m_p(x) = x and scan for uniqueness");
  fixpoint->add_option("--grid", o.grid, "Uniqueness scan grid size")->capture_default_str();

  auto* price = app.add_subcommand("price", "Optimal monopoly price");
  price->add_option("--curve", o.curve, "Attach a payoff curve with this many prices");

  auto* statics = app.add_subcommand("statics", "Optimal prices over a list of p");
  statics->add_option("--p-list", o.p_list, "Comma-separated p values")
      ->delimiter(',')
      ->capture_default_str();

  auto* plot = app.add_subcommand("plot-data", "Point cloud of F_p or m_p over a grid");
  plot->add_option("--series", o.series, "cloud: (x, F) point cloud; mrl: (x, m(x))")
      ->check(CLI::IsMember({"cloud", "mrl"}))
      ->capture_default_str();
  plot->add_option("--n-initial", o.n_initial, "Initial plateau points")->capture_default_str();
  plot->add_option("--iterations", o.iterations, "Shrink/flip iterations")->capture_default_str();
  plot->add_option("--grid", o.grid, "Uniform grid size for the mrl series")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria and invariant suite");
  verify->add_option("--suite", o.suite, "Which checks to run")
      ->check(CLI::IsMember({"all", "acceptance", "invariants"}))
      ->capture_default_str();
  verify->add_option("--only", o.only, "Run a single acceptance criterion");

  for (auto* sub : {cdf, mrl, gmrl, fixpoint, price, statics, plot, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    std::unique_ptr<std::ofstream> file;
    if (!o.out.empty()) {
      file = std::make_unique<std::ofstream>(o.out, std::ios::binary);
      if (!*file) throw IoError("cannot open " + o.out + " for writing");
    }
    std::ostream& os = file ? *file : std::cout;
    const sm::EvalConfig config{o.tolerance};
    config.validate();

    int rc = kOk;
    if (cdf->parsed()) {
      const sm::Estimate e = sm::cdf_estimate(sm::PSingularParams(o.p), o.x, config);
      print_value(os, o, "cdf", o.x, e.value, e.error_bound);
    } else if (mrl->parsed()) {
      const sm::MrlValue m = sm::mrl(sm::PSingularParams(o.p), o.x, config);
      print_value(os, o, "mrl", o.x, m.value, m.error_bound);
    } else if (gmrl->parsed()) {
      const sm::Estimate e = sm::gmrl(sm::PSingularParams(o.p), o.x, config);
      print_value(os, o, "gmrl", o.x, e.value, e.error_bound);
    } else if (fixpoint->parsed()) {
      rc = run_fixpoint(os, o);
    } else if (price->parsed()) {
      print_pricing(os, o, {sm::optimal_price(sm::PSingularParams(o.p), config, o.curve)});
    } else if (statics->parsed()) {
      print_pricing(os, o, sm::comparative_statics(o.p_list, config));
    } else if (plot->parsed()) {
      rc = run_plot_data(os, o);
    } else if (verify->parsed()) {
      rc = run_verify(os, o);
    }
    os.flush();
    if (!os) throw IoError("write failed");
    return rc;
  } catch (const sm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case sm::ErrorKind::domain: return kDomain;
      case sm::ErrorKind::parameter: return kParameter;
      case sm::ErrorKind::resource: return kResource;
      case sm::ErrorKind::convergence: return kConvergence;
    }
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
