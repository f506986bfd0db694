#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypercurv/errors.hpp"
#include "hypercurv/expression.hpp"
#include "report_json.hpp"

namespace hypercurv::cli {

namespace {

constexpr int kOperatorSamples = 50;
constexpr int kPointSamples = 50;
constexpr int kOrthogonalSamples = 10;

// splitmix64 finalizer; gives independent sub-seeds per check and sample.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream * 0x10000ULL + k + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double relative_error(double got, double want) { return std::abs(got - want) / std::abs(want); }

double spectrum_residual(const std::vector<Cluster<double>>& got, const std::vector<Cluster<double>>& want) {
  if (got.size() != want.size()) return std::numeric_limits<double>::max();
  double worst = 0.0;
  for (std::size_t k = 0; k < got.size(); ++k) {
    if (got[k].multiplicity != want[k].multiplicity) return std::numeric_limits<double>::max();
    worst = std::max(worst, std::abs(got[k].value - want[k].value));
  }
  return worst;
}

std::string format_clusters(const std::vector<Cluster<double>>& clusters) {
  std::ostringstream out;
  out << std::setprecision(10);
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (k != 0) out << ", ";
    out << clusters[k].value << " x" << clusters[k].multiplicity;
  }
  return out.str();
}

VectorXd parse_point(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw InvalidArgument("--point: cannot parse '" + item + "' as a real number");
    values.push_back(value);
    start = comma + 1;
  }
  return Eigen::Map<const VectorXd>(values.data(), Eigen::Index(values.size()));
}

void print_report(std::ostream& out, const CurvatureReport& r) {
  out << std::setprecision(10);
  auto row = [&](const VectorXd& v) {
    for (Eigen::Index k = 0; k < v.size(); ++k) out << (k ? ", " : "") << v(k);
    out << '\n';
  };
  out << "point:           ";
  row(r.point);
  out << "normal:          ";
  row(r.normal);
  out << "curvatures:      " << format_clusters(r.curvatures) << '\n';
  out << "gauss_kronecker: " << r.gauss_kronecker << '\n';
  out << "mean:            " << r.mean << '\n';
}

int cmd_verify_sl(std::size_t n, double tol, std::uint64_t seed, bool json, std::ostream& out,
                  std::ostream& err) {
  if (n < 2 || n > 5) {
    err << "verify-sl: --n must be between 2 and 5\n";
    return kUsage;
  }
  if (!(tol > 0.0)) {
    err << "verify-sl: --tol must be positive\n";
    return kUsage;
  }
  const VerifyResult result = verify_sl(n, tol, seed);
  if (json) {
    nlohmann::json j;
    j["command"] = "verify-sl";
    j["n"] = n;
    j["tolerance"] = tol;
    j["seed"] = seed;
    j["passed"] = result.passed();
    auto checks = nlohmann::json::array();
    for (const auto& c : result.checks)
      checks.push_back({{"name", c.name}, {"residual", c.residual}, {"passed", c.passed}});
    j["checks"] = std::move(checks);
    j["summary"] = summary_to_json(result.summary);
    j["report"] = report_to_json(result.identity_report);
    out << j.dump(2) << '\n';
  } else {
    out << "verify-sl n=" << n << " tol=" << tol << " seed=" << seed << '\n';
    for (const auto& c : result.checks) {
      out << "  " << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name
          << " residual " << std::setprecision(3) << std::scientific << c.residual << '\n'
          << std::defaultfloat;
    }
    const auto& s = result.summary;
    out << std::setprecision(10);
    out << "spectrum at I:        " << format_clusters(result.identity_report.curvatures) << '\n';
    out << "gauss_kronecker at I: " << result.identity_report.gauss_kronecker << " (closed form "
        << s.gauss_kronecker << ")\n";
    out << "mean at I:            " << result.identity_report.mean << " (closed form " << s.mean << ")\n";
    out << "result: " << (result.passed() ? "PASS" : "FAIL") << '\n';
  }
  return result.passed() ? kOk : kCheckFailed;
}

int cmd_analyze(const std::string& builtin, std::size_t n, const std::string& expr, double level,
                bool level_given, const std::string& point_text, bool json, std::ostream& out,
                std::ostream& err) {
  if (builtin.empty() == expr.empty()) {
    err << "analyze: give exactly one of --builtin sl or --expr\n";
    return kUsage;
  }
  VectorXd point;
  std::unique_ptr<ImplicitHypersurface> surface;
  try {
    point = parse_point(point_text);
    if (!builtin.empty()) {
      if (builtin != "sl") {
        err << "analyze: unknown builtin '" << builtin << "' (known: sl)\n";
        return kUsage;
      }
      if (n < 1 || n > 6) {
        err << "analyze: --n must be between 1 and 6 for the sl builtin\n";
        return kUsage;
      }
      surface = std::make_unique<ImplicitHypersurface>(determinant_field(n), 1.0);
    } else {
      if (!level_given) {
        err << "analyze: --expr needs --level\n";
        return kUsage;
      }
      surface = std::make_unique<ImplicitHypersurface>(
          expression_field(expr, static_cast<std::size_t>(point.size())), level);
    }
    if (static_cast<std::size_t>(point.size()) != surface->ambient_dim()) {
      err << "analyze: point has " << point.size() << " coordinates, surface lives in R^"
          << surface->ambient_dim() << '\n';
      return kUsage;
    }
  } catch (const ParseError& e) {
    err << "analyze: expression parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "analyze: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const CurvatureReport report = curvature_report(*surface, point);
    if (json)
      out << report_to_json(report).dump(2) << '\n';
    else
      print_report(out, report);
  } catch (const Error& e) {
    err << "analyze: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_sample_image(std::size_t n, long long count, std::uint64_t seed, std::ostream& out,
                     std::ostream& err) {
  if (n < 2) {
    err << "sample-image: --n must be at least 2\n";
    return kUsage;
  }
  if (count < 1) {
    err << "sample-image: --count must be positive\n";
    return kUsage;
  }
  double min_det = std::numeric_limits<double>::infinity();
  double max_det = -std::numeric_limits<double>::infinity();
  long long positive = 0;
  for (long long k = 0; k < count; ++k) {
    const MatrixXd u = gauss_map(random_sl(n, sub_seed(seed, 7, std::uint64_t(k))));
    const double d = u.determinant();
    min_det = std::min(min_det, d);
    max_det = std::max(max_det, d);
    if (spherical_image_contains(u)) ++positive;
  }
  out << std::setprecision(10);
  out << "sampled " << count << " gauss-map images of SL(" << n << ")\n";
  out << "det min " << min_det << " max " << max_det << '\n';
  out << "all det > 0: " << (positive == count ? "yes" : "no") << '\n';
  return positive == count ? kOk : kCheckFailed;
}

int cmd_report(std::size_t n, std::ostream& out, std::ostream& err) {
  if (n < 2) {
    err << "report: --n must be at least 2\n";
    return kUsage;
  }
  const SLCurvatureSummary s = curvature_summary(n);
  out << std::setprecision(12);
  out << "SL(" << s.n << ") at I, tangent dimension " << s.mult_plus + s.mult_minus << '\n';
  out << "  kappa_plus       " << s.kappa_plus << "  multiplicity " << s.mult_plus << '\n';
  out << "  kappa_minus      " << s.kappa_minus << "  multiplicity " << s.mult_minus << '\n';
  out << "  gauss_kronecker  " << s.gauss_kronecker << '\n';
  out << "  mean             " << s.mean << '\n';
  return kOk;
}

}  // namespace

bool VerifyResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyResult verify_sl(std::size_t n, double tolerance, std::uint64_t seed) {
  if (n < 2 || n > 5) throw InvalidArgument("verify_sl: n must be in 2..5");
  if (!(tolerance > 0.0)) throw InvalidArgument("verify_sl: tolerance must be positive");

  VerifyResult result{n, tolerance, seed, {}, curvature_summary(n), {}};
  auto record = [&](std::string name, double residual) {
    result.checks.push_back({std::move(name), residual, residual <= tolerance});
  };

  const ImplicitHypersurface sl(determinant_field(n), 1.0);
  const auto dim = static_cast<Eigen::Index>(n);
  const VectorXd identity = vec(MatrixXd::Identity(dim, dim));

  double op_residual = 0.0;
  double form_residual = 0.0;
  for (int k = 0; k < kOperatorSamples; ++k) {
    const MatrixXd h = random_trace_zero(n, sub_seed(seed, 1, std::uint64_t(k)));
    const VectorXd v = vec(h);
    const VectorXd numeric = weingarten_apply(sl, identity, v);
    op_residual = std::max(op_residual, (numeric - vec(weingarten_identity(h, n))).cwiseAbs().maxCoeff());
    const FundamentalForms forms = fundamental_forms(h, n);
    form_residual = std::max(form_residual, std::abs(second_fundamental_form(sl, identity, v, v) - forms.second));
    form_residual = std::max(form_residual, std::abs(v.dot(v) - forms.first));
  }
  record("weingarten_operator", op_residual);

  result.identity_report = curvature_report(sl, identity);
  const auto& report = result.identity_report;
  record("principal_curvatures", spectrum_residual(report.curvatures, principal_curvatures_identity(n)));
  record("gauss_kronecker", relative_error(report.gauss_kronecker, result.summary.gauss_kronecker));
  record("mean_curvature", relative_error(report.mean, result.summary.mean));
  record("fundamental_forms", form_residual);

  double normal_residual = 0.0;
  double round_trip_residual = 0.0;
  int outside_image = 0;
  for (int k = 0; k < kPointSamples; ++k) {
    const SLPoint a = random_sl(n, sub_seed(seed, 2, std::uint64_t(k)));
    const MatrixXd u = gauss_map(a);
    normal_residual = std::max(normal_residual, (unit_normal(sl, a.flat()) - vec(u)).cwiseAbs().maxCoeff());
    if (!spherical_image_contains(u)) ++outside_image;
    const SLPoint b = gauss_map_preimage(u);
    round_trip_residual = std::max(round_trip_residual, (gauss_map(b) - u).cwiseAbs().maxCoeff());
  }
  record("unit_normal_vs_gauss_map", normal_residual);
  record("gauss_map_round_trip", round_trip_residual);
  record("spherical_image_positive", double(outside_image));

  double invariance_residual = 0.0;
  for (int k = 0; k < kOrthogonalSamples; ++k) {
    const SLPoint q = random_special_orthogonal(n, sub_seed(seed, 3, std::uint64_t(k)));
    const CurvatureReport at_q = curvature_report(sl, q.flat());
    invariance_residual =
        std::max(invariance_residual, (at_q.principal - report.principal).cwiseAbs().maxCoeff());
  }
  record("orthogonal_point_invariance", invariance_residual);
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature of implicit hypersurfaces and of SL(n,R) in R^{n^2}", "hypercurv"};
  app.require_subcommand(1);

  std::size_t n = 0;
  double tol = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;

  auto* verify = app.add_subcommand("verify-sl", "Check the numeric engine against the closed forms for SL(n)");
  verify->add_option("--n", n, "Matrix size, 2..5")->required();
  verify->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_flag("--json", json, "Emit one JSON document");

  std::string builtin;
  std::string expr;
  double level = 0.0;
  std::string point_text;
  auto* analyze = app.add_subcommand("analyze", "Curvature report of a level set at a point");
  analyze->add_option("--builtin", builtin, "Built-in surface (sl)");
  analyze->add_option("--n", n, "Matrix size for --builtin sl");
  analyze->add_option("--expr", expr, "Field expression in x1..xN");
  auto* level_opt = analyze->add_option("--level", level, "Level value c of f = c");
  analyze->add_option("--point", point_text, "Comma-separated coordinates")->required();
  analyze->add_flag("--json", json, "Emit one JSON document");

  long long count = 0;
  auto* sample = app.add_subcommand("sample-image", "Sample Gauss-map images of random SL(n) points");
  sample->add_option("--n", n, "Matrix size")->required();
  sample->add_option("--count", count, "Number of samples")->required();
  sample->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* report = app.add_subcommand("report", "Closed-form curvature summary of SL(n) at I");
  report->add_option("--n", n, "Matrix size")->required();

  std::vector<const char*> argv{"hypercurv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify_sl(n, tol, seed, json, out, err);
    if (analyze->parsed())
      return cmd_analyze(builtin, n, expr, level, level_opt->count() > 0, point_text, json, out, err);
    if (sample->parsed()) return cmd_sample_image(n, count, seed, out, err);
    if (report->parsed()) return cmd_report(n, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace hypercurv::cli
