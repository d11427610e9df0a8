#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpcrit/counterexamples.hpp"
#include "lpcrit/criterion.hpp"
#include "lpcrit/json_io.hpp"
#include "lpcrit/lattice.hpp"
#include "lpcrit/pi_parse.hpp"
#include "lpcrit/simplex.hpp"
#include "lpcrit/trig_poly.hpp"
#include "svg.hpp"

namespace {

constexpr int kExitBounded = 0;
constexpr int kExitViolated = 2;
constexpr int kExitConfirmed = 3;
constexpr int kExitUsage = 64;

unsigned env_threads() {
  const char* v = std::getenv("LPCRIT_THREADS");
  if (v == nullptr) return 1;
  const long n = std::strtol(v, nullptr, 10);
  if (n < 1 || n > 256) return 1;
  return static_cast<unsigned>(n);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("short write to '" + path + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string piece;
  while (std::getline(is, piece, sep)) out.push_back(piece);
  return out;
}

// ---- config file: JSON object mirroring long flags, injected right after
// ---- the subcommand so explicit command-line flags win (take-last)
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw CLI::ParseError("--config needs a file", kExitUsage);
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (path.empty()) return args;
  if (args.empty() || args[0].empty() || args[0][0] == '-')
    throw CLI::ParseError("--config requires an explicit subcommand", kExitUsage);

  std::ifstream f(path);
  if (!f) throw CLI::ParseError("cannot read config '" + path + "'", kExitUsage);
  lpcrit::json cfg;
  try {
    cfg = lpcrit::json::parse(f);
  } catch (const std::exception& e) {
    throw CLI::ParseError("config parse: " + std::string(e.what()), kExitUsage);
  }
  if (!cfg.is_object()) throw CLI::ParseError("config must be a JSON object", kExitUsage);

  std::vector<std::string> inject;
  for (const auto& [key, value] : cfg.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) inject.push_back("--" + key);
      continue;
    }
    inject.push_back("--" + key);
    inject.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  args.insert(args.begin() + 1, inject.begin(), inject.end());
  return args;
}

// ---- shared option bags

struct CriterionArgs {
  std::string t = "1", s = "1", fn = "box:0:1";
  double p = 2.0;
  double threshold = 1e-9;
  double delta = 0.0;
  bool has_delta = false;
  std::string json_path;
};

struct CounterArgs {
  std::string kind;
  double p = 2.0, target = 1.0;
  long long layers = 0;  // 0 = per-kind default
  std::string s = "1", t = "1";
  double alpha = 0.0;
  bool has_alpha = false;
  int n = 2;
  double gamma = 0.75;
  std::string shift_vec, freq_vec;
  std::string json_path, csv_path, svg_mass, svg_norms;
  long long table_layers = 1000;
};

lpcrit::NormPair norms_for(const std::string& fn, double t, double s, double p) {
  const std::vector<std::string> parts = split(fn, ':');
  if (parts.empty()) throw CLI::ParseError("empty --fn", kExitUsage);
  if (parts[0] == "zero" && parts.size() == 1) return lpcrit::norms_for_zero();
  if (parts[0] == "box" && parts.size() == 3) {
    const double c = lpcrit::parse_pi_scalar(parts[1]).value();
    const double d = lpcrit::parse_pi_scalar(parts[2]).value();
    return lpcrit::norms_for_box(c, d, t, s, p);
  }
  if (parts[0] == "power" && parts.size() == 2) {
    const double a = lpcrit::parse_pi_scalar(parts[1]).value();
    return lpcrit::norms_for_power_profile(a, t, s, p);
  }
  throw CLI::ParseError("--fn must be box:<c>:<d>, power:<a>, or zero", kExitUsage);
}

int run_criterion(const CriterionArgs& a) {
  const lpcrit::PiScalar ts = lpcrit::parse_pi_scalar(a.t);
  const lpcrit::PiScalar ss = lpcrit::parse_pi_scalar(a.s);
  const lpcrit::PiScalar prod = ts * ss;
  const double tv = ts.value(), sv = ss.value();

  const std::optional<bool> symbolic = lpcrit::in_pi_lattice(prod);
  if (symbolic.has_value() && *symbolic) {
    lpcrit::QuantizationReport qr;
    qr.product = prod.value();
    qr.nearest = static_cast<long long>(std::llround(qr.product / std::numbers::pi));
    qr.distance = 0.0;
    qr.threshold = a.threshold;
    qr.violated = true;
    std::printf("verdict: quantization violated (t*s = %.17g lies on the pi lattice, symbolic)\n",
                qr.product);
    if (!a.json_path.empty()) {
      lpcrit::json doc{{"schema_version", lpcrit::kSchemaVersion},
                       {"quantization", lpcrit::to_json(qr)}};
      write_file(a.json_path, doc.dump(2) + "\n");
    }
    return kExitViolated;
  }

  try {
    const lpcrit::NormPair norms = norms_for(a.fn, tv, sv, a.p);
    const std::optional<double> delta =
        a.has_delta ? std::optional<double>(a.delta) : std::nullopt;
    const lpcrit::BoundCertificate cert =
        lpcrit::certify_bound(tv, sv, a.p, norms, delta, a.threshold);
    std::printf("verdict: bounded\n");
    std::printf("  |f|_p <= %.17g   (multiplier %.17g, delta %.17g)\n", cert.bound,
                cert.decomposition.multiplier_bound, cert.decomposition.delta);
    std::printf("  shift norm <= %.17g, sine norm <= %.17g\n", norms.shift_norm.upper,
                norms.sine_norm.upper);
    if (!a.json_path.empty()) write_file(a.json_path, lpcrit::to_json(cert).dump(2) + "\n");
    return kExitBounded;
  } catch (const lpcrit::QuantizationError& e) {
    std::printf("verdict: quantization violated (distance %.17g < threshold %.17g)\n",
                e.report.distance, e.report.threshold);
    if (!a.json_path.empty()) {
      lpcrit::json doc{{"schema_version", lpcrit::kSchemaVersion},
                       {"quantization", lpcrit::to_json(e.report)}};
      write_file(a.json_path, doc.dump(2) + "\n");
    }
    return kExitViolated;
  }
}

// downsample to at most `cap` points so charts stay small; deterministic
std::vector<std::pair<double, double>> thin(const std::vector<lpcrit::LayerRow>& rows,
                                            double lpcrit::LayerRow::*col, size_t cap = 512) {
  std::vector<std::pair<double, double>> pts;
  const size_t stride = rows.size() > cap ? (rows.size() + cap - 1) / cap : 1;
  for (size_t i = 0; i < rows.size(); i += stride)
    pts.emplace_back(static_cast<double>(rows[i].layer), rows[i].*col);
  if (!rows.empty() && (rows.size() - 1) % stride != 0)
    pts.emplace_back(static_cast<double>(rows.back().layer), rows.back().*col);
  return pts;
}

void emit_layer_outputs(const CounterArgs& a, const std::vector<lpcrit::LayerRow>& rows) {
  if (!a.csv_path.empty()) write_file(a.csv_path, lpcrit::layer_csv(rows));
  if (!a.svg_mass.empty()) {
    const lpcrit::svg::Series mass{
        "certified partial-sum lower bound", "#1f77b4",
        thin(rows, &lpcrit::LayerRow::partial_mass_lower)};
    write_file(a.svg_mass,
               lpcrit::svg::line_chart("cumulative p-mass (lower bounds, no extrapolation)",
                                       "layer", "partial mass", {mass},
                                       lpcrit::svg::HLine{a.target, "target M"}));
  }
  if (!a.svg_norms.empty()) {
    const lpcrit::svg::Series sine{"sine-weighted partial sum", "#d62728",
                                   thin(rows, &lpcrit::LayerRow::partial_sine_upper)};
    const lpcrit::svg::Series shift{"shift-difference partial sum", "#2ca02c",
                                    thin(rows, &lpcrit::LayerRow::partial_shift_upper)};
    write_file(a.svg_norms,
               lpcrit::svg::line_chart("finite-side partial sums (tails excluded)", "layer",
                                       "partial sum", {sine, shift}, std::nullopt));
  }
}

int run_counterexample(const CounterArgs& a) {
  const unsigned threads = env_threads();
  const bool wants_table =
      !a.csv_path.empty() || !a.svg_mass.empty() || !a.svg_norms.empty();
  lpcrit::CounterexampleReport report;

  if (a.kind == "one_d_pi") {
    const long long layers = a.layers > 0 ? a.layers : 100000;
    report = lpcrit::verify_interval_family(a.p, a.target, layers, threads);
    if (wants_table)
      emit_layer_outputs(a, lpcrit::layer_table(lpcrit::make_interval_family(a.p),
                                                a.table_layers));
  } else if (a.kind == "vanishing_shift") {
    report = lpcrit::verify_vanishing_shift(lpcrit::parse_pi_scalar(a.s).value(), a.p,
                                            a.target, threads);
    if (wants_table)
      throw CLI::ParseError("layer tables exist only for one_d_pi and lattice_nd",
                            kExitUsage);
  } else if (a.kind == "vanishing_frequency") {
    const std::optional<double> alpha =
        a.has_alpha ? std::optional<double>(a.alpha) : std::nullopt;
    report = lpcrit::verify_vanishing_frequency(lpcrit::parse_pi_scalar(a.t).value(), a.p,
                                                a.target, alpha, threads);
    if (wants_table)
      throw CLI::ParseError("layer tables exist only for one_d_pi and lattice_nd",
                            kExitUsage);
  } else if (a.kind == "lattice_nd") {
    // construction range: gamma must clear n/(n+1) or the sine side cannot
    // be certified for every p >= 1, so the command refuses up front
    if (a.n < 1 || a.n > 8)
      throw CLI::ParseError("--n must be in [1, 8]", kExitUsage);
    const double floor_gamma = static_cast<double>(a.n) / (a.n + 1);
    if (!(a.gamma > floor_gamma && a.gamma <= 1.0)) {
      std::ostringstream os;
      os << "--gamma " << a.gamma << " outside (" << floor_gamma
         << ", 1]: construction not certifiable at dimension " << a.n;
      throw CLI::ParseError(os.str(), kExitUsage);
    }
    const lpcrit::LatticeCounterexample c = lpcrit::make_lattice_nd(a.n, a.gamma, a.p);
    const long long layers = a.layers > 0 ? a.layers : 200000;
    report = lpcrit::verify_lattice_nd(c, a.target, layers, threads);
    if (wants_table) emit_layer_outputs(a, lpcrit::layer_table(c, a.table_layers));
  } else if (a.kind == "singleton_nd") {
    if (a.shift_vec.empty() || a.freq_vec.empty())
      throw CLI::ParseError("singleton_nd needs --shift and --freq vectors", kExitUsage);
    std::vector<double> av, bv;
    for (const std::string& tok : split(a.shift_vec, ','))
      av.push_back(lpcrit::parse_pi_scalar(tok).value());
    for (const std::string& tok : split(a.freq_vec, ','))
      bv.push_back(lpcrit::parse_pi_scalar(tok).value());
    const lpcrit::SingletonCounterexample c = lpcrit::make_singleton_nd(av, bv, a.p);
    const long long layers = a.layers > 0 ? a.layers : 200000;
    report = lpcrit::verify_singleton(c, a.target, layers, threads);
    if (wants_table)
      throw CLI::ParseError("layer tables exist only for one_d_pi and lattice_nd",
                            kExitUsage);
  } else {
    throw CLI::ParseError("unknown --kind '" + a.kind + "'", kExitUsage);
  }

  std::printf("counterexample confirmed: %s\n", report.kind.c_str());
  std::printf("  shift mass in [%.17g, %.17g]\n", report.shift_mass.lower,
              report.shift_mass.upper);
  std::printf("  sine mass in [%.17g, %.17g]\n", report.sine_mass.lower,
              report.sine_mass.upper);
  std::printf("  p-mass partial sum >= %.17g after %lld layers (%s), target %.17g\n",
              report.mass.partial_lower, report.mass.witness, report.mass.formula.c_str(),
              report.target);
  if (!a.json_path.empty()) write_file(a.json_path, lpcrit::to_json(report).dump(2) + "\n");
  return kExitConfirmed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous p-integrability bounds and certified counterexamples"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.footer(
      "Scalars accept symbolic pi tokens: pi, -pi, 3pi, pi/2, 0.5pi.\n"
      "--config FILE injects flags from a JSON object (explicit flags win).\n"
      "LPCRIT_THREADS sets the series summation thread count.\n"
      "Exit codes: 0 bounded, 2 quantization violated, 3 counterexample confirmed, "
      "64 usage error.");

  CriterionArgs ca;
  CLI::App* crit = app.add_subcommand(
      "verify-criterion", "certify |f|_p from shift-difference and sine-weighted norms");
  crit->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  crit->add_option("--t", ca.t, "shift scalar (pi tokens accepted)");
  crit->add_option("--s", ca.s, "frequency scalar (pi tokens accepted)");
  crit->add_option("--p", ca.p, "exponent p >= 1")->check(CLI::Range(1.0, 60.0));
  crit->add_option("--fn", ca.fn, "function model: box:<c>:<d>, power:<a>, zero");
  crit->add_option("--delta", ca.delta, "explicit separation half-width")
      ->check(CLI::PositiveNumber);
  crit->add_option("--threshold", ca.threshold, "lattice distance treated as violated")
      ->check(CLI::PositiveNumber);
  crit->add_option("--json", ca.json_path, "write the certificate as JSON");

  CounterArgs xa;
  CLI::App* ctr = app.add_subcommand(
      "counterexample", "build a divergent function whose criterion data stays finite");
  ctr->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ctr->add_option("--kind", xa.kind,
                  "one_d_pi | vanishing_shift | vanishing_frequency | lattice_nd | "
                  "singleton_nd")
      ->required();
  ctr->add_option("--p", xa.p, "exponent p >= 1")->check(CLI::Range(1.0, 60.0));
  ctr->add_option("--M", xa.target, "divergence target the partial sums must beat");
  ctr->add_option("--layers", xa.layers, "summation budget for the finite series");
  ctr->add_option("--s", xa.s, "frequency (vanishing_shift)");
  ctr->add_option("--t", xa.t, "shift (vanishing_frequency)");
  ctr->add_option("--alpha", xa.alpha, "profile exponent (vanishing_frequency)");
  ctr->add_option("--n", xa.n, "dimension (lattice_nd)");
  ctr->add_option("--gamma", xa.gamma, "size decay exponent (lattice_nd)");
  ctr->add_option("--shift", xa.shift_vec, "comma-separated shift vector (singleton_nd)");
  ctr->add_option("--freq", xa.freq_vec, "comma-separated frequency vector (singleton_nd)");
  ctr->add_option("--json", xa.json_path, "write the report as JSON");
  ctr->add_option("--csv", xa.csv_path, "write the layer table as CSV");
  ctr->add_option("--svg-mass", xa.svg_mass, "write the cumulative-mass chart");
  ctr->add_option("--svg-norms", xa.svg_norms, "write the sine/shift partial-sum chart");
  ctr->add_option("--table-layers", xa.table_layers, "rows in the CSV/SVG layer table")
      ->check(CLI::PositiveNumber);

  int lc_n = 1;
  long long lc_k = 0;
  bool lc_orthant = false, lc_ball = false;
  CLI::App* lat = app.add_subcommand("lattice-count", "exact lattice layer counts");
  lat->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  lat->add_option("--n", lc_n, "dimension")->required();
  lat->add_option("--k", lc_k, "layer index")->required();
  lat->add_flag("--orthant", lc_orthant, "count only nonnegative coordinates");
  lat->add_flag("--ball", lc_ball, "count the whole ball |x|_1 <= k");

  std::string td_b;
  CLI::App* trg = app.add_subcommand(
      "trig-decomp", "write sin<b,x> as sum Q_j(x) sin(x_j) with small multipliers");
  trg->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  trg->add_option("--b", td_b, "comma-separated integer frequency vector")->required();

  int sx_n = 1;
  double sx_a = 1.0, sx_p = 1.0;
  bool sx_vol = false;
  bool sx_mom = false;
  CLI::App* sx = app.add_subcommand("simplex", "corner-simplex volumes and moments");
  sx->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sx->add_option("--n", sx_n, "dimension")->required();
  sx->add_option("--a", sx_a, "side length");
  sx->add_flag("--volume", sx_vol, "print the volume");
  sx->add_flag("--moment", sx_mom, "print the first-coordinate p-th moment");
  sx->add_option("--p", sx_p, "moment exponent");

  try {
    std::vector<std::string> args = apply_config({argv + 1, argv + argc});
    std::vector<const char*> ptrs{argv[0]};
    for (const std::string& s : args) ptrs.push_back(s.c_str());
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    ca.has_delta = crit->count("--delta") > 0;
    xa.has_alpha = ctr->count("--alpha") > 0;

    if (crit->parsed()) return run_criterion(ca);
    if (ctr->parsed()) return run_counterexample(xa);
    if (lat->parsed()) {
      if (lc_orthant && lc_ball)
        throw CLI::ParseError("--orthant and --ball are mutually exclusive", kExitUsage);
      unsigned long long v = 0;
      if (lc_orthant)
        v = lpcrit::count_layer_nonneg(lc_n, lc_k);
      else if (lc_ball)
        v = lpcrit::count_ball(lc_n, lc_k);
      else
        v = lpcrit::count_layer_full(lc_n, lc_k);
      std::printf("%llu\n", v);
      return kExitBounded;
    }
    if (trg->parsed()) {
      std::vector<long long> b;
      for (const std::string& tok : split(td_b, ',')) b.push_back(std::stoll(tok));
      const std::vector<lpcrit::TrigPolynomial> q = lpcrit::decompose(b);
      std::ostringstream line;
      for (size_t j = 0; j < q.size(); ++j) {
        if (j) line << "; ";
        line << "Q" << (j + 1) << " = " << q[j].str();
      }
      std::printf("%s\n", line.str().c_str());
      for (size_t j = 0; j < q.size(); ++j)
        std::printf("  |Q%zu|_inf <= %.17g\n", j + 1, q[j].sup_norm().upper);
      std::printf("  residual over 1000 samples = %.3g\n",
                  lpcrit::identity_residual(b, q, 1000));
      return kExitBounded;
    }
    if (sx->parsed()) {
      if (!sx_vol && !sx_mom)
        throw CLI::ParseError("pick --volume and/or --moment", kExitUsage);
      if (sx_vol) std::printf("%.17g\n", lpcrit::simplex_volume(sx_n, sx_a));
      if (sx_mom) std::printf("%.17g\n", lpcrit::simplex_moment(sx_n, sx_a, sx_p));
      return kExitBounded;
    }
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
