#pragma once

#include "hahnosc/app/table.hpp"
#include "hahnosc/errors.hpp"
#include "hahnosc/exact/fuzz.hpp"
#include "hahnosc/exact/rational.hpp"
#include "hahnosc/fourier/poisson.hpp"
#include "hahnosc/fourier/transform.hpp"
#include "hahnosc/model.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hahnosc::app {

enum ExitCode { exit_ok = 0, exit_verification = 1, exit_config = 2, exit_route = 3 };

/// Invalid user input; the message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string subcommand;
  std::optional<int> j;
  std::optional<std::string> alpha;
  std::vector<int> levels;
  std::string route = "uv";
  std::string mode = "float";
  std::string format = "csv";
  std::string kind = "position";
  std::string out;
  std::optional<double> tol;
  std::string preset;
  bool compare = false;
  bool inject_fault = false;
  bool perturb = false;
  std::uint64_t seed = 42;
  int count = 500;
  std::vector<std::string> identities;
  std::vector<int> j_list;
  double bound = 2.0;
  double kernel_bound = 1.5;
};

/// What a command produced: a table, an exit code and diagnostics for stderr.
struct CommandResult {
  Table table;
  int code = exit_ok;
  std::string diagnostics;
};

namespace detail {

inline double parse_alpha(const std::string& text) {
  double v;
  if (text.find('/') != std::string::npos) {
    try {
      v = exact::Rational::parse(text).to_double();
    } catch (const Error& e) {
      throw ConfigError(std::string("alpha: ") + e.what());
    }
  } else {
    std::size_t used = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) throw ConfigError("alpha: not a number: '" + text + "'");
  }
  if (!std::isfinite(v) || !(v > -1.0)) throw ConfigError("alpha: must be a finite real > -1, got '" + text + "'");
  return v;
}

inline exact::Rational parse_alpha_exact(const std::string& text) {
  exact::Rational a;
  try {
    a = exact::Rational::parse(text);
  } catch (const Error& e) {
    throw ConfigError(std::string("alpha: exact mode needs a p/q literal (") + e.what() + ")");
  }
  if (!(a > exact::Rational(-1))) throw ConfigError("alpha: must be > -1, got '" + text + "'");
  return a;
}

inline int require_j(const std::optional<int>& j, int fallback) {
  const int v = j.value_or(fallback);
  if (v < 0) throw ConfigError("j: must be a nonnegative integer, got " + std::to_string(v));
  return v;
}

// --tol, then HAHNOSC_TOL, then nothing
inline std::optional<double> tolerance_override(const RunConfig& c) {
  if (c.tol) {
    if (!(*c.tol > 0) || !std::isfinite(*c.tol)) throw ConfigError("tol: must be a positive number");
    return c.tol;
  }
  if (const char* env = std::getenv("HAHNOSC_TOL"); env && *env) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size() || !(v > 0) || !std::isfinite(v))
      throw ConfigError(std::string("HAHNOSC_TOL: must be a positive number, got '") + env + "'");
    return v;
  }
  return std::nullopt;
}

inline nlohmann::ordered_json meta(std::optional<int> j, const nlohmann::ordered_json& alpha,
                                   const nlohmann::ordered_json& route, std::optional<double> tol) {
  nlohmann::ordered_json m;
  m["j"] = j ? nlohmann::ordered_json(*j) : nlohmann::ordered_json(nullptr);
  m["alpha"] = alpha;
  m["route"] = route;
  m["tolerance"] = tol ? nlohmann::ordered_json(*tol) : nlohmann::ordered_json(nullptr);
  return m;
}

inline bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return !v.empty();
}

}  // namespace detail

/// Parameters of the figure presets.
struct Fig1Preset {
  int j = 5;
  double alpha = 1.0;
};

struct Fig2Preset {
  int j = 30;
  std::vector<double> alphas = {-0.5, -0.7, 2.0};
  std::vector<int> levels = {0, 1, 2, 60};
};

inline CommandResult cmd_spectrum(const RunConfig& c) {
  CommandResult r;
  const bool fig1 = c.preset == "fig1";
  if (!c.preset.empty() && !fig1) throw ConfigError("preset: spectrum only knows fig1");
  const int j = fig1 ? Fig1Preset{}.j : detail::require_j(c.j, 10);
  const double alpha = fig1 ? Fig1Preset{}.alpha : detail::parse_alpha(c.alpha.value_or("0"));
  const ModelParams mp(j, alpha);
  r.table.meta = detail::meta(j, alpha, nullptr, std::nullopt);
  if (!fig1 && !c.compare) {
    r.table.columns = {"k", "q_k"};
    const auto q = spectrum_q(mp);
    for (int k = -j; k <= j; ++k) r.table.add({static_cast<long long>(k), q[j + k]});
    return r;
  }
  // three panels: su(2), u(2)_alpha at j + 1/2, su(2)_alpha
  r.table.columns = {"panel", "k", "q_k"};
  for (double q : spectrum_q(ModelParams(j, -0.5))) r.table.add({std::string("su2"), std::lround(q) + 0LL, q});
  const auto u2 = u2alpha_spectrum(j + 0.5, alpha);
  for (std::size_t i = 0; i < u2.size(); ++i)
    r.table.add({std::string("u2alpha"), static_cast<long long>(i) - static_cast<long long>(j) - 1, u2[i]});
  const auto q = spectrum_q(mp);
  for (int k = -j; k <= j; ++k) r.table.add({std::string("su2alpha"), static_cast<long long>(k), q[j + k]});
  r.table.meta["u2alpha_j"] = j + 0.5;
  r.table.meta["preset"] = fig1 ? nlohmann::ordered_json("fig1") : nlohmann::ordered_json(nullptr);
  return r;
}

inline CommandResult cmd_wavefn(const RunConfig& c) {
  CommandResult r;
  const bool fig2 = c.preset == "fig2" || (c.preset.empty() && !c.j && !c.alpha && c.levels.empty());
  if (!c.preset.empty() && c.preset != "fig2") throw ConfigError("preset: wavefn only knows fig2");
  if (c.kind != "position" && c.kind != "momentum") throw ConfigError("kind: expected position or momentum");
  const OperatorKind kind = c.kind == "position" ? OperatorKind::position : OperatorKind::momentum;
  const Fig2Preset preset;
  const int j = fig2 ? preset.j : detail::require_j(c.j, 10);
  const std::vector<double> alphas = fig2 ? preset.alphas : std::vector<double>{detail::parse_alpha(c.alpha.value_or("0"))};
  std::vector<int> levels = fig2 ? preset.levels : c.levels;
  if (levels.empty())
    for (int n = 0; n <= 2 * j; ++n) levels.push_back(n);
  for (int n : levels)
    if (n < 0 || n > 2 * j) throw ConfigError("n: level " + std::to_string(n) + " outside 0.." + std::to_string(2 * j));
  const std::optional<double> tol = detail::tolerance_override(c).value_or(1e-10);
  r.table.columns = kind == OperatorKind::position ? std::vector<std::string>{"alpha", "n", "k", "q", "phi"}
                                                   : std::vector<std::string>{"alpha", "n", "k", "p", "re", "im"};
  double worst = 0.0;
  for (double a : alphas) {
    const ModelParams mp(j, a);
    const auto t = wavefunctions(mp, kind);
    for (int n : levels) {
      double norm = 0.0;
      for (int k = 0; k <= 2 * j; ++k) {
        const cplx v = t.values(n, k);
        norm += std::norm(v);
        if (kind == OperatorKind::position)
          r.table.add({a, static_cast<long long>(n), static_cast<long long>(k - j), t.grid[k], v.real()});
        else
          r.table.add({a, static_cast<long long>(n), static_cast<long long>(k - j), t.grid[k], v.real(), v.imag()});
      }
      worst = std::max(worst, std::abs(norm - 1.0));
    }
  }
  r.table.meta = detail::meta(j, alphas.size() == 1 ? nlohmann::ordered_json(alphas[0]) : nlohmann::ordered_json(alphas),
                              nullptr, tol);
  r.table.meta["kind"] = c.kind;
  r.table.meta["preset"] = fig2 ? nlohmann::ordered_json("fig2") : nlohmann::ordered_json(nullptr);
  r.table.meta["max_norm_deviation"] = worst;
  if (worst > *tol) {
    r.code = exit_verification;
    r.diagnostics = "row norm deviation " + detail::format_double(worst) + " exceeds " + detail::format_double(*tol) + "\n";
  }
  return r;
}

inline CommandResult cmd_fourier(const RunConfig& c) {
  CommandResult r;
  const int j = detail::require_j(c.j, 4);
  const double alpha = detail::parse_alpha(c.alpha.value_or("0"));
  const ModelParams mp(j, alpha);
  const double tol = detail::tolerance_override(c).value_or(route_tolerance(j));
  const std::vector<std::pair<std::string, FourierRoute>> all = {
      {"uv", FourierRoute::from_uv}, {"direct", FourierRoute::direct_sum}, {"closed", FourierRoute::closed_form}};
  r.table.meta = detail::meta(j, alpha, c.route, tol);
  auto emit = [&](const HahnFourierMatrix& F, const std::optional<std::string>& route) {
    for (Eigen::Index a = 0; a < F.entries.rows(); ++a)
      for (Eigen::Index b = 0; b < F.entries.cols(); ++b) {
        std::vector<Cell> row;
        if (route) row.push_back(*route);
        row.insert(row.end(), {static_cast<long long>(a), static_cast<long long>(b), F.entries(a, b).real(),
                               F.entries(a, b).imag()});
        r.table.add(std::move(row));
      }
  };
  if (c.route != "all") {
    FourierRoute route = FourierRoute::from_uv;
    bool found = false;
    for (const auto& [name, rt] : all)
      if (name == c.route) route = rt, found = true;
    if (!found) throw ConfigError("route: expected uv, direct, closed or all");
    r.table.columns = {"row", "col", "re", "im"};
    emit(build_F(mp, route), std::nullopt);
    return r;
  }
  r.table.columns = {"route", "row", "col", "re", "im"};
  std::vector<HahnFourierMatrix> Fs;
  for (const auto& [name, rt] : all) {
    Fs.push_back(build_F(mp, rt));
    emit(Fs.back(), name);
  }
  double dev = 0.0;
  for (std::size_t a = 0; a < Fs.size(); ++a)
    for (std::size_t b = a + 1; b < Fs.size(); ++b) dev = std::max(dev, max_deviation(Fs[a], Fs[b]));
  r.table.meta["max_deviation"] = dev;
  r.diagnostics = "max cross-route deviation " + detail::format_double(dev) + " (tolerance " + detail::format_double(tol) + ")\n";
  if (!(dev <= tol)) r.code = exit_route;
  return r;
}

/// One named invariant evaluated at one (j, alpha).
struct CheckRecord {
  std::string check;
  int j;
  std::string alpha;
  double residual;
  double tolerance;
  bool passed() const { return residual <= tolerance; }
};

namespace detail {

inline std::vector<CheckRecord> float_checks(const ModelParams& mp, const std::string& alpha_text, bool inject_fault,
                                             std::optional<double> tol_override) {
  using hahnosc::detail::max_abs;
  std::vector<CheckRecord> out;
  auto add = [&](const std::string& name, double residual, double tol) {
    out.push_back({name, mp.j, alpha_text, residual, tol_override.value_or(tol)});
  };
  const int j = mp.j, n = mp.dim();
  const auto alg = check_algebra_relations(build_rep(mp), mp);
  add("algebra_relations", alg.max() / alg.scale, 1e-12);
  const auto ham = check_hamiltonian_equations(mp);
  add("hamiltonian_equations", ham.max() / ham.scale, 1e-12);

  RealEigenSystem U = build_U(mp);
  if (inject_fault) U.vectors(0, j) = -U.vectors(0, j);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd Mq = build_Mq(mp).matrix(), Mp = build_Mp(mp).matrix();
  add("U_orthogonal", max_abs(U.vectors.transpose() * U.vectors - I), 1e-10);
  add("Mq_eigen", max_abs(Mq * U.vectors - U.vectors * U.eigenvalues.asDiagonal()), 1e-9);
  const ComplexEigenSystem V = build_V(mp, U);
  add("V_unitary", max_abs(V.vectors * V.vectors.adjoint() - I.cast<cplx>()), 1e-10);
  add("Mp_eigen", max_abs(Mp.cast<cplx>() * V.vectors - V.vectors * V.eigenvalues.asDiagonal()), 1e-9);
  const Eigen::MatrixXcd anti = -I.rowwise().reverse().cast<cplx>();
  add("VtV_antidiagonal", max_abs(V.vectors.transpose() * V.vectors - anti), 1e-10);
  if (j <= closed_form_check_limit) {
    add("position_closed_form", *wavefunctions(mp, OperatorKind::position, U).closed_form_deviation, 1e-11);
    add("momentum_closed_form", *wavefunctions(mp, OperatorKind::momentum, U).closed_form_deviation, 1e-11);
  }

  const HahnFourierMatrix Fuv{U.vectors.transpose().cast<cplx>() * V.vectors, FourierRoute::from_uv, mp};
  const double rt = route_tolerance(j);
  add("fourier_uv_vs_direct", max_deviation(Fuv, F_direct(mp)), rt);
  add("fourier_uv_vs_closed", max_deviation(Fuv, F_closed(mp)), rt);
  const FourierProperties p = F_properties(Fuv);
  add("fourier_symmetric", p.symmetry, 1e-12);
  add("fourier_unitary", p.unitarity, 1e-9);
  add("fourier_fourth_power", p.fourth_power, 1e-8);
  add("fourier_eigen_relation", p.eigen_relation, 1e-9);
  add("fourier_parity_split", p.parity_split, 1e-12);
  add("fourier_multiplicities", p.multiplicities_ok() ? 0.0 : 1.0, 0.0);

  // S(k,l) / sqrt(h_k h_l) for odd k+l+j, on the unit scale of the orthonormal table
  const HahnTable table(HahnParams(mp.alpha, mp.alpha, j));
  double odd = 0.0;
  for (int k = 0; k <= j; ++k)
    for (int l = k + 1 - j % 2; l <= j; l += 2) odd = std::max(odd, std::abs(hahnosc::detail::alternating_dot(table, k, l)));
  add("poisson_parity_zero", odd, 1e-12);
  return out;
}

inline std::vector<CheckRecord> exact_checks(int j, const exact::Rational& alpha) {
  int mismatches = 0, nonzero_odd = 0;
  for (int k = 0; k <= j; ++k)
    for (int l = 0; l <= j; ++l) {
      const exact::Rational d = S_direct(k, l, alpha, j);
      if ((k + l + j) % 2 && d != exact::Rational(0)) ++nonzero_odd;
      if (d != S_closed(k, l, alpha, j)) ++mismatches;
    }
  return {{"poisson_closed_form_exact", j, alpha.str(), static_cast<double>(mismatches), 0.0},
          {"poisson_parity_zero_exact", j, alpha.str(), static_cast<double>(nonzero_odd), 0.0}};
}

}  // namespace detail

inline CommandResult cmd_verify(const RunConfig& c) {
  CommandResult r;
  std::vector<CheckRecord> checks;
  const auto tol = detail::tolerance_override(c);
  if (c.mode == "exact") {
    const exact::Rational a = detail::parse_alpha_exact(c.alpha.value_or("1/3"));
    std::vector<int> js;
    if (c.j)
      js.push_back(detail::require_j(c.j, 0));
    else
      for (int j = 0; j <= 8; ++j) js.push_back(j);
    for (int j : js) {
      auto part = detail::exact_checks(j, a);
      checks.insert(checks.end(), part.begin(), part.end());
    }
    r.table.meta = detail::meta(c.j, a.str(), nullptr, 0.0);
  } else if (c.mode == "float") {
    std::vector<int> js;
    if (c.j)
      js.push_back(detail::require_j(c.j, 0));
    else
      for (int j = 0; j <= 12; ++j) js.push_back(j);
    std::vector<std::pair<double, std::string>> alphas;
    if (c.alpha)
      alphas.push_back({detail::parse_alpha(*c.alpha), *c.alpha});
    else
      for (const char* a : {"-0.9", "-0.5", "0", "2.5"}) alphas.push_back({std::stod(a), a});
    for (const auto& [a, text] : alphas)
      for (int j : js) {
        auto part = detail::float_checks(ModelParams(j, a), text, c.inject_fault, tol);
        checks.insert(checks.end(), part.begin(), part.end());
      }
    r.table.meta = detail::meta(c.j, c.alpha ? nlohmann::ordered_json(alphas[0].first) : nlohmann::ordered_json(nullptr),
                                nullptr, tol);
  } else {
    throw ConfigError("mode: expected float or exact");
  }
  r.table.meta["mode"] = c.mode;
  r.table.columns = {"check", "j", "alpha", "residual", "tolerance", "passed"};
  int failed = 0;
  for (const auto& ck : checks) {
    r.table.add({ck.check, static_cast<long long>(ck.j), ck.alpha, ck.residual, ck.tolerance,
                 static_cast<long long>(ck.passed())});
    if (!ck.passed()) {
      ++failed;
      r.diagnostics += "FAIL " + ck.check + " j=" + std::to_string(ck.j) + " alpha=" + ck.alpha +
                       " residual=" + detail::format_double(ck.residual) + "\n";
    }
  }
  r.table.meta["checks"] = checks.size();
  r.table.meta["failed"] = failed;
  if (failed) r.code = exit_verification;
  return r;
}

inline CommandResult cmd_limit(const RunConfig& c) {
  CommandResult r;
  const std::vector<int> js = c.j_list.empty() ? std::vector<int>{50, 200, 800} : c.j_list;
  for (std::size_t i = 0; i < js.size(); ++i) {
    if (js[i] < 1) throw ConfigError("j-list: entries must be positive");
    if (i && js[i] <= js[i - 1]) throw ConfigError("j-list: must be strictly ascending");
  }
  const double alpha = detail::parse_alpha(c.alpha.value_or("2"));
  const std::vector<int> levels = c.levels.empty() ? std::vector<int>{0} : c.levels;
  for (int n : levels)
    if (n < 0 || n > 2 * js.front()) throw ConfigError("n: level " + std::to_string(n) + " outside 0..2j");
  if (!(c.bound > 0) || !(c.kernel_bound > 0)) throw ConfigError("bound: must be positive");
  r.table.columns = {"j", "n", "wave_error", "kernel_error"};
  std::vector<double> kernel_errors;
  std::vector<std::vector<double>> wave_errors(levels.size());
  for (int j : js) {
    std::optional<double> kernel;
    if (j % 2 == 0 && j >= 2) {
      kernel = kernel_limit_error(alpha, j, c.kernel_bound).max_error;
      kernel_errors.push_back(*kernel);
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double w = parabose_limit_error(ModelParams(j, alpha), levels[i], c.bound).max_error;
      wave_errors[i].push_back(w);
      r.table.add({static_cast<long long>(j), static_cast<long long>(levels[i]), w,
                   kernel ? Cell(*kernel) : Cell(std::monostate{})});
    }
  }
  bool wave_mono = true;
  for (const auto& w : wave_errors) wave_mono = wave_mono && detail::strictly_decreasing(w);
  r.table.meta = detail::meta(std::nullopt, alpha, nullptr, std::nullopt);
  r.table.meta["bound"] = c.bound;
  r.table.meta["kernel_bound"] = c.kernel_bound;
  r.table.meta["wave_monotone_decreasing"] = wave_mono;
  r.table.meta["kernel_monotone_decreasing"] = kernel_errors.size() == js.size() && detail::strictly_decreasing(kernel_errors);
  r.table.meta["monotone_decreasing"] =
      wave_mono && kernel_errors.size() == js.size() && detail::strictly_decreasing(kernel_errors);
  return r;
}

inline CommandResult cmd_identity(const RunConfig& c) {
  CommandResult r;
  if (c.count < 1) throw ConfigError("count: must be positive");
  exact::FuzzOptions opt;
  opt.seed = c.seed;
  opt.count = c.count;
  if (c.perturb) opt.transformed_rhs_scale = exact::Rational(1001, 1000);
  const exact::IdentityFuzzer fuzz(opt);
  std::vector<std::string> names = c.identities.empty() ? exact::IdentityFuzzer::identities() : c.identities;
  for (const auto& n : names) {
    const auto& known = exact::IdentityFuzzer::identities();
    if (std::find(known.begin(), known.end(), n) == known.end()) throw ConfigError("identity: unknown name '" + n + "'");
  }
  r.table.columns = {"identity", "passed", "rejected", "counterexamples", "first_counterexample"};
  int bad = 0;
  for (const auto& n : names) {
    const auto rep = fuzz.run(n);
    std::string first;
    for (const auto& ce : rep.counterexamples) {
      std::string s;
      for (const auto& [k, v] : ce) s += (s.empty() ? "" : ";") + k + "=" + v;
      if (first.empty()) first = s;
      r.diagnostics += "counterexample " + n + ": " + s + "\n";
    }
    bad += static_cast<int>(rep.counterexamples.size());
    r.table.add({n, static_cast<long long>(rep.passed), static_cast<long long>(rep.rejected),
                 static_cast<long long>(rep.counterexamples.size()), first});
  }
  r.table.meta = detail::meta(std::nullopt, nullptr, nullptr, 0.0);
  r.table.meta["seed"] = c.seed;
  r.table.meta["count"] = c.count;
  r.table.meta["perturbed"] = c.perturb;
  if (bad) r.code = exit_verification;
  return r;
}

inline CommandResult dispatch(const RunConfig& c) {
  if (c.format != "csv" && c.format != "json") throw ConfigError("format: expected csv or json");
  if (c.mode != "float" && c.mode != "exact") throw ConfigError("mode: expected float or exact");
  if (c.mode == "exact" && c.subcommand != "verify" && c.subcommand != "identity")
    throw ConfigError("mode: exact is only available for verify and identity");
  detail::tolerance_override(c);
  if (c.subcommand == "spectrum") return cmd_spectrum(c);
  if (c.subcommand == "wavefn") return cmd_wavefn(c);
  if (c.subcommand == "fourier") return cmd_fourier(c);
  if (c.subcommand == "verify") return cmd_verify(c);
  if (c.subcommand == "limit") return cmd_limit(c);
  if (c.subcommand == "identity") return cmd_identity(c);
  throw ConfigError("subcommand: unknown '" + c.subcommand + "'");
}

/// Runs a configured command and writes its table to `out` (or to c.out when set).
inline int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  CommandResult r;
  try {
    r = dispatch(c);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config;
  }
  std::ofstream file;
  std::ostream* os = &out;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) {
      err << "error: out: cannot open '" << c.out << "'\n";
      return exit_config;
    }
    os = &file;
  }
  if (c.format == "json")
    write_json(r.table, *os);
  else
    write_csv(r.table, *os);
  err << r.diagnostics;
  return r.code;
}

/// Parses argv-style arguments (without the program name) and runs the command.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite oscillator models with su(2)_alpha symmetry and the discrete Hahn-Fourier transform", "hahnosc"};
  app.require_subcommand(1);
  RunConfig c;
  int j_value = 0;
  std::string alpha_value;
  double tol_value = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--j", j_value, "representation label j (dimension 2j+1)");
    sub->add_option("--alpha", alpha_value, "deformation parameter, decimal or p/q");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", c.out, "output path (default stdout)");
    sub->add_option("--tol", tol_value, "tolerance override (also HAHNOSC_TOL)");
    sub->add_option("--mode", c.mode, "float or exact")->check(CLI::IsMember({"float", "exact"}));
  };
  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of the position operator");
  common(spectrum);
  spectrum->add_flag("--compare", c.compare, "add the su(2) and u(2)_alpha spectra");
  spectrum->add_option("--preset", c.preset, "fig1");
  CLI::App* wavefn = app.add_subcommand("wavefn", "position or momentum wavefunction tables");
  common(wavefn);
  wavefn->add_option("--n", c.levels, "levels to emit")->delimiter(',');
  wavefn->add_option("--kind", c.kind, "position or momentum")->check(CLI::IsMember({"position", "momentum"}));
  wavefn->add_option("--preset", c.preset, "fig2");
  CLI::App* fourier = app.add_subcommand("fourier", "the discrete Hahn-Fourier matrix");
  common(fourier);
  fourier->add_option("--route", c.route, "uv, direct, closed or all")
      ->check(CLI::IsMember({"uv", "direct", "closed", "all"}));
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  common(verify);
  verify->add_flag("--inject-fault", c.inject_fault, "flip the sign of one U entry");
  CLI::App* limit = app.add_subcommand("limit", "convergence to the parabose and Bessel limits");
  common(limit);
  limit->add_option("--n", c.levels, "levels")->delimiter(',');
  limit->add_option("--j-list", c.j_list, "ascending j values")->delimiter(',');
  limit->add_option("--bound", c.bound, "grid bound |x| for the wavefunction limit");
  limit->add_option("--kernel-bound", c.kernel_bound, "grid bound |x|,|p| for the kernel limit");
  CLI::App* identity = app.add_subcommand("identity", "seeded exact-rational identity fuzzing");
  common(identity);
  identity->add_option("--seed", c.seed, "random seed");
  identity->add_option("--count", c.count, "instances per identity");
  identity->add_option("--identity", c.identities, "restrict to these identities")->delimiter(',');
  identity->add_flag("--perturb", c.perturb, "scale one right-hand side by 1001/1000");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_config;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    c.subcommand = sub->get_name();
    if (sub->count("--j")) c.j = j_value;
    if (sub->count("--alpha")) c.alpha = alpha_value;
    if (sub->count("--tol")) c.tol = tol_value;
  }
  return execute(c, out, err);
}

}  // namespace hahnosc::app
