// weylsys command-line front end.
// Exit codes: 0 success, 1 usage, 2 domain error, 3 verification failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylsys/classify.hpp"
#include "weylsys/funclass.hpp"
#include "weylsys/lsystem.hpp"
#include "weylsys/malpha.hpp"
#include "weylsys/parallel.hpp"
#include "weylsys/sampled.hpp"
#include "weylsys/verification.hpp"
#include "weylsys/weyl_engine.hpp"

using json = nlohmann::ordered_json;
using namespace weylsys;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string complex_str(Complex z) {
  std::string im = num(z.imag());
  if (im.front() != '-') im = "+" + im;
  return num(z.real()) + im + "i";
}

json jnum(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json jcomplex(Complex z) { return {{"re", jnum(z.real())}, {"im", jnum(z.imag())}}; }

double parse_real(const std::string& s) {
  if (s == "inf" || s == "+inf") return kInfinity;
  if (s == "-inf") return -kInfinity;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || !std::isfinite(v)) throw UsageError("not a real number: '" + s + "'");
  return v;
}

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
Complex parse_complex(const std::string& s) {
  if (s.empty()) throw UsageError("empty complex number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  try {
    return {re.empty() ? 0.0 : parse_real(re), parse_real(im)};
  } catch (const UsageError&) {
    throw UsageError("not a complex number (expected a+bi): '" + s + "'");
  }
}

Potential parse_potential(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("potential spec must be bessel:NU, free:ELL or table:PATH");
  const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "bessel") return bessel_potential(parse_real(arg));
  if (kind == "free") return free_potential(parse_real(arg));
  if (kind == "table") return read_table_potential_csv(arg);
  throw UsageError("unknown potential kind '" + kind + "'");
}

struct Global {
  std::string potential = "bessel:1.5";
  std::string mode = "auto";
  std::string format = "json";
  std::string out;
  std::optional<double> tol;
  double xmax = 0.0;
  std::uint64_t seed = 0;

  ToleranceConfig tolerance() const {
    ToleranceConfig t;
    if (tol) t.abs_tol = t.rel_tol = *tol;
    return t;
  }

  MFunction m_function() const {
    Potential p = parse_potential(potential);
    if (mode == "engine") return MFunction(std::move(p), MMode::riccati_engine, xmax, tolerance());
    if (mode == "closed") return MFunction(std::move(p), MMode::closed_form, xmax, tolerance());
    return make_m_function(std::move(p), xmax, tolerance());
  }

  json header(const std::string& command, const MFunction& mf) const {
    return {{"command", command},
            {"potential", mf.potential().label()},
            {"mode", mf.mode() == MMode::closed_form ? "closed" : "engine"},
            {"seed", seed}};
  }
};

struct AlphaArgs {
  std::optional<double> alpha;
  std::optional<std::string> tan_alpha;

  void add(CLI::App* cmd) {
    auto* a = cmd->add_option("--alpha", alpha, "boundary angle alpha in radians");
    auto* t = cmd->add_option("--tan-alpha", tan_alpha, "tan(alpha); 'inf' for alpha = pi/2");
    a->excludes(t);
  }
  std::optional<AlphaParam> get() const {
    if (alpha) return AlphaParam::from_alpha(*alpha);
    if (tan_alpha) return AlphaParam::from_tan(parse_real(*tan_alpha));
    return std::nullopt;
  }
};

json alpha_json(const AlphaParam& a) { return {{"alpha", jnum(a.alpha())}, {"tan_alpha", jnum(a.tan_alpha())}}; }

json angle_json(double tan_beta) { return {{"radians", jnum(angle_from_tan(tan_beta))}, {"tan", jnum(tan_beta)}}; }

json th_json(const ThVerdict& v) {
  json j{{"accretive", v.accretive},
         {"sectorial", v.sectorial},
         {"extremal", v.extremal},
         {"krein_von_neumann", v.krein_von_neumann}};
  j["exact_angle"] = v.exact_tan ? angle_json(*v.exact_tan) : json(nullptr);
  return j;
}

json angles_json(const AngleSet& s) {
  return {{"beta1", angle_json(s.tan_beta1)},
          {"beta2", angle_json(s.tan_beta2)},
          {"beta_class", s.tan_beta_class ? angle_json(*s.tan_beta_class) : json(nullptr)},
          {"beta_universal", s.tan_beta_universal ? angle_json(*s.tan_beta_universal) : json(nullptr)}};
}

std::vector<Complex> parse_points(const std::vector<std::string>& zs) {
  std::vector<Complex> out;
  for (const auto& s : zs) out.push_back(parse_complex(s));
  return out;
}

std::string opt_angle(const std::optional<double>& tan_beta) {
  return tan_beta ? num(angle_from_tan(*tan_beta)) : "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-Titchmarsh functions, Schrödinger L-systems and their classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--potential", g.potential, "bessel:NU | free:ELL | table:PATH")->capture_default_str();
  app.add_option("--mode", g.mode, "m-function backend")
      ->check(CLI::IsMember({"auto", "engine", "closed"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "absolute and relative integration tolerance")->check(CLI::PositiveNumber);
  app.add_option("--xmax", g.xmax, "Riccati truncation radius (default 60 max(1, ell))");
  app.add_option("--seed", g.seed, "seed for randomized kernel trials")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output to PATH instead of stdout");

  std::vector<std::string> z_list;
  auto* eval_m = app.add_subcommand("eval-m", "evaluate m_inf(z)");
  eval_m->add_option("--z", z_list, "spectral parameter a+bi (repeatable)")->required();

  AlphaArgs malpha_alpha;
  auto* eval_malpha = app.add_subcommand("eval-malpha", "evaluate m_alpha(z) and -m_alpha(z)");
  eval_malpha->add_option("--z", z_list, "spectral parameter a+bi (repeatable)")->required();
  malpha_alpha.add(eval_malpha);

  std::string target = "neg-m";
  AlphaArgs realize_alpha;
  auto* realize_cmd = app.add_subcommand("realize", "L-system parameters (mu, h) realizing a target function");
  realize_cmd->add_option("--target", target, "neg-m | recip-m | neg-m-alpha")
      ->check(CLI::IsMember({"neg-m", "recip-m", "neg-m-alpha"}))
      ->capture_default_str();
  realize_cmd->add_option("--z", z_list, "also report V and W at these points");
  realize_alpha.add(realize_cmd);

  AlphaArgs classify_alpha;
  std::optional<std::string> mu_str, h_str;
  auto* classify_cmd = app.add_subcommand("classify", "classify Theta_{tan alpha, i} or Theta_{mu, h}");
  classify_cmd->set_help_flag("--help", "print this help message and exit");
  classify_alpha.add(classify_cmd);
  classify_cmd->add_option("--mu", mu_str, "real mu or 'inf'");
  classify_cmd->add_option("--h", h_str, "h = a+bi with b >= 0");

  int scan_n = 64;
  auto* scan = app.add_subcommand("region-scan", "classes and angles over alpha_k = -pi/2 + k pi/n, k = 1..n");
  scan->add_option("--n", scan_n, "number of grid points")->check(CLI::NonNegativeNumber)->capture_default_str();

  AlphaArgs measure_alpha;
  double t_min = 0.1, t_max = 10.0;
  int t_points = 41;
  auto* measure = app.add_subcommand("measure", "spectral measure of -m_alpha (alpha = 0: -m_inf)");
  measure_alpha.add(measure);
  measure->add_option("--t-min", t_min)->capture_default_str();
  measure->add_option("--t-max", t_max)->capture_default_str();
  measure->add_option("--points", t_points, "geometric grid size")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::ostringstream out;
  const bool csv = g.format == "csv";
  int status = 0;
  try {
    if (verify->parsed()) {
      parse_potential(g.potential);
      VerifyOptions opt;
      opt.x_max = g.xmax;
      opt.tol = g.tolerance();
      opt.seed = g.seed;
      const VerificationReport rep = run_verification(opt);
      if (csv) {
        out << "id,pass,name,detail\n";
        for (const auto& c : rep.criteria) {
          out << c.id << ',' << (c.pass ? "true" : "false") << ",\"" << c.name << "\",\"" << c.detail << "\"\n";
        }
      } else {
        json j{{"command", "verify"}, {"seed", g.seed}, {"all_pass", rep.all_pass()}};
        j["criteria"] = json::array();
        for (const auto& c : rep.criteria) {
          j["criteria"].push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        j["notes"] = rep.notes;
        out << j.dump(2) << '\n';
      }
      if (!rep.all_pass()) status = kExitVerify;
    } else {
      const MFunction mf = g.m_function();
      json j = g.header(app.get_subcommands().front()->get_name(), mf);

      if (eval_m->parsed()) {
        const auto zs = parse_points(z_list);
        const auto vals = parallel_map(zs, [&](Complex z) { return mf.eval(z); });
        if (csv) out << "z,m,err\n";
        j["rows"] = json::array();
        for (std::size_t i = 0; i < zs.size(); ++i) {
          if (csv) out << complex_str(zs[i]) << ',' << complex_str(vals[i].value) << ',' << num(vals[i].err_estimate) << '\n';
          j["rows"].push_back({{"z", jcomplex(zs[i])}, {"m", jcomplex(vals[i].value)}, {"err", vals[i].err_estimate}});
        }
      } else if (eval_malpha->parsed()) {
        const auto a = malpha_alpha.get();
        if (!a) throw UsageError("eval-malpha needs --alpha or --tan-alpha");
        const auto zs = parse_points(z_list);
        const auto vals = parallel_map(zs, [&](Complex z) { return mf.eval(z).value; });
        j["alpha"] = alpha_json(*a);
        j["rows"] = json::array();
        if (csv) out << "z,m,m_alpha,neg_m_alpha\n";
        for (std::size_t i = 0; i < zs.size(); ++i) {
          const Complex ma = m_alpha(vals[i], *a, mf.tol().abs_tol);
          if (csv) out << complex_str(zs[i]) << ',' << complex_str(vals[i]) << ',' << complex_str(ma) << ',' << complex_str(-ma) << '\n';
          j["rows"].push_back({{"z", jcomplex(zs[i])}, {"m", jcomplex(vals[i])}, {"m_alpha", jcomplex(ma)},
                               {"neg_m_alpha", jcomplex(-ma)}});
        }
      } else if (realize_cmd->parsed()) {
        const auto a = realize_alpha.get();
        RealizationTarget t = RealizationTarget::neg_m_infinity;
        if (target == "recip-m") t = RealizationTarget::recip_m_infinity;
        if (target == "neg-m-alpha") {
          if (!a) throw UsageError("--target neg-m-alpha needs --alpha or --tan-alpha");
          t = RealizationTarget::neg_m_alpha;
        }
        const LSystemParams sys = realize(t, mf, a);
        const QuasiKernelBC bc = quasi_kernel_xi(sys);
        const auto zs = parse_points(z_list);
        struct VW {
          Complex v, w;
        };
        const auto vw = parallel_map(zs, [&](Complex z) { return VW{impedance(sys, z), transfer(sys, z)}; });
        j["target"] = target;
        j["mu"] = jnum(sys.mu());
        j["h"] = jcomplex(sys.h());
        j["xi"] = jnum(bc.xi);
        j["rows"] = json::array();
        if (csv) out << "mu,h,xi,z,V,W\n";
        for (std::size_t i = 0; i < zs.size(); ++i) {
          if (csv) out << num(sys.mu()) << ',' << complex_str(sys.h()) << ',' << num(bc.xi) << ',' << complex_str(zs[i]) << ','
                       << complex_str(vw[i].v) << ',' << complex_str(vw[i].w) << '\n';
          j["rows"].push_back({{"z", jcomplex(zs[i])}, {"V", jcomplex(vw[i].v)}, {"W", jcomplex(vw[i].w)}});
        }
        if (csv && zs.empty()) out << num(sys.mu()) << ',' << complex_str(sys.h()) << ',' << num(bc.xi) << ",,,\n";
      } else if (classify_cmd->parsed()) {
        const auto a = classify_alpha.get();
        if (a.has_value() == (mu_str.has_value() || h_str.has_value())) {
          throw UsageError("classify needs either --alpha/--tan-alpha or --mu with --h");
        }
        const MinusZero m0 = m_minus_zero(mf);
        j["m_minus_zero"] = jnum(m0.value);
        std::vector<std::pair<std::string, std::string>> kv{{"m_minus_zero", num(m0.value)}};
        if (a) {
          const LSystemClass c = classify_lsystem_alpha(*a, m0.value);
          const ThVerdict th = classify_th({0.0, 1.0}, m0.value);
          j.update(alpha_json(*a));
          j["lsystem_class"] = std::string(to_string(c));
          j["operator_th"] = th_json(th);
          kv.emplace_back("alpha", num(a->alpha()));
          kv.emplace_back("tan_alpha", num(a->tan_alpha()));
          kv.emplace_back("lsystem_class", std::string(to_string(c)));
          if (c == LSystemClass::accumulative_sectorial || c == LSystemClass::accumulative_extremal) {
            const AngleSet s = class_angles(*a, m0.value);
            j["angles"] = angles_json(s);
            kv.emplace_back("beta1", num(s.beta1()));
            kv.emplace_back("beta2", num(s.beta2()));
            kv.emplace_back("beta_class", opt_angle(s.tan_beta_class));
            kv.emplace_back("beta_universal", opt_angle(s.tan_beta_universal));
          } else {
            j["angles"] = nullptr;
          }
        } else {
          if (!mu_str || !h_str) throw UsageError("classify by (mu, h) needs both --mu and --h");
          const double mu = parse_real(*mu_str);
          const Complex h = parse_complex(*h_str);
          const ThVerdict th = classify_th(h, m0.value);
          j["mu"] = jnum(mu);
          j["h"] = jcomplex(h);
          j["operator_th"] = th_json(th);
          kv.emplace_back("mu", num(mu));
          kv.emplace_back("h", complex_str(h));
          kv.emplace_back("th_accretive", th.accretive ? "true" : "false");
          kv.emplace_back("th_sectorial", th.sectorial ? "true" : "false");
          if (h.imag() > 0.0) {
            const StarExtClass sc = classify_star_extension(mu, h, m0.value);
            j["star_ext_class"] = std::string(to_string(sc));
            kv.emplace_back("star_ext_class", std::string(to_string(sc)));
            // For h = i the star-extension boundary coincides with the L-system one.
            if (h == Complex{0.0, 1.0}) {
              const LSystemClass c = classify_lsystem_alpha(AlphaParam::from_tan(mu), m0.value);
              j["lsystem_class"] = std::string(to_string(c));
              kv.emplace_back("lsystem_class", std::string(to_string(c)));
            }
          }
        }
        if (csv) {
          out << "key,value\n";
          for (const auto& [k, v] : kv) out << k << ',' << v << '\n';
        }
      } else if (scan->parsed()) {
        const MinusZero m0 = m_minus_zero(mf);
        j["m_minus_zero"] = jnum(m0.value);
        j["rows"] = json::array();
        if (csv) out << "alpha,tan_alpha,class,beta1,beta2,beta_class,beta_universal\n";
        for (int k = 1; k <= scan_n; ++k) {
          const AlphaParam a = AlphaParam::from_alpha(-std::numbers::pi / 2 + k * std::numbers::pi / scan_n);
          const LSystemClass c = classify_lsystem_alpha(a, m0.value);
          std::optional<AngleSet> s;
          if (c == LSystemClass::accumulative_sectorial || c == LSystemClass::accumulative_extremal) {
            s = class_angles(a, m0.value);
          }
          if (csv) {
            out << num(a.alpha()) << ',' << num(a.tan_alpha()) << ',' << to_string(c) << ',';
            if (s) {
              out << num(s->beta1()) << ',' << num(s->beta2()) << ',' << opt_angle(s->tan_beta_class) << ','
                  << opt_angle(s->tan_beta_universal);
            } else {
              out << ",,,";
            }
            out << '\n';
          }
          json row = alpha_json(a);
          row["class"] = std::string(to_string(c));
          row["angles"] = s ? angles_json(*s) : json(nullptr);
          j["rows"].push_back(row);
        }
      } else if (measure->parsed()) {
        if (!(t_min > 0.0 && t_min < t_max) || t_points < 2) {
          throw UsageError("measure needs 0 < t-min < t-max and at least 2 points");
        }
        const AlphaParam a = measure_alpha.get().value_or(AlphaParam::from_alpha(0.0));
        std::vector<double> grid(t_points);
        for (int i = 0; i < t_points; ++i) {
          grid[i] = t_min * std::pow(t_max / t_min, static_cast<double>(i) / (t_points - 1));
        }
        const MeasureTable mt = extract_measure(neg_m_alpha_sampled(mf, a), grid, mf.tol());
        j.update(alpha_json(a));
        j["gamma"] = mt.gamma;
        j["gamma_err"] = mt.gamma_err;
        if (csv) {
          json head = j;
          out << "# " << head.dump() << '\n' << "t,density,cumulative\n";
          for (std::size_t i = 0; i < grid.size(); ++i) {
            out << num(mt.t_grid[i]) << ',' << num(mt.density[i]) << ',' << num(mt.cumulative[i]) << '\n';
          }
        }
        j["rows"] = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
          j["rows"].push_back({{"t", mt.t_grid[i]}, {"density", mt.density[i]}, {"cumulative", mt.cumulative[i]}});
        }
      }
      if (!csv) out << j.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  if (g.out.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write '" << g.out << "'\n";
      return kExitUsage;
    }
    f << out.str();
  }
  return status;
}
