// ks: command-line front end for the K_s(phi) toolkit.
//
//   ks bound fs --phi halfplane --mu 1+0i
//   ks extremal --kind fs_odd --phi gamma:0.25 --order 24
//   ks check membership --f f.txt --g atoms:1@1 --phi halfplane
//   ks campaign --config campaign.json --out report.json [--csv report.csv]
//
// Exit codes: 0 ok, 1 finding (failed verdict or campaign finding), 2 usage or
// input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ks/bounds.hpp"
#include "ks/campaign.hpp"
#include "ks/error.hpp"
#include "ks/json_io.hpp"
#include "ks/parse.hpp"
#include "ks/subord.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct PhiArgs {
  std::string spec = "halfplane";
  bool attest = false;
  int order = ks::kDefaultOrder;

  ks::MaMindaFunction make() const { return ks::parse_phi(spec, order, attest); }
};

void add_phi(CLI::App* cmd, PhiArgs& a, bool with_order = false) {
  cmd->add_option("--phi", a.spec, "halfplane | gamma:<g> | poly:<B1>,<B2>,...")->capture_default_str();
  cmd->add_flag("--attest", a.attest, "attest that a poly phi satisfies the Ma-Minda hypotheses");
  if (with_order) cmd->add_option("--order", a.order, "series truncation order")->capture_default_str();
}

void emit(const ks::Json& j) { std::cout << j.dump(2) << '\n'; }

ks::Json query(const char* verb, const PhiArgs& phi) {
  return ks::Json{{"verb", verb}, {"phi", phi.spec}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ks::InputError("cannot write '" + path + "'");
  out << text;
}

ks::CampaignConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw ks::InputError("cannot open config '" + path + "'");
  ks::Json j;
  try {
    j = ks::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ks::InputError(std::string("config is not valid JSON: ") + e.what());
  }
  return ks::config_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ks: coefficient, distortion and subordination checks for K_s(phi)"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // bound ------------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "evaluate a sharp bound");
  bound->require_subcommand(1);
  PhiArgs bphi;
  std::string mu_text = "0";
  double radius = 0.5;
  double gamma = 0.0;
  std::string t_text = "0";

  auto* b_fs = bound->add_subcommand("fs", "Fekete-Szego bound |a3 - mu a2^2|");
  add_phi(b_fs, bphi);
  b_fs->add_option("--mu", mu_text, "complex parameter, e.g. 1+0i")->capture_default_str();
  b_fs->callback([&] {
    const auto phi = bphi.make();
    const auto mu = ks::parse_complex(mu_text);
    const double value = ks::fs_bound(phi, mu);
    const auto witness = ks::fs_witness(phi, mu);
    const double attained = ks::fs_value(witness, mu);
    auto q = query("fs", bphi);
    q["mu"] = ks::to_json(mu);
    emit({{"query", q},
          {"value", value},
          {"witness", ks::to_json(witness)},
          {"attained_value", attained},
          {"margin", value - attained}});
  });

  auto* b_inv = bound->add_subcommand("inverse-fs", "bound on |d3 - mu d2^2| for the inverse");
  add_phi(b_inv, bphi);
  b_inv->add_option("--mu", mu_text, "complex parameter")->capture_default_str();
  b_inv->callback([&] {
    const auto phi = bphi.make();
    const auto mu = ks::parse_complex(mu_text);
    const double value = ks::inverse_fs_bound(phi, mu);
    const auto witness = ks::fs_witness(phi, 2.0 - mu);
    const double attained = ks::inverse_fs_value(witness, mu);
    auto q = query("inverse-fs", bphi);
    q["mu"] = ks::to_json(mu);
    emit({{"query", q},
          {"value", value},
          {"witness", ks::to_json(witness)},
          {"attained_value", attained},
          {"margin", value - attained}});
  });

  auto* b_coef = bound->add_subcommand("coefficients", "bounds on |a2| and |a3|");
  add_phi(b_coef, bphi);
  b_coef->callback([&] {
    const auto phi = bphi.make();
    const auto cb = ks::coefficient_bounds(phi);
    const auto w = ks::extremal(ks::ExtremalKind::fs_max, phi);
    emit({{"query", query("coefficients", bphi)},
          {"values", {{"a2", cb.a2}, {"a3", cb.a3}}},
          {"witness", ks::to_json(w)},
          {"attained_value", std::abs(w.a(2))},
          {"margin", cb.a2 - std::abs(w.a(2))}});
  });

  auto* b_dist = bound->add_subcommand("distortion", "bounds on |f'(z)| for |z| = r");
  add_phi(b_dist, bphi);
  b_dist->add_option("--r", radius, "radius in (0, 1)")->capture_default_str();
  b_dist->callback([&] {
    const auto phi = bphi.make();
    const auto b = ks::distortion_bounds(phi, radius);
    auto q = query("distortion", bphi);
    q["r"] = radius;
    emit({{"query", q}, {"values", {{"lower", b.lower}, {"upper", b.upper}}}});
  });

  auto* b_growth = bound->add_subcommand("growth", "bounds on |f(z)| for |z| = r");
  add_phi(b_growth, bphi);
  b_growth->add_option("--r", radius, "radius in (0, 0.99]")->capture_default_str();
  b_growth->callback([&] {
    const auto phi = bphi.make();
    const auto b = ks::growth_bounds(phi, radius);
    auto q = query("growth", bphi);
    q["r"] = radius;
    emit({{"query", q},
          {"values", {{"lower", b.lower}, {"upper", b.upper}}},
          {"quadrature", {{"error", b.error}, {"converged", b.converged}}}});
  });

  auto* b_cover = bound->add_subcommand("covering", "radius of the disk covered by every f(D)");
  add_phi(b_cover, bphi);
  b_cover->callback([&] {
    const auto phi = bphi.make();
    emit({{"query", query("covering", bphi)}, {"value", ks::covering_radius(phi)}});
  });

  auto* b_kow = bound->add_subcommand("kowalczyk", "closed forms for phi = gamma:<g>");
  b_kow->add_option("--gamma", gamma, "gamma in [0, 1)")->capture_default_str();
  b_kow->add_option("--r", radius, "radius in (0, 1)")->capture_default_str();
  b_kow->callback([&] {
    const auto k = ks::kowalczyk_forms(gamma, radius);
    emit({{"query", {{"verb", "kowalczyk"}, {"gamma", gamma}, {"r", radius}}},
          {"values",
           {{"fprime_lo", k.fprime_lo},
            {"fprime_hi", k.fprime_hi},
            {"f_lo", k.f_lo},
            {"f_hi", k.f_hi}}}});
  });

  auto* b_schwarz = bound->add_subcommand("schwarz", "bound on |w2 - t w1^2|");
  b_schwarz->add_option("--t", t_text, "complex parameter")->capture_default_str();
  b_schwarz->callback([&] {
    const auto t = ks::parse_complex(t_text);
    emit({{"query", {{"verb", "schwarz"}, {"t", ks::to_json(t)}}},
          {"value", ks::schwarz_functional_bound(t)}});
  });

  // extremal / member ------------------------------------------------------
  PhiArgs xphi;
  std::string kind = "fs_max";
  std::string coeff_out;
  auto* ext = app.add_subcommand("extremal", "build an extremal member");
  add_phi(ext, xphi, true);
  ext->add_option("--kind", kind, "fs_max | fs_odd | dist_min")->capture_default_str();
  ext->add_option("--coeff-out", coeff_out, "also write f's coefficients to this file");
  ext->callback([&] {
    ks::ExtremalKind k;
    if (kind == "fs_max") {
      k = ks::ExtremalKind::fs_max;
    } else if (kind == "fs_odd") {
      k = ks::ExtremalKind::fs_odd;
    } else if (kind == "dist_min") {
      k = ks::ExtremalKind::dist_min;
    } else {
      throw ks::InputError("unknown extremal kind '" + kind + "'");
    }
    const auto m = ks::extremal(k, xphi.make());
    if (!coeff_out.empty()) {
      std::ofstream out(coeff_out);
      if (!out) throw ks::InputError("cannot write '" + coeff_out + "'");
      ks::write_coefficients(out, m.f);
    }
    emit({{"kind", kind}, {"member", ks::to_json(m)}});
  });

  std::string g_spec = "atoms:1@1";
  std::string w_spec = "mono:1";
  auto* mem = app.add_subcommand("member", "build f from (g, w, phi)");
  add_phi(mem, xphi, true);
  mem->add_option("--g", g_spec, "atoms:<x>@<lambda>,...")->capture_default_str();
  mem->add_option("--w", w_spec, "mono:<k>[,theta] | rot:<rho>,<theta> | blaschke:<a>,...")
      ->capture_default_str();
  mem->add_option("--coeff-out", coeff_out, "also write f's coefficients to this file");
  mem->callback([&] {
    const auto m = ks::member_from(ks::parse_starlike(g_spec, xphi.order),
                                   ks::parse_schwarz(w_spec, xphi.order), xphi.make());
    if (!coeff_out.empty()) {
      std::ofstream out(coeff_out);
      if (!out) throw ks::InputError("cannot write '" + coeff_out + "'");
      ks::write_coefficients(out, m.f);
    }
    emit({{"member", ks::to_json(m)}});
  });

  // check ------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "grid-based subordination checks");
  check->require_subcommand(1);
  std::string f_path, F_path;
  PhiArgs cphi;
  double delta = 0.05;
  int samples = 5;
  ks::SubordinationConfig scfg;

  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--radii", scfg.radii, "grid radii")->capture_default_str();
    cmd->add_option("--angles", scfg.angles, "angles per radius")->capture_default_str();
    cmd->add_option("--margin-floor", scfg.margin_floor)->capture_default_str();
  };

  // Coefficient files are exact polynomials, so zero-padding to the grid
  // checks' minimum order loses nothing. P = f'/(G/z) has order N - 1.
  auto load_padded = [&](const std::string& path, int at_least) {
    const auto s = ks::read_coefficients_file(path);
    return s.order() >= at_least ? s : s.resized(at_least);
  };

  auto* c_mem = check->add_subcommand("membership", "-z^2 f'/(g(z)g(-z)) < phi");
  c_mem->add_option("--f", f_path, "coefficient file for f")->required();
  c_mem->add_option("--g", g_spec, "atoms:<x>@<lambda>,...")->capture_default_str();
  add_phi(c_mem, cphi);
  add_grid(c_mem);
  c_mem->callback([&] {
    const auto f = load_padded(f_path, scfg.min_order + 1);
    cphi.order = f.order();
    const auto v = ks::ks_membership(f, ks::parse_starlike(g_spec, f.order()), cphi.make(), scfg);
    emit({{"query", {{"verb", "membership"}, {"f", f_path}, {"g", g_spec}, {"phi", cphi.spec}}},
          {"result", ks::to_json(v)}});
    if (v.verdict == ks::Verdict::fails) exit_code = kExitFinding;
  });

  auto* c_sub = check->add_subcommand("subordination", "F < f");
  c_sub->add_option("--F", F_path, "coefficient file for F")->required();
  c_sub->add_option("--f", f_path, "coefficient file for f")->required();
  add_grid(c_sub);
  c_sub->callback([&] {
    auto F = load_padded(F_path, scfg.min_order);
    auto f = load_padded(f_path, scfg.min_order);
    const int order = std::max(F.order(), f.order());
    const auto v = ks::is_subordinate(F.resized(order), f.resized(order), scfg);
    emit({{"query", {{"verb", "subordination"}, {"F", F_path}, {"f", f_path}}},
          {"result", ks::to_json(v)}});
    if (v.verdict == ks::Verdict::fails) exit_code = kExitFinding;
  });

  auto* c_stan = check->add_subcommand("stankiewicz", "f + t g(z)g(-z)/z < f implies f in K_s");
  c_stan->add_option("--f", f_path, "coefficient file for f")->required();
  c_stan->add_option("--g", g_spec, "atoms:<x>@<lambda>,...")->capture_default_str();
  c_stan->add_option("--delta", delta)->capture_default_str();
  c_stan->add_option("--samples", samples)->capture_default_str();
  add_grid(c_stan);
  c_stan->callback([&] {
    const auto f = load_padded(f_path, scfg.min_order + 1);
    const auto r =
        ks::stankiewicz_check(f, ks::parse_starlike(g_spec, f.order()), delta, samples, scfg);
    emit({{"query",
           {{"verb", "stankiewicz"}, {"f", f_path}, {"g", g_spec}, {"delta", delta}, {"samples", samples}}},
          {"result", ks::to_json(r)}});
    if (!r.consistent) exit_code = kExitFinding;
  });

  // campaign / replay --------------------------------------------------------
  std::string config_path, out_path, csv_path;
  bool serial = false;
  auto* camp = app.add_subcommand("campaign", "randomized verification campaign");
  camp->add_option("--config", config_path, "campaign JSON (defaults when omitted)");
  camp->add_option("--out", out_path, "write the JSON report here instead of stdout");
  camp->add_option("--csv", csv_path, "also write per-trial records as CSV");
  camp->add_flag("--serial", serial, "run trials on one thread");
  camp->callback([&] {
    const auto cfg = load_config(config_path);
    const auto report = ks::run_campaign(cfg, serial ? ks::Exec::serial : ks::Exec::parallel);
    const std::string text = ks::report_json(report).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text(out_path, text);
    }
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      if (!csv) throw ks::InputError("cannot write '" + csv_path + "'");
      ks::write_csv(csv, report);
    }
    const auto findings = report.finding_count();
    std::cerr << "ks campaign: " << report.trials.size() << " trials, " << findings
              << " findings, " << report.wall_time_s << " s\n";
    if (findings > 0) exit_code = kExitFinding;
  });

  int trial = 0;
  auto* replay = app.add_subcommand("replay", "re-run one campaign trial");
  replay->add_option("--config", config_path, "campaign JSON (defaults when omitted)");
  replay->add_option("--trial", trial, "trial index")->required();
  replay->callback([&] {
    const auto cfg = load_config(config_path);
    if (trial < 0 || trial >= cfg.trials) throw ks::InputError("trial index out of range");
    const auto t = ks::run_trial(cfg, trial);
    emit(ks::to_json(t));
    for (const auto& r : t.records) {
      if (r.status == ks::Status::fail) exit_code = kExitFinding;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ks::InputError& e) {
    std::cerr << "ks: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ks: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}
