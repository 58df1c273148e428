#include "ks/campaign.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>

#include "ks/bounds.hpp"
#include "ks/error.hpp"
#include "ks/parse.hpp"
#include "ks/rng.hpp"
#include "ks/subord.hpp"

namespace ks {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string kv(const char* key, double v) { return std::string(key) + "=" + format_real(v); }

Status status_from(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return Status::pass;
    case Verdict::fails:
      return Status::fail;
    case Verdict::inconclusive:
      return Status::inconclusive;
  }
  return Status::inconclusive;
}

// Everything a trial needs, built once per trial.
struct TrialContext {
  const CampaignConfig& cfg;
  MaMindaFunction phi;
  ClassMember member;
  std::optional<ClassMember> member_hi;  // at cfg.check_order

  const ClassMember& hi() {
    if (!member_hi) {
      member_hi = member_from(member.g.with_order(cfg.check_order),
                              member.w.with_order(cfg.check_order), phi);
    }
    return *member_hi;
  }
};

CheckRecord check_fs(TrialContext& t) {
  auto mus = t.cfg.mu_grid;
  for (Complex mu : structural_mu(t.phi)) mus.push_back(mu);
  double margin = kInf;
  std::string detail;
  for (Complex mu : mus) {
    const double value = fs_value(t.member, mu);
    const double bound = fs_bound(t.phi, mu);
    if (bound - value < margin) {
      margin = bound - value;
      detail = "mu=" + format_complex(mu) + " " + kv("value", value) + " " + kv("bound", bound);
    }
  }
  return {Check::fs, margin >= -tol::kFsBound ? Status::pass : Status::fail, margin, detail};
}

CheckRecord check_inverse_fs(TrialContext& t) {
  const PowerSeries inv = functional_inverse(t.member.f);
  const Complex a2 = t.member.a(2), a3 = t.member.a(3);
  const Complex d2 = inv[2], d3 = inv[3];
  double margin = kInf;
  double gap = 0.0;
  std::string worst;
  for (Complex mu : t.cfg.mu_grid) {
    const double lhs = std::abs(d3 - mu * d2 * d2);
    const double rhs = std::abs(a3 - (2.0 - mu) * a2 * a2);
    gap = std::max(gap, std::abs(lhs - rhs));
    const double bound = inverse_fs_bound(t.phi, mu);
    if (bound - lhs < margin) {
      margin = bound - lhs;
      worst = "mu=" + format_complex(mu) + " " + kv("value", lhs) + " " + kv("bound", bound);
    }
  }
  const bool ok = gap <= tol::kIdentity && margin >= -tol::kFsBound;
  return {Check::inverse_fs, ok ? Status::pass : Status::fail, margin,
          kv("identity_gap", gap) + " " + worst};
}

CheckRecord check_a2a3(TrialContext& t) {
  const auto& res = t.member.residuals;
  const auto cb = coefficient_bounds(t.phi);
  const double margin =
      std::min(cb.a2 - std::abs(t.member.a(2)), cb.a3 - std::abs(t.member.a(3)));
  const bool ok = res.a2 <= tol::kIdentity && res.a3 <= tol::kIdentity && margin >= -tol::kIdentity;
  return {Check::a2a3, ok ? Status::pass : Status::fail, margin,
          kv("residual_a2", res.a2) + " " + kv("residual_a3", res.a3)};
}

template <typename Bounds, typename Modulus>
CheckRecord check_annulus(TrialContext& t, Check which, Bounds&& bounds_at, Modulus&& modulus_at) {
  double margin = kInf;
  std::string detail;
  for (double r : t.cfg.radii) {
    const auto [lower, upper] = bounds_at(r);
    const double scale = std::max(1.0, upper);
    for (int j = 0; j < t.cfg.angles; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / t.cfg.angles);
      const double v = modulus_at(z);
      const double d = std::min(v - lower, upper - v) / scale;
      if (d < margin) {
        margin = d;
        detail = "z=" + format_complex(z) + " " + kv("value", v) + " " + kv("lower", lower) + " " +
                 kv("upper", upper);
      }
    }
  }
  return {which, margin >= -tol::kDistortion ? Status::pass : Status::fail, margin, detail};
}

CheckRecord check_distortion(TrialContext& t) {
  if (!t.phi.builtin() && !t.phi.attested()) {
    return {Check::distortion, Status::skipped, 0.0, "phi not attested"};
  }
  return check_annulus(
      t, Check::distortion,
      [&](double r) {
        const auto b = distortion_bounds(t.phi, r);
        return std::pair{b.lower, b.upper};
      },
      [&](Complex z) { return std::abs(t.member.derivative_at(z)); });
}

CheckRecord check_growth(TrialContext& t) {
  if (!t.phi.builtin()) return {Check::growth, Status::skipped, 0.0, "phi not builtin"};
  return check_annulus(
      t, Check::growth,
      [&](double r) {
        const auto b = growth_bounds(t.phi, r);
        return std::pair{b.lower, b.upper};
      },
      [&](Complex z) { return std::abs(t.member.value_at(z)); });
}

SubordinationConfig subord_config() {
  SubordinationConfig sc;
  sc.exec = Exec::serial;  // trials are the parallel unit
  return sc;
}

CheckRecord check_membership(TrialContext& t) {
  const auto& m = t.hi();
  const auto v = ks_membership(m.f, m.g, t.phi, subord_config());
  return {Check::membership, status_from(v.verdict), v.margin,
          std::string("verdict=") + to_string(v.verdict) + " " + kv("tail", v.tail_estimate)};
}

CheckRecord check_stankiewicz(TrialContext& t) {
  const auto& m = t.hi();
  const auto r = stankiewicz_check(m.f, m.g, t.cfg.stankiewicz_delta, t.cfg.stankiewicz_samples,
                                   subord_config());
  int holds = 0;
  for (const auto& c : r.criterion) holds += c.verdict == Verdict::holds;
  Status s = Status::pass;
  if (!r.consistent) {
    s = Status::fail;
  } else if (r.conclusion.verdict == Verdict::inconclusive) {
    s = Status::inconclusive;
  }
  return {Check::stankiewicz, s, r.conclusion.margin,
          "criterion_holds=" + std::to_string(holds) + "/" + std::to_string(r.criterion.size()) +
              " conclusion=" + to_string(r.conclusion.verdict)};
}

CheckRecord run_check(TrialContext& t, Check c) {
  try {
    switch (c) {
      case Check::fs:
        return check_fs(t);
      case Check::inverse_fs:
        return check_inverse_fs(t);
      case Check::a2a3:
        return check_a2a3(t);
      case Check::distortion:
        return check_distortion(t);
      case Check::growth:
        return check_growth(t);
      case Check::membership:
        return check_membership(t);
      case Check::stankiewicz:
        return check_stankiewicz(t);
    }
  } catch (const std::exception& e) {
    return {c, Status::fail, -kInf, std::string("error: ") + e.what()};
  }
  return {c, Status::fail, -kInf, "unknown check"};
}

Json provenance(const TrialOutcome& t, const CheckRecord& r) {
  return Json{{"trial", t.trial},   {"check", to_string(r.check)}, {"phi", t.phi},
              {"g", t.g},           {"w", t.w},                    {"margin", r.margin},
              {"detail", r.detail}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* to_string(Check c) noexcept {
  switch (c) {
    case Check::fs:
      return "fs";
    case Check::inverse_fs:
      return "inverse_fs";
    case Check::a2a3:
      return "a2a3";
    case Check::distortion:
      return "distortion";
    case Check::growth:
      return "growth";
    case Check::membership:
      return "membership";
    case Check::stankiewicz:
      return "stankiewicz";
  }
  return "?";
}

Check check_from_string(std::string_view name) {
  for (Check c : kAllChecks) {
    if (name == to_string(c)) return c;
  }
  throw InputError("unknown check '" + std::string(name) + "'");
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

std::vector<Complex> default_mu_grid() {
  std::vector<Complex> mus;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      mus.push_back(std::polar(3.0 * (i + 1) / 8.0, 2.0 * std::numbers::pi * j / 8.0));
    }
  }
  return mus;
}

std::vector<Complex> structural_mu(const MaMindaFunction& phi) {
  const Complex b1 = phi.B(1), b2 = phi.B(2);
  const Complex s = 4.0 / (3.0 * b1 * b1);
  return {0.0, 1.0, 2.0, 2.0 * s * b2, s * (b2 - b1), s * (b2 + b1)};
}

void validate(const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw InputError("campaign: trials must be at least 1");
  if (cfg.order < 8) throw InputError("campaign: order must be at least 8");
  if (cfg.check_order < 32) throw InputError("campaign: check_order must be at least 32");
  if (cfg.phi_specs.empty()) throw InputError("campaign: phi_specs is empty");
  if (cfg.mu_grid.empty()) throw InputError("campaign: mu_grid is empty");
  if (cfg.radii.empty()) throw InputError("campaign: radii is empty");
  for (double r : cfg.radii) {
    if (!(r > 0.0 && r <= 0.9)) throw InputError("campaign: radii must lie in (0, 0.9]");
  }
  if (cfg.angles < 1) throw InputError("campaign: angles must be at least 1");
  if (!(cfg.stankiewicz_delta > 0.0) || cfg.stankiewicz_samples < 1) {
    throw InputError("campaign: stankiewicz delta must be positive and samples >= 1");
  }
  for (const auto& spec : cfg.phi_specs) parse_phi(spec, cfg.order);
}

CampaignConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("campaign config must be a JSON object");
  CampaignConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "trials") {
        cfg.trials = value.get<int>();
      } else if (key == "phi_specs") {
        cfg.phi_specs = value.get<std::vector<std::string>>();
      } else if (key == "mu_grid") {
        if (value.is_string() && value.get<std::string>() == "default") {
          cfg.mu_grid = default_mu_grid();
        } else {
          cfg.mu_grid.clear();
          for (const auto& m : value) cfg.mu_grid.push_back(complex_from_json(m));
        }
      } else if (key == "radii") {
        cfg.radii = value.get<std::vector<double>>();
      } else if (key == "order") {
        cfg.order = value.get<int>();
      } else if (key == "checks") {
        if (value.is_string() && value.get<std::string>() == "all") {
          cfg.checks.assign(std::begin(kAllChecks), std::end(kAllChecks));
        } else {
          cfg.checks.clear();
          for (const auto& c : value) cfg.checks.push_back(check_from_string(c.get<std::string>()));
        }
      } else if (key == "check_order") {
        cfg.check_order = value.get<int>();
      } else if (key == "angles") {
        cfg.angles = value.get<int>();
      } else if (key == "stankiewicz_delta") {
        cfg.stankiewicz_delta = value.get<double>();
      } else if (key == "stankiewicz_samples") {
        cfg.stankiewicz_samples = value.get<int>();
      } else {
        throw InputError("campaign config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("campaign config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

Json to_json(const CampaignConfig& cfg) {
  Json mus = Json::array();
  for (Complex mu : cfg.mu_grid) mus.push_back(to_json(mu));
  Json checks = Json::array();
  for (Check c : cfg.checks) checks.push_back(to_string(c));
  return Json{{"seed", cfg.seed},
              {"trials", cfg.trials},
              {"phi_specs", cfg.phi_specs},
              {"mu_grid", std::move(mus)},
              {"radii", cfg.radii},
              {"order", cfg.order},
              {"checks", std::move(checks)},
              {"check_order", cfg.check_order},
              {"angles", cfg.angles},
              {"stankiewicz_delta", cfg.stankiewicz_delta},
              {"stankiewicz_samples", cfg.stankiewicz_samples}};
}

TrialOutcome run_trial(const CampaignConfig& cfg, int trial) {
  rng::Stream rng(cfg.seed, static_cast<std::uint64_t>(trial));
  const auto& spec = cfg.phi_specs[static_cast<std::size_t>(trial) % cfg.phi_specs.size()];
  MaMindaFunction phi = parse_phi(spec, cfg.order);
  StarlikeAtomic g = random_starlike(rng, cfg.order);
  SchwarzMap w = random_schwarz(rng, cfg.order);

  TrialOutcome out;
  out.trial = trial;
  out.phi = to_spec(phi);
  out.g = to_spec(g);
  out.w = to_spec(w);
  TrialContext ctx{cfg, phi, member_from(g, w, phi), std::nullopt};
  for (Check c : cfg.checks) out.records.push_back(run_check(ctx, c));
  return out;
}

Json to_json(const TrialOutcome& t) {
  Json records = Json::array();
  for (const auto& r : t.records) {
    records.push_back(Json{{"check", to_string(r.check)},
                           {"status", to_string(r.status)},
                           {"margin", r.margin},
                           {"detail", r.detail}});
  }
  return Json{{"trial", t.trial}, {"phi", t.phi}, {"g", t.g}, {"w", t.w}, {"records", records}};
}

std::size_t CampaignReport::finding_count() const {
  std::size_t n = 0;
  for (const auto& t : trials) {
    for (const auto& r : t.records) n += r.status == Status::fail;
  }
  return n;
}

CampaignReport run_campaign(const CampaignConfig& cfg, Exec exec) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.config = cfg;
  report.trials.resize(static_cast<std::size_t>(cfg.trials));
  for_each_index(report.trials.size(), exec, [&](std::size_t i) {
    report.trials[i] = run_trial(cfg, static_cast<int>(i));
  });
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json report_json(const CampaignReport& report, bool include_wall_time) {
  Json checks = Json::object();
  Json findings = Json::array();
  for (Check c : report.config.checks) {
    int counts[4] = {0, 0, 0, 0};
    double worst = kInf;
    Json worst_prov = nullptr;
    for (const auto& t : report.trials) {
      for (const auto& r : t.records) {
        if (r.check != c) continue;
        ++counts[static_cast<int>(r.status)];
        if (r.status != Status::skipped && r.margin < worst) {
          worst = r.margin;
          worst_prov = provenance(t, r);
        }
      }
    }
    checks[to_string(c)] = Json{{"pass", counts[0]},
                                {"fail", counts[1]},
                                {"inconclusive", counts[2]},
                                {"skipped", counts[3]},
                                {"worst_margin", worst_prov.is_null() ? Json(nullptr) : Json(worst)},
                                {"worst", worst_prov}};
  }
  for (const auto& t : report.trials) {
    for (const auto& r : t.records) {
      if (r.status == Status::fail) findings.push_back(provenance(t, r));
    }
  }
  Json j{{"schema", 1},
         {"rng",
          {{"algorithm", rng::kAlgorithm},
           {"key", "seed as two 32-bit words, low word first"},
           {"counter", "(draw_lo, draw_hi, trial_lo, trial_hi)"}}},
         {"config", to_json(report.config)},
         {"checks", std::move(checks)},
         {"finding_count", findings.size()},
         {"findings", std::move(findings)}};
  if (include_wall_time) j["wall_time_s"] = report.wall_time_s;
  return j;
}

void write_csv(std::ostream& out, const CampaignReport& report) {
  out << "trial,check,phi,g,w,status,margin,detail\n";
  for (const auto& t : report.trials) {
    for (const auto& r : t.records) {
      out << t.trial << ',' << to_string(r.check) << ',' << csv_quote(t.phi) << ','
          << csv_quote(t.g) << ',' << csv_quote(t.w) << ',' << to_string(r.status) << ','
          << format_real(r.margin) << ',' << csv_quote(r.detail) << '\n';
    }
  }
}

}  // namespace ks
