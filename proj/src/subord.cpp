#include "ks/subord.hpp"

#include <cmath>
#include <string>

#include "ks/error.hpp"

namespace ks {

namespace {

constexpr double kMatchTol = 1e-12;

SubordinationVerdict blank(const SubordinationConfig& cfg) {
  SubordinationVerdict v;
  v.radii = cfg.radii;
  v.angles = cfg.angles;
  return v;
}

PolarGrid grid_of(const SubordinationConfig& cfg) { return PolarGrid{cfg.radii, cfg.angles}; }

std::size_t radius_of(std::size_t index, int angles) {
  return index / static_cast<std::size_t>(angles);
}

void require_normalized(const PowerSeries& f, const char* op) {
  if (f.order() < 1 || std::abs(f[0]) > kMatchTol || std::abs(f[1] - 1.0) > kMatchTol) {
    throw InputError(std::string(op) + ": f must be normalized (f(0) = 0, f'(0) = 1)");
  }
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

SubordinationVerdict is_subordinate(const PowerSeries& F, const PowerSeries& f,
                                    const SubordinationConfig& cfg) {
  if (F.order() != f.order()) throw InputError("is_subordinate: order mismatch");
  if (f.order() < cfg.min_order) {
    throw InputError("is_subordinate: order " + std::to_string(f.order()) + " below minimum " +
                     std::to_string(cfg.min_order));
  }
  const Complex c1 = f[1];
  if (c1 == Complex{}) throw InputError("is_subordinate: f'(0) = 0");
  if (std::abs(F[0] - f[0]) > kMatchTol * std::max(1.0, std::abs(f[0]))) {
    throw InputError("is_subordinate: F(0) != f(0)");
  }

  // Normalize both sides by the affine map u -> (u - f(0)) / f'(0).
  const int n = f.order();
  const PowerSeries shift = PowerSeries::constant(n, f[0]);
  const Complex scale = 1.0 / c1;
  const PowerSeries fn = scale * (f - shift);
  const PowerSeries Fn = scale * (F - shift);
  const PowerSeries w = solve_composition(fn, Fn);

  const GridSamples samples = sample_series(w, grid_of(cfg), cfg.exec);
  SubordinationVerdict v = blank(cfg);
  double sup = 0.0;
  double worst_excess = 0.0;
  for (std::size_t i = 0; i < samples.values.size(); ++i) {
    const double m = std::abs(samples.values[i]);
    const double tail = samples.tails[radius_of(i, cfg.angles)];
    sup = std::max(sup, m);
    if (m - tail > 1.0 && m - tail - 1.0 > worst_excess) {
      worst_excess = m - tail - 1.0;
      v.witness_z = grid_of(cfg).point(i);
      v.witness_value = samples.values[i];
    }
  }
  for (double t : samples.tails) v.tail_estimate = std::max(v.tail_estimate, t);
  v.margin = 1.0 - sup;
  if (v.witness_z) {
    v.verdict = Verdict::fails;
  } else if (sup + v.tail_estimate < 1.0 - cfg.margin_floor) {
    v.verdict = Verdict::holds;
  }
  return v;
}

SubordinationVerdict positive_real_part(const PowerSeries& p, const SubordinationConfig& cfg) {
  const GridSamples samples = sample_series(p, grid_of(cfg), cfg.exec);
  SubordinationVerdict v = blank(cfg);
  double min_re = INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.values.size(); ++i) {
    const double re = samples.values[i].real();
    const double tail = samples.tails[radius_of(i, cfg.angles)];
    min_re = std::min(min_re, re);
    if (re + tail < 0.0 && re + tail < worst) {
      worst = re + tail;
      v.witness_z = grid_of(cfg).point(i);
      v.witness_value = samples.values[i];
    }
  }
  for (double t : samples.tails) v.tail_estimate = std::max(v.tail_estimate, t);
  v.margin = min_re;
  if (v.witness_z) {
    v.verdict = Verdict::fails;
  } else if (min_re - v.tail_estimate > cfg.margin_floor) {
    v.verdict = Verdict::holds;
  }
  return v;
}

PowerSeries ks_quotient(const PowerSeries& f, const StarlikeAtomic& g) {
  require_normalized(f, "ks_quotient");
  if (g.order() != f.order()) throw InputError("ks_quotient: f and g orders differ");
  const PowerSeries g_over_z = G_from_g(g).shifted_down(1);
  return mul(derivative(f), reciprocal(g_over_z));
}

SubordinationVerdict ks_membership(const PowerSeries& f, const StarlikeAtomic& g,
                                   const MaMindaFunction& phi, const SubordinationConfig& cfg) {
  const PowerSeries p = ks_quotient(f, g);
  if (phi.kind() == PhiKind::halfplane) return positive_real_part(p, cfg);
  return is_subordinate(p, phi.series(p.order()), cfg);
}

StankiewiczResult stankiewicz_check(const PowerSeries& f, const StarlikeAtomic& g, double delta,
                                    int samples, const SubordinationConfig& cfg) {
  if (!(delta > 0.0)) throw InputError("stankiewicz_check: delta must be positive");
  if (samples < 1) throw InputError("stankiewicz_check: need at least one sample");
  require_normalized(f, "stankiewicz_check");
  if (g.order() != f.order()) throw InputError("stankiewicz_check: f and g orders differ");

  // g(z) g(-z) / z = -G(z)
  const PowerSeries G = G_from_g(g);
  StankiewiczResult out;
  bool all_hold = true;
  for (int j = 1; j <= samples; ++j) {
    const double t = delta * j / (samples + 1);
    out.t.push_back(t);
    out.criterion.push_back(is_subordinate(f - t * G, f, cfg));
    all_hold = all_hold && out.criterion.back().verdict == Verdict::holds;
  }
  // Re(z^2 f'/(g g(-z))) < 0  <=>  Re P > 0 for P = -z^2 f'/(g g(-z)).
  out.conclusion = positive_real_part(ks_quotient(f, g), cfg);
  out.consistent = !(all_hold && out.conclusion.verdict == Verdict::fails);
  return out;
}

}  // namespace ks
