#pragma once

#include <optional>
#include <vector>

#include "ks/generators.hpp"
#include "ks/grid.hpp"
#include "ks/phi.hpp"
#include "ks/series.hpp"

namespace ks {

enum class Verdict { holds, fails, inconclusive };
const char* to_string(Verdict v) noexcept;

struct SubordinationConfig {
  std::vector<double> radii{0.5, 0.7, 0.9};
  int angles = 720;
  double margin_floor = 1e-3;
  // Minimum truncation order accepted by inversion-based checks.
  int min_order = 32;
  Exec exec = Exec::parallel;
};

// A truncated-series method cannot certify an open condition at the boundary,
// so the answer is three-valued.
//
// For Schwarz-map checks margin = 1 - sup|w|; for real-part checks
// margin = min Re P. tail_estimate is the largest truncation-tail estimate over
// the grid radii. A witness point is recorded whenever verdict == fails.
struct SubordinationVerdict {
  Verdict verdict = Verdict::inconclusive;
  double margin = 0.0;
  std::vector<double> radii;
  int angles = 0;
  double tail_estimate = 0.0;
  std::optional<Complex> witness_z;
  std::optional<Complex> witness_value;
};

// F < f: solves f(w) = F for the Schwarz candidate w and samples |w| on the grid.
// holds: sup|w| + tail < 1 - margin_floor.
// fails: some point has |w| - tail > 1.
SubordinationVerdict is_subordinate(const PowerSeries& F, const PowerSeries& f,
                                    const SubordinationConfig& cfg = {});

// Re P > 0 on the grid, used for the half-plane target.
// holds: min Re P - tail > margin_floor; fails: some Re P + tail < 0.
SubordinationVerdict positive_real_part(const PowerSeries& p, const SubordinationConfig& cfg = {});

// P(z) = -z^2 f'(z) / (g(z) g(-z)) = f'(z) / (G(z)/z), order N-1 for order-N f.
PowerSeries ks_quotient(const PowerSeries& f, const StarlikeAtomic& g);

// P < phi. The half-plane target reduces to Re P > 0; other targets go
// through is_subordinate(P, phi).
SubordinationVerdict ks_membership(const PowerSeries& f, const StarlikeAtomic& g,
                                   const MaMindaFunction& phi, const SubordinationConfig& cfg = {});

struct StankiewiczResult {
  std::vector<double> t;
  std::vector<SubordinationVerdict> criterion;  // f + t g(z) g(-z)/z < f, per t
  SubordinationVerdict conclusion;              // Re(z^2 f'/(g(z) g(-z))) < 0
  // False only when every criterion holds while the conclusion fails.
  bool consistent = true;
};

// Samples t_j = delta j / (samples + 1), j = 1..samples.
StankiewiczResult stankiewicz_check(const PowerSeries& f, const StarlikeAtomic& g, double delta,
                                    int samples, const SubordinationConfig& cfg = {});

}  // namespace ks
