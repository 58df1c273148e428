#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ks/grid.hpp"
#include "ks/json_io.hpp"

namespace ks {

enum class Check { fs, inverse_fs, a2a3, distortion, growth, membership, stankiewicz };
inline constexpr Check kAllChecks[] = {Check::fs,         Check::inverse_fs, Check::a2a3,
                                       Check::distortion, Check::growth,     Check::membership,
                                       Check::stankiewicz};
const char* to_string(Check c) noexcept;
Check check_from_string(std::string_view name);

enum class Status { pass, fail, inconclusive, skipped };
const char* to_string(Status s) noexcept;

// Tolerances applied by the campaign checks.
namespace tol {
inline constexpr double kIdentity = 1e-12;     // coefficient identities
inline constexpr double kFsBound = 1e-8;       // |a3 - mu a2^2| <= bound + tol
inline constexpr double kDistortion = 1e-9;    // relative to max(1, bound)
inline constexpr double kWitness = 1e-9;
}  // namespace tol

// 8 radii x 8 angles on |mu| <= 3: mu = 3 (i+1)/8 e^{2 pi i j / 8}.
std::vector<Complex> default_mu_grid();
// mu values where the Fekete-Szego bound changes structure for this phi:
// 0, 1, 2, 8 B_2/(3 B_1^2), and the branch switches 4 (B_2 -+ B_1)/(3 B_1^2).
std::vector<Complex> structural_mu(const MaMindaFunction& phi);

struct CampaignConfig {
  std::uint64_t seed = 42;
  int trials = 1000;
  std::vector<std::string> phi_specs{"halfplane", "gamma:0.25", "gamma:0.5", "gamma:0.75"};
  std::vector<Complex> mu_grid = default_mu_grid();
  std::vector<double> radii{0.3, 0.6, 0.9};
  int order = kDefaultOrder;
  std::vector<Check> checks{std::begin(kAllChecks), std::end(kAllChecks)};
  // Truncation order for the grid-based subordination checks.
  int check_order = 128;
  // Angles per radius for distortion/growth sampling.
  int angles = 32;
  double stankiewicz_delta = 0.05;
  int stankiewicz_samples = 5;
};

// Rejects invalid configs, including unparseable phi specs, before any trial.
void validate(const CampaignConfig& cfg);
CampaignConfig config_from_json(const Json& j);
Json to_json(const CampaignConfig& cfg);

struct CheckRecord {
  Check check;
  Status status;
  double margin;  // distance to failure; negative means violated
  std::string detail;
};

struct TrialOutcome {
  int trial = 0;
  std::string phi;
  std::string g;
  std::string w;
  std::vector<CheckRecord> records;
};

// Trial i draws from rng::Stream(seed, i) only, so any trial can be replayed alone.
TrialOutcome run_trial(const CampaignConfig& cfg, int trial);
Json to_json(const TrialOutcome& t);

struct CampaignReport {
  CampaignConfig config;
  std::vector<TrialOutcome> trials;  // in trial order
  double wall_time_s = 0.0;

  std::size_t finding_count() const;
};

CampaignReport run_campaign(const CampaignConfig& cfg, Exec exec = Exec::parallel);

// schema 1. Key order is fixed; everything except wall_time_s is a pure
// function of the config.
Json report_json(const CampaignReport& report, bool include_wall_time = true);
void write_csv(std::ostream& out, const CampaignReport& report);

}  // namespace ks
