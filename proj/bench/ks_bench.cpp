// Serial vs OpenMP timings for the two parallel kernels: polar-grid series
// evaluation and the campaign trial loop.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ks/campaign.hpp"
#include "ks/generators.hpp"
#include "ks/grid.hpp"

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int trials = argc > 1 ? std::atoi(argv[1]) : 100;
  std::printf("threads %d\n", ks::worker_threads());

  const auto phi = ks::MaMindaFunction::halfplane(256);
  const auto f = ks::extremal(ks::ExtremalKind::fs_max, phi).f;
  const ks::PolarGrid grid{{0.5, 0.7, 0.9}, 7200};
  double sink = 0.0;
  const double grid_serial = time_ms([&] { sink += ks::sample_series(f, grid, ks::Exec::serial).values[7].real(); }, 5);
  const double grid_parallel = time_ms([&] { sink += ks::sample_series(f, grid, ks::Exec::parallel).values[7].real(); }, 5);
  std::printf("grid  order 256, %zu points: serial %.2f ms, parallel %.2f ms, speedup %.2fx\n",
              grid.size(), grid_serial, grid_parallel, grid_serial / grid_parallel);

  ks::CampaignConfig cfg;
  cfg.trials = trials;
  const double camp_serial = time_ms([&] { ks::run_campaign(cfg, ks::Exec::serial); }, 1);
  const double camp_parallel = time_ms([&] { ks::run_campaign(cfg, ks::Exec::parallel); }, 1);
  std::printf("campaign %d trials, all checks: serial %.0f ms, parallel %.0f ms, speedup %.2fx\n",
              trials, camp_serial, camp_parallel, camp_serial / camp_parallel);
  return sink == 12345.0;  // keep the grid work observable
}
