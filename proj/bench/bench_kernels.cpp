// Compares the OpenMP kernels against the serial reference implementations
// on random clouds and reports timings, speedups and result equality.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "extremal/kernels.hpp"
#include "extremal/point_set.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start)
      .count();
}

extremal::PointSet random_cloud(std::size_t m, std::size_t d,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> coords(m * d);
  for (auto& v : coords) {
    v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
  return extremal::PointSet(d, std::move(coords));
}

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = clock_type::now();
    fn();
    best = std::min(best, ms_since(start));
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool equal) {
  std::printf("%-28s %10.3f ms %10.3f ms %7.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, equal ? "equal" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
  std::size_t m = 4096;
  std::size_t d = 32;
  int reps = 3;
  std::uint64_t seed = 1;

  CLI::App app{"serial vs OpenMP kernel benchmark"};
  app.add_option("--m", m, "points");
  app.add_option("--d", d, "dimension");
  app.add_option("--reps", reps, "repetitions (best kept)");
  app.add_option("--seed", seed, "cloud seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (const char* env = std::getenv("EXTREMAL_KIT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
  std::printf("m=%zu d=%zu reps=%d threads=%d\n", m, d, reps,
              omp_get_max_threads());
#else
  std::printf("m=%zu d=%zu reps=%d (OpenMP disabled)\n", m, d, reps);
#endif
  std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  const auto pts = random_cloud(m, d, seed);
  const std::vector<double> center(d, 0.0);

  namespace k = extremal::kernels;

  {
    k::FarthestPair s{}, p{};
    const double ts =
        time_best_of(reps, [&] { s = k::serial::max_pairwise_distance(pts); });
    const double tp =
        time_best_of(reps, [&] { p = k::max_pairwise_distance(pts); });
    report("max_pairwise_distance", ts, tp,
           s.distance == p.distance && s.first == p.first &&
               s.second == p.second);
  }
  {
    std::vector<double> s, p;
    const double ts =
        time_best_of(reps, [&] { s = k::serial::distance_matrix(pts); });
    const double tp = time_best_of(reps, [&] { p = k::distance_matrix(pts); });
    report("distance_matrix", ts, tp, s == p);
  }
  {
    k::Farthest s{}, p{};
    const double ts =
        time_best_of(reps, [&] { s = k::serial::farthest_from(pts, center); });
    const double tp =
        time_best_of(reps, [&] { p = k::farthest_from(pts, center); });
    report("farthest_from", ts, tp,
           s.distance == p.distance && s.index == p.index);
  }
  {
    std::vector<double> s(m, 1e300), p(m, 1e300);
    const auto probe = pts.point(0);
    const double ts = time_best_of(
        reps, [&] { k::serial::update_min_squared_distance(pts, probe, s); });
    const double tp = time_best_of(
        reps, [&] { k::update_min_squared_distance(pts, probe, p); });
    report("update_min_squared_distance", ts, tp, s == p);
  }
  return 0;
}
