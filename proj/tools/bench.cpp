#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "polystab/kernels.hpp"

namespace k = polystab::kernels;
using polystab::Int;
using polystab::IntMat;
using polystab::IntVec;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0, std::chrono::steady_clock::now());
}

IntMat random_points(std::mt19937_64& rng, std::size_t n, std::size_t dim, long spread) {
  IntMat pts(n, IntVec(dim));
  for (auto& p : pts)
    for (auto& x : p)
      x = Int(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) - spread);
  return pts;
}

void report(const char* name, double ts, double tp, bool identical) {
  std::printf("%-18s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  identical %s\n", name, ts,
              tp, tp > 0 ? ts / tp : 0.0, identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 400000, dim = 6;
  int reps = 5;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    long v = std::strtol(argv[i + 1], nullptr, 10);
    if (flag == "--n") n = static_cast<std::size_t>(v);
    if (flag == "--dim") dim = static_cast<std::size_t>(v);
    if (flag == "--reps") reps = static_cast<int>(v);
  }
  std::printf("workload: %zu points, dim %zu, %d reps, %zu workers\n", n, dim, reps,
              k::worker_count());

  std::mt19937_64 rng(12345);
  IntMat pts = random_points(rng, n, dim, 50);
  std::vector<k::LinearCondition> conds;
  for (std::size_t i = 0; i < 8; ++i) {
    IntVec normal(dim);
    for (auto& x : normal) x = Int(static_cast<long>(rng() % 7) - 3);
    conds.push_back({normal, Int(-400)});
  }
  IntVec dir = conds[0].normal;

  {
    bool rs = true, rp = true;
    double ts = timed([&] {
      for (int r = 0; r < reps; ++r) rs &= k::points_satisfy_serial(pts, conds, {});
    });
    double tp = timed([&] {
      for (int r = 0; r < reps; ++r) rp &= k::points_satisfy_parallel(pts, conds, {});
    });
    report("points_satisfy", ts, tp, rs == rp);
  }
  {
    Int ms, mp;
    double ts = timed([&] {
      for (int r = 0; r < reps; ++r) ms = k::min_dot_serial(pts, dir);
    });
    double tp = timed([&] {
      for (int r = 0; r < reps; ++r) mp = k::min_dot_parallel(pts, dir);
    });
    report("min_dot", ts, tp, ms == mp);
  }
  {
    std::size_t side = static_cast<std::size_t>(std::max(1.0, std::sqrt(double(n))));
    IntMat a = random_points(rng, side, dim, 50), b = random_points(rng, side, dim, 50);
    IntMat ss, sp;
    double ts = timed([&] {
      for (int r = 0; r < reps; ++r) ss = k::pairwise_sums_serial(a, b);
    });
    double tp = timed([&] {
      for (int r = 0; r < reps; ++r) sp = k::pairwise_sums_parallel(a, b);
    });
    report("pairwise_sums", ts, tp, ss == sp);
  }
  {
    IntMat fs, fp;
    double ts = timed([&] {
      for (int r = 0; r < reps; ++r) fs = k::filter_satisfying_serial(pts, conds, {});
    });
    double tp = timed([&] {
      for (int r = 0; r < reps; ++r) fp = k::filter_satisfying_parallel(pts, conds, {});
    });
    report("filter_satisfying", ts, tp, fs == fp);
  }
  return 0;
}
