#pragma once

#include <cstdint>

namespace egt {

// Kernels with a data-parallel inner loop exist in two builds: a serial
// reference and an OpenMP version.  Results are identical; tests compare
// them and the bench target times them.
enum class Exec { kSerial, kParallel };

struct Caps {
  std::int64_t group_order = 2'000'000;
  int cut_exact_max_n = 24;                      // exhaustive bipartition / subset search
  std::int64_t folner_exhaustive = 1'000'000;    // subset count for exact Folner mode
  std::int64_t config_exhaustive = 10'000'000;   // tuple count for roundness / invariance
  int dense_eigen_max_n = 3000;
  int automorphism_max_n = 16;
};

struct Tolerances {
  double eig = 1e-9;       // |x - 1| <= eig classifies x as the eigenvalue 1
  double cnd_rel = 1e-8;   // CND slack, relative to max|h|
  double exponent = 1e-4;  // bisection width for sup-exponent / roundness
  double witness = 1e-12;  // witness recomputation slack
  double cert = 1e-9;      // bound-certificate slack
};

struct RunConfig {
  Caps caps;
  Tolerances tol;
  std::uint64_t seed = 0;
  std::int64_t sample_count = 100'000;  // per probe, for sampled searches
  Exec exec = Exec::kParallel;
};

}  // namespace egt
