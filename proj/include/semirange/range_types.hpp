#pragma once

#include <cstdint>
#include <vector>

#include "semirange/types.hpp"

namespace semirange {

/// {a : |a - center| <= radius}
struct Disk {
  Complex center;
  double radius = 0.0;
};

enum class RangeMethod { disk_union, pair_sampling, q_collapse, empty };
const char* to_string(RangeMethod m);

enum class Execution { serial, parallel };

struct SampleConfig {
  int n_x = 2048;       // random base vectors on the unit A-sphere
  int n_angles = 720;   // support grid
  int n_starts = 32;    // optimizer restarts
  int max_iter = 500;   // optimizer sweeps
  int n_refine = 180;   // grid directions whose supporting disk is locally optimized (0 disables)
  int n_pairs = 20000;  // budget of the adaptive pair sampler (rank-2 fallback)
  std::uint64_t seed = 0;
  Execution exec = Execution::parallel;

  void validate() const;
};

/// One element of W_{q,A}(T) from the (x, z, phase) parameterization.
struct PairSample {
  ComplexVector x;
  ComplexVector z;
  double phase = 0.0;
  Complex value;
};

struct RangeEstimate {
  RangeMethod method = RangeMethod::empty;
  std::vector<Disk> disks;
  std::vector<double> angles;
  std::vector<double> support;   // h(angles[k])
  std::vector<Complex> boundary; // support-line envelope (outer polygon)
  std::vector<Complex> hull;     // hull of attained extreme points (inner polygon)
  double radius_est = 0.0;
  double scale = 0.0;            // ||T||_A, the reference length for geo_tol
};

}  // namespace semirange
