#pragma once

#include <cstddef>
#include <cstdint>

namespace cideal {

/// Resource caps and stopping-rule parameters shared by every module.
struct Limits {
  /// Largest box (product of pure-power exponents) any enumeration may scan.
  std::int64_t max_box_volume = 100'000'000;
  /// Largest n for which lambda(A/I^{n+1}) is evaluated while fitting.
  int max_hilbert_n = 50;
  /// Extra points a fitted window must reproduce before it is accepted.
  int validate_extra = 3;
  /// Consecutive equal colon steps required to stop the Ratliff-Rush chain.
  int rr_stable_steps = 2;
  /// Last colon index tried by the Ratliff-Rush chain.
  int rr_n_cap = 25;
  /// Largest gap (monomials between I and its integral closure) for which
  /// the exhaustive lattice search runs.
  std::size_t gap_cap = 22;
  /// Generator limit for the inclusion-exclusion colength.
  std::size_t inclusion_exclusion_max_gens = 256;
};

}  // namespace cideal
