#pragma once

// Hilbert-Samuel function of an m-primary monomial ideal and exact fitting
// of its eventual polynomial
//
//   P_I(z) = sum_{i=0}^{deg} (-1)^i e_i binom(z + deg - i, deg - i).

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "cideal/limits.hpp"
#include "cideal/ring.hpp"

namespace cideal {

struct LengthSequence {
  int start = 0;
  std::vector<std::int64_t> values;

  int end() const noexcept { return start + static_cast<int>(values.size()); }
  std::int64_t at(int n) const { return values.at(static_cast<std::size_t>(n - start)); }
  bool operator==(const LengthSequence&) const = default;
};

struct HilbertFit {
  /// Degree of the fitted polynomial; -1 for the zero polynomial.
  int degree = -1;
  /// e_0..e_degree in the signed binomial basis.
  std::vector<std::int64_t> e;
  int window_start = 0;
  int validated_through = 0;
  LengthSequence values;

  /// The fitted polynomial at z, exactly.
  mpz_class evaluate(std::int64_t z) const;

  bool operator==(const HilbertFit&) const = default;
};

/// lambda(A/I^{n+1}).
std::int64_t hilbert_samuel_value(const MonomialIdeal& I, int n, const Limits& limits = {});

/// lambda(I^n/I^{n+1}); lambda(A/I) for n = 0.
std::int64_t assoc_graded_value(const MonomialIdeal& I, int n, const Limits& limits = {});

/// Slides a window of max_degree+1 consecutive values from the left and
/// accepts the first whose interpolating polynomial also reproduces the
/// next `validate_extra` values. Throws NoStableWindow when none does.
HilbertFit fit_integer_polynomial(const LengthSequence& seq, int max_degree, int validate_extra);

/// e_0..e_d of I, evaluating lambda(A/I^{n+1}) for n = 0, 1, ... until a
/// window validates or `limits.max_hilbert_n` is passed.
HilbertFit e_coefficients(const MonomialIdeal& I, const Limits& limits = {});

/// Memoized e_coefficients keyed by canonical generators. Safe to share
/// between threads; all ideals passed in must live in the same ring.
class FitCache {
 public:
  explicit FitCache(Limits limits = {}) : limits_(limits) {}

  const HilbertFit& get(const MonomialIdeal& I);
  const Limits& limits() const noexcept { return limits_; }

 private:
  Limits limits_;
  std::mutex mutex_;
  std::map<std::vector<Exponent>, HilbertFit> fits_;
};

/// binom(x, k) for any integer x and k >= 0.
mpz_class binomial(const mpz_class& x, unsigned k);

}  // namespace cideal
