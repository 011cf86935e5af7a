#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cideal/limits.hpp"
#include "cideal/ring.hpp"

namespace cideal {

enum class ClosureKind { ratliff_rush, integral };

/// Stopping evidence for the colon chain J_n = (I^{n+1} : I^n).
struct RatliffRushCertificate {
  /// First index of the stable run; the closure is J_{n_star}.
  int n_star = 0;
  /// Equalities J_n = J_{n+1} observed in a row from n_star.
  int stable_steps = 0;
  /// J_1, J_2, ... as computed, up to n_star + stable_steps.
  std::vector<MonomialIdeal> colon_chain;
};

/// x^point is integral over I: the generators in `subset`, weighted by
/// `weights` (non-negative, summing to 1), combine to a point <= `point`.
struct NewtonWitness {
  ExponentVec point;
  std::vector<ExponentVec> subset;
  std::vector<mpq_class> weights;
};

struct IntegralCertificate {
  /// One witness per minimal generator of the closure, in generator order.
  std::vector<NewtonWitness> witnesses;
};

struct ClosureResult {
  MonomialIdeal ideal;
  ClosureKind kind;
  std::variant<RatliffRushCertificate, IntegralCertificate> certificate;

  const RatliffRushCertificate& ratliff_rush() const { return std::get<RatliffRushCertificate>(certificate); }
  const IntegralCertificate& integral() const { return std::get<IntegralCertificate>(certificate); }
};

/// Entry n is lambda(~(I^{n+1}) / I^{n+1}).
struct DefectSeries {
  std::vector<std::int64_t> lengths;
};

/// Ratliff-Rush closure by colon stabilization, checked afterwards against
/// the Hilbert coefficients of I. Throws CapExceeded when the chain does not
/// settle by limits.rr_n_cap, ConsistencyError when the check fails.
/// Stabilization is observed over `rr_stable_steps` colons, not proven.
ClosureResult ratliff_rush(const MonomialIdeal& I, const Limits& limits = {});

/// Ratliff-Rush closure of I^n.
MonomialIdeal ratliff_rush_power(const MonomialIdeal& I, int n, const Limits& limits = {});

DefectSeries defect_series(const MonomialIdeal& I, int N, const Limits& limits = {});

/// Whether x^v lies in the integral closure of I, decided exactly over the
/// Newton polyhedron; the witness is a convex combination of at most d+1
/// generators bounded by v.
std::optional<NewtonWitness> newton_membership(std::span<const Exponent> v, const MonomialIdeal& I);

ClosureResult integral_closure(const MonomialIdeal& I, const Limits& limits = {});

}  // namespace cideal
