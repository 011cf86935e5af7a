#pragma once

// Coefficient ideals I_0 ... I_d of an m-primary monomial ideal.
//
// I_i is the largest ideal J containing I with e_j(J) = e_j(I) for all
// j <= i. Candidates are restricted to monomial ideals between I and its
// integral closure; every result is therefore a *monomial* coefficient
// ideal, and a second maximal element among those candidates is reported as
// an error rather than resolved.

#include <functional>
#include <string_view>
#include <vector>

#include "cideal/hilbert.hpp"
#include "cideal/limits.hpp"
#include "cideal/ring.hpp"

namespace cideal {

enum class ChainMethod { exhaustive, atoms };
enum class EVariant { E, E_prime };

std::string_view to_string(ChainMethod m);

/// The monomial ideals between `bottom` and `top`, each one being `bottom`
/// joined with an up-closed (under divisibility) subset of the gap.
class IntermediateLattice {
 public:
  const MonomialIdeal& bottom() const noexcept { return bottom_; }
  const MonomialIdeal& top() const noexcept { return top_; }
  const std::vector<ExponentVec>& gap() const noexcept { return gap_; }

  /// Visits every intermediate ideal exactly once, in a fixed order.
  void for_each(const std::function<void(const MonomialIdeal&)>& visit) const;
  std::vector<MonomialIdeal> collect() const;

 private:
  friend IntermediateLattice enumerate_intermediate(const MonomialIdeal&, const MonomialIdeal&, const Limits&);
  IntermediateLattice(MonomialIdeal bottom, MonomialIdeal top, std::vector<ExponentVec> gap);

  MonomialIdeal bottom_;
  MonomialIdeal top_;
  std::vector<ExponentVec> gap_;
  // multiples_[k]: gap indices (all > k) of proper multiples of gap_[k].
  std::vector<std::vector<std::size_t>> multiples_;
};

/// Throws CapExceeded when the gap is larger than limits.gap_cap.
IntermediateLattice enumerate_intermediate(const MonomialIdeal& bottom, const MonomialIdeal& top,
                                           const Limits& limits = {});

/// J in E_i(I) (or E_i'(I)): J contains I (resp. ~I) and e_j(J) = e_j(I)
/// for j <= i. Requires I subset of J.
bool is_in_E(const MonomialIdeal& J, const MonomialIdeal& I, int i, EVariant variant = EVariant::E,
             const Limits& limits = {});

/// Members of E_i(I) among the ideals between I and its integral closure.
std::vector<MonomialIdeal> members_of_E(const MonomialIdeal& I, int i, const Limits& limits = {});

/// The i-th (monomial) coefficient ideal. `atoms` is cross-checked against
/// `exhaustive` whenever the gap is within limits.gap_cap.
MonomialIdeal coefficient_ideal(const MonomialIdeal& I, int i, ChainMethod method = ChainMethod::atoms,
                                const Limits& limits = {});

/// For level i, a monomial m just outside chain[i] and an index j <= i
/// where adding it changes e_j.
struct MaximalityWitness {
  int level = 0;
  ExponentVec monomial;
  int mismatch_index = 0;
};

struct CoefficientChain {
  MonomialIdeal base;
  /// chain[i] = I_i, i = 0..d.
  std::vector<MonomialIdeal> chain;
  HilbertFit coefficients;
  std::vector<HilbertFit> per_ideal_fits;
  ChainMethod method = ChainMethod::atoms;
  std::vector<MaximalityWitness> maximality_witnesses;
};

/// Computes I_0..I_d and asserts the chain invariants (containments,
/// I_0 = integral closure, I_d = Ratliff-Rush closure, coefficient
/// agreement, maximality); a violation throws ConsistencyError.
CoefficientChain coefficient_chain(const MonomialIdeal& I, ChainMethod method = ChainMethod::atoms,
                                   const Limits& limits = {});

}  // namespace cideal
