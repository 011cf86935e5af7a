#pragma once

// Monomial ideals of k[x_1..x_d] localized at the maximal ideal.
//
// Only exponent data is ever stored: an ideal is its canonical minimal
// generating set, sorted lexicographically. Lengths of quotients are counts
// of standard monomials, so no coefficient field appears anywhere.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cideal/kernels.hpp"
#include "cideal/limits.hpp"

namespace cideal {

using Exponent = kernels::Exponent;
using ExponentVec = std::vector<Exponent>;

class RingContext {
 public:
  /// Validates that names are distinct identifiers; at least one is needed.
  explicit RingContext(std::vector<std::string> var_names);

  /// Context with generated names: x, y, z for d <= 3, else x1..xd.
  static std::shared_ptr<const RingContext> standard(std::size_t dim);

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& var_names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const RingContext&) const = default;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingContext>;

bool is_identifier(std::string_view s);

class MonomialIdeal {
 public:
  /// The zero ideal (empty generating set) of `ctx`.
  explicit MonomialIdeal(RingPtr ctx);

  /// Canonical form of the ideal generated by `raw`.
  static MonomialIdeal from_generators(RingPtr ctx, std::span<const ExponentVec> raw);
  /// Same, from row-major exponent data (`flat.size()` a multiple of dim).
  static MonomialIdeal from_flat(RingPtr ctx, std::span<const Exponent> flat);
  static MonomialIdeal unit(RingPtr ctx);

  const RingPtr& ring_ptr() const noexcept { return ctx_; }
  const RingContext& ring() const noexcept { return *ctx_; }
  std::size_t dim() const noexcept { return ctx_->dim(); }

  std::size_t num_generators() const noexcept { return table_.size(); }
  std::span<const Exponent> generator(std::size_t i) const {
    return {flat_.data() + i * dim(), dim()};
  }
  std::span<const Exponent> flat() const noexcept { return flat_; }
  std::vector<ExponentVec> generators() const;

  bool is_zero() const noexcept { return flat_.empty(); }
  bool is_unit() const noexcept;

  /// Membership of the monomial x^v.
  bool contains(std::span<const Exponent> v) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  const kernels::GeneratorTable& table() const noexcept { return table_; }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  MonomialIdeal(RingPtr ctx, std::vector<Exponent> canonical);

  RingPtr ctx_;
  std::vector<Exponent> flat_;
  kernels::GeneratorTable table_;
};

/// Canonical minimal generating set of the ideal generated by `raw`.
MonomialIdeal normalize(std::span<const ExponentVec> raw, const RingPtr& ctx);

/// Reference normalization by pairwise divisibility. Test oracle for the
/// staircase path used by `normalize`.
std::vector<Exponent> normalize_pairwise(std::span<const Exponent> flat, std::size_t dim);

bool contains(const MonomialIdeal& ideal, std::span<const Exponent> v);
/// I is a subset of J.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^n by iterated product; I^0 is the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, int n);
MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J);
/// (I : J). J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
/// I + (x^m).
MonomialIdeal add_monomial(const MonomialIdeal& I, std::span<const Exponent> m);

/// Proper, with a pure power of every variable among the generators.
bool is_m_primary(const MonomialIdeal& I);
/// For each variable the least b with x_i^b in I (all zero for the unit
/// ideal); nullopt if some variable has no pure power.
std::optional<ExponentVec> pure_power_bounds(const MonomialIdeal& I);

/// Advances v to the next point of the box prod [0, box_j) in lexicographic
/// order; false after the last point.
bool next_in_box(ExponentVec& v, std::span<const Exponent> box);

enum class ColengthMethod { box_enumeration, inclusion_exclusion };

/// lambda(A/I): number of monomials outside I.
std::int64_t colength(const MonomialIdeal& I, ColengthMethod method = ColengthMethod::box_enumeration,
                      const Limits& limits = {});

/// Monomials of J that are not in I, lexicographically sorted. Requires
/// I subset of J and both m-primary.
std::vector<ExponentVec> gap_monomials(const MonomialIdeal& I, const MonomialIdeal& J,
                                       const Limits& limits = {});

/// Lazily computed powers I, I^2, ... of one ideal.
class PowerLadder {
 public:
  explicit PowerLadder(MonomialIdeal base);
  /// I^n for n >= 0.
  const MonomialIdeal& get(int n);
  const MonomialIdeal& base() const noexcept { return powers_[1]; }

 private:
  std::deque<MonomialIdeal> powers_;  // references from get() stay valid
};

// Text form. Grammar: monomial := term ('*' term)* | "1",
// term := identifier ('^' positive-integer)?; whitespace is ignored and
// repeated variables add their exponents.
ExponentVec parse_monomial(std::string_view text, const RingContext& ring);
std::string format_monomial(std::span<const Exponent> v, const RingContext& ring);
MonomialIdeal parse_ideal(const std::vector<std::string>& generators, const RingPtr& ctx);
std::vector<std::string> format_generators(const MonomialIdeal& I);
/// "(x^2, y^2)"; the zero ideal prints as "(0)".
std::string to_string(const MonomialIdeal& I);

}  // namespace cideal
