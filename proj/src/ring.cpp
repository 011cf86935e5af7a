#include "cideal/ring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cideal/errors.hpp"
#include "staircase.hpp"

namespace cideal {

namespace {

// Grids larger than this fall back to pairwise normalization.
constexpr std::size_t kStaircaseCells = std::size_t{1} << 22;

void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ring_ptr() != J.ring_ptr() && I.ring() != J.ring())
    throw DimensionMismatch("ideals live in different rings");
}

bool lex_less(const Exponent* a, const Exponent* b, std::size_t dim) {
  return std::lexicographical_compare(a, a + dim, b, b + dim);
}

std::vector<Exponent> normalize_flat(std::span<const Exponent> flat, std::size_t dim) {
  if (flat.empty()) return {};
  std::vector<std::size_t> extents(dim - 1, 0);
  for (std::size_t i = 0; i < flat.size(); i += dim)
    for (std::size_t j = 0; j + 1 < dim; ++j)
      extents[j] = std::max(extents[j], static_cast<std::size_t>(flat[i + j]) + 1);
  if (detail::grid_cells(extents, kStaircaseCells))
    return detail::Staircase(flat, dim, std::move(extents)).minimal_generators();
  return normalize_pairwise(flat, dim);
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

RingContext::RingContext(std::vector<std::string> var_names) : names_(std::move(var_names)) {
  if (names_.empty()) throw ValidationError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  }
}

std::shared_ptr<const RingContext> RingContext::standard(std::size_t dim) {
  std::vector<std::string> names;
  if (dim <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < dim; ++i) names.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return std::make_shared<const RingContext>(std::move(names));
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<Exponent> normalize_pairwise(std::span<const Exponent> flat, std::size_t dim) {
  const std::size_t count = flat.size() / dim;
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(&flat[a * dim], &flat[b * dim], dim); });

  // A divisor is lexicographically no larger, so each candidate only needs
  // checking against generators already accepted.
  std::vector<Exponent> out;
  for (std::size_t i : order) {
    const Exponent* v = &flat[i * dim];
    bool divisible = false;
    for (std::size_t k = 0; k < out.size() && !divisible; k += dim) {
      bool le = true;
      for (std::size_t j = 0; j < dim && le; ++j) le = out[k + j] <= v[j];
      divisible = le;
    }
    if (!divisible) out.insert(out.end(), v, v + dim);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(RingPtr ctx) : MonomialIdeal(std::move(ctx), std::vector<Exponent>{}) {}

MonomialIdeal::MonomialIdeal(RingPtr ctx, std::vector<Exponent> canonical)
    : ctx_(std::move(ctx)), flat_(std::move(canonical)) {
  if (!ctx_) throw ValidationError("null ring context");
  table_ = kernels::GeneratorTable(flat_, ctx_->dim());
}

MonomialIdeal MonomialIdeal::from_flat(RingPtr ctx, std::span<const Exponent> flat) {
  const std::size_t dim = ctx->dim();
  if (flat.size() % dim != 0) throw DimensionMismatch("exponent data is not a multiple of the ring dimension");
  for (Exponent e : flat)
    if (e < 0) throw ValidationError("negative exponent");
  return MonomialIdeal(std::move(ctx), normalize_flat(flat, dim));
}

MonomialIdeal MonomialIdeal::from_generators(RingPtr ctx, std::span<const ExponentVec> raw) {
  std::vector<Exponent> flat;
  flat.reserve(raw.size() * ctx->dim());
  for (const auto& v : raw) {
    if (v.size() != ctx->dim())
      throw DimensionMismatch("monomial of length " + std::to_string(v.size()) + " in a ring of dimension " +
                              std::to_string(ctx->dim()));
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return from_flat(std::move(ctx), flat);
}

MonomialIdeal MonomialIdeal::unit(RingPtr ctx) {
  std::vector<Exponent> one(ctx->dim(), 0);
  return MonomialIdeal(std::move(ctx), std::move(one));
}

std::vector<ExponentVec> MonomialIdeal::generators() const {
  std::vector<ExponentVec> out;
  out.reserve(num_generators());
  for (std::size_t i = 0; i < num_generators(); ++i) {
    auto g = generator(i);
    out.emplace_back(g.begin(), g.end());
  }
  return out;
}

bool MonomialIdeal::is_unit() const noexcept {
  return num_generators() == 1 && std::all_of(flat_.begin(), flat_.end(), [](Exponent e) { return e == 0; });
}

bool MonomialIdeal::contains(std::span<const Exponent> v) const {
  if (v.size() != dim()) throw DimensionMismatch("monomial length does not match the ring dimension");
  if (flat_.empty()) return false;
  // Sorted generators: only those with first exponent <= v[0] can divide v.
  const Exponent* col0 = table_.column(0);
  const std::size_t limit = static_cast<std::size_t>(std::upper_bound(col0, col0 + table_.size(), v[0]) - col0);
  return kernels::active().any_divides(table_, limit, v.data());
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  for (std::size_t i = 0; i < other.num_generators(); ++i)
    if (!contains(other.generator(i))) return false;
  return true;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_) && a.flat_ == b.flat_;
}

MonomialIdeal normalize(std::span<const ExponentVec> raw, const RingPtr& ctx) {
  return MonomialIdeal::from_generators(ctx, raw);
}

bool contains(const MonomialIdeal& ideal, std::span<const Exponent> v) { return ideal.contains(v); }

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) { return J.contains(I); }

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  std::vector<Exponent> flat(I.flat().begin(), I.flat().end());
  flat.insert(flat.end(), J.flat().begin(), J.flat().end());
  return MonomialIdeal::from_flat(I.ring_ptr(), flat);
}

MonomialIdeal add_monomial(const MonomialIdeal& I, std::span<const Exponent> m) {
  if (m.size() != I.dim()) throw DimensionMismatch("monomial length does not match the ring dimension");
  std::vector<Exponent> flat(I.flat().begin(), I.flat().end());
  flat.insert(flat.end(), m.begin(), m.end());
  return MonomialIdeal::from_flat(I.ring_ptr(), flat);
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  const std::size_t d = I.dim();
  std::vector<Exponent> flat;
  flat.reserve(I.num_generators() * J.num_generators() * d);
  for (std::size_t a = 0; a < I.num_generators(); ++a) {
    auto g = I.generator(a);
    for (std::size_t b = 0; b < J.num_generators(); ++b) {
      auto h = J.generator(b);
      for (std::size_t j = 0; j < d; ++j) flat.push_back(g[j] + h[j]);
    }
  }
  return MonomialIdeal::from_flat(I.ring_ptr(), flat);
}

MonomialIdeal power(const MonomialIdeal& I, int n) {
  if (n < 0) throw ValidationError("negative power");
  MonomialIdeal result = MonomialIdeal::unit(I.ring_ptr());
  for (int k = 0; k < n; ++k) result = k == 0 ? I : product(result, I);
  return result;
}

MonomialIdeal intersection(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  const std::size_t d = I.dim();
  std::vector<Exponent> flat;
  flat.reserve(I.num_generators() * J.num_generators() * d);
  for (std::size_t a = 0; a < I.num_generators(); ++a) {
    auto g = I.generator(a);
    for (std::size_t b = 0; b < J.num_generators(); ++b) {
      auto h = J.generator(b);
      for (std::size_t j = 0; j < d; ++j) flat.push_back(std::max(g[j], h[j]));
    }
  }
  return MonomialIdeal::from_flat(I.ring_ptr(), flat);
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) throw ValidationError("colon by the zero ideal");
  const std::size_t d = I.dim();
  std::optional<MonomialIdeal> result;
  std::vector<Exponent> flat;
  for (std::size_t b = 0; b < J.num_generators(); ++b) {
    auto g = J.generator(b);
    flat.clear();
    for (std::size_t a = 0; a < I.num_generators(); ++a) {
      auto h = I.generator(a);
      for (std::size_t j = 0; j < d; ++j) flat.push_back(std::max(h[j] - g[j], 0));
    }
    MonomialIdeal quotient = MonomialIdeal::from_flat(I.ring_ptr(), flat);
    result = result ? intersection(*result, quotient) : std::move(quotient);
  }
  return *result;
}

std::optional<ExponentVec> pure_power_bounds(const MonomialIdeal& I) {
  const std::size_t d = I.dim();
  ExponentVec bounds(d, kernels::kUnbounded);
  for (std::size_t a = 0; a < I.num_generators(); ++a) {
    auto g = I.generator(a);
    std::size_t support = d;
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (g[j] != 0) {
        support = j;
        ++nonzero;
      }
    if (nonzero == 0) {
      std::fill(bounds.begin(), bounds.end(), 0);
      return bounds;
    }
    if (nonzero == 1) bounds[support] = std::min(bounds[support], g[support]);
  }
  for (Exponent b : bounds)
    if (b == kernels::kUnbounded) return std::nullopt;
  return bounds;
}

bool is_m_primary(const MonomialIdeal& I) { return !I.is_unit() && pure_power_bounds(I).has_value(); }

bool next_in_box(ExponentVec& v, std::span<const Exponent> box) {
  for (std::size_t j = v.size(); j-- > 0;) {
    if (++v[j] < box[j]) return true;
    v[j] = 0;
  }
  return false;
}

namespace {

ExponentVec require_bounds(const MonomialIdeal& I) {
  auto bounds = pure_power_bounds(I);
  if (!bounds) throw NotMPrimary("ideal " + to_string(I) + " is not m-primary");
  return *bounds;
}

void require_box(const ExponentVec& bounds, const Limits& limits, std::int64_t pad = 0) {
  std::int64_t volume = 1;
  for (Exponent b : bounds) {
    const std::int64_t side = b + pad;
    if (side != 0 && volume > limits.max_box_volume / side)
      throw CapExceeded("box volume exceeds the configured cap of " + std::to_string(limits.max_box_volume));
    volume *= side;
  }
}

std::int64_t colength_inclusion_exclusion(const MonomialIdeal& I, const ExponentVec& box, const Limits& limits) {
  const std::size_t k = I.num_generators();
  if (k > limits.inclusion_exclusion_max_gens)
    throw CapExceeded("inclusion-exclusion limited to " + std::to_string(limits.inclusion_exclusion_max_gens) +
                      " generators, ideal has " + std::to_string(k));
  const std::size_t d = I.dim();
  // Signed count of box cells above lcm(S) over all generator subsets S.
  // Subsets are merged by their lcm as generators are added one at a time,
  // and an lcm that leaves the box contributes nothing, nor do its supersets.
  auto inside = [&](const ExponentVec& u) {
    for (std::size_t j = 0; j < d; ++j)
      if (u[j] >= box[j]) return false;
    return true;
  };
  std::map<ExponentVec, std::int64_t> weight{{ExponentVec(d, 0), 1}};
  for (std::size_t g = 0; g < k; ++g) {
    auto gen = I.generator(g);
    std::map<ExponentVec, std::int64_t> next = weight;
    for (const auto& [lcm, w] : weight) {
      ExponentVec joined(lcm);
      for (std::size_t j = 0; j < d; ++j) joined[j] = std::max(joined[j], gen[j]);
      if (!inside(joined)) continue;
      if ((next[joined] -= w) == 0) next.erase(joined);
    }
    weight = std::move(next);
  }
  std::int64_t total = 0;
  for (const auto& [lcm, w] : weight) {
    std::int64_t vol = 1;
    for (std::size_t j = 0; j < d; ++j) vol *= box[j] - lcm[j];
    total += w * vol;
  }
  return total;
}

}  // namespace

std::int64_t colength(const MonomialIdeal& I, ColengthMethod method, const Limits& limits) {
  const ExponentVec box = require_bounds(I);
  require_box(box, limits);
  const std::size_t d = I.dim();
  if (method == ColengthMethod::inclusion_exclusion) return colength_inclusion_exclusion(I, box, limits);
  if (d == 1) return box[0];
  std::vector<std::size_t> extents(box.begin(), box.end() - 1);
  return detail::Staircase(I.flat(), d, std::move(extents)).sum_clamped(box[d - 1]);
}

std::vector<ExponentVec> gap_monomials(const MonomialIdeal& I, const MonomialIdeal& J, const Limits& limits) {
  require_same_ring(I, J);
  const ExponentVec box = require_bounds(I);
  require_bounds(J);
  if (!is_subset(I, J)) throw InclusionViolated(to_string(I) + " is not contained in " + to_string(J));
  require_box(box, limits);

  const std::size_t d = I.dim();
  std::vector<ExponentVec> out;
  ExponentVec v(d, 0);
  if (std::any_of(box.begin(), box.end(), [](Exponent b) { return b == 0; })) return out;
  do {
    if (J.contains(v) && !I.contains(v)) out.push_back(v);
  } while (next_in_box(v, box));
  return out;
}

PowerLadder::PowerLadder(MonomialIdeal base) {
  powers_.push_back(MonomialIdeal::unit(base.ring_ptr()));
  powers_.push_back(std::move(base));
}

const MonomialIdeal& PowerLadder::get(int n) {
  if (n < 0) throw ValidationError("negative power");
  while (powers_.size() <= static_cast<std::size_t>(n)) powers_.push_back(product(powers_.back(), powers_[1]));
  return powers_[static_cast<std::size_t>(n)];
}

}  // namespace cideal
