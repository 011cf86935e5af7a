#include <algorithm>
#include <string>

#include "cideal/closures.hpp"
#include "cideal/errors.hpp"

namespace cideal {

namespace {

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapExceeded("exponents too large for exact Newton membership");
  return r;
}

Wide checked_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw CapExceeded("exponents too large for exact Newton membership");
  return r;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw CapExceeded("exponents too large for exact Newton membership");
  return r;
}

// Fraction-free (Bareiss) determinant of an n x n matrix, row-major.
Wide determinant(std::vector<Wide> m, std::size_t n) {
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Wide num = checked_sub(checked_mul(m[i * n + j], m[k * n + k]), checked_mul(m[i * n + k], m[k * n + j]));
        m[i * n + j] = num / prev;  // exact by Sylvester's identity
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[n * n - 1];
}

std::string wide_to_string(Wide x) {
  if (x == 0) return "0";
  const bool neg = x < 0;
  std::string s;
  while (x != 0) {
    int digit = static_cast<int>(x % 10);
    s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
    x /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

mpq_class ratio(Wide num, Wide den) {
  mpq_class q(mpz_class(wide_to_string(num)), mpz_class(wide_to_string(den)));
  q.canonicalize();
  return q;
}

// Tries the vertex of {lambda >= 0, sum lambda = 1, G lambda <= v} with
// support `subset` and tight coordinate rows `tight`.
std::optional<NewtonWitness> try_vertex(std::span<const Exponent> v, const MonomialIdeal& I,
                                        const std::vector<std::size_t>& subset, const std::vector<std::size_t>& tight) {
  const std::size_t s = subset.size();
  const std::size_t d = I.dim();
  // Row 0: sum of weights; row r+1: coordinate tight[r].
  std::vector<Wide> a(s * s);
  std::vector<Wide> rhs(s);
  for (std::size_t c = 0; c < s; ++c) a[c] = 1;
  rhs[0] = 1;
  for (std::size_t r = 0; r + 1 < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) a[(r + 1) * s + c] = I.generator(subset[c])[tight[r]];
    rhs[r + 1] = v[tight[r]];
  }
  const Wide det = determinant(a, s);
  if (det == 0) return std::nullopt;

  // Cramer: lambda_c = det_c / det.
  std::vector<Wide> dets(s);
  for (std::size_t c = 0; c < s; ++c) {
    std::vector<Wide> ac = a;
    for (std::size_t r = 0; r < s; ++r) ac[r * s + c] = rhs[r];
    dets[c] = determinant(std::move(ac), s);
    if ((dets[c] < 0 && det > 0) || (dets[c] > 0 && det < 0)) return std::nullopt;
  }
  // G lambda <= v on every coordinate, scaled by det.
  for (std::size_t j = 0; j < d; ++j) {
    Wide lhs = 0;
    for (std::size_t c = 0; c < s; ++c) lhs = checked_add(lhs, checked_mul(I.generator(subset[c])[j], dets[c]));
    const Wide bound = checked_mul(v[j], det);
    if (det > 0 ? lhs > bound : lhs < bound) return std::nullopt;
  }

  NewtonWitness w;
  w.point.assign(v.begin(), v.end());
  for (std::size_t c = 0; c < s; ++c) {
    if (dets[c] == 0) continue;
    auto g = I.generator(subset[c]);
    w.subset.emplace_back(g.begin(), g.end());
    w.weights.push_back(ratio(dets[c], det));
  }
  return w;
}

// Calls f on each k-subset of [0, n) in lexicographic order until f returns true.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<NewtonWitness> newton_membership(std::span<const Exponent> v, const MonomialIdeal& I) {
  if (v.size() != I.dim()) throw DimensionMismatch("monomial length does not match the ring dimension");
  const std::size_t d = I.dim();
  const std::size_t k = I.num_generators();
  if (I.contains(v)) {
    for (std::size_t g = 0; g < k; ++g) {
      auto gen = I.generator(g);
      if (std::equal(gen.begin(), gen.end(), v.begin(), [](Exponent a, Exponent b) { return a <= b; }))
        return NewtonWitness{ExponentVec(v.begin(), v.end()), {ExponentVec(gen.begin(), gen.end())}, {mpq_class(1)}};
    }
  }
  // A feasible polytope has a vertex; at a vertex the support has size s
  // and is pinned by s-1 tight coordinates plus the weight-sum row.
  std::optional<NewtonWitness> found;
  for (std::size_t s = 2; s <= std::min(k, d + 1) && !found; ++s) {
    for_each_subset(k, s, [&](const std::vector<std::size_t>& subset) {
      return for_each_subset(d, s - 1, [&](const std::vector<std::size_t>& tight) {
        found = try_vertex(v, I, subset, tight);
        return found.has_value();
      });
    });
  }
  return found;
}

ClosureResult integral_closure(const MonomialIdeal& I, const Limits& limits) {
  auto bounds = pure_power_bounds(I);
  if (!bounds) throw NotMPrimary("ideal " + to_string(I) + " is not m-primary");
  const std::size_t d = I.dim();

  // Closed box prod [0, b_j].
  ExponentVec sides(*bounds);
  std::int64_t volume = 1;
  for (auto& side : sides) {
    side += 1;
    if (volume > limits.max_box_volume / side)
      throw CapExceeded("integral closure box exceeds the configured cap of " + std::to_string(limits.max_box_volume));
    volume *= side;
  }
  std::vector<std::size_t> strides(d, 1);
  for (std::size_t j = d; j-- > 1;) strides[j - 1] = strides[j] * static_cast<std::size_t>(sides[j]);

  // The closure is an ideal: a point with a member just below it is a member,
  // so only the boundary needs an exact test. Lexicographic order visits
  // every p - e_j before p.
  std::vector<char> member(static_cast<std::size_t>(volume), 0);
  std::vector<Exponent> flat;
  ExponentVec p(d, 0);
  std::size_t idx = 0;
  do {
    bool in = false;
    for (std::size_t j = 0; j < d && !in; ++j) in = p[j] > 0 && member[idx - strides[j]];
    if (!in) {
      in = newton_membership(p, I).has_value();
      if (in) flat.insert(flat.end(), p.begin(), p.end());
    }
    member[idx++] = in;
  } while (next_in_box(p, sides));

  MonomialIdeal closure = MonomialIdeal::from_flat(I.ring_ptr(), flat);
  if (!closure.contains(I)) throw ConsistencyError("integral closure does not contain " + to_string(I));
  IntegralCertificate cert;
  for (std::size_t g = 0; g < closure.num_generators(); ++g) {
    auto w = newton_membership(closure.generator(g), I);
    if (!w) throw ConsistencyError("closure generator lost its Newton witness");
    cert.witnesses.push_back(std::move(*w));
  }
  return {std::move(closure), ClosureKind::integral, std::move(cert)};
}

}  // namespace cideal
