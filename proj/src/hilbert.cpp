#include "cideal/hilbert.hpp"

#include <optional>
#include <string>

#include "cideal/errors.hpp"

namespace cideal {

mpz_class binomial(const mpz_class& x, unsigned k) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

mpz_class HilbertFit::evaluate(std::int64_t z) const {
  mpz_class total = 0;
  for (int i = 0; i <= degree; ++i) {
    mpz_class term = mpz_class(static_cast<long>(e[i])) * binomial(mpz_class(static_cast<long>(z + degree - i)),
                                                                    static_cast<unsigned>(degree - i));
    if (i % 2) total -= term;
    else total += term;
  }
  return total;
}

std::int64_t hilbert_samuel_value(const MonomialIdeal& I, int n, const Limits& limits) {
  if (n < 0) throw ValidationError("Hilbert-Samuel index must be non-negative");
  if (n > limits.max_hilbert_n) throw CapExceeded("n = " + std::to_string(n) + " exceeds the Hilbert cap");
  if (!is_m_primary(I)) throw NotMPrimary("ideal " + to_string(I) + " is not m-primary");
  return colength(power(I, n + 1), ColengthMethod::box_enumeration, limits);
}

std::int64_t assoc_graded_value(const MonomialIdeal& I, int n, const Limits& limits) {
  if (n == 0) return colength(I, ColengthMethod::box_enumeration, limits);
  return hilbert_samuel_value(I, n, limits) - hilbert_samuel_value(I, n - 1, limits);
}

namespace {

// Polynomial through seq[offset .. offset+max_degree], kept as forward
// differences at the window's left end.
struct Window {
  int left;  // absolute index of the first value
  std::vector<mpq_class> differences;

  mpq_class at(std::int64_t z) const {
    mpq_class total = 0;
    const mpz_class t = z - left;
    for (std::size_t k = 0; k < differences.size(); ++k) total += differences[k] * binomial(t, static_cast<unsigned>(k));
    return total;
  }
};

Window make_window(const LengthSequence& seq, std::size_t offset, int max_degree) {
  std::vector<mpq_class> row;
  for (int k = 0; k <= max_degree; ++k) row.emplace_back(static_cast<long>(seq.values[offset + k]));
  Window w{seq.start + static_cast<int>(offset), {}};
  for (int k = 0; k <= max_degree; ++k) {
    w.differences.push_back(row[0]);
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return w;
}

std::optional<HilbertFit> try_window(const LengthSequence& seq, std::size_t offset, int max_degree,
                                     int validate_extra) {
  const Window w = make_window(seq, offset, max_degree);
  const std::size_t last = offset + max_degree + validate_extra;
  for (std::size_t i = offset + max_degree + 1; i <= last; ++i)
    if (w.at(seq.start + static_cast<std::int64_t>(i)) != mpq_class(static_cast<long>(seq.values[i])))
      return std::nullopt;

  int degree = -1;
  for (int k = 0; k <= max_degree; ++k)
    if (w.differences[k] != 0) degree = k;

  // Change to the basis B_k(z) = binom(z + k, k). B_k vanishes at
  // z = -1..-k and B_{j-1}(-j) = (-1)^{j-1}, so evaluating at
  // z = -1, -2, ... gives a unit-triangular system.
  std::vector<mpq_class> c;
  for (int j = 1; j <= degree + 1; ++j) {
    mpq_class rest = w.at(-j);
    for (int k = 0; k + 1 < j; ++k) rest -= c[k] * mpq_class(binomial(mpz_class(k - j), static_cast<unsigned>(k)));
    c.push_back((j - 1) % 2 ? mpq_class(-rest) : rest);
  }

  HilbertFit fit;
  fit.degree = degree;
  for (int i = 0; i <= degree; ++i) {
    mpq_class ei = i % 2 ? mpq_class(-c[degree - i]) : c[degree - i];
    ei.canonicalize();
    if (ei.get_den() != 1)
      throw ConsistencyError("fitted polynomial has a non-integer coefficient " + ei.get_str());
    if (!ei.get_num().fits_slong_p()) throw CapExceeded("Hilbert coefficient does not fit in 64 bits");
    fit.e.push_back(ei.get_num().get_si());
  }
  fit.window_start = w.left;
  fit.validated_through = seq.start + static_cast<int>(last);
  fit.values = seq;
  return fit;
}

std::size_t windows_available(const LengthSequence& seq, int max_degree, int validate_extra) {
  const std::size_t need = static_cast<std::size_t>(max_degree + 1 + validate_extra);
  return seq.values.size() >= need ? seq.values.size() - need + 1 : 0;
}

}  // namespace

HilbertFit fit_integer_polynomial(const LengthSequence& seq, int max_degree, int validate_extra) {
  if (max_degree < 0 || validate_extra < 0) throw ValidationError("degree and validation count must be >= 0");
  const std::size_t windows = windows_available(seq, max_degree, validate_extra);
  if (windows == 0)
    throw NoStableWindow("sequence of " + std::to_string(seq.values.size()) + " values is too short for degree " +
                         std::to_string(max_degree) + " with " + std::to_string(validate_extra) + " checks");
  for (std::size_t offset = 0; offset < windows; ++offset)
    if (auto fit = try_window(seq, offset, max_degree, validate_extra)) return *fit;
  throw NoStableWindow("no window of " + std::to_string(max_degree + 1) + " values stabilized");
}

HilbertFit e_coefficients(const MonomialIdeal& I, const Limits& limits) {
  if (!is_m_primary(I)) throw NotMPrimary("ideal " + to_string(I) + " is not m-primary");
  const int d = static_cast<int>(I.dim());
  PowerLadder powers(I);
  LengthSequence seq;
  std::size_t tried = 0;
  for (int n = 0; n <= limits.max_hilbert_n; ++n) {
    seq.values.push_back(colength(powers.get(n + 1), ColengthMethod::box_enumeration, limits));
    // Each new value completes exactly one new window; earlier ones failed.
    if (windows_available(seq, d, limits.validate_extra) > tried) {
      if (auto fit = try_window(seq, tried, d, limits.validate_extra)) {
        if (fit->degree != d)
          throw ConsistencyError("Hilbert-Samuel polynomial of " + to_string(I) + " has degree " +
                                 std::to_string(fit->degree) + ", expected " + std::to_string(d));
        return *fit;
      }
      ++tried;
    }
  }
  throw NoStableWindow("Hilbert-Samuel function of " + to_string(I) + " did not stabilize by n = " +
                       std::to_string(limits.max_hilbert_n));
}

const HilbertFit& FitCache::get(const MonomialIdeal& I) {
  std::vector<Exponent> key(I.flat().begin(), I.flat().end());
  {
    std::lock_guard lock(mutex_);
    if (auto it = fits_.find(key); it != fits_.end()) return it->second;
  }
  HilbertFit fit = e_coefficients(I, limits_);
  std::lock_guard lock(mutex_);
  return fits_.try_emplace(std::move(key), std::move(fit)).first->second;
}

}  // namespace cideal
