#include <cctype>
#include <limits>

#include "cideal/errors.hpp"
#include "cideal/ring.hpp"

namespace cideal {

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {}

  ExponentVec parse() {
    ExponentVec v(ring_.dim(), 0);
    skip_space();
    if (at_end()) throw ParseError("empty monomial", pos_);
    if (peek() == '1') {
      ++pos_;
      skip_space();
      if (!at_end()) throw ParseError("unexpected text after '1'", pos_);
      return v;
    }
    parse_term(v);
    skip_space();
    while (!at_end()) {
      if (peek() != '*') throw ParseError("expected '*'", pos_);
      ++pos_;
      skip_space();
      parse_term(v);
      skip_space();
    }
    return v;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  static bool ident_char(char c, bool first) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           (!first && std::isdigit(static_cast<unsigned char>(c)));
  }

  void parse_term(ExponentVec& v) {
    const std::size_t start = pos_;
    if (at_end() || !ident_char(peek(), true)) throw ParseError("expected a variable name", pos_);
    while (!at_end() && ident_char(peek(), false)) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto index = ring_.index_of(name);
    if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);

    std::int64_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t digits = pos_;
      exponent = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        exponent = exponent * 10 + (peek() - '0');
        if (exponent > std::numeric_limits<Exponent>::max() / 2) throw ParseError("exponent too large", digits);
        ++pos_;
      }
      if (pos_ == digits) throw ParseError("expected an exponent after '^'", pos_);
      if (exponent == 0) throw ParseError("exponent must be positive", digits);
    }
    const std::int64_t total = static_cast<std::int64_t>(v[*index]) + exponent;
    if (total > std::numeric_limits<Exponent>::max() / 2) throw ParseError("exponent too large", start);
    v[*index] = static_cast<Exponent>(total);
  }

  std::string_view text_;
  const RingContext& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

ExponentVec parse_monomial(std::string_view text, const RingContext& ring) {
  return MonomialParser(text, ring).parse();
}

std::string format_monomial(std::span<const Exponent> v, const RingContext& ring) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var_names()[j];
    if (v[j] != 1) out += '^' + std::to_string(v[j]);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal parse_ideal(const std::vector<std::string>& generators, const RingPtr& ctx) {
  std::vector<ExponentVec> raw;
  raw.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    try {
      raw.push_back(parse_monomial(generators[i], *ctx));
    } catch (const ParseError& e) {
      throw ParseError("generator " + std::to_string(i) + " \"" + generators[i] + "\": " + e.message(), e.position());
    }
  }
  return normalize(raw, ctx);
}

// Printed from the lex-largest generator down, so x^2 precedes x*y precedes y^2.
std::vector<std::string> format_generators(const MonomialIdeal& I) {
  std::vector<std::string> out;
  out.reserve(I.num_generators());
  for (std::size_t i = I.num_generators(); i-- > 0;) out.push_back(format_monomial(I.generator(i), I.ring()));
  return out;
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string out;
  for (const auto& g : format_generators(I)) out += (out.empty() ? "(" : ", ") + g;
  return out + ")";
}

}  // namespace cideal
