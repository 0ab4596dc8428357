#include "cyclojones/bracket.hpp"

#include <numeric>
#include <string>

#include "cyclojones/sweep.hpp"

namespace cyclojones {

namespace {

LaurentPoly a_mono(const BigInt& c, Exponent e) {
  return LaurentPoly::monomial(c, e, Variable::A);
}

int sign_of_power(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

LaurentPoly torus_jones(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw DomainError("torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                      ") needs coprime p, q >= 1");
  LaurentPoly numerator({{0, 1}, {p + 1, -1}, {q + 1, -1}, {p + q, 1}});
  LaurentPoly denominator({{0, 1}, {2, -1}});
  return divide_exact(numerator, denominator).shifted((p - 1) * (q - 1) / 2);
}

LaurentPoly bracket_wnk_base(std::int64_t n) {
  const std::int64_t torus_n = n >= 0 ? n : -1 - n;
  const std::int64_t writhe = n * n + n;
  LaurentPoly v = torus_n == 0 ? LaurentPoly::constant(1)
                               : torus_jones(torus_n, torus_n + 1);
  // (-A)^(3w) V(A^-4)
  return substitute_power(v, -4, Variable::A)
      .scaled(sign_of_power(3 * writhe), 3 * writhe);
}

BracketLevel::BracketLevel(std::int64_t k, std::int64_t lo, std::vector<LaurentPoly> values)
    : k_(k), lo_(lo), values_(std::move(values)) {
  for (const auto& v : values_)
    if (v.variable() != Variable::A)
      throw TagError("bracket levels hold polynomials in A");
}

const LaurentPoly& BracketLevel::at(std::int64_t n) const {
  if (!contains(n))
    throw WindowError("<W(" + std::to_string(n) + "," + std::to_string(k_) +
                      ")> outside computed window [" + std::to_string(lo()) + ", " +
                      std::to_string(hi()) + "]");
  return values_[static_cast<std::size_t>(n - lo_)];
}

BracketLevel base_level(std::int64_t radius) {
  std::vector<LaurentPoly> values;
  for (std::int64_t n = -radius; n <= radius; ++n) values.push_back(bracket_wnk_base(n));
  return BracketLevel(0, -radius, std::move(values));
}

LaurentPoly s_sum(std::int64_t n, const BracketLevel& level) {
  if (n == -1) return LaurentPoly(Variable::A);
  if (n < -1) return -s_sum(-n - 2, level);
  LaurentPoly sum(Variable::A);
  for (std::int64_t i = 0; i <= n; ++i)
    sum += level.g(-n + 2 * i).shifted(n - 2 * i);
  return sum;
}

LaurentPoly next_bracket(std::int64_t n, const BracketLevel& level) {
  static const LaurentPoly kink_factor = a_mono(1, -1) - a_mono(1, 3);
  LaurentPoly out = (kink_factor * s_sum(n, level)).shifted(n);
  out -= level.at(n - 2).shifted(2 * n - 1);
  return out;
}

LaurentPoly s_prime(std::int64_t n, std::int64_t k) {
  const Exponent outer = n * n - 2 * k * n - 6 * n + 2 * k * k - k - 10;
  LaurentPoly inner({{4 * k * n + 12 * n + 12 * k + 16, -1},
                     {4 * k * n + 8 * n + 4 * k, 1},
                     {4 * n + 8 * k + 8, 1},
                     {8 * n, -1}},
                    Variable::A);
  return inner.scaled(sign_of_power(k), outer);
}

std::vector<BracketLevel> bracket_levels(std::int64_t radius, std::int64_t k_max,
                                         Execution exec) {
  if (radius < 0 || k_max < 0) throw DomainError("bracket_levels needs radius, k_max >= 0");
  std::vector<BracketLevel> levels;
  levels.push_back(base_level(radius + 2 * k_max));
  for (std::int64_t j = 1; j <= k_max; ++j) {
    const std::int64_t r = radius + 2 * (k_max - j);
    levels.push_back(next_level(levels.back(), -r, r, exec));
  }
  return levels;
}

LaurentPoly bracket_wnk(const FamilyParams& p) {
  if (p.k == 0) return bracket_wnk_base(p.n);
  const std::int64_t radius = p.n < 0 ? -p.n : p.n;
  return bracket_levels(radius, p.k).back().at(p.n);
}

Exponent bracket_writhe_exponent(const FamilyParams& p) {
  const Exponent n = p.n, k = p.k;
  return 3 * (n + 1) * n + 3 * k * (2 * k + 1 - 2 * n);
}

LaurentPoly bracket_to_jones(const FamilyParams& p, const LaurentPoly& bracket) {
  if (bracket.variable() != Variable::A)
    throw TagError("bracket_to_jones expects a polynomial in A");
  const LaurentPoly scaled = bracket.scaled(sign_of_power(p.k), -bracket_writhe_exponent(p));
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(scaled.size());
  for (const auto& [e, c] : scaled.terms()) {
    if (e % 4 != 0)
      throw ConversionError("bracket of " + to_string(p) + " has A-exponent " +
                            std::to_string(e) + " after writhe removal, not a multiple of 4");
    terms.emplace_back(-e / 4, c);
  }
  return LaurentPoly(std::move(terms), Variable::t);
}

LaurentPoly jones_to_bracket(const FamilyParams& p, const LaurentPoly& jones) {
  if (jones.variable() != Variable::t)
    throw TagError("jones_to_bracket expects a polynomial in t");
  return substitute_power(jones, -4, Variable::A)
      .scaled(sign_of_power(p.k), bracket_writhe_exponent(p));
}

}  // namespace cyclojones
