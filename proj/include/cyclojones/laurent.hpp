#pragma once

// Sparse Laurent polynomials in one variable with arbitrary-precision
// integer coefficients, plus exact evaluation at roots of unity.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclojones/errors.hpp"

namespace cyclojones {

using BigInt = mpz_class;
using Exponent = std::int64_t;

// Label of the polynomial variable. t is the Jones variable, A the bracket
// variable; the two are related by t = A^-4.
enum class Variable { t, A };

char variable_name(Variable v);

class LaurentPoly {
 public:
  using Term = std::pair<Exponent, BigInt>;

  explicit LaurentPoly(Variable v = Variable::t) : var_(v) {}

  // Duplicate exponents are summed and zero coefficients dropped.
  LaurentPoly(std::vector<Term> terms, Variable v = Variable::t);

  static LaurentPoly constant(const BigInt& c, Variable v = Variable::t);
  static LaurentPoly monomial(const BigInt& c, Exponent e,
                              Variable v = Variable::t);
  // Dense coefficients: coeffs[i] multiplies x^(low + i).
  static LaurentPoly from_dense(const std::vector<BigInt>& coeffs,
                                Exponent low, Variable v = Variable::t);

  Variable variable() const noexcept { return var_; }
  // Terms in strictly ascending exponent order, no zero coefficients.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const BigInt& leading_coefficient() const;
  BigInt coefficient(Exponent e) const;

  // Dense coefficient vector from min_exponent() to max_exponent().
  std::vector<BigInt> dense() const;

  // c * x^e * (*this)
  LaurentPoly scaled(const BigInt& c, Exponent e) const;
  LaurentPoly shifted(Exponent e) const { return scaled(1, e); }
  // P(x^-1)
  LaurentPoly reversed() const;
  LaurentPoly retagged(Variable v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  void check_tag(const LaurentPoly& other) const;
  LaurentPoly& add_scaled(const LaurentPoly& other, int sign);

  Variable var_;
  std::vector<Term> terms_;
};

// Every exponent multiplied by e; the result carries tag `to`.
LaurentPoly substitute_power(const LaurentPoly& p, Exponent e, Variable to);

// R with q * R == p, or nullopt when q does not divide p.
std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q);
// As try_divide, but throws InexactDivisionError on a nonzero remainder.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

bool is_symmetric(const LaurentPoly& p);
// n with P(x^-1) = x^n P(x), if any.
std::optional<Exponent> palindromic_shift(const LaurentPoly& p);
// a with P(x^-1) = -x^a P(x), if any.
std::optional<Exponent> is_antipalindromic(const LaurentPoly& p);

struct ValueAtOne {
  BigInt value;
  BigInt derivative;
  friend bool operator==(const ValueAtOne&, const ValueAtOne&) = default;
};
ValueAtOne value_and_derivative_at_one(const LaurentPoly& p);

// max exponent - min exponent
Exponent span(const LaurentPoly& p);

// Element of Z[zeta_N], stored as a residue modulo Phi_N of degree < phi(N).
struct ResidueElement {
  std::int64_t modulus_index = 2;
  std::vector<BigInt> coeffs;

  static ResidueElement zero(std::int64_t n);
  static ResidueElement constant(std::int64_t n, const BigInt& c);

  bool is_zero() const;
  // True when the residue is the constant c.
  bool equals_constant(const BigInt& c) const;
  // Numeric value at zeta_N^j = exp(2 pi i j / N).
  std::complex<double> embed(std::int64_t j = 1) const;

  ResidueElement operator*(const ResidueElement& other) const;
  ResidueElement operator+(const ResidueElement& other) const;
  ResidueElement operator-() const;
  friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
};

// P mod Phi_N, with x^-m read as x^((-m) mod N).
ResidueElement evaluate_residue(const LaurentPoly& p, std::int64_t n);

// P(exp(2 pi i j / n)) in double precision.
std::complex<double> evaluate_complex(const LaurentPoly& p, std::int64_t n,
                                      std::int64_t j);

// Text form, e.g. "t^-2 - t^-1 + 1 - t + t^2".
std::string to_string(const LaurentPoly& p);
LaurentPoly parse_poly(std::string_view text);

}  // namespace cyclojones
