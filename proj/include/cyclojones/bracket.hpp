#pragma once

// Kauffman brackets <W(n,k)> computed level by level in k from the kink
// recursion, starting from torus knots at k = 0. Independent of the closed
// form in wnk.hpp; the two are compared by the verify sweep.
//
// Normalization: <unknot with zero framing> = 1, and
// V_K(t) = (-A)^(-3 w(K)) <K> with t = A^-4.

#include <cstdint>
#include <vector>

#include "cyclojones/execution.hpp"
#include "cyclojones/laurent.hpp"
#include "cyclojones/wnk.hpp"

namespace cyclojones {

// Jones polynomial of the torus knot T(p,q), gcd(p,q) = 1, p,q >= 1.
LaurentPoly torus_jones(std::int64_t p, std::int64_t q);

// <W(n,0)>: W(n,0) = T(n,n+1) for n >= 0 and W(n,0) = W(-1-n,0) for n < 0.
LaurentPoly bracket_wnk_base(std::int64_t n);

// <W(n,k)> for n in [lo, hi], all polynomials in A.
class BracketLevel {
 public:
  BracketLevel(std::int64_t k, std::int64_t lo, std::vector<LaurentPoly> values);

  std::int64_t k() const noexcept { return k_; }
  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
  bool contains(std::int64_t n) const noexcept { return n >= lo() && n <= hi(); }
  // Throws WindowError outside [lo, hi].
  const LaurentPoly& at(std::int64_t n) const;
  // g_a = <W(-a-2, k)>
  const LaurentPoly& g(std::int64_t a) const { return at(-a - 2); }
  const std::vector<LaurentPoly>& values() const noexcept { return values_; }

 private:
  std::int64_t k_;
  std::int64_t lo_;
  std::vector<LaurentPoly> values_;
};

// Level 0 over [-radius, radius].
BracketLevel base_level(std::int64_t radius);

// S_n = sum_{i=0}^{n} A^(n-2i) g_(-n+2i), S_-1 = 0, S_n = -S_(|n|-2) for n < -1.
LaurentPoly s_sum(std::int64_t n, const BracketLevel& level);

// <W(n,k+1)> = (A^-1 - A^3) A^n S_n - A^(2n-1) <W(n-2,k)>
LaurentPoly next_bracket(std::int64_t n, const BracketLevel& level);

// Closed form of S_n (A^-8 - 1) at level k.
LaurentPoly s_prime(std::int64_t n, std::int64_t k);

// Levels 0..k_max, level j covering [-(radius + 2(k_max - j)), radius + 2(k_max - j)],
// so level k_max covers [-radius, radius].
std::vector<BracketLevel> bracket_levels(std::int64_t radius, std::int64_t k_max,
                                         Execution exec = Execution::parallel);

LaurentPoly bracket_wnk(const FamilyParams& p);

// A-exponent e in <W(n,k)> = (-1)^k A^e V(A^-4).
Exponent bracket_writhe_exponent(const FamilyParams& p);

// Requires tag A; throws ConversionError if an exponent of (-1)^k A^-e B is
// not divisible by 4.
LaurentPoly bracket_to_jones(const FamilyParams& p, const LaurentPoly& bracket);
LaurentPoly jones_to_bracket(const FamilyParams& p, const LaurentPoly& jones);

}  // namespace cyclojones
