#pragma once

// Necessary conditions on knot Jones polynomials at 1, zeta_3, i and zeta_6,
// and what they rule out about cyclotomic divisors.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclojones/laurent.hpp"

namespace cyclojones {

struct SpecialValueReport {
  BigInt at_one;
  BigInt derivative_at_one;
  bool at_zeta3_is_one = false;
  // V(i) when it is +1 or -1.
  std::optional<int> at_i_value;
  // s with V(zeta_6) = +-(i sqrt 3)^s, and the sign.
  std::optional<int> at_zeta6_exponent;
  std::optional<int> at_zeta6_sign;
  bool passes_all = false;
};

// Exact checks in Z[zeta_N]; failures are reported, never thrown.
// Throws DomainError for the zero polynomial.
SpecialValueReport special_value_check(const LaurentPoly& p);

// N = p^k, 3p^k, 4p^k (p prime, k >= 0) or 6p^k (p != 3): Phi_N divides no
// knot Jones polynomial.
bool excluded_phi_index(std::int64_t n);

// False when 3 | k, since then Phi_6 divides phi_tilde(k). k must be odd.
bool phitilde_admissible(std::int64_t k);

// N <= max of the form 2f(k) or 2g(k), k >= 2.
std::vector<std::int64_t> realized_orders(std::int64_t max);

// 2 <= N <= max neither excluded nor realized.
std::vector<std::int64_t> open_question_candidates(std::int64_t max);

}  // namespace cyclojones
