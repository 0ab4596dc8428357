#pragma once

// Cyclotomic polynomials and their symmetric variants, detection of
// cyclotomic (Mahler measure 1) Laurent polynomials, Mahler measure.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclojones/laurent.hpp"

namespace cyclojones {

std::int64_t euler_totient(std::int64_t n);

// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
bool is_prime(std::int64_t n);

// Phi_n in t. Results are memoized process-wide; safe to call concurrently.
const LaurentPoly& phi(std::int64_t n);

// t^(-phi(n)/2) Phi_n(t), n >= 3.
LaurentPoly phi_sym(std::int64_t n);

// For odd m: the product of phi_sym(2d) over divisors d > 1 of m, which is
// also the alternating polynomial t^-(m-1)/2 - ... + t^(m-1)/2. Both forms are
// built and compared; a mismatch throws InconsistencyError.
LaurentPoly phi_tilde(std::int64_t m);

struct CyclotomicFactor {
  std::int64_t index;
  int multiplicity;
  friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

// sign * t^monomial_shift * prod Phi_index^multiplicity, indices ascending.
struct CyclotomicFactorization {
  Exponent monomial_shift = 0;
  int sign = 1;
  std::vector<CyclotomicFactor> factors;

  LaurentPoly reconstruct() const;
  friend bool operator==(const CyclotomicFactorization&,
                         const CyclotomicFactorization&) = default;
};

std::optional<CyclotomicFactorization> is_cyclotomic_product(const LaurentPoly& p);

double mahler_measure(const LaurentPoly& p);

// Exponents j of the roots zeta_2m^j of phi_tilde(m): odd j in [1, 2m-1], j != m.
std::vector<std::int64_t> phitilde_root_exponents(std::int64_t m);

}  // namespace cyclojones
