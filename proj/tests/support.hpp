#pragma once

// Generators and independent oracles shared by the test suites. Nothing here
// calls into the library's cyclotomic or bracket code.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclojones/laurent.hpp"

namespace cyclojones::testing {

// Seeded so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  // Up to max_terms terms, exponents in [-spread, spread], coefficients up to
  // 2^bits in magnitude. May be zero.
  LaurentPoly poly(int max_terms, Exponent spread, int bits = 20,
                   Variable v = Variable::t);
  LaurentPoly nonzero_poly(int max_terms, Exponent spread, int bits = 20,
                           Variable v = Variable::t);

 private:
  std::mt19937_64 rng_;
};

// gcd count.
std::int64_t brute_totient(std::int64_t n);

// Phi_n from the product of (t - zeta) over primitive n-th roots, rounded.
// Reliable for n up to about 50.
std::vector<std::int64_t> numeric_phi_coefficients(std::int64_t n);

// Kauffman bracket of the closure of a braid word by summing over all
// smoothing states. Generator +i is sigma_i (positive crossing), -i its
// inverse; strands are 1..strands.
LaurentPoly state_sum_bracket(int strands, const std::vector<int>& word);
// (-A^3)^-w <D> rewritten in t = A^-4.
LaurentPoly state_sum_jones(int strands, const std::vector<int>& word);
// (sigma_1 ... sigma_(p-1))^q
std::vector<int> torus_braid(int p, int q);

// Horner evaluation of P at a complex point.
std::complex<double> evaluate_at(const LaurentPoly& p, std::complex<double> z);

}  // namespace cyclojones::testing
