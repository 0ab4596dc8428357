#pragma once

// The knot family W(n,k): closed-form Jones polynomial, symmetry
// classification, writhe, crossing bound, Mersenne witnesses.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclojones/laurent.hpp"

namespace cyclojones {

struct FamilyParams {
  std::int64_t n = 0;
  std::int64_t k = 0;

  FamilyParams() = default;
  // Throws DomainError when k < 0.
  FamilyParams(std::int64_t n_, std::int64_t k_);

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

std::string to_string(const FamilyParams& p);

// The numerator of the closed form:
// -t^((k+2)n+1) + t^((k+1)(n+1)) (t^(k+1) + 1) - t^(k(n+3)+1) + t - 1
LaurentPoly d_polynomial(const FamilyParams& p);

// Exponent of the monomial prefactor of the closed form.
Exponent jones_prefactor_exponent(const FamilyParams& p);

// V_W(n,k)(t). Verifies exact division and V(1) = 1, V'(1) = 0; failures
// throw InconsistencyError.
LaurentPoly jones_wnk(const FamilyParams& p);

std::int64_t quadratic_f(std::int64_t k);  // k^2 + k - 1
std::int64_t quadratic_g(std::int64_t k);  // 2k^2 - 1

enum class SymmetryFamily { NotSymmetric, FamilyKMinus1, FamilyK, Family2K, Family2KPlus1 };

const char* family_name(SymmetryFamily f);

struct SymmetryClass {
  SymmetryFamily family = SymmetryFamily::NotSymmetric;
  // Present iff symmetric: odd m with V = phi_tilde(m).
  std::optional<std::int64_t> m;
  // Which quadratic produced m ('f' or 'g') and its argument.
  std::optional<char> source;
  std::optional<std::int64_t> source_argument;

  bool symmetric() const { return family != SymmetryFamily::NotSymmetric; }
  friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

// Arithmetic classification of (n,k), cross-checked against the polynomial:
// symmetric iff jones_wnk is symmetric, and then jones_wnk == phi_tilde(m).
// For k = 0 every member is reported NotSymmetric; see is_trivial_unknot.
SymmetryClass classify_symmetry(const FamilyParams& p);
// The arithmetic rule alone, without computing any polynomial.
SymmetryClass classify_by_parameters(const FamilyParams& p);

// W(n,0) for n in {1,0,-1,-2}, and W(0,1).
bool is_trivial_unknot(const FamilyParams& p);

std::int64_t writhe_wnk(const FamilyParams& p);

// k^2 + (n+k)^2 - 1, for n >= 0, k >= 0, n + k > 0.
std::int64_t crossing_bound(const FamilyParams& p);

struct MersenneWitness {
  std::int64_t exponent;  // p
  std::int64_t mersenne;  // N = 2^p - 1
  std::int64_t k;
  FamilyParams even;  // (2k, k)
  FamilyParams odd;   // (2k+1, k)
};

// For p > 2 with 2^p - 1 prime: both knots have Jones polynomial Phi_sym_2N.
// With check_polynomials the two Jones polynomials are computed and compared
// to Phi_sym_2N; their span is N - 1, so this is only practical for p <= 19.
MersenneWitness mersenne_knot(std::int64_t p, bool check_polynomials = true);

// "1", "Phi_sym_<2m>" when m is prime, otherwise "Phi_tilde_<2m>".
std::string phi_tilde_name(std::int64_t m);

struct TableRow {
  FamilyParams params;
  SymmetryClass classification;
  std::string polynomial_name;
  std::int64_t crossing_bound;
  LaurentPoly jones;
};

// For k = 1..k_max the quadruplet (k-1,k), (k,k), (2k,k), (2k+1,k).
std::vector<TableRow> generate_table(std::int64_t k_max);

}  // namespace cyclojones
