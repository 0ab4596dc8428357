#include "cyclojones/wnk.hpp"

#include <string>

#include "cyclojones/cyclotomic.hpp"

namespace cyclojones {

FamilyParams::FamilyParams(std::int64_t n_, std::int64_t k_) : n(n_), k(k_) {
  if (k < 0) throw DomainError("W(n,k) needs k >= 0, got k = " + std::to_string(k));
}

std::string to_string(const FamilyParams& p) {
  return "W(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
}

LaurentPoly d_polynomial(const FamilyParams& p) {
  const Exponent n = p.n, k = p.k;
  return LaurentPoly({{(k + 2) * n + 1, -1},
                      {(k + 1) * (n + 1) + k + 1, 1},
                      {(k + 1) * (n + 1), 1},
                      {k * (n + 3) + 1, -1},
                      {1, 1},
                      {0, -1}});
}

Exponent jones_prefactor_exponent(const FamilyParams& p) {
  const Exponent n = p.n, k = p.k;
  return n * (n - 1) / 2 + k * (k - 1) - 2 * n * k;
}

LaurentPoly jones_wnk(const FamilyParams& p) {
  static const LaurentPoly t2_minus_1({{2, 1}, {0, -1}});
  LaurentPoly v = divide_exact(d_polynomial(p), t2_minus_1)
                      .shifted(jones_prefactor_exponent(p));
  const ValueAtOne at_one = value_and_derivative_at_one(v);
  if (at_one.value != 1 || at_one.derivative != 0)
    throw InconsistencyError("V_" + to_string(p) + " fails V(1)=1, V'(1)=0: " +
                             to_string(v));
  return v;
}

std::int64_t quadratic_f(std::int64_t k) { return k * k + k - 1; }
std::int64_t quadratic_g(std::int64_t k) { return 2 * k * k - 1; }

const char* family_name(SymmetryFamily f) {
  switch (f) {
    case SymmetryFamily::NotSymmetric: return "NotSymmetric";
    case SymmetryFamily::FamilyKMinus1: return "FamilyKMinus1";
    case SymmetryFamily::FamilyK: return "FamilyK";
    case SymmetryFamily::Family2K: return "Family2K";
    case SymmetryFamily::Family2KPlus1: return "Family2KPlus1";
  }
  return "?";
}

SymmetryClass classify_by_parameters(const FamilyParams& p) {
  const std::int64_t n = p.n, k = p.k;
  if (k == 0) return {};
  auto make = [](SymmetryFamily f, char src, std::int64_t arg) {
    const std::int64_t m = src == 'f' ? quadratic_f(arg) : quadratic_g(arg);
    return SymmetryClass{f, m, src, arg};
  };
  if (n == k - 1) return make(SymmetryFamily::FamilyKMinus1, 'f', k);
  if (n == k) return make(SymmetryFamily::FamilyK, 'f', k + 1);
  if (n == 2 * k) return make(SymmetryFamily::Family2K, 'g', k + 1);
  if (n == 2 * k + 1) return make(SymmetryFamily::Family2KPlus1, 'g', k + 1);
  return {};
}

bool is_trivial_unknot(const FamilyParams& p) {
  if (p.k == 0) return p.n >= -2 && p.n <= 1;
  return p.n == 0 && p.k == 1;
}

SymmetryClass classify_symmetry(const FamilyParams& p) {
  SymmetryClass cls = classify_by_parameters(p);
  const LaurentPoly v = jones_wnk(p);
  const bool symmetric = is_symmetric(v);
  if (cls.symmetric()) {
    if (v != phi_tilde(*cls.m))
      throw InconsistencyError("V_" + to_string(p) + " differs from Phi_tilde_" +
                               std::to_string(2 * *cls.m));
  } else if (symmetric && !(p.k == 0 && is_trivial_unknot(p))) {
    throw InconsistencyError("V_" + to_string(p) +
                             " is symmetric outside the four families");
  }
  return cls;
}

std::int64_t writhe_wnk(const FamilyParams& p) {
  const std::int64_t n = p.n, k = p.k;
  return n * n + n + 2 * k * k + k - 2 * n * k;
}

std::int64_t crossing_bound(const FamilyParams& p) {
  if (p.n < 0 || p.n + p.k <= 0)
    throw DomainError("crossing bound needs n >= 0 and n + k > 0, got " + to_string(p));
  return p.k * p.k + (p.n + p.k) * (p.n + p.k) - 1;
}

MersenneWitness mersenne_knot(std::int64_t p, bool check_polynomials) {
  if (p <= 2 || p > 61)
    throw DomainError("Mersenne exponent must satisfy 2 < p <= 61, got " +
                      std::to_string(p));
  const std::int64_t n = (std::int64_t{1} << p) - 1;
  if (mpz_probab_prime_p(BigInt(std::to_string(n)).get_mpz_t(), 40) == 0)
    throw DomainError("2^" + std::to_string(p) + " - 1 = " + std::to_string(n) +
                      " is not prime");
  const std::int64_t k = (std::int64_t{1} << ((p - 1) / 2)) - 1;
  if (quadratic_g(k + 1) != n)
    throw InconsistencyError("g(k+1) != 2^p - 1 for p = " + std::to_string(p));
  MersenneWitness w{p, n, k, FamilyParams(2 * k, k), FamilyParams(2 * k + 1, k)};
  if (check_polynomials) {
    const LaurentPoly target = phi_sym(2 * n);
    for (const FamilyParams& knot : {w.even, w.odd})
      if (jones_wnk(knot) != target)
        throw InconsistencyError("V_" + to_string(knot) + " != Phi_sym_" +
                                 std::to_string(2 * n));
  }
  return w;
}

std::string phi_tilde_name(std::int64_t m) {
  if (m == 1) return "1";
  return (is_prime(m) ? "Phi_sym_" : "Phi_tilde_") + std::to_string(2 * m);
}

std::vector<TableRow> generate_table(std::int64_t k_max) {
  if (k_max < 1) throw DomainError("table needs k_max >= 1");
  std::vector<TableRow> rows;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t n : {k - 1, k, 2 * k, 2 * k + 1}) {
      FamilyParams p(n, k);
      SymmetryClass cls = classify_symmetry(p);
      rows.push_back({p, cls, phi_tilde_name(*cls.m), crossing_bound(p), jones_wnk(p)});
    }
  }
  return rows;
}

}  // namespace cyclojones
