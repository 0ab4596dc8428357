#include <doctest.h>

#include <cmath>
#include <set>

#include "cyclojones/cyclotomic.hpp"
#include "cyclojones/obstructions.hpp"
#include "cyclojones/wnk.hpp"
#include "support.hpp"

using namespace cyclojones;
namespace tst = cyclojones::testing;

namespace {

LaurentPoly P(const char* text) { return parse_poly(text); }

// Excluded indices up to max, generated from the four shapes.
std::set<std::int64_t> generated_exclusions(std::int64_t max) {
  std::set<std::int64_t> out{1, 3, 4, 6};
  for (std::int64_t p = 2; p <= max; ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime) continue;
    for (std::int64_t power = p; power <= max; power *= p)
      for (std::int64_t mult : {1, 3, 4, 6})
        if (mult * power <= max && !(mult == 6 && p == 3)) out.insert(mult * power);
  }
  return out;
}

}  // namespace

TEST_SUITE("obstructions") {

TEST_CASE("special values of small polynomials") {
  const SpecialValueReport v41 = special_value_check(phi_sym(10));
  CHECK(v41.passes_all);
  CHECK(v41.at_one == 1);
  CHECK(v41.derivative_at_one == 0);
  CHECK(v41.at_zeta3_is_one);
  REQUIRE(v41.at_i_value.has_value());
  CHECK(std::abs(*v41.at_i_value) == 1);
  // 1 - 2cos(pi/3) + 2cos(2pi/3) = -1
  CHECK(v41.at_zeta6_exponent == 0);
  CHECK(v41.at_zeta6_sign == -1);

  const SpecialValueReport six = special_value_check(phi_sym(6));
  CHECK_FALSE(six.passes_all);
  CHECK_FALSE(six.at_zeta6_exponent.has_value());

  const SpecialValueReport unknot = special_value_check(P("1"));
  CHECK(unknot.passes_all);
  CHECK(unknot.at_zeta6_exponent == 0);
  CHECK(unknot.at_zeta6_sign == 1);

  CHECK_FALSE(special_value_check(P("t^2")).passes_all);
  CHECK_FALSE(special_value_check(P("2 - t")).passes_all);
  CHECK_THROWS_AS(special_value_check(LaurentPoly()), DomainError);
  CHECK_THROWS_AS(special_value_check(P("A")), TagError);
}

TEST_CASE("property: family members pass and the reported values are right") {
  const double sqrt3 = std::sqrt(3.0);
  for (std::int64_t k = 0; k <= 5; ++k)
    for (std::int64_t n = -6; n <= 8; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      const LaurentPoly v = jones_wnk({n, k});
      const SpecialValueReport r = special_value_check(v);
      CHECK(r.passes_all);
      REQUIRE(r.at_i_value.has_value());
      REQUIRE(r.at_zeta6_exponent.has_value());
      const std::complex<double> at_i = tst::evaluate_at(v, {0, 1});
      CHECK(std::abs(at_i - std::complex<double>(*r.at_i_value, 0)) < 1e-6);
      const std::complex<double> at_zeta6 =
          tst::evaluate_at(v, std::polar(1.0, std::acos(-1.0) / 3));
      const std::complex<double> predicted =
          static_cast<double>(*r.at_zeta6_sign) *
          std::pow(std::complex<double>(0, sqrt3), *r.at_zeta6_exponent);
      CHECK(std::abs(at_zeta6 - predicted) < 1e-6 * (1 + std::abs(predicted)));
    }
}

TEST_CASE("values of cyclotomic polynomials at small roots of unity") {
  for (std::int64_t p : {2, 5, 7})
    for (std::int64_t k : {1, 2}) {
      std::int64_t q = 1;
      for (std::int64_t i = 0; i < k; ++i) q *= p;
      CHECK(value_and_derivative_at_one(phi(q)).value == p);
      CHECK(std::abs(std::abs(evaluate_complex(phi(3 * q), 3, 1)) - p) < 1e-9);
      CHECK(std::abs(std::abs(evaluate_complex(phi(4 * q), 4, 1)) - p) < 1e-9);
      CHECK(std::abs(std::abs(evaluate_complex(phi(6 * q), 6, 1)) - p) < 1e-9);
      // Exact: the residue times its conjugate is p^2.
      const ResidueElement r = evaluate_residue(phi(4 * q), 4);
      const ResidueElement conj = evaluate_residue(phi(4 * q).reversed(), 4);
      CHECK((r * conj).equals_constant(p * p));
    }
}

TEST_CASE("excluded indices") {
  CHECK(excluded_phi_index(49));
  CHECK(excluded_phi_index(24));
  CHECK_FALSE(excluded_phi_index(18));
  CHECK(excluded_phi_index(1));
  CHECK(excluded_phi_index(6));
  CHECK_FALSE(excluded_phi_index(54));
  CHECK_THROWS_AS(excluded_phi_index(0), DomainError);
  const auto generated = generated_exclusions(2000);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(excluded_phi_index(n) == generated.contains(n));
  }
}

TEST_CASE("admissible alternating indices") {
  CHECK_FALSE(phitilde_admissible(9));
  CHECK(phitilde_admissible(5));
  CHECK(phitilde_admissible(49));
  CHECK_THROWS_AS(phitilde_admissible(4), DomainError);
  // 3 | k exactly when Phi_6 divides phi_tilde(k).
  for (std::int64_t k = 1; k <= 99; k += 2)
    CHECK(phitilde_admissible(k) == !try_divide(phi_tilde(k), phi(6)).has_value());
}

TEST_CASE("realized orders and open candidates") {
  CHECK(realized_orders(60) == std::vector<std::int64_t>{10, 14, 22, 34, 38, 58});
  CHECK(realized_orders(14) == std::vector<std::int64_t>{10, 14});
  CHECK(realized_orders(9).empty());
  CHECK(open_question_candidates(60) ==
        std::vector<std::int64_t>{18, 26, 35, 40, 45, 46, 50, 54, 55, 56, 60});
  CHECK(open_question_candidates(17).empty());
  CHECK(open_question_candidates(26) == std::vector<std::int64_t>{18, 26});
}

TEST_CASE("property: candidates are exactly the unexcluded unrealized orders") {
  const std::int64_t max = 1500;
  std::set<std::int64_t> realized;
  for (std::int64_t k = 2; 2 * (k * k + k - 1) <= max || 2 * (2 * k * k - 1) <= max; ++k) {
    if (2 * (k * k + k - 1) <= max) realized.insert(2 * (k * k + k - 1));
    if (2 * (2 * k * k - 1) <= max) realized.insert(2 * (2 * k * k - 1));
  }
  CHECK(realized_orders(max) == std::vector<std::int64_t>(realized.begin(), realized.end()));
  const auto excluded = generated_exclusions(max);
  std::vector<std::int64_t> expected;
  for (std::int64_t n = 2; n <= max; ++n)
    if (!excluded.contains(n) && !realized.contains(n)) expected.push_back(n);
  CHECK(open_question_candidates(max) == expected);
}

TEST_CASE("realized orders come from symmetric family members") {
  for (std::int64_t n : realized_orders(120)) {
    CAPTURE(n);
    bool found = false;
    for (std::int64_t k = 1; k <= 8 && !found; ++k)
      for (std::int64_t m : {k - 1, k, 2 * k, 2 * k + 1}) {
        const SymmetryClass cls = classify_symmetry({m, k});
        if (cls.m && 2 * *cls.m == n) {
          const auto f = is_cyclotomic_product(jones_wnk({m, k}));
          REQUIRE(f.has_value());
          bool has_n = false;
          for (const auto& factor : f->factors) has_n = has_n || factor.index == n;
          CHECK(has_n);
          found = true;
        }
      }
    CHECK(found);
  }
}

}
