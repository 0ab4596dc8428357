#include "cyclojones/obstructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclojones/cyclotomic.hpp"
#include "cyclojones/wnk.hpp"

namespace cyclojones {

SpecialValueReport special_value_check(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("special_value_check of the zero polynomial");
  if (p.variable() != Variable::t) throw TagError("special values are taken in t");
  SpecialValueReport r;
  const ValueAtOne one = value_and_derivative_at_one(p);
  r.at_one = one.value;
  r.derivative_at_one = one.derivative;

  r.at_zeta3_is_one = evaluate_residue(p, 3).equals_constant(1);

  const ResidueElement at_i = evaluate_residue(p, 4);
  if (at_i.equals_constant(1)) r.at_i_value = 1;
  else if (at_i.equals_constant(-1)) r.at_i_value = -1;

  // |V(zeta_6)| = 3^(s/2) <= sum |c|, which bounds the search over s.
  BigInt weight = 0;
  for (const auto& [e, c] : p.terms()) weight += abs(c);
  const int s_max = static_cast<int>(std::ceil(2.0 * std::log(weight.get_d()) / std::log(3.0)));
  const ResidueElement at_zeta6 = evaluate_residue(p, 6);
  // i sqrt 3 = 2 zeta_6 - 1
  const ResidueElement root{6, {BigInt(-1), BigInt(2)}};
  ResidueElement power = ResidueElement::constant(6, 1);
  for (int s = 0; s <= s_max; ++s) {
    if (at_zeta6 == power || at_zeta6 == -power) {
      r.at_zeta6_exponent = s;
      r.at_zeta6_sign = at_zeta6 == power ? 1 : -1;
      break;
    }
    power = power * root;
  }

  r.passes_all = r.at_one == 1 && r.derivative_at_one == 0 && r.at_zeta3_is_one &&
                 r.at_i_value.has_value() && r.at_zeta6_exponent.has_value();
  return r;
}

namespace {

bool is_prime_power_or_one(std::int64_t x, std::int64_t forbidden_prime = 0) {
  if (x == 1) return true;
  auto f = factorize(x);
  return f.size() == 1 && f.front().first != forbidden_prime;
}

}  // namespace

bool excluded_phi_index(std::int64_t n) {
  if (n < 1) throw DomainError("cyclotomic index must be >= 1, got " + std::to_string(n));
  if (is_prime_power_or_one(n)) return true;
  if (n % 3 == 0 && is_prime_power_or_one(n / 3)) return true;
  if (n % 4 == 0 && is_prime_power_or_one(n / 4)) return true;
  if (n % 6 == 0 && is_prime_power_or_one(n / 6, 3)) return true;
  return false;
}

bool phitilde_admissible(std::int64_t k) {
  if (k < 1 || k % 2 == 0)
    throw DomainError("phitilde_admissible needs odd k >= 1, got " + std::to_string(k));
  return k % 3 != 0;
}

std::vector<std::int64_t> realized_orders(std::int64_t max) {
  if (max < 2) throw DomainError("realized_orders needs max >= 2");
  std::vector<std::int64_t> out;
  for (std::int64_t k = 2; 2 * quadratic_f(k) <= max; ++k) out.push_back(2 * quadratic_f(k));
  for (std::int64_t k = 2; 2 * quadratic_g(k) <= max; ++k) out.push_back(2 * quadratic_g(k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> open_question_candidates(std::int64_t max) {
  const std::vector<std::int64_t> realized = realized_orders(max);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= max; ++n)
    if (!excluded_phi_index(n) && !std::binary_search(realized.begin(), realized.end(), n))
      out.push_back(n);
  return out;
}

}  // namespace cyclojones
