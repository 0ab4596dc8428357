#include <numbers>
#include <string>

#include "cyclojones/cyclotomic.hpp"
#include "cyclojones/laurent.hpp"

namespace cyclojones {

namespace {

// Reduces a dense polynomial modulo the monic Phi_n in place.
void reduce_mod_phi(std::vector<BigInt>& a, std::int64_t n) {
  const LaurentPoly& modulus = phi(n);
  const auto deg = static_cast<std::size_t>(modulus.max_exponent());
  for (std::size_t i = a.size(); i-- > deg;) {
    if (a[i] == 0) continue;
    const std::size_t base = i - deg;
    const BigInt c = a[i];
    for (const auto& [e, m] : modulus.terms())
      mpz_submul(a[base + static_cast<std::size_t>(e)].get_mpz_t(), c.get_mpz_t(),
                 m.get_mpz_t());
  }
  a.resize(deg);
}

void check_index(std::int64_t n) {
  if (n < 2) throw DomainError("residue ring needs N >= 2, got " + std::to_string(n));
}

}  // namespace

ResidueElement ResidueElement::zero(std::int64_t n) {
  check_index(n);
  return {n, std::vector<BigInt>(static_cast<std::size_t>(euler_totient(n)))};
}

ResidueElement ResidueElement::constant(std::int64_t n, const BigInt& c) {
  ResidueElement out = zero(n);
  out.coeffs[0] = c;
  return out;
}

bool ResidueElement::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool ResidueElement::equals_constant(const BigInt& c) const {
  if (coeffs.empty() || coeffs[0] != c) return false;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) return false;
  return true;
}

std::complex<double> ResidueElement::embed(std::int64_t j) const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const auto phase = static_cast<std::int64_t>(
        (static_cast<__int128>(j) * static_cast<std::int64_t>(i)) % modulus_index);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                         static_cast<double>(modulus_index);
    sum += coeffs[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

ResidueElement ResidueElement::operator*(const ResidueElement& other) const {
  if (modulus_index != other.modulus_index)
    throw DomainError("residues modulo different cyclotomic polynomials");
  if (coeffs.empty()) return *this;
  std::vector<BigInt> prod(coeffs.size() + other.coeffs.size() - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), coeffs[i].get_mpz_t(),
                 other.coeffs[j].get_mpz_t());
  }
  reduce_mod_phi(prod, modulus_index);
  return {modulus_index, std::move(prod)};
}

ResidueElement ResidueElement::operator+(const ResidueElement& other) const {
  if (modulus_index != other.modulus_index)
    throw DomainError("residues modulo different cyclotomic polynomials");
  ResidueElement out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
  return out;
}

ResidueElement ResidueElement::operator-() const {
  ResidueElement out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

ResidueElement evaluate_residue(const LaurentPoly& p, std::int64_t n) {
  check_index(n);
  // Phi_n divides t^n - 1, so exponents may be folded modulo n first.
  std::vector<BigInt> folded(static_cast<std::size_t>(n));
  for (const auto& [e, c] : p.terms()) {
    std::int64_t r = e % n;
    if (r < 0) r += n;
    folded[static_cast<std::size_t>(r)] += c;
  }
  reduce_mod_phi(folded, n);
  return {n, std::move(folded)};
}

}  // namespace cyclojones
