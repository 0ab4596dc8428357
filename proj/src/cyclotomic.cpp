#include "cyclojones/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include <Eigen/Eigenvalues>

namespace cyclojones {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize needs n >= 1, got " + std::to_string(n));
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t count = out.size();
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f.front().second == 1;
}

std::int64_t euler_totient(std::int64_t n) {
  if (n < 1) throw DomainError("euler_totient needs n >= 1, got " + std::to_string(n));
  std::int64_t result = n;
  for (const auto& [p, k] : factorize(n)) result = result / p * (p - 1);
  return result;
}

namespace {

// Phi_r for squarefree r as prod_{d|r} (t^d - 1)^mu(r/d), in dense form.
std::vector<BigInt> squarefree_cyclotomic(std::int64_t r,
                                          const std::vector<std::int64_t>& primes) {
  std::vector<std::int64_t> up, down;
  for (std::int64_t d : divisors(r)) {
    std::int64_t cofactor = r / d;
    int omega = 0;
    for (std::int64_t p : primes)
      if (cofactor % p == 0) ++omega;
    (omega % 2 == 0 ? up : down).push_back(d);
  }

  std::vector<BigInt> a{1};
  for (std::int64_t d : up) {
    const auto sd = static_cast<std::size_t>(d);
    std::vector<BigInt> next(a.size() + sd);
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (i >= sd) next[i] += a[i - sd];
      if (i < a.size()) next[i] -= a[i];
    }
    a = std::move(next);
  }
  for (std::int64_t d : down) {
    const auto sd = static_cast<std::size_t>(d);
    // (t^d - 1) q = a  =>  q[i] = q[i-d] - a[i]
    std::vector<BigInt> q(a.size() - sd);
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = -a[i];
      if (i >= sd) q[i] += q[i - sd];
    }
    for (std::size_t i = q.size(); i < a.size(); ++i) {
      BigInt expect = i >= sd ? q[i - sd] : BigInt(0);
      if (a[i] != expect)
        throw InconsistencyError("binomial division failed building Phi_" +
                                 std::to_string(r));
    }
    a = std::move(q);
  }
  return a;
}

LaurentPoly build_phi(std::int64_t n) {
  std::int64_t rad = 1;
  std::vector<std::int64_t> primes;
  for (const auto& [p, k] : factorize(n)) {
    rad *= p;
    primes.push_back(p);
  }
  std::vector<BigInt> dense = squarefree_cyclotomic(rad, primes);
  // Phi_n(t) = Phi_rad(n)(t^(n/rad(n)))
  return substitute_power(LaurentPoly::from_dense(dense, 0), n / rad, Variable::t);
}

class PhiCache {
 public:
  const LaurentPoly& get(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(n);
      if (it != table_.end()) return *it->second;
    }
    auto built = std::make_unique<LaurentPoly>(build_phi(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(n, std::move(built));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::int64_t, std::unique_ptr<LaurentPoly>> table_;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

}  // namespace

const LaurentPoly& phi(std::int64_t n) {
  if (n < 1) throw DomainError("Phi_n needs n >= 1, got " + std::to_string(n));
  return phi_cache().get(n);
}

LaurentPoly phi_sym(std::int64_t n) {
  if (n < 3) throw DomainError("Phi_sym_n needs n >= 3, got " + std::to_string(n));
  return phi(n).shifted(-euler_totient(n) / 2);
}

LaurentPoly phi_tilde(std::int64_t m) {
  if (m < 1 || m % 2 == 0)
    throw DomainError("Phi_tilde_2m needs odd m >= 1, got " + std::to_string(m));
  LaurentPoly product = LaurentPoly::constant(1);
  for (std::int64_t d : divisors(m))
    if (d > 1) product *= phi_sym(2 * d);

  const Exponent half = (m - 1) / 2;
  std::vector<LaurentPoly::Term> alternating;
  for (Exponent e = -half; e <= half; ++e)
    alternating.emplace_back(e, (e + half) % 2 == 0 ? 1 : -1);
  LaurentPoly alt(std::move(alternating));

  if (product != alt)
    throw InconsistencyError("product and alternating forms of Phi_tilde_" +
                             std::to_string(2 * m) + " differ");
  return product;
}

LaurentPoly CyclotomicFactorization::reconstruct() const {
  LaurentPoly out = LaurentPoly::monomial(sign, monomial_shift);
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) out *= phi(f.index);
  return out;
}

std::optional<CyclotomicFactorization> is_cyclotomic_product(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("is_cyclotomic_product of the zero polynomial");
  if (p.variable() != Variable::t) return std::nullopt;

  CyclotomicFactorization result;
  result.monomial_shift = p.min_exponent();
  const BigInt& lead = p.leading_coefficient();
  if (abs(lead) != 1) return std::nullopt;
  result.sign = lead > 0 ? 1 : -1;
  LaurentPoly rest = p.scaled(result.sign, -result.monomial_shift);

  Exponent degree = rest.max_exponent();
  if (degree == 0) return result;  // p = +-t^a
  // phi(d) >= sqrt(d/2), so a factor Phi_d of degree <= D has d <= 2 D^2.
  const std::int64_t bound = 2 * degree * degree;
  std::vector<std::int64_t> totient(static_cast<std::size_t>(bound) + 1);
  for (std::int64_t i = 0; i <= bound; ++i) totient[i] = i;
  for (std::int64_t i = 2; i <= bound; ++i)
    if (totient[i] == i)
      for (std::int64_t j = i; j <= bound; j += i) totient[j] -= totient[j] / i;

  BigInt weight = 0;
  for (const auto& [e, c] : rest.terms()) weight += abs(c);
  const double tolerance = 1e-8 * std::max(1.0, weight.get_d());

  for (std::int64_t d = 1; degree > 0 && d <= 2 * degree * degree; ++d) {
    if (totient[d] > degree) continue;
    // Numeric screen; the exact division below decides.
    if (std::abs(evaluate_complex(rest, d, 1)) > tolerance) continue;
    int mult = 0;
    while (totient[d] <= degree) {
      auto q = try_divide(rest, phi(d));
      if (!q) break;
      rest = *std::move(q);
      degree = rest.max_exponent();
      ++mult;
    }
    if (mult > 0) result.factors.push_back({d, mult});
  }
  if (degree != 0 || rest != LaurentPoly::constant(1)) return std::nullopt;
  return result;
}

double mahler_measure(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  const std::vector<BigInt> dense = p.dense();  // roots at 0 dropped
  const double lead = std::abs(dense.back().get_d());
  const std::size_t degree = dense.size() - 1;
  if (degree == 0) return lead;

  std::vector<long double> coeffs(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i)
    coeffs[i] = static_cast<long double>(dense[i].get_d());

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < degree; ++i)
    companion(i, degree - 1) = -dense[i].get_d() / dense.back().get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigenvalue iteration did not converge");

  using cld = std::complex<long double>;
  auto horner = [&](cld z) {
    cld value = 0, deriv = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      deriv = deriv * z + value;
      value = value * z + coeffs[i];
    }
    return std::pair{value, deriv};
  };

  long double measure = lead;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    cld z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int iter = 0; iter < 8; ++iter) {
      auto [v, dv] = horner(z);
      if (std::abs(dv) == 0) break;
      cld next = z - v / dv;
      if (std::abs(horner(next).first) >= std::abs(v)) break;
      z = next;
    }
    if (!std::isfinite(std::abs(z))) throw NumericError("root polishing diverged");
    measure *= std::max<long double>(1.0L, std::abs(z));
  }
  return static_cast<double>(measure);
}

std::vector<std::int64_t> phitilde_root_exponents(std::int64_t m) {
  if (m < 3 || m % 2 == 0)
    throw DomainError("root exponents need odd m >= 3, got " + std::to_string(m));
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; j < 2 * m; j += 2)
    if (j != m) out.push_back(j);
  return out;
}

}  // namespace cyclojones
