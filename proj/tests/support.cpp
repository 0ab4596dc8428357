#include "support.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclojones::testing {

LaurentPoly Gen::poly(int max_terms, Exponent spread, int bits, Variable v) {
  std::vector<LaurentPoly::Term> terms;
  const int count = static_cast<int>(integer(0, max_terms));
  for (int i = 0; i < count; ++i) {
    BigInt c = integer(0, (std::int64_t{1} << bits) - 1) + 1;
    if (coin()) c = -c;
    terms.emplace_back(integer(-spread, spread), c);
  }
  return LaurentPoly(std::move(terms), v);
}

LaurentPoly Gen::nonzero_poly(int max_terms, Exponent spread, int bits, Variable v) {
  for (;;) {
    LaurentPoly p = poly(max_terms, spread, bits, v);
    if (!p.is_zero()) return p;
  }
}

std::int64_t brute_totient(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++count;
  return count;
}

std::vector<std::int64_t> numeric_phi_coefficients(std::int64_t n) {
  std::vector<std::complex<long double>> c{1.0L};
  const long double tau = 2 * std::acos(-1.0L);
  for (std::int64_t j = 1; j <= n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    const std::complex<long double> root = std::polar(1.0L, tau * j / n);
    std::vector<std::complex<long double>> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= root * c[i];
    }
    c = std::move(next);
  }
  std::vector<std::int64_t> out;
  for (const auto& z : c) {
    if (std::abs(z.imag()) > 1e-6L) throw std::runtime_error("non-real coefficient");
    out.push_back(std::llround(static_cast<double>(z.real())));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

// X[a,b,c,d]: a is the incoming under-edge, then counterclockwise.
struct Crossing {
  int a, b, c, d;
};

}  // namespace

LaurentPoly state_sum_bracket(int strands, const std::vector<int>& word) {
  std::vector<int> edge(static_cast<std::size_t>(strands));
  std::iota(edge.begin(), edge.end(), 0);
  int next_edge = strands;
  std::vector<Crossing> crossings;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (i < 0 || i + 1 >= strands) throw std::invalid_argument("generator out of range");
    const int left_in = edge[i], right_in = edge[i + 1];
    const int left_out = next_edge++, right_out = next_edge++;
    // Strands move upward; the left strand ends on the right.
    if (g > 0)
      crossings.push_back({right_in, left_out, right_out, left_in});
    else
      crossings.push_back({left_in, right_in, left_out, right_out});
    edge[i] = right_out;
    edge[i + 1] = left_out;
  }

  const std::size_t c = crossings.size();
  if (c > 20) throw std::invalid_argument("too many crossings for a state sum");
  std::map<Exponent, BigInt> sum;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    UnionFind uf(next_edge);
    for (int s = 0; s < strands; ++s) uf.join(s, edge[s]);
    int a_count = 0;
    for (std::size_t j = 0; j < c; ++j) {
      const Crossing& x = crossings[j];
      if ((state >> j) & 1) {
        ++a_count;
        uf.join(x.a, x.b);
        uf.join(x.c, x.d);
      } else {
        uf.join(x.a, x.d);
        uf.join(x.b, x.c);
      }
    }
    int loops = 0;
    std::vector<bool> seen(static_cast<std::size_t>(next_edge));
    for (int e = 0; e < next_edge; ++e) {
      int r = uf.find(e);
      if (!seen[r]) {
        seen[r] = true;
        ++loops;
      }
    }
    // A^(a-b) (-A^2 - A^-2)^(loops-1), expanded binomially.
    const Exponent base = a_count - (static_cast<Exponent>(c) - a_count);
    const int power = loops - 1;
    BigInt binom = 1;
    for (int i = 0; i <= power; ++i) {
      BigInt term = binom;
      if (power % 2) term = -term;
      sum[base + 2 * (power - i) - 2 * i] += term;
      binom = binom * (power - i) / (i + 1);
    }
  }
  std::vector<LaurentPoly::Term> terms(sum.begin(), sum.end());
  return LaurentPoly(std::move(terms), Variable::A);
}

LaurentPoly state_sum_jones(int strands, const std::vector<int>& word) {
  Exponent writhe = 0;
  for (int g : word) writhe += g > 0 ? 1 : -1;
  const LaurentPoly bracket = state_sum_bracket(strands, word);
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : bracket.terms()) {
    const Exponent shifted = e - 3 * writhe;
    if (shifted % 4 != 0) throw std::logic_error("bracket exponent not aligned");
    terms.emplace_back(-shifted / 4, writhe % 2 ? BigInt(-c) : c);
  }
  return LaurentPoly(std::move(terms), Variable::t);
}

std::vector<int> torus_braid(int p, int q) {
  std::vector<int> word;
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) word.push_back(i);
  return word;
}

std::complex<double> evaluate_at(const LaurentPoly& p, std::complex<double> z) {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c.get_d() * std::pow(z, static_cast<double>(e));
  return sum;
}

}  // namespace cyclojones::testing
