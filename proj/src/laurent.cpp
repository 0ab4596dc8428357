#include "cyclojones/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>

namespace cyclojones {

char variable_name(Variable v) { return v == Variable::t ? 't' : 'A'; }

namespace {

void normalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Exponent e = terms[i].first;
    BigInt sum = 0;
    for (; i < terms.size() && terms[i].first == e; ++i) sum += terms[i].second;
    if (sum != 0) terms[out++] = {e, std::move(sum)};
  }
  terms.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<Term> terms, Variable v)
    : var_(v), terms_(std::move(terms)) {
  normalize(terms_);
}

LaurentPoly LaurentPoly::constant(const BigInt& c, Variable v) {
  return monomial(c, 0, v);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, Exponent e, Variable v) {
  LaurentPoly p(v);
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_dense(const std::vector<BigInt>& coeffs,
                                    Exponent low, Variable v) {
  LaurentPoly p(v);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      p.terms_.emplace_back(low + static_cast<Exponent>(i), coeffs[i]);
  return p;
}

Exponent LaurentPoly::min_exponent() const {
  if (is_zero()) throw DomainError("min_exponent of the zero polynomial");
  return terms_.front().first;
}

Exponent LaurentPoly::max_exponent() const {
  if (is_zero()) throw DomainError("max_exponent of the zero polynomial");
  return terms_.back().first;
}

const BigInt& LaurentPoly::leading_coefficient() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.back().second;
}

BigInt LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& term, Exponent x) { return term.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

std::vector<BigInt> LaurentPoly::dense() const {
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(span(*this)) + 1);
  Exponent low = min_exponent();
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - low)] = c;
  return out;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c, Exponent e) const {
  LaurentPoly out(var_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [x, a] : terms_) out.terms_.emplace_back(x + e, a * c);
  return out;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly out(var_);
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.emplace_back(-it->first, it->second);
  return out;
}

LaurentPoly LaurentPoly::retagged(Variable v) const {
  LaurentPoly out = *this;
  out.var_ = v;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

void LaurentPoly::check_tag(const LaurentPoly& other) const {
  if (var_ != other.var_)
    throw TagError(std::string("mixing polynomials in ") + variable_name(var_) +
                   " and " + variable_name(other.var_));
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  check_tag(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, sign > 0 ? b->second : BigInt(-b->second));
      ++b;
    } else {
      BigInt sum = sign > 0 ? BigInt(a->second + b->second)
                            : BigInt(a->second - b->second);
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  return add_scaled(other, +1);
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  return add_scaled(other, -1);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  check_tag(other);
  if (is_zero() || other.is_zero()) {
    terms_.clear();
    return *this;
  }
  const Exponent low = min_exponent() + other.min_exponent();
  const Exponent width = span(*this) + span(other) + 1;
  const auto products = static_cast<Exponent>(terms_.size() * other.terms_.size());
  if (width <= 4 * products) {
    std::vector<BigInt> acc(static_cast<std::size_t>(width));
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : other.terms_)
        mpz_addmul(acc[static_cast<std::size_t>(ea + eb - low)].get_mpz_t(),
                   ca.get_mpz_t(), cb.get_mpz_t());
    *this = from_dense(acc, low, var_);
  } else {
    std::map<Exponent, BigInt> acc;
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : other.terms_) acc[ea + eb] += ca * cb;
    terms_.clear();
    for (auto& [e, c] : acc)
      if (c != 0) terms_.emplace_back(e, std::move(c));
  }
  return *this;
}

LaurentPoly substitute_power(const LaurentPoly& p, Exponent e, Variable to) {
  if (e == 0) throw DomainError("substitute_power with exponent 0");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [x, c] : p.terms()) terms.emplace_back(x * e, c);
  return LaurentPoly(std::move(terms), to);
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.variable() != q.variable())
    throw TagError("division between polynomials in different variables");
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly(p.variable());

  const BigInt& lead = q.leading_coefficient();
  if (q.size() == 1) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
      out.emplace_back(e - q.min_exponent(), c / lead);
    }
    return LaurentPoly(std::move(out), p.variable());
  }

  if (span(p) < span(q)) return std::nullopt;
  std::vector<BigInt> rem = p.dense();
  const std::size_t qlen = static_cast<std::size_t>(span(q)) + 1;
  const Exponent qlow = q.min_exponent();
  std::vector<BigInt> quot(rem.size() - qlen + 1);
  BigInt c;
  for (std::size_t i = rem.size(); i-- >= qlen;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    const std::size_t base = i - (qlen - 1);
    mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (const auto& [e, qc] : q.terms())
      mpz_submul(rem[base + static_cast<std::size_t>(e - qlow)].get_mpz_t(),
                 c.get_mpz_t(), qc.get_mpz_t());
    quot[base] = c;
  }
  for (std::size_t i = 0; i + 1 < qlen; ++i)
    if (rem[i] != 0) return std::nullopt;
  return LaurentPoly::from_dense(quot, p.min_exponent() - qlow, p.variable());
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = try_divide(p, q);
  if (!r)
    throw InexactDivisionError("(" + to_string(p) + ") is not divisible by (" +
                               to_string(q) + ")");
  return *std::move(r);
}

bool is_symmetric(const LaurentPoly& p) { return p.reversed() == p; }

std::optional<Exponent> palindromic_shift(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("palindromic_shift of the zero polynomial");
  const Exponent n = -p.max_exponent() - p.min_exponent();
  if (p.reversed() == p.shifted(n)) return n;
  return std::nullopt;
}

std::optional<Exponent> is_antipalindromic(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("is_antipalindromic of the zero polynomial");
  const Exponent a = -p.max_exponent() - p.min_exponent();
  if (p.reversed() == p.scaled(-1, a)) return a;
  return std::nullopt;
}

ValueAtOne value_and_derivative_at_one(const LaurentPoly& p) {
  ValueAtOne out{0, 0};
  for (const auto& [e, c] : p.terms()) {
    out.value += c;
    out.derivative += c * BigInt(static_cast<long>(e));
  }
  return out;
}

Exponent span(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("span of the zero polynomial");
  return p.max_exponent() - p.min_exponent();
}

std::complex<double> evaluate_complex(const LaurentPoly& p, std::int64_t n,
                                      std::int64_t j) {
  if (n < 1) throw DomainError("evaluate_complex needs N >= 1");
  // z^n = 1, so exponents fold exactly modulo n before going numeric.
  std::map<std::int64_t, BigInt> folded;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t r = e % n;
    if (r < 0) r += n;
    folded[r] += c;
  }
  std::int64_t jr = j % n;
  if (jr < 0) jr += n;
  std::complex<double> sum = 0;
  for (const auto& [r, c] : folded) {
    if (c == 0) continue;
    const auto phase = static_cast<std::int64_t>(
        (static_cast<__int128>(jr) * r) % n);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) /
                         static_cast<double>(n);
    sum += c.get_d() * std::polar(1.0, angle);
  }
  return sum;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const char var = variable_name(p.variable());
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    const BigInt mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    std::vector<LaurentPoly::Term> terms;
    int sign = read_sign();
    terms.push_back(read_term(sign));
    for (skip_ws(); !at_end(); skip_ws()) {
      if (s_[pos_] != '+' && s_[pos_] != '-') fail("expected '+' or '-'");
      sign = read_sign();
      terms.push_back(read_term(sign));
    }
    return LaurentPoly(std::move(terms), var_.value_or(Variable::t));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  // Any run of '+'/'-' separated by blanks; returns the product of signs.
  int read_sign() {
    int sign = 1;
    for (skip_ws(); !at_end() && (s_[pos_] == '+' || s_[pos_] == '-'); skip_ws()) {
      if (s_[pos_] == '-') sign = -sign;
      ++pos_;
    }
    return sign;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  LaurentPoly::Term read_term(int sign) {
    skip_ws();
    BigInt coeff = 1;
    bool have_coeff = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      coeff = BigInt(digits);
      have_coeff = true;
      skip_ws();
      if (!at_end() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || (s_[pos_] != 't' && s_[pos_] != 'A'))
          fail("expected variable after '*'");
      }
    }
    Exponent exponent = 0;
    if (!at_end() && (s_[pos_] == 't' || s_[pos_] == 'A')) {
      Variable v = s_[pos_] == 't' ? Variable::t : Variable::A;
      if (var_ && *var_ != v) fail("mixed variables");
      var_ = v;
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        int esign = 1;
        if (!at_end() && (s_[pos_] == '-' || s_[pos_] == '+')) {
          esign = s_[pos_] == '-' ? -1 : 1;
          ++pos_;
        }
        std::string e = read_digits();
        if (e.empty()) fail("dangling exponent");
        if (e.size() > 17) fail("exponent out of range");
        exponent = esign * std::stoll(e);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    return {exponent, sign * coeff};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<Variable> var_;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace cyclojones
