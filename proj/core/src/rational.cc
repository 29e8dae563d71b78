// Copyright 2026 The gegencert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gegencert/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "gegencert/errors.hpp"

namespace gegencert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonSquarefree: return "NonSquarefree";
    case ErrorKind::kDivisionByZeroInterval: return "DivisionByZeroInterval";
    case ErrorKind::kBoundViolated: return "BoundViolated";
    case ErrorKind::kDegenerateAngle: return "DegenerateAngle";
    case ErrorKind::kBranchGap: return "BranchGap";
    case ErrorKind::kConvexityPremiseFailed: return "ConvexityPremiseFailed";
    case ErrorKind::kInvariantViolation: return "InvariantViolation";
    case ErrorKind::kHypothesisViolated: return "HypothesisViolated";
    case ErrorKind::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::kConvexityLost: return "ConvexityLost";
    case ErrorKind::kInconclusive: return "Inconclusive";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Rat parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  if (scale >= 0) return Rat(mpz_class(num * pow10), mpz_class(1));
  return Rat(num, pow10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view n = text.substr(0, slash);
    std::string_view d = text.substr(slash + 1);
    std::string_view n_digits = n;
    if (!n_digits.empty() && (n_digits.front() == '-' || n_digits.front() == '+')) {
      n_digits.remove_prefix(1);
    }
    if (!all_digits(n_digits) || !all_digits(d)) {
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    std::string n_str(n);
    if (n_str.front() == '+') n_str.erase(0, 1);
    mpz_class den(std::string(d), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(mpz_class(n_str, 10), den);
  }
  return parse_decimal(text);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

double Rat::to_double() const {
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal(int digits) const {
  if (digits < 1) digits = 1;
  // 64 guard bits beyond the requested digits make double rounding
  // impossible except for ties that exact rationals with small denominators
  // cannot produce at this depth.
  mpfr_t t;
  mpfr_init2(t, static_cast<mpfr_prec_t>(digits * 4 + 128));
  mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
  int n = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, t);
  std::string out(static_cast<size_t>(n) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Rg", digits, t);
  out.resize(static_cast<size_t>(n));
  mpfr_clear(t);
  return out;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& x, int e) {
  if (e < 0) return Rat(1) / pow(x, -e);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(r);
}

const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rat> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::identity() { return monomial(Rat(1), 1); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

Rat RatPoly::operator()(const Rat& x) const {
  mpq_class acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x.get();
    acc += it->get();
  }
  return Rat(acc);
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RatPoly operator-(const RatPoly& a) {
  RatPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].get() * b.c_[j].get();
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return RatPoly(std::move(out));
}

std::string RatPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    std::string term = abs(c).str();
    if (i >= 1) term += (i == 1) ? "*x" : "*x^" + std::to_string(i);
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + term;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

Rat poly_eval(const RatPoly& p, const Rat& x) { return p(x); }

RatPoly poly_derivative(const RatPoly& p) {
  if (p.degree() < 1) return RatPoly();
  std::vector<Rat> d(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<size_t>(i - 1)] = p.coeffs()[static_cast<size_t>(i)] * Rat(i);
  return RatPoly(std::move(d));
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly(), a};
  std::vector<mpq_class> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.push_back(c.get());
  const int db = b.degree();
  std::vector<mpq_class> q(static_cast<size_t>(a.degree() - db + 1));
  const mpq_class inv_lead = 1 / b.leading().get();
  for (int i = a.degree(); i >= db; --i) {
    mpq_class f = r[static_cast<size_t>(i)] * inv_lead;
    if (sgn(f) == 0) continue;
    q[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)].get();
  }
  std::vector<Rat> qv, rv;
  for (auto& v : q) qv.emplace_back(std::move(v));
  r.resize(static_cast<size_t>(db));
  for (auto& v : r) rv.emplace_back(std::move(v));
  return {RatPoly(std::move(qv)), RatPoly(std::move(rv))};
}

namespace {

RatPoly monic(RatPoly p) {
  if (p.is_zero()) return p;
  Rat inv = Rat(1) / p.leading();
  return p * inv;
}

}  // namespace

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() < 1) return monic(p);
  RatPoly g = poly_gcd(p, poly_derivative(p));
  return monic(poly_divmod(p, g).first);
}

RatPoly taylor_shift(const RatPoly& p, const Rat& c) {
  // Horner-style synthetic division, O(d^2).
  std::vector<mpq_class> a;
  a.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) a.push_back(v.get());
  const int n = p.degree();
  const mpq_class& cc = c.get();
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) a[static_cast<size_t>(j)] += cc * a[static_cast<size_t>(j + 1)];
  }
  std::vector<Rat> out;
  out.reserve(a.size());
  for (auto& v : a) out.emplace_back(std::move(v));
  return RatPoly(std::move(out));
}

Rat monomial_moment(int m) {
  if (m < 0) throw std::invalid_argument("negative moment order");
  if (m % 2 == 1) return Rat(0);
  return Rat(2, m + 1);
}

Rat weighted_inner_product(const RatPoly& p, const RatPoly& q) {
  RatPoly r = p * q;
  mpq_class acc;
  for (int m = 0; m <= r.degree(); ++m) {
    const Rat& c = r.coeffs()[static_cast<size_t>(m)];
    if (c.is_zero()) continue;
    // (1 - x^2) x^m integrates to M(m) - M(m + 2).
    acc += c.get() * (monomial_moment(m).get() - monomial_moment(m + 2).get());
  }
  return Rat(acc);
}

}  // namespace gegencert
