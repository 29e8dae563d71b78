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

#include "gegencert/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gegencert/errors.hpp"

namespace gegencert {
namespace {

// Primitive integer polynomial; only its sign at rational points matters.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(const RatPoly& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get().get_den_mpz_t());
    c_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) c_.push_back(c.get().get_num() * (lcm_den / c.get().get_den()));
    make_primitive();
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& lead() const { return c_.back(); }

  // sign(p(n/d)) with d > 0, using d^(deg - i) scaling to stay in Z.
  int sign_at(const mpq_class& x) const {
    if (c_.empty()) return 0;
    const mpz_class& n = x.get_num();
    const mpz_class& d = x.get_den();
    mpz_class acc = c_.back();
    mpz_class dpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
      dpow *= d;
      acc *= n;
      acc += c_[static_cast<size_t>(i)] * dpow;
    }
    return sgn(acc);
  }

  IntPoly derivative() const {
    IntPoly r;
    for (int i = 1; i <= degree(); ++i) r.c_.push_back(c_[static_cast<size_t>(i)] * i);
    r.make_primitive();
    return r;
  }

  // Negated pseudo-remainder scaled by a positive factor, so the result is
  // a positive multiple of -rem(a, b).
  static IntPoly sturm_next(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> r = a.c_;
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    int steps = 0;
    for (int i = a.degree(); i >= db; --i) {
      mpz_class f = r[static_cast<size_t>(i)];
      for (auto& v : r) v *= lb;
      if (f != 0) {
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
      }
      ++steps;
    }
    IntPoly out;
    out.c_ = std::move(r);
    out.c_.resize(static_cast<size_t>(db));
    out.trim();
    out.make_primitive();
    // prem = lb^steps * rem.
    bool flip = !(sgn(lb) < 0 && steps % 2 == 1);
    if (flip) {
      for (auto& v : out.c_) v = -v;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  void make_primitive() {
    trim();
    if (c_.empty()) return;
    mpz_class g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
      for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::vector<mpz_class> c_;
};

class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p) {
    seq_.push_back(p);
    if (p.degree() < 1) return;
    seq_.push_back(p.derivative());
    while (seq_.back().degree() > 0) {
      IntPoly next = IntPoly::sturm_next(seq_[seq_.size() - 2], seq_.back());
      if (next.is_zero()) break;
      seq_.push_back(std::move(next));
    }
  }

  // Degree of the last element; positive means p had a repeated factor.
  int gcd_degree() const { return seq_.back().degree(); }

  int variations(const mpq_class& x) const {
    int count = 0;
    int last = 0;
    for (const auto& s : seq_) {
      int sg = s.sign_at(x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

 private:
  std::vector<IntPoly> seq_;
};

RatPoly deflate(const RatPoly& p, const Rat& root) {
  RatPoly lin(std::vector<Rat>{-root, Rat(1)});
  return poly_divmod(p, lin).first;
}

// Squarefree polynomial with no roots at the ends of the search window;
// owns everything needed to isolate and refine.
class Isolator {
 public:
  Isolator(const RatPoly& p, const Rat& lo, const Rat& hi, SquarefreeMode mode)
      : lo_(lo), hi_(hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (hi < lo) throw std::invalid_argument("isolate_real_roots: empty interval");
    RatPoly q = p;
    if (q.degree() >= 1) {
      SturmChain probe{IntPoly(q)};
      if (probe.gcd_degree() > 0) {
        if (mode == SquarefreeMode::kStrict) {
          throw VerificationError(ErrorKind::kNonSquarefree,
                                  "gcd(p, p') has degree " + std::to_string(probe.gcd_degree()));
        }
        q = squarefree_part(q);
      }
    }
    squarefree_ = IntPoly(q);
    if (q.degree() >= 1 && q(lo).is_zero()) {
      endpoint_roots_.push_back({lo, lo, true});
      q = deflate(q, lo);
      lo_root_ = true;
    }
    if (hi != lo && q.degree() >= 1 && q(hi).is_zero()) {
      endpoint_roots_.push_back({hi, hi, true});
      q = deflate(q, hi);
      hi_root_ = true;
    }
    inner_ = IntPoly(q);
    chain_.emplace_back(inner_);
  }

  std::vector<RootEnclosure> isolate() {
    std::vector<RootEnclosure> out = endpoint_roots_;
    if (lo_ == hi_ || inner_.degree() < 1) return sorted(std::move(out));
    const SturmChain& chain = chain_.front();
    struct Cell { Rat a, b; int va, vb; };
    std::vector<Cell> stack;
    stack.push_back({lo_, hi_, chain.variations(lo_.get()), chain.variations(hi_.get())});
    while (!stack.empty()) {
      Cell c = std::move(stack.back());
      stack.pop_back();
      int count = c.va - c.vb;
      if (count <= 0) continue;
      if (count == 1) {
        out.push_back(trim_ends({c.a, c.b, true}));
        continue;
      }
      Rat m = split_point(c.a, c.b);
      int vm = chain.variations(m.get());
      stack.push_back({m, c.b, vm, c.vb});
      stack.push_back({c.a, m, c.va, vm});
    }
    return sorted(std::move(out));
  }

  RootEnclosure refine(RootEnclosure e, const Rat& width) const {
    if (e.exact()) return e;
    int s_lo = squarefree_.sign_at(e.lo.get());
    while (e.hi - e.lo > width) {
      Rat m = (e.lo + e.hi) / Rat(2);
      int s = squarefree_.sign_at(m.get());
      if (s == 0) return {m, m, true};
      if (s == s_lo) {
        e.lo = m;
      } else {
        e.hi = m;
      }
    }
    return e;
  }

 private:
  static std::vector<RootEnclosure> sorted(std::vector<RootEnclosure> v) {
    std::sort(v.begin(), v.end(), [](const RootEnclosure& x, const RootEnclosure& y) { return x.lo < y.lo; });
    return v;
  }

  Rat split_point(const Rat& a, const Rat& b) const {
    Rat m = (a + b) / Rat(2);
    if (inner_.sign_at(m.get()) != 0) return m;
    for (long d = 3;; ++d) {
      for (long n = 1; n < d; ++n) {
        Rat t = a + (b - a) * Rat(n, d);
        if (inner_.sign_at(t.get()) != 0) return t;
      }
    }
  }

  // Moves an enclosure end off a deflated endpoint root so that p itself
  // changes sign strictly inside.
  RootEnclosure trim_ends(RootEnclosure e) const {
    const SturmChain& chain = chain_.front();
    if (lo_root_ && e.lo == lo_) {
      Rat step = (e.hi - e.lo) / Rat(2);
      int v0 = chain.variations(e.lo.get());
      while (true) {
        Rat t = e.lo + step;
        if (inner_.sign_at(t.get()) != 0 && chain.variations(t.get()) == v0) {
          e.lo = t;
          break;
        }
        step /= Rat(2);
      }
    }
    if (hi_root_ && e.hi == hi_) {
      Rat step = (e.hi - e.lo) / Rat(2);
      int v1 = chain.variations(e.hi.get());
      while (true) {
        Rat t = e.hi - step;
        if (inner_.sign_at(t.get()) != 0 && chain.variations(t.get()) == v1) {
          e.hi = t;
          break;
        }
        step /= Rat(2);
      }
    }
    return e;
  }

  Rat lo_, hi_;
  bool lo_root_ = false;
  bool hi_root_ = false;
  IntPoly squarefree_;
  IntPoly inner_;
  std::vector<SturmChain> chain_;
  std::vector<RootEnclosure> endpoint_roots_;
};

constexpr int kMaxRefinements = 400;

}  // namespace

std::vector<RootEnclosure> isolate_real_roots(const RatPoly& p, const Rat& lo,
                                              const Rat& hi, SquarefreeMode mode) {
  return Isolator(p, lo, hi, mode).isolate();
}

RootEnclosure refine_root(const RatPoly& p, RootEnclosure e, const Rat& width) {
  if (e.exact()) return e;
  IntPoly q(p);
  int s_lo = q.sign_at(e.lo.get());
  if (s_lo == 0 || q.sign_at(e.hi.get()) == s_lo) {
    throw std::invalid_argument("refine_root: no sign change across enclosure");
  }
  while (e.hi - e.lo > width) {
    Rat m = (e.lo + e.hi) / Rat(2);
    int s = q.sign_at(m.get());
    if (s == 0) return {m, m, true};
    if (s == s_lo) {
      e.lo = m;
    } else {
      e.hi = m;
    }
  }
  return e;
}

int count_real_roots(const RatPoly& p, const Rat& lo, const Rat& hi) {
  auto roots = isolate_real_roots(p, lo, hi);
  int n = static_cast<int>(roots.size());
  if (!roots.empty() && roots.front().exact() && roots.front().lo == lo) --n;
  return n;
}

RatRange taylor_range(const RatPoly& p, const Rat& lo, const Rat& hi) {
  RatPoly t = taylor_shift(p, lo);
  if (t.is_zero()) return {Rat(0), Rat(0)};
  const mpq_class w = (hi - lo).get();
  mpq_class low = t.coeffs()[0].get();
  mpq_class high = low;
  mpq_class wp = 1;
  for (int j = 1; j <= t.degree(); ++j) {
    wp *= w;
    const mpq_class& c = t.coeffs()[static_cast<size_t>(j)].get();
    if (sgn(c) < 0) {
      low += c * wp;
    } else {
      high += c * wp;
    }
  }
  return {Rat(low), Rat(high)};
}

RatRange certified_min_on_interval(const RatPoly& p, const Rat& lo, const Rat& hi,
                                   const Rat& width) {
  if (width.sign() <= 0) throw std::invalid_argument("certified_min_on_interval: width must be positive");
  if (hi < lo) throw std::invalid_argument("certified_min_on_interval: empty interval");
  const Rat end_min = min(p(lo), p(hi));
  RatPoly dp = poly_derivative(p);
  if (dp.is_zero() || lo == hi) return {end_min, end_min};

  Isolator iso(dp, lo, hi, SquarefreeMode::kReduce);
  struct Crit { RootEnclosure e; Rat lb; Rat ub; };
  std::vector<Crit> crits;
  auto bound = [&p](Crit& c) {
    if (c.e.exact()) {
      c.lb = c.ub = p(c.e.lo);
    } else {
      c.lb = taylor_range(p, c.e.lo, c.e.hi).lo;
      c.ub = min(p(c.e.lo), p(c.e.hi));
    }
  };
  for (auto& e : iso.isolate()) {
    crits.push_back({e, Rat(0), Rat(0)});
    bound(crits.back());
  }
  for (int round = 0;; ++round) {
    Rat m_lo = end_min;
    Rat m_hi = end_min;
    for (const auto& c : crits) {
      if (c.lb < m_lo) m_lo = c.lb;
      if (c.ub < m_hi) m_hi = c.ub;
    }
    if (m_hi - m_lo <= width || round >= kMaxRefinements) return {m_lo, m_hi};
    const Rat cut = m_hi - width;
    for (auto& c : crits) {
      if (c.e.exact() || !(c.lb < cut)) continue;
      c.e = iso.refine(c.e, c.e.width() / Rat(2));
      bound(c);
    }
  }
}

RatRange certified_max_on_interval(const RatPoly& p, const Rat& lo, const Rat& hi,
                                   const Rat& width) {
  RatRange r = certified_min_on_interval(-p, lo, hi, width);
  return {-r.hi, -r.lo};
}

bool certify_upper_bound(const RatPoly& p, const Rat& lo, const Rat& hi,
                         const Rat& bound, bool strict) {
  auto exceeds = [&](const Rat& v) { return strict ? !(v < bound) : bound < v; };
  if (exceeds(p(lo)) || exceeds(p(hi))) return false;
  RatPoly dp = poly_derivative(p);
  if (dp.is_zero() || lo == hi) return true;
  Isolator iso(dp, lo, hi, SquarefreeMode::kReduce);
  for (auto e : iso.isolate()) {
    bool settled = false;
    for (int round = 0; round < kMaxRefinements && !settled; ++round) {
      if (e.exact()) {
        if (exceeds(p(e.lo))) return false;
        settled = true;
        break;
      }
      if (!exceeds(taylor_range(p, e.lo, e.hi).hi)) {
        settled = true;
        break;
      }
      if (exceeds(p(e.lo)) || exceeds(p(e.hi))) return false;
      e = iso.refine(e, e.width() / Rat(2));
    }
    if (!settled) return false;
  }
  return true;
}

}  // namespace gegencert
