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

#include "gegencert/gegenbauer.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "gegencert/errors.hpp"
#include "gegencert/roots.hpp"

namespace gegencert {

HalfInt::HalfInt(int twice_value) : twice_(twice_value) {
  if (twice_value < 1) throw std::invalid_argument("HalfInt: twice_value must be >= 1");
}

const RatPoly& PolyCache::get(int k) {
  if (k < 0) throw std::invalid_argument("PolyCache: negative degree");
  {
    std::shared_lock lock(mu_);
    if (static_cast<size_t>(k) < items_.size()) return items_[static_cast<size_t>(k)];
  }
  std::unique_lock lock(mu_);
  while (items_.size() <= static_cast<size_t>(k)) {
    int next = static_cast<int>(items_.size());
    items_.push_back(build_(next, *this));
  }
  return items_[static_cast<size_t>(k)];
}

namespace {

// Builders run with the cache lock held; they read earlier entries directly.
class RecurrenceFamily {
 public:
  explicit RecurrenceFamily(HalfInt nu)
      : nu_(nu), cache_([this](int k, PolyCache&) { return build(k); }) {}

  const RatPoly& get(int k) { return cache_.get(k); }

 private:
  RatPoly build(int k) {
    // Only called for k == built_.size(), under the cache's unique lock.
    RatPoly p;
    const int t = nu_.twice_value();
    if (k == 0) {
      p = RatPoly::constant(Rat(1));
    } else if (k == 1) {
      p = RatPoly::monomial(Rat(t), 1);
    } else {
      // k C_k = (2k + t - 2) x C_{k-1} - (k + t - 2) C_{k-2}
      const RatPoly& c1 = built_[static_cast<size_t>(k - 1)];
      const RatPoly& c2 = built_[static_cast<size_t>(k - 2)];
      p = RatPoly::identity() * c1 * Rat(2 * k + t - 2, k) - c2 * Rat(k + t - 2, k);
    }
    built_.push_back(p);
    return p;
  }

  HalfInt nu_;
  std::deque<RatPoly> built_;
  PolyCache cache_;
};

RecurrenceFamily& family(HalfInt nu) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RecurrenceFamily>> families;
  std::lock_guard lock(mu);
  auto& slot = families[nu.twice_value()];
  if (!slot) slot = std::make_unique<RecurrenceFamily>(nu);
  return *slot;
}

PolyCache& zonal_cache() {
  static PolyCache cache([](int k, PolyCache&) {
    return gegenbauer(HalfInt(3), k) * Rat(2, (k + 1) * (k + 2));
  });
  return cache;
}

PolyCache& scaled_derivative_cache() {
  static PolyCache cache([](int k, PolyCache&) {
    if (k == 0) return RatPoly();
    const Rat lam = lambda_of(k);
    return gegenbauer(HalfInt(5), k - 1) * (Rat(24) / (lam * (lam + Rat(2))));
  });
  return cache;
}

}  // namespace

const RatPoly& gegenbauer(HalfInt nu, int k) {
  if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
  return family(nu).get(k);
}

Rat gegenbauer_value(HalfInt nu, int k, const Rat& x) {
  if (k < 0) throw std::invalid_argument("gegenbauer_value: negative degree");
  const int t = nu.twice_value();
  mpq_class prev = 1;
  if (k == 0) return Rat(1);
  mpq_class cur = t * x.get();
  for (int m = 2; m <= k; ++m) {
    mpq_class next = (mpq_class(2 * m + t - 2) * x.get() * cur - mpq_class(m + t - 2) * prev) / m;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Rat(cur);
}

Rat gegenbauer_at_one(HalfInt nu, int k) {
  Rat r(1);
  const Rat two_nu(nu.twice_value());
  for (int i = 0; i < k; ++i) r *= (two_nu + Rat(i)) / Rat(i + 1);
  return r;
}

Eigenvalue eigenvalue(int k) { return {k, lambda_of(k)}; }

Rat lambda_of(int k) { return Rat(static_cast<long>(k) * (k + 3)); }

const RatPoly& zonal_profile(int k) { return zonal_cache().get(k); }

const RatPoly& scaled_derivative(int k) {
  if (k < 1) throw std::invalid_argument("scaled_derivative: k must be >= 1");
  return scaled_derivative_cache().get(k);
}

RatPoly scaled_derivative_from_profile(int k) {
  if (k < 1) throw std::invalid_argument("scaled_derivative_from_profile: k must be >= 1");
  return poly_derivative(zonal_profile(k)) * (Rat(4) / lambda_of(k));
}

bool check_derivative_identity(HalfInt nu, int k) {
  if (k < 1) throw std::invalid_argument("check_derivative_identity: k must be >= 1");
  return poly_derivative(gegenbauer(nu, k)) == gegenbauer(nu.plus_one(), k - 1) * Rat(nu.twice_value());
}

bool check_ode(int k) {
  const RatPoly& f = zonal_profile(k);
  RatPoly d1 = poly_derivative(f);
  RatPoly d2 = poly_derivative(d1);
  RatPoly one_minus_x2(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)});
  RatPoly residual = one_minus_x2 * d2 - RatPoly::monomial(Rat(4), 1) * d1 + f * lambda_of(k);
  return residual.is_zero();
}

Rat orthogonality_constant(int k) {
  return Rat(8) / (Rat(2 * k + 3) * Rat(k + 1) * Rat(k + 2));
}

bool check_orthogonality(int k, int l) {
  Rat v = weighted_inner_product(zonal_profile(k), zonal_profile(l));
  return k == l ? v == orthogonality_constant(k) : v.is_zero();
}

Rat derivative_max_bound(int k) {
  if (k < 1) throw std::invalid_argument("derivative_max_bound: k must be >= 1");
  const Rat bound = lambda_of(k) / Rat(4);
  RatPoly d = poly_derivative(zonal_profile(k));
  if (!certify_upper_bound(d, Rat(-1), Rat(1), bound) ||
      !certify_upper_bound(-d, Rat(-1), Rat(1), bound)) {
    throw VerificationError(ErrorKind::kBoundViolated,
                            "|F'_" + std::to_string(k) + "| exceeds lambda/4 on [-1, 1]");
  }
  return bound;
}

}  // namespace gegencert
