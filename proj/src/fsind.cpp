#include "chevalley/fsind.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "chevalley/lattice.hpp"
#include "chevalley/weyl.hpp"

namespace chevalley {

Phase Phase::of(const Rational& value) {
  BigInt f = floor_div(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value));
  return Phase{value - f};
}

int Phase::sign() const {
  if (q == 0) return 1;
  if (q == Rational(1, 2)) return -1;
  throw Error("phase " + to_string(q) + " is not a sign");
}

void check_dominant_weight(const RootDatum& datum, const IntVec& lambda) {
  if (static_cast<int>(lambda.size()) != datum.rank())
    throw Error("weight has " + std::to_string(lambda.size()) + " coordinates, rank is " +
                std::to_string(datum.rank()));
  for (auto c : lambda)
    if (c < 0) throw Error("weight " + to_string(lambda) + " is not dominant");
  if (!datum.char_lattice().contains(BigVec(lambda.begin(), lambda.end())))
    throw Error("weight " + to_string(lambda) + " is not in the character lattice");
}

bool is_self_dual_weight(const RootDatum& datum, const IntVec& lambda) {
  check_dominant_weight(datum, lambda);
  auto perm = dual_involution_on_simples(datum);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[static_cast<std::size_t>(perm[i] - 1)] != lambda[i]) return false;
  return true;
}

Phase central_character_phase(const RootDatum& datum, const IntVec& lambda, const CentralElement& z) {
  if (!datum.char_lattice().contains(BigVec(lambda.begin(), lambda.end())))
    throw Error("weight " + to_string(lambda) + " is not in the character lattice");
  RatVec v(z.rep.begin(), z.rep.end());
  return Phase::of(datum.pair(lambda, Coweight{v}));
}

int fs_indicator(const RootDatum& datum, const IntVec& lambda) {
  if (!is_self_dual_weight(datum, lambda))
    throw Error("indicator undefined: weight " + to_string(lambda) + " is not self-dual");
  return central_character_phase(datum, lambda, z_of(datum, rho_check(datum))).sign();
}

BigInt weyl_dimension(const RootDatum& datum, const IntVec& lambda) {
  Rational dim = 1;
  for (const auto& root : datum.positive_roots()) {
    IntVec u = datum.coroot(root);
    BigInt num = 0, den = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      num += BigInt(u[i]) * (lambda[i] + 1);
      den += u[i];
    }
    dim *= Rational(num, den);
  }
  return boost::multiprecision::numerator(dim);
}

namespace {

void check_guard(const RootDatum& datum, const IntVec& lambda) {
  if (datum.rank() > kMultiplicityMaxRank)
    throw GuardError("weight-system guard: rank " + std::to_string(datum.rank()) + " > " +
                     std::to_string(kMultiplicityMaxRank));
  for (auto c : lambda)
    if (c > kMultiplicityMaxCoord)
      throw GuardError("weight-system guard: coordinate " + std::to_string(c) + " > " +
                       std::to_string(kMultiplicityMaxCoord));
}

IntVec dominant_representative(const RootDatum& datum, IntVec mu) {
  for (;;) {
    auto it = std::find_if(mu.begin(), mu.end(), [](std::int64_t c) { return c < 0; });
    if (it == mu.end()) return mu;
    const int i = static_cast<int>(it - mu.begin()) + 1;
    mu = reflect_weight(datum, i, std::move(mu));
  }
}

// det(A) * (x, y) for the invariant form with (alpha_i, alpha_i) = 2 d_i.
class ScaledForm {
 public:
  explicit ScaledForm(const RootDatum& datum) : d_(datum.symmetrizer()) {
    const auto& a = datum.cartan();
    const std::size_t n = a.size();
    std::vector<RatVec> m(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    auto inv = inverse(m);
    Rational det = Rational(determinant(a));
    adj_.assign(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        adj_[i][j] = to_int64(boost::multiprecision::numerator(Rational(inv[i][j] * det)));
  }

  std::int64_t operator()(const IntVec& x, const IntVec& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::int64_t c = 0;
      for (std::size_t j = 0; j < x.size(); ++j) c = checked_add(c, checked_mul(adj_[i][j], x[j]));
      s = checked_add(s, checked_mul(checked_mul(c, d_[i]), y[i]));
    }
    return s;
  }

 private:
  IntVec d_;
  std::vector<IntVec> adj_;
};

IntVec add(const IntVec& a, const IntVec& b, std::int64_t k = 1) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], checked_mul(k, b[i]));
  return r;
}

}  // namespace

std::map<IntVec, std::int64_t> dominant_multiplicities(const RootDatum& datum, const IntVec& lambda) {
  check_dominant_weight(datum, lambda);
  check_guard(datum, lambda);

  std::vector<IntVec> pos;
  std::vector<int> heights;
  for (const auto& r : datum.positive_roots()) {
    pos.push_back(datum.root_to_weight(r));
    int h = 0;
    for (auto c : r) h += static_cast<int>(c);
    heights.push_back(h);
  }

  // dominant weights below lambda, with their depth (height of lambda - mu)
  std::unordered_map<IntVec, int, VecHash> depth{{lambda, 0}};
  std::deque<IntVec> queue{lambda};
  while (!queue.empty()) {
    IntVec mu = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < pos.size(); ++a) {
      IntVec nu = add(mu, pos[a], -1);
      if (std::any_of(nu.begin(), nu.end(), [](std::int64_t c) { return c < 0; })) continue;
      if (depth.emplace(nu, depth[mu] + heights[a]).second) queue.push_back(nu);
    }
  }
  std::vector<std::pair<int, IntVec>> order;
  for (const auto& [mu, dep] : depth) order.emplace_back(dep, mu);
  std::sort(order.begin(), order.end());

  ScaledForm ip(datum);
  const IntVec rho(lambda.size(), 1);
  const IntVec lr = add(lambda, rho);
  const std::int64_t top = ip(lr, lr);
  std::map<IntVec, std::int64_t> mult{{lambda, 1}};
  for (std::size_t k = 1; k < order.size(); ++k) {
    const IntVec& mu = order[k].second;
    std::int64_t num = 0;
    for (const auto& alpha : pos) {
      for (std::int64_t s = 1;; ++s) {
        IntVec shifted = add(mu, alpha, s);
        auto it = mult.find(dominant_representative(datum, shifted));
        if (it == mult.end()) break;
        num = checked_add(num, checked_mul(ip(shifted, alpha), it->second));
      }
    }
    num = checked_mul(num, 2);
    const IntVec mr = add(mu, rho);
    const std::int64_t den = top - ip(mr, mr);
    if (den <= 0 || num % den != 0)
      throw Error("Freudenthal recursion failed at " + to_string(mu));
    if (num != 0) mult[mu] = num / den;
  }
  return mult;
}

std::map<IntVec, std::int64_t> weight_multiplicities(const RootDatum& datum, const IntVec& lambda) {
  auto dominant = dominant_multiplicities(datum, lambda);
  std::map<IntVec, std::int64_t> all;
  BigInt total = 0;
  for (const auto& [nu, m] : dominant) {
    std::deque<IntVec> queue{nu};
    all[nu] = m;
    while (!queue.empty()) {
      IntVec mu = queue.front();
      queue.pop_front();
      for (int i = 1; i <= datum.rank(); ++i) {
        IntVec img = reflect_weight(datum, i, mu);
        if (all.emplace(img, m).second) queue.push_back(std::move(img));
      }
    }
  }
  for (const auto& [mu, m] : all) total += m;
  if (total != weyl_dimension(datum, lambda))
    throw Error("weight multiplicities of " + to_string(lambda) + " do not sum to the Weyl dimension");
  return all;
}

LaurentPoly weyl_density(const RootDatum& datum) {
  LaurentPoly p = laurent_monomial(IntVec(static_cast<std::size_t>(datum.rank()), 0));
  for (const auto& r : datum.roots()) {
    LaurentPoly f = laurent_monomial(IntVec(static_cast<std::size_t>(datum.rank()), 0));
    f.emplace(datum.root_to_weight(r), -1);
    p = laurent_multiply(p, f);
  }
  return p;
}

int fs_oracle(const RootDatum& datum, const IntVec& lambda, const LaurentPoly* density) {
  check_dominant_weight(datum, lambda);
  check_guard(datum, lambda);
  LaurentPoly own;
  if (density == nullptr) {
    own = weyl_density(datum);
    density = &own;
  }
  const std::int64_t order = coefficient(*density, IntVec(lambda.size(), 0));
  std::int64_t sum = 0;
  for (const auto& [mu, m] : weight_multiplicities(datum, lambda)) {
    IntVec e(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) e[i] = -2 * mu[i];
    sum = checked_add(sum, checked_mul(m, coefficient(*density, e)));
  }
  if (order <= 0 || sum % order != 0 || sum / order < -1 || sum / order > 1)
    throw Error("Weyl integration returned " + std::to_string(sum) + "/" + std::to_string(order));
  return static_cast<int>(sum / order);
}

int fs_extended_formula(bool self_dual, int indicator_if_self_dual, const Phase& delta_sq_phase) {
  if (self_dual) return indicator_if_self_dual;
  if (!delta_sq_phase.is_sign())
    throw Error("indicator not defined by the formula: chi(delta^2) = exp(2 pi i " +
                to_string(delta_sq_phase.q) + ")");
  return delta_sq_phase.sign();
}

int fs_extended(const RootDatum& datum, const IntVec& lambda, const CentralElement& delta_sq) {
  const bool sd = is_self_dual_weight(datum, lambda);
  return fs_extended_formula(sd, sd ? fs_indicator(datum, lambda) : 0,
                             central_character_phase(datum, lambda, delta_sq));
}

}  // namespace chevalley
