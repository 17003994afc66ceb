#include "chevalley/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace chevalley {

LatticeSpec LatticeSpec::named(const std::string& name, const CartanType& t) {
  if (name == "sc") return simply_connected();
  if (name == "ad") return adjoint();
  const int n = t.rank();
  if (name == "so" || name == "sobar") {
    if (t.series() != Series::D) throw Error("lattice '" + name + "' needs type D");
    if (name == "sobar" && n % 2 != 0) throw Error("lattice 'sobar' needs type D_{2n}");
    IntVec g(n, 0);
    g[name == "so" ? 0 : n - 1] = 1;
    LatticeSpec spec = from_generators({g});
    spec.label = name;
    return spec;
  }
  throw Error("unknown lattice '" + name + "'");
}

std::string LatticeSpec::name() const {
  switch (kind) {
    case Kind::SimplyConnected: return "sc";
    case Kind::Adjoint: return "ad";
    case Kind::Generators: return label.empty() ? "gen" : label;
  }
  return "gen";
}

Coweight Coweight::operator-(const Coweight& o) const {
  Coweight r = *this;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

Coweight Coweight::operator+(const Coweight& o) const {
  Coweight r = *this;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Coweight Coweight::scaled(const Rational& k) const {
  Coweight r = *this;
  for (auto& c : r.coords) c *= k;
  return r;
}

BigInt FiniteAbelianGroup::order() const {
  BigInt o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

bool FiniteAbelianGroup::is_elementary_two_group() const {
  for (const auto& d : invariant_factors)
    if (d != 2) return false;
  return true;
}

std::string FiniteAbelianGroup::to_string() const {
  if (invariant_factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += "xZ/";
    else s += "Z/";
    s += invariant_factors[i].str();
  }
  return s;
}

namespace {

IntVec compute_symmetrizer(const std::vector<IntVec>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && a[i][j] != 0 && d[j] == 0) {
        d[j] = d[i] * a[i][j] / a[j][i];
        queue.push_back(j);
      }
  }
  BigInt l = 1;
  for (const auto& q : d) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  Rational minv = *std::min_element(d.begin(), d.end()) * l;
  IntVec out;
  for (const auto& q : d) out.push_back(to_int64(boost::multiprecision::numerator(Rational(q * l / minv))));
  return out;
}

std::int64_t height(const IntVec& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

std::vector<IntVec> root_closure(const std::vector<IntVec>& a) {
  const std::size_t n = a.size();
  std::set<IntVec> seen;
  std::vector<IntVec> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& r : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = 0;
        for (std::size_t k = 0; k < n; ++k) p += a[i][k] * r[k];
        if (p == 0) continue;
        IntVec s = r;
        s[i] -= p;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  std::vector<IntVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const IntVec& x, const IntVec& y) {
    auto hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  return out;
}

}  // namespace

RootDatum RootDatum::build(const CartanType& type, const LatticeSpec& lattice) {
  RootDatum rd;
  rd.type_ = type;
  rd.spec_ = lattice;
  rd.cartan_ = cartan_matrix(type);
  const std::size_t n = static_cast<std::size_t>(type.rank());
  std::vector<RatVec> ar;
  for (const auto& row : rd.cartan_) ar.push_back(to_rational(row));
  rd.cartan_inverse_ = inverse(ar);
  rd.d_ = compute_symmetrizer(rd.cartan_);

  // X: Q (columns of A, as weights) plus the requested generators.
  BigMatrix gens;
  if (lattice.kind == LatticeSpec::Kind::SimplyConnected) {
    for (std::size_t i = 0; i < n; ++i) {
      BigVec e(n, 0);
      e[i] = 1;
      gens.push_back(e);
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      BigVec col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = rd.cartan_[i][j];
      gens.push_back(col);
    }
    if (lattice.kind == LatticeSpec::Kind::Generators)
      for (const auto& g : lattice.generators) {
        if (g.size() != n)
          throw Error("lattice generator " + to_string(g) + " does not have rank " +
                      std::to_string(n) + " entries");
        gens.emplace_back(g.begin(), g.end());
      }
  }
  rd.x_ = Lattice::from_generators(gens, n);

  // X-check: columns of A^T B^{-1}, B the rows of the X basis.
  std::vector<RatVec> b;
  for (const auto& row : rd.x_.basis()) b.push_back(RatVec(row.begin(), row.end()));
  auto binv = inverse(b);
  BigMatrix dual;
  for (std::size_t l = 0; l < n; ++l) {
    BigVec col(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += Rational(rd.cartan_[k][i]) * binv[k][l];
      if (!is_integral(s)) throw Error("internal: dual lattice is not integral");
      col[i] = boost::multiprecision::numerator(s);
    }
    dual.push_back(col);
  }
  rd.xcheck_ = Lattice::from_generators(dual, n);

  rd.roots_ = root_closure(rd.cartan_);
  for (const auto& r : rd.roots_)
    if (height(r) > 0) rd.positive_.push_back(r);
  return rd;
}

IntVec RootDatum::coroot(const IntVec& root) const {
  const std::size_t n = root.size();
  std::int64_t twice = 0;  // (beta, beta)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) twice += root[i] * root[j] * d_[i] * cartan_[i][j];
  const std::int64_t dbeta = twice / 2;
  IntVec u(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t num = root[i] * d_[i];
    if (num % dbeta != 0) throw Error("internal: non-integral coroot");
    u[i] = num / dbeta;
  }
  return u;
}

IntVec RootDatum::coroot_coweight(const IntVec& root) const {
  IntVec u = coroot(root);
  const std::size_t n = u.size();
  IntVec v(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) v[k] += u[i] * cartan_[i][k];
  return v;
}

std::int64_t RootDatum::pair_root_coroot(const IntVec& gamma, const IntVec& beta) const {
  IntVec v = coroot_coweight(beta);
  std::int64_t s = 0;
  for (std::size_t k = 0; k < v.size(); ++k) s += gamma[k] * v[k];
  return s;
}

IntVec RootDatum::root_to_weight(const IntVec& root) const {
  const std::size_t n = root.size();
  IntVec w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) w[i] += cartan_[i][k] * root[k];
  return w;
}

RatVec RootDatum::weight_to_root_coords(const IntVec& weight) const {
  const std::size_t n = weight.size();
  RatVec c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) c[i] += cartan_inverse_[i][k] * weight[k];
  return c;
}

Rational RootDatum::pair(const IntVec& weight, const Coweight& v) const {
  RatVec c = weight_to_root_coords(weight);
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * v.coords[i];
  return s;
}

RootDatum build_root_datum(const CartanType& type, const LatticeSpec& lattice) {
  return RootDatum::build(type, lattice);
}

std::vector<IntVec> enumerate_roots(const RootDatum& datum) { return datum.roots(); }

Coweight rho_check(const RootDatum& datum) {
  const std::size_t n = static_cast<std::size_t>(datum.rank());
  RatVec sum(n, 0);
  for (const auto& r : datum.positive_roots()) {
    IntVec v = datum.coroot_coweight(r);
    for (std::size_t k = 0; k < n; ++k) sum[k] += v[k];
  }
  for (auto& q : sum) q /= 2;
  if (sum != RatVec(n, 1)) throw Error("internal: half-sum of positive coroots is not rho-check");
  return Coweight{sum};
}

Coweight fundamental_coweight(const RootDatum& datum, int node) {
  if (node < 0 || node > datum.rank()) throw Error("node index out of range");
  Coweight c{RatVec(static_cast<std::size_t>(datum.rank()), 0)};
  if (node > 0) c.coords[static_cast<std::size_t>(node - 1)] = 1;
  return c;
}

CentralElement z_of(const RootDatum& datum, const Coweight& v) {
  if (!is_integral(v.coords)) throw Error("not central: coweight " + to_string(v.coords) +
                                          " pairs non-integrally with a root");
  BigVec b;
  for (const auto& q : v.coords) b.push_back(boost::multiprecision::numerator(q));
  const Lattice& xc = datum.cochar_lattice();
  CentralElement z;
  z.rep = xc.reduce(b);
  BigInt m = 1;
  BigVec mv = b;
  while (!xc.contains(mv)) {
    ++m;
    for (std::size_t i = 0; i < b.size(); ++i) mv[i] += b[i];
  }
  z.order = m;
  return z;
}

FiniteAbelianGroup center(const RootDatum& datum) {
  FiniteAbelianGroup g;
  for (const auto& d : smith_invariants(datum.cochar_lattice().basis()))
    if (d != 1) g.invariant_factors.push_back(d);
  return g;
}

std::vector<std::vector<int>> diagram_automorphisms(const std::vector<IntVec>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k) {
        int pk = k == i ? c : perm[k];
        ok = a[i][k] == a[c][pk] && a[k][i] == a[pk][c];
      }
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      rec(i + 1);
      used[c] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
BigVec permute(const std::vector<int>& perm, const BigVec& v) {
  BigVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(perm[i])] = v[i];
  return out;
}
}  // namespace

bool preserves_cochar_lattice(const RootDatum& datum, const std::vector<int>& perm) {
  for (const auto& b : datum.cochar_lattice().basis())
    if (!datum.cochar_lattice().contains(permute(perm, b))) return false;
  return true;
}

CentralElement apply_diagram_automorphism(const RootDatum& datum, const std::vector<int>& perm,
                                          const CentralElement& z) {
  if (!preserves_cochar_lattice(datum, perm))
    throw Error("diagram automorphism does not preserve the cocharacter lattice");
  BigVec img = permute(perm, z.rep);
  Coweight c;
  for (const auto& x : img) c.coords.emplace_back(x);
  return z_of(datum, c);
}

}  // namespace chevalley
