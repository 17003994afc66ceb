#include "chevalley/realforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace chevalley {

int ExtendedDiagram::sum_of_labels() const {
  return std::accumulate(labels.begin(), labels.end(), 0);
}

IntVec ExtendedDiagram::node_root(int a) const {
  if (a == 0) return lowest_root;
  IntVec e(lowest_root.size(), 0);
  e[static_cast<std::size_t>(a - 1)] = 1;
  return e;
}

ExtendedDiagram extended_diagram(const RootDatum& datum) {
  ExtendedDiagram d;
  const IntVec& theta = datum.highest_root();
  d.labels.push_back(1);
  for (auto c : theta) d.labels.push_back(static_cast<int>(c));
  for (auto c : theta) d.lowest_root.push_back(-c);
  const int m = datum.rank();
  d.cartan.assign(static_cast<std::size_t>(m + 1), IntVec(static_cast<std::size_t>(m + 1), 0));
  d.adjacency.resize(static_cast<std::size_t>(m + 1));
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      d.cartan[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          datum.pair_root_coroot(d.node_root(b), d.node_root(a));
      if (a != b && d.cartan[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0)
        d.adjacency[static_cast<std::size_t>(a)].push_back(b);
    }
  return d;
}

namespace {

std::vector<int> kac_vector(const ExtendedDiagram& d, int node) {
  std::vector<int> s(d.labels.size(), 0);
  if (node == 0) s[0] = 2;
  else if (d.labels[static_cast<std::size_t>(node)] == 1) s[0] = s[static_cast<std::size_t>(node)] = 1;
  else s[static_cast<std::size_t>(node)] = 1;
  return s;
}

void require_kac_node(const ExtendedDiagram& d, int node) {
  if (node < 0 || node >= static_cast<int>(d.labels.size()))
    throw Error("node " + std::to_string(node) + " out of range");
  if (d.labels[static_cast<std::size_t>(node)] > 2)
    throw Error("node " + std::to_string(node) + " has label " +
                std::to_string(d.labels[static_cast<std::size_t>(node)]) + " (Kac condition needs 1 or 2)");
}

// Reflection s_beta on simple-root coordinates.
IntMatrix root_reflection(const RootDatum& datum, const IntVec& beta) {
  const int n = datum.rank();
  IntVec co = datum.coroot_coweight(beta);
  IntMatrix r = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) r.at(i, k) -= beta[static_cast<std::size_t>(i)] * co[static_cast<std::size_t>(k)];
  return r;
}

}  // namespace

std::vector<int> equal_rank_forms(const RootDatum& datum, bool dedupe) {
  ExtendedDiagram d = extended_diagram(datum);
  std::vector<int> nodes;
  for (int a = 0; a < static_cast<int>(d.labels.size()); ++a)
    if (d.labels[static_cast<std::size_t>(a)] <= 2) nodes.push_back(a);
  if (!dedupe) return nodes;

  auto autos = diagram_automorphisms(d.cartan);
  std::vector<int> kept;
  for (int j : nodes) {
    auto target = kac_vector(d, j);
    bool seen_earlier = false;
    for (int i : nodes) {
      if (i >= j) break;
      auto s = kac_vector(d, i);
      for (const auto& p : autos) {
        std::vector<int> img(s.size(), 0);
        for (std::size_t a = 0; a < s.size(); ++a) img[static_cast<std::size_t>(p[a])] = s[a];
        if (img == target) {
          seen_earlier = true;
          break;
        }
      }
      if (seen_earlier) break;
    }
    if (!seen_earlier) kept.push_back(j);
  }
  return kept;
}

std::string KSubsystem::type_name() const {
  std::string s = components.empty() ? "" : components_name(components);
  if (central_torus_dim > 0) s += (s.empty() ? "T" : "xT") + std::to_string(central_torus_dim);
  return s.empty() ? "1" : s;
}

KSubsystem k_subdatum(const RootDatum& datum, int node) {
  ExtendedDiagram d = extended_diagram(datum);
  require_kac_node(d, node);
  const int m = datum.rank();
  KSubsystem k;
  k.node = node;
  const int label = d.labels[static_cast<std::size_t>(node)];
  if (node == 0) {
    for (int a = 1; a <= m; ++a) k.simple_roots.push_back(d.node_root(a));
  } else if (label == 2) {
    for (int a = 0; a <= m; ++a)
      if (a != node) k.simple_roots.push_back(d.node_root(a));
  } else {
    for (int a = 1; a <= m; ++a)
      if (a != node) k.simple_roots.push_back(d.node_root(a));
    k.central_torus_dim = 1;
  }
  const std::size_t r = k.simple_roots.size();
  k.cartan.assign(r, IntVec(r, 0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      k.cartan[a][b] = datum.pair_root_coroot(k.simple_roots[b], k.simple_roots[a]);
  k.components = identify_components(k.cartan);

  std::vector<IntMatrix> refl;
  for (const auto& beta : k.simple_roots) refl.push_back(root_reflection(datum, beta));
  std::set<IntVec> seen(k.simple_roots.begin(), k.simple_roots.end());
  std::vector<IntVec> frontier = k.simple_roots;
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& g : frontier)
      for (const auto& s : refl) {
        IntVec img = s * g;
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  k.roots.assign(seen.begin(), seen.end());

  // functional equal to 1 on every simple root of K
  RatVec f(static_cast<std::size_t>(m), 1);
  if (node != 0 && label == 2) {
    Rational rest = 1;
    for (int a = 1; a <= m; ++a)
      if (a != node) rest += d.labels[static_cast<std::size_t>(a)];
    f[static_cast<std::size_t>(node - 1)] = -rest / label;
  }
  for (const auto& root : k.roots) {
    Rational v = 0;
    for (std::size_t i = 0; i < root.size(); ++i) v += f[i] * root[i];
    if (v > 0) k.positive_roots.push_back(root);
  }
  return k;
}

std::vector<IntVec> parity_root_set(const RootDatum& datum, int node) {
  std::vector<IntVec> out;
  for (const auto& r : datum.roots())
    if (node == 0 || r[static_cast<std::size_t>(node - 1)] % 2 == 0) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

Coweight rho_check_k(const RootDatum& datum, const KSubsystem& k) {
  RatVec sum(static_cast<std::size_t>(datum.rank()), 0);
  for (const auto& r : k.positive_roots) {
    IntVec v = datum.coroot_coweight(r);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
  }
  for (auto& q : sum) q /= 2;
  return Coweight{sum};
}

IntMatrix k_longest_element(const RootDatum& datum, const KSubsystem& k) {
  const int n = datum.rank();
  IntMatrix w = IntMatrix::identity(n);
  RatVec v = rho_check_k(datum, k).coords;
  std::vector<IntVec> co;
  for (const auto& b : k.simple_roots) co.push_back(datum.coroot_coweight(b));
  while (true) {
    std::size_t pick = k.simple_roots.size();
    Rational p = 0;
    for (std::size_t a = 0; a < k.simple_roots.size(); ++a) {
      Rational s = 0;
      for (int i = 0; i < n; ++i) s += v[static_cast<std::size_t>(i)] * k.simple_roots[a][static_cast<std::size_t>(i)];
      if (s > 0) {
        pick = a;
        p = s;
        break;
      }
    }
    if (pick == k.simple_roots.size()) break;
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] -= p * co[pick][static_cast<std::size_t>(i)];
    w = w * root_reflection(datum, k.simple_roots[pick]);
  }
  return w;
}

RhoCheckIdentity rho_check_identity(const RootDatum& datum, int node) {
  ExtendedDiagram d = extended_diagram(datum);
  require_kac_node(d, node);
  KSubsystem k = k_subdatum(datum, node);
  RhoCheckIdentity out;
  out.node = node;
  out.label = d.labels[static_cast<std::size_t>(node)];
  out.coxeter_sum = d.sum_of_labels();
  out.c = out.label == 2 ? Rational(out.coxeter_sum, 2) : Rational(out.coxeter_sum - 1);
  out.difference = rho_check(datum) - rho_check_k(datum, k);
  Coweight lambda = fundamental_coweight(datum, node);
  out.holds = out.difference == lambda.scaled(out.c);
  if (node > 0) {
    bool multiple = true;
    for (int i = 1; i <= datum.rank(); ++i)
      if (i != node && out.difference.coords[static_cast<std::size_t>(i - 1)] != 0) multiple = false;
    if (multiple) out.observed = out.difference.coords[static_cast<std::size_t>(node - 1)];
  }
  return out;
}

bool purity(const RootDatum& datum, int node) {
  if (!minus_one_in_weyl(datum))
    throw Error("purity undefined for this datum: -1 is not in the Weyl group of " +
                datum.type().name());
  require_kac_node(extended_diagram(datum), node);
  return datum.cochar_lattice().contains(fundamental_coweight(datum, node).coords);
}

std::string RealFormDescriptor::variant_name() const {
  switch (variant.index()) {
    case 0: return "equal_rank";
    case 1: return "unequal_rank";
    default: return "complex";
  }
}

namespace {
bool has_unequal_rank_forms(const CartanType& t) {
  return (t.series() == Series::A && t.rank() >= 2) || t.series() == Series::D ||
         (t.series() == Series::E && t.rank() == 6);
}
}  // namespace

bool all_reps_self_dual(const RootDatum& datum, const RealFormDescriptor& form) {
  if (!(form.type == datum.type()))
    throw Error("descriptor/datum mismatch: form of type " + form.type.name() + ", datum " +
                datum.type().name());
  if (const auto* c = std::get_if<ComplexGroup>(&form.variant)) {
    if (!(c->type == datum.type())) throw Error("descriptor/datum mismatch: complex group type");
    return minus_one_in_weyl(datum);
  }
  if (!(form.lattice == datum.lattice_spec()) &&
      !(datum.char_lattice() == RootDatum::build(form.type, form.lattice).char_lattice()))
    throw Error("descriptor/datum mismatch: lattice " + form.lattice.name() + " vs " +
                datum.lattice_spec().name());
  if (const auto* e = std::get_if<EqualRank>(&form.variant)) {
    require_kac_node(extended_diagram(datum), e->node);
    return minus_one_in_weyl(datum) && purity(datum, e->node);
  }
  if (!has_unequal_rank_forms(datum.type()))
    throw Error("descriptor/datum mismatch: " + datum.type().name() + " has no unequal-rank real forms");
  return datum.type().series() == Series::D && datum.rank() % 2 == 0;
}

bool lpackets_self_dual(const RootDatum& datum) { return minus_one_in_weyl(datum); }

}  // namespace chevalley
