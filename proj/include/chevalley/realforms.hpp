#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chevalley/rootdata.hpp"
#include "chevalley/weyl.hpp"

namespace chevalley {

/// Extended Dynkin diagram: node 0 is alpha_0 = -(highest root).
struct ExtendedDiagram {
  std::vector<int> labels;         // n_0 = 1, n_1..n_m
  IntVec lowest_root;              // alpha_0 in simple-root coordinates
  std::vector<IntVec> cartan;      // (m+1)x(m+1), [a][b] = <alpha_b, alpha_a-check>
  std::vector<std::vector<int>> adjacency;

  int sum_of_labels() const;  // N, the Coxeter number
  /// Simple-root coordinates of node a (node 0 is the lowest root).
  IntVec node_root(int a) const;
};

ExtendedDiagram extended_diagram(const RootDatum& datum);

/// Nodes j with n_j in {1,2}, node 0 first. With dedupe, one node per orbit
/// of extended-diagram automorphisms acting on Kac coordinates.
std::vector<int> equal_rank_forms(const RootDatum& datum, bool dedupe = false);

/// Complexified maximal compact subgroup K0 of the equal-rank form at node j.
struct KSubsystem {
  int node = 0;
  std::vector<IntVec> simple_roots;   // in G's simple-root coordinates
  std::vector<IntVec> cartan;         // Cartan matrix among simple_roots
  std::vector<CartanComponent> components;
  int central_torus_dim = 0;
  std::vector<IntVec> roots;          // sorted
  std::vector<IntVec> positive_roots; // positive for the simple_roots system

  std::string type_name() const;
};

KSubsystem k_subdatum(const RootDatum& datum, int node);

/// {alpha : <alpha, lambda_j-check> even}; the roots fixed by exp(pi i lambda_j-check).
std::vector<IntVec> parity_root_set(const RootDatum& datum, int node);

/// Half-sum of positive coroots of K.
Coweight rho_check_k(const RootDatum& datum, const KSubsystem& k);

/// Longest element of W(K0), acting on G's simple-root coordinates.
IntMatrix k_longest_element(const RootDatum& datum, const KSubsystem& k);

struct RhoCheckIdentity {
  int node = 0;
  int label = 1;
  int coxeter_sum = 0;            // N
  Rational c;                     // N/2 if n_j = 2, N-1 if n_j = 1
  bool holds = false;             // rho_G - rho_K == c * lambda_j-check
  std::optional<Rational> observed;  // the c' with rho_G - rho_K = c' lambda_j, if any
  Coweight difference;            // rho_G - rho_K
};

RhoCheckIdentity rho_check_identity(const RootDatum& datum, int node);

/// x^2 = 1 for x = exp(pi i lambda_j-check), i.e. lambda_j-check in X-check.
/// Throws unless -1 is in W.
bool purity(const RootDatum& datum, int node);

struct EqualRank {
  int node = 0;
  bool operator==(const EqualRank&) const = default;
};
struct UnequalRankReal {
  std::string family;
  bool operator==(const UnequalRankReal&) const = default;
};
struct ComplexGroup {
  CartanType type = CartanType::make(Series::A, 1);
  bool operator==(const ComplexGroup&) const = default;
};

struct RealFormDescriptor {
  CartanType type = CartanType::make(Series::A, 1);
  LatticeSpec lattice;
  std::variant<EqualRank, UnequalRankReal, ComplexGroup> variant;

  bool is_equal_rank() const { return std::holds_alternative<EqualRank>(variant); }
  std::string variant_name() const;
  bool operator==(const RealFormDescriptor&) const = default;
};

/// Every irreducible representation of the real form is self-dual.
bool all_reps_self_dual(const RootDatum& datum, const RealFormDescriptor& form);

bool lpackets_self_dual(const RootDatum& datum);

}  // namespace chevalley
