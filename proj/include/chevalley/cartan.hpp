#pragma once

#include <string>
#include <vector>

#include "chevalley/arith.hpp"

namespace chevalley {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);
Series parse_series(const std::string& s);

/// A simple Cartan type. Only legal (series, rank) pairs can be built;
/// C2 is canonicalized to B2.
class CartanType {
 public:
  static CartanType make(Series s, int rank);
  static CartanType parse(const std::string& text);  // "E8", "C3", ...

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;

  bool operator==(const CartanType&) const = default;
  auto operator<=>(const CartanType&) const = default;

 private:
  CartanType(Series s, int r) : series_(s), rank_(r) {}
  Series series_ = Series::A;
  int rank_ = 1;
};

/// Every simple type of rank <= max_rank, in series then rank order.
std::vector<CartanType> all_simple_types(int max_rank);

/// Cartan matrix in Bourbaki numbering, A[i][j] = <alpha_j, alpha_i^vee>.
std::vector<IntVec> cartan_matrix(const CartanType& t);

/// Classical data used as independent cross-checks.
BigInt classical_weyl_order(const CartanType& t);
int classical_root_count(const CartanType& t);
int classical_connection_index(const CartanType& t);
int coxeter_number(const CartanType& t);

/// True for the types listed as having -1 in the Weyl group:
/// A1, B_n, C_n, D_{2n}, F4, G2, E7, E8.
bool classically_has_minus_one(const CartanType& t);

/// Decomposition of a (possibly reducible) Cartan matrix into simple
/// components, with the node indices of each component.
struct CartanComponent {
  CartanType type;
  std::vector<int> nodes;
};
std::vector<CartanComponent> identify_components(const std::vector<IntVec>& cartan);

std::string components_name(const std::vector<CartanComponent>& comps);

}  // namespace chevalley
