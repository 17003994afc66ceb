#pragma once

#include <optional>
#include <vector>

#include "chevalley/rootdata.hpp"

namespace chevalley {

/// Square integer matrix stored row-major.
struct IntMatrix {
  int n = 0;
  IntVec a;

  static IntMatrix identity(int n);
  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix transposed() const;
  bool is_identity() const;
  bool is_minus_identity() const;
  bool operator==(const IntMatrix&) const = default;
};

/// Element of the Weyl group. Equality compares the action, never the word.
struct WeylElement {
  IntMatrix root_action;     // on simple-root coordinates
  IntMatrix coweight_action; // on fundamental-coweight coordinates
  std::optional<std::vector<int>> word;  // 1-based simple indices, w = s_{w[0]} s_{w[1]} ...

  int rank() const { return root_action.n; }
  bool is_identity() const { return root_action.is_identity(); }
  WeylElement operator*(const WeylElement& o) const;
  bool operator==(const WeylElement& o) const { return root_action == o.root_action; }

  IntVec apply_root(const IntVec& c) const { return root_action * c; }
  IntVec apply_coweight(const IntVec& v) const { return coweight_action * v; }
};

WeylElement identity_element(const RootDatum& datum);
WeylElement simple_reflection(const RootDatum& datum, int i);
WeylElement from_word(const RootDatum& datum, const std::vector<int>& word);

/// True if w^{-1}(alpha_i) is negative, i.e. l(s_i w) < l(w).
bool has_left_descent(const WeylElement& w, int i);

/// Reduced word, preferring the stored word when it exists.
std::vector<int> reduced_word(const RootDatum& datum, const WeylElement& w);
int length(const RootDatum& datum, const WeylElement& w);

/// w_0 via the descent walk from rho (lowest index first).
WeylElement longest_element(const RootDatum& datum);
bool minus_one_in_weyl(const RootDatum& datum);

/// Element -> -w_0 permutation of simple indices, 1-based values.
std::vector<int> dual_involution_on_simples(const RootDatum& datum);

/// Weight-coordinate action of w: lambda -> w(lambda) in fundamental weights.
IntVec apply_weight(const RootDatum& datum, const WeylElement& w, const IntVec& weight);
/// s_i on a weight in fundamental-weight coordinates.
IntVec reflect_weight(const RootDatum& datum, int i, IntVec weight);

constexpr int kWeylEnumerationMaxRank = 6;

/// Whole group by breadth-first closure; words are reduced (BFS order).
/// Throws for rank > 6. Parallel over each frontier.
std::vector<WeylElement> enumerate_weyl(const RootDatum& datum);
/// Serial reference for enumerate_weyl with the same output order.
std::vector<WeylElement> enumerate_weyl_serial(const RootDatum& datum);

/// Every reduced word of w (exponential; small groups only).
std::vector<std::vector<int>> all_reduced_words(const RootDatum& datum, const WeylElement& w);

}  // namespace chevalley
