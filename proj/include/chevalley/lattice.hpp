#pragma once

#include <vector>

#include "chevalley/arith.hpp"

namespace chevalley {

using BigMatrix = std::vector<BigVec>;

/// Row Hermite normal form of a generating set. Returns the nonzero rows,
/// upper triangular with positive pivots and entries above each pivot
/// reduced into [0, pivot).
BigMatrix hermite_normal_form(BigMatrix rows, std::size_t ncols);

/// Invariant factors (diagonal of the Smith normal form), including 1s and
/// trailing zeros for rank deficiency.
BigVec smith_invariants(BigMatrix m);

/// A full-rank sublattice of Z^n, stored by its Hermite basis.
///
/// The Hermite basis makes every coset v + L have a unique reduced
/// representative with 0 <= v_k < pivot_k.
class Lattice {
 public:
  Lattice() = default;

  /// Throws Error if the generators do not span a rank-n lattice.
  static Lattice from_generators(const BigMatrix& gens, std::size_t n);
  static Lattice identity(std::size_t n);

  std::size_t dim() const { return n_; }
  const BigMatrix& basis() const { return basis_; }

  /// [Z^n : L].
  BigInt index() const;

  bool contains(const BigVec& v) const;
  bool contains(const RatVec& v) const;

  /// Unique representative of v + L.
  BigVec reduce(BigVec v) const;

  /// Coordinates of v in the Hermite basis; throws if v is not in L.
  BigVec coordinates(const BigVec& v) const;

  /// Vector with the given basis coordinates.
  BigVec combine(const BigVec& coords) const;

  bool operator==(const Lattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }

 private:
  std::size_t n_ = 0;
  BigMatrix basis_;
};

/// Exact inverse of a square rational matrix; throws if singular.
std::vector<RatVec> inverse(const std::vector<RatVec>& m);

BigInt determinant(const std::vector<IntVec>& m);

}  // namespace chevalley
