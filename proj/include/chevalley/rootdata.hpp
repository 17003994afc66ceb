#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalley/arith.hpp"
#include "chevalley/cartan.hpp"
#include "chevalley/lattice.hpp"

namespace chevalley {

/// Which isogeny: X = P, X = Q, or X = Q + span(generators) with the
/// generators given in fundamental-weight coordinates.
struct LatticeSpec {
  enum class Kind { SimplyConnected, Adjoint, Generators };
  Kind kind = Kind::SimplyConnected;
  std::vector<IntVec> generators;
  /// Short name for the named intermediate D-type lattices ("so",
  /// "sobar"); empty otherwise.
  std::string label;

  static LatticeSpec simply_connected() { return {Kind::SimplyConnected, {}, ""}; }
  static LatticeSpec adjoint() { return {Kind::Adjoint, {}, ""}; }
  static LatticeSpec from_generators(std::vector<IntVec> gens) {
    return {Kind::Generators, std::move(gens), ""};
  }
  /// "sc", "ad", "so" (D_n, Q + Z w_1) or "sobar" (D_{2n}, Q + Z w_n).
  static LatticeSpec named(const std::string& name, const CartanType& t);

  std::string name() const;  // "sc", "ad", "so", "sobar" or "gen"
  bool operator==(const LatticeSpec&) const = default;
};

/// Rational coweight in fundamental-coweight coordinates, so that
/// coords[i] = <alpha_i, v>.
struct Coweight {
  RatVec coords;

  Coweight operator-(const Coweight& o) const;
  Coweight operator+(const Coweight& o) const;
  Coweight scaled(const Rational& k) const;
  bool operator==(const Coweight&) const = default;
};

class RootDatum;

/// exp(2 pi i v) for a central v, as a canonical coset of P-check / X-check.
struct CentralElement {
  BigVec rep;
  BigInt order;

  bool is_trivial() const { return order == 1; }
  bool operator==(const CentralElement& o) const { return rep == o.rep; }
};

/// Finite abelian group given by its nontrivial invariant factors.
struct FiniteAbelianGroup {
  BigVec invariant_factors;

  BigInt order() const;
  bool is_elementary_two_group() const;
  std::string to_string() const;
};

/// A root datum of a simple Cartan type.
///
/// Roots are stored in simple-root coordinates. The character lattice X
/// lives in fundamental-weight coordinates, the cocharacter lattice
/// X-check in fundamental-coweight coordinates. Q <= X <= P and
/// Q-check <= X-check <= P-check with the perfect pairing between them.
class RootDatum {
 public:
  static RootDatum build(const CartanType& type, const LatticeSpec& lattice);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  const LatticeSpec& lattice_spec() const { return spec_; }
  const std::vector<IntVec>& cartan() const { return cartan_; }

  const Lattice& char_lattice() const { return x_; }
  const Lattice& cochar_lattice() const { return xcheck_; }

  /// All roots in simple-root coordinates, sorted by (height, coords).
  const std::vector<IntVec>& roots() const { return roots_; }
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  const IntVec& highest_root() const { return positive_.back(); }

  /// Half of the squared length of each simple root, smallest equal to 1.
  const IntVec& symmetrizer() const { return d_; }

  /// Coroot of a root, in simple-coroot coordinates.
  IntVec coroot(const IntVec& root) const;
  /// Coroot of a root, in fundamental-coweight coordinates.
  IntVec coroot_coweight(const IntVec& root) const;
  /// <gamma, beta-check> for roots gamma, beta in simple-root coordinates.
  std::int64_t pair_root_coroot(const IntVec& gamma, const IntVec& beta) const;

  /// Simple-root coordinates to fundamental-weight coordinates.
  IntVec root_to_weight(const IntVec& root) const;
  /// <lambda, v> for lambda in weight coordinates and v a coweight.
  Rational pair(const IntVec& weight, const Coweight& v) const;
  /// Simple-root coordinates of a weight (rational in general).
  RatVec weight_to_root_coords(const IntVec& weight) const;

  bool operator==(const RootDatum& o) const {
    return type_ == o.type_ && x_ == o.x_;
  }

 private:
  CartanType type_ = CartanType::make(Series::A, 1);
  LatticeSpec spec_;
  std::vector<IntVec> cartan_;
  std::vector<RatVec> cartan_inverse_;
  IntVec d_;
  Lattice x_, xcheck_;
  std::vector<IntVec> roots_, positive_;
};

RootDatum build_root_datum(const CartanType& type, const LatticeSpec& lattice);

/// Closure of the simple roots under simple reflections.
std::vector<IntVec> enumerate_roots(const RootDatum& datum);

/// Half-sum of positive coroots, checked against the all-ones vector.
Coweight rho_check(const RootDatum& datum);

/// Fundamental coweight lambda_j-check (node 0 gives 0).
Coweight fundamental_coweight(const RootDatum& datum, int node);

/// Class of exp(2 pi i v). Throws Error("not central") unless v is integral
/// on every root.
CentralElement z_of(const RootDatum& datum, const Coweight& v);

/// P-check / X-check.
FiniteAbelianGroup center(const RootDatum& datum);

/// Diagram automorphisms of the Dynkin diagram, as permutations of 0..rank-1.
std::vector<std::vector<int>> diagram_automorphisms(const std::vector<IntVec>& cartan);

/// True if the permutation of simple nodes maps X-check to itself.
bool preserves_cochar_lattice(const RootDatum& datum, const std::vector<int>& perm);

/// Image of a central element under a diagram automorphism that preserves X-check.
CentralElement apply_diagram_automorphism(const RootDatum& datum, const std::vector<int>& perm,
                                          const CentralElement& z);

}  // namespace chevalley
