#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chevalley/rootdata.hpp"
#include "chevalley/weyl.hpp"

namespace chevalley {

/// Element of X-check / 2 X-check as bits in the Hermite basis of X-check.
/// Identified with the 2-torsion H[2] by v + 2X-check -> exp(pi i v).
struct TwoTorsion {
  std::uint32_t bits = 0;
  int rank = 0;

  TwoTorsion operator+(const TwoTorsion& o) const { return {bits ^ o.bits, rank}; }
  bool is_zero() const { return bits == 0; }
  bool operator==(const TwoTorsion&) const = default;
};

class TitsGroup;

/// t * sigma(w), where sigma(w) is the canonical lift of w.
struct TitsElement {
  TwoTorsion t;
  WeylElement w;
  const TitsGroup* group = nullptr;

  bool operator==(const TitsElement& o) const { return t == o.t && w == o.w; }
};

/// The Tits group of a root datum, realized by its presentation:
/// sigma_i^2 = alpha_i-check(-1), sigma_i t sigma_i^{-1} = s_i(t), and the
/// braid relations. Elements keep a pointer to their group, so the group
/// must outlive them.
class TitsGroup {
 public:
  explicit TitsGroup(const RootDatum& datum);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }

  /// Class of an element of X-check modulo 2.
  TwoTorsion reduce(const BigVec& cochar) const;
  TwoTorsion coroot_class(int i) const { return coroot_class_[static_cast<std::size_t>(i - 1)]; }
  /// s_i acting on X-check / 2 X-check.
  TwoTorsion reflect(int i, const TwoTorsion& t) const;
  TwoTorsion act(const WeylElement& w, const TwoTorsion& t) const;

  TitsElement identity() const;
  TitsElement torus(const TwoTorsion& t) const;
  TitsElement generator(int i) const;
  /// sigma(w), the product of generators along a reduced word.
  TitsElement lift(const WeylElement& w) const;

  /// sigma_i * x.
  TitsElement left_multiply_generator(int i, const TitsElement& x) const;
  TitsElement multiply(const TitsElement& a, const TitsElement& b) const;

  /// Every element of X-check / 2 X-check (2^rank of them).
  std::vector<TwoTorsion> all_two_torsion() const;

 private:
  RootDatum datum_;
  std::vector<TwoTorsion> coroot_class_;
  std::vector<std::vector<std::uint32_t>> reflect_rows_;  // per i, per output bit
};

TitsElement tits_generator(const TitsGroup& g, int i);
TitsElement tits_multiply(const TitsElement& a, const TitsElement& b);

/// Torus part of sigma(w_0)^2.
TwoTorsion sigma_w0_squared(const RootDatum& datum);

/// Torus part of ((t, e) * sigma(w_0))^2. Requires -1 in W.
TwoTorsion any_representative_square(const RootDatum& datum, const TwoTorsion& t);

/// Class of 2 rho-check in X-check / 2 X-check.
TwoTorsion two_rho_check_class(const RootDatum& datum);

/// Central element of order <= 2 to X-check / 2 X-check (v -> 2v).
TwoTorsion central_to_two_torsion(const RootDatum& datum, const CentralElement& z);
/// Inverse of central_to_two_torsion; nullopt if exp(pi i t) is not central.
std::optional<CentralElement> two_torsion_to_central(const RootDatum& datum, const TwoTorsion& t);

}  // namespace chevalley
