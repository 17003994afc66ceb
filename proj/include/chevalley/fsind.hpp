#pragma once

#include <map>

#include "chevalley/laurent.hpp"
#include "chevalley/rootdata.hpp"

namespace chevalley {

/// The root of unity exp(2 pi i q), with q kept in [0, 1).
struct Phase {
  Rational q;

  static Phase of(const Rational& value);
  bool is_sign() const { return q == 0 || q == Rational(1, 2); }
  /// +1 or -1; throws unless is_sign().
  int sign() const;
  bool operator==(const Phase&) const = default;
};

/// Raised when a weight-system computation exceeds the size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

constexpr int kMultiplicityMaxRank = 4;
constexpr int kMultiplicityMaxCoord = 4;

/// Throws unless lambda is dominant and lies in X.
void check_dominant_weight(const RootDatum& datum, const IntVec& lambda);

/// w0(lambda) == -lambda.
bool is_self_dual_weight(const RootDatum& datum, const IntVec& lambda);

/// <lambda, v> mod 1 for a representative v of z.
Phase central_character_phase(const RootDatum& datum, const IntVec& lambda, const CentralElement& z);

/// Frobenius-Schur sign of the irreducible representation with highest
/// weight lambda: +1 orthogonal, -1 symplectic.
int fs_indicator(const RootDatum& datum, const IntVec& lambda);

/// Weyl dimension formula.
BigInt weyl_dimension(const RootDatum& datum, const IntVec& lambda);

/// All weights of V(lambda) with multiplicities (Freudenthal). Guarded by
/// kMultiplicityMaxRank and kMultiplicityMaxCoord.
std::map<IntVec, std::int64_t> weight_multiplicities(const RootDatum& datum, const IntVec& lambda);
/// Multiplicities of the dominant weights only.
std::map<IntVec, std::int64_t> dominant_multiplicities(const RootDatum& datum, const IntVec& lambda);

/// prod over all roots of (1 - t^alpha), in weight coordinates. Its constant
/// term is |W|.
LaurentPoly weyl_density(const RootDatum& datum);

/// (1/|W|) * constant term of chi_lambda(t^2) * density: +1, -1, or 0 when
/// V(lambda) is not self-dual. Pass a precomputed density to reuse it.
int fs_oracle(const RootDatum& datum, const IntVec& lambda, const LaurentPoly* density = nullptr);

/// Indicator of the representation induced to an extension G+ = <G, delta>
/// where delta acts by a Chevalley involution: the ordinary indicator when pi
/// is self-dual, otherwise chi_pi(delta^2).
int fs_extended_formula(bool self_dual, int indicator_if_self_dual, const Phase& delta_sq_phase);
int fs_extended(const RootDatum& datum, const IntVec& lambda, const CentralElement& delta_sq);

}  // namespace chevalley
