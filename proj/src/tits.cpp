#include "chevalley/tits.hpp"

#include <bit>

namespace chevalley {

TitsGroup::TitsGroup(const RootDatum& datum) : datum_(datum) {
  const int n = datum.rank();
  if (n > 32) throw Error("Tits group supports rank <= 32");
  const Lattice& xc = datum.cochar_lattice();
  for (int i = 1; i <= n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    IntVec co = datum.coroot_coweight(e);
    coroot_class_.push_back(reduce(BigVec(co.begin(), co.end())));
  }
  // s_i on basis vectors of X-check, reduced mod 2; stored as row masks
  for (int i = 1; i <= n; ++i) {
    WeylElement s = simple_reflection(datum, i);
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      IntVec b;
      for (const auto& x : xc.basis()[static_cast<std::size_t>(k)]) b.push_back(to_int64(x));
      IntVec img = s.apply_coweight(b);
      TwoTorsion col = reduce(BigVec(img.begin(), img.end()));
      for (int r = 0; r < n; ++r)
        if (col.bits >> r & 1u) rows[static_cast<std::size_t>(r)] |= 1u << k;
    }
    reflect_rows_.push_back(std::move(rows));
  }
}

TwoTorsion TitsGroup::reduce(const BigVec& cochar) const {
  BigVec y = datum_.cochar_lattice().coordinates(cochar);
  TwoTorsion t{0, rank()};
  for (std::size_t k = 0; k < y.size(); ++k)
    if (y[k] % 2 != 0) t.bits |= 1u << k;
  return t;
}

TwoTorsion TitsGroup::reflect(int i, const TwoTorsion& t) const {
  const auto& rows = reflect_rows_[static_cast<std::size_t>(i - 1)];
  TwoTorsion out{0, t.rank};
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (std::popcount(rows[r] & t.bits) & 1) out.bits |= 1u << r;
  return out;
}

TwoTorsion TitsGroup::act(const WeylElement& w, const TwoTorsion& t) const {
  auto word = reduced_word(datum_, w);
  TwoTorsion out = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(*it, out);
  return out;
}

TitsElement TitsGroup::identity() const {
  return {TwoTorsion{0, rank()}, identity_element(datum_), this};
}

TitsElement TitsGroup::torus(const TwoTorsion& t) const {
  return {t, identity_element(datum_), this};
}

TitsElement TitsGroup::generator(int i) const {
  return {TwoTorsion{0, rank()}, simple_reflection(datum_, i), this};
}

TitsElement TitsGroup::lift(const WeylElement& w) const {
  auto word = reduced_word(datum_, w);
  TitsElement x = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_multiply_generator(*it, x);
  return x;
}

TitsElement TitsGroup::left_multiply_generator(int i, const TitsElement& x) const {
  TwoTorsion t = reflect(i, x.t);
  if (has_left_descent(x.w, i)) t = t + coroot_class(i);
  WeylElement sw = simple_reflection(datum_, i) * x.w;
  return {t, sw, this};
}

TitsElement TitsGroup::multiply(const TitsElement& a, const TitsElement& b) const {
  if (a.group != this || b.group != this) throw Error("Tits elements from different groups");
  auto word = reduced_word(datum_, a.w);
  TitsElement x = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_multiply_generator(*it, x);
  x.t = x.t + a.t;
  return x;
}

std::vector<TwoTorsion> TitsGroup::all_two_torsion() const {
  std::vector<TwoTorsion> out;
  const std::uint32_t count = 1u << rank();
  for (std::uint32_t b = 0; b < count; ++b) out.push_back({b, rank()});
  return out;
}

TitsElement tits_generator(const TitsGroup& g, int i) { return g.generator(i); }

TitsElement tits_multiply(const TitsElement& a, const TitsElement& b) {
  if (a.group == nullptr || a.group != b.group) throw Error("Tits elements from different groups");
  return a.group->multiply(a, b);
}

TwoTorsion sigma_w0_squared(const RootDatum& datum) {
  TitsGroup g(datum);
  TitsElement s = g.lift(longest_element(datum));
  TitsElement sq = g.multiply(s, s);
  if (!sq.w.is_identity()) throw Error("internal: w0 is not an involution");
  return sq.t;
}

TwoTorsion any_representative_square(const RootDatum& datum, const TwoTorsion& t) {
  if (!minus_one_in_weyl(datum))
    throw Error("any_representative_square requires -1 in the Weyl group");
  TitsGroup g(datum);
  TitsElement rep = g.multiply(g.torus(t), g.lift(longest_element(datum)));
  TitsElement sq = g.multiply(rep, rep);
  if (!sq.w.is_identity()) throw Error("internal: w0 is not an involution");
  return sq.t;
}

TwoTorsion two_rho_check_class(const RootDatum& datum) {
  TitsGroup g(datum);
  return g.reduce(BigVec(static_cast<std::size_t>(datum.rank()), 2));
}

TwoTorsion central_to_two_torsion(const RootDatum& datum, const CentralElement& z) {
  if (z.order > 2) throw Error("central element of order > 2 has no 2-torsion class");
  BigVec twice = z.rep;
  for (auto& x : twice) x *= 2;
  return TitsGroup(datum).reduce(twice);
}

std::optional<CentralElement> two_torsion_to_central(const RootDatum& datum, const TwoTorsion& t) {
  BigVec y(static_cast<std::size_t>(datum.rank()), 0);
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = (t.bits >> k) & 1u;
  BigVec v = datum.cochar_lattice().combine(y);
  Coweight half;
  for (const auto& x : v) half.coords.push_back(Rational(x) / 2);
  if (!is_integral(half.coords)) return std::nullopt;
  return z_of(datum, half);
}

}  // namespace chevalley
