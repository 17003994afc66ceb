#include "chevalley/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace chevalley {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

void row_axpy(BigVec& dst, const BigInt& k, const BigVec& src) {
  for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= k * src[c];
}

}  // namespace

BigMatrix hermite_normal_form(BigMatrix rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        BigInt q = rows[i][c] / rows[r][c];
        row_axpy(rows[i], q, rows[r]);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(rows[i][c], rows[r][c]);
      row_axpy(rows[i], q, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

BigVec smith_invariants(BigMatrix m) {
  const std::size_t nr = m.size();
  const std::size_t nc = nr ? m[0].size() : 0;
  const std::size_t k = std::min(nr, nc);
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // smallest nonzero entry in the trailing block becomes the pivot
      std::size_t pi = nr, pj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j)
          if (m[i][j] != 0 && (pi == nr || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == nr) break;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        BigInt q = m[i][t] / m[t][t];
        if (q != 0) row_axpy(m[i], q, m[t]);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        BigInt q = m[t][j] / m[t][t];
        if (q != 0)
          for (std::size_t i = 0; i < nr; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility condition: pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = 0; jj < nc; ++jj) m[t][jj] += m[i][jj];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  BigVec d;
  for (std::size_t t = 0; t < k; ++t) d.push_back(abs(m[t][t]));
  return d;
}

Lattice Lattice::from_generators(const BigMatrix& gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.size() != n) throw Error("lattice generator has wrong length");
  Lattice l;
  l.n_ = n;
  l.basis_ = hermite_normal_form(gens, n);
  if (l.basis_.size() != n) throw Error("generators do not span a full-rank lattice");
  for (std::size_t k = 0; k < n; ++k)
    if (l.basis_[k][k] == 0) throw Error("generators do not span a full-rank lattice");
  return l;
}

Lattice Lattice::identity(std::size_t n) {
  BigMatrix id(n, BigVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return from_generators(id, n);
}

BigInt Lattice::index() const {
  BigInt d = 1;
  for (std::size_t k = 0; k < n_; ++k) d *= basis_[k][k];
  return d;
}

BigVec Lattice::reduce(BigVec v) const {
  if (v.size() != n_) throw Error("vector length does not match lattice");
  for (std::size_t k = 0; k < n_; ++k) {
    BigInt q = floor_div(v[k], basis_[k][k]);
    if (q != 0) row_axpy(v, q, basis_[k]);
  }
  return v;
}

bool Lattice::contains(const BigVec& v) const {
  for (const auto& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool Lattice::contains(const RatVec& v) const {
  if (!is_integral(v)) return false;
  BigVec b;
  b.reserve(v.size());
  for (const auto& q : v) b.push_back(boost::multiprecision::numerator(q));
  return contains(b);
}

BigVec Lattice::coordinates(const BigVec& v) const {
  if (v.size() != n_) throw Error("vector length does not match lattice");
  BigVec rest = v, y(n_, 0);
  for (std::size_t k = 0; k < n_; ++k) {
    if (rest[k] % basis_[k][k] != 0) throw Error("vector is not in the lattice");
    y[k] = rest[k] / basis_[k][k];
    row_axpy(rest, y[k], basis_[k]);
  }
  return y;
}

BigVec Lattice::combine(const BigVec& coords) const {
  BigVec v(n_, 0);
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t c = 0; c < n_; ++c) v[c] += coords[k] * basis_[k][c];
  return v;
}

std::vector<RatVec> inverse(const std::vector<RatVec>& m) {
  const std::size_t n = m.size();
  std::vector<RatVec> a = m, inv(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

BigInt determinant(const std::vector<IntVec>& m) {
  const std::size_t n = m.size();
  std::vector<RatVec> a;
  for (const auto& row : m) a.push_back(to_rational(row));
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return boost::multiprecision::numerator(det);
}

}  // namespace chevalley
