#include "chevalley/weyl.hpp"

#include <unordered_set>

#include "chevalley/hash.hpp"
#include "chevalley/parallel.hpp"

namespace chevalley {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m{n, IntVec(static_cast<std::size_t>(n * n), 0)};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r{n, IntVec(a.size(), 0)};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  IntVec r(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(i)] += at(i, k) * v[static_cast<std::size_t>(k)];
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t{n, IntVec(a.size())};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_identity() const { return *this == identity(n); }

bool IntMatrix::is_minus_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? -1 : 0)) return false;
  return true;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return WeylElement{root_action * o.root_action, coweight_action * o.coweight_action,
                     std::nullopt};
}

WeylElement identity_element(const RootDatum& datum) {
  auto id = IntMatrix::identity(datum.rank());
  return WeylElement{id, id, std::vector<int>{}};
}

WeylElement simple_reflection(const RootDatum& datum, int i) {
  const int n = datum.rank();
  if (i < 1 || i > n) throw Error("simple reflection index " + std::to_string(i) + " out of range");
  IntMatrix m = IntMatrix::identity(n);
  for (int k = 0; k < n; ++k) m.at(i - 1, k) -= datum.cartan()[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
  return WeylElement{m, m.transposed(), std::vector<int>{i}};
}

WeylElement from_word(const RootDatum& datum, const std::vector<int>& word) {
  WeylElement w = identity_element(datum);
  for (int i : word) w = w * simple_reflection(datum, i);
  w.word = word;
  return w;
}

bool has_left_descent(const WeylElement& w, int i) {
  // row i of the coweight action is w^{-1}(alpha_i) in root coordinates
  const IntMatrix& c = w.coweight_action;
  std::int64_t s = 0;
  for (int k = 0; k < c.n; ++k) s += c.at(i - 1, k);
  return s < 0;
}

int length(const RootDatum& datum, const WeylElement& w) {
  int l = 0;
  for (const auto& r : datum.positive_roots()) {
    IntVec img = w.apply_root(r);
    std::int64_t s = 0;
    for (auto x : img) s += x;
    if (s < 0) ++l;
  }
  return l;
}

std::vector<int> reduced_word(const RootDatum& datum, const WeylElement& w) {
  if (w.word && static_cast<int>(w.word->size()) == length(datum, w)) return *w.word;
  std::vector<int> word;
  WeylElement cur = w;
  const int n = datum.rank();
  while (!cur.is_identity()) {
    int i = 1;
    while (i <= n && !has_left_descent(cur, i)) ++i;
    if (i > n) throw Error("internal: no descent for a non-identity element");
    word.push_back(i);
    cur = simple_reflection(datum, i) * cur;
  }
  return word;
}

IntVec reflect_weight(const RootDatum& datum, int i, IntVec weight) {
  const auto& a = datum.cartan();
  const std::size_t ii = static_cast<std::size_t>(i - 1);
  const std::int64_t p = weight[ii];
  if (p == 0) return weight;
  for (std::size_t k = 0; k < weight.size(); ++k) weight[k] -= p * a[k][ii];
  return weight;
}

IntVec apply_weight(const RootDatum& datum, const WeylElement& w, const IntVec& weight) {
  RatVec c = datum.weight_to_root_coords(weight);
  const int n = datum.rank();
  RatVec img(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) img[static_cast<std::size_t>(i)] += Rational(w.root_action.at(i, k)) * c[static_cast<std::size_t>(k)];
  IntVec out(static_cast<std::size_t>(n));
  const auto& a = datum.cartan();
  for (int i = 0; i < n; ++i) {
    Rational s = 0;
    for (int k = 0; k < n; ++k) s += Rational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) * img[static_cast<std::size_t>(k)];
    if (!is_integral(s)) throw Error("internal: non-integral weight image");
    out[static_cast<std::size_t>(i)] = to_int64(boost::multiprecision::numerator(s));
  }
  return out;
}

WeylElement longest_element(const RootDatum& datum) {
  const int n = datum.rank();
  IntVec v(static_cast<std::size_t>(n), 1);
  std::vector<int> word;
  while (true) {
    int i = 1;
    while (i <= n && v[static_cast<std::size_t>(i - 1)] <= 0) ++i;
    if (i > n) break;
    v = reflect_weight(datum, i, v);
    word.push_back(i);
  }
  return from_word(datum, word);
}

bool minus_one_in_weyl(const RootDatum& datum) {
  return longest_element(datum).root_action.is_minus_identity();
}

std::vector<int> dual_involution_on_simples(const RootDatum& datum) {
  const int n = datum.rank();
  WeylElement w0 = longest_element(datum);
  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    IntVec img = w0.apply_root(e);
    int target = 0;
    for (int j = 0; j < n; ++j) {
      if (img[static_cast<std::size_t>(j)] == -1 && target == 0) target = j + 1;
      else if (img[static_cast<std::size_t>(j)] != 0) target = -1;
    }
    if (target <= 0) throw Error("internal: -w0 does not permute simple roots");
    perm[static_cast<std::size_t>(i - 1)] = target;
  }
  return perm;
}

namespace {

IntVec chamber_key(const WeylElement& w) {
  IntVec ones(static_cast<std::size_t>(w.rank()), 1);
  return w.apply_coweight(ones);
}

template <bool Parallel>
std::vector<WeylElement> enumerate_impl(const RootDatum& datum) {
  if (datum.rank() > kWeylEnumerationMaxRank)
    throw Error("Weyl enumeration limited to rank <= " + std::to_string(kWeylEnumerationMaxRank));
  const int n = datum.rank();
  std::vector<WeylElement> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection(datum, i));

  std::vector<WeylElement> all{identity_element(datum)};
  std::unordered_set<IntVec, VecHash> seen{chamber_key(all.front())};
  std::size_t begin = 0, end = 1;
  while (begin < end) {
    auto expand = [&](std::size_t k) {
      const WeylElement& w = all[begin + k];
      std::vector<std::pair<IntVec, WeylElement>> cand;
      for (int i = 1; i <= n; ++i) {
        if (has_left_descent(w, i)) continue;  // s_i w is shorter
        WeylElement sw = gens[static_cast<std::size_t>(i - 1)] * w;
        std::vector<int> word{i};
        word.insert(word.end(), w.word->begin(), w.word->end());
        sw.word = std::move(word);
        cand.emplace_back(chamber_key(sw), std::move(sw));
      }
      return cand;
    };
    auto batches = Parallel ? parallel_map(end - begin, expand) : serial_map(end - begin, expand);
    for (auto& batch : batches)
      for (auto& [key, w] : batch)
        if (seen.insert(key).second) all.push_back(std::move(w));
    begin = end;
    end = all.size();
  }
  return all;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum) { return enumerate_impl<true>(datum); }

std::vector<WeylElement> enumerate_weyl_serial(const RootDatum& datum) {
  return enumerate_impl<false>(datum);
}

std::vector<std::vector<int>> all_reduced_words(const RootDatum& datum, const WeylElement& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= datum.rank(); ++i) {
    if (!has_left_descent(w, i)) continue;
    for (auto& tail : all_reduced_words(datum, simple_reflection(datum, i) * w)) {
      std::vector<int> word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

}  // namespace chevalley
