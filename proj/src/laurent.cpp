#include "chevalley/laurent.hpp"

#include <algorithm>

#include "chevalley/parallel.hpp"

namespace chevalley {

namespace {

using Term = std::pair<IntVec, std::int64_t>;

void accumulate(LaurentPoly& out, const IntVec& e, std::int64_t c) {
  auto [it, inserted] = out.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) out.erase(it);
  }
}

void multiply_range(const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                    const LaurentPoly& b, LaurentPoly& out) {
  IntVec e;
  for (std::size_t i = lo; i < hi; ++i)
    for (const auto& [eb, cb] : b) {
      e = a[i].first;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = checked_add(e[k], eb[k]);
      accumulate(out, e, checked_mul(a[i].second, cb));
    }
}

}  // namespace

LaurentPoly laurent_monomial(const IntVec& exponent, std::int64_t coeff) {
  LaurentPoly p;
  if (coeff != 0) p.emplace(exponent, coeff);
  return p;
}

std::int64_t coefficient(const LaurentPoly& p, const IntVec& exponent) {
  auto it = p.find(exponent);
  return it == p.end() ? 0 : it->second;
}

LaurentPoly laurent_multiply_serial(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Term> terms(a.begin(), a.end());
  LaurentPoly out;
  multiply_range(terms, 0, terms.size(), b, out);
  return out;
}

LaurentPoly laurent_multiply(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<Term> terms(a.begin(), a.end());
  const std::size_t chunks = std::max<std::size_t>(1, static_cast<std::size_t>(kernel_threads()) * 4);
  const std::size_t step = (terms.size() + chunks - 1) / chunks;
  auto partial = parallel_map(chunks, [&](std::size_t c) {
    LaurentPoly local;
    const std::size_t lo = std::min(terms.size(), c * step);
    const std::size_t hi = std::min(terms.size(), lo + step);
    multiply_range(terms, lo, hi, b, local);
    return local;
  });
  LaurentPoly out = std::move(partial[0]);
  for (std::size_t c = 1; c < partial.size(); ++c)
    for (const auto& [e, v] : partial[c]) accumulate(out, e, v);
  return out;
}

}  // namespace chevalley
