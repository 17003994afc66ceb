#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chevalley/fsind.hpp"
#include "chevalley/parallel.hpp"
#include "chevalley/weyl.hpp"
#include "helpers.hpp"

using namespace chevalley;

TEST_CASE("small products") {
  LaurentPoly a = laurent_monomial({0});
  a.emplace(IntVec{1}, -1);
  LaurentPoly b = laurent_monomial({0});
  b.emplace(IntVec{1}, 1);
  LaurentPoly p = laurent_multiply(a, b);
  CHECK(p.size() == 2);
  CHECK(coefficient(p, {0}) == 1);
  CHECK(coefficient(p, {2}) == -1);
  CHECK(coefficient(p, {1}) == 0);
  CHECK(laurent_multiply(a, LaurentPoly{}).empty());
  CHECK(laurent_monomial({3}, 0).empty());
}

TEST_CASE("parallel product matches the serial reference") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(-6, 6), c(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly a, b;
    for (int k = 0; k < 60; ++k) {
      IntVec x{e(rng), e(rng), e(rng)};
      a[x] += c(rng);
      if (a[x] == 0) a.erase(x);
      IntVec y{e(rng), e(rng), e(rng)};
      b[y] += c(rng);
      if (b[y] == 0) b.erase(y);
    }
    CHECK(laurent_multiply(a, b) == laurent_multiply_serial(a, b));
  }
}

TEST_CASE("overflow is detected") {
  LaurentPoly a = laurent_monomial({0}, std::int64_t{1} << 40);
  CHECK_THROWS_AS(laurent_multiply(a, a), OverflowError);
}

TEST_CASE("the Weyl density has constant term |W|") {
  for (const auto& t : all_simple_types(4)) {
    if (t.series() == Series::F) continue;
    CAPTURE(t.name());
    LaurentPoly d = weyl_density(testing::datum(t.name()));
    CHECK(BigInt(coefficient(d, IntVec(t.rank(), 0))) == classical_weyl_order(t));
  }
}

TEST_CASE("parallel_map keeps index order and rethrows") {
  auto v = parallel_map(100, [](std::size_t i) { return static_cast<int>(i * i); });
  auto s = serial_map(100, [](std::size_t i) { return static_cast<int>(i * i); });
  CHECK(v == s);
  CHECK_THROWS_AS(parallel_map(10,
                               [](std::size_t i) -> int {
                                 if (i == 7) throw std::runtime_error("boom");
                                 return 0;
                               }),
                  std::runtime_error);
  CHECK(kernel_threads() >= 1);
}
