#include <doctest.h>

#include <algorithm>

#include "chevalley/realforms.hpp"
#include "helpers.hpp"

using namespace chevalley;
using testing::datum;

namespace {
IntMatrix minus_identity(int n) {
  IntMatrix m = IntMatrix::identity(n);
  for (auto& x : m.a) x = -x;
  return m;
}
}  // namespace

TEST_CASE("extended diagrams") {
  auto a1 = extended_diagram(datum("A1"));
  CHECK(a1.labels == std::vector<int>{1, 1});
  CHECK(a1.sum_of_labels() == 2);
  CHECK(a1.cartan[0][1] == -2);
  auto g2 = extended_diagram(datum("G2"));
  auto sorted = g2.labels;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3});
  CHECK(g2.sum_of_labels() == 6);
  CHECK(extended_diagram(datum("E8")).sum_of_labels() == 30);
  for (const auto& t : all_simple_types(8)) {
    CAPTURE(t.name());
    auto e = extended_diagram(datum(t.name()));
    CHECK(e.sum_of_labels() == coxeter_number(t));
    CHECK(e.labels[0] == 1);
    // the labels are the null vector of the extended Cartan matrix
    for (std::size_t a = 0; a < e.labels.size(); ++a) {
      std::int64_t s = 0;
      for (std::size_t b = 0; b < e.labels.size(); ++b) s += e.cartan[a][b] * e.labels[b];
      CHECK(s == 0);
    }
    for (std::size_t a = 0; a < e.labels.size(); ++a) {
      CHECK(e.cartan[a][a] == 2);
      for (int b : e.adjacency[a]) CHECK(e.cartan[a][static_cast<std::size_t>(b)] < 0);
    }
  }
  // affine A_n is a cycle
  auto a4 = extended_diagram(datum("A4"));
  for (const auto& adj : a4.adjacency) CHECK(adj.size() == 2);
}

TEST_CASE("equal-rank nodes") {
  CHECK(equal_rank_forms(datum("A1")) == std::vector<int>{0, 1});
  CHECK(equal_rank_forms(datum("C3")) == std::vector<int>{0, 1, 2, 3});
  CHECK(equal_rank_forms(datum("C3"), true) == std::vector<int>{0, 1, 3});
  auto e8 = equal_rank_forms(datum("E8"));
  CHECK(e8.size() == 3);
  CHECK(e8 == std::vector<int>{0, 1, 8});
  CHECK(equal_rank_forms(datum("E8"), true).size() == 3);
  CHECK(equal_rank_forms(datum("G2")) == std::vector<int>{0, 2});
  CHECK(equal_rank_forms(datum("F4"), true) == std::vector<int>{0, 1, 4});
  CHECK(equal_rank_forms(datum("E7"), true) == std::vector<int>{0, 1, 2, 7});
  CHECK(equal_rank_forms(datum("E6"), true) == std::vector<int>{0, 1, 2});
  // SU(p,q), p + q = 5: p = 0, 1, 2
  CHECK(equal_rank_forms(datum("A4"), true) == std::vector<int>{0, 1, 2});
  // Spin(2p, 2q): p + q = 4 gives p = 0, 1, 2 plus SO*(8) which is Spin(2,6) up to triality
  CHECK(equal_rank_forms(datum("D4"), true) == std::vector<int>{0, 1, 2});
  CHECK(equal_rank_forms(datum("D5"), true) == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("K subsystems") {
  auto a1 = k_subdatum(datum("A1"), 1);
  CHECK(a1.roots.empty());
  CHECK(a1.central_torus_dim == 1);
  CHECK(a1.type_name() == "T1");
  CHECK(k_subdatum(datum("G2"), 2).type_name() == "A1xA1");
  auto b4 = k_subdatum(datum("B4"), 2);
  CHECK(b4.type_name() == "A1xA1xB2");
  CHECK(b4.central_torus_dim == 0);
  CHECK(k_subdatum(datum("C3"), 1).type_name() == "A1xB2");
  CHECK(k_subdatum(datum("E7"), 1).type_name() == "A1xD6");
  CHECK(k_subdatum(datum("E7"), 2).type_name() == "A7");
  CHECK(k_subdatum(datum("E7"), 7).type_name() == "E6xT1");
  CHECK(k_subdatum(datum("E8"), 1).type_name() == "D8");
  CHECK(k_subdatum(datum("E8"), 8).type_name() == "A1xE7");
  CHECK(k_subdatum(datum("F4"), 4).type_name() == "B4");
  CHECK(k_subdatum(datum("E6"), 1).type_name() == "D5xT1");
  CHECK(k_subdatum(datum("E6"), 2).type_name() == "A1xA5");
  CHECK(k_subdatum(datum("D6"), 3).type_name() == "A3xA3");
  CHECK(k_subdatum(datum("E8"), 0).type_name() == "E8");
  CHECK_THROWS_AS(k_subdatum(datum("E8"), 4), Error);
  CHECK_THROWS_AS(k_subdatum(datum("E8"), 9), Error);
}

TEST_CASE("K positive roots are half of the K roots") {
  for (const auto& t : all_simple_types(8)) {
    RootDatum d = datum(t.name());
    for (int j : equal_rank_forms(d)) {
      auto k = k_subdatum(d, j);
      CHECK(k.positive_roots.size() * 2 == k.roots.size());
      for (const auto& b : k.simple_roots)
        CHECK(std::find(k.positive_roots.begin(), k.positive_roots.end(), b) != k.positive_roots.end());
    }
  }
}

TEST_CASE("node deletion and the parity test give the same K roots") {
  for (const auto& t : all_simple_types(8)) {
    RootDatum d = datum(t.name());
    for (int j : equal_rank_forms(d)) {
      CAPTURE(t.name());
      CAPTURE(j);
      CHECK(k_subdatum(d, j).roots == parity_root_set(d, j));
    }
  }
}

TEST_CASE("rho-check difference identity: stated examples") {
  auto z = rho_check_identity(datum("E7"), 0);
  CHECK(z.holds);
  for (const auto& q : z.difference.coords) CHECK(q == 0);
  auto a1 = rho_check_identity(datum("A1"), 1);
  CHECK(a1.coxeter_sum == 2);
  CHECK(a1.c == 1);
  CHECK(a1.holds);
  RootDatum f4 = datum("F4");
  for (int j : {1, 4}) {
    auto r = rho_check_identity(f4, j);
    CHECK(r.label == 2);
    CHECK(r.coxeter_sum == 12);
    CHECK(r.c == 6);
    CHECK(r.holds);
  }
}

TEST_CASE("rho-check difference identity at label-2 nodes") {
  for (const auto& t : all_simple_types(8)) {
    RootDatum d = datum(t.name());
    for (int j : equal_rank_forms(d)) {
      auto r = rho_check_identity(d, j);
      if (r.label != 2) continue;
      CAPTURE(t.name());
      CAPTURE(j);
      CHECK(r.holds);
      CHECK(r.c == Rational(coxeter_number(t), 2));
    }
  }
}

TEST_CASE("rho-check difference at label-1 nodes is (N/2) lambda_j") {
  // The stated constant for label-1 nodes is N - 1; the computed one is N/2.
  // They agree only for A1.
  for (const auto& t : all_simple_types(8)) {
    RootDatum d = datum(t.name());
    for (int j : equal_rank_forms(d)) {
      if (j == 0) continue;
      auto r = rho_check_identity(d, j);
      if (r.label != 1) continue;
      CAPTURE(t.name());
      CAPTURE(j);
      REQUIRE(r.observed.has_value());
      CHECK(*r.observed == Rational(coxeter_number(t), 2));
      CHECK(r.c == coxeter_number(t) - 1);
      CHECK(r.holds == (t.series() == Series::A && t.rank() == 1));
    }
  }
}

TEST_CASE("when -1 in W and the form is pure, z(rho) = z(rho_K)") {
  for (const auto& t : all_simple_types(8))
    for (const auto& lat : testing::lattice_names(t)) {
      RootDatum d = datum(t.name(), lat);
      if (!minus_one_in_weyl(d)) continue;
      for (int j : equal_rank_forms(d)) {
        if (!purity(d, j)) continue;
        CAPTURE(t.name());
        CAPTURE(lat);
        CAPTURE(j);
        Coweight rk = rho_check_k(d, k_subdatum(d, j));
        CHECK(d.cochar_lattice().contains((rho_check(d) - rk).coords));
        CHECK(z_of(d, rho_check(d)) == z_of(d, rk));
      }
    }
}

TEST_CASE("purity") {
  for (const auto& t : all_simple_types(8)) {
    RootDatum ad = datum(t.name(), "ad");
    if (!minus_one_in_weyl(ad)) {
      CHECK_THROWS_WITH_AS(purity(ad, 0), doctest::Contains("purity undefined"), Error);
      continue;
    }
    for (int j : equal_rank_forms(ad)) CHECK(purity(ad, j));
  }
  for (int n = 2; n <= 8; ++n) {
    RootDatum b = datum("B" + std::to_string(n));
    for (int p = 0; p <= n; ++p) CHECK(purity(b, p) == (p % 2 == 0));
  }
  for (int n = 3; n <= 8; ++n) {
    RootDatum c = datum("C" + std::to_string(n));
    for (int p = 0; p < n; ++p) CHECK(purity(c, p));
    CHECK_FALSE(purity(c, n));
  }
  CHECK_THROWS_AS(purity(datum("A2"), 1), Error);
  CHECK_THROWS_AS(purity(datum("E6", "ad"), 0), Error);
  // E7 simply connected: lambda_1-check is the highest coroot
  CHECK(purity(datum("E7"), 1));
  CHECK_FALSE(purity(datum("E7"), 2));
  CHECK_FALSE(purity(datum("E7"), 7));
}

TEST_CASE("purity holds exactly when the longest element of W(K0) is -1") {
  for (const auto& t : all_simple_types(8)) {
    RootDatum d = datum(t.name());
    if (!minus_one_in_weyl(d)) continue;
    for (int j : equal_rank_forms(d)) {
      CAPTURE(t.name());
      CAPTURE(j);
      const bool inverts = k_longest_element(d, k_subdatum(d, j)) == minus_identity(d.rank());
      CHECK(purity(d, j) == inverts);
    }
  }
}

TEST_CASE("K longest element maps K positive roots to negatives") {
  RootDatum d = datum("F4");
  for (int j : equal_rank_forms(d)) {
    auto k = k_subdatum(d, j);
    IntMatrix w = k_longest_element(d, k);
    for (const auto& r : k.positive_roots) {
      IntVec img = w * r;
      for (auto& x : img) x = -x;
      CHECK(std::find(k.positive_roots.begin(), k.positive_roots.end(), img) != k.positive_roots.end());
    }
    CHECK((w * w).is_identity());
  }
}

TEST_CASE("all_reps_self_dual examples") {
  auto form = [](const std::string& type, const std::string& lat, int node) {
    auto t = CartanType::parse(type);
    return RealFormDescriptor{t, LatticeSpec::named(lat, t), EqualRank{node}};
  };
  CHECK(all_reps_self_dual(datum("A1"), form("A1", "sc", 0)));
  CHECK_FALSE(all_reps_self_dual(datum("A1"), form("A1", "sc", 1)));
  CHECK(all_reps_self_dual(datum("A1", "ad"), form("A1", "ad", 1)));
  // Spin(2,7): B4 node 1
  CHECK_FALSE(all_reps_self_dual(datum("B4"), form("B4", "sc", 1)));
  CHECK(all_reps_self_dual(datum("B4"), form("B4", "sc", 2)));
  auto g2 = CartanType::parse("G2");
  CHECK(all_reps_self_dual(datum("G2"), RealFormDescriptor{g2, LatticeSpec::simply_connected(), ComplexGroup{g2}}));
  auto e6 = CartanType::parse("E6");
  CHECK_FALSE(all_reps_self_dual(datum("E6"), RealFormDescriptor{e6, LatticeSpec::simply_connected(), ComplexGroup{e6}}));
  auto d4 = CartanType::parse("D4");
  CHECK(all_reps_self_dual(datum("D4", "so"), RealFormDescriptor{d4, LatticeSpec::named("so", d4), UnequalRankReal{"x"}}));
  auto d5 = CartanType::parse("D5");
  CHECK_FALSE(all_reps_self_dual(datum("D5"), RealFormDescriptor{d5, LatticeSpec::simply_connected(), UnequalRankReal{"x"}}));
}

TEST_CASE("all_reps_self_dual rejects mismatched descriptors") {
  auto b3 = CartanType::parse("B3");
  RealFormDescriptor f{b3, LatticeSpec::simply_connected(), EqualRank{1}};
  CHECK_THROWS_WITH_AS(all_reps_self_dual(datum("C3"), f), doctest::Contains("mismatch"), Error);
  CHECK_THROWS_WITH_AS(all_reps_self_dual(datum("B3", "ad"), f), doctest::Contains("mismatch"), Error);
  RealFormDescriptor u{b3, LatticeSpec::simply_connected(), UnequalRankReal{"x"}};
  CHECK_THROWS_WITH_AS(all_reps_self_dual(datum("B3"), u), doctest::Contains("mismatch"), Error);
  auto a1 = CartanType::parse("A1");
  RealFormDescriptor ua1{a1, LatticeSpec::simply_connected(), UnequalRankReal{"x"}};
  CHECK_THROWS_AS(all_reps_self_dual(datum("A1"), ua1), Error);
  RealFormDescriptor bad{b3, LatticeSpec::simply_connected(), EqualRank{7}};
  CHECK_THROWS_AS(all_reps_self_dual(datum("B3"), bad), Error);
}

TEST_CASE("every adjoint equal-rank form with -1 in W is self-dual") {
  for (const auto& t : all_simple_types(8)) {
    RootDatum d = datum(t.name(), "ad");
    if (!minus_one_in_weyl(d)) continue;
    for (int j : equal_rank_forms(d))
      CHECK(all_reps_self_dual(d, RealFormDescriptor{t, LatticeSpec::adjoint(), EqualRank{j}}));
  }
}

TEST_CASE("simply connected: self-duality forces -1 in W(K0)") {
  for (const auto& t : all_simple_types(8)) {
    RootDatum d = datum(t.name());
    for (int j : equal_rank_forms(d)) {
      if (!all_reps_self_dual(d, RealFormDescriptor{t, LatticeSpec::simply_connected(), EqualRank{j}})) continue;
      CAPTURE(t.name());
      CAPTURE(j);
      auto k = k_subdatum(d, j);
      CHECK(k.central_torus_dim == 0);
      CHECK(k_longest_element(d, k) == minus_identity(d.rank()));
    }
  }
}

TEST_CASE("L-packets") {
  CHECK_FALSE(lpackets_self_dual(datum("A2")));
  CHECK(lpackets_self_dual(datum("E7")));
  CHECK(lpackets_self_dual(datum("D6")));
}

TEST_CASE("descriptor variant names") {
  auto t = CartanType::parse("A2");
  CHECK(RealFormDescriptor{t, LatticeSpec::simply_connected(), EqualRank{0}}.variant_name() == "equal_rank");
  CHECK(RealFormDescriptor{t, LatticeSpec::simply_connected(), UnequalRankReal{"split"}}.variant_name() == "unequal_rank");
  CHECK(RealFormDescriptor{t, LatticeSpec::simply_connected(), ComplexGroup{t}}.variant_name() == "complex");
}
