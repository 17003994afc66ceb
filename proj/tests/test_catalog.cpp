#include <doctest.h>

#include <set>

#include "chevalley/catalog.hpp"
#include "chevalley/weyl.hpp"
#include "helpers.hpp"

using namespace chevalley;

TEST_CASE("name normalization") {
  CHECK(normalize_form_name("Sp(2,1)") == "Sp(1,2)");
  CHECK(normalize_form_name(" Spin( 5 , 4 ) ") == "Spin(4,5)");
  CHECK(normalize_form_name("SL(2,ℝ)") == "SL(2,R)");
  CHECK(normalize_form_name("SO-bar(6,2)") == "SO-bar(2,6)");
  CHECK(normalize_form_name("SO*(8)") == "SO*(8)");
  CHECK(normalize_form_name("E7(-5)[sc]") == "E7(-5)[sc]");
}

TEST_CASE("catalog lookup examples") {
  const auto& cat = Catalog::standard();
  const auto& sp = cat.lookup("Sp(2,1)");
  CHECK(sp.descriptor.type.name() == "C3");
  CHECK(sp.descriptor.lattice.name() == "sc");
  REQUIRE(sp.descriptor.is_equal_rank());
  const int node = std::get<EqualRank>(sp.descriptor.variant).node;
  RootDatum c3 = sp.datum();
  CHECK(extended_diagram(c3).labels[static_cast<std::size_t>(node)] == 2);
  CHECK(k_subdatum(c3, node).type_name() == "A1xB2");  // Sp(1) x Sp(2)

  const auto& pso = cat.lookup("PSO(4,4)");
  CHECK(pso.descriptor.type.name() == "D4");
  CHECK(pso.descriptor.lattice.name() == "ad");
  CHECK(pso.descriptor.is_equal_rank());

  const auto& so = cat.lookup("SO(3,5)");
  CHECK(so.descriptor.type.name() == "D4");
  CHECK(so.descriptor.lattice.name() == "so");
  CHECK(so.descriptor.variant_name() == "unequal_rank");

  CHECK(cat.lookup("SO(2,1)").name == cat.lookup("PGL(2,R)").name);
  CHECK(cat.lookup("SL(2,ℝ)").name == "SU(1,1)");
  CHECK(cat.lookup("Sp(4,R)").descriptor.type.name() == "B2");
  CHECK(cat.lookup("Complex(G2)").descriptor.variant_name() == "complex");
  CHECK(cat.lookup("E8").name == "E8(-248)");
}

TEST_CASE("unknown names and illegal signatures are distinguished") {
  const auto& cat = Catalog::standard();
  CHECK_THROWS_AS(cat.lookup("Spin(3,3)"), IllegalSignatureError);
  CHECK_THROWS_AS(cat.lookup("SU(0)"), IllegalSignatureError);
  CHECK_THROWS_AS(cat.lookup("Sp(5,5)"), IllegalSignatureError);
  CHECK_THROWS_AS(cat.lookup("Complex(A9)"), IllegalSignatureError);
  CHECK_THROWS_AS(cat.lookup("E7(-5)"), IllegalSignatureError);
  CHECK_THROWS_AS(cat.lookup("Foo(2,3)"), UnknownFormError);
  CHECK_THROWS_AS(cat.lookup(""), UnknownFormError);
  CHECK_THROWS_AS(cat.lookup("spin(4,5)"), UnknownFormError);
}

TEST_CASE("catalog entries are well formed") {
  const auto& cat = Catalog::standard();
  std::set<std::string> names;
  for (const auto& f : cat.forms()) {
    CAPTURE(f.name);
    CHECK(names.insert(f.name).second);
    CHECK(&cat.lookup(f.name) == &f);
    for (const auto& a : f.aliases) CHECK(&cat.lookup(a) == &f);
    RootDatum d = f.datum();
    if (const auto* e = std::get_if<EqualRank>(&f.descriptor.variant))
      CHECK(extended_diagram(d).labels.at(static_cast<std::size_t>(e->node)) <= 2);
    CHECK_NOTHROW(all_reps_self_dual(d, f.descriptor));
  }
  CHECK(names.size() == cat.forms().size());
  std::set<std::string> expected;
  for (const auto& r : expected_verdicts()) {
    CHECK(expected.insert(r.name).second);
    CHECK(names.count(r.name) == 1);
    CHECK_FALSE(r.rule.empty());
  }
  CHECK(expected.size() == names.size());
}

TEST_CASE("catalog covers every complex group and the exceptional real forms") {
  const auto& cat = Catalog::standard();
  for (const auto& t : all_simple_types(8)) CHECK_NOTHROW(cat.lookup("Complex(" + t.name() + ")"));
  int e8 = 0, e7sc = 0, e6sc = 0, f4 = 0, g2 = 0;
  for (const auto& f : cat.forms()) {
    if (f.descriptor.variant_name() == "complex") continue;
    const auto n = f.descriptor.type.name();
    const auto lat = f.descriptor.lattice.name();
    e8 += n == "E8";
    e7sc += n == "E7" && lat == "sc";
    e6sc += n == "E6" && lat == "sc";
    f4 += n == "F4";
    g2 += n == "G2";
  }
  CHECK(e8 == 3);
  CHECK(e7sc == 4);
  CHECK(e6sc == 5);
  CHECK(f4 == 3);
  CHECK(g2 == 2);
}

TEST_CASE("catalog from_json validation") {
  const std::string good = R"J({"version":1,"forms":[
    {"name":"X(1)","aliases":["Y"],"series":"A","rank":1,"lattice":"sc","variant":"equal_rank","node":0}]})J";
  Catalog c = Catalog::from_json(good);
  CHECK(c.forms().size() == 1);
  CHECK(c.lookup("Y").name == "X(1)");
  const std::string dup = R"J({"version":1,"forms":[
    {"name":"X(1)","series":"A","rank":1,"lattice":"sc","variant":"equal_rank","node":0},
    {"name":"X(1)","series":"A","rank":1,"lattice":"ad","variant":"equal_rank","node":0}]})J";
  CHECK_THROWS_AS(Catalog::from_json(dup), Error);
  const std::string badvar = R"J({"version":1,"forms":[
    {"name":"X(1)","series":"A","rank":1,"lattice":"sc","variant":"twisted"}]})J";
  CHECK_THROWS_AS(Catalog::from_json(badvar), Error);
  const std::string badtype = R"J({"version":1,"forms":[
    {"name":"X(1)","series":"B","rank":1,"lattice":"sc","variant":"complex"}]})J";
  CHECK_THROWS_AS(Catalog::from_json(badtype), Error);
  CHECK_THROWS(Catalog::from_json("not json"));
}

namespace {
// |Stab_W(x)| / |W(K0)| for x = exp(pi i lambda_j-check): the order of pi_0(K).
std::size_t component_count(const RootDatum& d, int node) {
  Coweight lam = fundamental_coweight(d, node);
  std::size_t stab = 0;
  for (const auto& w : enumerate_weyl(d)) {
    RatVec img(lam.coords.size(), 0);
    for (int i = 0; i < d.rank(); ++i)
      for (int k = 0; k < d.rank(); ++k)
        img[static_cast<std::size_t>(i)] += w.coweight_action.at(i, k) * lam.coords[static_cast<std::size_t>(k)];
    RatVec diff(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) diff[i] = (img[i] - lam.coords[i]) / 2;
    if (d.cochar_lattice().contains(diff)) ++stab;
  }
  BigInt wk = 1;
  for (const auto& c : k_subdatum(d, node).components) wk *= classical_weyl_order(c.type);
  REQUIRE(BigInt(stab) % wk == 0);
  return static_cast<std::size_t>(BigInt(stab) / wk);
}
}  // namespace

TEST_CASE("SO-bar*(4n): the disconnected form is the one marked disconnected") {
  const auto& cat = Catalog::standard();
  for (int m : {4, 6}) {
    CAPTURE(m);
    const auto& disc = cat.lookup("SO-bar*(" + std::to_string(2 * m) + ",disconnected)");
    const auto& conn = cat.lookup("SO-bar*(" + std::to_string(2 * m) + ",connected)");
    RootDatum d = disc.datum();
    CHECK(component_count(d, std::get<EqualRank>(disc.descriptor.variant).node) == 2);
    CHECK(component_count(d, std::get<EqualRank>(conn.descriptor.variant).node) == 1);
  }
}

TEST_CASE("K is connected for simply connected groups") {
  for (const char* name : {"B3", "C3", "D4", "G2", "A3"}) {
    RootDatum d = testing::datum(name);
    for (int j : equal_rank_forms(d)) {
      if (k_subdatum(d, j).central_torus_dim > 0) continue;
      CHECK(component_count(d, j) == 1);
    }
  }
}
