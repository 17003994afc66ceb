#include "chevalley/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "chevalley/catalog.hpp"
#include "chevalley/fsind.hpp"
#include "chevalley/parallel.hpp"
#include "chevalley/realforms.hpp"
#include "chevalley/tits.hpp"
#include "chevalley/weyl.hpp"

namespace chevalley {

namespace {

constexpr int kMaxRank = 8;

using Cases = std::vector<VerifyCase>;

std::string yes_no(bool b) { return b ? "true" : "false"; }

VerifyCase check(std::string id, const std::string& expected, const std::string& actual) {
  return {std::move(id), expected, actual, expected == actual};
}

std::vector<std::string> lattice_names(const CartanType& t) {
  std::vector<std::string> out{"sc", "ad"};
  if (t.series() == Series::D) {
    out.push_back("so");
    if (t.rank() % 2 == 0) out.push_back("sobar");
  }
  return out;
}

RootDatum sc(const CartanType& t) { return RootDatum::build(t, LatticeSpec::simply_connected()); }

template <class F>
Cases flat_parallel(const std::vector<CartanType>& types, F&& per_type) {
  auto parts = parallel_map(types.size(), [&](std::size_t i) { return per_type(types[i]); });
  Cases out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Cases suite_minus_one() {
  return flat_parallel(all_simple_types(kMaxRank), [](const CartanType& t) {
    Cases c;
    const std::string base = "minus_one/" + t.name();
    RootDatum d = sc(t);
    const bool m1 = minus_one_in_weyl(d);
    c.push_back(check(base + "/table", yes_no(classically_has_minus_one(t)), yes_no(m1)));
    c.push_back(check(base + "/longest_length", std::to_string(d.positive_roots().size()),
                      std::to_string(length(d, longest_element(d)))));
    c.push_back(check(base + "/center_elementary_two_group", yes_no(m1),
                      yes_no(center(d).is_elementary_two_group())));
    if (t.rank() <= kWeylEnumerationMaxRank) {
      auto all = enumerate_weyl(d);
      const bool has = std::any_of(all.begin(), all.end(),
                                   [](const WeylElement& w) { return w.root_action.is_minus_identity(); });
      c.push_back(check(base + "/oracle_order", classical_weyl_order(t).str(), std::to_string(all.size())));
      c.push_back(check(base + "/oracle_minus_one", yes_no(m1), yes_no(has)));
    }
    return c;
  });
}

Cases suite_tits() {
  return flat_parallel(all_simple_types(kMaxRank), [](const CartanType& t) {
    Cases c;
    for (const char* lat : {"sc", "ad"}) {
      RootDatum d = RootDatum::build(t, LatticeSpec::named(lat, t));
      TitsGroup g(d);
      const std::string base = "tits/" + t.name() + "/" + lat;
      const TwoTorsion sq = sigma_w0_squared(d);
      const TwoTorsion want = two_rho_check_class(d);
      c.push_back(check(base + "/sigma_w0_squared", "bits=" + std::to_string(want.bits),
                        "bits=" + std::to_string(sq.bits)));
      if (minus_one_in_weyl(d)) {
        const auto all = g.all_two_torsion();
        std::size_t same = 0;
        for (const auto& tt : all)
          if (any_representative_square(d, tt) == sq) ++same;
        c.push_back(check(base + "/any_representative", std::to_string(all.size()) + " equal",
                          std::to_string(same) + " equal"));
      }
    }
    return c;
  });
}

Cases suite_zrho() {
  return flat_parallel(all_simple_types(kMaxRank), [](const CartanType& t) {
    Cases c;
    RootDatum d = sc(t);
    for (int j : equal_rank_forms(d)) {
      auto r = rho_check_identity(d, j);
      const std::string id = "zrho/" + t.name() + "/node" + std::to_string(j) + "/identity";
      std::string actual;
      if (j == 0) {
        actual = r.holds ? "c=" + to_string(r.c) : "nonzero difference " + to_string(r.difference.coords);
      } else if (r.observed) {
        actual = "c=" + to_string(*r.observed);
      } else {
        actual = "not a multiple: " + to_string(r.difference.coords);
      }
      c.push_back({id, "c=" + to_string(r.c), actual, r.holds});
    }
    for (const auto& lat : lattice_names(t)) {
      RootDatum dl = RootDatum::build(t, LatticeSpec::named(lat, t));
      if (!minus_one_in_weyl(dl)) continue;
      for (int j : equal_rank_forms(dl)) {
        if (!purity(dl, j)) continue;
        const std::string id = "zrho/" + t.name() + "/" + lat + "/node" + std::to_string(j) + "/center";
        KSubsystem k = k_subdatum(dl, j);
        Coweight rho_k = rho_check_k(dl, k);
        Coweight diff = rho_check(dl) - rho_k;
        const bool in_lattice = dl.cochar_lattice().contains(diff.coords);
        bool same = false;
        if (in_lattice) same = z_of(dl, rho_check(dl)) == z_of(dl, rho_k);
        c.push_back(check(id, "difference in X-check, z(rho)=z(rho_K)",
                          in_lattice ? (same ? "difference in X-check, z(rho)=z(rho_K)"
                                             : "difference in X-check, z(rho)!=z(rho_K)")
                                     : "difference not in X-check"));
      }
    }
    return c;
  });
}

Cases suite_kac() {
  return flat_parallel(all_simple_types(kMaxRank), [](const CartanType& t) {
    Cases c;
    RootDatum d = sc(t);
    auto ext = extended_diagram(d);
    c.push_back(check("kac/" + t.name() + "/label_sum", std::to_string(coxeter_number(t)),
                      std::to_string(ext.sum_of_labels())));
    for (int j : equal_rank_forms(d)) {
      auto k = k_subdatum(d, j);
      auto parity = parity_root_set(d, j);
      const std::string id = "kac/" + t.name() + "/node" + std::to_string(j) + "/root_sets";
      c.push_back(check(id, std::to_string(parity.size()) + " parity roots",
                        k.roots == parity ? std::to_string(k.roots.size()) + " parity roots"
                                          : std::to_string(k.roots.size()) + " node-deletion roots (differ)"));
    }
    return c;
  });
}

Cases suite_purity() {
  return flat_parallel(all_simple_types(kMaxRank), [](const CartanType& t) {
    Cases c;
    RootDatum d = sc(t);
    if (!minus_one_in_weyl(d)) return c;
    const int n = d.rank();
    IntMatrix minus = IntMatrix::identity(n);
    for (auto& x : minus.a) x = -x;
    for (int j : equal_rank_forms(d)) {
      const bool pure = purity(d, j);
      const bool inverts = k_longest_element(d, k_subdatum(d, j)) == minus;
      c.push_back(check("purity/" + t.name() + "/node" + std::to_string(j),
                        std::string("pure=") + yes_no(pure), std::string("pure=") + yes_no(inverts)));
    }
    return c;
  });
}

Cases suite_classification() {
  const auto& rows = expected_verdicts();
  const auto& cat = Catalog::standard();
  auto cases = parallel_map(rows.size(), [&](std::size_t i) {
    const auto& row = rows[i];
    const auto& f = cat.lookup(row.name);
    const bool v = all_reps_self_dual(f.datum(), f.descriptor);
    return check("classification/" + f.descriptor.type.name() + "/" + row.name, yes_no(row.expected), yes_no(v));
  });
  return {cases.begin(), cases.end()};
}

Cases suite_fs() {
  const std::vector<std::string> types = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"};
  constexpr int kCoord = 3;
  Cases out;
  for (const auto& name : types) {
    RootDatum d = sc(CartanType::parse(name));
    const LaurentPoly density = weyl_density(d);
    std::vector<IntVec> weights;
    IntVec l(static_cast<std::size_t>(d.rank()), 0);
    for (;;) {
      weights.push_back(l);
      std::size_t i = 0;
      while (i < l.size() && l[i] == kCoord) l[i++] = 0;
      if (i == l.size()) break;
      ++l[i];
    }
    auto cases = parallel_map(weights.size(), [&](std::size_t i) {
      const IntVec& w = weights[i];
      const bool sd = is_self_dual_weight(d, w);
      const int expected = sd ? fs_indicator(d, w) : 0;
      return check("fs/" + name + "/" + to_string(w), std::to_string(expected),
                   std::to_string(fs_oracle(d, w, &density)));
    });
    out.insert(out.end(), cases.begin(), cases.end());
  }
  return out;
}

const std::map<std::string, std::function<Cases()>>& registry() {
  static const std::map<std::string, std::function<Cases()>> r = {
      {"minus_one", suite_minus_one},   {"zrho", suite_zrho},     {"tits", suite_tits},
      {"kac", suite_kac},               {"fs", suite_fs},         {"purity", suite_purity},
      {"classification", suite_classification},
  };
  return r;
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.pass; }));
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["summary"] = {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}};
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases)
    j["cases"].push_back({{"id", c.id}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return j;
}

VerifyReport VerifyReport::from_json(const nlohmann::ordered_json& j) {
  VerifyReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("cases"))
    r.cases.push_back({c.at("id").get<std::string>(), c.at("expected").get<std::string>(),
                       c.at("actual").get<std::string>(), c.at("pass").get<bool>()});
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"minus_one", "zrho", "tits", "kac",
                                                 "fs", "purity", "classification", "all"};
  return names;
}

VerifyReport run_suite(const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport r;
  r.suite = name;
  if (name == "all") {
    for (const auto& [n, f] : registry()) {
      auto c = f();
      r.cases.insert(r.cases.end(), c.begin(), c.end());
    }
  } else {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("unknown suite '" + name + "'");
    r.cases = it->second();
  }
  std::stable_sort(r.cases.begin(), r.cases.end(),
                   [](const VerifyCase& a, const VerifyCase& b) { return a.id < b.id; });
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SelfDualRow> selfdual_table(int max_rank) {
  if (max_rank < 1 || max_rank > kMaxRank)
    throw Error("max rank must be between 1 and " + std::to_string(kMaxRank));
  std::vector<const NamedForm*> forms;
  for (const auto& f : Catalog::standard().forms())
    if (f.descriptor.type.rank() <= max_rank) forms.push_back(&f);
  return parallel_map(forms.size(), [&](std::size_t i) {
    const NamedForm& f = *forms[i];
    RootDatum d = f.datum();
    SelfDualRow row;
    row.name = f.name;
    row.type = f.descriptor.type.name();
    row.lattice = f.descriptor.lattice.name();
    row.variant = f.descriptor.variant_name();
    row.equal_rank = f.descriptor.is_equal_rank();
    row.minus_one = minus_one_in_weyl(d);
    if (row.equal_rank && row.minus_one) row.pure = purity(d, std::get<EqualRank>(f.descriptor.variant).node);
    row.self_dual_all = all_reps_self_dual(d, f.descriptor);
    return row;
  });
}

}  // namespace chevalley
