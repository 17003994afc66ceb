#pragma once

#include <string>

#include "chevalley/rootdata.hpp"

namespace testing {

inline chevalley::RootDatum datum(const std::string& type, const std::string& lattice = "sc") {
  auto t = chevalley::CartanType::parse(type);
  return chevalley::RootDatum::build(t, chevalley::LatticeSpec::named(lattice, t));
}

inline std::vector<std::string> lattice_names(const chevalley::CartanType& t) {
  std::vector<std::string> out{"sc", "ad"};
  if (t.series() == chevalley::Series::D) {
    out.push_back("so");
    if (t.rank() % 2 == 0) out.push_back("sobar");
  }
  return out;
}

}  // namespace testing
