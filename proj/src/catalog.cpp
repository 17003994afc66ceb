#include "chevalley/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace chevalley {

namespace {

using nlohmann::json;

const std::vector<std::string> kSignatureHeads = {"SU", "PSU", "Spin", "SO", "PSO", "SO-bar", "Sp", "PSp"};
const std::vector<std::string> kKnownHeads = {
    "SU", "PSU", "SL", "PGL", "PSL", "Spin", "SO", "PSO", "SO-bar", "Spin*", "SO*", "PSO*",
    "SO-bar*", "Sp", "PSp", "SU*", "PSU*", "E6", "E7", "E8", "F4", "G2", "Complex"};

std::string head_of(const std::string& name) {
  auto p = name.find_first_of("([");
  return p == std::string::npos ? name : name.substr(0, p);
}

RealFormDescriptor parse_descriptor(const json& e) {
  const std::string series = e.at("series").get<std::string>();
  const CartanType type = CartanType::make(parse_series(series), e.at("rank").get<int>());
  RealFormDescriptor d{type, LatticeSpec::named(e.at("lattice").get<std::string>(), type), EqualRank{}};
  const std::string variant = e.at("variant").get<std::string>();
  if (variant == "equal_rank") {
    d.variant = EqualRank{e.at("node").get<int>()};
  } else if (variant == "unequal_rank") {
    d.variant = UnequalRankReal{e.at("family").get<std::string>()};
  } else if (variant == "complex") {
    d.variant = ComplexGroup{type};
  } else {
    throw Error("catalog: unknown variant '" + variant + "'");
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

RootDatum NamedForm::datum() const { return RootDatum::build(descriptor.type, descriptor.lattice); }

std::string normalize_form_name(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  for (std::size_t p; (p = s.find("ℝ")) != std::string::npos;) s.replace(p, 3, "R");
  static const std::regex sig(R"(^([A-Za-z\-]+)\((\d+),(\d+)\)$)");
  std::smatch m;
  if (std::regex_match(s, m, sig) &&
      std::find(kSignatureHeads.begin(), kSignatureHeads.end(), m[1].str()) != kSignatureHeads.end()) {
    long a = std::stol(m[2].str()), b = std::stol(m[3].str());
    if (a > b) std::swap(a, b);
    s = m[1].str() + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s;
}

Catalog Catalog::from_json(const std::string& text) {
  Catalog c;
  json doc = json::parse(text);
  for (const auto& e : doc.at("forms")) {
    NamedForm f;
    f.name = e.at("name").get<std::string>();
    if (e.contains("aliases")) f.aliases = e.at("aliases").get<std::vector<std::string>>();
    try {
      f.descriptor = parse_descriptor(e);
    } catch (const std::exception& ex) {
      throw Error("catalog entry " + f.name + ": " + ex.what());
    }
    const std::size_t idx = c.forms_.size();
    c.index_.emplace_back(normalize_form_name(f.name), idx);
    for (const auto& a : f.aliases) c.index_.emplace_back(normalize_form_name(a), idx);
    c.forms_.push_back(std::move(f));
  }
  std::sort(c.index_.begin(), c.index_.end());
  for (std::size_t i = 1; i < c.index_.size(); ++i)
    if (c.index_[i].first == c.index_[i - 1].first)
      throw Error("catalog: duplicate name " + c.index_[i].first);
  return c;
}

const Catalog& Catalog::standard() {
  static const Catalog c = [] {
    const char* path = std::getenv("CHEVALLEY_CATALOG");
    return from_json(path != nullptr && *path != '\0' ? read_file(path) : embedded_catalog_json());
  }();
  return c;
}

const NamedForm& Catalog::lookup(const std::string& name) const {
  const std::string key = normalize_form_name(name);
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& entry, const std::string& k) { return entry.first < k; });
  if (it != index_.end() && it->first == key) return forms_[it->second];
  const std::string head = head_of(key);
  if (std::find(kKnownHeads.begin(), kKnownHeads.end(), head) != kKnownHeads.end())
    throw IllegalSignatureError("illegal signature for " + head + ": " + name);
  throw UnknownFormError("unknown real form: " + name);
}

std::vector<ExpectedVerdict> parse_expected_verdicts(const std::string& text) {
  std::vector<ExpectedVerdict> out;
  const json doc = json::parse(text);
  for (const auto& r : doc.at("rows"))
    out.push_back({r.at("name").get<std::string>(), r.at("expected").get<bool>(),
                   r.at("rule").get<std::string>()});
  return out;
}

const std::vector<ExpectedVerdict>& expected_verdicts() {
  static const auto rows = parse_expected_verdicts(embedded_expected_json());
  return rows;
}

}  // namespace chevalley
