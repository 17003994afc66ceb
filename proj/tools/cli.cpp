#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevalley/catalog.hpp"
#include "chevalley/fsind.hpp"
#include "chevalley/realforms.hpp"
#include "chevalley/verify.hpp"
#include "chevalley/weyl.hpp"

namespace chevalley {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// A table of string cells; JSON output keeps the originally typed values.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<ojson>> rows;
};

std::string cell_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "n/a";
  return v.dump();
}

void print_table(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ojson arr = ojson::array();
    for (const auto& r : t.rows) {
      ojson o;
      for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = r[i];
      arr.push_back(o);
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == "tsv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "\t" : "") << t.columns[i];
    out << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << cell_text(r[i]);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], cell_text(r[i]).size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(t.columns);
  for (const auto& r : t.rows) {
    std::vector<std::string> cells;
    for (const auto& v : r) cells.push_back(cell_text(v));
    line(cells);
  }
}

void print_record(const ojson& rec, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << rec.dump(2) << "\n";
    return;
  }
  if (format == "tsv") {
    std::string keys, vals;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      keys += (keys.empty() ? "" : "\t") + it.key();
      vals += (it == rec.begin() ? "" : "\t") + cell_text(it.value());
    }
    out << keys << "\n" << vals << "\n";
    return;
  }
  std::size_t w = 0;
  for (auto it = rec.begin(); it != rec.end(); ++it) w = std::max(w, it.key().size());
  for (auto it = rec.begin(); it != rec.end(); ++it)
    out << std::left << std::setw(static_cast<int>(w + 2)) << (it.key() + ":") << cell_text(it.value()) << "\n";
}

void print_report(const VerifyReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.to_json().dump(2) << "\n";
    return;
  }
  if (format == "tsv") {
    out << "id\texpected\tactual\tpass\n";
    for (const auto& c : r.cases) out << c.id << "\t" << c.expected << "\t" << c.actual << "\t" << (c.pass ? "true" : "false") << "\n";
    return;
  }
  for (const auto& c : r.cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.pass) out << "  expected: " << c.expected << "  actual: " << c.actual;
    out << "\n";
  }
  out << "suite " << r.suite << ": " << r.passed() << "/" << r.cases.size() << " passed\n";
}

ojson datum_json(const RootDatum& d) {
  ojson j;
  j["series"] = std::string(1, series_letter(d.type().series()));
  j["rank"] = d.rank();
  const auto& spec = d.lattice_spec();
  if (spec.kind == LatticeSpec::Kind::Generators && spec.label.empty()) {
    j["lattice"] = {{"generators", spec.generators}};
  } else {
    j["lattice"] = spec.name();
  }
  return j;
}

std::string read_arg_or_file(const std::string& v) {
  if (v.empty() || v[0] != '@') return v;
  std::ifstream in(v.substr(1));
  if (!in) throw UsageError("cannot read " + v.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RootDatum datum_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed --datum JSON: ") + e.what());
  }
  if (!j.contains("series") || !j.contains("rank")) throw UsageError("--datum needs series and rank");
  CartanType t = CartanType::make(parse_series(j["series"].get<std::string>()), j["rank"].get<int>());
  LatticeSpec spec = LatticeSpec::simply_connected();
  if (j.contains("lattice")) {
    const auto& l = j["lattice"];
    if (l.is_string()) {
      spec = LatticeSpec::named(l.get<std::string>(), t);
    } else if (l.is_object() && l.contains("generators")) {
      spec = LatticeSpec::from_generators(l["generators"].get<std::vector<IntVec>>());
    } else {
      throw UsageError("--datum lattice must be a name or {\"generators\": [...]}");
    }
  }
  return RootDatum::build(t, spec);
}

struct DatumArgs {
  std::string series;
  int rank = 0;
  std::string lattice = "sc";
  std::string datum;

  void attach(CLI::App* app) {
    app->add_option("--series", series, "Series letter A..G");
    app->add_option("--rank", rank, "Rank");
    app->add_option("--lattice", lattice, "sc, ad, so, sobar")->capture_default_str();
    app->add_option("--datum", datum, "Root datum JSON, or @file");
  }

  RootDatum build() const {
    if (!datum.empty()) return datum_from_json(read_arg_or_file(datum));
    if (series.empty() || rank == 0) throw UsageError("give --series and --rank, or --datum");
    CartanType t = CartanType::make(parse_series(series), rank);
    return RootDatum::build(t, LatticeSpec::named(lattice, t));
  }
};

IntVec parse_weight(const std::string& s) {
  IntVec w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("malformed --weight '" + s + "'");
    }
  }
  if (w.empty()) throw UsageError("empty --weight");
  return w;
}

ojson int_list(const std::vector<int>& v) { return ojson(v); }

int cmd_roots(const DatumArgs& a, const std::string& format, std::ostream& out) {
  RootDatum d = a.build();
  Table t{{"root", "height", "positive", "coroot"}, {}};
  for (const auto& r : d.roots()) {
    std::int64_t h = 0;
    for (auto c : r) h += c;
    t.rows.push_back({to_string(r), h, h > 0, to_string(d.coroot(r))});
  }
  if (format == "json") {
    ojson j;
    j["datum"] = datum_json(d);
    j["count"] = d.roots().size();
    j["roots"] = d.roots();
    out << j.dump(2) << "\n";
    return 0;
  }
  print_table(t, format, out);
  return 0;
}

int cmd_weyl(const DatumArgs& a, const std::string& format, std::ostream& out) {
  RootDatum d = a.build();
  WeylElement w0 = longest_element(d);
  ojson rec;
  if (format == "json") rec["datum"] = datum_json(d);
  rec["type"] = d.type().name();
  rec["lattice"] = d.lattice_spec().name();
  rec["order"] = classical_weyl_order(d.type()).str();
  if (d.rank() <= kWeylEnumerationMaxRank) rec["enumerated_order"] = enumerate_weyl(d).size();
  auto word = reduced_word(d, w0);
  rec["longest_length"] = word.size();
  if (format == "json") rec["longest_word"] = word;
  else {
    std::string s;
    for (int i : word) s += (s.empty() ? "" : " ") + std::to_string(i);
    rec["longest_word"] = s;
  }
  rec["minus_one_in_W"] = minus_one_in_weyl(d);
  rec["dual_involution"] = format == "json" ? int_list(dual_involution_on_simples(d))
                                            : ojson(to_string(IntVec(dual_involution_on_simples(d).begin(),
                                                                      dual_involution_on_simples(d).end())));
  rec["center"] = center(d).to_string();
  print_record(rec, format, out);
  return 0;
}

std::string descriptor_detail(const RealFormDescriptor& d) {
  if (const auto* e = std::get_if<EqualRank>(&d.variant)) return "node " + std::to_string(e->node);
  if (const auto* u = std::get_if<UnequalRankReal>(&d.variant)) return u->family;
  return "complex";
}

int cmd_forms_list(const std::string& series, int max_rank, const std::string& format, std::ostream& out) {
  Table t{{"name", "type", "lattice", "variant", "detail", "aliases"}, {}};
  for (const auto& f : Catalog::standard().forms()) {
    if (!series.empty() && std::string(1, series_letter(f.descriptor.type.series())) != series) continue;
    if (f.descriptor.type.rank() > max_rank) continue;
    std::string aliases;
    for (const auto& a : f.aliases) aliases += (aliases.empty() ? "" : " ") + a;
    t.rows.push_back({f.name, f.descriptor.type.name(), f.descriptor.lattice.name(), f.descriptor.variant_name(),
                      descriptor_detail(f.descriptor), aliases});
  }
  print_table(t, format, out);
  return 0;
}

int cmd_forms_selfdual(const std::string& name, const std::string& format, std::ostream& out) {
  const NamedForm& f = Catalog::standard().lookup(name);
  RootDatum d = f.datum();
  ojson rec;
  rec["name"] = f.name;
  rec["type"] = f.descriptor.type.name();
  rec["lattice"] = f.descriptor.lattice.name();
  rec["variant"] = f.descriptor.variant_name();
  rec["detail"] = descriptor_detail(f.descriptor);
  const bool m1 = minus_one_in_weyl(d);
  rec["minus_one_in_W"] = m1;
  if (const auto* e = std::get_if<EqualRank>(&f.descriptor.variant)) {
    rec["K"] = k_subdatum(d, e->node).type_name();
    rec["pure"] = m1 ? ojson(purity(d, e->node)) : ojson(nullptr);
  }
  rec["self_dual_all"] = all_reps_self_dual(d, f.descriptor);
  print_record(rec, format, out);
  return 0;
}

int cmd_selfdual_table(int max_rank, const std::string& series, const std::string& format, std::ostream& out) {
  Table t{{"name", "series", "lattice", "equal_rank", "minus_one_in_W", "pure", "self_dual_all"}, {}};
  for (const auto& r : selfdual_table(max_rank)) {
    if (!series.empty() && r.type.substr(0, 1) != series) continue;
    t.rows.push_back({r.name, r.type, r.lattice, r.equal_rank, r.minus_one,
                      r.pure ? ojson(*r.pure) : ojson(nullptr), r.self_dual_all});
  }
  print_table(t, format, out);
  return 0;
}

int cmd_fs(const DatumArgs& a, const std::string& weight, const std::string& format, std::ostream& out) {
  RootDatum d = a.build();
  const IntVec lambda = parse_weight(weight);
  const bool sd = is_self_dual_weight(d, lambda);
  ojson rec;
  rec["type"] = d.type().name();
  rec["lattice"] = d.lattice_spec().name();
  rec["weight"] = format == "json" ? ojson(lambda) : ojson(to_string(lambda));
  rec["dimension"] = weyl_dimension(d, lambda).str();
  rec["self_dual"] = sd;
  rec["indicator"] = sd ? ojson(fs_indicator(d, lambda)) : ojson("n/a");
  try {
    rec["oracle"] = fs_oracle(d, lambda);
  } catch (const GuardError&) {
    rec["oracle"] = "n/a (outside guard)";
  }
  print_record(rec, format, out);
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  VerifyReport r = run_suite(suite);
  print_report(r, format, out);
  err << "suite " << suite << " wall time: " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root data, real forms, self-duality and Frobenius-Schur indicators", "chevalley"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "text, tsv or json")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->capture_default_str();

  DatumArgs roots_args, weyl_args, fs_args;
  auto* roots = app.add_subcommand("roots", "List the roots of a datum");
  roots_args.attach(roots);
  auto* weyl = app.add_subcommand("weyl", "Weyl group data: order, longest element, -1 test");
  weyl_args.attach(weyl);

  auto* forms = app.add_subcommand("forms", "Named real forms");
  forms->require_subcommand(1);
  std::string list_series;
  int list_max_rank = 8;
  auto* forms_list = forms->add_subcommand("list", "List catalog forms");
  forms_list->add_option("--series", list_series);
  forms_list->add_option("--max-rank", list_max_rank)->capture_default_str();
  std::string form_name;
  auto* forms_sd = forms->add_subcommand("selfdual", "Self-duality verdict for a named form");
  forms_sd->add_option("--name", form_name)->required();
  auto* forms_verify = forms->add_subcommand("verify", "Compare every verdict with the expected table");

  int table_max_rank = 8;
  std::string table_series;
  auto* table = app.add_subcommand("selfdual-table", "Self-duality table of catalog forms");
  table->add_option("--max-rank", table_max_rank)->capture_default_str();
  table->add_option("--series", table_series);

  std::string weight;
  auto* fs = app.add_subcommand("fs", "Frobenius-Schur indicator of a highest weight");
  fs_args.attach(fs);
  fs->add_option("--weight", weight, "Comma-separated fundamental-weight coordinates")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "minus_one, zrho, tits, kac, fs, purity, classification, all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*roots) return cmd_roots(roots_args, format, out);
    if (*weyl) return cmd_weyl(weyl_args, format, out);
    if (*forms_list) return cmd_forms_list(list_series, list_max_rank, format, out);
    if (*forms_sd) return cmd_forms_selfdual(form_name, format, out);
    if (*forms_verify) return cmd_verify("classification", format, out, err);
    if (*table) return cmd_selfdual_table(table_max_rank, table_series, format, out);
    if (*fs) return cmd_fs(fs_args, weight, format, out);
    if (*verify) return cmd_verify(suite, format, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace chevalley
