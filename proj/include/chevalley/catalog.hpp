#pragma once

#include <string>
#include <vector>

#include "chevalley/realforms.hpp"

namespace chevalley {

struct NamedForm {
  std::string name;
  std::vector<std::string> aliases;
  RealFormDescriptor descriptor;

  RootDatum datum() const;
};

class UnknownFormError : public Error {
 public:
  using Error::Error;
};

class IllegalSignatureError : public Error {
 public:
  using Error::Error;
};

/// Canonical spelling: whitespace removed, the real-number sign spelled R,
/// and two-number signatures of the SU/Spin/SO/Sp families sorted (p <= q).
std::string normalize_form_name(const std::string& name);

class Catalog {
 public:
  /// Parses the catalog JSON ({"version":..,"forms":[..]}). Throws on
  /// malformed entries or duplicate names.
  static Catalog from_json(const std::string& text);
  /// The embedded catalog, or the file named by CHEVALLEY_CATALOG if set.
  static const Catalog& standard();

  const std::vector<NamedForm>& forms() const { return forms_; }

  /// Throws UnknownFormError for names outside the grammar and
  /// IllegalSignatureError for known families with a signature not listed.
  const NamedForm& lookup(const std::string& name) const;

 private:
  std::vector<NamedForm> forms_;
  std::vector<std::pair<std::string, std::size_t>> index_;  // sorted by name
};

struct ExpectedVerdict {
  std::string name;
  bool expected = false;
  std::string rule;
};

/// The bundled table of expected all-representations-self-dual verdicts.
const std::vector<ExpectedVerdict>& expected_verdicts();
std::vector<ExpectedVerdict> parse_expected_verdicts(const std::string& text);

/// Raw embedded assets.
const std::string& embedded_catalog_json();
const std::string& embedded_expected_json();

}  // namespace chevalley
