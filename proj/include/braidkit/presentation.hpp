#ifndef BRAIDKIT_PRESENTATION_HPP
#define BRAIDKIT_PRESENTATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/word.hpp"

namespace braidkit {

enum class FamilyId {
  artin_canonical,
  artin_two_gen,
  bkl,
  sphere_canonical,
  sphere_two_gen,
  singular_canonical,
  singular_two_gen,
  bp_canonical,
  bp_reduced,
  typeB_canonical,
  typeB_reduced,
  typeD_canonical,
  typeD_reduced,
  typeE8_reduced,
  complex_2e_e_r,
  complex_e_e_r,
  complex_d_1_n,
  br_g30,
  br_g34,
  g25_quotient,
  g32_quotient,
};

const char* family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);
std::vector<FamilyId> all_families();

enum class Kind { group, monoid };

struct Relation {
  Word lhs;
  Word rhs;
  bool operator==(const Relation&) const = default;
};

using Params = std::map<std::string, long long>;

struct Presentation {
  std::string name;
  Kind kind = Kind::group;
  AlphabetRef alphabet;
  std::vector<Relation> relations;
  Params params;
};

struct Diagnostic {
  enum class Severity { warn, error };
  Severity severity = Severity::error;
  std::string message;
  int line = 0;  // 0 when not tied to source text
  int col = 0;
};

struct Diagnostics {
  std::vector<Diagnostic> items;

  bool ok() const {
    for (const auto& d : items)
      if (d.severity == Diagnostic::Severity::error) return false;
    return true;
  }
  void error(std::string msg, int line = 0, int col = 0) {
    items.push_back({Diagnostic::Severity::error, std::move(msg), line, col});
  }
  void warn(std::string msg, int line = 0, int col = 0) {
    items.push_back({Diagnostic::Severity::warn, std::move(msg), line, col});
  }
};

/// Instantiates one presentation family at the given parameters.
/// `torsion` appends the family's order relations (the Coxeter /
/// reflection-group quotient); throws UnsupportedParams for families
/// without a torsion block.
Presentation catalog_build(FamilyId family, const Params& params, bool torsion = false);

Diagnostics validate(const Presentation& p);

struct ParseResult {
  std::optional<Presentation> presentation;  // set iff diagnostics.ok()
  Diagnostics diagnostics;
};

ParseResult parse_dsl(const std::string& text);
std::string serialize(const Presentation& p);

}  // namespace braidkit

#endif
