#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidkit/abelian.hpp"
#include "braidkit/coset.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/genmaps.hpp"
#include "braidkit/verify.hpp"

namespace py = pybind11;
using namespace braidkit;

namespace {

FamilyId family_or_throw(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) throw Error("unknown family " + name);
  return *f;
}

Params to_params(const std::map<std::string, long long>& params) {
  return Params(params.begin(), params.end());
}

Presentation parse_or_throw(const std::string& text) {
  ParseResult r = parse_dsl(text);
  if (!r.presentation) {
    std::string msg = "parse failed";
    for (const auto& d : r.diagnostics.items)
      msg += "; line " + std::to_string(d.line) + ": " + d.message;
    throw Error(msg);
  }
  return *r.presentation;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "presentations, translations and verification for braid-like groups";

  py::register_exception<Error>(m, "BraidkitError");

  m.def("list_families", [] {
    std::vector<std::string> names;
    for (FamilyId f : all_families()) names.emplace_back(family_name(f));
    return names;
  });

  m.def(
      "build",
      [](const std::string& family, const std::map<std::string, long long>& params,
         bool torsion) {
        return serialize(catalog_build(family_or_throw(family), to_params(params),
                                       torsion));
      },
      py::arg("family"), py::arg("params") = std::map<std::string, long long>{},
      py::arg("torsion") = false,
      "Instantiate a catalog presentation, returned as DSL text.");

  m.def(
      "translate",
      [](const std::string& family, const std::map<std::string, long long>& params,
         const std::string& word, const std::string& direction) {
        FamilyId f = family_or_throw(family);
        if (direction != "to-canonical" && direction != "to-reduced")
          throw Error("direction must be to-canonical or to-reduced");
        GeneratorMap map = direction == "to-reduced"
                               ? canonical_to_reduced(f, to_params(params))
                               : reduced_to_canonical(f, to_params(params));
        return to_string(substitute(parse_word(map.source, word), map));
      },
      py::arg("family"), py::arg("params"), py::arg("word"),
      py::arg("direction") = "to-canonical");

  m.def(
      "nf",
      [](const std::string& word, int n) {
        AlphabetRef a = catalog_build(FamilyId::artin_canonical, {{"n", n}}).alphabet;
        return to_string(braid_nf(parse_word(a, word), n));
      },
      py::arg("word"), py::arg("n"),
      "Garside normal form of a word over s1..s{n-1}.");

  m.def(
      "braid_equal",
      [](const std::string& u, const std::string& v, int n) {
        AlphabetRef a = catalog_build(FamilyId::artin_canonical, {{"n", n}}).alphabet;
        return braid_equal(parse_word(a, u), parse_word(a, v), n);
      },
      py::arg("u"), py::arg("v"), py::arg("n"));

  m.def(
      "enumerate_cosets",
      [](const std::string& presentation, const std::vector<std::string>& subgroup,
         long long max_cosets) -> py::object {
        Presentation p = parse_or_throw(presentation);
        std::vector<Word> sub;
        for (const auto& w : subgroup) sub.push_back(parse_word(p.alphabet, w));
        EnumerationResult r = enumerate(p, sub, max_cosets);
        if (const Completed* c = completed(r)) return py::int_(c->index);
        return py::none();  // overflow
      },
      py::arg("presentation"), py::arg("subgroup") = std::vector<std::string>{},
      py::arg("max_cosets") = 1000000,
      "Subgroup index from DSL text, or None on overflow.");

  m.def(
      "abelianization",
      [](const std::string& presentation) {
        return to_string(abelianization(parse_or_throw(presentation)));
      },
      py::arg("presentation"));

  m.def("paper_suite_json", [] { return report_json(run_paper_suite()); },
        "Run the full verification suite; returns the JSON report.");

  m.def(
      "verify_soundness_json",
      [](const std::string& family, const std::map<std::string, long long>& params) {
        return report_json(verify_soundness(family_or_throw(family), to_params(params)));
      },
      py::arg("family"), py::arg("params") = std::map<std::string, long long>{});
}
