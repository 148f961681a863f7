#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "braidkit/abelian.hpp"
#include "braidkit/coset.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/genmaps.hpp"
#include "braidkit/verify.hpp"

using namespace braidkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;

Params collect_params(const std::map<std::string, long long>& raw) {
  Params p;
  for (const auto& [k, v] : raw)
    if (v >= 0) p[k] = v;
  return p;
}

Presentation load_pres(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult parsed = parse_dsl(buf.str());
  if (!parsed.presentation) {
    std::string msg = "parse failed:";
    for (const auto& d : parsed.diagnostics.items)
      msg += "\n  line " + std::to_string(d.line) + ": " + d.message;
    throw Error(msg);
  }
  return *parsed.presentation;
}

std::vector<Word> parse_subgroup(const AlphabetRef& alphabet, const std::string& text) {
  std::vector<Word> words;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
    while (!piece.empty() && piece.back() == ' ') piece.pop_back();
    if (!piece.empty()) words.push_back(parse_word(alphabet, piece));
  }
  return words;
}

int emit_report(const VerificationReport& report, const std::string& json_path) {
  for (const auto& c : report.checks)
    std::cout << verdict_name(c.verdict) << "  " << c.spec.id << "  expected: "
              << c.expected << "  observed: " << c.observed << "\n";
  std::cout << "overall: " << (report.overall() ? "pass" : "fail") << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error("cannot write " + json_path);
    out << report_json(report);
  }
  return report.overall() ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentations, translations and verification for braid-like groups"};
  app.require_subcommand(1);

  std::string family_name_arg, out_path, pres_path, word_text, subgroup_text;
  std::string direction = "to-canonical", check = "soundness", suite, json_path;
  std::map<std::string, long long> raw{{"n", -1}, {"d", -1}, {"e", -1}, {"r", -1}};
  bool torsion = false;
  long long max_cosets = 1000000;
  int nf_strands = 0;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--n", raw["n"], "strand / rank parameter");
    cmd->add_option("--d", raw["d"], "d parameter (complex families)");
    cmd->add_option("--e", raw["e"], "e parameter (complex families)");
    cmd->add_option("--r", raw["r"], "r parameter (complex families)");
  };

  CLI::App* list = app.add_subcommand("list-families", "list presentation families");

  CLI::App* build = app.add_subcommand("build", "instantiate a catalog presentation");
  build->add_option("--family", family_name_arg, "family name")->required();
  add_params(build);
  build->add_flag("--torsion", torsion, "append the family's order relations");
  build->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* translate =
      app.add_subcommand("translate", "translate a word between generating sets");
  translate->add_option("--family", family_name_arg, "family name")->required();
  add_params(translate);
  translate->add_option("--word", word_text, "word to translate")->required();
  translate->add_option("--direction", direction,
                        "to-canonical (default) or to-reduced");

  CLI::App* nf = app.add_subcommand("nf", "Garside normal form of a braid word");
  nf->add_option("--n", nf_strands, "strand count")->required();
  nf->add_option("--word", word_text, "word over s1..s{n-1}")->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  enumerate_cmd->add_option("--pres", pres_path, "presentation file")->required();
  enumerate_cmd->add_option("--subgroup", subgroup_text, "subgroup words, ';'-separated");
  enumerate_cmd->add_option("--max-cosets", max_cosets, "coset cap (default 10^6)");

  CLI::App* abelianize = app.add_subcommand("abelianize", "abelianization invariants");
  abelianize->add_option("--pres", pres_path, "presentation file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--suite", suite, "'paper' runs the full suite");
  verify->add_option("--family", family_name_arg, "family to check");
  add_params(verify);
  verify->add_option("--check", check,
                     "soundness | quotient_order | roundtrip | proof_steps | bkl | "
                     "structural");
  verify->add_option("--json", json_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list->parsed()) {
      for (FamilyId f : all_families()) std::cout << family_name(f) << "\n";
      return kExitPass;
    }

    if (build->parsed()) {
      auto family = family_from_name(family_name_arg);
      if (!family) throw Error("unknown family " + family_name_arg);
      Presentation p = catalog_build(*family, collect_params(raw), torsion);
      std::string text = serialize(p);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write " + out_path);
        out << text;
      }
      return kExitPass;
    }

    if (translate->parsed()) {
      auto family = family_from_name(family_name_arg);
      if (!family) throw Error("unknown family " + family_name_arg);
      Params params = collect_params(raw);
      GeneratorMap map = direction == "to-reduced"
                             ? canonical_to_reduced(*family, params)
                             : reduced_to_canonical(*family, params);
      if (direction != "to-reduced" && direction != "to-canonical")
        throw Error("direction must be to-canonical or to-reduced");
      Word w = parse_word(map.source, word_text);
      std::cout << to_string(substitute(w, map)) << "\n";
      return kExitPass;
    }

    if (nf->parsed()) {
      AlphabetRef a =
          catalog_build(FamilyId::artin_canonical, {{"n", nf_strands}}).alphabet;
      BraidNF form = braid_nf(parse_word(a, word_text), nf_strands);
      std::cout << to_string(form) << "\n";
      return kExitPass;
    }

    if (enumerate_cmd->parsed()) {
      Presentation p = load_pres(pres_path);
      std::vector<Word> subgroup = parse_subgroup(p.alphabet, subgroup_text);
      EnumerationResult r = enumerate(p, subgroup, max_cosets);
      if (const Completed* c = completed(r)) {
        std::cout << "index=" << c->index << "\n";
        return kExitPass;
      }
      std::cout << "overflow\n";
      return kExitOverflow;
    }

    if (abelianize->parsed()) {
      std::cout << to_string(abelianization(load_pres(pres_path))) << "\n";
      return kExitPass;
    }

    if (verify->parsed()) {
      if (suite == "paper") return emit_report(run_paper_suite(), json_path);
      if (!suite.empty()) throw Error("unknown suite " + suite);
      auto family = family_from_name(family_name_arg);
      if (!family) throw Error("a --family (or --suite paper) is required");
      Params params = collect_params(raw);
      VerificationReport report;
      if (check == "soundness")
        report = verify_soundness(*family, params);
      else if (check == "quotient_order")
        report = verify_quotient_orders(*family, params);
      else if (check == "roundtrip")
        report = verify_roundtrip(*family, params.at("n"));
      else if (check == "proof_steps")
        report = verify_proof_steps(static_cast<int>(params.at("n")));
      else if (check == "bkl")
        report = verify_bkl(static_cast<int>(params.at("n")));
      else if (check == "structural")
        report = verify_structural_coincidence(params.at("r"));
      else
        throw Error("unknown check " + check);
      return emit_report(report, json_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
