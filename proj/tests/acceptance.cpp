// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Expected values are certified against oracles computed here, independently
// of the library paths under test (matrix closures, independent presentations
// of the same groups, enumeration cross-checks of Smith-form results).

#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "braidkit/abelian.hpp"
#include "braidkit/coset.hpp"
#include "braidkit/verify.hpp"

using namespace braidkit;

namespace {

int failures = 0;

void criterion(int number, bool ok, const std::string& detail) {
  std::cout << "criterion " << number << ": " << (ok ? "pass" : "fail");
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

// breadth-first closure of a finitely generated group of elements with <
template <class T>
std::size_t closure_size(std::vector<T> gens, const T& id,
                         T (*mul)(const T&, const T&)) {
  std::set<T> seen{id};
  std::vector<T> frontier{id};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& x : frontier)
      for (const T& g : gens) {
        T y = mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

long long enum_order(const Presentation& p, std::int64_t budget = 1000000) {
  EnumerationResult r = enumerate(p, {}, budget);
  if (const Completed* c = completed(r)) return c->index;
  return -1;
}

Presentation dsl(const std::string& text) {
  ParseResult r = parse_dsl(text);
  if (!r.presentation) {
    std::ostringstream os;
    os << "acceptance: bad oracle presentation";
    for (const auto& d : r.diagnostics.items)
      os << "; line " << d.line << ": " << d.message;
    throw Error(os.str());
  }
  return *r.presentation;
}

// the presentation with all generator pairs forced to commute
Presentation abelianized(Presentation p) {
  const AlphabetRef& a = p.alphabet;
  for (int i = 0; i < a->size(); ++i)
    for (int j = i + 1; j < a->size(); ++j)
      p.relations.push_back({Word(a, {{i, 1}, {j, 1}}), Word(a, {{j, 1}, {i, 1}})});
  return p;
}

long long factorial(long long n) {
  long long f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

bool all_pass(const VerificationReport& r) {
  if (r.checks.empty()) return false;
  for (const auto& c : r.checks)
    if (c.verdict != Verdict::pass) return false;
  return true;
}

std::string first_failure(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (c.verdict != Verdict::pass)
      return c.spec.id + ": " + verdict_name(c.verdict) + ", " + c.observed;
  return "";
}

Permutation pmul(const Permutation& a, const Permutation& b) { return pcompose(a, b); }
MonomialMatrix mmul(const MonomialMatrix& a, const MonomialMatrix& b) {
  return mcompose(a, b);
}

// ---- criteria ---------------------------------------------------------------

void criterion1() {
  bool ok = true;
  std::string detail;
  for (long long n = 3; n <= 7; ++n) {
    // oracle: closure of < (1 2), n-cycle > in S_n
    Permutation cycle;
    cycle.img.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cycle.img[static_cast<size_t>(i)] = (i + 1) % static_cast<int>(n);
    std::size_t oracle = closure_size<Permutation>(
        {Permutation::transposition(static_cast<int>(n), 0), cycle},
        Permutation::identity(static_cast<int>(n)), pmul);

    long long got = enum_order(catalog_build(FamilyId::artin_two_gen, {{"n", n}}, true));
    if (got != static_cast<long long>(oracle) || got != factorial(n)) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": enumerated " + std::to_string(got) +
               ", closure " + std::to_string(oracle);
      break;
    }
  }
  criterion(1, ok, detail.empty() ? "n=3..7 against permutation closures" : detail);
}

void criterion2() {
  bool ok = true;
  std::string detail;
  auto signed_perm_order = [](int n, bool type_b) {
    std::vector<MonomialMatrix> gens;
    for (int i = 0; i < n - 1; ++i) {
      MonomialMatrix s = MonomialMatrix::identity(n, 2);
      s.perm = Permutation::transposition(n, i);
      gens.push_back(s);
    }
    MonomialMatrix extra = MonomialMatrix::identity(n, 2);
    if (type_b) {
      extra.exps[0] = 1;  // diag(-1, 1, ..., 1)
    } else {
      extra.perm = Permutation::transposition(n, 0);  // e1 -> -e2, e2 -> -e1
      extra.exps[0] = 1;
      extra.exps[1] = 1;
    }
    gens.push_back(extra);
    return closure_size<MonomialMatrix>(gens, MonomialMatrix::identity(n, 2), mmul);
  };
  struct Case {
    FamilyId family;
    long long n;
    bool type_b;
    long long expected;
  };
  for (const Case& c : {Case{FamilyId::typeB_reduced, 4, true, 384},
                        Case{FamilyId::typeB_reduced, 5, true, 3840},
                        Case{FamilyId::typeD_reduced, 4, false, 192},
                        Case{FamilyId::typeD_reduced, 5, false, 1920}}) {
    std::size_t oracle = signed_perm_order(static_cast<int>(c.n), c.type_b);
    long long got = enum_order(catalog_build(c.family, {{"n", c.n}}, true));
    if (got != c.expected || static_cast<long long>(oracle) != c.expected) {
      ok = false;
      detail = std::string(family_name(c.family)) + " n=" + std::to_string(c.n) +
               ": enumerated " + std::to_string(got) + ", closure " +
               std::to_string(oracle);
      break;
    }
  }
  criterion(2, ok, detail.empty() ? "B/D 4..5 against signed-permutation closures"
                                  : detail);
}

void criterion3() {
  // reduced presentation, parabolic generated by the conjugates of s1
  Presentation p = catalog_build(FamilyId::typeE8_reduced, {}, true);
  std::vector<Word> sub;
  Word s1 = parse_word(p.alphabet, "s1");
  Word s = parse_word(p.alphabet, "s");
  for (int i = 0; i <= 6; ++i)
    sub.push_back(free_reduce(concat(concat(pow(s, i), s1), pow(s, -i))));
  long long got = -1;
  EnumerationResult reduced = index_of_parabolic(p, sub);
  if (const Completed* c = completed(reduced)) got = c->index;

  // oracle: same index from the canonical Coxeter presentation of W(E8)
  // (chain g1..g7, g8 attached to g3), parabolic <g1..g7>
  std::ostringstream os;
  os << "presentation w_e8\nkind group\n";
  for (int i = 1; i <= 8; ++i) os << "gen g" << i << "\n";
  for (int i = 1; i <= 8; ++i) os << "rel g" << i << "^2 =\n";
  auto attach = [&](int i, int j) {
    os << "rel g" << i << " g" << j << " g" << i << " = g" << j << " g" << i << " g"
       << j << "\n";
  };
  auto commute = [&](int i, int j) {
    os << "rel g" << i << " g" << j << " = g" << j << " g" << i << "\n";
  };
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (j == i + 1)
        attach(i, j);
      else
        commute(i, j);
  for (int i = 1; i <= 7; ++i)
    if (i == 3)
      attach(3, 8);
    else
      commute(i, 8);
  Presentation oracle_pres = dsl(os.str());
  std::vector<Word> oracle_sub;
  for (int i = 1; i <= 7; ++i)
    oracle_sub.push_back(parse_word(oracle_pres.alphabet, "g" + std::to_string(i)));
  long long oracle = -1;
  EnumerationResult canonical = index_of_parabolic(oracle_pres, oracle_sub);
  if (const Completed* c = completed(canonical)) oracle = c->index;

  bool ok = got == 17280 && oracle == 17280 && 696729600LL / 40320LL == 17280;
  criterion(3, ok,
            "reduced " + std::to_string(got) + ", canonical " + std::to_string(oracle) +
                ", 696729600/40320");
}

void criterion4() {
  long long reduced = enum_order(catalog_build(FamilyId::sphere_two_gen, {{"n", 3}}));
  long long canonical = enum_order(catalog_build(FamilyId::sphere_canonical, {{"n", 3}}));
  bool ok = reduced == 12 && canonical == 12;
  std::string detail = "order " + std::to_string(reduced) + " (canonical " +
                       std::to_string(canonical) + ")";
  for (long long n = 3; n <= 8 && ok; ++n) {
    Presentation p = catalog_build(FamilyId::sphere_two_gen, {{"n", n}});
    InvariantFactors inv = abelianization(p);
    InvariantFactors want{{mpz_class(static_cast<long>(2 * n - 2))}, 0};
    // enumeration of the abelianized presentation cross-checks the Smith form
    long long ab_order = enum_order(abelianized(p));
    if (!(inv == want) || ab_order != 2 * n - 2) {
      ok = false;
      detail = "n=" + std::to_string(n) + ": " + to_string(inv) + ", abelianized order " +
               std::to_string(ab_order);
    }
  }
  criterion(4, ok, detail);
}

void criterion5() {
  struct Case {
    FamilyId family;
    Params params;
    ComplexFamily rep;
    long long d, e, r;
    long long expected;
  };
  std::vector<Case> cases{
      {FamilyId::complex_d_1_n, {{"d", 2}, {"n", 3}}, ComplexFamily::g_d_1_n, 2, 1, 3, 48},
      {FamilyId::complex_d_1_n, {{"d", 3}, {"n", 2}}, ComplexFamily::g_d_1_n, 3, 1, 2, 18},
      {FamilyId::complex_2e_e_r, {{"d", 2}, {"e", 2}, {"r", 2}}, ComplexFamily::g_de_e_r,
       2, 2, 2, 16},
      {FamilyId::complex_e_e_r, {{"e", 3}, {"r", 3}}, ComplexFamily::g_e_e_r, 1, 3, 3,
       54},
  };
  bool ok = true;
  std::string detail = "monomial closures 48, 18, 16, 54";
  for (const Case& c : cases) {
    std::vector<MonomialMatrix> gens;
    MonomialMatrix id{};
    for (const auto& [name, m] : monomial_images(c.rep, c.d, c.e, c.r)) {
      gens.push_back(m);
      id = MonomialMatrix::identity(m.size, m.modulus);
    }
    std::size_t oracle = closure_size<MonomialMatrix>(gens, id, mmul);
    long long got = enum_order(catalog_build(c.family, c.params, true));
    if (got != c.expected || static_cast<long long>(oracle) != c.expected) {
      ok = false;
      detail = std::string(family_name(c.family)) + ": enumerated " +
               std::to_string(got) + ", closure " + std::to_string(oracle);
      break;
    }
  }
  criterion(5, ok, detail);
}

void criterion6() {
  // independent presentations of the same groups, same engine
  auto chain_with_orders = [](int gens, int order, int first_bond) {
    std::ostringstream os;
    os << "presentation oracle\nkind group\n";
    for (int i = 1; i <= gens; ++i) os << "gen g" << i << "\n";
    for (int i = 1; i <= gens; ++i) os << "rel g" << i << "^" << order << " =\n";
    for (int i = 1; i < gens; ++i) {
      int bond = (i == 1) ? first_bond : 3;
      // (g_i g_{i+1})^bond = 1 written as alternating words
      os << "rel";
      for (int k = 0; k < bond; ++k) os << " g" << (k % 2 == 0 ? i : i + 1);
      os << " =";
      for (int k = 0; k < bond; ++k) os << " g" << (k % 2 == 0 ? i + 1 : i);
      os << "\n";
    }
    for (int i = 1; i <= gens; ++i)
      for (int j = i + 2; j <= gens; ++j)
        os << "rel g" << i << " g" << j << " = g" << j << " g" << i << "\n";
    return os.str();
  };

  long long g25 = enum_order(catalog_build(FamilyId::g25_quotient, {}));
  long long g25_oracle = enum_order(dsl(chain_with_orders(3, 3, 3)));
  long long g30 = enum_order(catalog_build(FamilyId::br_g30, {}, true));
  long long h4_oracle = enum_order(dsl(chain_with_orders(4, 2, 5)));
  long long g32 = enum_order(catalog_build(FamilyId::g32_quotient, {}), 500000);
  long long g32_oracle = enum_order(dsl(chain_with_orders(4, 3, 3)));

  bool ok = g25 == 648 && g25_oracle == 648 && g30 == 14400 && h4_oracle == 14400 &&
            g32 == 155520 && g32_oracle == 155520;
  criterion(6, ok,
            "648/" + std::to_string(g25_oracle) + ", 14400/" + std::to_string(h4_oracle) +
                ", 155520/" + std::to_string(g32_oracle));
}

void criterion7() {
  VerificationReport r;
  for (long long n = 3; n <= 8; ++n) {
    r.merge(verify_soundness(FamilyId::artin_two_gen, {{"n", n}}));
    r.merge(verify_soundness(FamilyId::bp_reduced, {{"n", n}}));
  }
  for (long long n = 3; n <= 6; ++n)
    r.merge(verify_soundness(FamilyId::singular_two_gen, {{"n", n}}));
  for (long long n = 4; n <= 5; ++n) {
    r.merge(verify_soundness(FamilyId::typeB_reduced, {{"n", n}}));
    r.merge(verify_soundness(FamilyId::typeD_reduced, {{"n", n}}));
  }
  r.merge(verify_soundness(FamilyId::typeE8_reduced, {}));
  r.merge(verify_soundness(FamilyId::complex_d_1_n, {{"d", 2}, {"n", 3}}));
  r.merge(verify_soundness(FamilyId::complex_d_1_n, {{"d", 3}, {"n", 2}}));
  r.merge(verify_soundness(FamilyId::complex_2e_e_r, {{"d", 2}, {"e", 2}, {"r", 2}}));
  r.merge(verify_soundness(FamilyId::complex_e_e_r, {{"e", 3}, {"r", 3}}));
  criterion(7, all_pass(r),
            all_pass(r) ? std::to_string(r.checks.size()) + " relation checks"
                        : first_failure(r));
}

void criterion8() {
  VerificationReport r;
  for (int n = 3; n <= 6; ++n) r.merge(verify_proof_steps(n));
  criterion(8, all_pass(r),
            all_pass(r) ? std::to_string(r.checks.size()) + " steps" : first_failure(r));
}

void criterion9() {
  VerificationReport r;
  for (long long n = 3; n <= 8; ++n) {
    r.merge(verify_roundtrip(FamilyId::artin_two_gen, n));
    r.merge(verify_roundtrip(FamilyId::bp_reduced, n));
  }
  for (long long n = 3; n <= 6; ++n)
    r.merge(verify_roundtrip(FamilyId::singular_two_gen, n));
  criterion(9, all_pass(r),
            all_pass(r) ? std::to_string(r.checks.size()) + " generators"
                        : first_failure(r));
}

void criterion10() {
  VerificationReport r;
  for (int n = 3; n <= 6; ++n) r.merge(verify_bkl(n));
  criterion(10, all_pass(r),
            all_pass(r) ? std::to_string(r.checks.size()) + " checks" : first_failure(r));
}

void criterion11() {
  VerificationReport r;
  for (long long radius = 3; radius <= 6; ++radius)
    r.merge(verify_structural_coincidence(radius));
  criterion(11, all_pass(r), all_pass(r) ? "relation multisets identical"
                                         : first_failure(r));
}

void criterion12() {
  struct Row {
    FamilyId family;
    Params params;
    bool torsion;
    InvariantFactors want;
  };
  std::vector<Row> table;
  for (long long n = 3; n <= 8; ++n)
    table.push_back({FamilyId::artin_two_gen, {{"n", n}}, false, {{}, 1}});
  for (long long n = 4; n <= 6; ++n) {
    table.push_back({FamilyId::typeB_reduced, {{"n", n}}, false, {{}, 2}});
    table.push_back({FamilyId::typeD_reduced, {{"n", n}}, false, {{}, 1}});
    table.push_back({FamilyId::typeB_reduced, {{"n", n}}, true, {{2, 2}, 0}});
    table.push_back({FamilyId::typeD_reduced, {{"n", n}}, true, {{2}, 0}});
  }
  table.push_back({FamilyId::typeE8_reduced, {}, false, {{}, 1}});
  table.push_back({FamilyId::typeE8_reduced, {}, true, {{2}, 0}});
  table.push_back({FamilyId::br_g34, {}, true, {{2}, 0}});

  bool ok = true;
  std::string detail = std::to_string(table.size()) + " rows, finite rows re-enumerated";
  for (const Row& row : table) {
    Presentation p = catalog_build(row.family, row.params, row.torsion);
    InvariantFactors inv = abelianization(p);
    bool match = inv == row.want;
    if (match && row.want.free_rank == 0) {
      // independent cross-check: the abelianized presentation enumerates to
      // the product of the invariant factors
      long long want_order = 1;
      for (const auto& t : row.want.torsion) want_order *= t.get_si();
      match = enum_order(abelianized(p)) == want_order;
    }
    if (!match) {
      ok = false;
      detail = p.name + ": " + to_string(inv);
      break;
    }
  }
  criterion(12, ok, detail);
}

void criterion13() {
  VerificationReport r = verify_oracle_agreement(10000, 0xb5a1du);
  criterion(13, all_pass(r), all_pass(r) ? "exhaustive Br_3 + 10^4 random pairs"
                                         : first_failure(r));
}

void criterion14() {
  VerificationReport r = verify_sb2(1000, 0x5b2u);
  criterion(14, all_pass(r),
            all_pass(r) ? "10^3 samples" : first_failure(r));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  criterion14();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
