#include <doctest.h>

#include "braidkit/presentation.hpp"

using namespace braidkit;

TEST_CASE("family names round-trip") {
  for (FamilyId f : all_families()) {
    auto back = family_from_name(family_name(f));
    REQUIRE(back);
    CHECK(*back == f);
  }
  CHECK(!family_from_name("nonsense"));
}

TEST_CASE("artin_two_gen structure") {
  Presentation p = catalog_build(FamilyId::artin_two_gen, {{"n", 4}});
  CHECK(p.kind == Kind::group);
  REQUIRE(p.alphabet->size() == 2);
  CHECK(p.alphabet->gen(0).name == "s1");
  CHECK(p.alphabet->gen(1).name == "s");
  REQUIRE(p.relations.size() == 2);
  CHECK(to_string(p.relations[0].lhs) == "s1 s^2 s1 s^-2");
  CHECK(to_string(p.relations[0].rhs) == "s^2 s1 s^-2 s1");
  CHECK(to_string(p.relations[1].lhs) == "s^4");
  CHECK(to_string(p.relations[1].rhs) == "s s1 s s1 s s1");

  // closed form: 1 + (floor(n/2) - 1) relations
  for (long long n = 3; n <= 10; ++n) {
    Presentation q = catalog_build(FamilyId::artin_two_gen, {{"n", n}});
    CHECK(q.relations.size() == static_cast<size_t>(1 + (n / 2 - 1)));
  }
  CHECK_THROWS_AS(catalog_build(FamilyId::artin_two_gen, {{"n", 2}}), UnsupportedParams);
  CHECK_THROWS_AS(catalog_build(FamilyId::artin_two_gen, {}), UnsupportedParams);
}

TEST_CASE("typeB_reduced relation count closed form") {
  for (long long n = 3; n <= 10; ++n) {
    Presentation p = catalog_build(FamilyId::typeB_reduced, {{"n", n}});
    size_t two_gen = static_cast<size_t>(1 + (n / 2 - 1));
    // n - 2 commutations (t with s^i s1 s^-i, i = 1..n-2) plus t s1 t s1 = ...
    CHECK(p.relations.size() == two_gen + static_cast<size_t>(n - 2) + 1);
  }
}

TEST_CASE("sphere_two_gen at n=3") {
  Presentation p = catalog_build(FamilyId::sphere_two_gen, {{"n", 3}});
  REQUIRE(p.relations.size() == 2);  // first relation family is empty at n=3
  CHECK(to_string(p.relations[0].lhs) == "d^3");
  CHECK(to_string(p.relations[0].rhs) == "d d1 d d1");
  CHECK(to_string(p.relations[1].lhs) == "d^3 d1 d^-1 d1 d^-1");
  CHECK(p.relations[1].rhs.is_empty());
  CHECK_THROWS_AS(catalog_build(FamilyId::sphere_two_gen, {{"n", 3}}, true),
                  UnsupportedParams);
}

TEST_CASE("singular families") {
  Presentation p = catalog_build(FamilyId::singular_two_gen, {{"n", 4}});
  CHECK(p.kind == Kind::monoid);
  REQUIRE(p.alphabet->size() == 3);
  CHECK(p.alphabet->gen(0).invertible);
  CHECK(p.alphabet->gen(1).invertible);
  CHECK(!p.alphabet->gen(2).invertible);  // x1
  // core {2}+power, x1-conjugate commutes {0,2}, x1-x1 {2}, centrality, mixed
  CHECK(p.relations.size() == 7);

  Presentation c = catalog_build(FamilyId::singular_canonical, {{"n", 2}});
  CHECK(c.kind == Kind::monoid);
  CHECK(c.alphabet->size() == 2);
  CHECK(c.relations.size() == 1);  // x1 s1 = s1 x1
}

TEST_CASE("bp alphabets") {
  Presentation c = catalog_build(FamilyId::bp_canonical, {{"n", 3}});
  CHECK(c.alphabet->gen(0).name == "xi1");
  CHECK(c.alphabet->gen(2).name == "s1");
  Presentation r = catalog_build(FamilyId::bp_reduced, {{"n", 3}});
  CHECK(r.alphabet->size() == 3);
  // last relation is the involution xi1^2 = 1
  CHECK(to_string(r.relations.back().lhs) == "xi1^2");
  CHECK(r.relations.back().rhs.is_empty());
}

TEST_CASE("torsion blocks") {
  Presentation p = catalog_build(FamilyId::typeB_reduced, {{"n", 4}}, true);
  Presentation q = catalog_build(FamilyId::typeB_reduced, {{"n", 4}}, false);
  CHECK(p.relations.size() == q.relations.size() + 2);  // s1^2, t^2
  CHECK(to_string(p.relations[p.relations.size() - 2].lhs) == "s1^2");
  CHECK(to_string(p.relations.back().lhs) == "t^2");

  Presentation de = catalog_build(FamilyId::complex_2e_e_r,
                                  {{"d", 2}, {"e", 2}, {"r", 2}}, true);
  Presentation de0 =
      catalog_build(FamilyId::complex_2e_e_r, {{"d", 2}, {"e", 2}, {"r", 2}});
  CHECK(de.relations.size() == de0.relations.size() + 3);  // sg^d, t2^2, t2p^2

  CHECK_THROWS_AS(catalog_build(FamilyId::bkl, {{"n", 4}}, true), UnsupportedParams);
  CHECK_THROWS_AS(catalog_build(FamilyId::bp_reduced, {{"n", 4}}, true),
                  UnsupportedParams);
}

TEST_CASE("exceptional families have fixed parameters") {
  CHECK(catalog_build(FamilyId::br_g30, {}).alphabet->size() == 3);
  CHECK(catalog_build(FamilyId::br_g34, {}).alphabet->size() == 3);
  // quotients carry their cube relation with or without the torsion flag
  Presentation g25 = catalog_build(FamilyId::g25_quotient, {});
  CHECK(to_string(g25.relations.back().lhs) == "s1^3");
  CHECK(catalog_build(FamilyId::g25_quotient, {}, true).relations.size() ==
        g25.relations.size());
}

TEST_CASE("validate is clean across the catalog") {
  auto check_family = [](FamilyId f, const Params& params) {
    Presentation p = catalog_build(f, params);
    CHECK(validate(p).ok());
  };
  for (long long n = 3; n <= 10; ++n) {
    for (FamilyId f : {FamilyId::artin_canonical, FamilyId::artin_two_gen,
                       FamilyId::bkl, FamilyId::sphere_canonical,
                       FamilyId::sphere_two_gen, FamilyId::singular_canonical,
                       FamilyId::singular_two_gen, FamilyId::bp_canonical,
                       FamilyId::bp_reduced, FamilyId::typeB_canonical,
                       FamilyId::typeB_reduced, FamilyId::typeD_canonical,
                       FamilyId::typeD_reduced})
      check_family(f, {{"n", n}});
  }
  check_family(FamilyId::typeE8_reduced, {});
  check_family(FamilyId::br_g30, {});
  check_family(FamilyId::br_g34, {});
  check_family(FamilyId::g25_quotient, {});
  check_family(FamilyId::g32_quotient, {});
  for (long long d = 2; d <= 4; ++d)
    for (long long e = 2; e <= 4; ++e)
      for (long long r = 2; r <= 10; ++r)
        check_family(FamilyId::complex_2e_e_r, {{"d", d}, {"e", e}, {"r", r}});
  for (long long e = 2; e <= 4; ++e)
    for (long long r = 3; r <= 10; ++r)
      check_family(FamilyId::complex_e_e_r, {{"e", e}, {"r", r}});
  for (long long d = 2; d <= 4; ++d)
    for (long long n = 2; n <= 10; ++n)
      check_family(FamilyId::complex_d_1_n, {{"d", d}, {"n", n}});
}

TEST_CASE("dsl parse and serialize") {
  const std::string text =
      "presentation c3\n"
      "kind group\n"
      "gen a\n"
      "rel a^3 =\n";
  ParseResult r = parse_dsl(text);
  REQUIRE(r.presentation);
  CHECK(r.presentation->name == "c3");
  REQUIRE(r.presentation->relations.size() == 1);
  CHECK(r.presentation->relations[0].rhs.is_empty());
  CHECK(serialize(*r.presentation) == text);

  // serialize(parse_dsl(t)) is stable for catalog output
  for (FamilyId f : {FamilyId::artin_two_gen, FamilyId::singular_two_gen,
                     FamilyId::typeD_reduced}) {
    std::string t = serialize(catalog_build(f, {{"n", 5}}));
    ParseResult back = parse_dsl(t);
    REQUIRE(back.presentation);
    CHECK(serialize(*back.presentation) == t);
  }
}

TEST_CASE("dsl diagnostics") {
  ParseResult bad = parse_dsl("presentation t\nkind group\ngen a\nrel a^3 = a^0\n");
  CHECK(!bad.presentation);
  REQUIRE(!bad.diagnostics.items.empty());
  CHECK(bad.diagnostics.items[0].line == 4);

  ParseResult undeclared = parse_dsl("presentation t\nkind group\ngen a\nrel b = a\n");
  CHECK(!undeclared.presentation);

  ParseResult noninv =
      parse_dsl("presentation t\nkind monoid\ngen s\ngen x noninv\nrel x^-1 = s\n");
  CHECK(!noninv.presentation);

  ParseResult comments = parse_dsl(
      "# header\npresentation t\nkind monoid\ngen s\ngen x noninv\nrel x s = s x\n");
  CHECK(comments.presentation);
  CHECK(comments.presentation->kind == Kind::monoid);
}
