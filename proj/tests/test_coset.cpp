#include <doctest.h>

#include "braidkit/coset.hpp"

using namespace braidkit;

namespace {

Presentation from_dsl(const std::string& text) {
  ParseResult r = parse_dsl(text);
  REQUIRE(r.presentation);
  return *r.presentation;
}

// every entry points at a live coset and the inverse columns match up
void check_closed(const CosetTable& t) {
  for (int c = 1; c <= t.rows(); ++c)
    for (int col = 0; col < 2 * t.generators; ++col) {
      std::int32_t d = t.at(c, col);
      REQUIRE(d >= 1);
      REQUIRE(d <= t.rows());
      CHECK(t.at(d, col ^ 1) == c);
    }
}

}  // namespace

TEST_CASE("cyclic group of order 3") {
  Presentation p = from_dsl("presentation c3\nkind group\ngen a\nrel a^3 =\n");
  EnumerationResult r = enumerate(p, {});
  const Completed* c = completed(r);
  REQUIRE(c);
  CHECK(c->index == 3);
  check_closed(c->table);
}

TEST_CASE("symmetric group orders via the torsion quotient") {
  // |S_n| = n!
  long long factorial = 2;
  for (long long n = 3; n <= 6; ++n) {
    factorial *= n;
    Presentation p = catalog_build(FamilyId::artin_two_gen, {{"n", n}}, true);
    EnumerationResult r = enumerate(p, {});
    const Completed* c = completed(r);
    REQUIRE(c);
    CHECK(c->index == factorial);
  }
}

TEST_CASE("subgroup index") {
  Presentation p = catalog_build(FamilyId::artin_two_gen, {{"n", 3}}, true);
  EnumerationResult r = enumerate(p, {parse_word(p.alphabet, "s1")});
  const Completed* c = completed(r);
  REQUIRE(c);
  CHECK(c->index == 3);  // S_3 over <(1 2)>

  EnumerationResult rw = enumerate(
      p, {parse_word(p.alphabet, "s1"), parse_word(p.alphabet, "s")});
  const Completed* whole = completed(rw);
  REQUIRE(whole);
  CHECK(whole->index == 1);
}

TEST_CASE("parabolic index") {
  // S_4 over the parabolic <(1 2), (2 3)> = S_3 x S_1: index 4
  Presentation p = catalog_build(FamilyId::artin_two_gen, {{"n", 4}}, true);
  std::vector<Word> sub{parse_word(p.alphabet, "s1"),
                        parse_word(p.alphabet, "s s1 s^-1")};
  EnumerationResult r = index_of_parabolic(p, sub);
  const Completed* c = completed(r);
  REQUIRE(c);
  CHECK(c->index == 4);
}

TEST_CASE("infinite groups overflow") {
  Presentation p = catalog_build(FamilyId::artin_two_gen, {{"n", 3}});
  EnumerationResult r = enumerate(p, {}, 10000);
  const Overflow* o = std::get_if<Overflow>(&r);
  REQUIRE(o);
  CHECK(o->cosets_used > 0);
}

TEST_CASE("deterministic tables") {
  Presentation p = catalog_build(FamilyId::typeB_reduced, {{"n", 4}}, true);
  EnumerationResult ra = enumerate(p, {});
  EnumerationResult rb = enumerate(p, {});
  const Completed* a = completed(ra);
  const Completed* b = completed(rb);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->index == 384);  // 2^4 * 4!
  CHECK(a->table.entries == b->table.entries);
  check_closed(a->table);
}

TEST_CASE("input validation") {
  Presentation mono =
      from_dsl("presentation m\nkind monoid\ngen s\ngen x noninv\nrel x s = s x\n");
  CHECK_THROWS_AS(enumerate(mono, {}), MonoidPresentation);

  Presentation p = from_dsl("presentation c3\nkind group\ngen a\nrel a^3 =\n");
  CHECK_THROWS_AS(enumerate(p, {}, 0), Error);
  AlphabetRef other = Alphabet::make({{"z", true}});
  CHECK_THROWS_AS(enumerate(p, {parse_word(other, "z")}), UnknownGenerator);
}
