#include <doctest.h>

#include "braidkit/garside.hpp"
#include "braidkit/genmaps.hpp"
#include "braidkit/representations.hpp"

using namespace braidkit;

TEST_CASE("reduced to canonical images") {
  GeneratorMap m = reduced_to_canonical(FamilyId::artin_two_gen, 3);
  REQUIRE(m.source->size() == 2);
  REQUIRE(m.target->size() == 2);
  CHECK(to_string(m.image_of(*m.source->index_of("s1"))) == "s1");
  CHECK(to_string(m.image_of(*m.source->index_of("s"))) == "s1 s2");

  GeneratorMap b = reduced_to_canonical(FamilyId::typeB_reduced, 4);
  CHECK(to_string(b.image_of(*b.source->index_of("s"))) == "s1 s2 s3");
  CHECK(to_string(b.image_of(*b.source->index_of("t"))) == "t");

  GeneratorMap cx = reduced_to_canonical(FamilyId::complex_2e_e_r,
                                         Params{{"d", 2}, {"e", 2}, {"r", 3}});
  CHECK(to_string(cx.image_of(*cx.source->index_of("t"))) == "t2 t3");
  CHECK(to_string(cx.image_of(*cx.source->index_of("sg"))) == "sg");
  CHECK(to_string(cx.image_of(*cx.source->index_of("t2p"))) == "t2p");
}

TEST_CASE("canonical to reduced images") {
  GeneratorMap m = canonical_to_reduced(FamilyId::artin_two_gen, 4);
  CHECK(to_string(m.image_of(*m.source->index_of("s1"))) == "s1");
  CHECK(to_string(m.image_of(*m.source->index_of("s2"))) == "s s1 s^-1");
  CHECK(to_string(m.image_of(*m.source->index_of("s3"))) == "s^2 s1 s^-2");

  GeneratorMap sg = canonical_to_reduced(FamilyId::singular_two_gen, 3);
  CHECK(to_string(sg.image_of(*sg.source->index_of("x2"))) == "s x1 s^-1");

  GeneratorMap bp = canonical_to_reduced(FamilyId::bp_reduced, 3);
  CHECK(to_string(bp.image_of(*bp.source->index_of("xi2"))) == "s xi1 s^-1");
}

TEST_CASE("alphabets agree with the catalog") {
  for (long long n = 3; n <= 6; ++n) {
    GeneratorMap m = reduced_to_canonical(FamilyId::singular_two_gen, n);
    CHECK(m.source->same_as(
        *catalog_build(FamilyId::singular_two_gen, {{"n", n}}).alphabet));
    CHECK(m.target->same_as(
        *catalog_build(FamilyId::singular_canonical, {{"n", n}}).alphabet));
    GeneratorMap bp = canonical_to_reduced(FamilyId::bp_canonical, n);
    CHECK(bp.source->same_as(
        *catalog_build(FamilyId::bp_canonical, {{"n", n}}).alphabet));
    CHECK(bp.target->same_as(
        *catalog_build(FamilyId::bp_reduced, {{"n", n}}).alphabet));
  }
}

TEST_CASE("unpaired families are rejected") {
  CHECK_THROWS_AS(reduced_to_canonical(FamilyId::br_g30, Params{}), UnknownFamily);
  CHECK_THROWS_AS(canonical_to_reduced(FamilyId::g25_quotient, Params{}), UnknownFamily);
  CHECK_THROWS_AS(reduced_to_canonical(FamilyId::artin_two_gen, 2), UnsupportedParams);
}

TEST_CASE("bkl expansion") {
  CHECK(to_string(bkl_expansion(2, 1, 4)) == "s1");
  CHECK(to_string(bkl_expansion(3, 2, 4)) == "s2");
  CHECK(to_string(bkl_expansion(3, 1, 3)) == "s2 s1 s2^-1");
  CHECK(to_string(bkl_expansion(4, 2, 4)) == "s3 s2 s3^-1");
  CHECK_THROWS_AS(bkl_expansion(2, 2, 4), IndexOutOfRange);
  CHECK_THROWS_AS(bkl_expansion(5, 1, 4), IndexOutOfRange);
  CHECK_THROWS_AS(bkl_expansion(3, 0, 4), IndexOutOfRange);
}

TEST_CASE("pushed relations hold in the braid group") {
  for (long long n = 3; n <= 6; ++n) {
    GeneratorMap m = reduced_to_canonical(FamilyId::artin_two_gen, n);
    Presentation p = catalog_build(FamilyId::artin_two_gen, {{"n", n}});
    for (const auto& rel : p.relations) {
      Relation pushed = push_relation(rel, m);
      CHECK(braid_equal(pushed.lhs, pushed.rhs, static_cast<int>(n)));
    }
  }
}

TEST_CASE("round-trip is the identity up to braid equality") {
  for (long long n = 3; n <= 5; ++n) {
    GeneratorMap down = canonical_to_reduced(FamilyId::artin_two_gen, n);
    GeneratorMap up = reduced_to_canonical(FamilyId::artin_two_gen, n);
    for (int g = 0; g < down.source->size(); ++g) {
      Word back = substitute(down.image_of(g), up);
      CHECK(braid_equal(back, Word(down.source, {{g, 1}}), static_cast<int>(n)));
    }
  }
}

TEST_CASE("identity map") {
  AlphabetRef a = Alphabet::make({{"a", true}, {"b", true}});
  GeneratorMap id = identity_map(a);
  Word w = parse_word(a, "a b^-2 a");
  CHECK(substitute(w, id) == w);
}
