#include "braidkit/genmaps.hpp"

namespace braidkit {

namespace {

std::string num(long long i) { return std::to_string(i); }

struct PairShape {
  // canonical chain generators: prefix+lo .. prefix+hi
  std::string prefix;
  long long lo = 1;
  long long hi = 0;
  std::string big;                       // reduced-side chain product generator
  std::vector<std::string> conj_prefixes;  // families expanded by conjugation (x, xi)
  std::vector<std::string> extras;       // map to themselves (t, r, w, sg, t2p)
  bool conj_invertible = true;
  bool canonical_chain_then_conj = true;  // alphabet order of the canonical side
};

PairShape pair_shape(FamilyId family, const Params& params) {
  auto n_of = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end())
      throw UnsupportedParams(std::string("missing parameter '") + key + "'");
    return it->second;
  };
  PairShape sh;
  switch (family) {
    case FamilyId::artin_canonical:
    case FamilyId::artin_two_gen: {
      long long n = n_of("n");
      if (n < 3) throw UnsupportedParams("artin pair requires n >= 3");
      sh = {"s", 1, n - 1, "s", {}, {}};
      return sh;
    }
    case FamilyId::sphere_canonical:
    case FamilyId::sphere_two_gen: {
      long long n = n_of("n");
      if (n < 3) throw UnsupportedParams("sphere pair requires n >= 3");
      sh = {"d", 1, n - 1, "d", {}, {}};
      return sh;
    }
    case FamilyId::singular_canonical:
    case FamilyId::singular_two_gen: {
      long long n = n_of("n");
      if (n < 3) throw UnsupportedParams("singular pair requires n >= 3");
      sh = {"s", 1, n - 1, "s", {"x"}, {}};
      sh.conj_invertible = false;
      return sh;
    }
    case FamilyId::bp_canonical:
    case FamilyId::bp_reduced: {
      long long n = n_of("n");
      if (n < 3) throw UnsupportedParams("bp pair requires n >= 3");
      sh = {"s", 1, n - 1, "s", {"xi"}, {}};
      sh.canonical_chain_then_conj = false;  // catalog lists xi's before s's
      return sh;
    }
    case FamilyId::typeB_canonical:
    case FamilyId::typeB_reduced: {
      long long n = n_of("n");
      if (n < 3) throw UnsupportedParams("typeB pair requires n >= 3");
      sh = {"s", 1, n - 1, "s", {}, {"t"}};
      return sh;
    }
    case FamilyId::typeD_canonical:
    case FamilyId::typeD_reduced: {
      long long n = n_of("n");
      if (n < 3) throw UnsupportedParams("typeD pair requires n >= 3");
      sh = {"s", 1, n - 1, "s", {}, {"r"}};
      return sh;
    }
    case FamilyId::typeE8_reduced: {
      sh = {"s", 1, 7, "s", {}, {"w"}};
      return sh;
    }
    case FamilyId::complex_2e_e_r: {
      long long r = n_of("r");
      if (r < 2) throw UnsupportedParams("complex_2e_e_r requires r >= 2");
      sh = {"t", 2, r, "t", {}, {"sg", "t2p"}};
      return sh;
    }
    case FamilyId::complex_e_e_r: {
      long long r = n_of("r");
      if (r < 3) throw UnsupportedParams("complex_e_e_r requires r >= 3");
      sh = {"t", 2, r, "t", {}, {"t2p"}};
      return sh;
    }
    case FamilyId::complex_d_1_n: {
      long long n = n_of("n");
      if (n < 2) throw UnsupportedParams("complex_d_1_n requires n >= 2");
      sh = {"s", 1, n - 1, "s", {}, {"t"}};
      return sh;
    }
    default:
      throw UnknownFamily(std::string(family_name(family)) +
                          " has no reduced/canonical pair");
  }
}

AlphabetRef canonical_alphabet(const PairShape& sh) {
  std::vector<Generator> gens;
  auto add_chain = [&] {
    for (long long i = sh.lo; i <= sh.hi; ++i) gens.push_back({sh.prefix + num(i), true});
  };
  auto add_conj = [&] {
    for (const auto& cp : sh.conj_prefixes)
      for (long long i = sh.lo; i <= sh.hi; ++i)
        gens.push_back({cp + num(i), sh.conj_invertible});
  };
  if (sh.canonical_chain_then_conj) {
    add_chain();
    add_conj();
  } else {
    add_conj();
    add_chain();
  }
  for (const auto& ex : sh.extras) gens.push_back({ex, true});
  return Alphabet::make(std::move(gens));
}

// reduced alphabets carry the conjugated base (x1/xi1) after the chain pair in
// the catalog: {s1, s, x1}. Extras (t/r/w) also follow the pair: {s1, s, t}.
// For the complex 2e family the catalog order is {t2, t, sg, t2p}.
AlphabetRef reduced_alphabet_catalog_order(const PairShape& sh) {
  std::vector<Generator> gens;
  gens.push_back({sh.prefix + num(sh.lo), true});
  gens.push_back({sh.big, true});
  for (const auto& ex : sh.extras) gens.push_back({ex, true});
  for (const auto& cp : sh.conj_prefixes)
    gens.push_back({cp + num(sh.lo), sh.conj_invertible});
  return Alphabet::make(std::move(gens));
}

Word gen_word(const AlphabetRef& a, const std::string& name, long long e = 1) {
  auto idx = a->index_of(name);
  if (!idx) throw UnknownGenerator("genmaps: unknown generator " + name);
  return Word(a, {{*idx, e}});
}

}  // namespace

GeneratorMap identity_map(const AlphabetRef& alphabet) {
  GeneratorMap m;
  m.source = alphabet;
  m.target = alphabet;
  for (int i = 0; i < alphabet->size(); ++i) m.images.push_back(Word(alphabet, {{i, 1}}));
  return m;
}

GeneratorMap reduced_to_canonical(FamilyId family, const Params& params) {
  PairShape sh = pair_shape(family, params);
  GeneratorMap m;
  m.source = reduced_alphabet_catalog_order(sh);
  m.target = canonical_alphabet(sh);

  for (const auto& g : m.source->generators()) {
    if (g.name == sh.big) {
      std::vector<Letter> ls;
      for (long long i = sh.lo; i <= sh.hi; ++i)
        ls.push_back({*m.target->index_of(sh.prefix + num(i)), 1});
      m.images.push_back(free_reduce(Word(m.target, std::move(ls))));
    } else {
      m.images.push_back(gen_word(m.target, g.name));
    }
  }
  return m;
}

GeneratorMap canonical_to_reduced(FamilyId family, const Params& params) {
  PairShape sh = pair_shape(family, params);
  GeneratorMap m;
  m.source = canonical_alphabet(sh);
  m.target = reduced_alphabet_catalog_order(sh);

  const std::string base = sh.prefix + num(sh.lo);
  auto conj_image = [&](const std::string& base_name, long long offset) {
    std::vector<Letter> ls;
    int big = *m.target->index_of(sh.big);
    if (offset != 0) ls.push_back({big, offset});
    ls.push_back({*m.target->index_of(base_name), 1});
    if (offset != 0) ls.push_back({big, -offset});
    return free_reduce(Word(m.target, std::move(ls)));
  };

  for (const auto& g : m.source->generators()) {
    bool handled = false;
    // chain generator prefix+k -> big^{k-lo} base big^{-(k-lo)}
    for (long long k = sh.lo; k <= sh.hi && !handled; ++k) {
      if (g.name == sh.prefix + num(k)) {
        m.images.push_back(conj_image(base, k - sh.lo));
        handled = true;
      }
    }
    for (const auto& cp : sh.conj_prefixes)
      for (long long k = sh.lo; k <= sh.hi && !handled; ++k)
        if (g.name == cp + num(k)) {
          m.images.push_back(conj_image(cp + num(sh.lo), k - sh.lo));
          handled = true;
        }
    if (!handled) m.images.push_back(gen_word(m.target, g.name));  // extras
  }
  return m;
}

GeneratorMap reduced_to_canonical(FamilyId family, long long n) {
  return reduced_to_canonical(family, Params{{"n", n}});
}

GeneratorMap canonical_to_reduced(FamilyId family, long long n) {
  return canonical_to_reduced(family, Params{{"n", n}});
}

Word bkl_expansion(long long t, long long s, long long n) {
  if (!(1 <= s && s < t && t <= n))
    throw IndexOutOfRange("bkl_expansion requires 1 <= s < t <= n");
  AlphabetRef a = catalog_build(FamilyId::artin_canonical, {{"n", n}}).alphabet;
  std::vector<Letter> ls;
  for (long long i = t - 1; i >= s + 1; --i) ls.push_back({*a->index_of("s" + num(i)), 1});
  ls.push_back({*a->index_of("s" + num(s)), 1});
  for (long long i = s + 1; i <= t - 1; ++i) ls.push_back({*a->index_of("s" + num(i)), -1});
  return free_reduce(Word(a, std::move(ls)));
}

Relation push_relation(const Relation& rel, const GeneratorMap& m) {
  return {substitute(rel.lhs, m), substitute(rel.rhs, m)};
}

}  // namespace braidkit
