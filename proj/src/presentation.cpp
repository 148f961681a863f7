#include "braidkit/presentation.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace braidkit {

namespace {

struct FamilyEntry {
  FamilyId id;
  const char* name;
};

constexpr std::array<FamilyEntry, 21> kFamilies{{
    {FamilyId::artin_canonical, "artin_canonical"},
    {FamilyId::artin_two_gen, "artin_two_gen"},
    {FamilyId::bkl, "bkl"},
    {FamilyId::sphere_canonical, "sphere_canonical"},
    {FamilyId::sphere_two_gen, "sphere_two_gen"},
    {FamilyId::singular_canonical, "singular_canonical"},
    {FamilyId::singular_two_gen, "singular_two_gen"},
    {FamilyId::bp_canonical, "bp_canonical"},
    {FamilyId::bp_reduced, "bp_reduced"},
    {FamilyId::typeB_canonical, "typeB_canonical"},
    {FamilyId::typeB_reduced, "typeB_reduced"},
    {FamilyId::typeD_canonical, "typeD_canonical"},
    {FamilyId::typeD_reduced, "typeD_reduced"},
    {FamilyId::typeE8_reduced, "typeE8_reduced"},
    {FamilyId::complex_2e_e_r, "complex_2e_e_r"},
    {FamilyId::complex_e_e_r, "complex_e_e_r"},
    {FamilyId::complex_d_1_n, "complex_d_1_n"},
    {FamilyId::br_g30, "br_g30"},
    {FamilyId::br_g34, "br_g34"},
    {FamilyId::g25_quotient, "g25_quotient"},
    {FamilyId::g32_quotient, "g32_quotient"},
}};

// --- small word-building helpers -------------------------------------------

class WB {
 public:
  explicit WB(AlphabetRef a) : a_(std::move(a)) {}

  WB& g(std::string_view name, long long e = 1) {
    auto idx = a_->index_of(name);
    if (!idx) throw UnknownGenerator("catalog: unknown generator " + std::string(name));
    letters_.push_back({*idx, e});
    return *this;
  }
  WB& w(const Word& word) {
    letters_.insert(letters_.end(), word.letters().begin(), word.letters().end());
    return *this;
  }
  Word done() const { return free_reduce(Word(a_, letters_)); }

 private:
  AlphabetRef a_;
  std::vector<Letter> letters_;
};

std::string num(long long i) { return std::to_string(i); }

// sigma^i sigma_1 sigma^-i over names (s, s1)
Word conj_word(const AlphabetRef& a, const std::string& s, const std::string& s1,
               long long i) {
  WB b(a);
  if (i != 0) b.g(s, i);
  b.g(s1);
  if (i != 0) b.g(s, -i);
  return b.done();
}

// The two relations shared by every two-generator family:
//   s1 s^i s1 s^-i = s^i s1 s^-i s1   for 2 <= i <= floor(n/2)
//   s^n = (s s1)^{n-1}
void add_two_gen_core(Presentation& p, const std::string& s1, const std::string& s,
                      long long n) {
  const auto& a = p.alphabet;
  for (long long i = 2; i <= n / 2; ++i) {
    Word c = conj_word(a, s, s1, i);
    p.relations.push_back({WB(a).g(s1).w(c).done(), WB(a).w(c).g(s1).done()});
  }
  Word ss1 = WB(a).g(s).g(s1).done();
  p.relations.push_back({WB(a).g(s, n).done(), pow(ss1, n - 1)});
}

void add_commutations(Presentation& p, const std::string& prefix, long long n) {
  const auto& a = p.alphabet;
  for (long long i = 1; i + 2 <= n - 1; ++i)
    for (long long j = i + 2; j <= n - 1; ++j)
      p.relations.push_back({WB(a).g(prefix + num(i)).g(prefix + num(j)).done(),
                             WB(a).g(prefix + num(j)).g(prefix + num(i)).done()});
}

void add_braid_relations(Presentation& p, const std::string& prefix, long long n) {
  const auto& a = p.alphabet;
  for (long long i = 1; i <= n - 2; ++i) {
    std::string gi = prefix + num(i), gj = prefix + num(i + 1);
    p.relations.push_back(
        {WB(a).g(gi).g(gj).g(gi).done(), WB(a).g(gj).g(gi).g(gj).done()});
  }
}

void add_order_relation(Presentation& p, const std::string& gen, long long k) {
  p.relations.push_back({WB(p.alphabet).g(gen, k).done(), Word::empty(p.alphabet)});
}

AlphabetRef indexed_alphabet(const std::string& prefix, long long lo, long long hi,
                             bool invertible = true) {
  std::vector<Generator> gens;
  for (long long i = lo; i <= hi; ++i) gens.push_back({prefix + num(i), invertible});
  return Alphabet::make(std::move(gens));
}

long long get_param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw UnsupportedParams("missing parameter '" + key + "'");
  return it->second;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw UnsupportedParams(msg);
}

// alternating product g0 g1 g0 g1 ... with `factors` single-letter factors
Word alternating(const AlphabetRef& a, const std::vector<std::string>& cycle,
                 long long factors) {
  WB b(a);
  for (long long k = 0; k < factors; ++k) b.g(cycle[static_cast<size_t>(k) % cycle.size()]);
  return b.done();
}

}  // namespace

const char* family_name(FamilyId id) {
  for (const auto& e : kFamilies)
    if (e.id == id) return e.name;
  throw UnknownFamily("unknown family id");
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& e : kFamilies)
    if (name == e.name) return e.id;
  return std::nullopt;
}

std::vector<FamilyId> all_families() {
  std::vector<FamilyId> out;
  for (const auto& e : kFamilies) out.push_back(e.id);
  return out;
}

Presentation catalog_build(FamilyId family, const Params& params, bool torsion) {
  Presentation p;
  p.params = params;

  auto name_with = [&](std::initializer_list<const char*> keys) {
    std::string s = family_name(family);
    for (const char* k : keys) s += std::string("_") + k + num(get_param(params, k));
    if (torsion) s += "_torsion";
    return s;
  };

  switch (family) {
    case FamilyId::artin_canonical: {
      long long n = get_param(params, "n");
      require(n >= 2, "artin_canonical requires n >= 2");
      p.name = name_with({"n"});
      p.alphabet = indexed_alphabet("s", 1, n - 1);
      add_commutations(p, "s", n);
      add_braid_relations(p, "s", n);
      if (torsion)
        for (long long i = 1; i <= n - 1; ++i) add_order_relation(p, "s" + num(i), 2);
      return p;
    }
    case FamilyId::artin_two_gen: {
      long long n = get_param(params, "n");
      require(n >= 3, "artin_two_gen requires n >= 3");
      p.name = name_with({"n"});
      p.alphabet = Alphabet::make({{"s1"}, {"s"}});
      add_two_gen_core(p, "s1", "s", n);
      if (torsion) add_order_relation(p, "s1", 2);
      return p;
    }
    case FamilyId::bkl: {
      long long n = get_param(params, "n");
      require(n >= 3, "bkl requires n >= 3");
      require(!torsion, "bkl has no torsion block");
      p.name = name_with({"n"});
      std::vector<Generator> gens;
      for (long long t = 2; t <= n; ++t)
        for (long long s = 1; s < t; ++s) gens.push_back({"a" + num(t) + "_" + num(s)});
      p.alphabet = Alphabet::make(std::move(gens));
      auto band = [&](long long t, long long s) { return "a" + num(t) + "_" + num(s); };
      // commutations: (t-r)(t-q)(s-r)(s-q) > 0, distinct ordered-pair halves skipped
      for (long long t = 2; t <= n; ++t)
        for (long long s = 1; s < t; ++s)
          for (long long r = 2; r <= n; ++r)
            for (long long q = 1; q < r; ++q) {
              if (std::make_pair(t, s) <= std::make_pair(r, q)) continue;
              if ((t - r) * (t - q) * (s - r) * (s - q) > 0)
                p.relations.push_back({WB(p.alphabet).g(band(t, s)).g(band(r, q)).done(),
                                       WB(p.alphabet).g(band(r, q)).g(band(t, s)).done()});
            }
      // a_ts a_sr = a_tr a_ts = a_sr a_tr for r < s < t, stored as two pairs
      for (long long r = 1; r <= n; ++r)
        for (long long s = r + 1; s <= n; ++s)
          for (long long t = s + 1; t <= n; ++t) {
            Word ts_sr = WB(p.alphabet).g(band(t, s)).g(band(s, r)).done();
            Word tr_ts = WB(p.alphabet).g(band(t, r)).g(band(t, s)).done();
            Word sr_tr = WB(p.alphabet).g(band(s, r)).g(band(t, r)).done();
            p.relations.push_back({ts_sr, tr_ts});
            p.relations.push_back({tr_ts, sr_tr});
          }
      return p;
    }
    case FamilyId::sphere_canonical: {
      long long n = get_param(params, "n");
      require(n >= 3, "sphere_canonical requires n >= 3");
      require(!torsion, "sphere_canonical has no torsion block");
      p.name = name_with({"n"});
      p.alphabet = indexed_alphabet("d", 1, n - 1);
      add_commutations(p, "d", n);
      add_braid_relations(p, "d", n);
      WB b(p.alphabet);
      for (long long i = 1; i <= n - 2; ++i) b.g("d" + num(i));
      b.g("d" + num(n - 1), 2);
      for (long long i = n - 2; i >= 1; --i) b.g("d" + num(i));
      p.relations.push_back({b.done(), Word::empty(p.alphabet)});
      return p;
    }
    case FamilyId::sphere_two_gen: {
      long long n = get_param(params, "n");
      require(n >= 3, "sphere_two_gen requires n >= 3");
      require(!torsion, "sphere_two_gen has no torsion block");
      p.name = name_with({"n"});
      p.alphabet = Alphabet::make({{"d1"}, {"d"}});
      add_two_gen_core(p, "d1", "d", n);
      Word d1dinv = WB(p.alphabet).g("d1").g("d", -1).done();
      p.relations.push_back(
          {WB(p.alphabet).g("d", n).w(pow(d1dinv, n - 1)).done(), Word::empty(p.alphabet)});
      return p;
    }
    case FamilyId::singular_canonical: {
      long long n = get_param(params, "n");
      require(n >= 2, "singular_canonical requires n >= 2");
      require(!torsion, "singular_canonical has no torsion block");
      p.name = name_with({"n"});
      p.kind = Kind::monoid;
      std::vector<Generator> gens;
      for (long long i = 1; i <= n - 1; ++i) gens.push_back({"s" + num(i), true});
      for (long long i = 1; i <= n - 1; ++i) gens.push_back({"x" + num(i), false});
      p.alphabet = Alphabet::make(std::move(gens));
      const auto& a = p.alphabet;
      add_commutations(p, "s", n);
      for (long long i = 1; i + 2 <= n - 1; ++i)
        for (long long j = i + 2; j <= n - 1; ++j)
          p.relations.push_back({WB(a).g("x" + num(i)).g("x" + num(j)).done(),
                                 WB(a).g("x" + num(j)).g("x" + num(i)).done()});
      for (long long i = 1; i <= n - 1; ++i)
        for (long long j = 1; j <= n - 1; ++j)
          if (std::llabs(i - j) != 1)
            p.relations.push_back({WB(a).g("x" + num(i)).g("s" + num(j)).done(),
                                   WB(a).g("s" + num(j)).g("x" + num(i)).done()});
      add_braid_relations(p, "s", n);
      for (long long i = 1; i <= n - 2; ++i) {
        std::string si = "s" + num(i), sj = "s" + num(i + 1);
        std::string xi = "x" + num(i), xj = "x" + num(i + 1);
        p.relations.push_back(
            {WB(a).g(si).g(sj).g(xi).done(), WB(a).g(xj).g(si).g(sj).done()});
        p.relations.push_back(
            {WB(a).g(sj).g(si).g(xj).done(), WB(a).g(xi).g(sj).g(si).done()});
      }
      return p;
    }
    case FamilyId::singular_two_gen: {
      long long n = get_param(params, "n");
      require(n >= 3, "singular_two_gen requires n >= 3");
      require(!torsion, "singular_two_gen has no torsion block");
      p.name = name_with({"n"});
      p.kind = Kind::monoid;
      p.alphabet = Alphabet::make({{"s1", true}, {"s", true}, {"x1", false}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s1", "s", n);
      auto x_conj = [&](long long i) {
        WB b(a);
        if (i != 0) b.g("s", i);
        b.g("x1");
        if (i != 0) b.g("s", -i);
        return b.done();
      };
      // x1 s^i s1 s^-i = s^i s1 s^-i x1, i in {0} u {2..n-2}
      for (long long i = 0; i <= n - 2; ++i) {
        if (i == 1) continue;
        if (i > 0 && i < 2) continue;
        Word c = conj_word(a, "s", "s1", i);
        p.relations.push_back({WB(a).g("x1").w(c).done(), WB(a).w(c).g("x1").done()});
      }
      // x1 s^i x1 s^-i = s^i x1 s^-i x1, 2 <= i <= floor(n/2)
      for (long long i = 2; i <= n / 2; ++i) {
        WB lhs(a), rhs(a);
        lhs.g("x1").g("s", i).g("x1").g("s", -i);
        rhs.g("s", i).g("x1").g("s", -i).g("x1");
        p.relations.push_back({lhs.done(), rhs.done()});
      }
      p.relations.push_back(
          {WB(a).g("s", n).g("x1").done(), WB(a).g("x1").g("s", n).done()});
      p.relations.push_back(
          {WB(a).g("x1").g("s").g("s1").g("s", -1).g("s1").done(),
           WB(a).g("s").g("s1").g("s", -1).g("s1").g("s").g("x1").g("s", -1).done()});
      return p;
    }
    case FamilyId::bp_canonical: {
      long long n = get_param(params, "n");
      require(n >= 3, "bp_canonical requires n >= 3");
      require(!torsion, "bp_canonical has no torsion block");
      p.name = name_with({"n"});
      std::vector<Generator> gens;
      for (long long i = 1; i <= n - 1; ++i) gens.push_back({"xi" + num(i)});
      for (long long i = 1; i <= n - 1; ++i) gens.push_back({"s" + num(i)});
      p.alphabet = Alphabet::make(std::move(gens));
      const auto& a = p.alphabet;
      // symmetric group block
      for (long long i = 1; i <= n - 1; ++i) add_order_relation(p, "xi" + num(i), 2);
      add_commutations(p, "xi", n);
      add_braid_relations(p, "xi", n);
      // braid group block
      add_commutations(p, "s", n);
      add_braid_relations(p, "s", n);
      // mixed block
      for (long long i = 1; i <= n - 1; ++i)
        for (long long j = 1; j <= n - 1; ++j)
          if (std::llabs(i - j) > 1)
            p.relations.push_back({WB(a).g("s" + num(i)).g("xi" + num(j)).done(),
                                   WB(a).g("xi" + num(j)).g("s" + num(i)).done()});
      for (long long i = 1; i <= n - 2; ++i) {
        std::string si = "s" + num(i), sj = "s" + num(i + 1);
        std::string xi = "xi" + num(i), xj = "xi" + num(i + 1);
        p.relations.push_back(
            {WB(a).g(xi).g(xj).g(si).done(), WB(a).g(sj).g(xi).g(xj).done()});
        p.relations.push_back(
            {WB(a).g(si).g(sj).g(xi).done(), WB(a).g(xj).g(si).g(sj).done()});
      }
      return p;
    }
    case FamilyId::bp_reduced: {
      long long n = get_param(params, "n");
      require(n >= 3, "bp_reduced requires n >= 3");
      require(!torsion, "bp_reduced has no torsion block");
      p.name = name_with({"n"});
      p.alphabet = Alphabet::make({{"s1"}, {"s"}, {"xi1"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s1", "s", n);
      for (long long i = 2; i <= n - 2; ++i) {
        Word c = conj_word(a, "s", "s1", i);
        p.relations.push_back({WB(a).g("xi1").w(c).done(), WB(a).w(c).g("xi1").done()});
      }
      for (long long i = 2; i <= n - 2; ++i) {
        WB lhs(a), rhs(a);
        lhs.g("xi1").g("s", i).g("xi1").g("s", -i);
        rhs.g("s", i).g("xi1").g("s", -i).g("xi1");
        p.relations.push_back({lhs.done(), rhs.done()});
      }
      p.relations.push_back(
          {WB(a).g("xi1").g("s").g("xi1").g("s", -1).g("s1").done(),
           WB(a).g("s").g("s1").g("s", -1).g("xi1").g("s").g("xi1").g("s", -1).done()});
      p.relations.push_back(
          {WB(a).g("xi1").g("s").g("xi1").g("s", -1).g("xi1").done(),
           WB(a).g("s").g("xi1").g("s", -1).g("xi1").g("s").g("xi1").g("s", -1).done()});
      add_order_relation(p, "xi1", 2);
      return p;
    }
    case FamilyId::typeB_canonical: {
      long long n = get_param(params, "n");
      require(n >= 3, "typeB_canonical requires n >= 3");
      p.name = name_with({"n"});
      std::vector<Generator> gens;
      for (long long i = 1; i <= n - 1; ++i) gens.push_back({"s" + num(i)});
      gens.push_back({"t"});
      p.alphabet = Alphabet::make(std::move(gens));
      const auto& a = p.alphabet;
      add_commutations(p, "s", n);
      add_braid_relations(p, "s", n);
      for (long long i = 2; i <= n - 1; ++i)
        p.relations.push_back({WB(a).g("t").g("s" + num(i)).done(),
                               WB(a).g("s" + num(i)).g("t").done()});
      p.relations.push_back({WB(a).g("t").g("s1").g("t").g("s1").done(),
                             WB(a).g("s1").g("t").g("s1").g("t").done()});
      if (torsion) {
        for (long long i = 1; i <= n - 1; ++i) add_order_relation(p, "s" + num(i), 2);
        add_order_relation(p, "t", 2);
      }
      return p;
    }
    case FamilyId::typeB_reduced: {
      long long n = get_param(params, "n");
      require(n >= 3, "typeB_reduced requires n >= 3");
      p.name = name_with({"n"});
      p.alphabet = Alphabet::make({{"s1"}, {"s"}, {"t"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s1", "s", n);
      // t has to commute with every chain generator beyond the first, i.e.
      // with s^i s1 s^-i for all i = 1..n-2; starting the family at i = 2
      // leaves a quotient strictly larger than the intended group (it admits
      // e.g. an S_3 image in which t and s s1 s^-1 fail to commute)
      for (long long i = 1; i <= n - 2; ++i) {
        Word c = conj_word(a, "s", "s1", i);
        p.relations.push_back({WB(a).g("t").w(c).done(), WB(a).w(c).g("t").done()});
      }
      p.relations.push_back({WB(a).g("t").g("s1").g("t").g("s1").done(),
                             WB(a).g("s1").g("t").g("s1").g("t").done()});
      if (torsion) {
        add_order_relation(p, "s1", 2);
        add_order_relation(p, "t", 2);
      }
      return p;
    }
    case FamilyId::typeD_canonical: {
      long long n = get_param(params, "n");
      require(n >= 3, "typeD_canonical requires n >= 3");
      p.name = name_with({"n"});
      std::vector<Generator> gens;
      for (long long i = 1; i <= n - 1; ++i) gens.push_back({"s" + num(i)});
      gens.push_back({"r"});
      p.alphabet = Alphabet::make(std::move(gens));
      const auto& a = p.alphabet;
      add_commutations(p, "s", n);
      add_braid_relations(p, "s", n);
      for (long long i = 1; i <= n - 1; ++i)
        if (i != 2)
          p.relations.push_back({WB(a).g("r").g("s" + num(i)).done(),
                                 WB(a).g("s" + num(i)).g("r").done()});
      p.relations.push_back({WB(a).g("r").g("s2").g("r").done(),
                             WB(a).g("s2").g("r").g("s2").done()});
      if (torsion) {
        for (long long i = 1; i <= n - 1; ++i) add_order_relation(p, "s" + num(i), 2);
        add_order_relation(p, "r", 2);
      }
      return p;
    }
    case FamilyId::typeD_reduced: {
      long long n = get_param(params, "n");
      require(n >= 3, "typeD_reduced requires n >= 3");
      p.name = name_with({"n"});
      p.alphabet = Alphabet::make({{"s1"}, {"s"}, {"r"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s1", "s", n);
      for (long long i = 0; i <= n - 2; ++i) {
        if (i == 1) continue;
        Word c = conj_word(a, "s", "s1", i);
        p.relations.push_back({WB(a).g("r").w(c).done(), WB(a).w(c).g("r").done()});
      }
      Word u = conj_word(a, "s", "s1", 1);
      p.relations.push_back({WB(a).g("r").w(u).g("r").done(),
                             WB(a).w(u).g("r").w(u).done()});
      if (torsion) {
        add_order_relation(p, "s1", 2);
        add_order_relation(p, "r", 2);
      }
      return p;
    }
    case FamilyId::typeE8_reduced: {
      require(params.empty() || (params.size() == 1 && params.count("n") &&
                                 params.at("n") == 8),
              "typeE8_reduced takes no parameters");
      p.name = torsion ? "typeE8_reduced_torsion" : "typeE8_reduced";
      p.params = {{"n", 8}};
      p.alphabet = Alphabet::make({{"s1"}, {"s"}, {"w"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s1", "s", 8);  // i = 2,3,4 and s^8 = (s s1)^7
      for (long long i : {0, 1, 3, 4, 5, 6}) {
        Word c = conj_word(a, "s", "s1", i);
        p.relations.push_back({WB(a).g("w").w(c).done(), WB(a).w(c).g("w").done()});
      }
      Word c2 = conj_word(a, "s", "s1", 2);
      p.relations.push_back({WB(a).g("w").w(c2).g("w").done(),
                             WB(a).w(c2).g("w").w(c2).done()});
      if (torsion) {
        add_order_relation(p, "s1", 2);
        add_order_relation(p, "w", 2);
      }
      return p;
    }
    case FamilyId::complex_2e_e_r: {
      long long d = get_param(params, "d");
      long long e = get_param(params, "e");
      long long r = get_param(params, "r");
      require(d >= 2 && e >= 2 && r >= 2, "complex_2e_e_r requires d,e,r >= 2");
      p.name = name_with({"d", "e", "r"});
      p.alphabet = Alphabet::make({{"t2"}, {"t"}, {"sg"}, {"t2p"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "t2", "t", r);
      for (long long i = 1; i <= r - 2; ++i) {
        Word c = conj_word(a, "t", "t2", i);
        p.relations.push_back({WB(a).g("sg").w(c).done(), WB(a).w(c).g("sg").done()});
      }
      p.relations.push_back({WB(a).g("sg").g("t2p").g("t2").done(),
                             WB(a).g("t2p").g("t2").g("sg").done()});
      if (r >= 3) {
        // both of these involve t3 = t t2 t^-1; at r = 2 they would collapse
        // to a spurious braid relation between t2p and t2
        Word u = conj_word(a, "t", "t2", 1);
        p.relations.push_back({WB(a).g("t2p").w(u).g("t2p").done(),
                               WB(a).w(u).g("t2p").w(u).done()});
        p.relations.push_back(
            {WB(a).w(u).g("t2p").g("t2").w(u).g("t2p").g("t2").done(),
             WB(a).g("t2p").g("t2").w(u).g("t2p").g("t2").w(u).done()});
      }
      {
        // e+1 factors: t2 sg t2p t2 t2p ...  =  sg t2p t2 t2p t2 ...
        WB lhs(a), rhs(a);
        lhs.g("t2").g("sg");
        for (long long k = 2; k < e + 1; ++k) lhs.g(k % 2 == 0 ? "t2p" : "t2");
        rhs.g("sg");
        for (long long k = 1; k < e + 1; ++k) rhs.g(k % 2 == 1 ? "t2p" : "t2");
        p.relations.push_back({lhs.done(), rhs.done()});
      }
      if (torsion) {
        add_order_relation(p, "sg", d);
        add_order_relation(p, "t2", 2);
        add_order_relation(p, "t2p", 2);
      }
      return p;
    }
    case FamilyId::complex_e_e_r: {
      long long e = get_param(params, "e");
      long long r = get_param(params, "r");
      require(e >= 2, "complex_e_e_r requires e >= 2");
      require(r >= 3, "complex_e_e_r requires r >= 3");
      p.name = name_with({"e", "r"});
      p.alphabet = Alphabet::make({{"t2"}, {"t"}, {"t2p"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "t2", "t", r);
      Word u = conj_word(a, "t", "t2", 1);
      p.relations.push_back({WB(a).g("t2p").w(u).g("t2p").done(),
                             WB(a).w(u).g("t2p").w(u).done()});
      p.relations.push_back(
          {WB(a).w(u).g("t2p").g("t2").w(u).g("t2p").g("t2").done(),
           WB(a).g("t2p").g("t2").w(u).g("t2p").g("t2").w(u).done()});
      p.relations.push_back({alternating(a, {"t2", "t2p"}, e),
                             alternating(a, {"t2p", "t2"}, e)});
      if (torsion) {
        add_order_relation(p, "t2", 2);
        add_order_relation(p, "t2p", 2);
      }
      return p;
    }
    case FamilyId::complex_d_1_n: {
      long long d = get_param(params, "d");
      long long n = get_param(params, "n");
      require(d >= 2, "complex_d_1_n requires d >= 2");
      require(n >= 2, "complex_d_1_n requires n >= 2");
      p.name = name_with({"d", "n"});
      p.alphabet = Alphabet::make({{"s1"}, {"s"}, {"t"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s1", "s", n);
      // t has to commute with every chain generator beyond the first, i.e.
      // with s^i s1 s^-i for all i = 1..n-2; starting the family at i = 2
      // leaves a quotient strictly larger than the intended group (it admits
      // e.g. an S_3 image in which t and s s1 s^-1 fail to commute)
      for (long long i = 1; i <= n - 2; ++i) {
        Word c = conj_word(a, "s", "s1", i);
        p.relations.push_back({WB(a).g("t").w(c).done(), WB(a).w(c).g("t").done()});
      }
      p.relations.push_back({WB(a).g("t").g("s1").g("t").g("s1").done(),
                             WB(a).g("s1").g("t").g("s1").g("t").done()});
      if (torsion) {
        add_order_relation(p, "s1", 2);
        add_order_relation(p, "t", d);
      }
      return p;
    }
    case FamilyId::br_g30: {
      require(params.empty(), "br_g30 takes no parameters");
      p.name = torsion ? "br_g30_torsion" : "br_g30";
      p.alphabet = Alphabet::make({{"s1"}, {"s"}, {"t"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s1", "s", 4);  // i = 2 and s^4 = (s s1)^3
      for (long long i : {2, 3}) {
        Word c = conj_word(a, "s", "s1", i);
        p.relations.push_back({WB(a).g("t").w(c).done(), WB(a).w(c).g("t").done()});
      }
      p.relations.push_back(
          {WB(a).g("t").g("s1").g("t").g("s1").g("t").done(),
           WB(a).g("s1").g("t").g("s1").g("t").g("s1").done()});
      if (torsion) {
        add_order_relation(p, "s1", 2);
        add_order_relation(p, "t", 2);
      }
      return p;
    }
    case FamilyId::br_g34: {
      require(params.empty(), "br_g34 takes no parameters");
      p.name = torsion ? "br_g34_torsion" : "br_g34";
      p.alphabet = Alphabet::make({{"s"}, {"z"}, {"w"}});
      const auto& a = p.alphabet;
      add_two_gen_core(p, "s", "z", 6);  // i = 2,3 and z^6 = (z s)^5
      auto czs = [&](long long i) { return conj_word(a, "z", "s", i); };
      for (long long i : {0, 3, 4}) {
        Word c = czs(i);
        p.relations.push_back({WB(a).g("w").w(c).done(), WB(a).w(c).g("w").done()});
      }
      for (long long i : {1, 2}) {
        Word c = czs(i);
        p.relations.push_back({WB(a).g("w").w(c).g("w").done(),
                               WB(a).w(c).g("w").w(c).done()});
      }
      p.relations.push_back(
          {WB(a).g("w").w(czs(2)).g("w").w(czs(1)).g("w").w(czs(2)).done(),
           WB(a).w(czs(1)).g("w").w(czs(2)).g("w").w(czs(1)).g("w").done()});
      if (torsion) {
        add_order_relation(p, "s", 2);
        add_order_relation(p, "w", 2);
      }
      return p;
    }
    case FamilyId::g25_quotient:
    case FamilyId::g32_quotient: {
      long long n = family == FamilyId::g25_quotient ? 4 : 5;
      require(params.empty(), std::string(family_name(family)) + " takes no parameters");
      p.name = family_name(family);
      p.params = {{"n", n}};
      p.alphabet = Alphabet::make({{"s1"}, {"s"}});
      add_two_gen_core(p, "s1", "s", n);
      add_order_relation(p, "s1", 3);  // the quotient's defining relation
      return p;
    }
  }
  throw UnknownFamily("unknown family id");
}

Diagnostics validate(const Presentation& p) {
  Diagnostics diags;
  if (!p.alphabet) {
    diags.error("presentation has no alphabet");
    return diags;
  }
  bool any_noninv = false;
  for (const auto& g : p.alphabet->generators())
    if (!g.invertible) any_noninv = true;

  if (p.kind == Kind::group && any_noninv)
    diags.error("group presentation with noninvertible generator");
  if (p.kind == Kind::monoid && !any_noninv)
    diags.warn("kind should be group: all generators are invertible");

  int k = 0;
  for (const auto& rel : p.relations) {
    ++k;
    for (const Word* side : {&rel.lhs, &rel.rhs}) {
      if (!side->alphabet()->same_as(*p.alphabet)) {
        diags.error("relation " + std::to_string(k) +
                    " uses a generator not declared in the alphabet");
        continue;
      }
      if (!(free_reduce(*side) == *side))
        diags.error("relation " + std::to_string(k) + " side is not reduced");
    }
  }
  return diags;
}

namespace {

// Word parsing with source positions, for DSL diagnostics.
std::optional<Word> parse_word_dsl(const AlphabetRef& alphabet, std::string_view text,
                                   int line, int col_base, Diagnostics& diags) {
  std::vector<Letter> letters;
  size_t pos = 0;
  bool bad = false;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    size_t start = pos;
    size_t end = text.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string tok(text.substr(start, end - start));
    pos = end;
    int col = col_base + static_cast<int>(start) + 1;

    std::int64_t exp = 1;
    std::string name = tok;
    if (size_t caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string numpart = tok.substr(caret + 1);
      auto res = std::from_chars(numpart.data(), numpart.data() + numpart.size(), exp);
      if (res.ec != std::errc() || res.ptr != numpart.data() + numpart.size()) {
        diags.error("malformed letter '" + tok + "'", line, col);
        bad = true;
        continue;
      }
      if (exp == 0) {
        diags.error("zero exponent in letter '" + tok + "'", line, col);
        bad = true;
        continue;
      }
    }
    auto idx = alphabet->index_of(name);
    if (!idx) {
      diags.error("undeclared generator '" + name + "'", line, col);
      bad = true;
      continue;
    }
    if (exp < 0 && !alphabet->gen(*idx).invertible) {
      diags.error("inverse of noninvertible generator " + name, line, col);
      bad = true;
      continue;
    }
    letters.push_back({*idx, exp});
  }
  if (bad) return std::nullopt;
  return free_reduce(Word(alphabet, std::move(letters)));
}

}  // namespace

ParseResult parse_dsl(const std::string& text) {
  ParseResult result;
  Diagnostics& diags = result.diagnostics;

  Presentation p;
  std::vector<Generator> gens;
  struct PendingRel {
    std::string lhs, rhs;
    int line;
    int lhs_col, rhs_col;
  };
  std::vector<PendingRel> rels;

  enum class Stage { header, kind, body } stage = Stage::header;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    std::string rest;
    std::getline(ls, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    int rest_col = static_cast<int>(first + keyword.size() + 1);

    if (stage == Stage::header) {
      if (keyword != "presentation" || rest.empty()) {
        diags.error("expected 'presentation <name>'", lineno, 1);
        return result;
      }
      p.name = rest;
      stage = Stage::kind;
      continue;
    }
    if (stage == Stage::kind) {
      if (keyword != "kind" || (rest != "group" && rest != "monoid")) {
        diags.error("expected 'kind group' or 'kind monoid'", lineno, 1);
        return result;
      }
      p.kind = rest == "group" ? Kind::group : Kind::monoid;
      stage = Stage::body;
      continue;
    }
    if (keyword == "gen") {
      std::istringstream gs(rest);
      std::string name, flag;
      gs >> name >> flag;
      if (name.empty()) {
        diags.error("expected 'gen <name> [noninv]'", lineno, 1);
        continue;
      }
      bool invertible = true;
      if (flag == "noninv")
        invertible = false;
      else if (!flag.empty()) {
        diags.error("unexpected token '" + flag + "' after generator name", lineno, 1);
        continue;
      }
      for (char c : name)
        if (c == '^') {
          diags.error("generator name may not contain '^'", lineno, rest_col);
          name.clear();
          break;
        }
      if (name.empty()) continue;
      for (const auto& g : gens)
        if (g.name == name) {
          diags.error("duplicate generator '" + name + "'", lineno, rest_col);
          name.clear();
          break;
        }
      if (!name.empty()) gens.push_back({name, invertible});
      continue;
    }
    if (keyword == "rel") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        diags.error("relation is missing '='", lineno, 1);
        continue;
      }
      PendingRel pr;
      pr.lhs = rest.substr(0, eq);
      pr.rhs = rest.substr(eq + 1);
      pr.line = lineno;
      pr.lhs_col = rest_col;
      pr.rhs_col = rest_col + static_cast<int>(eq) + 1;
      rels.push_back(std::move(pr));
      continue;
    }
    diags.error("unknown keyword '" + keyword + "'", lineno, 1);
  }

  if (stage != Stage::body) {
    diags.error("incomplete presentation header");
    return result;
  }
  if (gens.empty()) {
    diags.error("presentation declares no generators");
    return result;
  }
  p.alphabet = Alphabet::make(gens);
  for (const auto& pr : rels) {
    auto lhs = parse_word_dsl(p.alphabet, pr.lhs, pr.line, pr.lhs_col - 1, diags);
    auto rhs = parse_word_dsl(p.alphabet, pr.rhs, pr.line, pr.rhs_col - 1, diags);
    if (lhs && rhs) p.relations.push_back({*lhs, *rhs});
  }
  if (!diags.ok()) return result;

  Diagnostics sema = validate(p);
  for (auto& d : sema.items) diags.items.push_back(std::move(d));
  if (!diags.ok()) return result;

  result.presentation = std::move(p);
  return result;
}

std::string serialize(const Presentation& p) {
  std::ostringstream os;
  os << "presentation " << p.name << '\n';
  os << "kind " << (p.kind == Kind::group ? "group" : "monoid") << '\n';
  for (const auto& g : p.alphabet->generators()) {
    os << "gen " << g.name;
    if (!g.invertible) os << " noninv";
    os << '\n';
  }
  for (const auto& rel : p.relations) {
    os << "rel " << to_string(rel.lhs) << " =";
    if (!rel.rhs.is_empty()) os << ' ' << to_string(rel.rhs);
    os << '\n';
  }
  return os.str();
}

}  // namespace braidkit
