#include "braidkit/garside.hpp"

#include <charconv>
#include <sstream>

namespace braidkit {

namespace {

Permutation half_twist(int n) {
  Permutation p;
  p.img.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p.img[static_cast<size_t>(i)] = n - 1 - i;
  return p;
}

// conjugation by Delta
Permutation tau(const Permutation& p, const Permutation& w0) {
  return pcompose(w0, pcompose(p, w0));
}

// i in S(p) iff sigma_{i+1} left-divides the permutation braid p
bool in_starting_set(const Permutation& p, int i) { return p(i) > p(i + 1); }

// i in F(p) iff p = q sigma_{i+1} with q simple
bool in_finishing_set(const Permutation& p, const Permutation& pinv, int i) {
  (void)p;
  return pinv(i) > pinv(i + 1);
}

// Rebalance an adjacent pair until left-weighted: move sigma_i across while
// some starting letter of b is not a finishing letter of a.
bool left_weight_pair(Permutation& a, Permutation& b) {
  bool changed = false;
  int n = a.size();
  bool progress = true;
  while (progress) {
    progress = false;
    Permutation ainv = a.inverse();
    for (int i = 0; i + 1 < n; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set(a, ainv, i)) {
        // a <- a sigma, b <- sigma^{-1} b
        std::swap(a.img[static_cast<size_t>(ainv(i))], a.img[static_cast<size_t>(ainv(i + 1))]);
        std::swap(b.img[static_cast<size_t>(i)], b.img[static_cast<size_t>(i + 1)]);
        changed = true;
        progress = true;
        break;
      }
    }
  }
  return changed;
}

struct NFBuilder {
  int n;
  long long delta = 0;
  std::vector<Permutation> simples;
  Permutation w0;

  explicit NFBuilder(int strands) : n(strands), w0(half_twist(strands)) {}

  void append_simple(const Permutation& p) {
    if (!p.is_identity()) simples.push_back(p);
  }

  void append_delta(long long k) {
    if (k == 0) return;
    delta += k;
    if (k % 2 != 0)
      for (auto& s : simples) s = tau(s, w0);
  }

  void append_positive(int gen_index /* 1-based sigma index */) {
    append_simple(Permutation::transposition(n, gen_index - 1));
  }

  void append_negative(int gen_index) {
    // sigma_i^{-1} = Delta^{-1} (sigma_i^{-1} Delta); the complement is the
    // simple with permutation j -> w0(sigma_i(j)).
    append_delta(-1);
    Permutation s = Permutation::transposition(n, gen_index - 1);
    Permutation r;
    r.img.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) r.img[static_cast<size_t>(j)] = s(w0(j));
    append_simple(r);
  }

  void normalize() {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      // pull out half twists and drop identities
      for (size_t j = 0; j < simples.size();) {
        if (simples[j].is_identity()) {
          simples.erase(simples.begin() + static_cast<std::ptrdiff_t>(j));
          dirty = true;
          continue;
        }
        if (simples[j] == w0) {
          delta += 1;
          for (size_t k = 0; k < j; ++k) simples[k] = tau(simples[k], w0);
          simples.erase(simples.begin() + static_cast<std::ptrdiff_t>(j));
          dirty = true;
          continue;
        }
        ++j;
      }
      for (size_t j = 0; j + 1 < simples.size(); ++j)
        if (left_weight_pair(simples[j], simples[j + 1])) dirty = true;
    }
  }

  BraidNF take() {
    normalize();
    return {n, delta, std::move(simples)};
  }
};

int sigma_index(const Word& w, const Letter& l, int n) {
  const std::string& name = w.alphabet()->gen(l.gen).name;
  if (name.size() >= 2 && name[0] == 's') {
    long long i = 0;
    auto res = std::from_chars(name.data() + 1, name.data() + name.size(), i);
    if (res.ec == std::errc() && res.ptr == name.data() + name.size() && i >= 1 &&
        i <= n - 1)
      return static_cast<int>(i);
  }
  throw UnknownGenerator("braid_nf: generator '" + name + "' is not a canonical s_i");
}

}  // namespace

BraidNF braid_nf(const Word& w, int n) {
  NFBuilder b(n);
  for (const auto& l : w.letters()) {
    int i = sigma_index(w, l, n);
    for (std::int64_t k = 0; k < std::llabs(l.exp); ++k) {
      if (l.exp > 0)
        b.append_positive(i);
      else
        b.append_negative(i);
    }
  }
  return b.take();
}

bool braid_equal(const Word& u, const Word& v, int n) {
  return braid_nf(u, n) == braid_nf(v, n);
}

BraidNF nf_mul(const BraidNF& a, const BraidNF& b) {
  if (a.strands != b.strands) throw RankMismatch("nf_mul: strand counts differ");
  NFBuilder builder(a.strands);
  builder.delta = a.delta_power + b.delta_power;
  builder.simples = a.simples;
  if (b.delta_power % 2 != 0)
    for (auto& s : builder.simples) s = tau(s, builder.w0);
  builder.simples.insert(builder.simples.end(), b.simples.begin(), b.simples.end());
  return builder.take();
}

BraidNF nf_inverse(const BraidNF& a) {
  // (Delta^k s_1..s_l)^{-1} = s_l^{-1} .. s_1^{-1} Delta^{-k};
  // each s^{-1} = Delta^{-1} (Delta s^{-1}).
  NFBuilder builder(a.strands);
  for (auto it = a.simples.rbegin(); it != a.simples.rend(); ++it) {
    builder.append_delta(-1);
    Permutation sinv = it->inverse();
    Permutation r;
    r.img.resize(static_cast<size_t>(a.strands));
    for (int j = 0; j < a.strands; ++j)
      r.img[static_cast<size_t>(j)] = sinv(builder.w0(j));
    builder.append_simple(r);
  }
  builder.append_delta(-a.delta_power);
  return builder.take();
}

std::string to_string(const BraidNF& nf) {
  std::ostringstream os;
  os << "delta^" << nf.delta_power;
  for (const auto& s : nf.simples) os << " | " << to_string(s);
  return os.str();
}

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.strands != b.strands) throw RankMismatch("ring_add: strand counts differ");
  GroupRingElement out = a;
  for (const auto& [nf, c] : b.terms) {
    auto [it, inserted] = out.terms.emplace(nf, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.strands != b.strands) throw RankMismatch("ring_mul: strand counts differ");
  GroupRingElement out = GroupRingElement::zero(a.strands);
  for (const auto& [na, ca] : a.terms)
    for (const auto& [nb, cb] : b.terms) {
      BraidNF prod = nf_mul(na, nb);
      auto [it, inserted] = out.terms.emplace(prod, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

bool ring_equal(const GroupRingElement& a, const GroupRingElement& b) {
  return a.strands == b.strands && a.terms == b.terms;
}

GroupRingElement desingularize(const Word& w, int n) {
  GroupRingElement result = GroupRingElement::unit(n);
  AlphabetRef free_braid = catalog_build(FamilyId::artin_canonical, {{"n", n}}).alphabet;
  auto sigma_term = [&](int i, long long e) {
    GroupRingElement g = GroupRingElement::zero(n);
    g.terms[braid_nf(Word(free_braid, {{*free_braid->index_of("s" + std::to_string(i)), e}}),
                     n)] = 1;
    return g;
  };
  for (const auto& l : w.letters()) {
    const std::string& name = w.alphabet()->gen(l.gen).name;
    if (name.size() >= 2 && name[0] == 'x') {
      long long i = 0;
      auto res = std::from_chars(name.data() + 1, name.data() + name.size(), i);
      if (res.ec != std::errc() || res.ptr != name.data() + name.size() || i < 1 ||
          i > n - 1)
        throw UnknownGenerator("desingularize: unknown generator '" + name + "'");
      GroupRingElement diff =
          ring_add(sigma_term(static_cast<int>(i), 1),
                   GroupRingElement{n, {{braid_nf(Word(free_braid,
                                                       {{*free_braid->index_of(
                                                             "s" + std::to_string(i)),
                                                         -1}}),
                                                  n),
                                         -1}}});
      for (std::int64_t k = 0; k < l.exp; ++k) result = ring_mul(result, diff);
    } else {
      int i = 0;
      {
        long long idx = 0;
        if (name.size() >= 2 && name[0] == 's') {
          auto res = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
          if (res.ec == std::errc() && res.ptr == name.data() + name.size()) i = static_cast<int>(idx);
        }
      }
      if (i < 1 || i > n - 1)
        throw UnknownGenerator("desingularize: unknown generator '" + name + "'");
      result = ring_mul(result, sigma_term(i, l.exp));
    }
  }
  return result;
}

}  // namespace braidkit
