#include "braidkit/representations.hpp"

#include <charconv>
#include <sstream>

namespace braidkit {

namespace {

std::optional<long long> parse_index(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix)
    return std::nullopt;
  std::string_view digits = name.substr(prefix.size());
  long long value = 0;
  auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
    return std::nullopt;
  return value;
}

}  // namespace

// --- free group endomorphisms ----------------------------------------------

AlphabetRef FreeGroupEndo::free_alphabet(int rank) {
  std::vector<Generator> gens;
  for (int i = 1; i <= rank; ++i) gens.push_back({"x" + std::to_string(i), true});
  return Alphabet::make(std::move(gens));
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
  FreeGroupEndo e;
  e.rank = rank;
  AlphabetRef a = free_alphabet(rank);
  for (int i = 0; i < rank; ++i) e.images.push_back(Word(a, {{i, 1}}));
  return e;
}

FreeGroupEndo compose(const FreeGroupEndo& first, const FreeGroupEndo& then) {
  if (first.rank != then.rank) throw RankMismatch("endo ranks differ");
  GeneratorMap m;
  m.source = first.images.front().alphabet();
  m.target = then.images.front().alphabet();
  m.images = then.images;
  FreeGroupEndo out;
  out.rank = first.rank;
  for (const auto& img : first.images) out.images.push_back(substitute(img, m));
  return out;
}

Word apply_endo(const FreeGroupEndo& e, const Word& w) {
  GeneratorMap m;
  m.source = w.alphabet();
  m.target = e.images.front().alphabet();
  m.images = e.images;
  return substitute(w, m);
}

bool endo_equal(const FreeGroupEndo& a, const FreeGroupEndo& b) {
  if (a.rank != b.rank) throw RankMismatch("endo ranks differ");
  for (size_t i = 0; i < a.images.size(); ++i)
    if (!(a.images[i] == b.images[i])) return false;
  return true;
}

FreeGroupEndo artin_action(const Word& w, int n) {
  AlphabetRef fa = FreeGroupEndo::free_alphabet(n);
  auto xw = [&](std::initializer_list<Letter> ls) { return free_reduce(Word(fa, ls)); };

  auto braid_endo = [&](int i, bool inverse) {
    // i is 1-based; acts on x_i, x_{i+1}
    FreeGroupEndo e = FreeGroupEndo::identity(n);
    int a = i - 1, b = i;
    if (!inverse) {
      e.images[static_cast<size_t>(a)] = xw({{b, 1}});
      e.images[static_cast<size_t>(b)] = xw({{b, -1}, {a, 1}, {b, 1}});
    } else {
      e.images[static_cast<size_t>(a)] = xw({{a, 1}, {b, 1}, {a, -1}});
      e.images[static_cast<size_t>(b)] = xw({{a, 1}});
    }
    return e;
  };
  auto swap_endo = [&](int i) {
    FreeGroupEndo e = FreeGroupEndo::identity(n);
    e.images[static_cast<size_t>(i - 1)] = xw({{i, 1}});
    e.images[static_cast<size_t>(i)] = xw({{i - 1, 1}});
    return e;
  };

  FreeGroupEndo result = FreeGroupEndo::identity(n);
  for (const auto& l : w.letters()) {
    const std::string& name = w.alphabet()->gen(l.gen).name;
    FreeGroupEndo step;
    if (auto i = parse_index(name, "xi"); i && *i >= 1 && *i <= n - 1) {
      step = swap_endo(static_cast<int>(*i));
      for (std::int64_t k = 0; k < std::llabs(l.exp); ++k) result = compose(result, step);
      continue;
    }
    if (auto i = parse_index(name, "s"); i && *i >= 1 && *i <= n - 1) {
      step = braid_endo(static_cast<int>(*i), l.exp < 0);
      for (std::int64_t k = 0; k < std::llabs(l.exp); ++k) result = compose(result, step);
      continue;
    }
    throw UnknownGenerator("artin_action: no automorphism for generator '" + name + "'");
  }
  return result;
}

// --- permutations -----------------------------------------------------------

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p.img[static_cast<size_t>(i)] = i;
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  Permutation p = identity(n);
  std::swap(p.img[static_cast<size_t>(i)], p.img[static_cast<size_t>(i + 1)]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img.resize(img.size());
  for (int i = 0; i < size(); ++i) p.img[static_cast<size_t>(img[static_cast<size_t>(i)])] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation pcompose(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.img.resize(a.img.size());
  for (int i = 0; i < a.size(); ++i) p.img[static_cast<size_t>(i)] = a(b(i));
  return p;
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (int i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << p(i) + 1;
  }
  return os.str();
}

PermImages sym_quotient_images(const AlphabetRef& alphabet, int n) {
  PermImages images;
  bool complex_chain = alphabet->index_of("t2p").has_value();
  Permutation id = Permutation::identity(n);

  auto chain_cycle = [&](int count) {
    Permutation c = id;
    for (int i = 0; i < count; ++i) c = pcompose(c, Permutation::transposition(n, i));
    return c;
  };

  for (const auto& g : alphabet->generators()) {
    const std::string& name = g.name;
    if (name == "s" || name == "d" || (complex_chain && name == "t")) {
      images[name] = chain_cycle(n - 1);
    } else if (name == "t2p" || name == "r") {
      // killing the sign part of G(de,e,r) or W(D_n) leaves a transposition
      images[name] = Permutation::transposition(n, 0);
    } else if (name == "t" || name == "w" || name == "sg") {
      images[name] = id;
    } else if (auto i = parse_index(name, "xi")) {
      images[name] = Permutation::transposition(n, static_cast<int>(*i) - 1);
    } else if (auto i = parse_index(name, "x")) {
      images[name] = Permutation::transposition(n, static_cast<int>(*i) - 1);
    } else if (auto i = parse_index(name, "s")) {
      images[name] = Permutation::transposition(n, static_cast<int>(*i) - 1);
    } else if (auto i = parse_index(name, "d")) {
      images[name] = Permutation::transposition(n, static_cast<int>(*i) - 1);
    } else if (auto i = parse_index(name, "t"); i && complex_chain) {
      images[name] = Permutation::transposition(n, static_cast<int>(*i) - 2);
    } else {
      throw UnknownGenerator("no symmetric-group image for generator '" + name + "'");
    }
  }
  return images;
}

Permutation perm_image(const Word& w, const PermImages& images, int n) {
  Permutation result = Permutation::identity(n);
  for (const auto& l : w.letters()) {
    auto it = images.find(w.alphabet()->gen(l.gen).name);
    if (it == images.end())
      throw UnknownGenerator("no permutation image for generator '" +
                             w.alphabet()->gen(l.gen).name + "'");
    Permutation step = l.exp < 0 ? it->second.inverse() : it->second;
    for (std::int64_t k = 0; k < std::llabs(l.exp); ++k) result = pcompose(result, step);
  }
  return result;
}

// --- monomial matrices ------------------------------------------------------

MonomialMatrix MonomialMatrix::identity(int size, int modulus) {
  MonomialMatrix m;
  m.size = size;
  m.modulus = modulus;
  m.perm = Permutation::identity(size);
  m.exps.assign(static_cast<size_t>(size), 0);
  return m;
}

MonomialMatrix mcompose(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix m;
  m.size = a.size;
  m.modulus = a.modulus;
  m.perm = pcompose(a.perm, b.perm);
  m.exps.resize(static_cast<size_t>(a.size));
  for (int k = 0; k < a.size; ++k) {
    int e = a.exps[static_cast<size_t>(b.perm(k))] + b.exps[static_cast<size_t>(k)];
    m.exps[static_cast<size_t>(k)] = ((e % m.modulus) + m.modulus) % m.modulus;
  }
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix m;
  m.size = size;
  m.modulus = modulus;
  m.perm = perm.inverse();
  m.exps.resize(static_cast<size_t>(size));
  for (int k = 0; k < size; ++k) {
    int e = -exps[static_cast<size_t>(m.perm(k))];
    m.exps[static_cast<size_t>(k)] = ((e % modulus) + modulus) % modulus;
  }
  return m;
}

bool MonomialMatrix::is_identity() const {
  if (!perm.is_identity()) return false;
  for (int e : exps)
    if (e != 0) return false;
  return true;
}

std::map<std::string, MonomialMatrix> monomial_images(ComplexFamily family, long long d,
                                                      long long e, long long r) {
  int size = static_cast<int>(r);
  int m = 0;
  switch (family) {
    case ComplexFamily::g_de_e_r:
      m = static_cast<int>(d * e);
      break;
    case ComplexFamily::g_d_1_n:
      m = static_cast<int>(d);
      break;
    case ComplexFamily::g_e_e_r:
      m = static_cast<int>(e);
      break;
  }
  if (m < 1 || size < 2) throw UnsupportedParams("monomial_images: bad parameters");

  auto transposition = [&](int i) {
    MonomialMatrix x = MonomialMatrix::identity(size, m);
    x.perm = Permutation::transposition(size, i);
    return x;
  };
  auto t1_power = [&](long long k) {
    MonomialMatrix x = MonomialMatrix::identity(size, m);
    x.exps[0] = static_cast<int>(((k % m) + m) % m);
    return x;
  };
  auto t2_prime = [&] {
    return mcompose(mcompose(t1_power(1), transposition(0)), t1_power(-1));
  };

  std::map<std::string, MonomialMatrix> images;
  if (family == ComplexFamily::g_d_1_n) {
    for (int i = 1; i <= size - 1; ++i)
      images["s" + std::to_string(i)] = transposition(i - 1);
    images["t"] = t1_power(1);
  } else {
    for (int i = 2; i <= size; ++i)
      images["t" + std::to_string(i)] = transposition(i - 2);
    images["t2p"] = t2_prime();
    // sg has to act as diag(z_d^-1, 1, ..., 1): with diag(z_d, 1, ..., 1) the
    // (e+1)-factor relation only survives for d = 2.  Either choice generates
    // the same cyclic subgroup, so quotient orders are unaffected.
    if (family == ComplexFamily::g_de_e_r) images["sg"] = t1_power(-e);
  }
  return images;
}

MonomialMatrix monomial_image(const Word& w, ComplexFamily family, long long d,
                              long long e, long long r) {
  auto images = monomial_images(family, d, e, r);
  MonomialMatrix result =
      MonomialMatrix::identity(static_cast<int>(r),
                               images.begin()->second.modulus);
  for (const auto& l : w.letters()) {
    auto it = images.find(w.alphabet()->gen(l.gen).name);
    if (it == images.end())
      throw UnknownGenerator("no monomial image for generator '" +
                             w.alphabet()->gen(l.gen).name + "'");
    MonomialMatrix step = l.exp < 0 ? it->second.inverse() : it->second;
    for (std::int64_t k = 0; k < std::llabs(l.exp); ++k) result = mcompose(result, step);
  }
  return result;
}

// --- integer reflection representation --------------------------------------

IntegerMatrix IntegerMatrix::zero(int rows, int cols) {
  IntegerMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(static_cast<size_t>(rows) * cols, mpz_class(0));
  return m;
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw RankMismatch("matmul: dimension mismatch");
  IntegerMatrix c = IntegerMatrix::zero(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

namespace {

// Node indices: chain s1..s_{n-1} first, the extra generator (t/r/w) last.
// Edges with Cartan products: simply laced -1/-1, the B bond -1/-2.
struct CoxeterDatum {
  int nodes = 0;
  std::vector<std::vector<int>> cartan;  // c[i][j]
  std::map<std::string, int> node_of;
};

CoxeterDatum coxeter_datum(CoxeterType type, int n) {
  CoxeterDatum d;
  int chain = (type == CoxeterType::E8) ? 7 : n - 1;
  d.nodes = chain + 1;
  d.cartan.assign(static_cast<size_t>(d.nodes),
                  std::vector<int>(static_cast<size_t>(d.nodes), 0));
  for (int i = 0; i < d.nodes; ++i) d.cartan[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  auto edge = [&](int i, int j, int cij, int cji) {
    d.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] = cij;
    d.cartan[static_cast<size_t>(j)][static_cast<size_t>(i)] = cji;
  };
  for (int i = 0; i + 1 < chain; ++i) edge(i, i + 1, -1, -1);
  for (int i = 1; i <= chain; ++i) d.node_of["s" + std::to_string(i)] = i - 1;
  int extra = chain;
  switch (type) {
    case CoxeterType::B:
      d.node_of["t"] = extra;
      edge(extra, 0, -2, -1);  // 4-bond t--s1
      break;
    case CoxeterType::D:
      d.node_of["r"] = extra;
      edge(extra, 1, -1, -1);  // r attached to s2
      break;
    case CoxeterType::E8:
      d.node_of["w"] = extra;
      edge(extra, 2, -1, -1);  // w attached to the third chain node
      break;
  }
  return d;
}

IntegerMatrix reflection_matrix(const CoxeterDatum& d, int node) {
  IntegerMatrix m = IntegerMatrix::identity(d.nodes);
  for (int j = 0; j < d.nodes; ++j)
    m.at(node, j) -= d.cartan[static_cast<size_t>(node)][static_cast<size_t>(j)];
  return m;
}

}  // namespace

IntegerMatrix coxeter_reflection_image(const Word& w, CoxeterType type, int n) {
  CoxeterDatum d = coxeter_datum(type, n);
  IntegerMatrix result = IntegerMatrix::identity(d.nodes);
  for (const auto& l : w.letters()) {
    const std::string& name = w.alphabet()->gen(l.gen).name;
    auto it = d.node_of.find(name);
    if (it == d.node_of.end())
      throw UnknownGenerator("no reflection image for generator '" + name + "'");
    IntegerMatrix step = reflection_matrix(d, it->second);  // involution
    for (std::int64_t k = 0; k < std::llabs(l.exp); ++k) result = matmul(result, step);
  }
  return result;
}

}  // namespace braidkit
