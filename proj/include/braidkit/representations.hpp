#ifndef BRAIDKIT_REPRESENTATIONS_HPP
#define BRAIDKIT_REPRESENTATIONS_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "braidkit/presentation.hpp"
#include "braidkit/word.hpp"

namespace braidkit {

// Convention used by every evaluator here: words act left to right,
// image(u v) = image(u) * image(v) with the stated products.

/// Endomorphism of the free group on x1..xn, images reduced.
struct FreeGroupEndo {
  int rank = 0;
  std::vector<Word> images;  // over the rank-n free alphabet

  static FreeGroupEndo identity(int rank);
  static AlphabetRef free_alphabet(int rank);
};

FreeGroupEndo compose(const FreeGroupEndo& first, const FreeGroupEndo& then);
Word apply_endo(const FreeGroupEndo& e, const Word& w);
bool endo_equal(const FreeGroupEndo& a, const FreeGroupEndo& b);

/// Artin's action on the free group: s_i and the letter swaps xi_i.
FreeGroupEndo artin_action(const Word& w, int n);

struct Permutation {
  std::vector<int> img;  // 0-based one-line form

  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // swaps i, i+1 (0-based)
  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[static_cast<size_t>(i)]; }
  Permutation inverse() const;
  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
};

// apply a, then b
Permutation pcompose(const Permutation& a, const Permutation& b);
std::string to_string(const Permutation& p);  // one-line, 1-based

using PermImages = std::map<std::string, Permutation>;

/// Transposition/identity images for the symmetric-group quotient of a
/// presentation's alphabet: chain generators (s_i, d_i, x_i, xi_i) map to
/// (i, i+1), two-generator chain products (s, d) to the corresponding cycle,
/// extras (t, r, w) to the identity.
PermImages sym_quotient_images(const AlphabetRef& alphabet, int n);

Permutation perm_image(const Word& w, const PermImages& images, int n);

/// Monomial matrix: entry at (perm(j), j) is zeta_m^{exps(j)}, zero elsewhere.
struct MonomialMatrix {
  int size = 0;
  int modulus = 1;
  Permutation perm;
  std::vector<int> exps;  // values in [0, modulus)

  static MonomialMatrix identity(int size, int modulus);
  MonomialMatrix inverse() const;
  bool is_identity() const;

  auto operator<=>(const MonomialMatrix&) const = default;
};

// apply a, then b (matrix product a*b under column-action bookkeeping)
MonomialMatrix mcompose(const MonomialMatrix& a, const MonomialMatrix& b);

enum class ComplexFamily { g_de_e_r, g_d_1_n, g_e_e_r };

/// Generator images for the monomial reflection representation of
/// G(de,e,r) / G(d,1,n) / G(e,e,r), keyed by canonical generator name.
std::map<std::string, MonomialMatrix> monomial_images(ComplexFamily family,
                                                      long long d, long long e,
                                                      long long r);

MonomialMatrix monomial_image(const Word& w, ComplexFamily family, long long d,
                              long long e, long long r);

/// Exact integer matrix (arbitrary precision entries).
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> data;  // row-major

  static IntegerMatrix zero(int rows, int cols);
  static IntegerMatrix identity(int n);
  mpz_class& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const mpz_class& at(int i, int j) const {
    return data[static_cast<size_t>(i) * cols + j];
  }
  bool operator==(const IntegerMatrix&) const = default;
};

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b);

enum class CoxeterType { B, D, E8 };

/// Reflection representation of the Coxeter quotient on the canonical
/// alphabet (s1..s_{n-1} plus t/r/w), via the integer Cartan matrix.
IntegerMatrix coxeter_reflection_image(const Word& w, CoxeterType type, int n);

}  // namespace braidkit

#endif
