#ifndef BRAIDKIT_ABELIAN_HPP
#define BRAIDKIT_ABELIAN_HPP

#include "braidkit/presentation.hpp"
#include "braidkit/representations.hpp"

namespace braidkit {

/// Finitely generated abelian group: Z^free_rank x prod Z/torsion[i],
/// with each torsion entry >= 2 dividing the next.
struct InvariantFactors {
  std::vector<mpz_class> torsion;
  int free_rank = 0;

  bool operator==(const InvariantFactors&) const = default;
};

std::string to_string(const InvariantFactors& inv);

/// One row per relation, one column per generator; entries are exponent sums
/// of lhs * rhs^{-1}.
IntegerMatrix relation_matrix(const Presentation& p);

/// Canonical Smith form diagonal: nonnegative, each entry divides the next,
/// padded with zeros to min(rows, cols).
std::vector<mpz_class> smith_normal_form(IntegerMatrix m);

InvariantFactors abelianization(const Presentation& p);

}  // namespace braidkit

#endif
