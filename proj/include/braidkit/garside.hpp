#ifndef BRAIDKIT_GARSIDE_HPP
#define BRAIDKIT_GARSIDE_HPP

#include <map>

#include "braidkit/representations.hpp"
#include "braidkit/word.hpp"

namespace braidkit {

/// Left-greedy Garside normal form of a braid: Delta^k s_1 ... s_l with
/// left-weighted nonidentity, non-Delta permutation simples. Identical normal
/// forms characterize equal braids.
struct BraidNF {
  int strands = 0;
  long long delta_power = 0;
  std::vector<Permutation> simples;

  static BraidNF identity(int strands) { return {strands, 0, {}}; }
  auto operator<=>(const BraidNF&) const = default;
};

BraidNF braid_nf(const Word& w, int n);
bool braid_equal(const Word& u, const Word& v, int n);

BraidNF nf_mul(const BraidNF& a, const BraidNF& b);
BraidNF nf_inverse(const BraidNF& a);

std::string to_string(const BraidNF& nf);

/// Element of the integral group ring of Br_n, terms keyed by normal form.
struct GroupRingElement {
  int strands = 0;
  std::map<BraidNF, long long> terms;

  static GroupRingElement zero(int strands) { return {strands, {}}; }
  static GroupRingElement unit(int strands) {
    return {strands, {{BraidNF::identity(strands), 1}}};
  }
  bool operator==(const GroupRingElement&) const = default;
};

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b);
bool ring_equal(const GroupRingElement& a, const GroupRingElement& b);

/// x_i -> s_i - s_i^{-1}, invertible letters to themselves, over the
/// canonical SB_n alphabet.
GroupRingElement desingularize(const Word& w, int n);

}  // namespace braidkit

#endif
