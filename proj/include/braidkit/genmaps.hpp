#ifndef BRAIDKIT_GENMAPS_HPP
#define BRAIDKIT_GENMAPS_HPP

#include "braidkit/presentation.hpp"
#include "braidkit/word.hpp"

namespace braidkit {

/// Translation homomorphisms between the reduced (few-generator) and the
/// canonical generating sets of a paired presentation family.
///
/// `family` may name either member of the pair (artin_two_gen and
/// artin_canonical both select the Artin pair, and so on). Families with no
/// canonical counterpart (br_g30, br_g34, g25/g32 quotients) are rejected.
GeneratorMap reduced_to_canonical(FamilyId family, const Params& params);
GeneratorMap canonical_to_reduced(FamilyId family, const Params& params);

GeneratorMap reduced_to_canonical(FamilyId family, long long n);
GeneratorMap canonical_to_reduced(FamilyId family, long long n);

/// Band generator a_{ts} expanded over the canonical Br_n alphabet:
/// (s_{t-1} ... s_{s+1}) s_s (s_{s+1}^-1 ... s_{t-1}^-1).
Word bkl_expansion(long long t, long long s, long long n);

Relation push_relation(const Relation& rel, const GeneratorMap& m);

/// Identity map on an alphabet.
GeneratorMap identity_map(const AlphabetRef& alphabet);

}  // namespace braidkit

#endif
