#ifndef BRAIDKIT_VERIFY_HPP
#define BRAIDKIT_VERIFY_HPP

#include "braidkit/presentation.hpp"

namespace braidkit {

struct NoOracle : Error {
  using Error::Error;
};

enum class CheckKind {
  soundness,
  quotient_order,
  parabolic_index,
  roundtrip,
  proof_steps,
  abelianization,
  structural,
};

const char* check_kind_name(CheckKind k);

enum class Verdict { pass, fail, skip };

const char* verdict_name(Verdict v);

struct CheckSpec {
  std::string id;
  std::string family;  // family name, or "" for cross-family checks
  Params params;
  CheckKind kind = CheckKind::soundness;
};

struct CheckResult {
  CheckSpec spec;
  Verdict verdict = Verdict::skip;
  std::string expected;
  std::string observed;
  long long millis = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::fail) return false;
    return true;
  }
  void merge(VerificationReport&& other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
};

/// Stable JSON per the report schema; only the millis fields vary between
/// runs on identical inputs.
std::string report_json(const VerificationReport& report);

/// Relations of the family's reduced presentation, pushed to canonical
/// generators and compared in the family's equality oracle.  Families
/// without an oracle yield skip verdicts.
VerificationReport verify_soundness(FamilyId family, const Params& params);

/// Enumerates the finite (torsion) quotient and compares with the expected
/// order; typeE8 is checked through its parabolic index instead.
VerificationReport verify_quotient_orders(FamilyId family, const Params& params);

/// canonical -> reduced -> canonical round-trip of every canonical generator,
/// compared in the family oracle.
VerificationReport verify_roundtrip(FamilyId family, long long n);

/// The computational steps of the singular-braid reduction argument, replayed
/// in the group ring of Br_n.
VerificationReport verify_proof_steps(int n);

/// Band-generator relations after expansion to canonical generators, plus the
/// structural exclusion of pairs failing the sign condition.
VerificationReport verify_bkl(int n);

/// Relation-multiset comparison of complex_e_e_r(e=2,r) against
/// typeD_reduced(n=r) under the renaming t2->s1, t->s, t2p->r.
VerificationReport verify_structural_coincidence(long long r);

/// Randomized SB_2 structure suite: desingularized sigma/x powers commute and
/// separate exponent pairs.
VerificationReport verify_sb2(int samples, unsigned seed);

/// Garside normal form versus the Artin action on the free group: exhaustive
/// over short Br_3 words, randomized over Br_4..Br_6.
VerificationReport verify_oracle_agreement(int random_pairs, unsigned seed);

/// The full paper-verification suite (the acceptance checks, in order).
VerificationReport run_paper_suite();

}  // namespace braidkit

#endif
