#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clifftwist/clidata.hpp"

namespace clifftwist {

struct ClauseCheck {
  std::string id;
  std::string label;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  Signature sig;
  std::vector<ClauseCheck> clauses;

  bool all_pass() const {
    for (const auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }
};

/// The ten clauses (i)-(x) relating G, G(f), T(f), K(f) and the spinor
/// spans, checked by exhaustive enumeration and exact rank computation.
/// Failures are report entries, never exceptions.
VerifyReport verify_main_theorem(const Signature& sig);

/// The two normal series G >= G(f) >= T(f) >= {+-1} >= {1} and
/// G >= G(f) >= K(f) >= {+-1} >= {1}.
VerifyReport normal_series_check(const Signature& sig);

/// Everything cmd-verify runs for one signature: the main theorem, the
/// normal series, the transversal counting identity, the order formulas,
/// a star-oracle sample and a dagger-law sample driven by `seed`.
VerifyReport verify_signature(const Signature& sig, std::uint64_t seed);

}  // namespace clifftwist
