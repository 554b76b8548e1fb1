#pragma once

#include <string>

#include "clifftwist/forms.hpp"

namespace clifftwist {

/// Symbolic classical-group descriptor of the automorphism group of a form.
/// `name` is the canonical ASCII rendering ("O(4)", "U(1,1)", "Sp(2)",
/// "UH(1,1)", "Sp(4,R)", "2O(2)", "GL(2,H)", ...). For the quaternionic
/// unitary groups the dimension-doubling alias used by Lounesto's tables is
/// carried alongside ("Sp(2,2)" for "UH(1,1)").
struct GroupName {
  std::string name;
  std::string lounesto_alias;
  bool nonstandard_conj = false;

  friend bool operator==(const GroupName&, const GroupName&) = default;
};

/// Names the automorphism group from exact Gram data: decision tree over the
/// K class, the detected left-slot conjugation and the (conjugate-)symmetry
/// of the matrix, with exact signature computation by congruence where the
/// name depends on it. Forms matching no branch report "unclassified(...)"
/// rather than guessing.
GroupName classify(const GramForm& g, const CliData& cd);

}  // namespace clifftwist
