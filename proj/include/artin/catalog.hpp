#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/garside.hpp"
#include "artin/words.hpp"

namespace artin {

/// A named vertex labeling of the E6 diagram (vertices 1..6).  Candidates
/// are allowed to be non-E6 graphs; the resolution procedure reports that.
struct Labeling {
  std::string name;
  CoxeterGraph graph;
};

/// A named word of the catalog, bound to the labeling it was built for.
struct NamedElement {
  std::string symbol;  // "b", "w", "kappa", "delta"
  GeneratorWord word;
  Labeling labeling;
  Convention convention = Convention::conjugate_left;
};

/// Per-candidate outcome of the three resolution checks.
struct CandidateCheck {
  std::string labeling;
  std::vector<std::pair<int, int>> edges;
  bool is_e6 = false;
  bool swap_left = false;        // {b^-1 a2 b, b^-1 a5 b} = {a2, a5} as a set
  bool swap_right = false;       // same under the opposite convention
  bool swap_is_transposition = false;  // the set equality is an actual swap
  bool a1_commutes = false;      // a1 commutes with a2 and with a5
  bool b_support_ok = false;     // induced {2..6} is A5 and support(b) inside

  bool passes() const {
    return is_e6 && (swap_left || swap_right) && a1_commutes && b_support_ok;
  }
};

struct LabelingResolution {
  std::vector<CandidateCheck> matrix;
  std::optional<Labeling> resolved;
  Convention convention = Convention::conjugate_left;

  /// Human-readable compliance matrix, one line per candidate.
  std::string matrix_text() const;
};

/// The candidate E6 labelings, in resolution order: Bourbaki (chain
/// 1-3-4-5-6 with 2 on 4), the two linear chains 1-2-3-4-5 with 6 attached
/// to 3 resp. 4, and the mirror image (i -> 7-i) of each.
std::vector<Labeling> candidate_labelings();

/// Evaluate every candidate against the identities that pin the labeling:
/// (i) conjugation by b swaps a2 and a5 as a set (both conjugation
/// conventions tried), (ii) a1 commutes with a2 and a5, (iii) the induced
/// graph on {2..6} is A5 and contains the support of b.  Returns the full
/// compliance matrix and the first fully compliant candidate, if any.
LabelingResolution resolve_labeling(const std::vector<Labeling>& candidates);
LabelingResolution resolve_labeling();

/// First compliant labeling of the default candidates; throws
/// no_compliant_labeling (with the matrix in the message) if none passes.
const Labeling& resolved_labeling();

GeneratorWord b_letters();
GeneratorWord kappa_letters();
GeneratorWord delta_letters();
/// Definition of w as an expression over the binding b; expansion has 60
/// letters.
ExprPtr w_expression();
Environment catalog_environment();

NamedElement make_b(const Labeling& labeling);
NamedElement make_w(const Labeling& labeling,
                    Convention convention = Convention::conjugate_left);
NamedElement make_kappa(const Labeling& labeling);
NamedElement make_delta(const Labeling& labeling);

}  // namespace artin
