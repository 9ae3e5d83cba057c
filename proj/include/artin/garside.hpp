#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "artin/coxeter.hpp"

namespace artin {

/// One letter of a word in the standard generators: a vertex label and an
/// exponent +1 or -1.
struct Letter {
  int label = 0;
  int sign = +1;

  bool operator==(const Letter&) const = default;
};

using GeneratorWord = std::vector<Letter>;

GeneratorWord inverse_word(const GeneratorWord& word);
GeneratorWord concat(const GeneratorWord& x, const GeneratorWord& y);
/// Exponent sum; a homomorphism to Z because all defining relations are
/// length-balanced.
long long word_degree(const GeneratorWord& word);
/// Positive word from a label sequence.
GeneratorWord positive_word(const std::vector<int>& labels);
/// Word-language rendering, e.g. "a1 * a2^-1"; the empty word prints "eps".
std::string word_to_string(const GeneratorWord& word);

/// Left normal form Delta^k s_1 ... s_n of an Artin group element.  Factors
/// are simple elements (identified with W-elements), none equal to identity
/// or to Delta, and every adjacent pair is left-weighted.  inf = k,
/// sup = k + n.  Instances are produced and consumed by ArtinGroup and are
/// immutable values tagged with their graph's signature.
struct GarsideElement {
  long long delta_power = 0;
  std::vector<CoxeterElement> factors;
  std::string graph_signature;

  long long inf() const { return delta_power; }
  long long sup() const { return delta_power + static_cast<long long>(factors.size()); }
  long long canonical_length() const { return static_cast<long long>(factors.size()); }
  bool is_trivial() const { return delta_power == 0 && factors.empty(); }

  bool operator==(const GarsideElement& other) const {
    return delta_power == other.delta_power && factors == other.factors &&
           graph_signature == other.graph_signature;
  }
};

/// The computational engine for one Artin group A(graph) of spherical
/// simply-laced type: normal forms, word problem, degree, absorption,
/// standard-parabolic membership, center.  All operations are pure; the
/// engine is safe for concurrent use after construction.
class ArtinGroup {
 public:
  explicit ArtinGroup(CoxeterGraph graph);

  const CoxeterGraph& graph() const { return roots_->graph(); }
  const RootSystem& roots() const { return *roots_; }
  int rank() const { return roots_->rank(); }
  const std::string& signature() const { return signature_; }

  /// Canonical left normal form.  Inverse letters are eliminated through
  /// a_i^-1 = Delta^-1 * (Delta a_i^-1), the Delta^-1's are moved to the
  /// front through the diagram automorphism, and the positive factor list is
  /// left-weighted by local sliding passes until stable.
  GarsideElement normalize(const GeneratorWord& word) const;

  GarsideElement identity_element() const;
  GarsideElement delta(long long power = 1) const;
  GarsideElement from_simple(const CoxeterElement& u) const;

  GarsideElement multiply(const GarsideElement& x, const GarsideElement& y) const;
  GarsideElement inverse(const GarsideElement& x) const;
  GarsideElement power(const GarsideElement& x, long long e) const;
  GarsideElement conjugate(const GarsideElement& x, const GarsideElement& g) const;  // g^-1 x g

  bool equal(const GeneratorWord& x, const GeneratorWord& y) const;
  bool is_trivial(const GeneratorWord& x) const;
  long long degree(const GeneratorWord& word) const;
  long long element_degree(const GarsideElement& x) const;

  /// x absorbs y: (sup(y) == 0 or inf(y) == 0) and sup(xy) == sup(x) and
  /// inf(xy) == inf(x).
  bool absorbs(const GeneratorWord& x, const GeneratorWord& y) const;
  bool absorbs(const GarsideElement& x, const GarsideElement& y) const;

  /// Membership in the standard parabolic subgroup on the given generator
  /// labels, decided by writing x = p^-1 q with p, q positive and coprime
  /// (no common left divisor) and testing letter support of their normal
  /// forms.  Throws subset_not_spherical if the induced subgraph is not ADE.
  bool in_standard_parabolic(const GeneratorWord& x, const std::vector<int>& labels) const;

  /// Smallest c >= 1 with Delta^c central, decided by the word problem.
  int center_exponent() const;
  bool mod_center_trivial(const GarsideElement& x) const;
  bool mod_center_equal(const GeneratorWord& x, const GeneratorWord& y) const;
  bool mod_center_equal(const GarsideElement& x, const GarsideElement& y) const;

  /// Serialization `D^k | w1 | w2 | ...`: each factor as its smallest
  /// lexicographic reduced word, letters as space-separated labels.  The
  /// identity prints as `D^0 |`.  Round-trips exactly.
  std::string to_text(const GarsideElement& x) const;
  GarsideElement from_text(const std::string& text) const;

  /// Full structural validation of the normal-form invariants.
  bool is_left_weighted(const GarsideElement& x) const;

  /// Coprime decomposition x = p^-1 q with p, q positive.
  std::pair<GarsideElement, GarsideElement> np_form(const GarsideElement& x) const;
  /// Letter support of a positive element (union over normal-form factors),
  /// as vertex labels.
  std::vector<int> support_labels(const GarsideElement& positive) const;

 private:
  std::uint32_t support_mask(const GarsideElement& positive) const;
  GarsideElement make_element(long long delta_power, std::vector<CoxeterElement> factors) const;
  /// Left-weight a raw factor list (entries may be identity or Delta) and
  /// fold leading Deltas into the power.
  GarsideElement weight_factors(long long delta_power, std::vector<CoxeterElement> factors) const;
  void check_same_graph(const GarsideElement& x) const;
  GarsideElement gcd_positive(GarsideElement u, GarsideElement v) const;
  CoxeterElement head(const GarsideElement& positive) const;
  GarsideElement strip_left_simple(const GarsideElement& positive, const CoxeterElement& d) const;

  std::shared_ptr<const RootSystem> roots_;
  std::string signature_;
  int center_exponent_ = 0;  // decided at construction by conjugation tests
};

}  // namespace artin
