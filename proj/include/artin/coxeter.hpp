#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "artin/errors.hpp"
#include "artin/matrix.hpp"

namespace artin {

/// Simply-laced defining graph: an edge means the braid relation aba = bab
/// (m = 3), a non-edge means commutation (m = 2).  Vertices carry positive
/// integer labels; internally they are indexed 0..rank-1 in ascending label
/// order.  Rank is capped at 32 so descent/support sets fit in a word.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;

  static CoxeterGraph from_edges(std::vector<int> labels,
                                 std::vector<std::pair<int, int>> edges);
  /// Built-in names: A1..A9, D4..D9, E6, E7, E8.  D_n forks at vertex 3
  /// (edges 1-3, 2-3, then chain 3-4-...-n); E_n is the chain 2-3-...-n with
  /// vertex 1 attached to vertex 4.
  static CoxeterGraph builtin(const std::string& name);
  static std::vector<std::string> builtin_names();
  /// Text format: header `vertices: n`, then one `i j` line per edge
  /// (1-based labels).  Blank lines and `#` comments are allowed.
  static CoxeterGraph parse_text(const std::string& text);
  static CoxeterGraph load_file(const std::string& path);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_label(int label) const;
  int index_of(int label) const;  // throws index_out_of_range
  int label_of(int index) const;
  bool adjacent(int index_a, int index_b) const;
  std::uint32_t adjacency_mask(int index) const { return adj_[index]; }
  /// Induced subgraph on a subset of labels; the labels are preserved.
  CoxeterGraph induced(const std::vector<int>& sub_labels) const;
  /// Canonical one-line description; equal strings iff equal labeled graphs.
  std::string signature() const;

 private:
  std::vector<int> labels_;                    // ascending
  std::vector<std::pair<int, int>> edges_;     // label pairs a < b, sorted
  std::vector<std::uint32_t> adj_;             // index-based adjacency masks
};

/// One connected component of an ADE classification.
struct ComponentType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  std::vector<int> vertices;  // labels, ascending
  std::string name() const { return family + std::to_string(rank); }
};

/// Classify the graph into spherical simply-laced components A_n, D_n, E6,
/// E7, E8.  Throws Errc::non_spherical describing the offending component
/// (cycle, high-degree vertex, second branch, or non-spherical arm pattern).
std::vector<ComponentType> classify_ade(const CoxeterGraph& graph);

/// Element of the finite Coxeter group W(graph), stored as the exact integer
/// matrix of its action on the root lattice (columns are images of the simple
/// roots) together with its inverse.  The inverse is carried because descent
/// computations need u^{-1} constantly; it is redundant for equality.
struct CoxeterElement {
  IntMat m, mi;

  bool operator==(const CoxeterElement& other) const { return m == other.m; }
  bool is_identity() const { return m.is_identity(); }
};

/// Root system of a validated ADE graph: positive roots in simple-root
/// coordinates, longest element w0, and the diagram automorphism induced by
/// conjugation with w0.  Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(CoxeterGraph graph);

  const CoxeterGraph& graph() const { return graph_; }
  int rank() const { return rank_; }
  const std::vector<ComponentType>& components() const { return components_; }
  const IntMat& cartan() const { return cartan_; }
  /// Simple roots first (in index order), then the remaining positive roots
  /// in lexicographic coordinate order.
  const std::vector<std::vector<std::int32_t>>& positive_roots() const {
    return positive_roots_;
  }
  int positive_count() const { return static_cast<int>(positive_roots_.size()); }
  std::uint32_t full_mask() const { return full_mask_; }

  CoxeterElement identity() const;
  CoxeterElement simple(int index) const;
  const CoxeterElement& longest() const { return w0_; }
  /// Index permutation i -> tau(i) with w0 * s_i * w0 = s_tau(i).
  int tau_index(int index) const { return tau_[index]; }
  bool tau_is_identity() const { return tau_identity_; }

  void apply_simple_left(CoxeterElement& u, int index) const;   // u <- s_i u
  void apply_simple_right(CoxeterElement& u, int index) const;  // u <- u s_i
  CoxeterElement multiply(const CoxeterElement& a, const CoxeterElement& b) const;
  CoxeterElement inverse(const CoxeterElement& u) const;
  CoxeterElement from_word(const std::vector<int>& indices) const;

  int length(const CoxeterElement& u) const;  // inversion count
  std::uint32_t left_descents(const CoxeterElement& u) const;
  std::uint32_t right_descents(const CoxeterElement& u) const;
  /// Lexicographically smallest reduced word, as generator indices.
  std::vector<int> lex_word(const CoxeterElement& u) const;
  /// Union of letters over reduced words (well-defined), as an index mask.
  std::uint32_t support(const CoxeterElement& u) const;

  CoxeterElement tau(const CoxeterElement& u) const;         // w0 u w0
  CoxeterElement complement(const CoxeterElement& u) const;  // u^{-1} w0
  /// Greatest common left-divisor in the prefix order on W, computed by
  /// greedily stripping the smallest shared left descent.
  CoxeterElement meet_left(CoxeterElement a, CoxeterElement b) const;

 private:
  bool root_is_negative(const std::vector<std::int32_t>& coords) const;

  CoxeterGraph graph_;
  int rank_ = 0;
  std::vector<ComponentType> components_;
  IntMat cartan_;
  std::vector<std::vector<std::int32_t>> positive_roots_;
  CoxeterElement w0_;
  std::vector<int> tau_;
  bool tau_identity_ = true;
  std::uint32_t full_mask_ = 0;
};

}  // namespace artin
