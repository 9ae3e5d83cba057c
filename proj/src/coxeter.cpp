#include "artin/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <set>
#include <sstream>

namespace artin {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_spherical: return "NonSpherical";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::subset_not_spherical: return "SubsetNotSpherical";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unbound_name: return "UnboundName";
    case Errc::cyclic_binding: return "CyclicBinding";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::exponent_out_of_range: return "ExponentOutOfRange";
    case Errc::expansion_too_large: return "ExpansionTooLarge";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::no_realization: return "NoRealization";
    case Errc::no_compliant_labeling: return "NoCompliantLabeling";
    case Errc::bad_normal_form_text: return "BadNormalFormText";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace {

std::string join_labels(const std::vector<int>& labels) {
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ",";
    out << labels[i];
  }
  return out.str();
}

}  // namespace

CoxeterGraph CoxeterGraph::from_edges(std::vector<int> labels,
                                      std::vector<std::pair<int, int>> edges) {
  CoxeterGraph g;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    fail(Errc::invalid_argument, "duplicate vertex label");
  for (int v : labels)
    if (v < 1) fail(Errc::invalid_argument, "vertex labels must be positive");
  if (labels.size() > 32)
    fail(Errc::invalid_argument, "graphs with more than 32 vertices are not supported");
  g.labels_ = std::move(labels);

  for (auto& e : edges) {
    if (e.first == e.second)
      fail(Errc::invalid_argument, "self-loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::invalid_argument, "duplicate edge");
  g.adj_.assign(g.labels_.size(), 0);
  for (const auto& e : edges) {
    int a = g.index_of(e.first);
    int b = g.index_of(e.second);
    g.adj_[a] |= std::uint32_t(1) << b;
    g.adj_[b] |= std::uint32_t(1) << a;
  }
  g.edges_ = std::move(edges);
  return g;
}

bool CoxeterGraph::has_label(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

int CoxeterGraph::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    fail(Errc::index_out_of_range,
         "generator a" + std::to_string(label) + " is not a vertex of the graph");
  return static_cast<int>(it - labels_.begin());
}

int CoxeterGraph::label_of(int index) const {
  assert(index >= 0 && index < rank());
  return labels_[index];
}

bool CoxeterGraph::adjacent(int index_a, int index_b) const {
  assert(index_a >= 0 && index_a < rank() && index_b >= 0 && index_b < rank());
  return (adj_[index_a] >> index_b) & 1;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<int>& sub_labels) const {
  std::set<int> keep;
  for (int v : sub_labels) {
    if (!has_label(v))
      fail(Errc::index_out_of_range,
           "vertex " + std::to_string(v) + " is not in the graph");
    keep.insert(v);
  }
  std::vector<std::pair<int, int>> sub_edges;
  for (const auto& e : edges_)
    if (keep.count(e.first) && keep.count(e.second)) sub_edges.push_back(e);
  return from_edges(std::vector<int>(keep.begin(), keep.end()), std::move(sub_edges));
}

std::string CoxeterGraph::signature() const {
  std::ostringstream out;
  out << "v=" << join_labels(labels_) << ";e=";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out << ",";
    out << edges_[i].first << "-" << edges_[i].second;
  }
  return out.str();
}

CoxeterGraph CoxeterGraph::builtin(const std::string& name) {
  auto chain = [](int from, int to, std::vector<std::pair<int, int>>& edges) {
    for (int i = from; i < to; ++i) edges.emplace_back(i, i + 1);
  };
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E')) {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') { n = -1; break; }
      n = n * 10 + (name[i] - '0');
    }
    std::vector<int> labels;
    std::vector<std::pair<int, int>> edges;
    bool known = false;
    if (name[0] == 'A' && n >= 1 && n <= 9) {
      chain(1, n, edges);
      known = true;
    } else if (name[0] == 'D' && n >= 4 && n <= 9) {
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 3);
      chain(3, n, edges);
      known = true;
    } else if (name[0] == 'E' && n >= 6 && n <= 8) {
      chain(2, n, edges);
      edges.emplace_back(1, 4);
      known = true;
    }
    if (known) {
      for (int i = 1; i <= n; ++i) labels.push_back(i);
      return from_edges(std::move(labels), std::move(edges));
    }
  }
  fail(Errc::invalid_argument,
       "unknown graph type '" + name + "' (expected A1..A9, D4..D9, E6, E7 or E8)");
}

std::vector<std::string> CoxeterGraph::builtin_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 9; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 9; ++n) names.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) names.push_back("E" + std::to_string(n));
  return names;
}

CoxeterGraph CoxeterGraph::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (n < 0) {
      if (first != "vertices:")
        fail(Errc::invalid_argument,
             "graph file line " + std::to_string(line_no) + ": expected `vertices: n`");
      if (!(ls >> n) || n < 1)
        fail(Errc::invalid_argument,
             "graph file line " + std::to_string(line_no) + ": bad vertex count");
      std::string extra;
      if (ls >> extra)
        fail(Errc::invalid_argument,
             "graph file line " + std::to_string(line_no) + ": trailing text");
      continue;
    }
    int a = 0, b = 0;
    std::istringstream es(line);
    std::string extra;
    if (!(es >> a >> b) || (es >> extra))
      fail(Errc::invalid_argument,
           "graph file line " + std::to_string(line_no) + ": expected `i j`");
    if (a < 1 || a > n || b < 1 || b > n)
      fail(Errc::invalid_argument,
           "graph file line " + std::to_string(line_no) + ": vertex out of range");
    edges.emplace_back(a, b);
  }
  if (n < 0) fail(Errc::invalid_argument, "graph file: missing `vertices: n` header");
  std::vector<int> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(i);
  return from_edges(std::move(labels), std::move(edges));
}

CoxeterGraph CoxeterGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::invalid_argument, "cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

// ---------------------------------------------------------------------------
// ADE classification

std::vector<ComponentType> classify_ade(const CoxeterGraph& graph) {
  const int r = graph.rank();
  std::vector<int> comp(r, -1);
  std::vector<ComponentType> result;
  for (int start = 0; start < r; ++start) {
    if (comp[start] >= 0) continue;
    // collect the component
    std::vector<int> stack{start}, verts;
    comp[start] = start;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int u = 0; u < r; ++u)
        if (graph.adjacent(v, u) && comp[u] < 0) {
          comp[u] = start;
          stack.push_back(u);
        }
    }
    std::vector<int> labels;
    for (int v : verts) labels.push_back(graph.label_of(v));
    std::sort(labels.begin(), labels.end());
    const std::string where = "component {" + join_labels(labels) + "}";

    int edge_count = 0;
    std::vector<int> deg(verts.size(), 0);
    std::vector<int> local(r, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (graph.adjacent(verts[i], verts[j])) {
          ++edge_count;
          ++deg[i];
          ++deg[j];
        }
    if (edge_count != static_cast<int>(verts.size()) - 1)
      fail(Errc::non_spherical, where + " contains a cycle");
    int branch = -1;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (deg[i] > 3)
        fail(Errc::non_spherical, where + " has a vertex of degree " +
                                      std::to_string(deg[i]) + " (a" +
                                      std::to_string(graph.label_of(verts[i])) + ")");
      if (deg[i] == 3) {
        if (branch >= 0)
          fail(Errc::non_spherical, where + " has two branch vertices");
        branch = static_cast<int>(i);
      }
    }
    ComponentType ct;
    ct.vertices = labels;
    ct.rank = static_cast<int>(verts.size());
    if (branch < 0) {
      ct.family = 'A';
    } else {
      // walk the three arms from the branch vertex
      std::vector<int> arms;
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (!graph.adjacent(verts[branch], verts[j])) continue;
        int len = 0;
        int prev = verts[branch], cur = verts[j];
        while (true) {
          ++len;
          int next = -1;
          for (std::size_t k = 0; k < verts.size(); ++k)
            if (graph.adjacent(cur, verts[k]) && verts[k] != prev) next = verts[k];
          if (next < 0) break;
          prev = cur;
          cur = next;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      assert(arms.size() == 3);
      if (arms[0] == 1 && arms[1] == 1) {
        ct.family = 'D';
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        ct.family = 'E';
      } else {
        fail(Errc::non_spherical,
             where + " has arm pattern (" + std::to_string(arms[0]) + "," +
                 std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                 ") which is not spherical");
      }
    }
    result.push_back(std::move(ct));
  }
  std::sort(result.begin(), result.end(),
            [](const ComponentType& a, const ComponentType& b) {
              return a.vertices.front() < b.vertices.front();
            });
  return result;
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(CoxeterGraph graph) : graph_(std::move(graph)) {
  rank_ = graph_.rank();
  if (rank_ == 0) fail(Errc::invalid_argument, "empty graph");
  components_ = classify_ade(graph_);
  full_mask_ = rank_ == 32 ? ~std::uint32_t(0)
                           : ((std::uint32_t(1) << rank_) - 1);

  cartan_ = IntMat(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      cartan_.at(i, j) = i == j ? 2 : (graph_.adjacent(i, j) ? -1 : 0);

  // Reflection closure of the simple roots, positives only.
  std::set<std::vector<std::int32_t>> seen;
  std::vector<std::vector<std::int32_t>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<std::int32_t> e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto root = queue[q];
    for (int i = 0; i < rank_; ++i) {
      // s_i(root) = root - <root, alpha_i^v> alpha_i
      std::int32_t c = 0;
      for (int j = 0; j < rank_; ++j) c += cartan_.at(i, j) * root[j];
      auto image = root;
      image[i] -= c;
      if (root_is_negative(image)) continue;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  // simple roots first in index order, then lexicographic
  std::vector<std::vector<std::int32_t>> rest;
  for (auto& root : queue) {
    int weight = 0;
    for (auto c : root) weight += c;
    if (weight == 1) continue;  // simple
    rest.push_back(root);
  }
  std::sort(rest.begin(), rest.end());
  positive_roots_.reserve(queue.size());
  for (int i = 0; i < rank_; ++i) {
    std::vector<std::int32_t> e(rank_, 0);
    e[i] = 1;
    positive_roots_.push_back(std::move(e));
  }
  for (auto& root : rest) positive_roots_.push_back(std::move(root));

  // sanity: per-component positive root counts
#ifndef NDEBUG
  {
    std::size_t expected = 0;
    for (const auto& c : components_) {
      if (c.family == 'A') expected += std::size_t(c.rank) * (c.rank + 1) / 2;
      if (c.family == 'D') expected += std::size_t(c.rank) * (c.rank - 1);
      if (c.family == 'E') expected += c.rank == 6 ? 36 : (c.rank == 7 ? 63 : 120);
    }
    assert(positive_roots_.size() == expected);
  }
#endif

  // longest element: saturate right ascents, smallest index first
  CoxeterElement u = identity();
  int len = 0;
  while (true) {
    std::uint32_t desc = right_descents(u);
    std::uint32_t ascents = full_mask_ & ~desc;
    if (!ascents) break;
    int i = std::countr_zero(ascents);
    apply_simple_right(u, i);
    ++len;
  }
  assert(len == positive_count());
  w0_ = u;

  // diagram automorphism: alpha_{tau(i)} = -w0(alpha_i)
  tau_.assign(rank_, -1);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      bool match = true;
      for (int k = 0; k < rank_; ++k) {
        std::int32_t want = k == j ? -1 : 0;
        if (w0_.m.at(k, i) != want) { match = false; break; }
      }
      if (match) { tau_[i] = j; break; }
    }
    assert(tau_[i] >= 0);
    if (tau_[i] != i) tau_identity_ = false;
  }
}

bool RootSystem::root_is_negative(const std::vector<std::int32_t>& coords) const {
  for (auto c : coords)
    if (c != 0) return c < 0;
  return false;  // zero vector: caller never passes it
}

CoxeterElement RootSystem::identity() const {
  CoxeterElement u;
  u.m = IntMat::identity(rank_);
  u.mi = u.m;
  return u;
}

CoxeterElement RootSystem::simple(int index) const {
  if (index < 0 || index >= rank_)
    fail(Errc::index_out_of_range, "generator index out of range");
  CoxeterElement u = identity();
  apply_simple_right(u, index);
  return u;
}

void RootSystem::apply_simple_left(CoxeterElement& u, int index) const {
  assert(index >= 0 && index < rank_);
  // m <- S_i m : row i becomes -row_i + sum of adjacent rows
  for (int j = 0; j < rank_; ++j) {
    std::int32_t v = -u.m.at(index, j);
    std::uint32_t adj = graph_.adjacency_mask(index);
    while (adj) {
      int l = std::countr_zero(adj);
      adj &= adj - 1;
      v += u.m.at(l, j);
    }
    u.m.at(index, j) = v;
  }
  // mi <- mi S_i : column i flips into adjacent columns
  for (int k = 0; k < rank_; ++k) {
    std::int32_t t = u.mi.at(k, index);
    if (t == 0) continue;
    u.mi.at(k, index) = -t;
    std::uint32_t adj = graph_.adjacency_mask(index);
    while (adj) {
      int j = std::countr_zero(adj);
      adj &= adj - 1;
      u.mi.at(k, j) += t;
    }
  }
}

void RootSystem::apply_simple_right(CoxeterElement& u, int index) const {
  assert(index >= 0 && index < rank_);
  for (int k = 0; k < rank_; ++k) {
    std::int32_t t = u.m.at(k, index);
    if (t == 0) continue;
    u.m.at(k, index) = -t;
    std::uint32_t adj = graph_.adjacency_mask(index);
    while (adj) {
      int j = std::countr_zero(adj);
      adj &= adj - 1;
      u.m.at(k, j) += t;
    }
  }
  for (int j = 0; j < rank_; ++j) {
    std::int32_t v = -u.mi.at(index, j);
    std::uint32_t adj = graph_.adjacency_mask(index);
    while (adj) {
      int l = std::countr_zero(adj);
      adj &= adj - 1;
      v += u.mi.at(l, j);
    }
    u.mi.at(index, j) = v;
  }
}

CoxeterElement RootSystem::multiply(const CoxeterElement& a, const CoxeterElement& b) const {
  CoxeterElement r;
  r.m = mul(a.m, b.m);
  r.mi = mul(b.mi, a.mi);
  return r;
}

CoxeterElement RootSystem::inverse(const CoxeterElement& u) const {
  CoxeterElement r;
  r.m = u.mi;
  r.mi = u.m;
  return r;
}

CoxeterElement RootSystem::from_word(const std::vector<int>& indices) const {
  CoxeterElement u = identity();
  for (int i : indices) {
    if (i < 0 || i >= rank_)
      fail(Errc::index_out_of_range, "generator index out of range");
    apply_simple_right(u, i);
  }
  return u;
}

int RootSystem::length(const CoxeterElement& u) const {
  int count = 0;
  for (const auto& root : positive_roots_) {
    // sign of u * root: first nonzero coordinate of the image
    for (int i = 0; i < rank_; ++i) {
      std::int32_t v = 0;
      for (int j = 0; j < rank_; ++j) v += u.m.at(i, j) * root[j];
      if (v != 0) {
        if (v < 0) ++count;
        break;
      }
    }
  }
  return count;
}

std::uint32_t RootSystem::left_descents(const CoxeterElement& u) const {
  // i is a left descent iff u^{-1}(alpha_i) < 0: column i of mi
  std::uint32_t mask = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int k = 0; k < rank_; ++k) {
      std::int32_t v = u.mi.at(k, i);
      if (v != 0) {
        if (v < 0) mask |= std::uint32_t(1) << i;
        break;
      }
    }
  }
  return mask;
}

std::uint32_t RootSystem::right_descents(const CoxeterElement& u) const {
  std::uint32_t mask = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int k = 0; k < rank_; ++k) {
      std::int32_t v = u.m.at(k, i);
      if (v != 0) {
        if (v < 0) mask |= std::uint32_t(1) << i;
        break;
      }
    }
  }
  return mask;
}

std::vector<int> RootSystem::lex_word(const CoxeterElement& u) const {
  std::vector<int> word;
  CoxeterElement v = u;
  while (true) {
    std::uint32_t desc = left_descents(v);
    if (!desc) break;
    int i = std::countr_zero(desc);
    word.push_back(i);
    apply_simple_left(v, i);
  }
  assert(v.is_identity());
  return word;
}

std::uint32_t RootSystem::support(const CoxeterElement& u) const {
  std::uint32_t mask = 0;
  CoxeterElement v = u;
  while (true) {
    std::uint32_t desc = left_descents(v);
    if (!desc) break;
    int i = std::countr_zero(desc);
    mask |= std::uint32_t(1) << i;
    apply_simple_left(v, i);
  }
  return mask;
}

CoxeterElement RootSystem::tau(const CoxeterElement& u) const {
  return multiply(multiply(w0_, u), w0_);
}

CoxeterElement RootSystem::complement(const CoxeterElement& u) const {
  CoxeterElement r;
  r.m = mul(u.mi, w0_.m);
  r.mi = mul(w0_.m, u.m);  // w0 is an involution
  return r;
}

CoxeterElement RootSystem::meet_left(CoxeterElement a, CoxeterElement b) const {
  CoxeterElement d = identity();
  while (true) {
    std::uint32_t shared = left_descents(a) & left_descents(b);
    if (!shared) break;
    int i = std::countr_zero(shared);
    apply_simple_left(a, i);
    apply_simple_left(b, i);
    apply_simple_right(d, i);
  }
  return d;
}

}  // namespace artin
