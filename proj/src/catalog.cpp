#include "artin/catalog.hpp"

#include <sstream>

#include "artin/errors.hpp"

namespace artin {

namespace {

GeneratorWord positive_letters(std::initializer_list<int> labels) {
  GeneratorWord w;
  w.reserve(labels.size());
  for (int l : labels) w.push_back(Letter{l, +1});
  return w;
}

}  // namespace

GeneratorWord b_letters() { return positive_letters({4, 5, 3, 4, 2, 6, 5, 3, 4}); }

GeneratorWord kappa_letters() {
  return positive_letters({4, 1, 3, 2, 4, 5, 4, 1, 3, 2, 6, 5,
                           5, 6, 2, 3, 1, 4, 5, 4, 2, 3, 1, 4});
}

GeneratorWord delta_letters() {
  GeneratorWord w;
  for (int rep = 0; rep < 6; ++rep)
    for (int l : {1, 3, 5, 2, 4, 6}) w.push_back(Letter{l, +1});
  return w;
}

ExprPtr w_expression() {
  static const ExprPtr expr =
      parse_word("a1 * a1^b * a1 * (a1^-1)^b * a1^-1 * (a1^-1)^b");
  return expr;
}

Environment catalog_environment() {
  Environment env;
  ExprPtr b = WordExpr::product({WordExpr::generator(4), WordExpr::generator(5),
                                 WordExpr::generator(3), WordExpr::generator(4),
                                 WordExpr::generator(2), WordExpr::generator(6),
                                 WordExpr::generator(5), WordExpr::generator(3),
                                 WordExpr::generator(4)});
  std::vector<ExprPtr> kappa_parts;
  for (const Letter& l : kappa_letters()) kappa_parts.push_back(WordExpr::generator(l.label));
  ExprPtr kappa = WordExpr::product(std::move(kappa_parts));
  ExprPtr delta = WordExpr::power(parse_word("a1 * a3 * a5 * a2 * a4 * a6"), 6);
  env.bind("b", std::move(b));
  env.bind("w", w_expression());
  env.bind("kappa", std::move(kappa));
  env.bind("delta", std::move(delta));
  return env;
}

std::vector<Labeling> candidate_labelings() {
  using Edges = std::vector<std::pair<int, int>>;
  auto mirror = [](const Edges& edges) {
    Edges out;
    for (auto [a, b] : edges) out.emplace_back(7 - a, 7 - b);
    return out;
  };
  const Edges bourbaki = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  const Edges chain_branch_3 = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}};
  const Edges chain_branch_4 = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}};
  std::vector<std::pair<std::string, Edges>> raw = {
      {"bourbaki", bourbaki},
      {"linear-branch-3", chain_branch_3},
      {"linear-branch-4", chain_branch_4},
      {"bourbaki-mirror", mirror(bourbaki)},
      {"linear-branch-3-mirror", mirror(chain_branch_3)},
      {"linear-branch-4-mirror", mirror(chain_branch_4)},
  };
  std::vector<Labeling> out;
  for (auto& [name, edges] : raw)
    out.push_back(Labeling{name, CoxeterGraph::from_edges({1, 2, 3, 4, 5, 6}, edges)});
  return out;
}

namespace {

bool graph_is_e6(const CoxeterGraph& graph) {
  try {
    auto components = classify_ade(graph);
    return components.size() == 1 && components[0].family == 'E' &&
           components[0].rank == 6;
  } catch (const Error&) {
    return false;
  }
}

bool induced_25_is_a5(const CoxeterGraph& graph) {
  try {
    auto sub = graph.induced({2, 3, 4, 5, 6});
    auto components = classify_ade(sub);
    return components.size() == 1 && components[0].family == 'A' &&
           components[0].rank == 5;
  } catch (const Error&) {
    return false;
  }
}

struct SwapOutcome {
  bool holds = false;          // {b^-1 a2 b, b^-1 a5 b} = {a2, a5} as a set
  bool transposition = false;  // and the two really trade places
};

SwapOutcome swap_under(const ArtinGroup& group, const GeneratorWord& b_word,
                       Convention convention) {
  GeneratorWord conjugator = b_word;
  if (convention == Convention::conjugate_right) conjugator = inverse_word(b_word);
  GarsideElement b = group.normalize(conjugator);
  GarsideElement a2 = group.normalize({Letter{2, +1}});
  GarsideElement a5 = group.normalize({Letter{5, +1}});
  GarsideElement c2 = group.conjugate(a2, b);  // b^-1 a2 b
  GarsideElement c5 = group.conjugate(a5, b);
  SwapOutcome out;
  bool swapped = c2 == a5 && c5 == a2;
  bool fixed = c2 == a2 && c5 == a5;
  out.holds = swapped || fixed;
  out.transposition = swapped;
  return out;
}

CandidateCheck evaluate_candidate(const Labeling& labeling) {
  CandidateCheck check;
  check.labeling = labeling.name;
  check.edges = labeling.graph.edges();
  check.is_e6 = graph_is_e6(labeling.graph);
  if (!check.is_e6) return check;  // the engine needs a spherical type

  ArtinGroup group(labeling.graph);
  GeneratorWord b_word = b_letters();

  SwapOutcome left = swap_under(group, b_word, Convention::conjugate_left);
  SwapOutcome right = swap_under(group, b_word, Convention::conjugate_right);
  check.swap_left = left.holds;
  check.swap_right = right.holds;
  check.swap_is_transposition =
      (left.holds && left.transposition) || (right.holds && right.transposition);

  auto commutes = [&group](int x, int y) {
    GarsideElement gx = group.normalize({Letter{x, +1}});
    GarsideElement gy = group.normalize({Letter{y, +1}});
    return group.multiply(gx, gy) == group.multiply(gy, gx);
  };
  check.a1_commutes = commutes(1, 2) && commutes(1, 5);

  bool support_inside = true;
  for (const Letter& l : b_word)
    if (l.label == 1) support_inside = false;
  check.b_support_ok = support_inside && induced_25_is_a5(labeling.graph);
  return check;
}

}  // namespace

LabelingResolution resolve_labeling(const std::vector<Labeling>& candidates) {
  LabelingResolution resolution;
  for (const Labeling& candidate : candidates) {
    CandidateCheck check = evaluate_candidate(candidate);
    bool pass = check.passes();
    bool first = pass && !resolution.resolved.has_value();
    if (first) {
      resolution.resolved = candidate;
      resolution.convention = check.swap_left ? Convention::conjugate_left
                                              : Convention::conjugate_right;
    }
    resolution.matrix.push_back(std::move(check));
  }
  return resolution;
}

LabelingResolution resolve_labeling() { return resolve_labeling(candidate_labelings()); }

std::string LabelingResolution::matrix_text() const {
  std::ostringstream out;
  auto mark = [](bool v) { return v ? "yes" : "no"; };
  for (const CandidateCheck& c : matrix) {
    out << c.labeling << ": edges {";
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      if (i) out << ", ";
      out << c.edges[i].first << "-" << c.edges[i].second;
    }
    out << "} e6=" << mark(c.is_e6) << " swap-left=" << mark(c.swap_left)
        << " swap-right=" << mark(c.swap_right)
        << " transposition=" << mark(c.swap_is_transposition)
        << " a1-commutes=" << mark(c.a1_commutes)
        << " b-support=" << mark(c.b_support_ok)
        << " => " << (c.passes() ? "compliant" : "rejected") << "\n";
  }
  if (resolved)
    out << "resolved: " << resolved->name << " with " << convention_name(convention)
        << "\n";
  else
    out << "resolved: none\n";
  return out.str();
}

const Labeling& resolved_labeling() {
  static const Labeling labeling = [] {
    LabelingResolution resolution = resolve_labeling();
    if (!resolution.resolved)
      fail(Errc::no_compliant_labeling,
           "no candidate labeling satisfies the defining identities\n" +
               resolution.matrix_text());
    return *resolution.resolved;
  }();
  return labeling;
}

NamedElement make_b(const Labeling& labeling) {
  return NamedElement{"b", b_letters(), labeling, Convention::conjugate_left};
}

NamedElement make_kappa(const Labeling& labeling) {
  return NamedElement{"kappa", kappa_letters(), labeling, Convention::conjugate_left};
}

NamedElement make_delta(const Labeling& labeling) {
  return NamedElement{"delta", delta_letters(), labeling, Convention::conjugate_left};
}

NamedElement make_w(const Labeling& labeling, Convention convention) {
  Environment env;
  std::vector<ExprPtr> parts;
  for (const Letter& l : b_letters()) parts.push_back(WordExpr::generator(l.label));
  env.bind("b", WordExpr::product(std::move(parts)));
  GeneratorWord word = expand(w_expression(), env, convention);
  return NamedElement{"w", std::move(word), labeling, convention};
}

}  // namespace artin
