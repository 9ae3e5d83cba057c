#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "artin/catalog.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/words.hpp"

using namespace artin;

TEST_CASE("catalog words have the documented letter counts") {
  CHECK(b_letters().size() == 9);
  CHECK(kappa_letters().size() == 24);
  CHECK(delta_letters().size() == 36);
  for (const Letter& l : b_letters()) CHECK(l.sign == +1);
  for (const Letter& l : kappa_letters()) CHECK(l.sign == +1);
  for (const Letter& l : delta_letters()) CHECK(l.sign == +1);
  // delta is six sweeps of the six generators
  CHECK(delta_letters()[0].label == 1);
  CHECK(delta_letters()[6].label == 1);

  Environment env = catalog_environment();
  CHECK(env.bindings().size() == 4);
  CHECK(env.find("b") != nullptr);
  CHECK(env.find("w") != nullptr);
  CHECK(env.find("kappa") != nullptr);
  CHECK(env.find("delta") != nullptr);
}

TEST_CASE("w expands to sixty letters of degree zero under both conventions") {
  Environment env = catalog_environment();
  for (Convention c : {Convention::conjugate_left, Convention::conjugate_right}) {
    GeneratorWord w = expand(w_expression(), env, c);
    CHECK(w.size() == 60);
    CHECK(word_degree(w) == 0);
  }
  // the catalog environment reproduces the standalone letter lists
  CHECK(expand(*env.find("b"), env) == b_letters());
  CHECK(expand(*env.find("kappa"), env) == kappa_letters());
  CHECK(expand(*env.find("delta"), env) == delta_letters());
  CHECK(expand(*env.find("w"), env) == expand(w_expression(), env));
}

TEST_CASE("candidate labelings cover the three shapes and their mirrors") {
  std::vector<Labeling> cands = candidate_labelings();
  REQUIRE(cands.size() == 6);
  std::vector<std::string> names;
  for (const auto& c : cands) names.push_back(c.name);
  CHECK(std::count(names.begin(), names.end(), "bourbaki") == 1);
  CHECK(std::count(names.begin(), names.end(), "bourbaki-mirror") == 1);
  CHECK(std::count(names.begin(), names.end(), "linear-branch-3") == 1);
  CHECK(std::count(names.begin(), names.end(), "linear-branch-3-mirror") == 1);
  CHECK(std::count(names.begin(), names.end(), "linear-branch-4") == 1);
  CHECK(std::count(names.begin(), names.end(), "linear-branch-4-mirror") == 1);
  for (const auto& c : cands) {
    CHECK(c.graph.rank() == 6);
    CHECK(c.graph.labels() == std::vector<int>{1, 2, 3, 4, 5, 6});
  }
}

TEST_CASE("labeling resolution singles out one compliant candidate") {
  LabelingResolution res = resolve_labeling();
  REQUIRE(res.matrix.size() == 6);
  REQUIRE(res.resolved.has_value());
  CHECK(res.resolved->name == "linear-branch-3-mirror");
  CHECK(res.convention == Convention::conjugate_left);

  // the resolved labeling is the standard one used for builtin E6
  CHECK(res.resolved->graph.edges() == CoxeterGraph::builtin("E6").edges());

  int passers = 0;
  for (const CandidateCheck& check : res.matrix) {
    if (check.passes()) ++passers;
    CAPTURE(check.labeling);
    if (check.labeling == "bourbaki") {
      CHECK(check.is_e6);
      CHECK(check.a1_commutes);
      CHECK_FALSE(check.b_support_ok);
    } else if (check.labeling == "linear-branch-3") {
      CHECK(check.is_e6);
      CHECK_FALSE(check.a1_commutes);
    } else if (check.labeling == "linear-branch-4") {
      CHECK_FALSE(check.is_e6);  // that shape is D6
    } else if (check.labeling == "bourbaki-mirror") {
      CHECK(check.is_e6);
      CHECK_FALSE(check.a1_commutes);
    } else if (check.labeling == "linear-branch-4-mirror") {
      CHECK_FALSE(check.is_e6);
    } else if (check.labeling == "linear-branch-3-mirror") {
      CHECK(check.is_e6);
      CHECK(check.swap_left);
      CHECK(check.swap_right);  // the swap is an involution: both conventions agree
      CHECK(check.swap_is_transposition);
      CHECK(check.a1_commutes);
      CHECK(check.b_support_ok);
      CHECK(check.passes());
    }
  }
  CHECK(passers == 1);

  std::string text = res.matrix_text();
  CHECK(text.find("linear-branch-3-mirror") != std::string::npos);
  CHECK(text.find("compliant") != std::string::npos);

  // resolved_labeling() agrees and is stable
  const Labeling& pinned = resolved_labeling();
  CHECK(pinned.name == res.resolved->name);
  CHECK(&resolved_labeling() == &pinned);
}

TEST_CASE("resolution with no compliant candidate reports the matrix") {
  // restrict to candidates known to fail
  std::vector<Labeling> bad;
  for (const Labeling& c : candidate_labelings())
    if (c.name == "bourbaki" || c.name == "linear-branch-4") bad.push_back(c);
  LabelingResolution res = resolve_labeling(bad);
  CHECK(res.matrix.size() == 2);
  CHECK_FALSE(res.resolved.has_value());
  CHECK(resolve_labeling({}).matrix.empty());
}

TEST_CASE("named elements bind to the resolved labeling") {
  const Labeling& lab = resolved_labeling();
  NamedElement b = make_b(lab);
  CHECK(b.symbol == "b");
  CHECK(b.word == b_letters());
  CHECK(b.labeling.name == lab.name);

  NamedElement w_left = make_w(lab, Convention::conjugate_left);
  NamedElement w_right = make_w(lab, Convention::conjugate_right);
  CHECK(w_left.symbol == "w");
  CHECK(w_left.word.size() == 60);
  CHECK(w_right.word.size() == 60);
  CHECK(w_left.word != w_right.word);
  CHECK(w_left.convention == Convention::conjugate_left);
  CHECK(w_right.convention == Convention::conjugate_right);

  CHECK(make_kappa(lab).word == kappa_letters());
  CHECK(make_delta(lab).word == delta_letters());

  // support of b stays inside {2..6}: vertex 1 never occurs
  std::set<int> support;
  for (const Letter& l : b.word) support.insert(l.label);
  CHECK(support.count(1) == 0);
  for (int l : support) CHECK((l >= 2 && l <= 6));
}

TEST_CASE("the resolved labeling satisfies the pinned identities") {
  const Labeling& lab = resolved_labeling();
  ArtinGroup group(lab.graph);
  GeneratorWord b = b_letters();

  auto conj = [&](const GeneratorWord& x) {
    // resolved convention is conjugate_left: b^-1 x b
    return concat(concat(inverse_word(b), x), b);
  };
  GeneratorWord a2 = positive_word({2});
  GeneratorWord a5 = positive_word({5});
  CHECK(group.equal(conj(a2), a5));
  CHECK(group.equal(conj(a5), a2));
  // a1 commutes with a2 and a5
  for (const GeneratorWord& x : {a2, a5})
    CHECK(group.equal(concat(positive_word({1}), x), concat(x, positive_word({1}))));
  // delta really is the Garside element
  CHECK(group.normalize(delta_letters()) == group.delta(1));
}
