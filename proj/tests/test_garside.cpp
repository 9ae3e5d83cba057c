#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "artin/coxeter.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"

using namespace artin;

namespace {

GeneratorWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> label_dist(1, rank);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  GeneratorWord w;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    w.push_back({label_dist(rng), sign_dist(rng) ? +1 : -1});
  return w;
}

}  // namespace

TEST_CASE("word helpers") {
  GeneratorWord w = {{1, +1}, {2, -1}};
  CHECK(inverse_word(w) == GeneratorWord{{2, +1}, {1, -1}});
  CHECK(concat(w, inverse_word(w)).size() == 4);
  CHECK(word_degree(w) == 0);
  CHECK(word_degree(positive_word({1, 2, 1})) == 3);
  CHECK(word_to_string(w) == "a1 * a2^-1");
  CHECK(word_to_string({}) == "eps");
}

TEST_CASE("A2 reference normal forms") {
  ArtinGroup g(CoxeterGraph::builtin("A2"));

  CHECK(g.to_text(g.normalize({})) == "D^0 |");
  CHECK(g.to_text(g.normalize({{1, -1}})) == "D^-1 | 1 2");
  CHECK(g.to_text(g.normalize({{2, -1}, {1, -1}})) == "D^-1 | 2");
  CHECK(g.to_text(g.normalize(positive_word({1, 1}))) == "D^0 | 1 | 1");
  CHECK(g.to_text(g.normalize(positive_word({1, 2, 1}))) == "D^1 |");
  CHECK(g.to_text(g.normalize(positive_word({2, 1, 2}))) == "D^1 |");
  CHECK(g.to_text(g.delta(1)) == "D^1 |");
  CHECK(g.to_text(g.identity_element()) == "D^0 |");

  GarsideElement x = g.normalize({{1, -1}});
  CHECK(x.inf() == -1);
  CHECK(x.sup() == 0);
  CHECK(x.canonical_length() == 1);
  CHECK_FALSE(x.is_trivial());
  CHECK(g.normalize({}).is_trivial());
}

TEST_CASE("defining relations hold and non-relations do not") {
  ArtinGroup a3(CoxeterGraph::builtin("A3"));
  CHECK(a3.equal(positive_word({1, 2, 1}), positive_word({2, 1, 2})));
  CHECK(a3.equal(positive_word({2, 3, 2}), positive_word({3, 2, 3})));
  CHECK(a3.equal(positive_word({1, 3}), positive_word({3, 1})));
  CHECK_FALSE(a3.equal(positive_word({1, 2}), positive_word({2, 1})));
  CHECK_FALSE(a3.equal(positive_word({1}), positive_word({2})));
  CHECK(a3.equal({{1, +1}, {2, +1}, {2, -1}}, positive_word({1})));
  CHECK(a3.is_trivial({{1, +1}, {1, -1}}));
  CHECK_FALSE(a3.is_trivial(positive_word({1})));
}

TEST_CASE("normal-form arithmetic agrees with the word level") {
  // one deterministic sweep per group type
  for (const char* type : {"A2", "A3", "D4"}) {
    CAPTURE(type);
    ArtinGroup g(CoxeterGraph::builtin(type));
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
      GeneratorWord u = random_word(rng, g.rank(), 10);
      GeneratorWord v = random_word(rng, g.rank(), 10);
      GarsideElement xu = g.normalize(u);
      GarsideElement xv = g.normalize(v);

      CHECK(g.is_left_weighted(xu));
      CHECK(g.element_degree(xu) == word_degree(u));
      CHECK(g.multiply(xu, xv) == g.normalize(concat(u, v)));
      CHECK(g.multiply(xu, g.inverse(xu)) == g.identity_element());
      CHECK(g.normalize(concat(u, inverse_word(u))).is_trivial());

      // serialization round-trip is exact
      CHECK(g.from_text(g.to_text(xu)) == xu);

      // conjugate(x, c) is c^-1 x c
      GeneratorWord c = random_word(rng, g.rank(), 6);
      CHECK(g.conjugate(xu, g.normalize(c)) ==
            g.normalize(concat(concat(inverse_word(c), u), c)));
    }

    // powers against repeated multiplication
    std::mt19937 rng2(7);
    GeneratorWord u = random_word(rng2, g.rank(), 8);
    GarsideElement x = g.normalize(u);
    GarsideElement acc = g.identity_element();
    for (int e = 0; e <= 5; ++e) {
      CHECK(g.power(x, e) == acc);
      CHECK(g.power(x, -e) == g.inverse(acc));
      acc = g.multiply(acc, x);
    }
  }
}

TEST_CASE("delta powers and degree") {
  ArtinGroup a3(CoxeterGraph::builtin("A3"));
  CHECK(a3.delta(0).is_trivial());
  CHECK(a3.multiply(a3.delta(2), a3.delta(-2)).is_trivial());
  CHECK(a3.delta(3) == a3.power(a3.delta(1), 3));
  // deg(Delta) = number of positive roots
  CHECK(a3.element_degree(a3.delta(1)) == 6);
  CHECK(a3.element_degree(a3.delta(-2)) == -12);
  CHECK(a3.degree(positive_word({1, 2, 1, 3, 2, 1})) == 6);
}

TEST_CASE("absorption") {
  ArtinGroup a3(CoxeterGraph::builtin("A3"));
  // sigma1^n sigma3^n normalizes to n copies of the simple element s1 s3
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    std::vector<int> labels;
    for (int i = 0; i < n; ++i) labels.push_back(1);
    for (int i = 0; i < n; ++i) labels.push_back(3);
    GarsideElement x = a3.normalize(positive_word(labels));
    CHECK(x.inf() == 0);
    CHECK(x.canonical_length() == n);
    for (const CoxeterElement& f : x.factors)
      CHECK(f == a3.roots().from_word({0, 2}));

    std::vector<int> ones(n, 1), threes(n, 3);
    CHECK(a3.absorbs(positive_word(ones), positive_word(threes)));
  }
  // a1 * a2 still fits in one permutation factor, so even adjacent letters
  // absorb; squares of adjacent generators genuinely grow the normal form
  CHECK(a3.absorbs(positive_word({1}), positive_word({2})));
  CHECK_FALSE(a3.absorbs(positive_word({1}), positive_word({1})));
  CHECK_FALSE(a3.absorbs(positive_word({1, 1}), positive_word({2, 2})));
  // y with inf != 0 and sup != 0 is never absorbed
  CHECK_FALSE(a3.absorbs(positive_word({1}), {{1, +1}, {2, -1}}));
}

TEST_CASE("np form is a coprime positive decomposition") {
  ArtinGroup a3(CoxeterGraph::builtin("A3"));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorWord u = random_word(rng, a3.rank(), 10);
    GarsideElement x = a3.normalize(u);
    auto [p, q] = a3.np_form(x);
    CHECK(p.inf() >= 0);
    CHECK(q.inf() >= 0);
    CHECK(a3.multiply(a3.inverse(p), q) == x);
    // coprime: no generator left-divides both p and q
    for (int label : a3.graph().labels()) {
      GarsideElement s = a3.normalize(positive_word({label}));
      bool divides_p = a3.multiply(a3.inverse(s), p).inf() >= 0;
      bool divides_q = a3.multiply(a3.inverse(s), q).inf() >= 0;
      bool divides_both = divides_p && divides_q;
      CHECK_FALSE(divides_both);
    }
  }
}

TEST_CASE("standard parabolic membership") {
  ArtinGroup a3(CoxeterGraph::builtin("A3"));
  // members by construction
  CHECK(a3.in_standard_parabolic({{1, +1}, {3, -1}, {1, -1}}, {1, 3}));
  CHECK(a3.in_standard_parabolic({}, {1}));
  // a3 a1 a3^-1 = a1 because the generators commute
  CHECK(a3.in_standard_parabolic({{3, +1}, {1, +1}, {3, -1}}, {1}));
  // a2 is not in <a1, a3>
  CHECK_FALSE(a3.in_standard_parabolic(positive_word({2}), {1, 3}));
  CHECK(a3.in_standard_parabolic(positive_word({1, 2}), {1, 2, 3}));
  // unknown label
  CHECK_THROWS_AS((void)a3.in_standard_parabolic(positive_word({1}), {7}), Error);

  ArtinGroup e6(CoxeterGraph::builtin("E6"));
  CHECK(e6.in_standard_parabolic({{2, +1}, {5, +1}, {2, -1}}, {2, 5}));
  CHECK_FALSE(e6.in_standard_parabolic(positive_word({4}), {2, 5}));
}

TEST_CASE("support of positive elements") {
  ArtinGroup a3(CoxeterGraph::builtin("A3"));
  GarsideElement x = a3.normalize(positive_word({1, 3, 1}));
  CHECK(a3.support_labels(x) == std::vector<int>{1, 3});
  CHECK(a3.support_labels(a3.identity_element()).empty());
}

TEST_CASE("center exponent per type") {
  CHECK(ArtinGroup(CoxeterGraph::builtin("A1")).center_exponent() == 1);
  CHECK(ArtinGroup(CoxeterGraph::builtin("A2")).center_exponent() == 2);
  CHECK(ArtinGroup(CoxeterGraph::builtin("A3")).center_exponent() == 2);
  CHECK(ArtinGroup(CoxeterGraph::builtin("D4")).center_exponent() == 1);
  CHECK(ArtinGroup(CoxeterGraph::builtin("E6")).center_exponent() == 2);
  CHECK(ArtinGroup(CoxeterGraph::builtin("E7")).center_exponent() == 1);
}

TEST_CASE("mod-center comparisons") {
  ArtinGroup a2(CoxeterGraph::builtin("A2"));
  CHECK(a2.mod_center_trivial(a2.delta(2)));
  CHECK(a2.mod_center_trivial(a2.delta(-4)));
  CHECK_FALSE(a2.mod_center_trivial(a2.delta(1)));
  CHECK_FALSE(a2.mod_center_trivial(a2.normalize(positive_word({1}))));
  CHECK(a2.mod_center_trivial(a2.identity_element()));

  GeneratorWord u = positive_word({1, 2});
  GeneratorWord central = positive_word({1, 2, 1, 1, 2, 1});  // Delta^2
  CHECK(a2.mod_center_equal(u, concat(u, central)));
  CHECK_FALSE(a2.mod_center_equal(u, positive_word({2, 1})));
  CHECK(a2.mod_center_equal(a2.normalize(u), a2.multiply(a2.normalize(u), a2.delta(2))));

  ArtinGroup d4(CoxeterGraph::builtin("D4"));
  CHECK(d4.mod_center_trivial(d4.delta(1)));  // Delta itself is central in D4
}

TEST_CASE("serialization rejects malformed text") {
  ArtinGroup a2(CoxeterGraph::builtin("A2"));
  auto code_of = [&](const std::string& text) {
    try {
      (void)a2.from_text(text);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an Error for `" << text << "`");
    return Errc::invalid_argument;
  };
  CHECK(code_of("") == Errc::bad_normal_form_text);
  CHECK(code_of("D^0") == Errc::bad_normal_form_text);
  CHECK(code_of("E^0 |") == Errc::bad_normal_form_text);
  CHECK(code_of("D^x |") == Errc::bad_normal_form_text);
  CHECK(code_of("D^0 woops |") == Errc::bad_normal_form_text);
  CHECK(code_of("D^0 | 1 banana") == Errc::bad_normal_form_text);
  CHECK(code_of("D^0 | 1 1") == Errc::bad_normal_form_text);     // not reduced
  CHECK(code_of("D^0 | 1 | 2") == Errc::bad_normal_form_text);   // not left-weighted
  CHECK(code_of("D^0 | 1 2 1") == Errc::bad_normal_form_text);   // factor equals Delta
  CHECK(code_of("D^0 | | 1") == Errc::bad_normal_form_text);     // stray empty segment
  CHECK(code_of("D^0 | 9") == Errc::index_out_of_range);

  // the lone-empty-segment form is exactly the identity spelling
  CHECK(a2.from_text("D^3 |") == a2.delta(3));
  CHECK(a2.from_text(" D^-2  |  1 2 ") ==
        a2.multiply(a2.delta(-2), a2.normalize(positive_word({1, 2}))));
}

TEST_CASE("elements of different groups do not mix") {
  ArtinGroup a2(CoxeterGraph::builtin("A2"));
  ArtinGroup a3(CoxeterGraph::builtin("A3"));
  GarsideElement x = a2.normalize(positive_word({1}));
  GarsideElement y = a3.normalize(positive_word({1}));
  CHECK(x != y);  // signatures differ
  CHECK_THROWS_AS((void)a3.multiply(x, y), Error);
  CHECK_THROWS_AS((void)a3.element_degree(x), Error);
}
