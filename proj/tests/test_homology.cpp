#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <doctest.h>

#include "artin/errors.hpp"
#include "artin/homology.hpp"

using namespace artin;

namespace {

Errc code_of_call(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("symplectic form shape") {
  SymplecticSpace space(3);
  CHECK(space.dimension() == 6);
  CHECK(space.J.n == 6);

  // J is antisymmetric with J^2 = -I
  CHECK(transpose(space.J) == [&] {
    BigMat neg(6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) neg.at(i, j) = -space.J.at(i, j);
    return neg;
  }());
  BigMat j2 = mul(space.J, space.J);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(j2.at(i, j) == (i == j ? -1 : 0));

  // +1 above the diagonal in each block
  CHECK(space.J.at(0, 1) == 1);
  CHECK(space.J.at(1, 0) == -1);
  CHECK(space.J.at(0, 2) == 0);

  CHECK(code_of_call([] { SymplecticSpace bad(0); }) == Errc::invalid_argument);

  // basis pairings
  std::vector<std::int32_t> e0 = {1, 0, 0, 0, 0, 0}, e1 = {0, 1, 0, 0, 0, 0},
                            e2 = {0, 0, 1, 0, 0, 0};
  CHECK(pairing(space, e0, e1) == 1);
  CHECK(pairing(space, e1, e0) == -1);
  CHECK(pairing(space, e0, e2) == 0);
  CHECK(pairing(space, e0, e0) == 0);

  CHECK(is_symplectic(space, BigMat::identity(6)));
  BigMat not_symp = BigMat::identity(6);
  not_symp.at(0, 0) = 2;
  CHECK_FALSE(is_symplectic(space, not_symp));
}

TEST_CASE("transvections") {
  SymplecticSpace space(1);
  CurveClass e0{{1, 0}}, e1{{0, 1}};

  // explicit 2x2 matrices: column vectors transform as x -> x + <x,v> v
  BigMat t0 = transvection(space, e0);
  CHECK(t0.at(0, 0) == 1);
  CHECK(t0.at(1, 1) == 1);
  // image of e1 is e1 + <e1,e0> e0 = e1 - e0
  CHECK(t0.at(0, 1) == -1);
  CHECK(t0.at(1, 0) == 0);

  CHECK(is_symplectic(space, t0));
  CHECK(mul(t0, transvection_inverse(space, e0)).is_identity());

  BigMat t1 = transvection(space, e1);
  CHECK(is_symplectic(space, mul(t0, t1)));

  CHECK(code_of_call([&] { (void)transvection(space, CurveClass{{0, 0}}); }) ==
        Errc::zero_vector);
}

TEST_CASE("curve classes realize the intersection pattern") {
  for (const char* type : {"A2", "A3", "E6"}) {
    CAPTURE(type);
    CoxeterGraph graph = CoxeterGraph::builtin(type);
    SymplecticSpace space(3);
    HomologyRep rep = find_curve_classes(space, graph);
    REQUIRE(static_cast<int>(rep.classes.size()) == graph.rank());
    REQUIRE(static_cast<int>(rep.twist.size()) == graph.rank());

    for (int i = 0; i < graph.rank(); ++i) {
      // primitive, nonzero
      long long g = 0;
      for (std::int32_t c : rep.classes[i].v) g = std::gcd(g, static_cast<long long>(std::abs(c)));
      CHECK(g == 1);
      for (int j = 0; j < graph.rank(); ++j) {
        BigInt p = pairing(space, rep.classes[i].v, rep.classes[j].v);
        if (i == j) {
          CHECK(p == 0);
        } else if (graph.adjacent(i, j)) {
          CHECK((p == 1 || p == -1));
        } else {
          CHECK(p == 0);
        }
      }
      CHECK(is_symplectic(space, rep.twist[i]));
      CHECK(mul(rep.twist[i], rep.twist_inv[i]).is_identity());
    }
  }
}

TEST_CASE("realization guards and non-ADE patterns") {
  // more classes than the homology dimension is rejected up front
  CHECK(code_of_call([] {
          find_curve_classes(SymplecticSpace(1), CoxeterGraph::builtin("E6"));
        }) == Errc::invalid_argument);
  CHECK(code_of_call([] {
          find_curve_classes(SymplecticSpace(3), CoxeterGraph::builtin("A2"), 0);
        }) == Errc::invalid_argument);

  // the search is not limited to ADE graphs: the complete graph K4 realizes
  // in genus 2 with entries in {-1, 0, 1}
  CoxeterGraph k4 = CoxeterGraph::from_edges(
      {1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  SymplecticSpace space(2);
  HomologyRep rep = find_curve_classes(space, k4, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      BigInt p = pairing(space, rep.classes[i].v, rep.classes[j].v);
      CHECK((p == 1 || p == -1));
    }
}

TEST_CASE("evaluation is a homomorphism to the symplectic group") {
  CoxeterGraph graph = CoxeterGraph::builtin("E6");
  HomologyRep rep = find_curve_classes(SymplecticSpace(3), graph);

  GeneratorWord u = {{1, +1}, {4, +1}, {2, -1}};
  GeneratorWord v = {{3, +1}, {1, -1}};
  CHECK(evaluate(rep, concat(u, v)) == mul(evaluate(rep, u), evaluate(rep, v)));
  CHECK(evaluate(rep, {}).is_identity());
  CHECK(mul(evaluate(rep, u), evaluate(rep, inverse_word(u))).is_identity());

  // transvections satisfy braid relations on edges and commute off edges
  for (int i = 0; i < graph.rank(); ++i)
    for (int j = 0; j < graph.rank(); ++j) {
      if (i == j) continue;
      const BigMat& x = rep.twist[i];
      const BigMat& y = rep.twist[j];
      if (graph.adjacent(i, j)) {
        CHECK(mul(mul(x, y), x) == mul(mul(y, x), y));
      } else {
        CHECK(mul(x, y) == mul(y, x));
      }
    }
}

TEST_CASE("kernel witness") {
  CoxeterGraph graph = CoxeterGraph::builtin("A2");
  HomologyRep rep = find_curve_classes(SymplecticSpace(3), graph);

  KernelWitness ident = kernel_witness(rep, {});
  CHECK(ident.identity_image);
  KernelWitness gen = kernel_witness(rep, positive_word({1}));
  CHECK_FALSE(gen.identity_image);
  CHECK_FALSE(gen.image.is_identity());
}

TEST_CASE("matrix serialization") {
  BigMat m = BigMat::identity(2);
  m.at(0, 1) = -3;
  CHECK(matrix_to_string(m) == "1 -3\n0 1");
}
