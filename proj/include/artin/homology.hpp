#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/coxeter.hpp"
#include "artin/garside.hpp"
#include "artin/matrix.hpp"

namespace artin {

/// Exact big integers: products of many transvections (powers of kappa
/// conjugating w) overflow fixed-width types, and the certificates must stay
/// exact.
using BigInt = boost::multiprecision::cpp_int;
using BigMat = SquareMat<BigInt>;

/// H_1 of a closed genus-g surface with the standard symplectic intersection
/// form: J is block-diagonal with [[0,1],[-1,0]] blocks (+1 above the
/// diagonal).
struct SymplecticSpace {
  int genus = 0;
  BigMat J;  // 2g x 2g

  explicit SymplecticSpace(int genus);
  int dimension() const { return 2 * genus; }
};

/// Primitive integer homology class of a simple closed curve.
struct CurveClass {
  std::vector<std::int32_t> v;

  bool operator==(const CurveClass&) const = default;
};

/// <x, y> = x^T J y.
BigInt pairing(const SymplecticSpace& space, const std::vector<std::int32_t>& x,
               const std::vector<std::int32_t>& y);

bool is_symplectic(const SymplecticSpace& space, const BigMat& m);

/// Transvection about v: x -> x + <x,v> v.  Throws zero_vector for v = 0.
BigMat transvection(const SymplecticSpace& space, const CurveClass& v);
BigMat transvection_inverse(const SymplecticSpace& space, const CurveClass& v);

/// Homological shadow of a geometric homomorphism for one graph: one curve
/// class per vertex, with |<v_i, v_j>| = 1 exactly on edges and 0 otherwise.
struct HomologyRep {
  SymplecticSpace space;
  CoxeterGraph graph;
  std::vector<CurveClass> classes;  // by vertex index
  std::vector<BigMat> twist;        // transvection per vertex index
  std::vector<BigMat> twist_inv;

  const BigMat& image_of(int index, int sign) const {
    return sign > 0 ? twist[index] : twist_inv[index];
  }
};

/// Deterministic bounded search for curve classes realizing the graph's
/// intersection pattern: entries in [-max_abs_entry, max_abs_entry],
/// candidates ordered by (L1 norm, lexicographic), vertices filled in
/// breadth-first order from the smallest label.  Throws no_realization when
/// the bounded space is exhausted, invalid_argument when rank > 2g.
HomologyRep find_curve_classes(const SymplecticSpace& space, const CoxeterGraph& graph,
                               int max_abs_entry = 2);

/// Ordered product of transvections over the letters.  Every output satisfies
/// M^T J M = J (asserted).
BigMat evaluate(const HomologyRep& rep, const GeneratorWord& word);

/// Necessary-condition kernel check: identity homological image is necessary
/// but not sufficient for membership in the kernel of a geometric
/// homomorphism.
struct KernelWitness {
  bool identity_image = false;
  BigMat image;
};

KernelWitness kernel_witness(const HomologyRep& rep, const GeneratorWord& word);

std::string matrix_to_string(const BigMat& m);  // row-major, space-separated

}  // namespace artin
