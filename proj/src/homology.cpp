#include "artin/homology.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

SymplecticSpace::SymplecticSpace(int g) : genus(g) {
  if (g < 1) fail(Errc::invalid_argument, "genus must be at least 1");
  int n = 2 * g;
  J = BigMat(n);
  for (int b = 0; b < g; ++b) {
    J.at(2 * b, 2 * b + 1) = 1;
    J.at(2 * b + 1, 2 * b) = -1;
  }
}

BigInt pairing(const SymplecticSpace& space, const std::vector<std::int32_t>& x,
               const std::vector<std::int32_t>& y) {
  int n = space.dimension();
  assert(static_cast<int>(x.size()) == n && static_cast<int>(y.size()) == n);
  // <x, y> = x^T J y with J the standard block form: each block contributes
  // x_{2b} y_{2b+1} - x_{2b+1} y_{2b}.
  BigInt total = 0;
  for (int b = 0; b < space.genus; ++b) {
    total += BigInt(x[2 * b]) * y[2 * b + 1];
    total -= BigInt(x[2 * b + 1]) * y[2 * b];
  }
  return total;
}

bool is_symplectic(const SymplecticSpace& space, const BigMat& m) {
  if (m.n != space.dimension()) return false;
  return mul(mul(transpose(m), space.J), m) == space.J;
}

namespace {

BigMat transvection_signed(const SymplecticSpace& space, const CurveClass& v, int sign) {
  int n = space.dimension();
  if (static_cast<int>(v.v.size()) != n)
    fail(Errc::invalid_argument, "curve class has wrong dimension");
  if (std::all_of(v.v.begin(), v.v.end(), [](std::int32_t c) { return c == 0; }))
    fail(Errc::zero_vector, "transvection about the zero class");
  // x -> x + s<x,v>v is M = I + s v (Jv)^T: <x,v> = x^T J v = sum_j x_j (Jv)_j.
  std::vector<BigInt> jv(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) jv[j] += space.J.at(j, i) * v.v[i];
  BigMat m = BigMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) += sign * BigInt(v.v[i]) * jv[j];
  assert(is_symplectic(space, m));
  return m;
}

}  // namespace

BigMat transvection(const SymplecticSpace& space, const CurveClass& v) {
  return transvection_signed(space, v, +1);
}

BigMat transvection_inverse(const SymplecticSpace& space, const CurveClass& v) {
  return transvection_signed(space, v, -1);
}

namespace {

/// All primitive vectors with entries in [-cap, cap], first nonzero entry
/// positive, ordered by (L1 norm, lexicographic).
std::vector<std::vector<std::int32_t>> candidate_vectors(int dim, int cap) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<std::int32_t> cur(dim, 0);
  auto emit = [&](auto&& self, int pos) -> void {
    if (pos == dim) {
      int first = 0;
      while (first < dim && cur[first] == 0) ++first;
      if (first == dim || cur[first] < 0) return;
      int g = 0;
      for (int c : cur) g = std::gcd(g, std::abs(c));
      if (g != 1) return;
      out.push_back(cur);
      return;
    }
    for (int c = -cap; c <= cap; ++c) {
      cur[pos] = c;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  emit(emit, 0);
  std::sort(out.begin(), out.end(),
            [](const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
              long long la = 0, lb = 0;
              for (int c : a) la += std::abs(c);
              for (int c : b) lb += std::abs(c);
              if (la != lb) return la < lb;
              return a < b;
            });
  return out;
}

}  // namespace

HomologyRep find_curve_classes(const SymplecticSpace& space, const CoxeterGraph& graph,
                               int max_abs_entry) {
  int dim = space.dimension();
  int rank = graph.rank();
  if (rank > dim)
    fail(Errc::invalid_argument, "graph rank exceeds the homology dimension");
  if (max_abs_entry < 1) fail(Errc::invalid_argument, "entry bound must be positive");

  // Breadth-first vertex order from the smallest label, so every vertex after
  // the first few is constrained by an already-assigned neighbor.
  std::vector<int> order;
  {
    std::vector<bool> seen(rank, false);
    for (int start = 0; start < rank; ++start) {
      if (seen[start]) continue;
      std::queue<int> q;
      q.push(start);
      seen[start] = true;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int v = 0; v < rank; ++v)
          if (!seen[v] && graph.adjacent(u, v)) {
            seen[v] = true;
            q.push(v);
          }
      }
    }
  }

  auto candidates = candidate_vectors(dim, max_abs_entry);
  std::vector<int> choice(rank, -1);  // candidate index per order position
  std::vector<std::vector<std::int32_t>> assigned(rank);

  long long budget = 50'000'000;
  auto consistent = [&](int pos) {
    const auto& vec = assigned[order[pos]];
    for (int earlier = 0; earlier < pos; ++earlier) {
      const auto& other = assigned[order[earlier]];
      BigInt p = pairing(space, other, vec);
      bool edge = graph.adjacent(order[earlier], order[pos]);
      if (edge ? (p != 1 && p != -1) : (p != 0)) return false;
    }
    return true;
  };

  int pos = 0;
  while (pos >= 0 && pos < rank) {
    bool placed = false;
    for (int next = choice[pos] + 1; next < static_cast<int>(candidates.size()); ++next) {
      if (--budget < 0)
        fail(Errc::no_realization,
             "search budget exhausted before realizing the intersection pattern");
      choice[pos] = next;
      assigned[order[pos]] = candidates[next];
      if (consistent(pos)) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++pos;
      if (pos < rank) choice[pos] = -1;
    } else {
      choice[pos] = -1;
      --pos;
    }
  }
  if (pos < 0)
    fail(Errc::no_realization,
         "no curve classes with entries in [-" + std::to_string(max_abs_entry) + ", " +
             std::to_string(max_abs_entry) + "] realize the intersection pattern");

  HomologyRep rep{space, graph, {}, {}, {}};
  rep.classes.resize(rank);
  for (int i = 0; i < rank; ++i) rep.classes[i] = CurveClass{assigned[i]};
  rep.twist.reserve(rank);
  rep.twist_inv.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    rep.twist.push_back(transvection(space, rep.classes[i]));
    rep.twist_inv.push_back(transvection_inverse(space, rep.classes[i]));
  }
  return rep;
}

BigMat evaluate(const HomologyRep& rep, const GeneratorWord& word) {
  BigMat acc = BigMat::identity(rep.space.dimension());
  for (const Letter& l : word) {
    int index = rep.graph.index_of(l.label);
    acc = mul(acc, rep.image_of(index, l.sign));
  }
  assert(is_symplectic(rep.space, acc));
  return acc;
}

KernelWitness kernel_witness(const HomologyRep& rep, const GeneratorWord& word) {
  BigMat image = evaluate(rep, word);
  bool identity = image.is_identity();
  return KernelWitness{identity, std::move(image)};
}

std::string matrix_to_string(const BigMat& m) {
  std::ostringstream out;
  for (int i = 0; i < m.n; ++i) {
    if (i) out << "\n";
    for (int j = 0; j < m.n; ++j) {
      if (j) out << " ";
      out << m.at(i, j);
    }
  }
  return out.str();
}

}  // namespace artin
