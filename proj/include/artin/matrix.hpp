#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace artin {

/// Dense square matrix over an exact integer type, row-major.  Ranks here are
/// tiny (root lattices, H_1 of low-genus surfaces), so no effort is spent on
/// blocking; exactness and value semantics are what matter.
template <class T>
struct SquareMat {
  int n = 0;
  std::vector<T> a;

  SquareMat() = default;
  explicit SquareMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, T(0)) {}

  static SquareMat identity(int size) {
    SquareMat m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = T(1);
    return m;
  }

  T& at(int i, int j) {
    assert(i >= 0 && i < n && j >= 0 && j < n);
    return a[static_cast<std::size_t>(i) * n + j];
  }
  const T& at(int i, int j) const {
    assert(i >= 0 && i < n && j >= 0 && j < n);
    return a[static_cast<std::size_t>(i) * n + j];
  }

  bool operator==(const SquareMat&) const = default;

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != (i == j ? T(1) : T(0))) return false;
    return true;
  }
};

template <class T>
SquareMat<T> mul(const SquareMat<T>& x, const SquareMat<T>& y) {
  assert(x.n == y.n);
  SquareMat<T> r(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      const T& v = x.at(i, k);
      if (v == T(0)) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  }
  return r;
}

template <class T>
SquareMat<T> transpose(const SquareMat<T>& x) {
  SquareMat<T> r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

using IntMat = SquareMat<std::int32_t>;

}  // namespace artin
