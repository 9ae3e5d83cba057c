#include "rewrite_oracle.hpp"

#include <cassert>

#include "artin/errors.hpp"

namespace artin::testing {

RewriteOracle::RewriteOracle(const CoxeterGraph& graph, int cap)
    : graph_(graph), cap_(cap), base_(2 * graph.rank()) {
  assert(cap >= 1);
  pow_.resize(cap_ + 1);
  offset_.resize(cap_ + 2);
  pow_[0] = 1;
  for (int t = 1; t <= cap_; ++t) pow_[t] = pow_[t - 1] * base_;
  offset_[0] = 0;
  for (int l = 0; l <= cap_; ++l) offset_[l + 1] = offset_[l] + pow_[l];
  std::uint64_t total = offset_[cap_ + 1];
  if (total > 0xffffffffull) fail(Errc::invalid_argument, "oracle universe too large");
  parent_.resize(total);
  for (std::uint64_t i = 0; i < total; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  close_over_moves();
}

std::uint32_t RewriteOracle::find(std::uint32_t x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];  // path halving
    x = parent_[x];
  }
  return x;
}

void RewriteOracle::unite(std::uint32_t x, std::uint32_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return;
  if (x < y)
    parent_[y] = x;  // smallest index is the canonical representative
  else
    parent_[x] = y;
}

std::pair<std::uint64_t, std::uint64_t> RewriteOracle::length_band(int length) const {
  assert(length >= 0 && length <= cap_);
  return {offset_[length], pow_[length]};
}

std::uint32_t RewriteOracle::index_of(const GeneratorWord& word) const {
  int l = static_cast<int>(word.size());
  assert(l <= cap_);
  std::uint64_t idx = offset_[l];
  for (int t = 0; t < l; ++t) {
    int digit = 2 * graph_.index_of(word[t].label) + (word[t].sign < 0 ? 1 : 0);
    idx += static_cast<std::uint64_t>(digit) * pow_[t];
  }
  return static_cast<std::uint32_t>(idx);
}

GeneratorWord RewriteOracle::word_of_index(std::uint64_t index) const {
  int l = 0;
  while (index >= offset_[l + 1]) ++l;
  std::uint64_t rest = index - offset_[l];
  GeneratorWord word(l);
  for (int t = 0; t < l; ++t) {
    int digit = static_cast<int>(rest % base_);
    rest /= base_;
    word[t] = Letter{graph_.label_of(digit / 2), digit % 2 ? -1 : +1};
  }
  return word;
}

std::uint32_t RewriteOracle::root(const GeneratorWord& word) const {
  return find(index_of(word));
}

std::uint32_t RewriteOracle::root_of_index(std::uint32_t index) const { return find(index); }

void RewriteOracle::close_over_moves() {
  std::vector<int> digits(cap_, 0);
  // Enumerate every word once, recursively extending digit by digit; apply
  // each move whose window fits, uniting the word with its rewrite.
  auto visit = [&](auto&& self, int len, std::uint64_t idx) -> void {
    if (len >= 2) {
      for (int p = 0; p + 1 < len; ++p) {
        int a = digits[p], b = digits[p + 1];
        if (b == (a ^ 1)) {
          // free cancellation: drop positions p, p+1
          std::uint64_t low = (idx - offset_[len]) % pow_[p];
          std::uint64_t high = (idx - offset_[len]) / pow_[p + 2];
          unite(static_cast<std::uint32_t>(idx),
                static_cast<std::uint32_t>(offset_[len - 2] + low + high * pow_[p]));
        }
        int va = a >> 1, vb = b >> 1;
        if (va != vb && !graph_.adjacent(va, vb)) {
          // commutation: swap positions p, p+1 (any signs)
          std::uint64_t swapped = idx + (static_cast<std::int64_t>(b - a)) * pow_[p] +
                                  (static_cast<std::int64_t>(a - b)) * pow_[p + 1];
          unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(swapped));
        }
      }
    }
    if (len >= 3) {
      for (int p = 0; p + 2 < len; ++p) {
        int a = digits[p], b = digits[p + 1], c = digits[p + 2];
        int x = a >> 1, y = b >> 1;
        if ((c >> 1) != x || x == y || !graph_.adjacent(x, y)) continue;
        int sa = a & 1, sb = b & 1, sc = c & 1;
        // in-place braid rewrites (x s1, y s2, x s3) -> (y t1, x t2, y t3):
        //   +++ <-> +++        (x y x = y x y)
        //   --- <-> ---        (inverses of the above)
        //   ++-  -> -++        (x y x^- = y^- x y)
        //   -++  -> ++-        (x^- y x = y x y^-)
        //   +--  -> --+        (x y^- x^- = y^- x^- y)
        //   --+  -> +--        (x^- y^- x = y x^- y^-)
        int t1, t2, t3;
        if (sa == 0 && sb == 0 && sc == 0) {
          t1 = 0; t2 = 0; t3 = 0;
        } else if (sa == 1 && sb == 1 && sc == 1) {
          t1 = 1; t2 = 1; t3 = 1;
        } else if (sa == 0 && sb == 0 && sc == 1) {
          t1 = 1; t2 = 0; t3 = 0;
        } else if (sa == 1 && sb == 0 && sc == 0) {
          t1 = 0; t2 = 0; t3 = 1;
        } else if (sa == 0 && sb == 1 && sc == 1) {
          t1 = 1; t2 = 1; t3 = 0;
        } else if (sa == 1 && sb == 1 && sc == 0) {
          t1 = 0; t2 = 1; t3 = 1;
        } else {
          continue;  // +-+ and -+- have no in-place rewrite
        }
        int na = 2 * y + t1, nb = 2 * x + t2, nc = 2 * y + t3;
        std::uint64_t rewired = idx + (static_cast<std::int64_t>(na - a)) * pow_[p] +
                                (static_cast<std::int64_t>(nb - b)) * pow_[p + 1] +
                                (static_cast<std::int64_t>(nc - c)) * pow_[p + 2];
        unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(rewired));
      }
    }
    if (len == cap_) return;
    std::uint64_t child_base = offset_[len + 1] + (idx - offset_[len]);
    for (int d = 0; d < base_; ++d) {
      digits[len] = d;
      self(self, len + 1, child_base + static_cast<std::uint64_t>(d) * pow_[len]);
    }
  };
  visit(visit, 0, 0);
}

}  // namespace artin::testing
