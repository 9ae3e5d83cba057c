#include "artin/garside.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace artin {

GeneratorWord inverse_word(const GeneratorWord& word) {
  GeneratorWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out.push_back(Letter{it->label, -it->sign});
  return out;
}

GeneratorWord concat(const GeneratorWord& x, const GeneratorWord& y) {
  GeneratorWord out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

long long word_degree(const GeneratorWord& word) {
  long long d = 0;
  for (const Letter& l : word) d += l.sign;
  return d;
}

GeneratorWord positive_word(const std::vector<int>& labels) {
  GeneratorWord out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back(Letter{l, +1});
  return out;
}

std::string word_to_string(const GeneratorWord& word) {
  if (word.empty()) return "eps";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << " * ";
    out << "a" << word[i].label;
    if (word[i].sign < 0) out << "^-1";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

ArtinGroup::ArtinGroup(CoxeterGraph graph)
    : roots_(std::make_shared<const RootSystem>(std::move(graph))) {
  signature_ = roots_->graph().signature();
  // Smallest c >= 1 with Delta^c central, decided by the word problem.  The
  // diagram automorphism is an involution, so c <= 2; the loop still decides
  // it by conjugation tests rather than trusting that fact.
  for (int c = 1; c <= 2 && center_exponent_ == 0; ++c) {
    bool central = true;
    for (int i = 0; i < rank() && central; ++i) {
      GarsideElement a = from_simple(roots_->simple(i));
      central = multiply(delta(c), a) == multiply(a, delta(c));
    }
    if (central) center_exponent_ = c;
  }
  assert(center_exponent_ != 0);
}

GarsideElement ArtinGroup::make_element(long long delta_power,
                                        std::vector<CoxeterElement> factors) const {
  GarsideElement x;
  x.delta_power = delta_power;
  x.factors = std::move(factors);
  x.graph_signature = signature_;
  return x;
}

void ArtinGroup::check_same_graph(const GarsideElement& x) const {
  if (x.graph_signature != signature_)
    fail(Errc::invalid_argument, "element belongs to a different graph");
}

GarsideElement ArtinGroup::identity_element() const { return make_element(0, {}); }

GarsideElement ArtinGroup::delta(long long power) const { return make_element(power, {}); }

GarsideElement ArtinGroup::from_simple(const CoxeterElement& u) const {
  if (u.is_identity()) return identity_element();
  if (u == roots_->longest()) return delta(1);
  return make_element(0, {u});
}

// Local sliding passes: fix each adjacent pair by moving the head of the
// right factor into the left one until a full sweep changes nothing, then
// fold leading Deltas into the power.  Each fix strictly decreases
// sum(i * length(F_i)), so this terminates; uniqueness of the normal form
// makes the result order-independent.
GarsideElement ArtinGroup::weight_factors(long long delta_power,
                                          std::vector<CoxeterElement> factors) const {
  const RootSystem& rs = *roots_;
  const CoxeterElement& w0 = rs.longest();
  std::erase_if(factors, [](const CoxeterElement& f) { return f.is_identity(); });

  bool changed = true;
  while (changed) {
    changed = false;
    for (long long i = 0; i + 1 < static_cast<long long>(factors.size()); ++i) {
      if (factors[i] == w0) continue;  // complement is trivial
      CoxeterElement d = rs.meet_left(rs.complement(factors[i]), factors[i + 1]);
      if (d.is_identity()) continue;
      factors[i] = rs.multiply(factors[i], d);
      factors[i + 1] = rs.multiply(rs.inverse(d), factors[i + 1]);
      changed = true;
      if (factors[i + 1].is_identity()) {
        factors.erase(factors.begin() + i + 1);
        --i;  // the merged factor may now feed its new right neighbour
      }
    }
  }

  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == w0) ++lead;
  delta_power += static_cast<long long>(lead);
  factors.erase(factors.begin(), factors.begin() + lead);

#ifndef NDEBUG
  for (const auto& f : factors) assert(!f.is_identity() && !(f == w0));
#endif
  return make_element(delta_power, std::move(factors));
}

GarsideElement ArtinGroup::normalize(const GeneratorWord& word) const {
  const RootSystem& rs = *roots_;
  std::vector<CoxeterElement> factors;
  std::vector<long long> marks;
  factors.reserve(word.size());
  marks.reserve(word.size());
  long long m = 0;  // number of Delta^-1 pulled to the front so far
  for (const Letter& letter : word) {
    int idx = graph().index_of(letter.label);
    if (letter.sign > 0) {
      factors.push_back(rs.simple(idx));
      marks.push_back(m);
    } else {
      // a_i^-1 = Delta^-1 * (Delta a_i^-1); the complement Delta a_i^-1 is
      // the W-element w0 s_i (empty in rank 1).
      ++m;
      CoxeterElement f = rs.multiply(rs.longest(), rs.simple(idx));
      if (!f.is_identity()) {
        factors.push_back(std::move(f));
        marks.push_back(m);
      }
    }
  }
  // Each Delta^-1 created after a factor was emitted twists it by tau once.
  if (!rs.tau_is_identity()) {
    for (std::size_t i = 0; i < factors.size(); ++i)
      if ((m - marks[i]) & 1) factors[i] = rs.tau(factors[i]);
  }
  return weight_factors(-m, std::move(factors));
}

GarsideElement ArtinGroup::multiply(const GarsideElement& x, const GarsideElement& y) const {
  check_same_graph(x);
  check_same_graph(y);
  const RootSystem& rs = *roots_;
  std::vector<CoxeterElement> factors;
  factors.reserve(x.factors.size() + y.factors.size());
  const bool twist = (y.delta_power & 1) && !rs.tau_is_identity();
  for (const auto& f : x.factors) factors.push_back(twist ? rs.tau(f) : f);
  for (const auto& f : y.factors) factors.push_back(f);
  return weight_factors(x.delta_power + y.delta_power, std::move(factors));
}

GarsideElement ArtinGroup::inverse(const GarsideElement& x) const {
  check_same_graph(x);
  const RootSystem& rs = *roots_;
  const long long k = x.delta_power;
  const long long n = static_cast<long long>(x.factors.size());
  // x = Delta^k F_1..F_n  =>  x^-1 = Delta^{-k-n} tau^{k+n-1}(L_n) ...
  // tau^{k}(L_1) with L_t = Delta F_t^-1.
  std::vector<CoxeterElement> factors;
  factors.reserve(x.factors.size());
  for (long long t = n; t >= 1; --t) {
    CoxeterElement L;
    L.m = mul(rs.longest().m, x.factors[t - 1].mi);
    L.mi = mul(x.factors[t - 1].m, rs.longest().m);
    if (((t - 1 + k) & 1) && !rs.tau_is_identity()) L = rs.tau(L);
    factors.push_back(std::move(L));
  }
  return weight_factors(-k - n, std::move(factors));
}

GarsideElement ArtinGroup::power(const GarsideElement& x, long long e) const {
  check_same_graph(x);
  GarsideElement base = e < 0 ? inverse(x) : x;
  long long reps = e < 0 ? -e : e;
  GarsideElement acc = identity_element();
  while (reps > 0) {
    acc = multiply(acc, base);
    --reps;
  }
  return acc;
}

GarsideElement ArtinGroup::conjugate(const GarsideElement& x, const GarsideElement& g) const {
  return multiply(multiply(inverse(g), x), g);
}

bool ArtinGroup::equal(const GeneratorWord& x, const GeneratorWord& y) const {
  return normalize(x) == normalize(y);
}

bool ArtinGroup::is_trivial(const GeneratorWord& x) const { return normalize(x).is_trivial(); }

long long ArtinGroup::degree(const GeneratorWord& word) const {
  for (const Letter& l : word) (void)graph().index_of(l.label);
  return word_degree(word);
}

long long ArtinGroup::element_degree(const GarsideElement& x) const {
  check_same_graph(x);
  long long d = x.delta_power * roots_->positive_count();
  for (const auto& f : x.factors) d += roots_->length(f);
  return d;
}

bool ArtinGroup::absorbs(const GarsideElement& x, const GarsideElement& y) const {
  GarsideElement xy = multiply(x, y);
  return (y.sup() == 0 || y.inf() == 0) && xy.sup() == x.sup() && xy.inf() == x.inf();
}

bool ArtinGroup::absorbs(const GeneratorWord& x, const GeneratorWord& y) const {
  return absorbs(normalize(x), normalize(y));
}

// ---------------------------------------------------------------------------
// parabolic membership via the coprime p^-1 q decomposition

CoxeterElement ArtinGroup::head(const GarsideElement& positive) const {
  assert(positive.delta_power >= 0);
  if (positive.delta_power > 0) return roots_->longest();
  if (positive.factors.empty()) return roots_->identity();
  return positive.factors.front();
}

GarsideElement ArtinGroup::strip_left_simple(const GarsideElement& positive,
                                             const CoxeterElement& d) const {
  GarsideElement r = multiply(inverse(from_simple(d)), positive);
  assert(r.delta_power >= 0);
  return r;
}

GarsideElement ArtinGroup::gcd_positive(GarsideElement u, GarsideElement v) const {
  // gcd(u, v) = d * gcd(d^-1 u, d^-1 v) with d = meet of the heads.
  std::vector<CoxeterElement> stripped;
  while (true) {
    CoxeterElement hu = head(u), hv = head(v);
    if (hu.is_identity() || hv.is_identity()) break;
    CoxeterElement d = roots_->meet_left(hu, hv);
    if (d.is_identity()) break;
    u = strip_left_simple(u, d);
    v = strip_left_simple(v, d);
    stripped.push_back(std::move(d));
  }
  GarsideElement g = identity_element();
  for (const auto& d : stripped) g = multiply(g, from_simple(d));
  return g;
}

std::pair<GarsideElement, GarsideElement> ArtinGroup::np_form(const GarsideElement& x) const {
  check_same_graph(x);
  if (x.delta_power >= 0) return {identity_element(), x};
  GarsideElement p = delta(-x.delta_power);
  GarsideElement q = make_element(0, x.factors);
  GarsideElement d = gcd_positive(p, q);
  GarsideElement di = inverse(d);
  GarsideElement p2 = multiply(di, p);
  GarsideElement q2 = multiply(di, q);
  assert(p2.delta_power >= 0 && q2.delta_power >= 0);
  return {p2, q2};
}

std::uint32_t ArtinGroup::support_mask(const GarsideElement& positive) const {
  assert(positive.delta_power >= 0);
  std::uint32_t mask = 0;
  if (positive.delta_power > 0) mask = roots_->full_mask();
  for (const auto& f : positive.factors) mask |= roots_->support(f);
  return mask;
}

std::vector<int> ArtinGroup::support_labels(const GarsideElement& positive) const {
  check_same_graph(positive);
  std::uint32_t mask = support_mask(positive);
  std::vector<int> labels;
  for (int i = 0; i < rank(); ++i)
    if ((mask >> i) & 1) labels.push_back(graph().label_of(i));
  return labels;
}

bool ArtinGroup::in_standard_parabolic(const GeneratorWord& x,
                                       const std::vector<int>& labels) const {
  std::uint32_t allowed = 0;
  for (int l : labels) allowed |= std::uint32_t(1) << graph().index_of(l);
  try {
    (void)classify_ade(graph().induced(labels));
  } catch (const Error& e) {
    if (e.code() == Errc::non_spherical)
      fail(Errc::subset_not_spherical, std::string("induced subgraph: ") + e.what());
    throw;
  }
  auto [p, q] = np_form(normalize(x));
  return ((support_mask(p) | support_mask(q)) & ~allowed) == 0;
}

// ---------------------------------------------------------------------------
// center

int ArtinGroup::center_exponent() const { return center_exponent_; }

bool ArtinGroup::mod_center_trivial(const GarsideElement& x) const {
  check_same_graph(x);
  return x.factors.empty() && x.delta_power % center_exponent_ == 0;
}

bool ArtinGroup::mod_center_equal(const GarsideElement& x, const GarsideElement& y) const {
  return mod_center_trivial(multiply(x, inverse(y)));
}

bool ArtinGroup::mod_center_equal(const GeneratorWord& x, const GeneratorWord& y) const {
  return mod_center_equal(normalize(x), normalize(y));
}

// ---------------------------------------------------------------------------
// serialization

std::string ArtinGroup::to_text(const GarsideElement& x) const {
  check_same_graph(x);
  std::ostringstream out;
  out << "D^" << x.delta_power;
  if (x.factors.empty()) {
    out << " |";
    return out.str();
  }
  for (const auto& f : x.factors) {
    out << " |";
    for (int idx : roots_->lex_word(f)) out << " " << graph().label_of(idx);
  }
  return out.str();
}

GarsideElement ArtinGroup::from_text(const std::string& text) const {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '|') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    parts.push_back(cur);
  }
  if (parts.size() < 2)
    fail(Errc::bad_normal_form_text, "expected `D^k | ...`");
  std::istringstream head(parts[0]);
  std::string dtok;
  long long k = 0;
  if (!(head >> dtok) || dtok.size() < 3 || dtok[0] != 'D' || dtok[1] != '^')
    fail(Errc::bad_normal_form_text, "expected leading `D^k`");
  try {
    std::size_t used = 0;
    k = std::stoll(dtok.substr(2), &used);
    if (used != dtok.size() - 2) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(Errc::bad_normal_form_text, "bad Delta power in `" + dtok + "`");
  }
  std::string extra;
  if (head >> extra) fail(Errc::bad_normal_form_text, "unexpected text before first `|`");

  std::vector<CoxeterElement> factors;
  bool saw_empty = false;
  for (std::size_t p = 1; p < parts.size(); ++p) {
    std::istringstream seg(parts[p]);
    std::vector<int> labels;
    int label = 0;
    while (seg >> label) labels.push_back(label);
    if (!seg.eof())
      fail(Errc::bad_normal_form_text, "factor words must be space-separated labels");
    if (labels.empty()) {
      saw_empty = true;
      continue;
    }
    CoxeterElement f = roots_->identity();
    for (int l : labels) roots_->apply_simple_right(f, graph().index_of(l));
    if (roots_->length(f) != static_cast<int>(labels.size()))
      fail(Errc::bad_normal_form_text, "factor word is not reduced");
    factors.push_back(std::move(f));
  }
  if (saw_empty && (parts.size() != 2 || !factors.empty()))
    fail(Errc::bad_normal_form_text, "empty factor segment");

  GarsideElement x = make_element(k, std::move(factors));
  if (!is_left_weighted(x))
    fail(Errc::bad_normal_form_text, "factors do not form a left-weighted normal form");
  return x;
}

bool ArtinGroup::is_left_weighted(const GarsideElement& x) const {
  check_same_graph(x);
  const RootSystem& rs = *roots_;
  for (const auto& f : x.factors)
    if (f.is_identity() || f == rs.longest()) return false;
  for (std::size_t i = 0; i + 1 < x.factors.size(); ++i)
    if (!rs.meet_left(rs.complement(x.factors[i]), x.factors[i + 1]).is_identity())
      return false;
  return true;
}

}  // namespace artin
