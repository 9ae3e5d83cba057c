#include "artin/certificates.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

const char* status_name(CertStatus status) {
  switch (status) {
    case CertStatus::verified: return "verified";
    case CertStatus::refuted: return "refuted";
    case CertStatus::exhausted_without_decision: return "exhausted-without-decision";
  }
  return "?";
}

CertStatus status_from_name(const std::string& name) {
  if (name == "verified") return CertStatus::verified;
  if (name == "refuted") return CertStatus::refuted;
  if (name == "exhausted-without-decision") return CertStatus::exhausted_without_decision;
  fail(Errc::invalid_argument, "unknown certificate status `" + name + "`");
}

void CertificateReport::param(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
}

void CertificateReport::note(const std::string& key, const std::string& value) {
  evidence.emplace_back(key, value);
}

std::string CertificateReport::text() const {
  std::ostringstream out;
  out << "claim: " << claim << "\n";
  out << "status: " << status_name(status) << "\n";
  out << "parameters:\n";
  for (const auto& [k, v] : parameters) out << "  " << k << ": " << v << "\n";
  out << "evidence:\n";
  for (const auto& [k, v] : evidence) out << "  " << k << ": " << v << "\n";
  out << "duration: " << duration_seconds << "s\n";
  return out.str();
}

nlohmann::ordered_json CertificateReport::json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["status"] = status_name(status);
  auto pairs = [](const std::vector<std::pair<std::string, std::string>>& kvs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& [k, v] : kvs) a.push_back({k, v});
    return a;
  };
  j["parameters"] = pairs(parameters);
  j["evidence"] = pairs(evidence);
  j["duration_seconds"] = duration_seconds;
  return j;
}

CertificateReport CertificateReport::from_json(const nlohmann::ordered_json& j) {
  CertificateReport r;
  r.claim = j.at("claim").get<std::string>();
  r.status = status_from_name(j.at("status").get<std::string>());
  for (const auto& kv : j.at("parameters"))
    r.parameters.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
  for (const auto& kv : j.at("evidence"))
    r.evidence.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
  r.duration_seconds = j.value("duration_seconds", 0.0);
  return r;
}

bool CertificateReport::same_content(const CertificateReport& other) const {
  return claim == other.claim && status == other.status &&
         parameters == other.parameters && evidence == other.evidence;
}

std::string reports_text(const std::vector<CertificateReport>& reports) {
  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out << "---\n";
    out << reports[i].text();
  }
  return out.str();
}

nlohmann::ordered_json reports_json(const std::vector<CertificateReport>& reports) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : reports) a.push_back(r.json());
  return a;
}

// ---------------------------------------------------------------------------
// shared plumbing

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string single_line(std::string s) {
  for (char& c : s)
    if (c == '\n') c = ';';
  return s;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << "0x" << std::hex << v;
  return out.str();
}

/// Normal form as evidence: verbatim when short, otherwise the invariants
/// plus a content hash (still enough to replay and compare).
std::string nf_evidence(const ArtinGroup& group, const GarsideElement& x) {
  std::string full = group.to_text(x);
  if (full.size() <= 400) return full;
  std::ostringstream out;
  out << "inf=" << x.inf() << " sup=" << x.sup()
      << " canonical_length=" << x.canonical_length()
      << " text_fnv1a=" << hex64(fnv1a64(full));
  return out.str();
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string convention_param(Convention c) { return convention_name(c); }

GeneratorWord conjugated_word(const GeneratorWord& base, const GeneratorWord& by,
                              Convention convention) {
  // base^by as a letter word under the given convention
  if (convention == Convention::conjugate_left)
    return concat(concat(inverse_word(by), base), by);
  return concat(concat(by, base), inverse_word(by));
}

void stamp_context(CertificateReport& report, const VerificationContext& ctx) {
  report.param("labeling", ctx.labeling.name);
  report.param("convention", convention_param(ctx.resolution.convention));
  report.param("genus", std::to_string(ctx.rep.space.genus));
}

}  // namespace

VerificationContext VerificationContext::create() {
  return create(candidate_labelings());
}

VerificationContext VerificationContext::create(const std::vector<Labeling>& candidates) {
  LabelingResolution resolution = resolve_labeling(candidates);
  if (!resolution.resolved)
    fail(Errc::no_compliant_labeling,
         "no candidate labeling satisfies the defining identities\n" +
             resolution.matrix_text());
  Labeling labeling = *resolution.resolved;
  auto engine = std::make_shared<ArtinGroup>(labeling.graph);
  HomologyRep rep = find_curve_classes(SymplecticSpace(3), labeling.graph);
  VerificationContext ctx{std::move(resolution),
                          labeling,
                          std::move(engine),
                          std::move(rep),
                          b_letters(),
                          kappa_letters(),
                          delta_letters(),
                          make_w(labeling, Convention::conjugate_left).word,
                          make_w(labeling, Convention::conjugate_right).word};
  return ctx;
}

// ---------------------------------------------------------------------------
// wajnryb

namespace {

CertificateReport wajnryb_checks(
    const VerificationContext& ctx, const std::string& claim,
    const std::vector<std::pair<std::string, const GeneratorWord*>>& words) {
  Timer timer;
  CertificateReport report;
  report.claim = claim;
  stamp_context(report, ctx);
  const ArtinGroup& group = *ctx.engine;
  bool all = true;
  for (const auto& [tag, word] : words) {
    GarsideElement nf = group.normalize(*word);
    bool nontrivial = !nf.is_trivial();
    long long degree = word_degree(*word);
    KernelWitness witness = kernel_witness(ctx.rep, *word);
    report.note(tag + ".letters", std::to_string(word->size()));
    report.note(tag + ".normal_form", nf_evidence(group, nf));
    report.note(tag + ".nontrivial", yes_no(nontrivial));
    report.note(tag + ".degree", std::to_string(degree));
    report.note(tag + ".homology_image_identity", yes_no(witness.identity_image));
    if (!witness.identity_image)
      report.note(tag + ".homology_image", single_line(matrix_to_string(witness.image)));
    all = all && nontrivial && degree == 0 && witness.identity_image;
  }
  report.note("kernel_semantics",
              "identity homological image is a necessary condition for the kernel, "
              "not a sufficient one");
  report.status = all ? CertStatus::verified : CertStatus::refuted;
  report.duration_seconds = timer.seconds();
  return report;
}

}  // namespace

CertificateReport verify_wajnryb(const VerificationContext& ctx) {
  return wajnryb_checks(ctx, "wajnryb",
                        {{"left", &ctx.w_left}, {"right", &ctx.w_right}});
}

CertificateReport verify_wajnryb_word(const VerificationContext& ctx,
                                      const GeneratorWord& candidate,
                                      const std::string& label) {
  return wajnryb_checks(ctx, "wajnryb[" + label + "]", {{label, &candidate}});
}

// ---------------------------------------------------------------------------
// normalizer

namespace {

bool membership_checks(CertificateReport& report, const VerificationContext& ctx,
                       const std::vector<std::pair<std::string, GeneratorWord>>& conjugators,
                       const std::vector<int>& subgroup_labels) {
  const ArtinGroup& group = *ctx.engine;
  std::ostringstream subgroup;
  subgroup << "<";
  for (std::size_t i = 0; i < subgroup_labels.size(); ++i)
    subgroup << (i ? "," : "") << "a" << subgroup_labels[i];
  subgroup << ">";
  report.param("subgroup", subgroup.str());
  bool all = true;
  for (const auto& [name, g] : conjugators) {
    for (int target : subgroup_labels) {
      GeneratorWord conj = conjugated_word({Letter{target, +1}}, g,
                                           ctx.resolution.convention);
      bool inside = group.in_standard_parabolic(conj, subgroup_labels);
      std::ostringstream key;
      key << "a" << target << "^(" << name << ") in " << subgroup.str();
      report.note(key.str(), yes_no(inside));
      all = all && inside;
    }
  }
  return all;
}

}  // namespace

CertificateReport verify_normalizer_conjugators(
    const VerificationContext& ctx,
    const std::vector<std::pair<std::string, GeneratorWord>>& conjugators,
    const std::vector<int>& subgroup_labels) {
  Timer timer;
  CertificateReport report;
  report.claim = "normalizer[custom]";
  stamp_context(report, ctx);
  bool all = membership_checks(report, ctx, conjugators, subgroup_labels);
  report.status = all ? CertStatus::verified : CertStatus::refuted;
  report.duration_seconds = timer.seconds();
  return report;
}

CertificateReport verify_normalizer(const VerificationContext& ctx) {
  Timer timer;
  CertificateReport report;
  report.claim = "normalizer";
  stamp_context(report, ctx);
  const ArtinGroup& group = *ctx.engine;

  GeneratorWord a1 = {Letter{1, +1}};
  std::vector<std::pair<std::string, GeneratorWord>> conjugators = {
      {"b", ctx.b},
      {"b^-1", inverse_word(ctx.b)},
      {"a1", a1},
      {"a1^-1", inverse_word(a1)},
  };
  bool all = membership_checks(report, ctx, conjugators, {2, 5});

  // The swap: conjugation by b permutes {a2, a5}.
  Convention conv = ctx.resolution.convention;
  GarsideElement c2 = group.normalize(conjugated_word({Letter{2, +1}}, ctx.b, conv));
  GarsideElement c5 = group.normalize(conjugated_word({Letter{5, +1}}, ctx.b, conv));
  GarsideElement a2 = group.normalize({Letter{2, +1}});
  GarsideElement a5 = group.normalize({Letter{5, +1}});
  bool swapped = c2 == a5 && c5 == a2;
  bool fixed = c2 == a2 && c5 == a5;
  report.note("a2^b.normal_form", group.to_text(c2));
  report.note("a5^b.normal_form", group.to_text(c5));
  report.note("swap_as_set", yes_no(swapped || fixed));
  report.note("swap_is_transposition", yes_no(swapped));
  all = all && (swapped || fixed);

  report.status = all ? CertStatus::verified : CertStatus::refuted;
  report.duration_seconds = timer.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// torsion

namespace {

CertificateReport torsion_checks(const VerificationContext& ctx, const std::string& claim,
                                 const GeneratorWord& word, const std::string& tag,
                                 int max_power) {
  if (max_power < 1) fail(Errc::invalid_argument, "max_power must be at least 1");
  Timer timer;
  CertificateReport report;
  report.claim = claim;
  stamp_context(report, ctx);
  report.param("max_power", std::to_string(max_power));
  const ArtinGroup& group = *ctx.engine;

  report.note("deg(" + tag + ")", std::to_string(word_degree(word)));
  report.note("deg(Delta)", std::to_string(group.degree(ctx.delta_word)));
  report.note("degree_obstruction",
              "deg(Delta^k) = 36k is nonzero for k != 0, so no positive power of a "
              "degree-0 nontrivial element is a power of Delta");
  report.note("center_exponent", std::to_string(group.center_exponent()));

  GarsideElement base = group.normalize(word);
  bool all = true;
  for (int m = 1; m <= max_power; ++m) {
    GarsideElement pm = group.power(base, m);
    bool nontrivial = !pm.is_trivial();
    bool noncentral_trivial = !group.mod_center_trivial(pm);
    std::string key = tag + "^" + std::to_string(m);
    report.note(key + ".normal_form", nf_evidence(group, pm));
    report.note(key + ".nontrivial", yes_no(nontrivial));
    report.note(key + ".nontrivial_mod_center", yes_no(noncentral_trivial));
    all = all && nontrivial && noncentral_trivial;
  }
  report.status = all ? CertStatus::verified : CertStatus::refuted;
  report.duration_seconds = timer.seconds();
  return report;
}

}  // namespace

CertificateReport verify_torsion(const VerificationContext& ctx, int max_power) {
  return torsion_checks(ctx, "torsion", ctx.w(ctx.resolution.convention), "w", max_power);
}

CertificateReport verify_torsion_word(const VerificationContext& ctx,
                                      const GeneratorWord& candidate,
                                      const std::string& label, int max_power) {
  return torsion_checks(ctx, "torsion[" + label + "]", candidate, label, max_power);
}

// ---------------------------------------------------------------------------
// freeness

namespace {

/// Freely reduced words over {w, w^-1, c, c^-1} in word-language syntax.
/// Letters are 0 = w, 1 = w^-1, 2 = c, 3 = c^-1; letter l cancels l ^ 1.
std::string letters_to_expression(const std::vector<int>& letters) {
  static const char* names[4] = {"w", "w^-1", "c", "c^-1"};
  std::ostringstream out;
  for (std::size_t i = 0; i < letters.size(); ++i)
    out << (i ? " * " : "") << names[letters[i]];
  return out.str();
}

struct FreenessScan {
  bool all_nontrivial_mod_center = true;
  bool all_nontrivial_in_group = true;
  long long words = 0;
  std::vector<int> first_center_counterexample;
  std::vector<int> first_group_counterexample;
};

void scan_words(const ArtinGroup& group, const std::vector<GarsideElement>& letter_elements,
                const GarsideElement& prefix, const std::vector<int>& letters,
                int max_length, FreenessScan& scan) {
  for (int l = 0; l < 4; ++l) {
    if (!letters.empty() && (letters.back() ^ 1) == l) continue;  // not freely reduced
    GarsideElement value = group.multiply(prefix, letter_elements[l]);
    std::vector<int> word = letters;
    word.push_back(l);
    ++scan.words;
    if (group.mod_center_trivial(value) && scan.all_nontrivial_mod_center) {
      scan.all_nontrivial_mod_center = false;
      scan.first_center_counterexample = word;
    }
    if (value.is_trivial() && scan.all_nontrivial_in_group) {
      scan.all_nontrivial_in_group = false;
      scan.first_group_counterexample = word;
    }
    if (static_cast<int>(word.size()) < max_length)
      scan_words(group, letter_elements, value, word, max_length, scan);
  }
}

}  // namespace

CertificateReport freeness_certificate(const VerificationContext& ctx, FreenessParams params) {
  if (params.n_low < 1 || params.n_high < params.n_low || params.max_word_length < 1)
    fail(Errc::invalid_argument, "freeness bounds must be positive and ordered");
  Timer timer;
  CertificateReport report;
  report.claim = "freeness";
  stamp_context(report, ctx);
  report.param("n_range", std::to_string(params.n_low) + ".." + std::to_string(params.n_high));
  report.param("max_word_length", std::to_string(params.max_word_length));

  const ArtinGroup& group = *ctx.engine;
  Convention conv = ctx.resolution.convention;
  const GeneratorWord& w_word = ctx.w(conv);

  KernelWitness w_witness = kernel_witness(ctx.rep, w_word);
  report.note("w.homology_image_identity", yes_no(w_witness.identity_image));

  GarsideElement w_nf = group.normalize(w_word);
  GarsideElement w_inv = group.inverse(w_nf);
  GarsideElement kappa_nf = group.normalize(ctx.kappa);

  int certified_n = 0;
  for (int n = params.n_low; n <= params.n_high && certified_n == 0; ++n) {
    std::string prefix = "n=" + std::to_string(n);
    GeneratorWord kappa_n;
    for (int r = 0; r < n; ++r) kappa_n = concat(kappa_n, ctx.kappa);
    GeneratorWord c_word = conjugated_word(w_word, kappa_n, Convention::conjugate_left);
    KernelWitness c_witness = kernel_witness(ctx.rep, c_word);
    report.note(prefix + ".c",
                "kappa^-" + std::to_string(n) + " * w * kappa^" + std::to_string(n));
    report.note(prefix + ".c.homology_image_identity", yes_no(c_witness.identity_image));

    GarsideElement kappa_pow = group.power(kappa_nf, n);
    GarsideElement c_nf = group.conjugate(w_nf, kappa_pow);
    GarsideElement c_inv = group.inverse(c_nf);
    std::vector<GarsideElement> letter_elements = {w_nf, w_inv, c_nf, c_inv};

    FreenessScan scan;
    scan_words(group, letter_elements, group.identity_element(), {},
               params.max_word_length, scan);
    report.note(prefix + ".words_scanned", std::to_string(scan.words));
    report.note(prefix + ".all_nontrivial_mod_center",
                yes_no(scan.all_nontrivial_mod_center));
    report.note(prefix + ".all_nontrivial_in_group",
                yes_no(scan.all_nontrivial_in_group));
    if (!scan.all_nontrivial_mod_center)
      report.note(prefix + ".counterexample_mod_center",
                  letters_to_expression(scan.first_center_counterexample));
    if (!scan.all_nontrivial_in_group)
      report.note(prefix + ".counterexample_in_group",
                  letters_to_expression(scan.first_group_counterexample));

    bool kernel_ok = w_witness.identity_image && c_witness.identity_image;
    if (kernel_ok && scan.all_nontrivial_mod_center) certified_n = n;
  }

  if (certified_n != 0) {
    report.note("certified_n", std::to_string(certified_n));
    report.status = CertStatus::verified;
  } else {
    report.note("certified_n", "none in range");
    report.status = CertStatus::exhausted_without_decision;
  }
  report.note("freeness_semantics",
              "a passing scan is consistent with, not a proof of, freeness of "
              "<w, w^(kappa^n)> modulo the center");
  report.duration_seconds = timer.seconds();
  return report;
}

// ---------------------------------------------------------------------------
// profiles

Profile profile_from_name(const std::string& name) {
  if (name == "quick") return Profile::quick;
  if (name == "full") return Profile::full;
  fail(Errc::invalid_argument, "unknown profile `" + name + "`");
}

std::vector<CertificateReport> run_all(const VerificationContext& ctx, Profile profile) {
  std::vector<CertificateReport> reports;
  reports.push_back(verify_wajnryb(ctx));
  reports.push_back(verify_normalizer(ctx));
  if (profile == Profile::quick) {
    reports.push_back(verify_torsion(ctx, 3));
    reports.push_back(freeness_certificate(ctx, FreenessParams{1, 2, 2}));
  } else {
    reports.push_back(verify_torsion(ctx, 6));
    reports.push_back(freeness_certificate(ctx, FreenessParams{1, 8, 4}));
  }
  return reports;
}

bool all_verified(const std::vector<CertificateReport>& reports) {
  for (const auto& r : reports)
    if (r.status != CertStatus::verified) return false;
  return !reports.empty();
}

}  // namespace artin
