#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "artin/catalog.hpp"
#include "artin/garside.hpp"
#include "artin/homology.hpp"
#include "artin/words.hpp"

namespace artin {

enum class CertStatus { verified, refuted, exhausted_without_decision };

const char* status_name(CertStatus status);
CertStatus status_from_name(const std::string& name);

/// Result of one verification pipeline.  `parameters` are the bounds and
/// conventions the run was configured with; `evidence` is enough to replay
/// the decision (normal forms, matrices, counterexample words).  Both are
/// insertion-ordered key/value lists so reports are deterministic.
struct CertificateReport {
  std::string claim;
  CertStatus status = CertStatus::exhausted_without_decision;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> evidence;
  double duration_seconds = 0.0;

  void param(const std::string& key, const std::string& value);
  void note(const std::string& key, const std::string& value);

  std::string text() const;
  nlohmann::ordered_json json() const;
  static CertificateReport from_json(const nlohmann::ordered_json& j);

  /// Equality up to the wall-clock duration (the only nondeterministic
  /// field).
  bool same_content(const CertificateReport& other) const;
};

std::string reports_text(const std::vector<CertificateReport>& reports);
nlohmann::ordered_json reports_json(const std::vector<CertificateReport>& reports);

/// Everything the pipelines need, resolved once: the labeling, its engine,
/// the genus-3 homological representation, and the catalog words.
struct VerificationContext {
  LabelingResolution resolution;
  Labeling labeling;
  std::shared_ptr<ArtinGroup> engine;
  HomologyRep rep;
  GeneratorWord b, kappa, delta_word;
  GeneratorWord w_left, w_right;  // both conjugation conventions

  /// Throws no_compliant_labeling if no candidate passes.
  static VerificationContext create();
  static VerificationContext create(const std::vector<Labeling>& candidates);

  const GeneratorWord& w(Convention c) const {
    return c == Convention::conjugate_left ? w_left : w_right;
  }
};

/// w is nontrivial (normal form as evidence), has degree 0, and has identity
/// homological image; all three under both conjugation conventions.
CertificateReport verify_wajnryb(const VerificationContext& ctx);
/// Same checks against a replacement word (used to exercise the refutation
/// paths).
CertificateReport verify_wajnryb_word(const VerificationContext& ctx,
                                      const GeneratorWord& candidate,
                                      const std::string& label);

/// b+-1- and a1+-1-conjugates of a2 and a5 stay in <a2,a5>, and conjugation
/// by b swaps a2 and a5 as a set.
CertificateReport verify_normalizer(const VerificationContext& ctx);
CertificateReport verify_normalizer_conjugators(
    const VerificationContext& ctx,
    const std::vector<std::pair<std::string, GeneratorWord>>& conjugators,
    const std::vector<int>& subgroup_labels);

/// w^m nontrivial and non-central for m = 1..max_power, with the degree
/// obstruction recorded.
CertificateReport verify_torsion(const VerificationContext& ctx, int max_power);
CertificateReport verify_torsion_word(const VerificationContext& ctx,
                                      const GeneratorWord& candidate,
                                      const std::string& label, int max_power);

struct FreenessParams {
  int n_low = 1;
  int n_high = 8;
  int max_word_length = 4;
};

/// For each n in the range, c = kappa^-n w kappa^n; checks that w and c have
/// identity homological image and that every freely reduced word of length
/// <= max_word_length over {w, w^-1, c, c^-1} is nontrivial modulo the
/// center (and in the group itself, as a secondary line).  Verified once
/// some n passes in full; exhausted-without-decision if none does.  A pass
/// is consistent with, not a proof of, freeness.
CertificateReport freeness_certificate(const VerificationContext& ctx, FreenessParams params);

enum class Profile { quick, full };

Profile profile_from_name(const std::string& name);

/// quick = wajnryb, normalizer, torsion(3), freeness(1..2, length 2);
/// full  = wajnryb, normalizer, torsion(6), freeness(1..8, length 4).
std::vector<CertificateReport> run_all(const VerificationContext& ctx, Profile profile);

bool all_verified(const std::vector<CertificateReport>& reports);

}  // namespace artin
