#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ell3/certificate.hpp"
#include "ell3/datasets.hpp"

namespace ell3 {

struct ChainStep {
  std::string label;
  std::size_t point = 0;
  Color color = Color::Red;
  std::size_t constraint = 0;           // lowest-id forcing constraint
  ConstraintKind kind = ConstraintKind::Eq1;
  std::vector<std::string> witnesses;   // the other members of `constraint`
  std::vector<std::size_t> candidates;  // every constraint forcing this color
};

struct ChainContradiction {
  std::string label;
  std::size_t point = 0;
  std::size_t forced_red_by = 0;
  std::size_t forced_blue_by = 0;
  std::vector<std::string> red_witnesses, blue_witnesses;
};

/// Result of checking one case: every chain point but the last is forced by
/// already-colored points and the last is forced to both colors.
struct ChainVerdict {
  std::string case_name;
  Variant variant = Variant::Identity;
  std::vector<std::string> labels;       // display labels of the case's point set
  std::vector<Constraint> constraints;   // Ell3/Eq1/Eq2 only
  Seed seed;                             // after applying the variant
  std::vector<ChainStep> steps;
  ChainContradiction contradiction;

  /// Seeds, forced steps and the final double forcing in certificate form.
  DerivationCertificate certificate() const;
  /// One line per step: `s_k <- color via {witnesses} [kind]`.
  std::string report() const;
};

/// Check the case's chain under the variant recorded in `spec`.
///
/// Only Ell3, Eq1 and Eq2 moves are available. Throws StepNotForced when a
/// point is forced to neither color (with a diagnostic of every constraint
/// through it), PrematureContradiction if an intermediate point is already
/// double-forced, NoContradiction if the last point is forced to one color
/// only, UnknownLabel for unresolved labels.
ChainVerdict check_chain(const CaseSpec& spec, const PointSetFile& points);
ChainVerdict check_chain(const CaseSpec& spec, const PointSetFile& points, Variant variant);

/// First variant in kVariantSearchOrder under which the chain verifies.
std::optional<Variant> find_variant(const CaseSpec& spec, const PointSetFile& points);

/// Re-derive each recorded step from its recorded justification. Throws
/// OutOfOrderWitness if a justification uses a chain point not yet colored
/// and NoContradiction/StepNotForced if a justification does not force.
void replay_verdict(const ChainVerdict& verdict, const CaseSpec& spec);

struct CaseSummary {
  std::vector<ChainVerdict> verdicts;
  /// Every red/blue assignment of q1, q2, q3, q3', q4, q5 extends, directly or
  /// after reflection, the seed of some verified case (normalised to the
  /// shared base coloring).
  bool exhaustive = false;
  std::vector<std::string> uncovered;  // assignments with no covering case
};

CaseSummary check_all_cases();
/// Same, over caller-supplied datasets.
CaseSummary check_cases(const std::vector<Dataset>& cases);

}  // namespace ell3
