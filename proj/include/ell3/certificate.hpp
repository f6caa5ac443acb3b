#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ell3/solver.hpp"

namespace ell3 {

/// Line-oriented text form of a certificate:
///
///   step <n> point <label> <red|blue> <seed|decision|forced:C#id>
///   conflict point <label> forced-red-by C#i forced-blue-by C#j
///   backtrack <trail-length>
///   unsat point <label> forced-red-by C#i forced-blue-by C#j   (final line)
///   sat                                                          (final line)
///
/// `n` is the 1-based trail position of the step.
std::string write_certificate(const DerivationCertificate& cert, std::span<const std::string> labels);

/// Parse the text form. The coloring of a Sat certificate is left empty;
/// replay_certificate reconstructs it.
DerivationCertificate parse_certificate(std::string_view text, std::span<const std::string> labels);

struct ReplayResult {
  Outcome outcome = Outcome::Sat;
  std::vector<Color> coloring;           // Sat only
  std::vector<std::optional<Color>> last_state;  // colors after the final event
  std::size_t leaves = 0;                // refuted leaves (Unsat) or 1 (Sat)
};

/// Re-check every event against the constraint list without any search:
/// seeds match `seed`, forced steps are justified by their constraint under
/// the colors present at that moment, conflicts exclude both colors, the
/// decision tree refutes both branches of every decision (Unsat) and the final
/// coloring violates nothing (Sat). Throws CertificateError naming the
/// offending event (1-based).
ReplayResult replay_certificate(const DerivationCertificate& cert, std::size_t num_points,
                                std::span<const Constraint> constraints, const Seed& seed);

}  // namespace ell3
