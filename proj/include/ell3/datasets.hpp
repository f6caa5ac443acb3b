#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ell3/color.hpp"
#include "ell3/geometry.hpp"

namespace ell3 {

/// A labelled list of integer-quadruple points.
///
/// Text form: one point per line, four signed integers and an optional label
/// token; `#` starts a comment. Leading comment lines are preserved so that
/// serialize(parse(text)) reproduces canonical files byte for byte.
struct PointSetFile {
  std::string name;
  std::vector<std::string> comments;  // leading comment lines, without '#'
  std::vector<PlanePoint> points;

  std::optional<std::size_t> find(std::string_view label) const;
  /// The point's label, or `pt<N>` (1-based) for unlabelled points.
  std::string display_label(std::size_t i) const;
  std::vector<std::string> display_labels() const;
};

PointSetFile parse_pointset(std::string_view text, std::string name = {});
std::string serialize_pointset(const PointSetFile& file);

struct SeedEntry {
  std::string label;
  Color color;
  friend bool operator==(const SeedEntry&, const SeedEntry&) = default;
};

/// How a case's stated seed is mapped before checking. Mirror relabels every
/// seeded base point by the reflection y -> -y of the base configuration;
/// Swap exchanges red and blue.
enum class Variant { Identity, Mirror, Swap, MirrorSwap };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);
inline constexpr Variant kVariantSearchOrder[] = {Variant::Identity, Variant::Mirror, Variant::Swap,
                                                  Variant::MirrorSwap};

/// Case file: `name`, `points`, `seed <label> <red|blue>`, `chain <label>...`
/// (concatenated in order), `variant <identity|mirror|swap|mirror+swap>`,
/// `kinds <kind,...>` (the constraint kinds the instance is posed over).
struct CaseSpec {
  std::string name;
  std::string points_name;
  std::vector<std::string> comments;
  std::vector<SeedEntry> seeds;
  std::vector<std::string> chain;
  Variant variant = Variant::Identity;
  KindSet kinds = KindSet::all();
};

CaseSpec parse_case(std::string_view text);
std::string serialize_case(const CaseSpec& spec);

struct Dataset {
  PointSetFile points;
  CaseSpec spec;
};

std::vector<std::string> bundled_names();
/// The transcribed point set and case for fig1, case1 ... case6.
Dataset bundled(std::string_view name);
/// Raw text of a bundled file such as "case3.pts".
std::string_view bundled_file(std::string_view filename);

/// Resolve seed labels to point indices, in seed order. Labels absent from
/// the file throw UnknownLabel unless `skip_missing`, in which case they are
/// dropped (base points not drawn in a particular figure).
Seed resolve_seed(const PointSetFile& file, const std::vector<SeedEntry>& seeds,
                         bool skip_missing);

using LabelMap = std::map<std::string, std::string>;

/// label -> label of the labelled point at the reflected position (y -> -y).
/// Labels whose reflection is not a labelled point are absent.
LabelMap mirror_label_map(const PointSetFile& file);

/// Mirror map of the shared base configuration p1..p4, q1..q5, q3'.
const LabelMap& base_mirror_map();

std::vector<SeedEntry> apply_variant(const std::vector<SeedEntry>& seeds, Variant v,
                                     const LabelMap& mirror = base_mirror_map());

/// Reflect every point (y -> -y). Labelled points whose reflection lands on a
/// base label are renamed through `mirror`; other labels are kept.
PointSetFile reflect_pointset(const PointSetFile& file, const LabelMap& mirror = base_mirror_map());

}  // namespace ell3
