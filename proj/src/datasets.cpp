#include "ell3/datasets.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "ell3/error.hpp"

namespace ell3 {

namespace detail {
const std::map<std::string, std::string_view>& bundled_files();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Iterates lines, handing (line number, text before '#', full line) to `fn`.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++lineno;
    std::string_view data = line.substr(0, line.find('#'));
    fn(lineno, data, line);
    pos = end + 1;
  }
}

std::int64_t parse_int(std::string_view tok, std::size_t lineno) {
  std::int64_t v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw SyntaxError(lineno, "expected an integer, got '" + std::string(tok) + "'");
  // Keep squared-distance arithmetic comfortably inside 64 bits.
  if (v > 1'000'000 || v < -1'000'000)
    throw SyntaxError(lineno, "coordinate out of range: " + std::string(tok));
  return v;
}

}  // namespace

std::optional<std::size_t> PointSetFile::find(std::string_view label) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (display_label(i) == label) return i;
  return std::nullopt;
}

std::string PointSetFile::display_label(std::size_t i) const {
  const auto& l = points.at(i).label;
  return l.empty() ? "pt" + std::to_string(i + 1) : l;
}

std::vector<std::string> PointSetFile::display_labels() const {
  std::vector<std::string> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out.push_back(display_label(i));
  return out;
}

PointSetFile parse_pointset(std::string_view text, std::string name) {
  PointSetFile file;
  file.name = std::move(name);
  std::map<Quadruple, std::size_t> seen_points;
  std::map<std::string, std::size_t> line_of_label;
  bool in_header = true;

  for_each_line(text, [&](std::size_t lineno, std::string_view data, std::string_view line) {
    auto toks = split_ws(data);
    if (toks.empty()) {
      if (in_header && !line.empty() && line.front() == '#') file.comments.emplace_back(line.substr(1));
      return;
    }
    in_header = false;
    if (toks.size() < 4 || toks.size() > 5)
      throw SyntaxError(lineno, "expected four integers and an optional label");
    Quadruple q{parse_int(toks[0], lineno), parse_int(toks[1], lineno), parse_int(toks[2], lineno),
                parse_int(toks[3], lineno)};
    std::string label = toks.size() == 5 ? std::string(toks[4]) : std::string();
    if (auto [it, ok] = seen_points.emplace(q, lineno); !ok) {
      throw DuplicatePoint("line " + std::to_string(lineno) + ": point repeats line " +
                           std::to_string(it->second));
    }
    file.points.push_back(point_from_quadruple(q, std::move(label)));
  });

  for (std::size_t i = 0; i < file.points.size(); ++i) {
    auto label = file.display_label(i);
    if (auto [it, ok] = line_of_label.emplace(label, i); !ok)
      throw DuplicateLabel("label '" + label + "' used twice");
  }
  return file;
}

std::string serialize_pointset(const PointSetFile& file) {
  std::ostringstream out;
  for (const auto& c : file.comments) out << '#' << c << '\n';
  for (const auto& p : file.points) {
    if (!p.quadruple) throw std::invalid_argument("point without quadruple coordinates");
    const auto& q = *p.quadruple;
    out << q.a << ' ' << q.b << ' ' << q.c << ' ' << q.d;
    if (!p.label.empty()) out << ' ' << p.label;
    out << '\n';
  }
  return out.str();
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Identity: return "identity";
    case Variant::Mirror: return "mirror";
    case Variant::Swap: return "swap";
    case Variant::MirrorSwap: return "mirror+swap";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view s) {
  for (auto v : kVariantSearchOrder)
    if (to_string(v) == s) return v;
  return std::nullopt;
}

CaseSpec parse_case(std::string_view text) {
  CaseSpec spec;
  bool in_header = true;
  std::set<std::string> seeded;
  for_each_line(text, [&](std::size_t lineno, std::string_view data, std::string_view line) {
    auto toks = split_ws(data);
    if (toks.empty()) {
      if (in_header && !line.empty() && line.front() == '#') spec.comments.emplace_back(line.substr(1));
      return;
    }
    in_header = false;
    const auto key = toks[0];
    if (key == "name" || key == "points" || key == "variant" || key == "kinds") {
      if (toks.size() != 2) throw SyntaxError(lineno, std::string(key) + " takes one argument");
      if (key == "name") {
        spec.name = toks[1];
      } else if (key == "points") {
        spec.points_name = toks[1];
      } else if (key == "kinds") {
        try {
          spec.kinds = parse_kind_set(toks[1]);
        } catch (const std::invalid_argument& e) {
          throw SyntaxError(lineno, e.what());
        }
      } else {
        auto v = parse_variant(toks[1]);
        if (!v) throw SyntaxError(lineno, "unknown variant '" + std::string(toks[1]) + "'");
        spec.variant = *v;
      }
    } else if (key == "seed") {
      if (toks.size() != 3) throw SyntaxError(lineno, "expected: seed <label> <red|blue>");
      auto c = parse_color(toks[2]);
      if (!c) throw SyntaxError(lineno, "color must be red or blue");
      if (!seeded.insert(std::string(toks[1])).second)
        throw DuplicateLabel("line " + std::to_string(lineno) + ": label seeded twice");
      spec.seeds.push_back({std::string(toks[1]), *c});
    } else if (key == "chain") {
      for (std::size_t i = 1; i < toks.size(); ++i) spec.chain.emplace_back(toks[i]);
    } else {
      throw SyntaxError(lineno, "unknown directive '" + std::string(key) + "'");
    }
  });

  std::set<std::string> chain_labels;
  for (const auto& l : spec.chain) {
    if (!chain_labels.insert(l).second) throw DuplicateLabel("chain label '" + l + "' repeats");
    if (seeded.count(l)) throw DuplicateLabel("chain label '" + l + "' is also seeded");
  }
  return spec;
}

std::string serialize_case(const CaseSpec& spec) {
  std::ostringstream out;
  for (const auto& c : spec.comments) out << '#' << c << '\n';
  if (!spec.name.empty()) out << "name " << spec.name << '\n';
  if (!spec.points_name.empty()) out << "points " << spec.points_name << '\n';
  for (const auto& s : spec.seeds) out << "seed " << s.label << ' ' << to_string(s.color) << '\n';
  if (!spec.chain.empty()) {
    out << "chain";
    for (const auto& l : spec.chain) out << ' ' << l;
    out << '\n';
  }
  if (spec.variant != Variant::Identity) out << "variant " << to_string(spec.variant) << '\n';
  if (spec.kinds != KindSet::all()) out << "kinds " << to_string(spec.kinds) << '\n';
  return out.str();
}

std::vector<std::string> bundled_names() {
  return {"fig1", "case1", "case2", "case3", "case4", "case5", "case6"};
}

std::string_view bundled_file(std::string_view filename) {
  const auto& files = detail::bundled_files();
  auto it = files.find(std::string(filename));
  if (it == files.end()) throw UnknownDataset("no bundled file '" + std::string(filename) + "'");
  return it->second;
}

Dataset bundled(std::string_view name) {
  const auto& files = detail::bundled_files();
  auto it = files.find(std::string(name) + ".case");
  if (it == files.end()) throw UnknownDataset("unknown dataset '" + std::string(name) + "'");
  Dataset ds;
  ds.spec = parse_case(it->second);
  const std::string pts = ds.spec.points_name.empty() ? std::string(name) : ds.spec.points_name;
  ds.points = parse_pointset(bundled_file(pts + ".pts"), pts);
  for (const auto& l : ds.spec.chain)
    if (!ds.points.find(l)) throw UnknownLabel(std::string(name) + ": chain label '" + l + "' not in point set");
  return ds;
}

Seed resolve_seed(const PointSetFile& file, const std::vector<SeedEntry>& seeds, bool skip_missing) {
  Seed out;
  for (const auto& s : seeds) {
    auto idx = file.find(s.label);
    if (!idx) {
      if (skip_missing) continue;
      throw UnknownLabel("seed label '" + s.label + "' not in point set");
    }
    out.emplace_back(*idx, s.color);
  }
  return out;
}

LabelMap mirror_label_map(const PointSetFile& file) {
  std::map<Quadruple, std::string> labelled;
  for (const auto& p : file.points)
    if (!p.label.empty() && p.quadruple) labelled.emplace(*p.quadruple, p.label);
  LabelMap out;
  for (const auto& [q, label] : labelled) {
    Quadruple r{q.a, q.b, -q.c, -q.d};
    if (auto it = labelled.find(r); it != labelled.end()) out.emplace(label, it->second);
  }
  return out;
}

const LabelMap& base_mirror_map() {
  static const LabelMap map = [] {
    auto fig1 = parse_pointset(bundled_file("fig1.pts"), "fig1");
    LabelMap m;
    for (auto& [from, to] : mirror_label_map(fig1))
      if (from.front() == 'p' || from.front() == 'q') m.emplace(from, to);
    return m;
  }();
  return map;
}

std::vector<SeedEntry> apply_variant(const std::vector<SeedEntry>& seeds, Variant v, const LabelMap& mirror) {
  const bool flip_labels = v == Variant::Mirror || v == Variant::MirrorSwap;
  const bool flip_colors = v == Variant::Swap || v == Variant::MirrorSwap;
  std::vector<SeedEntry> out;
  out.reserve(seeds.size());
  for (const auto& s : seeds) {
    SeedEntry e = s;
    if (flip_labels) {
      auto it = mirror.find(s.label);
      if (it == mirror.end()) throw UnknownLabel("no mirror image for seed label '" + s.label + "'");
      e.label = it->second;
    }
    if (flip_colors) e.color = opposite(e.color);
    out.push_back(std::move(e));
  }
  return out;
}

PointSetFile reflect_pointset(const PointSetFile& file, const LabelMap& mirror) {
  PointSetFile out;
  out.name = file.name + "-mirrored";
  out.comments = file.comments;
  for (const auto& p : file.points) {
    if (!p.quadruple) throw std::invalid_argument("point without quadruple coordinates");
    const auto& q = *p.quadruple;
    std::string label = p.label;
    if (auto it = mirror.find(label); it != mirror.end()) label = it->second;
    out.points.push_back(point_from_quadruple(q.a, q.b, -q.c, -q.d, std::move(label)));
  }
  return out;
}

}  // namespace ell3
