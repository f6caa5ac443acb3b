#include "ell3/certificate.hpp"

#include <array>
#include <charconv>
#include <map>
#include <sstream>

#include "ell3/error.hpp"

namespace ell3 {

namespace {

std::string cid(std::size_t id) { return "C#" + std::to_string(id); }

std::vector<std::string_view> tokens(std::string_view line) {
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

std::size_t parse_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw CertificateError(line, "expected a number, got '" + std::string(tok) + "'");
  return v;
}

std::size_t parse_cid(std::string_view tok, std::size_t line) {
  if (tok.substr(0, 2) != "C#") throw CertificateError(line, "expected C#<id>, got '" + std::string(tok) + "'");
  return parse_index(tok.substr(2), line);
}

}  // namespace

std::string write_certificate(const DerivationCertificate& cert, std::span<const std::string> labels) {
  std::ostringstream out;
  std::size_t trail = 0;
  for (std::size_t e = 0; e < cert.events.size(); ++e) {
    const auto& ev = cert.events[e];
    if (const auto* s = std::get_if<TrailStep>(&ev)) {
      out << "step " << ++trail << " point " << labels[s->point] << ' ' << to_string(s->color) << ' ';
      switch (s->reason.kind) {
        case ReasonKind::Seed: out << "seed"; break;
        case ReasonKind::Decision: out << "decision"; break;
        case ReasonKind::Forced: out << "forced:" << cid(s->reason.constraint); break;
      }
      out << '\n';
    } else if (const auto* c = std::get_if<Conflict>(&ev)) {
      const bool terminal = cert.outcome == Outcome::Unsat && e + 1 == cert.events.size();
      out << (terminal ? "unsat" : "conflict") << " point " << labels[c->point] << " forced-red-by "
          << cid(c->forced_red_by) << " forced-blue-by " << cid(c->forced_blue_by) << '\n';
    } else {
      trail = std::get<Backtrack>(ev).trail_length;
      out << "backtrack " << trail << '\n';
    }
  }
  if (cert.outcome == Outcome::Sat) out << "sat\n";
  return out.str();
}

DerivationCertificate parse_certificate(std::string_view text, std::span<const std::string> labels) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  auto point_of = [&](std::string_view label, std::size_t line) {
    auto it = index.find(label);
    if (it == index.end()) throw CertificateError(line, "unknown point '" + std::string(label) + "'");
    return it->second;
  };

  DerivationCertificate cert;
  bool terminated = false;
  std::size_t trail = 0;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto toks = tokens(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (toks.empty()) continue;
    if (terminated) throw CertificateError(lineno, "content after the terminal line");

    if (toks[0] == "step") {
      if (toks.size() != 6 || toks[2] != "point") throw CertificateError(lineno, "malformed step");
      if (parse_index(toks[1], lineno) != trail + 1)
        throw CertificateError(lineno, "step number should be " + std::to_string(trail + 1));
      TrailStep s;
      s.point = point_of(toks[3], lineno);
      auto color = parse_color(toks[4]);
      if (!color) throw CertificateError(lineno, "bad color");
      s.color = *color;
      if (toks[5] == "seed") {
        s.reason = Reason::seed();
      } else if (toks[5] == "decision") {
        s.reason = Reason::decision();
      } else if (toks[5].substr(0, 7) == "forced:") {
        s.reason = Reason::forced(parse_cid(toks[5].substr(7), lineno));
      } else {
        throw CertificateError(lineno, "bad reason '" + std::string(toks[5]) + "'");
      }
      ++trail;
      cert.events.emplace_back(s);
    } else if (toks[0] == "conflict" || toks[0] == "unsat") {
      if (toks.size() != 7 || toks[1] != "point" || toks[3] != "forced-red-by" || toks[5] != "forced-blue-by")
        throw CertificateError(lineno, "malformed conflict");
      cert.events.emplace_back(
          Conflict{point_of(toks[2], lineno), parse_cid(toks[4], lineno), parse_cid(toks[6], lineno)});
      if (toks[0] == "unsat") {
        cert.outcome = Outcome::Unsat;
        terminated = true;
      }
    } else if (toks[0] == "backtrack") {
      if (toks.size() != 2) throw CertificateError(lineno, "malformed backtrack");
      trail = parse_index(toks[1], lineno);
      cert.events.emplace_back(Backtrack{trail});
    } else if (toks[0] == "sat") {
      if (toks.size() != 1) throw CertificateError(lineno, "malformed sat line");
      cert.outcome = Outcome::Sat;
      terminated = true;
    } else {
      throw CertificateError(lineno, "unknown line '" + std::string(toks[0]) + "'");
    }
  }
  if (!terminated) throw CertificateError(lineno, "missing terminal sat/unsat line");
  return cert;
}

namespace {

// The checker's own reading of a constraint: kept separate from the solver.
bool respected(const Constraint& c, const std::array<Color, 4>& m) {
  if (c.kind == ConstraintKind::Centroid) {
    int red = (m[0] == Color::Red) + (m[1] == Color::Red) + (m[2] == Color::Red);
    return (m[3] == Color::Red) == (red >= 2);
  }
  return !(m[0] == m[1] && m[1] == m[2]);
}

class Replayer {
 public:
  Replayer(std::size_t n, std::span<const Constraint> constraints, const Seed& seed)
      : constraints_(constraints), colors_(n) {
    for (auto [p, c] : seed) seed_.emplace(p, c);
  }

  ReplayResult run(const DerivationCertificate& cert) {
    const auto& events = cert.events;
    for (std::size_t e = 0; e < events.size(); ++e) {
      line_ = e + 1;
      if (after_conflict_ && !std::holds_alternative<Backtrack>(events[e]))
        fail("a conflict must be followed by backtrack or end the certificate");
      if (pending_flip_ && !std::holds_alternative<TrailStep>(events[e]))
        fail("backtrack must be followed by the flipped decision");
      std::visit([&](const auto& ev) { handle(ev); }, events[e]);
    }
    line_ = events.size() + 1;

    ReplayResult result;
    result.outcome = cert.outcome;
    result.last_state = colors_;
    if (seeded_ != seed_.size()) fail("not every seed was applied");
    if (cert.outcome == Outcome::Unsat) {
      if (!after_conflict_) fail("unsat certificate must end with a conflict");
      for (const auto& d : decisions_)
        if (!d.second_branch) fail("decision on point " + std::to_string(d.point) + " has an unrefuted branch");
      result.leaves = leaves_;
    } else {
      if (after_conflict_ || pending_flip_) fail("sat certificate ends inside a refutation");
      std::vector<Color> total;
      for (std::size_t p = 0; p < colors_.size(); ++p) {
        if (!colors_[p]) fail("sat certificate leaves point " + std::to_string(p) + " uncolored");
        total.push_back(*colors_[p]);
      }
      for (std::size_t id = 0; id < constraints_.size(); ++id) {
        std::array<Color, 4> m{};
        auto pts = constraints_[id].points();
        for (std::size_t i = 0; i < pts.size(); ++i) m[i] = total[pts[i]];
        if (!respected(constraints_[id], m)) fail("final coloring violates " + cid(id));
      }
      result.coloring = std::move(total);
      result.leaves = 1;
    }
    return result;
  }

 private:
  struct Decision {
    std::size_t trail_pos;
    std::size_t point;
    Color color;
    bool second_branch;
  };

  [[noreturn]] void fail(const std::string& what) const { throw CertificateError(line_, what); }

  const Constraint& constraint(std::size_t id) const {
    if (id >= constraints_.size()) fail("no constraint " + cid(id));
    return constraints_[id];
  }

  // Is color `c` for `p` ruled out by constraint `id` under the current colors?
  bool excludes(std::size_t id, std::size_t p, Color c) const {
    const Constraint& con = constraint(id);
    std::array<Color, 4> m{};
    bool found = false;
    auto pts = con.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] == p) {
        m[i] = c;
        found = true;
      } else if (colors_[pts[i]]) {
        m[i] = *colors_[pts[i]];
      } else {
        return false;
      }
    }
    return found && !respected(con, m);
  }

  void handle(const TrailStep& s) {
    if (s.point >= colors_.size()) fail("point out of range");
    if (colors_[s.point]) fail("point " + std::to_string(s.point) + " is already colored");
    switch (s.reason.kind) {
      case ReasonKind::Seed: {
        auto it = seed_.find(s.point);
        if (it == seed_.end() || it->second != s.color) fail("step is not part of the seed");
        if (seed_phase_over_) fail("seed step after search began");
        ++seeded_;
        break;
      }
      case ReasonKind::Forced: {
        seed_phase_over_ = true;
        const std::size_t id = s.reason.constraint;
        if (!constraint(id).contains(s.point)) fail(cid(id) + " does not contain the point");
        if (!excludes(id, s.point, opposite(s.color)) || excludes(id, s.point, s.color))
          fail(cid(id) + " does not force " + std::string(to_string(s.color)));
        break;
      }
      case ReasonKind::Decision: {
        seed_phase_over_ = true;
        if (pending_flip_) {
          Decision& d = decisions_.back();
          if (s.point != d.point || s.color != opposite(d.color))
            fail("expected the opposite branch of the last open decision");
          d.second_branch = true;
          pending_flip_ = false;
        } else {
          decisions_.push_back({trail_.size(), s.point, s.color, false});
        }
        break;
      }
    }
    colors_[s.point] = s.color;
    trail_.push_back(s.point);
  }

  void handle(const Conflict& c) {
    if (c.point >= colors_.size()) fail("point out of range");
    if (colors_[c.point]) fail("conflict point is already colored");
    if (!excludes(c.forced_red_by, c.point, Color::Blue)) fail(cid(c.forced_red_by) + " does not exclude blue");
    if (!excludes(c.forced_blue_by, c.point, Color::Red)) fail(cid(c.forced_blue_by) + " does not exclude red");
    seed_phase_over_ = true;
    after_conflict_ = true;
    ++leaves_;
  }

  void handle(const Backtrack& b) {
    if (!after_conflict_) fail("backtrack without a preceding conflict");
    after_conflict_ = false;
    while (!decisions_.empty() && decisions_.back().second_branch) decisions_.pop_back();
    if (decisions_.empty()) fail("backtrack with no open decision");
    if (decisions_.back().trail_pos != b.trail_length)
      fail("backtrack must return to just before the innermost open decision");
    while (trail_.size() > b.trail_length) {
      colors_[trail_.back()].reset();
      trail_.pop_back();
    }
    pending_flip_ = true;
  }

  std::span<const Constraint> constraints_;
  std::map<std::size_t, Color> seed_;
  std::vector<std::optional<Color>> colors_;
  std::vector<std::size_t> trail_;
  std::vector<Decision> decisions_;
  std::size_t line_ = 0;
  std::size_t seeded_ = 0;
  std::size_t leaves_ = 0;
  bool seed_phase_over_ = false;
  bool after_conflict_ = false;
  bool pending_flip_ = false;
};

}  // namespace

ReplayResult replay_certificate(const DerivationCertificate& cert, std::size_t num_points,
                                std::span<const Constraint> constraints, const Seed& seed) {
  for (const auto& c : constraints)
    for (auto p : c.points())
      if (p >= num_points) throw CertificateError(0, "constraint refers to a missing point");
  return Replayer(num_points, constraints, seed).run(cert);
}

}  // namespace ell3
