#include "knotinv/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>

#include "knotinv/error.hpp"

namespace knotinv {

namespace {

constexpr int kUnknown = 0;
constexpr int kIn = 1;
constexpr int kOut = 2;

int opposite(int dir) { return dir == kIn ? kOut : kIn; }

struct Occurrences {
  std::map<int, std::vector<Slot>> at;

  explicit Occurrences(const std::vector<std::array<int, 4>>& quads) {
    for (int c = 0; c < static_cast<int>(quads.size()); ++c)
      for (int s = 0; s < 4; ++s) {
        int label = quads[c][s];
        if (label <= 0)
          throw Error(ErrorKind::InvalidPD, "edge label " + std::to_string(label) + " is not positive");
        at[label].push_back({c, s});
      }
    for (const auto& [label, slots] : at)
      if (slots.size() != 2)
        throw Error(ErrorKind::InvalidPD, "edge label " + std::to_string(label) + " is used " +
                                              std::to_string(slots.size()) + " time(s), expected 2");
  }

  Slot other(int label, Slot s) const {
    const auto& v = at.at(label);
    return v[0] == s ? v[1] : v[0];
  }
};

// Assigns an in/out direction to every slot and rotates quadruples so that
// slot 0 is the incoming under-strand.
LinkDiagram orient_quads(const std::vector<std::array<int, 4>>& quads, int unknots, bool pd_convention) {
  const Occurrences occ(quads);
  const int n = static_cast<int>(quads.size());
  std::vector<std::array<int, 4>> dir(n, {kUnknown, kUnknown, kUnknown, kUnknown});
  std::deque<Slot> queue;

  auto set = [&](Slot s, int d) {
    int& cur = dir[s.crossing][s.index];
    if (cur == d) return;
    if (cur != kUnknown)
      throw Error(ErrorKind::InvalidPD, "inconsistent orientation at edge " +
                                            std::to_string(quads[s.crossing][s.index]));
    cur = d;
    queue.push_back(s);
  };
  auto drain = [&] {
    while (!queue.empty()) {
      Slot s = queue.front();
      queue.pop_front();
      int d = dir[s.crossing][s.index];
      set(occ.other(quads[s.crossing][s.index], s), opposite(d));
      set({s.crossing, (s.index + 2) % 4}, opposite(d));
    }
  };

  if (pd_convention)
    for (int c = 0; c < n; ++c) {
      set({c, 0}, kIn);
      set({c, 2}, kOut);
    }
  drain();

  for (;;) {
    if (pd_convention) {
      int c = 0;
      while (c < n && dir[c][1] != kUnknown) ++c;
      if (c == n) break;
      int j = quads[c][1], l = quads[c][3];
      set(j == l + 1 || l > j + 1 ? Slot{c, 3} : Slot{c, 1}, kIn);
    } else {
      int best = 0;
      Slot where{};
      for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
          if (dir[c][s] == kUnknown && (best == 0 || quads[c][s] < best)) {
            best = quads[c][s];
            where = occ.at.at(best).front();
          }
      if (best == 0) break;
      set(where, kIn);
    }
    drain();
  }

  std::vector<Crossing> crossings(n);
  for (int c = 0; c < n; ++c) {
    std::array<int, 4> e = quads[c];
    std::array<int, 4> d = dir[c];
    if (d[0] != kIn) {
      e = {e[2], e[3], e[0], e[1]};
      d = {d[2], d[3], d[0], d[1]};
    }
    crossings[c] = {e, d[3] == kIn ? 1 : -1};
  }
  return LinkDiagram(std::move(crossings), unknots);
}

Slot other_end(const LinkDiagram& d, Slot s) {
  int label = d.crossings()[s.crossing].edges[s.index];
  Slot h = d.head(label);
  return h == s ? d.tail(label) : h;
}

std::vector<Join> straight_joins(int c) {
  return {{{c, 0}, {c, 2}}, {{c, 1}, {c, 3}}};
}

}  // namespace

// ------------------------------------------------------------------ LinkDiagram

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int unknots)
    : crossings_(std::move(crossings)), unknots_(unknots) {
  if (unknots_ < 0) throw Error(ErrorKind::InvalidPD, "negative unknot count");
  std::vector<std::array<int, 4>> quads;
  quads.reserve(crossings_.size());
  for (const auto& c : crossings_) {
    if (c.sign != 1 && c.sign != -1) throw Error(ErrorKind::InvalidPD, "crossing sign must be +1 or -1");
    quads.push_back(c.edges);
  }
  const Occurrences occ(quads);
  for (const auto& [label, slots] : occ.at) {
    bool in0 = crossings_[slots[0].crossing].is_incoming(slots[0].index);
    bool in1 = crossings_[slots[1].crossing].is_incoming(slots[1].index);
    if (in0 == in1)
      throw Error(ErrorKind::InvalidPD, "edge " + std::to_string(label) + " is not traceable");
  }
  auto traced = traced_components();
  components_ = static_cast<int>(traced.size()) + unknots_;
}

std::vector<std::array<int, 4>> LinkDiagram::pd() const {
  std::vector<std::array<int, 4>> out;
  out.reserve(crossings_.size());
  for (const auto& c : crossings_) out.push_back(c.edges);
  return out;
}

Slot LinkDiagram::tail(int label) const {
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
    for (int s = 0; s < 4; ++s)
      if (crossings_[c].edges[s] == label && !crossings_[c].is_incoming(s)) return {c, s};
  throw Error(ErrorKind::InvalidArgument, "no edge labelled " + std::to_string(label));
}

Slot LinkDiagram::head(int label) const {
  for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
    for (int s = 0; s < 4; ++s)
      if (crossings_[c].edges[s] == label && crossings_[c].is_incoming(s)) return {c, s};
  throw Error(ErrorKind::InvalidArgument, "no edge labelled " + std::to_string(label));
}

std::vector<std::vector<int>> LinkDiagram::traced_components() const {
  // next[label] = the edge that follows label along the orientation.
  std::map<int, int> next;
  for (const auto& c : crossings_) {
    for (int s = 0; s < 4; ++s)
      if (c.is_incoming(s)) next[c.edges[s]] = c.edges[(s + 2) % 4];
  }
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (const auto& [start, unused] : next) {
    (void)unused;
    if (seen.count(start)) continue;
    std::vector<int> comp;
    int e = start;
    do {
      seen.insert(e);
      comp.push_back(e);
      e = next.at(e);
    } while (e != start);
    comps.push_back(std::move(comp));
  }
  return comps;
}

SingularDiagram::SingularDiagram(LinkDiagram base, std::set<int> double_points)
    : base_(std::move(base)), double_points_(std::move(double_points)) {
  for (int idx : double_points_)
    if (idx < 0 || idx >= static_cast<int>(base_.size()))
      throw Error(ErrorKind::IndexOutOfRange, "double point " + std::to_string(idx) + " out of range");
}

// ------------------------------------------------------------------- parsing

LinkDiagram parse_pd(std::string_view text, int unknots) {
  std::vector<std::array<int, 4>> quads;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(ErrorKind::MalformedPD, "PD syntax error at position " + std::to_string(pos) + ": " + what);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a positive integer label");
    if (pos - start > 9) fail("label too large");
    int v = std::stoi(std::string(text.substr(start, pos - start)));
    if (v <= 0) {
      pos = start;
      fail("labels must be positive");
    }
    return v;
  };

  for (;;) {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != 'X') fail("expected 'X['");
    ++pos;
    expect('[');
    std::array<int, 4> q{};
    for (int i = 0; i < 4; ++i) {
      if (i > 0) expect(',');
      q[i] = number();
    }
    expect(']');
    quads.push_back(q);
  }
  return from_pd(quads, unknots);
}

LinkDiagram from_pd(const std::vector<std::array<int, 4>>& quads, int unknots) {
  return orient_quads(quads, unknots, true);
}

LinkDiagram orient_unoriented(const std::vector<std::array<int, 4>>& quads, int unknots) {
  return orient_quads(quads, unknots, false);
}

std::string to_pd_string(const LinkDiagram& d) {
  std::string s;
  for (const auto& c : d.crossings()) {
    if (!s.empty()) s += " ";
    s += "X[" + std::to_string(c.edges[0]) + "," + std::to_string(c.edges[1]) + "," +
         std::to_string(c.edges[2]) + "," + std::to_string(c.edges[3]) + "]";
  }
  return s;
}

// ------------------------------------------------------------------ surgeries

LinkDiagram connected_sum(const LinkDiagram& k, const LinkDiagram& l) {
  if (!k.is_knot() || !l.is_knot())
    throw Error(ErrorKind::NotAKnot, "connected sum needs two knot diagrams");
  if (k.is_canonical_unknot()) return l;
  if (l.is_canonical_unknot()) return k;

  int offset = 0, cut_k = 0, cut_l = 0;
  for (const auto& c : k.crossings())
    for (int e : c.edges) {
      offset = std::max(offset, e);
      cut_k = cut_k == 0 ? e : std::min(cut_k, e);
    }
  for (const auto& c : l.crossings())
    for (int e : c.edges) cut_l = cut_l == 0 ? e : std::min(cut_l, e);
  cut_l += offset;

  std::vector<Crossing> out = k.crossings();
  const Slot k_head = k.head(cut_k);
  const std::size_t base = out.size();
  for (auto c : l.crossings()) {
    for (int& e : c.edges) e += offset;
    out.push_back(c);
  }
  const Slot l_head = l.head(cut_l - offset);
  // K's cut edge now runs into L; L's cut edge runs back into K.
  out[k_head.crossing].edges[k_head.index] = cut_l;
  out[base + l_head.crossing].edges[l_head.index] = cut_k;
  return LinkDiagram(std::move(out), 0);
}

LinkDiagram self_sum(const LinkDiagram& k, int times) {
  if (!k.is_knot()) throw Error(ErrorKind::NotAKnot, "self sum needs a knot diagram");
  if (times < 0) throw Error(ErrorKind::InvalidArgument, "negative self-sum count");
  LinkDiagram acc = LinkDiagram::unknot();
  for (int i = 0; i < times; ++i) acc = connected_sum(acc, k);
  return acc;
}

LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t idx) {
  if (idx >= d.size())
    throw Error(ErrorKind::IndexOutOfRange, "crossing " + std::to_string(idx) + " out of range");
  std::vector<Crossing> out = d.crossings();
  Crossing& c = out[idx];
  const auto e = c.edges;
  // The old over-strand becomes the under-strand; start at its incoming end.
  c.edges = c.sign > 0 ? std::array<int, 4>{e[3], e[0], e[1], e[2]}
                       : std::array<int, 4>{e[1], e[2], e[3], e[0]};
  c.sign = -c.sign;
  return LinkDiagram(std::move(out), d.unknots());
}

LinkDiagram reconnect(const LinkDiagram& d, const std::set<int>& removed,
                      const std::vector<Join>& joins, bool preserves_orientation) {
  const auto& crossings = d.crossings();
  std::map<Slot, Slot> partner;
  for (const auto& j : joins) {
    partner[j.a] = j.b;
    partner[j.b] = j.a;
  }
  auto label_at = [&](Slot s) { return crossings[s.crossing].edges[s.index]; };
  auto is_removed = [&](Slot s) { return removed.count(s.crossing) > 0; };

  std::set<Slot> visited;
  std::map<Slot, int> relabel;
  int cycles = 0;
  std::vector<Slot> ports;
  for (int c : removed)
    for (int s = 0; s < 4; ++s) ports.push_back({c, s});

  for (Slot p : ports) {
    if (visited.count(p) || is_removed(other_end(d, p))) continue;
    Slot cur = p;
    for (;;) {
      visited.insert(cur);
      Slot q = partner.at(cur);
      visited.insert(q);
      Slot o = other_end(d, q);
      if (!is_removed(o)) {
        relabel[o] = label_at(p);
        break;
      }
      cur = o;
    }
  }
  for (Slot p : ports) {
    if (visited.count(p)) continue;
    Slot cur = p;
    do {
      visited.insert(cur);
      Slot q = partner.at(cur);
      visited.insert(q);
      cur = other_end(d, q);
    } while (cur != p);
    ++cycles;
  }

  std::vector<Crossing> out;
  std::vector<std::array<int, 4>> quads;
  for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
    if (removed.count(c)) continue;
    Crossing x = crossings[c];
    for (int s = 0; s < 4; ++s) {
      auto it = relabel.find({c, s});
      if (it != relabel.end()) x.edges[s] = it->second;
    }
    out.push_back(x);
    quads.push_back(x.edges);
  }
  if (preserves_orientation) return LinkDiagram(std::move(out), d.unknots() + cycles);
  return orient_unoriented(quads, d.unknots() + cycles);
}

LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t idx, Smoothing mode) {
  if (idx >= d.size())
    throw Error(ErrorKind::IndexOutOfRange, "crossing " + std::to_string(idx) + " out of range");
  const int c = static_cast<int>(idx);
  const bool positive = d.crossings()[idx].sign > 0;
  const std::vector<Join> adjacent01{{{c, 0}, {c, 1}}, {{c, 3}, {c, 2}}};
  const std::vector<Join> adjacent03{{{c, 0}, {c, 3}}, {{c, 1}, {c, 2}}};
  if (mode == Smoothing::UnorientedInf)
    return reconnect(d, {c}, positive ? adjacent03 : adjacent01, false);
  return reconnect(d, {c}, positive ? adjacent01 : adjacent03, true);
}

SingularDiagram singularize(const LinkDiagram& k, std::size_t idx) {
  return singularize(SingularDiagram(k, {}), idx);
}

SingularDiagram singularize(const SingularDiagram& s, std::size_t idx) {
  if (idx >= s.base().size())
    throw Error(ErrorKind::IndexOutOfRange, "crossing " + std::to_string(idx) + " out of range");
  auto dp = s.double_points();
  dp.insert(static_cast<int>(idx));
  return SingularDiagram(s.base(), std::move(dp));
}

SingularDiagram resolve(const SingularDiagram& s, std::size_t idx, int sign) {
  if (idx >= s.base().size())
    throw Error(ErrorKind::IndexOutOfRange, "crossing " + std::to_string(idx) + " out of range");
  if (!s.double_points().count(static_cast<int>(idx)))
    throw Error(ErrorKind::NotADoublePoint, "crossing " + std::to_string(idx) + " is not a double point");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidArgument, "resolution sign must be +1 or -1");
  LinkDiagram base = s.base().crossings()[idx].sign == sign ? s.base() : switch_crossing(s.base(), idx);
  auto dp = s.double_points();
  dp.erase(static_cast<int>(idx));
  return SingularDiagram(std::move(base), std::move(dp));
}

std::vector<Resolution> full_resolutions(const SingularDiagram& s) {
  const std::vector<int> points(s.double_points().begin(), s.double_points().end());
  const std::size_t count = std::size_t{1} << points.size();
  std::vector<Resolution> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    SingularDiagram cur = s;
    int negatives = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
      int sign = (mask >> j) & 1U ? -1 : 1;
      negatives += sign < 0;
      cur = resolve(cur, static_cast<std::size_t>(points[j]), sign);
    }
    out.push_back({cur.base(), negatives});
  }
  return out;
}

// --------------------------------------------------------------- simplify

LinkDiagram simplify(const LinkDiagram& d) {
  LinkDiagram cur = d;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto& xs = cur.crossings();
    for (int c = 0; c < static_cast<int>(xs.size()) && !changed; ++c) {
      for (int s = 0; s < 4; ++s) {
        if (xs[c].edges[s] == xs[c].edges[(s + 1) % 4]) {
          cur = reconnect(cur, {c}, straight_joins(c), true);
          changed = true;
          break;
        }
      }
      if (changed) break;
      // A bigon face whose one side stays over at both of its crossings.
      for (int s = 0; s < 4; ++s) {
        Slot far = other_end(cur, {c, s});
        if (far.crossing == c) continue;
        Slot turn{far.crossing, (far.index + 1) % 4};
        Slot back = other_end(cur, turn);
        if (back != Slot{c, (s + 3) % 4}) continue;
        if (s % 2 != far.index % 2) continue;
        auto joins = straight_joins(c);
        auto more = straight_joins(far.crossing);
        joins.insert(joins.end(), more.begin(), more.end());
        cur = reconnect(cur, {c, far.crossing}, joins, true);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

int writhe(const LinkDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

}  // namespace knotinv
