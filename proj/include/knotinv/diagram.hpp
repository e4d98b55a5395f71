#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotinv {

// One crossing in PD form. Edge labels are listed counterclockwise starting
// at the incoming under-strand, so slot 0 enters and slot 2 leaves along the
// under-strand. The over-strand enters at slot 3 and leaves at slot 1 when
// the crossing is positive, and the reverse when it is negative.
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;

  bool is_incoming(int slot) const {
    switch (slot) {
      case 0: return true;
      case 2: return false;
      case 3: return sign > 0;
      default: return sign < 0;
    }
  }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A place where an edge meets a crossing.
struct Slot {
  int crossing = 0;
  int index = 0;

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

// Oriented link diagram: PD crossings plus a count of crossing-free circles.
// Values are immutable once built; all surgeries return new diagrams.
class LinkDiagram {
 public:
  LinkDiagram() = default;

  // Validates that every label occurs twice, once entering and once leaving
  // a crossing. Signs must agree with the traced orientation.
  LinkDiagram(std::vector<Crossing> crossings, int unknots);

  static LinkDiagram unknot() { return LinkDiagram({}, 1); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t size() const { return crossings_.size(); }
  int unknots() const { return unknots_; }
  int components() const { return components_; }
  bool is_knot() const { return components_ == 1; }
  bool is_canonical_unknot() const { return crossings_.empty() && unknots_ == 1; }

  std::vector<std::array<int, 4>> pd() const;

  // Where edge `label` leaves (tail) and enters (head) a crossing.
  Slot tail(int label) const;
  Slot head(int label) const;

  // Closed components traced along the orientation. Each component lists its
  // edges starting at its lowest label; components are ordered by that label.
  std::vector<std::vector<int>> traced_components() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.unknots_ == b.unknots_ && a.crossings_ == b.crossings_;
  }

 private:
  std::vector<Crossing> crossings_;
  int unknots_ = 0;
  int components_ = 0;
};

class SingularDiagram {
 public:
  SingularDiagram() = default;
  SingularDiagram(LinkDiagram base, std::set<int> double_points);

  const LinkDiagram& base() const { return base_; }
  const std::set<int>& double_points() const { return double_points_; }

  friend bool operator==(const SingularDiagram&, const SingularDiagram&) = default;

 private:
  LinkDiagram base_;
  std::set<int> double_points_;
};

enum class Smoothing {
  Oriented,       // the orientation-respecting smoothing
  Unoriented0,    // same arcs as Oriented, for the unoriented skein
  UnorientedInf,  // the other smoothing; the result is re-oriented
};

// `X[a,b,c,d]` tokens separated by whitespace or commas.
LinkDiagram parse_pd(std::string_view text, int unknots = 0);
// Orientation is read from the PD convention: the under-strand runs from
// slot 0 to slot 2, and it propagates along components. Components that only
// ever pass over fall back to the consecutive-label rule.
LinkDiagram from_pd(const std::vector<std::array<int, 4>>& quads, int unknots = 0);
std::string to_pd_string(const LinkDiagram& d);

// Both arguments must be knots. The cut edges are the lowest-labelled edges.
LinkDiagram connected_sum(const LinkDiagram& k, const LinkDiagram& l);
LinkDiagram self_sum(const LinkDiagram& k, int times);

LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t idx);
// The crossing is removed; later crossing indices shift down by one.
LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t idx, Smoothing mode);

SingularDiagram singularize(const LinkDiagram& k, std::size_t idx);
SingularDiagram singularize(const SingularDiagram& s, std::size_t idx);
// Replaces the double point with a crossing of the given sign.
SingularDiagram resolve(const SingularDiagram& s, std::size_t idx, int sign);

struct Resolution {
  LinkDiagram diagram;
  int negatives = 0;
};
// All 2^d resolutions, in binary order over the sorted double points.
std::vector<Resolution> full_resolutions(const SingularDiagram& s);

// Reidemeister I and II reductions to a fixed point.
LinkDiagram simplify(const LinkDiagram& d);

int writhe(const LinkDiagram& d);

// Re-derives an orientation for an unoriented diagram whose quadruples keep
// the under-strand on slots 0 and 2. Each component is directed so that its
// lowest label enters at its first occurrence.
LinkDiagram orient_unoriented(const std::vector<std::array<int, 4>>& quads, int unknots);

// Crossings with orientation-preserving straight-through or smoothing joins
// removed; paths through removed crossings merge into single edges and closed
// paths become crossing-free circles.
struct Join {
  Slot a;
  Slot b;
};
LinkDiagram reconnect(const LinkDiagram& d, const std::set<int>& removed,
                      const std::vector<Join>& joins, bool preserves_orientation);

}  // namespace knotinv
