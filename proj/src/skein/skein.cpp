#include "knotinv/skein.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "knotinv/error.hpp"

namespace knotinv {

namespace {

// Integer Laurent polynomial in two variables, used inside the recursion.
class IntPoly {
 public:
  using Exp = std::pair<int, int>;

  IntPoly() = default;
  static IntPoly monomial(long long c, int e1, int e2) {
    IntPoly p;
    if (c != 0) p.terms_[{e1, e2}] = c;
    return p;
  }

  IntPoly& operator+=(const IntPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        long long c;
        if (__builtin_mul_overflow(ca, cb, &c))
          throw Error(ErrorKind::Overflow, "skein coefficient overflow");
        r.add({ea.first + eb.first, ea.second + eb.second}, c);
      }
    return r;
  }

  IntPoly pow(int e) const {
    IntPoly r = monomial(1, 0, 0);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  LaurentPoly2 to_laurent(const std::string& v1, const std::string& v2) const {
    LaurentPoly2 p(v1, v2);
    for (const auto& [e, c] : terms_)
      p.add_term(HalfInt::integer(e.first), HalfInt::integer(e.second), Scalar(static_cast<long>(c)));
    return p;
  }

 private:
  void add(const Exp& e, long long c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    if (__builtin_add_overflow(it->second, c, &it->second))
      throw Error(ErrorKind::Overflow, "skein coefficient overflow");
    if (it->second == 0) terms_.erase(it);
  }

  std::map<Exp, long long> terms_;
};

enum class Kind { Homfly, Kauffman };

// Value of an unlink of c >= 1 components.
IntPoly unlink_value(Kind kind, int c) {
  // HOMFLY: (a - a^-1)/z. Kauffman: (a + a^-1)/x - 1.
  static const IntPoly delta = IntPoly::monomial(1, 1, -1) + IntPoly::monomial(-1, -1, -1);
  static const IntPoly mu =
      IntPoly::monomial(1, 1, -1) + IntPoly::monomial(1, -1, -1) + IntPoly::monomial(-1, 0, 0);
  return (kind == Kind::Homfly ? delta : mu).pow(c - 1);
}

std::map<int, Slot> head_slots(const LinkDiagram& d) {
  std::map<int, Slot> heads;
  const auto& xs = d.crossings();
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int s = 0; s < 4; ++s)
      if (xs[c].is_incoming(s)) heads[xs[c].edges[s]] = {c, s};
  return heads;
}

// Relabelled and sorted PD; equal keys mean the same diagram up to labels.
std::string canonical_key(const LinkDiagram& d) {
  const auto comps = d.traced_components();
  auto key_for = [&](const std::vector<std::vector<int>>& order) {
    std::map<int, int> relabel;
    for (const auto& comp : order)
      for (int e : comp) relabel.emplace(e, static_cast<int>(relabel.size()) + 1);
    std::vector<std::array<int, 5>> rows;
    for (const auto& c : d.crossings())
      rows.push_back({relabel[c.edges[0]], relabel[c.edges[1]], relabel[c.edges[2]],
                      relabel[c.edges[3]], c.sign});
    std::sort(rows.begin(), rows.end());
    return rows;
  };

  std::vector<std::array<int, 5>> best;
  if (comps.size() == 1) {
    const auto& comp = comps.front();
    for (std::size_t r = 0; r < comp.size(); ++r) {
      std::vector<int> rotated(comp.begin() + static_cast<long>(r), comp.end());
      rotated.insert(rotated.end(), comp.begin(), comp.begin() + static_cast<long>(r));
      auto rows = key_for({rotated});
      if (r == 0 || rows < best) best = std::move(rows);
    }
  } else {
    best = key_for(comps);
  }
  std::string key = std::to_string(d.unknots()) + "|";
  for (const auto& row : best) {
    for (int v : row) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

// Crossings grouped by shared edges.
std::vector<std::vector<int>> crossing_groups(const LinkDiagram& d) {
  const int n = static_cast<int>(d.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, int> first_seen;
  for (int c = 0; c < n; ++c)
    for (int e : d.crossings()[c].edges) {
      auto [it, inserted] = first_seen.emplace(e, c);
      if (!inserted) parent[find(c)] = find(it->second);
    }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

LinkDiagram sub_diagram(const LinkDiagram& d, const std::vector<int>& members) {
  std::vector<Crossing> xs;
  for (int c : members) xs.push_back(d.crossings()[c]);
  return LinkDiagram(std::move(xs), 0);
}

struct SumSplit {
  LinkDiagram left;
  LinkDiagram right;
};

// Looks for an arc of one component that passes through a set of crossings
// twice each and meets nothing else: that arc closes up into a connected-sum
// factor.
std::optional<SumSplit> find_connected_sum(const LinkDiagram& d) {
  const auto heads = head_slots(d);
  const std::size_t n = d.size();
  for (const auto& comp : d.traced_components()) {
    const std::size_t len = comp.size();
    std::vector<int> visit(len);
    for (std::size_t k = 0; k < len; ++k) visit[k] = heads.at(comp[k]).crossing;
    for (std::size_t i = 0; i < len; ++i) {
      std::map<int, int> count;
      int open = 0;
      for (std::size_t span = 1; span < len; ++span) {
        int c = visit[(i + span - 1) % len];
        open += ++count[c] == 1 ? 1 : -1;
        if (open != 0 || count.size() >= n) continue;
        const int enter = comp[i];
        const int leave = comp[(i + span) % len];
        std::vector<Crossing> inner, outer;
        for (std::size_t x = 0; x < n; ++x) {
          Crossing cr = d.crossings()[x];
          for (int& e : cr.edges)
            if (e == leave) e = enter;
          (count.count(static_cast<int>(x)) ? inner : outer).push_back(cr);
        }
        return SumSplit{LinkDiagram(std::move(inner), 0), LinkDiagram(std::move(outer), 0)};
      }
    }
  }
  return std::nullopt;
}

// First crossing met from below when walking the components in order.
std::optional<int> first_ascending(const LinkDiagram& d) {
  const auto heads = head_slots(d);
  std::vector<bool> seen(d.size(), false);
  for (const auto& comp : d.traced_components())
    for (int e : comp) {
      Slot h = heads.at(e);
      if (seen[h.crossing]) continue;
      seen[h.crossing] = true;
      if (h.index == 0) return h.crossing;
    }
  return std::nullopt;
}

}  // namespace

struct SkeinEngine::Impl {
  SkeinOptions options;
  mutable std::mutex mutex;
  std::unordered_map<std::string, IntPoly> cache[2];

  std::optional<IntPoly> lookup(Kind kind, const std::string& key) {
    std::lock_guard lock(mutex);
    auto& table = cache[static_cast<int>(kind)];
    auto it = table.find(key);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }
  void store(Kind kind, const std::string& key, const IntPoly& value) {
    std::lock_guard lock(mutex);
    cache[static_cast<int>(kind)].emplace(key, value);
  }

  IntPoly compute(Kind kind, const LinkDiagram& input, const SkeinOptions& opts) {
    const LinkDiagram d = simplify(input);
    if (d.size() == 0) {
      if (d.unknots() == 0) throw Error(ErrorKind::InvalidPD, "empty diagram");
      return unlink_value(kind, d.unknots());
    }

    if (opts.factorize) {
      auto groups = crossing_groups(d);
      const int pieces = static_cast<int>(groups.size()) + d.unknots();
      if (pieces > 1) {
        IntPoly r = unlink_value(kind, pieces);
        for (const auto& g : groups) r = r * compute(kind, sub_diagram(d, g), opts);
        return r;
      }
      if (auto split = find_connected_sum(d))
        return compute(kind, split->left, opts) * compute(kind, split->right, opts);
    }

    std::string key;
    if (opts.use_cache) {
      key = canonical_key(d);
      if (auto hit = lookup(kind, key)) return *hit;
    }
    if (d.size() > opts.max_crossings)
      throw Error(ErrorKind::DiagramTooLarge, "diagram block has " + std::to_string(d.size()) +
                                                  " crossings; the limit is " +
                                                  std::to_string(opts.max_crossings));

    IntPoly result;
    const auto branch = first_ascending(d);
    if (!branch) {
      result = unlink_value(kind, d.components());
    } else {
      const int x = *branch;
      const int s = d.crossings()[x].sign;
      const LinkDiagram switched = switch_crossing(d, x);
      const LinkDiagram zero = smooth_crossing(d, x, Smoothing::Oriented);
      if (kind == Kind::Homfly) {
        // s=+1: P = a^-2 P' + a^-1 z P0.  s=-1: P = a^2 P' - a z P0.
        result = IntPoly::monomial(1, -2 * s, 0) * compute(kind, switched, opts) +
                 IntPoly::monomial(s, -s, 1) * compute(kind, zero, opts);
      } else {
        // F = x a^-s F0 + x a^(w_inf - w) F_inf - a^-2s F'.
        const LinkDiagram inf = smooth_crossing(d, x, Smoothing::UnorientedInf);
        const int shift = writhe(inf) - writhe(d);
        result = IntPoly::monomial(1, -s, 1) * compute(kind, zero, opts) +
                 IntPoly::monomial(1, shift, 1) * compute(kind, inf, opts) +
                 IntPoly::monomial(-1, -2 * s, 0) * compute(kind, switched, opts);
      }
    }
    if (opts.use_cache) store(kind, key, result);
    return result;
  }

  SkeinOptions snapshot() const {
    std::lock_guard lock(mutex);
    return options;
  }
};

SkeinEngine::SkeinEngine(SkeinOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
}

SkeinEngine::~SkeinEngine() = default;

LaurentPoly2 SkeinEngine::homfly(const LinkDiagram& d) {
  LaurentPoly2 p = impl_->compute(Kind::Homfly, d, impl_->snapshot()).to_laurent("a", "z");
  if (d.is_knot() && !in_homfly_knot_lattice(p))
    throw Error(ErrorKind::InvalidPD, "HOMFLY value left the knot lattice; the PD code is not planar");
  return p;
}

LaurentPoly2 SkeinEngine::kauffman(const LinkDiagram& d) {
  LaurentPoly2 f = impl_->compute(Kind::Kauffman, d, impl_->snapshot()).to_laurent("a", "x");
  if (d.is_knot() && !in_kauffman_knot_lattice(f))
    throw Error(ErrorKind::InvalidPD, "Kauffman value left the knot lattice; the PD code is not planar");
  return f;
}

SkeinOptions SkeinEngine::options() const { return impl_->snapshot(); }

void SkeinEngine::configure(SkeinOptions options) {
  std::lock_guard lock(impl_->mutex);
  impl_->options = options;
  impl_->cache[0].clear();
  impl_->cache[1].clear();
}

void SkeinEngine::clear_cache() {
  std::lock_guard lock(impl_->mutex);
  impl_->cache[0].clear();
  impl_->cache[1].clear();
}

std::size_t SkeinEngine::cache_size() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->cache[0].size() + impl_->cache[1].size();
}

SkeinEngine& default_engine() {
  static SkeinEngine engine;
  return engine;
}

LaurentPoly2 homfly(const LinkDiagram& d, SkeinEngine& engine) { return engine.homfly(d); }
LaurentPoly2 kauffman(const LinkDiagram& d, SkeinEngine& engine) { return engine.kauffman(d); }

LaurentPoly jones_from_homfly(const LaurentPoly2& p) {
  return substitute(p, LaurentPoly::monomial("t", 1, HalfInt::integer(1)), LaurentPoly::half_difference("t"));
}

LaurentPoly conway_from_homfly(const LaurentPoly2& p) {
  return substitute(p, LaurentPoly::constant(1, "z"), LaurentPoly::monomial("z", 1, HalfInt::integer(1)));
}

LaurentPoly alexander_from_homfly(const LaurentPoly2& p) {
  return substitute(p, LaurentPoly::constant(1, "t"), LaurentPoly::half_difference("t"));
}

LaurentPoly q_from_kauffman(const LaurentPoly2& f) {
  return substitute(f, LaurentPoly::constant(1, "x"), LaurentPoly::monomial("x", 1, HalfInt::integer(1)));
}

LaurentPoly jones(const LinkDiagram& d, SkeinEngine& engine) { return jones_from_homfly(engine.homfly(d)); }
LaurentPoly conway(const LinkDiagram& d, SkeinEngine& engine) { return conway_from_homfly(engine.homfly(d)); }
LaurentPoly alexander(const LinkDiagram& d, SkeinEngine& engine) {
  return alexander_from_homfly(engine.homfly(d));
}
LaurentPoly qpoly(const LinkDiagram& d, SkeinEngine& engine) { return q_from_kauffman(engine.kauffman(d)); }

LaurentPoly homfly_coeff(const LinkDiagram& d, int power, SkeinEngine& engine) {
  return engine.homfly(d).coefficient_of("z", HalfInt::integer(power));
}

LaurentPoly kauffman_coeff(const LinkDiagram& d, int power, SkeinEngine& engine) {
  return engine.kauffman(d).coefficient_of("x", HalfInt::integer(power));
}

int conway_degree(const LinkDiagram& d, SkeinEngine& engine) {
  auto top = conway(d, engine).max_exponent();
  return top ? top->as_integer() : 0;
}

bool in_homfly_knot_lattice(const LaurentPoly2& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& term) {
    const auto& [e, c] = term;
    return e.first.twice() % 4 == 0 && e.second.twice() % 4 == 0 && e.second.twice() >= 0 &&
           c.is_exact() && c.is_integer();
  });
}

bool in_kauffman_knot_lattice(const LaurentPoly2& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& term) {
    const auto& [e, c] = term;
    return e.first.is_integer() && e.second.is_integer() && e.second.twice() >= 0 && c.is_exact() &&
           c.is_integer();
  });
}

}  // namespace knotinv
