#pragma once

#include <cstddef>
#include <memory>

#include "knotinv/diagram.hpp"
#include "knotinv/laurent.hpp"

namespace knotinv {

struct SkeinOptions {
  // Largest block the recursion may branch on. Split components and
  // connected-sum factors are peeled off first, so a composite knot is
  // limited by its largest prime-looking block, not its total size.
  std::size_t max_crossings = 16;
  bool use_cache = true;
  // Peel off split unions and connected-sum factors before branching.
  bool factorize = true;
};

// HOMFLY P(a,z) with a P(+) - a^-1 P(-) = z P(0), and Kauffman F(a,x) from
// the unoriented skein L(+) + L(-) = x (L(0) + L(inf)) with F = a^-w L.
// Both send the unknot to 1. Thread-safe.
class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinOptions options = {});
  ~SkeinEngine();
  SkeinEngine(const SkeinEngine&) = delete;
  SkeinEngine& operator=(const SkeinEngine&) = delete;

  LaurentPoly2 homfly(const LinkDiagram& d);
  LaurentPoly2 kauffman(const LinkDiagram& d);

  SkeinOptions options() const;
  // Replaces the options and drops cached values.
  void configure(SkeinOptions options);
  void clear_cache();
  std::size_t cache_size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SkeinEngine& default_engine();

LaurentPoly2 homfly(const LinkDiagram& d, SkeinEngine& engine = default_engine());
LaurentPoly2 kauffman(const LinkDiagram& d, SkeinEngine& engine = default_engine());

// Jones J(t) = P(t, t^1/2 - t^-1/2), Conway C(z) = P(1, z),
// Alexander A(t) = P(1, t^1/2 - t^-1/2), Q(x) = F(1, x).
LaurentPoly jones_from_homfly(const LaurentPoly2& p);
LaurentPoly conway_from_homfly(const LaurentPoly2& p);
LaurentPoly alexander_from_homfly(const LaurentPoly2& p);
LaurentPoly q_from_kauffman(const LaurentPoly2& f);

LaurentPoly jones(const LinkDiagram& d, SkeinEngine& engine = default_engine());
LaurentPoly conway(const LinkDiagram& d, SkeinEngine& engine = default_engine());
LaurentPoly alexander(const LinkDiagram& d, SkeinEngine& engine = default_engine());
LaurentPoly qpoly(const LinkDiagram& d, SkeinEngine& engine = default_engine());

// Coefficient of z^power in P as a polynomial in a.
LaurentPoly homfly_coeff(const LinkDiagram& d, int power, SkeinEngine& engine = default_engine());
// Coefficient of x^power in F as a polynomial in a.
LaurentPoly kauffman_coeff(const LinkDiagram& d, int power, SkeinEngine& engine = default_engine());
// Highest z-exponent of the Conway polynomial; 0 for the unknot.
int conway_degree(const LinkDiagram& d, SkeinEngine& engine = default_engine());

// Knot values of P lie in Z[a^2, a^-2, z^2]; knot values of F in Z[a, a^-1, x].
bool in_homfly_knot_lattice(const LaurentPoly2& p);
bool in_kauffman_knot_lattice(const LaurentPoly2& f);

}  // namespace knotinv
