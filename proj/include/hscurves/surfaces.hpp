#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hscurves/core.hpp"

namespace hscurves::surfaces {

/// The surface families on which curves are enumerated.  Picard bases:
///   Scroll(n)       rational normal scroll of degree n in P^{n+1};
///                   classes (a,b) = aH + bL, H hyperplane, L ruling line.
///   Hirzebruch(e)   classes (a,b) = aC0 + bf, C0^2 = -e, f a fibre.
///   BlownPlane(s)   P^2 blown up at s general points; classes
///                   (a; b_1 >= ... >= b_s) = aL - sum b_i E_i, stored sorted.
///   Veronese        plane classes aL; the P^5 degree of aL is 2a.
///   RationalCone(n) cone over a rational normal curve, resolved by F_n;
///                   classes (k,d) = kC0 + df, so d is the cone degree.
///   EllipticCone(r) cone over a degree-r elliptic normal curve, resolved by
///                   the ruled surface with C0^2 = -r; classes (k,d) = kC0 + df.
///   Quadric         P^1 x P^1; classes (a,b) of bidegree type.
enum class SurfaceKind {
  Scroll,
  Hirzebruch,
  BlownPlane,
  Veronese,
  RationalCone,
  EllipticCone,
  Quadric,
};

inline const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Scroll: return "scroll";
    case SurfaceKind::Hirzebruch: return "hirzebruch";
    case SurfaceKind::BlownPlane: return "blown-plane";
    case SurfaceKind::Veronese: return "veronese";
    case SurfaceKind::RationalCone: return "rational-cone";
    case SurfaceKind::EllipticCone: return "elliptic-cone";
    case SurfaceKind::Quadric: return "quadric";
  }
  return "?";
}

class SurfaceModel {
 public:
  static SurfaceModel scroll(Int n) {
    require(n >= 2, "Scroll: degree n >= 2");
    return {SurfaceKind::Scroll, n};
  }
  static SurfaceModel hirzebruch(Int e) {
    require(e >= 0, "Hirzebruch: invariant e >= 0");
    return {SurfaceKind::Hirzebruch, e};
  }
  static SurfaceModel blown_plane(Int s) {
    require(s >= 0, "BlownPlane: s >= 0");
    return {SurfaceKind::BlownPlane, s};
  }
  static SurfaceModel veronese() { return {SurfaceKind::Veronese, 0}; }
  static SurfaceModel rational_cone(Int n) {
    require(n >= 2, "RationalCone: degree n >= 2");
    return {SurfaceKind::RationalCone, n};
  }
  static SurfaceModel elliptic_cone(Int r) {
    require(r >= 3, "EllipticCone: r >= 3");
    return {SurfaceKind::EllipticCone, r};
  }
  static SurfaceModel quadric() { return {SurfaceKind::Quadric, 0}; }

  [[nodiscard]] SurfaceKind kind() const { return kind_; }
  /// n, e, s or r depending on the kind.
  [[nodiscard]] Int param() const { return param_; }

  /// Length of a coefficient vector in the declared Picard basis.
  [[nodiscard]] Int rank() const {
    switch (kind_) {
      case SurfaceKind::Veronese: return 1;
      case SurfaceKind::BlownPlane: return 1 + param_;
      default: return 2;
    }
  }

  bool operator==(const SurfaceModel& o) const = default;

  [[nodiscard]] std::string name() const {
    switch (kind_) {
      case SurfaceKind::Veronese:
      case SurfaceKind::Quadric: return to_string(kind_);
      default: return std::string(to_string(kind_)) + "(" + std::to_string(param_) + ")";
    }
  }

 private:
  SurfaceModel(SurfaceKind k, Int p) : kind_(k), param_(p) {}
  SurfaceKind kind_;
  Int param_;
};

/// Integer divisor class in the Picard basis of its surface.  BlownPlane
/// multiplicities are canonicalized to descending order on construction.
class DivisorClass {
 public:
  DivisorClass(SurfaceModel surface, std::vector<Int> coeffs)
      : surface_(surface), coeffs_(std::move(coeffs)) {
    require(static_cast<Int>(coeffs_.size()) == surface_.rank(),
            "DivisorClass: coefficient count does not match the Picard basis of " +
                surface_.name());
    if (surface_.kind() == SurfaceKind::BlownPlane && coeffs_.size() > 1)
      std::sort(coeffs_.begin() + 1, coeffs_.end(), std::greater<>());
  }

  [[nodiscard]] const SurfaceModel& surface() const { return surface_; }
  [[nodiscard]] const std::vector<Int>& coeffs() const { return coeffs_; }
  [[nodiscard]] Int at(size_t i) const { return coeffs_[i]; }

  bool operator==(const DivisorClass& o) const = default;

  /// "(9;3,3,3,2)" for blown planes, "(a,b)" otherwise.
  [[nodiscard]] std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (i == 1 && surface_.kind() == SurfaceKind::BlownPlane)
        s += ";";
      else if (i > 0)
        s += ",";
      s += std::to_string(coeffs_[i]);
    }
    return s + ")";
  }

 private:
  SurfaceModel surface_;
  std::vector<Int> coeffs_;
};

/// Intersection pairing in the declared bases.
///   Scroll:       H^2 = n,  H.L = 1,  L^2 = 0
///   Hirzebruch:   C0^2 = -e, C0.f = 1, f^2 = 0   (cones likewise with e = n, r)
///   BlownPlane:   L^2 = 1,  E_i^2 = -1, mixed 0
///   Quadric:      (1,0).(0,1) = 1, squares 0
///   Veronese:     plane pairing a1*a2
inline Int intersect(const DivisorClass& D1, const DivisorClass& D2) {
  require(D1.surface() == D2.surface(), "intersect: classes live on different surfaces");
  const SurfaceModel& S = D1.surface();
  const auto& u = D1.coeffs();
  const auto& v = D2.coeffs();
  switch (S.kind()) {
    case SurfaceKind::Scroll:
      return S.param() * u[0] * v[0] + u[0] * v[1] + u[1] * v[0];
    case SurfaceKind::Hirzebruch:
    case SurfaceKind::RationalCone:
    case SurfaceKind::EllipticCone:
      return -S.param() * u[0] * v[0] + u[0] * v[1] + u[1] * v[0];
    case SurfaceKind::Quadric:
      return u[0] * v[1] + u[1] * v[0];
    case SurfaceKind::BlownPlane: {
      Int s = u[0] * v[0];
      for (size_t i = 1; i < u.size(); ++i) s -= u[i] * v[i];
      return s;
    }
    case SurfaceKind::Veronese:
      return u[0] * v[0];
  }
  throw invariant_error("intersect: unreachable");
}

/// Canonical class in the declared basis.
///   Scroll(n):      -2H + (n-2)L        Hirzebruch(e):   -2C0 - (e+2)f
///   RationalCone(n): -2C0 - (n+2)f      EllipticCone(r): -2C0 - rf
///   BlownPlane(s):  (-3; -1,...,-1)     Quadric: (-2,-2)   Veronese: -3L
inline DivisorClass canonical_class(const SurfaceModel& S) {
  switch (S.kind()) {
    case SurfaceKind::Scroll: return {S, {-2, S.param() - 2}};
    case SurfaceKind::Hirzebruch:
    case SurfaceKind::RationalCone: return {S, {-2, -S.param() - 2}};
    case SurfaceKind::EllipticCone: return {S, {-2, -S.param()}};
    case SurfaceKind::Quadric: return {S, {-2, -2}};
    case SurfaceKind::Veronese: return {S, {-3}};
    case SurfaceKind::BlownPlane: {
      std::vector<Int> c(static_cast<size_t>(S.rank()), -1);
      c[0] = -3;
      return {S, std::move(c)};
    }
  }
  throw invariant_error("canonical_class: unreachable");
}

/// Arithmetic genus via adjunction: p_a = 1 + D.(D+K)/2.  The pairing value
/// is even on every lattice here; an odd value signals a basis bug and throws.
inline Int adjunction_genus(const DivisorClass& D) {
  const DivisorClass K = canonical_class(D.surface());
  const Int dd = intersect(D, D);
  const Int dk = intersect(D, K);
  return 1 + half_exact(dd + dk, "adjunction_genus parity");
}

/// Multiplicity at the cone vertex of the image of the class (k,d):
/// m = D.C0 = d - nk (rational cone) or d - rk (elliptic cone).
/// Negativity means the class meets the directrix negatively and is not the
/// strict transform of a curve on the cone.
inline Int vertex_multiplicity(const DivisorClass& D) {
  const SurfaceKind kind = D.surface().kind();
  require(kind == SurfaceKind::RationalCone || kind == SurfaceKind::EllipticCone,
          "vertex_multiplicity: cone surfaces only");
  const Int m = D.at(1) - D.surface().param() * D.at(0);
  require(m >= 0, "vertex_multiplicity: class " + D.to_string() + " not effective on the cone");
  return m;
}

namespace detail {

/// Section count on F_e: h0(aC0 + bf) = sum_{i=0..a} max(0, b - ie + 1).
inline Int hirzebruch_h0(Int a, Int b, Int e) {
  if (a < 0) return 0;
  Int h0 = 0;
  for (Int i = 0; i <= a; ++i) h0 += std::max<Int>(0, b - i * e + 1);
  return h0;
}

/// Elliptic summand count: h0 of a degree-t bundle on an elliptic curve is t
/// for t >= 1; the degree-0 summand is the trivial bundle on the cone
/// construction, contributing one section.
inline Int elliptic_summand_h0(Int t) {
  if (t >= 1) return t;
  if (t == 0) return 1;
  return 0;
}

}  // namespace detail

/// Projective dimension h^0 - 1 of |D|.  Empty systems return -1.
///   Scroll(n):       (1/2)a(a+1)n + (a+1)(b+1) - 1  (closed formula)
///   Hirzebruch(e):   sum_{i=0..a} max(0, b - ie + 1) - 1, requires a >= 0
///   Quadric:         (a+1)(b+1) - 1 for a,b >= 0
///   BlownPlane(s):   C(a+2,2) - 1 - sum C(b_i+1,2): the EXPECTED dimension,
///                    valid for general points (see assumes_general_points)
///   Veronese:        C(a+2,2) - 1
///   RationalCone(n): Hirzebruch(n) count for (k,d) as kC0 + df
///   EllipticCone(r): sum_{i=0..k} eh(d - ir) - 1 with eh as above
inline Int linear_system_dim(const DivisorClass& D) {
  const SurfaceModel& S = D.surface();
  switch (S.kind()) {
    case SurfaceKind::Scroll: {
      const Int a = D.at(0), b = D.at(1);
      if (a < 0) return -1;
      const Int dim = a * (a + 1) * S.param() / 2 + (a + 1) * (b + 1) - 1;
      return std::max<Int>(dim, -1);
    }
    case SurfaceKind::Hirzebruch:
      require(D.at(0) >= 0, "linear_system_dim: Hirzebruch class needs a >= 0");
      return detail::hirzebruch_h0(D.at(0), D.at(1), S.param()) - 1;
    case SurfaceKind::RationalCone:
      return detail::hirzebruch_h0(D.at(0), D.at(1), S.param()) - 1;
    case SurfaceKind::EllipticCone: {
      const Int k = D.at(0), d = D.at(1);
      if (k < 0) return -1;
      Int h0 = 0;
      for (Int i = 0; i <= k; ++i) h0 += detail::elliptic_summand_h0(d - i * S.param());
      return h0 - 1;
    }
    case SurfaceKind::Quadric: {
      if (D.at(0) < 0 || D.at(1) < 0) return -1;
      return (D.at(0) + 1) * (D.at(1) + 1) - 1;
    }
    case SurfaceKind::Veronese:
      if (D.at(0) < 0) return -1;
      return binom2(D.at(0) + 2) - 1;
    case SurfaceKind::BlownPlane: {
      require(D.at(0) >= 0, "linear_system_dim: BlownPlane class needs a >= 0");
      Int dim = binom2(D.at(0) + 2) - 1;
      for (size_t i = 1; i < D.coeffs().size(); ++i) dim -= binom2(D.at(i) + 1);
      return std::max<Int>(dim, -1);
    }
  }
  throw invariant_error("linear_system_dim: unreachable");
}

/// BlownPlane dimensions are expected dimensions assuming the blown-up points
/// are general and impose independent conditions.
inline bool assumes_general_points(const SurfaceModel& S) {
  return S.kind() == SurfaceKind::BlownPlane;
}

/// Degree of the curve class under the surface's own embedding:
///   Scroll: D.H = na + b;  cones: D.(C0 + param*f) = d;  Quadric: a + b (in P^3);
///   Veronese: 2a (in P^5);  BlownPlane(4): the anticanonical del Pezzo degree
///   3a - sum b_i.  Other blown planes carry no default embedding; pair with
///   an explicit hyperplane class via intersect() instead.
inline Int embedding_degree(const DivisorClass& D) {
  const SurfaceModel& S = D.surface();
  switch (S.kind()) {
    case SurfaceKind::Scroll: return S.param() * D.at(0) + D.at(1);
    case SurfaceKind::RationalCone:
    case SurfaceKind::EllipticCone: return D.at(1);
    case SurfaceKind::Quadric: return D.at(0) + D.at(1);
    case SurfaceKind::Veronese: return 2 * D.at(0);
    case SurfaceKind::BlownPlane: {
      require(S.param() == 4, "embedding_degree: only the quintic del Pezzo P^2_4 has a "
                              "default (anticanonical) embedding");
      return -intersect(D, canonical_class(S));
    }
    case SurfaceKind::Hirzebruch:
      throw std::invalid_argument("embedding_degree: no default embedding for " + S.name());
  }
  throw invariant_error("embedding_degree: unreachable");
}

/// Very-ampleness of (t; 1^delta) at general points:
/// sufficient if delta <= t(t+3)/2 - 5.
inline bool dalmeida_hirschowitz_very_ample(Int t, Int delta) {
  require(t >= 1, "dalmeida_hirschowitz: t >= 1");
  require(delta >= 0, "dalmeida_hirschowitz: delta >= 0");
  return delta <= t * (t + 3) / 2 - 5;
}

/// Necessary condition (sum b_i)^2 <= 4 sum b_i^2 for four multiplicities.
/// Over the reals this always holds; its role is to bound the a-range of the
/// del Pezzo class search.
inline bool schwarz_filter(const std::vector<Int>& b) {
  require(b.size() == 4, "schwarz_filter: exactly four multiplicities");
  Int s = 0, s2 = 0;
  for (Int x : b) {
    s += x;
    s2 += x * x;
  }
  return s * s <= 4 * s2;
}

/// h^1 of the normal bundle of a degree-d = 2a genus-g curve on a Veronese
/// surface in P^5:  3(g - d + 5) - 3a + 9.  Returned raw; negative values
/// mean the formula is outside its valid regime and are for the caller to
/// interpret.
inline Int veronese_normal_h1(Int d, Int g, Int a) {
  require(d == 2 * a, "veronese_normal_h1: need d = 2a");
  return 3 * (g - d + 5) - 3 * a + 9;
}

}  // namespace hscurves::surfaces
