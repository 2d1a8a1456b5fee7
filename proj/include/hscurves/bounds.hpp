#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hscurves/core.hpp"

namespace hscurves::bounds {

/// Discrete input for everything in this library: a smooth, irreducible,
/// non-degenerate curve of degree d and genus g in projective r-space.
struct CurveTriple {
  Int d;
  Int g;
  Int r;
};

inline void validate(const CurveTriple& t) {
  require(t.d >= 1, "CurveTriple: degree must be >= 1");
  require(t.g >= 0, "CurveTriple: genus must be >= 0");
  require(t.r >= 2, "CurveTriple: ambient dimension must be >= 2");
}

/// Brill-Noether number rho(d,g,r) = g - (r+1)(g-d+r).  May be negative;
/// callers needing the empty/nonempty dichotomy use bn_variety_dim below.
inline Int brill_noether_rho(const CurveTriple& t) {
  validate(t);
  return t.g - (t.r + 1) * (t.g - t.d + t.r);
}

/// dim Aut(P^r) = (r+1)^2 - 1.
inline Int aut_projective_dim(Int r) {
  require(r >= 1, "aut_projective_dim: r >= 1");
  return (r + 1) * (r + 1) - 1;
}

/// Lower bounds for the dimension of any component:
///   lambda = 3g - 3 + rho   (for the space of linear series),
///   chi    = lambda + dim Aut(P^r)   (for the Hilbert scheme).
inline std::pair<Int, Int> expected_dims(const CurveTriple& t) {
  const Int lambda = 3 * t.g - 3 + brill_noether_rho(t);
  return {lambda, lambda + aut_projective_dim(t.r)};
}

inline Int lambda_bound(const CurveTriple& t) { return expected_dims(t).first; }
inline Int chi_bound(const CurveTriple& t) { return expected_dims(t).second; }

/// First Castelnuovo genus bound pi(d,r): the maximal arithmetic genus of an
/// integral non-degenerate degree-d curve in P^r.  With m = floor((d-1)/(r-1))
/// and eps = d-1-m(r-1),
///   pi(d,r) = m(m-1)(r-1)/2 + m*eps.
/// For d < r only rational normal curve pieces exist and the bound is 0.
inline Int castelnuovo_pi(Int d, Int r) {
  require(d >= 1, "castelnuovo_pi: d >= 1");
  require(r >= 2, "castelnuovo_pi: r >= 2");
  if (d < r) return 0;
  const Int m = (d - 1) / (r - 1);
  const Int eps = (d - 1) - m * (r - 1);
  return m * (m - 1) * (r - 1) / 2 + m * eps;
}

enum class Pi1Regime {
  Standard,               // d >= 2r-1: the mr+eps decomposition applies
  MinimalDegreeFallback,  // d < 2r-1: no curve off a minimal-degree surface; pi is returned
};

inline Pi1Regime castelnuovo_pi1_regime(Int d, Int r) {
  require(d >= 1, "castelnuovo_pi1: d >= 1");
  require(r >= 2, "castelnuovo_pi1: r >= 2");
  return d >= 2 * r - 1 ? Pi1Regime::Standard : Pi1Regime::MinimalDegreeFallback;
}

/// Second Castelnuovo genus bound pi_1(d,r): the maximal genus among curves
/// not lying on a surface of minimal degree r-1.  With d = m*r + eps,
/// 0 <= eps < r,
///   pi_1(d,r) = m(m-1)r/2 + m*eps.
/// Anchors pinned by the test suite: pi_1(16,5) = 18, pi_1(16,3) = 35.
inline Int castelnuovo_pi1(Int d, Int r) {
  if (castelnuovo_pi1_regime(d, r) == Pi1Regime::MinimalDegreeFallback)
    return castelnuovo_pi(d, r);
  const Int m = d / r;
  const Int eps = d - m * r;
  return m * (m - 1) * r / 2 + m * eps;
}

enum class GenusRegime { Impossible, Extremal, NearlyExtremal, SubExtremal };

inline const char* to_string(GenusRegime reg) {
  switch (reg) {
    case GenusRegime::Impossible: return "Impossible";
    case GenusRegime::Extremal: return "Extremal";
    case GenusRegime::NearlyExtremal: return "NearlyExtremal";
    case GenusRegime::SubExtremal: return "SubExtremal";
  }
  return "?";
}

struct BoundsRecord {
  Int rho;
  Int lambda;
  Int chi;
  Int pi;
  Int pi1;
  GenusRegime regime;
};

inline BoundsRecord bounds_record(const CurveTriple& t) {
  validate(t);
  BoundsRecord rec{};
  rec.rho = brill_noether_rho(t);
  rec.lambda = 3 * t.g - 3 + rec.rho;
  rec.chi = rec.lambda + aut_projective_dim(t.r);
  rec.pi = castelnuovo_pi(t.d, t.r);
  rec.pi1 = castelnuovo_pi1(t.d, t.r);
  if (t.g > rec.pi)
    rec.regime = GenusRegime::Impossible;
  else if (t.g == rec.pi)
    rec.regime = GenusRegime::Extremal;
  else if (t.g > rec.pi1)
    rec.regime = GenusRegime::NearlyExtremal;
  else
    rec.regime = GenusRegime::SubExtremal;
  return rec;
}

/// g >= pi_1(d,r) guarantees the curve lies on a surface of degree <= r in
/// P^r.  Deliberately non-strict at g = pi_1, unlike the NearlyExtremal
/// regime which uses pi_1 < g; the two conventions are kept separate.
inline bool lies_on_low_degree_surface_guaranteed(const CurveTriple& t) {
  return t.g >= castelnuovo_pi1(t.d, t.r);
}

/// Castelnuovo-Severi inequality: a genus-g curve admitting covers of degrees
/// m, n onto curves of genera h, q with no common factorization satisfies
///   g <= m*h + n*q + (m-1)(n-1).
/// Returns that maximum; a second pencil exists only if g is at most this.
inline Int castelnuovo_severi_bound(Int m, Int h, Int n, Int q) {
  require(m >= 2 && n >= 2, "castelnuovo_severi_bound: cover degrees >= 2");
  require(h >= 0 && q >= 0, "castelnuovo_severi_bound: genera >= 0");
  return m * h + n * q + (m - 1) * (n - 1);
}

/// On a general k-gonal curve of genus g with pencil E, dim|lE| = l for
/// 1 <= l <= floor(g/(k-1)); outside that range the statement is silent and
/// nullopt is returned.
inline std::optional<Int> gonal_pencil_dim(Int g, Int k, Int l) {
  require(k >= 3, "gonal_pencil_dim: k >= 3");
  require(g >= 2 * k - 2, "gonal_pencil_dim: g >= 2k-2");
  if (l >= 1 && l <= g / (k - 1)) return l;
  return std::nullopt;
}

/// Weak sufficient condition for |K - l*E| very ample on a general k-gonal
/// curve: l <= floor(g/(k-1)) - 2.
inline bool residual_very_ample_weak(Int g, Int k, Int l) {
  require(k >= 3, "residual_very_ample: k >= 3");
  require(g >= 2 * k - 2, "residual_very_ample: g >= 2k-2");
  return l >= 1 && l <= g / (k - 1) - 2;
}

/// Hypothesis of the stronger statement dim|n*E + D| = n for general
/// D of degree m on a general k-gonal curve:
///   2k - g - 2 < 0   and   g >= 2m + n(k-1).
/// Exposed in full (m,n) generality; very-ampleness of |K - l*E| is the
/// m = 2, n = l specialization.
inline bool gonal_sum_dim_exact(Int g, Int k, Int m, Int n) {
  require(k >= 2, "gonal_sum_dim_exact: k >= 2");
  require(m >= 0 && n >= 0, "gonal_sum_dim_exact: m,n >= 0");
  return (2 * k - g - 2 < 0) && (g >= 2 * m + n * (k - 1));
}

inline bool residual_very_ample_strong(Int g, Int k, Int l) {
  require(k >= 3, "residual_very_ample: k >= 3");
  require(g >= 2 * k - 2, "residual_very_ample: g >= 2k-2");
  return l >= 1 && gonal_sum_dim_exact(g, k, 2, l);
}

/// Either sufficient condition.  The two forms do not imply each other.
inline bool residual_very_ample_gonal(Int g, Int k, Int l) {
  return residual_very_ample_weak(g, k, l) || residual_very_ample_strong(g, k, l);
}

/// Genus of a smooth plane curve of degree e.
inline Int plane_curve_genus(Int e) {
  require(e >= 1, "plane_curve_genus: e >= 1");
  return (e - 1) * (e - 2) / 2;
}

/// Arithmetic genus of a complete intersection of hypersurfaces of degrees
/// a_1..a_{n-1} in P^n:  p_a = 1 + (1/2) a_1...a_{n-1} (sum a_i - n - 1).
/// The product times the bracket is always even for integer degrees; the
/// division is checked rather than rounded.
inline Int complete_intersection_genus(const std::vector<Int>& degrees, Int n) {
  require(static_cast<Int>(degrees.size()) == n - 1,
          "complete_intersection_genus: need n-1 degrees in P^n");
  Int prod = 1, sum = 0;
  for (Int a : degrees) {
    require(a >= 1, "complete_intersection_genus: degrees >= 1");
    prod *= a;
    sum += a;
  }
  return 1 + half_exact(prod * (sum - n - 1), "complete_intersection_genus");
}

/// Dimension of the Hurwitz locus of genus-g curves that are degree-n covers
/// of genus-gamma curves:  2g + (2n-3)(1-gamma) - 2.
inline Int hurwitz_dim(Int g, Int n, Int gamma) {
  require(n >= 2, "hurwitz_dim: n >= 2");
  require(gamma >= 0, "hurwitz_dim: gamma >= 0");
  if (gamma > 0) require(g >= n * gamma, "hurwitz_dim: g too small for a degree-n cover");
  return 2 * g + (2 * n - 3) * (1 - gamma) - 2;
}

/// dim M^1_{g,k} = 2g + 2k - 5, the gamma = 0 case of hurwitz_dim.
inline Int gonal_locus_dim(Int g, Int k) { return hurwitz_dim(g, k, 0); }

/// Grassmannian of k-planes in P^n: (k+1)(n-k).  k = n is the degenerate
/// point (dimension 0); k > n is rejected.
inline Int grassmannian_dim(Int k, Int n) {
  require(k >= 0 && k <= n, "grassmannian_dim: need 0 <= k <= n");
  return (k + 1) * (n - k);
}

/// dim W^r_d on a general genus-g curve: rho(d,g,r) if nonnegative, else the
/// variety is empty (nullopt).
inline std::optional<Int> bn_variety_dim(Int g, Int r, Int d) {
  require(g >= 1 && r >= 0 && d >= 0, "bn_variety_dim: g >= 1, r >= 0, d >= 0");
  const Int rho = g - (r + 1) * (g - d + r);
  if (rho < 0) return std::nullopt;
  return rho;
}

/// dim C^r_d = rho + r on a general curve (divisors rather than series).
inline std::optional<Int> bn_divisor_variety_dim(Int g, Int r, Int d) {
  auto w = bn_variety_dim(g, r, d);
  if (!w) return std::nullopt;
  return *w + r;
}

}  // namespace hscurves::bounds
