#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hscurves/bounds.hpp"
#include "hscurves/core.hpp"
#include "hscurves/surfaces.hpp"

namespace hscurves::enumerate {

using surfaces::DivisorClass;
using surfaces::SurfaceModel;

/// One divisor class realizing (degree, genus) on its surface, together with
/// the flags the census needs.
struct ClassSolution {
  DivisorClass divisor;
  Int degree;
  Int genus;
  Int linear_system_dim;              // projective dimension of |divisor|
  bool very_ample_certified = false;  // only explicit criteria certify
  bool expected_dim_only = false;     // dimension assumes general points
  std::optional<Int> vertex_mult;     // cone kinds: multiplicity at the vertex
  std::optional<Int> nodal_delta;     // plane/quadric models: number of nodes

  /// m >= 2 means the curve on the cone is singular at the vertex.
  [[nodiscard]] bool singular_at_vertex() const {
    return vertex_mult.has_value() && *vertex_mult >= 2;
  }
};

/// Drop cone solutions whose image curve is singular at the vertex.  The
/// smooth-curve census and the CLI default to this view.
inline std::vector<ClassSolution> smooth_solutions(std::vector<ClassSolution> sols) {
  std::erase_if(sols, [](const ClassSolution& s) { return s.singular_at_vertex(); });
  return sols;
}

namespace detail {

inline void sort_solutions(std::vector<ClassSolution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const ClassSolution& x, const ClassSolution& y) {
    return x.divisor.coeffs() < y.divisor.coeffs();
  });
}

inline bool same_solutions(const std::vector<ClassSolution>& a,
                           const std::vector<ClassSolution>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].divisor == b[i].divisor)) return false;
  return true;
}

/// With CENSUS_DEBUG_WIDE_BOX=1, re-run a solver with its box doubled and
/// require that nothing new appears.
template <typename Solver>
void wide_box_check(const Solver& solve, const std::vector<ClassSolution>& base,
                    const std::string& what) {
  if (!debug_wide_box_enabled()) return;
  auto widened = solve(2);
  sort_solutions(widened);
  check_invariant(same_solutions(base, widened),
                  "box-sufficiency check failed for " + what +
                      ": widened search box found different solutions");
}

}  // namespace detail

/// Classes aH + bL of degree d and genus g on the degree-n scroll:
///   d = na + b,  g = (1/2)a(a-1)n + (a-1)(b-1).
/// b may be negative.  Loop bound: |aH+bL| nonempty forces
/// (a+1)(2(d+1) - an) >= 2, i.e. an <= 2d + 1; classes with an empty system
/// are not curves and are filtered.
inline std::vector<ClassSolution> solve_scroll(Int d, Int g, Int n) {
  require(n >= 2, "solve_scroll: n >= 2");
  require(d >= 1 && g >= 0, "solve_scroll: d >= 1, g >= 0");
  const SurfaceModel S = SurfaceModel::scroll(n);
  auto run = [&](Int widen) {
    std::vector<ClassSolution> out;
    const Int a_max = widen * ((2 * d + 1) / n + 1);
    for (Int a = 1; a <= a_max; ++a) {
      const Int b = d - n * a;
      if (a * (a - 1) * n / 2 + (a - 1) * (b - 1) != g) continue;
      DivisorClass D(S, {a, b});
      const Int dim = surfaces::linear_system_dim(D);
      if (dim < 0) continue;
      out.push_back({D, d, g, dim});
    }
    return out;
  };
  auto sols = run(1);
  detail::sort_solutions(sols);
  detail::wide_box_check(run, sols, "solve_scroll");
  return sols;
}

/// Classes kC0 + df on the resolution of the degree-n rational normal cone:
///   g = (1/2)(k-1)(2d - nk - 2),  vertex multiplicity m = d - nk >= 0.
/// m = 0 misses the vertex, m = 1 passes smoothly through it, m >= 2 means
/// the image curve is singular there (returned flagged; filter with
/// smooth_solutions for the smooth-curve census).  Loop bound k <= d/n from
/// m >= 0.
inline std::vector<ClassSolution> solve_rational_cone(Int d, Int g, Int n) {
  require(n >= 2, "solve_rational_cone: n >= 2");
  require(d >= 1 && g >= 0, "solve_rational_cone: d >= 1, g >= 0");
  const SurfaceModel S = SurfaceModel::rational_cone(n);
  auto run = [&](Int widen) {
    std::vector<ClassSolution> out;
    for (Int k = 1; k <= widen * (d / n); ++k) {
      const Int m = d - n * k;
      if (m < 0) continue;
      if ((k - 1) * (2 * d - n * k - 2) != 2 * g) continue;
      DivisorClass D(S, {k, d});
      ClassSolution sol{D, d, g, surfaces::linear_system_dim(D)};
      sol.vertex_mult = m;
      out.push_back(std::move(sol));
    }
    return out;
  };
  auto sols = run(1);
  detail::sort_solutions(sols);
  detail::wide_box_check(run, sols, "solve_rational_cone");
  return sols;
}

/// Smooth plane curves of degree d/2 on the Veronese surface: nonempty only
/// when d is even and binom(d/2-1, 2) = g.
inline std::vector<ClassSolution> solve_veronese(Int d, Int g) {
  require(d >= 1 && g >= 0, "solve_veronese: d >= 1, g >= 0");
  std::vector<ClassSolution> out;
  if (d % 2 != 0) return out;
  const Int a = d / 2;
  if (a >= 1 && bounds::plane_curve_genus(a) == g) {
    DivisorClass D(SurfaceModel::veronese(), {a});
    out.push_back({D, d, g, surfaces::linear_system_dim(D)});
  }
  return out;
}

/// Classes kC0 + df on the resolution of the cone over a degree-r elliptic
/// normal curve:
///   g = (k-1)(d - kr/2) + 1   (evaluated exactly as (k-1)(2d - kr) = 2(g-1)),
///   vertex multiplicity m = d - rk >= 0.
/// Loop bound k <= d/r from m >= 0.
inline std::vector<ClassSolution> solve_elliptic_cone(Int d, Int g, Int r) {
  require(r >= 3, "solve_elliptic_cone: r >= 3");
  require(d >= 1 && g >= 0, "solve_elliptic_cone: d >= 1, g >= 0");
  const SurfaceModel S = SurfaceModel::elliptic_cone(r);
  auto run = [&](Int widen) {
    std::vector<ClassSolution> out;
    for (Int k = 2; k <= widen * (d / r); ++k) {
      const Int m = d - r * k;
      if (m < 0) continue;
      if ((k - 1) * (2 * d - k * r) != 2 * (g - 1)) continue;
      DivisorClass D(S, {k, d});
      ClassSolution sol{D, d, g, surfaces::linear_system_dim(D)};
      sol.vertex_mult = m;
      out.push_back(std::move(sol));
    }
    return out;
  };
  auto sols = run(1);
  detail::sort_solutions(sols);
  detail::wide_box_check(run, sols, "solve_elliptic_cone");
  return sols;
}

/// Classes (a; b1 >= b2 >= b3 >= b4 >= 0) on the quintic del Pezzo surface
/// (P^2 blown up at 4 general points, anticanonically embedded):
///   3a - sum b_i = d,   a^2 - sum b_i^2 = 2g - 2 + d.
/// Search box: 2(-K) - h is nef, so an effective class has a = C.h <= 2d;
/// inside the box the four-multiplicity Schwarz inequality
/// (sum b)^2 <= 4 sum b^2, i.e. 5a^2 - 6ad + d^2 + 4d + 8g - 8 <= 0, prunes a
/// (it is implied by the equations over the reals, so it drops nothing).
/// All classes the equations admit are returned; nothing is discarded on
/// geometric grounds.  Representatives related by quadratic transformations
/// are grouped by cremona_groups below, never deduplicated.
inline std::vector<ClassSolution> solve_delpezzo5(Int d, Int g) {
  require(d >= 0 && g >= 0, "solve_delpezzo5: d >= 0, g >= 0");
  const SurfaceModel S = SurfaceModel::blown_plane(4);
  auto run = [&](Int widen) {
    std::vector<ClassSolution> out;
    const Int c2 = 2 * g - 2 + d;  // required self-intersection
    for (Int a = 0; a <= widen * 2 * d; ++a) {
      if (5 * a * a - 6 * a * d + d * d + 4 * d + 8 * g - 8 > 0) continue;
      const Int sb = 3 * a - d;
      const Int sb2 = a * a - c2;
      if (sb < 0 || sb2 < 0) continue;
      for (Int b1 = 0; b1 <= a; ++b1)
        for (Int b2 = 0; b2 <= b1; ++b2)
          for (Int b3 = 0; b3 <= b2; ++b3) {
            const Int b4 = sb - b1 - b2 - b3;
            if (b4 < 0 || b4 > b3) continue;
            if (b1 * b1 + b2 * b2 + b3 * b3 + b4 * b4 != sb2) continue;
            if (!surfaces::schwarz_filter({b1, b2, b3, b4})) continue;
            DivisorClass D(S, {a, b1, b2, b3, b4});
            ClassSolution sol{D, d, g, surfaces::linear_system_dim(D)};
            sol.expected_dim_only = true;
            out.push_back(std::move(sol));
          }
    }
    return out;
  };
  auto sols = run(1);
  detail::sort_solutions(sols);
  detail::wide_box_check(run, sols, "solve_delpezzo5");
  return sols;
}

/// Curve types (a,b), 1 <= a <= b, a + b = d3 on a smooth quadric in P^3 with
/// arithmetic genus (a-1)(b-1) >= g; the nodal defect delta = p_a - g is
/// recorded on each solution.
inline std::vector<ClassSolution> solve_quadric(Int d3, Int g) {
  require(d3 >= 2, "solve_quadric: degree in P^3 >= 2");
  require(g >= 0, "solve_quadric: g >= 0");
  const SurfaceModel S = SurfaceModel::quadric();
  std::vector<ClassSolution> out;
  for (Int a = 1; 2 * a <= d3; ++a) {
    const Int b = d3 - a;
    const Int pa = (a - 1) * (b - 1);
    if (pa < g) continue;
    DivisorClass D(S, {a, b});
    ClassSolution sol{D, d3, g, surfaces::linear_system_dim(D)};
    sol.nodal_delta = pa - g;
    out.push_back(std::move(sol));
  }
  detail::sort_solutions(out);
  return out;
}

/// Nodal-plane-model datum for degree-e geometric-genus-g curves.
struct SeveriRecord {
  Int e;
  Int delta;      // binom(e-1,2) - g nodes on a general member
  Int dim_sigma;  // dim of the equigeneric family: dim|O(e)| - delta
};

/// delta = C(e-1,2) - g;  dim Sigma_{e,g} = C(e+2,2) - 1 - delta.
/// Empty (nullopt) when g exceeds the genus of a smooth plane curve.
inline std::optional<SeveriRecord> solve_severi_plane(Int e, Int g) {
  require(e >= 3, "solve_severi_plane: e >= 3");
  require(g >= 0, "solve_severi_plane: g >= 0");
  const Int delta = binom2(e - 1) - g;
  if (delta < 0) return std::nullopt;
  return SeveriRecord{e, delta, binom2(e + 2) - 1 - delta};
}

/// Candidate gonality pencils of a blown-plane class (a; b_1..b_s): lines
/// through the i-th point cut a pencil of degree a - b_i.  Sorted ascending;
/// the first entry is an upper bound for the gonality.
inline std::vector<Int> plane_model_pencils(const DivisorClass& D) {
  require(D.surface().kind() == surfaces::SurfaceKind::BlownPlane,
          "plane_model_pencils: blown-plane classes only");
  std::vector<Int> pencils;
  for (size_t i = 1; i < D.coeffs().size(); ++i) pencils.push_back(D.at(0) - D.at(i));
  std::sort(pencils.begin(), pencils.end());
  return pencils;
}

/// Quadratic (Cremona) transformation based at the three points of largest
/// multiplicity:
///   (a; b1,b2,b3,b4) -> (2a - b1-b2-b3; a-b2-b3, a-b1-b3, a-b1-b2, b4),
/// re-sorted.  Degree and genus are preserved.
inline DivisorClass cremona_transform(const DivisorClass& D) {
  require(D.surface().kind() == surfaces::SurfaceKind::BlownPlane &&
              D.surface().param() >= 3,
          "cremona_transform: needs a blown plane with at least 3 points");
  std::vector<Int> c = D.coeffs();
  const Int a = c[0], b1 = c[1], b2 = c[2], b3 = c[3];
  c[0] = 2 * a - b1 - b2 - b3;
  c[1] = a - b2 - b3;
  c[2] = a - b1 - b3;
  c[3] = a - b1 - b2;
  return {D.surface(), std::move(c)};
}

/// Group solutions into equivalence classes under the quadratic
/// transformation (union-find over the solution list; images leaving the
/// list, e.g. with negative multiplicities, do not link anything).  Each
/// group keeps every representative; groups are ordered by their
/// lexicographically smallest member.
inline std::vector<std::vector<ClassSolution>> cremona_groups(
    const std::vector<ClassSolution>& sols) {
  const size_t n = sols.size();
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i) {
    const DivisorClass image = cremona_transform(sols[i].divisor);
    for (size_t j = 0; j < n; ++j)
      if (sols[j].divisor == image) parent[find(i)] = find(j);
  }
  std::vector<std::vector<ClassSolution>> groups;
  for (size_t root = 0; root < n; ++root) {
    if (find(root) != root) continue;
    std::vector<ClassSolution> group;
    for (size_t i = 0; i < n; ++i)
      if (find(i) == root) group.push_back(sols[i]);
    groups.push_back(std::move(group));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
    return x.front().divisor.coeffs() < y.front().divisor.coeffs();
  });
  return groups;
}

}  // namespace hscurves::enumerate
