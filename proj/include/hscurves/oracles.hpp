#pragma once

#include <vector>

#include "hscurves/bounds.hpp"
#include "hscurves/core.hpp"
#include "hscurves/enumerate.hpp"
#include "hscurves/surfaces.hpp"

// Brute-force cross-checks for every solver.  Each oracle walks a deliberately
// oversized box and recomputes genus through the intersection pairing
// (adjunction route) instead of the closed formulas the solvers use, so the
// two paths are independent.

namespace hscurves::oracles {

using surfaces::DivisorClass;
using surfaces::SurfaceModel;

/// All scroll classes (a,b) with degree d, genus g (adjunction route) and a
/// nonempty system, searched far beyond the solver's documented bound.
inline std::vector<std::vector<Int>> scroll_classes(Int d, Int g, Int n) {
  const SurfaceModel S = SurfaceModel::scroll(n);
  std::vector<std::vector<Int>> out;
  for (Int a = 1; a <= 4 * d / n + 4; ++a) {
    const Int b = d - n * a;
    DivisorClass D(S, {a, b});
    if (surfaces::adjunction_genus(D) != g) continue;
    if (surfaces::linear_system_dim(D) < 0) continue;
    out.push_back({a, b});
  }
  return out;
}

inline std::vector<std::vector<Int>> rational_cone_classes(Int d, Int g, Int n,
                                                           bool smooth_only) {
  const SurfaceModel S = SurfaceModel::rational_cone(n);
  std::vector<std::vector<Int>> out;
  for (Int k = 1; n * k <= d; ++k) {
    DivisorClass D(S, {k, d});
    if (surfaces::adjunction_genus(D) != g) continue;
    const Int m = d - n * k;
    if (smooth_only && m >= 2) continue;
    out.push_back({k, d});
  }
  return out;
}

inline std::vector<std::vector<Int>> elliptic_cone_classes(Int d, Int g, Int r,
                                                           bool smooth_only) {
  const SurfaceModel S = SurfaceModel::elliptic_cone(r);
  std::vector<std::vector<Int>> out;
  for (Int k = 2; r * k <= d; ++k) {
    DivisorClass D(S, {k, d});
    if (surfaces::adjunction_genus(D) != g) continue;
    const Int m = d - r * k;
    if (smooth_only && m >= 2) continue;
    out.push_back({k, d});
  }
  return out;
}

inline std::vector<std::vector<Int>> veronese_classes(Int d, Int g) {
  std::vector<std::vector<Int>> out;
  for (Int a = 1; 2 * a <= d; ++a) {
    if (2 * a != d) continue;
    DivisorClass D(SurfaceModel::veronese(), {a});
    if (surfaces::adjunction_genus(D) == g) out.push_back({a});
  }
  return out;
}

/// Quadruple loop 0 <= b4 <= b3 <= b2 <= b1 <= a <= 2d over both del Pezzo
/// class equations, genus via adjunction.
inline std::vector<std::vector<Int>> delpezzo_classes(Int d, Int g) {
  const SurfaceModel S = SurfaceModel::blown_plane(4);
  std::vector<std::vector<Int>> out;
  for (Int a = 0; a <= 2 * d; ++a)
    for (Int b1 = 0; b1 <= a; ++b1)
      for (Int b2 = 0; b2 <= b1; ++b2)
        for (Int b3 = 0; b3 <= b2; ++b3) {
          const Int b4 = 3 * a - d - b1 - b2 - b3;
          if (b4 < 0 || b4 > b3) continue;
          DivisorClass D(S, {a, b1, b2, b3, b4});
          if (-surfaces::intersect(D, surfaces::canonical_class(S)) != d) continue;
          if (surfaces::adjunction_genus(D) != g) continue;
          out.push_back(D.coeffs());
        }
  return out;
}

inline std::vector<std::vector<Int>> quadric_classes(Int d3, Int g) {
  const SurfaceModel S = SurfaceModel::quadric();
  std::vector<std::vector<Int>> out;
  for (Int a = 1; 2 * a <= d3; ++a) {
    DivisorClass D(S, {a, d3 - a});
    if (surfaces::adjunction_genus(D) >= g) out.push_back(D.coeffs());
  }
  return out;
}

inline std::vector<std::vector<Int>> solution_classes(
    const std::vector<enumerate::ClassSolution>& sols) {
  std::vector<std::vector<Int>> out;
  for (const auto& s : sols) out.push_back(s.divisor.coeffs());
  return out;
}

struct OracleReport {
  Int checks = 0;
  std::vector<std::string> mismatches;
  [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Compare every solver against its brute-force route over a (d,g) grid.
inline OracleReport run_all(Int d_max = 20, Int g_max = 25) {
  OracleReport rep;
  auto expect = [&](bool same, const std::string& what) {
    ++rep.checks;
    if (!same) rep.mismatches.push_back(what);
  };
  for (Int d = 1; d <= d_max; ++d)
    for (Int g = 0; g <= g_max; ++g) {
      for (Int n = 2; n <= 5; ++n) {
        expect(solution_classes(enumerate::solve_scroll(d, g, n)) == scroll_classes(d, g, n),
               "scroll d=" + std::to_string(d) + " g=" + std::to_string(g) +
                   " n=" + std::to_string(n));
        expect(solution_classes(enumerate::smooth_solutions(
                   enumerate::solve_rational_cone(d, g, n))) ==
                   rational_cone_classes(d, g, n, true),
               "rational-cone d=" + std::to_string(d) + " g=" + std::to_string(g) +
                   " n=" + std::to_string(n));
      }
      for (Int r = 3; r <= 5; ++r)
        expect(solution_classes(enumerate::smooth_solutions(
                   enumerate::solve_elliptic_cone(d, g, r))) ==
                   elliptic_cone_classes(d, g, r, true),
               "elliptic-cone d=" + std::to_string(d) + " g=" + std::to_string(g) +
                   " r=" + std::to_string(r));
      expect(solution_classes(enumerate::solve_veronese(d, g)) == veronese_classes(d, g),
             "veronese d=" + std::to_string(d) + " g=" + std::to_string(g));
      expect(solution_classes(enumerate::solve_delpezzo5(d, g)) == delpezzo_classes(d, g),
             "delpezzo5 d=" + std::to_string(d) + " g=" + std::to_string(g));
      if (d >= 2)
        expect(solution_classes(enumerate::solve_quadric(d, g)) == quadric_classes(d, g),
               "quadric d3=" + std::to_string(d) + " g=" + std::to_string(g));
    }
  return rep;
}

}  // namespace hscurves::oracles
