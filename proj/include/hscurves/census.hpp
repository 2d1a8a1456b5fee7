#pragma once

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "hscurves/bounds.hpp"
#include "hscurves/core.hpp"
#include "hscurves/enumerate.hpp"
#include "hscurves/families.hpp"
#include "hscurves/surfaces.hpp"

namespace hscurves::census {

using bounds::BoundsRecord;
using bounds::CurveTriple;
using enumerate::ClassSolution;
using families::Construction;
using families::DimLevel;
using families::FamilyCandidate;
using families::Status;

enum class VerdictKind { Empty, Irreducible, Reducible, Open };

inline const char* to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::Empty: return "Empty";
    case VerdictKind::Irreducible: return "Irreducible";
    case VerdictKind::Reducible: return "Reducible";
    case VerdictKind::Open: return "Open";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::Open;
  Int component_count = 0;  // meaningful for Reducible
  std::string justification;
};

/// The full census entry for one (d, g, r).
struct GenusReport {
  CurveTriple triple{};
  BoundsRecord bounds{};
  std::vector<FamilyCandidate> candidates;
  Verdict verdict;
  std::vector<std::string> notes;
};

namespace detail {

inline std::string int_str(Int v) { return std::to_string(v); }

/// Universal lower-bound rule: an embedded family below chi (or a family of
/// series below lambda) cannot be dense in a component.
inline void apply_dimension_exclusion(FamilyCandidate& c) {
  c.finalize();
  if (c.status != Status::ComponentCandidate) return;
  if (c.excess < 0) {
    c.status = Status::Excluded;
    c.exclusion_reason =
        c.level == DimLevel::Embedded ? "DimBelowChi" : "DimBelowLambda";
  }
}

/// Smooth plane curves of degree a >= 3 have gonality a-1 (projection from a
/// point of the curve); lines and conics are rational.
inline Int plane_curve_gonality(Int a) { return a >= 3 ? a - 1 : 1; }

inline bool studied_census(const CurveTriple& t) { return t.d == 16 && t.r == 5; }

// --- surface-family candidates, valid for any (d, g, r) -------------------

inline void add_veronese_candidates(const CurveTriple& t, const BoundsRecord& rec,
                                    GenusReport& rep) {
  if (t.r != 5) return;
  for (const auto& sol : enumerate::solve_veronese(t.d, t.g)) {
    FamilyCandidate c;
    const Int a = sol.divisor.at(0);
    c.label = "veronese a=" + int_str(a);
    c.construction = Construction::OnVeronese;
    c.dim = families::veronese_family_dim(sol, t.r);
    c.bound = rec.chi;
    c.gonality_upper = plane_curve_gonality(a);
    c.justification = "smooth plane curves of degree " + int_str(a) +
                      " under the Veronese embedding";
    const Int h1 = surfaces::veronese_normal_h1(t.d, t.g, a);
    if (h1 >= 0) {
      c.notes.push_back("h1 of the normal bundle = " + int_str(h1));
      if (rec.chi + h1 == c.dim)
        c.notes.push_back("tangent-space check: chi + h1 = " + int_str(rec.chi) + " + " +
                          int_str(h1) + " = " + int_str(c.dim) +
                          " = dim; generically reduced, superabundant");
    }
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
}

inline void add_scroll_candidates(const CurveTriple& t, const BoundsRecord& rec,
                                  GenusReport& rep) {
  if (t.r < 3) return;
  for (const auto& sol : enumerate::solve_scroll(t.d, t.g, t.r - 1)) {
    FamilyCandidate c;
    const Int a = sol.divisor.at(0);
    c.label = "scroll " + sol.divisor.to_string();
    c.construction = Construction::OnScroll;
    c.dim = families::scroll_family_dim(sol, t.r);
    c.bound = rec.chi;
    c.gonality_upper = a;  // the ruling pencil
    c.justification = "curves of class " + sol.divisor.to_string() +
                      " on rational normal scrolls of degree " + int_str(t.r - 1);
    // A second pencil of the same degree would violate the two-cover genus
    // bound; note uniqueness when it applies.
    if (a >= 2 && bounds::castelnuovo_severi_bound(a, 0, a, 0) < t.g)
      c.notes.push_back("the degree-" + int_str(a) +
                        " ruling pencil is unique (two such pencils force g <= " +
                        int_str(bounds::castelnuovo_severi_bound(a, 0, a, 0)) + ")");
    // Alternative count through the gonal locus when the scroll curves
    // dominate it: dim M^1_{g,a} + dim Aut(P^r).
    if (a >= 3 && t.g >= 2 * a - 2) {
      const Int gonal_route =
          bounds::gonal_locus_dim(t.g, a) + bounds::aut_projective_dim(t.r);
      if (gonal_route == c.dim)
        c.notes.push_back("gonal-locus route agrees: dim M^1_{g," + int_str(a) + "} + " +
                          int_str(bounds::aut_projective_dim(t.r)) + " = " +
                          int_str(gonal_route));
    }
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
}

inline void add_rational_cone_candidates(const CurveTriple& t, const BoundsRecord& rec,
                                         GenusReport& rep) {
  if (t.r < 3) return;
  for (const auto& sol :
       enumerate::smooth_solutions(enumerate::solve_rational_cone(t.d, t.g, t.r - 1))) {
    FamilyCandidate c;
    const Int k = sol.divisor.at(0);
    c.label = "rational-cone k=" + int_str(k);
    c.construction = Construction::OnCone;
    c.dim = families::cone_family_dim(sol, t.r);
    c.bound = rec.chi;
    c.gonality_upper = k;
    c.status = Status::StrictlyInsideBoundary;
    c.justification =
        "smooth curves on a cone over a rational normal curve are specializations of "
        "curves on smooth scrolls; the family lies in the scroll family's boundary";
    c.notes.push_back("vertex multiplicity m = " + int_str(*sol.vertex_mult) +
                      (*sol.vertex_mult == 0 ? " (misses the vertex)"
                                             : " (passes smoothly through the vertex)"));
    c.finalize();
    rep.candidates.push_back(std::move(c));
  }
}

inline void add_elliptic_cone_candidates(const CurveTriple& t, const BoundsRecord& rec,
                                         GenusReport& rep) {
  if (t.r < 3) return;
  for (const auto& sol :
       enumerate::smooth_solutions(enumerate::solve_elliptic_cone(t.d, t.g, t.r))) {
    FamilyCandidate c;
    const Int k = sol.divisor.at(0);
    c.label = "elliptic-cone k=" + int_str(k);
    c.construction = Construction::OnEllipticCone;
    c.dim = families::cone_family_dim(sol, t.r);
    c.bound = rec.chi;
    c.gonality_upper = 2 * k;  // compose the cover with a degree-2 map of the base
    c.justification = "degree-" + int_str(k) +
                      " covers of elliptic curves, embedded on cones over elliptic "
                      "normal curves of degree " + int_str(t.r);
    const Int h0 = sol.linear_system_dim + 1;
    c.notes.push_back("section count " + int_str(h0) + ", projective dimension " +
                      int_str(sol.linear_system_dim) +
                      " (trivial-summand convention for the degree-0 pushforward piece)");
    if (studied_census(t) && t.g == 18) {
      c.cited_dim = 64;
      c.notes.push_back(
          "computed dim 63 (5 + 25 + 33); the cited classification reports 64, counting "
          "34 for the class (3,16); both values are kept");
      c.notes.push_back(
          "not in the boundary of the del Pezzo family: smooth limits of triple covers "
          "of elliptic curves remain covers of degree <= 3 onto genus <= 1 curves "
          "(admissible-covers degeneration; imported, no numeric backing)");
      c.notes.push_back("the curve passes through the vertex (m = 1)");
    } else {
      c.notes.push_back("vertex multiplicity m = " + int_str(*sol.vertex_mult));
    }
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
}

inline void add_delpezzo_candidates(const CurveTriple& t, const BoundsRecord& rec,
                                    GenusReport& rep) {
  if (t.r != 5) return;
  const auto sols = enumerate::solve_delpezzo5(t.d, t.g);
  if (sols.empty()) return;
  // Classes displayed with a very-ampleness citation in the source
  // classification of (16, g, 5).
  const std::vector<Int> cited_very_ample = {9, 3, 3, 3, 2};
  for (const auto& group : enumerate::cremona_groups(sols)) {
    FamilyCandidate c;
    const ClassSolution& rep_sol = group.front();
    c.label = "del-pezzo " + rep_sol.divisor.to_string();
    c.construction = Construction::OnDelPezzo5;
    c.dim = families::delpezzo_family_dim(rep_sol, t.r);
    c.bound = rec.chi;
    const auto pencils = enumerate::plane_model_pencils(rep_sol.divisor);
    c.gonality_upper = pencils.front();
    c.justification = "curves of class " + rep_sol.divisor.to_string() +
                      " on smooth quintic del Pezzo surfaces";
    if (group.size() > 1) {
      std::string reps = "quadratic-transformation class:";
      for (const auto& s : group) reps += " " + s.divisor.to_string();
      c.notes.push_back(reps);
    }
    {
      std::string ps = "plane-model pencil degrees:";
      for (Int p : pencils) ps += " " + int_str(p);
      c.notes.push_back(ps);
    }
    for (const auto& s : group) {
      if (s.divisor.coeffs() == cited_very_ample && t.d == 16) {
        c.notes.push_back("very ample by the cited blown-plane criterion; the minimal "
                          "pencil degree is 6 (no smaller pencil, by the cited "
                          "multiplicity bound)");
      }
      if (s.divisor.coeffs().back() == 0)
        c.notes.push_back("class " + s.divisor.to_string() +
                          " has b4 = 0: the curve misses one point and lives on a "
                          "blow-down as well");
    }
    c.notes.push_back("linear-system dimension " + int_str(rep_sol.linear_system_dim) +
                      " is the expected dimension (general points)");
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
}

// --- baked rows mirroring the built-in classification of (16, g, 5) -------

inline void add_g17_complete_intersection(const CurveTriple& t, const BoundsRecord& rec,
                                          GenusReport& rep) {
  const auto fam = families::complete_intersection_family({2, 2, 2, 2}, 5);
  check_invariant(fam.genus == t.g && fam.degree == t.d,
                  "census: (2,2,2,2) complete intersection data mismatch");
  FamilyCandidate c;
  c.label = "complete-intersection [2,2,2,2]";
  c.construction = Construction::CompleteIntersection;
  c.dim = fam.dim;
  c.bound = rec.chi;
  c.justification =
      "smooth complete intersections of four independent quadric hypersurfaces; the "
      "hyperplane series is semicanonical, so the family is not in the closure of the "
      "del Pezzo family (semicontinuity of h1(O_C(2)))";
  if (fam.tangent_dim)
    c.notes.push_back("tangent-space check: h0(N) = 4 * h0(O_C(2)) = 4 * " +
                      int_str(fam.genus) + " = " + int_str(*fam.tangent_dim) +
                      " = dim; generically reduced, superabundant");
  apply_dimension_exclusion(c);
  rep.candidates.push_back(std::move(c));
}

inline void add_g14_rows(const CurveTriple& t, const BoundsRecord& rec, GenusReport& rep) {
  // The linearly normal component via nodal plane models of degree 10.
  const Int e = 2 * t.g - 2 - t.d;  // 10
  const auto severi = enumerate::solve_severi_plane(e, t.g);
  check_invariant(severi.has_value(), "census g=14: Severi record missing");
  {
    FamilyCandidate c;
    c.label = "linearly-normal (plane model e=" + int_str(e) + ")";
    c.construction = Construction::SeveriPlaneModel;
    c.dim = families::severi_model_family_dim(e, t.g, t.r) + bounds::aut_projective_dim(t.r);
    c.bound = rec.chi;
    c.gonality_upper = e - 2;  // lines through a node
    c.moduli_image_dim = families::moduli_accounting(c.dim, t.g, 0, t.r).first;
    c.moduli_codim = families::moduli_accounting(c.dim, t.g, 0, t.r).second;
    c.justification =
        "linearly normal curves whose residual series gives a nodal plane model of "
        "degree 10; the model map is dominant and generically one-to-one, so the "
        "component has the expected dimension";
    c.notes.push_back("delta = " + int_str(severi->delta) + " nodes; dim Sigma = " +
                      int_str(severi->dim_sigma));
    std::vector<Int> hyper(static_cast<size_t>(severi->delta) + 1, 1);
    hyper[0] = e - 4;
    const Int h0 = surfaces::linear_system_dim(surfaces::DivisorClass(
                       surfaces::SurfaceModel::blown_plane(severi->delta), hyper)) +
                   1;
    c.notes.push_back("blow-up hyperplane system (" + int_str(e - 4) + ";1^" +
                      int_str(severi->delta) + ") has h0 = " + int_str(h0));
    c.notes.push_back(std::string("simple-point very-ampleness criterion at (6,22): ") +
                      (surfaces::dalmeida_hirschowitz_very_ample(e - 4, severi->delta)
                           ? "holds"
                           : "fails"));
    c.notes.push_back("lambda-equality: lambda(" + int_str(e) + "," + int_str(t.g) +
                      ",2) = " + int_str(bounds::lambda_bound({e, t.g, 2})) +
                      " = lambda(" + int_str(t.d) + "," + int_str(t.g) + "," +
                      int_str(t.r) + ")");
    c.notes.push_back("gonality exactly 8 by the cited multiplicity bound");
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
  // Pentagonal residual series fall short of the series bound.
  {
    FamilyCandidate c;
    c.label = "gonal-residual k=5 l=2";
    c.construction = Construction::GonalResidual;
    c.level = DimLevel::SeriesOnly;
    c.dim = families::gonal_residual_family_dim(t.g, 5, 2, t.r);
    c.bound = rec.lambda;
    c.gonality_upper = 5;
    c.justification =
        "series |K - 2*(degree-5 pencil)| on general 5-gonal curves; very ample by the "
        "strong residual criterion, but the family of series is below the series bound";
    c.notes.push_back(std::string("strong residual criterion at (g,k,l) = (14,5,2): ") +
                      (bounds::residual_very_ample_strong(14, 5, 2) ? "holds" : "fails"));
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
  // Non-linearly-normal models on a smooth quadric in P^3.
  const Int d3 = 2 * t.g - 2 - t.d;  // degree of the residual space model: 10
  for (const auto& sol : enumerate::solve_quadric(d3, t.g)) {
    FamilyCandidate c;
    c.label = "quadric-model " + sol.divisor.to_string();
    c.construction = Construction::QuadricModel;
    c.dim = families::quadric_model_family_dim(sol, t.g, t.r);
    c.bound = rec.chi;
    c.gonality_upper = sol.divisor.at(0);
    c.notes.push_back("delta = " + int_str(*sol.nodal_delta) + " nodes on the model");
    if (sol.divisor.at(0) == 4 && sol.divisor.at(1) == 6) {
      c.status = Status::Excluded;
      c.exclusion_reason = "ResidualNotVeryAmple";
      c.justification =
          "type (4,6) models have one node or cusp and the residual series is not very "
          "ample; excluded by annotation";
      c.finalize();
    } else {
      c.justification =
          "non-linearly-normal curves whose degree-10 space model is a nodal curve on a "
          "smooth quadric";
      apply_dimension_exclusion(c);
    }
    rep.candidates.push_back(std::move(c));
  }
  rep.notes.push_back(
      "models on a quadric cone are specializations of smooth-quadric models");
  rep.notes.push_back(
      "types (3,7) and (2,8) fail the genus requirement and are not listed");
}

inline void add_g13_rows(const CurveTriple& t, const BoundsRecord& rec, GenusReport& rep) {
  {
    FamilyCandidate c;
    c.label = "principal (linearly normal)";
    c.construction = Construction::Principal;
    c.dim = rec.chi;
    c.bound = rec.chi;
    c.gonality_upper = (t.g + 3) / 2;
    const auto [img, codim] = families::moduli_accounting(c.dim, t.g, 1, t.r);
    c.moduli_image_dim = img;
    c.moduli_codim = codim;
    c.justification =
        "the unique component dominating moduli (rho = 1 >= 0), of the expected "
        "dimension; series are |K - (degree-8 pencil)| with a one-dimensional pencil "
        "choice in each fibre";
    c.notes.push_back("dim W^1_8 = 1 on a general curve; W^1_7 and W^2_8 are empty");
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
  {
    FamilyCandidate c;
    c.label = "gonal-residual k=4 l=2";
    c.construction = Construction::GonalResidual;
    c.level = DimLevel::SeriesOnly;
    c.dim = families::gonal_residual_family_dim(t.g, 4, 2, t.r);
    c.bound = rec.lambda;
    c.gonality_upper = 4;
    c.justification = "series |K - 2*(degree-4 pencil)| on general 4-gonal curves";
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
  {
    FamilyCandidate c;
    c.label = "hurwitz n=2 gamma=3";
    c.construction = Construction::HurwitzResidual;
    c.level = DimLevel::SeriesOnly;
    c.dim = families::hurwitz_residual_family_dim(t.g, 2, 3, t.r, 6);
    c.bound = rec.lambda;
    c.justification =
        "residuals of pulled-back canonical series on double covers of smooth plane "
        "quartics";
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
  {
    FamilyCandidate c;
    const Int e = 2 * t.g - 2 - t.d;  // 8
    c.label = "severi-plane e=" + int_str(e);
    c.construction = Construction::SeveriPlaneModel;
    c.level = DimLevel::SeriesOnly;
    c.dim = families::severi_model_family_dim(e, t.g, t.r);
    c.bound = rec.lambda;
    c.gonality_upper = e - 2;
    c.justification = "series from birationally very ample nodal plane models of degree 8";
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
}

inline void add_g12_rows(const CurveTriple& t, const BoundsRecord& rec, GenusReport& rep) {
  {
    FamilyCandidate c;
    c.label = "principal (linearly normal)";
    c.construction = Construction::Principal;
    c.dim = rec.chi;
    c.bound = rec.chi;
    c.gonality_upper = (t.g + 3) / 2;
    const auto [img, codim] = families::moduli_accounting(c.dim, t.g, 6, t.r);
    c.moduli_image_dim = img;
    c.moduli_codim = codim;
    c.justification =
        "the unique component dominating moduli; every complete series is |K - D| for a "
        "degree-6 divisor D off a three-dimensional bad locus";
    c.notes.push_back("dim C^1_8 = 3 on a general curve; the excised locus in C_6 has "
                      "dimension 3");
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
  {
    FamilyCandidate c;
    c.label = "gonal-residual k=3 l=2";
    c.construction = Construction::GonalResidual;
    c.level = DimLevel::SeriesOnly;
    c.dim = families::gonal_residual_family_dim(t.g, 3, 2, t.r);
    c.bound = rec.lambda;
    c.gonality_upper = 3;
    c.justification = "series |K - 2*(degree-3 pencil)| on trigonal curves";
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
  {
    FamilyCandidate c;
    c.label = "gonal-residual k=6 l=1";
    c.construction = Construction::GonalResidual;
    c.level = DimLevel::SeriesOnly;
    c.dim = families::gonal_residual_family_dim(t.g, 6, 1, t.r);
    c.bound = rec.lambda;
    c.gonality_upper = 6;
    c.justification = "series |K - (degree-6 pencil)| on general hexagonal curves";
    apply_dimension_exclusion(c);
    rep.candidates.push_back(std::move(c));
  }
}

inline void add_low_genus_principal(const CurveTriple& t, const BoundsRecord& rec,
                                    GenusReport& rep) {
  FamilyCandidate c;
  c.label = "principal";
  c.construction = Construction::Principal;
  c.dim = rec.chi;
  c.bound = rec.chi;
  if (t.g >= 2) c.gonality_upper = (t.g + 3) / 2;
  c.justification =
      "degree at least 2g-7 with g+r <= d: irreducible, non-empty, dominating moduli";
  if (t.g >= 2) {
    // Dominating moduli with rho >= 0: the fibre carries rho parameters of
    // series choice beyond the Aut orbit.
    const auto [img, codim] = families::moduli_accounting(c.dim, t.g, rec.rho, t.r);
    c.moduli_image_dim = img;
    c.moduli_codim = codim;
  }
  c.finalize();
  rep.candidates.push_back(std::move(c));
}

/// Blown-plane surfaces P^2_s embedded in P^5 by a fixed very ample class:
/// ambient automorphisms plus the moduli of s general points.
inline Int blown_plane_surface_family_dim(Int s) {
  return 35 + std::max<Int>(0, 2 * s - 8);
}

inline void add_g16_sextic_surface_row(const CurveTriple& t, const BoundsRecord& rec,
                                       GenusReport& rep) {
  using surfaces::DivisorClass;
  using surfaces::SurfaceModel;
  const SurfaceModel w = SurfaceModel::blown_plane(7);
  const DivisorClass curve(w, {9, 4, 2, 2, 2, 2, 2, 2});
  const DivisorClass hyper(w, {4, 2, 1, 1, 1, 1, 1, 1});
  check_invariant(surfaces::intersect(curve, hyper) == t.d &&
                      surfaces::adjunction_genus(curve) == t.g,
                  "census g=16: sextic-surface class data mismatch");
  FamilyCandidate c;
  c.label = "sextic-surface " + curve.to_string();
  c.construction = Construction::OnBlownPlaneSurface;
  c.dim = surfaces::linear_system_dim(curve) + blown_plane_surface_family_dim(7);
  c.bound = rec.chi;
  c.justification =
      "curves of class " + curve.to_string() + " on degree-6 images of the plane blown "
      "up in 7 points (embedded by " + hyper.to_string() + "); component status open";
  c.notes.push_back("dimension exceeds the bound by one");
  c.gonality_upper = 9 - 4;
  apply_dimension_exclusion(c);
  rep.candidates.push_back(std::move(c));
}

inline void add_g15_rows(const CurveTriple& t, const BoundsRecord& rec, GenusReport& rep) {
  using surfaces::DivisorClass;
  using surfaces::SurfaceModel;
  const SurfaceModel w = SurfaceModel::blown_plane(7);
  const DivisorClass curve(w, {9, 3, 3, 3, 2, 2, 2, 2});
  const DivisorClass hyper(w, {4, 2, 1, 1, 1, 1, 1, 1});
  check_invariant(surfaces::intersect(curve, hyper) == t.d &&
                      surfaces::adjunction_genus(curve) == t.g,
                  "census g=15: sextic-surface class data mismatch");
  FamilyCandidate c;
  c.label = "sextic-surface " + curve.to_string();
  c.construction = Construction::OnBlownPlaneSurface;
  c.dim = surfaces::linear_system_dim(curve) + blown_plane_surface_family_dim(7);
  c.bound = rec.chi;
  c.justification = "curves of class " + curve.to_string() +
                    " on degree-6 blown-plane surfaces witness non-emptiness";
  apply_dimension_exclusion(c);
  rep.candidates.push_back(std::move(c));
  rep.notes.push_back(
      "the residual space model is a bidegree-(6,6) curve on a smooth quadric with two "
      "triple points and four nodes; the resulting family stays below the bound");
}

/// Verdict table for (16, g, 5), 0 <= g <= pi(16,5) = 21.
inline Verdict studied_verdict(const CurveTriple& t) {
  Verdict v;
  switch (t.g) {
    case 21:
      v.kind = VerdictKind::Reducible;
      v.component_count = 2;
      v.justification =
          "two components: plane octics on the Veronese surface and 4-gonal curves of "
          "type (4,8) on quartic scrolls; gonality semicontinuity separates them, and "
          "the cone family lies in the scroll boundary";
      break;
    case 20:
      v.kind = VerdictKind::Irreducible;
      v.justification =
          "one component: pentagonal curves of class (5,-4) on quartic scrolls (type "
          "(5,6) on the smooth-quadric realization)";
      break;
    case 19:
      v.kind = VerdictKind::Empty;
      v.justification =
          "no integer class on a minimal-degree surface realizes degree 16 and genus 19";
      break;
    case 18:
      v.kind = VerdictKind::Reducible;
      v.component_count = 3;
      v.justification =
          "three components: trigonal curves on scrolls, hexagonal curves on quintic del "
          "Pezzo surfaces, and triple covers of elliptic curves on elliptic cones";
      break;
    case 17:
      v.kind = VerdictKind::Reducible;
      v.component_count = 2;
      v.justification =
          "at least two components: complete intersections of four quadrics "
          "(semicanonical) and curves on quintic del Pezzo surfaces (non-semicanonical); "
          "the full component list is open";
      break;
    case 16:
    case 15:
      v.kind = VerdictKind::Open;
      v.justification = "no component census is established; candidate families listed";
      break;
    case 14:
      v.kind = VerdictKind::Irreducible;
      v.justification =
          "one component, linearly normal, of the expected dimension 70; general "
          "gonality 8";
      break;
    case 13:
      v.kind = VerdictKind::Irreducible;
      v.justification =
          "one component, linearly normal, of the expected dimension 72; every "
          "non-linearly-normal series family falls below the series bound 37";
      break;
    case 12:
      v.kind = VerdictKind::Irreducible;
      v.justification =
          "one component, linearly normal, of the expected dimension 74; competing "
          "series families reach only 37 < 39";
      break;
    default:
      v.kind = VerdictKind::Irreducible;
      v.justification =
          "irreducible, non-empty and dominating moduli for genus at most 11 (degree >= "
          "2g-7 regime)";
      if (t.g <= 10)
        v.justification += "; the linearly normal locus is empty for genus <= 10";
      break;
  }
  return v;
}

}  // namespace detail

/// Assemble the census row for one triple.  Surface-family enumeration is
/// fully computed for any input; verdicts and the residual-series case
/// analysis are baked only for the studied family d = 16, r = 5.
inline GenusReport build_genus_report(const CurveTriple& t) {
  bounds::validate(t);
  GenusReport rep;
  rep.triple = t;
  rep.bounds = bounds::bounds_record(t);

  if (rep.bounds.regime == bounds::GenusRegime::Impossible) {
    rep.verdict.kind = VerdictKind::Empty;
    rep.verdict.justification = "the genus exceeds the maximal genus pi(" +
                                detail::int_str(t.d) + "," + detail::int_str(t.r) +
                                ") = " + detail::int_str(rep.bounds.pi);
    return rep;
  }

  detail::add_veronese_candidates(t, rep.bounds, rep);
  detail::add_scroll_candidates(t, rep.bounds, rep);
  detail::add_rational_cone_candidates(t, rep.bounds, rep);
  detail::add_elliptic_cone_candidates(t, rep.bounds, rep);
  detail::add_delpezzo_candidates(t, rep.bounds, rep);

  if (detail::studied_census(t)) {
    switch (t.g) {
      case 21: {
        for (auto& c : rep.candidates)
          if (c.construction == Construction::OnVeronese ||
              c.construction == Construction::OnScroll) {
            const auto [img, codim] = families::moduli_accounting(c.dim, t.g, 0, t.r);
            c.moduli_image_dim = img;
            c.moduli_codim = codim;
          }
        break;
      }
      case 20: {
        for (auto& c : rep.candidates)
          if (c.construction == Construction::OnScroll) {
            const auto [img, codim] = families::moduli_accounting(c.dim, t.g, 0, t.r);
            c.moduli_image_dim = img;
            c.moduli_codim = codim;
          }
        rep.notes.push_back(
            "smooth-quadric realization: dim |O_Q(5,6)| - dim Aut(Q) + dim Aut(P^5) = "
            "41 - 6 + 35 = 70");
        rep.notes.push_back(
            "invariant-2 realization: dim |5C0+11f| - dim Aut(F_2) + dim Aut(P^5) = "
            "41 - 7 + 35 = 69; these curves are flat limits of the bidegree-(5,6) ones");
        break;
      }
      case 18: {
        for (auto& c : rep.candidates)
          if (c.construction == Construction::OnScroll) {
            const auto [img, codim] = families::moduli_accounting(c.dim, t.g, 0, t.r);
            c.moduli_image_dim = img;
            c.moduli_codim = codim;
            c.notes.push_back("dominates the trigonal locus; moduli codimension g - 4");
          }
        break;
      }
      case 17:
        detail::add_g17_complete_intersection(t, rep.bounds, rep);
        rep.notes.push_back(
            "del Pezzo classes beyond the cited pair {(8;2,2,2,2), (10;4,4,4,2)} are "
            "admitted by the class equations but are silent in the cited "
            "classification; they are reported unfiltered");
        break;
      case 16:
        detail::add_g16_sextic_surface_row(t, rep.bounds, rep);
        break;
      case 15:
        detail::add_g15_rows(t, rep.bounds, rep);
        break;
      case 14:
        detail::add_g14_rows(t, rep.bounds, rep);
        break;
      case 13:
        detail::add_g13_rows(t, rep.bounds, rep);
        break;
      case 12:
        detail::add_g12_rows(t, rep.bounds, rep);
        break;
      default:
        if (t.g <= 11) detail::add_low_genus_principal(t, rep.bounds, rep);
        break;
    }
    rep.verdict = detail::studied_verdict(t);
  } else {
    rep.verdict.kind = VerdictKind::Open;
    rep.verdict.justification =
        "outside the built-in classification table; computed candidates only";
  }

  // Deterministic ordering: by construction, then label.
  std::stable_sort(rep.candidates.begin(), rep.candidates.end(),
                   [](const FamilyCandidate& x, const FamilyCandidate& y) {
                     if (x.construction != y.construction)
                       return static_cast<int>(x.construction) <
                              static_cast<int>(y.construction);
                     return x.label < y.label;
                   });
  return rep;
}

/// Reports are generated in parallel over the genus range (every layer below
/// is a pure function of its arguments) and collected in genus order, so the
/// output is deterministic regardless of scheduling.
inline std::vector<GenusReport> build_census(Int d, Int r, Int g_lo, Int g_hi) {
  require(g_lo >= 0 && g_lo <= g_hi, "build_census: bad genus range");
  require(g_hi <= bounds::castelnuovo_pi(d, r) + 1,
          "build_census: range exceeds pi(d,r) + 1");
  std::vector<std::future<GenusReport>> jobs;
  for (Int g = g_lo; g <= g_hi; ++g)
    jobs.push_back(std::async(std::launch::async,
                              [d, g, r] { return build_genus_report({d, g, r}); }));
  std::vector<GenusReport> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace hscurves::census
