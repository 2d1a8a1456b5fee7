#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hscurves/bounds.hpp"
#include "hscurves/core.hpp"
#include "hscurves/enumerate.hpp"
#include "hscurves/surfaces.hpp"

namespace hscurves::families {

using enumerate::ClassSolution;

/// How a candidate family of embedded curves (or of linear series) is built.
enum class Construction {
  OnScroll,
  OnCone,
  OnVeronese,
  OnEllipticCone,
  OnDelPezzo5,
  OnBlownPlaneSurface,  // blown-plane surfaces of degree >= 6 in P^5
  GonalResidual,
  HurwitzResidual,
  SeveriPlaneModel,
  CompleteIntersection,
  QuadricModel,
  Principal,  // the component dominating moduli when rho >= 0
};

inline const char* to_string(Construction c) {
  switch (c) {
    case Construction::OnScroll: return "on-scroll";
    case Construction::OnCone: return "on-cone";
    case Construction::OnVeronese: return "on-veronese";
    case Construction::OnEllipticCone: return "on-elliptic-cone";
    case Construction::OnDelPezzo5: return "on-del-pezzo-5";
    case Construction::OnBlownPlaneSurface: return "on-blown-plane-surface";
    case Construction::GonalResidual: return "gonal-residual";
    case Construction::HurwitzResidual: return "hurwitz-residual";
    case Construction::SeveriPlaneModel: return "severi-plane-model";
    case Construction::CompleteIntersection: return "complete-intersection";
    case Construction::QuadricModel: return "quadric-model";
    case Construction::Principal: return "principal";
  }
  return "?";
}

enum class Status { ComponentCandidate, StrictlyInsideBoundary, Excluded };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::ComponentCandidate: return "component-candidate";
    case Status::StrictlyInsideBoundary: return "strictly-inside-boundary";
    case Status::Excluded: return "excluded";
  }
  return "?";
}

/// The level at which a family's dimension is counted.  Embedded families are
/// measured against chi(d,g,r); families of linear series against
/// lambda(d,g,r).
enum class DimLevel { Embedded, SeriesOnly };

/// One candidate family in the census for a fixed (d,g,r).
struct FamilyCandidate {
  std::string label;
  Construction construction = Construction::Principal;
  DimLevel level = DimLevel::Embedded;
  Int dim = 0;
  Int bound = 0;    // chi (Embedded) or lambda (SeriesOnly)
  Int excess = 0;   // dim - bound, maintained by finalize()
  std::optional<Int> gonality_upper;
  std::optional<Int> moduli_image_dim;
  std::optional<Int> moduli_codim;
  Status status = Status::ComponentCandidate;
  std::string exclusion_reason;  // machine-readable tag when Excluded
  std::string justification;     // the classification-table citation text
  std::vector<std::string> notes;
  std::optional<Int> cited_dim;  // when a published figure differs from dim

  FamilyCandidate& finalize() {
    excess = dim - bound;
    return *this;
  }
};

/// dim S(r) = (r+3)(r-1) - 3, the family of rational normal scrolls in P^r.
inline Int scroll_moduli_dim(Int r) {
  require(r >= 3, "scroll_moduli_dim: r >= 3");
  return (r + 3) * (r - 1) - 3;
}

/// Curves on scrolls: dim |C| on the scroll plus the scrolls themselves.
inline Int scroll_family_dim(const ClassSolution& sol, Int r) {
  require(sol.divisor.surface().kind() == surfaces::SurfaceKind::Scroll &&
              sol.divisor.surface().param() == r - 1,
          "scroll_family_dim: solution must live on the degree-(r-1) scroll");
  return sol.linear_system_dim + scroll_moduli_dim(r);
}

/// Curves on cones: choice of vertex (r) + base curves in a hyperplane +
/// dim |C~| on the resolution.  Base-curve counts via the chi bound:
///   rational normal curves of degree r-1 in P^{r-1}: chi(r-1,0,r-1) = r^2 - 4,
///   elliptic normal curves  of degree r   in P^{r-1}: chi(r,1,r-1)   = r^2.
inline Int cone_family_dim(const ClassSolution& sol, Int r) {
  const auto kind = sol.divisor.surface().kind();
  if (kind == surfaces::SurfaceKind::RationalCone) {
    const Int base = bounds::chi_bound({r - 1, 0, r - 1});
    return r + base + sol.linear_system_dim;
  }
  if (kind == surfaces::SurfaceKind::EllipticCone) {
    const Int base = bounds::chi_bound({r, 1, r - 1});
    return r + base + sol.linear_system_dim;
  }
  throw std::invalid_argument("cone_family_dim: solution must live on a cone");
}

/// Plane curves of degree a on the Veronese surface in P^5:
///   dim P(H^0(O_P2(a))) - dim Aut(P^2) + dim Aut(P^5).
inline Int veronese_family_dim(const ClassSolution& sol, Int r) {
  require(r == 5, "veronese_family_dim: the Veronese surface lives in P^5");
  const Int a = sol.divisor.at(0);
  return (binom2(a + 2) - 1) - 8 + 35;
}

/// dim D(5) = dim Aut(P^5) - dim Aut(P^2) + 4 * dim P^2 = 35, the family of
/// smooth quintic del Pezzo surfaces in P^5.
inline Int delpezzo_moduli_dim() { return 35 - 8 + 8; }

inline Int delpezzo_family_dim(const ClassSolution& sol, Int r) {
  require(r == 5, "delpezzo_family_dim: quintic del Pezzo surfaces live in P^5");
  require(sol.divisor.surface().kind() == surfaces::SurfaceKind::BlownPlane &&
              sol.divisor.surface().param() == 4,
          "delpezzo_family_dim: expects a P^2_4 class");
  return sol.linear_system_dim + delpezzo_moduli_dim();
}

/// Series families |K - l*E| on general k-gonal curves, restricted to
/// r-dimensional subseries:  dim M^1_{g,k} + dim G(r, R) where
/// R = g - 1 - l(k-1) is the dimension of the complete residual series.
inline Int gonal_residual_family_dim(Int g, Int k, Int l, Int r) {
  const Int R = g - 1 - l * k + l;
  require(R >= r, "gonal_residual_family_dim: residual series smaller than P^r");
  return bounds::gonal_locus_dim(g, k) + bounds::grassmannian_dim(r, R);
}

/// Series families pulled back through degree-n covers of genus-gamma curves:
/// Hurwitz dimension + subseries choice.
inline Int hurwitz_residual_family_dim(Int g, Int n, Int gamma, Int r, Int R) {
  return bounds::hurwitz_dim(g, n, gamma) + bounds::grassmannian_dim(r, R);
}

/// Series families from nodal plane models of degree e: residuation sends the
/// plane series to a complete series of degree 2g-2-e and dimension
/// R = g + 1 - e; the family of r-dimensional subseries has dimension
///   (dim Sigma_{e,g} - dim Aut(P^2)) + dim G(r, R).
/// When R = r the series is taken whole and the value collapses to
/// lambda(e,g,2) = lambda(2g-2-e, g, g+1-e), which is asserted.
inline Int severi_model_family_dim(Int e, Int g, Int r) {
  auto rec = enumerate::solve_severi_plane(e, g);
  require(rec.has_value(), "severi_model_family_dim: delta < 0");
  const Int R = g + 1 - e;
  require(R >= r, "severi_model_family_dim: residual series smaller than P^r");
  const Int dim = (rec->dim_sigma - 8) + bounds::grassmannian_dim(r, R);
  if (R == r) {
    const Int lhs = bounds::lambda_bound({e, g, 2});
    const Int rhs = bounds::lambda_bound({2 * g - 2 - e, g, R});
    check_invariant(dim == lhs && lhs == rhs,
                    "severi_model_family_dim: residuation lambda-equality failed");
  }
  return dim;
}

/// Embedded families from nodal models on a smooth quadric in P^3 (degree-d3
/// residual series): Severi variety on the quadric, modulo Aut(Q), times the
/// subseries choice and the ambient automorphisms:
///   (dim |(a,b)| - delta - dim Aut(Q)) + dim G(r, g+2-d3) + dim Aut(P^r).
inline Int quadric_model_family_dim(const ClassSolution& sol, Int g, Int r) {
  require(sol.divisor.surface().kind() == surfaces::SurfaceKind::Quadric,
          "quadric_model_family_dim: expects a quadric class");
  require(sol.nodal_delta.has_value(), "quadric_model_family_dim: nodal defect missing");
  const Int d3 = sol.degree;
  const Int sigma = sol.linear_system_dim - *sol.nodal_delta;
  const Int R = g + 2 - d3;  // dimension of the residual complete series
  require(R >= r, "quadric_model_family_dim: residual series smaller than P^r");
  return (sigma - 6) + bounds::grassmannian_dim(r, R) + bounds::aut_projective_dim(r);
}

struct CompleteIntersectionFamily {
  std::vector<Int> degrees;
  Int n;          // ambient P^n
  Int degree;     // product of the degrees
  Int genus;
  Int dim;        // Grassmannian of (n-1)-tuples of hypersurfaces
  bool certified; // only the all-quadrics count is certified exact
  std::optional<Int> tangent_dim;  // h0(N) when computable
};

/// Complete intersections of c = n-1 hypersurfaces of equal degree t in P^n:
/// the family is the Grassmannian of c-planes... of (c-1)-planes in the
/// projective space P^{h0(O(t))-1} of degree-t hypersurfaces.  For quadrics
/// the normal bundle is O_C(2)^c and the hyperplane series is semicanonical,
/// so h0(N) = c * g is recorded as a tangent-space check.
inline CompleteIntersectionFamily complete_intersection_family(const std::vector<Int>& degrees,
                                                               Int n) {
  require(!degrees.empty(), "complete_intersection_family: no degrees");
  const Int t = degrees.front();
  for (Int a : degrees)
    require(a == t, "complete_intersection_family: only equal-degree intersections supported");
  CompleteIntersectionFamily fam;
  fam.degrees = degrees;
  fam.n = n;
  fam.genus = bounds::complete_intersection_genus(degrees, n);
  fam.degree = 1;
  for (Int a : degrees) fam.degree *= a;
  const Int c = n - 1;
  const Int system_dim = binom(n + t, t) - 1;  // projective dim of |O(t)|
  fam.dim = bounds::grassmannian_dim(c - 1, system_dim);
  fam.certified = (t == 2);
  if (t == 2) fam.tangent_dim = c * fam.genus;
  return fam;
}

/// Moduli-map accounting for an embedded family: the fibre over the abstract
/// curve contains the Aut(P^r) orbit plus fiber_extra parameters of series
/// choice, so
///   image_dim = dim - dim Aut(P^r) - fiber_extra,  codim = 3g-3 - image_dim.
inline std::pair<Int, Int> moduli_accounting(Int dim, Int g, Int fiber_extra, Int r = 5) {
  require(fiber_extra >= 0, "moduli_accounting: fiber_extra >= 0");
  const Int image = dim - bounds::aut_projective_dim(r) - fiber_extra;
  require(image >= 0, "moduli_accounting: negative image dimension");
  check_invariant(image <= 3 * g - 3 || g <= 1,
                  "moduli_accounting: image exceeds dim of the moduli space");
  return {image, 3 * g - 3 - image};
}

}  // namespace hscurves::families
