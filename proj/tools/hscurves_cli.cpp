// Command-line front end: genus bounds, divisor-class enumeration on low-degree
// surfaces, and the per-genus component census, with JSON / markdown / CSV
// output.  Exit codes: 0 success, 2 usage or domain error, 3 oracle mismatch,
// 4 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hscurves/hscurves.hpp"

namespace {

using hscurves::Int;
using nlohmann::json;
namespace bounds = hscurves::bounds;
namespace census = hscurves::census;
namespace enumerate = hscurves::enumerate;
namespace oracles = hscurves::oracles;
namespace render = hscurves::render;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOracleMismatch = 3;
constexpr int kExitInvariant = 4;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  f << text;
}

// --g accepts "18" or "12:21".
std::pair<Int, Int> parse_genus_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const Int g = std::stoll(s);
      return {g, g};
    }
    const Int lo = std::stoll(s.substr(0, colon));
    const Int hi = std::stoll(s.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (...) {
    throw std::invalid_argument("bad genus or genus range: " + s);
  }
}

json solution_json(const std::string& kind, const enumerate::ClassSolution& s) {
  json j;
  j["kind"] = kind;
  j["class"] = s.divisor.coeffs();
  j["degree"] = s.degree;
  j["genus"] = s.genus;
  j["dim"] = s.linear_system_dim;
  if (s.vertex_mult) j["vertex_mult"] = *s.vertex_mult;
  if (s.nodal_delta) j["delta"] = *s.nodal_delta;
  if (s.expected_dim_only) j["expected_dim_only"] = true;
  return j;
}

struct KindResult {
  std::vector<enumerate::ClassSolution> sols;
  std::vector<std::vector<Int>> oracle;
  std::optional<enumerate::SeveriRecord> severi;
};

KindResult run_kind(const std::string& kind, Int d, Int g, Int r, bool with_oracle) {
  KindResult res;
  if (kind == "scroll") {
    res.sols = enumerate::solve_scroll(d, g, r - 1);
    if (with_oracle) res.oracle = oracles::scroll_classes(d, g, r - 1);
  } else if (kind == "cone") {
    res.sols = enumerate::smooth_solutions(enumerate::solve_rational_cone(d, g, r - 1));
    if (with_oracle) res.oracle = oracles::rational_cone_classes(d, g, r - 1, true);
  } else if (kind == "elliptic-cone") {
    res.sols = enumerate::smooth_solutions(enumerate::solve_elliptic_cone(d, g, r));
    if (with_oracle) res.oracle = oracles::elliptic_cone_classes(d, g, r, true);
  } else if (kind == "veronese") {
    if (r == 5) {
      res.sols = enumerate::solve_veronese(d, g);
      if (with_oracle) res.oracle = oracles::veronese_classes(d, g);
    }
  } else if (kind == "delpezzo5") {
    if (r == 5) {
      res.sols = enumerate::solve_delpezzo5(d, g);
      if (with_oracle) res.oracle = oracles::delpezzo_classes(d, g);
    }
  } else if (kind == "quadric") {
    // Space models of degree 2g-2-d arise from residuals of an incomplete
    // hyperplane series; those exist only below the genus bound one dimension
    // up, g <= pi(d, r+1).
    const Int d3 = 2 * g - 2 - d;
    if (d3 >= 2 && g <= bounds::castelnuovo_pi(d, r + 1)) {
      res.sols = enumerate::solve_quadric(d3, g);
      if (with_oracle) res.oracle = oracles::quadric_classes(d3, g);
    }
  } else if (kind == "severi") {
    // Plane models of degree 2g-2-d: either the residual of the complete
    // hyperplane series is a net (g = d+3-r) or the curve fails to be
    // linearly normal (g <= pi(d, r+1)).
    const Int e = 2 * g - 2 - d;
    const bool applicable =
        g == d + 3 - r || g <= bounds::castelnuovo_pi(d, r + 1);
    if (e >= 3 && applicable) res.severi = enumerate::solve_severi_plane(e, g);
  } else {
    throw std::invalid_argument("unknown kind: " + kind);
  }
  return res;
}

int cmd_bounds(Int d, Int g, Int r, const std::string& format, const std::string& out) {
  const bounds::CurveTriple t{d, g, r};
  const auto rec = bounds::bounds_record(t);
  if (format == "json") {
    write_out(out, render::bounds_to_json(t).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "| quantity | value |\n|----------|-------|\n";
    os << "| d | " << d << " |\n| g | " << g << " |\n| r | " << r << " |\n";
    os << "| rho | " << rec.rho << " |\n| lambda | " << rec.lambda << " |\n";
    os << "| chi | " << rec.chi << " |\n| pi | " << rec.pi << " |\n";
    os << "| pi1 | " << rec.pi1 << " |\n";
    os << "| pi1 formula | "
       << (bounds::castelnuovo_pi1_regime(d, r) == bounds::Pi1Regime::Standard
               ? "standard"
               : "minimal-degree-fallback")
       << " |\n";
    os << "| regime | " << bounds::to_string(rec.regime) << " |\n";
    write_out(out, os.str());
  }
  return kExitOk;
}

int cmd_enumerate(Int d, Int g, Int r, const std::string& kind, bool with_oracle,
                  const std::string& out) {
  std::vector<std::string> kinds;
  if (kind == "all")
    kinds = {"scroll", "cone", "veronese", "elliptic-cone", "delpezzo5", "quadric",
             "severi"};
  else
    kinds = {kind};
  std::ostringstream os;
  bool mismatch = false;
  for (const auto& k : kinds) {
    const auto res = run_kind(k, d, g, r, with_oracle);
    for (const auto& s : res.sols) os << solution_json(k, s).dump() << "\n";
    if (res.severi) {
      json j{{"kind", "severi"},
             {"e", res.severi->e},
             {"delta", res.severi->delta},
             {"dim_sigma", res.severi->dim_sigma}};
      os << j.dump() << "\n";
    }
    if (with_oracle && oracles::solution_classes(res.sols) != res.oracle) {
      std::cerr << "oracle mismatch for kind " << k << "\n";
      mismatch = true;
    }
  }
  write_out(out, os.str());
  return mismatch ? kExitOracleMismatch : kExitOk;
}

int cmd_census(Int d, Int r, const std::string& grange, const std::string& format,
               const std::string& out) {
  const auto [lo, hi] = parse_genus_range(grange);
  const auto reports = census::build_census(d, r, lo, hi);
  if (format == "json")
    write_out(out, render::render_json(reports));
  else if (format == "csv")
    write_out(out, render::render_csv(reports));
  else
    write_out(out, render::render_markdown(reports));
  return kExitOk;
}

int cmd_oracle() {
  const auto rep = oracles::run_all();
  std::cout << "solver cross-checks: " << rep.checks << " comparisons, "
            << rep.mismatches.size() << " mismatches\n";
  for (const auto& m : rep.mismatches) std::cout << "MISMATCH " << m << "\n";
  return rep.ok() ? kExitOk : kExitOracleMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact component census for Hilbert schemes of smooth projective curves"};
  app.require_subcommand(1);

  Int d = 16, r = 5;
  std::string grange = "0";
  std::string format = "md";
  std::string kind = "all";
  std::string out;
  bool with_oracle = false;

  auto* sb = app.add_subcommand("bounds", "genus bounds and expected dimensions");
  sb->add_option("--d", d)->required();
  sb->add_option("--g", grange)->required();
  sb->add_option("--r", r)->required();
  sb->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));
  sb->add_option("--out", out);

  auto* se = app.add_subcommand("enumerate", "divisor classes realizing (d,g) by surface kind");
  se->add_option("--d", d)->required();
  se->add_option("--g", grange)->required();
  se->add_option("--r", r)->required();
  se->add_option("--kind", kind)
      ->check(CLI::IsMember({"scroll", "cone", "veronese", "elliptic-cone", "delpezzo5",
                             "quadric", "severi", "all"}));
  se->add_flag("--oracle", with_oracle, "cross-check against the brute-force route");
  se->add_option("--out", out);

  auto* sc = app.add_subcommand("census", "per-genus component census");
  sc->add_option("--d", d)->required();
  sc->add_option("--r", r)->required();
  sc->add_option("--g", grange, "genus or range a:b")->required();
  sc->add_option("--format", format)->check(CLI::IsMember({"json", "md", "csv"}));
  sc->add_option("--out", out);

  auto* so = app.add_subcommand("oracle", "run every solver against its brute-force route");
  (void)so;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sb->parsed()) {
      const auto [lo, hi] = parse_genus_range(grange);
      if (lo != hi) throw std::invalid_argument("bounds takes a single genus");
      return cmd_bounds(d, lo, r, format, out);
    }
    if (se->parsed()) {
      const auto [lo, hi] = parse_genus_range(grange);
      if (lo != hi) throw std::invalid_argument("enumerate takes a single genus");
      return cmd_enumerate(d, lo, r, kind, with_oracle, out);
    }
    if (sc->parsed()) return cmd_census(d, r, grange, format, out);
    if (so->parsed()) return cmd_oracle();
  } catch (const hscurves::invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
