#include <cmath>
#include <sstream>

#include "toriq/io.hpp"

namespace toriq {

namespace {

ComplexRational exact_amplitude(const StateFile& file, std::size_t index) {
  for (const auto& a : file.amplitudes) {
    std::size_t idx = 0;
    for (char ch : a.index) idx = (idx << 1) | static_cast<std::size_t>(ch - '0');
    if (idx == index) return {*a.re_exact, *a.im_exact};
  }
  return {};
}

ComplexRational exact_minor(const StateFile& file, const Face2& f) {
  const std::uint32_t bi = std::uint32_t{1} << (f.i - 1);
  const std::uint32_t bj = std::uint32_t{1} << (f.j - 1);
  return exact_amplitude(file, f.fixed) * exact_amplitude(file, f.fixed | bi | bj) -
         exact_amplitude(file, f.fixed | bj) * exact_amplitude(file, f.fixed | bi);
}

// Unit norm with the largest entry (first on ties) real positive.
std::pair<Amplitude, Amplitude> canonical_factor(std::pair<Amplitude, Amplitude> f) {
  const double n = std::sqrt(std::norm(f.first) + std::norm(f.second));
  const Amplitude& lead =
      std::abs(f.second) > std::abs(f.first) * (1 + 1e-12) ? f.second : f.first;
  const Amplitude phase = std::conj(lead) / (std::abs(lead) * n);
  return {f.first * phase, f.second * phase};
}

void write_cone_line(std::ostringstream& os, const Cone& c) {
  os << "  " << c.to_string() << " smooth " << (is_smooth_cone(c) ? "true" : "false") << '\n';
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string analyze_report(const StateFile& file, bool normalize) {
  const QState raw = file.to_state();
  const QState s = normalize ? raw.normalized() : raw;
  const int m = s.num_qubits();

  std::ostringstream os;
  os << kReportHeader << '\n';
  os << "command: analyze\n";
  os << "num_qubits: " << m << '\n';
  os << "raw_norm: " << format_real(raw.norm()) << '\n';
  os << "normalized: " << yes_no(normalize) << '\n';

  const bool exact = file.is_exact();
  if (exact) {
    Rational n2 = 0;
    for (const auto& a : file.amplitudes) n2 += *a.re_exact * *a.re_exact + *a.im_exact * *a.im_exact;
    os << "exact_raw_norm_squared: " << format_rational(n2) << '\n';
  }

  if (m >= 2) {
    const auto minors = face_minors(s);
    os << "face_minors: " << minors.entries.size() << '\n';
    for (const auto& e : minors.entries) {
      os << "  face " << e.face.i << ',' << e.face.j << " fixed " << e.face.label(m) << " omega "
         << format_complex(e.omega) << " abs " << format_real(std::abs(e.omega));
      if (exact) os << " exact_raw " << exact_minor(file, e.face).to_string();
      os << '\n';
    }
    os << "max_face_minor: " << format_real(minors.max_abs) << '\n';
  }
  if (m == 2) os << "concurrence: " << format_real(concurrence_2qubit(s)) << '\n';
  if (m == 3) os << "three_tangle: " << format_real(three_tangle(s)) << '\n';
  if (m >= 2) {
    os << "flattening_ranks:";
    for (int k = 1; k <= m; ++k) os << ' ' << flattening_rank(s, {k});
    os << '\n';
  }

  const auto factors = factor_product(s);
  os << "separable: " << yes_no(factors.has_value()) << '\n';
  if (factors) {
    os << "factors: " << m << '\n';
    for (std::size_t p = 0; p < factors->factors.size(); ++p) {
      const auto f = canonical_factor(factors->factors[p]);
      os << "  qubit " << (m - static_cast<int>(p)) << ' ' << format_complex(f.first) << ' '
         << format_complex(f.second) << '\n';
    }
  }
  return os.str();
}

std::string cube_report(int m) {
  const Polytope cube = cube_polytope(m);
  const Polytope dual = polar(cube);
  const Fan fan = normal_fan(cube);
  const auto charts = chart_atlas(m);

  std::ostringstream os;
  os << kReportHeader << '\n';
  os << "command: toric cube\n";
  os << "m: " << m << '\n';
  os << "vertices: " << cube.vertices().size() << '\n';
  for (const auto& v : cube.vertices()) os << "  " << v.to_string() << '\n';
  os << "polar_vertices: " << dual.vertices().size() << '\n';
  for (const auto& v : dual.vertices()) os << "  " << v.to_string() << '\n';
  os << "normal_fan_maximal_cones: " << fan.maximal_cones().size() << '\n';
  for (const auto& c : fan.maximal_cones()) write_cone_line(os, c);
  os << "normal_fan_cones_total: " << fan.cones().size() << '\n';
  os << "fan_smooth: " << yes_no(fan_is_smooth(fan)) << '\n';
  os << "charts: " << charts.size() << '\n';
  for (const auto& c : charts) {
    os << "  " << c.to_string();
    for (std::size_t k = 0; k < c.signs.size(); ++k)
      os << ' ' << (c.signs[k] > 0 ? "z" : "1/z") << (k + 1);
    os << " orthant " << orthant(c).to_string() << '\n';
  }
  return os.str();
}

std::string conifold_report(std::optional<Diagonal> resolve, std::optional<Complex> deform) {
  const Cone cone = conifold_cone();
  const Cone dual = dual_cone(cone);
  const HilbertBasis hb = hilbert_basis(dual);

  std::ostringstream os;
  os << kReportHeader << '\n';
  os << "command: toric conifold\n";
  os << "rays: " << cone.rays().size() << '\n';
  for (const auto& r : cone.rays()) os << "  " << r.to_string() << '\n';
  os << "strongly_convex: " << yes_no(is_strongly_convex(cone)) << '\n';
  os << "simplicial: " << yes_no(is_simplicial(cone)) << '\n';
  os << "smooth: " << yes_no(is_smooth_cone(cone)) << '\n';
  os << "faces: " << cone_faces(cone).size() << '\n';
  os << "dual_rays: " << dual.rays().size() << '\n';
  for (const auto& r : dual.rays()) os << "  " << r.to_string() << '\n';
  os << "dual_hilbert_basis: " << hb.generators.size() << '\n';
  for (const auto& g : hb.generators) os << "  " << g.to_string() << '\n';

  if (resolve) {
    const Fan fan = resolve_conifold(*resolve);
    os << "resolution: " << (*resolve == Diagonal::A ? "a" : "b") << '\n';
    os << "resolution_maximal_cones: " << fan.maximal_cones().size() << '\n';
    for (const auto& c : fan.maximal_cones()) write_cone_line(os, c);
    os << "resolution_smooth: " << yes_no(fan_is_smooth(fan)) << '\n';
  }
  if (deform) {
    const auto verdict = is_deformation_smooth(*deform);
    os << "deformation_omega: " << format_complex(*deform) << '\n';
    os << "deformation_smooth: " << yes_no(verdict.smooth) << '\n';
    os << "singular_points: " << verdict.singular_points.size() << '\n';
    for (const auto& p : verdict.singular_points)
      os << "  (" << format_complex(p.a00) << ',' << format_complex(p.a01) << ','
         << format_complex(p.a10) << ',' << format_complex(p.a11) << ")\n";
  }
  return os.str();
}

}  // namespace toriq
