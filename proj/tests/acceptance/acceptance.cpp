// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "support.hpp"
#include "toriq/cli.hpp"
#include "toriq/conifold.hpp"
#include "toriq/metrics.hpp"
#include "toriq/states.hpp"

using namespace toriq;
using toriq::testing::uniform_int;
using toriq::testing::uniform_real;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Amplitude random_amp() { return {uniform_real(-1, 1), uniform_real(-1, 1)}; }

QState random_state(int m) {
  std::vector<Amplitude> a(std::size_t{1} << m);
  for (auto& x : a) x = random_amp();
  return QState(m, a).normalized();
}

// ---------------------------------------------------------------------------

Outcome face_counts() {
  Outcome o;
  for (int m = 2; m <= 10; ++m) {
    const std::uint64_t expected = (std::uint64_t{1} << (m - 2)) * m * (m - 1) / 2;
    o.require(enumerate_faces(m).size() == expected, "E_{2," + std::to_string(m) + "} mismatch");
  }
  o.require(enumerate_faces(3).size() == 6, "E_{2,3} != 6");
  if (o.pass) o.detail = "m = 2..10, E_{2,3} = 6, E_{2,10} = " + std::to_string(enumerate_faces(10).size());
  return o;
}

Outcome concurrence() {
  Outcome o;
  const double bell = concurrence_2qubit(QState(2, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}));
  o.require(std::abs(bell - 1.0) <= 1e-12, "Bell concurrence " + fmt("%.17g", bell));
  const double product = concurrence_2qubit(QState(2, {1.0, 0.0, 0.0, 0.0}));
  o.require(product == 0.0, "|00> concurrence not exactly 0");
  const double partial = concurrence_2qubit(QState(2, {std::sqrt(3.0) / 2.0, 0.0, 0.0, 0.5}));
  o.require(std::abs(partial - std::sqrt(3.0) / 2.0) <= 1e-12, "partial state concurrence");

  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const QState s = random_state(2);
    Eigen::Matrix2cd g1, g2;
    g1 << random_amp(), random_amp(), random_amp(), random_amp();
    g2 << random_amp(), random_amp(), random_amp(), random_amp();
    const Eigen::Matrix2cd u1 = Eigen::HouseholderQR<Eigen::Matrix2cd>(g1).householderQ();
    const Eigen::Matrix2cd u2 = Eigen::HouseholderQR<Eigen::Matrix2cd>(g2).householderQ();
    Eigen::Matrix4cd u;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) u(2 * a + c, 2 * b + d) = u2(a, b) * u1(c, d);
    Eigen::Vector4cd v;
    for (int k = 0; k < 4; ++k) v[k] = s[static_cast<std::size_t>(k)];
    const Eigen::Vector4cd w = u * v;
    const QState t(2, {w[0], w[1], w[2], w[3]});
    worst = std::max(worst, std::abs(concurrence_2qubit(s) - concurrence_2qubit(t)));
  }
  o.require(worst < 1e-9, "local unitary drift " + fmt("%.3g", worst));
  if (o.pass) o.detail = "Bell error " + fmt("%.1e", std::abs(bell - 1.0)) + ", max drift over 1000 unitaries " + fmt("%.1e", worst);
  return o;
}

Outcome quadric_identity() {
  Outcome o;
  auto cr = [] {
    return ComplexRational{Rational(uniform_int(-99, 99), uniform_int(1, 17)),
                           Rational(uniform_int(-99, 99), uniform_int(1, 17))};
  };
  for (int trial = 0; trial < 100; ++trial) {
    const QuadricPoint<ComplexRational> z{cr(), cr(), cr(), cr()};
    const auto m = quadric_to_matrix(z);
    o.require(m.det() == z.z1 * z.z1 + z.z2 * z.z2 + z.z3 * z.z3 + z.z4 * z.z4,
              "det != sum z^2 at trial " + std::to_string(trial));
    o.require(matrix_to_quadric(m) == z, "quadric round trip");
    const AmplitudeMatrix<ComplexRational> a{cr(), cr(), cr(), cr()};
    o.require(quadric_to_matrix(matrix_to_quadric(a)) == a, "matrix round trip");
  }
  if (o.pass) o.detail = "100 exact complex-rational points, both round trips exact";
  return o;
}

Outcome resolution() {
  Outcome o;
  const Cone c = conifold_cone();
  o.require(!is_smooth_cone(c), "conifold cone reported smooth");
  int sampled_inside = 0;
  for (Diagonal d : {Diagonal::A, Diagonal::B}) {
    const Fan f = resolve_conifold(d);
    o.require(f.maximal_cones().size() == 2, "resolution without 2 maximal cones");
    for (const auto& m : f.maximal_cones())
      o.require(abs(det(IntMatrix::from_rows(m.rays()))) == 1, "maximal cone with |det| != 1");
    for (int trial = 0; trial < 50; ++trial) {
      const LatticeVector x{uniform_int(-4, 12), uniform_int(-4, 12), uniform_int(0, 10)};
      const bool in_cone = cone_contains(c, x);
      const bool in_fan = std::any_of(f.maximal_cones().begin(), f.maximal_cones().end(),
                                      [&](const Cone& s) { return cone_contains(s, x); });
      o.require(in_cone == in_fan, "support differs at " + x.to_string());
      sampled_inside += in_cone;
    }
  }
  if (o.pass)
    o.detail = "both diagonals: 2 unimodular cones, 100 samples (" + std::to_string(sampled_inside) +
               " inside) agree";
  return o;
}

Outcome deformation() {
  Outcome o;
  for (const Complex w : {Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(3, -2), Complex(1e-9, 0)}) {
    const auto v = is_deformation_smooth(w);
    const bool singular = !v.smooth;
    o.require(singular == (w == Complex(0, 0)), "wrong verdict at omega = " + fmt("%g", w.real()));
    o.require(v.singular_points.size() == (singular ? 1u : 0u), "singular point list");
  }
  if (o.pass) o.detail = "singular only at 0 among {0, 1, i, 3-2i, 1e-9}";
  return o;
}

Outcome polarity() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    std::set<RationalVector> cross;
    for (int i = 0; i < m; ++i)
      for (int s : {1, -1}) {
        RationalVector v(static_cast<std::size_t>(m));
        v[static_cast<std::size_t>(i)] = s;
        cross.insert(v);
      }
    const Polytope cube = cube_polytope(m);
    const Polytope p = polar(cube);
    o.require(std::set<RationalVector>(p.vertices().begin(), p.vertices().end()) == cross,
              "polar of the " + std::to_string(m) + "-cube");
    o.require(polar(p) == cube, "polar not an involution for m = " + std::to_string(m));
  }
  if (o.pass) o.detail = "m = 2,3,4";
  return o;
}

Outcome normal_fans() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    const Fan f = normal_fan(cube_polytope(m));
    o.require(f.maximal_cones().size() == (std::size_t{1} << m), "maximal cone count");
    o.require(fan_is_smooth(f), "non-smooth cone");
    try {
      o.require(fan_from_cones(f.maximal_cones()) == f, "fan axiom rebuild differs");
    } catch (const std::exception& e) {
      o.require(false, std::string("fan axioms: ") + e.what());
    }
  }
  if (o.pass) o.detail = "m = 2,3,4: 2^m smooth orthants, axioms checked pairwise";
  return o;
}

Outcome hilbert_bases() {
  Outcome o;
  o.require(hilbert_basis(cone_from_generators({{1, 0}, {0, 1}})).generators ==
                std::vector<LatticeVector>{{0, 1}, {1, 0}},
            "first quadrant");
  o.require(hilbert_basis(cone_from_generators({{1, 0}, {1, 2}})).generators ==
                std::vector<LatticeVector>{{1, 0}, {1, 1}, {1, 2}},
            "Cone((1,0),(1,2))");

  // Completeness: every lattice point of the box [0,10]^n in the cone is
  // reached from 0 by adding generators (partial sums stay in the box).
  const long long hi = 10;
  std::size_t checked = 0;
  for (const Cone& c : {cone_from_generators({{1, 0}, {1, 2}}), cone_from_generators({{1, 0}, {3, 7}}),
                        cone_from_generators({{1, 0, 0}, {0, 1, 0}, {1, 1, 3}}),
                        cone_from_generators({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})}) {
    const auto basis = hilbert_basis(c).generators;
    const std::size_t n = c.ambient_dim();
    std::set<LatticeVector> reach{LatticeVector(n)};
    std::vector<LatticeVector> queue{LatticeVector(n)};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& b : basis) {
        LatticeVector y = queue[q] + b;
        if (std::any_of(y.begin(), y.end(), [&](const Integer& v) { return v > hi; })) continue;
        if (reach.insert(y).second) queue.push_back(y);
      }
    LatticeVector x(n);
    for (;;) {
      if (cone_contains(c, x)) {
        ++checked;
        o.require(reach.count(x) > 0, c.to_string() + " misses " + x.to_string());
      }
      std::size_t j = 0;
      while (j < n && x[j] == hi) x[j++] = 0;
      if (j == n) break;
      ++x[j];
    }
  }

  const auto g = hilbert_basis(dual_cone(conifold_cone())).generators;
  o.require(g.size() == 4, "conifold dual basis size " + std::to_string(g.size()));
  if (g.size() == 4) {
    const bool relation = g[0] + g[3] == g[1] + g[2] || g[0] + g[1] == g[2] + g[3] ||
                          g[0] + g[2] == g[1] + g[3];
    o.require(relation, "no relation g1+g2 = g3+g4");
  }
  if (o.pass) o.detail = std::to_string(checked) + " box points covered; conifold dual basis of 4 with one relation";
  return o;
}

Outcome ghz_gap() {
  Outcome o;
  const QState g(3, {kInvSqrt2, 0, 0, 0, 0, 0, 0, kInvSqrt2});
  const auto minors = face_minors(g);
  o.require(minors.entries.size() == 6, "face count");
  o.require(minors.max_abs < 1e-12, "nonzero face minor");
  o.require(!is_fully_separable(g), "GHZ reported separable");
  for (int k = 1; k <= 3; ++k) o.require(flattening_rank(g, {k}) == 2, "flattening rank != 2");
  if (o.pass) o.detail = "6 minors vanish, flattening ranks 2 2 2, not separable";
  return o;
}

Outcome segre_round_trip() {
  Outcome o;
  double worst = 0.0, worst_minor = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(uniform_int(2, 6));
    ProductFactors f;
    for (int k = 0; k < m; ++k) f.factors.emplace_back(random_amp(), random_amp());
    const QState s = segre_embed(f);
    worst_minor = std::max(worst_minor, face_minors(s).max_abs);
    const auto back = factor_product(s);
    if (!back) {
      o.require(false, "product state not factored");
      continue;
    }
    worst = std::max(worst, projective_distance(s, segre_embed(*back)));
  }
  o.require(worst < 1e-9, "projective error " + fmt("%.3g", worst));
  o.require(worst_minor < 1e-12, "face minor " + fmt("%.3g", worst_minor));
  if (o.pass) o.detail = "200 states, max error " + fmt("%.1e", worst) + ", max minor " + fmt("%.1e", worst_minor);
  return o;
}

Outcome single_minor_example() {
  Outcome o;
  for (int m = 3; m <= 6; ++m) {
    std::vector<Amplitude> a(std::size_t{1} << m);
    a[0] = kInvSqrt2;
    a[3] = kInvSqrt2;
    int nonzero = 0;
    for (const auto& e : face_minors(QState(m, a)).entries) {
      if (std::abs(e.omega) < 1e-12) continue;
      ++nonzero;
      o.require(e.face == Face2{1, 2, 0}, "nonzero minor on face " + e.face.label(m));
      o.require(std::abs(std::abs(e.omega) - 0.5) < 1e-12, "|omega| != 1/2");
    }
    o.require(nonzero == 1, "m = " + std::to_string(m) + ": " + std::to_string(nonzero) + " nonzero minors");
  }
  if (o.pass) o.detail = "m = 3..6: only face (1,2) with fixed bits 0, |omega| = 1/2";
  return o;
}

Outcome metrics() {
  Outcome o;
  constexpr double pi = std::numbers::pi;
  for (int trial = 0; trial < 100; ++trial) {
    const ConePoint p{uniform_real(0.01, 5.0), uniform_real(0.0, 4 * pi - 1e-9), uniform_real(0.01, pi - 0.01),
                      uniform_real(0.0, 2 * pi - 1e-9), uniform_real(0.01, pi - 0.01),
                      uniform_real(0.0, 2 * pi - 1e-9)};
    const ResolvedParams q{uniform_real(0.0, 2.0), uniform_real(0.1, 4.0), uniform_real(0.1, 4.0)};
    ConePoint p2 = p;
    p2.r = 2.0 * p.r;
    const Metric6 g = t11_metric(p), g2 = t11_metric(p2), h = resolved_metric(p, q);
    o.require(g == g.transpose() && h == h.transpose(), "metric not exactly symmetric");
    o.require(Eigen::SelfAdjointEigenSolver<Metric6>(g).eigenvalues().minCoeff() > 0, "cone metric not PD");
    o.require(Eigen::SelfAdjointEigenSolver<Metric6>(h).eigenvalues().minCoeff() > 0, "resolved metric not PD");
    o.require(g2(0, 0) == 1.0, "g_rr changed under scaling");
    for (int a = 1; a < 6; ++a)
      for (int b = 1; b < 6; ++b)
        o.require(std::abs(g2(a, b) - 4.0 * g(a, b)) <= 1e-12 * std::max(1.0, std::abs(g2(a, b))),
                  "r^2 scaling broken");
  }
  if (o.pass) o.detail = "100 random points: exact symmetry, positive definite, r^2 scaling";
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const std::string data = TORIQ_TEST_DATA;
  auto run = [](const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream os, es;
    const int code = run_cli(args, os, es);
    if (out) *out = os.str();
    return code;
  };
  for (const char* name : {"bell", "ghz", "product"}) {
    std::ifstream in(data + "/golden/analyze_" + name + ".txt");
    std::stringstream expected;
    expected << in.rdbuf();
    std::string first, second;
    o.require(run({"analyze", data + "/fixtures/" + name + ".json"}, &first) == kExitOk, "analyze failed");
    run({"analyze", data + "/fixtures/" + name + ".json"}, &second);
    o.require(!expected.str().empty() && first == expected.str(), std::string("golden mismatch: ") + name);
    o.require(first == second, "nondeterministic output");
  }
  o.require(run({"analyze", data + "/fixtures/bad_index.json"}) == kExitUsage, "schema error exit code");
  o.require(run({"toric", "cube", "11"}) == kExitUsage, "bad m exit code");
  o.require(run({"export", "polytope", "--cube", "2", "--format", "off"}) == kExitUsage, "OFF dim exit code");
  o.require(run({"analyze", data + "/fixtures/unnormalized.json"}) == kExitDomain, "domain exit code");
  if (o.pass) o.detail = "Bell/GHZ/product golden files match; exit codes 0/2/3 verified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"face-count formula", face_counts},
      {"concurrence identity", concurrence},
      {"quadric-determinant identity", quadric_identity},
      {"conifold resolution", resolution},
      {"deformation smoothness", deformation},
      {"polarity", polarity},
      {"normal fan", normal_fans},
      {"Hilbert bases", hilbert_bases},
      {"GHZ discriminator", ghz_gap},
      {"Segre round-trip", segre_round_trip},
      {"factorizable example", single_minor_example},
      {"metrics", metrics},
      {"CLI determinism", cli_determinism},
  };
  std::printf("seed %u\n", toriq::testing::test_seed());
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
