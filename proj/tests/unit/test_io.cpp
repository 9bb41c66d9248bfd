#include <doctest.h>

#include <array>
#include <cmath>
#include <json.hpp>
#include <sstream>
#include <string>

#include "support.hpp"
#include "toriq/io.hpp"

using namespace toriq;
using toriq::testing::uniform_real;

namespace {

std::string schema_error(const std::string& text) {
  try {
    parse_state_file(text);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("state files parse decimals and exact rationals") {
  const StateFile f = parse_state_file(R"({
    "num_qubits": 2,
    "normalize": false,
    "amplitudes": [
      {"index": "01", "re": "1/3", "im": "-2/3"},
      {"index": "10", "re": 0.25}
    ]})");
  CHECK(f.num_qubits == 2);
  CHECK_FALSE(f.normalize);
  REQUIRE(f.amplitudes.size() == 2);
  CHECK(*f.amplitudes[0].re_exact == Rational(1, 3));
  CHECK(*f.amplitudes[0].im_exact == Rational(-2, 3));
  CHECK(f.amplitudes[1].re == 0.25);
  CHECK_FALSE(f.amplitudes[1].re_exact.has_value());
  CHECK(*f.amplitudes[1].im_exact == 0);  // absent counts as exact zero
  CHECK_FALSE(f.is_exact());

  const QState s = f.to_state();
  CHECK(s[1] == Amplitude(1.0 / 3.0, -2.0 / 3.0));
  CHECK(s[2] == Amplitude(0.25, 0.0));
}

TEST_CASE("the rational companion object") {
  const StateFile f = parse_state_file(R"({"num_qubits": 1, "amplitudes": [
      {"index": "1", "re": 0.5, "rational": {"re": "1/2"}}]})");
  CHECK(f.is_exact());
  CHECK(*f.amplitudes[0].re_exact == Rational(1, 2));
  CHECK(schema_error(R"({"num_qubits": 1, "amplitudes": [
      {"index": "1", "re": 0.4, "rational": {"re": "1/2"}}]})") ==
        "amplitudes[0].rational.re: disagrees with the decimal value");
  CHECK(schema_error(R"({"num_qubits": 1, "amplitudes": [
      {"index": "1", "re": 0.5, "rational": {"re": 0.5}}]})") ==
        "amplitudes[0].rational.re: expected a \"p/q\" string");
}

TEST_CASE("schema errors name the offending field") {
  CHECK(schema_error("[1]") == "state file must be a JSON object");
  CHECK(schema_error("{").rfind("invalid JSON", 0) == 0);
  CHECK(schema_error(R"({"amplitudes": []})") == "num_qubits: required integer");
  CHECK(schema_error(R"({"num_qubits": 11, "amplitudes": []})") ==
        "num_qubits: must lie in [1, 10]");
  CHECK(schema_error(R"({"num_qubits": 2})") == "amplitudes: required array");
  CHECK(schema_error(R"({"num_qubits": 2, "normalize": 1, "amplitudes": []})") ==
        "normalize: expected a boolean");
  CHECK(schema_error(R"({"num_qubits": 2, "amplitudes": [{"re": 1}]})") ==
        "amplitudes[0].index: required bitstring");
  CHECK(schema_error(R"({"num_qubits": 2, "amplitudes": [{"index": "001", "re": 1}]})") ==
        "amplitudes[0].index: length must equal num_qubits");
  CHECK(schema_error(R"({"num_qubits": 2, "amplitudes": [{"index": "00", "re": 1},
                                                         {"index": "00", "re": 1}]})") ==
        "amplitudes[1].index: duplicate index");
  CHECK(schema_error(R"({"num_qubits": 2, "amplitudes": [{"index": "00", "re": true}]})") ==
        "amplitudes[0].re: expected a number or a \"p/q\" string");
  CHECK(schema_error(R"({"num_qubits": 2, "amplitudes": [{"index": "00", "im": "1/0"}]})") ==
        "amplitudes[0].im: expected a number or a \"p/q\" string");
  CHECK(schema_error(R"({"num_qubits": 2, "amplitudes": [{"index": "00", "re": 0}]})") ==
        "amplitudes: state has no nonzero amplitude");
  CHECK_THROWS_AS(read_state_file("/nonexistent/state.json"), SchemaError);
}

TEST_CASE("written state files read back to the same state") {
  for (int trial = 0; trial < 50; ++trial) {
    const int m = static_cast<int>(toriq::testing::uniform_int(1, 5));
    std::vector<Amplitude> a(std::size_t{1} << m);
    for (auto& x : a)
      if (toriq::testing::uniform_int(0, 3)) x = {uniform_real(-1, 1), uniform_real(-1, 1)};
    a[0] = 1.0;
    const QState s(m, a);
    const StateFile f = parse_state_file(write_state_file(s));
    CHECK_FALSE(f.normalize);
    CHECK(f.to_state().amplitudes() == s.amplitudes());
  }
}

TEST_CASE("complex number parsing") {
  CHECK(parse_complex("1+0i") == Complex(1, 0));
  CHECK(parse_complex("3-2i") == Complex(3, -2));
  CHECK(parse_complex("-1.5e-3+2.5i") == Complex(-1.5e-3, 2.5));
  CHECK(parse_complex("1e-9") == Complex(1e-9, 0));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("2.5i") == Complex(0, 2.5));
  CHECK(parse_complex("0") == Complex(0, 0));
  for (const char* bad : {"", "1+", "abc", "1+2j", "1++2i", "i1"})
    CHECK_THROWS_AS(parse_complex(bad), SchemaError);
}

TEST_CASE("number formatting is fixed and has no negative zero") {
  CHECK(format_real(1.0) == "1.000000000000");
  CHECK(format_real(-1e-14) == "0.000000000000");
  CHECK(format_real(-0.25) == "-0.250000000000");
  CHECK(format_complex(Complex(0.5, -0.25)) == "0.500000000000-0.250000000000i");
  CHECK(format_complex(Complex(-0.0, 1e-15)) == "0.000000000000+0.000000000000i");
}

TEST_CASE("polytope and fan JSON") {
  const auto doc = nlohmann::json::parse(polytope_json(polar(cube_polytope(2))));
  CHECK(doc["ambient_dim"] == 2);
  CHECK(doc["vertices"].size() == 4);
  CHECK(doc["vertices"][0] == nlohmann::json::array({-1, 0}));

  const auto tri = Polytope::from_points(
      {{Rational(1, 2), Rational(0)}, {Rational(-1), Rational(1)}, {Rational(-1), Rational(-1)}});
  const auto tdoc = nlohmann::json::parse(polytope_json(tri));
  CHECK(tdoc["vertices"][2] == nlohmann::json::array({"1/2", 0}));

  const auto fdoc = nlohmann::json::parse(fan_json(resolve_conifold(Diagonal::A)));
  CHECK(fdoc["ambient_dim"] == 3);
  REQUIRE(fdoc["cones"].size() == 2);
  CHECK(fdoc["cones"][0]["rays"].size() == 3);
}

TEST_CASE("OFF export of the 3-cube") {
  std::istringstream in(polytope_off(cube_polytope(3)));
  std::string magic;
  int nv = 0, nf = 0, ne = 0;
  in >> magic >> nv >> nf >> ne;
  CHECK(magic == "OFF");
  CHECK(nv == 8);
  CHECK(nf == 6);
  std::vector<std::array<double, 3>> v(8);
  for (auto& p : v) in >> p[0] >> p[1] >> p[2];
  for (int f = 0; f < nf; ++f) {
    int k = 0;
    in >> k;
    REQUIRE(k == 4);
    std::array<int, 4> idx{};
    for (auto& i : idx) in >> i;
    // Outward orientation: (v1 - v0) x (v2 - v1) points away from the origin.
    const auto& a = v[static_cast<std::size_t>(idx[0])];
    const auto& b = v[static_cast<std::size_t>(idx[1])];
    const auto& c = v[static_cast<std::size_t>(idx[2])];
    const double e1[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const double e2[3] = {c[0] - b[0], c[1] - b[1], c[2] - b[2]};
    const double n[3] = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                         e1[0] * e2[1] - e1[1] * e2[0]};
    CHECK(n[0] * a[0] + n[1] * a[1] + n[2] * a[2] > 0);
  }
  CHECK_THROWS_AS(polytope_off(cube_polytope(2)), SchemaError);
  CHECK_THROWS_AS(polytope_off(cube_polytope(4)), SchemaError);
}

TEST_CASE("OFF export of the octahedron has triangles") {
  const std::string off = polytope_off(polar(cube_polytope(3)));
  CHECK(off.rfind("OFF\n6 8 0\n", 0) == 0);
}

TEST_CASE("analysis report fields") {
  const StateFile bell = parse_state_file(R"({"num_qubits": 2, "amplitudes": [
      {"index": "00", "re": 1}, {"index": "11", "re": 1}]})");
  const std::string r = analyze_report(bell, true);
  CHECK(r.rfind("toriq-report v1\n", 0) == 0);
  CHECK(r.find("raw_norm: 1.414213562373\n") != std::string::npos);
  CHECK(r.find("concurrence: 1.000000000000\n") != std::string::npos);
  CHECK(r.find("separable: false\n") != std::string::npos);
  CHECK(r.find("three_tangle") == std::string::npos);
  CHECK(r.find("factors") == std::string::npos);
  CHECK_THROWS_AS(analyze_report(bell, false), std::domain_error);

  const StateFile one = parse_state_file(R"({"num_qubits": 1, "amplitudes": [
      {"index": "1", "re": 1}]})");
  const std::string s = analyze_report(one, true);
  CHECK(s.find("face_minors") == std::string::npos);
  CHECK(s.find("separable: true\n") != std::string::npos);
}
