#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "toriq/io.hpp"

namespace toriq {

namespace {

using nlohmann::json;

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

json rational_json(const Rational& q) {
  if (denominator(q) == 1) return integer_json(numerator(q));
  return format_rational(q);
}

std::string off_number(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", q.convert_to<double>());
  return buf;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector cross(const RationalVector& a, const RationalVector& b) {
  return RationalVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::string polytope_json(const Polytope& p) {
  json doc;
  doc["ambient_dim"] = p.ambient_dim();
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& x : v.coords()) row.push_back(rational_json(x));
    verts.push_back(std::move(row));
  }
  doc["vertices"] = std::move(verts);
  return doc.dump(2) + "\n";
}

std::string fan_json(const Fan& f) {
  json doc;
  doc["ambient_dim"] = f.ambient_dim();
  json cones = json::array();
  for (const auto& c : f.maximal_cones()) {
    json rays = json::array();
    for (const auto& r : c.rays()) {
      json row = json::array();
      for (const auto& x : r) row.push_back(integer_json(x));
      rays.push_back(std::move(row));
    }
    cones.push_back({{"rays", std::move(rays)}});
  }
  doc["cones"] = std::move(cones);
  return doc.dump(2) + "\n";
}

std::string polytope_off(const Polytope& p) {
  if (p.ambient_dim() != 3) throw SchemaError("OFF export needs a 3-dimensional polytope");
  const auto& verts = p.vertices();
  const auto& ineqs = p.facet_inequalities();
  for (const auto& h : ineqs) {
    // An equality pair means the polytope is flat.
    if (std::find(ineqs.begin(), ineqs.end(), -h) != ineqs.end())
      throw SchemaError("OFF export needs a full-dimensional polytope");
  }

  auto on_facet = [&](const LatticeVector& h, const RationalVector& v) {
    Rational s = Rational(h[3]);
    for (std::size_t i = 0; i < 3; ++i) s += Rational(h[i]) * v[i];
    return s == 0;
  };

  std::vector<std::vector<std::size_t>> faces;
  for (const auto& h : ineqs) {
    std::vector<std::size_t> fv;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (on_facet(h, verts[k])) fv.push_back(k);

    // Two vertices of the facet span an edge iff they share a second facet.
    auto adjacent = [&](std::size_t a, std::size_t b) {
      for (const auto& g : ineqs)
        if (!(g == h) && on_facet(g, verts[a]) && on_facet(g, verts[b])) return true;
      return false;
    };
    std::vector<std::size_t> cycle{fv.front()};
    std::vector<bool> used(fv.size(), false);
    used[0] = true;
    while (cycle.size() < fv.size()) {
      bool advanced = false;
      for (std::size_t k = 0; k < fv.size(); ++k) {
        if (!used[k] && adjacent(cycle.back(), fv[k])) {
          cycle.push_back(fv[k]);
          used[k] = true;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("facet boundary is not a cycle");
    }

    // Counter-clockwise seen from outside; the outward normal is -a.
    const RationalVector n = cross(sub(verts[cycle[1]], verts[cycle[0]]),
                                   sub(verts[cycle[2]], verts[cycle[1]]));
    Rational orient = 0;
    for (std::size_t i = 0; i < 3; ++i) orient -= Rational(h[i]) * n[i];
    if (orient < 0) std::reverse(cycle.begin() + 1, cycle.end());
    faces.push_back(std::move(cycle));
  }

  std::ostringstream os;
  os << "OFF\n" << verts.size() << ' ' << faces.size() << " 0\n";
  for (const auto& v : verts)
    os << off_number(v[0]) << ' ' << off_number(v[1]) << ' ' << off_number(v[2]) << '\n';
  for (const auto& f : faces) {
    os << f.size();
    for (auto k : f) os << ' ' << k;
    os << '\n';
  }
  return os.str();
}

Complex parse_complex(const std::string& text) {
  static const std::string num = R"(([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?)";
  static const std::regex full("^([+-]?" + num + ")([+-]" + num + ")i$");
  static const std::regex real_only("^[+-]?" + num + "$");
  static const std::regex imag_only("^[+-]?(" + num + ")?i$");
  std::smatch m;
  if (std::regex_match(text, m, full)) return {std::stod(m[1].str()), std::stod(m[4].str())};
  if (std::regex_match(text, real_only)) return {std::stod(text), 0.0};
  if (std::regex_match(text, m, imag_only)) {
    const std::string coef = text.substr(0, text.size() - 1);
    if (coef.empty() || coef == "+") return {0.0, 1.0};
    if (coef == "-") return {0.0, -1.0};
    return {0.0, std::stod(coef)};
  }
  throw SchemaError("malformed complex number '" + text + "' (expected RE+IMi)");
}

std::string format_real(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::string format_complex(const Complex& z) {
  const std::string re = format_real(z.real());
  std::string im = format_real(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return re + im + "i";
}

}  // namespace toriq
