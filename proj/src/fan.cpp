#include "toriq/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "faces.hpp"

namespace toriq {

namespace {

void check_qubit_count(int m) {
  if (m < 1 || m > kMaxQubits)
    throw std::invalid_argument("m must lie in [1, " + std::to_string(kMaxQubits) + "]");
}

}  // namespace

std::string ChartIndex::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (i) s += ',';
    s += signs[i] > 0 ? '+' : '-';
  }
  return s + ")";
}

Fan Fan::close_under_faces(std::size_t dim, const std::vector<Cone>& cones) {
  std::set<Cone> unique_inputs(cones.begin(), cones.end());

  // Faces are collected as sets of global ray ids so that each distinct face
  // is built only once.
  std::map<LatticeVector, std::size_t> ids;
  std::vector<LatticeVector> all_rays;
  std::map<std::vector<std::size_t>, std::vector<LatticeVector>> faces;
  for (const auto& c : unique_inputs) {
    std::vector<std::size_t> local;
    for (const auto& r : c.rays()) {
      auto [it, fresh] = ids.emplace(r, all_rays.size());
      if (fresh) all_rays.push_back(r);
      local.push_back(it->second);
    }
    for (const auto& mask : detail::face_masks(c)) {
      std::vector<std::size_t> key;
      for (std::size_t i = 0; i < local.size(); ++i)
        if (mask[i]) key.push_back(local[i]);
      std::sort(key.begin(), key.end());
      if (faces.count(key)) continue;
      std::vector<LatticeVector> gens;
      for (auto id : key) gens.push_back(all_rays[id]);
      faces.emplace(std::move(key), std::move(gens));
    }
  }

  Fan fan;
  fan.dim_ = dim;
  for (const auto& [key, gens] : faces) fan.cones_.push_back(Cone::from_generators(gens, dim));
  std::sort(fan.cones_.begin(), fan.cones_.end());
  fan.cones_.erase(std::unique(fan.cones_.begin(), fan.cones_.end()), fan.cones_.end());

  for (const auto& c : unique_inputs) {
    bool maximal = std::none_of(unique_inputs.begin(), unique_inputs.end(), [&](const Cone& o) {
      return o.dimension() > c.dimension() && is_face_of(c, o);
    });
    if (maximal) fan.maximal_.push_back(c);
  }
  return fan;
}

Fan fan_from_cones(const std::vector<Cone>& cones) {
  if (cones.empty()) throw std::invalid_argument("fan needs at least one cone");
  const std::size_t dim = cones.front().ambient_dim();
  for (const auto& c : cones) {
    if (c.ambient_dim() != dim) throw std::invalid_argument("dimension mismatch");
    if (!is_strongly_convex(c)) throw std::domain_error("cone not strongly convex");
  }

  // Checking the generating cones suffices: faces of faces inherit the axiom.
  const std::vector<Cone> inputs = [&] {
    std::set<Cone> s(cones.begin(), cones.end());
    return std::vector<Cone>(s.begin(), s.end());
  }();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t j = i + 1; j < inputs.size(); ++j) {
      const Cone meet = intersect(inputs[i], inputs[j]);
      if (!is_face_of(meet, inputs[i]) || !is_face_of(meet, inputs[j])) {
        throw std::domain_error("fan axiom violated: cones " + inputs[i].to_string() + " and " +
                                inputs[j].to_string() + " meet in " + meet.to_string() +
                                ", which is not a face of both");
      }
    }
  }
  return Fan::close_under_faces(dim, inputs);
}

Polytope cube_polytope(int m) {
  check_qubit_count(m);
  const std::size_t n = static_cast<std::size_t>(m);
  std::vector<RationalVector> vertices;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RationalVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
    vertices.push_back(std::move(v));
  }
  return Polytope::from_points(vertices);
}

Fan normal_fan(const Polytope& p) {
  if (!p.contains_origin_in_interior())
    throw std::domain_error("normal fan requires 0 in interior");
  const std::size_t n = p.ambient_dim();

  // The cone at vertex v is spanned by the inner normals of the facets
  // through v, i.e. the vertices of the facet of polar(p) dual to v.
  std::vector<Cone> cones;
  for (const auto& v : p.vertices()) {
    std::vector<LatticeVector> normals;
    for (const auto& h : p.facet_inequalities()) {
      std::vector<Integer> a(h.coords().begin(), h.coords().begin() + static_cast<long>(n));
      LatticeVector normal(std::move(a));
      if (dot(normal, v) + Rational(h[n]) == 0) normals.push_back(primitive(normal));
    }
    cones.push_back(Cone::from_generators(normals, n));
  }
  // Normal fans satisfy the fan axioms by construction.
  return Fan::close_under_faces(n, cones);
}

bool fan_is_smooth(const Fan& f) {
  return std::all_of(f.maximal_cones().begin(), f.maximal_cones().end(),
                     [](const Cone& c) { return is_smooth_cone(c); });
}

std::vector<ChartIndex> chart_atlas(int m) {
  check_qubit_count(m);
  const std::size_t n = static_cast<std::size_t>(m);
  std::vector<ChartIndex> charts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ChartIndex c;
    for (std::size_t i = 0; i < n; ++i) c.signs.push_back((mask >> (n - 1 - i)) & 1 ? -1 : 1);
    charts.push_back(std::move(c));
  }
  return charts;
}

Cone orthant(const ChartIndex& chart) {
  const std::size_t n = chart.signs.size();
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n);
    e[i] = chart.signs[i];
    rays.push_back(std::move(e));
  }
  return Cone::from_generators(rays, n);
}

}  // namespace toriq
