#include "toriq/polyhedral.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "double_description.hpp"
#include "faces.hpp"

namespace toriq {

namespace {

void append_with_negatives(std::vector<LatticeVector>& out, const std::vector<LatticeVector>& vs) {
  for (const auto& v : vs) {
    out.push_back(v);
    out.push_back(-v);
  }
}

void sort_unique(std::vector<LatticeVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

// Rays of the pointed part plus the lineality basis with both signs.
std::vector<LatticeVector> generator_list(const detail::ConeGenerators& g) {
  std::vector<LatticeVector> out = g.rays;
  append_with_negatives(out, g.lineality);
  sort_unique(out);
  return out;
}

// Rows of (R R^T)^{-1} R for independent rows R, made primitive: the facet
// normals of Cone(R) inside its own span. Fraction-free Gauss-Jordan on
// [R R^T | R].
std::vector<LatticeVector> simplicial_facet_normals(const std::vector<LatticeVector>& r,
                                                    std::size_t n) {
  const std::size_t k = r.size();
  std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k + n));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = dot(r[i], r[j]);
    for (std::size_t j = 0; j < n; ++j) a[i][k + j] = r[i][j];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[c], a[p]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Integer f = a[i][c];
      Integer g = 0;
      for (std::size_t j = 0; j < k + n; ++j) {
        a[i][j] = a[c][c] * a[i][j] - f * a[c][j];
        g = gcd(g, a[i][j]);
      }
      for (auto& x : a[i]) x /= g;
    }
  }
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> v(a[i].begin() + static_cast<long>(k), a[i].end());
    LatticeVector u = primitive(LatticeVector(std::move(v)));
    out.push_back(a[i][i] < 0 ? -u : u);
  }
  return out;
}

LatticeVector homogenize(const RationalVector& p) {
  Integer l = 1;
  for (const auto& x : p.coords()) l = lcm(l, denominator(x));
  std::vector<Integer> v;
  v.reserve(p.dim() + 1);
  for (const auto& x : p.coords()) v.push_back(numerator(x) * (l / denominator(x)));
  v.push_back(l);
  return primitive(LatticeVector(std::move(v)));
}

RationalVector dehomogenize(const LatticeVector& v) {
  const std::size_t n = v.dim() - 1;
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(v[i], v[n]);
  return RationalVector(std::move(out));
}

// Lattice points of the half-open parallelepiped spanned by linearly
// independent rays, excluding the origin.
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& rays,
                                                 std::size_t n) {
  const std::size_t k = rays.size();
  if (k == 0) return {};

  // Pick k coordinates on which the rays stay independent.
  std::vector<std::size_t> coords;
  std::vector<LatticeVector> picked;
  for (std::size_t j = 0; j < n && coords.size() < k; ++j) {
    std::vector<Integer> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = rays[i][j];
    picked.emplace_back(std::move(row));
    if (rank(picked, k) == picked.size())
      coords.push_back(j);
    else
      picked.pop_back();
  }

  // Inverse of the k x k block, so lambda = inv * x restricted to coords.
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = Rational(picked[r][c]);
    a[r][k + r] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[c], a[p]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * k; ++j) a[r][j] -= f * a[c][j];
    }
  }

  std::vector<Integer> lo(n, 0), hi(n, 0);
  double volume = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& r : rays) {
      if (r[j] < 0) lo[j] += r[j];
      if (r[j] > 0) hi[j] += r[j];
    }
    volume *= static_cast<double>(hi[j] - lo[j] + 1);
  }
  if (volume > 2.0e7) throw std::domain_error("parallelepiped too large for enumeration");

  std::vector<LatticeVector> out;
  LatticeVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = lo[j];
  for (;;) {
    if (!x.is_zero()) {
      bool inside = true;
      std::vector<Rational> lambda(k);
      for (std::size_t i = 0; i < k && inside; ++i) {
        Rational s = 0;
        for (std::size_t c = 0; c < k; ++c) s += a[i][k + c] * Rational(x[coords[c]]);
        lambda[i] = s;
        if (s < 0 || s >= 1) inside = false;
      }
      if (inside) {
        for (std::size_t j = 0; j < n && inside; ++j) {
          Rational s = 0;
          for (std::size_t i = 0; i < k; ++i) s += lambda[i] * Rational(rays[i][j]);
          if (s != Rational(x[j])) inside = false;
        }
      }
      if (inside) out.push_back(x);
    }
    std::size_t j = 0;
    while (j < n && x[j] == hi[j]) {
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++x[j];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cone

Cone::Cone(std::size_t dim, std::vector<LatticeVector> rays, std::vector<LatticeVector> lineality,
           std::vector<LatticeVector> halfspaces)
    : dim_(dim),
      dimension_(rank(rays, dim)),
      rays_(std::move(rays)),
      lineality_(std::move(lineality)),
      halfspaces_(std::move(halfspaces)) {}

Cone::Cone(std::size_t dim, std::size_t dimension, std::vector<LatticeVector> rays,
           std::vector<LatticeVector> lineality, std::vector<LatticeVector> halfspaces)
    : dim_(dim),
      dimension_(dimension),
      rays_(std::move(rays)),
      lineality_(std::move(lineality)),
      halfspaces_(std::move(halfspaces)) {}

Cone Cone::from_generators(const std::vector<LatticeVector>& generators, std::size_t dim) {
  // Independent generators: both descriptions are available in closed form.
  std::vector<LatticeVector> gens;
  for (const auto& g : generators) {
    if (g.dim() != dim) throw std::invalid_argument("dimension mismatch");
    if (!g.is_zero()) gens.push_back(primitive(g));
  }
  sort_unique(gens);
  RowSpan span(dim);
  bool independent = !gens.empty();
  for (const auto& g : gens) independent = independent && span.add(g);
  if (independent) {
    auto halfspaces = simplicial_facet_normals(gens, dim);
    append_with_negatives(halfspaces, nullspace(gens, dim));
    sort_unique(halfspaces);
    const std::size_t k = gens.size();
    return Cone(dim, k, std::move(gens), {}, std::move(halfspaces));
  }

  const auto dual = detail::extreme_rays(generators, dim);
  auto halfspaces = generator_list(dual);
  const auto primal = detail::extreme_rays(halfspaces, dim);
  return Cone(dim, generator_list(primal), primal.lineality, std::move(halfspaces));
}

Cone Cone::from_halfspaces(const std::vector<LatticeVector>& normals, std::size_t dim) {
  const auto primal = detail::extreme_rays(normals, dim);
  auto rays = generator_list(primal);
  const auto dual = detail::extreme_rays(rays, dim);
  return Cone(dim, std::move(rays), primal.lineality, generator_list(dual));
}

Cone Cone::zero(std::size_t dim) { return from_generators({}, dim); }

std::string Cone::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << ',';
    os << rays_[i].to_string();
  }
  os << ']';
  return os.str();
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  if (a.dimension_ != b.dimension_) return a.dimension_ < b.dimension_;
  return a.rays_ < b.rays_;
}

// ---------------------------------------------------------------------------
// Polytope

Polytope::Polytope(std::size_t dim, std::vector<RationalVector> vertices, Cone cone)
    : dim_(dim), vertices_(std::move(vertices)), cone_(std::move(cone)) {}

Polytope Polytope::from_points(const std::vector<RationalVector>& points) {
  if (points.empty()) throw std::invalid_argument("polytope needs at least one point");
  const std::size_t n = points.front().dim();
  std::vector<LatticeVector> lifted;
  lifted.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != n) throw std::invalid_argument("dimension mismatch");
    lifted.push_back(homogenize(p));
  }
  Cone cone = Cone::from_generators(lifted, n + 1);
  std::vector<RationalVector> vertices;
  for (const auto& r : cone.rays()) vertices.push_back(dehomogenize(r));
  std::sort(vertices.begin(), vertices.end());
  return Polytope(n, std::move(vertices), std::move(cone));
}

bool Polytope::contains_origin_in_interior() const {
  const auto& hs = cone_.halfspaces();
  return std::all_of(hs.begin(), hs.end(), [&](const LatticeVector& h) { return h[dim_] > 0; });
}

// ---------------------------------------------------------------------------
// Operations

Cone cone_from_generators(const std::vector<LatticeVector>& generators) {
  if (generators.empty()) throw std::invalid_argument("cone needs at least one generator");
  const std::size_t n = generators.front().dim();
  for (const auto& g : generators)
    if (g.dim() != n) throw std::invalid_argument("dimension mismatch");
  Cone c = Cone::from_generators(generators, n);
  if (!is_strongly_convex(c)) throw std::domain_error("cone not strongly convex");
  return c;
}

Cone dual_cone(const Cone& c) {
  if (c.ambient_dim() > kMaxDualityDim) throw std::domain_error("duality supported up to dim 4");
  return Cone::from_generators(c.halfspaces(), c.ambient_dim());
}

Polytope polar(const Polytope& p) {
  if (!p.contains_origin_in_interior()) throw std::domain_error("polar requires 0 in interior");
  const std::size_t n = p.ambient_dim();
  std::vector<RationalVector> points;
  for (const auto& h : p.facet_inequalities()) {
    std::vector<Rational> u;
    u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) u.emplace_back(h[i], h[n]);
    points.emplace_back(std::move(u));
  }
  return Polytope::from_points(points);
}

bool is_strongly_convex(const Cone& c) { return c.lineality().empty(); }

bool is_simplicial(const Cone& c) { return c.dimension() == c.rays().size(); }

bool is_smooth_cone(const Cone& c) {
  if (!is_simplicial(c)) return false;
  if (c.rays().empty()) return true;
  const auto d = smith_diagonal(IntMatrix::from_rows(c.rays()));
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

std::vector<boost::dynamic_bitset<>> detail::face_masks(const Cone& c) {
  const auto& rays = c.rays();
  const auto& hs = c.halfspaces();
  using Mask = boost::dynamic_bitset<>;

  std::vector<Mask> tight;
  for (const auto& h : hs) {
    Mask t(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) t[i] = dot(h, rays[i]) == 0;
    tight.push_back(std::move(t));
  }

  Mask full(rays.size());
  full.set();
  std::set<Mask> seen{full};
  std::vector<Mask> queue{full};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& t : tight) {
      Mask next = queue[q] & t;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

std::vector<Cone> cone_faces(const Cone& c) {
  const auto& rays = c.rays();
  const auto queue = detail::face_masks(c);
  std::vector<Cone> faces;
  faces.reserve(queue.size());
  for (const auto& m : queue) {
    std::vector<LatticeVector> gens;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (m[i]) gens.push_back(rays[i]);
    faces.push_back(Cone::from_generators(gens, c.ambient_dim()));
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

bool cone_contains(const Cone& c, const RationalVector& v) {
  if (v.dim() != c.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  for (const auto& h : c.halfspaces())
    if (dot(h, v) < 0) return false;
  return true;
}

bool cone_contains(const Cone& c, const LatticeVector& v) {
  if (v.dim() != c.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  for (const auto& h : c.halfspaces())
    if (dot(h, v) < 0) return false;
  return true;
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (face.ambient_dim() != c.ambient_dim()) return false;
  const auto& rays = c.rays();
  for (const auto& r : face.rays())
    if (!std::binary_search(rays.begin(), rays.end(), r)) return false;

  // The smallest face of c containing `face` is cut out by the half-spaces
  // that vanish on all of face's rays; it must add no rays.
  std::vector<LatticeVector> closure;
  for (const auto& r : rays) {
    bool tight = true;
    for (const auto& h : c.halfspaces()) {
      bool vanishes = std::all_of(face.rays().begin(), face.rays().end(),
                                  [&](const LatticeVector& f) { return dot(h, f) == 0; });
      if (vanishes && dot(h, r) != 0) {
        tight = false;
        break;
      }
    }
    if (tight) closure.push_back(r);
  }
  return closure == face.rays();
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<LatticeVector> hs = a.halfspaces();
  hs.insert(hs.end(), b.halfspaces().begin(), b.halfspaces().end());
  return Cone::from_halfspaces(hs, a.ambient_dim());
}

std::vector<std::vector<LatticeVector>> triangulate(const Cone& c) {
  if (!is_strongly_convex(c)) throw std::domain_error("cone not strongly convex");
  if (is_simplicial(c)) return {c.rays()};

  // Pulling triangulation: cone the apex ray over every facet missing it.
  const LatticeVector& apex = c.rays().front();
  std::vector<std::vector<LatticeVector>> out;
  for (const auto& f : cone_faces(c)) {
    if (f.dimension() + 1 != c.dimension()) continue;
    if (std::binary_search(f.rays().begin(), f.rays().end(), apex)) continue;
    for (auto simplex : triangulate(f)) {
      simplex.push_back(apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

HilbertBasis hilbert_basis(const Cone& c) {
  if (c.ambient_dim() > kMaxDualityDim)
    throw std::domain_error("Hilbert basis supported up to dim 4");
  if (!is_strongly_convex(c)) throw std::domain_error("cone not strongly convex");

  std::set<LatticeVector> candidates(c.rays().begin(), c.rays().end());
  for (const auto& simplex : triangulate(c))
    for (auto& p : parallelepiped_points(simplex, c.ambient_dim())) candidates.insert(std::move(p));

  // x is reducible iff x - y lies in c for some other candidate y.
  std::vector<LatticeVector> basis;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      if (cone_contains(c, x - y)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return HilbertBasis{c, std::move(basis)};
}

}  // namespace toriq
