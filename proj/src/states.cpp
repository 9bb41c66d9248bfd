#include "toriq/states.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

namespace toriq {

namespace {

void check_qubits(int m) {
  if (m < 1 || m > kMaxQubits)
    throw std::invalid_argument("num_qubits must lie in [1, " + std::to_string(kMaxQubits) + "]");
}

std::uint32_t bit(int position) { return std::uint32_t{1} << (position - 1); }

void check_face(const Face2& f, int m) {
  if (f.i < 1 || f.j > m || f.i >= f.j) throw std::invalid_argument("invalid face positions");
  if ((f.fixed & (bit(f.i) | bit(f.j))) != 0 || f.fixed >= (std::uint32_t{1} << m))
    throw std::invalid_argument("invalid face fixed bits");
}

Eigen::MatrixXcd flatten(const QState& s, const std::vector<int>& subset) {
  const int m = s.num_qubits();
  std::vector<int> rows_pos = subset;
  std::sort(rows_pos.begin(), rows_pos.end());
  std::vector<int> cols_pos;
  for (int k = 1; k <= m; ++k)
    if (!std::binary_search(rows_pos.begin(), rows_pos.end(), k)) cols_pos.push_back(k);

  const std::size_t nr = std::size_t{1} << rows_pos.size();
  const std::size_t nc = std::size_t{1} << cols_pos.size();
  Eigen::MatrixXcd mat(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    std::uint32_t base = 0;
    for (std::size_t b = 0; b < rows_pos.size(); ++b)
      if ((r >> b) & 1) base |= bit(rows_pos[b]);
    for (std::size_t c = 0; c < nc; ++c) {
      std::uint32_t idx = base;
      for (std::size_t b = 0; b < cols_pos.size(); ++b)
        if ((c >> b) & 1) idx |= bit(cols_pos[b]);
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = s[idx];
    }
  }
  return mat;
}

// Unit vector with its largest-magnitude entry (first on ties) real positive.
template <typename Vec>
void canonical_phase(Vec& v) {
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < v.size(); ++k)
    if (std::abs(v[k]) > std::abs(v[best]) * (1 + 1e-12)) best = k;
  const double n = v.norm();
  if (n == 0.0 || std::abs(v[best]) == 0.0) return;
  const Amplitude phase = std::conj(v[best]) / std::abs(v[best]);
  v *= phase / n;
}

Eigen::VectorXcd as_vector(const QState& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.amplitudes().size()));
  for (std::size_t k = 0; k < s.amplitudes().size(); ++k) v[static_cast<Eigen::Index>(k)] = s[k];
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// QState

QState::QState(int num_qubits, std::vector<Amplitude> amps) : m_(num_qubits), amps_(std::move(amps)) {
  check_qubits(num_qubits);
  if (amps_.size() != (std::size_t{1} << num_qubits))
    throw std::invalid_argument("amplitude count must be 2^num_qubits");
}

double QState::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

bool QState::is_normalized() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::abs(s - 1.0) <= kNormTolerance;
}

QState QState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("zero state cannot be normalized");
  std::vector<Amplitude> out(amps_);
  for (auto& a : out) a /= n;
  return QState(m_, std::move(out));
}

std::string Face2::label(int m) const {
  std::string s(static_cast<std::size_t>(m), '0');
  for (int k = 1; k <= m; ++k) {
    char& ch = s[static_cast<std::size_t>(m - k)];
    if (k == i || k == j)
      ch = '*';
    else if (fixed & bit(k))
      ch = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Operations

QState load_state(int num_qubits, const std::vector<std::pair<std::string, Amplitude>>& entries) {
  check_qubits(num_qubits);
  std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
  std::set<std::string> seen;
  for (const auto& [bits, value] : entries) {
    if (bits.size() != static_cast<std::size_t>(num_qubits))
      throw std::invalid_argument("bitstring '" + bits + "' must have length " +
                                  std::to_string(num_qubits));
    std::size_t index = 0;
    for (char ch : bits) {
      if (ch != '0' && ch != '1')
        throw std::invalid_argument("bitstring '" + bits + "' must contain only 0 and 1");
      index = (index << 1) | static_cast<std::size_t>(ch - '0');
    }
    if (!seen.insert(bits).second) throw std::invalid_argument("duplicate index '" + bits + "'");
    amps[index] = value;
  }
  if (std::all_of(amps.begin(), amps.end(), [](const Amplitude& a) { return a == 0.0; }))
    throw std::invalid_argument("state has no nonzero amplitude");
  return QState(num_qubits, std::move(amps));
}

std::uint64_t face_count(int m) {
  if (m < 2) return 0;
  const auto mm = static_cast<std::uint64_t>(m);
  return (std::uint64_t{1} << (mm - 2)) * mm * (mm - 1) / 2;
}

std::vector<Face2> enumerate_faces(int m) {
  if (m < 2) throw std::invalid_argument("faces need at least two qubits");
  check_qubits(m);
  std::vector<Face2> faces;
  faces.reserve(face_count(m));
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      std::vector<int> rest;
      for (int k = 1; k <= m; ++k)
        if (k != i && k != j) rest.push_back(k);
      for (std::uint32_t c = 0; c < (std::uint32_t{1} << rest.size()); ++c) {
        std::uint32_t fixed = 0;
        for (std::size_t b = 0; b < rest.size(); ++b)
          if ((c >> b) & 1) fixed |= bit(rest[b]);
        faces.push_back({i, j, fixed});
      }
    }
  }
  return faces;
}

Amplitude face_minor(const QState& s, const Face2& f) {
  check_face(f, s.num_qubits());
  const std::uint32_t bi = bit(f.i), bj = bit(f.j);
  return s[f.fixed] * s[f.fixed | bi | bj] - s[f.fixed | bj] * s[f.fixed | bi];
}

FaceMinorReport face_minors(const QState& s) {
  FaceMinorReport report;
  for (const auto& f : enumerate_faces(s.num_qubits())) {
    const Amplitude omega = face_minor(s, f);
    report.max_abs = std::max(report.max_abs, std::abs(omega));
    report.entries.push_back({f, omega});
  }
  return report;
}

double concurrence_2qubit(const QState& s) {
  if (s.num_qubits() != 2) throw std::invalid_argument("concurrence requires two qubits");
  if (!s.is_normalized()) throw std::domain_error("concurrence requires a normalized state");
  return 2.0 * std::abs(face_minor(s, Face2{1, 2, 0}));
}

int flattening_rank(const QState& s, const std::vector<int>& subset) {
  const int m = s.num_qubits();
  std::set<int> unique(subset.begin(), subset.end());
  if (unique.empty() || static_cast<int>(unique.size()) >= m || unique.size() != subset.size() ||
      *unique.begin() < 1 || *unique.rbegin() > m)
    throw std::invalid_argument("flattening subset must be a proper nonempty set of qubits");
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(flatten(s, subset));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv[k] > kRankTolerance * sv[0]) ++r;
  return r;
}

bool is_fully_separable(const QState& s) {
  if (s.num_qubits() == 1) return true;
  for (int k = 1; k <= s.num_qubits(); ++k)
    if (flattening_rank(s, {k}) != 1) return false;
  return true;
}

std::optional<ProductFactors> factor_product(const QState& s) {
  if (s.norm() == 0.0) throw std::invalid_argument("state must be nonzero");
  if (!is_fully_separable(s)) return std::nullopt;
  const int m = s.num_qubits();

  ProductFactors f;
  for (int k = m; k >= 1; --k) {
    Eigen::Vector2cd u;
    if (m == 1) {
      u << s[0], s[1];
    } else {
      const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(flatten(s, {k}), Eigen::ComputeThinU);
      u = svd.matrixU().col(0);
    }
    canonical_phase(u);
    f.factors.emplace_back(u[0], u[1]);
  }

  // Put the global scale on the first factor.
  const Eigen::VectorXcd e = as_vector(segre_embed(f));
  const Eigen::VectorXcd v = as_vector(s);
  const Amplitude c = e.dot(v) / e.squaredNorm();
  if ((v - c * e).norm() > 1e-10 * v.norm()) return std::nullopt;
  f.factors[0].first *= c;
  f.factors[0].second *= c;
  return f;
}

QState segre_embed(const ProductFactors& f) {
  const int m = static_cast<int>(f.factors.size());
  check_qubits(m);
  for (const auto& [a0, a1] : f.factors)
    if (a0 == 0.0 && a1 == 0.0) throw std::invalid_argument("factor must be nonzero");
  std::vector<Amplitude> amps(std::size_t{1} << m);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    Amplitude a = 1.0;
    for (int p = 0; p < m; ++p) {
      const auto& [a0, a1] = f.factors[static_cast<std::size_t>(p)];
      a *= (idx >> (m - 1 - p)) & 1 ? a1 : a0;
    }
    amps[idx] = a;
  }
  return QState(m, std::move(amps));
}

std::vector<ChartCoordinates> chart_coordinates(const ProductFactors& f) {
  const int m = static_cast<int>(f.factors.size());
  for (const auto& [a0, a1] : f.factors)
    if (a0 == 0.0 && a1 == 0.0) throw std::invalid_argument("factor must be nonzero");
  std::vector<ChartCoordinates> out;
  for (auto& chart : chart_atlas(m)) {
    ChartCoordinates cc{chart, {}};
    bool defined = true;
    for (int k = 0; k < m && defined; ++k) {
      const auto& [a0, a1] = f.factors[static_cast<std::size_t>(k)];
      const Amplitude& den = chart.signs[static_cast<std::size_t>(k)] > 0 ? a0 : a1;
      const Amplitude& num = chart.signs[static_cast<std::size_t>(k)] > 0 ? a1 : a0;
      if (den == 0.0)
        defined = false;
      else
        cc.coords.push_back(num / den);
    }
    if (defined) out.push_back(std::move(cc));
  }
  return out;
}

double three_tangle(const QState& s) {
  if (s.num_qubits() != 3) throw std::invalid_argument("three-tangle requires three qubits");
  if (!s.is_normalized()) throw std::domain_error("three-tangle requires a normalized state");
  Amplitude a[8];
  for (std::size_t k = 0; k < 8; ++k) a[k] = s[k];
  return 4.0 * std::abs(hyperdeterminant(a));
}

double projective_distance(const QState& a, const QState& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("qubit count mismatch");
  Eigen::VectorXcd va = as_vector(a), vb = as_vector(b);
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < va.size(); ++k)
    if (std::abs(va[k]) > std::abs(va[best]) * (1 + 1e-12)) best = k;
  va /= va.norm();
  vb /= vb.norm();
  if (std::abs(vb[best]) == 0.0) return (va - vb).norm() + 1.0;
  va *= std::conj(va[best]) / std::abs(va[best]);
  vb *= std::conj(vb[best]) / std::abs(vb[best]);
  return (va - vb).norm();
}

}  // namespace toriq
