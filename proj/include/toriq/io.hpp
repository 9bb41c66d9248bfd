#pragma once

// State files (JSON), polytope/fan exports (JSON, OFF) and the plain-text
// analysis reports written by the toriq tool.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toriq/conifold.hpp"
#include "toriq/fan.hpp"
#include "toriq/polyhedral.hpp"
#include "toriq/states.hpp"

namespace toriq {

/// Malformed input file or flag. Maps to exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kReportHeader = "toriq-report v1";

struct AmplitudeRecord {
  std::string index;
  double re = 0.0;
  double im = 0.0;
  /// Set when the component was given as a "p/q" string.
  std::optional<Rational> re_exact;
  std::optional<Rational> im_exact;
};

struct StateFile {
  int num_qubits = 0;
  std::vector<AmplitudeRecord> amplitudes;
  bool normalize = true;

  /// True when every component was given exactly.
  bool is_exact() const;
  /// The raw (unnormalized) state; throws SchemaError on bad indices.
  QState to_state() const;
};

/// Parses the JSON state-file schema
///   {"num_qubits": m,
///    "amplitudes": [{"index": "x_m...x_1", "re": number|"p/q", "im": number|"p/q",
///                    "rational": {"re": "p/q", "im": "p/q"}}],
///    "normalize": bool}
/// "rational" is optional and supplies exact values next to the decimals.
/// Throws SchemaError naming the offending field.
StateFile parse_state_file(const std::string& json_text);
StateFile read_state_file(const std::string& path);

/// Writes every nonzero amplitude with round-trip precision and
/// "normalize": false, so reading it back reproduces the same QState.
std::string write_state_file(const QState& s);

/// {"ambient_dim": n, "vertices": [[...], ...]}; rationals as "p/q" strings.
std::string polytope_json(const Polytope& p);
/// {"ambient_dim": n, "cones": [{"rays": [[...], ...]}, ...]} over the
/// maximal cones.
std::string fan_json(const Fan& f);
/// ASCII OFF with outward-oriented facets. 3-dimensional polytopes only;
/// throws SchemaError otherwise.
std::string polytope_off(const Polytope& p);

/// Parses "RE+IMi", "RE-IMi", "RE" or "IMi"; throws SchemaError otherwise.
Complex parse_complex(const std::string& text);

std::string format_real(double x);
std::string format_complex(const Complex& z);

/// Report for `analyze`. Throws std::domain_error when a quantity needs a
/// normalized state and normalization is off.
std::string analyze_report(const StateFile& file, bool normalize);

std::string cube_report(int m);
std::string conifold_report(std::optional<Diagonal> resolve, std::optional<Complex> deform);

}  // namespace toriq
