#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toriq/io.hpp"

namespace toriq {

namespace {

using nlohmann::json;

struct Component {
  double value = 0.0;
  std::optional<Rational> exact;
};

Component read_component(const json& record, const char* key, std::size_t pos) {
  const std::string where = "amplitudes[" + std::to_string(pos) + "]." + key;
  if (!record.contains(key)) return {};
  const json& v = record.at(key);
  if (v.is_number()) return {v.get<double>(), std::nullopt};
  if (v.is_string()) {
    try {
      Rational q = parse_rational(v.get<std::string>());
      return {q.convert_to<double>(), q};
    } catch (const std::invalid_argument&) {
      throw SchemaError(where + ": expected a number or a \"p/q\" string");
    }
  }
  throw SchemaError(where + ": expected a number or a \"p/q\" string");
}

}  // namespace

bool StateFile::is_exact() const {
  if (amplitudes.empty()) return false;
  for (const auto& a : amplitudes)
    if (!a.re_exact || !a.im_exact) return false;
  return true;
}

QState StateFile::to_state() const {
  std::vector<std::pair<std::string, Amplitude>> entries;
  entries.reserve(amplitudes.size());
  for (const auto& a : amplitudes) entries.emplace_back(a.index, Amplitude(a.re, a.im));
  try {
    return load_state(num_qubits, entries);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("amplitudes: ") + e.what());
  }
}

StateFile parse_state_file(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("state file must be a JSON object");

  StateFile out;
  if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_integer())
    throw SchemaError("num_qubits: required integer");
  const auto m = doc["num_qubits"].get<long long>();
  if (m < 1 || m > kMaxQubits)
    throw SchemaError("num_qubits: must lie in [1, " + std::to_string(kMaxQubits) + "]");
  out.num_qubits = static_cast<int>(m);

  if (doc.contains("normalize")) {
    if (!doc["normalize"].is_boolean()) throw SchemaError("normalize: expected a boolean");
    out.normalize = doc["normalize"].get<bool>();
  }

  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
    throw SchemaError("amplitudes: required array");
  std::set<std::string> seen;
  std::size_t pos = 0;
  for (const auto& rec : doc["amplitudes"]) {
    const std::string where = "amplitudes[" + std::to_string(pos) + "]";
    if (!rec.is_object()) throw SchemaError(where + ": expected an object");
    if (!rec.contains("index") || !rec["index"].is_string())
      throw SchemaError(where + ".index: required bitstring");
    AmplitudeRecord a;
    a.index = rec["index"].get<std::string>();
    if (a.index.size() != static_cast<std::size_t>(out.num_qubits))
      throw SchemaError(where + ".index: length must equal num_qubits");
    if (a.index.find_first_not_of("01") != std::string::npos)
      throw SchemaError(where + ".index: must contain only 0 and 1");
    if (!seen.insert(a.index).second) throw SchemaError(where + ".index: duplicate index");
    const auto re = read_component(rec, "re", pos);
    const auto im = read_component(rec, "im", pos);
    a.re = re.value;
    a.im = im.value;
    // A missing component counts as an exact zero.
    a.re_exact = rec.contains("re") ? re.exact : std::optional<Rational>(0);
    a.im_exact = rec.contains("im") ? im.exact : std::optional<Rational>(0);
    // Decimal fields may carry an exact companion: "rational": {"re": "p/q", "im": "p/q"}.
    if (rec.contains("rational")) {
      const json& r = rec["rational"];
      if (!r.is_object()) throw SchemaError(where + ".rational: expected an object");
      for (const char* key : {"re", "im"}) {
        if (!r.contains(key)) continue;
        const std::string field = where + ".rational." + key;
        if (!r[key].is_string()) throw SchemaError(field + ": expected a \"p/q\" string");
        Rational q;
        try {
          q = parse_rational(r[key].get<std::string>());
        } catch (const std::invalid_argument&) {
          throw SchemaError(field + ": expected a \"p/q\" string");
        }
        const double d = q.convert_to<double>();
        double& decimal = key[0] == 'r' ? a.re : a.im;
        if (rec.contains(key) && std::abs(decimal - d) > 1e-12 * std::max(1.0, std::abs(d)))
          throw SchemaError(field + ": disagrees with the decimal value");
        decimal = d;
        (key[0] == 'r' ? a.re_exact : a.im_exact) = q;
      }
    }
    out.amplitudes.push_back(std::move(a));
    ++pos;
  }
  // Catches the all-zero state.
  out.to_state();
  return out;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read state file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_file(buf.str());
}

std::string write_state_file(const QState& s) {
  json doc;
  doc["num_qubits"] = s.num_qubits();
  doc["normalize"] = false;
  json amps = json::array();
  const int m = s.num_qubits();
  for (std::size_t idx = 0; idx < s.amplitudes().size(); ++idx) {
    if (s[idx] == 0.0) continue;
    std::string bits(static_cast<std::size_t>(m), '0');
    for (int k = 0; k < m; ++k)
      if ((idx >> k) & 1) bits[static_cast<std::size_t>(m - 1 - k)] = '1';
    amps.push_back({{"index", bits}, {"re", s[idx].real()}, {"im", s[idx].imag()}});
  }
  doc["amplitudes"] = std::move(amps);
  return doc.dump(2) + "\n";
}

}  // namespace toriq
