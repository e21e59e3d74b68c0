// io.hpp
//
// State file format shared by the CLI and the library tools: a JSON
// document with fields
//   dims        integer array of local dimensions,
//   kind        "pure" | "mixed",
//   amplitudes  array of [re, im] pairs, length total_dim   (pure), or
//   matrix      row-major array of [re, im] pairs, length total_dim^2,
//   normalized  optional bool, default true (inverter outputs carry false).
// Numbers round-trip at full double precision. Also a small Hamiltonian
// file format ({"dim": n, "matrix": [[re, im], ...]}) and an input digest.

#pragma once

#include "tildelab/core.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <variant>

namespace tildelab {

struct ParseError : Error {
  using Error::Error;
};

using StateVariant = std::variant<PureState, DensityOperator>;

namespace io_detail {

using nlohmann::json;

inline json complex_pairs(const Vector& v) {
  json arr = json::array();
  for (long i = 0; i < v.size(); ++i)
    arr.push_back({v(i).real(), v(i).imag()});
  return arr;
}

inline json complex_pairs_rowmajor(const Matrix& m) {
  json arr = json::array();
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      arr.push_back({m(i, j).real(), m(i, j).imag()});
  return arr;
}

inline Complex parse_pair(const json& entry, const std::string& field,
                          std::size_t index) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
      !entry[1].is_number())
    throw ParseError("field '" + field + "', entry " + std::to_string(index) +
                     ": expected a [re, im] number pair");
  return Complex(entry[0].get<double>(), entry[1].get<double>());
}

inline json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline HilbertDims parse_dims(const json& doc, const std::string& path) {
  if (!doc.contains("dims") || !doc["dims"].is_array())
    throw ParseError(path + ": missing integer array field 'dims'");
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer())
      throw ParseError(path + ": field 'dims' must contain integers");
    dims.push_back(d.get<int>());
  }
  try {
    return HilbertDims(dims);
  } catch (const BadDimension& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace io_detail

inline void write_state(const std::string& path, const PureState& psi) {
  io_detail::json doc;
  doc["dims"] = psi.dims().dims();
  doc["kind"] = "pure";
  doc["amplitudes"] = io_detail::complex_pairs(psi.amp());
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << doc.dump(1) << "\n";
}

inline void write_state(const std::string& path, const DensityOperator& rho) {
  io_detail::json doc;
  doc["dims"] = rho.dims().dims();
  doc["kind"] = "mixed";
  doc["matrix"] = io_detail::complex_pairs_rowmajor(rho.mat());
  if (!rho.normalized()) doc["normalized"] = false;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << doc.dump(1) << "\n";
}

inline StateVariant read_state(const std::string& path) {
  io_detail::json doc = io_detail::load_document(path);
  HilbertDims dims = io_detail::parse_dims(doc, path);
  const long n = dims.total_dim();
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError(path + ": missing string field 'kind'");
  std::string kind = doc["kind"].get<std::string>();
  if (kind == "pure") {
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array())
      throw ParseError(path + ": pure state needs array field 'amplitudes'");
    const auto& arr = doc["amplitudes"];
    if (static_cast<long>(arr.size()) != n)
      throw ParseError(path + ": field 'amplitudes' has length " +
                       std::to_string(arr.size()) + ", expected " +
                       std::to_string(n));
    Vector amp(n);
    for (std::size_t i = 0; i < arr.size(); ++i)
      amp(static_cast<long>(i)) = io_detail::parse_pair(arr[i], "amplitudes", i);
    return PureState(dims, std::move(amp));
  }
  if (kind == "mixed") {
    if (!doc.contains("matrix") || !doc["matrix"].is_array())
      throw ParseError(path + ": mixed state needs array field 'matrix'");
    const auto& arr = doc["matrix"];
    if (static_cast<long>(arr.size()) != n * n)
      throw ParseError(path + ": field 'matrix' has length " +
                       std::to_string(arr.size()) + ", expected " +
                       std::to_string(n * n));
    Matrix m(n, n);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      long flat = static_cast<long>(i);
      m(flat / n, flat % n) = io_detail::parse_pair(arr[i], "matrix", i);
    }
    bool normalized = doc.value("normalized", true);
    return DensityOperator(dims, std::move(m), normalized);
  }
  throw ParseError(path + ": field 'kind' must be \"pure\" or \"mixed\"");
}

/// The density operator of either file kind (projector for pure inputs).
inline DensityOperator as_density(const StateVariant& s) {
  if (std::holds_alternative<PureState>(s))
    return projector(std::get<PureState>(s));
  return std::get<DensityOperator>(s);
}

inline void write_hamiltonian(const std::string& path, const Matrix& h) {
  io_detail::json doc;
  doc["dim"] = h.rows();
  doc["matrix"] = io_detail::complex_pairs_rowmajor(h);
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << doc.dump(1) << "\n";
}

inline Matrix read_hamiltonian(const std::string& path) {
  io_detail::json doc = io_detail::load_document(path);
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw ParseError(path + ": missing integer field 'dim'");
  const long n = doc["dim"].get<long>();
  if (n < 1) throw ParseError(path + ": field 'dim' must be positive");
  if (!doc.contains("matrix") || !doc["matrix"].is_array() ||
      static_cast<long>(doc["matrix"].size()) != n * n)
    throw ParseError(path + ": field 'matrix' must hold dim^2 [re, im] pairs");
  Matrix m(n, n);
  for (std::size_t i = 0; i < doc["matrix"].size(); ++i) {
    long flat = static_cast<long>(i);
    m(flat / n, flat % n) = io_detail::parse_pair(doc["matrix"][i], "matrix", i);
  }
  return m;
}

/// FNV-1a digest of the file bytes, as a hex string.
inline std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace tildelab
