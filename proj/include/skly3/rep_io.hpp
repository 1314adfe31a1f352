#pragma once

// Representation files: {"dimension": d, "field": "Q" | "Q(zeta_m)" | "complex",
// "X": [[scalar, ...], ...], "Y": ..., "Z": ...} with scalars written as text.

#include "skly3/error.hpp"
#include "skly3/matrix.hpp"
#include "skly3/scalar.hpp"

#include <json.hpp>

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace skly3 {

struct RepFile {
  FieldTag field = FieldTag::rationals();
  std::size_t dimension = 0;
  std::array<std::vector<std::vector<Scalar>>, 3> matrices;
};

namespace detail {

inline Scalar scalar_from_json(const nlohmann::json& j, const FieldTag& tag) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), tag);
  if (j.is_number_integer()) return parse_scalar(std::to_string(j.get<long long>()), tag);
  if (j.is_number()) {
    if (tag.is_exact()) throw ParseError("floating-point entry in an exact representation file");
    return Scalar(std::complex<double>(j.get<double>(), 0.0));
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    if (tag.is_exact()) throw ParseError("complex pair in an exact representation file");
    return Scalar(std::complex<double>(j[0].get<double>(), j[1].get<double>()));
  }
  throw ParseError("unsupported scalar entry " + j.dump());
}

} // namespace detail

inline RepFile parse_rep_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("representation must be a JSON object");
  for (const char* key : {"dimension", "field", "X", "Y", "Z"})
    if (!j.contains(key)) throw ParseError(std::string("representation is missing \"") + key + "\"");
  RepFile out;
  if (!j["dimension"].is_number_integer() || j["dimension"].get<long long>() < 1)
    throw ParseError("dimension must be a positive integer");
  out.dimension = j["dimension"].get<std::size_t>();
  if (!j["field"].is_string()) throw ParseError("field must be a string");
  out.field = FieldTag::parse(j["field"].get<std::string>());
  const char* names[3] = {"X", "Y", "Z"};
  for (int g = 0; g < 3; ++g) {
    const auto& m = j[names[g]];
    if (!m.is_array() || m.size() != out.dimension)
      throw DimensionMismatch(std::string(names[g]) + " must have " + std::to_string(out.dimension) + " rows");
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != out.dimension)
        throw DimensionMismatch(std::string(names[g]) + " must have " + std::to_string(out.dimension) + " columns");
      std::vector<Scalar> r;
      for (const auto& e : row) r.push_back(detail::scalar_from_json(e, out.field));
      out.matrices[g].push_back(std::move(r));
    }
  }
  return out;
}

inline RepFile read_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_rep_json(j);
}

template <class F>
MatRep<F> to_matrep(const F& field, const RepFile& file, Provenance provenance = Provenance::user_supplied) {
  std::array<std::vector<std::vector<typename F::Element>>, 3> rows;
  for (int g = 0; g < 3; ++g)
    for (const auto& r : file.matrices[g]) {
      std::vector<typename F::Element> row;
      for (const auto& s : r) row.push_back(to_element(field, s));
      rows[g].push_back(std::move(row));
    }
  return MatRep<F>(Matrix<F>::from_rows(field, rows[0]), Matrix<F>::from_rows(field, rows[1]),
                   Matrix<F>::from_rows(field, rows[2]), provenance);
}

template <class F>
nlohmann::json rep_to_json(const MatRep<F>& rep, const FieldTag& tag) {
  nlohmann::json j;
  j["dimension"] = rep.dimension();
  j["field"] = tag.name();
  const char* names[3] = {"X", "Y", "Z"};
  for (std::size_t g = 0; g < 3; ++g) {
    nlohmann::json m = nlohmann::json::array();
    const auto& mat = rep.generator(g);
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < mat.cols(); ++k) row.push_back(format_scalar(Scalar(mat(i, k))));
      m.push_back(std::move(row));
    }
    j[names[g]] = std::move(m);
  }
  return j;
}

} // namespace skly3
