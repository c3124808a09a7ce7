#include "flagpath/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>

namespace flagpath {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> parse_matrix(const json& j, std::uint32_t q,
                                           const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw DocumentError(where + ": generator matrix must be a nonempty array of rows");
  }
  std::vector<std::vector<int>> rows;
  for (const auto& jr : j) {
    if (!jr.is_array()) {
      throw DocumentError(where + ": matrix row must be an array of integers");
    }
    std::vector<int> row;
    for (const auto& je : jr) {
      if (!je.is_number_integer()) {
        throw DocumentError(where + ": matrix entries must be integers");
      }
      int v = je.get<int>();
      if (v < 0 || std::uint32_t(v) >= q) {
        throw DocumentError(where + ": entry " + std::to_string(v) +
                            " outside [0," + std::to_string(q) + ")");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Flag parse_flag(const json& j, const TypeVector& type, PrimeField field,
                std::size_t flag_index) {
  const std::string where = "flag " + std::to_string(flag_index + 1);
  if (!j.is_array() || j.empty()) {
    throw DocumentError(where + ": must be an array");
  }
  const std::size_t n = std::size_t(type.ambient());

  std::vector<Subspace> subs;
  if (j.front().is_array() && !j.front().empty() && j.front().front().is_number()) {
    // adapted-basis shorthand: one (n-1) x n matrix, leading i rows span
    // the i-th subspace; full type only
    if (!type.is_full()) {
      throw DocumentError(where + ": adapted-basis form requires the full type");
    }
    auto rows = parse_matrix(j, field.modulus(), where);
    if (rows.size() != n - 1) {
      throw DocumentError(where + ": adapted basis has " +
                          std::to_string(rows.size()) + " rows, expected " +
                          std::to_string(n - 1));
    }
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::vector<int>> lead(rows.begin(), rows.begin() + long(i));
      Subspace s = Subspace::span(field, n, lead);
      if (s.dim() != i) {
        throw DocumentError(where + ": leading " + std::to_string(i) +
                            " rows of the adapted basis have rank " +
                            std::to_string(s.dim()));
      }
      subs.push_back(std::move(s));
    }
  } else {
    if (j.size() != type.length()) {
      throw DocumentError(where + ": has " + std::to_string(j.size()) +
                          " subspaces, type requires " +
                          std::to_string(type.length()));
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      auto rows = parse_matrix(j[i], field.modulus(),
                               where + ", subspace " + std::to_string(i + 1));
      for (const auto& row : rows) {
        if (row.size() != n) {
          throw DocumentError(where + ", subspace " + std::to_string(i + 1) +
                              ": row has " + std::to_string(row.size()) +
                              " entries, ambient is " + std::to_string(n));
        }
      }
      Subspace s = Subspace::span(field, n, rows);
      if (int(s.dim()) != type.dims()[i]) {
        throw DocumentError(where + ", subspace " + std::to_string(i + 1) +
                            ": rank " + std::to_string(s.dim()) +
                            " does not match type dimension " +
                            std::to_string(type.dims()[i]));
      }
      subs.push_back(std::move(s));
    }
  }

  try {
    return Flag(type, std::move(subs));
  } catch (const std::exception& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json flag_to_json(const Flag& f) {
  json subs = json::array();
  for (const Subspace& s : f.subspaces()) subs.push_back(matrix_to_json(s.basis()));
  return subs;
}

json code_to_json(const FlagCode& code) {
  json doc;
  doc["n"] = code.type().ambient();
  doc["q"] = code.field().modulus();
  doc["type"] = code.type().dims();
  json flags = json::array();
  for (const Flag& f : code.flags()) flags.push_back(flag_to_json(f));
  doc["flags"] = std::move(flags);
  return doc;
}

}  // namespace

FlagCode parse_flag_code_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  for (const char* key : {"n", "q", "type", "flags"}) {
    if (!doc.contains(key)) {
      throw DocumentError(std::string("missing key \"") + key + "\"");
    }
  }
  if (!doc["n"].is_number_integer() || !doc["q"].is_number_integer()) {
    throw DocumentError("\"n\" and \"q\" must be integers");
  }
  const int n = doc["n"].get<int>();
  const long long q = doc["q"].get<long long>();
  if (q < 2 || q >= (1 << 16)) {
    throw DocumentError("\"q\" out of range");
  }
  PrimeField field = [&] {
    try {
      return PrimeField(std::uint32_t(q));
    } catch (const std::exception& e) {
      throw DocumentError(e.what());
    }
  }();
  if (!doc["type"].is_array()) throw DocumentError("\"type\" must be an array");
  TypeVector type = [&] {
    try {
      return TypeVector(doc["type"].get<std::vector<int>>(), n);
    } catch (const std::exception& e) {
      throw DocumentError(std::string("bad type vector: ") + e.what());
    }
  }();
  if (!doc["flags"].is_array() || doc["flags"].empty()) {
    throw DocumentError("\"flags\" must be a nonempty array");
  }

  std::vector<Flag> flags;
  for (std::size_t i = 0; i < doc["flags"].size(); ++i) {
    flags.push_back(parse_flag(doc["flags"][i], type, field, i));
  }
  try {
    return FlagCode(type, std::move(flags));
  } catch (const std::exception& e) {
    throw DocumentError(e.what());
  }
}

std::string flag_code_document(const FlagCode& code) {
  return code_to_json(code).dump(2) + "\n";
}

std::string realize_document(const DistanceVector& v, std::uint32_t q) {
  FlagPair pair = realize(v, q);
  std::vector<int> recomputed = distance_vector(pair.first, pair.second);
  int total = 0;
  for (int x : recomputed) total += x;

  json doc;
  doc["n"] = v.n();
  doc["q"] = q;
  doc["type"] = pair.first.type().dims();
  doc["flags"] = json::array({flag_to_json(pair.first), flag_to_json(pair.second)});
  doc["verification"] = {
      {"distance_vector", format_components(recomputed)},
      {"flag_distance", total},
      {"collapse_points", collapse_points(pair.first, pair.second)},
  };
  return doc.dump(2) + "\n";
}

std::string analyze_report(const FlagCode& code, bool all_pairs) {
  std::ostringstream out;
  const TypeVector& type = code.type();
  out << "size: " << code.size() << "\n";
  out << "n: " << type.ambient() << "\n";
  out << "q: " << code.field().modulus() << "\n";
  out << "type: " << format_components(type.dims())
      << (type.is_full() ? " (full)" : "") << "\n";

  const int d = code.min_distance();
  out << "min_distance: " << d << "\n";
  out << "max_distance_bound: " << max_flag_distance(type) << "\n";

  if (code.size() < 2) {
    out << "min_distance_vectors: none (singleton code)\n";
  } else {
    out << "min_distance_vectors:";
    for (const auto& v : code.distance_vector_set()) {
      out << " " << format_components(v);
    }
    out << "\n";
  }
  if (all_pairs) {
    out << "pairwise_vectors:";
    if (code.size() < 2) {
      out << " none";
    } else {
      for (const auto& v : code.pairwise_vector_set()) {
        out << " " << format_components(v);
      }
    }
    out << "\n";
  }

  out << "projected_sizes: ";
  const auto sizes = code.projected_sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out << ",";
    out << sizes[i];
  }
  out << "\n";
  const bool disjoint = code.is_disjoint();
  out << "disjoint: " << (disjoint ? "yes" : "no") << "\n";

  if (type.is_full() && code.size() >= 2) {
    out << "potential_min_vectors: "
        << potential_vector_count(type.ambient(), d).get_str() << "\n";
    if (disjoint) {
      out << "potential_disjoint_min_vectors: "
          << disjoint_vector_count(type.ambient(), d).get_str() << "\n";
    }
  }
  return out.str();
}

}  // namespace flagpath
