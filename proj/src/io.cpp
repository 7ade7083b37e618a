#include "evoalg/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace evoalg {

using nlohmann::json;

json rational_to_json(const Rational& q) { return to_string(q); }

json matrix_to_json(const MatrixQ& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const VectorQ& v) {
  json row = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(to_string(v(i)));
  return row;
}

json matrix_space_to_json(const MatrixSpace& s) {
  json gens = json::array();
  for (const auto& g : s.generators()) gens.push_back(matrix_to_json(g));
  return json{{"dim", s.dim()}, {"generators", std::move(gens)}};
}

MatrixQ matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw parse_error("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  MatrixQ m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw parse_error("ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = parse_rational(row.at(static_cast<size_t>(k)).get<std::string>());
  }
  return m;
}

EvolutionAlgebra algebra_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("matrix"))
    throw parse_error("algebra file must contain \"n\" and \"matrix\"");
  const int n = j.at("n").get<int>();
  MatrixQ A = matrix_from_json(j.at("matrix"));
  if (A.rows() != n || A.cols() != n)
    throw parse_error("\"matrix\" must be n x n");
  return {n, std::move(A)};
}

json algebra_to_json(const EvolutionAlgebra& E) {
  return json{{"n", E.n}, {"matrix", matrix_to_json(E.A)}};
}

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

}  // namespace

EvolutionAlgebra load_algebra(const std::string& path) {
  try {
    return algebra_from_json(load_json(path));
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

MatrixQ load_map(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("matrix")) throw parse_error(path + ": missing \"matrix\"");
  return matrix_from_json(j.at("matrix"));
}

DerivationSpec load_spec(const std::string& path) {
  const json j = load_json(path);
  if (!j.contains("d") || !j.at("d").is_array())
    throw parse_error(path + ": missing \"d\" array");
  DerivationSpec spec;
  for (const auto& item : j.at("d"))
    spec.d.push_back(parse_rational(item.get<std::string>()));
  return spec;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
  return values;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

json make_report(const std::string& command,
                 const std::vector<std::string>& input_paths, uint64_t seed,
                 json results) {
  json inputs = json::array();
  for (const auto& p : input_paths)
    inputs.push_back(json{{"path", p}, {"digest", file_digest(p)}});
  return json{{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"seed", seed},
              {"results", std::move(results)}};
}

}  // namespace evoalg
