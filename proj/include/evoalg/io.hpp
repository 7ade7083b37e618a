// File formats and deterministic report assembly. Rationals travel as
// strings ("p/q" or "p") so downstream consumers never coerce to float.
#pragma once

#include <nlohmann/json_fwd.hpp>

#include "evoalg/local_maps.hpp"

namespace evoalg {

inline constexpr const char* kToolName = "evoalg";
inline constexpr const char* kToolVersion = "1.0.0";

// --- JSON <-> domain values -------------------------------------------

nlohmann::json rational_to_json(const Rational& q);
nlohmann::json matrix_to_json(const MatrixQ& m);
nlohmann::json vector_to_json(const VectorQ& v);
nlohmann::json matrix_space_to_json(const MatrixSpace& s);

MatrixQ matrix_from_json(const nlohmann::json& j);

/// Algebra file: {"n": int, "matrix": [[rational-string, ...], ...]}.
EvolutionAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const EvolutionAlgebra& E);

EvolutionAlgebra load_algebra(const std::string& path);
/// Map file: {"matrix": [[...]]}.
MatrixQ load_map(const std::string& path);
/// Spec file: {"d": [rational-string, ...]}.
DerivationSpec load_spec(const std::string& path);

/// Parses a comma-separated list of rational literals.
std::vector<Rational> parse_rational_list(const std::string& text);

// --- Reports -----------------------------------------------------------

/// FNV-1a 64-bit digest of a file's bytes, hex-encoded.
std::string file_digest(const std::string& path);

/// Report envelope: command echo, input digests, results, tool version.
/// Byte-identical for identical inputs and seed.
nlohmann::json make_report(const std::string& command,
                           const std::vector<std::string>& input_paths,
                           uint64_t seed, nlohmann::json results);

}  // namespace evoalg
