#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "galois_kit/fca.hpp"
#include "galois_kit/lattice.hpp"
#include "galois_kit/operator.hpp"
#include "galois_kit/relation.hpp"

namespace galois_kit::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// {"kind": "lukasiewicz" | "goedel" | "custom", "labels": [...],
///  "tables": {"join": [[...]], "meet": ..., "prod": ..., "impl": ...}}
/// Table cells are carrier labels. Chains may omit tables; when present they must match the
/// chain's own operations.
LatticeDraft lattice_draft_from_json(const json& doc);
Lattice lattice_from_json(const json& doc);
Lattice load_lattice(const std::filesystem::path& path);
LatticeDraft load_lattice_draft(const std::filesystem::path& path);
json lattice_to_json(const LatticeSpec& A);

/// {"lattice": <file or inline>, "domain": [...], "codomain": [...],
///  "entries": [{"i": .., "j": .., "v": "1/2"}]}
/// Missing entries are 0. A lattice given by the caller must agree with the file's.
FuzzyRelation relation_from_json(const json& doc, const std::optional<Lattice>& lattice,
                                 const std::filesystem::path& base_dir = {});
FuzzyRelation load_relation(const std::filesystem::path& path,
                            const std::optional<Lattice>& lattice = std::nullopt);
json relation_to_json(const FuzzyRelation& R);

/// CSV: header row lists attributes after an ignored corner cell, each further row is an object
/// name followed by carrier labels. Files ending in .json use the relation format.
FuzzyContext load_context(const std::filesystem::path& path,
                          const std::optional<Lattice>& lattice = std::nullopt);

/// {"lattice": <file or inline>, "in_index": [...], "out_index": [...],
///  "provenance": "explicit", "rows": [[labels...], ...]} with rows in canonical input order.
OperatorTable operator_from_json(const json& doc, const std::optional<Lattice>& lattice,
                                 const std::filesystem::path& base_dir = {});
OperatorTable load_operator(const std::filesystem::path& path,
                            const std::optional<Lattice>& lattice = std::nullopt);
json operator_to_json(const OperatorTable& op);

json values_to_json(const Values& v, const LatticeSpec& A);
json vector_to_json(const FuzzyVector& v);  // {name: label}
json witness_to_json(const Witness& w, const LatticeSpec& A);

}  // namespace galois_kit::io
