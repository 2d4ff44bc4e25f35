#pragma once

#include <json.hpp>
#include <string>

#include "gnorm/holder.hpp"

namespace gnorm {

// Insertion-ordered JSON so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Graph files: {"x": <int>, "y": <int>, "edges": [[xi, yj], ...]} with optional
// {"labels": {"x": [...], "y": [...]}}. Duplicate pairs encode multiplicity.
BipartiteGraph graph_from_json(const Json& j, const std::string& context);
Json graph_to_json(const BipartiteGraph& g);
BipartiteGraph read_graph(const std::string& path);
void write_graph(const std::string& path, const BipartiteGraph& g);

// Matrices: CSV (one row per line, comma-separated) or JSON (nested arrays),
// chosen by file extension. Entries must be finite.
Matrix read_matrix(const std::string& path);
Matrix matrix_from_csv_text(const std::string& text, const std::string& context);
Matrix matrix_from_json(const Json& j, const std::string& context);
void write_matrix_csv(const std::string& path, const Matrix& w);
Json matrix_to_json(const Matrix& w);

// Decoration directory: manifest.json {"graph": "graph.json", "edges":
// ["e0000.csv", ...]} with matrices aligned to the canonical edge order.
EdgeDecoration read_decoration(const std::string& dir);
void write_decoration(const std::string& dir, const EdgeDecoration& d);

// Adds certificate.json {c, n, lhs, rhs, margin} next to the normalized
// decoration files.
void write_certificate(const std::string& dir, const ViolationCertificate& cert);

std::string sha256_hex(const void* data, size_t len);
std::string sha256_hex(const std::string& bytes);
// "sha256:<hex>" of the file contents.
std::string file_digest(const std::string& path);
// Digest of the canonical JSON serialization; used as a graph id.
std::string graph_digest(const BipartiteGraph& g);

// Deterministic serialization: 2-space indent, doubles at 17 significant digits.
std::string dump_json(const Json& j, int indent = 2);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

const char* engine_name(Engine e);
Engine parse_engine(const std::string& name);  // "naive" | "elim"

}  // namespace gnorm
