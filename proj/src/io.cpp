#include "gnorm/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gnorm/errors.hpp"

namespace gnorm {

namespace fs = std::filesystem;

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_value(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(key).dump();
        out += ": ";
        dump_value(value, out, indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_value(value, out, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

[[noreturn]] void fail(const std::string& context, const std::string& where,
                       const std::string& what) {
  throw parse_error(context, where, what);
}

int get_int(const Json& j, const char* key, const std::string& context) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(context, key, "expected an integer field");
  return j[key].get<int>();
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  out += "\n";
  return out;
}

BipartiteGraph graph_from_json(const Json& j, const std::string& context) {
  if (!j.is_object()) fail(context, "root", "expected a JSON object");
  BipartiteGraph g;
  g.x_size = get_int(j, "x", context);
  g.y_size = get_int(j, "y", context);
  if (!j.contains("edges") || !j["edges"].is_array())
    fail(context, "edges", "expected an array of [x, y] pairs");
  for (size_t i = 0; i < j["edges"].size(); ++i) {
    const Json& e = j["edges"][i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(context, "edges[" + std::to_string(i) + "]", "expected an [x, y] integer pair");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (j.contains("labels")) {
    const Json& labels = j["labels"];
    if (!labels.is_object()) fail(context, "labels", "expected an object with x/y arrays");
    auto read_side = [&](const char* key, int expected, std::vector<std::string>& out) {
      if (!labels.contains(key)) return;
      if (!labels[key].is_array() || static_cast<int>(labels[key].size()) != expected)
        fail(context, std::string("labels.") + key, "expected one string per vertex");
      for (const Json& s : labels[key]) {
        if (!s.is_string()) fail(context, std::string("labels.") + key, "expected strings");
        out.push_back(s.get<std::string>());
      }
    };
    read_side("x", g.x_size, g.x_labels);
    read_side("y", g.y_size, g.y_labels);
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    fail(context, "graph", e.what());
  }
  return g;
}

Json graph_to_json(const BipartiteGraph& g) {
  Json j;
  j["x"] = g.x_size;
  j["y"] = g.y_size;
  j["edges"] = Json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back(Json::array({u, v}));
  if (!g.x_labels.empty() || !g.y_labels.empty()) {
    Json labels = Json::object();
    if (!g.x_labels.empty()) labels["x"] = g.x_labels;
    if (!g.y_labels.empty()) labels["y"] = g.y_labels;
    j["labels"] = std::move(labels);
  }
  return j;
}

BipartiteGraph read_graph(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    fail(path, "json", e.what());
  }
  return graph_from_json(j, path);
}

void write_graph(const std::string& path, const BipartiteGraph& g) {
  write_file(path, dump_json(graph_to_json(g)));
}

Matrix matrix_from_csv_text(const std::string& text, const std::string& context) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    size_t start = 0;
    int column = 0;
    while (start <= line.size()) {
      ++column;
      size_t end = line.find(',', start);
      if (end == std::string::npos) end = line.size();
      size_t a = start, b = end;
      while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
      const std::string where =
          "line " + std::to_string(lineno) + ", column " + std::to_string(column);
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(line.data() + a, line.data() + b, value);
      if (ec != std::errc() || ptr != line.data() + b) fail(context, where, "expected a number");
      if (!std::isfinite(value)) fail(context, where, "entries must be finite");
      row.push_back(value);
      start = end + 1;
      if (end == line.size()) break;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      fail(context, "line " + std::to_string(lineno), "inconsistent row length");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(context, "file", "matrix must have at least one row");
  Matrix w(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < rows[i].size(); ++k) w(i, k) = rows[i][k];
  return w;
}

Matrix matrix_from_json(const Json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) fail(context, "root", "expected a nonempty array of rows");
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& r = j[i];
    const std::string where = "row " + std::to_string(i);
    if (!r.is_array() || r.empty()) fail(context, where, "expected a nonempty array of numbers");
    std::vector<double> row;
    for (const Json& cell : r) {
      if (!cell.is_number()) fail(context, where, "expected numbers");
      const double value = cell.get<double>();
      if (!std::isfinite(value)) fail(context, where, "entries must be finite");
      row.push_back(value);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      fail(context, where, "inconsistent row length");
    rows.push_back(std::move(row));
  }
  Matrix w(rows.size(), rows.front().size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t k = 0; k < rows[i].size(); ++k) w(i, k) = rows[i][k];
  return w;
}

Matrix read_matrix(const std::string& path) {
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".csv") return matrix_from_csv_text(read_file(path), path);
  if (ext == ".json") {
    Json j;
    try {
      j = Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
      fail(path, "json", e.what());
    }
    return matrix_from_json(j, path);
  }
  fail(path, "extension", "expected .csv or .json");
}

void write_matrix_csv(const std::string& path, const Matrix& w) {
  std::string out;
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      if (j) out += ",";
      out += format_double(w(i, j));
    }
    out += "\n";
  }
  write_file(path, out);
}

Json matrix_to_json(const Matrix& w) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < w.cols(); ++j) row.push_back(w(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

EdgeDecoration read_decoration(const std::string& dir) {
  const std::string manifest_path = (fs::path(dir) / "manifest.json").string();
  Json manifest;
  try {
    manifest = Json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::parse_error& e) {
    fail(manifest_path, "json", e.what());
  }
  if (!manifest.is_object() || !manifest.contains("graph") || !manifest["graph"].is_string() ||
      !manifest.contains("edges") || !manifest["edges"].is_array())
    fail(manifest_path, "root", "expected {\"graph\": <file>, \"edges\": [<files>]}");
  BipartiteGraph g = read_graph((fs::path(dir) / manifest["graph"].get<std::string>()).string());
  std::vector<Matrix> mats;
  for (const Json& name : manifest["edges"]) {
    if (!name.is_string()) fail(manifest_path, "edges", "expected file names");
    mats.push_back(read_matrix((fs::path(dir) / name.get<std::string>()).string()));
  }
  EdgeDecoration d(g, std::move(mats));
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    fail(manifest_path, "decoration", e.what());
  }
  return d;
}

void write_decoration(const std::string& dir, const EdgeDecoration& d) {
  fs::create_directories(dir);
  write_graph((fs::path(dir) / "graph.json").string(), d.graph);
  Json names = Json::array();
  for (size_t e = 0; e < d.weights.size(); ++e) {
    char name[16];
    std::snprintf(name, sizeof(name), "e%04zu.csv", e);
    write_matrix_csv((fs::path(dir) / name).string(), d.weights[e]);
    names.push_back(std::string(name));
  }
  Json manifest;
  manifest["graph"] = "graph.json";
  manifest["edges"] = std::move(names);
  write_file((fs::path(dir) / "manifest.json").string(), dump_json(manifest));
}

void write_certificate(const std::string& dir, const ViolationCertificate& cert) {
  write_decoration(dir, cert.normalized);
  Json j;
  j["c"] = cert.c;
  j["n"] = cert.n;
  j["lhs"] = cert.lhs;
  j["rhs"] = cert.rhs;
  j["margin"] = cert.margin;
  write_file((fs::path(dir) / "certificate.json").string(), dump_json(j));
}

std::string sha256_hex(const void* data, size_t len) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int md_len = 0;
  if (EVP_Digest(data, len, md, &md_len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * md_len);
  for (unsigned int i = 0; i < md_len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string sha256_hex(const std::string& bytes) { return sha256_hex(bytes.data(), bytes.size()); }

std::string file_digest(const std::string& path) {
  return "sha256:" + sha256_hex(read_file(path));
}

std::string graph_digest(const BipartiteGraph& g) {
  BipartiteGraph canon = g;
  canon.canonicalize();
  return "sha256:" + sha256_hex(dump_json(graph_to_json(canon)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "file", "cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << contents;
  if (!out.flush()) throw std::runtime_error(path + ": write failed");
}

const char* engine_name(Engine e) { return e == Engine::Naive ? "naive" : "elim"; }

Engine parse_engine(const std::string& name) {
  if (name == "naive") return Engine::Naive;
  if (name == "elim") return Engine::Eliminated;
  throw std::invalid_argument("unknown engine '" + name + "' (expected naive or elim)");
}

}  // namespace gnorm
