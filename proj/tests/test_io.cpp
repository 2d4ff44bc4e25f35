#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <string>

#include <gnorm/errors.hpp>
#include <gnorm/graph.hpp>
#include <gnorm/io.hpp>

using namespace gnorm;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir(const char* leaf) {
  fs::path dir = fs::path(GNORM_TEST_TMPDIR) / leaf;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("graph json round-trip preserves structure and labels") {
  BipartiteGraph g = make_hypercube(2);
  Json j = graph_to_json(g);
  BipartiteGraph back = graph_from_json(j, "roundtrip");
  CHECK(back == g);
  CHECK(back.x_labels == g.x_labels);
  CHECK(back.y_labels == g.y_labels);

  // Duplicate pairs encode multiplicity and survive the trip.
  BipartiteGraph multi;
  multi.x_size = 1;
  multi.y_size = 2;
  multi.edges = {{0, 1}, {0, 1}, {0, 0}};
  BipartiteGraph back2 = graph_from_json(graph_to_json(multi), "multi");
  back2.canonicalize();
  multi.canonicalize();
  CHECK(back2 == multi);
  CHECK(back2.m() == 3);
}

TEST_CASE("graph json rejects malformed input with the context in the message") {
  Json bad;
  bad["x"] = 2;
  bad["y"] = 1;
  bad["edges"] = Json::array({Json::array({0, 5})});
  CHECK_THROWS_AS(graph_from_json(bad, "g.json"), parse_error);
  try {
    graph_from_json(bad, "g.json");
  } catch (const parse_error& e) {
    CHECK(e.file() == "g.json");
    CHECK(std::string(e.what()).find("g.json") != std::string::npos);
  }

  Json missing;
  missing["x"] = 2;
  CHECK_THROWS_AS(graph_from_json(missing, "m.json"), parse_error);

  Json labels = graph_to_json(make_path(2));
  labels["labels"]["x"] = Json::array({"only-one"});
  CHECK_THROWS_AS(graph_from_json(labels, "l.json"), parse_error);
}

TEST_CASE("graph files round-trip and the digest ignores edge order") {
  fs::path dir = tmp_dir("graph_files");
  BipartiteGraph g = make_even_cycle(3);
  std::string path = (dir / "c6.json").string();
  write_graph(path, g);
  BipartiteGraph back = read_graph(path);
  CHECK(back == g);

  BipartiteGraph shuffled = g;
  std::swap(shuffled.edges.front(), shuffled.edges.back());
  CHECK(graph_digest(shuffled) == graph_digest(g));
  // The written file is the canonical serialization, so the digests coincide.
  CHECK(file_digest(path) == "sha256:" + graph_digest(g).substr(7));

  CHECK_THROWS_AS(read_graph((dir / "absent.json").string()), parse_error);
}

TEST_CASE("csv matrices parse, tolerate spacing, and report positions") {
  Matrix w = matrix_from_csv_text("1,2\n 3 ,\t4\n", "m.csv");
  CHECK(w.rows() == 2);
  CHECK(w.cols() == 2);
  CHECK(w(1, 0) == 3.0);

  CHECK_THROWS_AS(matrix_from_csv_text("1,2\n3\n", "ragged.csv"), parse_error);
  try {
    matrix_from_csv_text("1,x\n", "bad.csv");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.file() == "bad.csv");
    CHECK(std::string(e.where()).find("line 1") != std::string::npos);
    CHECK(std::string(e.where()).find("column 2") != std::string::npos);
  }
  CHECK_THROWS_AS(matrix_from_csv_text("", "empty.csv"), parse_error);
}

TEST_CASE("csv writing keeps full double precision") {
  fs::path dir = tmp_dir("csv_precision");
  Matrix w(2, 2);
  w << 0.1, std::acos(-1.0), -1.0 / 3.0, 1e-17;
  std::string path = (dir / "w.csv").string();
  write_matrix_csv(path, w);
  Matrix back = read_matrix(path);
  CHECK(back == w);
}

TEST_CASE("json matrices parse and validate") {
  Matrix w = matrix_from_json(Json::parse("[[1,2],[3,4]]"), "m.json");
  CHECK(w(0, 1) == 2.0);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2],[3]]"), "r.json"), parse_error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("{\"a\":1}"), "o.json"), parse_error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,\"x\"]]"), "s.json"), parse_error);

  Matrix back = matrix_from_json(matrix_to_json(w), "rt.json");
  CHECK(back == w);
}

TEST_CASE("read_matrix dispatches on extension") {
  fs::path dir = tmp_dir("matrix_ext");
  write_file((dir / "a.csv").string(), "5,6\n");
  write_file((dir / "a.json").string(), "[[5,6]]");
  CHECK(read_matrix((dir / "a.csv").string()) == read_matrix((dir / "a.json").string()));
  write_file((dir / "a.txt").string(), "5,6\n");
  CHECK_THROWS_AS(read_matrix((dir / "a.txt").string()), parse_error);
}

TEST_CASE("decoration directories round-trip") {
  fs::path dir = tmp_dir("decoration");
  EdgeDecoration d;
  d.graph = make_path(3);
  for (int e = 0; e < d.graph.m(); ++e) {
    Matrix w(2, 2);
    w << e, e + 0.25, -e, 1.0 / (e + 1);
    d.weights.push_back(w);
  }
  std::string sub = (dir / "dec").string();
  write_decoration(sub, d);
  EdgeDecoration back = read_decoration(sub);
  CHECK(back.graph == d.graph);
  REQUIRE(back.weights.size() == d.weights.size());
  for (size_t e = 0; e < d.weights.size(); ++e) CHECK(back.weights[e] == d.weights[e]);

  // Writing the same decoration twice yields byte-identical files.
  std::string sub2 = (dir / "dec2").string();
  write_decoration(sub2, d);
  CHECK(file_digest(sub + "/manifest.json") == file_digest(sub2 + "/manifest.json"));
  CHECK(file_digest(sub + "/graph.json") == file_digest(sub2 + "/graph.json"));
  CHECK(file_digest(sub + "/e0001.csv") == file_digest(sub2 + "/e0001.csv"));

  CHECK_THROWS_AS(read_decoration((dir / "absent").string()), parse_error);
}

TEST_CASE("certificate directories carry the numbers") {
  fs::path dir = tmp_dir("certificate");
  ViolationCertificate cert;
  cert.normalized.graph = make_path(1);
  cert.normalized.weights.push_back(Matrix::Identity(2, 2));
  cert.c = 1.5;
  cert.n = 7;
  cert.lhs = 2.0;
  cert.rhs = 3.25;
  cert.margin = 1.25;
  std::string sub = (dir / "cert").string();
  write_certificate(sub, cert);
  Json j = Json::parse(read_file(sub + "/certificate.json"));
  CHECK(j["c"].get<double>() == 1.5);
  CHECK(j["n"].get<std::int64_t>() == 7);
  CHECK(j["margin"].get<double>() == 1.25);
  EdgeDecoration back = read_decoration(sub);
  CHECK(back.weights[0] == Matrix::Identity(2, 2));
}

TEST_CASE("sha256 matches known vectors") {
  CHECK(sha256_hex(std::string()) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex(std::string("abc")) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  fs::path dir = tmp_dir("digest");
  std::string path = (dir / "f.txt").string();
  write_file(path, "abc");
  CHECK(file_digest(path) ==
        "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("dump_json is deterministic and keeps 17 significant digits") {
  Json j;
  j["tenth"] = 0.1;
  j["int"] = 2;
  j["neg"] = -3.5;
  j["nan"] = std::nan("");
  j["text"] = "a\"b";
  j["list"] = Json::array({1.0, 2.5});
  std::string text = dump_json(j);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(text.find("\"int\": 2") != std::string::npos);
  CHECK(text.find("null") != std::string::npos);
  CHECK(text.find("\"a\\\"b\"") != std::string::npos);
  CHECK(text.back() == '\n');
  CHECK(dump_json(j) == text);

  // Round-trip through the printed form preserves doubles exactly.
  Json back = Json::parse(text);
  CHECK(back["tenth"].get<double>() == 0.1);
  CHECK(back["list"][1].get<double>() == 2.5);
}

TEST_CASE("engine names round-trip") {
  CHECK(engine_name(Engine::Naive) == std::string("naive"));
  CHECK(engine_name(Engine::Eliminated) == std::string("elim"));
  CHECK(parse_engine("naive") == Engine::Naive);
  CHECK(parse_engine("elim") == Engine::Eliminated);
  CHECK_THROWS_AS(parse_engine("fast"), std::invalid_argument);
}
