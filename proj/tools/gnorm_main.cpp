#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <gnorm/banach.hpp>
#include <gnorm/errors.hpp>
#include <gnorm/holder.hpp>
#include <gnorm/io.hpp>
#include <gnorm/norms.hpp>
#include <gnorm/rng.hpp>
#include <gnorm/sidorenko.hpp>

using namespace gnorm;

namespace {

struct RunContext {
  std::string subcommand;
  Json inputs = Json::object();
  std::optional<std::uint64_t> seed;
  Engine engine = Engine::Eliminated;
  Json payload;
  std::string out;  // report file, or artifact directory where documented
};

const char* kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::Plain:
      return "plain";
    case NormKind::Rectified:
      return "rectified";
    default:
      return "normalized";
  }
}

// Content digest of a decoration directory: manifest, graph, then matrices.
std::string decoration_digest(const std::string& dir) {
  namespace fs = std::filesystem;
  const std::string manifest_path = (fs::path(dir) / "manifest.json").string();
  std::string bytes = read_file(manifest_path);
  Json manifest = Json::parse(bytes);
  bytes += read_file((fs::path(dir) / manifest["graph"].get<std::string>()).string());
  for (const Json& name : manifest["edges"])
    bytes += read_file((fs::path(dir) / name.get<std::string>()).string());
  return "sha256:" + sha256_hex(bytes);
}

BipartiteGraph load_graph(RunContext& ctx, const std::string& path) {
  ctx.inputs["graph"] = file_digest(path);
  return read_graph(path);
}

Matrix load_matrix(RunContext& ctx, const std::string& path, const char* key = "matrix") {
  ctx.inputs[key] = file_digest(path);
  return read_matrix(path);
}

Matrix sample_matrix(int rows, int cols, bool signed_inputs, Rng& rng) {
  Matrix w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w(i, j) = signed_inputs ? rng.uniform_signed() : rng.uniform();
  return w;
}

Json degree_json(const DegreeCheck& c) {
  Json j;
  j["pass"] = c.pass;
  if (!c.pass) {
    j["side"] = std::string(1, c.side);
    j["u"] = c.u;
    j["v"] = c.v;
    j["deg_u"] = c.deg_u;
    j["deg_v"] = c.deg_v;
  }
  return j;
}

Json density_json(const DensityCheck& c) {
  Json j;
  j["pass"] = c.pass;
  j["graph_ratio"] = c.graph_ratio;
  if (!c.pass) {
    j["xs"] = c.xs;
    j["ys"] = c.ys;
    j["sub_edges"] = c.sub_edges;
    j["sub_vertices"] = c.sub_vertices;
    j["sub_ratio"] = c.sub_ratio;
  }
  return j;
}

Json witness_json(const WitnessReport& w) {
  Json j;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["violation"] = w.violation;
  j["closed_lhs"] = w.closed_lhs ? Json(*w.closed_lhs) : Json(nullptr);
  j["closed_rhs"] = w.closed_rhs ? Json(*w.closed_rhs) : Json(nullptr);
  return j;
}

Json moduli_json(const ModuliReport& r) {
  Json j;
  j["graph"] = r.graph;
  j["m"] = r.m;
  j["epsilon"] = r.epsilon;
  j["samples"] = r.samples;
  j["violations"] = r.violations;
  j["observed"] = r.observed;
  j["bound"] = r.bound;
  return j;
}

void add_engine_option(CLI::App* sub, std::string& engine_str) {
  sub->add_option("--engine", engine_str, "hom engine: naive or elim")
      ->check(CLI::IsMember({"naive", "elim"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for graph homomorphism functionals and graph norms"};
  app.require_subcommand(1);
  RunContext ctx;

  // Shared option storage; each subcommand binds the pieces it uses.
  std::string graph_path, matrix_path, left_path, right_path, decoration_path;
  std::string family, engine_str = "elim", kind_str;
  int n = 3, k = 4, m_side = 2, n_side = 2, dim = 2, v_index = -1, n_max = 3, refine_top = 0;
  int threads = 1;
  std::int64_t trials = 0;
  std::uint64_t seed = 1;
  double p = 2.0, q = 2.0, eps = 1.0;
  bool rectified = false, normalized = false, signed_inputs = false, kahan = false;
  std::vector<int> xs, ys;
  std::vector<double> lambda;

  // construct
  {
    CLI::App* sub = app.add_subcommand("construct", "emit a graph from a named family");
    sub->add_option("--family", family, "hypercube | cycle | path | complete")
        ->required()
        ->check(CLI::IsMember({"hypercube", "cycle", "path", "complete"}));
    sub->add_option("--n", n, "hypercube dimension, or |Y| for complete");
    sub->add_option("--k", k, "half-length for cycle (C_2k), edge count for path");
    sub->add_option("--m", m_side, "|X| for complete");
    sub->callback([&] {
      ctx.subcommand = "construct";
      BipartiteGraph g;
      if (family == "hypercube")
        g = make_hypercube(n);
      else if (family == "cycle")
        g = make_even_cycle(k);
      else if (family == "path")
        g = make_path(k);
      else
        g = make_complete_bipartite(m_side, n);
      ctx.payload["graph"] = graph_to_json(g);
      ctx.payload["digest"] = graph_digest(g);
      ctx.payload["vertices"] = g.n();
      ctx.payload["edges"] = g.m();
      if (!ctx.out.empty()) {
        write_graph(ctx.out, g);
        ctx.out.clear();  // artifact written; report still goes to stdout
      }
    });
  }

  // hom
  {
    CLI::App* sub = app.add_subcommand("hom", "weighted homomorphism sum and density");
    sub->add_option("--graph", graph_path)->required();
    sub->add_option("--matrix", matrix_path)->required();
    add_engine_option(sub, engine_str);
    sub->add_flag("--kahan", kahan, "compensated accumulation");
    sub->callback([&] {
      ctx.subcommand = "hom";
      ctx.engine = parse_engine(engine_str);
      BipartiteGraph g = load_graph(ctx, graph_path);
      Matrix w = load_matrix(ctx, matrix_path);
      HomOptions opt{ctx.engine, kahan};
      ctx.payload["hom"] = hom_sum(g, w, opt);
      ctx.payload["density"] = hom_density(g, w, opt);
      ctx.payload["plan_width"] = plan_elimination(g).width;
    });
  }

  // norm
  {
    CLI::App* sub = app.add_subcommand("norm", "graph norm of a weight matrix");
    sub->add_option("--graph", graph_path)->required();
    sub->add_option("--matrix", matrix_path)->required();
    sub->add_flag("--rectified", rectified, "entrywise absolute value first");
    sub->add_flag("--normalized", normalized, "uniform-measure density norm");
    add_engine_option(sub, engine_str);
    sub->callback([&] {
      ctx.subcommand = "norm";
      ctx.engine = parse_engine(engine_str);
      BipartiteGraph g = load_graph(ctx, graph_path);
      Matrix w = load_matrix(ctx, matrix_path);
      NormKind kind = normalized ? NormKind::NormalizedRectified
                                 : (rectified ? NormKind::Rectified : NormKind::Plain);
      NormReport r = make_norm_report(g, w, kind, graph_digest(g), HomOptions{ctx.engine, false});
      ctx.payload["graph"] = r.graph;
      ctx.payload["kind"] = kind_name(r.kind);
      ctx.payload["m"] = r.m;
      ctx.payload["hom"] = r.hom;
      ctx.payload["value"] = r.value;
    });
  }

  // schatten value | cycle-gap | trace-holder
  {
    CLI::App* sub = app.add_subcommand("schatten", "singular-value norms and identities");
    sub->require_subcommand(1);
    CLI::App* value = sub->add_subcommand("value", "Schatten p-norm");
    value->add_option("--matrix", matrix_path)->required();
    value->add_option("--p", p)->required();
    value->callback([&] {
      ctx.subcommand = "schatten value";
      Matrix w = load_matrix(ctx, matrix_path);
      ctx.payload["p"] = p;
      ctx.payload["value"] = schatten_norm(w, p);
    });
    CLI::App* cycle = sub->add_subcommand("cycle-gap", "C_2n norm minus S_2n norm");
    cycle->add_option("--n", n)->required();
    cycle->add_option("--matrix", matrix_path)->required();
    add_engine_option(cycle, engine_str);
    cycle->callback([&] {
      ctx.subcommand = "schatten cycle-gap";
      ctx.engine = parse_engine(engine_str);
      Matrix w = load_matrix(ctx, matrix_path);
      GapReport r = cycle_schatten_gap(n, w, HomOptions{ctx.engine, false});
      ctx.payload["n"] = n;
      ctx.payload["lhs"] = r.lhs;
      ctx.payload["rhs"] = r.rhs;
      ctx.payload["gap"] = r.gap;
    });
    CLI::App* trace = sub->add_subcommand("trace-holder", "S_r norm of a product vs the bound");
    trace->add_option("--left", left_path)->required();
    trace->add_option("--right", right_path)->required();
    trace->add_option("--p", p)->required();
    trace->add_option("--q", q)->required();
    trace->callback([&] {
      ctx.subcommand = "schatten trace-holder";
      Matrix v = load_matrix(ctx, left_path, "left");
      Matrix w = load_matrix(ctx, right_path, "right");
      GapReport r = trace_holder_gap(v, w, p, q);
      ctx.payload["p"] = p;
      ctx.payload["q"] = q;
      ctx.payload["r"] = 1.0 / (1.0 / p + 1.0 / q);
      ctx.payload["lhs"] = r.lhs;
      ctx.payload["rhs"] = r.rhs;
      ctx.payload["gap"] = r.gap;
    });
  }

  // holder check-structure | search | witness | amplify
  {
    CLI::App* sub = app.add_subcommand("holder", "decorated inequality laboratory");
    sub->require_subcommand(1);

    CLI::App* check = sub->add_subcommand("check-structure", "necessary structural conditions");
    check->add_option("--graph", graph_path)->required();
    check->callback([&] {
      ctx.subcommand = "holder check-structure";
      BipartiteGraph g = load_graph(ctx, graph_path);
      CriterionReport r = criterion_report(g);
      ctx.payload["degrees"] = degree_json(r.degrees);
      ctx.payload["density"] = density_json(r.density);
      Json is;
      is["size"] = r.independent_set.size;
      is["vertices"] = r.independent_set.vertices;
      ctx.payload["independent_set"] = is;
      ctx.payload["candidate"] = r.degrees.pass && r.density.pass;
    });

    CLI::App* search = sub->add_subcommand("search", "random search for decorated violations");
    search->add_option("--graph", graph_path)->required();
    search->add_option("--trials", trials)->default_val(1000);
    search->add_option("--dim", dim)->default_val(2);
    search->add_option("--seed", seed)->default_val(1);
    search->add_option("--threads", threads)->default_val(1);
    search->add_option("--refine-top", refine_top)->default_val(0);
    search->add_flag("--plain", signed_inputs, "plain norms on signed samples");
    add_engine_option(search, engine_str);
    search->callback([&] {
      ctx.subcommand = "holder search";
      ctx.engine = parse_engine(engine_str);
      ctx.seed = seed;
      BipartiteGraph g = load_graph(ctx, graph_path);
      SearchOptions opt;
      opt.trials = trials;
      opt.dim = dim;
      opt.kind = signed_inputs ? NormKind::Plain : NormKind::Rectified;
      opt.seed = seed;
      opt.threads = threads;
      opt.refine_top = refine_top;
      opt.hom = HomOptions{ctx.engine, false};
      auto r = search_violation(g, opt);
      ctx.payload["kind"] = kind_name(opt.kind);
      ctx.payload["trials"] = trials;
      ctx.payload["found"] = r.has_value();
      if (r) {
        ctx.payload["trial"] = r->trial;
        ctx.payload["lhs"] = r->lhs;
        ctx.payload["rhs"] = r->rhs;
        ctx.payload["gap"] = r->gap;
        ctx.payload["refined"] = r->refined;
        if (!ctx.out.empty()) {
          write_decoration(ctx.out, r->decoration);
          ctx.payload["decoration"] = decoration_digest(ctx.out);
          ctx.out.clear();
        }
      }
    });

    CLI::App* witness = sub->add_subcommand("witness", "explicit refuting decorations");
    witness->add_option("--graph", graph_path)->required();
    witness->add_option("--kind", kind_str, "degree | density")
        ->required()
        ->check(CLI::IsMember({"degree", "density"}));
    witness->add_option("--v", v_index, "Y vertex (default: maximum degree, lowest index)");
    witness->add_option("--k", k, "weight dimension, or lambda length when defaulted")
        ->default_val(4);
    witness->add_option("--xs", xs, "X selection for the dense subgraph")->delimiter(',');
    witness->add_option("--ys", ys, "Y selection for the dense subgraph")->delimiter(',');
    witness->add_option("--lambda", lambda, "diagonal entries (default: ones of length k)")
        ->delimiter(',');
    add_engine_option(witness, engine_str);
    witness->callback([&] {
      ctx.subcommand = "holder witness";
      ctx.engine = parse_engine(engine_str);
      BipartiteGraph g = load_graph(ctx, graph_path);
      WitnessReport w;
      if (kind_str == "degree") {
        int v = v_index;
        if (v < 0) {
          std::vector<int> deg = y_degrees(g);
          v = 0;
          for (size_t j = 1; j < deg.size(); ++j)
            if (deg[j] > deg[v]) v = static_cast<int>(j);
        }
        w = degree_witness(g, v, k);
        ctx.payload["kind"] = "degree";
        ctx.payload["v"] = v;
        ctx.payload["k"] = k;
      } else {
        if (xs.empty() && ys.empty()) {
          DensityCheck c = check_subgraph_density(g);
          if (c.pass)
            throw std::invalid_argument(
                "holder witness: no denser subgraph found; pass --xs/--ys explicitly");
          xs = c.xs;
          ys = c.ys;
        }
        Vector lv;
        if (lambda.empty()) {
          lv = Vector::Ones(k);
        } else {
          lv = Eigen::Map<const Vector>(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
        }
        w = density_witness(g, xs, ys, lv);
        ctx.payload["kind"] = "density";
        ctx.payload["xs"] = xs;
        ctx.payload["ys"] = ys;
        ctx.payload["lambda"] = lambda.empty() ? Json::array() : Json(lambda);
      }
      Json wj = witness_json(w);
      for (auto& [key, value] : wj.items()) ctx.payload[key] = value;
      if (!ctx.out.empty()) {
        write_decoration(ctx.out, w.decoration);
        ctx.payload["decoration"] = decoration_digest(ctx.out);
        ctx.out.clear();
      }
    });

    CLI::App* amplify = sub->add_subcommand("amplify", "tensor-power certificate from a decoration");
    amplify->add_option("--decoration", decoration_path, "decoration directory")->required();
    add_engine_option(amplify, engine_str);
    amplify->callback([&] {
      ctx.subcommand = "holder amplify";
      ctx.engine = parse_engine(engine_str);
      ctx.inputs["decoration"] = decoration_digest(decoration_path);
      EdgeDecoration d = read_decoration(decoration_path);
      ViolationCertificate cert = amplification_certificate(d, HomOptions{ctx.engine, false});
      ctx.payload["c"] = cert.c;
      ctx.payload["n"] = cert.n;
      ctx.payload["lhs"] = cert.lhs;
      ctx.payload["rhs"] = cert.rhs;
      ctx.payload["margin"] = cert.margin;
      ctx.payload["verified"] = verify_certificate(cert, HomOptions{ctx.engine, false});
      if (!ctx.out.empty()) {
        write_certificate(ctx.out, cert);
        ctx.payload["certificate"] = decoration_digest(ctx.out);
        ctx.out.clear();
      }
    });
  }

  // sidorenko
  {
    CLI::App* sub = app.add_subcommand("sidorenko", "density vs edge-density power");
    sub->add_option("--graph", graph_path)->required();
    sub->add_option("--matrix", matrix_path, "check one matrix (else sample --trials)");
    sub->add_option("--trials", trials)->default_val(0);
    sub->add_option("--dim", dim)->default_val(3);
    sub->add_option("--seed", seed)->default_val(1);
    add_engine_option(sub, engine_str);
    sub->callback([&] {
      ctx.subcommand = "sidorenko";
      ctx.engine = parse_engine(engine_str);
      BipartiteGraph g = load_graph(ctx, graph_path);
      HomOptions opt{ctx.engine, false};
      if (!matrix_path.empty()) {
        Matrix w = load_matrix(ctx, matrix_path);
        ctx.payload["gap"] = sidorenko_gap(g, w, opt);
      } else {
        if (trials < 1)
          throw std::invalid_argument("sidorenko: provide --matrix or --trials >= 1");
        ctx.seed = seed;
        double min_gap = 0.0;
        std::int64_t violations = 0;
        bool first = true;
        for (std::int64_t t = 0; t < trials; ++t) {
          Rng rng = Rng::substream(seed, t);
          Matrix w = sample_matrix(dim, dim, false, rng);
          double gap = sidorenko_gap(g, w, opt);
          if (first || gap < min_gap) min_gap = gap;
          first = false;
          if (gap < -1e-12) ++violations;
        }
        ctx.payload["trials"] = trials;
        ctx.payload["min_gap"] = min_gap;
        ctx.payload["violations"] = violations;
      }
    });
  }

  // chain
  {
    CLI::App* sub = app.add_subcommand("chain", "normalized norms along a graph chain");
    sub->add_option("--family", family, "hypercube | even-path")
        ->required()
        ->check(CLI::IsMember({"hypercube", "even-path"}));
    sub->add_option("--matrix", matrix_path)->required();
    sub->add_option("--n-max", n_max)->default_val(3);
    add_engine_option(sub, engine_str);
    sub->callback([&] {
      ctx.subcommand = "chain";
      ctx.engine = parse_engine(engine_str);
      Matrix w = load_matrix(ctx, matrix_path);
      HomOptions opt{ctx.engine, false};
      std::vector<double> values = family == "hypercube" ? hypercube_chain(w, n_max, opt)
                                                         : even_path_chain(w, n_max, opt);
      bool nondecreasing = true;
      for (size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1] - 1e-10) nondecreasing = false;
      ctx.payload["family"] = family;
      ctx.payload["values"] = values;
      ctx.payload["nondecreasing"] = nondecreasing;
    });
  }

  // cube-claim
  {
    CLI::App* sub = app.add_subcommand("cube-claim", "collapse inequality on random decorations");
    sub->add_option("--n", n, "cube dimension, 2 or 3")->default_val(2);
    sub->add_option("--trials", trials)->default_val(50);
    sub->add_option("--dim", dim)->default_val(2);
    sub->add_option("--seed", seed)->default_val(1);
    add_engine_option(sub, engine_str);
    sub->callback([&] {
      ctx.subcommand = "cube-claim";
      ctx.engine = parse_engine(engine_str);
      ctx.seed = seed;
      HomOptions opt{ctx.engine, false};
      BipartiteGraph qn = make_hypercube(n);
      Json gaps = Json::array();
      double max_gap = 0.0;
      std::int64_t violations = 0;
      bool first = true;
      for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, t);
        VertexDecoration vd;
        for (int i = 0; i < qn.x_size; ++i)
          vd.x_weights.push_back(sample_matrix(dim, 1, false, rng).col(0));
        for (int j = 0; j < qn.y_size; ++j)
          vd.y_weights.push_back(sample_matrix(dim, 1, false, rng).col(0));
        std::vector<Matrix> ews;
        for (int e = 0; e < qn.m(); ++e) ews.push_back(sample_matrix(dim, dim, false, rng));
        double gap = cube_claim_gap(n, vd, ews, opt);
        gaps.push_back(gap);
        if (first || gap > max_gap) max_gap = gap;
        first = false;
        if (gap > 1e-9) ++violations;
      }
      ctx.payload["n"] = n;
      ctx.payload["trials"] = trials;
      ctx.payload["gaps"] = gaps;
      ctx.payload["max_gap"] = max_gap;
      ctx.payload["violations"] = violations;
    });
  }

  // moduli convexity | smoothness | key
  {
    CLI::App* sub = app.add_subcommand("moduli", "convexity and smoothness probes");
    sub->require_subcommand(1);
    auto add_probe_options = [&](CLI::App* probe) {
      probe->add_option("--graph", graph_path)->required();
      probe->add_option("--eps", eps)->required();
      probe->add_option("--trials", trials)->default_val(500);
      probe->add_option("--dim", dim)->default_val(3);
      probe->add_option("--seed", seed)->default_val(1);
      probe->add_option("--threads", threads)->default_val(1);
      probe->add_flag("--signed", signed_inputs, "sample entries from [-1,1)");
      add_engine_option(probe, engine_str);
    };
    CLI::App* convexity = sub->add_subcommand("convexity", "midpoint depth lower bound");
    add_probe_options(convexity);
    convexity->callback([&] {
      ctx.subcommand = "moduli convexity";
      ctx.engine = parse_engine(engine_str);
      ctx.seed = seed;
      BipartiteGraph g = load_graph(ctx, graph_path);
      ProbeOptions opt{trials, dim, seed, signed_inputs, threads, HomOptions{ctx.engine, false}};
      ctx.payload = moduli_json(convexity_probe(g, eps, opt));
    });
    CLI::App* smoothness = sub->add_subcommand("smoothness", "perturbation growth upper bound");
    add_probe_options(smoothness);
    smoothness->callback([&] {
      ctx.subcommand = "moduli smoothness";
      ctx.engine = parse_engine(engine_str);
      ctx.seed = seed;
      BipartiteGraph g = load_graph(ctx, graph_path);
      ProbeOptions opt{trials, dim, seed, signed_inputs, threads, HomOptions{ctx.engine, false}};
      ModuliReport r = smoothness_probe(g, eps, opt);
      ctx.payload = moduli_json(r);
      ctx.payload["K"] = r.K;
    });
    CLI::App* key = sub->add_subcommand("key", "parallelogram-type inequality");
    key->add_option("--graph", graph_path)->required();
    key->add_option("--w1", left_path, "first matrix (with --w2; else sample --trials)");
    key->add_option("--w2", right_path, "second matrix");
    key->add_option("--trials", trials)->default_val(0);
    key->add_option("--dim", dim)->default_val(3);
    key->add_option("--seed", seed)->default_val(1);
    add_engine_option(key, engine_str);
    key->callback([&] {
      ctx.subcommand = "moduli key";
      ctx.engine = parse_engine(engine_str);
      BipartiteGraph g = load_graph(ctx, graph_path);
      HomOptions opt{ctx.engine, false};
      if (!left_path.empty() || !right_path.empty()) {
        if (left_path.empty() || right_path.empty())
          throw std::invalid_argument("moduli key: --w1 and --w2 go together");
        Matrix w1 = load_matrix(ctx, left_path, "w1");
        Matrix w2 = load_matrix(ctx, right_path, "w2");
        ctx.payload["gap"] = key_inequality_gap(g, w1, w2, opt);
      } else {
        if (trials < 1)
          throw std::invalid_argument("moduli key: provide --w1/--w2 or --trials >= 1");
        ctx.seed = seed;
        double max_gap = 0.0;
        std::int64_t violations = 0;
        bool first = true;
        for (std::int64_t t = 0; t < trials; ++t) {
          Rng rng = Rng::substream(seed, t);
          Matrix w1 = sample_matrix(dim, dim, true, rng);
          Matrix w2 = sample_matrix(dim, dim, true, rng);
          double gap = key_inequality_gap(g, w1, w2, opt);
          if (first || gap > max_gap) max_gap = gap;
          first = false;
          if (gap > 1e-9) ++violations;
        }
        ctx.payload["trials"] = trials;
        ctx.payload["max_gap"] = max_gap;
        ctx.payload["violations"] = violations;
      }
    });
  }

  for (auto* sub : app.get_subcommands({}))
    sub->add_option("--out", ctx.out, "write the report (or documented artifact) here");
  for (auto* sub : app.get_subcommands({}))
    for (auto* nested : sub->get_subcommands({}))
      nested->add_option("--out", ctx.out, "write the report (or documented artifact) here");

  const auto start = std::chrono::steady_clock::now();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const guard_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const parse_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  Json manifest;
  manifest["subcommand"] = ctx.subcommand;
  manifest["inputs"] = ctx.inputs;
  manifest["seed"] = ctx.seed ? Json(*ctx.seed) : Json(nullptr);
  manifest["engine"] = engine_name(ctx.engine);
  manifest["version"] = kVersion;
  manifest["wall_clock_ms"] = wall_ms;

  Json report;
  report["manifest"] = std::move(manifest);
  report["payload"] = std::move(ctx.payload);
  const std::string text = dump_json(report);
  if (!ctx.out.empty())
    write_file(ctx.out, text);
  else
    std::fputs(text.c_str(), stdout);
  return 0;
}
