// hgsparse: command-line front end for the hypergraph sparsification library.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "hgsparse/coreset.hpp"
#include "hgsparse/dh_sparsify.hpp"
#include "hgsparse/instances.hpp"
#include "hgsparse/io.hpp"
#include "hgsparse/report.hpp"
#include "hgsparse/spanner.hpp"
#include "hgsparse/uh_sparsify.hpp"
#include "hgsparse/verify.hpp"

using namespace hgsparse;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* s = std::getenv("HGSPARSE_SEED");
  if (s == nullptr || *s == '\0') return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (s[used] != '\0') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("HGSPARSE_SEED is not an unsigned integer: ") + s);
  }
}

void emit(const RunReport& r, const std::string& path) {
  if (path.empty()) {
    std::cout << r.str();
  } else {
    write_file(path, r.str());
  }
}

void save(const AnyHypergraph& h, const std::string& path) {
  if (path.empty()) {
    std::cout << write(h);
  } else {
    write_file(path, write(h));
  }
}

AnyHypergraph load(const std::string& path) { return parse(read_file(path)); }

void describe(RunReport& r, const AnyHypergraph& h, const std::string& prefix = "") {
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        constexpr bool directed = std::is_same_v<G, DirectedHypergraph>;
        r.set(prefix + "kind", directed ? "directed" : "undirected");
        r.set(prefix + "n", g.num_vertices());
        if constexpr (directed) {
          r.set(prefix + "num_arcs", g.num_arcs());
        } else {
          r.set(prefix + "num_edges", g.num_edges());
        }
        r.set(prefix + "rank", rank(g));
        r.set(prefix + "total_weight", total_weight(g));
      },
      h);
}

// --- gen -----------------------------------------------------------------

struct GenOptions {
  std::size_t n = 0, m = 0, r = 0;
  double eps = 0.0, w_lo = 1.0, w_hi = 1.0;
  std::uint64_t seed = 0;
  std::string out, report;
};

int run_gen(const std::string& family, const GenOptions& o) {
  RunReport rep;
  rep.set("command", "gen");
  rep.set("family", family);
  AnyHypergraph h;
  if (family == "lower-bound") {
    const auto p = LowerBoundParams::from_eps(o.n, o.eps);
    h = gen_lower_bound(p);
    rep.set("eps", p.eps());
    rep.set("q", p.q);
  } else if (family == "random-directed") {
    h = gen_random_directed(o.n, o.m, o.r, o.w_lo, o.w_hi, o.seed);
    rep.set("seed", o.seed);
  } else {
    h = gen_random_undirected(o.n, o.m, o.r, o.w_lo, o.w_hi, o.seed);
    rep.set("seed", o.seed);
  }
  describe(rep, h);
  save(h, o.out);
  if (!o.report.empty()) write_file(o.report, rep.str());
  std::cerr << "generated " << family << " hypergraph\n";
  return 0;
}

// --- sparsify ------------------------------------------------------------

struct SparsifyOptions {
  std::string input, out, report;
  bool directed = false, undirected = false, bucket = false, soundness = false;
  double eps = 0.5;
  std::string mode = "theory";
  std::optional<std::uint64_t> lambda;
  std::uint64_t seed = 0;
  std::size_t fault_k = 0, r = 0;
  double ca = 1.0, cc = 4.0, c2 = 1.0, c3 = 2.0, stretch = 0.0;
  std::string basis = "star";
};

SpannerBasis parse_basis(const std::string& s) {
  if (s == "star") return SpannerBasis::star;
  if (s == "clique") return SpannerBasis::clique;
  throw InputError("unknown basis '" + s + "' (expected star or clique)");
}

void add_lineage_check(RunReport& rep, bool ok) { rep.set("lineage_ok", ok); }

int run_sparsify(const SparsifyOptions& o) {
  const AnyHypergraph in = load(o.input);
  const bool is_directed = std::holds_alternative<DirectedHypergraph>(in);
  if ((o.directed && !is_directed) || (o.undirected && is_directed)) {
    throw InputError("input kind does not match --directed/--undirected");
  }
  const Mode mode = parse_mode(o.mode);
  RunReport rep;
  rep.set("command", "sparsify");
  describe(rep, in);
  rep.set("eps", o.eps);
  rep.set("mode", std::string(to_string(mode)));
  rep.set("seed", o.seed);
  if (o.lambda) rep.set("lambda_override", *o.lambda);

  AnyHypergraph out;
  if (is_directed) {
    if (o.bucket || o.fault_k != 0) {
      throw InputError("--bucket and --fault-k apply to undirected input only");
    }
    const auto& h = std::get<DirectedHypergraph>(in);
    SparsifyConfig cfg;
    cfg.ca = o.ca;
    cfg.cc = o.cc;
    cfg.mode = mode;
    cfg.lambda_override = o.lambda;
    cfg.seed = o.seed;
    auto res = dh_sparsify(h, o.eps, cfg);
    add_schedule(rep, res.report);
    rep.set("m_end", res.graph.num_arcs());
    bool ok = true;
    for (ArcIndex e = 0; e < res.graph.num_arcs(); ++e) {
      ok = ok && res.graph.weight(e) ==
                     std::ldexp(h.weight(res.origin[e]), static_cast<int>(res.doublings[e]));
    }
    add_lineage_check(rep, ok);
    out = std::move(res.graph);
  } else {
    const auto& h = std::get<UndirectedHypergraph>(in);
    UhConfig cfg;
    cfg.c_sampling = o.c2;
    cfg.c_spanner_size = o.c3;
    cfg.cc = o.cc;
    cfg.mode = mode;
    cfg.lambda_override = o.lambda;
    cfg.stretch = o.stretch;
    cfg.fault_k = o.fault_k;
    cfg.basis = parse_basis(o.basis);
    cfg.check_soundness = o.soundness;
    cfg.seed = o.seed;
    const std::size_t r = o.r ? o.r : rank(h);
    rep.set("r", r);
    rep.set("fault_k", o.fault_k);
    if (o.bucket) {
      auto res = rank_bucket_sparsify(h, r, o.eps, cfg);
      for (const auto& b : res.buckets) {
        const std::string p = "bucket." + std::to_string(b.index) + ".";
        rep.set(p + "eps", b.eps);
        rep.set(p + "m", b.edges.size());
        rep.set(p + "m_end", b.result.graph.num_edges());
        rep.set(p + "i_end", b.result.report.i_end);
      }
      rep.set("m_end", res.graph.num_edges());
      out = std::move(res.graph);
    } else {
      auto res = uh_sparsify(h, r, o.eps, cfg);
      add_schedule(rep, res.report);
      rep.set("m_end", res.graph.num_edges());
      bool ok = true;
      for (ArcIndex e = 0; e < res.graph.num_edges(); ++e) {
        ok = ok && res.graph.weight(e) ==
                       std::ldexp(h.weight(res.origin[e]), static_cast<int>(res.doublings[e]));
      }
      add_lineage_check(rep, ok);
      out = std::move(res.graph);
    }
  }
  if (!o.out.empty()) write_file(o.out, write(out));
  emit(rep, o.report);
  std::cerr << "sparsified " << *rep.get(is_directed ? "num_arcs" : "num_edges") << " -> "
            << *rep.get("m_end") << "\n";
  return 0;
}

// --- coreset -------------------------------------------------------------

int run_coreset(const std::string& input, std::size_t lambda, const std::string& out,
                const std::string& report) {
  const AnyHypergraph in = load(input);
  if (!std::holds_alternative<DirectedHypergraph>(in)) {
    throw InputError("coreset needs a directed hypergraph");
  }
  const auto& h = std::get<DirectedHypergraph>(in);
  const Coreset c = coreset_finder(h, lambda);
  const CoresetCheck check = verify_coreset(h, c);
  RunReport rep;
  rep.set("command", "coreset");
  describe(rep, in);
  rep.set("lambda", lambda);
  rep.set("coreset_size", c.selected.size());
  rep.set("size_bound", lambda * h.num_vertices() * h.num_vertices());
  rep.set("verified", check.ok);
  for (std::size_t i = 0; i < check.violations.size(); ++i) {
    rep.set("violation." + std::to_string(i), check.violations[i]);
  }
  if (!out.empty()) write_file(out, write(h.subgraph(c.selected)));
  emit(rep, report);
  return check.ok ? 0 : kVerifyFailed;
}

// --- spanner -------------------------------------------------------------

int run_spanner(const std::string& input, double stretch, std::size_t layers,
                const std::string& basis_name, const std::string& out,
                const std::string& report) {
  const AnyHypergraph in = load(input);
  if (!std::holds_alternative<UndirectedHypergraph>(in)) {
    throw InputError("spanner needs an undirected hypergraph");
  }
  const auto& h = std::get<UndirectedHypergraph>(in);
  const SpannerBasis basis = parse_basis(basis_name);
  const double k = stretch > 0.0 ? stretch : default_stretch(h.num_vertices());
  if (layers < 1) throw InputError("--layers must be >= 1");
  const SpannerBundle b = spanner_bundle(h, layers, k, basis);

  RunReport rep;
  rep.set("command", "spanner");
  describe(rep, in);
  rep.set("basis_stretch", k);
  rep.set("guaranteed_stretch", b.stretch);
  rep.set("layers", b.layers.size());
  bool ok = true;
  std::vector<ArcIndex> rest(h.num_edges());
  for (ArcIndex f = 0; f < rest.size(); ++f) rest[f] = f;
  for (std::size_t i = 0; i < b.layers.size(); ++i) {
    const auto& layer = b.layers[i];
    // layer i is checked against what the earlier layers left
    std::vector<ArcIndex> local, next;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (std::binary_search(layer.begin(), layer.end(), rest[j])) {
        local.push_back(j);
      } else {
        next.push_back(rest[j]);
      }
    }
    const StretchResult s = hyper_stretch_check(h.subgraph(rest), local, b.stretch);
    const std::string p = "layer." + std::to_string(i) + ".";
    rep.set(p + "size", layer.size());
    rep.set(p + "worst_stretch", s.worst_ratio);
    rep.set(p + "pass", s.pass);
    ok = ok && s.pass;
    rest = std::move(next);
  }
  rep.set("bundle_size", b.all().size());
  rep.set("pass", ok);
  if (!out.empty()) write_file(out, write(h.subgraph(b.all())));
  emit(rep, report);
  return ok ? 0 : kVerifyFailed;
}

// --- verify --------------------------------------------------------------

int run_verify(const std::string& a, const std::string& b, double eps, std::size_t probes,
               std::uint64_t seed, bool exhaustive, bool boolean,
               const std::string& report) {
  const AnyHypergraph h = load(a);
  const AnyHypergraph t = load(b);
  if (h.index() != t.index()) throw InputError("hypergraph kinds differ");
  RunReport rep;
  rep.set("command", "verify");
  describe(rep, h);
  rep.set("eps", eps);
  bool ok = true;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        const G& gt = std::get<G>(t);
        if (g.num_vertices() != gt.num_vertices()) throw InputError("vertex counts differ");
        if (probes > 0) {
          const auto kind = boolean ? ProbeKind::boolean : ProbeKind::gaussian;
          const ProbeResult p = spectral_probe(g, gt, probes, seed, kind);
          rep.set("probe_kind", boolean ? "boolean" : "gaussian");
          rep.set("probes", probes);
          rep.set("probe_seed", seed);
          rep.set("probes_used", p.used);
          rep.set("probes_skipped", p.skipped);
          rep.set("max_over", p.max_over);
          rep.set("max_under", p.max_under);
          rep.set("max_error", p.max_error());
          const bool pass = p.max_error() <= eps + kRatioSlack;
          rep.set("probe_pass", pass);
          ok = ok && pass;
        }
        if (exhaustive) {
          const CutCheckResult c = exhaustive_cut_check(g, gt, eps);
          rep.set("cuts", c.cuts);
          rep.set("cut_worst_error", c.worst_error);
          std::string set;
          for (VertexId v : c.worst_vertices()) set += (set.empty() ? "" : ",") + std::to_string(v);
          rep.set("cut_worst_set", set);
          rep.set("cut_pass", c.pass);
          ok = ok && c.pass;
        }
      },
      h);
  rep.set("pass", ok);
  emit(rep, report);
  std::cerr << (ok ? "within" : "outside") << " the eps window\n";
  return ok ? 0 : kVerifyFailed;
}

// --- stats ---------------------------------------------------------------

// Rebuilds per-round records from iter.<i>.<field> keys of a run report.
SparsifyReport read_trace(const std::string& path) {
  std::map<std::size_t, std::map<std::string, std::string>> rounds;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("iter.", 0) != 0) continue;
    const auto dot = line.find('.', 5);
    const auto eq = line.find('=');
    if (dot == std::string::npos || eq == std::string::npos || eq < dot) {
      throw InputError("bad trace line: " + line);
    }
    rounds[std::stoul(line.substr(5, dot - 5))][line.substr(dot + 1, eq - dot - 1)] =
        line.substr(eq + 1);
  }
  SparsifyReport s;
  for (auto& [i, f] : rounds) {
    IterationRecord r;
    r.m_in = std::stoul(f["m_in"]);
    r.eps_i = std::stod(f["eps_i"]);
    r.lambda_i = std::stoull(f["lambda_i"]);
    r.kept = std::stoul(f["kept"]);
    r.eligible = std::stoul(f["eligible"]);
    r.sampled = std::stoul(f["sampled"]);
    r.m_out = std::stoul(f["m_out"]);
    if (f.count("max_sampling_ratio")) r.max_sampling_ratio = std::stod(f["max_sampling_ratio"]);
    s.iterations.push_back(r);
  }
  return s;
}

int run_stats(const std::string& input, const std::string& trace,
              const std::string& trace_out, const std::string& report) {
  const AnyHypergraph h = load(input);
  RunReport rep;
  rep.set("command", "stats");
  describe(rep, h);
  std::map<std::size_t, std::size_t> sizes;
  std::visit(
      [&](const auto& g) {
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, DirectedHypergraph>) {
          for (ArcIndex f = 0; f < g.num_arcs(); ++f) {
            ++sizes[g.arc(f).tail.size() + g.arc(f).head.size()];
          }
        } else {
          for (ArcIndex f = 0; f < g.num_edges(); ++f) ++sizes[g.edge_size(f)];
        }
      },
      h);
  for (const auto& [s, c] : sizes) rep.set("size." + std::to_string(s), c);
  emit(rep, report);
  if (!trace.empty()) {
    const std::string table = iteration_table(read_trace(trace));
    if (trace_out.empty()) {
      std::cout << '\n' << table;
    } else {
      write_file(trace_out, table);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral sparsification of directed and undirected hypergraphs"};
  app.require_subcommand(1);

  std::uint64_t env_seed = 0;
  try {
    env_seed = default_seed();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  // gen
  GenOptions gen;
  gen.seed = env_seed;
  std::string family;
  auto* g = app.add_subcommand("gen", "Generate a hypergraph");
  g->add_option("family", family, "lower-bound | random-directed | random-undirected")
      ->required()
      ->check(CLI::IsMember({"lower-bound", "random-directed", "random-undirected"}));
  g->add_option("-n", gen.n, "Vertices (|U| for lower-bound)")->required();
  g->add_option("-m", gen.m, "Arcs or hyperedges");
  g->add_option("-r", gen.r, "Rank bound");
  g->add_option("--eps", gen.eps, "Lower-bound eps, of the form 1/(8q)");
  g->add_option("--wmin", gen.w_lo, "Smallest weight");
  g->add_option("--wmax", gen.w_hi, "Largest weight");
  g->add_option("--seed", gen.seed, "Seed (default $HGSPARSE_SEED or 0)");
  g->add_option("-o,--output", gen.out, "Output file (default stdout)");
  g->add_option("--report", gen.report, "Run report file");

  // sparsify
  SparsifyOptions sp;
  sp.seed = env_seed;
  std::uint64_t lambda = 0;
  auto* s = app.add_subcommand("sparsify", "Sparsify a hypergraph");
  s->add_option("input", sp.input)->required()->check(CLI::ExistingFile);
  auto* d_flag = s->add_flag("--directed", sp.directed, "Expect a directed hypergraph");
  s->add_flag("--undirected", sp.undirected, "Expect an undirected hypergraph")->excludes(d_flag);
  s->add_option("--eps", sp.eps, "Target accuracy in (0, 1)");
  s->add_option("--mode", sp.mode, "theory | practical");
  auto* lambda_opt = s->add_option("--lambda", lambda, "Per-round lambda (practical mode)");
  s->add_option("--seed", sp.seed, "Seed (default $HGSPARSE_SEED or 0)");
  s->add_option("--fault-k", sp.fault_k, "Extra bundle layers per round (undirected)");
  s->add_flag("--bucket", sp.bucket, "Bucket hyperedges by size (undirected)");
  s->add_option("-r", sp.r, "Size bound r (undirected; default rank)");
  s->add_option("--ca", sp.ca, "Coreset constant (directed)");
  s->add_option("--cc", sp.cc, "Loop stops once m_i < cc * m*");
  s->add_option("--c2", sp.c2, "Sampling constant (undirected)");
  s->add_option("--c3", sp.c3, "Spanner size constant (undirected)");
  s->add_option("--stretch", sp.stretch, "Basis-graph stretch (undirected; default log2 n)");
  s->add_option("--basis", sp.basis, "star | clique");
  s->add_flag("--check-soundness", sp.soundness, "Report the per-round sampling ratio");
  s->add_option("-o,--output", sp.out, "Output hypergraph file");
  s->add_option("--report", sp.report, "Run report file (default stdout)");

  // coreset
  std::string c_in, c_out, c_report;
  std::size_t c_lambda = 1;
  auto* c = app.add_subcommand("coreset", "Build and check a lambda-coreset");
  c->add_option("input", c_in)->required()->check(CLI::ExistingFile);
  c->add_option("--lambda", c_lambda, "lambda >= 1");
  c->add_option("-o,--output", c_out, "Write the coreset as a hypergraph");
  c->add_option("--report", c_report, "Run report file (default stdout)");

  // spanner
  std::string p_in, p_out, p_report, p_basis = "star";
  double p_stretch = 0.0;
  std::size_t p_layers = 1;
  auto* p = app.add_subcommand("spanner", "Build and check a hyperspanner bundle");
  p->add_option("input", p_in)->required()->check(CLI::ExistingFile);
  p->add_option("--stretch", p_stretch, "Basis-graph stretch (default log2 n)");
  p->add_option("--layers", p_layers, "Number of disjoint hyperspanners");
  p->add_option("--basis", p_basis, "star | clique");
  p->add_option("-o,--output", p_out, "Write the bundle as a hypergraph");
  p->add_option("--report", p_report, "Run report file (default stdout)");

  // verify
  std::string v_a, v_b, v_report;
  double v_eps = 0.5;
  std::size_t v_probes = 1000;
  std::uint64_t v_seed = env_seed;
  bool v_exhaustive = false, v_boolean = false;
  auto* v = app.add_subcommand("verify", "Measure how well one hypergraph approximates another");
  v->add_option("original", v_a)->required()->check(CLI::ExistingFile);
  v->add_option("sparsifier", v_b)->required()->check(CLI::ExistingFile);
  v->add_option("--eps", v_eps, "Accepted relative error");
  v->add_option("--probes", v_probes, "Random probes (0 disables)");
  v->add_option("--seed", v_seed, "Probe seed (default $HGSPARSE_SEED or 0)");
  v->add_flag("--exhaustive", v_exhaustive, "Also scan every cut (n <= 16)");
  v->add_flag("--boolean", v_boolean, "Probe with random 0/1 vectors");
  v->add_option("--report", v_report, "Run report file (default stdout)");

  // stats
  std::string t_in, t_trace, t_trace_out, t_report;
  auto* t = app.add_subcommand("stats", "Summarize a hypergraph");
  t->add_option("input", t_in)->required()->check(CLI::ExistingFile);
  t->add_option("--trace", t_trace, "Run report whose rounds to tabulate")
      ->check(CLI::ExistingFile);
  t->add_option("--trace-out", t_trace_out, "Tab-separated trace file (default stdout)");
  t->add_option("--report", t_report, "Run report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*g) {
      if (family != "lower-bound" && (gen.m == 0 || gen.r == 0)) {
        throw InputError("random families need -m and -r");
      }
      return run_gen(family, gen);
    }
    if (*s) {
      if (*lambda_opt) sp.lambda = lambda;
      return run_sparsify(sp);
    }
    if (*c) return run_coreset(c_in, c_lambda, c_out, c_report);
    if (*p) return run_spanner(p_in, p_stretch, p_layers, p_basis, p_out, p_report);
    if (*v) return run_verify(v_a, v_b, v_eps, v_probes, v_seed, v_exhaustive, v_boolean, v_report);
    if (*t) return run_stats(t_in, t_trace, t_trace_out, t_report);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
