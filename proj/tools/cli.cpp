#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "slr/constructions.hpp"
#include "slr/domination.hpp"
#include "slr/error.hpp"
#include "slr/json_io.hpp"
#include "slr/pipeline.hpp"
#include "slr/streamline.hpp"

namespace slr::cli {

namespace {

struct Config {
  std::string input;
  std::string out;
  std::string format;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RAMSEY_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("RAMSEY_BUDGET is not an integer: ") + env);
    }
  }
  return kDefaultBudget;
}

Json read_json(const std::string& path) {
  if (path.empty()) throw PreconditionError("an input file is required (--input)");
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  return Json::parse(in);
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw PreconditionError("cannot write " + cfg.out);
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw PreconditionError("cannot write " + path);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_json(const Config& cfg) {
  if (!cfg.format.empty() && cfg.format != "json")
    throw PreconditionError("this command only emits JSON (--format " + cfg.format + ")");
}

// A bare object or one wrapped under the given key.
const Json& unwrap(const Json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

std::vector<Rational> parse_rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(Rational::parse(x));
  return out;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  Vertex n = 0;
  unsigned k = 1;
  unsigned q = 0;
  std::vector<std::string> s;
  bool description = false;
  unsigned d = 1, m = 1, r = 3, max_entry = 10;
};

GrowthParams growth_params(const ConstructArgs& a, Vertex n, bool& scheduled) {
  scheduled = a.s.empty();
  if (scheduled) {
    if (a.q == 0) throw PreconditionError("growth: give --s values or --q for the default schedule");
    return growth_schedule(a.q, Integer(n));
  }
  return GrowthParams{parse_rationals(a.s)};
}

Json growth_metadata(const GrowthParams& p, Vertex n, bool scheduled) {
  const GrowthBounds b = growth_bounds(p, n);
  return Json{{"n", n},
              {"q", p.q()},
              {"r", p.r()},
              {"clique_bound", b.clique_bound},
              {"independence_bound", b.independence_bound},
              {"proven_regime", b.proven_regime},
              {"standing_assumption", growth_standing_assumption(p, n)},
              {"rounded_schedule", scheduled}};
}

void cmd_construct(const Config& cfg, const ConstructArgs& a, std::ostream& out) {
  require_json(cfg);
  Json j;
  if (a.kind == "shift3") {
    j = {{"kind", "shift3"}, {"metadata", {{"n", a.n}, {"bound", shift3_bound(a.n)}}}};
    if (a.description) j["description"] = shift3_description(a.n);
    else j["hypergraph"] = hypergraph_to_json(shift3_hypergraph(a.n), cfg.budget);
  } else if (a.kind == "growth") {
    bool scheduled = false;
    const GrowthParams p = growth_params(a, a.n, scheduled);
    j = {{"kind", "growth"}, {"params", p}, {"metadata", growth_metadata(p, a.n, scheduled)}};
    if (a.description) j["description"] = growth_description(p, a.n);
    else j["hypergraph"] = hypergraph_to_json(growth_hypergraph(p, a.n), cfg.budget);
  } else if (a.kind == "stepup") {
    const OrderedHypergraph g = hypergraph_from_json(unwrap(read_json(cfg.input), "hypergraph"));
    const OrderedHypergraph h = step_up(g);
    const std::size_t omega = brute_omega(g, cfg.budget).size;
    const std::size_t alpha = brute_alpha(g, cfg.budget).size;
    j = {{"kind", "stepup"},
         {"hypergraph", hypergraph_to_json(h, cfg.budget)},
         {"metadata",
          {{"graph_vertices", g.n()},
           {"omega_bound", omega + 1},
           {"alpha_bound", integer_to_json(pow(Integer(static_cast<unsigned long>(g.n())), alpha) + 1)}}}};
  } else if (a.kind == "incidence") {
    const IncidenceGraph g = incidence_graph(a.k);
    Json inc = Json::array();
    for (const auto& [p, l] : g.incidences) inc.push_back({p.first, p.second, l.first, l.second});
    j = {{"kind", "incidence"},
         {"hypergraph", hypergraph_to_json(g.graph, cfg.budget)},
         {"incidences", inc},
         {"metadata",
          {{"k", a.k},
           {"points", g.points},
           {"lines", g.lines},
           {"m", g.m},
           {"vertices", g.graph.n()},
           {"omega", 2},
           {"alpha_bound", 2 * g.m}}}};
  } else if (a.kind == "lowerbound") {
    const LowerBoundConstruction c = lower_bound_3uniform(a.k, cfg.budget);
    j = {{"kind", "lowerbound"},
         {"hypergraph", hypergraph_to_json(c.hypergraph, cfg.budget)},
         {"metadata",
          {{"k", a.k},
           {"graph_vertices", c.base.graph.n()},
           {"omega_bound", c.omega_bound},
           {"alpha_bound", integer_to_json(c.alpha_bound)}}}};
  } else if (a.kind == "random") {
    j = {{"kind", "random"},
         {"seed", cfg.seed},
         {"description", random_description(a.d, a.m, a.r, a.n, a.max_entry, cfg.seed)}};
  } else {
    throw PreconditionError("unknown construction: " + a.kind);
  }
  emit(cfg, out, dump(j));
}

void cmd_decompose(const Config& cfg, std::ostream& out) {
  require_json(cfg);
  const auto desc = unwrap(read_json(cfg.input), "description").get<LinearDescription>();
  const PrimitiveDecomposition dec = decompose_primitive(desc);
  Json w = Json::array();
  for (const auto& m : dec.witnesses) w.push_back(matrix_to_json(m));
  emit(cfg, out, dump({{"witnesses", w}, {"combiner", {{"arity", dec.combiner.arity()}, {"table", dec.combiner.table()}}}}));
}

struct StreamlineArgs {
  std::size_t width = 0;
  std::string delta;
  bool perturb = false;
  bool guaranteed = false;
};

template <class T>
void streamline_stages(const Matrix<T>& m0, const StreamlineArgs& a, std::uint64_t budget, ExtractionCertificate& cert,
                       Json& widths) {
  const RowMonotoneResult mono = row_monotone_submatrix(m0);
  cert.stages.push_back({StageRole::Monotone, mono.columns, mono.directions, {}, {}, {}, {}, {}});
  const Matrix<T> m1 = m0.select_columns(mono.columns);
  CupcapResult cc;
  if (a.width == 0) {
    cc = widest_cupcap(m1, budget);
  } else if (a.guaranteed) {
    cc = cupcap_submatrix(m1, a.width);
  } else {
    auto found = cupcap_search(m1, a.width, budget);
    if (!found) throw PreconditionError("cupcap extraction: no cupcap submatrix of the requested width found");
    cc = *found;
  }
  cert.stages.push_back({StageRole::Cupcap, cc.columns, cc.directions, cc.shapes, {}, {}, {}, {}});
  const Matrix<T> m2 = m1.select_columns(cc.columns);
  widths = {{"n", m0.cols()}, {"monotone", m1.cols()}, {"cupcap", m2.cols()}};
  if (a.delta.empty()) return;
  const Rational delta = Rational::parse(a.delta);
  CertificateStage exp{StageRole::ExpSample, {}, {}, {}, delta, {}, {}, {}};
  for (std::size_t i = 0; i < m2.rows(); ++i) {
    auto s = exponential_shift(m2.row(i), delta);
    exp.columns = s.sample;
    exp.directions.push_back(s.direction);
    exp.shapes.push_back(s.shape);
    exp.shift_sources.push_back(s.shift_source);
    if constexpr (std::is_same_v<T, PerturbedValue>) exp.shift_values.push_back(s.shift.value);
    else exp.shift_values.push_back(s.shift);
    exp.types.push_back(s.type);
  }
  widths["sample"] = exp.columns.size();
  cert.stages.push_back(std::move(exp));
}

void cmd_streamline(const Config& cfg, const StreamlineArgs& a, std::ostream& out) {
  require_json(cfg);
  const Matrix<Rational> m = rational_matrix_from_json(unwrap(read_json(cfg.input), "matrix"));
  ExtractionCertificate cert;
  Json widths;
  if (a.perturb) streamline_stages(perturb_matrix(m), a, cfg.budget, cert, widths);
  else streamline_stages(m, a, cfg.budget, cert, widths);
  const Json j = {{"matrix", matrix_to_json(m)},
                  {"perturbed", a.perturb},
                  {"certificate", cert},
                  {"columns", cert.composed(m.cols())},
                  {"widths", widths},
                  {"verified", true}};
  if (a.perturb) verify_stages(perturb_matrix(m), cert);
  else verify_stages(m, cert);
  emit(cfg, out, dump(j));
}

std::vector<DominationInstance> read_instances(const Json& j) {
  return unwrap(j, "instances").get<std::vector<DominationInstance>>();
}

void cmd_dominate(const Config& cfg, std::ostream& out) {
  require_json(cfg);
  const auto instances = read_instances(read_json(cfg.input));
  DominationOptions opts;
  opts.fallback_budget = cfg.budget;
  const DominationResult res = domination_clique(instances, opts);
  Json j = res;
  j["instances"] = instances;
  emit(cfg, out, dump(j));
}

PipelineOptions pipeline_options(const Config& cfg) {
  PipelineOptions o;
  o.budget = cfg.budget;
  return o;
}

void cmd_pipeline(const Config& cfg, const std::string& certificate_path, std::ostream& out) {
  require_json(cfg);
  const Json in = read_json(cfg.input);
  Json j;
  if (in.is_array() || (in.is_object() && in.contains("descriptions"))) {
    const auto descs = unwrap(in, "descriptions").get<std::vector<LinearDescription>>();
    const MulticolorResult res = multicolor_extract(descs, pipeline_options(cfg));
    j = {{"descriptions", descs},
         {"color", res.color},
         {"coverage_checked", res.coverage_checked},
         {"core", res.core},
         {"verified", true}};
  } else {
    const auto desc = unwrap(in, "description").get<LinearDescription>();
    const PipelineResult res = semilinear_ramsey_extract(desc, pipeline_options(cfg));
    j = res;
    j["description"] = desc;
    j["verified"] = true;
  }
  if (!certificate_path.empty()) write_file(certificate_path, dump(j));
  emit(cfg, out, dump(j));
}

void cmd_oracle(const Config& cfg, const std::string& which, std::ostream& out) {
  require_json(cfg);
  const OrderedHypergraph h = hypergraph_from_json(unwrap(read_json(cfg.input), "hypergraph"));
  Json j = Json::object();
  if (which != "alpha") {
    const OracleResult w = brute_omega(h, cfg.budget);
    j["omega"] = w.size;
    j["omega_witness"] = w.witness;
  }
  if (which != "omega") {
    const OracleResult a = brute_alpha(h, cfg.budget);
    j["alpha"] = a.size;
    j["alpha_witness"] = a.witness;
  }
  emit(cfg, out, dump(j));
}

void check_in_sample(const ExtractionCertificate& cert, std::size_t n, const std::vector<Vertex>& vertices) {
  const auto original = cert.composed(n);
  for (Vertex v : vertices)
    if (v < 1 || !std::binary_search(original.begin(), original.end(), static_cast<std::size_t>(v) - 1))
      throw VerificationFailed("vertex outside the certified sample");
}

std::string verify_document(const Json& j, std::uint64_t budget) {
  if (j.contains("core") && j.contains("description")) {
    verify_pipeline_result(j.at("description").get<LinearDescription>(), j.get<PipelineResult>(), budget);
    return "pipeline";
  }
  if (j.contains("core") && j.contains("descriptions")) {
    const auto descs = j.at("descriptions").get<std::vector<LinearDescription>>();
    const auto core = j.at("core").get<CoreResult>();
    const std::size_t color = j.at("color").get<std::size_t>();
    if (descs.empty() || color >= descs.size()) throw VerificationFailed("colour index out of range");
    std::vector<Matrix<Rational>> witnesses;
    for (const auto& d : descs)
      for (auto& w : decompose_primitive(d).witnesses) witnesses.push_back(std::move(w));
    verify_certificate(witnesses, descs.front().r, core.certificate);
    check_in_sample(core.certificate, descs.front().n(), core.vertices);
    verify_homogeneous(realize(descs[color]), core.vertices, HomogeneousKind::Clique, budget);
    return "multicolor";
  }
  if (j.contains("C") && j.contains("instances")) {
    const auto instances = read_instances(j);
    const auto clique = j.at("C").get<std::vector<Vertex>>();
    const auto colors = j.at("colors").get<std::vector<Color>>();
    if (colors.size() != instances.size()) throw VerificationFailed("one colour per instance expected");
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (std::size_t v = 0; v < clique.size(); ++v)
        if (clique[v] < 1 || clique[v] > instances[i].n() || (v > 0 && clique[v - 1] >= clique[v]))
          throw VerificationFailed("clique vertices out of range or not increasing");
      const auto c = is_monochromatic(domination_hypergraph(instances[i]), clique);
      if (!c || *c != colors[i]) throw VerificationFailed("C is not monochromatic in the claimed colour");
    }
    return "domination";
  }
  if (j.contains("certificate") && j.contains("matrix")) {
    const Matrix<Rational> m = rational_matrix_from_json(j.at("matrix"));
    const auto cert = j.at("certificate").get<ExtractionCertificate>();
    if (j.value("perturbed", false)) verify_stages(perturb_matrix(m), cert);
    else verify_stages(m, cert);
    if (j.contains("columns") && j.at("columns").get<std::vector<std::size_t>>() != cert.composed(m.cols()))
      throw VerificationFailed("columns do not match the certificate");
    return "streamline";
  }
  throw PreconditionError("verify: unrecognized document");
}

void cmd_verify(const Config& cfg, std::ostream& out) {
  require_json(cfg);
  const std::string type = verify_document(read_json(cfg.input), cfg.budget);
  emit(cfg, out, dump({{"verified", true}, {"type", type}}));
}

struct BenchArgs {
  std::string family = "shift3";
  unsigned from = 6, to = 10;
  std::vector<std::string> s;
  unsigned d = 1, m = 1, r = 3;
};

void cmd_bench(const Config& cfg, const BenchArgs& a, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format != "csv" && format != "json") throw PreconditionError("unknown format: " + format);
  if (a.from > a.to || a.to > 24) throw PreconditionError("bench: need from <= to <= 24");
  std::vector<std::string> cols = {"family", "n",        "log2_n", "r",      "k",      "beta",
                                   "status", "kind",     "size",   "monotone", "cupcap", "sample",
                                   "below_threshold", "clique_bound", "independence_bound"};
  std::vector<std::vector<std::string>> rows;
  for (unsigned e = a.from; e <= a.to; ++e) {
    const Vertex n = Vertex{1} << e;
    LinearDescription desc;
    std::string clique_bound, indep_bound;
    if (a.family == "shift3") {
      desc = shift3_description(n);
    } else if (a.family == "growth") {
      const GrowthParams p{parse_rationals(a.s)};
      desc = growth_description(p, n);
      const GrowthBounds b = growth_bounds(p, n);
      clique_bound = b.clique_bound.str();
      indep_bound = b.independence_bound.str();
    } else if (a.family == "random") {
      desc = random_description(a.d, a.m, a.r, n, 10, cfg.seed + e);
    } else {
      throw PreconditionError("unknown bench family: " + a.family);
    }
    const unsigned k = 2 * static_cast<unsigned>(desc.functions.size());
    const unsigned rk = desc.r * k;
    const std::string beta = k == 0 ? "" : Rational(Integer(1), Integer(rk * (rk - k + 1))).str();
    std::vector<std::string> row = {a.family, std::to_string(n), std::to_string(e), std::to_string(desc.r),
                                    std::to_string(k), beta};
    try {
      const PipelineResult res = semilinear_ramsey_extract(desc, pipeline_options(cfg));
      const auto& w = res.core.widths;
      for (const std::string& x :
           {std::string("ok"), to_string(res.kind), std::to_string(res.vertices().size()), std::to_string(w.monotone),
            std::to_string(w.cupcap), std::to_string(w.sample), std::string(res.core.below_threshold ? "1" : "0")})
        row.push_back(x);
    } catch (const PreconditionError&) {
      for (const char* x : {"insufficient-width", "", "", "", "", "", ""}) row.emplace_back(x);
    }
    row.push_back(clique_bound);
    row.push_back(indep_bound);
    rows.push_back(std::move(row));
  }
  std::ostringstream text;
  if (format == "csv") {
    for (std::size_t i = 0; i < cols.size(); ++i) text << (i ? "," : "") << cols[i];
    text << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << row[i];
      text << "\n";
    }
  } else {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json o;
      for (std::size_t i = 0; i < cols.size(); ++i) o[cols[i]] = row[i];
      arr.push_back(std::move(o));
    }
    text << dump(arr);
  }
  emit(cfg, out, text.str());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-linear hypergraph Ramsey toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::uint64_t budget = 0;
  try {
    cfg.budget = default_budget();
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  budget = cfg.budget;
  app.add_option("--input,--hypergraph,--desc,--instances", cfg.input, "Input JSON file");
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--seed", cfg.seed, "Seed for randomized generation");
  app.add_option("--budget", budget, "Work budget (default RAMSEY_BUDGET or 200000000)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Generate a construction");
  construct->add_option("kind", ca.kind, "shift3|growth|stepup|incidence|lowerbound|random")->required();
  construct->add_option("--n", ca.n, "Number of vertices");
  construct->add_option("--k", ca.k, "Grid parameter");
  construct->add_option("--q", ca.q, "Use the default growth schedule with this q");
  construct->add_option("--s", ca.s, "Growth parameters s_1 > ... > s_q");
  construct->add_flag("--description", ca.description, "Emit the linear description instead of the edge list");
  construct->add_option("--d", ca.d, "Dimension (random)");
  construct->add_option("--m", ca.m, "Number of linear functions (random)");
  construct->add_option("--r", ca.r, "Uniformity (random)");
  construct->add_option("--max", ca.max_entry, "Bound on numerators and denominators (random)");

  auto* decompose = app.add_subcommand("decompose", "Split a description into primitive witnesses");

  StreamlineArgs sa;
  auto* streamline = app.add_subcommand("streamline", "Monotone, cupcap and exponential extraction on a matrix");
  streamline->add_option("--width", sa.width, "Cupcap width (default: widest found)");
  streamline->add_option("--delta", sa.delta, "Run the exponential shift with this delta");
  streamline->add_flag("--perturb", sa.perturb, "Break ties with an infinitesimal perturbation");
  streamline->add_flag("--guaranteed", sa.guaranteed, "Require the guaranteed column count for --width");

  auto* dominate = app.add_subcommand("dominate", "Common monochromatic clique of domination hypergraphs");

  std::string certificate_path;
  auto* pipeline = app.add_subcommand("pipeline", "Clique or independent set of a semi-linear hypergraph");
  pipeline->add_option("--emit-certificate", certificate_path, "Also write the result to this file");

  std::string which = "both";
  auto* oracle = app.add_subcommand("oracle", "Exact clique and independence numbers");
  oracle->add_option("--only", which, "omega|alpha|both")->check(CLI::IsMember({"omega", "alpha", "both"}));

  auto* verify = app.add_subcommand("verify", "Re-check an emitted result");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Sweep N and tabulate observed sizes");
  bench->add_option("--family", ba.family, "shift3|growth|random");
  bench->add_option("--from", ba.from, "Smallest log2 N");
  bench->add_option("--to", ba.to, "Largest log2 N");
  bench->add_option("--s", ba.s, "Growth parameters");
  bench->add_option("--d", ba.d, "Dimension (random)");
  bench->add_option("--m", ba.m, "Number of linear functions (random)");
  bench->add_option("--r", ba.r, "Uniformity (random)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.budget = budget;

  try {
    if (*construct) cmd_construct(cfg, ca, out);
    else if (*decompose) cmd_decompose(cfg, out);
    else if (*streamline) cmd_streamline(cfg, sa, out);
    else if (*dominate) cmd_dominate(cfg, out);
    else if (*pipeline) cmd_pipeline(cfg, certificate_path, out);
    else if (*oracle) cmd_oracle(cfg, which, out);
    else if (*verify) cmd_verify(cfg, out);
    else if (*bench) cmd_bench(cfg, ba, out);
    return 0;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OracleBudgetExceeded& e) {
    err << "error: work budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace slr::cli
