#include "slr/json_io.hpp"

#include <limits>

#include "slr/error.hpp"

namespace slr {

namespace {

template <class T>
std::vector<std::string> names(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("JSON: missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

void to_json(Json& j, const Rational& x) { j = x.str(); }

void from_json(const Json& j, Rational& x) {
  if (j.is_string()) x = Rational::parse(j.get<std::string>());
  else if (j.is_number_integer()) x = Rational(j.get<long long>());
  else throw PreconditionError("JSON: rational must be a string or an integer");
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw PreconditionError("JSON: not an integer: " + j.get<std::string>());
    return v;
  }
  throw PreconditionError("JSON: integer must be a number or a string");
}

Json matrix_to_json(const Matrix<Rational>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(std::vector<Rational>(m.row(i).begin(), m.row(i).end()));
  return out;
}

Matrix<Rational> rational_matrix_from_json(const Json& j) {
  return Matrix<Rational>::from_rows(j.get<std::vector<std::vector<Rational>>>());
}

Json matrix_to_json(const Matrix<Integer>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& x : m.row(i)) row.push_back(integer_to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix<Integer> integer_matrix_from_json(const Json& j) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    std::vector<Integer> r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    rows.push_back(std::move(r));
  }
  return Matrix<Integer>::from_rows(rows);
}

void to_json(Json& j, const Threshold& h) {
  j = h.is_minus_infinity() ? Json("-inf") : integer_to_json(h.value());
}

void from_json(const Json& j, Threshold& h) {
  if (j.is_string()) h = Threshold::parse(j.get<std::string>());
  else h = Threshold(integer_from_json(j));
}

void to_json(Json& j, const LinearFunction& f) { j = Json{{"a", f.a}, {"b", f.b}}; }

void from_json(const Json& j, LinearFunction& f) {
  f.a = field(j, "a").get<std::vector<std::vector<Rational>>>();
  f.b = j.contains("b") ? j.at("b").get<Rational>() : Rational(0);
}

void to_json(Json& j, const SignTable& t) {
  j = Json{{"arity", t.arity()}, {"table", t.table()}};
}

void from_json(const Json& j, SignTable& t) {
  const unsigned arity = field(j, "arity").get<unsigned>();
  const Json& table = field(j, "table");
  if (table.is_boolean()) t = SignTable::constant(arity, table.get<bool>());
  else t = SignTable(arity, table.get<std::vector<bool>>());
}

void to_json(Json& j, const LinearDescription& d) {
  j = Json{{"d", d.d}, {"r", d.r}, {"points", d.points}, {"functions", d.functions}, {"phi", d.phi}};
}

void from_json(const Json& j, LinearDescription& d) {
  d.d = field(j, "d").get<unsigned>();
  d.r = field(j, "r").get<unsigned>();
  d.points = field(j, "points").get<std::vector<Point>>();
  d.functions = field(j, "functions").get<std::vector<LinearFunction>>();
  d.phi = field(j, "phi").get<SignTable>();
  d.validate();
}

void to_json(Json& j, const PolynomialFunction& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.poly.terms()) terms.push_back(Json{{"exponents", e}, {"coef", c}});
  j = Json{{"dimension", f.dimension}, {"arity", f.arity}, {"terms", terms}};
}

void from_json(const Json& j, PolynomialFunction& f) {
  f.dimension = field(j, "dimension").get<unsigned>();
  f.arity = field(j, "arity").get<unsigned>();
  f.poly = Polynomial(static_cast<std::size_t>(f.dimension) * f.arity);
  for (const auto& t : field(j, "terms"))
    f.poly.add_term(field(t, "exponents").get<std::vector<unsigned>>(), field(t, "coef").get<Rational>());
}

void to_json(Json& j, const SemialgebraicDescription& d) {
  j = Json{{"d", d.d}, {"r", d.r}, {"points", d.points}, {"functions", d.functions}, {"phi", d.phi}};
}

void from_json(const Json& j, SemialgebraicDescription& d) {
  d.d = field(j, "d").get<unsigned>();
  d.r = field(j, "r").get<unsigned>();
  d.points = field(j, "points").get<std::vector<Point>>();
  d.functions = field(j, "functions").get<std::vector<PolynomialFunction>>();
  d.phi = field(j, "phi").get<SignTable>();
  d.validate();
}

Json hypergraph_to_json(const OrderedHypergraph& h, std::uint64_t budget) {
  return Json{{"n", h.n()}, {"r", h.r()}, {"edges", h.edges(budget)}};
}

OrderedHypergraph hypergraph_from_json(const Json& j) {
  return OrderedHypergraph::from_edges(field(j, "n").get<Vertex>(), field(j, "r").get<unsigned>(),
                                       field(j, "edges").get<std::vector<Tuple>>());
}

void to_json(Json& j, const DominationInstance& inst) { j = Json{{"P", matrix_to_json(inst.P)}, {"h", inst.h}}; }

void from_json(const Json& j, DominationInstance& inst) {
  inst.P = integer_matrix_from_json(field(j, "P"));
  inst.h = field(j, "h").get<Threshold>();
}

void to_json(Json& j, const DominationStep& s) {
  j = Json{{"kind", s.kind},
           {"instance", s.instance},
           {"rows", s.rows},
           {"columns_before", s.columns_before},
           {"columns_after", s.columns_after}};
}

void from_json(const Json& j, DominationStep& s) {
  s.kind = field(j, "kind").get<std::string>();
  s.instance = field(j, "instance").get<std::size_t>();
  s.rows = field(j, "rows").get<std::vector<std::size_t>>();
  s.columns_before = field(j, "columns_before").get<std::size_t>();
  s.columns_after = field(j, "columns_after").get<std::size_t>();
}

void to_json(Json& j, const DominationResult& r) {
  j = Json{{"C", r.clique},
           {"colors", r.colors},
           {"trace", r.trace},
           {"below_threshold", r.below_threshold},
           {"recursion_size", r.recursion_size},
           {"verified", true}};
}

void to_json(Json& j, const CertificateStage& s) {
  std::vector<std::string> types;
  for (const auto& t : s.types) types.push_back(t.str());
  j = Json{{"role", to_string(s.role)},
           {"columns", s.columns},
           {"directions", names(s.directions)},
           {"shapes", names(s.shapes)},
           {"delta", s.delta},
           {"shift_sources", s.shift_sources},
           {"shift_values", s.shift_values},
           {"types", types}};
}

void from_json(const Json& j, CertificateStage& s) {
  s.role = parse_stage_role(field(j, "role").get<std::string>());
  s.columns = field(j, "columns").get<std::vector<std::size_t>>();
  s.directions.clear();
  for (const auto& d : j.value("directions", Json::array())) s.directions.push_back(parse_direction(d.get<std::string>()));
  s.shapes.clear();
  for (const auto& d : j.value("shapes", Json::array())) s.shapes.push_back(parse_shape(d.get<std::string>()));
  s.delta = j.contains("delta") ? j.at("delta").get<Rational>() : Rational(0);
  s.shift_sources = j.value("shift_sources", std::vector<std::size_t>{});
  s.shift_values = j.contains("shift_values") ? j.at("shift_values").get<std::vector<Rational>>() : std::vector<Rational>{};
  s.types.clear();
  for (const auto& t : j.value("types", Json::array())) s.types.push_back(ExpType::parse(t.get<std::string>()));
}

void to_json(Json& j, const ExtractionCertificate& c) { j = Json{{"stages", c.stages}}; }

void from_json(const Json& j, ExtractionCertificate& c) {
  c.stages = field(j, "stages").get<std::vector<CertificateStage>>();
}

void to_json(Json& j, const BlockData& b) {
  j = Json{{"q_signs", b.q_signs}, {"S", b.s}, {"h", b.h}, {"L", matrix_to_json(b.L)}};
}

void from_json(const Json& j, BlockData& b) {
  b.q_signs = field(j, "q_signs").get<std::vector<int>>();
  b.s = field(j, "S").get<Rational>();
  b.h = field(j, "h").get<Threshold>();
  b.L = integer_matrix_from_json(field(j, "L"));
}

void to_json(Json& j, const StageWidths& w) {
  j = Json{{"n", w.n}, {"monotone", w.monotone}, {"cupcap", w.cupcap}, {"sample", w.sample}, {"clique", w.clique}};
}

void from_json(const Json& j, StageWidths& w) {
  w.n = field(j, "n").get<std::size_t>();
  w.monotone = field(j, "monotone").get<std::size_t>();
  w.cupcap = field(j, "cupcap").get<std::size_t>();
  w.sample = field(j, "sample").get<std::size_t>();
  w.clique = field(j, "clique").get<std::size_t>();
}

void to_json(Json& j, const CoreResult& c) {
  j = Json{{"vertices", c.vertices},
           {"certificate", c.certificate},
           {"domination_trace", c.domination_trace},
           {"domination_colors", c.domination_colors},
           {"blocks", c.blocks},
           {"iota", c.iota},
           {"widths", c.widths},
           {"below_threshold", c.below_threshold}};
}

void from_json(const Json& j, CoreResult& c) {
  c.vertices = field(j, "vertices").get<std::vector<Vertex>>();
  c.certificate = field(j, "certificate").get<ExtractionCertificate>();
  c.domination_trace = j.value("domination_trace", std::vector<DominationStep>{});
  c.domination_colors = j.value("domination_colors", std::vector<Color>{});
  c.blocks = j.contains("blocks") ? j.at("blocks").get<std::vector<BlockData>>() : std::vector<BlockData>{};
  c.iota = j.contains("iota") ? j.at("iota").get<Rational>() : Rational(0);
  if (j.contains("widths")) c.widths = j.at("widths").get<StageWidths>();
  c.below_threshold = j.value("below_threshold", false);
}

void to_json(Json& j, const PipelineResult& r) {
  j = Json{{"kind", to_string(r.kind)}, {"core", r.core}};
}

void from_json(const Json& j, PipelineResult& r) {
  r.kind = parse_kind(field(j, "kind").get<std::string>());
  r.core = field(j, "core").get<CoreResult>();
}

void to_json(Json& j, const GrowthParams& p) { j = Json{{"s", p.s}}; }

void from_json(const Json& j, GrowthParams& p) { p.s = field(j, "s").get<std::vector<Rational>>(); }

}  // namespace slr
