#include "slr/pipeline.hpp"

#include <algorithm>
#include <type_traits>
#include <utility>

#include "slr/error.hpp"

namespace slr {

std::string to_string(HomogeneousKind k) { return k == HomogeneousKind::Clique ? "clique" : "independent"; }

HomogeneousKind parse_kind(const std::string& text) {
  if (text == "clique") return HomogeneousKind::Clique;
  if (text == "independent") return HomogeneousKind::Independent;
  throw std::invalid_argument("unknown kind: " + text);
}

namespace {

Matrix<PerturbedValue> perturbed_stack(const std::vector<Matrix<Rational>>& witnesses) {
  return perturb_matrix(stack(witnesses));
}

Integer denominator_lcm(const std::vector<Matrix<Rational>>& witnesses) {
  Integer d = 1;
  for (const auto& w : witnesses)
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (const Rational& x : w.row(i)) {
        const Integer den = x.denominator();
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
      }
  return d;
}

// Delta^-K with Delta^K > 64 * rows * Delta * D. Small enough that every sign
// the argument relies on is the same before and after substitution.
Rational choose_iota(const Integer& delta, std::size_t rows, const Integer& d) {
  const Integer bound = Integer(64UL) * static_cast<unsigned long>(rows) * delta * d;
  Integer p = 1;
  while (p <= bound) p *= delta;
  return Rational(Integer(1), p);
}

std::vector<Vertex> prefix_within_budget(Vertex n, unsigned r, std::uint64_t budget) {
  Vertex c = 0;
  while (c < n && binomial_saturating(c + 1, r) <= budget) ++c;
  std::vector<Vertex> out(c);
  for (Vertex i = 0; i < c; ++i) out[i] = i + 1;
  return out;
}

void check_homogeneous_parts(const std::vector<Matrix<Rational>>& witnesses, std::span<const Vertex> c, unsigned r,
                             std::uint64_t budget) {
  if (c.size() < r) return;
  if (binomial_saturating(c.size(), r) * std::max<std::size_t>(witnesses.size(), 1) > budget)
    throw OracleBudgetExceeded("homogeneity check of primitive parts exceeds the work budget");
  for (const auto& w : witnesses) {
    std::optional<bool> first;
    for_each_subset(c, r, [&](std::span<const Vertex> t) {
      const bool e = primitive_edge(w, t);
      if (!first) first = e;
      if (*first != e) throw InternalError("extracted set is not homogeneous in a primitive part");
      return true;
    });
  }
}

}  // namespace

CoreResult streamline_and_dominate(const std::vector<Matrix<Rational>>& witnesses, Vertex n, unsigned r,
                                   const PipelineOptions& options) {
  CoreResult out;
  out.widths.n = n;
  if (witnesses.empty()) {
    out.vertices = prefix_within_budget(n, r, options.budget);
    out.widths.monotone = out.widths.cupcap = out.widths.sample = n;
    out.widths.clique = out.vertices.size();
    out.iota = Rational(0);
    return out;
  }
  for (const auto& w : witnesses)
    if (w.rows() != r || w.cols() != n) throw PreconditionError("pipeline: witness blocks must be r x N");

  const Matrix<PerturbedValue> m0 = perturbed_stack(witnesses);
  const std::size_t rows = m0.rows();

  const RowMonotoneResult mono = row_monotone_submatrix(m0);
  out.certificate.stages.push_back({StageRole::Monotone, mono.columns, mono.directions, {}, {}, {}, {}, {}});
  const Matrix<PerturbedValue> m1 = m0.select_columns(mono.columns);
  out.widths.monotone = m1.cols();

  const CupcapResult cc = widest_cupcap(m1, options.cupcap_budget);
  out.certificate.stages.push_back({StageRole::Cupcap, cc.columns, cc.directions, cc.shapes, {}, {}, {}, {}});
  const Matrix<PerturbedValue> m2 = m1.select_columns(cc.columns);
  out.widths.cupcap = m2.cols();

  const Rational delta(2 * static_cast<long>(r));
  const unsigned z = exponential_stride(delta);
  if (m2.cols() < 2 * static_cast<std::size_t>(z) + 1)
    throw PreconditionError("insufficient width for the exponential shift: cupcap width " +
                            std::to_string(m2.cols()) + " < " + std::to_string(2 * z + 1) +
                            " (cup-cap extraction found too few columns)");

  CertificateStage exp{StageRole::ExpSample, {}, {}, {}, delta, {}, {}, {}};
  std::vector<PerturbedValue> shifts;
  for (std::size_t i = 0; i < rows; ++i) {
    auto s = exponential_shift(m2.row(i), delta);
    if (i == 0) exp.columns = s.sample;
    exp.directions.push_back(s.direction);
    exp.shapes.push_back(s.shape);
    exp.shift_sources.push_back(s.shift_source);
    exp.shift_values.push_back(s.shift.value);
    exp.types.push_back(s.type);
    shifts.push_back(s.shift);
  }
  const std::vector<std::size_t> sample = exp.columns;
  out.certificate.stages.push_back(exp);
  const std::size_t n1 = sample.size();
  out.widths.sample = n1;

  out.iota = choose_iota(delta.numerator(), rows, denominator_lcm(witnesses));
  const Integer base = delta.numerator();
  std::vector<DominationInstance> instances;
  for (std::size_t l = 0; l < witnesses.size(); ++l) {
    BlockData block;
    block.L = Matrix<Integer>(r, n1);
    Rational s_sum;
    for (unsigned i = 0; i < r; ++i) {
      const std::size_t row = l * r + i;
      const Rational shift = shifts[row].instantiate(out.iota);
      s_sum += shift;
      std::vector<Rational> q(n1);
      for (std::size_t j = 0; j < n1; ++j) q[j] = m2(row, sample[j]).instantiate(out.iota) + shift;
      if (!is_exponential(std::span<const Rational>(q), delta, exp.types[row]))
        throw InternalError("pipeline: substituted sample row is no longer exponential");
      block.q_signs.push_back(q.front().sign());
      for (std::size_t j = 0; j < n1; ++j) block.L(i, j) = Integer(floor_log(base, q[j].abs()));
    }
    block.s = s_sum;
    block.h = s_sum.is_zero() ? Threshold::minus_infinity() : Threshold(Integer(floor_log(base, s_sum.abs()) - 2));
    instances.push_back({block.L, block.h});
    out.blocks.push_back(std::move(block));
  }

  DominationResult dom = domination_clique(instances, options.domination);
  out.domination_trace = std::move(dom.trace);
  out.domination_colors = std::move(dom.colors);
  out.below_threshold = dom.below_threshold;

  const std::vector<std::size_t> original = out.certificate.composed(n);
  for (Vertex v : dom.clique) out.vertices.push_back(static_cast<Vertex>(original[v - 1] + 1));
  out.widths.clique = out.vertices.size();
  check_homogeneous_parts(witnesses, out.vertices, r, options.budget);
  return out;
}

void verify_homogeneous(const OrderedHypergraph& h, std::span<const Vertex> vertices, HomogeneousKind kind,
                        std::uint64_t budget) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 1 || vertices[i] > h.n()) throw VerificationFailed("vertex out of range");
    if (i > 0 && vertices[i - 1] >= vertices[i]) throw VerificationFailed("vertices not strictly increasing");
  }
  if (binomial_saturating(vertices.size(), h.r()) > budget)
    throw OracleBudgetExceeded("re-verification exceeds the work budget");
  const bool want = kind == HomogeneousKind::Clique;
  for_each_subset(vertices, h.r(), [&](std::span<const Vertex> t) {
    if (h.contains(t) != want)
      throw VerificationFailed("set is not " + std::string(want ? "a clique" : "an independent set"));
    return true;
  });
}

PipelineResult semilinear_ramsey_extract(const LinearDescription& desc, const PipelineOptions& options) {
  const PrimitiveDecomposition dec = decompose_primitive(desc);
  PipelineResult out;
  out.core = streamline_and_dominate(dec.witnesses, desc.n(), desc.r, options);
  const auto& c = out.core.vertices;
  if (c.size() >= desc.r) {
    out.kind = desc.is_edge(std::span<const Vertex>(c.data(), desc.r)) ? HomogeneousKind::Clique
                                                                       : HomogeneousKind::Independent;
  }
  try {
    verify_homogeneous(realize(desc), c, out.kind, options.budget);
  } catch (const VerificationFailed& e) {
    throw InternalError(std::string("pipeline output failed re-verification: ") + e.what());
  }
  return out;
}

MulticolorResult multicolor_extract(const std::vector<LinearDescription>& descs, const PipelineOptions& options) {
  if (descs.empty()) throw PreconditionError("multicolor: need at least one description");
  const auto& first = descs.front();
  for (const auto& d : descs) {
    d.validate();
    if (d.r != first.r || d.points != first.points)
      throw PreconditionError("multicolor: descriptions must share r and the point set");
  }
  MulticolorResult out;
  const Vertex n = first.n();
  if (binomial_saturating(n, first.r) <= options.budget) {
    std::vector<Vertex> all(n);
    for (Vertex i = 0; i < n; ++i) all[i] = i + 1;
    for_each_subset(all, first.r, [&](std::span<const Vertex> t) {
      for (const auto& d : descs)
        if (d.is_edge(t)) return true;
      throw PreconditionError("multicolor: the colour classes do not cover every r-tuple");
    });
    out.coverage_checked = true;
  }
  std::vector<Matrix<Rational>> witnesses;
  for (const auto& d : descs) {
    auto dec = decompose_primitive(d);
    for (auto& w : dec.witnesses) witnesses.push_back(std::move(w));
  }
  out.core = streamline_and_dominate(witnesses, n, first.r, options);
  const auto& c = out.core.vertices;
  if (c.size() < first.r) return out;
  const std::span<const Vertex> head(c.data(), first.r);
  for (std::size_t i = 0; i < descs.size(); ++i) {
    if (!descs[i].is_edge(head)) continue;
    out.color = i;
    try {
      verify_homogeneous(realize(descs[i]), c, HomogeneousKind::Clique, options.budget);
    } catch (const VerificationFailed& e) {
      throw InternalError(std::string("multicolor output failed re-verification: ") + e.what());
    }
    return out;
  }
  throw PreconditionError("multicolor: the colour classes do not cover every r-tuple");
}

namespace {

template <class T>
void replay_stages(Matrix<T> cur, const ExtractionCertificate& cert, const Rational& delta) {
  const std::size_t rows = cur.rows();
  (void)cert.composed(cur.cols());
  for (const auto& st : cert.stages) {
    for (std::size_t c : st.columns)
      if (c >= cur.cols()) throw VerificationFailed("certificate column index out of range");
    if (st.role == StageRole::ExpSample) {
      if (st.types.size() != rows || st.shift_sources.size() != rows || st.shift_values.size() != rows)
        throw VerificationFailed("exponential stage has the wrong number of rows");
      if (!(Rational(2) < st.delta)) throw VerificationFailed("exponential stage needs delta > 2");
      if (delta.sign() > 0 && st.delta != delta) throw VerificationFailed("exponential stage has the wrong delta");
      for (std::size_t i = 0; i < rows; ++i) {
        if (st.shift_sources[i] >= cur.cols()) throw VerificationFailed("shift source out of range");
        const T shift = -cur(i, st.shift_sources[i]);
        Rational value;
        if constexpr (std::is_same_v<T, PerturbedValue>) value = shift.value;
        else value = shift;
        if (value != st.shift_values[i]) throw VerificationFailed("shift value does not match");
        std::vector<T> q;
        for (std::size_t c : st.columns) q.push_back(cur(i, c) + shift);
        if (!is_exponential(std::span<const T>(q), st.delta, st.types[i]))
          throw VerificationFailed("shifted sample row is not exponential");
      }
      cur = cur.select_columns(st.columns);
      continue;
    }
    cur = cur.select_columns(st.columns);
    if (st.directions.size() != rows) throw VerificationFailed("stage has the wrong number of directions");
    for (std::size_t i = 0; i < rows; ++i) {
      const std::span<const T> row = std::as_const(cur).row(i);
      const auto dir = monotone_direction(row);
      if (cur.cols() >= 2 && (!dir || *dir != st.directions[i])) throw VerificationFailed("row is not monotone as claimed");
      if (st.role == StageRole::Cupcap) {
        if (st.shapes.size() != rows) throw VerificationFailed("cupcap stage has the wrong number of shapes");
        const bool ok = st.shapes[i] == Shape::Cup ? is_cup(row) : is_cap(row);
        if (!ok) throw VerificationFailed("row is not a " + to_string(st.shapes[i]) + " as claimed");
      }
    }
  }
}

}  // namespace

void verify_stages(const Matrix<Rational>& m, const ExtractionCertificate& cert, const Rational& delta) {
  replay_stages(m, cert, delta);
}

void verify_stages(const Matrix<PerturbedValue>& m, const ExtractionCertificate& cert, const Rational& delta) {
  replay_stages(m, cert, delta);
}

void verify_certificate(const std::vector<Matrix<Rational>>& witnesses, unsigned r, const ExtractionCertificate& cert) {
  if (witnesses.empty()) {
    if (!cert.stages.empty()) throw VerificationFailed("certificate has stages but there are no witnesses");
    return;
  }
  replay_stages(perturbed_stack(witnesses), cert, Rational(2 * static_cast<long>(r)));
}

void verify_certificate(const LinearDescription& desc, const ExtractionCertificate& cert) {
  verify_certificate(decompose_primitive(desc).witnesses, desc.r, cert);
}

void verify_pipeline_result(const LinearDescription& desc, const PipelineResult& result, std::uint64_t budget) {
  verify_certificate(desc, result.core.certificate);
  const auto original = result.core.certificate.composed(desc.n());
  for (Vertex v : result.core.vertices)
    if (!std::binary_search(original.begin(), original.end(), static_cast<std::size_t>(v) - 1))
      throw VerificationFailed("vertex outside the certified sample");
  verify_homogeneous(realize(desc), result.core.vertices, result.kind, budget);
}

}  // namespace slr
