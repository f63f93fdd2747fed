#include "slr/constructions.hpp"

#include <mpfr.h>

#include <algorithm>
#include <memory>
#include <random>

#include "slr/error.hpp"

namespace slr {

std::size_t delta(const BinaryWord& a, const BinaryWord& b) {
  if (a.size() != b.size()) throw PreconditionError("delta: words differ in length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return i + 1;
  throw PreconditionError("delta: words are equal");
}

BinaryWord word_of(Vertex v, unsigned length) {
  if (length > 31 || v < 1 || (v - 1) >> length) throw PreconditionError("word_of: vertex out of range");
  BinaryWord w(length);
  const std::uint32_t x = v - 1;
  for (unsigned i = 0; i < length; ++i) w[i] = static_cast<std::uint8_t>((x >> (length - 1 - i)) & 1U);
  return w;
}

namespace {

// delta of the words of two distinct 0-based indices.
unsigned index_delta(std::uint32_t a, std::uint32_t b, unsigned length) {
  const std::uint32_t x = a ^ b;
  const unsigned high = 31U - static_cast<unsigned>(__builtin_clz(x));
  return length - high;
}

std::size_t pow3(unsigned k) {
  std::size_t p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 3;
  return p;
}

}  // namespace

OrderedHypergraph step_up(const OrderedHypergraph& g, unsigned cap) {
  if (g.r() != 2) throw PreconditionError("step-up: input must be a graph");
  const unsigned n = g.n();
  if (n > cap || n > 16) throw PreconditionError("step-up: N exceeds the size cap");
  const Vertex words = Vertex{1} << n;
  return OrderedHypergraph::from_rule(words, 3, [g, n](std::span<const Vertex> t) {
    const unsigned d1 = index_delta(t[0] - 1, t[1] - 1, n);
    const unsigned d2 = index_delta(t[1] - 1, t[2] - 1, n);
    if (d1 >= d2) return false;
    const Vertex e[2] = {d1, d2};
    return g.contains(e);
  });
}

bool is_robust(const SemialgebraicDescription& graph) {
  for (const auto& f : graph.functions)
    for (const auto& p : graph.points)
      for (const auto& q : graph.points) {
        const Point args[2] = {p, q};
        if (f.evaluate(std::span<const Point>(args)).is_zero()) return false;
      }
  return true;
}

SemialgebraicDescription robustify(const SemialgebraicDescription& graph, Rational* shift) {
  graph.validate();
  if (graph.r != 2) throw PreconditionError("robustify: description must be a graph (r = 2)");
  if (2 * graph.functions.size() > SignTable::kMaxArity) throw PreconditionError("robustify: too many functions");
  std::optional<Rational> least;
  for (const auto& f : graph.functions)
    for (const auto& p : graph.points)
      for (const auto& q : graph.points) {
        const Point args[2] = {p, q};
        const Rational v = f.evaluate(std::span<const Point>(args)).abs();
        if (!v.is_zero() && (!least || v < *least)) least = v;
      }
  const Rational c = least ? *least / Rational(2) : Rational(1);
  if (shift) *shift = c;
  SemialgebraicDescription out{graph.d, graph.r, graph.points, {}, {}};
  const std::size_t vars = static_cast<std::size_t>(graph.r) * graph.d;
  for (const auto& f : graph.functions) {
    PolynomialFunction plus = f;
    PolynomialFunction minus = f;
    plus.poly = plus.poly + Polynomial::constant(vars, c);
    minus.poly = minus.poly - Polynomial::constant(vars, c);
    out.functions.push_back(std::move(plus));
    out.functions.push_back(std::move(minus));
  }
  const SignTable phi = graph.phi;
  out.phi = SignTable::from_function(static_cast<unsigned>(out.functions.size()), [&phi](std::span<const int> s) {
    std::vector<int> orig(s.size() / 2);
    for (std::size_t i = 0; i < orig.size(); ++i) {
      const int hi = s[2 * i];
      const int lo = s[2 * i + 1];
      orig[i] = (hi > 0 && lo > 0) ? 1 : (hi < 0 && lo < 0) ? -1 : 0;
    }
    return phi(orig);
  });
  return out;
}

namespace {

// h(x, y, z) = (x1 - y1)^2D (y1 - z1)^2D f(dbar(x, y), dbar(y, z)).
PolynomialFunction lift(const PolynomialFunction& f, unsigned big_d) {
  const unsigned d = f.dimension;
  const std::size_t vars = 3 * static_cast<std::size_t>(d + 1);
  auto var = [&](unsigned point, unsigned coord) { return Polynomial::variable(vars, point * (d + 1) + coord); };
  const Polynomial x1 = var(0, 0) - var(1, 0);
  const Polynomial y1 = var(1, 0) - var(2, 0);
  std::vector<Polynomial> xs, ys;
  for (unsigned c = 0; c < d; ++c) {
    xs.push_back(var(0, c + 1) - var(1, c + 1));
    ys.push_back(var(1, c + 1) - var(2, c + 1));
  }
  PolynomialFunction out{d + 1, 3, Polynomial(vars)};
  for (const auto& [e, coef] : f.poly.terms()) {
    unsigned da = 0, db = 0;
    Polynomial term = Polynomial::constant(vars, coef);
    for (unsigned c = 0; c < d; ++c) {
      da += e[c];
      db += e[d + c];
      term = term * xs[c].pow(e[c]) * ys[c].pow(e[d + c]);
    }
    term = term * x1.pow(2 * big_d - da) * y1.pow(2 * big_d - db);
    out.poly = out.poly + term;
  }
  return out;
}

std::vector<Point> lifted_points(const std::vector<Point>& p, unsigned d, const Rational& eps) {
  const auto n = static_cast<unsigned>(p.size());
  std::vector<Point> out;
  const Vertex words = Vertex{1} << n;
  for (Vertex v = 1; v <= words; ++v) {
    const BinaryWord w = word_of(v, n);
    Point q(d + 1);
    Rational power = 1;
    for (unsigned i = 0; i < n; ++i) {
      power *= eps;
      if (!w[i]) continue;
      q[0] += power;
      for (unsigned c = 0; c < d; ++c) q[c + 1] += power * p[i][c];
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::size_t disagreements(const SemialgebraicDescription& g, const std::vector<PolynomialFunction>& h,
                          const std::vector<Point>& q, bool stop_early) {
  const auto n = static_cast<unsigned>(g.points.size());
  std::vector<Vertex> all(q.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i + 1);
  std::size_t bad = 0;
  for_each_subset(all, 3, [&](std::span<const Vertex> t) {
    const unsigned d1 = index_delta(t[0] - 1, t[1] - 1, n);
    const unsigned d2 = index_delta(t[1] - 1, t[2] - 1, n);
    const Point base[2] = {g.points[d1 - 1], g.points[d2 - 1]};
    const Point lifted[3] = {q[t[0] - 1], q[t[1] - 1], q[t[2] - 1]};
    for (std::size_t i = 0; i < h.size(); ++i) {
      const int want = g.functions[i].evaluate(std::span<const Point>(base)).sign();
      if (h[i].evaluate(std::span<const Point>(lifted)).sign() != want) {
        ++bad;
        if (stop_early) return false;
      }
    }
    return true;
  });
  return bad;
}

SemialgebraicDescription prepared_graph(const SemialgebraicDescription& graph, bool robustified, Rational* shift) {
  return robustified ? robustify(graph, shift) : graph;
}

}  // namespace

SemialgebraicDescription StepUpWitness::description() const {
  const unsigned d = h.empty() ? (points.empty() ? 1 : static_cast<unsigned>(points.front().size())) : h.front().dimension;
  return {d, 3, points, h, phi};
}

StepUpWitness step_up_witness(const SemialgebraicDescription& graph_in, bool auto_robustify, unsigned cap) {
  graph_in.validate();
  if (graph_in.r != 2) throw PreconditionError("step-up witness: description must be a graph (r = 2)");
  const auto n = static_cast<unsigned>(graph_in.points.size());
  if (n < 1) throw PreconditionError("step-up witness: need at least one point");
  if (n > cap) throw PreconditionError("step-up witness: N exceeds the size cap");
  StepUpWitness out;
  out.robustified = !is_robust(graph_in);
  if (out.robustified && !auto_robustify)
    throw PreconditionError("step-up witness: description is not robust (some f_i vanishes on a pair)");
  const SemialgebraicDescription graph = prepared_graph(graph_in, out.robustified, &out.robust_shift);

  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j < i; ++j) {
      std::vector<int> s(graph.functions.size());
      for (std::size_t f = 0; f < s.size(); ++f) {
        const Point args[2] = {graph.points[i - 1], graph.points[j - 1]};
        s[f] = graph.functions[f].evaluate(std::span<const Point>(args)).sign();
      }
      if (graph.phi(s)) throw PreconditionError("step-up witness: sign table must reject pairs in decreasing order");
    }

  unsigned big_d = 0;
  for (const auto& f : graph.functions) big_d = std::max(big_d, f.degree());
  for (const auto& f : graph.functions) out.h.push_back(lift(f, big_d));
  out.phi = graph.phi;

  Rational eps(Integer(1), Integer(2));
  for (int round = 0; round < 64; ++round, eps /= Rational(2)) {
    auto pts = lifted_points(graph.points, graph.d, eps);
    if (disagreements(graph, out.h, pts, true) == 0) {
      out.points = std::move(pts);
      out.epsilon = eps;
      return out;
    }
  }
  throw InternalError("step-up witness: no epsilon down to 2^-64 passes the sign scan");
}

std::size_t step_up_sign_disagreements(const SemialgebraicDescription& graph_in, const StepUpWitness& w) {
  Rational shift;
  const SemialgebraicDescription graph = prepared_graph(graph_in, w.robustified, &shift);
  if (graph.functions.size() != w.h.size()) throw PreconditionError("step-up witness: function count mismatch");
  if (w.points.size() != (std::size_t{1} << graph.points.size()))
    throw PreconditionError("step-up witness: point count mismatch");
  return disagreements(graph, w.h, w.points, false);
}

IncidenceGraph incidence_graph(unsigned k) {
  if (k < 1) throw PreconditionError("incidence graph: need k >= 1");
  const auto kk = static_cast<long>(k);
  if (static_cast<std::size_t>(kk * kk * kk * kk) > kIncidenceCap)
    throw PreconditionError("incidence graph: size guard (k^4 incidences)");
  IncidenceGraph out{OrderedHypergraph(0, 2), {}, 0, 0, 0};
  out.points = static_cast<std::size_t>(2 * kk * kk * kk);
  out.lines = static_cast<std::size_t>(kk * kk * kk);
  out.m = std::max(out.points, out.lines);
  for (long x = 1; x <= kk; ++x)
    for (long y = 1; y <= 2 * kk * kk; ++y)
      for (long a = 1; a <= kk; ++a)
        for (long b = 1; b <= kk * kk; ++b)
          if (y == a * x + b) out.incidences.push_back({{x, y}, {a, b}});
  const std::size_t n = out.incidences.size();
  std::vector<Tuple> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto& [p, l] = out.incidences[u];
      const auto& [p2, l2] = out.incidences[v];
      auto on = [](const std::pair<long, long>& pt, const std::pair<long, long>& ln) {
        return pt.second == ln.first * pt.first + ln.second;
      };
      const bool forward = p < p2 && l < l2 && on(p, l2);
      const bool backward = p2 < p && l2 < l && on(p2, l);
      if (forward || backward) edges.push_back({static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)});
    }
  out.graph = OrderedHypergraph::from_edges(static_cast<Vertex>(n), 2, edges);
  return out;
}

LowerBoundConstruction lower_bound_3uniform(unsigned k, std::uint64_t budget) {
  IncidenceGraph g = incidence_graph(k);
  if (g.graph.n() > kStepUpCap) throw PreconditionError("lower bound construction: incidence graph exceeds the step-up cap");
  LowerBoundConstruction out{step_up(g.graph), g, 0, 0, 0};
  out.omega_bound = brute_omega(g.graph, budget).size + 1;
  out.alpha_g = brute_alpha(g.graph, budget).size;
  out.alpha_bound = pow(Integer(static_cast<unsigned long>(g.graph.n())), out.alpha_g) + 1;
  return out;
}

OrderedHypergraph shift3_hypergraph(Vertex n) {
  if (n < 3) throw PreconditionError("shift hypergraph: need N >= 3");
  return OrderedHypergraph::from_rule(n, 3, [](std::span<const Vertex> t) {
    return static_cast<std::uint64_t>(t[0]) + t[2] < 2 * static_cast<std::uint64_t>(t[1]);
  });
}

LinearDescription shift3_description(Vertex n) {
  if (n < 3) throw PreconditionError("shift hypergraph: need N >= 3");
  LinearDescription desc;
  desc.d = 1;
  desc.r = 3;
  for (Vertex v = 1; v <= n; ++v) desc.points.push_back({Rational(v)});
  desc.functions.push_back({{{Rational(1)}, {Rational(-2)}, {Rational(1)}}, Rational(0)});
  desc.phi = SignTable::from_function(1, [](std::span<const int> s) { return s[0] < 0; });
  return desc;
}

std::size_t shift3_bound(Vertex n) {
  if (n < 1) throw PreconditionError("shift bound: need N >= 1");
  std::size_t c = 0;
  while ((std::uint64_t{1} << c) < n) ++c;
  return c + 1;
}

LinearDescription random_description(unsigned d, unsigned m, unsigned r, Vertex n, unsigned max_entry,
                                     std::uint64_t seed) {
  if (d < 1 || r < 1 || max_entry < 1) throw PreconditionError("random description: need d, r, max_entry >= 1");
  if (m > SignTable::kMaxArity) throw PreconditionError("random description: m exceeds 8");
  std::mt19937_64 rng(seed);
  const auto bound = static_cast<long>(max_entry);
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  auto entry = [&] { return Rational(Integer(num(rng)), Integer(den(rng))); };
  LinearDescription desc;
  desc.d = d;
  desc.r = r;
  for (Vertex v = 0; v < n; ++v) {
    Point p(d);
    for (auto& x : p) x = entry();
    desc.points.push_back(std::move(p));
  }
  for (unsigned i = 0; i < m; ++i) {
    LinearFunction f{std::vector<std::vector<Rational>>(r, std::vector<Rational>(d)), entry()};
    for (auto& block : f.a)
      for (auto& x : block) x = entry();
    desc.functions.push_back(std::move(f));
  }
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> table(pow3(m));
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = coin(rng);
  desc.phi = SignTable(m, std::move(table));
  return desc;
}

std::vector<Rational> GrowthParams::t() const {
  std::vector<Rational> out{Rational(1)};
  for (const auto& x : s) out.push_back(out.back() * x);
  return out;
}

bool GrowthParams::proven_regime() const { return !s.empty() && Rational(1000000) <= s.back(); }

void GrowthParams::validate() const {
  if (s.empty()) throw PreconditionError("growth construction: need q >= 1 (r even, at least 4)");
  if (!(Rational(0) < s.back())) throw PreconditionError("growth construction: s_q must be positive");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i] < s[i - 1])) throw PreconditionError("growth construction: s must be strictly decreasing");
}

OrderedHypergraph growth_hypergraph(const GrowthParams& params, Vertex n) {
  params.validate();
  auto t = std::make_shared<const std::vector<Rational>>(params.t());
  const unsigned q = params.q();
  const unsigned r = params.r();
  return OrderedHypergraph::from_rule(n, r, [t, q, r](std::span<const Vertex> e) {
    Rational f;
    for (unsigned i = 0; i <= q; ++i) {
      const Rational diff(static_cast<long>(e[r - 1 - i]) - static_cast<long>(e[i]));
      if (i % 2 == 0) f += (*t)[i] * diff;
      else f -= (*t)[i] * diff;
    }
    return f.sign() > 0;
  });
}

LinearDescription growth_description(const GrowthParams& params, Vertex n) {
  params.validate();
  const auto t = params.t();
  const unsigned q = params.q();
  const unsigned r = params.r();
  LinearDescription desc;
  desc.d = 1;
  desc.r = r;
  for (Vertex v = 1; v <= n; ++v) desc.points.push_back({Rational(v)});
  LinearFunction f{std::vector<std::vector<Rational>>(r, std::vector<Rational>(1)), Rational(0)};
  for (unsigned i = 0; i <= q; ++i) {
    const Rational c = i % 2 == 0 ? t[i] : -t[i];
    f.a[i][0] = -c;
    f.a[r - 1 - i][0] = c;
  }
  desc.functions.push_back(std::move(f));
  desc.phi = SignTable::from_function(1, [](std::span<const int> s) { return s[0] > 0; });
  return desc;
}

bool growth_standing_assumption(const GrowthParams& params, Vertex n) {
  return !params.s.empty() && params.s.front() < Rational(n);
}

namespace {

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, 256); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Upper bound on ln(a) / ln(b), rounded up to a multiple of 2^-32.
Rational log_ratio_up(const Rational& a, const Rational& b) {
  if (!(Rational(1) < a) || !(Rational(1) < b))
    throw PreconditionError("growth bounds: logarithm ratios need arguments above 1");
  Mpfr x, y, la, lb, ratio;
  mpfr_set_q(x.get(), a.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_log(la.get(), x.get(), MPFR_RNDU);
  mpfr_set_q(y.get(), b.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_log(lb.get(), y.get(), MPFR_RNDD);
  if (mpfr_sgn(lb.get()) <= 0) throw PreconditionError("growth bounds: denominator logarithm too close to zero");
  mpfr_div(ratio.get(), la.get(), lb.get(), MPFR_RNDU);
  mpfr_mul_2ui(ratio.get(), ratio.get(), 32, MPFR_RNDU);
  mpfr_ceil(ratio.get(), ratio.get());
  Integer z;
  mpfr_get_z(z.get_mpz_t(), ratio.get(), MPFR_RNDU);
  return Rational(z, Integer(1) << 32);
}

}  // namespace

GrowthBounds growth_bounds(const GrowthParams& params, Vertex n) {
  params.validate();
  const auto& s = params.s;  // s[i - 1] is s_i
  const unsigned q = params.q();
  GrowthBounds out;
  out.proven_regime = params.proven_regime();
  Rational clique = s.back() + Rational(2) + log_ratio_up(Rational(n), s.front());
  for (unsigned i = 1; i <= (q - 1) / 2; ++i) clique += log_ratio_up(s[2 * i - 1], s[2 * i]);
  Rational indep = s.back() + Rational(2);
  for (unsigned i = 1; i <= q / 2; ++i) indep += log_ratio_up(s[2 * i - 2], s[2 * i - 1]);
  out.clique_bound = Rational(10) * clique;
  out.independence_bound = Rational(10) * indep;
  return out;
}

GrowthParams growth_schedule(unsigned q, const Integer& n) {
  if (q < 1) throw PreconditionError("growth schedule: need q >= 1");
  if (n < 2) throw PreconditionError("growth schedule: need N >= 2");
  GrowthParams out;
  const bool power_of_two = mpz_popcount(n.get_mpz_t()) == 1;
  const unsigned long log2n = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
  for (unsigned i = 1; i < q; ++i) {
    Integer e;
    if (power_of_two) {
      e = ceil_root(pow(Integer(log2n), q - i), q);
    } else {
      Mpfr x, l;
      mpfr_set_z(x.get(), n.get_mpz_t(), MPFR_RNDN);
      mpfr_log2(l.get(), x.get(), MPFR_RNDU);
      Mpfr ex, res;
      mpfr_set_ui(ex.get(), q - i, MPFR_RNDN);
      mpfr_div_ui(ex.get(), ex.get(), q, MPFR_RNDU);
      mpfr_pow(res.get(), l.get(), ex.get(), MPFR_RNDU);
      mpfr_ceil(res.get(), res.get());
      mpfr_get_z(e.get_mpz_t(), res.get(), MPFR_RNDU);
    }
    out.s.push_back(Rational(pow(Integer(2), e.get_ui())));
  }
  out.s.push_back(Rational(1000000));
  return out;
}

}  // namespace slr
