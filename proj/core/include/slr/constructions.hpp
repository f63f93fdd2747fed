#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "slr/hypergraph.hpp"
#include "slr/numeric.hpp"
#include "slr/polynomial.hpp"
#include "slr/semilinear.hpp"

namespace slr {

// ---------------------------------------------------------------------------
// Stepping up

using BinaryWord = std::vector<std::uint8_t>;

// First index (1-based) where the words differ.
std::size_t delta(const BinaryWord& a, const BinaryWord& b);
// Vertex v (1-based) of the step-up is the (v-1)-th word in lexicographic
// order; word(i) is its i-th bit from the left.
BinaryWord word_of(Vertex v, unsigned length);

inline constexpr unsigned kStepUpCap = 16;

// 3-uniform hypergraph on the 2^N words of a graph on [N].
OrderedHypergraph step_up(const OrderedHypergraph& g, unsigned cap = kStepUpCap);

struct StepUpWitness {
  std::vector<Point> points;                // q_alpha in Q^(d+1), lexicographic order
  std::vector<PolynomialFunction> h;        // arity 3
  Rational epsilon;
  SignTable phi;                            // sign table applied to h
  bool robustified = false;
  Rational robust_shift;                    // the +-shift used when robustified

  SemialgebraicDescription description() const;
};

inline constexpr unsigned kStepUpWitnessCap = 6;

// Robust version of a graph description: f_i + c and f_i - c for each i,
// with the sign table reading back the sign of f_i.
SemialgebraicDescription robustify(const SemialgebraicDescription& graph, Rational* shift = nullptr);
bool is_robust(const SemialgebraicDescription& graph);

// Semi-algebraic witness for the step-up of the graph realized by `graph`
// (r = 2). The sign table must reject every pair given in decreasing order.
StepUpWitness step_up_witness(const SemialgebraicDescription& graph, bool auto_robustify = false,
                              unsigned cap = kStepUpWitnessCap);

// Number of (triple, function) sign checks at the given epsilon that disagree.
std::size_t step_up_sign_disagreements(const SemialgebraicDescription& graph, const StepUpWitness& w);

// ---------------------------------------------------------------------------
// Incidence graph

struct IncidenceGraph {
  OrderedHypergraph graph;
  // Vertex v (1-based) is incidence v-1: ((x, y), (a, b)) with y = a x + b.
  std::vector<std::pair<std::pair<long, long>, std::pair<long, long>>> incidences;
  std::size_t points = 0;
  std::size_t lines = 0;
  std::size_t m = 0;  // max(points, lines)
};

inline constexpr std::size_t kIncidenceCap = 4096;

// Points [k] x [2k^2], lines y = a x + b with a in [k], b in [k^2]; points
// precede lines, each side ordered lexicographically.
IncidenceGraph incidence_graph(unsigned k);

struct LowerBoundConstruction {
  OrderedHypergraph hypergraph;
  IncidenceGraph base;
  std::size_t omega_bound = 0;  // omega(G) + 1 = 3
  Integer alpha_bound;          // |V(G)|^alpha(G) + 1
  std::size_t alpha_g = 0;
};

LowerBoundConstruction lower_bound_3uniform(unsigned k, std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Shift hypergraph

// {x < y < z} is an edge iff x + z < 2y.
OrderedHypergraph shift3_hypergraph(Vertex n);
// Points 1..N in Q^1, f = x - 2y + z, edge iff f < 0.
LinearDescription shift3_description(Vertex n);
// ceil(log2 N) + 1
std::size_t shift3_bound(Vertex n);

// Random description with entries p/q, |p| <= max_entry, 1 <= q <= max_entry,
// and a random sign table. Fully determined by the seed.
LinearDescription random_description(unsigned d, unsigned m, unsigned r, Vertex n, unsigned max_entry,
                                     std::uint64_t seed);

// ---------------------------------------------------------------------------
// Growth construction

struct GrowthParams {
  std::vector<Rational> s;  // s_1 > ... > s_q

  unsigned q() const { return static_cast<unsigned>(s.size()); }
  unsigned r() const { return 2 * q() + 2; }
  std::vector<Rational> t() const;  // t_0 = 1, t_i = s_i t_(i-1)
  bool proven_regime() const;        // s_q >= 10^6
  void validate() const;
};

// e = (x_0, ..., x_q, y_q, ..., y_0) is an edge iff
// sum_i (-1)^i t_i (y_i - x_i) > 0.
OrderedHypergraph growth_hypergraph(const GrowthParams& params, Vertex n);
LinearDescription growth_description(const GrowthParams& params, Vertex n);
bool growth_standing_assumption(const GrowthParams& params, Vertex n);  // N > s_1

struct GrowthBounds {
  Rational clique_bound;
  Rational independence_bound;
  bool proven_regime = false;
};

// Both formulas with every logarithm ratio rounded up to a multiple of 2^-32.
GrowthBounds growth_bounds(const GrowthParams& params, Vertex n);

// s_i = 2^ceil((log2 N)^((q-i)/q)) for i < q and s_q = 10^6.
GrowthParams growth_schedule(unsigned q, const Integer& n);

}  // namespace slr
