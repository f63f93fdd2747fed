#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace slr {

// Vertices are 1-based throughout, matching the ordered vertex set [N].
using Vertex = std::uint32_t;
using Tuple = std::vector<Vertex>;
using EdgeRule = std::function<bool(std::span<const Vertex>)>;

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

// Calls f on every strictly increasing r-tuple over the given vertex list,
// in lexicographic order. Stops early when f returns false.
bool for_each_subset(std::span<const Vertex> vertices, unsigned r,
                     const std::function<bool(std::span<const Vertex>)>& f);

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

// r-uniform hypergraph on [N]. Backed by an explicit edge set or by a
// membership rule; rule-backed graphs are never enumerated unless asked.
class OrderedHypergraph {
 public:
  OrderedHypergraph(Vertex n, unsigned r);
  static OrderedHypergraph from_edges(Vertex n, unsigned r, const std::vector<Tuple>& edges);
  static OrderedHypergraph from_rule(Vertex n, unsigned r, EdgeRule rule);
  static OrderedHypergraph complete(Vertex n, unsigned r);

  Vertex n() const { return n_; }
  unsigned r() const { return r_; }
  bool is_explicit() const { return rule_ == nullptr; }

  // tuple must be strictly increasing with entries in [1, N]
  bool contains(std::span<const Vertex> tuple) const;

  // Sorted edge list. Throws OracleBudgetExceeded if more than budget tuples
  // would need to be inspected.
  std::vector<Tuple> edges(std::uint64_t budget = kDefaultBudget) const;
  OrderedHypergraph materialize(std::uint64_t budget = kDefaultBudget) const;
  OrderedHypergraph complement() const;
  OrderedHypergraph induced(std::span<const Vertex> vertices) const;

 private:
  struct EdgeSet;
  Vertex n_;
  unsigned r_;
  std::shared_ptr<const EdgeSet> edges_;
  std::shared_ptr<const EdgeRule> rule_;
};

bool same_edges(const OrderedHypergraph& a, const OrderedHypergraph& b, std::uint64_t budget = kDefaultBudget);

// Dense truth table over k Boolean inputs; bit i of the index is input i.
class TruthTable {
 public:
  TruthTable(unsigned arity, std::vector<bool> table);
  static TruthTable constant(unsigned arity, bool value);
  static TruthTable projection(unsigned arity, unsigned index);
  static TruthTable from_function(unsigned arity, const std::function<bool(std::span<const bool>)>& f);

  unsigned arity() const { return arity_; }
  bool operator()(std::span<const bool> inputs) const;
  bool at(std::size_t index) const { return table_[index]; }
  const std::vector<bool>& table() const { return table_; }
  bool depends_on(unsigned input) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned arity_;
  std::vector<bool> table_;
};

OrderedHypergraph boolean_combination(const std::vector<OrderedHypergraph>& parts, const TruthTable& combiner);
// Same, with the shape given explicitly so that an empty list of parts is allowed.
OrderedHypergraph boolean_combination(Vertex n, unsigned r, const std::vector<OrderedHypergraph>& parts,
                                      const TruthTable& combiner);

using Color = int;
// Returned by is_monochromatic for sets with fewer than r vertices.
inline constexpr Color kAnyColor = -1;
using ColorRule = std::function<std::optional<Color>(std::span<const Vertex>)>;

class ColoredHypergraph {
 public:
  ColoredHypergraph(Vertex n, unsigned r, ColorRule rule) : n_(n), r_(r), rule_(std::move(rule)) {}
  static ColoredHypergraph from_colors(Vertex n, unsigned r, const std::vector<std::pair<Tuple, Color>>& colors);

  Vertex n() const { return n_; }
  unsigned r() const { return r_; }
  std::optional<Color> color(std::span<const Vertex> tuple) const { return rule_(tuple); }
  std::vector<std::pair<Tuple, Color>> colored_tuples(std::uint64_t budget = kDefaultBudget) const;

 private:
  Vertex n_;
  unsigned r_;
  ColorRule rule_;
};

bool is_clique(const OrderedHypergraph& h, std::span<const Vertex> s);
bool is_independent(const OrderedHypergraph& h, std::span<const Vertex> s);
// The common color of all r-subsets, kAnyColor if |S| < r, nothing otherwise.
std::optional<Color> is_monochromatic(const ColoredHypergraph& h, std::span<const Vertex> s);

struct OracleResult {
  std::size_t size = 0;
  std::vector<Vertex> witness;
};

// One uniformity level of a hereditary property: every r-subset of the
// chosen set must satisfy accept.
struct SubsetConstraint {
  unsigned r;
  EdgeRule accept;
};

// Largest S in [N] with every constraint satisfied on all its subsets, by
// branch-and-bound in vertex order. The witness is the lexicographically
// least maximum set. Each tested tuple and search node costs one unit.
OracleResult max_homogeneous_set(Vertex n, const std::vector<SubsetConstraint>& constraints,
                                 std::uint64_t budget = kDefaultBudget);

OracleResult brute_omega(const OrderedHypergraph& h, std::uint64_t budget = kDefaultBudget);
OracleResult brute_alpha(const OrderedHypergraph& h, std::uint64_t budget = kDefaultBudget);

struct MonochromaticResult {
  OracleResult best;
  std::vector<Color> colors;  // one per hypergraph
};

// Largest set that is a monochromatic clique in every given colored
// hypergraph simultaneously (all share N).
MonochromaticResult max_common_monochromatic_clique(const std::vector<ColoredHypergraph>& hs,
                                                    std::uint64_t budget = kDefaultBudget);

}  // namespace slr
