#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "slr/error.hpp"
#include "slr/hypergraph.hpp"
#include "slr/numeric.hpp"

namespace slr {

using Point = std::vector<Rational>;

// sum_i <a_i, x_i> + b over an r-tuple of points in Q^d.
struct LinearFunction {
  std::vector<std::vector<Rational>> a;  // r blocks of d coefficients
  Rational b;

  unsigned arity() const { return static_cast<unsigned>(a.size()); }
  unsigned dimension() const { return a.empty() ? 0 : static_cast<unsigned>(a.front().size()); }
  Rational evaluate(const std::vector<Point>& points, std::span<const Vertex> tuple) const;
  LinearFunction negated() const;
  LinearFunction scaled(const Rational& c) const;
};

// Sign digits: '-' -> 0, '0' -> 1, '+' -> 2; index = sum digit_i * 3^i.
class SignTable {
 public:
  static constexpr unsigned kMaxArity = 8;

  SignTable() : SignTable(0, {false}) {}
  SignTable(unsigned arity, std::vector<bool> table);
  static SignTable constant(unsigned arity, bool value);
  static SignTable from_function(unsigned arity, const std::function<bool(std::span<const int>)>& f);
  static std::size_t index_of(std::span<const int> signs);

  unsigned arity() const { return arity_; }
  bool operator()(std::span<const int> signs) const { return table_[index_of(signs)]; }
  bool at(std::size_t index) const { return table_[index]; }
  const std::vector<bool>& table() const { return table_; }

  friend bool operator==(const SignTable&, const SignTable&) = default;

 private:
  unsigned arity_;
  std::vector<bool> table_;
};

struct LinearDescription {
  unsigned d = 1;
  unsigned r = 1;
  std::vector<Point> points;
  std::vector<LinearFunction> functions;
  SignTable phi;

  Vertex n() const { return static_cast<Vertex>(points.size()); }
  // Throws PreconditionError on inconsistent shapes.
  void validate() const;
  std::vector<int> signs(std::span<const Vertex> tuple) const;
  bool is_edge(std::span<const Vertex> tuple) const;
};

OrderedHypergraph realize(const LinearDescription& desc);

template <class T>
bool primitive_edge(const Matrix<T>& p, std::span<const Vertex> tuple) {
  T sum{};
  for (std::size_t i = 0; i < tuple.size(); ++i) sum = sum + p(i, tuple[i] - 1);
  return sum < T{};
}

template <class T>
OrderedHypergraph primitive_hypergraph(const Matrix<T>& p) {
  if (p.rows() == 0) throw PreconditionError("primitive_hypergraph: witness needs at least one row");
  auto shared = std::make_shared<const Matrix<T>>(p);
  return OrderedHypergraph::from_rule(static_cast<Vertex>(p.cols()), static_cast<unsigned>(p.rows()),
                                      [shared](std::span<const Vertex> t) { return primitive_edge(*shared, t); });
}

struct PrimitiveDecomposition {
  std::vector<Matrix<Rational>> witnesses;  // 2m matrices, r x N
  TruthTable combiner;                      // arity 2m
};

// Witnesses for f_1, -f_1, ..., f_m, -f_m with P(i, j) = <a_i, p_j> + b / r.
PrimitiveDecomposition decompose_primitive(const LinearDescription& desc);

// Sign pattern of the m functions read back from membership in the 2m parts.
std::vector<int> decode_parts(std::span<const bool> parts);

template <class T>
Matrix<T> stack(const std::vector<Matrix<T>>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t r = blocks.front().rows();
  const std::size_t n = blocks.front().cols();
  for (const auto& b : blocks)
    if (b.rows() != r || b.cols() != n) throw PreconditionError("stack: witnesses differ in shape");
  Matrix<T> out(r * blocks.size(), n);
  for (std::size_t l = 0; l < blocks.size(); ++l)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) out(l * r + i, j) = blocks[l](i, j);
  return out;
}

// Block l (0-based) of a stacked matrix with r rows per block.
template <class T>
Matrix<T> block(const Matrix<T>& m, std::size_t l, std::size_t r) {
  if (r == 0 || (l + 1) * r > m.rows()) throw PreconditionError("block: index out of range");
  return m.select_rows(l * r, r);
}

}  // namespace slr
