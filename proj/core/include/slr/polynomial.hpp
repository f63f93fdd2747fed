#pragma once

#include <map>
#include <span>
#include <vector>

#include "slr/hypergraph.hpp"
#include "slr/numeric.hpp"
#include "slr/semilinear.hpp"

namespace slr {

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  Polynomial() = default;
  explicit Polynomial(std::size_t vars) : vars_(vars) {}
  static Polynomial constant(std::size_t vars, const Rational& c);
  static Polynomial variable(std::size_t vars, std::size_t index);

  std::size_t variables() const { return vars_; }
  unsigned degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  void add_term(const Exponents& e, const Rational& c);

  Rational evaluate(std::span<const Rational> x) const;
  Polynomial pow(unsigned k) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t vars_ = 0;
  std::map<Exponents, Rational> terms_;  // no zero coefficients
};

// Polynomial in an r-tuple of points of R^d; variable i*d + c is coordinate c
// of point i.
struct PolynomialFunction {
  unsigned dimension = 1;
  unsigned arity = 1;
  Polynomial poly;

  unsigned degree() const { return poly.degree(); }
  Rational evaluate(std::span<const Point> args) const;
  Rational evaluate(const std::vector<Point>& points, std::span<const Vertex> tuple) const;
  static PolynomialFunction from_linear(const LinearFunction& f);
};

struct SemialgebraicDescription {
  unsigned d = 1;
  unsigned r = 2;
  std::vector<Point> points;
  std::vector<PolynomialFunction> functions;
  SignTable phi;

  Vertex n() const { return static_cast<Vertex>(points.size()); }
  void validate() const;
  std::vector<int> signs(std::span<const Vertex> tuple) const;
  bool is_edge(std::span<const Vertex> tuple) const;
};

OrderedHypergraph realize(const SemialgebraicDescription& desc);

}  // namespace slr
