#include "slr/polynomial.hpp"

#include <algorithm>
#include <memory>

#include "slr/error.hpp"

namespace slr {

Polynomial Polynomial::constant(std::size_t vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t vars, std::size_t index) {
  if (index >= vars) throw PreconditionError("polynomial: variable index out of range");
  Polynomial p(vars);
  Exponents e(vars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

unsigned Polynomial::degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : e) s += x;
    best = std::max(best, s);
  }
  return best;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) throw PreconditionError("polynomial: exponent vector of wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
  if (x.size() != vars_) throw PreconditionError("polynomial: wrong number of arguments");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    mpq_class term = c.raw();
    for (std::size_t i = 0; i < vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= x[i].raw();
    acc += Rational(term);
  }
  return acc;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out = constant(vars_, Rational(1));
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw PreconditionError("polynomial: variable counts differ");
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Rational(-1); }

Polynomial operator*(const Polynomial& a, const Rational& c) {
  Polynomial out(a.vars_);
  for (const auto& [e, v] : a.terms_) out.add_term(e, v * c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw PreconditionError("polynomial: variable counts differ");
  Polynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational PolynomialFunction::evaluate(std::span<const Point> args) const {
  if (args.size() != arity) throw PreconditionError("polynomial function: wrong number of points");
  std::vector<Rational> x;
  x.reserve(static_cast<std::size_t>(arity) * dimension);
  for (const auto& p : args) {
    if (p.size() != dimension) throw PreconditionError("polynomial function: point of wrong dimension");
    x.insert(x.end(), p.begin(), p.end());
  }
  return poly.evaluate(x);
}

Rational PolynomialFunction::evaluate(const std::vector<Point>& points, std::span<const Vertex> tuple) const {
  std::vector<Point> args;
  args.reserve(tuple.size());
  for (Vertex v : tuple) args.push_back(points[v - 1]);
  return evaluate(std::span<const Point>(args));
}

PolynomialFunction PolynomialFunction::from_linear(const LinearFunction& f) {
  PolynomialFunction out{f.dimension(), f.arity(), Polynomial(static_cast<std::size_t>(f.arity()) * f.dimension())};
  const std::size_t vars = out.poly.variables();
  out.poly.add_term(Polynomial::Exponents(vars, 0), f.b);
  for (std::size_t i = 0; i < f.a.size(); ++i)
    for (std::size_t c = 0; c < f.a[i].size(); ++c) {
      Polynomial::Exponents e(vars, 0);
      e[i * out.dimension + c] = 1;
      out.poly.add_term(e, f.a[i][c]);
    }
  return out;
}

void SemialgebraicDescription::validate() const {
  if (r == 0) throw PreconditionError("description: r must be positive");
  for (const auto& p : points)
    if (p.size() != d) throw PreconditionError("description: point of wrong dimension");
  for (const auto& f : functions)
    if (f.arity != r || f.dimension != d || f.poly.variables() != static_cast<std::size_t>(r) * d)
      throw PreconditionError("description: polynomial of wrong shape");
  if (phi.arity() != functions.size()) throw PreconditionError("description: sign table arity differs from m");
}

std::vector<int> SemialgebraicDescription::signs(std::span<const Vertex> tuple) const {
  std::vector<int> out(functions.size());
  for (std::size_t i = 0; i < functions.size(); ++i) out[i] = functions[i].evaluate(points, tuple).sign();
  return out;
}

bool SemialgebraicDescription::is_edge(std::span<const Vertex> tuple) const { return phi(signs(tuple)); }

OrderedHypergraph realize(const SemialgebraicDescription& desc) {
  desc.validate();
  auto shared = std::make_shared<const SemialgebraicDescription>(desc);
  return OrderedHypergraph::from_rule(desc.n(), desc.r,
                                      [shared](std::span<const Vertex> t) { return shared->is_edge(t); });
}

}  // namespace slr
