#include "slr/semilinear.hpp"

namespace slr {

Rational LinearFunction::evaluate(const std::vector<Point>& points, std::span<const Vertex> tuple) const {
  Rational acc = b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point& p = points[tuple[i] - 1];
    for (std::size_t c = 0; c < a[i].size(); ++c)
      if (!a[i][c].is_zero()) acc += a[i][c] * p[c];
  }
  return acc;
}

LinearFunction LinearFunction::negated() const { return scaled(Rational(-1)); }

LinearFunction LinearFunction::scaled(const Rational& c) const {
  LinearFunction out = *this;
  for (auto& blockv : out.a)
    for (auto& x : blockv) x *= c;
  out.b *= c;
  return out;
}

SignTable::SignTable(unsigned arity, std::vector<bool> table) : arity_(arity), table_(std::move(table)) {
  if (arity > kMaxArity) throw PreconditionError("sign table arity exceeds 8");
  std::size_t expect = 1;
  for (unsigned i = 0; i < arity; ++i) expect *= 3;
  if (table_.size() != expect) throw PreconditionError("sign table must have 3^m entries");
}

SignTable SignTable::constant(unsigned arity, bool value) {
  std::size_t size = 1;
  for (unsigned i = 0; i < arity; ++i) size *= 3;
  return SignTable(arity, std::vector<bool>(size, value));
}

SignTable SignTable::from_function(unsigned arity, const std::function<bool(std::span<const int>)>& f) {
  std::size_t size = 1;
  for (unsigned i = 0; i < arity; ++i) size *= 3;
  std::vector<bool> table(size);
  std::vector<int> signs(arity);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rest = idx;
    for (unsigned i = 0; i < arity; ++i) {
      signs[i] = static_cast<int>(rest % 3) - 1;
      rest /= 3;
    }
    table[idx] = f(signs);
  }
  return SignTable(arity, std::move(table));
}

std::size_t SignTable::index_of(std::span<const int> signs) {
  std::size_t idx = 0;
  std::size_t weight = 1;
  for (int s : signs) {
    idx += static_cast<std::size_t>(s + 1) * weight;
    weight *= 3;
  }
  return idx;
}

void LinearDescription::validate() const {
  if (r == 0) throw PreconditionError("description: r must be positive");
  for (const auto& p : points)
    if (p.size() != d) throw PreconditionError("description: point of wrong dimension");
  for (const auto& f : functions) {
    if (f.a.size() != r) throw PreconditionError("description: function arity differs from r");
    for (const auto& blockv : f.a)
      if (blockv.size() != d) throw PreconditionError("description: coefficient block of wrong dimension");
  }
  if (phi.arity() != functions.size()) throw PreconditionError("description: sign table arity differs from m");
}

std::vector<int> LinearDescription::signs(std::span<const Vertex> tuple) const {
  std::vector<int> out(functions.size());
  for (std::size_t i = 0; i < functions.size(); ++i) out[i] = functions[i].evaluate(points, tuple).sign();
  return out;
}

bool LinearDescription::is_edge(std::span<const Vertex> tuple) const { return phi(signs(tuple)); }

OrderedHypergraph realize(const LinearDescription& desc) {
  desc.validate();
  auto shared = std::make_shared<const LinearDescription>(desc);
  return OrderedHypergraph::from_rule(desc.n(), desc.r,
                                      [shared](std::span<const Vertex> t) { return shared->is_edge(t); });
}

std::vector<int> decode_parts(std::span<const bool> parts) {
  std::vector<int> signs(parts.size() / 2);
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (parts[2 * j]) signs[j] = -1;
    else if (parts[2 * j + 1]) signs[j] = 1;
    else signs[j] = 0;
  }
  return signs;
}

PrimitiveDecomposition decompose_primitive(const LinearDescription& desc) {
  desc.validate();
  const std::size_t n = desc.points.size();
  const Rational r(static_cast<long>(desc.r));
  PrimitiveDecomposition out{{}, TruthTable::constant(0, false)};
  for (const auto& f : desc.functions) {
    Matrix<Rational> p(desc.r, n);
    for (std::size_t i = 0; i < desc.r; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational v = f.b / r;
        for (std::size_t c = 0; c < desc.d; ++c) v += f.a[i][c] * desc.points[j][c];
        p(i, j) = v;
      }
    Matrix<Rational> neg = p.map([](const Rational& x) { return -x; });
    out.witnesses.push_back(std::move(p));
    out.witnesses.push_back(std::move(neg));
  }
  const SignTable phi = desc.phi;
  out.combiner = TruthTable::from_function(static_cast<unsigned>(out.witnesses.size()),
                                           [&phi](std::span<const bool> parts) { return phi(decode_parts(parts)); });
  return out;
}

}  // namespace slr
