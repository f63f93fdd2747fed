#include "slr/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "slr/error.hpp"

namespace slr {

namespace {

struct TupleHash {
  using is_transparent = void;
  std::size_t operator()(std::span<const Vertex> t) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex v : t) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
  std::size_t operator()(const Tuple& t) const { return (*this)(std::span<const Vertex>(t)); }
};

struct TupleEq {
  using is_transparent = void;
  bool operator()(std::span<const Vertex> a, std::span<const Vertex> b) const {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }
  bool operator()(const Tuple& a, const Tuple& b) const { return a == b; }
  bool operator()(const Tuple& a, std::span<const Vertex> b) const { return (*this)(std::span<const Vertex>(a), b); }
  bool operator()(std::span<const Vertex> a, const Tuple& b) const { return (*this)(a, std::span<const Vertex>(b)); }
};

std::vector<Vertex> sorted_unique(std::span<const Vertex> s) {
  std::vector<Vertex> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Vertex> iota_vertices(Vertex n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

}  // namespace

struct OrderedHypergraph::EdgeSet {
  std::unordered_set<Tuple, TupleHash, TupleEq> set;
};

bool for_each_subset(std::span<const Vertex> vertices, unsigned r,
                     const std::function<bool(std::span<const Vertex>)>& f) {
  const std::size_t n = vertices.size();
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i;
  std::vector<Vertex> tuple(r);
  while (true) {
    for (unsigned i = 0; i < r; ++i) tuple[i] = vertices[idx[i]];
    if (!f(tuple)) return false;
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

OrderedHypergraph::OrderedHypergraph(Vertex n, unsigned r)
    : n_(n), r_(r), edges_(std::make_shared<EdgeSet>()) {
  if (r == 0) throw PreconditionError("hypergraph uniformity must be positive");
}

OrderedHypergraph OrderedHypergraph::from_edges(Vertex n, unsigned r, const std::vector<Tuple>& edges) {
  OrderedHypergraph h(n, r);
  auto set = std::make_shared<EdgeSet>();
  for (const auto& e : edges) {
    if (e.size() != r) throw PreconditionError("edge has wrong size");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > n) throw PreconditionError("edge vertex out of range");
      if (i > 0 && e[i - 1] >= e[i]) throw PreconditionError("edge tuple must be strictly increasing");
    }
    set->set.insert(e);
  }
  h.edges_ = std::move(set);
  return h;
}

OrderedHypergraph OrderedHypergraph::from_rule(Vertex n, unsigned r, EdgeRule rule) {
  OrderedHypergraph h(n, r);
  h.edges_.reset();
  h.rule_ = std::make_shared<const EdgeRule>(std::move(rule));
  return h;
}

OrderedHypergraph OrderedHypergraph::complete(Vertex n, unsigned r) {
  return from_rule(n, r, [](std::span<const Vertex>) { return true; });
}

bool OrderedHypergraph::contains(std::span<const Vertex> tuple) const {
  if (rule_) return (*rule_)(tuple);
  return edges_->set.find(tuple) != edges_->set.end();
}

std::vector<Tuple> OrderedHypergraph::edges(std::uint64_t budget) const {
  std::vector<Tuple> out;
  if (!rule_) {
    out.assign(edges_->set.begin(), edges_->set.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  if (binomial_saturating(n_, r_) > budget)
    throw OracleBudgetExceeded("oracle budget exceeded: edge enumeration of a rule-backed hypergraph");
  auto all = iota_vertices(n_);
  for_each_subset(all, r_, [&](std::span<const Vertex> t) {
    if ((*rule_)(t)) out.emplace_back(t.begin(), t.end());
    return true;
  });
  return out;
}

OrderedHypergraph OrderedHypergraph::materialize(std::uint64_t budget) const {
  if (!rule_) return *this;
  return from_edges(n_, r_, edges(budget));
}

OrderedHypergraph OrderedHypergraph::complement() const {
  OrderedHypergraph self = *this;
  return from_rule(n_, r_, [self](std::span<const Vertex> t) { return !self.contains(t); });
}

OrderedHypergraph OrderedHypergraph::induced(std::span<const Vertex> vertices) const {
  auto vs = sorted_unique(vertices);
  for (Vertex v : vs)
    if (v < 1 || v > n_) throw PreconditionError("induced: vertex out of range");
  OrderedHypergraph self = *this;
  return from_rule(static_cast<Vertex>(vs.size()), r_, [self, vs](std::span<const Vertex> t) {
    std::vector<Vertex> mapped(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = vs[t[i] - 1];
    return self.contains(mapped);
  });
}

bool same_edges(const OrderedHypergraph& a, const OrderedHypergraph& b, std::uint64_t budget) {
  if (a.n() != b.n() || a.r() != b.r()) return false;
  return a.edges(budget) == b.edges(budget);
}

TruthTable::TruthTable(unsigned arity, std::vector<bool> table) : arity_(arity), table_(std::move(table)) {
  if (arity > 24) throw PreconditionError("truth table arity too large");
  if (table_.size() != (std::size_t{1} << arity)) throw PreconditionError("truth table has wrong length");
}

TruthTable TruthTable::constant(unsigned arity, bool value) {
  return TruthTable(arity, std::vector<bool>(std::size_t{1} << arity, value));
}

TruthTable TruthTable::projection(unsigned arity, unsigned index) {
  return from_function(arity, [index](std::span<const bool> in) { return in[index]; });
}

TruthTable TruthTable::from_function(unsigned arity, const std::function<bool(std::span<const bool>)>& f) {
  std::vector<bool> table(std::size_t{1} << arity);
  bool in[32];
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    for (unsigned i = 0; i < arity; ++i) in[i] = (idx >> i) & 1U;
    table[idx] = f(std::span<const bool>(in, arity));
  }
  return TruthTable(arity, std::move(table));
}

bool TruthTable::operator()(std::span<const bool> inputs) const {
  if (inputs.size() != arity_) throw PreconditionError("truth table input has wrong arity");
  std::size_t idx = 0;
  for (unsigned i = 0; i < arity_; ++i)
    if (inputs[i]) idx |= std::size_t{1} << i;
  return table_[idx];
}

bool TruthTable::depends_on(unsigned input) const {
  const std::size_t bit = std::size_t{1} << input;
  for (std::size_t idx = 0; idx < table_.size(); ++idx)
    if (!(idx & bit) && table_[idx] != table_[idx | bit]) return true;
  return false;
}

OrderedHypergraph boolean_combination(const std::vector<OrderedHypergraph>& parts, const TruthTable& combiner) {
  if (parts.empty()) throw PreconditionError("boolean_combination needs at least one part");
  return boolean_combination(parts.front().n(), parts.front().r(), parts, combiner);
}

OrderedHypergraph boolean_combination(Vertex n, unsigned r, const std::vector<OrderedHypergraph>& parts,
                                      const TruthTable& combiner) {
  if (combiner.arity() != parts.size()) throw PreconditionError("combiner arity differs from number of parts");
  for (const auto& p : parts)
    if (p.n() != n || p.r() != r) throw PreconditionError("boolean_combination: parts differ in N or r");
  return OrderedHypergraph::from_rule(n, r, [parts, combiner](std::span<const Vertex> t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].contains(t)) idx |= std::size_t{1} << i;
    return combiner.at(idx);
  });
}

ColoredHypergraph ColoredHypergraph::from_colors(Vertex n, unsigned r,
                                                 const std::vector<std::pair<Tuple, Color>>& colors) {
  auto table = std::make_shared<std::map<Tuple, Color>>();
  for (const auto& [t, c] : colors) {
    if (t.size() != r) throw PreconditionError("colored tuple has wrong size");
    if (!table->emplace(t, c).second) throw PreconditionError("tuple colored twice");
  }
  return ColoredHypergraph(n, r, [table](std::span<const Vertex> t) -> std::optional<Color> {
    auto it = table->find(Tuple(t.begin(), t.end()));
    if (it == table->end()) return std::nullopt;
    return it->second;
  });
}

std::vector<std::pair<Tuple, Color>> ColoredHypergraph::colored_tuples(std::uint64_t budget) const {
  if (binomial_saturating(n_, r_) > budget)
    throw OracleBudgetExceeded("oracle budget exceeded: colored tuple enumeration");
  std::vector<std::pair<Tuple, Color>> out;
  auto all = iota_vertices(n_);
  for_each_subset(all, r_, [&](std::span<const Vertex> t) {
    if (auto c = rule_(t)) out.emplace_back(Tuple(t.begin(), t.end()), *c);
    return true;
  });
  return out;
}

bool is_clique(const OrderedHypergraph& h, std::span<const Vertex> s) {
  auto v = sorted_unique(s);
  return for_each_subset(v, h.r(), [&](std::span<const Vertex> t) { return h.contains(t); });
}

bool is_independent(const OrderedHypergraph& h, std::span<const Vertex> s) {
  auto v = sorted_unique(s);
  return for_each_subset(v, h.r(), [&](std::span<const Vertex> t) { return !h.contains(t); });
}

std::optional<Color> is_monochromatic(const ColoredHypergraph& h, std::span<const Vertex> s) {
  auto v = sorted_unique(s);
  if (v.size() < h.r()) return kAnyColor;
  std::optional<Color> common;
  bool ok = for_each_subset(v, h.r(), [&](std::span<const Vertex> t) {
    auto c = h.color(t);
    if (!c) return false;
    if (!common) common = c;
    return *common == *c;
  });
  if (!ok) return std::nullopt;
  return common;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(Vertex n, const std::vector<SubsetConstraint>& cons, std::uint64_t budget)
      : n_(n), cons_(cons), budget_(budget) {}

  OracleResult run() {
    std::vector<Vertex> cands;
    for (Vertex v = 1; v <= n_; ++v) {
      bool ok = true;
      for (const auto& c : cons_) {
        if (c.r != 1) continue;
        charge();
        Vertex t[1] = {v};
        if (!c.accept(t)) { ok = false; break; }
      }
      if (ok) cands.push_back(v);
    }
    // Sets below every uniformity are constrained only by r = 1 rules.
    best_.clear();
    dfs(cands);
    return {best_.size(), best_};
  }

 private:
  void charge() {
    if (++used_ > budget_) throw OracleBudgetExceeded("oracle budget exceeded");
  }

  // All tuples of the form T + {c, w}, with T an (r-2)-subset of current_.
  bool compatible(Vertex c, Vertex w) {
    for (const auto& con : cons_) {
      if (con.r < 2) continue;
      const unsigned need = con.r - 2;
      if (need > current_.size()) continue;
      bool ok = for_each_subset(current_, need, [&](std::span<const Vertex> t) {
        charge();
        scratch_.assign(t.begin(), t.end());
        scratch_.push_back(c);
        scratch_.push_back(w);
        return con.accept(scratch_);
      });
      if (!ok) return false;
    }
    return true;
  }

  void dfs(const std::vector<Vertex>& cands) {
    charge();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (current_.size() + (cands.size() - i) <= best_.size()) return;
      const Vertex c = cands[i];
      std::vector<Vertex> next;
      next.reserve(cands.size() - i - 1);
      for (std::size_t j = i + 1; j < cands.size(); ++j)
        if (compatible(c, cands[j])) next.push_back(cands[j]);
      current_.push_back(c);
      if (current_.size() > best_.size()) best_ = current_;
      if (current_.size() + next.size() > best_.size()) dfs(next);
      current_.pop_back();
    }
  }

  Vertex n_;
  const std::vector<SubsetConstraint>& cons_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  std::vector<Vertex> scratch_;
};

}  // namespace

OracleResult max_homogeneous_set(Vertex n, const std::vector<SubsetConstraint>& constraints, std::uint64_t budget) {
  return BranchAndBound(n, constraints, budget).run();
}

OracleResult brute_omega(const OrderedHypergraph& h, std::uint64_t budget) {
  std::vector<SubsetConstraint> cons{{h.r(), [&h](std::span<const Vertex> t) { return h.contains(t); }}};
  return max_homogeneous_set(h.n(), cons, budget);
}

OracleResult brute_alpha(const OrderedHypergraph& h, std::uint64_t budget) {
  std::vector<SubsetConstraint> cons{{h.r(), [&h](std::span<const Vertex> t) { return !h.contains(t); }}};
  return max_homogeneous_set(h.n(), cons, budget);
}

MonochromaticResult max_common_monochromatic_clique(const std::vector<ColoredHypergraph>& hs, std::uint64_t budget) {
  MonochromaticResult result;
  if (hs.empty()) return result;
  const Vertex n = hs.front().n();
  for (const auto& h : hs)
    if (h.n() != n) throw PreconditionError("colored hypergraphs differ in N");
  std::vector<Color> combo(hs.size(), 0);
  std::vector<Color> best_combo = combo;
  std::uint64_t remaining = budget;
  bool first = true;
  while (true) {
    std::vector<SubsetConstraint> cons;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const ColoredHypergraph* h = &hs[i];
      const Color want = combo[i];
      cons.push_back({h->r(), [h, want](std::span<const Vertex> t) {
                        auto c = h->color(t);
                        return c && *c == want;
                      }});
    }
    OracleResult r = max_homogeneous_set(n, cons, remaining);
    if (first || r.size > result.best.size) {
      result.best = r;
      best_combo = combo;
      first = false;
    }
    std::size_t i = 0;
    while (i < hs.size() && combo[i] == static_cast<Color>(hs[i].r())) combo[i++] = 0;
    if (i == hs.size()) break;
    ++combo[i];
  }
  result.colors.resize(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i)
    result.colors[i] = result.best.size < hs[i].r() ? kAnyColor : best_combo[i];
  return result;
}

}  // namespace slr
