#include "slr/domination.hpp"

#include <algorithm>
#include <memory>

#include "slr/error.hpp"

namespace slr {

Threshold Threshold::parse(const std::string& text) {
  if (text == "-inf" || text == "-infinity" || text == "−inf") return minus_infinity();
  Integer v;
  if (v.set_str(text, 10) != 0) throw PreconditionError("threshold: not an integer: " + text);
  return Threshold(v);
}

std::optional<Color> domination_color(const DominationInstance& inst, std::span<const Vertex> e) {
  const std::size_t r = inst.r();
  if (e.size() != r) throw PreconditionError("domination color: tuple size differs from r");
  const bool finite = !inst.h.is_minus_infinity();
  if (r == 1) {
    const Integer& v = inst.P(0, e[0] - 1);
    if (finite && v <= inst.h.value()) return 0;
    if (!finite || v >= inst.h.value() + 4) return 1;
    return std::nullopt;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < r; ++i)
    if (inst.P(i, e[i] - 1) > inst.P(best, e[best] - 1)) best = i;
  const Integer& top = inst.P(best, e[best] - 1);
  if (finite && top <= inst.h.value()) return 0;
  if (finite && top < inst.h.value() + 4) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i)
    if (i != best && inst.P(i, e[i] - 1) + 2 > top) return std::nullopt;
  return static_cast<Color>(best + 1);
}

ColoredHypergraph domination_hypergraph(const DominationInstance& inst) {
  auto shared = std::make_shared<const DominationInstance>(inst);
  return ColoredHypergraph(inst.n(), static_cast<unsigned>(inst.r()),
                           [shared](std::span<const Vertex> e) { return domination_color(*shared, e); });
}

namespace {

bool row_direction(std::span<const Integer> row, bool& increasing) {
  if (row.size() < 2) {
    increasing = true;
    return true;
  }
  increasing = row[0] < row[1];
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (increasing ? !(row[j - 1] < row[j]) : !(row[j] < row[j - 1])) return false;
  }
  return true;
}

bool column_is_low(const DominationInstance& inst, std::size_t col) {
  const Integer limit = inst.h.value() + 4;
  for (std::size_t i = 0; i < inst.r(); ++i)
    if (inst.P(i, col) >= limit) return false;
  return true;
}

struct Active {
  std::size_t src;
  std::vector<std::size_t> rows;
  std::vector<bool> increasing;  // per original row

  bool uniform() const {
    for (std::size_t i : rows)
      if (increasing[i] != increasing[rows.front()]) return false;
    return true;
  }
};

class Recursion {
 public:
  explicit Recursion(const std::vector<DominationInstance>& instances) : in_(instances), fixed_(instances.size()) {}

  std::vector<std::size_t> run(std::vector<DominationStep>& trace) {
    trace_ = &trace;
    std::vector<std::size_t> cols(in_.empty() ? 0 : in_.front().P.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    for (std::size_t l = 0; l < in_.size(); ++l) {
      Active a{l, {}, std::vector<bool>(in_[l].r())};
      for (std::size_t i = 0; i < in_[l].r(); ++i) {
        a.rows.push_back(i);
        bool inc = true;
        if (!row_direction(in_[l].P.row(i), inc))
          throw PreconditionError("domination: rows of P must be strictly monotone");
        a.increasing[i] = inc;
      }
      active_.push_back(std::move(a));
    }
    eliminate_bad(cols);
    while (true) {
      drop_single_rows(cols.size());
      if (active_.empty() || cols.empty()) return cols;
      if (split_mixed(cols)) continue;
      if (dominated_row_case(cols)) continue;
      return spread_case(cols);
    }
  }

  const std::vector<std::optional<Color>>& fixed() const { return fixed_; }

 private:
  const Integer& at(const Active& a, std::size_t row, std::size_t col) const { return in_[a.src].P(row, col); }

  void step(std::string kind, std::size_t inst, std::vector<std::size_t> rows, std::size_t before, std::size_t after) {
    trace_->push_back({std::move(kind), inst, std::move(rows), before, after});
  }

  // Instances with a column whose entries all lie below h+4.
  void eliminate_bad(std::vector<std::size_t>& cols) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = active_.begin(); it != active_.end(); ++it) {
        const auto& inst = in_[it->src];
        if (inst.h.is_minus_infinity()) continue;
        std::vector<std::size_t> low, high;
        for (std::size_t c : cols) (column_is_low(inst, c) ? low : high).push_back(c);
        if (low.empty()) continue;
        const std::size_t before = cols.size();
        if (2 * low.size() >= before) {
          if (low.size() <= 6) cols.clear();
          else cols.assign(low.begin() + 3, low.end() - 3);
          fixed_[it->src] = 0;
          step("bad-low", it->src, {}, before, cols.size());
          active_.erase(it);
        } else {
          cols = std::move(high);
          step("bad-high", it->src, {}, before, cols.size());
        }
        changed = true;
        break;
      }
    }
  }

  void drop_single_rows(std::size_t n) {
    for (auto it = active_.begin(); it != active_.end();) {
      if (it->rows.size() == 1) {
        fixed_[it->src] = static_cast<Color>(it->rows.front() + 1);
        step("single-row", it->src, {it->rows.front()}, n, n);
        it = active_.erase(it);
      } else {
        ++it;
      }
    }
  }

  bool split_mixed(std::vector<std::size_t>& cols) {
    for (auto& a : active_) {
      if (a.uniform()) continue;
      const std::size_t n = cols.size();
      std::vector<std::size_t> inc, dec;
      for (std::size_t i : a.rows) (a.increasing[i] ? inc : dec).push_back(i);
      auto col_max = [&](const std::vector<std::size_t>& rows, std::size_t c) -> const Integer& {
        const Integer* best = &at(a, rows.front(), c);
        for (std::size_t i : rows)
          if (at(a, i, c) > *best) best = &at(a, i, c);
        return *best;
      };
      // The increasing maximum grows and the other shrinks, so q0 is found by
      // binary search; q0 is 1-based and defaults to N.
      std::size_t lo = 0, hi = n;
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (col_max(inc, cols[mid]) > col_max(dec, cols[mid])) hi = mid;
        else lo = mid + 1;
      }
      const std::size_t q0 = lo < n ? lo + 1 : n;
      if (2 * q0 > n) {
        cols.resize(q0 >= 2 ? q0 - 2 : 0);
        step("mixed-prefix", a.src, inc, n, cols.size());
        a.rows = dec;
      } else {
        cols.erase(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(q0));
        step("mixed-suffix", a.src, dec, n, cols.size());
        a.rows = inc;
      }
      return true;
    }
    return false;
  }

  std::size_t total_rows() const {
    std::size_t r = 0;
    for (const auto& a : active_) r += a.rows.size();
    return r;
  }

  // x > N^((R-k)/(R-k+1)) for x > 0, compared exactly.
  bool exceeds_t(std::size_t x, std::size_t n) const {
    const unsigned long e = total_rows() - active_.size();
    return pow(Integer(static_cast<unsigned long>(x)), e + 1) > pow(Integer(static_cast<unsigned long>(n)), e);
  }

  // Smallest 1-based s such that some row before the last reaches the last
  // row's entry at q; N if none.
  std::size_t threshold_increasing(const Active& a, const std::vector<std::size_t>& cols, std::size_t q) const {
    const std::size_t n = cols.size();
    const Integer& v = at(a, a.rows.back(), cols[q - 1]);
    std::size_t best = n;
    for (std::size_t k = 0; k + 1 < a.rows.size(); ++k) {
      const std::size_t row = a.rows[k];
      auto it = std::partition_point(cols.begin(), cols.end(), [&](std::size_t c) { return at(a, row, c) < v; });
      if (it != cols.end()) best = std::min(best, static_cast<std::size_t>(it - cols.begin()) + 1);
    }
    return best;
  }

  // Largest 1-based s such that some row after the first reaches the first
  // row's entry at q; 1 if none.
  std::size_t threshold_decreasing(const Active& a, const std::vector<std::size_t>& cols, std::size_t q) const {
    const Integer& v = at(a, a.rows.front(), cols[q - 1]);
    std::size_t best = 1;
    for (std::size_t k = 1; k < a.rows.size(); ++k) {
      const std::size_t row = a.rows[k];
      auto it = std::partition_point(cols.begin(), cols.end(), [&](std::size_t c) { return at(a, row, c) >= v; });
      const auto count = static_cast<std::size_t>(it - cols.begin());
      if (count > 0) best = std::max(best, count);
    }
    return best;
  }

  bool dominated_row_case(std::vector<std::size_t>& cols) {
    const std::size_t n = cols.size();
    for (auto& a : active_) {
      if (!a.increasing[a.rows.front()]) continue;
      for (std::size_t q = 1; q <= n; ++q) {
        const std::size_t s = threshold_increasing(a, cols, q);
        if (q > s && exceeds_t(q - s, n)) {
          std::vector<std::size_t> next(cols.begin() + static_cast<std::ptrdiff_t>(s + 1),
                                        cols.begin() + static_cast<std::ptrdiff_t>(q));
          cols = std::move(next);
          step("case-1", a.src, {a.rows.back()}, n, cols.size());
          a.rows.pop_back();
          return true;
        }
      }
    }
    for (auto& a : active_) {
      if (a.increasing[a.rows.front()]) continue;
      for (std::size_t q = 1; q <= n; ++q) {
        const std::size_t s = threshold_decreasing(a, cols, q);
        if (s > q && exceeds_t(s - q, n)) {
          std::vector<std::size_t> next;
          if (s >= q + 2)
            next.assign(cols.begin() + static_cast<std::ptrdiff_t>(q - 1),
                        cols.begin() + static_cast<std::ptrdiff_t>(s - 2));
          cols = std::move(next);
          step("case-2", a.src, {a.rows.front()}, n, cols.size());
          a.rows.erase(a.rows.begin());
          return true;
        }
      }
    }
    return false;
  }

  std::vector<std::size_t> spread_case(const std::vector<std::size_t>& cols) {
    const std::size_t n = cols.size();
    const unsigned long e = total_rows() - active_.size();
    const Integer ceil_t = ceil_root(pow(Integer(static_cast<unsigned long>(n)), e), e + 1);
    const std::size_t z = ceil_t.get_ui() + 2;
    std::vector<std::size_t> out;
    for (std::size_t i = 2; i + 1 <= n / z; ++i) out.push_back(cols[i * z - 1]);
    for (const auto& a : active_) {
      const bool inc = a.increasing[a.rows.front()];
      const std::size_t row = inc ? a.rows.back() : a.rows.front();
      fixed_[a.src] = static_cast<Color>(row + 1);
      step("case-3", a.src, {row}, n, out.size());
    }
    active_.clear();
    return out;
  }

  const std::vector<DominationInstance>& in_;
  std::vector<Active> active_;
  std::vector<std::optional<Color>> fixed_;
  std::vector<DominationStep>* trace_ = nullptr;
};

}  // namespace

std::size_t count_bad_instances(const std::vector<DominationInstance>& instances) {
  std::size_t bad = 0;
  for (const auto& inst : instances) {
    if (inst.h.is_minus_infinity()) continue;
    for (std::size_t c = 0; c < inst.P.cols(); ++c)
      if (column_is_low(inst, c)) {
        ++bad;
        break;
      }
  }
  return bad;
}

bool meets_domination_bound(std::size_t clique, std::size_t n, std::size_t total_rows, std::size_t k,
                            std::size_t bad) {
  if (total_rows < k) throw PreconditionError("domination bound: fewer rows than instances");
  const unsigned long e = total_rows - k + 1;
  const Integer lhs = pow(Integer(static_cast<unsigned long>(clique)) * pow(Integer(3), total_rows + bad), e);
  return lhs >= Integer(static_cast<unsigned long>(n));
}

DominationResult domination_clique(const std::vector<DominationInstance>& instances,
                                   const DominationOptions& options) {
  if (instances.empty()) throw PreconditionError("domination: need at least one instance");
  const std::size_t n = instances.front().P.cols();
  std::size_t total = 0;
  for (const auto& inst : instances) {
    if (inst.r() == 0) throw PreconditionError("domination: instance with no rows");
    if (inst.P.cols() != n) throw PreconditionError("domination: instances differ in N");
    total += inst.r();
  }

  DominationResult out;
  Recursion rec(instances);
  const std::vector<std::size_t> cols = rec.run(out.trace);
  for (std::size_t c : cols) out.clique.push_back(static_cast<Vertex>(c + 1));
  out.recursion_size = out.clique.size();

  std::vector<ColoredHypergraph> hs;
  hs.reserve(instances.size());
  for (const auto& inst : instances) hs.push_back(domination_hypergraph(inst));
  auto verify = [&](const std::vector<Vertex>& clique) {
    std::vector<Color> colors;
    for (const auto& h : hs) {
      auto c = is_monochromatic(h, clique);
      if (!c) return std::optional<std::vector<Color>>();
      colors.push_back(*c);
    }
    return std::optional<std::vector<Color>>(std::move(colors));
  };
  auto colors = verify(out.clique);
  if (!colors) throw InternalError("domination recursion produced a set that is not a common monochromatic clique");
  for (std::size_t l = 0; l < instances.size(); ++l) {
    const auto& f = rec.fixed()[l];
    if ((*colors)[l] != kAnyColor && f && *f != (*colors)[l])
      throw InternalError("domination recursion color disagrees with verification");
  }
  out.colors = std::move(*colors);

  const std::size_t bad = count_bad_instances(instances);
  out.below_threshold = !meets_domination_bound(out.clique.size(), n, total, instances.size(), bad);
  if (out.below_threshold && options.exhaustive_fallback) {
    try {
      auto best = max_common_monochromatic_clique(hs, options.fallback_budget);
      if (best.best.size > out.clique.size()) {
        auto check = verify(best.best.witness);
        if (!check) throw InternalError("exhaustive domination fallback returned an invalid set");
        const std::size_t before = out.clique.size();
        out.clique = best.best.witness;
        out.colors = std::move(*check);
        out.trace.push_back({"exhaustive-fallback", 0, {}, before, out.clique.size()});
      }
    } catch (const OracleBudgetExceeded&) {
      out.trace.push_back({"fallback-budget-exceeded", 0, {}, out.clique.size(), out.clique.size()});
    }
  }
  return out;
}

SharpnessFamily domination_sharpness_instance(const std::vector<unsigned>& rows, unsigned n) {
  if (rows.empty() || n < 2) throw PreconditionError("sharpness family: need k >= 1 and n >= 2");
  std::size_t total = 0;
  for (unsigned r : rows) {
    if (r < 2) throw PreconditionError("sharpness family: every r_l must be at least 2");
    total += r;
  }
  const unsigned long e = total - rows.size() + 1;
  const Integer big_n = pow(Integer(n), e);
  if (big_n > Integer(1UL << 24)) throw PreconditionError("sharpness family: size guard (N <= 2^24)");
  SharpnessFamily out;
  out.n_vertices = big_n.get_ui();
  out.bound = total * n + 2 * total;
  const Threshold h(-big_n - 4);
  long prefix = 0;
  for (std::size_t l = 0; l < rows.size(); ++l) {
    const long tau = -static_cast<long>(l + 1) + prefix;
    Matrix<Integer> p(rows[l], out.n_vertices);
    for (unsigned i = 0; i < rows[l]; ++i) {
      const Integer sub = pow(Integer(n), static_cast<unsigned long>(tau + i + 1));
      for (std::size_t q = 0; q < out.n_vertices; ++q) p(i, q) = Integer(static_cast<unsigned long>(q + 1)) - sub;
    }
    out.instances.push_back({std::move(p), h});
    prefix += rows[l];
  }
  return out;
}

}  // namespace slr
