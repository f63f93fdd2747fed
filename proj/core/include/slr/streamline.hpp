#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "slr/error.hpp"
#include "slr/numeric.hpp"

namespace slr {

enum class Direction : std::uint8_t { Increasing, Decreasing };
enum class Shape : std::uint8_t { Cup, Cap };

// Sign x direction of a Delta-exponential sequence.
struct ExpType {
  bool positive = true;
  bool up = true;

  std::string str() const;
  static ExpType parse(const std::string& text);
  friend bool operator==(const ExpType&, const ExpType&) = default;
};

std::string to_string(Direction d);
std::string to_string(Shape s);
Direction parse_direction(const std::string& text);
Shape parse_shape(const std::string& text);

// Smallest k >= 1 with 2^k * x > d, for 0 < x <= d. Equivalently
// 2^-k < x/d <= 2^(-k+1). For perturbed values an infinitesimal x against a
// non-infinitesimal d lands in a separate tier above kInfinitesimalTier.
inline constexpr long kInfinitesimalTier = 1L << 40;
long dyadic_level(const Rational& x, const Rational& d);
long dyadic_level(const PerturbedValue& x, const PerturbedValue& d);
long dyadic_level(std::int64_t x, std::int64_t d);

// ---------------------------------------------------------------------------
// Monotone subsequences

namespace detail {

// len[i] = length of the longest chain starting at i under less.
template <class Get, class Less>
std::vector<std::size_t> chain_lengths(std::size_t n, Get get, Less less) {
  std::vector<std::size_t> len(n);
  std::vector<std::size_t> best;  // best[L-1]: index of the largest start of a chain of length L
  for (std::size_t ii = n; ii-- > 0;) {
    std::size_t lo = 0, hi = best.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (less(get(ii), get(best[mid]))) lo = mid + 1; else hi = mid;
    }
    len[ii] = lo + 1;
    if (best.size() < lo + 1) best.push_back(ii);
    else if (less(get(best[lo]), get(ii))) best[lo] = ii;
  }
  return len;
}

// Lexicographically least index set of a chain of length k.
template <class Get, class Less>
std::vector<std::size_t> least_chain(std::size_t n, Get get, Less less, const std::vector<std::size_t>& len,
                                     std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t j = 0; j < n && out.size() < k; ++j) {
    const std::size_t need = k - out.size();
    if (len[j] >= need && (out.empty() || less(get(out.back()), get(j)))) out.push_back(j);
  }
  return out;
}

}  // namespace detail

template <class T>
bool has_distinct_entries(std::span<const T> x) {
  std::vector<std::size_t> idx(x.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (x[idx[i - 1]] == x[idx[i]]) return false;
  return true;
}

template <class T>
std::optional<Direction> monotone_direction(std::span<const T> x) {
  bool inc = true, dec = true;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i - 1] < x[i])) inc = false;
    if (!(x[i] < x[i - 1])) dec = false;
  }
  if (inc) return Direction::Increasing;
  if (dec) return Direction::Decreasing;
  return std::nullopt;
}

struct MonotoneRun {
  Direction direction;
  std::vector<std::size_t> indices;
};

// Increasing run of length k+1 or decreasing run of length l+1; the
// lexicographically least increasing run whenever one exists.
template <class T>
MonotoneRun monotone_subsequence(std::span<const T> x, std::size_t k, std::size_t l) {
  if (x.size() < k * l + 1)
    throw PreconditionError("monotone subsequence: sequence shorter than k*l+1 (Erdos-Szekeres)");
  if (!has_distinct_entries(x)) throw PreconditionError("monotone subsequence: entries must be distinct");
  auto get = [&](std::size_t i) -> const T& { return x[i]; };
  auto lt = [](const T& a, const T& b) { return a < b; };
  auto gt = [](const T& a, const T& b) { return b < a; };
  auto inc = detail::chain_lengths(x.size(), get, lt);
  if (*std::max_element(inc.begin(), inc.end()) >= k + 1)
    return {Direction::Increasing, detail::least_chain(x.size(), get, lt, inc, k + 1)};
  auto dec = detail::chain_lengths(x.size(), get, gt);
  if (*std::max_element(dec.begin(), dec.end()) < l + 1) throw InternalError("monotone subsequence: no outcome found");
  return {Direction::Decreasing, detail::least_chain(x.size(), get, gt, dec, l + 1)};
}

// Longest strictly monotone subsequence, increasing on ties, lex-least.
template <class T>
MonotoneRun longest_monotone_run(std::span<const T> x) {
  if (x.empty()) return {Direction::Increasing, {}};
  auto get = [&](std::size_t i) -> const T& { return x[i]; };
  auto lt = [](const T& a, const T& b) { return a < b; };
  auto gt = [](const T& a, const T& b) { return b < a; };
  auto inc = detail::chain_lengths(x.size(), get, lt);
  auto dec = detail::chain_lengths(x.size(), get, gt);
  std::size_t li = *std::max_element(inc.begin(), inc.end());
  std::size_t ld = *std::max_element(dec.begin(), dec.end());
  if (li >= ld) return {Direction::Increasing, detail::least_chain(x.size(), get, lt, inc, li)};
  return {Direction::Decreasing, detail::least_chain(x.size(), get, gt, dec, ld)};
}

struct RowMonotoneResult {
  std::vector<std::size_t> columns;  // 0-based, strictly increasing
  std::vector<Direction> directions;
};

// One pass per row, keeping the longest monotone run of that row.
template <class T>
RowMonotoneResult row_monotone_submatrix(const Matrix<T>& m) {
  RowMonotoneResult res;
  res.columns.resize(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) res.columns[j] = j;
  res.directions.assign(m.rows(), Direction::Increasing);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!has_distinct_entries(m.row(i))) throw PreconditionError("row-monotone extraction: row has repeated entries");
  if (m.cols() < 2) return res;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<T> vals;
    vals.reserve(res.columns.size());
    for (std::size_t c : res.columns) vals.push_back(m(i, c));
    MonotoneRun run = longest_monotone_run(std::span<const T>(vals));
    std::vector<std::size_t> kept;
    kept.reserve(run.indices.size());
    for (std::size_t p : run.indices) kept.push_back(res.columns[p]);
    res.columns = std::move(kept);
    res.directions[i] = run.direction;
  }
  if (res.columns.size() == 1)
    for (auto& d : res.directions) d = Direction::Increasing;
  return res;
}

// q x n^(2^q) matrix with no row-monotone submatrix wider than n.
Matrix<Rational> monotone_sharpness_matrix(unsigned q, unsigned n);

// ---------------------------------------------------------------------------
// Cups and caps

// Every triple i<j<l satisfies x_i + x_l >= 2 x_j.
template <class T>
bool is_cup(std::span<const T> x) {
  const std::size_t n = x.size();
  if (n < 3) return true;
  std::vector<std::size_t> suffix_min(n);
  suffix_min[n - 1] = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) suffix_min[i] = x[i] < x[suffix_min[i + 1]] ? i : suffix_min[i + 1];
  std::size_t prefix_min = 0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (x[prefix_min] + x[suffix_min[j + 1]] < x[j] + x[j]) return false;
    if (x[j] < x[prefix_min]) prefix_min = j;
  }
  return true;
}

// Every triple i<j<l satisfies x_i + x_l <= 2 x_j.
template <class T>
bool is_cap(std::span<const T> x) {
  const std::size_t n = x.size();
  if (n < 3) return true;
  std::vector<std::size_t> suffix_max(n);
  suffix_max[n - 1] = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) suffix_max[i] = x[suffix_max[i + 1]] < x[i] ? i : suffix_max[i + 1];
  std::size_t prefix_max = 0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (x[j] + x[j] < x[prefix_max] + x[suffix_max[j + 1]]) return false;
    if (x[prefix_max] < x[j]) prefix_max = j;
  }
  return true;
}

// Cup wins when a sequence is both.
template <class T>
std::optional<Shape> classify_shape(std::span<const T> x) {
  if (is_cup(x)) return Shape::Cup;
  if (is_cap(x)) return Shape::Cap;
  return std::nullopt;
}

namespace detail {

// Contiguous range [lo, hi) of original columns, or an explicit list.
class ColumnSet {
 public:
  static ColumnSet range(std::size_t lo, std::size_t hi) {
    ColumnSet c;
    c.lo_ = lo;
    c.hi_ = hi;
    return c;
  }
  static ColumnSet list(std::vector<std::size_t> v) {
    ColumnSet c;
    c.is_list_ = true;
    c.list_ = std::move(v);
    return c;
  }
  std::size_t size() const { return is_list_ ? list_.size() : hi_ - lo_; }
  std::size_t operator[](std::size_t k) const { return is_list_ ? list_[k] : lo_ + k; }
  ColumnSet sub(std::size_t a, std::size_t b) const {
    if (!is_list_) return range(lo_ + a, lo_ + b);
    return list(std::vector<std::size_t>(list_.begin() + static_cast<std::ptrdiff_t>(a),
                                         list_.begin() + static_cast<std::ptrdiff_t>(b)));
  }

 private:
  bool is_list_ = false;
  std::size_t lo_ = 0, hi_ = 0;
  std::vector<std::size_t> list_;
};

enum class Outcome { AllCaps, HasCup };

struct Found {
  Outcome outcome;
  std::vector<std::size_t> columns;  // original columns, increasing
};

struct SearchState {
  bool guaranteed;
  std::uint64_t budget;
  std::uint64_t used = 0;
  void charge(std::uint64_t c = 1) {
    used += c;
    if (used > budget) throw OracleBudgetExceeded("oracle budget exceeded: cupcap search");
  }
};

// True when n >= 2^e.
bool at_least_pow2(std::size_t n, const Integer& e);
// Exponent of the explicit bound f_q(s,t) <= 2^e.
Integer cupcap_bound_exponent(std::size_t q, std::size_t s, std::size_t t);

template <class M>
using entry_t = std::remove_cvref_t<decltype(std::declval<const M&>()(0, 0))>;

// Rows flipped so that every row is increasing.
template <class M>
struct Oriented {
  const M& m;
  std::vector<bool> flip;
  entry_t<M> operator()(std::size_t i, std::size_t j) const { return flip[i] ? -m(i, j) : m(i, j); }
};

inline std::optional<Found> base_case(const ColumnSet& cols, std::size_t s, std::size_t t) {
  const std::size_t n = cols.size();
  auto ends = [&](std::size_t w) {
    std::vector<std::size_t> out;
    if (w >= 1) out.push_back(cols[0]);
    if (w >= 2) out.push_back(cols[n - 1]);
    return out;
  };
  if (s <= 2 && n >= s) return Found{Outcome::AllCaps, ends(s)};
  if (t <= 2 && n >= t) return Found{Outcome::HasCup, ends(t)};
  return std::nullopt;
}

// First position p in [lo, hi) with pred(p), for pred monotone false..true.
template <class Pred>
std::size_t first_true(std::size_t lo, std::size_t hi, Pred pred) {
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

// Single increasing row: cap of length s or cup of length t by midpoint split.
template <class A>
std::optional<Found> line_search(const A& a, std::size_t row, const ColumnSet& cols, std::size_t s, std::size_t t,
                                 SearchState& st) {
  st.charge();
  if (auto b = base_case(cols, s, t)) return b;
  const std::size_t n = cols.size();
  if (n < 2) return std::nullopt;
  const auto x1 = a(row, cols[0]);
  const auto xn = a(row, cols[n - 1]);
  const auto sum = x1 + xn;
  auto val = [&](std::size_t p) {
    st.charge();
    return a(row, cols[p]);
  };
  // Upper half: positions >= u with 2x >= x1 + xn (never position 0).
  const std::size_t u = first_true(1, n, [&](std::size_t p) { auto v = val(p); return !(v + v < sum); });
  // Lower half: positions < w with 2x <= x1 + xn (never position n-1).
  const std::size_t w = first_true(0, n - 1, [&](std::size_t p) { auto v = val(p); return sum < v + v; });
  const std::size_t upper = n - u;
  const std::size_t lower = w;

  auto try_upper = [&]() -> std::optional<Found> {
    auto f = line_search(a, row, cols.sub(u, n), s - 1, t, st);
    if (f && f->outcome == Outcome::AllCaps) f->columns.insert(f->columns.begin(), cols[0]);
    return f;
  };
  auto try_lower = [&]() -> std::optional<Found> {
    auto f = line_search(a, row, cols.sub(0, w), s, t - 1, st);
    if (f && f->outcome == Outcome::HasCup) f->columns.push_back(cols[n - 1]);
    return f;
  };

  if (st.guaranteed) {
    if (at_least_pow2(upper, Integer(static_cast<unsigned long>(s + t - 1)))) return try_upper();
    return try_lower();
  }
  const bool upper_ok = upper >= std::min(s - 1, t);
  const bool lower_ok = lower >= std::min(s, t - 1);
  if (upper >= lower) {
    if (upper_ok)
      if (auto f = try_upper()) return f;
    if (lower_ok)
      if (auto f = try_lower()) return f;
  } else {
    if (lower_ok)
      if (auto f = try_lower()) return f;
    if (upper_ok)
      if (auto f = try_upper()) return f;
  }
  return std::nullopt;
}

struct Segment {
  std::size_t start;  // position within the current column set
  long level;
};

// Level sets of an increasing row, left to right (levels decrease).
template <class A>
std::vector<Segment> level_segments(const A& a, std::size_t row, const ColumnSet& cols, SearchState& st) {
  const std::size_t n = cols.size();
  const auto first = a(row, cols[0]);
  const auto span_d = a(row, cols[n - 1]) - first;
  auto level = [&](std::size_t p) {
    st.charge();
    return dyadic_level(a(row, cols[p]) - first, span_d);
  };
  std::vector<Segment> segs;
  std::size_t pos = 1;
  while (pos < n) {
    const long lv = level(pos);
    segs.push_back({pos, lv});
    pos = first_true(pos + 1, n, [&](std::size_t p) { return level(p) < lv; });
  }
  return segs;
}

template <class A>
std::optional<Found> matrix_search(const A& a, const std::vector<std::size_t>& rows, const ColumnSet& cols,
                                   std::size_t s, std::size_t t, SearchState& st) {
  st.charge();
  if (rows.size() == 1) return line_search(a, rows[0], cols, s, t, st);
  if (auto b = base_case(cols, s, t)) return b;
  const std::size_t n = cols.size();
  if (n < 2) return std::nullopt;
  const std::size_t q = rows.size();

  std::vector<std::vector<Segment>> segs(q);
  for (std::size_t l = 0; l < q; ++l) segs[l] = level_segments(a, rows[l], cols, st);

  // Case (i): one element from every other nonempty level, counted from the
  // top level, makes that row a cup; recurse on the remaining rows.
  auto case_one = [&](std::size_t l) -> std::optional<Found> {
    const std::size_t p = segs[l].size();
    std::vector<std::size_t> picked;
    for (std::size_t k = 1; 2 * k <= p; ++k) picked.push_back(cols[segs[l][p - 2 * k].start]);
    std::sort(picked.begin(), picked.end());
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < q; ++i)
      if (i != l) rest.push_back(rows[i]);
    auto f = matrix_search(a, rest, ColumnSet::list(std::move(picked)), t, t, st);
    if (f) f->outcome = Outcome::HasCup;
    return f;
  };

  // Case (ii): an interval free of level boundaries; with column 1 every
  // row is a cap on it.
  std::vector<std::size_t> cuts;
  for (const auto& sv : segs)
    for (const auto& sg : sv) cuts.push_back(sg.start);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) intervals.emplace_back(cuts[i], cuts[i + 1]);
  std::stable_sort(intervals.begin(), intervals.end(), [](const auto& x, const auto& y) {
    return x.second - x.first > y.second - y.first;
  });
  auto case_two = [&](std::pair<std::size_t, std::size_t> j) -> std::optional<Found> {
    auto f = matrix_search(a, rows, cols.sub(j.first, j.second), s - 1, t, st);
    if (f && f->outcome == Outcome::AllCaps) f->columns.insert(f->columns.begin(), cols[0]);
    return f;
  };

  if (st.guaranteed) {
    const Integer need = cupcap_bound_exponent(q - 1, t, t) + 1;
    for (std::size_t l = 0; l < q; ++l)
      if (at_least_pow2(segs[l].size(), need)) return case_one(l);
    return case_two(intervals.front());
  }
  for (std::size_t l = 0; l < q; ++l)
    if (segs[l].size() / 2 >= t)
      if (auto f = case_one(l)) return f;
  constexpr std::size_t kIntervalsTried = 3;
  for (std::size_t i = 0; i < intervals.size() && i < kIntervalsTried; ++i) {
    const auto& j = intervals[i];
    if (j.second - j.first < std::min(s - 1, t)) break;
    if (auto f = case_two(j)) return f;
  }
  return std::nullopt;
}

template <class M>
std::vector<bool> decreasing_rows(const M& m) {
  std::vector<bool> flip(m.rows(), false);
  if (m.cols() < 2) return flip;
  for (std::size_t i = 0; i < m.rows(); ++i) flip[i] = m(i, m.cols() - 1) < m(i, 0);
  return flip;
}

}  // namespace detail

struct CupCapRun {
  Shape shape;
  std::vector<std::size_t> indices;
};

// Strictly increasing x with |x| >= 2^(s+t): a cap of length s or a cup of
// length t.
template <class T>
CupCapRun cup_or_cap(std::span<const T> x, std::size_t s, std::size_t t) {
  if (!detail::at_least_pow2(x.size(), Integer(static_cast<unsigned long>(s + t))))
    throw PreconditionError("cup-or-cap extraction: sequence shorter than 2^(s+t)");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i - 1] < x[i])) throw PreconditionError("cup-or-cap extraction: sequence must be strictly increasing");
  struct Row {
    std::span<const T> x;
    const T& operator()(std::size_t, std::size_t j) const { return x[j]; }
  } acc{x};
  detail::SearchState st{true, UINT64_MAX};
  auto f = detail::line_search(acc, 0, detail::ColumnSet::range(0, x.size()), s, t, st);
  if (!f) throw InternalError("cup-or-cap extraction failed within its guarantee");
  std::vector<T> vals;
  for (std::size_t j : f->columns) vals.push_back(x[j]);
  const std::span<const T> v(vals);
  if (f->outcome == detail::Outcome::AllCaps) {
    if (f->columns.size() != s || !is_cap(v)) throw InternalError("cup-or-cap extraction produced an invalid cap");
    return {Shape::Cap, f->columns};
  }
  if (f->columns.size() != t || !is_cup(v)) throw InternalError("cup-or-cap extraction produced an invalid cup");
  return {Shape::Cup, f->columns};
}

struct CupcapResult {
  std::vector<std::size_t> columns;  // 0-based, strictly increasing
  std::vector<Shape> shapes;         // per row, original orientation
  std::vector<Direction> directions;
};

namespace detail {

template <class M>
CupcapResult certify_cupcap(const M& m, std::vector<std::size_t> columns) {
  using T = entry_t<M>;
  CupcapResult res;
  res.columns = std::move(columns);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<T> vals;
    for (std::size_t j : res.columns) vals.push_back(m(i, j));
    const std::span<const T> v(vals);
    auto dir = monotone_direction(v);
    auto shape = classify_shape(v);
    if (!dir || !shape) throw InternalError("cupcap extraction produced a row that is not a monotone cup or cap");
    res.directions.push_back(res.columns.size() < 2 ? Direction::Increasing : *dir);
    res.shapes.push_back(*shape);
  }
  return res;
}

template <class M>
std::optional<CupcapResult> run_cupcap(const M& m, std::size_t n, SearchState& st) {
  if (n == 0 || m.rows() == 0) return certify_cupcap(m, {});
  if (m.cols() < n) return std::nullopt;
  Oriented<M> a{m, decreasing_rows(m)};
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  auto f = matrix_search(a, rows, ColumnSet::range(0, m.cols()), n, n, st);
  if (!f) return std::nullopt;
  if (f->columns.size() != n) throw InternalError("cupcap extraction returned the wrong width");
  return certify_cupcap(m, std::move(f->columns));
}

}  // namespace detail

// q x N row-monotone M with N >= 2^((q+1) n^q): a q x n cupcap submatrix by
// the constructive level-set recursion.
template <class M>
CupcapResult cupcap_submatrix(const M& m, std::size_t n) {
  const std::size_t q = m.rows();
  if (q > 0 && n > 0) {
    Integer e = Integer(static_cast<unsigned long>(q + 1)) * pow(Integer(static_cast<unsigned long>(n)), q);
    if (q == 1) e = Integer(static_cast<unsigned long>(2 * n));
    if (!detail::at_least_pow2(m.cols(), e))
      throw PreconditionError("cupcap extraction: need N >= 2^((q+1) n^q) columns");
  }
  detail::SearchState st{true, UINT64_MAX};
  auto res = detail::run_cupcap(m, n, st);
  if (!res) throw InternalError("cupcap extraction failed within its guarantee");
  return *res;
}

// Same recursion with thresholds relaxed to what the input actually allows.
template <class M>
std::optional<CupcapResult> cupcap_search(const M& m, std::size_t n, std::uint64_t budget) {
  detail::SearchState st{false, budget};
  return detail::run_cupcap(m, n, st);
}

// Widest cupcap submatrix reachable by cupcap_search, trying n = 2, 3, ...
template <class M>
CupcapResult widest_cupcap(const M& m, std::uint64_t budget) {
  using T = detail::entry_t<M>;
  bool whole = m.cols() >= 2;
  for (std::size_t i = 0; whole && i < m.rows(); ++i) {
    std::vector<T> vals;
    for (std::size_t j = 0; j < m.cols(); ++j) vals.push_back(m(i, j));
    whole = monotone_direction(std::span<const T>(vals)) && classify_shape(std::span<const T>(vals));
  }
  if (whole) {
    std::vector<std::size_t> all(m.cols());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    return detail::certify_cupcap(m, std::move(all));
  }
  CupcapResult best = detail::certify_cupcap(m, m.cols() >= 1 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{});
  for (std::size_t n = 2; n <= m.cols(); ++n) {
    auto r = cupcap_search(m, n, budget);
    if (!r) break;
    best = std::move(*r);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Exponential shifts

// ceil(log2 delta) for delta > 2.
unsigned exponential_stride(const Rational& delta);

template <class T>
bool is_exponential(std::span<const T> x, const Rational& delta, ExpType type) {
  const T zero{};
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const T& cur = x[i];
    const T& nxt = x[i + 1];
    T small, big;
    if (type.up) {
      small = type.positive ? cur : -cur;
      big = type.positive ? nxt : -nxt;
    } else {
      small = type.positive ? nxt : -nxt;
      big = type.positive ? cur : -cur;
    }
    const T scaled = small * delta;
    if (!(zero < scaled && scaled < big)) return false;
  }
  if (x.size() == 1) {
    const int sg = (zero < x[0]) ? 1 : (x[0] < zero ? -1 : 0);
    return sg == (type.positive ? 1 : -1);
  }
  return true;
}

template <class T>
struct ExponentialSample {
  std::vector<std::size_t> sample;  // 0-based positions z-1, 2z-1, ...
  T shift;
  std::size_t shift_source;  // position whose negation is the shift
  ExpType type;
  Shape shape;
  Direction direction;
};

// Samples every z-th entry (z = ceil(log2 delta)) of a monotone cup or cap
// and shifts by -x_1 or -x_N so the sample is delta-exponential.
template <class T>
ExponentialSample<T> exponential_shift(std::span<const T> x, const Rational& delta) {
  if (!(Rational(2) < delta)) throw PreconditionError("exponential shift: delta must exceed 2");
  const unsigned z = exponential_stride(delta);
  const std::size_t n = x.size();
  const std::size_t count = n == 0 ? 0 : (n - 1) / z;
  if (count < 2) throw PreconditionError("exponential shift: fewer than two samples (need N >= 2z+1)");
  auto dir = monotone_direction(x);
  if (!dir) throw PreconditionError("exponential shift: sequence must be strictly monotone");
  auto shape = classify_shape(x);
  if (!shape) throw PreconditionError("exponential shift: sequence is neither a cup nor a cap");
  ExponentialSample<T> out;
  out.direction = *dir;
  out.shape = *shape;
  for (std::size_t i = 1; i <= count; ++i) out.sample.push_back(i * z - 1);
  const bool inc = *dir == Direction::Increasing;
  const bool cup = *shape == Shape::Cup;
  if (inc && cup) {
    out.shift_source = 0;
    out.type = {true, true};
  } else if (inc && !cup) {
    out.shift_source = n - 1;
    out.type = {false, false};
  } else if (!inc && cup) {
    out.shift_source = n - 1;
    out.type = {true, false};
  } else {
    out.shift_source = 0;
    out.type = {false, true};
  }
  out.shift = -x[out.shift_source];
  std::vector<T> shifted;
  for (std::size_t p : out.sample) shifted.push_back(x[p] + out.shift);
  if (!is_exponential(std::span<const T>(shifted), delta, out.type))
    throw InternalError("exponential shift: shifted sample is not exponential");
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

enum class StageRole : std::uint8_t { Monotone, Cupcap, ExpSample };
std::string to_string(StageRole r);
StageRole parse_stage_role(const std::string& text);

struct CertificateStage {
  StageRole role = StageRole::Monotone;
  std::vector<std::size_t> columns;  // 0-based, relative to the previous stage
  std::vector<Direction> directions;
  std::vector<Shape> shapes;
  Rational delta;
  std::vector<std::size_t> shift_sources;  // position in the previous stage
  std::vector<Rational> shift_values;      // value part of each shift
  std::vector<ExpType> types;
};

struct ExtractionCertificate {
  std::vector<CertificateStage> stages;

  // Original column of every position of the last stage.
  std::vector<std::size_t> composed(std::size_t original_width) const;
};

}  // namespace slr
