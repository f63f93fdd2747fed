#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slr/hypergraph.hpp"
#include "slr/numeric.hpp"

namespace slr {

// Integer threshold or minus infinity.
class Threshold {
 public:
  Threshold() = default;  // minus infinity
  explicit Threshold(Integer v) : finite_(true), value_(std::move(v)) {}
  static Threshold minus_infinity() { return {}; }

  bool is_minus_infinity() const { return !finite_; }
  const Integer& value() const { return value_; }
  std::string str() const { return finite_ ? value_.get_str() : "-inf"; }
  static Threshold parse(const std::string& text);

  friend bool operator==(const Threshold& a, const Threshold& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

 private:
  bool finite_ = false;
  Integer value_;
};

struct DominationInstance {
  Matrix<Integer> P;  // r x N, each row strictly monotone
  Threshold h;

  std::size_t r() const { return P.rows(); }
  Vertex n() const { return static_cast<Vertex>(P.cols()); }
};

// Color 0 when every diagonal entry is at most h; color j when entry j is at
// least h+4 and exceeds every other entry by at least 2; otherwise none.
// For r = 1: at most h gives 0, at least h+4 gives 1.
std::optional<Color> domination_color(const DominationInstance& inst, std::span<const Vertex> e);
ColoredHypergraph domination_hypergraph(const DominationInstance& inst);

struct DominationStep {
  std::string kind;
  std::size_t instance = 0;           // index into the input list
  std::vector<std::size_t> rows;      // rows removed or used for the color, 0-based
  std::size_t columns_before = 0;
  std::size_t columns_after = 0;
};

struct DominationResult {
  std::vector<Vertex> clique;  // 1-based vertices
  std::vector<Color> colors;   // per instance; kAnyColor when |C| < r
  std::vector<DominationStep> trace;
  bool below_threshold = false;
  std::size_t recursion_size = 0;  // |C| from the recursion alone
};

struct DominationOptions {
  // Below the size bound, also try an exhaustive search and keep the larger
  // verified set.
  bool exhaustive_fallback = true;
  std::uint64_t fallback_budget = 2'000'000;
};

// Common monochromatic clique of all domination hypergraphs. The result is
// always re-verified against every instance.
DominationResult domination_clique(const std::vector<DominationInstance>& instances,
                                   const DominationOptions& options = {});

// True when |C| >= N^(1/(R-k+1)) / 3^(R+b).
bool meets_domination_bound(std::size_t clique, std::size_t n, std::size_t total_rows, std::size_t k,
                            std::size_t bad);
std::size_t count_bad_instances(const std::vector<DominationInstance>& instances);

struct SharpnessFamily {
  std::vector<DominationInstance> instances;
  std::size_t n_vertices = 0;  // n^(R-k+1)
  std::size_t bound = 0;       // R n + 2R
};

// P_l(i, q) = q - n^(tau(l) + i), tau(l) = -l + sum_{t<l} r_t, h_l = -N-4.
SharpnessFamily domination_sharpness_instance(const std::vector<unsigned>& rows, unsigned n);

}  // namespace slr
