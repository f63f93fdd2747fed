#include "slr/streamline.hpp"

namespace slr {

std::string ExpType::str() const { return std::string(positive ? "+" : "-") + (up ? "up" : "down"); }

ExpType ExpType::parse(const std::string& text) {
  if (text == "+up") return {true, true};
  if (text == "+down") return {true, false};
  if (text == "-up") return {false, true};
  if (text == "-down") return {false, false};
  throw std::invalid_argument("unknown exponential type: " + text);
}

std::string to_string(Direction d) { return d == Direction::Increasing ? "increasing" : "decreasing"; }
std::string to_string(Shape s) { return s == Shape::Cup ? "cup" : "cap"; }

Direction parse_direction(const std::string& text) {
  if (text == "increasing") return Direction::Increasing;
  if (text == "decreasing") return Direction::Decreasing;
  throw std::invalid_argument("unknown direction: " + text);
}

Shape parse_shape(const std::string& text) {
  if (text == "cup") return Shape::Cup;
  if (text == "cap") return Shape::Cap;
  throw std::invalid_argument("unknown shape: " + text);
}

std::string to_string(StageRole r) {
  switch (r) {
    case StageRole::Monotone: return "monotone";
    case StageRole::Cupcap: return "cupcap";
    case StageRole::ExpSample: return "exp-sample";
  }
  return "?";
}

StageRole parse_stage_role(const std::string& text) {
  if (text == "monotone") return StageRole::Monotone;
  if (text == "cupcap") return StageRole::Cupcap;
  if (text == "exp-sample") return StageRole::ExpSample;
  throw std::invalid_argument("unknown stage role: " + text);
}

long dyadic_level(const Rational& x, const Rational& d) {
  if (x.sign() <= 0 || d < x) throw InternalError("dyadic_level: need 0 < x <= d");
  return floor_log(2, d / x) + 1;
}

namespace {

// Smallest k with 2^k * w > v (pure rationals), or with a tie broken by the
// sign of the infinitesimal part of the right-hand side.
long weight_level(const Rational& w, const Rational& v, int rhs_tail_sign) {
  const long e = floor_log(2, v / w);
  const Rational p(pow(Integer(2), static_cast<unsigned long>(e < 0 ? -e : e)));
  const Rational scaled = e >= 0 ? w * p : w / p;
  if (scaled == v && rhs_tail_sign < 0) return e;
  return e + 1;
}

}  // namespace

long dyadic_level(const PerturbedValue& x, const PerturbedValue& d) {
  if (x.sign() <= 0 || d < x) throw InternalError("dyadic_level: need 0 < x <= d");
  if (d.value.sign() > 0) {
    if (x.value.sign() == 0) return kInfinitesimalTier + weight_level(x.weight, d.value, d.weight.sign());
    long k = floor_log(2, d.value / x.value) + 1;
    auto above = [&](long kk) { return d < x * Rational(pow(Integer(2), static_cast<unsigned long>(kk))); };
    while (!above(k)) ++k;
    while (k > 1 && above(k - 1)) --k;
    return k;
  }
  return floor_log(2, d.weight / x.weight) + 1;
}

long dyadic_level(std::int64_t x, std::int64_t d) {
  if (x <= 0 || d < x) throw InternalError("dyadic_level: need 0 < x <= d");
  const __int128 xx = x;
  const __int128 dd = d;
  long k = (64 - __builtin_clzll(static_cast<unsigned long long>(d))) -
           (64 - __builtin_clzll(static_cast<unsigned long long>(x)));
  if (k < 1) k = 1;
  while (!((xx << k) > dd)) ++k;
  while (k > 1 && (xx << (k - 1)) > dd) --k;
  return k;
}

namespace detail {

bool at_least_pow2(std::size_t n, const Integer& e) {
  if (e < 0) return true;
  if (e >= 64) return false;
  const unsigned long ee = e.get_ui();
  return static_cast<unsigned __int128>(n) >= (static_cast<unsigned __int128>(1) << ee);
}

Integer cupcap_bound_exponent(std::size_t q, std::size_t s, std::size_t t) {
  if (q <= 1) return Integer(static_cast<unsigned long>(s + t));
  return Integer(static_cast<unsigned long>(q + 1)) * static_cast<unsigned long>(s) *
         pow(Integer(static_cast<unsigned long>(t)), q - 1);
}

}  // namespace detail

Matrix<Rational> monotone_sharpness_matrix(unsigned q, unsigned n) {
  if (q < 1 || n < 2) throw PreconditionError("monotone sharpness matrix: need q >= 1 and n >= 2");
  if (q > 4) throw PreconditionError("monotone sharpness matrix: size guard (q <= 4)");
  const std::size_t big_q = std::size_t{1} << q;
  std::size_t cols = 1;
  for (std::size_t l = 0; l < big_q; ++l) {
    cols *= n;
    if (cols > (std::size_t{1} << 20)) throw PreconditionError("monotone sharpness matrix: size guard (n^(2^q) <= 2^20)");
  }
  std::vector<Integer> scale(big_q);
  for (std::size_t l = 0; l < big_q; ++l) scale[l] = pow(Integer(2UL * n), big_q - 1 - l);
  Matrix<Rational> m(q, cols);
  std::vector<unsigned> digits(big_q);
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t rest = j;
    for (std::size_t l = big_q; l-- > 0;) {
      digits[l] = static_cast<unsigned>(rest % n) + 1;
      rest /= n;
    }
    for (unsigned i = 0; i < q; ++i) {
      Integer acc = 0;
      for (std::size_t l = 0; l < big_q; ++l) {
        const bool plus = (l >> (q - 1 - i)) & 1U;
        Integer term = scale[l] * digits[l];
        if (plus) acc += term; else acc -= term;
      }
      m(i, j) = Rational(acc);
    }
  }
  return m;
}

unsigned exponential_stride(const Rational& delta) {
  if (!(Rational(2) < delta)) throw PreconditionError("exponential shift: delta must exceed 2");
  const long e = floor_log(2, delta);
  const bool exact = Rational(pow(Integer(2), static_cast<unsigned long>(e))) == delta;
  return static_cast<unsigned>(exact ? e : e + 1);
}

std::vector<std::size_t> ExtractionCertificate::composed(std::size_t original_width) const {
  std::vector<std::size_t> cur(original_width);
  for (std::size_t i = 0; i < original_width; ++i) cur[i] = i;
  for (const auto& st : stages) {
    std::vector<std::size_t> next;
    next.reserve(st.columns.size());
    for (std::size_t c : st.columns) {
      if (c >= cur.size()) throw VerificationFailed("certificate column index out of range");
      if (!next.empty() && cur[c] <= next.back()) throw VerificationFailed("certificate columns not increasing");
      next.push_back(cur[c]);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace slr
