#include "slr/numeric.hpp"

#include "slr/error.hpp"

namespace slr {

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    if (part.empty() || part == "-" || part == "+") throw std::invalid_argument("malformed rational");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + part);
    return Integer(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  Integer num = parse_int(s.substr(0, slash));
  Integer den = parse_int(s.substr(slash + 1));
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Integer floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return out;
}

namespace {

// Largest e >= 0 with base^e <= x, for x >= 1.
long floor_log_at_least_one(const Integer& base, const Rational& x) {
  const Integer num = x.numerator();
  const Integer den = x.denominator();
  auto fits = [&](unsigned long e) { return pow(base, e) * den <= num; };
  unsigned long hi = 1;
  while (fits(hi)) hi *= 2;
  unsigned long lo = hi / 2;  // fits(lo) holds (lo = 0 when hi = 1)
  while (hi - lo > 1) {
    unsigned long mid = lo + (hi - lo) / 2;
    if (fits(mid)) lo = mid; else hi = mid;
  }
  return static_cast<long>(lo);
}

}  // namespace

long floor_log(const Integer& base, const Rational& x) {
  if (base < 2) throw PreconditionError("floor_log: base must be at least 2");
  if (x.sign() <= 0) throw PreconditionError("floor_log: argument must be positive");
  if (x >= Rational(1)) return floor_log_at_least_one(base, x);
  // x < 1: floor(log x) = -ceil(log(1/x)).
  const Rational y = Rational(1) / x;
  long e = floor_log_at_least_one(base, y);
  bool exact = Rational(pow(base, static_cast<unsigned long>(e))) == y;
  return -(exact ? e : e + 1);
}

Integer ceil_root(const Integer& x, unsigned long k) {
  if (x < 0 || k == 0) throw PreconditionError("ceil_root: need x >= 0 and k >= 1");
  Integer r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);  // floor of the k-th root
  if (pow(r, k) < x) r += 1;
  return r;
}

Matrix<PerturbedValue> perturb_matrix(const Matrix<Rational>& m) {
  const std::size_t r = m.rows();
  const std::size_t n = m.cols();
  Matrix<PerturbedValue> out(r, n);
  if (r == 0 || n == 0) return out;
  const Integer denom = Integer(static_cast<unsigned long>(r)) * static_cast<unsigned long>(n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = PerturbedValue(m(i, j), Rational(Integer(static_cast<unsigned long>(i * n + j + 1)), denom));
  return out;
}

}  // namespace slr
