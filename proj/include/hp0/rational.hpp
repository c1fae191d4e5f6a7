#ifndef HP0_RATIONAL_HPP
#define HP0_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hp0 {

/// Thrown by Rat64 arithmetic when a result does not fit in 64 bits.
/// Callers catch it and redo the computation with BigRat.
struct RatOverflow {};

using BigRat = mpq_class;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw RatOverflow{};
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw RatOverflow{};
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw RatOverflow{};
  return -a;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw RatOverflow{};
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

}  // namespace detail

/// Reduced fraction with 64-bit numerator and positive 64-bit denominator.
/// All operations are exact; anything that would overflow throws RatOverflow.
class Rat64 {
 public:
  Rat64() : num_(0), den_(1) {}
  Rat64(std::int64_t n) : num_(n), den_(1) {}
  Rat64(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rat64: zero denominator");
    if (d < 0) {
      n = detail::checked_neg(n);
      d = detail::checked_neg(d);
    }
    std::int64_t g = detail::gcd64(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Rat64 operator-() const { return Rat64(detail::checked_neg(num_), den_, already_reduced{}); }

  friend Rat64 operator+(const Rat64& a, const Rat64& b) {
    // Knuth 4.5.1: reduce by gcd of denominators before cross-multiplying.
    std::int64_t g = detail::gcd64(a.den_, b.den_);
    std::int64_t bd = b.den_ / g;
    std::int64_t t = detail::checked_add(detail::checked_mul(a.num_, bd),
                                         detail::checked_mul(b.num_, a.den_ / g));
    std::int64_t g2 = detail::gcd64(t, g);
    return Rat64(t / g2, detail::checked_mul(a.den_ / g2, bd), already_reduced{});
  }

  friend Rat64 operator-(const Rat64& a, const Rat64& b) { return a + (-b); }

  friend Rat64 operator*(const Rat64& a, const Rat64& b) {
    std::int64_t g1 = detail::gcd64(a.num_, b.den_);
    std::int64_t g2 = detail::gcd64(b.num_, a.den_);
    return Rat64(detail::checked_mul(a.num_ / g1, b.num_ / g2),
                 detail::checked_mul(a.den_ / g2, b.den_ / g1), already_reduced{});
  }

  friend Rat64 operator/(const Rat64& a, const Rat64& b) {
    if (b.num_ == 0) throw std::domain_error("Rat64: division by zero");
    std::int64_t n = b.num_, d = b.den_;
    if (n < 0) {
      n = detail::checked_neg(n);
      d = detail::checked_neg(d);
    }
    return a * Rat64(d, n, already_reduced{});
  }

  Rat64& operator+=(const Rat64& o) { return *this = *this + o; }
  Rat64& operator-=(const Rat64& o) { return *this = *this - o; }
  Rat64& operator*=(const Rat64& o) { return *this = *this * o; }

  friend bool operator==(const Rat64& a, const Rat64& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat64& a, const Rat64& b) { return !(a == b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  struct already_reduced {};
  Rat64(std::int64_t n, std::int64_t d, already_reduced) : num_(n), den_(d) {}

  std::int64_t num_;
  std::int64_t den_;
};

inline bool is_zero(const Rat64& q) { return q.is_zero(); }
inline bool is_zero(const BigRat& q) { return sgn(q) == 0; }
inline bool is_one(const Rat64& q) { return q.is_one(); }
inline bool is_one(const BigRat& q) { return q == 1; }

inline BigRat to_bigrat(const Rat64& q) {
  BigRat r(static_cast<long>(q.num()), static_cast<long>(q.den()));
  r.canonicalize();
  return r;
}
inline const BigRat& to_bigrat(const BigRat& q) { return q; }

inline std::string rat_str(const Rat64& q) { return q.str(); }
inline std::string rat_str(const BigRat& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline BigRat parse_bigrat(const std::string& s) {
  BigRat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace hp0

#endif
