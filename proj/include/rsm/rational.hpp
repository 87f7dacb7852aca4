#ifndef RSM_RATIONAL_HPP_
#define RSM_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <string>

namespace rsm {

// Exact rational with the tiny range this library needs (set cardinalities,
// so magnitudes stay below the universe cap). Always stored reduced with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }

  static Rational of_counts(std::size_t num, std::size_t den) {
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Rational complement() const { return Rational(den_ - num_, den_); }  // 1 - *this

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void reduce() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace rsm

#endif  // RSM_RATIONAL_HPP_
