#ifndef SYLOWLAB_RATIO_HPP_
#define SYLOWLAB_RATIO_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sylowlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact non-floating rational kept in lowest terms with a positive
// denominator.
class ExactRatio {
 public:
  ExactRatio() : num_(0), den_(1) {}
  ExactRatio(BigInt num, BigInt den);  // NOLINT
  ExactRatio(std::int64_t value) : num_(value), den_(1) {}  // NOLINT

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  std::string to_string() const;

  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a,
                                          const ExactRatio& b);

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const ExactRatio& r);

// Parses "a/b" or "a".
ExactRatio parse_ratio(const std::string& text);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sylowlab

#endif  // SYLOWLAB_RATIO_HPP_
