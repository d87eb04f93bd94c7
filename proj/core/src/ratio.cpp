#include "sylowlab/ratio.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "sylowlab/error.hpp"

namespace sylowlab {

ExactRatio::ExactRatio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::string ExactRatio::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
  return ExactRatio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) {
  return ExactRatio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
  return ExactRatio(a.num_ * b.num_, a.den_ * b.den_);
}
ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
  return ExactRatio(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRatio& r) {
  return os << r.to_string();
}

ExactRatio parse_ratio(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactRatio(BigInt(text), BigInt(1));
    return ExactRatio(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw Error(ErrorCode::kInvalidArgument, "malformed ratio '" + text + "'");
  }
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace sylowlab
