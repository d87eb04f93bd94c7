#include "sylowlab/field.hpp"

#include <map>
#include <string>

#include "sylowlab/error.hpp"

namespace sylowlab {

namespace {

struct FieldSpec {
  std::uint32_t p;
  std::uint32_t k;
  std::vector<std::uint32_t> modulus;  // constant term first, monic
};

// Conway polynomials for the non-prime orders.
const std::map<std::uint32_t, FieldSpec>& field_table() {
  static const std::map<std::uint32_t, FieldSpec> table = {
      {2, {2, 1, {0, 1}}},
      {3, {3, 1, {0, 1}}},
      {4, {2, 2, {1, 1, 1}}},           // t^2 + t + 1
      {5, {5, 1, {0, 1}}},
      {7, {7, 1, {0, 1}}},
      {8, {2, 3, {1, 1, 0, 1}}},        // t^3 + t + 1
      {9, {3, 2, {2, 2, 1}}},           // t^2 + 2t + 2
      {11, {11, 1, {0, 1}}},
      {13, {13, 1, {0, 1}}},
      {16, {2, 4, {1, 1, 0, 0, 1}}},    // t^4 + t + 1
      {32, {2, 5, {1, 0, 1, 0, 0, 1}}}, // t^5 + t^2 + 1
  };
  return table;
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> out(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = a % p;
    a /= p;
  }
  return out;
}

std::uint32_t encode(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p + coeffs[i];
  return v;
}

}  // namespace

const std::vector<std::uint32_t>& SmallField::supported_orders() {
  static const std::vector<std::uint32_t> orders = [] {
    std::vector<std::uint32_t> out;
    for (const auto& [q, spec] : field_table()) out.push_back(q);
    return out;
  }();
  return orders;
}

bool SmallField::is_supported(std::uint32_t q) { return field_table().count(q) != 0; }

SmallField::SmallField(std::uint32_t q) : q_(q) {
  const auto it = field_table().find(q);
  if (it == field_table().end()) {
    throw Error(ErrorCode::kUnsupportedField, "GF(" + std::to_string(q) + ") is not supported");
  }
  p_ = it->second.p;
  k_ = it->second.k;
  modulus_ = it->second.modulus;

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, k_);
    std::vector<std::uint32_t> dn(k_);
    for (std::uint32_t i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn, p_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, k_);
      std::vector<std::uint32_t> sum(k_);
      for (std::uint32_t i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(sum, p_);

      std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
      for (std::uint32_t i = 0; i < k_; ++i) {
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      // Reduce by the monic modulus from the top degree down.
      for (std::size_t d = prod.size(); d-- > k_;) {
        const std::uint32_t c = prod[d];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= k_; ++i) {
          prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
        }
      }
      prod.resize(k_);
      mul_[a * q_ + b] = encode(prod, p_);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    std::uint32_t order = 1;
    for (Element x = a; x != 1; x = mul(x, a)) ++order;
    if (order == q_ - 1) {
      primitive_ = a;
      break;
    }
  }
}

SmallField::Element SmallField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  return inv_[a];
}

SmallField::Element SmallField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace sylowlab
