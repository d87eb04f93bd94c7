#ifndef SYLOWLAB_FIELD_HPP_
#define SYLOWLAB_FIELD_HPP_

#include <cstdint>
#include <vector>

namespace sylowlab {

// GF(q) for the supported q. Elements are integers 0..q-1: the polynomial
// c_0 + c_1 t + ... over GF(p) is encoded as sum c_i p^i, so 0 and 1 are the
// field's zero and one and the prime field is 0..p-1.
class SmallField {
 public:
  using Element = std::uint32_t;

  // Throws kUnsupportedField for q outside {2,3,4,5,7,8,9,11,13,16,32}.
  explicit SmallField(std::uint32_t q);

  static const std::vector<std::uint32_t>& supported_orders();
  static bool is_supported(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  // Monic modulus coefficients, constant term first (degree + 1 entries).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  // Throws kInvalidArgument for 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;
  // A generator of the multiplicative group (smallest such element).
  Element primitive_element() const { return primitive_; }

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  std::uint32_t k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
  Element primitive_ = 1;
};

}  // namespace sylowlab

#endif  // SYLOWLAB_FIELD_HPP_
