#pragma once

/**
 * @file finite_field.hpp
 * @brief Table-driven GF(q) arithmetic for the small fields used by the
 *        matrix-group constructions.
 *
 * An element is encoded as the integer sum c_i p^i where c_0 + c_1 x + ...
 * is its polynomial representative modulo the field's defining polynomial.
 * Zero encodes as 0 and one as 1.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "ntheory.hpp"

namespace powerchord {

class FiniteField {
public:
  using Element = std::uint32_t;

  /// Largest q accepted; tables are q*q entries.
  static constexpr std::uint64_t kMaxOrder = 4096;

  /**
   * GF(q). Prime q uses the integers mod q. Proper prime powers use the
   * embedded Conway-style moduli below and are limited to q <= 16:
   *   GF(4)  x^2 + x + 1
   *   GF(8)  x^3 + x + 1
   *   GF(9)  x^2 + 1
   *   GF(16) x^4 + x + 1
   */
  explicit FiniteField(std::uint64_t q) {
    auto pp = ntheory::is_prime_power(q);
    if (!pp)
      throw InvalidInput("field order must be a prime power, got " + std::to_string(q));
    if (q > kMaxOrder)
      throw ConstructionError("field order " + std::to_string(q) + " exceeds table limit");
    p_ = pp->prime;
    degree_ = pp->exponent;
    q_ = q;
    modulus_ = default_modulus(p_, degree_);
    build_tables();
  }

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return q_; }
  /// Monic defining polynomial, lowest coefficient first.
  const std::vector<std::uint64_t> &modulus() const { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element inv(Element a) const {
    if (a == 0)
      throw InvalidInput("zero has no inverse");
    return inv_[a];
  }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Element a) const {
    if (a == 0)
      throw InvalidInput("zero has no multiplicative order");
    std::uint64_t k = 1;
    for (Element x = a; x != 1; x = mul(x, a))
      ++k;
    return k;
  }

  /// Smallest-encoded generator of the multiplicative group.
  Element primitive_element() const {
    for (Element a = 1; a < q_; ++a)
      if (multiplicative_order(a) == q_ - 1)
        return a;
    throw InternalError("GF(" + std::to_string(q_) + ") has no primitive element");
  }

  /// No monic factor of degree 1..deg/2 divides the modulus.
  bool modulus_irreducible() const {
    if (degree_ == 1)
      return true;
    for (unsigned d = 1; d <= degree_ / 2; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i)
        count *= p_;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint64_t> f(d + 1);
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i) {
          f[i] = c % p_;
          c /= p_;
        }
        f[d] = 1;
        if (poly_mod_is_zero(modulus_, f))
          return false;
      }
    }
    return true;
  }

  std::string label(Element a) const { return std::to_string(a); }

private:
  static std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned k) {
    if (k == 1)
      return {0, 1};
    if (p == 2 && k == 2)
      return {1, 1, 1};
    if (p == 2 && k == 3)
      return {1, 1, 0, 1};
    if (p == 3 && k == 2)
      return {1, 0, 1};
    if (p == 2 && k == 4)
      return {1, 1, 0, 0, 1};
    throw ConstructionError("no embedded modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) +
                            "); non-prime fields are limited to q <= 16");
  }

  bool poly_mod_is_zero(std::vector<std::uint64_t> a, const std::vector<std::uint64_t> &monic) const {
    const std::size_t d = monic.size() - 1;
    while (a.size() > d) {
      const std::uint64_t lead = a.back() % p_;
      const std::size_t shift = a.size() - 1 - d;
      for (std::size_t i = 0; i <= d; ++i)
        a[shift + i] = (a[shift + i] + p_ * p_ - (lead * monic[i]) % p_) % p_;
      a.pop_back();
    }
    for (auto c : a)
      if (c % p_ != 0)
        return false;
    return true;
  }

  std::vector<std::uint64_t> decode(Element a) const {
    std::vector<std::uint64_t> c(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
      c[i] = a % p_;
      a = static_cast<Element>(a / p_);
    }
    return c;
  }

  Element encode(const std::vector<std::uint64_t> &c) const {
    std::uint64_t v = 0;
    for (unsigned i = degree_; i-- > 0;)
      v = v * p_ + c[i];
    return static_cast<Element>(v);
  }

  void build_tables() {
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    std::vector<std::vector<std::uint64_t>> digits(q_);
    for (Element a = 0; a < q_; ++a)
      digits[a] = decode(a);
    for (Element a = 0; a < q_; ++a) {
      for (Element b = 0; b < q_; ++b) {
        std::vector<std::uint64_t> s(degree_);
        for (unsigned i = 0; i < degree_; ++i)
          s[i] = (digits[a][i] + digits[b][i]) % p_;
        add_[a * q_ + b] = encode(s);

        std::vector<std::uint64_t> prod(2 * degree_ - 1, 0);
        for (unsigned i = 0; i < degree_; ++i)
          for (unsigned j = 0; j < degree_; ++j)
            prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
        // reduce modulo the monic modulus
        for (std::size_t top = prod.size(); top-- > degree_;) {
          const std::uint64_t lead = prod[top];
          if (lead == 0)
            continue;
          const std::size_t shift = top - degree_;
          for (unsigned i = 0; i <= degree_; ++i)
            prod[shift + i] = (prod[shift + i] + p_ * p_ - (lead * modulus_[i]) % p_) % p_;
        }
        prod.resize(degree_);
        mul_[a * q_ + b] = encode(prod);
      }
    }
    for (Element a = 0; a < q_; ++a) {
      for (Element b = 0; b < q_; ++b) {
        if (add_[a * q_ + b] == 0)
          neg_[a] = b;
        if (a != 0 && mul_[a * q_ + b] == 1)
          inv_[a] = b;
      }
    }
  }

  std::uint64_t p_ = 0;
  unsigned degree_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
};

} // namespace powerchord
