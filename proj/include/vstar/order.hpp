#pragma once

// Exact group orders in factored form cofactor · base^exponent. Orders such
// as |K|^{|G|-1} overflow 64 bits long before the groups get interesting, so
// arithmetic goes through prime factorizations instead of big integers.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace vstar {

class Order {
 public:
  Order() = default;
  Order(std::uint64_t base, std::uint64_t exponent, std::uint64_t cofactor = 1)
      : base_(base), exponent_(exponent), cofactor_(cofactor) {
    if (base_ < 2 && exponent_ > 0) throw std::invalid_argument("order base must be >= 2");
    if (cofactor_ == 0) throw std::invalid_argument("order cofactor must be >= 1");
  }

  /// Writes n as cofactor · base^e with e maximal.
  static Order from_count(std::uint64_t n, std::uint64_t base) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    std::uint64_t e = 0;
    while (base >= 2 && n % base == 0) {
      n /= base;
      ++e;
    }
    return Order(base, e, n);
  }

  std::uint64_t base() const { return base_; }
  std::uint64_t exponent() const { return exponent_; }
  std::uint64_t cofactor() const { return cofactor_; }

  /// prime -> multiplicity
  std::map<std::uint64_t, std::uint64_t> factorization() const {
    std::map<std::uint64_t, std::uint64_t> f;
    for (auto [p, k] : factor(base_)) f[p] += k * exponent_;
    for (auto [p, k] : factor(cofactor_)) f[p] += k;
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
    return f;
  }

  /// Exact value when it fits in 64 bits.
  std::optional<std::uint64_t> value() const {
    std::uint64_t v = cofactor_;
    for (std::uint64_t i = 0; i < exponent_; ++i) {
      if (v > UINT64_MAX / base_) return std::nullopt;
      v *= base_;
    }
    return v;
  }

  Order operator*(const Order& o) const { return from_factorization(merge(factorization(), o.factorization(), +1), base_); }

  /// Exact quotient; throws if `o` does not divide this order.
  Order operator/(const Order& o) const { return from_factorization(merge(factorization(), o.factorization(), -1), base_); }

  /// Same value written over a different base (a power of one prime).
  Order rebased(std::uint64_t base) const { return from_factorization(factorization(), base); }

  friend bool operator==(const Order& a, const Order& b) { return a.factorization() == b.factorization(); }

  /// "2^25", "4*2^8", "81"
  std::string to_string() const {
    std::string out;
    if (cofactor_ != 1 || exponent_ == 0) out = std::to_string(cofactor_);
    if (exponent_ > 0) {
      if (!out.empty()) out += "*";
      out += std::to_string(base_);
      if (exponent_ != 1) out += "^" + std::to_string(exponent_);
    }
    return out;
  }

 private:
  static std::map<std::uint64_t, std::uint64_t> factor(std::uint64_t n) {
    std::map<std::uint64_t, std::uint64_t> f;
    for (std::uint64_t p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        ++f[p];
        n /= p;
      }
    if (n > 1) ++f[n];
    return f;
  }

  static std::map<std::uint64_t, std::uint64_t> merge(std::map<std::uint64_t, std::uint64_t> a,
                                                      const std::map<std::uint64_t, std::uint64_t>& b, int sign) {
    for (auto [p, k] : b) {
      if (sign > 0) {
        a[p] += k;
      } else {
        if (a[p] < k) throw std::domain_error("order does not divide");
        a[p] -= k;
      }
    }
    return a;
  }

  static Order from_factorization(const std::map<std::uint64_t, std::uint64_t>& f, std::uint64_t base) {
    const auto bf = factor(base);
    // Largest e with base^e dividing the value.
    std::uint64_t e = UINT64_MAX;
    for (auto [p, k] : bf) {
      auto it = f.find(p);
      const std::uint64_t have = it == f.end() ? 0 : it->second;
      e = std::min(e, have / k);
    }
    if (bf.empty()) e = 0;
    std::uint64_t cof = 1;
    for (auto [p, k] : f) {
      std::uint64_t rest = k;
      if (auto it = bf.find(p); it != bf.end()) rest -= it->second * e;
      for (std::uint64_t i = 0; i < rest; ++i) {
        if (cof > UINT64_MAX / p) throw std::overflow_error("order cofactor overflows 64 bits");
        cof *= p;
      }
    }
    return Order(base < 2 ? 2 : base, e, cof);
  }

  std::uint64_t base_ = 2;
  std::uint64_t exponent_ = 0;
  std::uint64_t cofactor_ = 1;
};

}  // namespace vstar
