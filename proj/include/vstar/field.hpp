#pragma once

// Arithmetic in GF(p^m). Elements are packed base-p digit vectors in a
// 32-bit word: digit i is the coefficient of x^i in the polynomial basis.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vstar {

struct FieldElement {
  std::uint32_t rep = 0;

  constexpr auto operator<=>(const FieldElement&) const = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial over GF(p), low degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a nonzero b.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = f * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of `code`.
inline Poly monic_from_code(std::uint64_t code, std::size_t d, std::uint32_t p) {
  Poly f(d + 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[d] = 1;
  return f;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Immutable description of GF(p^m) together with its arithmetic.
///
/// For q <= 2^16 multiplication goes through log/antilog tables built from a
/// primitive element; larger fields fall back to polynomial multiplication.
class Field {
 public:
  static constexpr std::uint64_t kTableLimit = 1u << 16;

  /// Builds GF(p^m). Without a modulus the lexicographically least monic
  /// irreducible of degree m is used (lower coefficients read as a base-p
  /// number, x^{m-1} most significant).
  Field(std::uint32_t p, unsigned m,
        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt)
      : p_(p), m_(m) {
    if (!detail::is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("extension degree must be >= 1");
    long double qd = 1;
    for (unsigned i = 0; i < m; ++i) qd *= p;
    if (qd > static_cast<long double>(std::numeric_limits<std::uint32_t>::max()))
      throw FieldError("field size does not fit in 32 bits");
    q_ = static_cast<std::uint32_t>(detail::ipow(p, m));

    if (modulus) {
      detail::Poly f = *modulus;
      for (auto& c : f) c %= p;
      detail::trim(f);
      if (f.size() != m + 1) throw FieldError("modulus must have degree " + std::to_string(m));
      if (f.back() != 1) throw FieldError("modulus must be monic");
      if (!detail::is_irreducible(f, p)) throw FieldError("modulus is reducible over GF(" + std::to_string(p) + ")");
      modulus_ = std::move(f);
    } else if (m == 1) {
      modulus_ = {0, 1};  // x; elements are residues mod p
    } else {
      const std::uint64_t count = detail::ipow(p, m);
      for (std::uint64_t code = 0; code < count; ++code) {
        auto f = detail::monic_from_code(code, m, p);
        if (detail::is_irreducible(f, p)) {
          modulus_ = std::move(f);
          break;
        }
      }
    }
    build_tables();
  }

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// "GF(q)" naming, as used on the command line.
  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  static FieldElement zero() { return {0}; }
  static FieldElement one() { return {1}; }

  FieldElement from_int(std::int64_t v) const {
    const auto pp = static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.rep ^ b.rep};
    if (m_ == 1) {
      const std::uint32_t s = a.rep + b.rep;
      return {s >= p_ ? s - p_ : s};
    }
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t d = (a.rep % p_ + b.rep % p_) % p_;
      out += d * scale;
      scale *= p_;
      a.rep /= p_;
      b.rep /= p_;
    }
    return {out};
  }

  FieldElement neg(FieldElement a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return {a.rep == 0 ? 0 : p_ - a.rep};
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      const std::uint32_t d = a.rep % p_;
      out += ((p_ - d) % p_) * scale;
      scale *= p_;
      a.rep /= p_;
    }
    return {out};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.rep == 0 || b.rep == 0) return {0};
    if (!log_.empty()) {
      std::uint32_t e = log_[a.rep] + log_[b.rep];
      if (e >= q_ - 1) e -= q_ - 1;
      return {exp_[e]};
    }
    return {poly_mul(a.rep, b.rep)};
  }

  FieldElement inv(FieldElement a) const {
    if (a.rep == 0) throw FieldError("inverse of zero");
    if (!log_.empty()) return {exp_[log_[a.rep] == 0 ? 0 : q_ - 1 - log_[a.rep]]};
    return pow(a, q_ - 2);
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// All q elements in packed order 0, 1, ..., q-1.
  std::vector<FieldElement> enumerate() const {
    std::vector<FieldElement> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i].rep = i;
    return out;
  }

  /// Polynomial basis 1, x, ..., x^{m-1} over the prime field.
  std::vector<FieldElement> basis() const {
    std::vector<FieldElement> out;
    std::uint32_t v = 1;
    for (unsigned i = 0; i < m_; ++i, v *= p_) out.push_back({v});
    return out;
  }

  /// Prime-field elements print as integers, others as polynomials in x
  /// ("x+1", "2x^2+1").
  std::string format(FieldElement a) const {
    if (m_ == 1) return std::to_string(a.rep);
    if (a.rep == 0) return "0";
    std::string out;
    std::uint32_t r = a.rep;
    std::vector<std::uint32_t> digits(m_);
    for (unsigned i = 0; i < m_; ++i) {
      digits[i] = r % p_;
      r /= p_;
    }
    for (unsigned i = m_; i-- > 0;) {
      if (digits[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(digits[i]);
        continue;
      }
      if (digits[i] != 1) out += std::to_string(digits[i]);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  /// Inverse of format(); also accepts any integer (reduced mod p).
  FieldElement parse(std::string_view text) const {
    std::string s;
    for (char c : text)
      if (c != ' ') s += c;
    if (s.empty()) throw FieldError("empty field element");
    std::vector<std::uint64_t> digits(m_, 0);
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
      }
      std::uint64_t coef = 1;
      bool has_coef = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          coef = coef * 10 + static_cast<std::uint64_t>(s[i++] - '0');
        has_coef = true;
      }
      unsigned power = 0;
      if (i < s.size() && s[i] == '*') ++i;
      if (i < s.size() && s[i] == 'x') {
        ++i;
        power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw FieldError("bad exponent in field element '" + std::string(text) + "'");
          power = 0;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            power = power * 10 + static_cast<unsigned>(s[i++] - '0');
        }
      } else if (!has_coef) {
        throw FieldError("cannot parse field element '" + std::string(text) + "'");
      }
      if (power >= m_) throw FieldError("power of x too large for " + name() + " in '" + std::string(text) + "'");
      const std::uint64_t c = coef % p_;
      digits[power] = (digits[power] + (sign > 0 ? c : (p_ - c) % p_)) % p_;
      any = true;
      if (i < s.size() && s[i] != '+' && s[i] != '-')
        throw FieldError("unexpected '" + std::string(1, s[i]) + "' in field element '" + std::string(text) + "'");
    }
    if (!any) throw FieldError("cannot parse field element '" + std::string(text) + "'");
    std::uint32_t out = 0, scale = 1;
    for (unsigned k = 0; k < m_; ++k, scale *= p_) out += static_cast<std::uint32_t>(digits[k]) * scale;
    return {out};
  }

  /// Parses "GF(q)" or "GF(p^m)".
  static Field parse_name(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s += c;
    if (s.size() < 5 || s.rfind("GF(", 0) != 0 || s.back() != ')')
      throw FieldError("expected GF(q) or GF(p^m), got '" + std::string(text) + "'");
    const std::string inner = s.substr(3, s.size() - 4);
    auto to_u64 = [&](const std::string& t) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw FieldError("bad number in field name '" + std::string(text) + "'");
      return std::stoull(t);
    };
    if (auto caret = inner.find('^'); caret != std::string::npos) {
      const auto p = to_u64(inner.substr(0, caret));
      const auto m = to_u64(inner.substr(caret + 1));
      if (p > std::numeric_limits<std::uint32_t>::max() || m > 32) throw FieldError("field too large: '" + std::string(text) + "'");
      return Field(static_cast<std::uint32_t>(p), static_cast<unsigned>(m));
    }
    const auto q = to_u64(inner);
    for (std::uint64_t p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      unsigned m = 0;
      std::uint64_t r = q;
      while (r % p == 0) {
        r /= p;
        ++m;
      }
      if (r != 1) throw FieldError(std::to_string(q) + " is not a prime power");
      if (p > std::numeric_limits<std::uint32_t>::max()) throw FieldError("field too large");
      return Field(static_cast<std::uint32_t>(p), m);
    }
    throw FieldError(std::to_string(q) + " is not a prime power");
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const {
    if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    detail::Poly pa(m_), pb(m_);
    for (unsigned i = 0; i < m_; ++i) {
      pa[i] = a % p_;
      a /= p_;
      pb[i] = b % p_;
      b /= p_;
    }
    detail::Poly prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
      for (unsigned j = 0; j < m_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    auto r = detail::poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < r.size(); ++i, scale *= p_) out += r[i] * scale;
    return out;
  }

  void build_tables() {
    if (q_ > kTableLimit || q_ == 2) return;
    // Search for a primitive element by trying candidates in packed order.
    for (std::uint32_t g = 1; g < q_; ++g) {
      std::vector<std::uint32_t> exp(q_ - 1), log(q_, 0);
      std::uint32_t v = 1;
      bool primitive = true;
      for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        if (e > 0 && v == 1) {
          primitive = false;
          break;
        }
        exp[e] = v;
        log[v] = e;
        v = poly_mul(v, g);
      }
      if (primitive && v == 1) {
        exp_ = std::move(exp);
        log_ = std::move(log);
        return;
      }
    }
  }

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(std::uint32_t p, unsigned m,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  return std::make_shared<const Field>(p, m, std::move(modulus));
}

}  // namespace vstar

template <>
struct std::hash<vstar::FieldElement> {
  std::size_t operator()(vstar::FieldElement e) const noexcept { return std::hash<std::uint32_t>{}(e.rep); }
};
