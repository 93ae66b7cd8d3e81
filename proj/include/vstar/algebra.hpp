#pragma once

// The group algebra KG: dense coefficient vectors indexed by group elements.

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vstar/field.hpp"
#include "vstar/group.hpp"

namespace vstar {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Carrier of KG. Also caches the table g·h^{-1} used by x·x*.
class GroupAlgebra {
 public:
  GroupAlgebra(GroupPtr group, FieldPtr field) : group_(std::move(group)), field_(std::move(field)) {
    if (!group_ || !field_) throw AlgebraError("group algebra needs a group and a field");
    const std::size_t n = group_->order();
    div_.resize(n * n);
    for (Index g = 0; g < n; ++g)
      for (Index h = 0; h < n; ++h) div_[std::size_t{g} * n + h] = group_->mul(g, group_->inverse(h));
    std::size_t m = n;
    const std::uint32_t p = field_->characteristic();
    while (m % p == 0) m /= p;
    local_ = (m == 1);
  }

  const Group& group() const { return *group_; }
  const Field& field() const { return *field_; }
  const GroupPtr& group_ptr() const { return group_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t dimension() const { return group_->order(); }
  bool is_gf2() const { return field_->size() == 2; }

  /// |G| is a power of char K, so KG is a local ring and the units are
  /// exactly the elements of nonzero augmentation.
  bool is_local() const { return local_; }

  /// g·h^{-1}
  Index div(Index g, Index h) const { return div_[std::size_t{g} * group_->order() + h]; }

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::vector<Index> div_;
  bool local_ = false;
};

using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

inline AlgebraPtr make_algebra(Group g, Field k) {
  return std::make_shared<const GroupAlgebra>(std::make_shared<const Group>(std::move(g)),
                                              std::make_shared<const Field>(std::move(k)));
}

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(AlgebraPtr alg)
      : alg_(std::move(alg)), coeffs_(alg_ ? alg_->dimension() : 0, Field::zero()) {}
  AlgebraElement(AlgebraPtr alg, std::vector<FieldElement> coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (!alg_ || coeffs_.size() != alg_->dimension()) throw AlgebraError("coefficient vector length must equal |G|");
    for (auto c : coeffs_)
      if (c.rep >= alg_->field().size()) throw AlgebraError("coefficient is not a field element");
  }

  static AlgebraElement zero(const AlgebraPtr& alg) { return AlgebraElement(alg); }
  static AlgebraElement one(const AlgebraPtr& alg) { return basis(alg, 0); }
  /// The group element g embedded in KG.
  static AlgebraElement basis(const AlgebraPtr& alg, Index g, FieldElement coeff = Field::one()) {
    AlgebraElement x(alg);
    x.coeffs_.at(g) = coeff;
    return x;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(Index g) const { return coeffs_.at(g); }
  void set_coeff(Index g, FieldElement c) { coeffs_.at(g) = c; }
  std::size_t size() const { return coeffs_.size(); }

  bool is_zero() const {
    for (auto c : coeffs_)
      if (c.rep) return false;
    return true;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs_ == b.coeffs_; }

  AlgebraElement& operator+=(const AlgebraElement& y) {
    check_same(y);
    const Field& k = alg_->field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = k.add(coeffs_[i], y.coeffs_[i]);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& y) {
    check_same(y);
    const Field& k = alg_->field();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = k.sub(coeffs_[i], y.coeffs_[i]);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    const Field& k = alg_->field();
    for (auto& c : r.coeffs_) c = k.neg(c);
    return r;
  }

  /// Convolution over the Cayley table.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    x.check_same(y);
    const GroupAlgebra& alg = *x.alg_;
    const Group& g = alg.group();
    const std::size_t n = g.order();
    AlgebraElement out(x.alg_);
    if (alg.is_gf2()) {
      // Bit-packed: flip out[gh] for every g in supp x, h in supp y.
      const std::size_t words = (n + 63) / 64;
      std::vector<std::uint64_t> yb(words, 0), ob(words, 0);
      for (std::size_t h = 0; h < n; ++h)
        if (y.coeffs_[h].rep) yb[h / 64] |= std::uint64_t{1} << (h % 64);
      for (std::size_t a = 0; a < n; ++a) {
        if (!x.coeffs_[a].rep) continue;
        const Index* row = g.row(static_cast<Index>(a));
        for (std::size_t w = 0; w < words; ++w) {
          for (std::uint64_t bits = yb[w]; bits; bits &= bits - 1) {
            const Index t = row[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
            ob[t / 64] ^= std::uint64_t{1} << (t % 64);
          }
        }
      }
      for (std::size_t i = 0; i < n; ++i) out.coeffs_[i].rep = static_cast<std::uint32_t>((ob[i / 64] >> (i % 64)) & 1);
      return out;
    }
    const Field& k = alg.field();
    for (std::size_t a = 0; a < n; ++a) {
      const FieldElement xa = x.coeffs_[a];
      if (!xa.rep) continue;
      const Index* row = g.row(static_cast<Index>(a));
      for (std::size_t b = 0; b < n; ++b) {
        const FieldElement yb = y.coeffs_[b];
        if (!yb.rep) continue;
        auto& slot = out.coeffs_[row[b]];
        slot = k.add(slot, k.mul(xa, yb));
      }
    }
    return out;
  }
  AlgebraElement& operator*=(const AlgebraElement& y) { return *this = *this * y; }

 private:
  void check_same(const AlgebraElement& y) const {
    if (!alg_ || !y.alg_) throw AlgebraError("operation on an unbound algebra element");
    if (alg_ != y.alg_ &&
        (alg_->group_ptr() != y.alg_->group_ptr() || !(alg_->field() == y.alg_->field())))
      throw AlgebraError("elements belong to different group algebras");
  }

  AlgebraPtr alg_;
  std::vector<FieldElement> coeffs_;
};

inline AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
inline AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

inline AlgebraElement alg_scale(FieldElement alpha, const AlgebraElement& x) {
  const Field& k = x.algebra()->field();
  std::vector<FieldElement> c = x.coeffs();
  for (auto& v : c) v = k.mul(alpha, v);
  return AlgebraElement(x.algebra(), std::move(c));
}

/// The involution: coefficient of g in x* is the coefficient of g^{-1} in x.
inline AlgebraElement star(const AlgebraElement& x) {
  const Group& g = x.algebra()->group();
  std::vector<FieldElement> c(x.size());
  for (Index a = 0; a < x.size(); ++a) c[g.inverse(a)] = x.coeff(a);
  return AlgebraElement(x.algebra(), std::move(c));
}

/// Coefficient sum.
inline FieldElement augmentation(const AlgebraElement& x) {
  const Field& k = x.algebra()->field();
  FieldElement s = Field::zero();
  for (auto c : x.coeffs()) s = k.add(s, c);
  return s;
}

inline std::vector<Index> support(const AlgebraElement& x) {
  std::vector<Index> out;
  for (Index a = 0; a < x.size(); ++a)
    if (x.coeff(a).rep) out.push_back(a);
  return out;
}

inline void require_local(const GroupAlgebra& alg) {
  if (!alg.is_local())
    throw AlgebraError("unit test by augmentation needs |G| to be a power of char K");
}

/// Over a p-group in characteristic p, x is a unit iff its augmentation is nonzero.
inline bool is_unit(const AlgebraElement& x) {
  require_local(*x.algebra());
  return augmentation(x).rep != 0;
}

inline bool is_normalized_unit(const AlgebraElement& x) { return augmentation(x) == Field::one(); }

/// Writes x = χ(x)(1 - y) with y in the (nilpotent) augmentation ideal and
/// sums the geometric series 1 + y + y^2 + ... until it terminates.
inline AlgebraElement alg_inverse(const AlgebraElement& x) {
  const GroupAlgebra& alg = *x.algebra();
  require_local(alg);
  const Field& k = alg.field();
  const FieldElement chi = augmentation(x);
  if (!chi.rep) throw AlgebraError("element of augmentation 0 is not a unit");
  const FieldElement chi_inv = k.inv(chi);
  const auto one = AlgebraElement::one(x.algebra());
  const AlgebraElement y = one - alg_scale(chi_inv, x);
  AlgebraElement sum = one, term = one;
  const std::size_t cap = alg.dimension() * alg.field().degree() * alg.field().characteristic();
  for (std::size_t i = 0;; ++i) {
    if (i > cap) throw AlgebraError("geometric series for the inverse did not terminate");
    term = term * y;
    if (term.is_zero()) break;
    sum += term;
  }
  return alg_scale(chi_inv, sum);
}

// ---------------------------------------------------------------------------
// Text form: "1 + a + (x+1)*a^2*b", coefficient 1 omitted.

inline std::string format_element(const AlgebraElement& x) {
  const GroupAlgebra& alg = *x.algebra();
  const Field& k = alg.field();
  std::string out;
  for (Index a = 0; a < x.size(); ++a) {
    const FieldElement c = x.coeff(a);
    if (!c.rep) continue;
    std::string cs = k.format(c);
    if (cs.find_first_of("+x") != std::string::npos) cs = "(" + cs + ")";
    std::string term;
    if (a == 0)
      term = cs;
    else if (c == Field::one())
      term = alg.group().name(a);
    else
      term = cs + "*" + alg.group().name(a);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

inline AlgebraElement parse_element(const AlgebraPtr& alg, std::string_view text) {
  const Field& k = alg->field();
  const Group& g = alg->group();
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw AlgebraError("empty algebra element");
  AlgebraElement out(alg);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw AlgebraError("cannot parse algebra element '" + s + "' at position " + std::to_string(i) + ": " + why);
  };
  while (i < s.size()) {
    bool negate = false;
    if (s[i] == '+' || s[i] == '-') {
      negate = s[i] == '-';
      ++i;
    }
    // Term extends to the next top-level '+' or '-' that is not an exponent sign.
    std::size_t j = i;
    int depth = 0;
    for (; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0 && (s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != '^') break;
    }
    const std::string term = s.substr(i, j - i);
    if (term.empty()) fail("empty term");
    FieldElement coeff = Field::one();
    std::string word;
    try {
      if (term[0] == '(') {
        const auto close = term.find(')');
        if (close == std::string::npos) fail("unbalanced parenthesis");
        coeff = k.parse(term.substr(1, close - 1));
        const std::string rest = term.substr(close + 1);
        if (!rest.empty()) {
          if (rest[0] != '*') fail("expected '*' after coefficient");
          word = rest.substr(1);
        }
      } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
        std::size_t d = 0;
        while (d < term.size() && std::isdigit(static_cast<unsigned char>(term[d]))) ++d;
        coeff = k.from_int(std::stoll(term.substr(0, d)));
        if (d < term.size()) {
          if (term[d] == '^') {
            // "1^k" style words are not coefficients
            word = term;
            coeff = Field::one();
          } else {
            if (term[d] != '*') fail("expected '*' after coefficient");
            word = term.substr(d + 1);
          }
        }
      } else {
        word = term;
      }
      const Index e = word.empty() ? g.identity() : g.parse_element(word);
      if (negate) coeff = k.neg(coeff);
      out.set_coeff(e, k.add(out.coeff(e), coeff));
    } catch (const FieldError& err) {
      fail(err.what());
    } catch (const GroupError& err) {
      fail(err.what());
    }
    i = j;
  }
  return out;
}

}  // namespace vstar

template <>
struct std::hash<vstar::AlgebraElement> {
  std::size_t operator()(const vstar::AlgebraElement& x) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto c : x.coeffs()) {
      h ^= c.rep;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
