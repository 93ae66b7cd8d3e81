#pragma once

// Closed-form orders of V(KG), L_G, S_K(G) and V_*(KG), computed from a
// GroupDescriptor alone.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vstar/descriptor.hpp"
#include "vstar/field.hpp"
#include "vstar/order.hpp"

namespace vstar {

class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OrderPrediction {
  std::optional<Order> v_order;
  std::optional<std::uint64_t> lg_size;
  std::optional<Order> sk_order;
  std::optional<Order> vstar_order;
  std::string source = "unknown";
  std::vector<std::string> caveats;

  bool covered() const { return vstar_order.has_value(); }
};

namespace formula {

inline std::uint64_t pow2(std::uint64_t e) {
  if (e >= 64) throw FormulaError("2^" + std::to_string(e) + " overflows");
  return std::uint64_t{1} << e;
}

/// |L_G| = 2^{n-1}(2^n - (-1)^n) for Q8^{Yn}. Also holds at n = 1 (3).
inline std::uint64_t extraspecial_lg_size(unsigned n) {
  const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(pow2(n - 1)) * (static_cast<std::int64_t>(pow2(n)) - sign));
}

/// Exponent e with |V_*(KG)| = |K|^e for an extraspecial group of order
/// 2^{2n+1}, in the closed form 2^{n-1}(2^{n+2} - 2^n + (-1)^n) - 1.
inline std::uint64_t extraspecial_vstar_exponent(unsigned n) {
  if (n < 2) throw FormulaError("the extraspecial formula needs n >= 2 (Q8 is covered by the quaternion formula)");
  const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(pow2(n - 1)) *
                                        (static_cast<std::int64_t>(pow2(n + 2)) - static_cast<std::int64_t>(pow2(n)) + sign) -
                                    1);
}

/// |L_G| = 2^{2n} for Q8^{Yn} Y C4.
inline std::uint64_t extraspecial_y_c4_lg_size(unsigned n) { return pow2(2 * n); }

/// 3·2^{2n} - 1: |G| - 1 - |L_G| for Q8^{Yn} Y C4.
inline std::uint64_t extraspecial_y_c4_exponent_derived(unsigned n) { return 3 * pow2(2 * n) - 1; }

/// 3·2^{2^n} - 1, the alternative reading of the same exponent. Agrees with
/// the derived one for n <= 2.
inline std::uint64_t extraspecial_y_c4_exponent_alternative(unsigned n) { return 3 * pow2(pow2(n)) - 1; }

struct AbelianInvariants {
  std::uint64_t order = 1;  // |A|
  std::uint64_t a2 = 1;     // |A[2]|
  std::uint64_t asq2 = 1;   // |A^2[2]|
};

/// |A|, |A[2]|, |A^2[2]| for an abelian 2-group given by cyclic invariants.
inline AbelianInvariants abelian_2group_invariants(const std::vector<std::uint32_t>& invariants) {
  AbelianInvariants s;
  for (auto k : invariants) {
    if (k < 2 || (k & (k - 1)) != 0) throw FormulaError("abelian invariant " + std::to_string(k) + " is not a power of 2");
    s.order *= k;
    s.a2 *= 2;
    if (k >= 4) s.asq2 *= 2;
  }
  return s;
}

inline std::vector<std::uint32_t> abelian_invariants_of(const GroupDescriptor& a) {
  if (a.family == Family::cyclic) {
    if (a.params.at(0) == 1) return {};
    return {a.params.at(0)};
  }
  if (a.family == Family::abelian) return a.params;
  throw FormulaError("expected an abelian descriptor, got " + to_string(a));
}

}  // namespace formula

/// |V_*(KA)| = |A^2[2]| · |K|^{(|A|+|A[2]|)/2 - 1} for an abelian 2-group A
/// in characteristic 2.
inline Order predict_abelian_vstar(const GroupDescriptor& a, const Field& k) {
  if (k.characteristic() != 2) throw FormulaError("the abelian formula needs characteristic 2");
  const auto s = formula::abelian_2group_invariants(formula::abelian_invariants_of(a));
  return Order(k.size(), (s.order + s.a2) / 2 - 1) * Order::from_count(s.asq2, k.size());
}

/// |K|^{(|G|-1)/2} for a p-group in odd characteristic p.
inline Order predict_oddchar(const GroupDescriptor& d, const Field& k) {
  if (k.characteristic() == 2) throw FormulaError("the odd-characteristic formula does not apply to characteristic 2");
  std::uint64_t n = descriptor_order(d);
  while (n % k.characteristic() == 0) n /= k.characteristic();
  if (n != 1) throw FormulaError(to_string(d) + " is not a " + std::to_string(k.characteristic()) + "-group");
  return Order(k.size(), (descriptor_order(d) - 1) / 2);
}

inline OrderPrediction predict(const GroupDescriptor& d, const Field& k) {
  OrderPrediction out;
  const std::uint64_t n = descriptor_order(d);
  const std::uint64_t q = k.size();
  const std::uint32_t p = k.characteristic();
  {
    std::uint64_t r = n;
    while (r % p == 0) r /= p;
    if (r != 1) {
      out.caveats.push_back("|G| = " + std::to_string(n) + " is not a power of char K = " + std::to_string(p));
      return out;
    }
  }
  const Order v(q, n - 1);
  out.v_order = v;

  if (p != 2) {
    out.vstar_order = predict_oddchar(d, k);
    out.source = "odd-characteristic";
    return out;
  }

  auto inverting_involution = [&](const formula::AbelianInvariants& a) {
    // |K|^{(3|A| + |A[2]| - 2)/2}, with S_K of order |K|^l, l = (|A| - |A[2]|)/2.
    out.vstar_order = Order(q, (3 * a.order + a.a2 - 2) / 2);
    out.sk_order = Order(q, (a.order - a.a2) / 2);
  };
  auto inverting_order4 = [&](const formula::AbelianInvariants& a) {
    // 2 · |A^2[2]| · |K|^{|A| + |A[2]|/2 - 1}
    out.vstar_order = Order(q, a.order + a.a2 / 2 - 1) * Order::from_count(2 * a.asq2, q);
  };

  switch (d.family) {
    case Family::cyclic:
    case Family::abelian: {
      out.vstar_order = predict_abelian_vstar(d, k);
      out.sk_order = v / *out.vstar_order;
      out.source = "abelian-2-group";
      return out;
    }
    case Family::dihedral: {
      const auto a = formula::abelian_2group_invariants({static_cast<std::uint32_t>(n / 2)});
      inverting_involution(a);
      out.source = "dihedral";
      if (n >= 8) {
        // 3·2^{n-1} with |G| = 2^{n+1}
        const auto e = static_cast<std::uint64_t>(std::countr_zero(n)) - 1;
        if (!(*out.vstar_order == Order(q, 3 * formula::pow2(e - 1))))
          out.caveats.push_back("dihedral closed form disagrees with the inverting-involution formula");
      }
      return out;
    }
    case Family::quaternion: {
      const auto a = formula::abelian_2group_invariants({static_cast<std::uint32_t>(n / 2)});
      inverting_order4(a);
      out.source = "generalized-quaternion";
      // 4·|K|^{2^n} with |G| = 2^{n+1}
      if (!(*out.vstar_order == Order(q, n / 2) * Order::from_count(4, q)))
        out.caveats.push_back("quaternion closed form disagrees with the inverting-order-4 formula");
      if (n == 8) out.sk_order = v / *out.vstar_order;
      return out;
    }
    case Family::semidirect_inversion: {
      const auto a = formula::abelian_2group_invariants(formula::abelian_invariants_of(d.factors.at(0)));
      if (d.params.at(0) == 2) {
        inverting_involution(a);
        out.source = "inverting-involution";
      } else {
        inverting_order4(a);
        out.source = "inverting-order-4";
      }
      return out;
    }
    case Family::extraspecial_q8_power: {
      const unsigned m = d.params.at(0);
      out.lg_size = formula::extraspecial_lg_size(m);
      if (m == 1) {
        const auto a = formula::abelian_2group_invariants({4});
        inverting_order4(a);
        out.sk_order = v / *out.vstar_order;
        out.source = "generalized-quaternion";
        out.caveats.push_back("ES(1) = Q8 lies outside the extraspecial formula (n >= 2); using the quaternion formula");
        return out;
      }
      out.sk_order = Order(q, *out.lg_size);
      out.vstar_order = v / *out.sk_order;
      out.source = "extraspecial-q8-power";
      const std::uint64_t closed = formula::extraspecial_vstar_exponent(m);
      if (!(*out.vstar_order == Order(q, closed)))
        out.caveats.push_back("closed-form exponent " + std::to_string(closed) + " differs from |G|-1-|L_G|");
      return out;
    }
    case Family::extraspecial_q8_power_y_c4: {
      const unsigned m = d.params.at(0);
      out.lg_size = formula::extraspecial_y_c4_lg_size(m);
      out.sk_order = Order(q, *out.lg_size);
      out.vstar_order = v / *out.sk_order;
      out.source = "extraspecial-q8-power-y-c4";
      const std::uint64_t derived = formula::extraspecial_y_c4_exponent_derived(m);
      if (!(*out.vstar_order == Order(q, derived)))
        out.caveats.push_back("derived exponent 3*2^(2n)-1 differs from |G|-1-|L_G|");
      if (m <= 5) {
        const std::uint64_t alt = formula::extraspecial_y_c4_exponent_alternative(m);
        out.caveats.push_back("alternative exponent 3*2^(2^n)-1 = " + std::to_string(alt) + ", derived 3*2^(2n)-1 = " +
                              std::to_string(derived) + (alt == derived ? " (equal)" : " (differ; derived asserted)"));
      }
      return out;
    }
    case Family::central_product:
    case Family::heisenberg:
      return out;
  }
  return out;
}

}  // namespace vstar
