#pragma once

// Descriptor mini-language:
//
//   desc := C(n) | A(n1,n2,...) | D(n) | Q(n) | ES(n) | ESC4(n) | HEIS(p)
//         | SDI(abel; b=2) | SDI(abel; b=4, sq=<word in abel>)
//         | Y(desc, desc)
//   abel := C(n) | A(n1,...)
//
// Integers may be written as powers, e.g. D(2^4). ES(n) is Q8^{Yn},
// ESC4(n) is Q8^{Yn} Y C4, and Y amalgamates each factor's designated
// central element (see designated_central_element).

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vstar/group.hpp"

namespace vstar {

class DescriptorError : public std::invalid_argument {
 public:
  DescriptorError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1;
  }
  return false;
}

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : s_(text) {}

  GroupDescriptor parse() {
    auto d = parse_desc();
    skip_ws();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw DescriptorError(why, i_); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void expect(char c) {
    skip_ws();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  bool accept(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a family name");
    return std::string(s_.substr(start, i_ - start));
  }

  std::uint32_t integer() {
    skip_ws();
    auto digits = [&]() {
      const std::size_t start = i_;
      std::uint64_t v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
        if (v > 0xFFFFFFFFull) fail("integer too large");
      }
      if (start == i_) fail("expected an integer");
      return v;
    };
    std::uint64_t v = digits();
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      skip_ws();
      const std::uint64_t e = digits();
      std::uint64_t r = 1;
      for (std::uint64_t k = 0; k < e; ++k) {
        r *= v;
        if (r > 0xFFFFFFFFull) fail("integer too large");
      }
      v = r;
    }
    return static_cast<std::uint32_t>(v);
  }

  GroupDescriptor parse_desc() {
    skip_ws();
    const std::size_t start = i_;
    const std::string fam = ident();
    expect('(');
    GroupDescriptor d;
    if (fam == "C") {
      d.family = Family::cyclic;
      d.params = {integer()};
      if (d.params[0] < 1) fail_at(start, "cyclic order must be >= 1");
    } else if (fam == "A") {
      d.family = Family::abelian;
      do {
        const std::size_t at = i_;
        const auto v = integer();
        if (!is_prime_power(v)) fail_at(at, "abelian invariant " + std::to_string(v) + " is not a prime power");
        d.params.push_back(v);
      } while (accept(','));
    } else if (fam == "D" || fam == "Q") {
      d.family = fam == "D" ? Family::dihedral : Family::quaternion;
      const std::size_t at = i_;
      const auto v = integer();
      const std::uint32_t min = fam == "D" ? 4 : 8;
      if (v < min || (v & (v - 1)) != 0)
        fail_at(at, fam + " order must be a power of 2, at least " + std::to_string(min));
      d.params = {v};
    } else if (fam == "ES" || fam == "ESC4") {
      d.family = fam == "ES" ? Family::extraspecial_q8_power : Family::extraspecial_q8_power_y_c4;
      const std::size_t at = i_;
      const auto v = integer();
      if (v < 1) fail_at(at, fam + " needs n >= 1");
      if (v > 4) fail_at(at, fam + " is limited to n <= 4");
      d.params = {v};
    } else if (fam == "HEIS") {
      d.family = Family::heisenberg;
      const std::size_t at = i_;
      const auto v = integer();
      if (v < 3 || !is_prime_power(v) || (v & 1) == 0) fail_at(at, "HEIS needs an odd prime");
      d.params = {v};
    } else if (fam == "SDI") {
      d.family = Family::semidirect_inversion;
      const std::size_t at = i_;
      auto a = parse_desc();
      if (a.family != Family::cyclic && a.family != Family::abelian) fail_at(at, "SDI needs an abelian C(...) or A(...)");
      d.factors.push_back(std::move(a));
      expect(';');
      skip_ws();
      if (ident() != "b") fail("expected 'b='");
      expect('=');
      const std::size_t bat = i_;
      const auto bo = integer();
      if (bo != 2 && bo != 4) fail_at(bat, "b must have order 2 or 4");
      d.params = {bo};
      if (accept(',')) {
        skip_ws();
        if (ident() != "sq") fail("expected 'sq='");
        expect('=');
        skip_ws();
        const std::size_t ws = i_;
        while (i_ < s_.size() && s_[i_] != ')') ++i_;
        std::string w(s_.substr(ws, i_ - ws));
        while (!w.empty() && std::isspace(static_cast<unsigned char>(w.back()))) w.pop_back();
        if (w.empty()) fail("expected a word after 'sq='");
        const auto& af = d.factors.front();
        const Group ag = af.family == Family::cyclic ? cyclic_group(af.params.at(0)) : abelian_group(af.params);
        try {
          d.b_square = ag.name(ag.parse_element(w));
        } catch (const GroupError& e) {
          fail_at(ws, e.what());
        }
        if (d.b_square == "1") d.b_square.clear();
      }
      if (bo == 4 && d.b_square.empty()) fail("b=4 needs sq=<involution of A>");
    } else if (fam == "Y") {
      d.family = Family::central_product;
      d.factors.push_back(parse_desc());
      expect(',');
      d.factors.push_back(parse_desc());
    } else {
      fail_at(start, "unknown family '" + fam + "'");
    }
    expect(')');
    return d;
  }

  [[noreturn]] void fail_at(std::size_t at, const std::string& why) const { throw DescriptorError(why, at); }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline GroupDescriptor parse_descriptor(std::string_view text) { return detail::DescriptorParser(text).parse(); }

inline std::string to_string(const GroupDescriptor& d) {
  auto num = [](std::uint32_t v) { return std::to_string(v); };
  switch (d.family) {
    case Family::cyclic:
      return "C(" + num(d.params.at(0)) + ")";
    case Family::abelian: {
      std::string out = "A(";
      for (std::size_t i = 0; i < d.params.size(); ++i) out += (i ? "," : "") + num(d.params[i]);
      return out + ")";
    }
    case Family::dihedral:
      return "D(" + num(d.params.at(0)) + ")";
    case Family::quaternion:
      return "Q(" + num(d.params.at(0)) + ")";
    case Family::extraspecial_q8_power:
      return "ES(" + num(d.params.at(0)) + ")";
    case Family::extraspecial_q8_power_y_c4:
      return "ESC4(" + num(d.params.at(0)) + ")";
    case Family::heisenberg:
      return "HEIS(" + num(d.params.at(0)) + ")";
    case Family::semidirect_inversion: {
      std::string out = "SDI(" + to_string(d.factors.at(0)) + "; b=" + num(d.params.at(0));
      if (!d.b_square.empty()) out += ", sq=" + d.b_square;
      return out + ")";
    }
    case Family::central_product:
      return "Y(" + to_string(d.factors.at(0)) + ", " + to_string(d.factors.at(1)) + ")";
  }
  return "?";
}

/// |G| straight from the descriptor, without building anything.
inline std::uint64_t descriptor_order(const GroupDescriptor& d) {
  switch (d.family) {
    case Family::cyclic:
    case Family::dihedral:
    case Family::quaternion:
      return d.params.at(0);
    case Family::abelian: {
      std::uint64_t n = 1;
      for (auto v : d.params) n *= v;
      return n;
    }
    case Family::semidirect_inversion:
      return 2 * descriptor_order(d.factors.at(0));
    case Family::extraspecial_q8_power:
      return std::uint64_t{1} << (2 * d.params.at(0) + 1);
    case Family::extraspecial_q8_power_y_c4:
      return std::uint64_t{1} << (2 * d.params.at(0) + 2);
    case Family::heisenberg:
      return std::uint64_t{d.params.at(0)} * d.params.at(0) * d.params.at(0);
    case Family::central_product:
      // Designated central elements are involutions.
      return descriptor_order(d.factors.at(0)) * descriptor_order(d.factors.at(1)) / 2;
  }
  return 0;
}

inline Group build_group(const GroupDescriptor& d) {
  switch (d.family) {
    case Family::cyclic:
      return cyclic_group(d.params.at(0));
    case Family::abelian:
      return abelian_group(d.params);
    case Family::dihedral:
      return dihedral_group(d.params.at(0));
    case Family::quaternion:
      return quaternion_group(d.params.at(0));
    case Family::extraspecial_q8_power:
      return extraspecial_q8_power(d.params.at(0));
    case Family::extraspecial_q8_power_y_c4:
      return extraspecial_q8_power_y_c4(d.params.at(0));
    case Family::heisenberg:
      return heisenberg_group(d.params.at(0));
    case Family::semidirect_inversion: {
      const Group a = build_group(d.factors.at(0));
      const Index sq = d.b_square.empty() ? a.identity() : a.parse_element(d.b_square);
      Group g = semidirect_inversion(a, d.params.at(0), sq);
      g.set_descriptor(d);
      return g;
    }
    case Family::central_product: {
      const Group g = build_group(d.factors.at(0));
      const Group h = build_group(d.factors.at(1));
      Group out = central_product(g, h, designated_central_element(g), designated_central_element(h));
      out.set_descriptor(d);
      return out;
    }
  }
  throw GroupError("unknown family");
}

inline Group build_group(std::string_view text) { return build_group(parse_descriptor(text)); }

}  // namespace vstar
