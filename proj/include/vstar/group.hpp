#pragma once

// Finite groups as Cayley tables, plus the constructors for the families
// used throughout the library (cyclic, abelian, inverting semidirect
// products, central products, extraspecial 2-groups, Heisenberg groups).

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vstar {

using Index = std::uint16_t;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family {
  cyclic,
  abelian,
  dihedral,
  quaternion,
  semidirect_inversion,
  extraspecial_q8_power,
  extraspecial_q8_power_y_c4,
  central_product,
  heisenberg,
};

/// Symbolic recipe for a group. Parameters by family:
///   cyclic: params = {n}
///   abelian: params = invariants
///   dihedral, quaternion: params = {order}
///   semidirect_inversion: factors = {A}, params = {b_order}, b_square = word in A
///   extraspecial_q8_power, extraspecial_q8_power_y_c4: params = {n}
///   central_product: factors = {G, H}
///   heisenberg: params = {p}
struct GroupDescriptor {
  Family family = Family::cyclic;
  std::vector<std::uint32_t> params;
  std::vector<GroupDescriptor> factors;
  std::string b_square;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Sorted member indices of a subgroup.
struct SubgroupHandle {
  std::vector<Index> members;

  std::size_t size() const { return members.size(); }
  bool contains(Index g) const { return std::binary_search(members.begin(), members.end(), g); }
  friend bool operator==(const SubgroupHandle&, const SubgroupHandle&) = default;
};

/// Normal form of an element as a product of generator powers.
struct Word {
  std::vector<std::pair<std::uint16_t, int>> factors;  // (generator id, exponent)
};

/// Layout of a group A ⋊ <b> built by semidirect_inversion: index i*|A| + a
/// is the element a·b^i.
struct SemidirectLayout {
  std::size_t abelian_order = 0;
  Index b = 0;
  unsigned b_order = 2;
  Index b_square = 0;

  bool in_abelian_part(Index g) const { return g < abelian_order; }
};

class Group {
 public:
  /// Builds the Cayley table of `n` elements from `mul`; element 0 must be
  /// the identity.
  template <typename Mul>
  static Group from_multiplication(std::size_t n, Mul&& mul, std::vector<std::string> generator_symbols,
                                   std::vector<Index> generator_elements, std::vector<Word> words,
                                   GroupDescriptor descriptor) {
    if (n == 0 || n > 0xFFFF) throw GroupError("group order out of range");
    Group g;
    g.n_ = n;
    g.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = static_cast<Index>(mul(i, j));
    g.symbols_ = std::move(generator_symbols);
    g.generators_ = std::move(generator_elements);
    g.words_ = std::move(words);
    g.descriptor_ = std::move(descriptor);
    g.finish();
    return g;
  }

  std::size_t order() const { return n_; }
  Index mul(Index a, Index b) const { return table_[std::size_t{a} * n_ + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  unsigned element_order(Index a) const { return order_of_[a]; }
  const std::vector<unsigned>& element_orders() const { return order_of_; }
  Index identity() const { return 0; }

  /// Row `a` of the Cayley table: row(a)[b] = a·b.
  const Index* row(Index a) const { return table_.data() + std::size_t{a} * n_; }

  Index power(Index a, long long e) const {
    const long long k = static_cast<long long>(order_of_[a]);
    e %= k;
    if (e < 0) e += k;
    Index r = 0;
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  Index commutator(Index a, Index b) const { return mul(mul(inverse(a), inverse(b)), mul(a, b)); }
  bool commute(Index a, Index b) const { return mul(a, b) == mul(b, a); }

  const std::string& name(Index a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::string>& generator_symbols() const { return symbols_; }
  const std::vector<Index>& generators() const { return generators_; }
  const Word& word(Index a) const { return words_[a]; }
  const GroupDescriptor& descriptor() const { return descriptor_; }
  const std::optional<SemidirectLayout>& semidirect() const { return semidirect_; }

  void set_semidirect(SemidirectLayout layout) { semidirect_ = layout; }
  void set_descriptor(GroupDescriptor d) { descriptor_ = std::move(d); }

  void rename_generators(std::vector<std::string> symbols) {
    if (symbols.size() != symbols_.size()) throw GroupError("generator count mismatch in rename");
    symbols_ = std::move(symbols);
    rebuild_names();
  }

  bool is_abelian() const {
    for (Index a = 0; a < n_; ++a)
      for (Index b = static_cast<Index>(a + 1); b < n_; ++b)
        if (!commute(a, b)) return false;
    return true;
  }

  /// Parses a word such as "a^2*b", "a1*b2^-1" or "1" over the generator symbols.
  Index parse_element(std::string_view text) const {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw GroupError("empty group element");
    Index acc = identity();
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
      throw GroupError("cannot parse group element '" + s + "' at position " + std::to_string(i) + ": " + why);
    };
    while (true) {
      Index factor = identity();
      if (i < s.size() && s[i] == '1' && (i + 1 == s.size() || s[i + 1] == '*' || s[i + 1] == '^')) {
        ++i;
      } else if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])))) {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
        const std::string sym = s.substr(i, j - i);
        auto it = std::find(symbols_.begin(), symbols_.end(), sym);
        if (it == symbols_.end()) fail("unknown generator '" + sym + "'");
        factor = generators_[static_cast<std::size_t>(it - symbols_.begin())];
        i = j;
      } else {
        fail("expected generator");
      }
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
          neg = true;
          ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected exponent");
        long long e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
        factor = power(factor, neg ? -e : e);
      }
      acc = mul(acc, factor);
      if (i == s.size()) break;
      if (s[i] != '*') fail("expected '*'");
      ++i;
    }
    return acc;
  }

 private:
  void finish() {
    inverse_.assign(n_, 0);
    order_of_.assign(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      if (table_[a] != a || table_[a * n_] != a) throw GroupError("element 0 is not the identity");
    }
    for (std::size_t a = 0; a < n_; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n_; ++b) {
        if (table_[a * n_ + b] == 0) {
          inverse_[a] = static_cast<Index>(b);
          found = true;
          break;
        }
      }
      if (!found) throw GroupError("element without inverse");
      Index x = static_cast<Index>(a);
      unsigned k = 1;
      while (x != 0) {
        x = table_[std::size_t{x} * n_ + a];
        if (++k > n_) throw GroupError("element order exceeds group order");
      }
      order_of_[a] = k;
    }
    if (words_.size() != n_) words_.assign(n_, Word{});
    rebuild_names();
  }

  void rebuild_names() {
    names_.assign(n_, "");
    for (std::size_t a = 0; a < n_; ++a) {
      std::string out;
      for (auto [gen, e] : words_[a].factors) {
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += symbols_.at(gen);
        if (e != 1) out += "^" + std::to_string(e);
      }
      names_[a] = out.empty() ? (a == 0 ? "1" : "g" + std::to_string(a)) : out;
    }
  }

  std::size_t n_ = 0;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<unsigned> order_of_;
  std::vector<std::string> symbols_;
  std::vector<Index> generators_;
  std::vector<Word> words_;
  std::vector<std::string> names_;
  GroupDescriptor descriptor_;
  std::optional<SemidirectLayout> semidirect_;
};

using GroupPtr = std::shared_ptr<const Group>;

// ---------------------------------------------------------------------------
// Subgroups and structure

/// Smallest subgroup containing `generators`, by breadth-first product closure.
inline SubgroupHandle subgroup_closure(const Group& g, const std::vector<Index>& generators) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Index> members{g.identity()};
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Index x = members[head];
    for (Index s : generators) {
      const Index y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return {std::move(members)};
}

inline SubgroupHandle center(const Group& g) {
  std::vector<Index> out;
  for (Index a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Index b = 0; b < g.order() && central; ++b) central = g.commute(a, b);
    if (central) out.push_back(a);
  }
  return {std::move(out)};
}

inline SubgroupHandle commutator_subgroup(const Group& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Index> gens;
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b) {
      const Index c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_closure(g, gens);
}

/// Smallest prime dividing |G|; for a p-group this is p.
inline unsigned group_prime(const Group& g) {
  const std::size_t n = g.order();
  for (unsigned p = 2; p <= n; ++p)
    if (n % p == 0) return p;
  return 1;
}

inline bool is_p_group(const Group& g) {
  std::size_t n = g.order();
  const unsigned p = group_prime(g);
  if (p == 1) return true;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Frattini subgroup of a p-group: generated by p-th powers and commutators.
inline SubgroupHandle frattini_subgroup(const Group& g) {
  if (!is_p_group(g)) throw GroupError("Frattini subgroup is only computed for p-groups");
  const unsigned p = group_prime(g);
  std::vector<Index> gens;
  for (Index a = 0; a < g.order(); ++a) gens.push_back(g.power(a, p));
  for (Index c : commutator_subgroup(g).members) gens.push_back(c);
  return subgroup_closure(g, gens);
}

/// element order -> number of elements of that order
inline std::map<unsigned, std::size_t> order_histogram(const Group& g) {
  std::map<unsigned, std::size_t> h;
  for (unsigned o : g.element_orders()) ++h[o];
  return h;
}

struct StructuralData {
  SubgroupHandle center;
  SubgroupHandle commutator;
  std::map<unsigned, std::size_t> order_histogram;
};

inline StructuralData structural_data(const Group& g) {
  return {center(g), commutator_subgroup(g), order_histogram(g)};
}

/// A transversal L_G of the order-4 elements under translation by the
/// generator c of a commutator subgroup of order 2: from each pair {x, xc}
/// the smaller index is kept.
inline std::vector<Index> order4_transversal(const Group& g) {
  const auto derived = commutator_subgroup(g);
  if (derived.size() != 2) throw GroupError("order-4 transversal needs |G'| = 2, got |G'| = " + std::to_string(derived.size()));
  const Index c = derived.members[1];
  std::vector<Index> out;
  for (Index x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != 4) continue;
    if (x < g.mul(x, c)) out.push_back(x);
  }
  return out;
}

struct AbelianStats {
  std::size_t size_A2 = 0;    // |A[2]|
  std::size_t size_Asq2 = 0;  // |A^2[2]|
};

inline AbelianStats abelian_stats(const Group& a) {
  if (!a.is_abelian()) throw GroupError("abelian_stats needs an abelian group");
  AbelianStats s;
  std::vector<char> square(a.order(), 0);
  for (Index x = 0; x < a.order(); ++x) {
    if (a.mul(x, x) == a.identity()) ++s.size_A2;
    square[a.mul(x, x)] = 1;
  }
  for (Index y = 0; y < a.order(); ++y)
    if (square[y] && a.mul(y, y) == a.identity()) ++s.size_Asq2;
  return s;
}

/// Exhaustive group-axiom check for |G| <= exhaustive_limit, otherwise
/// `samples` random triples for associativity.
inline bool verify_group_axioms(const Group& g, std::size_t exhaustive_limit = 256, std::size_t samples = 200000,
                                std::uint64_t seed = 1) {
  const std::size_t n = g.order();
  for (Index a = 0; a < n; ++a) {
    if (g.mul(a, g.inverse(a)) != 0 || g.mul(g.inverse(a), a) != 0) return false;
    if (n % g.element_order(a) != 0) return false;
  }
  auto assoc = [&](Index a, Index b, Index c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= exhaustive_limit) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    if (!assoc(static_cast<Index>(pick(rng)), static_cast<Index>(pick(rng)), static_cast<Index>(pick(rng))))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructors

inline Group cyclic_group(std::size_t n, std::string symbol = "a") {
  if (n < 1) throw GroupError("cyclic group order must be >= 1");
  std::vector<Word> words(n);
  for (std::size_t i = 1; i < n; ++i) words[i].factors = {{0, static_cast<int>(i)}};
  GroupDescriptor d{Family::cyclic, {static_cast<std::uint32_t>(n)}, {}, {}};
  std::vector<std::string> syms;
  std::vector<Index> gens;
  if (n > 1) {
    syms = {std::move(symbol)};
    gens = {1};
  }
  return Group::from_multiplication(
      n, [n](std::size_t i, std::size_t j) { return (i + j) % n; }, std::move(syms), std::move(gens),
      std::move(words), std::move(d));
}

/// Direct product of cyclic groups of the given orders. Element index is the
/// mixed-radix number of its exponent vector, first factor most significant.
inline Group abelian_group(const std::vector<std::uint32_t>& invariants, std::vector<std::string> symbols = {}) {
  if (invariants.empty()) throw GroupError("abelian group needs at least one invariant");
  for (auto k : invariants)
    if (k < 2) throw GroupError("abelian invariants must be >= 2");
  if (invariants.size() == 1) {
    auto g = cyclic_group(invariants[0], symbols.empty() ? "a" : symbols[0]);
    g.set_descriptor({Family::abelian, invariants, {}, {}});
    return g;
  }
  if (symbols.empty())
    for (std::size_t i = 0; i < invariants.size(); ++i) symbols.push_back("a" + std::to_string(i + 1));
  const std::size_t k = invariants.size();
  std::size_t n = 1;
  for (auto v : invariants) n *= v;
  if (n > 0xFFFF) throw GroupError("abelian group too large");
  auto digits = [&](std::size_t idx) {
    std::vector<std::uint32_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<std::uint32_t>(idx % invariants[i]);
      idx /= invariants[i];
    }
    return d;
  };
  auto pack = [&](const std::vector<std::uint32_t>& d) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * invariants[i] + d[i];
    return idx;
  };
  std::vector<Word> words(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    auto d = digits(idx);
    for (std::size_t i = 0; i < k; ++i)
      if (d[i]) words[idx].factors.push_back({static_cast<std::uint16_t>(i), static_cast<int>(d[i])});
  }
  std::vector<Index> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> e(k, 0);
    e[i] = 1;
    gens.push_back(static_cast<Index>(pack(e)));
  }
  return Group::from_multiplication(
      n,
      [&](std::size_t i, std::size_t j) {
        auto a = digits(i), b = digits(j);
        for (std::size_t t = 0; t < k; ++t) a[t] = (a[t] + b[t]) % invariants[t];
        return pack(a);
      },
      std::move(symbols), std::move(gens), std::move(words), GroupDescriptor{Family::abelian, invariants, {}, {}});
}

/// A ⋊ <b> with b inverting A. For b_order 2, b_square must be the identity;
/// for b_order 4, b_square is a non-identity element of A[2]. Elements are
/// pairs (a, b^i) multiplied as
///   (a, b^i)(a', b^j) = (a · a'^{(-1)^i} · b_square^{floor((i+j)/2)}, b^{(i+j) mod 2}).
inline Group semidirect_inversion(const Group& a_group, unsigned b_order, Index b_square, std::string b_symbol = "b") {
  if (!a_group.is_abelian()) throw GroupError("semidirect_inversion needs an abelian A");
  if (b_order != 2 && b_order != 4) throw GroupError("b must have order 2 or 4");
  if (b_square >= a_group.order()) throw GroupError("b^2 is not an element of A");
  if (b_order == 2 && b_square != a_group.identity()) throw GroupError("b of order 2 needs b^2 = 1");
  if (b_order == 4 && (b_square == a_group.identity() || a_group.element_order(b_square) != 2))
    throw GroupError("b of order 4 needs b^2 to be an involution of A");
  const std::size_t na = a_group.order();
  const std::size_t n = 2 * na;
  std::vector<Word> words(n);
  const auto bsym = static_cast<std::uint16_t>(a_group.generator_symbols().size());
  for (std::size_t idx = 0; idx < n; ++idx) {
    words[idx] = a_group.word(static_cast<Index>(idx % na));
    if (idx >= na) words[idx].factors.push_back({bsym, 1});
  }
  auto syms = a_group.generator_symbols();
  syms.push_back(std::move(b_symbol));
  auto gens = a_group.generators();
  gens.push_back(static_cast<Index>(na));
  GroupDescriptor d{Family::semidirect_inversion, {b_order}, {a_group.descriptor()}, {}};
  if (b_square != 0) d.b_square = a_group.name(b_square);
  auto g = Group::from_multiplication(
      n,
      [&](std::size_t x, std::size_t y) {
        const auto i = x / na, j = y / na;
        const auto a1 = static_cast<Index>(x % na), a2 = static_cast<Index>(y % na);
        Index r = a_group.mul(a1, i ? a_group.inverse(a2) : a2);
        if ((i + j) / 2) r = a_group.mul(r, b_square);
        return ((i + j) % 2) * na + r;
      },
      std::move(syms), std::move(gens), std::move(words), std::move(d));
  g.set_semidirect({na, static_cast<Index>(na), b_order, b_square});
  return g;
}

/// Dihedral group of order 2^{n+1} = <a, b | a^{2^n} = b^2 = 1, a^b = a^{-1}>.
inline Group dihedral_group(std::size_t order, std::string a = "a", std::string b = "b") {
  if (order < 4 || (order & (order - 1)) != 0) throw GroupError("dihedral order must be a power of 2, at least 4");
  auto g = semidirect_inversion(cyclic_group(order / 2, std::move(a)), 2, 0, std::move(b));
  g.set_descriptor({Family::dihedral, {static_cast<std::uint32_t>(order)}, {}, {}});
  return g;
}

/// Generalized quaternion group of order 2^{n+1} = <a, b | a^{2^n} = 1, a^{2^{n-1}} = b^2, a^b = a^{-1}>.
inline Group quaternion_group(std::size_t order, std::string a = "a", std::string b = "b") {
  if (order < 8 || (order & (order - 1)) != 0) throw GroupError("quaternion order must be a power of 2, at least 8");
  auto g = semidirect_inversion(cyclic_group(order / 2, std::move(a)), 4, static_cast<Index>(order / 4), std::move(b));
  g.set_descriptor({Family::quaternion, {static_cast<std::uint32_t>(order)}, {}, {}});
  return g;
}

struct CentralProductResult {
  Group group;
  std::vector<Index> left;   // image of each element of G
  std::vector<Index> right;  // image of each element of H
};

/// G Y H: the quotient of G x H by <(zG, zH^{-1})>. Coset representatives
/// are the least direct-product indices (g·|H| + h), numbered in increasing
/// order, so the identity stays at index 0.
inline CentralProductResult central_product_with_embeddings(const Group& g, const Group& h, Index zg, Index zh) {
  const auto cg = center(g), ch = center(h);
  if (!cg.contains(zg) || !ch.contains(zh)) throw GroupError("central product: amalgamated element is not central");
  const unsigned k = g.element_order(zg);
  if (k != h.element_order(zh)) throw GroupError("central product: amalgamated elements have different orders");
  if (k != 2 && k != 4) throw GroupError("central product: amalgamated elements must have order 2 or 4");
  const std::size_t ng = g.order(), nh = h.order(), np = ng * nh;
  if (np / k > 0xFFFF) throw GroupError("central product too large");
  auto pack = [nh](std::size_t a, std::size_t b) { return a * nh + b; };

  std::vector<std::size_t> rep_of(np, np);
  std::vector<std::size_t> reps;
  for (std::size_t idx = 0; idx < np; ++idx) {
    if (rep_of[idx] != np) continue;
    // idx is the least member of its coset.
    Index a = static_cast<Index>(idx / nh), b = static_cast<Index>(idx % nh);
    for (unsigned t = 0; t < k; ++t) {
      rep_of[pack(a, b)] = reps.size();
      a = g.mul(a, zg);
      b = h.mul(b, h.inverse(zh));
    }
    reps.push_back(idx);
  }
  const std::size_t n = reps.size();

  auto syms = g.generator_symbols();
  const auto offset = static_cast<std::uint16_t>(syms.size());
  for (auto s : h.generator_symbols()) {
    while (std::find(syms.begin(), syms.end(), s) != syms.end()) s += "'";
    syms.push_back(s);
  }
  std::vector<Index> gens;
  for (Index x : g.generators()) gens.push_back(static_cast<Index>(rep_of[pack(x, 0)]));
  for (Index y : h.generators()) gens.push_back(static_cast<Index>(rep_of[pack(0, y)]));

  std::vector<Word> words(n);
  for (std::size_t i = 0; i < n; ++i) {
    words[i] = g.word(static_cast<Index>(reps[i] / nh));
    for (auto [gen, e] : h.word(static_cast<Index>(reps[i] % nh)).factors)
      words[i].factors.push_back({static_cast<std::uint16_t>(gen + offset), e});
  }

  GroupDescriptor d{Family::central_product, {}, {g.descriptor(), h.descriptor()}, {}};
  auto group = Group::from_multiplication(
      n,
      [&](std::size_t x, std::size_t y) {
        const auto px = reps[x], py = reps[y];
        const Index a = g.mul(static_cast<Index>(px / nh), static_cast<Index>(py / nh));
        const Index b = h.mul(static_cast<Index>(px % nh), static_cast<Index>(py % nh));
        return rep_of[pack(a, b)];
      },
      std::move(syms), std::move(gens), std::move(words), std::move(d));

  CentralProductResult out{std::move(group), std::vector<Index>(ng), std::vector<Index>(nh)};
  for (std::size_t a = 0; a < ng; ++a) out.left[a] = static_cast<Index>(rep_of[pack(a, 0)]);
  for (std::size_t b = 0; b < nh; ++b) out.right[b] = static_cast<Index>(rep_of[pack(0, b)]);
  return out;
}

inline Group central_product(const Group& g, const Group& h, Index zg, Index zh) {
  return std::move(central_product_with_embeddings(g, h, zg, zh).group);
}

/// Central element a central product amalgamates by default: the generator
/// of G' when |G'| = 2, else the least-index central involution.
inline Index designated_central_element(const Group& g) {
  const auto derived = commutator_subgroup(g);
  if (derived.size() == 2) return derived.members[1];
  for (Index z : center(g).members)
    if (g.element_order(z) == 2) return z;
  throw GroupError("group has no central involution to amalgamate");
}

/// Q8 Y ... Y Q8 (n factors) over the common central involution c. Factor i
/// has generators a<i>, b<i>.
inline Group extraspecial_q8_power(unsigned n) {
  if (n < 1) throw GroupError("extraspecial power needs n >= 1");
  auto q8 = [](unsigned i) {
    return quaternion_group(8, "a" + std::to_string(i), "b" + std::to_string(i));
  };
  Group g = n == 1 ? quaternion_group(8) : q8(1);
  Index c = 2;  // a^2 in Q8's layout
  for (unsigned i = 2; i <= n; ++i) {
    const Group f = q8(i);
    auto r = central_product_with_embeddings(g, f, c, 2);
    c = r.left[c];
    g = std::move(r.group);
  }
  g.set_descriptor({Family::extraspecial_q8_power, {n}, {}, {}});
  return g;
}

/// Q8^{Yn} Y C4, identifying c with d^2.
inline Group extraspecial_q8_power_y_c4(unsigned n) {
  Group h = extraspecial_q8_power(n);
  const Index c = commutator_subgroup(h).members[1];
  Group g = central_product(h, cyclic_group(4, "d"), c, 2);
  g.set_descriptor({Family::extraspecial_q8_power_y_c4, {n}, {}, {}});
  return g;
}

/// Heisenberg group mod an odd prime p (extraspecial of order p^3, exponent p):
/// triples (x, y, z) with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x·y').
inline Group heisenberg_group(std::uint32_t p) {
  if (p < 3 || p > 37) throw GroupError("Heisenberg group needs an odd prime p <= 37");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw GroupError("Heisenberg group needs a prime p");
  const std::size_t n = std::size_t{p} * p * p;
  auto unpack = [p](std::size_t i) {
    return std::array<std::uint32_t, 3>{static_cast<std::uint32_t>(i / (p * p)), static_cast<std::uint32_t>(i / p % p),
                                        static_cast<std::uint32_t>(i % p)};
  };
  auto pack = [p](std::uint32_t x, std::uint32_t y, std::uint32_t z) { return (std::size_t{x} * p + y) * p + z; };
  // a = (1,0,0), b = (0,1,0), c = (0,0,1); (x,y,z) = a^x b^y c^{z - xy}.
  std::vector<Word> words(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, y, z] = unpack(i);
    const std::uint32_t cz = (z + p * p - (x * y) % p) % p;
    if (x) words[i].factors.push_back({0, static_cast<int>(x)});
    if (y) words[i].factors.push_back({1, static_cast<int>(y)});
    if (cz) words[i].factors.push_back({2, static_cast<int>(cz)});
  }
  return Group::from_multiplication(
      n,
      [&](std::size_t i, std::size_t j) {
        auto [x1, y1, z1] = unpack(i);
        auto [x2, y2, z2] = unpack(j);
        return pack((x1 + x2) % p, (y1 + y2) % p, (z1 + z2 + x1 * y2) % p);
      },
      {"a", "b", "c"}, {static_cast<Index>(pack(1, 0, 0)), static_cast<Index>(pack(0, 1, 0)), static_cast<Index>(pack(0, 0, 1))},
      std::move(words), GroupDescriptor{Family::heisenberg, {p}, {}, {}});
}

}  // namespace vstar
