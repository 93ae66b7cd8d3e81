#pragma once

// Unitary units V_*(KG) and the symmetric subgroup S_K(G) = {x x* : x in V(KG)}.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "vstar/algebra.hpp"
#include "vstar/descriptor.hpp"
#include "vstar/linalg.hpp"
#include "vstar/order.hpp"

namespace vstar {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

/// Stored subgroups hold at most this many coefficients in total (256 MiB).
inline constexpr std::uint64_t kStoredCoefficientCap = std::uint64_t{1} << 26;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { bruteforce, closure_quotient, structural, formula };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::bruteforce:
      return "bruteforce";
    case Method::closure_quotient:
      return "closure-quotient";
    case Method::structural:
      return "structural";
    case Method::formula:
      return "formula";
  }
  return "?";
}

struct UnitSetReport {
  std::string descriptor;
  std::string field;
  Method method = Method::bruteforce;
  Order order;
  std::vector<std::string> witness_samples;
  double elapsed_s = 0;
  // Side quantities some methods produce: |V(KG)| counted directly,
  // |S_K(G)|, |R|, |V_*(KA)|.
  std::optional<Order> v_order;
  std::optional<Order> sk_order;
  std::optional<Order> r_order;
  std::optional<Order> abelian_vstar_order;
};

// ---------------------------------------------------------------------------
// Predicates

inline bool is_symmetric(const AlgebraElement& x) { return star(x) == x; }
inline bool is_skew(const AlgebraElement& x) { return star(x) == -x; }

/// x·x* = 1 for a normalized unit x.
inline bool is_unitary(const AlgebraElement& x) {
  if (!is_normalized_unit(x)) throw AlgebraError("is_unitary needs a normalized unit");
  return x * star(x) == AlgebraElement::one(x.algebra());
}

/// φ(x) = x·x*.
inline AlgebraElement phi(const AlgebraElement& x) {
  if (!is_unit(x)) throw AlgebraError("phi needs a unit");
  return x * star(x);
}

/// dim_K {x in I_K(G) : x* = -x}, from the linear system x + x* = 0, χ(x) = 0.
inline std::size_t skew_space_dimension(const GroupAlgebra& alg) {
  const Group& g = alg.group();
  const Field& k = alg.field();
  const std::size_t n = g.order();
  Matrix m;
  for (Index a = 0; a < n; ++a) {
    std::vector<FieldElement> row(n, Field::zero());
    row[a] = k.add(row[a], Field::one());
    row[g.inverse(a)] = k.add(row[g.inverse(a)], Field::one());
    m.push_back(std::move(row));
  }
  m.emplace_back(n, Field::one());
  return nullity(m, n, k);
}

// ---------------------------------------------------------------------------
// Odd characteristic: Cayley transform

inline void require_odd(const GroupAlgebra& alg) {
  if (alg.field().characteristic() == 2) throw AlgebraError("needs a field of odd characteristic");
}

/// u = (1 - k)(1 + k)^{-1} for a skew element k.
inline AlgebraElement cayley_unit(const AlgebraElement& k) {
  require_odd(*k.algebra());
  if (!is_skew(k)) throw AlgebraError("cayley_unit needs a skew element");
  const auto one = AlgebraElement::one(k.algebra());
  return (one - k) * alg_inverse(one + k);
}

/// k = (1 - u)(1 + u)^{-1}; inverts cayley_unit on V_*(KG).
inline AlgebraElement cayley_inverse(const AlgebraElement& u) {
  require_odd(*u.algebra());
  const auto one = AlgebraElement::one(u.algebra());
  return (one - u) * alg_inverse(one + u);
}

/// |K|^{(|G|-1)/2} for a p-group in odd characteristic p.
inline Order unitary_order_oddchar(const GroupAlgebra& alg) {
  require_odd(alg);
  require_local(alg);
  return Order(alg.field().size(), (alg.dimension() - 1) / 2);
}

/// Every skew element, as K-combinations of g - g^{-1} over one g per pair
/// {g, g^{-1}} with g != g^{-1}.
inline std::vector<AlgebraElement> enumerate_skew_elements(const AlgebraPtr& alg, std::uint64_t budget = kDefaultBudget) {
  require_odd(*alg);
  const Group& g = alg->group();
  const Field& k = alg->field();
  std::vector<Index> reps;
  for (Index a = 0; a < g.order(); ++a)
    if (a < g.inverse(a)) reps.push_back(a);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (total > budget / k.size()) throw BudgetExceeded("skew space exceeds the enumeration budget");
    total *= k.size();
  }
  std::vector<AlgebraElement> out;
  out.reserve(total);
  for (std::uint64_t t = 0; t < total; ++t) {
    AlgebraElement x(alg);
    std::uint64_t r = t;
    for (Index a : reps) {
      const FieldElement c{static_cast<std::uint32_t>(r % k.size())};
      r /= k.size();
      x.set_coeff(a, c);
      x.set_coeff(g.inverse(a), k.neg(c));
    }
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of V(KG)

/// The normalized units in lexicographic order of the coefficients of the
/// non-identity elements (element 1 most significant); the identity
/// coefficient is forced by χ(x) = 1. Position t in [0, q^{|G|-1}) is the
/// base-q number of those coefficients, so a worker's share is an index range.
class NormalizedUnitEnumerator {
 public:
  NormalizedUnitEnumerator(AlgebraPtr alg, std::uint64_t budget = kDefaultBudget) : alg_(std::move(alg)) {
    const std::uint64_t q = alg_->field().size();
    total_ = 1;
    for (std::size_t i = 1; i < alg_->dimension(); ++i) {
      if (total_ > budget / q) throw BudgetExceeded("|K|^{|G|-1} exceeds the enumeration budget of " + std::to_string(budget));
      total_ *= q;
    }
  }

  const AlgebraPtr& algebra() const { return alg_; }
  std::uint64_t size() const { return total_; }

  /// [first, last) share of worker w out of `workers`.
  std::pair<std::uint64_t, std::uint64_t> slice(unsigned w, unsigned workers) const {
    const auto lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total_) * w) / workers);
    const auto hi = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total_) * (w + 1)) / workers);
    return {lo, hi};
  }

  /// Coefficient digits (indices 1..n-1) at position t.
  std::vector<std::uint32_t> digits_at(std::uint64_t t) const {
    const std::size_t n = alg_->dimension();
    const std::uint32_t q = alg_->field().size();
    std::vector<std::uint32_t> d(n, 0);
    for (std::size_t i = n; i-- > 1;) {
      d[i] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    return d;
  }

  AlgebraElement at(std::uint64_t t) const {
    auto d = digits_at(t);
    const Field& k = alg_->field();
    AlgebraElement x(alg_);
    FieldElement rest = Field::zero();
    for (std::size_t i = 1; i < d.size(); ++i) {
      x.set_coeff(static_cast<Index>(i), {d[i]});
      rest = k.add(rest, {d[i]});
    }
    x.set_coeff(0, k.sub(Field::one(), rest));
    return x;
  }

  class iterator {
   public:
    using value_type = AlgebraElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const NormalizedUnitEnumerator* e, std::uint64_t pos) : e_(e), pos_(pos) {
      if (pos_ < e_->size()) {
        digits_ = e_->digits_at(pos_);
        cur_ = e_->at(pos_);
      }
    }
    const AlgebraElement& operator*() const { return cur_; }
    const AlgebraElement* operator->() const { return &cur_; }
    std::uint64_t position() const { return pos_; }
    iterator& operator++() {
      ++pos_;
      if (pos_ >= e_->size()) return *this;
      // Odometer step on the last digit, carrying leftwards.
      const Field& k = e_->algebra()->field();
      const std::uint32_t q = k.size();
      FieldElement c0 = cur_.coeff(0);
      for (std::size_t i = digits_.size(); i-- > 1;) {
        const FieldElement old{digits_[i]};
        digits_[i] = digits_[i] + 1 == q ? 0 : digits_[i] + 1;
        const FieldElement now{digits_[i]};
        cur_.set_coeff(static_cast<Index>(i), now);
        c0 = k.add(c0, k.sub(old, now));
        if (digits_[i] != 0) break;
      }
      cur_.set_coeff(0, c0);
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    const NormalizedUnitEnumerator* e_ = nullptr;
    std::uint64_t pos_ = 0;
    std::vector<std::uint32_t> digits_;
    AlgebraElement cur_;
  };

  struct Range {
    const NormalizedUnitEnumerator* e;
    std::uint64_t first, last;
    iterator begin() const { return iterator(e, first); }
    iterator end() const { return iterator(e, last); }
  };

  Range range(std::uint64_t first, std::uint64_t last) const { return {this, first, std::min(last, total_)}; }
  Range all() const { return range(0, total_); }
  Range worker_range(unsigned w, unsigned workers) const {
    auto [lo, hi] = slice(w, workers);
    return range(lo, hi);
  }
  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, total_); }

 private:
  AlgebraPtr alg_;
  std::uint64_t total_ = 0;
};

inline NormalizedUnitEnumerator enumerate_normalized_units(const AlgebraPtr& alg, std::uint64_t budget = kDefaultBudget) {
  return NormalizedUnitEnumerator(alg, budget);
}

/// Uniformly random normalized unit.
template <typename Rng>
AlgebraElement random_normalized_unit(const AlgebraPtr& alg, Rng& rng) {
  const Field& k = alg->field();
  std::uniform_int_distribution<std::uint32_t> pick(0, k.size() - 1);
  AlgebraElement x(alg);
  FieldElement rest = Field::zero();
  for (Index a = 1; a < alg->dimension(); ++a) {
    const FieldElement c{pick(rng)};
    x.set_coeff(a, c);
    rest = k.add(rest, c);
  }
  x.set_coeff(0, k.sub(Field::one(), rest));
  return x;
}

namespace detail {

// x·x* == 1 without materializing algebra elements.
class UnitaryKernel {
 public:
  explicit UnitaryKernel(const GroupAlgebra& alg) : alg_(alg), n_(alg.dimension()) { acc_.resize(n_); }

  bool is_unitary(const AlgebraElement& x) {
    const Field& k = alg_.field();
    if (alg_.is_gf2()) {
      supp_.clear();
      for (Index a = 0; a < n_; ++a)
        if (x.coeff(a).rep) supp_.push_back(a);
      std::fill(acc_.begin(), acc_.end(), 0u);
      // Diagonal terms land on the identity; off-diagonal pairs (g,h),(h,g)
      // land on g h^{-1} and its inverse.
      acc_[0] = static_cast<std::uint32_t>(supp_.size() & 1);
      for (std::size_t i = 0; i < supp_.size(); ++i)
        for (std::size_t j = i + 1; j < supp_.size(); ++j) {
          const Index t = alg_.div(supp_[i], supp_[j]);
          acc_[t] ^= 1;
          acc_[alg_.group().inverse(t)] ^= 1;
        }
      if (acc_[0] != 1) return false;
      for (std::size_t a = 1; a < n_; ++a)
        if (acc_[a]) return false;
      return true;
    }
    std::fill(acc_.begin(), acc_.end(), 0u);
    for (Index a = 0; a < n_; ++a) {
      const FieldElement xa = x.coeff(a);
      if (!xa.rep) continue;
      for (Index b = 0; b < n_; ++b) {
        const FieldElement xb = x.coeff(b);
        if (!xb.rep) continue;
        const Index t = alg_.div(a, b);
        acc_[t] = k.add(FieldElement{acc_[t]}, k.mul(xa, xb)).rep;
      }
    }
    if (acc_[0] != 1) return false;
    for (std::size_t a = 1; a < n_; ++a)
      if (acc_[a]) return false;
    return true;
  }

 private:
  const GroupAlgebra& alg_;
  std::size_t n_;
  std::vector<std::uint32_t> acc_;
  std::vector<Index> supp_;
};

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

struct BruteforceOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::size_t max_witnesses = 8;
};

struct BruteforceResult {
  std::uint64_t unit_count = 0;     // enumerated candidates passing is_unit
  std::uint64_t unitary_count = 0;  // of those, x·x* = 1
  std::vector<AlgebraElement> witnesses;
  std::vector<AlgebraElement> unitary;  // filled only when collect = true
};

/// Counts V(KG) and V_*(KG) by filtering every normalized unit. Workers get
/// contiguous index ranges; witnesses are merged in worker order so the
/// result does not depend on the worker count.
inline BruteforceResult bruteforce_count(const AlgebraPtr& alg, const BruteforceOptions& opt = {}, bool collect = false) {
  require_local(*alg);
  const NormalizedUnitEnumerator e(alg, opt.budget);
  const unsigned workers = std::max(1u, opt.workers);
  std::vector<BruteforceResult> parts(workers);
  auto work = [&](unsigned w) {
    detail::UnitaryKernel kernel(*alg);
    auto& part = parts[w];
    for (auto it = e.worker_range(w, workers).begin(), end = e.worker_range(w, workers).end(); it != end; ++it) {
      const AlgebraElement& x = *it;
      if (augmentation(x).rep == 0) continue;
      ++part.unit_count;
      if (!kernel.is_unitary(x)) continue;
      ++part.unitary_count;
      if (collect) part.unitary.push_back(x);
      if (part.witnesses.size() < opt.max_witnesses && !(x == AlgebraElement::one(alg))) part.witnesses.push_back(x);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  BruteforceResult total;
  for (auto& part : parts) {
    total.unit_count += part.unit_count;
    total.unitary_count += part.unitary_count;
    for (auto& x : part.witnesses)
      if (total.witnesses.size() < opt.max_witnesses) total.witnesses.push_back(std::move(x));
    if (collect) std::move(part.unitary.begin(), part.unitary.end(), std::back_inserter(total.unitary));
  }
  return total;
}

inline UnitSetReport bruteforce_unitary(const AlgebraPtr& alg, const BruteforceOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = bruteforce_count(alg, opt);
  UnitSetReport rep;
  rep.descriptor = to_string(alg->group().descriptor());
  rep.field = alg->field().name();
  rep.method = Method::bruteforce;
  rep.order = Order::from_count(r.unitary_count, alg->field().size());
  rep.v_order = Order::from_count(r.unit_count, alg->field().size());
  for (const auto& w : r.witnesses) rep.witness_samples.push_back(format_element(w));
  rep.elapsed_s = detail::seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Finite subgroups of the unit group

/// A subgroup of V(KG) stored as its full element list, grown one generator
/// at a time by Dimino's coset method.
class SubgroupSet {
 public:
  explicit SubgroupSet(AlgebraPtr alg, std::uint64_t budget = kDefaultBudget)
      : alg_(std::move(alg)), budget_(std::min<std::uint64_t>(budget, kStoredCoefficientCap / alg_->dimension())) {
    insert(AlgebraElement::one(alg_));
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<AlgebraElement>& elements() const { return elements_; }
  const std::vector<AlgebraElement>& generators() const { return generators_; }
  bool contains(const AlgebraElement& x) const { return index_.count(x) != 0; }

  /// Adds s and re-closes; returns false when s was already a member.
  bool add_generator(const AlgebraElement& s) {
    if (contains(s)) return false;
    generators_.push_back(s);
    const std::vector<AlgebraElement> base = elements_;  // the old subgroup H
    std::vector<AlgebraElement> reps{AlgebraElement::one(alg_)};
    // The set is a union of right cosets H·r; it is closed once r·t lies in
    // it for every coset representative r and generator t.
    for (std::size_t pos = 0; pos < reps.size(); ++pos) {
      for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
        AlgebraElement e = reps[pos] * generators_[gi];
        if (contains(e)) continue;
        if (elements_.size() + base.size() > budget_)
          throw BudgetExceeded("subgroup closure exceeds " + std::to_string(budget_) + " stored elements");
        for (const auto& h : base) insert(h * e);
        reps.push_back(std::move(e));
      }
    }
    return true;
  }

 private:
  void insert(AlgebraElement x) {
    index_.emplace(x, elements_.size());
    elements_.push_back(std::move(x));
  }

  AlgebraPtr alg_;
  std::uint64_t budget_;
  std::vector<AlgebraElement> elements_;
  std::vector<AlgebraElement> generators_;
  std::unordered_map<AlgebraElement, std::size_t> index_;
};

struct SymmetricSubgroup {
  SubgroupSet elements;
  std::vector<std::string> generators_used;  // provenance, one line per generator family
};

struct ClosureOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::size_t random_probes = 64;
};

/// Least-index involution of G that does not commute with b.
inline std::optional<Index> noncommuting_involution(const Group& g, Index b) {
  for (Index w = 1; w < g.order(); ++w)
    if (g.element_order(w) == 2 && !g.commute(w, b)) return w;
  return std::nullopt;
}

/// S_K(G) as the product closure of φ-images of
///   1 + α(b + w_b)    b in L_G, w_b an involution not commuting with b,
///   1 + α(g + h)      all unordered pairs g != h,
///   1 + α g(1 + c)    c generating G' when |G'| = 2,
/// for α over a K-basis, followed by φ-images of seeded random normalized
/// units (any of which that falls outside is added as a generator).
inline SymmetricSubgroup symmetric_subgroup_closure(const AlgebraPtr& alg, const ClosureOptions& opt = {}) {
  require_local(*alg);
  const Group& g = alg->group();
  const Field& k = alg->field();
  const auto basis = k.basis();
  const auto one = AlgebraElement::one(alg);
  SymmetricSubgroup out{SubgroupSet(alg, opt.budget), {}};
  auto elem = [&](Index a, FieldElement c) { return AlgebraElement::basis(alg, a, c); };

  const auto derived = commutator_subgroup(g);
  std::size_t witness_added = 0, witness_tried = 0;
  if (derived.size() == 2) {
    const Family fam = g.descriptor().family;
    for (Index b : order4_transversal(g)) {
      const auto w = noncommuting_involution(g, b);
      if (!w) {
        if (fam == Family::extraspecial_q8_power && g.order() >= 32)
          throw AlgebraError("no involution fails to commute with " + g.name(b));
        continue;
      }
      for (auto alpha : basis) {
        ++witness_tried;
        witness_added += out.elements.add_generator(phi(one + elem(b, alpha) + elem(*w, alpha)));
      }
    }
  }
  std::size_t pair_tried = 0, pair_added = 0;
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = static_cast<Index>(a + 1); b < g.order(); ++b)
      for (auto alpha : basis) {
        ++pair_tried;
        pair_added += out.elements.add_generator(phi(one + elem(a, alpha) + elem(b, alpha)));
      }
  std::size_t derived_tried = 0, derived_added = 0;
  if (derived.size() == 2) {
    const Index c = derived.members[1];
    for (Index a = 0; a < g.order(); ++a)
      for (auto alpha : basis) {
        ++derived_tried;
        derived_added += out.elements.add_generator(phi(one + elem(a, alpha) + elem(g.mul(a, c), alpha)));
      }
  }
  std::mt19937_64 rng(opt.seed);
  std::size_t random_added = 0;
  for (std::size_t i = 0; i < opt.random_probes; ++i)
    random_added += out.elements.add_generator(phi(random_normalized_unit(alg, rng)));

  auto line = [](const char* what, std::size_t tried, std::size_t added) {
    return std::string(what) + ": " + std::to_string(tried) + " tried, " + std::to_string(added) + " added";
  };
  out.generators_used = {line("witness 1+a(b+w_b)", witness_tried, witness_added),
                         line("pairs 1+a(g+h)", pair_tried, pair_added),
                         line("derived 1+ag(1+c)", derived_tried, derived_added),
                         line("random probes", opt.random_probes, random_added)};
  return out;
}

/// |V_*(KG)| = |V(KG)| / |S_K(G)|.
inline UnitSetReport unitary_order_via_quotient(const AlgebraPtr& alg, const ClosureOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto sk = symmetric_subgroup_closure(alg, opt);
  const std::uint64_t q = alg->field().size();
  const Order v(q, alg->dimension() - 1);
  const Order s = Order::from_count(sk.elements.size(), q);
  UnitSetReport rep;
  rep.descriptor = to_string(alg->group().descriptor());
  rep.field = alg->field().name();
  rep.method = Method::closure_quotient;
  rep.order = v / s;
  rep.v_order = v;
  rep.sk_order = s;
  for (std::size_t i = 1; i < sk.elements.size() && rep.witness_samples.size() < 8; ++i)
    rep.witness_samples.push_back(format_element(sk.elements.elements()[i]));
  rep.elapsed_s = detail::seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// G = A ⋊ <b> with b inverting A

inline const SemidirectLayout& require_semidirect(const Group& g, unsigned b_order) {
  const auto& layout = g.semidirect();
  if (!layout) throw GroupError("group was not built as an inverting semidirect product");
  if (layout->b_order != b_order)
    throw GroupError("expected b of order " + std::to_string(b_order) + ", got " + std::to_string(layout->b_order));
  return *layout;
}

/// R = {1 + (1 + b^2) z b : z in KA}, generated by 1 + λ u (1 + b^2) b for u
/// in a transversal of <b^2> in A and λ over a K-basis.
inline SubgroupSet r_subgroup(const AlgebraPtr& alg, std::uint64_t budget = kDefaultBudget) {
  const Group& g = alg->group();
  const auto& layout = require_semidirect(g, 4);
  const auto one = AlgebraElement::one(alg);
  const Index b = layout.b, b2 = layout.b_square;
  const AlgebraElement tail = (one + AlgebraElement::basis(alg, b2)) * AlgebraElement::basis(alg, b);
  SubgroupSet r(alg, budget);
  for (Index u = 0; u < layout.abelian_order; ++u) {
    if (g.mul(u, b2) < u) continue;  // keep the smaller index of {u, u b^2}
    for (auto lambda : alg->field().basis()) r.add_generator(one + AlgebraElement::basis(alg, u, lambda) * tail);
  }
  return r;
}

/// The abelian half A of a semidirect layout, as its own group.
inline Group abelian_part(const Group& g) {
  const auto& layout = g.semidirect();
  if (!layout) throw GroupError("group was not built as an inverting semidirect product");
  const std::size_t na = layout->abelian_order;
  std::vector<Word> words;
  for (Index a = 0; a < na; ++a) words.push_back(g.word(a));
  std::vector<std::string> syms;
  std::vector<Index> gens;
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    if (g.generators()[i] < na) {
      syms.push_back(g.generator_symbols()[i]);
      gens.push_back(g.generators()[i]);
    }
  // Words of A only mention A's generators, which come first.
  GroupDescriptor d = g.descriptor().family == Family::semidirect_inversion
                          ? g.descriptor().factors.at(0)
                          : GroupDescriptor{Family::cyclic, {static_cast<std::uint32_t>(na)}, {}, {}};
  return Group::from_multiplication(
      na, [&](std::size_t x, std::size_t y) { return g.mul(static_cast<Index>(x), static_cast<Index>(y)); },
      std::move(syms), std::move(gens), std::move(words), std::move(d));
}

/// Order of V_*(KG) for b of order 4 from its pieces: |V_*(KA)| by brute
/// force on the smaller algebra KA, |R| by closure, and
/// |V_*(KG)| = |G| · |R| · |V_*(KA)| / |A|.
inline UnitSetReport structural_unitary_order(const AlgebraPtr& alg, const BruteforceOptions& opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const Group& g = alg->group();
  require_semidirect(g, 4);
  auto a_alg = std::make_shared<const GroupAlgebra>(std::make_shared<const Group>(abelian_part(g)), alg->field_ptr());
  const auto va = bruteforce_count(a_alg, opt);
  const auto r = r_subgroup(alg, opt.budget);
  const std::uint64_t q = alg->field().size();
  const Order vka = Order::from_count(va.unitary_count, q);
  const Order ro = Order::from_count(r.size(), q);
  UnitSetReport rep;
  rep.descriptor = to_string(g.descriptor());
  rep.field = alg->field().name();
  rep.method = Method::structural;
  rep.order = Order::from_count(g.order(), q) * ro * vka / Order::from_count(a_alg->dimension(), q);
  rep.r_order = ro;
  rep.abelian_vstar_order = vka;
  for (std::size_t i = 1; i < r.size() && rep.witness_samples.size() < 8; ++i)
    rep.witness_samples.push_back(format_element(r.elements()[i]));
  rep.elapsed_s = detail::seconds_since(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Normality of V_*(KG) in V(KG)

struct NormalityResult {
  bool normal = true;            // v^{-1} u v in V_* for every checked pair
  bool criterion_agrees = true;  // (v^{-1} u v in V_*) <=> φ(v) commutes with u, pointwise
  bool exhaustive = false;
  std::uint64_t pairs_checked = 0;
};

/// Checks all pairs (v, u) in V x V_* when |V|·|V_*| <= budget, otherwise
/// `samples` seeded random pairs. Needs |V| <= budget.
inline NormalityResult normality_check(const AlgebraPtr& alg, std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 1,
                                       std::uint64_t samples = 100000) {
  const NormalizedUnitEnumerator e(alg, budget);
  BruteforceOptions opt;
  opt.budget = budget;
  const auto bf = bruteforce_count(alg, opt, true);
  const auto& vstar = bf.unitary;
  NormalityResult res;
  auto check = [&](const AlgebraElement& v, const AlgebraElement& vinv, const AlgebraElement& phv,
                   const AlgebraElement& u) {
    const bool conj_unitary = is_unitary(vinv * u * v);
    const bool commutes = phv * u == u * phv;
    res.normal = res.normal && conj_unitary;
    res.criterion_agrees = res.criterion_agrees && (conj_unitary == commutes);
    ++res.pairs_checked;
  };
  const bool exhaustive = static_cast<long double>(e.size()) * static_cast<long double>(vstar.size()) <= budget;
  res.exhaustive = exhaustive;
  if (exhaustive) {
    for (const auto& v : e) {
      const auto vinv = alg_inverse(v);
      const auto phv = phi(v);
      for (const auto& u : vstar) check(v, vinv, phv, u);
    }
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vstar.size() - 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto v = random_normalized_unit(alg, rng);
    check(v, alg_inverse(v), phi(v), vstar[pick(rng)]);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Odd characteristic: the Cayley map SK(I) -> V_*(KG), checked exhaustively

struct CayleyCheck {
  std::uint64_t skew_count = 0;
  std::uint64_t unitary_count = 0;  // by brute force
  bool all_unitary = true;          // every image is a normalized unitary unit
  bool injective = true;
  bool onto = true;                 // image equals the brute-force V_*
  bool inverse_recovers = true;     // (1-u)(1+u)^{-1} gives back k
};

inline CayleyCheck cayley_bijection_check(const AlgebraPtr& alg, std::uint64_t budget = kDefaultBudget) {
  CayleyCheck res;
  const auto skew = enumerate_skew_elements(alg, budget);
  res.skew_count = skew.size();
  std::unordered_map<AlgebraElement, std::size_t> image;
  for (std::size_t i = 0; i < skew.size(); ++i) {
    const auto u = cayley_unit(skew[i]);
    if (!is_normalized_unit(u) || !is_unitary(u)) res.all_unitary = false;
    if (!image.emplace(u, i).second) res.injective = false;
    if (!(cayley_inverse(u) == skew[i])) res.inverse_recovers = false;
  }
  BruteforceOptions opt;
  opt.budget = budget;
  const auto bf = bruteforce_count(alg, opt, true);
  res.unitary_count = bf.unitary_count;
  if (bf.unitary.size() != image.size()) res.onto = false;
  for (const auto& u : bf.unitary)
    if (!image.count(u)) res.onto = false;
  return res;
}

}  // namespace vstar
