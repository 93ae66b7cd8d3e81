#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "vstar/descriptor.hpp"
#include "vstar/group.hpp"

using namespace vstar;

namespace {

std::size_t count_of_order(const Group& g, unsigned k) {
  std::size_t n = 0;
  for (Index x = 0; x < g.order(); ++x) n += g.element_order(x) == k;
  return n;
}

bool is_extraspecial(const Group& g) {
  const auto z = center(g);
  return z.size() == group_prime(g) && commutator_subgroup(g) == z && frattini_subgroup(g) == z;
}

}  // namespace

TEST(Group, AxiomsHoldForEveryConstructor) {
  for (const char* d : {"C(1)", "C(8)", "C(9)", "A(2,4)", "A(2,2,2)", "A(3,9)", "D(4)", "D(8)", "D(16)", "D(64)", "Q(8)",
                        "Q(16)", "Q(32)", "SDI(A(2,4); b=2)", "SDI(A(2,4); b=4, sq=a2^2)", "SDI(A(2,2); b=4, sq=a1)", "ES(1)",
                        "ES(2)", "ES(3)", "ESC4(1)", "ESC4(2)", "HEIS(3)", "HEIS(5)", "Y(D(8), Q(8))", "Y(D(8), C(4))"}) {
    const Group g = build_group(d);
    EXPECT_EQ(g.order(), descriptor_order(parse_descriptor(d))) << d;
    EXPECT_TRUE(verify_group_axioms(g)) << d;
  }
}

TEST(Group, DihedralIsomorphicToMatrixModel) {
  for (int n : {2, 4, 8, 16}) {
    const Group g = dihedral_group(2 * n);
    EXPECT_TRUE(oracle::isomorphic_via_words(g, oracle::dihedral_images(n), n)) << "D(" << 2 * n << ")";
  }
}

TEST(Group, QuaternionIsomorphicToMatrixModel) {
  for (int n : {4, 8, 16}) {
    const Group g = quaternion_group(2 * n);
    EXPECT_TRUE(oracle::isomorphic_via_words(g, oracle::quaternion_images(n), n)) << "Q(" << 2 * n << ")";
  }
}

TEST(Group, CyclicIsomorphicToMatrixModel) {
  for (int n : {2, 3, 8, 27}) {
    const Group g = cyclic_group(n);
    EXPECT_TRUE(oracle::isomorphic_via_words(g, {oracle::Monomial{{0, 1}, {1, 0}}}, n));
  }
}

TEST(Group, ElementOrderCounts) {
  const Group q8 = quaternion_group(8);
  EXPECT_EQ(count_of_order(q8, 4), 6u);
  EXPECT_EQ(count_of_order(q8, 2), 1u);
  const Group d8 = dihedral_group(8);
  EXPECT_EQ(count_of_order(d8, 2), 5u);
  // Plus type 2^{1+4}: 12 elements of order 4; minus type: 20.
  EXPECT_EQ(count_of_order(build_group("ES(2)"), 4), 12u);
  EXPECT_EQ(count_of_order(build_group("Y(D(8), D(8))"), 4), 12u);
  EXPECT_EQ(count_of_order(build_group("Y(D(8), Q(8))"), 4), 20u);
  const Group h = heisenberg_group(3);
  EXPECT_EQ(count_of_order(h, 3), 26u);
}

TEST(Group, ExtraspecialStructure) {
  for (unsigned n = 1; n <= 3; ++n) EXPECT_TRUE(is_extraspecial(extraspecial_q8_power(n))) << n;
  EXPECT_TRUE(is_extraspecial(heisenberg_group(3)));
  EXPECT_TRUE(is_extraspecial(build_group("Y(D(8), Q(8))")));
  EXPECT_FALSE(is_extraspecial(extraspecial_q8_power_y_c4(1)));
  EXPECT_EQ(center(extraspecial_q8_power_y_c4(2)).size(), 4u);
  EXPECT_FALSE(is_extraspecial(dihedral_group(16)));
}

TEST(Group, Order4TransversalSizes) {
  EXPECT_EQ(order4_transversal(extraspecial_q8_power(1)).size(), 3u);
  EXPECT_EQ(order4_transversal(extraspecial_q8_power(2)).size(), 6u);
  EXPECT_EQ(order4_transversal(extraspecial_q8_power(3)).size(), 36u);
  EXPECT_EQ(order4_transversal(extraspecial_q8_power_y_c4(1)).size(), 4u);
  EXPECT_EQ(order4_transversal(extraspecial_q8_power_y_c4(2)).size(), 16u);
  EXPECT_THROW(order4_transversal(dihedral_group(16)), GroupError);
}

TEST(Group, Order4TransversalSetEquations) {
  for (const char* d : {"ES(1)", "ES(2)", "ES(3)", "ESC4(1)", "ESC4(2)", "Y(D(8), Q(8))"}) {
    const Group g = build_group(d);
    const Index c = commutator_subgroup(g).members.at(1);
    const auto l = order4_transversal(g);
    std::set<Index> lset(l.begin(), l.end()), lc, order4;
    for (Index x : l) lc.insert(g.mul(x, c));
    for (Index x = 0; x < g.order(); ++x)
      if (g.element_order(x) == 4) order4.insert(x);
    std::set<Index> both = lset;
    both.insert(lc.begin(), lc.end());
    EXPECT_EQ(both, order4) << d;  // L ∪ Lc = order-4 elements
    for (Index x : l) EXPECT_FALSE(lc.count(x)) << d;  // L ∩ Lc = ∅
    for (Index x : l) EXPECT_LT(x, g.mul(x, c)) << d;  // least-index representative
  }
}

// Every element outside the centre of Q8^{Yn} is, up to c, a product of
// non-central elements from s distinct factors; order 4 exactly when s is odd.
TEST(Group, OddLengthFactoringOfOrder4Elements) {
  for (unsigned n = 1; n <= 3; ++n) {
    const Group g = extraspecial_q8_power(n);
    const auto z = center(g);
    std::vector<std::vector<Index>> noncentral(n);
    for (unsigned i = 0; i < n; ++i) {
      const auto h = subgroup_closure(g, {g.generators().at(2 * i), g.generators().at(2 * i + 1)});
      ASSERT_EQ(h.size(), 8u);
      for (Index x : h.members)
        if (!z.contains(x)) noncentral[i].push_back(x);
    }
    std::map<Index, std::set<unsigned>> lengths;
    std::function<void(unsigned, Index, unsigned)> walk = [&](unsigned i, Index acc, unsigned s) {
      if (i == n) {
        lengths[acc].insert(s);
        return;
      }
      walk(i + 1, acc, s);
      for (Index x : noncentral[i]) walk(i + 1, g.mul(acc, x), s + 1);
    };
    walk(0, g.identity(), 0);
    for (Index x = 0; x < g.order(); ++x) {
      if (z.contains(x)) continue;
      ASSERT_TRUE(lengths.count(x)) << "n=" << n << " " << g.name(x);
      for (unsigned s : lengths[x]) EXPECT_EQ(s % 2 == 1, g.element_order(x) == 4) << "n=" << n << " " << g.name(x);
    }
  }
}

TEST(Group, InvertingElementSquareIsForced) {
  for (const char* d : {"D(16)", "Q(16)", "SDI(A(2,4); b=2)", "SDI(A(2,4); b=4, sq=a2^2)", "SDI(A(4,4); b=4, sq=a1^2)"}) {
    const Group g = build_group(d);
    const auto& sd = g.semidirect();
    ASSERT_TRUE(sd.has_value()) << d;
    const Index b2 = g.mul(sd->b, sd->b);
    for (Index a = 0; a < sd->abelian_order; ++a) {
      const Index ab = g.mul(a, sd->b);
      EXPECT_EQ(g.mul(ab, ab), b2) << d;
      EXPECT_EQ(g.mul(g.mul(g.inverse(sd->b), a), sd->b), g.inverse(a)) << d;
    }
    EXPECT_EQ(g.element_order(sd->b), sd->b_order);
  }
}

TEST(Group, AbelianStats) {
  auto s = abelian_stats(cyclic_group(8));
  EXPECT_EQ(s.size_A2, 2u);
  EXPECT_EQ(s.size_Asq2, 2u);
  s = abelian_stats(abelian_group({2, 4}));
  EXPECT_EQ(s.size_A2, 4u);
  EXPECT_EQ(s.size_Asq2, 2u);
  s = abelian_stats(abelian_group({2, 2, 2}));
  EXPECT_EQ(s.size_A2, 8u);
  EXPECT_EQ(s.size_Asq2, 1u);
  s = abelian_stats(abelian_group({4, 8}));
  EXPECT_EQ(s.size_A2, 4u);
  EXPECT_EQ(s.size_Asq2, 4u);
  EXPECT_THROW(abelian_stats(quaternion_group(8)), GroupError);
}

TEST(Group, SubgroupClosure) {
  const Group d8 = dihedral_group(8);
  const auto klein = subgroup_closure(d8, {d8.parse_element("a^2"), d8.parse_element("b")});
  EXPECT_EQ(klein.size(), 4u);
  for (Index x : klein.members) EXPECT_LE(d8.element_order(x), 2u);
  const Group q8 = quaternion_group(8);
  EXPECT_EQ(subgroup_closure(q8, {q8.parse_element("a")}).size(), 4u);
  EXPECT_EQ(subgroup_closure(q8, {}).size(), 1u);
  EXPECT_EQ(subgroup_closure(q8, {q8.parse_element("a"), q8.parse_element("b")}).size(), 8u);
}

TEST(Group, CenterCommutatorFrattini) {
  const Group d16 = dihedral_group(16);
  EXPECT_EQ(center(d16).size(), 2u);
  EXPECT_EQ(commutator_subgroup(d16).size(), 4u);
  EXPECT_EQ(frattini_subgroup(d16).size(), 4u);
  const Group a = abelian_group({2, 4});
  EXPECT_EQ(center(a).size(), 8u);
  EXPECT_EQ(commutator_subgroup(a).size(), 1u);
  EXPECT_EQ(frattini_subgroup(a).size(), 2u);
  EXPECT_TRUE(is_p_group(a));
  EXPECT_FALSE(is_p_group(cyclic_group(6)));
}

TEST(Group, ElementNamesRoundTrip) {
  for (const char* d : {"D(16)", "Q(8)", "ES(2)", "ESC4(1)", "A(2,4)", "HEIS(3)", "SDI(A(2,4); b=4, sq=a2^2)", "Y(D(8), Q(8))"}) {
    const Group g = build_group(d);
    std::set<std::string> seen;
    for (Index x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.parse_element(g.name(x)), x) << d << " " << g.name(x);
      EXPECT_TRUE(seen.insert(g.name(x)).second) << d << " duplicate name " << g.name(x);
    }
  }
  const Group q8 = quaternion_group(8);
  EXPECT_EQ(q8.parse_element("1"), q8.identity());
  EXPECT_EQ(q8.parse_element("a^-1"), q8.inverse(q8.parse_element("a")));
  EXPECT_EQ(q8.parse_element("b*b"), q8.parse_element("a^2"));
  EXPECT_THROW(q8.parse_element("z"), GroupError);
  EXPECT_THROW(q8.parse_element("a^"), GroupError);
  EXPECT_THROW(q8.parse_element(""), GroupError);
}

TEST(Group, ConstructorErrors) {
  EXPECT_THROW(dihedral_group(12), GroupError);
  EXPECT_THROW(quaternion_group(4), GroupError);
  EXPECT_THROW(semidirect_inversion(quaternion_group(8), 2, 0), GroupError);
  EXPECT_THROW(semidirect_inversion(cyclic_group(4), 4, 0), GroupError);
  EXPECT_THROW(semidirect_inversion(cyclic_group(4), 2, 2), GroupError);
  EXPECT_THROW(heisenberg_group(4), GroupError);
  EXPECT_THROW(central_product(dihedral_group(8), dihedral_group(8), 1, 2), GroupError);
}
