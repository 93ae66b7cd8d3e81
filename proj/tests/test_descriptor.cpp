#include <gtest/gtest.h>

#include "vstar/descriptor.hpp"

using namespace vstar;

TEST(Descriptor, CanonicalRoundTrip) {
  for (const char* d : {"C(8)", "A(2,4)", "D(16)", "Q(8)", "ES(2)", "ESC4(1)", "HEIS(3)", "SDI(A(2,4); b=2)",
                        "SDI(A(2,4); b=4, sq=a2^2)", "Y(D(8), Q(8))", "Y(Y(D(8), D(8)), Q(8))"}) {
    const auto p = parse_descriptor(d);
    EXPECT_EQ(to_string(p), d);
    EXPECT_EQ(parse_descriptor(to_string(p)), p);
  }
}

TEST(Descriptor, Normalizes) {
  EXPECT_EQ(to_string(parse_descriptor(" D( 2^4 ) ")), "D(16)");
  EXPECT_EQ(to_string(parse_descriptor("SDI(A(2,4);b=4,sq=a2*a2)")), "SDI(A(2,4); b=4, sq=a2^2)");
  EXPECT_EQ(to_string(parse_descriptor("SDI(C(8); b=4, sq=a^4)")), "SDI(C(8); b=4, sq=a^4)");
}

TEST(Descriptor, Orders) {
  EXPECT_EQ(descriptor_order(parse_descriptor("ES(3)")), 128u);
  EXPECT_EQ(descriptor_order(parse_descriptor("ESC4(2)")), 64u);
  EXPECT_EQ(descriptor_order(parse_descriptor("SDI(A(2,4); b=2)")), 16u);
  EXPECT_EQ(descriptor_order(parse_descriptor("Y(D(8), Q(8))")), 32u);
  EXPECT_EQ(descriptor_order(parse_descriptor("HEIS(5)")), 125u);
  EXPECT_EQ(descriptor_order(parse_descriptor("ES(4)")), 512u);
}

TEST(Descriptor, ErrorsCarryPosition) {
  struct Bad {
    const char* text;
    std::size_t at;
  };
  for (auto [text, at] : {Bad{"X(3)", 0}, Bad{"D(12)", 2}, Bad{"D(8", 3}, Bad{"A(2,6)", 4}, Bad{"SDI(A(2,4); b=3)", 14},
                          Bad{"C(8) junk", 5}}) {
    try {
      parse_descriptor(text);
      ADD_FAILURE() << text << " parsed";
    } catch (const DescriptorError& e) {
      EXPECT_EQ(e.position(), at) << text << ": " << e.what();
    }
  }
  EXPECT_THROW(parse_descriptor(""), DescriptorError);
  EXPECT_THROW(parse_descriptor("ES(0)"), DescriptorError);
  EXPECT_THROW(parse_descriptor("ES(5)"), DescriptorError);
  EXPECT_THROW(parse_descriptor("Q(4)"), DescriptorError);
  EXPECT_THROW(parse_descriptor("HEIS(4)"), DescriptorError);
  EXPECT_THROW(build_group("SDI(A(2,4); b=4, sq=a2)"), std::invalid_argument);
  EXPECT_THROW(build_group("SDI(A(2,4); b=4)"), std::invalid_argument);
}

TEST(Descriptor, BuildMatchesDescriptor) {
  const auto d = parse_descriptor("SDI(A(2,4); b=4, sq=a2^2)");
  const Group g = build_group(d);
  EXPECT_EQ(g.descriptor(), d);
  ASSERT_TRUE(g.semidirect());
  EXPECT_EQ(g.semidirect()->b_order, 4u);
}
