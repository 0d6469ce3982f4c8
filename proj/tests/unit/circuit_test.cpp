#include "pnc/circuit.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pnc/error.hpp"
#include "support/fixtures.hpp"

namespace pnc {
namespace {

using testing::circuit_of;
using testing::three_link;
using testing::three_loop;

Errc error_of(const std::vector<Label>& labels) {
  try {
    validate_circuit(labels);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::ParseError;
}

TEST(ValidateCircuit, AcceptsTriangle) {
  const Circuit c = validate_circuit({"a", "b", "c", "a"});
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.start(), "a");
}

TEST(ValidateCircuit, AcceptsThreeLink) {
  const Circuit c = three_link();
  EXPECT_EQ(c.size(), 18u);
  EXPECT_EQ(c[2], c[12]);
  EXPECT_EQ(c[6], c[10]);
}

TEST(ValidateCircuit, Errors) {
  EXPECT_EQ(error_of({"a", "b", "c", "d", "a", "b", "a"}), Errc::RepeatedEdge);
  EXPECT_EQ(error_of({"a", "b", "c", "d"}), Errc::NotClosed);
  EXPECT_EQ(error_of({"a", "b", "b", "c", "a"}), Errc::SelfLoop);
  EXPECT_EQ(error_of({"a", "b", "a"}), Errc::TooShort);
  EXPECT_EQ(error_of({}), Errc::TooShort);
  EXPECT_EQ(error_of({"a", "b c", "d", "a"}), Errc::InvalidLabel);
  EXPECT_EQ(error_of({"a", "", "d", "a"}), Errc::InvalidLabel);
  // Reversed orientation of an edge is the same edge.
  EXPECT_EQ(error_of({"a", "b", "c", "b", "a"}), Errc::RepeatedEdge);
}

TEST(Intersections, ThreeLink) {
  const std::vector<Intersection> expected{{2, 12}, {6, 10}};
  EXPECT_EQ(intersections(three_link()), expected);
}

TEST(Intersections, ThreeLoop) {
  const std::vector<Intersection> expected{{1, 5}, {7, 11}, {13, 17}};
  EXPECT_EQ(intersections(three_loop()), expected);
}

TEST(Intersections, SimpleCycleHasNone) {
  EXPECT_TRUE(intersections(circuit_of("a b c a")).empty());
  EXPECT_TRUE(is_simple_cycle(circuit_of("a b c a")));
}

TEST(Intersections, ExcludeEndpoints) {
  // a repeats at position 3 but (0,3) and (3,6) touch the endpoints.
  const Circuit c = circuit_of("a b c a d e a");
  EXPECT_TRUE(intersections(c).empty());
  EXPECT_FALSE(is_simple_cycle(c));
}

TEST(VertexOf, ThreeLink) {
  const Circuit c = three_link();
  EXPECT_EQ(vertex_of(c, {2, 12}), "v2");
  EXPECT_EQ(vertex_of(c, {6, 10}), "v6");
}

TEST(VertexOf, RejectsNonIntersection) {
  const Circuit tri = circuit_of("a b c a");
  EXPECT_THROW(vertex_of(tri, {1, 2}), Error);
  EXPECT_THROW(vertex_of(tri, {0, 3}), Error);
  EXPECT_THROW(vertex_of(three_link(), {2, 10}), Error);
}

TEST(Reductions, InternalAtOuterLoop) {
  EXPECT_EQ(internal_reduction(three_link(), {2, 12}),
            circuit_of("v0 v1 v2 v13 v14 v15 v16 v17 v0"));
}

TEST(Reductions, InternalAtInnerLoop) {
  // Positions 7..10 removed by hand.
  const Circuit d = internal_reduction(three_link(), {6, 10});
  EXPECT_EQ(d, circuit_of("v0 v1 v2 v3 v4 v5 v6 v11 v2 v13 v14 v15 v16 v17 v0"));
  EXPECT_EQ(d.vertices().size(), 15u);
}

TEST(Reductions, InternalAtStart) {
  const Circuit c = circuit_of("a b c a d e a");
  EXPECT_EQ(internal_reduction(c, {0, 3}), circuit_of("a d e a"));
  EXPECT_EQ(internal_reduction(c, {3, 6}), circuit_of("a b c a"));
}

TEST(Reductions, External) {
  const Circuit outer = external_reduction(three_link(), {2, 12});
  EXPECT_EQ(outer, circuit_of("v2 v3 v4 v5 v6 v7 v8 v9 v6 v11 v2"));
  EXPECT_EQ(outer.size(), 10u);
  EXPECT_EQ(external_reduction(three_link(), {6, 10}), circuit_of("v6 v7 v8 v9 v6"));
  EXPECT_EQ(external_reduction(three_loop(), {1, 5}), circuit_of("v1 v2 v3 v4 v1"));
}

TEST(Reductions, RejectNonSubCircuit) {
  const Circuit c = three_link();
  try {
    internal_reduction(c, {0, 18});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubCircuit);
  }
  EXPECT_THROW(external_reduction(c, {2, 10}), Error);
  EXPECT_THROW(external_reduction(c, {12, 2}), Error);
  EXPECT_THROW(internal_reduction(c, {2, 40}), Error);
}

TEST(OneStepReductions, Triangle) {
  EXPECT_TRUE(one_step_reductions(circuit_of("a b c a")).empty());
}

TEST(OneStepReductions, ThreeLinkHasFour) {
  const auto reductions = one_step_reductions(three_link());
  ASSERT_EQ(reductions.size(), 4u);
  for (const Circuit& d : {internal_reduction(three_link(), {2, 12}),
                           external_reduction(three_link(), {2, 12}),
                           internal_reduction(three_link(), {6, 10}),
                           external_reduction(three_link(), {6, 10})}) {
    EXPECT_NE(std::find(reductions.begin(), reductions.end(), d), reductions.end());
  }
}

TEST(OneStepReductions, ThreeLoopMatchesNamedReductions) {
  const auto nodes = testing::three_loop_family();
  const std::vector<Circuit> expected{nodes[1], nodes[2], nodes[3], nodes[8], nodes[9], nodes[10]};
  auto got = one_step_reductions(three_loop());
  auto want = expected;
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(CircuitEqual, ExactSequence) {
  EXPECT_TRUE(circuit_equal(circuit_of("a b c a"), circuit_of("a b c a")));
  EXPECT_FALSE(circuit_equal(circuit_of("a b c a"), circuit_of("b c a b")));
  EXPECT_FALSE(circuit_equal(three_link(), internal_reduction(three_link(), {2, 12})));
}

// Every reduction of a random closed trail is a valid, strictly shorter
// circuit, and intersections are empty exactly when no interior vertex
// repeats.
TEST(ReductionProperties, RandomTrails) {
  std::mt19937_64 rng(20240613);
  for (int round = 0; round < 300; ++round) {
    const Circuit c = testing::random_trail(rng, 4 + round % 4);
    std::set<Label> interior;
    bool repeat = false;
    for (std::size_t pos = 1; pos < c.size(); ++pos) repeat |= !interior.insert(c[pos]).second;
    EXPECT_EQ(intersections(c).empty(), !repeat);

    for (const SubCircuitRef& sub : proper_sub_circuits(c)) {
      for (const Circuit& d : {internal_reduction(c, sub), external_reduction(c, sub)}) {
        const auto v = d.vertices();
        EXPECT_NO_THROW(validate_circuit(std::vector<Label>(v.begin(), v.end())));
        EXPECT_LT(d.size(), c.size());
      }
    }
  }
}

}  // namespace
}  // namespace pnc
