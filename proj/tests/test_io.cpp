#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cookie/io.hpp"

using namespace cookie;

TEST(ParseCounts, SpacesAndCommas) {
  EXPECT_EQ(parse_counts("1 2,3 ,  4\t5"), (std::vector<count_t>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(parse_counts("").empty());
  EXPECT_EQ(parse_counts("0 7 7"), (std::vector<count_t>{0, 7, 7}));
  EXPECT_EQ(parse_counts("18446744073709551615"), (std::vector<count_t>{18446744073709551615ull}));
}

TEST(ParseCounts, ErrorsCarryLineAndColumn) {
  try {
    parse_counts("1 2 -3", 4);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 5u);
  }
  try {
    parse_counts("12 18446744073709551616");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_counts("1.5"), ParseError);
}

TEST(ReadStates, OneStatePerLineSkippingBlanksAndComments) {
  std::istringstream in("1 2 3\n\n# comment\n5,5,0\n");
  const auto states = read_states(in);
  ASSERT_EQ(states.size(), 2u);
  EXPECT_EQ(states[1], JarState::from_counts({5}));
  std::istringstream bad("1 2\n3 x\n");
  try {
    read_states(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Json, MoveAndSequenceShape) {
  const MoveSequence seq{JarState::from_counts({1, 2, 3}), {{2, {2, 3}}, {1, {1}}}};
  EXPECT_EQ(to_json(seq).dump(),
            R"({"source":[1,2,3],"moves":[{"amount":2,"targets":[2,3]},{"amount":1,"targets":[1]}]})");
}

TEST(Json, TraceHeader) {
  const auto j = to_json(nacci_strategy(2, 3));
  EXPECT_EQ(j.at("strategy"), "nacci");
  EXPECT_EQ(j.at("predicted"), 2);
  EXPECT_EQ(j.at("actual"), 2);
  EXPECT_EQ(sequence_from_json(j).moves.size(), 2u);
  EXPECT_EQ(to_json(binary_decomposition(JarState::from_counts({3}))).at("predicted"), 2);
}

TEST(Json, RejectsMalformedMoves) {
  EXPECT_THROW(move_from_json(json{{"amount", 1}}), Error);
  EXPECT_THROW(move_from_json(json{{"amount", -1}, {"targets", {1}}}), Error);
  EXPECT_THROW(move_from_json(json{{"amount", 1}, {"targets", 3}}), Error);
  EXPECT_THROW(sequence_from_json(json{{"source", {1}}}), Error);
}

// A solve result re-reads to the same witness and re-verifies.
TEST(Json, SolveResultRoundTripProperty) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<count_t> raw(rng() % 6);
    for (auto& v : raw) v = 1 + rng() % 30;
    const JarState s = JarState::from_counts(raw);
    const SolveResult r = solve(s);
    const json back = json::parse(to_json(r).dump(2));
    EXPECT_EQ(back.at("cm").get<std::size_t>(), r.cm);
    EXPECT_EQ(source_from_json(back), s);
    const MoveSequence seq = sequence_from_json(back);
    EXPECT_EQ(seq, r.optimal);
    EXPECT_TRUE(verify_sequence(s, seq).empties);
  }
}

TEST(Json, BareMoveArrayHasNoSource) {
  const json doc = json::parse(R"([{"amount": 3, "targets": [3, 3]}])");
  EXPECT_FALSE(source_from_json(doc));
  const auto seq = sequence_from_json(doc);
  ASSERT_EQ(seq.moves.size(), 1u);
  EXPECT_EQ(seq.moves[0].targets, (std::vector<count_t>{3}));
}
