#include <gtest/gtest.h>

#include <sstream>

#include "cookie/family_table.hpp"

using namespace cookie;

namespace {

std::vector<std::size_t> exact_column(const std::vector<FamilyRow>& rows) {
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.exact_cm.value_or(0));
  return out;
}

}  // namespace

// Exact columns below were produced by the subset-sum oracle in oracle.hpp
// and cross-checked with breadth-first search where it fits.
TEST(FamilyTable, Fibonacci) {
  const auto rows = solve_family_table(2, 7, SolverConfig{});
  EXPECT_EQ(exact_column(rows), (std::vector<std::size_t>{1, 2, 2, 3, 3, 4, 4}));
  for (const auto& r : rows) {
    EXPECT_TRUE(r.agree) << r.k;
    EXPECT_EQ(r.formula, fibonacci_cm_formula(r.k));
  }
}

TEST(FamilyTable, Tribonacci) {
  const auto rows = solve_family_table(3, 6, SolverConfig{});
  EXPECT_EQ(exact_column(rows), (std::vector<std::size_t>{1, 2, 3, 3, 4, 5}));
  for (const auto& r : rows) EXPECT_TRUE(r.agree) << r.k;
}

TEST(FamilyTable, TetranacciAndPentanacci) {
  const auto four = solve_family_table(4, 6, SolverConfig{});
  std::vector<std::size_t> formula;
  for (const auto& r : four) formula.push_back(r.formula);
  EXPECT_EQ(formula, (std::vector<std::size_t>{1, 2, 3, 4, 4, 5}));
  EXPECT_EQ(exact_column(four), (std::vector<std::size_t>{1, 2, 3, 4, 4, 5}));
  const auto five = solve_family_table(5, 5, SolverConfig{});
  EXPECT_EQ(exact_column(five), (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(FamilyTable, WithoutOracle) {
  const auto rows = solve_family_table(5, 3, SolverConfig{}, false);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_FALSE(r.exact_cm);
    EXPECT_TRUE(r.agree);
  }
  std::ostringstream out;
  write_family_csv(out, rows, false);
  EXPECT_EQ(out.str(), "k,formula,strategy_len,agree\n1,1,1,true\n2,2,2,true\n3,3,3,true\n");
}

TEST(FamilyTable, CsvWithOracle) {
  std::ostringstream out;
  write_family_csv(out, solve_family_table(2, 3, SolverConfig{}));
  EXPECT_EQ(out.str(), "k,formula,strategy_len,exact_cm,agree\n1,1,1,1,true\n2,2,2,2,true\n3,2,2,2,true\n");
}

TEST(FamilyTable, RowOutsideCapsIsIncomplete) {
  SolverConfig small;
  small.max_value = 5;
  const auto rows = solve_family_table(2, 5, small);
  EXPECT_TRUE(rows[3].complete());  // {1,2,3,5}
  EXPECT_FALSE(rows[4].complete());  // 8 > 5
  EXPECT_FALSE(rows[4].agree);
  EXPECT_FALSE(rows[4].exact_cm);
  std::ostringstream out;
  write_family_csv(out, rows);
  EXPECT_NE(out.str().find("\n5,3,3,,false\n"), std::string::npos);
}
