#include <doctest.h>
#include <random>

#include "test_support.hpp"
#include "weyl/catalog.hpp"
#include "weyl/render.hpp"

using namespace weyl;
using namespace weyl::test;

namespace {

BranchingResult run(const std::string& key, const Weight& w) {
  const ProjectionMap* map = Catalog::instance().find(key);
  REQUIRE(map != nullptr);
  return branch(*map, w);
}

}  // namespace

// Rank 2 tables at a=2, b=3.
TEST_CASE("B2 branchings") {
  check_branch(run("B2>A1xU1", W({2, 0})),
               {{"(4)(0)", 1}, {"(0)(4)", 1}, {"(0)(-4)", 1}});
  check_branch(run("B2>A1xU1", W({0, 3})), {{"(3)(3)", 1}, {"(3)(-3)", 1}});
  check_branch(run("B2>A1xU1", W({2, 3})),
               {{"(7)(3)", 1}, {"(7)(-3)", 1}, {"(3)(7)", 1}, {"(3)(-7)", 1}});

  check_branch(run("B2>A1", W({2, 0})), {{"(8)", 1}, {"(4)", 1}});
  check_branch(run("B2>A1", W({0, 3})), {{"(9)", 1}, {"(3)", 1}});
  check_branch(run("B2>A1", W({2, 3})),
               {{"(17)", 1}, {"(13)", 1}, {"(11)", 1}, {"(1)", 1}});
  // the |2a-b| term from the other side, 2a < b
  check_branch(run("B2>A1", W({2, 5})),
               {{"(23)", 1}, {"(19)", 1}, {"(13)", 1}, {"(1)", 1}});
  // the doubled zero orbit of (a,2a)
  check_branch(run("B2>A1", W({2, 4})),
               {{"(20)", 1}, {"(16)", 1}, {"(12)", 1}, {"(0)", 2}});

  check_branch(run("B2>2A1", W({2, 0})), {{"(2)(2)", 1}});
  check_branch(run("B2>2A1", W({0, 3})), {{"(3)(0)", 1}, {"(0)(3)", 1}});
  check_branch(run("B2>2A1", W({2, 3})), {{"(5)(2)", 1}, {"(2)(5)", 1}});
}

// Rank 3 tables at a=2, b=3, c=5.
TEST_CASE("B3 branchings") {
  check_branch(run("B3>C2xU1", W({2, 0, 0})),
               {{"(0,2)(0)", 1}, {"(0,0)(4)", 1}, {"(0,0)(-4)", 1}});
  check_branch(run("B3>C2xU1", W({0, 3, 0})),
               {{"(6,0)(0)", 1}, {"(0,3)(6)", 1}, {"(0,3)(-6)", 1}});
  check_branch(run("B3>C2xU1", W({0, 0, 5})), {{"(5,0)(5)", 1}, {"(5,0)(-5)", 1}});
  check_branch(run("B3>C2xU1", W({2, 3, 5})),
               {{"(11,2)(5)", 1},
                {"(11,2)(-5)", 1},
                {"(5,5)(11)", 1},
                {"(5,5)(-11)", 1},
                {"(5,3)(15)", 1},
                {"(5,3)(-15)", 1}});

  check_branch(run("B3>A3", W({2, 0, 0})), {{"(0,2,0)", 1}});
  check_branch(run("B3>A3", W({0, 3, 0})), {{"(3,0,3)", 1}});
  check_branch(run("B3>A3", W({0, 0, 5})), {{"(0,0,5)", 1}, {"(5,0,0)", 1}});
  check_branch(run("B3>A3", W({2, 3, 5})), {{"(3,2,8)", 1}, {"(8,2,3)", 1}});

  check_branch(run("B3>G2", W({2, 0, 0})), {{"(0,2)", 1}});
  check_branch(run("B3>G2", W({0, 3, 0})), {{"(3,0)", 1}, {"(0,3)", 1}});
  check_branch(run("B3>G2", W({0, 0, 5})), {{"(0,5)", 1}, {"(0,0)", 2}});

  check_branch(run("B3>3A1", W({2, 0, 0})), {{"(2)(2)(0)", 1}, {"(0)(0)(4)", 1}});
  check_branch(run("B3>3A1", W({0, 3, 0})),
               {{"(3)(3)(6)", 1}, {"(6)(0)(0)", 1}, {"(0)(6)(0)", 1}});
  check_branch(run("B3>3A1", W({0, 0, 5})), {{"(0)(5)(5)", 1}, {"(5)(0)(5)", 1}});
  check_branch(run("B3>3A1", W({2, 3, 5})),
               {{"(5)(10)(11)", 1},
                {"(3)(8)(15)", 1},
                {"(2)(13)(5)", 1},
                {"(10)(5)(11)", 1},
                {"(8)(3)(15)", 1},
                {"(13)(2)(5)", 1}});
}

TEST_CASE("B3 to G2 case splits resolve on both sides") {
  // (a,a,a)
  check_branch(run("B3>G2", W({2, 2, 2})),
               {{"(2,4)", 1}, {"(4,0)", 2}, {"(2,2)", 1}, {"(2,0)", 2}});
  // (a,b,a): a < b and a > b
  check_branch(run("B3>G2", W({2, 3, 2})),
               {{"(3,4)", 1}, {"(5,0)", 2}, {"(2,3)", 1}, {"(2,1)", 1}});
  check_branch(run("B3>G2", W({3, 2, 3})),
               {{"(2,6)", 1}, {"(5,0)", 2}, {"(3,2)", 1}, {"(2,1)", 1}});
  // (a,a,c): a < c and a > c
  check_branch(run("B3>G2", W({2, 2, 5})),
               {{"(2,7)", 1}, {"(2,5)", 1}, {"(2,0)", 2}, {"(4,3)", 1}});
  check_branch(run("B3>G2", W({5, 5, 2})),
               {{"(5,7)", 1}, {"(5,2)", 1}, {"(5,0)", 2}, {"(7,3)", 1}});
  // (a,b,c) generic: all three splits on the a < side, then on the a > side
  check_branch(run("B3>G2", W({2, 3, 5})),
               {{"(3,7)", 1}, {"(5,3)", 1}, {"(2,1)", 1}, {"(2,6)", 1}});
  check_branch(run("B3>G2", W({7, 3, 2})),
               {{"(3,9)", 1}, {"(5,5)", 1}, {"(3,4)", 1}, {"(5,2)", 1}});
}

// Rank 4 examples for the principal and double A1 reductions.
TEST_CASE("B4 branchings") {
  check_branch(run("B4>A1", W({2, 0, 0, 0})),
               {{"(16)", 1}, {"(12)", 1}, {"(8)", 1}, {"(4)", 1}});
  check_branch(run("B4>A1", W({0, 3, 0, 0})),
               {{"(42)", 1},
                {"(36)", 1},
                {"(30)", 2},
                {"(24)", 1},
                {"(18)", 2},
                {"(12)", 2},
                {"(6)", 3}});
  check_branch(run("B4>A1", W({0, 0, 5, 0})),
               {{"(90)", 1},
                {"(80)", 1},
                {"(70)", 1},
                {"(60)", 2},
                {"(50)", 2},
                {"(40)", 1},
                {"(30)", 2},
                {"(20)", 2},
                {"(10)", 2},
                {"(0)", 4}});
  check_branch(run("B4>A1", W({0, 0, 0, 7})),
               {{"(70)", 1}, {"(56)", 1}, {"(42)", 1}, {"(28)", 2}, {"(14)", 2}, {"(0)", 2}});

  check_branch(run("B4>2A1", W({2, 0, 0, 0})),
               {{"(4)(4)", 1}, {"(0)(4)", 1}, {"(4)(0)", 1}});
  check_branch(run("B4>2A1", W({0, 3, 0, 0})),
               {{"(6)(12)", 1},
                {"(12)(6)", 1},
                {"(6)(6)", 1},
                {"(0)(12)", 1},
                {"(12)(0)", 1},
                {"(0)(6)", 2},
                {"(6)(0)", 2}});
  check_branch(run("B4>2A1", W({0, 0, 5, 0})),
               {{"(20)(20)", 1},
                {"(0)(30)", 1},
                {"(30)(0)", 1},
                {"(10)(20)", 1},
                {"(20)(10)", 1},
                {"(0)(20)", 2},
                {"(20)(0)", 2},
                {"(0)(10)", 1},
                {"(10)(0)", 1},
                {"(0)(0)", 4}});
  check_branch(run("B4>2A1", W({0, 0, 0, 7})),
               {{"(7)(21)", 1}, {"(21)(7)", 1}, {"(7)(7)", 2}});
}

TEST_CASE("B7 branchings") {
  check_branch(run("B7>A3", W({2, 0, 0, 0, 0, 0, 0})),
               {{"(2,0,2)", 1}, {"(0,0,0)", 2}});
  check_branch(run("B7>A3", W({0, 3, 0, 0, 0, 0, 0})),
               {{"(0,3,6)", 1}, {"(6,3,0)", 1}, {"(0,6,0)", 2}, {"(3,0,3)", 4}});
  check_branch(run("B7>A3", W({0, 0, 0, 0, 0, 0, 5})),
               {{"(5,5,5)", 2}, {"(0,0,10)", 4}, {"(10,0,0)", 4}, {"(0,5,0)", 8}});

  check_branch(run("B7>C2xA1", W({2, 0, 0, 0, 0, 0, 0})),
               {{"(0,2)(4)", 1}, {"(0,2)(0)", 1}, {"(0,0)(4)", 1}});
  check_branch(run("B7>C2xA1", W({0, 3, 0, 0, 0, 0, 0})),
               {{"(6,0)(12)", 1},
                {"(6,0)(6)", 2},
                {"(6,0)(0)", 3},
                {"(0,6)(6)", 1},
                {"(0,6)(0)", 1},
                {"(0,3)(12)", 1},
                {"(0,3)(6)", 1},
                {"(0,3)(0)", 2},
                {"(0,0)(12)", 2},
                {"(0,0)(6)", 4}});
  check_branch(run("B7>C2xA1", W({0, 0, 0, 0, 0, 0, 5})),
               {{"(15,0)(5)", 1},
                {"(5,5)(15)", 1},
                {"(5,5)(5)", 2},
                {"(5,0)(25)", 1},
                {"(5,0)(15)", 3},
                {"(5,0)(5)", 5}});
}

TEST_CASE("C3 branchings, all four reductions") {
  check_branch(run("C3>A2xU1", W({2, 0, 0})), {{"(2,0)(2)", 1}, {"(0,2)(-2)", 1}});
  check_branch(run("C3>A2xU1", W({0, 3, 0})),
               {{"(3,3)(0)", 1}, {"(0,3)(6)", 1}, {"(3,0)(-6)", 1}});
  check_branch(run("C3>A2xU1", W({0, 0, 5})),
               {{"(0,10)(5)", 1}, {"(10,0)(-5)", 1}, {"(0,0)(15)", 1}, {"(0,0)(-15)", 1}});
  check_branch(run("C3>A2xU1", W({2, 3, 5})),
               {{"(5,13)(7)", 1},
                {"(13,5)(-7)", 1},
                {"(3,15)(3)", 1},
                {"(15,3)(-3)", 1},
                {"(2,3)(23)", 1},
                {"(3,2)(-23)", 1},
                {"(2,13)(13)", 1},
                {"(13,2)(-13)", 1}});

  check_branch(run("C3>C2xA1", W({2, 0, 0})), {{"(2,0)(0)", 1}, {"(0,0)(2)", 1}});
  check_branch(run("C3>C2xA1", W({0, 3, 0})), {{"(0,3)(0)", 1}, {"(3,0)(3)", 1}});
  check_branch(run("C3>C2xA1", W({0, 0, 5})), {{"(0,5)(5)", 1}});
  check_branch(run("C3>C2xA1", W({2, 3, 5})),
               {{"(2,8)(5)", 1}, {"(5,5)(8)", 1}, {"(3,5)(10)", 1}});

  check_branch(run("C3>A1", W({2, 0, 0})), {{"(10)", 1}, {"(6)", 1}, {"(2)", 1}});
  check_branch(run("C3>A1", W({0, 3, 0})),
               {{"(24)", 1}, {"(18)", 1}, {"(12)", 2}, {"(6)", 2}});
  check_branch(run("C3>A1", W({0, 0, 5})),
               {{"(45)", 1}, {"(35)", 1}, {"(15)", 1}, {"(5)", 1}});

  check_branch(run("C3>2A1", W({2, 0, 0})), {{"(2)(4)", 1}, {"(2)(0)", 1}});
  check_branch(run("C3>2A1", W({0, 3, 0})),
               {{"(0)(12)", 1}, {"(6)(6)", 1}, {"(6)(0)", 1}, {"(0)(6)", 2}});
  check_branch(run("C3>2A1", W({0, 0, 5})),
               {{"(5)(20)", 1}, {"(15)(0)", 1}, {"(5)(0)", 1}});
}

TEST_CASE("C4 to 3A1") {
  check_branch(run("C4>3A1", W({2, 0, 0, 0})), {{"(2)(2)(2)", 1}});
  check_branch(run("C4>3A1", W({0, 3, 0, 0})),
               {{"(0)(6)(6)", 1},
                {"(6)(0)(6)", 1},
                {"(6)(6)(0)", 1},
                {"(6)(0)(0)", 2},
                {"(0)(6)(0)", 2},
                {"(0)(0)(6)", 2}});
  check_branch(run("C4>3A1", W({0, 0, 0, 5})),
               {{"(10)(10)(10)", 1},
                {"(0)(0)(20)", 1},
                {"(0)(20)(0)", 1},
                {"(20)(0)(0)", 1},
                {"(0)(0)(0)", 2}});
}

TEST_CASE("C8 branchings") {
  check_branch(run("C8>D4xA1", W({2, 0, 0, 0, 0, 0, 0, 0})),
               {{"(2,0,0,0)(2)", 1}});
  check_branch(run("C8>D4xA1", W({0, 3, 0, 0, 0, 0, 0, 0})),
               {{"(6,0,0,0)(0)", 1},
                {"(0,3,0,0)(6)", 1},
                {"(0,3,0,0)(0)", 2},
                {"(0,0,0,0)(6)", 4}});
  check_branch(run("C8>D4xA1", W({0, 0, 0, 0, 0, 0, 0, 5})),
               {{"(0,0,10,10)(10)", 1},
                {"(0,0,0,20)(0)", 1},
                {"(0,0,20,0)(0)", 1},
                {"(0,10,0,0)(20)", 1},
                {"(0,10,0,0)(0)", 2},
                {"(10,0,0,0)(30)", 1},
                {"(10,0,0,0)(10)", 3},
                {"(0,0,0,0)(40)", 1},
                {"(0,0,0,0)(20)", 4},
                {"(0,0,0,0)(0)", 6}});

  check_branch(run("C8>C2", W({2, 0, 0, 0, 0, 0, 0, 0})),
               {{"(2,2)", 1}, {"(2,0)", 2}});
  check_branch(run("C8>C2", W({0, 3, 0, 0, 0, 0, 0, 0})),
               {{"(12,0)", 1},
                {"(0,9)", 1},
                {"(6,3)", 3},
                {"(6,0)", 6},
                {"(0,6)", 4},
                {"(0,3)", 9},
                {"(0,0)", 4}});
  check_branch(run("C8>C2", W({0, 0, 0, 0, 0, 0, 0, 5})),
               {{"(30,10)", 1},
                {"(40,0)", 2},
                {"(20,10)", 3},
                {"(10,20)", 2},
                {"(30,0)", 4},
                {"(0,30)", 1},
                {"(10,10)", 6},
                {"(20,0)", 6},
                {"(0,20)", 5},
                {"(10,0)", 10},
                {"(0,10)", 9},
                {"(0,0)", 12}});
}

TEST_CASE("D4 branchings") {
  check_branch(run("D4>4A1", W({2, 0, 0, 0})),
               {{"(2)(2)(0)(0)", 1}, {"(0)(0)(2)(2)", 1}});
  check_branch(run("D4>4A1", W({0, 3, 0, 0})),
               {{"(3)(3)(3)(3)", 1},
                {"(6)(0)(0)(0)", 1},
                {"(0)(6)(0)(0)", 1},
                {"(0)(0)(6)(0)", 1},
                {"(0)(0)(0)(6)", 1}});
  check_branch(run("D4>4A1", W({0, 0, 0, 5})),
               {{"(0)(5)(5)(0)", 1}, {"(5)(0)(0)(5)", 1}});

  check_branch(run("D4>A2", W({2, 0, 0, 0})), {{"(2,2)", 1}, {"(0,0)", 2}});
  check_branch(run("D4>A2", W({0, 3, 0, 0})),
               {{"(0,9)", 1}, {"(9,0)", 1}, {"(3,3)", 3}});
  check_branch(run("D4>A2", W({0, 0, 0, 5})), {{"(5,5)", 1}, {"(0,0)", 2}});
}

TEST_CASE("D7 branchings") {
  check_branch(run("D7>C2", W({2, 0, 0, 0, 0, 0, 0})),
               {{"(0,4)", 1}, {"(4,0)", 1}, {"(0,2)", 1}, {"(0,0)", 2}});
  check_branch(run("D7>C2", W({0, 3, 0, 0, 0, 0, 0})),
               {{"(6,6)", 1},
                {"(0,9)", 1},
                {"(6,3)", 2},
                {"(12,0)", 1},
                {"(0,6)", 3},
                {"(6,0)", 5},
                {"(0,3)", 5}});
  check_branch(run("D7>C2", W({0, 0, 0, 0, 0, 0, 5})),
               {{"(15,5)", 1}, {"(5,10)", 1}, {"(15,0)", 2}, {"(5,5)", 3}, {"(5,0)", 4}});

  check_branch(run("D7>C3", W({2, 0, 0, 0, 0, 0, 0})),
               {{"(0,2,0)", 1}, {"(0,0,0)", 2}});
  check_branch(run("D7>C3", W({0, 3, 0, 0, 0, 0, 0})),
               {{"(3,0,3)", 1}, {"(6,0,0)", 2}, {"(0,3,0)", 4}});
  check_branch(run("D7>C3", W({0, 0, 0, 0, 0, 0, 5})),
               {{"(5,5,0)", 1}, {"(0,0,5)", 2}, {"(5,0,0)", 4}});

  check_branch(run("D7>G2", W({2, 0, 0, 0, 0, 0, 0})),
               {{"(2,0)", 1}, {"(0,2)", 1}, {"(0,0)", 2}});
  check_branch(run("D7>G2", W({0, 3, 0, 0, 0, 0, 0})),
               {{"(3,3)", 1}, {"(0,9)", 1}, {"(0,6)", 2}, {"(3,0)", 4}, {"(0,3)", 5}});
  check_branch(run("D7>G2", W({0, 0, 0, 0, 0, 0, 5})),
               {{"(5,5)", 1}, {"(0,10)", 2}, {"(5,0)", 2}, {"(0,5)", 4}, {"(0,0)", 4}});
}

TEST_CASE("D8 branchings") {
  check_branch(run("D8>B4", W({2, 0, 0, 0, 0, 0, 0, 0})), {{"(0,0,0,2)", 1}});
  check_branch(run("D8>B4", W({0, 3, 0, 0, 0, 0, 0, 0})),
               {{"(0,0,3,0)", 1}, {"(0,3,0,0)", 2}, {"(3,0,0,0)", 4}});
  check_branch(run("D8>B4", W({0, 0, 0, 0, 0, 0, 0, 5})),
               {{"(0,0,5,0)", 1},
                {"(0,5,0,0)", 2},
                {"(10,0,0,0)", 1},
                {"(5,0,0,0)", 4},
                {"(0,0,0,0)", 8}});

  check_branch(run("D8>2C2", W({2, 0, 0, 0, 0, 0, 0, 0})), {{"(2,0)(2,0)", 1}});
  check_branch(run("D8>2C2", W({0, 3, 0, 0, 0, 0, 0, 0})),
               {{"(6,0)(0,3)", 1},
                {"(0,3)(6,0)", 1},
                {"(0,3)(0,3)", 2},
                {"(6,0)(0,0)", 2},
                {"(0,0)(6,0)", 2},
                {"(0,3)(0,0)", 4},
                {"(0,0)(0,3)", 4}});
  check_branch(run("D8>2C2", W({0, 0, 0, 0, 0, 0, 0, 5})),
               {{"(5,5)(5,0)", 1}, {"(5,0)(5,5)", 1}, {"(5,0)(5,0)", 4}});

  check_branch(run("D8>C4xA1", W({2, 0, 0, 0, 0, 0, 0, 0})),
               {{"(2,0,0,0)(2)", 1}});
  check_branch(run("D8>C4xA1", W({0, 3, 0, 0, 0, 0, 0, 0})),
               {{"(0,3,0,0)(6)", 1},
                {"(6,0,0,0)(0)", 1},
                {"(0,3,0,0)(0)", 2},
                {"(0,0,0,0)(6)", 4}});
  check_branch(run("D8>C4xA1", W({0, 0, 0, 0, 0, 0, 0, 5})),
               {{"(0,0,5,0)(5)", 1}, {"(5,0,0,0)(15)", 1}, {"(5,0,0,0)(5)", 3}});
}

TEST_CASE("further printed examples across the C and D tables") {
  // C5 > C2xA1
  check_branch(run("C5>C2xA1", W({2, 0, 0, 0, 0})),
               {{"(0,2)(2)", 1}, {"(0,0)(2)", 1}});
  check_branch(run("C5>C2xA1", W({0, 3, 0, 0, 0})),
               {{"(0,6)(0)", 1},
                {"(6,0)(6)", 1},
                {"(0,3)(6)", 1},
                {"(6,0)(0)", 2},
                {"(0,3)(0)", 2},
                {"(0,0)(6)", 2}});
  check_branch(run("C5>C2xA1", W({0, 0, 0, 0, 5})),
               {{"(20,0)(5)", 1},
                {"(0,10)(15)", 1},
                {"(0,10)(5)", 1},
                {"(0,0)(25)", 1},
                {"(0,0)(15)", 1},
                {"(0,0)(5)", 2}});
  // C6 > A3xA1
  check_branch(run("C6>A3xA1", W({2, 0, 0, 0, 0, 0})), {{"(0,2,0)(2)", 1}});
  check_branch(run("C6>A3xA1", W({0, 3, 0, 0, 0, 0})),
               {{"(0,6,0)(0)", 1}, {"(3,0,3)(6)", 1}, {"(3,0,3)(0)", 2}, {"(0,0,0)(6)", 3}});
  check_branch(run("C6>A3xA1", W({0, 0, 0, 0, 0, 5})),
               {{"(10,0,10)(10)", 1},
                {"(0,0,20)(0)", 1},
                {"(20,0,0)(0)", 1},
                {"(0,10,0)(20)", 1},
                {"(0,10,0)(0)", 2},
                {"(0,0,0)(30)", 1},
                {"(0,0,0)(10)", 3}});
  // C6 > C2xA1
  check_branch(run("C6>C2xA1", W({2, 0, 0, 0, 0, 0})),
               {{"(2,0)(4)", 1}, {"(2,0)(0)", 1}});
  check_branch(run("C6>C2xA1", W({0, 3, 0, 0, 0, 0})),
               {{"(6,0)(6)", 1},
                {"(0,3)(12)", 1},
                {"(0,3)(6)", 2},
                {"(6,0)(0)", 1},
                {"(0,3)(0)", 3},
                {"(0,0)(12)", 2},
                {"(0,0)(6)", 4}});
  check_branch(run("C6>C2xA1", W({0, 0, 0, 0, 0, 5})),
               {{"(10,5)(20)", 1},
                {"(0,15)(0)", 1},
                {"(10,5)(0)", 1},
                {"(0,5)(40)", 1},
                {"(0,5)(20)", 2},
                {"(0,5)(0)", 3}});
  // C7 > B3xA1
  check_branch(run("C7>B3xA1", W({2, 0, 0, 0, 0, 0, 0})),
               {{"(2,0,0)(2)", 1}, {"(0,0,0)(2)", 1}});
  check_branch(run("C7>B3xA1", W({0, 3, 0, 0, 0, 0, 0})),
               {{"(6,0,0)(0)", 1},
                {"(0,3,0)(6)", 1},
                {"(0,3,0)(0)", 2},
                {"(3,0,0)(6)", 1},
                {"(3,0,0)(0)", 2},
                {"(0,0,0)(6)", 3}});
  check_branch(run("C7>B3xA1", W({0, 0, 0, 0, 0, 0, 5})),
               {{"(0,0,20)(5)", 1},
                {"(0,10,0)(15)", 1},
                {"(0,10,0)(5)", 1},
                {"(10,0,0)(25)", 1},
                {"(10,0,0)(15)", 1},
                {"(10,0,0)(5)", 2},
                {"(0,0,0)(35)", 1},
                {"(0,0,0)(25)", 1},
                {"(0,0,0)(15)", 3},
                {"(0,0,0)(5)", 3}});
  // D5 > A3x2A1 and D5 > C2
  check_branch(run("D5>A3x2A1", W({2, 0, 0, 0, 0})),
               {{"(0,2,0)(0)(0)", 1}, {"(0,0,0)(2)(2)", 1}});
  check_branch(run("D5>A3x2A1", W({0, 3, 0, 0, 0})),
               {{"(0,3,0)(3)(3)", 1},
                {"(3,0,3)(0)(0)", 1},
                {"(0,0,0)(6)(0)", 1},
                {"(0,0,0)(0)(6)", 1}});
  check_branch(run("D5>A3x2A1", W({0, 0, 0, 0, 5})),
               {{"(0,0,5)(5)(0)", 1}, {"(5,0,0)(0)(5)", 1}});
  check_branch(run("D5>C2", W({2, 0, 0, 0, 0})),
               {{"(4,0)", 1}, {"(0,2)", 1}, {"(0,0)", 2}});
  check_branch(run("D5>C2", W({0, 3, 0, 0, 0})),
               {{"(6,3)", 1}, {"(0,6)", 1}, {"(6,0)", 3}, {"(0,3)", 4}});
  check_branch(run("D5>C2", W({0, 0, 0, 0, 5})), {{"(5,5)", 1}, {"(5,0)", 2}});
  // D6 > 2A3, 3A1, C3xA1
  check_branch(run("D6>2A3", W({2, 0, 0, 0, 0, 0})),
               {{"(0,0,0)(0,2,0)", 1}, {"(0,2,0)(0,0,0)", 1}});
  check_branch(run("D6>2A3", W({0, 3, 0, 0, 0, 0})),
               {{"(0,3,0)(0,3,0)", 1}, {"(0,0,0)(3,0,3)", 1}, {"(3,0,3)(0,0,0)", 1}});
  check_branch(run("D6>2A3", W({0, 0, 0, 0, 0, 5})),
               {{"(0,0,5)(0,0,5)", 1}, {"(5,0,0)(5,0,0)", 1}});
  check_branch(run("D6>3A1", W({2, 0, 0, 0, 0, 0})),
               {{"(4)(2)(2)", 1}, {"(0)(2)(2)", 1}});
  check_branch(run("D6>3A1", W({0, 3, 0, 0, 0, 0})),
               {{"(12)(6)(0)", 1},
                {"(12)(0)(6)", 1},
                {"(12)(0)(0)", 2},
                {"(6)(6)(6)", 1},
                {"(6)(6)(0)", 2},
                {"(6)(0)(6)", 2},
                {"(0)(6)(6)", 1},
                {"(6)(0)(0)", 4},
                {"(0)(6)(0)", 3},
                {"(0)(0)(6)", 3}});
  check_branch(run("D6>3A1", W({0, 0, 0, 0, 0, 5})),
               {{"(20)(5)(0)", 1},
                {"(10)(5)(10)", 1},
                {"(10)(5)(0)", 2},
                {"(0)(15)(0)", 1},
                {"(0)(5)(10)", 1},
                {"(0)(5)(0)", 3}});
  check_branch(run("D6>C3xA1", W({2, 0, 0, 0, 0, 0})), {{"(2,0,0)(2)", 1}});
  check_branch(run("D6>C3xA1", W({0, 3, 0, 0, 0, 0})),
               {{"(0,3,0)(6)", 1}, {"(6,0,0)(0)", 1}, {"(0,3,0)(0)", 2}, {"(0,0,0)(6)", 3}});
  check_branch(run("D6>C3xA1", W({0, 0, 0, 0, 0, 5})),
               {{"(0,5,0)(5)", 1}, {"(0,0,0)(15)", 1}, {"(0,0,0)(5)", 3}});
}

TEST_CASE("branch validates its input") {
  const ProjectionMap& map = *Catalog::instance().find("B3>G2");
  CHECK_THROWS_WITH_AS(branch(map, W({-1, 0, 0})),
                       doctest::Contains("dominant"), Error);
  CHECK_THROWS_AS(branch(map, W({1, 0})), Error);
}

TEST_CASE("branching the zero orbit") {
  check_branch(run("B3>G2", W({0, 0, 0})), {{"(0,0)", 1}});
}

TEST_CASE("a bogus matrix is caught by the conservation check") {
  // the identity is not a projection of B2 onto 2A1
  ProjectionMap bogus(S("B2"), PA("2A1"), int_identity(2));
  CHECK_THROWS_WITH_AS(branch(bogus, W({1, 0})),
                       doctest::Contains("conservation"), Error);
}

TEST_CASE("conservation holds on random catalog pairs and weights") {
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<int> coord(0, 4);
  const auto& entries = Catalog::instance().entries();
  std::uniform_int_distribution<size_t> pick(0, entries.size() - 1);
  int done = 0;
  while (done < 100) {
    const CatalogEntry& entry = entries[pick(rng)];
    Weight w;
    for (int i = 0; i < entry.map.source.rank; ++i) w.emplace_back(coord(rng));
    if (orbit_size(ProductAlgebra(entry.map.source), w) > 300000) continue;
    BranchingResult r = branch(entry.map, w);  // throws on conservation failure
    CHECK(r.decomposed_size == r.source_orbit_size);
    ++done;
  }
}

TEST_CASE("projected points re-dominate into listed entries") {
  for (const char* key : {"B3>G2", "C3>A2xU1", "D4>A2", "B4>C2x2A1"}) {
    const ProjectionMap& map = *Catalog::instance().find(key);
    Weight probe(map.source.rank, Rat(1));
    probe[0] = Rat(2);
    BranchingResult result = branch(map, probe);
    Orbit orbit = orbit_points(ProductAlgebra(map.source), probe);
    for (const Weight& p : orbit.points) {
      Weight image = dominant_of(map.target, map.apply(p));
      bool found = false;
      for (const BranchEntry& e : result.entries) found = found || e.flat() == image;
      CHECK(found);
    }
  }
}

TEST_CASE("branch multiplicities do not depend on enumeration order") {
  const ProjectionMap& map = *Catalog::instance().find("B3>3A1");
  Weight probe = W({2, 3, 5});
  BranchingResult result = branch(map, probe);

  // recount from an independently shuffled copy of the orbit
  Orbit orbit = orbit_points(ProductAlgebra(map.source), probe);
  std::mt19937 rng(99);
  std::shuffle(orbit.points.begin(), orbit.points.end(), rng);
  std::map<std::string, long long> recount;
  for (const Weight& p : orbit.points) {
    Weight image = map.apply(p);
    if (is_dominant(map.target, image)) {
      BranchEntry e{{ {image.begin(), image.begin() + 1},
                      {image.begin() + 1, image.begin() + 2},
                      {image.begin() + 2, image.end()} }, 1};
      recount[render_entry(e)] += 1;
    }
  }
  CHECK(recount == entry_set(result));
}

TEST_CASE("gamma needs two nonzero probes and a semisimple target") {
  const ProjectionMap& g2 = *Catalog::instance().find("B3>G2");
  CHECK_THROWS_AS(gamma(g2, {W({1, 0, 0})}), Error);
  CHECK_THROWS_AS(gamma(g2, {W({0, 0, 0}), W({0, 0, 0})}), Error);
  const ProjectionMap& u1 = *Catalog::instance().find("B3>C2xU1");
  CHECK_THROWS_AS(gamma(u1, standard_probes(S("B3"))), Error);
  CHECK(gamma(g2, {W({1, 0, 0}), W({0, 1, 0})}) == Rat(3, 2));
}
