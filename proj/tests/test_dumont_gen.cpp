#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "dumont/dumont_gen.hpp"

using namespace dumont;

TEST_CASE("membership") {
  CHECK(is_dumont(Permutation::parse("2143"), DumontKind::first));
  CHECK_FALSE(is_dumont(Permutation::parse("3142"), DumontKind::first));
  CHECK(is_dumont(Permutation::parse("3142"), DumontKind::second));
  CHECK(is_dumont(Permutation::parse("4132"), DumontKind::second));
  CHECK(is_dumont(Permutation(), DumontKind::first));
  CHECK_FALSE(is_dumont(Permutation::parse("123"), DumontKind::first));  // odd length
}

TEST_CASE("generation order and filtering") {
  auto d2 = generate_all(DumontKind::second, 2);
  REQUIRE(d2.size() == 3);
  CHECK(d2[0].str() == "2143");
  CHECK(d2[1].str() == "3142");
  CHECK(d2[2].str() == "4132");

  auto filtered = generate_all(DumontKind::second, 2, {Permutation::parse("2143")});
  REQUIRE(filtered.size() == 2);
  CHECK(filtered[0].str() == "3142");

  auto empty = generate_all(DumontKind::first, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());

  // lexicographic order
  auto d1 = generate_all(DumontKind::first, 3);
  CHECK(std::is_sorted(d1.begin(), d1.end()));
}

TEST_CASE("pruned generation agrees with filtering the full class") {
  const std::vector<Permutation> avoid = {Permutation::parse("3142")};
  for (int n = 1; n <= 4; ++n) {
    auto pruned = generate_all(DumontKind::second, n, avoid);
    std::vector<Permutation> filtered;
    for (const auto& p : generate_all(DumontKind::second, n))
      if (avoids_all(p, avoid)) filtered.push_back(p);
    CHECK(pruned == filtered);
  }
}

TEST_CASE("counts") {
  CHECK(count(DumontKind::first, 2) == 3);
  CHECK(count(DumontKind::second, 3, {Permutation::parse("3142")}) == 5);
  CHECK(count(DumontKind::first, 3) == 17);
}

TEST_CASE("Genocchi and median Genocchi") {
  CHECK(genocchi(2) == 1);
  CHECK(genocchi(4) == 1);
  CHECK(genocchi(6) == 3);
  CHECK(genocchi(8) == 17);
  CHECK(genocchi(10) == 155);
  CHECK(genocchi(12) == 2073);
  CHECK(genocchi(14) == 38227);
  CHECK(median_genocchi(1) == 1);
  CHECK(median_genocchi(2) == 2);
  CHECK(median_genocchi(3) == 8);
  CHECK(median_genocchi(4) == 56);
  CHECK(median_genocchi(5) == 608);
  CHECK(median_genocchi(6) == 9440);
  CHECK_THROWS(genocchi(3));
  CHECK_THROWS(genocchi(0));
}

TEST_CASE("both kinds are counted by Genocchi numbers") {
  for (int n = 0; n <= 4; ++n) {
    Int g = genocchi(2 * n + 2);
    CHECK(count(DumontKind::first, n) == g);
    CHECK(count(DumontKind::second, n) == g);
  }
}

TEST_CASE("median Genocchi counts second-kind derangements") {
  for (int n = 1; n <= 4; ++n) {
    Int derangements = 0;
    for (const auto& p : generate_all(DumontKind::second, n))
      if (statistics(p).fix == 0) ++derangements;
    CHECK(derangements == median_genocchi(n));
  }
}

TEST_CASE("distribution tables") {
  auto fix_dist =
      distribution(DumontKind::second, 2, {Permutation::parse("3142")}, {"fix"});
  REQUIRE(fix_dist.size() == 2);
  CHECK(fix_dist.at({0}) == 1);
  CHECK(fix_dist.at({1}) == 1);

  auto tc = distribution(DumontKind::second, 1, {}, {"two_cycles"});
  REQUIRE(tc.size() == 1);
  CHECK(tc.at({1}) == 1);

  auto f2143 =
      distribution(DumontKind::second, 2, {Permutation::parse("2143")}, {"fix"});
  CHECK(f2143.at({0}) == 1);
  CHECK(f2143.at({1}) == 1);
}

TEST_CASE("kind parsing") {
  CHECK(parse_kind("d1") == DumontKind::first);
  CHECK(parse_kind("first") == DumontKind::first);
  CHECK(parse_kind("d2") == DumontKind::second);
  CHECK(parse_kind("second") == DumontKind::second);
  CHECK_THROWS(parse_kind("d3"));
}
