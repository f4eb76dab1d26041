#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "dumont/objects.hpp"
#include "dumont/series.hpp"

using namespace dumont;

TEST_CASE("noncrossing partitions") {
  NoncrossingPartition crossing(4, {{1, 3}, {2, 4}});
  CHECK_FALSE(is_noncrossing(crossing));

  NoncrossingPartition ok(8, {{6, 4, 1}, {3, 2}, {5}, {8, 7}});
  CHECK(is_noncrossing(ok));
  CHECK(ok.str() == "641/32/5/87");
  CHECK(ok.parts() == 4);

  // multi-digit ground set switches to comma-separated elements
  NoncrossingPartition wide(10, {{10, 1}, {9, 2}, {3}, {4}, {5}, {6}, {7}, {8}});
  CHECK(wide.str() == "10,1/9,2/3/4/5/6/7/8");

  CHECK(all_nc(4).size() == 14);
  for (const auto& p : all_nc(5)) CHECK(is_noncrossing(p));
}

TEST_CASE("Narayana numbers") {
  CHECK(narayana(3, 1) == 3);
  CHECK(narayana(4, 0) == 1);
  CHECK_THROWS(narayana(3, 3));
  // column sums are Catalan; parts-counts over NC(n) match
  RatSeries cat = catalan_series(10);
  for (int n = 1; n <= 8; ++n) {
    Int total = 0;
    for (int k = 0; k < n; ++k) total += narayana(n, k);
    CHECK(Rat(total) == cat[n]);
  }
  for (int n = 1; n <= 7; ++n) {
    std::vector<Int> by_parts(n + 1);
    for (const auto& p : all_nc(n)) ++by_parts[p.parts()];
    for (int k = 0; k < n; ++k) CHECK(by_parts[n - k] == narayana(n, k));
  }
}

TEST_CASE("block-grammar permutations") {
  CHECK(is_E(Permutation::parse("3124")));
  CHECK(is_E(Permutation::parse("1")));
  CHECK(enumerate_E(4).size() == 14);
  RatSeries cat = catalan_series(6);
  for (int n = 1; n <= 6; ++n)
    CHECK(Rat(Int(enumerate_E(n).size())) == cat[n]);
}

TEST_CASE("boards") {
  CHECK(is_lower_board(Permutation::parse("1342")));
  CHECK(is_upper_board(Permutation::parse("3214")));
  CHECK_FALSE(is_lower_board(Permutation::parse("4321")));

  const Int expect[] = {1, 1, 1, 2, 3, 7, 12};
  for (int n = 0; n <= 6; ++n) CHECK(count_boards(n, BoardKind::lower) == expect[n]);

  // brute-force cross-check of the pruned enumeration
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> brute;
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    do {
      Permutation p{std::vector<int>(w)};
      if (is_lower_board(p)) brute.insert(p);
    } while (std::next_permutation(w.begin(), w.end()));
    auto fast = all_boards(n, BoardKind::lower);
    CHECK(brute == std::set<Permutation>(fast.begin(), fast.end()));
  }

  // upper boards in S_n are counted by the shifted sequence
  for (int n = 0; n <= 7; ++n)
    CHECK(count_boards(n, BoardKind::upper) == b_seq(n + 1));
}

TEST_CASE("northeast path counting") {
  CHECK(count_ne_paths(0) == 1);
  CHECK(count_ne_paths(4) == 3);
  CHECK(count_ne_paths(5) == 7);
  for (int n = 0; n <= 14; ++n) CHECK(count_ne_paths(n) == a_seq(n));
}

TEST_CASE("northwest paths") {
  NorthwestPath p = NorthwestPath::parse("2:NNW");
  CHECK(p.n == 2);
  CHECK(p.steps == "NNW");
  CHECK(p.str() == "2:NNW");
  CHECK(is_valid_nw(p));
  CHECK(is_valid_nw(NorthwestPath::parse("1:N")));
  CHECK_FALSE(is_valid_nw(NorthwestPath{2, "WNN"}));  // dips below y = 2n - 2x
  CHECK_THROWS(NorthwestPath::parse("NNW"));
  CHECK_THROWS(NorthwestPath::parse("2:NXW"));
}
