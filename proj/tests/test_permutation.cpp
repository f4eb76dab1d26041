#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <span>

#include "doctest.h"
#include "dumont/permutation.hpp"

using namespace dumont;

TEST_CASE("parse and render") {
  CHECK(Permutation::parse("2143").str() == "2143");
  CHECK(Permutation::parse("10,1,6,3,5,4,7,2,9,8").size() == 10);
  CHECK(Permutation::parse("10,1,6,3,5,4,7,2,9,8").str() == "10,1,6,3,5,4,7,2,9,8");
  CHECK(Permutation::parse("3 1 2").str() == "312");
  CHECK(Permutation::parse("").empty());
  CHECK(Permutation::identity(3).str() == "123");
  CHECK_THROWS(Permutation::parse("1224"));
  CHECK_THROWS(Permutation::parse("13"));
}

TEST_CASE("pattern containment") {
  CHECK(contains(Permutation::parse("2143"), Permutation::parse("21")));
  CHECK_FALSE(contains(Permutation::parse("64357821"), Permutation::parse("132")));
  CHECK_FALSE(contains(Permutation::parse("4213"), Permutation::parse("2413")));
  CHECK(avoids_all(Permutation::parse("2143"),
                   {Permutation::parse("1342"), Permutation::parse("1423")}));
  CHECK(avoids_all(Permutation(), {Permutation::parse("21")}));
  CHECK_FALSE(avoids_all(Permutation::parse("3142"), {Permutation::parse("3142")}));
}

TEST_CASE("anchored containment agrees with full scan on pattern-free prefixes") {
  // appending one letter to a pattern-free word can only create occurrences
  // that end at the new letter
  const Permutation pat = Permutation::parse("213");
  std::vector<int> w = {1, 2, 3, 4, 5};
  do {
    std::span<const int> full(w);
    std::span<const int> prefix = full.first(w.size() - 1);
    if (sequence_contains(prefix, pat)) continue;
    CHECK(sequence_contains(full, pat) == sequence_contains(full, pat, true));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("symmetries") {
  CHECK(reverse(Permutation::parse("123")) == Permutation::parse("321"));
  CHECK(complement(Permutation::parse("2143")) == Permutation::parse("3412"));
  CHECK(inverse(Permutation::parse("3142")) == Permutation::parse("2413"));
  CHECK(reverse_complement(Permutation::parse("2143")) ==
        reverse(complement(Permutation::parse("2143"))));
  CHECK(apply_symmetry(Permutation::parse("123"), Symmetry::reverse) ==
        Permutation::parse("321"));
}

TEST_CASE("statistics") {
  const Permutation p = Permutation::parse("3,1,5,2,6,4,9,7,10,8");
  StatRecord s = statistics(p);
  CHECK(s.fix == 0);
  CHECK(s.lis == 5);

  const Permutation hat =
      Permutation::parse("12,1,6,3,5,4,7,2,10,9,11,8,16,13,15,14");
  StatRecord sh = statistics(hat);
  CHECK(sh.fix == 4);
  CHECK(sh.fix + sh.fix_minus1 == 8);
}

TEST_CASE("cycle decomposition") {
  const Permutation hat =
      Permutation::parse("12,1,6,3,5,4,7,2,10,9,11,8,16,13,15,14");
  // canonical order: by minimum element, each cycle starting at its maximum
  CHECK(cycles_str(cycle_decomposition(hat)) ==
        "(12,8,2,1)(6,4,3)(5)(7)(10,9)(11)(16,14,13)(15)");
  CHECK(cycles_str(cycle_decomposition(Permutation::identity(3))) ==
        "(1)(2)(3)");
  CHECK(cycles_str(cycle_decomposition(Permutation::parse("63215487"))) ==
        "(6,4,1)(3,2)(5)(8,7)");
}

TEST_CASE("parity subsequences") {
  CHECK(even_subsequence(Permutation::parse("64357821")) ==
        std::vector<int>{6, 4, 8, 2});
  CHECK(even_subsequence(Permutation::parse("61325487")) ==
        std::vector<int>{6, 2, 4, 8});
  CHECK(odd_subsequence(Permutation::parse("21")) == std::vector<int>{1});
}
