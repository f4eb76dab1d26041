// End-to-end acceptance gate. Prints one PASS/FAIL line per criterion.
// The B_4123 row of criterion 10 is a known discrepancy between the printed
// closed form and brute force; it is reported honestly and does not count as
// a build failure.
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dumont/bijections.hpp"
#include "dumont/dumont_gen.hpp"
#include "dumont/dyck.hpp"
#include "dumont/objects.hpp"
#include "dumont/series.hpp"
#include "dumont/verify.hpp"

using namespace dumont;

namespace {

int failures = 0;
int documented_failures = 0;

void report(int idx, const std::string& desc, bool ok,
            const std::string& detail = "", bool documented = false) {
  std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << " — "
            << desc;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) {
    if (documented)
      ++documented_failures;
    else
      ++failures;
  }
}

std::vector<Permutation> pats(const std::vector<std::string>& words) {
  std::vector<Permutation> out;
  for (const auto& w : words) out.push_back(Permutation::parse(w));
  return out;
}

Int brute_d1(int n, const std::vector<std::string>& avoid) {
  return count(DumontKind::first, n, pats(avoid));
}

void criterion1() {
  const Int expected[] = {1, 1, 3, 17, 155, 2073, 38227};
  bool ok = true;
  for (int n = 0; n <= 6; ++n) {
    Int g = genocchi(2 * n + 2);
    Rat bform = Rat(2) * (Rat(1) - Rat(Int(1) << (2 * n + 2))) *
                bernoulli(2 * n + 2);
    Rat babs = bform < 0 ? Rat(-bform) : bform;
    ok = ok && count(DumontKind::first, n) == expected[n] &&
         count(DumontKind::second, n) == expected[n] && g == expected[n] &&
         babs == Rat(expected[n]);
  }
  report(1, "both Dumont classes counted by the Genocchi numbers", ok);
}

void criterion2() {
  bool ok = true;
  RatSeries cat = catalan_series(7);
  for (int n = 0; n <= 6; ++n) {
    Rat c = cat[n];
    ok = ok && Rat(brute_d1(n, {"132"})) == c &&
         Rat(brute_d1(n, {"231"})) == c && Rat(brute_d1(n, {"312"})) == c &&
         brute_d1(n, {"321"}) == 1 &&
         Rat(count(DumontKind::second, n, pats({"321"}))) == c &&
         count(DumontKind::second, n, pats({"312"})) == 1;
    ok = ok && Rat(brute_d1(n, {"213"})) == (n == 0 ? Rat(1) : cat[n - 1]);
    ok = ok && count(DumontKind::second, n, pats({"231"})) ==
                   (n == 0 ? Int(1) : Int(1) << (n - 1));
    if (n >= 3)
      ok = ok && count(DumontKind::second, n, pats({"132"})) == 0 &&
           count(DumontKind::second, n, pats({"213"})) == 0;
  }
  report(2, "single 3-letter pattern counts match the class inventory", ok);
}

void criterion3() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n)
    ok = ok && generate_all(DumontKind::second, n, pats({"4132"})) ==
                   generate_all(DumontKind::second, n, pats({"321"}));
  report(3, "second-kind 4132-avoiders coincide with 321-avoiders", ok);
}

void criterion4() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    auto dist = distribution(DumontKind::second, n, pats({"3142"}), {"fix"});
    std::vector<Int> parts_dist(n + 1);
    generate(DumontKind::second, n, pats({"3142"}), [&](const Permutation& p) {
      ++parts_dist[psi_nc(p).parts()];
      return true;
    });
    for (int k = 0; k < n; ++k) {
      Int nk = narayana(n, k);
      Int dk = dist.count({k}) ? dist.at({k}) : Int(0);
      ok = ok && dk == nk && parts_dist[n - k] == nk;
    }
  }
  report(4, "fixed-point distribution over 3142-avoiders is Narayana, "
            "matching partition part counts", ok);
}

void criterion5() {
  bool ok = A_qtx_fixpoint(6) == A_qtx_closed(6);
  QTSeries a = A_qtx(6);
  for (int n = 1; n <= 6; ++n) {
    QTPoly brute;
    generate(DumontKind::second, n, pats({"3142"}), [&](const Permutation& p) {
      StatRecord s = statistics(p);
      brute += QTPoly::monomial(s.fix, s.two_cycles);
      return true;
    });
    ok = ok && brute == a[n];
  }
  report(5, "joint (fix, 2-cycle) distribution matches the q,t-series, "
            "computed two independent ways", ok);
}

void criterion6() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n)
    generate(DumontKind::second, n, pats({"3142"}), [&](const Permutation& p) {
      StatRecord sp = statistics(p);
      StatRecord ss = statistics(phi_even(p));
      ok = ok && sp.fix + sp.fix_minus1 == n && sp.fix == ss.def &&
           sp.fix_minus1 == ss.exc + ss.fix && ss.fix == sp.two_cycles;
      return true;
    });
  report(6, "the four fixed-point/excedance identities hold on every "
            "3142-avoider", ok);
}

void criterion7() {
  const Int expected[] = {1, 1, 2, 6, 21, 84, 360};
  bool ok = true;
  for (int n = 0; n <= 6; ++n) {
    Int c = count(DumontKind::second, n, pats({"2143"}));
    ok = ok && c == expected[n] && c == a_seq(n) * a_seq(n + 1);
  }
  for (int n = 0; n <= 5; ++n) {
    Int derangements = 0;
    generate(DumontKind::second, n, pats({"2143"}), [&](const Permutation& p) {
      if (statistics(p).fix == 0) ++derangements;
      return true;
    });
    ok = ok && derangements == a_seq(n) * a_seq(n);
  }
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    generate(DumontKind::second, n, pats({"2143"}), [&](const Permutation& p) {
      BoardPair b = split_boards(p);
      ok = ok && is_upper_board(b.upper) && is_lower_board(b.lower) &&
           merge_boards(b) == p;
      seen.insert(b.upper.str() + ";" + b.lower.str());
      return true;
    });
    Int all_pairs =
        count_boards(n, BoardKind::upper) * count_boards(n, BoardKind::lower);
    ok = ok && Int(seen.size()) == all_pairs;
  }
  for (int n = 0; n <= 14; ++n)
    ok = ok &&
         count_boards(n, BoardKind::lower) == a_seq(n) &&
         count_ne_paths(n) == a_seq(n);
  report(7, "2143-avoider product formula, derangement squares, board "
            "splitting, and the lattice-path count", ok);
}

void criterion8() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    generate(DumontKind::first, n, pats({"132"}), [&](const Permutation& p) {
      ok = ok && statistics(p).lds == n + 1;
      return true;
    });
    generate(DumontKind::first, n, pats({"231"}), [&](const Permutation& p) {
      ok = ok && statistics(p).rlm == n;
      return true;
    });
    generate(DumontKind::second, n, pats({"321"}), [&](const Permutation& p) {
      ok = ok && statistics(p).lis == n;
      return true;
    });
  }
  for (int n = 1; n <= 8; ++n)
    for (const DyckPath& p : all_dyck(n)) {
      DyckPath a = g1(p), b = g2(p);
      ok = ok && height(a) == lambda_stat(p) && peaks(a) == n + 1 &&
           peaks(b) == n && height(b) == height(p) + 1;
    }
  for (int n = 0; n <= 6; ++n) {
    std::vector<Int> by_lis(n + 2);
    generate(DumontKind::first, n, pats({"132"}), [&](const Permutation& p) {
      ++by_lis[statistics(p).lis];
      return true;
    });
    for (int k = 0; k <= n + 1; ++k) {
      Int at_most = 0;
      for (int j = 0; j <= std::min(k, n + 1); ++j) at_most += by_lis[j];
      ok = ok && Rat(at_most) == L_k_series(k, n)[n];
    }
  }
  report(8, "statistic transport along the bijections and the bounded-lis "
            "series", ok);
}

void criterion9() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    generate(DumontKind::first, n, pats({"132"}), [&](const Permutation& p) {
      ok = ok && f1_inverse(f1(p)) == p && avoids(f1(p), Permutation::parse("132"));
      return true;
    });
    generate(DumontKind::first, n, pats({"231"}), [&](const Permutation& p) {
      ok = ok && f2_inverse(f2(p)) == p && avoids(f2(p), Permutation::parse("231"));
      return true;
    });
    generate(DumontKind::second, n, pats({"3142"}), [&](const Permutation& p) {
      ok = ok && phi_even_inverse(phi_even(p)) == p && is_E(phi_even(p));
      return true;
    });
    std::set<std::string> nc_image;
    generate(DumontKind::second, n, pats({"3142"}), [&](const Permutation& p) {
      NoncrossingPartition part = psi_nc(p);
      ok = ok && part.parts() == n - statistics(p).fix;
      nc_image.insert(part.str());
      return true;
    });
    ok = ok && nc_image.size() == all_nc(n).size();
    for (const DyckPath& d : all_dyck(n)) {
      ok = ok && g1_inverse(g1(d)) == d && g2_inverse(g2(d)) == d;
      Permutation s132 = phi_krat_inverse(d);
      Permutation s231 = phi_R_inverse(d);
      Permutation s321 = psi_eli_inverse(d);
      ok = ok && phi_krat(s132) == d && phi_R(s231) == d && psi_eli(s321) == d;
      ok = ok && d2_321_to_dyck(d2_321_to_dyck_inverse(d)) == d;
    }
  }
  for (int n = 1; n <= 8; ++n)
    for (const Permutation& b : all_boards(n, BoardKind::lower))
      ok = ok && path_to_lower_board(lower_board_to_path(b)) == b;
  report(9, "every bijection round-trips and lands in its stated codomain",
         ok);
}

void criterion10() {
  std::ostringstream notes;
  bool ok = true;
  const int N = 5;
  RatSeries cat = catalan_series(N);
  RatSeries sch = schroder_s(N + 1);

  auto match = [&](const RatSeries& s, const std::vector<std::string>& avoid) {
    for (int n = 0; n <= N; ++n)
      if (Rat(count(DumontKind::first, n, pats(avoid))) != s[n]) return false;
    return true;
  };

  for (const char* tau : {"2134", "1324", "1243", "2143"})
    ok = ok && match(A_tau(Permutation::parse(tau), N), {"1342", "1423", tau}) &&
         A_tau(Permutation::parse(tau), N) == A_closed_form(tau, N);
  for (const char* tau : {"1432", "1342", "1423"})
    ok = ok && match(schroder_s(N), {"1342", "1423", tau}) &&
         A_tau(Permutation::parse(tau), N) == schroder_s(N);
  ok = ok && A_tau(Permutation::parse("2143"), N) == cat;
  for (int n = 0; n <= N; ++n)
    ok = ok && generate_all(DumontKind::first, n,
                            pats({"1342", "1423", "2143"})) ==
                   generate_all(DumontKind::first, n, pats({"132"}));


  for (const char* tau : {"123", "1234", "321", "4321"})
    ok = ok && match(C_tau(Permutation::parse(tau), N), {"1342", "2413", tau}) &&
         C_tau(Permutation::parse(tau), N) == C_closed_form(tau, N);

  bool pair_1342_2413 = true;
  for (int n = 0; n <= N; ++n) {
    ok = ok &&
         Rat(count(DumontKind::first, n, pats({"1342", "1423"}))) == sch[n] &&
         Rat(count(DumontKind::first, n, pats({"2341", "2413"}))) == sch[n] &&
         count(DumontKind::first, n, pats({"2341", "1423"})) == pair_b(n) &&
         count(DumontKind::first, n, pats({"1342", "4213"})) ==
             (n == 0 ? Int(1) : Int(1) << (n - 1)) &&
         count(DumontKind::first, n, pats({"2413", "3142"})) ==
             (n == 0 ? Int(1) : generalized_catalan_C2(n));
    pair_1342_2413 = pair_1342_2413 &&
                     Rat(count(DumontKind::first, n, pats({"1342", "2413"}))) ==
                         sch[n];
  }
  if (!pair_1342_2413)
    notes << "documented {1342,2413} discrepancy: brute force count departs "
             "from the claimed little Schroder numbers at n = 4 "
             "(44,185,... vs 45,197,...)";

  // B_312 and B_4123: the text claims both equal the Catalan series, but
  // brute force disagrees; report all three computations honestly.
  bool b_rows_ok = true;
  for (const char* tau : {"312", "4123"}) {
    std::string brute, catalan_str, structural;
    for (int n = 0; n <= N; ++n) {
      if (n) {
        brute += ",";
        catalan_str += ",";
        structural += ",";
      }
      brute += count(DumontKind::first, n, pats({"2341", "2413", tau})).str();
      catalan_str += numerator(cat[n]).str();
      structural += numerator(B_tau(Permutation::parse(tau), N)[n]).str();
    }
    if (brute != catalan_str) {
      b_rows_ok = false;
      if (notes.tellp() > 0) notes << "; ";
      notes << "documented B_" << tau << " discrepancy: brute force " << brute
            << " vs claimed Catalan " << catalan_str
            << " vs structural recurrence " << structural;
    }
  }
  if (!b_rows_ok) notes << "; brute force is ground truth";
  bool documented_only = !b_rows_ok || !pair_1342_2413;
  report(10, "closed forms and inventory rows for the triple-avoidance "
             "series vs brute force",
         ok && b_rows_ok && pair_1342_2413, notes.str(),
         /*documented=*/ok && documented_only);
}

void criterion11() {
  bool ok = true;
  const double samples[] = {0.01, 0.03, 0.05, 0.07, 0.11};
  for (int k = 0; k <= 5; ++k) {
    // decreasing pattern (k+2)...21
    std::vector<int> w(k + 2);
    for (int i = 0; i < k + 2; ++i) w[i] = k + 2 - i;
    RatSeries b = B_tau(Permutation(std::move(w)), 40);
    for (double x : samples) {
      double sum = 0, xp = 1;
      for (int i = 0; i <= 40; ++i, xp *= x)
        sum += static_cast<double>(b[i]) * xp;
      if (std::abs(cba_closed_form(k, x) - sum) > 1e-9) ok = false;
    }
  }
  for (int m = 0; m <= 8; ++m)
    if (std::abs(lbb_iteration(2, 1, 0, m) - lbb_closed_form(2, 1, 0, m)) >
        1e-12)
      ok = false;
  report(11, "Chebyshev closed form vs the continued-fraction recurrence "
             "(1e-9) and the scalar iteration lemma (1e-12)", ok);
}

void criterion12() {
  CheckReport table = run_check("sec4-A-table");
  CheckReport fix = run_check("d2-2143-fix-formula");
  bool ok = table.verdict == "discrepancy_documented" &&
            fix.verdict == "discrepancy_documented";
  std::ostringstream notes;
  auto rows = [&](const CheckReport& r) {
    std::string out;
    for (const auto& row : r.rows)
      if (!row.equal) out += (out.empty() ? "" : ",") + std::to_string(row.n);
    return out;
  };
  notes << "mismatch rows: sec4-A-table n=" << rows(table)
        << "; d2-2143-fix-formula n=" << rows(fix)
        << "; brute force treated as ground truth";
  auto reports = run_all();
  ok = ok && all_must_pass_ok(reports);
  report(12, "suspect checks produce documented-discrepancy verdicts and all "
             "must-pass checks pass", ok, notes.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::cout << "acceptance: " << failures << " blocking failure(s), "
            << documented_failures << " documented discrepancy(ies)\n";
  return failures == 0 ? 0 : 1;
}
