#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dumont/bijections.hpp"
#include "dumont/dumont_gen.hpp"
#include "dumont/dyck.hpp"
#include "dumont/objects.hpp"
#include "dumont/series.hpp"
#include "dumont/svg.hpp"
#include "dumont/verify.hpp"

namespace {

using namespace dumont;

std::vector<Permutation> parse_patterns(const std::string& csv) {
  std::vector<Permutation> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Permutation::parse(item));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int cmd_gen(const std::string& kind, int n, const std::string& avoid,
            bool count_only) {
  DumontKind k = parse_kind(kind);
  auto patterns = parse_patterns(avoid);
  if (count_only) {
    std::cout << count(k, n, patterns).str() << "\n";
    return 0;
  }
  generate(k, n, patterns, [](const Permutation& p) {
    std::cout << p.str() << "\n";
    return true;
  });
  return 0;
}

int cmd_stats(const std::string& kind, int n, const std::string& avoid,
              const std::string& by) {
  DumontKind k = parse_kind(kind);
  std::vector<std::string> stats = split(by, ',');
  auto table = distribution(k, n, parse_patterns(avoid), stats);
  for (const auto& [key, cnt] : table) {
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << stats[i] << "=" << key[i];
    }
    std::cout << ": " << cnt.str() << "\n";
  }
  return 0;
}

int cmd_biject(const std::string& map, const std::string& input) {
  auto perm = [&] { return Permutation::parse(input); };
  auto path = [&] { return DyckPath::parse(input); };
  std::string out;
  if (map == "f1")
    out = f1(perm()).str();
  else if (map == "f1inv")
    out = f1_inverse(perm()).str();
  else if (map == "f2")
    out = f2(perm()).str();
  else if (map == "f2inv")
    out = f2_inverse(perm()).str();
  else if (map == "phi")
    out = phi_krat(perm()).str();
  else if (map == "phiinv")
    out = phi_krat_inverse(path()).str();
  else if (map == "phiR")
    out = phi_R(perm()).str();
  else if (map == "phiRinv")
    out = phi_R_inverse(path()).str();
  else if (map == "psi")
    out = psi_eli(perm()).str();
  else if (map == "psiinv")
    out = psi_eli_inverse(path()).str();
  else if (map == "g1")
    out = g1(path()).str();
  else if (map == "g1inv")
    out = g1_inverse(path()).str();
  else if (map == "g2")
    out = g2(path()).str();
  else if (map == "g2inv")
    out = g2_inverse(path()).str();
  else if (map == "d2-321")
    out = d2_321_to_dyck(perm()).str();
  else if (map == "d2-321inv")
    out = d2_321_to_dyck_inverse(path()).str();
  else if (map == "phi-even")
    out = phi_even(perm()).str();
  else if (map == "phi-even-inv")
    out = phi_even_inverse(perm()).str();
  else if (map == "psi-nc")
    out = psi_nc(perm()).str();
  else if (map == "split-boards") {
    BoardPair bp = split_boards(perm());
    out = bp.upper.str() + ";" + bp.lower.str();
  } else if (map == "merge-boards") {
    auto parts = split(input, ';');
    if (parts.size() != 2)
      throw std::invalid_argument("merge-boards expects \"upper;lower\"");
    Permutation upper = Permutation::parse(parts[0]);
    Permutation lower = Permutation::parse(parts[1]);
    out = merge_boards({upper, lower, upper.size()}).str();
  } else if (map == "lower-to-path")
    out = lower_board_to_path(perm()).str();
  else if (map == "path-to-lower")
    out = path_to_lower_board(NorthwestPath::parse(input)).str();
  else
    throw std::invalid_argument("unknown map: " + map);
  std::cout << out << "\n";
  return 0;
}

int cmd_series(const std::string& name, int k, int order) {
  auto print_ints = [&](auto fn) {
    for (int n = 0; n <= order; ++n) {
      if (n) std::cout << ", ";
      std::cout << fn(n).str();
    }
    std::cout << "\n";
  };
  if (name == "catalan")
    std::cout << series_str(catalan_series(order)) << "\n";
  else if (name == "schroder")
    std::cout << series_str(schroder_s(order)) << "\n";
  else if (name == "f")
    std::cout << series_str(ternary_f(order)) << "\n";
  else if (name == "a")
    print_ints(a_seq);
  else if (name == "b")
    print_ints(b_seq);
  else if (name == "r")
    print_ints(large_schroder);
  else if (name == "C2")
    print_ints([](int n) { return n == 0 ? Int(1) : generalized_catalan_C2(n); });
  else if (name == "pairb")
    print_ints(pair_b);
  else if (name == "Lk")
    std::cout << series_str(L_k_series(k, order)) << "\n";
  else if (name == "Aqtx")
    std::cout << series_str(A_qtx(order)) << "\n";
  else if (name.rfind("Atau:", 0) == 0)
    std::cout << series_str(A_tau(Permutation::parse(name.substr(5)), order))
              << "\n";
  else if (name.rfind("Btau:", 0) == 0)
    std::cout << series_str(B_tau(Permutation::parse(name.substr(5)), order))
              << "\n";
  else if (name.rfind("Ctau:", 0) == 0)
    std::cout << series_str(C_tau(Permutation::parse(name.substr(5)), order))
              << "\n";
  else
    throw std::invalid_argument("unknown series name: " + name);
  return 0;
}

int cmd_verify(const std::string& check, int max_n, const std::string& json_path) {
  std::vector<CheckReport> reports;
  if (check == "all")
    reports = run_all(max_n);
  else
    reports.push_back(run_check(check, max_n));
  for (const CheckReport& r : reports) {
    std::cout << r.id << ": " << r.verdict << " (" << r.rows.size()
              << " rows)\n";
    if (r.verdict != "pass") {
      for (const CheckRow& row : r.rows)
        if (!row.equal)
          std::cout << "  n=" << row.n << " formula=" << row.formula
                    << " oracle=" << row.oracle << "\n";
    }
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write " + json_path);
    out << report_json(reports) << "\n";
  }
  return all_must_pass_ok(reports) ? 0 : 2;
}

int cmd_plot(const std::string& type, const std::string& input,
             const std::string& out_path) {
  std::string svg;
  if (type == "dyck")
    svg = svg_dyck(DyckPath::parse(input));
  else if (type == "board")
    svg = svg_board(Permutation::parse(input));
  else
    throw std::invalid_argument("unknown plot type: " + type);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Dumont permutation toolkit"};
  app.require_subcommand(1);

  std::string kind = "d1", avoid, by = "fix", map_name, input, series_name;
  std::string check = "all", json_path, plot_type = "dyck", out_path;
  int n = 0, order = 10, k = 1, max_n = 0;
  bool count_only = false;

  auto* gen = app.add_subcommand("gen", "list or count Dumont permutations");
  gen->add_option("--kind", kind, "d1 or d2")->required();
  gen->add_option("--n", n, "half-length")->required();
  gen->add_option("--avoid", avoid, "comma-separated patterns");
  gen->add_flag("--count-only", count_only, "print only the count");

  auto* cnt = app.add_subcommand("count", "count Dumont permutations");
  cnt->add_option("--kind", kind)->required();
  cnt->add_option("--n", n)->required();
  cnt->add_option("--avoid", avoid);

  auto* stats = app.add_subcommand("stats", "joint statistic table");
  stats->add_option("--kind", kind)->required();
  stats->add_option("--n", n)->required();
  stats->add_option("--avoid", avoid);
  stats->add_option("--by", by, "comma-separated statistic names");

  auto* biject = app.add_subcommand("biject", "apply a bijection");
  biject->add_option("--map", map_name)->required();
  biject->add_option("--input", input)->required();

  auto* series = app.add_subcommand("series", "print series coefficients");
  series->add_option("--name", series_name)->required();
  series->add_option("--k", k, "index for Lk");
  series->add_option("--order", order);

  auto* verify = app.add_subcommand("verify", "run theorem checks");
  verify->add_option("--check", check, "check id or 'all'");
  verify->add_option("--max-n", max_n);
  verify->add_option("--json", json_path, "write a JSON report");

  auto* plot = app.add_subcommand("plot", "emit an SVG figure");
  plot->add_option("--type", plot_type, "dyck or board")->required();
  plot->add_option("--input", input)->required();
  plot->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(kind, n, avoid, count_only);
    if (cnt->parsed()) return cmd_gen(kind, n, avoid, true);
    if (stats->parsed()) return cmd_stats(kind, n, avoid, by);
    if (biject->parsed()) return cmd_biject(map_name, input);
    if (series->parsed()) return cmd_series(series_name, k, order);
    if (verify->parsed()) return cmd_verify(check, max_n, json_path);
    if (plot->parsed()) return cmd_plot(plot_type, input, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
