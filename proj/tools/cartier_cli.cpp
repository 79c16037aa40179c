// Command-line front end: single-curve invariant reports, cross-path
// verification grids, and closed-form sweeps.
//
// Exit codes: 0 success / all paths agree, 1 verification disagreement,
// 2 invalid input.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cartier/engine.hpp"
#include "cartier/formulas.hpp"
#include "cartier/poly_io.hpp"
#include "cartier/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace cartier;

constexpr std::int64_t kDefaultMaxGenus = 2500;

struct CommonArgs {
  std::string format = "table";
  int jobs = 0;
  std::int64_t max_genus = kDefaultMaxGenus;
};

void apply_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

std::vector<std::uint64_t> parse_p_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size() || v < 2) {
      throw std::invalid_argument("bad prime list entry '" + item + "'");
    }
    out.push_back(static_cast<std::uint64_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty prime list");
  for (std::uint64_t p : out) {
    if (!is_prime(p)) {
      throw invalid_modulus("p = " + std::to_string(p) + " is not prime");
    }
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_s_range(const std::string& text) {
  const auto pos = text.find("..");
  std::size_t used = 0;
  if (pos == std::string::npos) {
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 1) throw std::invalid_argument("bad s range '" + text + "'");
    return {v, v};
  }
  const std::string lo = text.substr(0, pos), hi = text.substr(pos + 2);
  const long long a = std::stoll(lo, &used);
  if (used != lo.size()) throw std::invalid_argument("bad s range '" + text + "'");
  const long long b = std::stoll(hi, &used);
  if (used != hi.size()) throw std::invalid_argument("bad s range '" + text + "'");
  if (a < 1 || b < a) throw std::invalid_argument("bad s range '" + text + "'");
  return {a, b};
}

ReportDocument run_invariants(const CurveModel& curve) {
  PhaseTimings timings;
  const InvariantReport inv = compute_invariants(curve, &timings);
  return make_report(inv, timings);
}

void print_report(const ReportDocument& doc, const std::string& format) {
  if (format == "json") {
    std::cout << report_to_json(doc);
  } else if (format == "csv") {
    std::cout << csv_header() << "\n" << to_csv(report_to_sweep_row(doc)) << "\n";
  } else {
    std::cout << report_to_table(doc);
  }
}

struct VerifyCell {
  CurveFamily family;
  std::uint64_t p;
  std::int64_t n;
};

SweepRow evaluate_cell(const VerifyCell& cell, bool with_matrix) {
  const bool fermat = cell.family == CurveFamily::fermat;
  SweepRow row;
  row.family = family_name(cell.family);
  row.p = cell.p;
  row.n = cell.n;
  row.degree = fermat ? cell.n : cell.n + 1;
  row.genus = fermat ? fermat_genus(cell.n) : hurwitz_genus(cell.n);

  const FamilyQuery q = classify_family(cell.family, cell.p, cell.n);
  if (q.variant != FamilyVariant::none) {
    row.s = q.s;
    const RankAndANumber cf = fermat ? closed_form_fermat(cell.p, q.s, q.variant)
                                     : closed_form_hurwitz(cell.p, q.s, q.variant);
    row.rank_closed = cf.rank;
  }
  row.rank_counting =
      fermat ? count_fermat_pairs(cell.p, cell.n) : count_hurwitz_pairs(cell.p, cell.n);
  if (with_matrix) {
    const CurveModel cv = fermat ? make_fermat(cell.p, cell.n) : make_hurwitz(cell.p, cell.n);
    const InvariantReport inv = compute_invariants(cv);
    row.rank_matrix = inv.cartier_rank;
    row.p_rank = inv.p_rank;
    row.a_number = inv.a_number;
  } else {
    std::int64_t rank = row.rank_closed ? *row.rank_closed : *row.rank_counting;
    row.a_number = row.genus - rank;
  }
  row.judge_agreement();
  return row;
}

int emit_rows(std::vector<SweepRow>& rows, const std::string& format) {
  bool all_agree = true;
  if (format == "csv") {
    std::cout << csv_header() << "\n";
  } else if (format == "table") {
    std::cout << sweep_table_header() << "\n";
  }
  for (const SweepRow& row : rows) {
    all_agree = all_agree && row.agree;
    if (format == "csv") {
      std::cout << to_csv(row) << "\n";
    } else if (format == "json") {
      std::cout << sweep_row_to_json(row) << "\n";
    } else {
      std::cout << to_table_row(row) << "\n";
    }
  }
  if (format == "table") {
    std::cout << (all_agree ? "all rows agree" : "DISAGREEMENT in at least one row") << "\n";
  }
  return all_agree ? 0 : 1;
}

std::vector<SweepRow> evaluate_cells(const std::vector<VerifyCell>& cells, bool with_matrix) {
  std::vector<SweepRow> rows(cells.size());
  std::vector<std::string> errors(cells.size());
  const std::int64_t total = static_cast<std::int64_t>(cells.size());
  // independent cells; buffered so emission order stays deterministic
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t t = 0; t < total; ++t) {
    try {
      rows[static_cast<std::size_t>(t)] = evaluate_cell(cells[static_cast<std::size_t>(t)], with_matrix);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(t)] = e.what();
    }
  }
  for (const std::string& err : errors) {
    if (!err.empty()) throw std::runtime_error(err);
  }
  return rows;
}

void check_genus_guard(std::int64_t genus, std::int64_t max_genus, const std::string& what) {
  if (genus > max_genus) {
    throw std::invalid_argument(what + " has genus " + std::to_string(genus) +
                                " above the guard (" + std::to_string(max_genus) +
                                "); raise --max-genus to override");
  }
}

int cmd_invariants(const std::string& family, std::int64_t p_arg, std::int64_t n_arg,
                   const std::string& file, int scan_degree, const CommonArgs& common) {
  apply_jobs(common.jobs);
  CurveModel curve = [&] {
    if (family == "fermat") return make_fermat(static_cast<std::uint64_t>(p_arg), n_arg);
    if (family == "hurwitz") return make_hurwitz(static_cast<std::uint64_t>(p_arg), n_arg);
    if (file.empty()) throw std::invalid_argument("general curves need --file");
    auto [p, poly] = parse_poly_file(file);
    return make_general(p, poly);
  }();
  check_genus_guard(curve.genus, common.max_genus, "curve");
  if (scan_degree > 0) {
    const auto points = scan_singular_points(curve, scan_degree);
    if (points.empty()) {
      std::cerr << "singular scan: no singular point found up to extension degree "
                << scan_degree << "\n";
    } else {
      for (const auto& pt : points) std::cerr << "singular point: " << pt.to_string() << "\n";
      throw std::invalid_argument("model has singular points; invariants would be meaningless");
    }
  }
  print_report(run_invariants(curve), common.format);
  return 0;
}

int cmd_verify(const std::string& p_list, std::int64_t n_max, const CommonArgs& common) {
  apply_jobs(common.jobs);
  if (n_max < 3) throw std::invalid_argument("--n-max must be at least 3");
  const std::vector<std::uint64_t> primes = parse_p_list(p_list);
  std::vector<VerifyCell> cells;
  for (std::uint64_t p : primes) {
    const std::int64_t sp = static_cast<std::int64_t>(p);
    for (std::int64_t n = 3; n <= n_max; ++n) {
      if (n % sp != 0) {
        check_genus_guard(fermat_genus(n), common.max_genus, "fermat n=" + std::to_string(n));
        cells.push_back({CurveFamily::fermat, p, n});
      }
    }
    for (std::int64_t n = 2; n <= n_max; ++n) {
      if ((n * n - n + 1) % sp != 0) {
        check_genus_guard(hurwitz_genus(n), common.max_genus, "hurwitz n=" + std::to_string(n));
        cells.push_back({CurveFamily::hurwitz, p, n});
      }
    }
  }
  std::vector<SweepRow> rows = evaluate_cells(cells, /*with_matrix=*/true);
  return emit_rows(rows, common.format);
}

int cmd_sweep(const std::string& family, const std::string& variant_text,
              const std::string& p_list, const std::string& s_range, bool no_matrix,
              const CommonArgs& common) {
  apply_jobs(common.jobs);
  if (family != "fermat" && family != "hurwitz") {
    throw std::invalid_argument("sweep family must be fermat or hurwitz");
  }
  const bool fermat = family == "fermat";
  const FamilyVariant variant = variant_from_name(variant_text);
  if (variant == FamilyVariant::none ||
      (fermat && variant == FamilyVariant::sp) ||
      (!fermat && variant == FamilyVariant::sp_minus_one)) {
    throw std::invalid_argument("variant " + variant_text + " does not apply to " + family);
  }
  const std::vector<std::uint64_t> primes = parse_p_list(p_list);
  const auto [s_lo, s_hi] = parse_s_range(s_range);

  std::vector<VerifyCell> cells;
  for (std::uint64_t p : primes) {
    for (std::int64_t s = s_lo; s <= s_hi; ++s) {
      const std::int64_t sp = static_cast<std::int64_t>(p);
      std::int64_t n = 0;
      switch (variant) {
        case FamilyVariant::sp_plus_one: n = s * sp + 1; break;
        case FamilyVariant::sp_minus_one: n = s * sp - 1; break;
        case FamilyVariant::sp: n = s * sp; break;
        default: break;
      }
      const std::int64_t min_n = fermat ? 3 : 2;
      if (n < min_n) {
        throw std::invalid_argument("cell p=" + std::to_string(p) + " s=" + std::to_string(s) +
                                    " gives n=" + std::to_string(n) + " below the family minimum");
      }
      const std::int64_t genus = fermat ? fermat_genus(n) : hurwitz_genus(n);
      check_genus_guard(genus, common.max_genus,
                        family + " p=" + std::to_string(p) + " s=" + std::to_string(s));
      cells.push_back({fermat ? CurveFamily::fermat : CurveFamily::hurwitz, p, n});
    }
  }
  std::vector<SweepRow> rows = evaluate_cells(cells, !no_matrix);
  return emit_rows(rows, common.format);
}

// Golden reports for the acceptance fixtures, matrix path only,
// timings zeroed so the files are byte-stable.
int cmd_seed_goldens(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write_one = [&dir](const std::string& name, const CurveModel& curve) {
    ReportDocument doc = make_report(compute_invariants(curve), PhaseTimings{});
    std::ofstream out(dir + "/" + name + ".json");
    out << report_to_json(doc);
  };
  write_one("fermat_p3_n13", make_fermat(3, 13));
  write_one("hurwitz_p3_n12", make_hurwitz(3, 12));
  write_one("fermat_p2_n5", make_fermat(2, 5));
  BivarPoly quartic(5);
  quartic.add_term(4, 0, 1);
  quartic.add_term(0, 4, 1);
  quartic.add_term(2, 2, 1);
  quartic.add_term(0, 0, 1);
  write_one("general_quartic_p5", make_general(5, quartic));
  std::cout << "wrote 4 golden reports to " << dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Cartier-Manin matrices and curve invariants over prime fields"};
  app.require_subcommand(0, 1);

  std::string goldens_dir;
  app.add_option("--seed-goldens", goldens_dir,
                 "regenerate golden report files (matrix path only) into this directory");

  CommonArgs inv_common, ver_common, sw_common;

  // invariants
  auto* inv = app.add_subcommand("invariants", "compute the invariants of one curve");
  std::string inv_family;
  inv->add_option("family", inv_family, "curve family: fermat, hurwitz or general")
      ->required()
      ->check(CLI::IsMember({"fermat", "hurwitz", "general"}));
  std::int64_t inv_p = 0, inv_n = 0;
  std::string inv_file;
  int inv_scan = 0;
  inv->add_option("-p", inv_p, "prime characteristic");
  inv->add_option("-n", inv_n, "family degree parameter");
  inv->add_option("--file", inv_file, "polynomial file for general curves");
  inv->add_option("--scan-singular", inv_scan,
                  "scan for singular points over F_{p^k}, k up to this bound (<= 4)")
      ->check(CLI::Range(1, 4));
  inv->add_option("--format", inv_common.format)->check(CLI::IsMember({"table", "json", "csv"}));
  inv->add_option("--jobs", inv_common.jobs, "OpenMP threads (default: all cores)");
  inv->add_option("--max-genus", inv_common.max_genus, "genus guard");

  // verify
  auto* ver = app.add_subcommand("verify", "cross-check matrix, counting and closed-form ranks");
  std::string ver_p_list;
  std::int64_t ver_n_max = 0;
  ver->add_option("--p-list", ver_p_list, "comma-separated primes")->required();
  ver->add_option("--n-max", ver_n_max, "largest family parameter n")->required();
  ver->add_option("--format", ver_common.format)->check(CLI::IsMember({"table", "json", "csv"}));
  ver->add_option("--jobs", ver_common.jobs);
  ver->add_option("--max-genus", ver_common.max_genus, "genus guard");

  // sweep
  auto* sw = app.add_subcommand("sweep", "evaluate a closed-form family across p and s");
  std::string sw_family, sw_variant, sw_p_list, sw_s = "1..4";
  bool sw_no_matrix = false;
  sw->add_option("family", sw_family, "fermat or hurwitz")
      ->required()
      ->check(CLI::IsMember({"fermat", "hurwitz"}));
  sw->add_option("--variant", sw_variant, "sp+1, sp-1 (fermat) or sp, sp+1 (hurwitz)")
      ->required();
  sw->add_option("--p-list", sw_p_list, "comma-separated primes")->required();
  sw->add_option("--s", sw_s, "multiplier range a..b");
  sw->add_flag("--no-matrix", sw_no_matrix, "skip the matrix path");
  sw->add_option("--format", sw_common.format)->check(CLI::IsMember({"table", "json", "csv"}));
  sw->add_option("--jobs", sw_common.jobs);
  sw->add_option("--max-genus", sw_common.max_genus, "genus guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*inv) {
      if (inv_family != "general" && inv_p < 2) {
        throw std::invalid_argument("family curves need -p <prime>");
      }
      return cmd_invariants(inv_family, inv_p, inv_n, inv_file, inv_scan, inv_common);
    }
    if (*ver) return cmd_verify(ver_p_list, ver_n_max, ver_common);
    if (*sw) return cmd_sweep(sw_family, sw_variant, sw_p_list, sw_s, sw_no_matrix, sw_common);
    if (!goldens_dir.empty()) return cmd_seed_goldens(goldens_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand given (try --help)\n";
  return 2;
}
