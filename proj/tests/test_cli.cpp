// End-to-end tests against the built CLI binary. The binary path
// arrives as the first program argument (see cli_main.cpp).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cartier/report.hpp"

extern std::string g_cli_path;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / ("cartier_cli_out_" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("cartier_cli_err_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd =
      g_cli_path + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult res;
#ifdef _WIN32
  res.exit_code = status;
#else
  res.exit_code = WEXITSTATUS(status);
#endif
  auto slurp = [](const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  res.out = slurp(out);
  res.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("invariants json carries the known fermat values and round-trips") {
  const RunResult res = run_cli("invariants fermat -p 3 -n 13 --format json");
  REQUIRE(res.exit_code == 0);
  const cartier::ReportDocument doc = cartier::report_from_json(res.out);
  CHECK(doc.family == "fermat");
  CHECK(doc.genus == 66);
  CHECK(doc.a_number == 30);
  CHECK(doc.p_rank == 21);
  CHECK(doc.cartier_rank == 36);
  CHECK(cartier::report_to_json(doc) == res.out);  // byte-identical re-emission
}

TEST_CASE("superspecial hurwitz curve is flagged") {
  const RunResult res = run_cli("invariants hurwitz -p 3 -n 3 --format json");
  REQUIRE(res.exit_code == 0);
  const cartier::ReportDocument doc = cartier::report_from_json(res.out);
  CHECK(doc.superspecial);
  CHECK(doc.cartier_rank == 0);
  CHECK(doc.a_number == 3);
}

TEST_CASE("table output is the default") {
  const RunResult res = run_cli("invariants fermat -p 5 -n 6");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("superspecial      true") != std::string::npos);
}

TEST_CASE("general file input reproduces the family report") {
  const fs::path file = fs::temp_directory_path() / "cartier_cli_fermat56.txt";
  {
    std::ofstream out(file);
    out << "# fermat n=6 over F_5\np 5\n1 6 0\n1 0 6\n1 0 0\n";
  }
  const RunResult gen = run_cli("invariants general --file " + file.string() + " --format json");
  const RunResult fam = run_cli("invariants fermat -p 5 -n 6 --format json");
  fs::remove(file);
  REQUIRE(gen.exit_code == 0);
  REQUIRE(fam.exit_code == 0);
  const auto gdoc = cartier::report_from_json(gen.out);
  const auto fdoc = cartier::report_from_json(fam.out);
  CHECK(gdoc.family == "general");
  CHECK_FALSE(gdoc.n.has_value());
  CHECK(gdoc.degree == fdoc.degree);
  CHECK(gdoc.genus == fdoc.genus);
  CHECK(gdoc.cartier_rank == fdoc.cartier_rank);
  CHECK(gdoc.a_number == fdoc.a_number);
  CHECK(gdoc.p_rank == fdoc.p_rank);
  CHECK(gdoc.nilpotency_index == fdoc.nilpotency_index);
  CHECK(gdoc.superspecial == fdoc.superspecial);
  CHECK(gdoc.ordinary == fdoc.ordinary);
}

TEST_CASE("invalid input exits with code 2 and one diagnostic line") {
  for (const std::string args :
       {std::string("invariants fermat -p 9 -n 4"), std::string("invariants fermat -p 3 -n 6"),
        std::string("invariants hurwitz -p 7 -n 3"),
        std::string("invariants general --file /nonexistent/x.txt"),
        std::string("invariants fermat -n 4"), std::string("sweep fermat --variant bogus"
                                                           " --p-list 3")}) {
    const RunResult res = run_cli(args);
    CAPTURE(args);
    CHECK(res.exit_code == 2);
    CHECK(res.err.rfind("error: ", 0) == 0);
    CHECK(lines_of(res.err).size() == 1);
  }
}

TEST_CASE("malformed curve files report the offending line") {
  const fs::path file = fs::temp_directory_path() / "cartier_cli_bad.txt";
  {
    std::ofstream out(file);
    out << "p 5\n1 2\n";
  }
  const RunResult res = run_cli("invariants general --file " + file.string());
  fs::remove(file);
  CHECK(res.exit_code == 2);
  CHECK(res.err.find(":2:") != std::string::npos);
}

TEST_CASE("verify agrees on a small grid and exits zero") {
  const RunResult res = run_cli("verify --p-list 2,3,5 --n-max 11 --format csv");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() > 1);
  CHECK(lines[0] == cartier::csv_header());
  for (std::size_t t = 1; t < lines.size(); ++t) {
    const auto cells = split_csv(lines[t]);
    REQUIRE(cells.size() == 11);
    CHECK(cells[10] == "true");
  }
}

TEST_CASE("verify covers out-of-family cells with a null closed column") {
  const RunResult res = run_cli("verify --p-list 5 --n-max 7 --format csv");
  REQUIRE(res.exit_code == 0);
  bool saw_null_closed = false;
  for (const std::string& line : lines_of(res.out)) {
    const auto cells = split_csv(line);
    if (cells.size() == 11 && cells[0] == "fermat" && cells[2] == "7") {
      CHECK(cells[7].empty());  // rank_closed
      CHECK(cells[10] == "true");
      saw_null_closed = true;
    }
  }
  CHECK(saw_null_closed);
}

TEST_CASE("verify includes the large fermat cell with rank 36") {
  const RunResult res = run_cli("verify --p-list 3 --n-max 13 --format csv");
  REQUIRE(res.exit_code == 0);
  bool found = false;
  for (const std::string& line : lines_of(res.out)) {
    const auto cells = split_csv(line);
    if (cells.size() == 11 && cells[0] == "fermat" && cells[1] == "3" && cells[2] == "13") {
      CHECK(cells[5] == "36");
      CHECK(cells[6] == "36");
      CHECK(cells[7] == "36");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("sweep emits the closed-form columns in (p, s) order") {
  const RunResult res = run_cli("sweep fermat --variant sp+1 --p-list 3 --s 1..4 --format csv");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 5);
  std::vector<std::string> a_numbers;
  for (std::size_t t = 1; t < lines.size(); ++t) a_numbers.push_back(split_csv(lines[t])[8]);
  CHECK(a_numbers == std::vector<std::string>{"3", "9", "18", "30"});
}

TEST_CASE("sweep rank column for the fermat sp-1 family at p = 5") {
  const RunResult res = run_cli("sweep fermat --variant sp-1 --p-list 5 --s 1..4 --format csv");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 5);
  std::vector<std::string> ranks;
  for (std::size_t t = 1; t < lines.size(); ++t) ranks.push_back(split_csv(lines[t])[7]);
  CHECK(ranks == std::vector<std::string>{"3", "18", "48", "93"});
}

TEST_CASE("sweep a-number column for the hurwitz sp family at p = 5") {
  const RunResult res = run_cli("sweep hurwitz --variant sp --p-list 5 --s 1..3 --format csv");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 4);
  std::vector<std::string> a_numbers;
  for (std::size_t t = 1; t < lines.size(); ++t) a_numbers.push_back(split_csv(lines[t])[8]);
  CHECK(a_numbers == std::vector<std::string>{"10", "30", "60"});
}

TEST_CASE("sweep --no-matrix leaves the matrix columns null") {
  const RunResult res =
      run_cli("sweep hurwitz --variant sp+1 --p-list 3 --s 1..2 --no-matrix --format csv");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 3);
  for (std::size_t t = 1; t < lines.size(); ++t) {
    const auto cells = split_csv(lines[t]);
    CHECK(cells[5].empty());  // rank_matrix
    CHECK(cells[9].empty());  // p_rank
    CHECK_FALSE(cells[7].empty());
  }
}

TEST_CASE("sweep json rows are one object per line") {
  const RunResult res = run_cli("sweep fermat --variant sp+1 --p-list 3 --s 1..2 --format json");
  REQUIRE(res.exit_code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("\"s\":1") != std::string::npos);
  CHECK(lines[1].find("\"s\":2") != std::string::npos);
}

TEST_CASE("genus guard rejects oversized grids until overridden") {
  const RunResult blocked = run_cli("sweep fermat --variant sp+1 --p-list 7 --s 30..30");
  CHECK(blocked.exit_code == 2);
  CHECK(blocked.err.find("max-genus") != std::string::npos);

  const RunResult allowed = run_cli(
      "sweep fermat --variant sp+1 --p-list 7 --s 30..30 --no-matrix --max-genus 25000"
      " --format csv");
  CHECK(allowed.exit_code == 0);
}

TEST_CASE("singular scan flag rejects a degenerate model") {
  const fs::path file = fs::temp_directory_path() / "cartier_cli_degenerate.txt";
  {
    // (x^2 + y^2 + 1)^2 over F_5
    std::ofstream out(file);
    out << "p 5\n1 4 0\n2 2 2\n1 0 4\n2 2 0\n2 0 2\n1 0 0\n";
  }
  const RunResult res = run_cli("invariants general --file " + file.string() +
                                " --scan-singular 1");
  fs::remove(file);
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("singular point") != std::string::npos);
}

TEST_SUITE_END();
