// Catalog and CLI tests: builtin corpus shape, .grp round-trips and parse
// errors, and subprocess runs of the command-line tool.  The tool path comes
// as a trailing argument; without it the subprocess cases are skipped.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grp/catalog.hpp"
#include "grp/error.hpp"
#include "grp/subgroup.hpp"

using namespace grp;
namespace fs = std::filesystem;

namespace {

std::string g_tool;  // path to the CLI binary

std::string write_temp(const std::string& stem, const std::string& text) {
  fs::path p = fs::temp_directory_path() / (stem + ".grp");
  std::ofstream out(p);
  out << text;
  out.close();
  return p.string();
}

struct ToolRun {
  int code = -1;
  std::string out;
};

ToolRun run_tool(const std::string& args) {
  static int seq = 0;
  fs::path cap = fs::temp_directory_path() / ("grp_cli_" + std::to_string(seq++) + ".txt");
  std::string cmd = g_tool + " " + args + " > " + cap.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  ToolRun r;
  if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
  std::ifstream in(cap);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(cap);
  return r;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

void expect_parse_error(const std::string& text, int line, const std::string& fragment) {
  std::string f = write_temp("bad", text);
  try {
    load_group_file(f);
    FAIL("expected a parse error for: " << fragment);
  } catch (const ParseError& e) {
    CHECK(e.line == line);
    CHECK(has(e.what(), fragment));
  }
}

}  // namespace

TEST_CASE("the builtin catalog is sorted, tagged and split-checked") {
  std::vector<PreparedGroup> cat = builtin_catalog();
  CHECK(cat.size() == 52);
  std::set<std::string> names;
  for (size_t i = 0; i < cat.size(); ++i) {
    const PreparedGroup& pg = cat[i];
    CHECK(names.insert(pg.name).second);
    REQUIRE(pg.table != nullptr);
    CHECK(pg.source == "builtin");
    CHECK(pg.table->order >= 1);
    if (i + 1 < cat.size()) {
      const PreparedGroup& nx = cat[i + 1];
      bool ordered = pg.table->order < nx.table->order ||
                     (pg.table->order == nx.table->order && pg.name < nx.name);
      CHECK(ordered);
    }
    if (pg.split) {
      CHECK(pg.split->left.order() * pg.split->right.order() == pg.table->order);
      CHECK(is_normal(pg.split->left));
      CHECK(is_normal(pg.split->right));
    }
  }

  auto find = [&](const std::string& n) -> const PreparedGroup& {
    for (const PreparedGroup& pg : cat)
      if (pg.name == n) return pg;
    REQUIRE(false);
    return cat[0];
  };
  CHECK(find("C1").table->order == 1);
  CHECK(find("C1").generators.empty());
  CHECK(find("A5").tags == std::vector<std::string>{"simple"});
  CHECK(find("W294").tags == std::vector<std::string>{"counterexample"});
  CHECK(find("W294").table->order == 294);
  CHECK(find("Q16").table->order == 16);
  CHECK(find("SL23").table->order == 24);
  CHECK(find("E25").tags == std::vector<std::string>{"abelian"});
  CHECK(find("S3xS4").table->order == 144);
  CHECK(find("A5xC6").table->order == 360);
  for (const char* n : {"S3xC2", "S3xC5", "Q8xC3", "S4xC2", "S3xS4", "A5xC6"})
    CHECK(find(n).split.has_value());
}

TEST_CASE("the catalog cap filters by order") {
  std::vector<PreparedGroup> small = builtin_catalog(24);
  std::set<std::string> names;
  for (const PreparedGroup& pg : small) {
    CHECK(pg.table->order <= 24);
    names.insert(pg.name);
  }
  CHECK(names.count("S4") == 1);
  CHECK(names.count("SL23") == 1);
  CHECK(names.count("Q16") == 1);
  CHECK(names.count("A5") == 0);
  size_t expect = 0;
  for (const PreparedGroup& pg : builtin_catalog())
    if (pg.table->order <= 24) ++expect;
  CHECK(small.size() == expect);
}

TEST_CASE("serialize and reload round-trips every builtin entry") {
  for (const PreparedGroup& pg : builtin_catalog()) {
    CAPTURE(pg.name);
    std::string f = write_temp("rt_" + pg.name, serialize_group(pg));
    PreparedGroup rt = load_group_file(f, kHardOrderCap);
    CHECK(rt.name == pg.name);
    CHECK(rt.degree == pg.degree);
    CHECK(rt.source == f);
    REQUIRE(rt.table->order == pg.table->order);
    CHECK(rt.table->mul == pg.table->mul);
    fs::remove(f);
  }
}

TEST_CASE("a hand-written description file parses, comments and all") {
  std::string f = write_temp("sym3",
                             "# symmetric group on three points\n"
                             "name sym3   # trailing comment\n"
                             "\n"
                             "degree 3\n"
                             "  gen (0 1 2)\n"
                             "gen (0 1)\t\n");
  PreparedGroup pg = load_group_file(f);
  CHECK(pg.name == "sym3");
  CHECK(pg.degree == 3);
  CHECK(pg.generators.size() == 2);
  CHECK(pg.table->order == 6);
}

TEST_CASE("malformed description files are rejected with line numbers") {
  expect_parse_error("degree 3\ngen (0 1)\n", 2, "missing name line");
  expect_parse_error("name x\n", 1, "missing degree line");
  expect_parse_error("name x\nname y\ndegree 2\n", 2, "duplicate name line");
  expect_parse_error("name x\ndegree 2\ndegree 3\n", 3, "duplicate degree line");
  expect_parse_error("name x\ngen (0 1)\ndegree 3\n", 2, "gen line before the degree line");
  expect_parse_error("name x\ndegree abc\n", 2, "degree line needs an integer");
  expect_parse_error("name x\ndegree 12 monkeys\n", 2, "degree line needs an integer");
  expect_parse_error("name x\ndegree 0\n", 2, "degree out of range");
  expect_parse_error("name x\ndegree 3\nfoo bar\n", 3, "unknown key 'foo'");
  expect_parse_error("name\ndegree 3\n", 1, "name line needs a value");

  // Degree violations keep their dedicated type and the real line number.
  std::string f = write_temp("bad_deg", "name x\ndegree 3\ngen (0 5)\n");
  CHECK_THROWS_AS(load_group_file(f), DegreeMismatch);
  try {
    load_group_file(f);
  } catch (const DegreeMismatch& e) {
    CHECK(e.line == 3);
    CHECK(has(e.what(), "point 5 exceeds degree 3 (line 3)"));
  }

  std::string big = write_temp("bad_cap",
                               "name big\ndegree 8\ngen (0 1 2 3 4 5 6 7)\ngen (0 1)\n");
  CHECK_THROWS_AS(load_group_file(big, 100), OrderExceedsCap);

  CHECK_THROWS_AS(load_group_file("/nonexistent/nope.grp"), ParseError);
}

TEST_CASE("cli: info prints the radical profile") {
  if (g_tool.empty()) return;
  ToolRun r = run_tool("info S4");
  CHECK(r.code == 0);
  CHECK(has(r.out, "name S4\n"));
  CHECK(has(r.out, "order 24\n"));
  CHECK(has(r.out, "phi 1\n"));
  CHECK(has(r.out, "fit 4\n"));
  CHECK(has(r.out, "fstar 4\n"));
  CHECK(has(r.out, "ftilde 4\n"));
  CHECK(has(r.out, "stab_index 1\n"));
  CHECK(has(r.out, "classes soluble\n"));

  ToolRun cex = run_tool("info W294");
  CHECK(cex.code == 0);
  CHECK(has(cex.out, "tags counterexample\n"));
  CHECK(has(cex.out, "fit 49\n"));
}

TEST_CASE("cli: info accepts a description file") {
  if (g_tool.empty()) return;
  std::string f = write_temp("cli_sym3", "name sym3\ndegree 3\ngen (0 1 2)\ngen (0 1)\n");
  ToolRun r = run_tool("info " + f);
  CHECK(r.code == 0);
  CHECK(has(r.out, "name sym3\n"));
  CHECK(has(r.out, "order 6\n"));
  CHECK(has(r.out, "source " + f + "\n"));
}

TEST_CASE("cli: usage and lookup errors exit with code 2") {
  if (g_tool.empty()) return;
  CHECK(run_tool("info NoSuchGroup").code == 2);
  CHECK(run_tool("verify --checks radical-chain,no-such-check").code == 2);
  CHECK(run_tool("verify --format yaml").code == 2);
  CHECK(run_tool("probe gizmos").code == 2);
  CHECK(run_tool("frobnicate").code == 2);
  CHECK(run_tool("").code == 2);
  CHECK(run_tool("--help").code == 0);
  CHECK(run_tool("info sub.grp extra").code == 2);

  std::string bad = write_temp("cli_bad", "name x\ndegree 3\ngen (0 5)\n");
  ToolRun r = run_tool("info " + bad);
  CHECK(r.code == 2);
  CHECK(has(r.out, "parse error"));
}

TEST_CASE("cli: verify records are identical across worker counts") {
  if (g_tool.empty()) return;
  ToolRun serial = run_tool("verify --max-order 60 --format records --jobs 1");
  ToolRun parallel = run_tool("verify --max-order 60 --format records --jobs 4");
  CHECK(serial.code == 0);
  CHECK(parallel.code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(serial.out.size() > 1000);
  CHECK(has(serial.out, "group=A5 order=60 check_id=radicals status=holds"));
}

TEST_CASE("cli: a corpus file joins the verification corpus") {
  if (g_tool.empty()) return;
  std::string f = write_temp("cli_extra", "name sym3\ndegree 3\ngen (0 1 2)\ngen (0 1)\n");
  ToolRun r = run_tool("verify --corpus " + f +
                       " --max-order 12 --checks radical-chain --format records");
  CHECK(r.code == 0);
  CHECK(has(r.out, "group=sym3 order=6 check_id=radical-chain status=holds"));
}

TEST_CASE("cli: the probe summary reports the open questions") {
  if (g_tool.empty()) return;
  ToolRun r = run_tool("probe problems --max-order 294");
  CHECK(r.code == 0);
  CHECK(has(r.out, "probe-stabilization:"));
  CHECK(has(r.out, "probe-stable-nilpotency:"));
  CHECK(has(r.out, "probe-coprime-pairs:"));
  CHECK(has(r.out, "W294: supersoluble factors of orders 147 and 98"));
}

TEST_CASE("cli: the counterexample certificate prints and exits cleanly") {
  if (g_tool.empty()) return;
  ToolRun r = run_tool("counterexample");
  CHECK(r.code == 0);
  CHECK(has(r.out, "order 294 on 49 points"));
  CHECK(has(r.out, "fitting subgroup = translation subgroup, order 49"));
  CHECK(has(r.out, "factor A: order 147, supersoluble"));
  CHECK(has(r.out, "factor B: order 98, supersoluble"));
  CHECK(has(r.out, "A * B covers the whole group as a set product"));
  CHECK(has(r.out, "soluble, not supersoluble (chief factor of order 49)"));
  CHECK(has(r.out, "subnormal in, and conjugate-permutable in"));
}

TEST_CASE("cli: the order cap trims the builtin corpus") {
  if (g_tool.empty()) return;
  CHECK(run_tool("--cap 100 info A5xC6").code == 2);
  ToolRun r = run_tool("--cap 100 verify --checks radical-chain --format records");
  CHECK(r.code == 0);
  CHECK(!has(r.out, "group=A5xC6"));
  CHECK(has(r.out, "group=A5 "));
}

int main(int argc, char** argv) {
  std::vector<char*> args(argv, argv + argc);
  if (argc > 1 && argv[argc - 1][0] != '-' && fs::exists(argv[argc - 1])) {
    g_tool = argv[argc - 1];
    args.pop_back();
  }
  doctest::Context ctx(static_cast<int>(args.size()), args.data());
  return ctx.run();
}
