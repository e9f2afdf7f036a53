#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dgmzv/commands.hpp"

using namespace dgmzv;

namespace {

RunConfig config(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

std::string param(const Table& t, const std::string& key) {
  for (const auto& [k, v] : t.params)
    if (k == key) return v;
  return {};
}

bool has_row(const Table& t, const std::vector<std::string>& row) {
  return std::find(t.rows.begin(), t.rows.end(), row) != t.rows.end();
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(DGMZV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("table writers: TSV and JSON carry the same data") {
  Table t;
  t.command = "demo";
  t.params = {{"max_weight", "12"}, {"name", "f12"}};
  t.columns = {"exponent", "coefficient"};
  t.add_row({"8,2", "1"});
  t.add_row({"6,4", "-3/7"});
  t.add_row({"0", "007"});
  CHECK(to_tsv(t) == "# demo\tmax_weight=12\tname=f12\n# exponent\tcoefficient\n8,2\t1\n6,4\t-3/7\n0\t007\n");
  CHECK(parse_tsv(to_tsv(t)) == t);
  CHECK(parse_json(to_json(t)) == t);
  CHECK(to_json(t).find("\"coefficient\": 1") != std::string::npos);
  CHECK(to_json(t).find("\"coefficient\": \"007\"") != std::string::npos);
  CHECK(render(t, "tsv") == to_tsv(t));
  CHECK_THROWS(render(t, "xml"));
  Table bad = t;
  bad.add_row({"a\tb", "1"});
  CHECK_THROWS(to_tsv(bad));
  CHECK_THROWS(t.add_row({"only one"}));
  CHECK_THROWS(parse_tsv("no header\n"));
  CHECK_THROWS(parse_json("{"));
}

TEST_CASE("dims") {
  RunConfig c = config("dims");
  c.max_weight = 12;
  c.max_depth = 4;
  const auto out = run_command(c);
  CHECK(out.exit_code == exit_ok);
  REQUIRE(out.table.columns == std::vector<std::string>{"N", "r", "dim"});
  CHECK(has_row(out.table, {"12", "4", "1"}));
  CHECK(has_row(out.table, {"12", "2", "1"}));
  for (const auto& row : out.table.rows)
    if ((std::stoi(row[0]) - std::stoi(row[1])) % 2) CHECK(row[2] == "0");

  c.max_weight = 13;
  c.max_depth = 1;
  const auto d1 = run_command(c);
  REQUIRE(d1.table.rows.size() == 13);
  for (const auto& row : d1.table.rows) {
    const int N = std::stoi(row[0]);
    CHECK(row[2] == ((N % 2 && N >= 3) ? "1" : "0"));
  }
}

TEST_CASE("exceptional") {
  RunConfig c = config("exceptional");
  c.weight = 12;
  const auto e12 = run_command(c);
  CHECK(e12.exit_code == exit_ok);
  CHECK(param(e12.table, "terms:f12") == "118");
  CHECK(e12.table.rows.size() == 118);
  CHECK(has_row(e12.table, {"f12", "0,0,7,1", "1"}));
  CHECK(has_row(e12.table, {"f12", "3,2,2,1", "-116"}));
  CHECK(has_row(e12.table, {"f12", "2,5,0,1", "-57"}));

  c.weight = 14;
  const auto e14 = run_command(c);
  CHECK(e14.exit_code == exit_domain);
  CHECK(e14.message.find("dim S = 0") != std::string::npos);

  c.weight = 24;
  c.generator = GeneratorChoice::canonical;
  const auto e24 = run_command(c);
  CHECK(e24.exit_code == exit_ok);
  std::vector<std::string> names;
  for (const auto& row : e24.table.rows)
    if (names.empty() || names.back() != row[0]) names.push_back(row[0]);
  CHECK(names == std::vector<std::string>{"S24[0]", "S24[1]"});

  c.weight = 13;
  CHECK_THROWS_AS(run_command(c), UsageError);
}

TEST_CASE("bk-check") {
  RunConfig c = config("bk-check");
  c.max_weight = 16;
  c.max_depth = 3;
  const auto ls = run_command(c);
  CHECK(ls.exit_code == exit_ok);
  CHECK(param(ls.table, "result") == "pass");
  CHECK_FALSE(ls.table.rows.empty());

  c.target = "odd";
  c.max_weight = 21;
  c.max_depth = 5;
  const auto odd = run_command(c);
  CHECK(odd.exit_code == exit_ok);
  CHECK(param(odd.table, "result") == "pass");
  REQUIRE(odd.table.columns == std::vector<std::string>{"weight", "depth", "rank", "predicted", "status"});
  CHECK(has_row(odd.table, {"21", "5", "31", "31", "ok"}));
  CHECK(has_row(odd.table, {"12", "2", "3", "3", "ok"}));

  c.target = "full-t1";
  c.max_weight = 20;
  const auto full = run_command(c);
  CHECK(full.exit_code == exit_ok);
  CHECK(param(full.table, "result") == "pass");

  c.target = "bogus";
  CHECK_THROWS_AS(run_command(c), UsageError);
}

TEST_CASE("bracket, express, period, span") {
  RunConfig b = config("bracket");
  b.left = "x2";
  b.right = "x8";
  const auto br = run_command(b);
  CHECK(param(br.table, "terms") == "8");
  CHECK(param(br.table, "double_shuffle") == "pass");
  b.right = "x3";
  CHECK_THROWS_AS(run_command(b), UsageError);

  RunConfig x = config("express");
  const auto ex = run_command(x);
  CHECK(ex.exit_code == exit_ok);
  CHECK(has_row(ex.table, {"4,3,3,2", "0", "-116"}));
  CHECK(has_row(ex.table, {"3,6,1,2", "0", "-57"}));
  CHECK(has_row(ex.table, {"1,1,8,2", "0", "1"}));

  RunConfig p = config("period");
  p.max_weight = 30;
  const auto pe = run_command(p);
  for (const auto& row : pe.table.rows) CHECK(row.back() == "ok");
  CHECK(has_row(pe.table, {"24", "3", "2", "2", "ok"}));

  RunConfig s = config("span");
  s.max_weight = 12;
  s.max_depth = 4;
  const auto sp = run_command(s);
  CHECK(has_row(sp.table, {"12", "4", "0", "1", "1"}));
  CHECK(has_row(sp.table, {"12", "2", "1", "1", "0"}));
}

TEST_CASE("bounds and configuration errors") {
  RunConfig c = config("dims");
  c.max_weight = 99;
  CHECK_THROWS_AS(run_command(c), UsageError);
  c = config("dims");
  c.jobs = 0;
  CHECK_THROWS_AS(run_command(c), UsageError);
  c = config("dims");
  c.format = "xml";
  CHECK_THROWS_AS(run_command(c), UsageError);
  CHECK_THROWS_AS(run_command(config("frobnicate")), UsageError);
}

TEST_CASE("output is identical across parallelism degrees") {
  for (const auto* cmd : {"dims", "bk-check"}) {
    RunConfig c = config(cmd);
    c.max_weight = 16;
    c.max_depth = 4;
    c.jobs = 1;
    const std::string one = render(run_command(c).table, "tsv");
    c.jobs = 3;
    CHECK(render(run_command(c).table, "tsv") == one);
    CHECK(render(run_command(c).table, "tsv") == one);
  }
}

TEST_CASE("the executable: exit codes, formats, output file") {
  const auto dims = run_cli("dims --max-weight 12 --max-depth 4");
  CHECK(dims.status == 0);
  CHECK(dims.out.find("\n12\t4\t1\n") != std::string::npos);
  CHECK(parse_tsv(dims.out).rows.size() == 42);

  const auto js = run_cli("dims --max-weight 12 --max-depth 4 --format json --jobs 2");
  CHECK(js.status == 0);
  CHECK(parse_json(js.out) == parse_tsv(dims.out));

  CHECK(run_cli("exceptional --weight 14").status == 1);
  CHECK(run_cli("exceptional --weight 12").status == 0);
  CHECK(run_cli("dims --max-weight 99").status == 2);
  CHECK(run_cli("dims --no-such-flag").status == 2);
  CHECK(run_cli("nonsense").status == 2);
  CHECK(run_cli("dims --jobs 0").status == 2);
  CHECK(run_cli("bk-check --target full-t1 --max-weight 20").status == 0);

  const std::string path = "cli_test_output.tsv";
  CHECK(run_cli("dims --max-weight 12 --max-depth 4 --output " + path).status == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == dims.out);
  std::remove(path.c_str());
}
