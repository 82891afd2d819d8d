#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using crosscount::cli::run_command;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST_CASE("cross on a file") {
  const auto path = write_temp("crosscount_aaab.txt", "aaab");
  const Result r = run({"cross", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "1\t4\n2\t5\n3\t6\n4\t4\n");
  const Result v = run({"cross", "--verbose", path.string()});
  CHECK(v.out == "1\t4\t0\n2\t5\t1\n3\t6\t0\n4\t4\t0\n");
}

TEST_CASE("runs from standard input") {
  const Result r = run({"runs", "-"}, "abaabab");
  CHECK(r.code == 0);
  CHECK(r.out == "1\t6\t3\n3\t4\t1\n4\t7\t2\n");
}

TEST_CASE("json and tsv carry the same numbers") {
  const Result tsv = run({"both", "-"}, "aaab");
  const Result js = run({"both", "--format", "json", "-"}, "aaab");
  REQUIRE(js.code == 0);
  CHECK(tsv.out == "1\t4\t5\n2\t5\t3\n3\t6\t3\n4\t4\t3\n");
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["C"] == nlohmann::json::array({4, 5, 6, 4}));
  CHECK(doc["N"] == nlohmann::json::array({5, 3, 3, 3}));
}

TEST_CASE("unordered mode reports equality tests") {
  const Result r = run({"noncross", "--mode", "unordered", "-"}, "aaab");
  CHECK(r.code == 0);
  CHECK(r.out == "1\t5\n2\t3\n3\t3\n4\t3\n");
  CHECK(r.err.find("# equality tests:") != std::string::npos);
}

TEST_CASE("tables") {
  const Result r = run({"tables", "-"}, "aaab");
  CHECK(r.code == 0);
  CHECK(r.out == "1\t0\t2\n2\t1\t1\n3\t1\t0\n4\t0\t0\n");
}

TEST_CASE("verify passes and prints its seed") {
  const Result r = run({"verify", "--trials", "100", "--max-n", "64", "--seed", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("seed: 5") != std::string::npos);
}

TEST_CASE("gen") {
  const Result r = run({"gen", "--kind", "fibonacci", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "abaababa");
  CHECK(run({"gen", "--kind", "bogus", "--n", "8"}).code == 2);
}

TEST_CASE("bench emits a csv row per size") {
  const Result r = run({"bench", "--min-n", "256", "--max-n", "1024"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    rows += !line.empty() && line[0] != '#' && line[0] != 'n';
  }
  CHECK(rows == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"cross", "--format", "xml", "-"}, "ab").code == 2);
  CHECK(run({"cross", "/nonexistent/file"}).code == 2);
  CHECK(run({"cross", "--max-bytes", "2", "-"}, "abc").code == 2);
  CHECK(run({"--help"}).code == 0);
}
