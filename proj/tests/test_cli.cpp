#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stripwalk/cli.hpp"

using namespace stripwalk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("gf") {
  auto r = run({"gf", "--model", "basketball", "--width", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "num: 1 - 3z - 5z^2 - 2z^3 + z^4\nden: 1 - 4z - 6z^2 + 2z^3\n");

  r = run({"gf", "--model", "soccer", "--width", "1"});
  CHECK(r.out == "num: 1\nden: 1 - z\n");

  r = run({"gf", "--model", "basketball", "--width", "0"});
  CHECK(r.out == "num: 1\nden: 1\n");

  r = run({"gf", "--model", "basketball", "--width", "4", "--method", "linear"});
  CHECK(r.out == "num: 1 - 3z - 5z^2 - 2z^3 + z^4\nden: 1 - 4z - 6z^2 + 2z^3\n");
}

TEST_CASE("gf of an odd function falls back to t with a notice") {
  const auto r = run({"gf", "--width", "2", "--function", "G"});
  CHECK(r.code == 0);
  CHECK(r.out == "num: t\nden: 1 - 3t^2\n");
  CHECK(r.err.find("note:") != std::string::npos);
  CHECK(run({"gf", "--width", "2", "--function", "G", "--var", "z"}).code == 2);
}

TEST_CASE("gf json and ranges") {
  auto r = run({"gf", "--width", "2", "--format", "json"});
  const json j = json::parse(r.out);
  CHECK(j["den"]["var"] == "z");
  CHECK(j["den"]["coeffs"] == json({"1", "-2", "-3"}));
  CHECK(j["num"]["coeffs"] == json({"1", "-1"}));

  r = run({"gf", "--width", "0..2"});
  CHECK(lines(r.out) == std::vector<std::string>{"w=0", "num: 1", "den: 1", "w=1", "num: 1", "den: 1 - z", "w=2",
                                                 "num: 1 - z", "den: 1 - 2z - 3z^2"});
}

TEST_CASE("series") {
  CHECK(run({"series", "--model", "basketball", "--width", "2", "--terms", "6"}).out == "1 1 5 13 41 121\n");
  CHECK(run({"series", "--model", "soccer", "--width", "1", "--terms", "4"}).out == "1 1 1 1\n");
  CHECK(run({"series", "--model", "basketball", "--width", "0", "--terms", "3"}).out == "1 0 0\n");
  CHECK(run({"series", "--width", "5", "--terms", "12", "--method", "oracle"}).out ==
        run({"series", "--width", "5", "--terms", "12"}).out);
  CHECK(run({"series", "--width", "2", "--terms", "3", "--format", "bfile"}).out == "0 1\n1 1\n2 5\n");

  const auto odd = run({"series", "--model", "general-p", "--p", "1", "--width", "2", "--terms", "5"});
  CHECK(odd.code == 0);
  CHECK(odd.err.find("note:") != std::string::npos);
}

TEST_CASE("table") {
  const auto r = run({"table", "--model", "basketball", "--max-width", "3", "--terms", "5"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[1] == "w=0: 1 0 0 0 0");
  CHECK(ls[2] == "w=1: 1 1 1 1 1");
  CHECK(ls[3] == "w=2: 1 1 5 13 41");

  const json j = json::parse(run({"table", "--max-width", "6", "--terms", "3", "--format", "json"}).out);
  for (std::size_t w = 1; w <= 6; ++w) CHECK(j["rows"][w]["coeffs"][1] == "1");
}

TEST_CASE("stabilized") {
  CHECK(run({"stabilized", "--model", "soccer", "--terms", "6"}).out == "1 1 2 5 14 42\n");
  CHECK(run({"stabilized", "--model", "basketball", "--terms", "3"}).out == "1 1 5\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--which", "theorem1", "--max-width", "10"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["ok"] == true);
  REQUIRE(j["checks"].size() == 7);
  CHECK(j["checks"][0]["w"] == 4);
  CHECK(j["checks"][0]["residual_degree"].is_null());

  r = run({"verify", "--which", "theorem1", "--max-width", "5", "--min-width", "3"});
  j = json::parse(r.out);
  CHECK(r.code == 0);
  CHECK(j["checks"][0]["applicable"] == false);

  r = run({"verify", "--which", "decompositions", "--max-width", "6", "--terms", "10"});
  CHECK(r.code == 0);

  r = run({"verify", "--which", "theorem2", "--p", "2", "--max-width", "8"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["notes"][0] == "theorem2 at p=2 reduces to theorem1");

  for (const char* which : {"theorem3", "soccer", "structure", "oracle"}) {
    CAPTURE(which);
    CHECK(run({"verify", "--which", which, "--max-width", "8", "--terms", "8"}).code == 0);
  }
}

TEST_CASE("structure report records the width-2 denominator finding") {
  const json j = json::parse(run({"verify", "--which", "structure", "--max-width", "3"}).out);
  CHECK(j["ok"] == true);
  int failures = 0;
  for (const auto& f : j["findings"]) {
    if (f["kind"] == "shared_denominator" && f["holds"] == false) {
      ++failures;
      CHECK(f["w"] == 2);
      CHECK(f["den_G"] == "1 - 3z");
    }
  }
  CHECK(failures == 1);
}

TEST_CASE("verify exits 1 when an initial denominator is corrupted") {
  const auto path = std::filesystem::temp_directory_path() / "stripwalk_bad_seed.json";
  {
    std::ofstream f(path);
    f << R"([{"var":"z","coeffs":["1"]},{"var":"z","coeffs":["1","-1"]},{"var":"z","coeffs":["1","-2","-4"]},)"
      << R"({"var":"z","coeffs":["1","-3","-5","-2","1"]},{"var":"z","coeffs":["1","-4","-6","2"]}])";
  }
  const auto r = run({"verify", "--which", "theorem3", "--max-width", "8", "--az-initial", path.string()});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["ok"] == false);

  // the genuine table passes
  {
    std::ofstream f(path);
    f << R"([{"var":"z","coeffs":["1"]},{"var":"z","coeffs":["1","-1"]},{"var":"z","coeffs":["1","-2","-3"]},)"
      << R"({"var":"z","coeffs":["1","-3","-5","-2","1"]},{"var":"z","coeffs":["1","-4","-6","2"]}])";
  }
  CHECK(run({"verify", "--which", "theorem3", "--max-width", "8", "--az-initial", path.string()}).code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"gf", "--model", "basketball", "--width", "inf"}).code == 2);
  CHECK(run({"gf", "--model", "basketball", "--p", "2", "--width", "1"}).code == 2);
  CHECK(run({"gf", "--model", "general-p", "--width", "1"}).code == 2);
  CHECK(run({"gf", "--model", "hockey", "--width", "1"}).code == 2);
  CHECK(run({"gf", "--width", "3..1"}).code == 2);
  CHECK(run({"series", "--width", "2", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--which", "everything"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--az-initial", "/nonexistent/seed.json"}).code == 2);
  const auto r = run({"gf", "--width", "inf"});
  CHECK(r.err.find("stabilized") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"verify", "--which", "all", "--max-width", "6", "--terms", "6"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> table{"table", "--max-width", "9", "--terms", "9", "--format", "json"};
  CHECK(run(table).out == run(table).out);
}
