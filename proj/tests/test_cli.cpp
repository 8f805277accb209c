#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "permpath/cli.hpp"
#include "permpath/errors.hpp"
#include "permpath/json_io.hpp"

using namespace permpath;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count") {
  auto r = run({"count", "--family", "p321-2", "--n", "6", "--mode", "both"});
  CHECK(r.code == 0);
  CHECK(r.out == "133 / 133 / match\n");

  r = run({"count", "--family", "simion-schmidt", "--n", "1"});
  CHECK(r.out == "1\n");

  r = run({"count", "--family", "p132-1", "--n", "20", "--mode", "formula"});
  CHECK(r.out == "15905368710\n");

  r = run({"count", "--family", "p132-1", "--n", "20", "--mode", "oracle"});
  CHECK(r.code == cli::kResource);

  r = run({"count", "--family", "p999", "--n", "4"});
  CHECK(r.code == cli::kUsage);

  r = run({"count", "--family", "p321-1", "--n", "5", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["formula"] == 27);
  CHECK(j["family"] == "p321-1");
}

TEST_CASE("cap overrides") {
  auto r = run({"--perm-cap", "5", "count", "--family", "p321-1", "--n", "6", "--mode", "oracle"});
  CHECK(r.code == cli::kResource);
  r = run({"count", "--family", "p321-1", "--n", "6", "--mode", "oracle", "--perm-cap", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "110\n");
}

TEST_CASE("biject") {
  auto r = run({"biject", "--name", "kratt", "--input", "2 1 4 7 3 5 6"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"UUDDUUDUUUDDDD", "ascents: 2 2 3", "descents: 2 1 4"});

  r = run({"biject", "--name", "kratt", "--input", "3 2 1"});
  CHECK(r.code == cli::kDomain);
  CHECK(r.err.find("321") != std::string::npos);

  r = run({"biject", "--name", "one321", "--input", "3 2 1"});
  CHECK(lines(r.out) == std::vector<std::string>{"rho: 2 1", "sigma: 2 1", "b: 2"});

  r = run({"biject", "--name", "one321", "--input", "3 2 1", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(json::decode_decomposition(j["output"]) ==
        Decomposition{Permutation{2, 1}, Permutation{2, 1}, 2});

  r = run({"biject", "--name", "one321", "--inverse", "--input", j["output"].dump()});
  CHECK(r.out == "3 2 1\n");
  r = run({"biject", "--name", "one321", "--inverse", "--input", "2 1", "--sigma", "2 1", "--param", "2"});
  CHECK(r.out == "3 2 1\n");

  r = run({"biject", "--name", "kratt-inv", "--input", "UUDDUUDUUUDDDD"});
  CHECK(r.out == "2 1 4 7 3 5 6\n");
}

TEST_CASE("biject roundtrip for every map") {
  const std::vector<std::vector<std::string>> cases = {
      {"kratt", "2 1 4 7 3 5 6"}, {"kratt-inv", "UUDUDD"},  {"lemma11", "2 4 3 1"},
      {"lemma12", "2 4 1 3"},     {"prop14", "2 4 1 3"},    {"one321", "3 2 1"},
      {"two321-b", "3 4 2 1 5"},  {"two321-k", "4 2 3 1"},  {"phi", "2 1 3 4 5", "2"},
      {"returns", "UUDUDD"},      {"nonfinal", "UDUDUUDD", "1"},
  };
  for (const auto& c : cases) {
    std::vector<std::string> args{"biject", "--name", c[0], "--input", c[1], "--roundtrip"};
    if (c.size() > 2) args.insert(args.end(), {"--param", c[2]});
    const auto r = run(args);
    INFO(c[0] << ": " << r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("roundtrip: ok") != std::string::npos);
  }
}

TEST_CASE("biject inverse from text input") {
  auto r = run({"biject", "--name", "lemma11", "--inverse", "--input", "2 1", "--param", "1"});
  CHECK(r.out == "2 4 3 1\n");
  r = run({"biject", "--name", "returns", "--inverse", "--input", "UDUD", "--param", "1"});
  CHECK(r.out == "UUDUDD\nascents: 2 1\ndescents: 1 2\n");
  r = run({"biject", "--name", "phi", "--input", "2 1 3 4 5"});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("table") {
  auto r = run({"table", "--family", "p321-1", "--nmax", "8"});
  CHECK(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 9);
  CHECK(l[0] == "n,family,formula,oracle,match");
  CHECK(l[4] == "4,p321-1,6,,");
  CHECK(l[8] == "8,p321-1,1638,,");

  r = run({"table", "--family", "p321-2", "--nmin", "4", "--nmax", "6", "--mode", "both"});
  CHECK(lines(r.out).back() == "6,p321-2,133,133,match");

  r = run({"table", "--family", "p132-1", "--nmax", "4", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[3]["formula"] == 5);
  CHECK(j[3]["oracle"].is_null());
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--n", "3", "--filter", "pattern(2 1)==1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"1 3 2", "2 1 3"});

  r = run({"enumerate", "--n", "4", "--filter", "pattern(321)==0 && first>=3 && last_inc(2)"});
  for (const auto& l : lines(r.out)) {
    const auto p = parse_permutation(l);
    CHECK(p.first() >= 3);
    CHECK(p.at(3) < p.at(4));
  }

  r = run({"enumerate", "--n", "3", "--filter", "height<=2"});
  CHECK(lines(r.out).size() == 4);

  r = run({"enumerate", "--n", "3", "--object", "dyck"});
  CHECK(lines(r.out).size() == 5);

  r = run({"enumerate", "--n", "4", "--filter-preset", "p321-1"});
  CHECK(lines(r.out).size() == 6);

  r = run({"enumerate", "--n", "3", "--filter", "pos_of_max<=1", "--format", "json"});
  CHECK(lines(r.out) == std::vector<std::string>{"[3,1,2]", "[3,2,1]"});
}

TEST_CASE("filter errors carry a column") {
  auto r = run({"enumerate", "--n", "3", "--filter", "first>=2 && lst_inc(2)"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("column 13") != std::string::npos);

  r = run({"enumerate", "--n", "3", "--filter", "pattern(2 1)=1"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("column 13") != std::string::npos);

  cli::ParsedFilter f;
  CHECK_THROWS_AS(cli::parse_filter("", f), InvalidInput);
  CHECK_THROWS_AS(cli::parse_filter("first>=2 &&", f), InvalidInput);
  CHECK_THROWS_AS(cli::parse_filter("pattern(12345)==0", f), InvalidInput);
  cli::ParsedFilter g;
  CHECK_NOTHROW(cli::parse_filter(" pattern( 132 )==1&&pos_of_max<=3 ", g));
  CHECK(g.perm_atoms == 2);

  r = run({"enumerate", "--n", "3", "--filter", "height<=1 && first>=2"});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "identities", "--nmax", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"verify", "--suite", "nope"});
  CHECK(r.code == cli::kUsage);
}

TEST_CASE("out file") {
  const std::string path = "permpath_cli_out.txt";
  auto r = run({"--out", path, "count", "--family", "p321-2", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "133");
  std::remove(path.c_str());
}

TEST_CASE("usage") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"count", "--n", "3"}).code == cli::kUsage);
}

}
