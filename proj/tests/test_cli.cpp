#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fqpts/cli.hpp"
#include "support.hpp"

using namespace fqpts;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return testing::data_path(name).string(); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::map<std::string, std::string> key_values(const std::string& csv) {
  std::map<std::string, std::string> out;
  for (const auto& line : lines(csv)) {
    const auto comma = line.find(',');
    out[line.substr(0, comma)] = line.substr(comma + 1);
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count") {
    CHECK(run({"count", data("cone13.var")}).out == "183\n");
    CHECK(run({"count", data("cone2.var"), "--ext", "2"}).out == "21\n");
    const auto empty = run({"count", data("empty2.var")});
    CHECK(empty.code == 0);
    CHECK(empty.out == "0\n");
    CHECK(empty.err.find("warning") != std::string::npos);
  }

  TEST_CASE("verify the cone over F_13") {
    const auto r = run({"verify", data("cone13.var")});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "estimate,deviation,rhs,rhs_ceil,applicable,verdict");
    CHECK(rows[4] == "hooley-katz,0,1.79446673934e+02,180,true,PASS");
    CHECK(rows[2] == "deligne,0,,,false,N-A");
  }

  TEST_CASE("verify across the data files") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"fermat5.var"},
                                                                  {"fermat13.var"},
                                                                  {"conic9.var"},
                                                                  {"cone2.var"},
                                                                  {"two_quadrics7.var"},
                                                                  {"quadric3.var", "--betti", "1"},
                                                                  {"point2.var", "--betti", "0"},
                                                                  {"empty2.var", "--betti", "1"}}) {
      std::vector<std::string> full{"verify", data(args[0])};
      full.insert(full.end(), args.begin() + 1, args.end());
      CAPTURE(args[0]);
      CHECK(run(full).code == 0);
    }
  }

  TEST_CASE("a wrong Betti number fails verification") {
    const auto r = run({"verify", data("fermat13.var"), "--betti", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("deligne,5,0.00000000000e+00,0,true,FAIL") != std::string::npos);
  }

  TEST_CASE("bounds") {
    const auto r = run({"bounds", data("cone13.var")});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "estimate,rhs,applicable,condition");
    CHECK(rows[1] == "cmp,7.28000000000e+02,true,s = r-2 and r >= 2");
    CHECK(rows[3] == "gl,1.46250000000e+05,true,valid without restriction on q");
    CHECK(run({"bounds", data("quadric3.var")}).code == 2);
  }

  TEST_CASE("second moment and census") {
    const auto m = run({"second-moment", data("cone2.var"), "--s", "0"});
    CHECK(m.code == 0);
    CHECK(m.out == "computed=112 lemma=112 EQUAL\n");
    const auto c = run({"hooley-census", data("cone3.var"), "--s", "0"});
    CHECK(c.out == "satisfying=62 total=81 HALF_MASS\n");
    CHECK(run({"second-moment", data("cone2.var")}).code == 2);
  }

  TEST_CASE("eta") {
    const auto r = run({"eta", "--q", "2", "--d", "1,1", "--n", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "12\n");
    CHECK(run({"eta", "--q", "5", "--d", "2", "--n", "2"}).out == "50\n");
    CHECK(run({"eta", "--q", "5", "--d", "2,1", "--n", "2"}).code == 2);
  }

  TEST_CASE("bertini scan report") {
    const auto r = run({"bertini-scan", data("cone13.var")});
    CHECK(r.code == 0);
    auto kv = key_values(r.out);
    CHECK(kv["key"] == "value");
    CHECK(kv["pass"] == "26364");
    CHECK(kv["fail"] == "2196");
    CHECK(kv["degenerate"] == "1");
    CHECK(std::stoull(kv["pass"]) + std::stoull(kv["fail"]) + std::stoull(kv["degenerate"]) == std::stoull(kv["total"]));
    CHECK(kv["floor"] == "15379");
    CHECK(kv["eta_ceiling"] == "13182");
    CHECK(kv["fail_witness_1"] == "\"gamma=(0,0,1,0) at (0,0,0,1) over e=1\"");
    CHECK(kv.count("fail_witness_10") == 1);
    CHECK(kv.count("fail_witness_11") == 0);

    const auto proj = key_values(run({"bertini-scan", data("cone13.var"), "--mode", "projective"}).out);
    CHECK(proj.at("fail") == "183");
    CHECK(run({"bertini-scan", data("cone13.var"), "--mode", "sideways"}).code == 2);
    CHECK(run({"bertini-scan", data("fermat5.var")}).code == 2);
  }

  TEST_CASE("CSV output is byte identical across worker counts") {
    const auto dir = std::filesystem::temp_directory_path() / "fqpts_cli_test";
    std::filesystem::create_directories(dir);
    for (const auto& cmd : std::vector<std::vector<std::string>>{{"bertini-scan", data("cone13.var")},
                                                                 {"bertini-scan", data("cone5.var"), "--mode", "projective"},
                                                                 {"verify", data("cone13.var")}}) {
      auto one = cmd, eight = cmd;
      one.insert(one.end(), {"--workers", "1", "--output", (dir / "one.csv").string()});
      eight.insert(eight.end(), {"--workers", "8", "--output", (dir / "eight.csv").string()});
      CHECK(run(one).code == 0);
      CHECK(run(eight).code == 0);
      const auto a = slurp(dir / "one.csv");
      CHECK(!a.empty());
      CHECK(a == slurp(dir / "eight.csv"));
      CHECK(a.find('\r') == std::string::npos);
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("input errors exit with 2 and one diagnostic line") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"count", data("bad_syntax.var")},
                                                                  {"count", data("missing.var")},
                                                                  {"count", data("conic9.var"), "--ext", "2"},
                                                                  {"frobnicate"},
                                                                  {},
                                                                  {"count"},
                                                                  {"verify", data("cone13.var"), "--betti", "x"},
                                                                  {"count", data("cone2.var"), "--workers", "0"}}) {
      const auto r = run(args);
      CHECK(r.code == 2);
      CHECK(!r.err.empty());
    }
    const auto bad = run({"count", data("bad_syntax.var")});
    CHECK(lines(bad.err).size() == 1);
    CHECK(bad.err.find("line 7") != std::string::npos);
    CHECK(run({"verify", data("cone13.var"), "--output", "/nonexistent/dir/out.csv"}).code == 2);
  }

  TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bertini-scan") != std::string::npos);
  }
}
