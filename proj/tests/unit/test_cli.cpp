#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = coxlab::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("kl reports the six nontrivial polynomials of S_4") {
  const auto j = run_json({"kl", "--type", "A", "--rank", "3", "--all"});
  CHECK(j["schema"] == "coxlab.report/1");
  CHECK(j["status"] == "ok");
  CHECK(j["command"] == "kl");
  int nontrivial = 0;
  for (const auto& e : j["result"]["entries"])
    if (e["poly"] != "1") {
      CHECK(e["poly"] == "1 + q");
      ++nontrivial;
    }
  CHECK(nontrivial == 6);
  const auto single = run_json({"kl", "--type", "A3", "--y", "s2", "--w", "s2 s1 s3 s2"});
  CHECK(single["result"]["entries"][0]["coeffs"] == nlohmann::json::array({1, 1}));
  CHECK(single["result"]["entries"][0]["mu"] == 1);
}

TEST_CASE("fourier matrix with checks") {
  const auto j = run_json({"fourier", "--group", "builtin:S3", "--matrix", "--check"});
  CHECK(j["result"]["m_size"] == 8);
  CHECK(j["result"]["matrix"].size() == 8);
  CHECK(j["result"]["checks"]["unitary"] == "pass");
  CHECK(j["result"]["checks"]["involutive"] == "pass");
  const auto& entry = j["result"]["matrix"][0][0];
  CHECK(entry["conductor"] == 1);
  CHECK(entry["coords"] == nlohmann::json::array({"1/6"}));
}

TEST_CASE("cuspidal E8 has thirteen rows") {
  const auto j = run_json({"cuspidal", "--type", "E8"});
  CHECK(j["result"]["rows"].size() == 13);
  const auto r = run({"cuspidal", "--type", "E8", "--csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 14);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"nosuch"}).code == 1);
  CHECK(run({"kl", "--type", "A", "--rank", "x"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"drinfeld", "--q", "6"}).code == 2);
  CHECK(run({"kl", "--type", "H", "--rank", "3", "--all"}).code == 2);
  CHECK(run({"kl", "--type", "A", "--rank", "9", "--all", "--max-size", "100"}).code == 2);
  const auto r = run({"dl", "--group", "GL", "--n", "2", "--q", "6", "--json"});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "error");
  CHECK(j["error"]["kind"] == "NotPrime");
  CHECK(!r.err.empty());
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"drinfeld", "--q", "3", "--m", "4", "--seed", "5", "--json"},
        {"brauer-dim", "--n", "2", "--p", "3", "--seed", "2"},
        {"triples", "--group", "builtin:A4", "--brute", "--csv"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("each subcommand runs") {
  CHECK(run({"cells", "--type", "A2", "--kind", "two-sided"}).code == 0);
  CHECK(run({"palindrome", "--type", "G2", "--all", "--csv"}).code == 0);
  CHECK(run({"triples", "--group", "builtin:S3", "--classes", "1,1,1"}).code == 0);
  CHECK(run({"dl", "--group", "Sp", "--n", "2", "--q", "2", "--m", "1", "--csv"}).code == 0);
  CHECK(run({"brauer-char", "--p", "2", "--s", "2", "--matrix", "2,0;0,3"}).code == 0);
  CHECK(run({"charpoly", "--type", "E6", "--w", "s1 s2 s3 s4 s5 s6", "--class"}).code == 0);
  CHECK(run({"relpos", "--p", "3", "--a", "1,0;0,1", "--b", "0,1;1,0"}).code == 0);
  CHECK(run({"relpos", "--p", "3", "--a", "1,0;0,1", "--b", "0,1;1,0", "--symplectic"}).code == 0);
  CHECK(run({"cuspidal", "--type", "B", "--rank", "2", "--check"}).code == 0);
  CHECK(run({"cuspidal", "--type", "E7", "--q1", "--json"}).code == 0);
  CHECK(run({"drinfeld", "--q", "2", "--m", "2", "--csv"}).code == 1);  // no tabular form
}

TEST_CASE("dl piece table") {
  const auto j = run_json({"dl", "--group", "GL", "--n", "2", "--q", "2", "--m", "2"});
  CHECK(j["result"]["total"] == 5);
  CHECK(j["result"]["rows"][0]["count"] == 3);
  CHECK(j["result"]["rows"][1]["count"] == 2);
  CHECK(j["result"]["partition"] == "pass");
}

TEST_CASE("relpos") {
  const auto j = run_json({"relpos", "--p", "2", "--a", "1,0,0;0,1,0;0,0,1", "--b", "0,1,0;0,0,1;1,0,0"});
  CHECK(j["result"]["permutation"] == "[2,3,1]");
}
