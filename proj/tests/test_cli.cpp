#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef SIMCLASS_CLI_PATH
#error "SIMCLASS_CLI_PATH must name the CLI binary"
#endif

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& job) {
  auto path = std::filesystem::temp_directory_path() / "simclass_cli_job.json";
  std::ofstream(path) << job;
  std::string cmd = std::string(SIMCLASS_CLI_PATH) + " " + args + " --in " + path.string() + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kZ2 = R"({"kind":"ZLoc","p":2})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("similar on a non-similar pair") {
    Run r = run("similar", std::string(R"({"ring":)") + kZ2 + R"(,"A":[["0","1"],["5","0"]],"B":[["-1","2"],["2","1"]]})");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["similar"] == false);
    CHECK(j["forms"] == json::array({"Case22Main{n=0}", "Case22Extra{r=1,i=1}"}));
    CHECK(j["verified"] == true);
  }

  TEST_CASE("class number") {
    Run r = run("class-number", std::string(R"({"ring":)") + kZ2 + R"(,"f":"x^2-5"})");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out) == json{{"class_number", 2}});
  }

  TEST_CASE("witness and cross-check") {
    std::string job = std::string(R"({"ring":)") + kZ2 + R"(,"A":[[0,1],[5,0]],"B":[[1,1],[4,-1]]})";
    Run w = run("witness", job);
    REQUIRE(w.code == 0);
    CHECK(json::parse(w.out)["witness"].is_array());
    Run s = run("similar --cross-check 3", job);
    REQUIRE(s.code == 0);
    json j = json::parse(s.out);
    CHECK(j["similar"] == true);
    CHECK(j["oracle"]["found"] == true);
    Run c = run("cross-check", std::string(R"({"ring":)") + kZ2 + R"(,"A":[[0,1],[5,0]],"B":[[-1,2],[2,1]],"N":3})");
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["consistent"] == true);
  }

  TEST_CASE("classify and class list") {
    Run r = run("classify", R"({"ring":{"kind":"FpTLoc","p":2},"A":[["0","t"],["t^2","0"]]})");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["form"] == "Insep{i=1,u=0,s=t^2}");
    Run l = run("class-list --insep-bound 3", R"({"ring":{"kind":"FpTLoc","p":2},"f":"x^2-t^3"})");
    REQUIRE(l.code == 0);
    CHECK(json::parse(l.out)["count"] == 2);
    Run q = run("class-number",
                R"({"ring":{"kind":"QuadExt","base":{"kind":"ZLoc","p":2},"minpoly":"x^2-x-1","ramification":"unramified"},"f":"x^2-5"})");
    REQUIRE(q.code == 0);
    CHECK(json::parse(q.out)["class_number"].get<long>() >= 1);
  }

  TEST_CASE("latimer-macduffee over Z") {
    Run r = run("lm-to-ideal", R"({"ring":{"kind":"Z"},"f":"x^2+6","A":[[0,2],[-3,0]]})");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["form"] == "(2, 0, 3)");
    Run m = run("lm-to-matrix", R"({"ring":{"kind":"Z"},"f":"x^2+6","basis":[[2,0],[0,1]]})");
    REQUIRE(m.code == 0);
    CHECK(json::parse(m.out)["matrix"] == json::parse(R"([["0","2"],["-3","0"]])"));
  }

  TEST_CASE("lattice freeness") {
    Run r = run("lattice-free", R"({"d":-5,"f":"x^2-2","generators":[["1","0","0","0"]]})");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["free"] == true);
    CHECK(j["steinitz"] == "(1)");
    Run n = run("lattice-free", R"({"d":-5,"f":"x^2-2","generators":[["2","0","0","0"],["1","0","-1/2","1/2"]]})");
    REQUIRE(n.code == 0);
    CHECK(json::parse(n.out)["free"] == false);
  }

  TEST_CASE("exit codes") {
    CHECK(run("classify", "{not json").code == 2);
    CHECK(run("classify", std::string(R"({"ring":)") + kZ2 + "}").code == 2);
    CHECK(run("classify", std::string(R"({"ring":)") + kZ2 + R"(,"A":[["1/2","0"],["0","1"]]})").code == 3);
    CHECK(run("lattice-free", R"({"d":-3,"f":"x^2-2","generators":[["1","0","0","0"]]})").code == 3);
    CHECK(run("bogus", "{}").code == 2);
  }

  TEST_CASE("output is deterministic") {
    std::string job = std::string(R"({"ring":)") + kZ2 + R"(,"A":[[3,1],[4,-3]]})";
    Run a = run("classify", job), b = run("classify", job);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
}
