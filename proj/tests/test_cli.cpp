// End-to-end tests driving the zg binary. The binary path arrives in the
// ZG_CLI environment variable (set by the CTest registration) because the
// Catch2 runner claims positional arguments for itself.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string cli_path() {
  const char* p = std::getenv("ZG_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::filesystem::path temp_file(const std::string& tag) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() /
         ("zg_cli_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
          std::to_string(counter++));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

run_result run_cli(const std::string& args) {
  std::filesystem::path out = temp_file("out");
  std::filesystem::path err = temp_file("err");
  std::string cmd = "\"" + cli_path() + "\" " + args + " > " + out.string() + " 2> " +
                    err.string();
  int status = std::system(cmd.c_str());
  run_result r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

std::filesystem::path write_element_file(const std::string& tag, const std::string& body) {
  std::filesystem::path p = temp_file(tag);
  std::ofstream f(p);
  f << body;
  return p;
}

}  // namespace

TEST_CASE("group info", "[cli]") {
  run_result r = run_cli("group info --group S3");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["group"] == "S3");
  CHECK(j["order"] == 6);
  CHECK(j["exponent"] == 6);
  REQUIRE(j["classes"].size() == 3);
  CHECK(j["classes"][0]["size"] == 1);
  CHECK(j["classes"][1]["size"] == 3);
  CHECK(j["classes"][1]["rep_cycles"] == "(1 2)");
  CHECK(j["classes"][2]["element_order"] == 3);

  run_result t = run_cli("group info --group S3 --format tsv");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("# group=S3 order=6 exponent=6 classes=3") != std::string::npos);
  CHECK(t.out.find("(1 2 3)") != std::string::npos);
}

TEST_CASE("group elements", "[cli]") {
  run_result r = run_cli("group elements --group S3");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j["elements"].size() == 6);
  CHECK(j["elements"][0]["cycles"] == "()");
  CHECK(j["elements"][2]["cycles"] == "(1 2 3)");
  CHECK(j["elements"][2]["element_order"] == 3);
  CHECK(j["elements"][2]["class"] == 2);

  run_result t = run_cli("group elements --group C4 --format tsv");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("index\tcycles\telement_order\tclass") != std::string::npos);
  CHECK(t.out.find("(1 2 3 4)") != std::string::npos);
}

TEST_CASE("group file input", "[cli]") {
  std::filesystem::path gf = write_element_file("grp", "perm 3\n(1 2)\n(1 2 3)\n");
  run_result r = run_cli("group info --group " + gf.string());
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 6);
  std::filesystem::remove(gf);
}

TEST_CASE("verify thm2 on an element file", "[cli]") {
  std::filesystem::path ef = write_element_file(
      "elem", R"({"group": "C2", "coeffs": {"0": 2, "1": 3}})");

  run_result r = run_cli("verify thm2 --element " + ef.string() + " --q 2 --p 2");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["group"] == "C2");
  CHECK(j["relation"] == "thm2");
  CHECK(j["params"]["q"] == 2);
  CHECK(j["params"]["qprime"] == 1);
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["lhs"] == 13);
  CHECK(j["rows"][0]["rhs"] == 5);
  CHECK(j["rows"][0]["modulus"] == 2);
  CHECK(j["rows"][0]["pass"] == true);
  CHECK(j["rows"][1]["lhs"] == 12);
  CHECK(j["rows"][1]["rhs"] == 0);
  CHECK(j["pass"] == true);

  // Same run with an explicit matching --group and TSV output.
  run_result t = run_cli("verify thm2 --group C2 --element " + ef.string() +
                         " --q 2 --p 2 --format tsv");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("relation=thm2") != std::string::npos);
  CHECK(t.out.find("PASS") != std::string::npos);
  CHECK(t.out.find("FAIL") == std::string::npos);

  std::filesystem::remove(ef);
}

TEST_CASE("verify thm1 and eq9 on generated units", "[cli]") {
  run_result r = run_cli("verify thm1 --group S3 --trivial-unit 2 --n 4 --k 7");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["relation"] == "thm1");
  CHECK(j["params"]["order"] == 3);
  CHECK(j["pass"] == true);

  r = run_cli("verify eq9 --group S3 --trivial-unit 2 --conjugate-bicyclic 2,1 "
              "--n 4 --k 7");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["relation"] == "eq9");
  CHECK(j["pass"] == true);

  r = run_cli("verify eq9 --group S3 --bicyclic 2,1 --n 1 --k 1");
  REQUIRE(r.exit_code == 2);  // nontrivial bicyclic units are not torsion
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("verify cor1 via subgroup and via element file", "[cli]") {
  run_result r = run_cli("verify cor1 --group S3 --subgroup 0,1 --q 6 --p 3");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["relation"] == "cor1");
  CHECK(j["params"]["beta"] == 2);
  CHECK(j["params"]["mode"] == "congruence");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["lhs"] == 1);
  CHECK(j["rows"][0]["rhs"] == 1);
  CHECK(j["rows"][1]["lhs"] == 1);
  CHECK(j["rows"][1]["rhs"] == 1);
  CHECK(j["rows"][2]["lhs"] == 0);
  CHECK(j["rows"][2]["rhs"] == 0);
  CHECK(j["pass"] == true);

  r = run_cli("verify cor1 --group S3 --subgroup 0,1 --q 1059 --p 353 --mode equality");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["params"]["mode"] == "equality");
  CHECK(j["rows"][0]["modulus"].is_null());
  CHECK(j["pass"] == true);

  // The element-file route needs --beta.
  std::filesystem::path ef = write_element_file(
      "idem", R"({"group": "S3", "coeffs": {"0": 1, "1": 1}})");
  r = run_cli("verify cor1 --element " + ef.string() + " --beta 2 --q 6 --p 3");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  std::filesystem::remove(ef);
}

TEST_CASE("probe traces", "[cli]") {
  run_result r = run_cli("probe traces --group D4 --trivial-unit 1 --p 2");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["relation"] == "traces");
  CHECK(j["params"]["order"] == 4);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["trace"] == 0);
  CHECK(j["rows"][2]["trace"] == 1);
  CHECK(j["pass"] == true);

  run_result t = run_cli("probe traces --group D4 --trivial-unit 1 --p 2 --format tsv");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("relation=traces") != std::string::npos);
}

TEST_CASE("sieve", "[cli]") {
  run_result r = run_cli("sieve --group S3 --order 2");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["group"] == "S3");
  CHECK(j["order"] == 2);
  CHECK(j["admissible"] == nlohmann::json::parse("[[0,0,1],[0,1,0]]"));
  CHECK(j["witnesses"] == nlohmann::json::parse("[1]"));
  CHECK(j["constraints_used"].size() > 0);

  // An undersized budget is a usage-level error.
  run_result b = run_cli("sieve --group S4 --order 2 --cap 10");
  REQUIRE(b.exit_code == 2);
  CHECK(b.err.find("error:") != std::string::npos);
}

TEST_CASE("random-test thm2", "[cli]") {
  run_result r = run_cli("random-test thm2 --group S3 --trials 5 --seed 42");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["group"] == "S3");
  CHECK(j["relation"] == "thm2-random");
  CHECK(j["params"]["trials"] == 5);
  CHECK(j["params"]["seed"] == 42);
  REQUIRE(j["trials"].size() == 5);
  for (const auto& t : j["trials"]) {
    CHECK(t["pass"] == true);
    CHECK(t["failures"].empty());
  }
  CHECK(j["pass"] == true);

  // The seed is mandatory: determinism is opt-in only in the explicit sense.
  run_result m = run_cli("random-test thm2 --group S3 --trials 5");
  REQUIRE(m.exit_code == 2);
}

TEST_CASE("byte-identical reruns", "[cli]") {
  const std::string cmds[] = {
      "sieve --group S3 --order 2",
      "random-test thm2 --group Q8 --trials 4 --seed 7",
      "verify cor1 --group S3 --subgroup 0,2,5 --q 6 --p 2",
      "group info --group Q8",
  };
  for (const std::string& c : cmds) {
    run_result a = run_cli(c);
    run_result b = run_cli(c);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE_FALSE(a.out.empty());
  }
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  // No element source.
  CHECK(run_cli("verify thm2 --group S3 --q 2 --p 2").exit_code == 2);
  // Conflicting element sources.
  CHECK(run_cli("verify thm2 --group S3 --trivial-unit 0 --bicyclic 2,1 --q 2 --p 2")
            .exit_code == 2);
  // Unknown group name.
  CHECK(run_cli("group info --group NOPE").exit_code == 2);
  // Missing required option.
  CHECK(run_cli("verify thm2 --group S3 --trivial-unit 0 --p 2").exit_code == 2);
  // Unknown subcommand.
  CHECK(run_cli("frobnicate").exit_code == 2);
  // p divides beta.
  CHECK(run_cli("verify cor1 --group S3 --subgroup 0,1 --q 6 --p 2").exit_code == 2);
  // Invalid mode string.
  CHECK(run_cli("verify cor1 --group S3 --subgroup 0,1 --q 6 --p 3 --mode exact")
            .exit_code == 2);
  // Both --subgroup and an element source.
  CHECK(run_cli("verify cor1 --group S3 --subgroup 0,1 --trivial-unit 0 --q 6 --p 3")
            .exit_code == 2);
  // Equality mode with an undersized prime.
  CHECK(run_cli("verify cor1 --group S3 --subgroup 0,1 --q 6 --p 3 --mode equality")
            .exit_code == 2);
  // Element file whose group contradicts --group.
  std::filesystem::path ef = write_element_file(
      "mism", R"({"group": "C2", "coeffs": {"0": 1}})");
  CHECK(run_cli("verify thm2 --group S3 --element " + ef.string() + " --q 2 --p 2")
            .exit_code == 2);
  std::filesystem::remove(ef);
  // Malformed JSON.
  std::filesystem::path bad = write_element_file("badjson", "{not json");
  CHECK(run_cli("verify thm2 --element " + bad.string() + " --q 2 --p 2").exit_code == 2);
  std::filesystem::remove(bad);
  // Missing file.
  CHECK(run_cli("verify thm2 --element /nonexistent/elem.json --q 2 --p 2").exit_code == 2);
  // Bad element index in the file.
  std::filesystem::path oob = write_element_file(
      "oob", R"({"group": "C2", "coeffs": {"7": 1}})");
  CHECK(run_cli("verify thm2 --element " + oob.string() + " --q 2 --p 2").exit_code == 2);
  std::filesystem::remove(oob);

  // Help exits cleanly.
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify thm2 --help").exit_code == 0);
}
