#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bredonk/cli/cli.hpp"

using bredonk::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(BREDONK_TEST_DATA) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

const std::string z2_8 = "Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2";

}  // namespace

TEST_CASE("sl3 --ko golden output") {
  const auto r = call({"sl3", "--ko"});
  CHECK(r.code == 0);
  CHECK(r.out == "sl3 --ko\n"
                 "Bredon homology: H0 = Z^8, H1 = 0, H2 = 0, H3 = 0\n"
                 "KO0 = Z^8\n"
                 "KO1 = " + z2_8 + "\n"
                 "KO2 = " + z2_8 + "\n"
                 "KO3 = 0\n"
                 "KO4 = Z^8\n"
                 "KO5 = 0\n"
                 "KO6 = 0\n"
                 "KO7 = 0\n"
                 "remaining groups by Bott periodicity\n");
}

TEST_CASE("named computations") {
  CHECK(has_line(call({"psl2zp", "-p", "17"}).out, "K0 = Z^9, K1 = Z"));
  CHECK(has_line(call({"psl2zp", "--prime", "17", "--lift"}).out, "K0 = Z^18, K1 = Z^2"));
  CHECK(has_line(call({"sl2zp", "-p", "13"}).out, "K0 = Z^10, K1 = Z^6"));
  CHECK(has_line(call({"fuchsian", "--signature", "[0,0;2,3,7]"}).out, "K0 = Z^11, K1 = 0"));
  CHECK(has_line(call({"fuchsian", "--signature", "[0,1;2,3]", "--lift"}).out, "Bredon homology: H0 = Z^8, H1 = 0"));
  CHECK(has_line(call({"hecke", "-p", "19"}).out, "Bredon homology: H0 = Z^5, H1 = Z^3"));
  CHECK(has_line(call({"gl3"}).out, "K0 = Z^16, K1 = 0"));
  CHECK(has_line(call({"cstar", "-p", "11"}).out, "K0 = Z^10, K1 = 0"));
  const auto ko = call({"cstar", "-p", "23", "--ko"}).out;
  CHECK(has_line(ko, "KO0 = Z^5"));
  CHECK(has_line(ko, "KO1 = Z/2 + Z/2 + Z/2 (up to extension)"));
  CHECK(has_line(ko, "KO2 = Z^7 + Z/2 + Z/2 + Z/2"));
  CHECK(has_line(ko, "KO5 = 0"));
  CHECK(has_line(ko, "remaining groups by Bott periodicity"));
  CHECK(has_line(call({"complex", "--file", data("psl2z.cw")}).out, "K0 = Z^4, K1 = 0"));
  CHECK(has_line(call({"complex", "--file", data("psl2z.cw"), "--format", "text"}).out, "K0 = Z^4, K1 = 0"));
}

TEST_CASE("exit codes") {
  CHECK(call({"psl2zp", "-p", "15"}).code == 1);
  CHECK(call({"psl2zp", "-p", "x"}).code == 1);
  CHECK(call({"cstar", "-p", "13"}).code == 1);
  CHECK(call({"fuchsian", "--signature", "[0,1;1]"}).code == 1);
  CHECK(call({"fuchsian", "--signature", "[0,1;2,5]", "--lift"}).code == 1);
  CHECK(call({"fuchsian", "--signature", "[0,0;2,3,7]", "--ko"}).code == 1);
  CHECK(call({"complex", "--file", data("bad_dd.cw")}).code == 1);
  CHECK(call({"complex", "--file", data("unknown_label.cw")}).code == 2);
  CHECK(call({"complex", "--file", data("no_such_file.cw")}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"sl3", "gl3"}).code == 2);
  CHECK(call({"hecke"}).code == 2);
  CHECK(call({"sl3", "--format", "xml"}).code == 2);
  const auto bad = call({"psl2zp", "-p", "15"});
  CHECK(bad.out.empty());
  CHECK(bad.err == "bredonk: 15 is not prime\n");
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("json output") {
  const auto r = call({"cstar", "-p", "11", "--ko", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "cstar");
  CHECK(j["inputs"]["p"] == 11);
  CHECK(j["groups"]["KO0"] == "Z^5");
  CHECK(j["groups"]["KO3"] == "Z/2 + Z/2 + Z/2");
  CHECK(j["extension_ambiguous"] == true);
  CHECK(j["extension_ambiguous_degrees"] == nlohmann::json::array({1, 3, 4}));
  const auto k = nlohmann::json::parse(call({"psl2zp", "-p", "13", "--format", "json"}).out);
  CHECK(k["groups"]["K0"] == "Z^5");
  CHECK(k["groups"]["K1"] == "Z^3");
  CHECK(k["homology"] == nlohmann::json::array({"Z^4", "Z^3", "Z"}));
  CHECK(k["extension_ambiguous"] == false);
  const auto v = nlohmann::json::parse(call({"--format", "json", "verify"}).out);
  CHECK(v["passed"] == true);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"sl3", "--ko"}, {"verify"}, {"hecke", "-p", "97", "--format", "json"}, {"cstar", "-p", "47", "--ko"}}) {
    const auto a = call(args), b = call(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("datum emission round trips through complex --file") {
  const auto emitted = call({"hecke", "-p", "37", "--emit-datum"});
  REQUIRE(emitted.code == 0);
  const auto path = std::filesystem::temp_directory_path() / "bredonk_hecke37.cw";
  {
    std::ofstream f(path);
    f << emitted.out;
  }
  CHECK(has_line(call({"complex", "--file", path.string()}).out, "Bredon homology: H0 = Z^7, H1 = Z^5"));
  CHECK(call({"complex", "--file", path.string(), "--emit-datum"}).out == emitted.out);
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const auto ok = call({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(has_line(ok.out, "all 13 checks passed"));
  const auto sweep = call({"verify", "--primes", "2..400"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("primes 2..400 (78 primes)") != std::string::npos);
  CHECK(call({"verify", "--primes", "9..3"}).code == 1);
  const auto corrupted = call({"verify", "--file", data("corrupted_sl3.cw")});
  CHECK(corrupted.code == 3);
  CHECK(corrupted.out.find("FAIL  sl3-bredon-homology") != std::string::npos);
  CHECK(corrupted.out.find("PASS  gamma0-bredon") != std::string::npos);
}
