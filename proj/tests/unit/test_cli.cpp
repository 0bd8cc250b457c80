#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using bercong::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bercong");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string family(const std::string& name) { return std::string(BERCONG_FAMILIES_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("bern") {
  CHECK(invoke({"bern", "12"}).out == "-691/2730\n");
  const auto modp = invoke({"bern", "100", "--prime", "7", "--prec", "3"});
  CHECK(modp.code == 0);
  CHECK(modp.out.find("unit digits 159") != std::string::npos);
  CHECK(invoke({"bern", "5000"}).code == 2);
  CHECK(invoke({"bern", "5000", "--prime", "5", "--prec", "2"}).code == 0);
  CHECK(invoke({"bern", "12", "--prime", "4", "--prec", "2"}).code == 2);
  CHECK(invoke({"bern", "-2"}).code == 2);
}

TEST_CASE("check") {
  const auto ok = invoke({"check", family("kummer")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("CERTIFIED") != std::string::npos);
  CHECK(ok.out.find("verdict: CERTIFIED") != std::string::npos);
  const auto bad = invoke({"check", family("kummer_n3")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("NOT_CERTIFIED") != std::string::npos);

  const auto js = invoke({"check", family("sun_s2_k3_b2"), "--format", "json"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  for (const char* key : {"family", "N", "verdict", "M", "checks", "threshold_estimate", "note"}) {
    CHECK_MESSAGE(doc.contains(key), key);
  }
  CHECK(doc["verdict"] == "CERTIFIED");
  CHECK(doc["M"] == -1);
  CHECK(doc["threshold_estimate"] == 7);
}

TEST_CASE("verify") {
  const auto s1 = invoke({"verify", family("sun_s1_k3_b2"), "--primes", "5:50"});
  CHECK(s1.code == 0);
  CHECK(s1.out.find("13/13 PASS") != std::string::npos);
  CHECK(invoke({"verify", family("kummer_n3"), "--primes", "5:50"}).code == 1);

  const auto js = invoke({"verify", family("kummer"), "--primes", "5:30", "--format", "json", "--jobs", "2"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["prime_results"].size() == 8);
  CHECK(doc["summary"]["pass"] == 8);
  CHECK(doc["prime_results"][0]["p"] == 5);
  CHECK(doc["prime_results"][0]["observed_valuation"] == 2);
}

TEST_CASE("zeta-coeffs") {
  const auto r = invoke({"zeta-coeffs", "--prime", "13", "--class", "2", "--degree", "8", "--check-bounds"});
  CHECK(r.code == 0);
  CHECK(r.out.find("VERIFIED") != std::string::npos);
  CHECK(r.out.find("VIOLATED") == std::string::npos);
  CHECK(invoke({"zeta-coeffs", "--prime", "7", "--class", "3", "--degree", "2"}).code == 2);
  CHECK(invoke({"zeta-coeffs", "--prime", "7", "--class", "2", "--degree", "6"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"check"}).code == 2);
  CHECK(invoke({"check", "/nonexistent.json"}).code == 2);
  CHECK(invoke({"verify", family("kummer"), "--primes", "5-50"}).code == 2);
  CHECK(invoke({"verify", family("kummer"), "--primes", "50:5"}).code == 2);
  CHECK(invoke({"check", family("kummer"), "--format", "xml"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}
