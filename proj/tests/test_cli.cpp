#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpath/qrat.hpp"
#include "qpath/series.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

using json = nlohmann::json;
using namespace qpath;

namespace {

struct Run {
  std::string out;
  int status;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QPATH_BIN) + " " + args + " 2>&1";
  Run r{{}, 0};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  r.status = pclose(p);
  return r;
}

std::vector<QRat> values(const json& j) {
  std::vector<QRat> out;
  for (const auto& c : j["coeffs"]) out.push_back(QRat::parse(c["value"].get<std::string>()));
  return out;
}

QPoly P(const char* s) { return QPoly::parse(s); }

} // namespace

TEST_CASE("expand rectangular emits parseable coefficients") {
  const Run r = run("expand --basis rectangular --word nenne --format json");
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["grade"] == json::array({3, 2}));
  CHECK(j["basis"] == "rectangular");
  CHECK(j["convention"] == "gf");
  CHECK(values(j) == std::vector<QRat>{QRat(1, qint(3)), QRat(P("q + q^2"), qint(3)), 0});
  for (std::size_t k = 0; k < 3; ++k) CHECK(j["coeffs"][k]["index"] == k);
}

TEST_CASE("every basis round-trips through json") {
  for (const char* basis : {"staircase", "rectangular", "zigzag"})
    for (const char* word : {"nenne", "nneeenen", "eennn", "ne", ""}) {
      const std::string w = *word ? std::string(" --word ") + word : " --word \"\"";
      const Run r = run(std::string("expand --format json --basis ") + basis + w);
      REQUIRE(r.status == 0);
      const json j = json::parse(r.out);
      for (const auto& c : j["coeffs"]) {
        const std::string v = c["value"].get<std::string>();
        CHECK(QRat::parse(v).to_string() == v);
      }
    }
}

TEST_CASE("staircase expansion and evaluation") {
  const Run r = run("expand --word nenne --q 2 --format json");
  const json j = json::parse(r.out);
  CHECK(j["m_w"] == 2);
  CHECK(j["coeffs"][0]["at_q"] == "4");
  CHECK(j["coeffs"][1]["at_q"] == "-6");
  CHECK(j["q"] == "2");
}

TEST_CASE("qhit conventions") {
  const Run stat = run("qhit --box 3x2 --shape 1,1,0 --method stat --format json");
  const json j = json::parse(stat.out);
  CHECK(j["convention"] == "stat");
  CHECK(values(j) == std::vector<QRat>{QRat(P("q + q^2")), QRat(P("1 + q + q^2 + q^3")), 0});
  const json g = json::parse(run("qhit --box 3x2 --shape 1,1,0 --format json").out);
  CHECK(g["convention"] == "gf");
  CHECK(values(g) == std::vector<QRat>{QRat(P("1 + q")), QRat(P("q + 2*q^2 + q^3")), 0});
  const json k = json::parse(run("qhit --box 3x2 --shape 1,1,0 --k 1 --format json").out);
  CHECK(k["coeffs"].size() == 1);
  const json p = json::parse(run("qhit --box 3x2 --shape 1,1,0 --method stat --placements --format json").out);
  CHECK(p["placements"].size() == 6);
}

TEST_CASE("remixed and klyachko-expand") {
  const json r = json::parse(run("remixed --alpha 2,1 --format json --q 1").out);
  CHECK(r["coeffs"][0]["at_q"] == "2");
  CHECK(r["coeffs"][1]["at_q"] == "4");
  const json k = json::parse(run("klyachko-expand --shape 1,1,0 --box 3x3 --format json").out);
  CHECK(k["monomial"] == "u_1^2 u_2");
  CHECK(values(k) == std::vector<QRat>{QRat(1, qint(3)), QRat(P("q + q^2"), qint(3)), 0, 0});
}

TEST_CASE("csf and orient") {
  const json e = json::parse(run("csf --word nnneee --basis e --format json").out);
  REQUIRE(e["terms"].size() == 1);
  CHECK(e["terms"][0]["basis_element"] == "e[3]");
  CHECK(QRat::parse(e["terms"][0]["value"].get<std::string>()) == QRat(qfact(3)));
  const json m = json::parse(run("csf --word nene --basis m --format json").out);
  CHECK(m["terms"].size() == 2);
  const json o = json::parse(run("orient --word nnneee --stats --format json").out);
  CHECK(o["count"] == 6);
  CHECK(o["by_sources"]["1"] == qfact(3).to_string());
  const json l = json::parse(run("orient --word nnenee --format json").out);
  CHECK(l["orientations"].size() == 4);
}

TEST_CASE("verify exit codes") {
  const Run ok = run("verify modular --max 5");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("PASS modular bound=5") != std::string::npos);
  const json j = json::parse(run("verify abelian-triple --max 4 --format json").out);
  CHECK(j["ok"] == true);
  CHECK(j["suites"][0]["reports"][0]["status"] == "pass");
  CHECK(j["suites"][0].contains("ascent_sequence"));
  CHECK(run("verify nope").status != 0);
  CHECK(run("verify").status != 0);
}

TEST_CASE("usage errors") {
  CHECK(run("").status != 0);
  CHECK(run("expand --word nxe").status != 0);
  CHECK(run("expand --word nenne --basis diagonal").status != 0);
  CHECK(run("qhit --box 3x2 --shape 3,1,0").status != 0);
  CHECK(run("csf --word enne").status != 0);
  CHECK(run("expand --word ne --q abc").status != 0);
}

TEST_CASE("output is deterministic") {
  const std::string a = run("verify rho --max 5 --format json").out;
  CHECK(a == run("verify rho --max 5 --format json").out);
  CHECK(run("orient --word nnnenee --format json").out == run("orient --word nnnenee --format json").out);
}
