#include "spinor/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using spinor::Json;
using spinor::cli::run;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Output call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Workspace {
  fs::path dir;
  fs::path fixtures;
  Workspace() {
    dir = fs::temp_directory_path() / ("spinor_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fixtures = dir / "fixtures.json";
    auto r = call({"--fixtures", fixtures.string(), "fixtures", "gen"});
    REQUIRE(r.code == 0);
  }
  ~Workspace() { fs::remove_all(dir); }
  std::vector<std::string> with(std::vector<std::string> args) const {
    args.insert(args.begin(), {"--fixtures", fixtures.string()});
    return args;
  }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_golden(const std::string& name, const std::string& actual) {
  fs::path path = fs::path(SPINOR_GOLDEN_DIR) / (name + ".json");
  if (std::getenv("SPINOR_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  REQUIRE(fs::exists(path));
  CHECK(read_file(path) == actual);
}

}  // namespace

TEST_CASE("fixtures gen is deterministic and honours the prime bound") {
  Workspace ws;
  std::string first = read_file(ws.fixtures);
  REQUIRE(call(ws.with({"fixtures", "gen"})).code == 0);
  CHECK(read_file(ws.fixtures) == first);
  Json fx = Json::parse(first);
  CHECK(fx["records"][0]["label"] == "Delta.12.1");
  CHECK(fx["records"][0]["eigenvalues"][0]["lambda_p"] == "-24");

  fs::path small = ws.dir / "small.json";
  REQUIRE(call({"fixtures", "gen", "--prime-bound", "2", "--out", small.string()}).code == 0);
  Json s = Json::parse(read_file(small));
  for (const auto& r : s["records"]) CHECK(r["eigenvalues"].size() == 1);
  check_golden("fixtures_bound7", [&] {
    fs::path seven = ws.dir / "seven.json";
    call({"fixtures", "gen", "--prime-bound", "7", "--out", seven.string()});
    return read_file(seven);
  }());
}

TEST_CASE("verify miyawaki passes on stock fixtures") {
  Workspace ws;
  auto r = call(ws.with({"verify", "miyawaki"}));
  CHECK(r.code == 0);
  Json j = r.json();
  CHECK(j["schema_version"] == 1);
  CHECK(j["result"]["pass"] == true);
  for (const auto& c : j["result"]["checks"]) CHECK(c["pass"] == true);
}

TEST_CASE("verify miyawaki fails on a corrupted tau(2)") {
  Workspace ws;
  Json fx = Json::parse(read_file(ws.fixtures));
  fx["records"][0]["eigenvalues"][0]["lambda_p"] = "-25";
  std::ofstream(ws.fixtures) << fx.dump(2);
  auto r = call(ws.with({"verify", "miyawaki"}));
  CHECK(r.code == 1);
  Json j = r.json();
  CHECK(j["result"]["pass"] == false);
  CHECK(j["result"]["checks"][0]["pass"] == false);
  CHECK(j["result"]["checks"][0]["actual"] == "-25");
}

TEST_CASE("missing fixtures exit with status 2") {
  auto r = call({"--fixtures", "/nonexistent/fixtures.json", "verify", "miyawaki"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("not found") != std::string::npos);
}

TEST_CASE("environment variable overrides the default fixtures path") {
  Workspace ws;
  ::setenv(spinor::cli::kFixturesEnv, ws.fixtures.string().c_str(), 1);
  CHECK(call({"verify", "miyawaki"}).code == 0);
  CHECK(spinor::cli::resolve_fixtures_path("") == ws.fixtures.string());
  CHECK(spinor::cli::resolve_fixtures_path("x.json") == "x.json");
  ::setenv(spinor::cli::kFixturesEnv, "/nonexistent/fx.json", 1);
  CHECK(call({"verify", "miyawaki"}).code == 2);
  ::unsetenv(spinor::cli::kFixturesEnv);
  CHECK(spinor::cli::resolve_fixtures_path("") == spinor::cli::kDefaultFixtures);
}

TEST_CASE("golden outputs") {
  Workspace ws;
  auto golden = [&](const std::string& name, std::vector<std::string> args, int code = 0) {
    auto r = call(ws.with(args));
    CHECK(r.code == code);
    CHECK_NOTHROW(r.json());
    check_golden(name, r.out);
  };
  golden("critical_k14", {"critical", "--k", "14"});
  golden("gamma_k14_rs", {"gamma", "--k", "14", "--compare-rs"});
  golden("hodge_solve", {"hodge", "solve", "--min", "8", "--max", "40"});
  golden("hodge_show_gsp6_14", {"hodge", "show", "--type", "gsp6", "--weight", "14"});
  golden("local_factor_sk_p2", {"local-factor", "--label", "SK.14.2", "--p", "2"});
  golden("lift_p2", {"lift", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "2", "--verify", "--exact"});
  golden("cuspidality_k4_p2", {"cuspidality", "--k", "4", "--p", "2"});
  golden("report_critical", {"report", "--subject", "critical", "--k", "14"});
  golden("report_hodge_solve", {"report", "--subject", "hodge-solve"});
}

TEST_CASE("json and table formats") {
  Workspace ws;
  auto r = call(ws.with({"critical", "--k", "14"}));
  Json j = r.json();
  CHECK(j["command"] == "critical");
  CHECK(j["result"]["count"] == 10);
  CHECK(j["result"]["critical_values"][0] == 14);
  CHECK(j["result"]["critical_values"][9] == 23);
  auto t = call(ws.with({"--format", "table", "critical", "--k", "14"}));
  CHECK(t.code == 0);
  CHECK(t.out.find("result.count\t10") != std::string::npos);
  CHECK(call(ws.with({"--format", "xml", "critical", "--k", "14"})).code == 2);
}

TEST_CASE("lift reports and verdicts") {
  Workspace ws;
  for (const char* p : {"2", "3", "5", "7", "47"}) {
    auto r = call(ws.with({"lift", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", p, "--verify"}));
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["tensor_identity_holds"] == true);
  }
  auto numeric = call(ws.with({"lift", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "3", "--numeric", "--verify"}));
  CHECK(numeric.code == 0);
  CHECK(numeric.json()["result"]["mode"] == "numeric");
  auto rejected = call(ws.with({"lift", "--h", "g26.26.1", "--g", "SK.14.2", "--p", "2"}));
  CHECK(rejected.code == 2);
  CHECK(rejected.json()["result"]["accepted"] == false);
  CHECK(call(ws.with({"lift", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "4"})).code == 2);
  CHECK(call(ws.with({"lift", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "53"})).code == 2);
  CHECK(call(ws.with({"lift", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "2", "--exact", "--numeric"})).code == 2);
}

TEST_CASE("satake and local factors") {
  Workspace ws;
  auto s = call(ws.with({"satake", "--label", "Delta.12.1", "--p", "2", "--orbit"}));
  CHECK(s.code == 0);
  CHECK(s.json()["result"]["ramanujan"] == true);
  CHECK(s.json()["result"]["orbit"].size() == 2);
  auto sk = call(ws.with({"satake", "--label", "SK.14.2", "--p", "2"}));
  CHECK(sk.json()["result"]["ramanujan"] == false);
  CHECK(sk.json()["result"]["chai_faltings"] == true);
  CHECK(sk.json()["result"]["orbit_size"] == 8);
  auto st = call(ws.with({"local-factor", "--label", "SK.14.2", "--p", "3", "--rep", "standard"}));
  CHECK(st.json()["result"]["degree"] == 5);
  CHECK(st.json()["result"]["mode"] == "numeric");
  CHECK(call(ws.with({"local-factor", "--label", "SK.14.2", "--p", "3", "--rep", "adjoint"})).code == 2);
  CHECK(call(ws.with({"local-factor", "--label", "nope", "--p", "3"})).code == 2);
}

TEST_CASE("cuspidality command") {
  Workspace ws;
  auto r = call(ws.with({"cuspidality", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "3"}));
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["cuspidal"] == true);
  CHECK(call(ws.with({"cuspidality", "--k", "16", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "3"})).code == 2);
  CHECK(call(ws.with({"cuspidality", "--p", "3"})).code == 2);
  CHECK(call(ws.with({"cuspidality", "--k", "7", "--p", "3"})).code == 2);
}

TEST_CASE("gamma, critical and report errors") {
  Workspace ws;
  auto g = call(ws.with({"gamma", "--k", "14", "--s", "30"}));
  CHECK(g.code == 0);
  CHECK(g.json()["result"]["spin3_value"].size() == 2);
  CHECK(call(ws.with({"gamma", "--k", "14", "--s", "5"})).code == 3);
  CHECK(call(ws.with({"critical", "--k", "11"})).code == 2);
  CHECK(call(ws.with({"report", "--subject", "nonsense"})).code == 2);
  CHECK(call(ws.with({"report", "--subject", "critical"})).code == 2);
  auto rep = call(ws.with({"report", "--subject", "lift", "--h", "Delta.12.1", "--g", "SK.14.2", "--p", "2"}));
  CHECK(rep.code == 0);
  CHECK(rep.json()["result"]["subject"] == "lift");
  CHECK(rep.json()["result"]["data"]["tensor_identity_holds"] == true);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("lvalue") {
  Workspace ws;
  auto r = call(ws.with({"lvalue", "--h", "Delta.12.1", "--g", "SK.14.2", "--s", "23", "--prime-bound", "50"}));
  CHECK(r.code == 0);
  Json j = r.json()["result"];
  CHECK(std::abs(j["value"][0].get<double>() - 0.97042697453076295) < 1e-12);
  CHECK(j["abscissa"] == 19.5);
  CHECK(j["motivic_weight"] == 37);
  CHECK(j["degree2_tempered"] == false);
  CHECK(j["log_tail_bound"].get<double>() > 0.0);
  CHECK(call(ws.with({"lvalue", "--h", "Delta.12.1", "--g", "SK.14.2", "--s", "19", "--prime-bound", "50"})).code == 3);
  CHECK(call(ws.with({"lvalue", "--h", "Delta.12.1", "--g", "SK.14.2", "--s", "23", "--prime-bound", "100"})).code == 2);
  CHECK(call(ws.with({"lvalue", "--h", "Delta.12.1", "--g", "SK.14.2", "--s", "23", "--prime-bound", "50",
                      "--motivic-weight", "36"})).code == 3);
}
