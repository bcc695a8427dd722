#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "symcone/checks.hpp"
#include "symcone/json_io.hpp"

using symcone::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "symcone_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args) {
  static int serial = 0;
  const auto dir = scratch_dir();
  const auto out = dir / ("stdout." + std::to_string(serial) + ".txt");
  const auto err = dir / ("stderr." + std::to_string(serial) + ".txt");
  ++serial;

  const std::string cmd = std::string(SYMCONE_CLI_PATH) + " " + args + " >" +
                          out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.code = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream f(path);
  f << text;
  return path;
}

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string::npos ? text.size() : nl;
    if (end > start) out.push_back(json::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("verify --list enumerates the registry") {
  const CliResult r = run_cli("verify --list");
  REQUIRE(r.code == 0);
  const std::vector<json> lines = parse_lines(r.out);
  REQUIRE(lines.size() == symcone::harness::check_registry().size());
  CHECK(lines.front().at("check_id") == "alg.jordan-identity");
  for (const json& j : lines) {
    CHECK(j.contains("suite"));
    CHECK(j.contains("tolerance"));
    CHECK(j.contains("algebra_dependent"));
  }
}

TEST_CASE("verify runs green and writes its report") {
  const auto report = scratch_dir() / "verify_report.jsonl";
  const CliResult r = run_cli("verify --algebra sym:2 --suite hua --suite axb "
                              "--samples 5 --seed 3 --jobs 2 --out " +
                              report.string());
  REQUIRE(r.code == 0);
  CHECK(slurp(report) == r.out);

  const std::vector<json> lines = parse_lines(r.out);
  REQUIRE(lines.size() >= 2);
  const json& summary = lines.back();
  CHECK(summary.at("all_pass").get<bool>());
  CHECK(summary.at("algebra") == "sym:2");
  for (std::size_t i = 0; i + 1 < lines.size(); ++i)
    CHECK(lines[i].at("pass").get<bool>());
}

TEST_CASE("verify reports over several algebras") {
  const CliResult r =
      run_cli("verify --algebra rn:2 --algebra spin:3 --suite axb --samples 2");
  REQUIRE(r.code == 0);
  const std::vector<json> lines = parse_lines(r.out);
  // Two summary lines, one per algebra.
  int summaries = 0;
  for (const json& j : lines)
    if (j.contains("all_pass")) ++summaries;
  CHECK(summaries == 2);
}

TEST_CASE("verify exits 1 when a check fails") {
  const CliResult r = run_cli("verify --algebra sym:3 --suite spectral --samples 3 "
                              "--tol spectral.reconstruction=1e-30");
  REQUIRE(r.code == 1);
  bool saw = false;
  for (const json& j : parse_lines(r.out)) {
    if (!j.contains("check_id") || j.at("check_id") != "spectral.reconstruction") continue;
    saw = true;
    CHECK_FALSE(j.at("pass").get<bool>());
  }
  CHECK(saw);
}

TEST_CASE("usage and configuration errors exit 2") {
  CHECK(run_cli("verify --algebra bogus:2 --samples 2").code == 2);
  CHECK(run_cli("verify --frobnicate").code == 2);
  CHECK(run_cli("").code == 2);  // a subcommand is required

  const auto garbage = write_file("not_json.json", "not json at all");
  CHECK(run_cli("spectral " + garbage.string()).code == 2);
}

TEST_CASE("config file drives verify") {
  const auto cfg = write_file("cli_cfg.txt",
                              "algebra = rn:2\n"
                              "samples = 2\n"
                              "suites = axb\n");
  const CliResult r = run_cli("verify --config " + cfg.string());
  REQUIRE(r.code == 0);
  const std::vector<json> lines = parse_lines(r.out);
  REQUIRE(lines.size() == 5);  // four checks plus the summary
  CHECK(lines.back().at("samples").get<int>() == 2);
}

TEST_CASE("sampled elements feed the spectral command") {
  const CliResult s = run_cli("sample --kind interior --algebra sym:2 --count 2 --seed 9");
  REQUIRE(s.code == 0);
  const std::vector<json> draws = parse_lines(s.out);
  REQUIRE(draws.size() == 2);
  for (const json& j : draws) {
    CHECK(j.at("algebra") == "sym:2");
    CHECK(j.at("coords").size() == 3);
  }

  const auto elem = write_file("draw.json", draws.front().dump());
  const CliResult sp = run_cli("spectral " + elem.string());
  REQUIRE(sp.code == 0);
  const json out = json::parse(sp.out);
  CHECK(out.at("algebra") == "sym:2");
  const auto& ev = out.at("eigenvalues");
  REQUIRE(ev.size() >= 1);
  for (std::size_t i = 0; i + 1 < ev.size(); ++i)
    CHECK(ev[i].get<double>() < ev[i + 1].get<double>());
  CHECK(out.at("idempotents").size() == ev.size());
  // Interior samples have strictly positive spectrum.
  CHECK(ev[0].get<double>() > 0.0);
}

TEST_CASE("compactify subcommands chain into a round trip") {
  const auto x = write_file("x.json", R"({"algebra":"rn:3","coords":[1.0,1.0,1.0]})");
  const CliResult cay = run_cli("compactify cayley " + x.string());
  REQUIRE(cay.code == 0);
  const json u = json::parse(cay.out);
  for (const auto& c : u.at("coords"))
    CHECK(std::abs(c.get<double>()) < 1e-12);

  const auto ufile = write_file("u.json", u.dump());
  const CliResult rep = run_cli("compactify represent " + ufile.string());
  REQUIRE(rep.code == 0);
  const json bd = json::parse(rep.out);
  for (const auto& c : bd.at("e").at("coords"))
    CHECK(std::abs(c.get<double>()) < 1e-12);
  for (const auto& c : bd.at("x").at("coords"))
    CHECK(c.get<double>() == Catch::Approx(1.0).margin(1e-9));

  const auto bfile = write_file("b.json", bd.dump());
  const CliResult emb = run_cli("compactify embed " + bfile.string());
  REQUIRE(emb.code == 0);
  const json u2 = json::parse(emb.out);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(u2.at("coords")[i].get<double>() ==
          Catch::Approx(u.at("coords")[i].get<double>()).margin(1e-7));
}

TEST_CASE("act translates points, with the resolvent route guarded") {
  const auto u = write_file("act_u.json", R"({"algebra":"rn:3","coords":[0.0,0.0,0.0]})");
  const auto a = write_file("act_a.json", R"({"algebra":"rn:3","coords":[1.0,2.0,3.0]})");
  const auto z = write_file("act_z.json", R"({"algebra":"rn:3","coords":[0.0,0.0,0.0]})");

  // u = cayley(1), so u + a = cayley(1 + a) componentwise.
  const CliResult r = run_cli("act --u " + u.string() + " --a " + a.string());
  REQUIRE(r.code == 0);
  const json v = json::parse(r.out);
  const double want[3] = {1.0 / 3.0, 0.5, 0.6};
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(v.at("coords")[i].get<double>() == Catch::Approx(want[i]).margin(1e-9));

  // The chart route accepts a boundary translation; the resolvent one must not.
  CHECK(run_cli("act --u " + u.string() + " --a " + z.string()).code == 0);
  CHECK(run_cli("act --u " + u.string() + " --a " + z.string() + " --direct").code == 2);
}

TEST_CASE("axb subcommands compute the worked example") {
  const CliResult r = run_cli("axb act --a 2 --b 1 --x -2 --y 0.5");
  REQUIRE(r.code == 0);
  const json q = json::parse(r.out);
  CHECK(q.at("x").get<double>() == Catch::Approx(-1.5));
  CHECK(q.at("y").get<double>() == Catch::Approx(0.25));

  const CliResult ri = run_cli("axb act --a 2 --b 1 --x -inf --y inf");
  REQUIRE(ri.code == 0);
  const json qi = json::parse(ri.out);
  CHECK(qi.at("x") == "-inf");
  CHECK(qi.at("y") == "inf");

  const CliResult e0 = run_cli("axb escape --s 0 --x -3 --y 0.25");
  REQUIRE(e0.code == 0);
  const json p0 = json::parse(e0.out);
  CHECK(p0.at("x").get<double>() == -3.0);
  CHECK(p0.at("y").get<double>() == 0.25);

  const CliResult eh = run_cli("axb escape --s 0.5 --x -inf --y 0");
  REQUIRE(eh.code == 0);
  const json ph = json::parse(eh.out);
  CHECK(ph.at("x").get<double>() == Catch::Approx(0.0).margin(1e-12));

  CHECK(run_cli("axb act --a 0 --b 1 --x 0 --y 0").code == 2);
  CHECK(run_cli("axb escape --s 1 --x 0 --y 0").code == 2);
}
