// Command line front end. Subcommands:
//   verify      run property suites, JSON line per check + summary
//   spectral    eigenvalues and idempotent frame of an element
//   act         translate a compactified point by a cone element
//   compactify  cayley / embed / represent conversions
//   axb         the affine half-plane example: act and escape
//   sample      draw reproducible random objects
// Exit codes: 0 success (verify: all checks passed), 1 check failures,
// 2 configuration or input errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcone/harness.hpp"
#include "symcone/json_io.hpp"
#include "symcone/sampling.hpp"

namespace {

using json = symcone::json;

symcone::Element load_element(const std::string& path) {
  return symcone::element_from_json(symcone::load_json_file(path));
}

symcone::axb::XReal parse_xreal(const std::string& s) {
  if (s == "-inf") return symcone::axb::XReal::neg_inf();
  if (s == "inf" || s == "+inf") return symcone::axb::XReal::pos_inf();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw symcone::ConfigError("bad extended real: " + s);
  }
  if (pos != s.size()) throw symcone::ConfigError("bad extended real: " + s);
  return symcone::axb::XReal::finite(v);
}

json xreal_to_json(const symcone::axb::XReal& v) {
  if (v.tag == symcone::axb::XReal::Tag::NegInf) return json("-inf");
  if (v.tag == symcone::axb::XReal::Tag::PosInf) return json("inf");
  return json(v.value);
}

json plane_to_json(const symcone::axb::PlanePoint& p) {
  json j;
  j["x"] = xreal_to_json(p.x);
  j["y"] = xreal_to_json(p.y);
  return j;
}

struct GlobalOpts {
  std::string algebra = "sym:3";
  std::uint64_t seed = 0;
  int samples = 100;
  int jobs = 1;
  std::string out_path;
  std::string config_path;
  std::vector<std::string> tol_entries;
};

symcone::harness::RunConfig make_run_config(const GlobalOpts& g,
                                            const std::vector<std::string>& suites,
                                            bool algebra_given, bool seed_given,
                                            bool samples_given, bool jobs_given,
                                            bool out_given) {
  symcone::harness::RunConfig cfg;
  if (!g.config_path.empty()) symcone::harness::apply_config_file(cfg, g.config_path);
  // Explicit flags override whatever the config file set.
  if (algebra_given || g.config_path.empty()) cfg.algebra = g.algebra;
  if (seed_given || g.config_path.empty()) cfg.seed = g.seed;
  if (samples_given || g.config_path.empty()) cfg.samples = g.samples;
  if (jobs_given || g.config_path.empty()) cfg.jobs = g.jobs;
  if (out_given) cfg.out_path = g.out_path;
  if (!suites.empty()) cfg.suites = suites;
  for (const std::string& entry : g.tol_entries) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw symcone::ConfigError("tolerance override must be check=value: " + entry);
    cfg.tol_overrides[entry.substr(0, eq)] =
        symcone::harness::detail::parse_double(entry.substr(eq + 1), entry);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean Jordan algebra cones, their order compactification, "
               "and randomized structure checks"};
  app.require_subcommand(1);

  GlobalOpts g;
  auto* algebra_opt = app.add_option("--algebra", g.algebra,
                                     "algebra descriptor, e.g. sym:3, rn:4, spin:5, "
                                     "sum(sym:2,spin:3)");
  auto* seed_opt = app.add_option("--seed", g.seed, "master seed");
  auto* samples_opt = app.add_option("--samples", g.samples, "samples per check");
  auto* jobs_opt = app.add_option("--jobs", g.jobs, "worker threads for verify");
  auto* out_opt = app.add_option("--out", g.out_path, "write output to this file as well");
  app.add_option("--config", g.config_path, "key=value config file (flags win)");
  app.add_option("--tol", g.tol_entries, "tolerance override check-id=value")
      ->take_all();

  auto* verify = app.add_subcommand("verify", "run property check suites");
  verify->fallthrough();
  std::vector<std::string> verify_algebras;
  std::vector<std::string> verify_suites;
  verify->add_option("--algebra", verify_algebras, "algebra (repeatable)")->take_all();
  verify->add_option("--suite", verify_suites, "suite filter (repeatable)")->take_all();
  verify->add_flag("--list", "list checks and exit");

  auto* spectral_cmd = app.add_subcommand("spectral", "spectral decomposition of an element");
  spectral_cmd->fallthrough();
  std::string spectral_in;
  spectral_cmd->add_option("element", spectral_in, "element JSON file")->required();

  auto* act_cmd = app.add_subcommand("act", "translate a compactified point");
  act_cmd->fallthrough();
  std::string act_u, act_a;
  bool act_direct_flag = false;
  act_cmd->add_option("--u", act_u, "compactified point JSON file")->required();
  act_cmd->add_option("--a", act_a, "cone element JSON file")->required();
  act_cmd->add_flag("--direct", act_direct_flag, "use the resolvent formula (interior a only)");

  auto* compactify = app.add_subcommand("compactify", "cayley / embed / represent");
  compactify->fallthrough();
  auto* cayley_cmd = compactify->add_subcommand("cayley", "interval image of a cone element");
  cayley_cmd->fallthrough();
  std::string cayley_in;
  cayley_cmd->add_option("element", cayley_in, "cone element JSON file")->required();
  auto* embed_cmd = compactify->add_subcommand("embed", "boundary datum to compactified point");
  embed_cmd->fallthrough();
  std::string embed_in;
  embed_cmd->add_option("boundary", embed_in, "boundary JSON file {\"e\":..,\"x\":..}")->required();
  auto* represent_cmd =
      compactify->add_subcommand("represent", "compactified point to boundary datum");
  represent_cmd->fallthrough();
  std::string represent_in;
  represent_cmd->add_option("point", represent_in, "compactified point JSON file")->required();
  compactify->require_subcommand(1);

  auto* axb_cmd = app.add_subcommand("axb", "affine half-plane example");
  axb_cmd->fallthrough();
  auto* axb_act = axb_cmd->add_subcommand("act", "apply (x,y) -> ((x-b)/a, y/a)");
  axb_act->fallthrough();
  double axb_a = 1.0, axb_b = 0.0;
  std::string axb_x = "0", axb_y = "1";
  axb_act->add_option("--a", axb_a, "scale, a > 0")->required();
  axb_act->add_option("--b", axb_b, "shift")->required();
  axb_act->add_option("--x", axb_x, "x coordinate (number or -inf)")->required();
  axb_act->add_option("--y", axb_y, "y coordinate (number or inf)")->required();
  auto* axb_escape = axb_cmd->add_subcommand("escape", "interior escape path at time s");
  axb_escape->fallthrough();
  double axb_s = 0.0;
  std::string esc_x = "0", esc_y = "1";
  axb_escape->add_option("--s", axb_s, "path parameter in [0,1)")->required();
  axb_escape->add_option("--x", esc_x, "x coordinate (number or -inf)")->required();
  axb_escape->add_option("--y", esc_y, "y coordinate")->required();
  axb_cmd->require_subcommand(1);

  auto* sample_cmd = app.add_subcommand("sample", "draw reproducible random objects");
  sample_cmd->fallthrough();
  std::string sample_kind = "element";
  int sample_count = 1;
  sample_cmd
      ->add_option("--kind", sample_kind,
                   "element | cone | interior | X | boundary | idempotent")
      ->check(CLI::IsMember({"element", "cone", "interior", "X", "boundary", "idempotent"}));
  sample_cmd->add_option("--count", sample_count, "number of draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Keep the documented exit contract: help is success, anything else is a
    // usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string output;

    if (*verify) {
      if (verify->count("--list") > 0) {
        for (const symcone::harness::CheckDef& def : symcone::harness::check_registry()) {
          json j;
          j["check_id"] = def.id;
          j["suite"] = def.suite;
          j["tolerance"] = def.tolerance;
          j["algebra_dependent"] = def.algebra_dependent;
          output += j.dump();
          output += '\n';
        }
        std::fputs(output.c_str(), stdout);
        return 0;
      }
      bool all_pass = true;
      std::vector<std::string> algebras = verify_algebras;
      const symcone::harness::RunConfig base = make_run_config(
          g, verify_suites, algebra_opt->count() > 0, seed_opt->count() > 0,
          samples_opt->count() > 0, jobs_opt->count() > 0, out_opt->count() > 0);
      if (algebras.empty()) algebras.push_back(base.algebra);
      for (const std::string& alg : algebras) {
        symcone::harness::RunConfig cfg = base;
        cfg.algebra = alg;
        cfg.out_path.clear();  // the combined stream is written once below
        const std::vector<symcone::harness::CheckReport> reports =
            symcone::harness::run_suite(cfg);
        output += symcone::harness::report_lines(cfg, reports);
        for (const symcone::harness::CheckReport& r : reports) all_pass = all_pass && r.pass;
      }
      std::fputs(output.c_str(), stdout);
      if (!base.out_path.empty()) {
        std::ofstream f(base.out_path);
        if (!f) throw symcone::IoError("cannot open report file: " + base.out_path);
        f << output;
      }
      return all_pass ? 0 : 1;
    }

    if (*spectral_cmd) {
      const symcone::Element x = load_element(spectral_in);
      const symcone::SpectralDecomposition sd = symcone::spectral_decompose(x);
      json j;
      j["algebra"] = symcone::to_string(x.algebra);
      j["eigenvalues"] = sd.eigenvalues;
      json frame = json::array();
      for (const symcone::Element& c : sd.idempotents) frame.push_back(symcone::element_to_json(c));
      j["idempotents"] = frame;
      output = j.dump(2) + "\n";
    } else if (*act_cmd) {
      const symcone::CompactifiedPoint u(load_element(act_u));
      const symcone::Element a = load_element(act_a);
      const symcone::CompactifiedPoint v =
          act_direct_flag ? symcone::act_direct(u, a) : symcone::act(u, a);
      output = symcone::element_to_json(v.u).dump(2) + "\n";
    } else if (*compactify) {
      if (*cayley_cmd) {
        const symcone::Element x = load_element(cayley_in);
        output = symcone::element_to_json(symcone::cayley(x).u).dump(2) + "\n";
      } else if (*embed_cmd) {
        const symcone::BoundaryPoint p =
            symcone::boundary_from_json(symcone::load_json_file(embed_in));
        output = symcone::element_to_json(symcone::embed(p).u).dump(2) + "\n";
      } else {
        const symcone::CompactifiedPoint u(load_element(represent_in));
        output = symcone::boundary_to_json(symcone::represent(u)).dump(2) + "\n";
      }
    } else if (*axb_cmd) {
      if (*axb_act) {
        const symcone::axb::AffineElement gelt(axb_a, axb_b);
        const symcone::axb::PlanePoint p(parse_xreal(axb_x), parse_xreal(axb_y));
        output = plane_to_json(symcone::axb::act_plane(p, gelt)).dump(2) + "\n";
      } else {
        const symcone::axb::PlanePoint p(parse_xreal(esc_x), parse_xreal(esc_y));
        output = plane_to_json(symcone::axb::escape_homotopy(axb_s, p)).dump(2) + "\n";
      }
    } else if (*sample_cmd) {
      if (sample_count < 1) throw symcone::ConfigError("count must be at least 1");
      const symcone::AlgebraDescriptor alg = symcone::parse_descriptor(g.algebra);
      for (int i = 0; i < sample_count; ++i) {
        symcone::RandomStream rng = symcone::sample_stream(
            g.seed, "cli.sample." + sample_kind, static_cast<std::uint64_t>(i));
        json j;
        if (sample_kind == "element") {
          j = symcone::element_to_json(symcone::sample_element(alg, rng));
        } else if (sample_kind == "cone") {
          j = symcone::element_to_json(symcone::sample_cone(alg, rng));
        } else if (sample_kind == "interior") {
          j = symcone::element_to_json(symcone::sample_interior(alg, rng));
        } else if (sample_kind == "X") {
          j = symcone::element_to_json(symcone::sample_X(alg, rng).u);
        } else if (sample_kind == "boundary") {
          j = symcone::boundary_to_json(symcone::sample_boundary(alg, rng));
        } else {
          j = symcone::element_to_json(
              symcone::random_idempotent(alg, rng, /*allow_trivial=*/false));
        }
        output += j.dump();
        output += '\n';
      }
    }

    std::fputs(output.c_str(), stdout);
    if (!g.out_path.empty() && !*verify) {
      std::ofstream f(g.out_path);
      if (!f) throw symcone::IoError("cannot open output file: " + g.out_path);
      f << output;
    }
    return 0;
  } catch (const symcone::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
