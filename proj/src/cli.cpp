#include "toriq/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "toriq/io.hpp"

namespace toriq {

namespace {

struct Options {
  std::string state_path;
  bool no_normalize = false;

  int cube_m = 0;
  std::string resolve;
  std::string deform;

  std::string target;
  std::optional<int> export_cube;
  bool export_polar = false;
  bool export_conifold = false;
  std::string format = "json";
  std::string out_path;
};

std::optional<Diagonal> parse_diagonal(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s == "a" ? Diagonal::A : Diagonal::B;
}

std::string run_export(const Options& o) {
  if (o.target == "polytope") {
    if (!o.export_cube) throw SchemaError("export polytope needs --cube M");
    Polytope p = cube_polytope(*o.export_cube);
    if (o.export_polar) p = polar(p);
    return o.format == "off" ? polytope_off(p) : polytope_json(p);
  }
  if (o.format == "off") throw SchemaError("OFF export is only available for polytopes");
  if (o.export_cube && o.export_conifold)
    throw SchemaError("choose one of --cube and --conifold");
  if (o.export_cube) return fan_json(normal_fan(cube_polytope(*o.export_cube)));
  if (o.export_conifold) {
    if (const auto d = parse_diagonal(o.resolve)) return fan_json(resolve_conifold(*d));
    return fan_json(fan_from_cones({conifold_cone()}));
  }
  throw SchemaError("export fan needs --cube M or --conifold");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Toric geometry and multi-qubit entanglement", "toriq"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze a pure state from a JSON state file");
  analyze->add_option("file", o.state_path, "State file")->required();
  analyze->add_flag("--no-normalize", o.no_normalize, "Analyze the raw amplitudes");

  auto* toric = app.add_subcommand("toric", "Toric data of the m-cube or the conifold");
  toric->require_subcommand(1);
  auto* cube = toric->add_subcommand("cube", "m-cube, its polar, normal fan and chart atlas");
  cube->add_option("m", o.cube_m, "Number of qubits")->required();
  auto* conifold = toric->add_subcommand("conifold", "Conifold cone, resolutions, deformation");
  conifold->add_option("--resolve", o.resolve, "Resolution diagonal")
      ->check(CLI::IsMember({"a", "b"}));
  conifold->add_option("--deform", o.deform, "Deformation parameter RE+IMi");

  auto* exp = app.add_subcommand("export", "Export a polytope or fan");
  exp->add_option("target", o.target, "polytope or fan")
      ->required()
      ->check(CLI::IsMember({"polytope", "fan"}));
  exp->add_option("--cube", o.export_cube, "m-cube (fan: its normal fan)");
  exp->add_flag("--polar", o.export_polar, "Export the polar polytope");
  exp->add_flag("--conifold", o.export_conifold, "Conifold fan");
  exp->add_option("--resolve", o.resolve, "Conifold resolution diagonal")
      ->check(CLI::IsMember({"a", "b"}));
  exp->add_option("--format", o.format, "json or off")->check(CLI::IsMember({"json", "off"}));
  exp->add_option("--out", o.out_path, "Output path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::string text;
    if (analyze->parsed()) {
      const StateFile file = read_state_file(o.state_path);
      text = analyze_report(file, file.normalize && !o.no_normalize);
    } else if (cube->parsed()) {
      text = cube_report(o.cube_m);
    } else if (conifold->parsed()) {
      std::optional<Complex> omega;
      if (!o.deform.empty()) omega = parse_complex(o.deform);
      text = conifold_report(parse_diagonal(o.resolve), omega);
    } else if (exp->parsed()) {
      text = run_export(o);
      if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw SchemaError("cannot write '" + o.out_path + "'");
        f << text;
        return kExitOk;
      }
    }
    out << text;
    return kExitOk;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace toriq
