#include "folinv/cli.hpp"

#include "folinv/document.hpp"
#include "folinv/theorems.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace folinv {

namespace {

const std::vector<std::string> kCommands = {"invariants",        "check-bs", "check-liu",           "check-cota",
                                            "check-second-type", "reduce",   "projective-validate", "projective-global"};

struct Flags {
  std::string command;
  std::string file;
  std::vector<std::string> params;
  int max_blowups = 24;
  int truncation_cap = 64;
  int probes = 7;
  bool json = false;
  std::string out;
  std::string mode = "both";
};

const BalancedEquation& need_divisor(const GermInput& in, const std::string& command) {
  if (!in.divisor) throw InvalidInput(command + " needs a [divisor] section");
  return *in.divisor;
}

CheckReport dispatch(const Flags& f) {
  InputDocument doc = load_document(f.file);
  ParamMap params = resolve_params(doc, f.params);

  CheckOptions opts;
  opts.max_blowups = f.max_blowups;
  opts.probes = default_probes(static_cast<std::size_t>(f.probes));
  opts.mode = parse_mode(f.mode);

  CheckReport r;
  if (f.command.rfind("projective-", 0) == 0) {
    ProjectiveInput in = projective_input(doc, params);
    if (f.command == "projective-validate") {
      r = validation_report(in.W, in.curve, in.points);
    } else {
      if (!in.curve) throw InvalidInput("projective-global needs a curve");
      if (in.points.empty()) throw InvalidInput("projective-global needs the list of singular points");
      r = check_global_bound(in.W, *in.curve, in.points);
    }
  } else {
    GermInput in = germ_input(doc, params);
    if (f.command == "invariants") r = invariants_report(in.F, in.divisor, opts, f.truncation_cap);
    else if (f.command == "reduce") r = reduction_report(in.F, opts);
    else if (f.command == "check-bs") r = check_briancon_skoda(in.F, need_divisor(in, f.command), opts);
    else if (f.command == "check-liu") r = check_liu(in.F, need_divisor(in, f.command), opts);
    else if (f.command == "check-cota") r = check_cota(in.F, need_divisor(in, f.command), opts);
    else r = check_second_type(in.F, need_divisor(in, f.command), opts);
  }
  for (const auto& [name, value] : params) r.input("param " + name, value.get_str());
  return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of plane foliation germs and projective foliations", "folinv"};
  Flags f;
  app.add_option("command", f.command, "Command")->required()->check(CLI::IsMember(kCommands));
  app.add_option("file", f.file, "Input document")->required();
  app.add_option("--param", f.params, "Parameter override name=rational (repeatable)");
  app.add_option("--max-blowups", f.max_blowups, "Blow-up budget of the reduction")->check(CLI::Range(0, 1000));
  app.add_option("--truncation-cap", f.truncation_cap, "Largest truncation degree of the Macaulay oracle")
      ->check(CLI::Range(2, 512));
  app.add_option("--probes", f.probes, "Number of polar probes")->check(CLI::Range(1, 64));
  app.add_flag("--json", f.json, "Print the structured report instead of text");
  app.add_option("--out", f.out, "Write the structured report to PATH");
  app.add_option("--mode", f.mode, "Second-type route")->check(CLI::IsMember({"criterion", "reduction", "both"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CheckReport report;
  try {
    report = dispatch(f);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto structured = report.to_json();
  if (f.json) out << structured.dump(2) << "\n";
  else out << report.to_text();
  if (!f.out.empty()) {
    std::ofstream file(f.out);
    if (!file) {
      err << "error: cannot write " << f.out << "\n";
      return 2;
    }
    file << structured.dump(2) << "\n";
  }
  return report.verdict() == Verdict::Fail ? 1 : 0;
}

} // namespace folinv
