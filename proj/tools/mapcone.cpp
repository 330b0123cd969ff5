#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mapcone/io.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw mapcone::Error::input("ParseError", "cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code(const mapcone::Error& e) {
  switch (e.category()) {
    case mapcone::ErrorCategory::math:
      return 2;
    case mapcone::ErrorCategory::input:
    case mapcone::ErrorCategory::internal:
      return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resolutions of monomial ideals with linear quotients by mapping cones"};
  app.require_subcommand(1);

  std::string input_path = "-";
  std::string order = "given";
  std::string mode = "regular";
  uint64_t seed = 0;
  bool text = false, json = false, matroid = false;

  auto add_common = [&](CLI::App* cmd, bool with_order, bool with_matroid) {
    cmd->add_option("input", input_path, "input file, or - for stdin");
    if (with_order)
      cmd->add_option("--order", order, "generator order: given|degrevlex|search")
          ->check(CLI::IsMember({"given", "degrevlex", "search"}));
    cmd->add_option("--seed", seed, "seed for randomized rank certificates");
    cmd->add_flag("--text", text, "plain-text report");
    cmd->add_flag("--json", json, "JSON report (default)");
    if (with_matroid) cmd->add_flag("--matroid", matroid, "input lines are matroid bases");
    return cmd;
  };

  CLI::App* analyze = add_common(app.add_subcommand("analyze", "class flags, sets, regularity"), true, true);
  CLI::App* resolve = add_common(app.add_subcommand("resolve", "explicit minimal resolution"), true, true);
  CLI::App* betti = add_common(app.add_subcommand("betti", "Betti table, formula vs oracle"), true, true);
  CLI::App* verify = add_common(app.add_subcommand("verify", "build and verify the resolution"), true, true);
  CLI::App* taylor = add_common(app.add_subcommand("taylor", "Taylor complex and DG checks"), false, false);
  CLI::App* dgcheck = add_common(app.add_subcommand("dgcheck", "DG algebra and star checks"), false, false);
  CLI::App* aci = add_common(app.add_subcommand("aci", "almost complete intersection resolution"), false, false);
  CLI::App* koszulseq =
      add_common(app.add_subcommand("koszulseq", "Koszul sequence verification"), false, false);
  koszulseq->add_option("--mode", mode, "regular|monomial|aci")
      ->check(CLI::IsMember({"regular", "monomial", "aci"}));

  CLI11_PARSE(app, argc, argv);

  mapcone::CommandOptions opt;
  opt.seed = seed;
  if (const char* env = std::getenv("MAPCONE_SEED")) opt.seed = std::strtoull(env, nullptr, 10);
  opt.matroid = matroid;
  opt.order = order == "given"      ? mapcone::OrderStrategy::given
              : order == "degrevlex" ? mapcone::OrderStrategy::degrevlex
                                     : mapcone::OrderStrategy::exhaustive;
  opt.mode = mode == "regular"    ? mapcone::KoszulSeqMode::regular
             : mode == "monomial" ? mapcone::KoszulSeqMode::monomial
                                  : mapcone::KoszulSeqMode::aci;

  try {
    std::string input = read_input(input_path);
    mapcone::Json report;
    if (analyze->parsed())
      report = mapcone::run_analyze(input, opt);
    else if (resolve->parsed())
      report = mapcone::run_resolve(input, opt);
    else if (betti->parsed())
      report = mapcone::run_betti(input, opt);
    else if (verify->parsed())
      report = mapcone::run_verify(input, opt);
    else if (taylor->parsed())
      report = mapcone::run_taylor(input, opt);
    else if (dgcheck->parsed())
      report = mapcone::run_dgcheck(input, opt);
    else if (aci->parsed())
      report = mapcone::run_aci(input, opt);
    else if (koszulseq->parsed())
      report = mapcone::run_koszulseq(input, opt);
    if (text)
      std::cout << mapcone::render_text(report);
    else
      std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const mapcone::Error& e) {
    std::cout << mapcone::error_json(e).dump(2) << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    mapcone::Json j;
    j["schema"] = "mapcone-v1";
    j["error"] = mapcone::Json{{"kind", "Internal"}, {"message", e.what()}};
    std::cout << j.dump(2) << "\n";
    return 1;
  }
}
