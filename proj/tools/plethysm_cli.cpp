// Command-line runner over the C API.

#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plethysm/plethysm_c.h"

namespace {
  struct Command {
    std::string              name;
    std::vector<std::string> args;
    std::size_t              fixture_at;  // position of the fixture argument
  };
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bimodule plethysm runner"};
  app.require_subcommand(1);

  plethysm_options opts;
  plethysm_options_default(&opts);
  std::string target  = "finset";
  std::string variant = "full";
  std::string fixture;
  bool        summary = false;

  app.add_option("--cap", opts.cap, "word length cap (edge cap for glue)");
  app.add_option("--nmax", opts.nmax, "largest arity");
  app.add_option("--isolated-cap", opts.isolated_cap, "lone vertex cap");
  app.add_option("--target", target, "finset or finvect")
      ->check(CLI::IsMember({"finset", "finvect"}));
  app.add_option("--variant", variant, "cospan variant")->check(CLI::IsMember({"full", "nd"}));
  app.add_option("--seed", opts.seed, "seed for randomized suites");
  app.add_option("--fixture", fixture, "fixture path, built-in name, or - for stdin");
  app.add_flag("--summary", summary, "append key=value lines");
  app.fallthrough();

  std::vector<Command> cmds = {
      {"check", {}, 1}, {"plethysm", {}, 1}, {"extend", {}, 0}, {"correspond", {}, 1}, {"zoo", {}, 9}};
  char const* help[] = {
      "check <suite> [fixture]: category, bimodule, monoid, constraints, roundtrip, rep, decor, "
      "weight, hereditary, all",
      "plethysm <kind> [fixture]: box, diamond, chi, relative, decorated, basic, basic-relative",
      "extend [fixture]: horizontal extension with --cap",
      "correspond <theorem> [fixture]: bimodcat, element-relative, main-thm, algebra, decoration",
      "zoo <name>: cospan, trivial-cospan, surjection, glue, tau-naturals, tau-symmetric"};
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    auto* sub = app.add_subcommand(cmds[i].name, help[i]);
    sub->add_option("args", cmds[i].args, "positional arguments");
  }

  CLI11_PARSE(app, argc, argv);
  opts.target_vect = target == "finvect";
  opts.variant_nd  = variant == "nd";
  opts.summary     = summary;

  Command* cmd = nullptr;
  for (auto& c : cmds) {
    if (app.got_subcommand(c.name)) {
      cmd = &c;
    }
  }
  auto args = cmd->args;
  if (!fixture.empty()) {
    if (args.size() > cmd->fixture_at) {
      std::cerr << "error: fixture given twice\n";
      return 2;
    }
    args.push_back(fixture);
  }
  std::string in;
  bool        reads_stdin = cmd->name != "zoo"
                     && (args.size() <= cmd->fixture_at || args[cmd->fixture_at] == "-");
  if (reads_stdin) {
    in.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }

  std::vector<char const*> argp;
  for (auto const& a : args) {
    argp.push_back(a.c_str());
  }
  char* report = nullptr;
  int   status = 0;
  int   rc     = plethysm_run(cmd->name.c_str(), argp.data(), static_cast<int>(argp.size()),
                              in.c_str(), &opts, &report, &status);
  if (rc != PLETHYSM_OK) {
    std::cerr << "error: " << plethysm_last_error() << '\n';
    return 2;
  }
  std::cout << report;
  plethysm_string_free(report);
  return status;
}
