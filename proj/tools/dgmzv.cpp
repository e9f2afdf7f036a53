#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dgmzv/commands.hpp"

int main(int argc, char** argv) {
  using namespace dgmzv;
  CLI::App app{"Depth-graded linearized double shuffle computations"};
  RunConfig cfg;
  std::string generator = "paper";
  unsigned weight = 0, depth = 0;

  app.add_option("command", cfg.command, "dims | exceptional | bk-check | bracket | express | period | span")
      ->required()
      ->check(CLI::IsMember({"dims", "exceptional", "bk-check", "bracket", "express", "period", "span"}));
  app.add_option("--max-weight", cfg.max_weight, "largest weight N")->capture_default_str();
  app.add_option("--max-depth", cfg.max_depth, "largest depth r")->capture_default_str();
  app.add_option("--format", cfg.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  app.add_option("--output", cfg.output, "write to this file instead of stdout");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--target", cfg.target, "bk-check series: ls, odd, full-t1")
      ->check(CLI::IsMember({"ls", "odd", "full-t1"}))
      ->capture_default_str();
  auto* weight_opt = app.add_option("--weight", weight, "single weight (exceptional, express, period)");
  auto* depth_opt = app.add_option("--depth", depth, "single depth (express)");
  app.add_option("--generator", generator, "period polynomial choice: paper or canonical")
      ->check(CLI::IsMember({"paper", "canonical"}))
      ->capture_default_str();
  app.add_option("--left", cfg.left, "bracket operand: x<2a> or e<2n>");
  app.add_option("--right", cfg.right, "bracket operand: x<2a> or e<2n>");
  app.add_option("--ref", cfg.ref, "express: composition the output is normalized at, e.g. 1,1,8,2");
  app.add_option("--cache-dir", "reserved; ignored");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  if (*weight_opt) cfg.weight = weight;
  if (*depth_opt) cfg.depth = depth;
  cfg.generator = generator == "paper" ? GeneratorChoice::paper : GeneratorChoice::canonical;

  try {
    const CommandOutcome out = run_command(cfg);
    if (!out.message.empty()) std::cerr << out.message << '\n';
    if (out.exit_code != exit_domain || !out.table.rows.empty()) {
      const std::string text = render(out.table, cfg.format);
      if (cfg.output.empty()) {
        std::cout << text;
      } else {
        std::ofstream os(cfg.output, std::ios::binary);
        if (!os || !(os << text)) {
          std::cerr << "cannot write " << cfg.output << '\n';
          return exit_internal;
        }
      }
    }
    return out.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}
