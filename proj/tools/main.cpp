#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv)
{
  using namespace periodlab;
  cli::Options opts;
  CLI::App app{"periodlab: periodic points and least period sets of shift spaces"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", opts.input, "input JSON file")->required();
    sub->add_option("--horizon,-N", opts.horizon, "largest period examined");
    sub->add_option("--format", opts.format, "json, csv or dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--output,-o", opts.output, "output file");
    sub->add_option("--seed", opts.seed, "seed recorded in the report");
    sub->add_option("--oracle-cap", opts.oracle_cap, "largest n checked by brute force");
    sub->add_flag("!--no-timing", opts.timing, "leave timing out of the report");
  };
  auto* analyze = app.add_subcommand("analyze", "counts, period sets and oracle check");
  common(analyze);
  auto* realize = app.add_subcommand("realize", "build a system with a given least period set");
  common(realize);
  realize->add_option("--target", opts.target,
                      "irreducible_sft, reducible_sft, irreducible_sofic, arbitrary_subshift, "
                      "period_set_variant or gap_shift");
  auto* embed = app.add_subcommand("embed-check", "Krieger embedding conditions");
  common(embed);
  embed->add_option("--into", opts.into, "mixing target graph")->required();
  auto* layers = app.add_subcommand("layers", "layer graphs and unique-preimage periods");
  common(layers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::parse_error;
  }
  opts.command = app.get_subcommands().front()->get_name();

  const cli::Result r = cli::run(opts);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
