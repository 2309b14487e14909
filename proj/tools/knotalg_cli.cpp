#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"

using knotalg::cli::Options;

namespace {

int emit(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload << "\n";
    return 0;
  }
  std::ofstream os(opt.out);
  if (!os) {
    std::cout << knotalg::io::dump(knotalg::io::error_object(
                     knotalg::ErrorKind::ParseError, "cannot write '" + opt.out + "'"))
              << "\n";
    return 2;
  }
  os << payload << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Seifert and Blanchfield forms over Z, Q and Z/p"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--ring", opt.ring, "coefficient ring: z, q or fp:<p>");
  app.add_option("--eta", opt.eta, "symmetry sign +1 or -1");
  app.add_option("--in", opt.in, "input JSON file ('-' for stdin)");
  app.add_option("--out", opt.out, "output file (default stdout)");
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "PRNG seed for roundtrip");
  app.add_option("--count", opt.count, "number of roundtrip instances")->check(CLI::NonNegativeNumber);
  app.add_option("--max-rank", opt.max_rank, "largest form rank for roundtrip")->check(CLI::NonNegativeNumber);
  app.add_option("--degree-cap", opt.degree_cap, "largest Laurent degree")->check(CLI::PositiveNumber);

  const std::pair<const char*, const char*> commands[] = {
      {"cover", "Seifert form -> Blanchfield form"},
      {"seifertize", "presentation -> Seifert module"},
      {"uncover", "Blanchfield form -> nonsingular Seifert form"},
      {"decompose", "split a near-projection into unipotent and nilpotent parts"},
      {"invariants", "Alexander polynomial, signature and determinant"},
      {"localize", "form (1-z)θ over the localization"},
      {"roundtrip", "randomized uncover(cover(F)) campaign"},
      {"selftest", "run the built-in invariant suites"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    if (std::string(name) == "invariants")
      sub->add_option("--knot", opt.knot, "built-in knot: unknot, trefoil, figure-eight");
    sub->callback([&opt, n = std::string(name)] { opt.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << knotalg::io::dump(
                     knotalg::io::error_object(knotalg::ErrorKind::ParseError, e.what()))
              << "\n";
    return 2;
  }

  try {
    const knotalg::cli::Output out = knotalg::cli::run(opt);
    const std::string payload =
        opt.format == "text" && !out.text.empty() ? out.text : knotalg::io::dump(out.body);
    const int rc = emit(opt, payload);
    return rc ? rc : out.exit_code;
  } catch (const knotalg::Error& e) {
    std::cout << knotalg::io::dump(knotalg::io::error_object(e.kind(), e.what())) << "\n";
    return knotalg::is_validation_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << knotalg::io::dump(
                     knotalg::io::error_object(knotalg::ErrorKind::InternalAssertion, e.what()))
              << "\n";
    return 1;
  }
}
