// dedekind: command-line front end for the library.

#include <unistd.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dedekind/commands.hpp"
#include "dedekind/fixtures.hpp"

namespace {

bool plain_output() {
  const char* v = std::getenv("PLAIN_OUTPUT");
  return (v && *v) || !isatty(fileno(stdout));
}

void print_text(const dedekind::RunReport& r) {
  const bool color = !plain_output();
  for (const auto& line : r.lines) {
    if (color && line.rfind("PASS ", 0) == 0)
      std::cout << "\033[32mPASS\033[0m" << line.substr(4) << "\n";
    else if (color && line.rfind("FAIL ", 0) == 0)
      std::cout << "\033[31mFAIL\033[0m" << line.substr(4) << "\n";
    else
      std::cout << line << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime splitting, index divisors and ideal arithmetic in number fields"};
  app.require_subcommand(1);
  app.fallthrough();
  dedekind::CommandOptions opt;
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_option("--seed", opt.seed, "Seed for randomized polynomial factorization");
  app.add_option("--bound", opt.ideal_bound, "Largest p^n for ideal enumeration")->capture_default_str();
  app.add_option("--trial-bound", opt.trial_bound, "Trial-division bound for discriminants")->capture_default_str();

  std::string poly, prime, shape, family;
  std::function<dedekind::RunReport()> run;

  auto* fm = app.add_subcommand("factor-mod-p", "Factor F mod p and print the cofactor M");
  fm->add_option("poly", poly, "Polynomial, e.g. \"t^3-t^2-2t-8\"")->required();
  fm->add_option("p", prime, "Prime modulus")->required();
  fm->callback([&] { run = [&] { return dedekind::cmd_factor_mod_p(poly, prime, opt); }; });

  auto* disc = app.add_subcommand("discriminant", "Discriminant of a monic polynomial");
  disc->add_option("poly", poly)->required();
  disc->callback([&] { run = [&] { return dedekind::cmd_discriminant(poly, opt); }; });

  auto* crit = app.add_subcommand("dedekind-criterion", "Decide whether p divides the index of a root of F");
  crit->add_option("poly", poly)->required();
  crit->add_option("p", prime)->required();
  crit->callback([&] { run = [&] { return dedekind::cmd_dedekind_criterion(poly, prime, opt); }; });

  auto* split = app.add_subcommand("split-prime", "Prime ideals above p in the ring of integers");
  split->add_option("poly", poly)->required();
  split->add_option("p", prime)->required();
  split->callback([&] { run = [&] { return dedekind::cmd_split_prime(poly, prime, opt); }; });

  auto* cid = app.add_subcommand("common-index-divisor", "Supply test for a splitting shape");
  cid->add_option("p", prime)->required();
  cid->add_option("shape", shape, "Parts as f:e,f:e,... e.g. 1:1,1:1,1:1")->required();
  cid->callback([&] { run = [&] { return dedekind::cmd_common_index_divisor(prime, shape, opt); }; });

  auto* mo = app.add_subcommand("maximal-order", "Integral basis and fundamental number");
  mo->add_option("poly", poly)->required();
  mo->callback([&] { run = [&] { return dedekind::cmd_maximal_order(poly, opt); }; });

  auto* ifo = app.add_subcommand("index-form", "Index form of the maximal order of F or of a cubic family order");
  ifo->add_option("poly", poly);
  ifo->add_option("--family", family, "Cubic family parameters a,b,a1,b1");
  ifo->callback([&] {
    if (poly.empty() == family.empty()) throw CLI::ValidationError("index-form", "give either a polynomial or --family");
    run = [&] { return dedekind::cmd_index_form(poly, family, opt); };
  });

  auto* pe = app.add_subcommand("paper-examples", "Recompute and check the worked examples");
  pe->add_flag("--inject-fault", opt.inject_fault, "Perturb the cubic multiplication table (harness self-test)");
  pe->callback([&] { run = [&] { return dedekind::cmd_worked_examples(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dedekind::kExitUsage;
  }

  try {
    const dedekind::RunReport r = run();
    if (json)
      std::cout << r.to_json().dump(2) << "\n";
    else
      print_text(r);
    return r.exit_status;
  } catch (const dedekind::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dedekind::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return dedekind::kExitCheckFailed;
  }
}
