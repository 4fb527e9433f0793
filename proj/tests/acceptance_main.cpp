// Runs the acceptance criteria; one line per criterion, nonzero exit on failure.
#include <CLI11.hpp>
#include <iostream>

#include "horobound/acceptance.hpp"
#include "horobound/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  horobound::AcceptanceOptions opts;
  app.add_option("--only", opts.only, "criterion ids or tags")->delimiter(',');
  app.add_option("--mutate", opts.mutate, "negative control: corrupt this built-in graph");
  app.add_option("--workers", opts.workers, "worker threads")->check(CLI::Range(1u, 256u));
  CLI11_PARSE(app, argc, argv);

  try {
    opts.limits = horobound::Limits::from_env();
    int failed = 0, passed = 0, skipped = 0;
    horobound::run_acceptance(opts, [&](const horobound::CriterionResult& r) {
      std::cout << horobound::format_result(r) << std::endl;
      if (r.status == "FAIL") ++failed;
      if (r.status == "PASS") ++passed;
      if (r.status == "SKIPPED") ++skipped;
    });
    std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped" << std::endl;
    return failed ? 1 : 0;
  } catch (const horobound::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  }
}
