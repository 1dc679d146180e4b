// Runs the acceptance criteria and prints one pass/fail line per criterion.

#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "fixture_suite.hpp"

#ifndef MARKEDBASES_FIXTURE_DIR
#define MARKEDBASES_FIXTURE_DIR "fixtures"
#endif

int main(int argc, char** argv) {
  CLI::App app{"markedbases acceptance criteria"};
  std::vector<int> only;
  std::string dir = MARKEDBASES_FIXTURE_DIR;
  unsigned workers = 0;
  bool verbose = false;
  app.add_option("criteria", only, "criterion numbers to run (default: all)")->check(CLI::Range(1, 8));
  app.add_option("--fixtures-dir", dir, "fixture corpus directory");
  app.add_option("--workers", workers, "worker threads (default: MARKEDBASES_WORKERS or all cores)");
  app.add_flag("-v,--verbose", verbose, "print every sub-check");
  CLI11_PARSE(app, argc, argv);

  mb::suite::FixtureContext ctx;
  ctx.dir = dir;
  ctx.workers = mb::resolve_workers(workers ? std::optional<unsigned>(workers) : std::nullopt);
  std::set<int> wanted(only.begin(), only.end());

  bool all = true;
  for (auto& c : mb::suite::criteria()) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    auto r = mb::suite::run_criterion(c, ctx);
    all = all && r.pass;
    std::string failing;
    for (auto& p : r.parts)
      if (!p.pass) failing += (failing.empty() ? "" : "; ") + p.name + ": " + p.detail;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.1fs", r.seconds);
    std::cout << "criterion " << r.number << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  [" << secs
              << "]";
    if (!r.pass) std::cout << "  -- " << failing;
    std::cout << std::endl;
    if (verbose)
      for (auto& p : r.parts) std::cout << "    " << (p.pass ? "ok   " : "FAIL ") << p.name << ": " << p.detail << "\n";
  }
  return all ? 0 : 1;
}
