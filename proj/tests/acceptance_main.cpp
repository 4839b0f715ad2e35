// Prints one line per acceptance criterion. Exits 0 when every criterion
// passes or fails in exactly the analysed way, 2 otherwise.

#include <cstring>
#include <iostream>

#include "kronface/acceptance.hpp"

int main(int argc, char** argv) {
  kronface::AcceptanceOptions options;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--verbose") == 0) verbose = true;
    if (std::strcmp(argv[i], "--optional") == 0) options.include_optional = true;
    if (std::strcmp(argv[i], "--golden") == 0 && i + 1 < argc) options.golden_dir = argv[++i];
  }
  kronface::AcceptanceRunner runner(options);
  bool ok = true;
  std::vector<kronface::CriterionResult> results;
  for (int id = 1; id <= 10; ++id) {
    auto r = runner.run(id);
    if (!r) continue;
    std::cout << r->summary_line() << std::endl;
    ok = ok && (r->pass() || r->explained());
    results.push_back(std::move(*r));
  }
  if (verbose) {
    for (const auto& r : results) {
      std::cout << "\ncriterion " << r.id << " " << r.title << "\n";
      for (const auto& c : r.primary) std::cout << "  [" << (c.ok ? "ok" : "no") << "] " << c.what << ": " << c.observed << "\n";
      for (const auto& c : r.analysis) std::cout << "  (" << (c.ok ? "ok" : "no") << ") " << c.what << ": " << c.observed << "\n";
    }
  }
  return ok ? 0 : 2;
}
