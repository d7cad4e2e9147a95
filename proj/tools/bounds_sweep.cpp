// Sweeps the enumeration bounds over the general counterexample catalog and
// prints, per entry, the verdict of every claim at every bound setting.
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "anaprop/harness.hpp"

using namespace anaprop;

int main(int argc, char** argv) {
  CLI::App app{"Bounds sweep over the general counterexample catalog"};
  int max_atoms = 3, max_depth = 2, max_quantifiers = 2;
  std::size_t max_candidates = 300000;
  app.add_option("--max-atoms", max_atoms);
  app.add_option("--max-depth", max_depth);
  app.add_option("--max-quantifiers", max_quantifiers);
  app.add_option("--max-candidates", max_candidates, "skip settings with more candidates");
  CLI11_PARSE(app, argc, argv);

  for (const auto& entry : harness::general_catalog()) {
    std::cout << "== " << entry.name << "\n";
    std::optional<Bounds> first;
    for (int at = 1; at <= max_atoms; ++at)
      for (int dp = 0; dp <= max_depth; ++dp)
        for (int q = 0; q <= max_quantifiers; ++q) {
          Bounds b{at, dp, q, true, true, true};
          auto frag = FragmentSpec::cformula(b);
          auto n = enumerate_candidates(entry.structures[0].signature(), frag).size();
          std::cout << "  " << to_string(b) << " candidates=" << n;
          if (n > max_candidates) {
            std::cout << " skipped\n";
            continue;
          }
          auto t0 = std::chrono::steady_clock::now();
          bool all = true;
          for (const auto& c : entry.claims) {
            bool got = harness::evaluate_claim(entry, c, frag);
            all = all && got == c.expected;
            std::cout << "  [" << c.args[0] << c.args[1] << c.args[2] << c.args[3] << " "
                      << (got ? "holds" : "fails") << (got == c.expected ? "" : "!") << "]";
          }
          double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          std::cout << (all ? "  reproduces" : "") << "  (" << s << " s)\n";
          if (all && !first) first = b;
        }
    std::cout << "  first reproducing: " << (first ? to_string(*first) : "none") << "\n";
  }
}
