#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "anaprop/harness.hpp"

namespace anaprop::harness {

namespace {

nlohmann::ordered_json bounds_json(const Bounds& b) {
  return {{"max_atoms", b.max_atoms},
          {"max_term_depth", b.max_term_depth},
          {"max_quantifiers", b.max_quantifiers},
          {"quantifier_kinds", quantifier_kinds(b)},
          {"allow_constants", b.allow_constants}};
}

}  // namespace

std::string to_json(const SuiteReport& r, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = r.name;
  j["passed"] = r.passed();
  j["trials"] = r.trials;
  j["checks"] = r.checks;
  j["failure_count"] = r.failure_count;
  auto& fails = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures)
    fails.push_back(
        {{"structure", f.structure}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  j["bounds"] = r.bounds ? bounds_json(*r.bounds) : nullptr;
  j["notes"] = r.notes;
  j["wall_seconds"] = r.wall_seconds;
  return j.dump(indent);
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite " << r.name << ": " << (r.passed() ? "passed" : "FAILED") << " (" << r.trials
      << " trials, " << r.checks << " checks, " << r.failure_count << " failures";
  if (r.bounds) out << ", bounds " << to_string(*r.bounds);
  out << ", " << std::fixed << std::setprecision(2) << r.wall_seconds << " s)\n";
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  for (const auto& f : r.failures) {
    out << "  failure: " << f.input << "\n    structure: " << f.structure
        << "\n    expected: " << f.expected << ", got: " << f.got << '\n';
  }
  if (r.failure_count > r.failures.size())
    out << "  ... " << r.failure_count - r.failures.size() << " more failures\n";
  return out.str();
}

}  // namespace anaprop::harness
