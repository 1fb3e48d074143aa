// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <CLI11.hpp>

#include <iostream>

#include "gaugekit/verify.hpp"
#include "gaugekit_golden.hpp"

int main(int argc, char** argv) {
  CLI::App app{"gaugekit acceptance criteria"};
  std::string scale = "quick";
  std::vector<std::string> overrides;
  std::vector<int> only;
  int workers = gaugekit::default_workers();
  app.add_option("--scale", scale, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  app.add_option("--tolerance", overrides, "name=value");
  app.add_option("--only", only, "criterion numbers");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  gaugekit::VerifyOptions o;
  o.scale = gaugekit::parse_scale(scale);
  o.workers = workers;
  o.golden = gaugekit::json::parse(gaugekit_golden::nekrasov_rank2);
  o.only.insert(only.begin(), only.end());
  try {
    for (const auto& s : overrides) o.tolerances.set_from_string(s);
  } catch (const gaugekit::error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  std::cout << "scale: " << scale << '\n';
  const auto rep = gaugekit::verify_all(o, [](const gaugekit::CriterionResult& r) {
    std::cout << gaugekit::criterion_line(r) << std::endl;
    if (!r.passed) std::cout << "  details: " << r.details.dump() << std::endl;
  });
  std::size_t passed = 0;
  for (const auto& r : rep.criteria) passed += r.passed;
  std::cout << passed << "/" << rep.criteria.size() << " criteria passed\n";
  return rep.all_passed() ? 0 : 1;
}
