// Runs the ten acceptance criteria and prints one line per criterion.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ncurve/verify.hpp"

int main() {
  using namespace ncurve;
  std::map<int, std::vector<CheckResult>> by;
  for (auto& r : verify_paper(VerifyOptions{}))
    if (r.criterion > 0) by[r.criterion].push_back(std::move(r));
  int failed = 0;
  for (int c = 1; c <= 10; ++c) {
    const auto& rows = by[c];
    int bad = rows.empty() ? 1 : 0;
    for (const auto& r : rows) bad += r.pass ? 0 : 1;
    std::printf("%s criterion %d (%zu checks)\n", bad ? "FAIL" : "PASS", c, rows.size());
    for (const auto& r : rows)
      if (!r.pass) std::printf("    %s: expected %s, got %s\n", r.id.c_str(), r.expected.c_str(), r.computed.c_str());
    failed += bad ? 1 : 0;
  }
  return failed ? 1 : 0;
}
