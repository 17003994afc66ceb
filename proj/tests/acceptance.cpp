// Runs each acceptance criterion as a verification suite and prints one
// line per criterion. Exits non-zero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "chevalley/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* summary;
  double limit_seconds;
};

constexpr Criterion kCriteria[] = {
    {1, "minus_one", "-1 in W exactly for A1, B, C, D even, G2, F4, E7, E8", 10},
    {2, "tits", "sigma(w0)^2 is the class of 2 rho-check; any lift of w0 = -1", 30},
    {3, "zrho", "rho-check_G - rho-check_K = c lambda-check_j and z(rho-check) = z(rho-check_K)", 10},
    {4, "classification", "self-duality verdicts match the expected table", 5},
    {5, "fs", "indicator agrees with the Weyl integration oracle", 60},
    {6, "purity", "purity matches -1 action of the longest element of W(K0)", 10},
    {7, "kac", "node deletion and parity give the same K root sets", 10},
};

constexpr std::size_t kMaxListedFailures = 8;

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    chevalley::VerifyReport r;
    std::string error;
    try {
      r = chevalley::run_suite(c.suite);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = error.empty() && r.ok() && !r.cases.empty() && in_time;
    if (!ok) ++failed;
    std::printf("criterion %d %s: %s [%zu/%zu cases, %.2f s, limit %.0f s] %s\n", c.number, ok ? "PASS" : "FAIL",
                c.suite, r.passed(), r.cases.size(), secs, c.limit_seconds, c.summary);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (!in_time) std::printf("    over the time limit\n");
    std::size_t listed = 0;
    for (const auto& v : r.cases) {
      if (v.pass) continue;
      if (listed++ == kMaxListedFailures) {
        std::printf("    ... %zu more\n", r.failed() - kMaxListedFailures);
        break;
      }
      std::printf("    %s: expected %s, got %s\n", v.id.c_str(), v.expected.c_str(), v.actual.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
