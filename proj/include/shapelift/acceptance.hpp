#pragma once

#include <string>
#include <vector>

namespace shapelift::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct Options {
  /// 0 means SHAPELIFT_THREADS, falling back to the hardware count.
  unsigned threads = 0;
  /// Criterion ids to run; empty runs all of them.
  std::vector<int> only;
};

/// Worker count: SHAPELIFT_THREADS when it parses as a positive integer,
/// else std::thread::hardware_concurrency(), never below 1.
unsigned thread_cap();

/// Runs the selected criteria on a small pool and returns them in id order.
/// A criterion passes only if every exact check holds within its budget.
std::vector<Outcome> run(const Options& options = {});

/// One "PASS"/"FAIL" line per criterion plus a summary line.
std::string format(const std::vector<Outcome>& outcomes, bool timings);

inline bool all_passed(const std::vector<Outcome>& outcomes) {
  for (const Outcome& o : outcomes) {
    if (!o.passed) return false;
  }
  return !outcomes.empty();
}

}  // namespace shapelift::acceptance
