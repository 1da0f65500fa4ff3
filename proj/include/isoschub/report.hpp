#pragma once

// Outcome of a verification suite.

#include <string>
#include <vector>

namespace isoschub {

struct Failure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string suite;
  long long cases = 0;
  std::vector<Failure> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }

  /// Counts one case and records a failure when `pass` is false.
  bool check(bool pass, std::string name, std::string inputs, std::string expected = "", std::string actual = "") {
    ++cases;
    if (!pass) failures.push_back({std::move(name), std::move(inputs), std::move(expected), std::move(actual)});
    return pass;
  }

  void merge(const VerifyReport& other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace isoschub
