#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <tuple>

namespace trigdet {

// One check of one identity or theorem instance. `pass` is true exactly when
// `expected` and `computed` denote the same exact value (plus any extra
// conditions the producing check documents). `details` holds additional
// deterministic fields; `millis` is informational only.
struct VerificationReport {
  std::string suite;
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::string expected;
  std::string computed;
  bool pass = false;
  double millis = 0.0;
  nlohmann::json details = nlohmann::json::object();
};

// Deterministic record order: (suite, check, params). nlohmann::json compares
// objects key-by-key with numeric values compared numerically.
inline bool report_order(const VerificationReport& a, const VerificationReport& b) {
  return std::tie(a.suite, a.check, a.params) < std::tie(b.suite, b.check, b.params);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace trigdet
