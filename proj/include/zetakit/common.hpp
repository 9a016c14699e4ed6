#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <thread>

namespace zetakit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kLogPi = 1.14472988584940017414342735135305871;
inline constexpr double kLog2 = 0.69314718055994530941723212145817657;
inline constexpr double kLogTwoPi = 1.83787706640934548356065947281123527;

// Thrown when an argument lies outside an operation's validity region
// (poles, cutoffs too small, grids out of range, ...).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a table or precomputation would exceed the configured size cap.
class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative computation hits its evaluation budget before
// reaching the requested tolerance.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

class unknown_name_error : public std::invalid_argument {
 public:
  explicit unknown_name_error(const std::string& what)
      : std::invalid_argument(what) {}
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex ensure_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw domain_error(std::string(what) + ": non-finite result");
  return z;
}

inline double ensure_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw domain_error(std::string(what) + ": non-finite result");
  return x;
}

namespace runtime {

inline std::atomic<int>& worker_limit_storage() {
  static std::atomic<int> limit{0};
  return limit;
}

// 0 means "use hardware_concurrency". Results never depend on the limit;
// only wall-clock time does.
inline void set_max_workers(int n) { worker_limit_storage().store(n); }

inline int max_workers() {
  int n = worker_limit_storage().load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace runtime
}  // namespace zetakit
