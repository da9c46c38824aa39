#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

namespace opa::util {

/// Thrown by long-running work when its Deadline has passed.
class DeadlineExceeded : public std::runtime_error {
 public:
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

/// Cooperative time budget. Work loops call check() periodically; a
/// default-constructed Deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget)
      : expires_(Clock::now() + budget), bounded_(true) {}

  bool expired() const { return bounded_ && Clock::now() >= expires_; }

  void check() const {
    if (expired()) throw DeadlineExceeded();
  }

 private:
  Clock::time_point expires_{};
  bool bounded_ = false;
};

}  // namespace opa::util
