#pragma once

#include <stdexcept>
#include <string>

namespace papa {

/// Input data or configuration failed a contract check.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read, written, or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base for failures of the numerical procedures themselves (as opposed to
/// bad input): estimates that cannot be formed from the data at hand.
class NumericsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer neighbors than NeighborhoodSpec::min_neighbors at a query position.
class LostSupportError : public NumericsError {
 public:
  LostSupportError(int found, int needed)
      : NumericsError("lost support: found " + std::to_string(found) +
                      " neighbors, need " + std::to_string(needed)),
        found_(found),
        needed_(needed) {}

  int found() const { return found_; }
  int needed() const { return needed_; }

 private:
  int found_;
  int needed_;
};

/// The local spectrum leaves the requested direction undetermined.
class DegenerateDirectionError : public NumericsError {
 public:
  using NumericsError::NumericsError;
};

/// A trace never crossed the base space within its step budget.
class NoIntersectionError : public NumericsError {
 public:
  NoIntersectionError(std::string message, std::string forward_termination,
                      std::string backward_termination)
      : NumericsError(std::move(message)),
        forward_(std::move(forward_termination)),
        backward_(std::move(backward_termination)) {}

  const std::string& forward_termination() const { return forward_; }
  const std::string& backward_termination() const { return backward_; }

 private:
  std::string forward_;
  std::string backward_;
};

}  // namespace papa
