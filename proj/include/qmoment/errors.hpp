#pragma once

#include <stdexcept>
#include <string>

namespace qmoment {

// Base for all library errors. `category()` is stable and machine-parsable;
// the CLI prints it as the one-line failure class.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error("pole", what) {}
};

class TailDivergenceError : public Error {
 public:
  explicit TailDivergenceError(const std::string& what) : Error("tail_divergence", what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class PositivityError : public Error {
 public:
  explicit PositivityError(const std::string& what) : Error("positivity_failure", what) {}
};

class PrecisionOverflowError : public Error {
 public:
  explicit PrecisionOverflowError(const std::string& what) : Error("precision_overflow", what) {}
};

class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(const std::string& what) : Error("insufficient_data", what) {}
};

}  // namespace qmoment
