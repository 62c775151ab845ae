#pragma once

#include <stdexcept>
#include <string>

namespace ustcon {

// Text input that does not match the expected format; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A requested construction would exceed a configured size cap.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Randomized search exhausted its tries; carries the best value seen.
class SearchFailure : public std::runtime_error {
 public:
  SearchFailure(const std::string& what, double best_lambda)
      : std::runtime_error(what), best_lambda_(best_lambda) {}
  double best_lambda() const { return best_lambda_; }

 private:
  double best_lambda_;
};

// The iterative eigensolver did not converge.
class EigensolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ustcon
