#pragma once

#include <stdexcept>
#include <string>

namespace mmp132 {

// Malformed input: permutation strings, pattern strings, indices.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration size above the configured cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int n, int cap)
      : std::runtime_error("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                           std::to_string(cap) + "; raise it with --cap if intended"),
        n_(n),
        cap_(cap) {}
  int n() const { return n_; }
  int cap() const { return cap_; }

 private:
  int n_;
  int cap_;
};

// Pattern shape outside what the generating-function engine supports.
class UnsupportedPattern : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series algebra precondition failures (non-unit constant term, inexact division, ...).
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// No registered coefficient formula for the requested pattern.
class NotCovered : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A formula exists but n is below its stated threshold.
class BelowThreshold : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// OEIS data could not be obtained from network, cache, or fixtures.
class Unavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mmp132
