#pragma once

#include <stdexcept>
#include <string>

namespace rfvote {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input shape does not match the agent count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Marginal probability of type a is 0 or 1.
class DegenerateMarginalError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class QuotaRangeError : public Error {
 public:
  using Error::Error;
};

// Probability outside [0, 1] where one is required.
class RangeError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration requested beyond the supported size.
class SizeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace rfvote
