#pragma once

#include <stdexcept>
#include <string>

namespace hermex {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

/// A standing assumption ("the equation has a solution") fails.
class PremiseViolated : public Error {
 public:
  using Error::Error;
};

/// Range-inclusion hypotheses of the two-variable formulas fail.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class BudgetUnsatisfiable : public Error {
 public:
  using Error::Error;
};

/// Two evaluation routes of the same decision disagree.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hermex
