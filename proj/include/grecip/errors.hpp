#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grecip {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The search was stopped because it exceeded its configured node budget. The
// instance is too large for the budget; no partial answer is implied.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : Error("search node budget of " + std::to_string(budget) +
              " exceeded"),
        budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

class InsufficientPoints : public Error {
 public:
  InsufficientPoints(int residue, int have, int need)
      : Error("residue class " + std::to_string(residue) + " has " +
              std::to_string(have) + " interpolation points, needs " +
              std::to_string(need)),
        residue_(residue) {}
  int residue() const noexcept { return residue_; }

 private:
  int residue_;
};

// More than degree+1 points in a residue class that do not lie on a single
// polynomial of the requested degree.
class InconsistentData : public Error {
 public:
  InconsistentData(int residue, std::int64_t t)
      : Error("values in residue class " + std::to_string(residue) +
              " are not on one polynomial of the given degree (first "
              "disagreement at t = " +
              std::to_string(t) + ")"),
        residue_(residue),
        t_(t) {}
  int residue() const noexcept { return residue_; }
  std::int64_t t() const noexcept { return t_; }

 private:
  int residue_;
  std::int64_t t_;
};

class LeadingCoefficientMismatch : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// No rational point realizes a proposed region of the Golomb arrangement.
class InfeasibleRegion : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace grecip
