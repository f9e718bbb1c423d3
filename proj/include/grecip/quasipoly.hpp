#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "grecip/budget.hpp"
#include "grecip/polynomial.hpp"
#include "grecip/rational.hpp"

namespace grecip {

// c_d(t) t^d + ... + c_0(t) with every c_j periodic of period dividing
// `period`. Stored as one polynomial per residue class r = t mod period.
class Quasipolynomial {
 public:
  // The zero quasipolynomial of period 1.
  Quasipolynomial() : Quasipolynomial(1, {Polynomial{}}) {}
  Quasipolynomial(int period, std::vector<Polynomial> constituents);

  int period() const { return period_; }
  const std::vector<Polynomial>& constituents() const { return constituents_; }
  const Polynomial& constituent(int residue) const {
    return constituents_.at(static_cast<std::size_t>(residue));
  }
  // Max constituent degree; -1 when every constituent is zero.
  int degree() const;

  // Residue in [0, period) even for negative t.
  int residue(std::int64_t t) const;
  Rational evaluate(std::int64_t t) const;
  Rational operator()(std::int64_t t) const { return evaluate(t); }

  // Smallest divisor q of period() such that constituents r and r + q agree
  // for every r.
  int minimal_period() const;

  // Coefficient of t^k as a function of the residue, one entry per residue.
  std::vector<Rational> coefficient_function(int k) const;

  friend bool operator==(const Quasipolynomial&,
                         const Quasipolynomial&) = default;

 private:
  int period_;
  std::vector<Polynomial> constituents_;
};

// Per-residue interpolation of integer data at t >= 1. Each residue class
// needs at least degree + 1 samples; surplus samples must be consistent.
Quasipolynomial interpolate(const std::map<std::int64_t, BigInt>& values,
                            int degree, int period);

Rational evaluate(const Quasipolynomial& q, std::int64_t t);

// g_m(t) interpolated from brute-force counts at t = 1 .. period*m, with
// period = period_hint or period_bound(m). Throws LeadingCoefficientMismatch
// unless every constituent has leading coefficient 1/(m-1)!.
Quasipolynomial golomb_quasipolynomial(int m,
                                       std::optional<int> period_hint = {},
                                       const SearchOptions& opts = {});

struct GolombReciprocityRow {
  std::int64_t t = 0;
  Rational lhs;  // (-1)^(m-1) g_m(-t)
  BigInt rhs;    // sum of Golomb multiplicities over rulers of length t
  bool ok = false;
};

struct GolombReciprocityReport {
  int m = 0;
  Quasipolynomial quasipolynomial;
  std::vector<GolombReciprocityRow> rows;
  // (-1)^(m-1) g_m(0) against the number of constrained orientations.
  Rational value_at_zero;
  std::uint64_t orientation_count = 0;
  bool zero_ok = false;

  bool ok() const;
};

GolombReciprocityReport reciprocity_check_golomb(
    int m, std::int64_t t_min, std::int64_t t_max,
    const SearchOptions& opts = {});

}  // namespace grecip
