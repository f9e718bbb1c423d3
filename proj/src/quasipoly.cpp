#include "grecip/quasipoly.hpp"

#include <stdexcept>

#include "grecip/arrangement.hpp"
#include "grecip/errors.hpp"
#include "grecip/golomb.hpp"
#include "grecip/golomb_graph.hpp"

namespace grecip {

Quasipolynomial::Quasipolynomial(int period, std::vector<Polynomial> constituents)
    : period_(period), constituents_(std::move(constituents)) {
  if (period_ < 1) throw std::invalid_argument("quasipolynomial period must be >= 1");
  if (constituents_.size() != static_cast<std::size_t>(period_))
    throw std::invalid_argument("need exactly one constituent per residue class");
}

int Quasipolynomial::degree() const {
  int d = -1;
  for (const auto& p : constituents_) d = std::max(d, p.degree());
  return d;
}

int Quasipolynomial::residue(std::int64_t t) const {
  auto r = t % period_;
  return static_cast<int>(r < 0 ? r + period_ : r);
}

Rational Quasipolynomial::evaluate(std::int64_t t) const {
  return constituent(residue(t))(Rational(static_cast<long>(t)));
}

int Quasipolynomial::minimal_period() const {
  for (int q = 1; q < period_; ++q) {
    if (period_ % q != 0) continue;
    bool same = true;
    for (int r = 0; same && r + q < period_; ++r)
      same = constituents_[static_cast<std::size_t>(r)] == constituents_[static_cast<std::size_t>(r + q)];
    if (same) return q;
  }
  return period_;
}

std::vector<Rational> Quasipolynomial::coefficient_function(int k) const {
  std::vector<Rational> out;
  for (const auto& p : constituents_) out.push_back(p.coefficient(k));
  return out;
}

Rational evaluate(const Quasipolynomial& q, std::int64_t t) { return q.evaluate(t); }

Quasipolynomial interpolate(const std::map<std::int64_t, BigInt>& values, int degree, int period) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (period < 1) throw std::invalid_argument("period must be >= 1");
  std::vector<std::vector<std::pair<Rational, Rational>>> classes(static_cast<std::size_t>(period));
  for (const auto& [t, v] : values) {
    if (t < 1) throw std::invalid_argument("interpolation data must have t >= 1");
    classes[static_cast<std::size_t>(t % period)].emplace_back(Rational(static_cast<long>(t)), Rational(v));
  }
  const auto need = static_cast<std::size_t>(degree) + 1;
  std::vector<Polynomial> constituents;
  for (int r = 0; r < period; ++r) {
    const auto& pts = classes[static_cast<std::size_t>(r)];
    if (pts.size() < need)
      throw InsufficientPoints(r, static_cast<int>(pts.size()), static_cast<int>(need));
    Polynomial p = lagrange_interpolate(std::span(pts).first(need));
    for (std::size_t i = need; i < pts.size(); ++i)
      if (p(pts[i].first) != pts[i].second) throw InconsistentData(r, pts[i].first.get_num().get_si());
    constituents.push_back(std::move(p));
  }
  return Quasipolynomial(period, std::move(constituents));
}

Quasipolynomial golomb_quasipolynomial(int m, std::optional<int> period_hint, const SearchOptions& opts) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const int period = period_hint ? *period_hint : static_cast<int>(period_bound(m));
  std::map<std::int64_t, BigInt> values;
  NodeCounter counter(opts.node_budget);
  for (std::int64_t t = 1; t <= std::int64_t{period} * m; ++t)
    values[t] = count_golomb_rulers(m, t, counter, opts.threads);
  Quasipolynomial q = interpolate(values, m - 1, period);

  const Rational expected = make_rational(BigInt(1), factorial(static_cast<unsigned>(m - 1)));
  for (int r = 0; r < period; ++r) {
    const auto& c = q.constituent(r);
    if (c.degree() != m - 1 || c.leading_coefficient() != expected)
      throw LeadingCoefficientMismatch("constituent " + std::to_string(r) + " of g_" + std::to_string(m) +
                                       " has leading term " + c.to_string() + ", expected leading coefficient " +
                                       to_string(expected));
  }
  return q;
}

bool GolombReciprocityReport::ok() const {
  if (!zero_ok) return false;
  for (const auto& row : rows)
    if (!row.ok) return false;
  return true;
}

namespace {

// Calls visit(z) for every z in Z_{>=0}^m with sum t.
template <class Visit>
void for_each_weak_composition(int m, std::int64_t t, Visit&& visit) {
  std::vector<std::int64_t> z(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
    if (i == m - 1) {
      z[static_cast<std::size_t>(i)] = left;
      visit(z);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      z[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, t);
}

}  // namespace

GolombReciprocityReport reciprocity_check_golomb(int m, std::int64_t t_min, std::int64_t t_max,
                                                 const SearchOptions& opts) {
  if (t_min < 0 || t_max < t_min) throw std::invalid_argument("need 0 <= t_min <= t_max");
  GolombReciprocityReport report;
  report.m = m;
  report.quasipolynomial = golomb_quasipolynomial(m, std::nullopt, opts);
  OrientationSearchOptions oopts;
  oopts.node_budget = opts.node_budget;
  oopts.threads = opts.threads;
  const auto orientations = enumerate_constrained_orientations(m, oopts);
  const bool odd = (m - 1) % 2 == 1;

  for (std::int64_t t = t_min; t <= t_max; ++t) {
    GolombReciprocityRow row;
    row.t = t;
    row.lhs = report.quasipolynomial.evaluate(-t);
    if (odd) row.lhs = -row.lhs;
    std::uint64_t sum = 0;
    for_each_weak_composition(m, t, [&](const std::vector<std::int64_t>& z) {
      sum += multiplicity(Ruler(z), orientations);
    });
    row.rhs = BigInt(static_cast<unsigned long>(sum));
    row.ok = row.lhs == Rational(row.rhs);
    report.rows.push_back(std::move(row));
  }
  report.value_at_zero = report.quasipolynomial.evaluate(0);
  if (odd) report.value_at_zero = -report.value_at_zero;
  report.orientation_count = orientations.size();
  report.zero_ok = report.value_at_zero == Rational(static_cast<unsigned long>(orientations.size()));
  return report;
}

}  // namespace grecip
