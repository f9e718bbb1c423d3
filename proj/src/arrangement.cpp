#include "grecip/arrangement.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grecip {

Hyperplane Hyperplane::canonical(std::vector<int> normal) {
  int g = 0;
  for (int c : normal) g = std::gcd(g, c);
  if (g == 0) throw std::invalid_argument("hyperplane normal must be nonzero");
  auto lead = std::find_if(normal.begin(), normal.end(), [](int c) { return c != 0; });
  if (*lead < 0) g = -g;
  for (int& c : normal) c /= g;
  return Hyperplane{std::move(normal)};
}

Hyperplane Hyperplane::from_dpcs(int m, const DpcsPair& p) {
  std::vector<int> normal(static_cast<std::size_t>(m), 0);
  for (int j = p.u.first; j <= p.u.last; ++j) normal[static_cast<std::size_t>(j - 1)] += 1;
  for (int j = p.v.first; j <= p.v.last; ++j) normal[static_cast<std::size_t>(j - 1)] -= 1;
  return canonical(std::move(normal));
}

std::int64_t Hyperplane::evaluate(const std::vector<std::int64_t>& z) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * z.at(i);
  return s;
}

Rational Hyperplane::evaluate(const std::vector<Rational>& z) const {
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * z.at(i);
  return s;
}

std::string Hyperplane::to_string() const {
  auto side = [&](int sign) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < normal.size(); ++i) {
      int c = normal[i] * sign;
      if (c <= 0) continue;
      if (!first) out << " + ";
      first = false;
      if (c != 1) out << c << '*';
      out << 'z' << i + 1;
    }
    return first ? std::string("0") : out.str();
  };
  return side(1) + " = " + side(-1);
}

std::vector<Hyperplane> golomb_hyperplanes(int m) {
  if (m < 2) return {};
  std::set<Hyperplane> unique;
  for (const auto& p : dpcs_pairs(m)) unique.insert(Hyperplane::from_dpcs(m, p));
  return {unique.begin(), unique.end()};
}

namespace {

constexpr int kMaxM = 8;
using Row = std::array<std::int64_t, kMaxM + 1>;

// Solves the m x m system whose first m-1 rows are `rows` (right-hand side
// 0) and whose last row is sum z = 1, by fraction-free Gauss-Jordan
// elimination. Returns false if singular; otherwise writes the solution as
// an integer vector w with z = w / sum(w), sum(w) > 0.
bool solve_on_simplex(int m, const std::vector<const std::vector<int>*>& rows,
                      std::array<std::int64_t, kMaxM>& w) {
  std::array<Row, kMaxM> a{};
  for (int i = 0; i < m - 1; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = (*rows[static_cast<std::size_t>(i)])[static_cast<std::size_t>(j)];
    a[i][m] = 0;
  }
  for (int j = 0; j < m; ++j) a[m - 1][j] = 1;
  a[m - 1][m] = 1;

  std::int64_t prev = 1;
  for (int k = 0; k < m; ++k) {
    int p = k;
    while (p < m && a[p][k] == 0) ++p;
    if (p == m) return false;
    if (p != k) std::swap(a[p], a[k]);
    for (int i = 0; i < m; ++i) {
      if (i == k) continue;
      for (int j = 0; j <= m; ++j) {
        if (j == k) continue;
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
    }
    for (int i = 0; i < m; ++i)
      if (i != k) a[i][k] = 0;
    // Rows above k were scaled by a[k][k]/prev; keep the diagonal in step.
    for (int i = 0; i < k; ++i) a[i][i] = a[k][k];
    prev = a[k][k];
  }
  // Now a[i][i] = det and a[i][m] = det * z_i.
  std::int64_t det = a[0][0];
  std::int64_t g = 0;
  for (int i = 0; i < m; ++i) {
    w[static_cast<std::size_t>(i)] = det > 0 ? a[i][m] : -a[i][m];
    g = std::gcd(g, w[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < m; ++i) w[static_cast<std::size_t>(i)] /= g;
  return true;
}

RationalPoint ray_to_point(const std::vector<std::int64_t>& w) {
  std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  RationalPoint p;
  for (auto c : w) {
    p.push_back(make_rational(static_cast<long>(c), static_cast<long>(total)));
  }
  return p;
}

}  // namespace

std::vector<std::vector<std::int64_t>> iop_vertex_rays(int m) {
  if (m < 2) return {};
  if (m > kMaxM) throw std::invalid_argument("vertex enumeration supports m <= 8");
  std::vector<std::vector<int>> constraints;
  for (const auto& h : golomb_hyperplanes(m)) constraints.push_back(h.normal);
  for (int j = 0; j < m; ++j) {
    std::vector<int> facet(static_cast<std::size_t>(m), 0);
    facet[static_cast<std::size_t>(j)] = 1;
    constraints.push_back(std::move(facet));
  }

  const int n = static_cast<int>(constraints.size());
  const int k = m - 1;
  std::set<std::vector<std::int64_t>> found;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<const std::vector<int>*> rows(static_cast<std::size_t>(k));
  std::array<std::int64_t, kMaxM> w{};
  for (;;) {
    for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = &constraints[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    if (solve_on_simplex(m, rows, w) &&
        std::all_of(w.begin(), w.begin() + m, [](std::int64_t c) { return c >= 0; }))
      found.insert(std::vector<std::int64_t>(w.begin(), w.begin() + m));
    // Next k-subset of [0, n) in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }

  std::vector<std::vector<std::int64_t>> rays(found.begin(), found.end());
  std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) {
    return ray_to_point(a) < ray_to_point(b);
  });
  return rays;
}

std::vector<RationalPoint> iop_vertices(int m) {
  std::vector<RationalPoint> out;
  for (const auto& w : iop_vertex_rays(m)) out.push_back(ray_to_point(w));
  return out;
}

std::int64_t period_bound(int m) {
  BigInt l = 1;
  for (const auto& p : iop_vertices(m))
    for (const auto& c : p) l = lcm(l, c.get_den());
  return l.get_si();
}

RationalPoint reverse_point(const RationalPoint& p) { return {p.rbegin(), p.rend()}; }

Hyperplane reverse_hyperplane(const Hyperplane& h) {
  return Hyperplane::canonical({h.normal.rbegin(), h.normal.rend()});
}

std::string vertices_to_csv(const std::vector<RationalPoint>& vertices) {
  std::ostringstream out;
  if (!vertices.empty()) {
    for (std::size_t j = 0; j < vertices.front().size(); ++j)
      out << (j ? "," : "") << 'z' << j + 1;
    out << '\n';
  }
  for (const auto& p : vertices) {
    for (std::size_t j = 0; j < p.size(); ++j) out << (j ? "," : "") << to_string(p[j]);
    out << '\n';
  }
  return out.str();
}

}  // namespace grecip
