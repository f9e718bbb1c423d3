#include "grecip/fixtures.hpp"

#include <stdexcept>

namespace grecip::fixtures {

const std::map<std::int64_t, std::int64_t>& g3_table() {
  static const std::map<std::int64_t, std::int64_t> table = {
      {6, 2},    {7, 6},    {8, 8},    {9, 18},   {10, 16},  {11, 30},  {12, 34},  {13, 48},
      {14, 48},  {15, 72},  {16, 72},  {17, 96},  {18, 98},  {19, 126}, {20, 128}, {21, 162},
      {22, 160}, {23, 198}, {24, 202}, {25, 240}, {26, 240}, {27, 288}, {28, 288}, {29, 336},
      {30, 338}, {31, 390}, {32, 392}, {33, 450}, {34, 448}, {35, 510},
  };
  return table;
}

MixedGraph triangle() { return MixedGraph(3, {{1, 3}, {2, 3}}, {{1, 2}}); }

const std::vector<MultiplicityRow>& triangle_multiplicities(int k) {
  static const std::vector<MultiplicityRow> unit = {
      {{0, 0, 0}, 3}, {{0, 0, 1}, 1}, {{0, 1, 0}, 2}, {{0, 1, 1}, 2}, {{1, 1, 0}, 1}, {{1, 1, 1}, 3},
  };
  static const std::vector<MultiplicityRow> doubled = {
      {{0, 0, 0}, 3}, {{0, 0, 1}, 1}, {{0, 0, 2}, 1}, {{0, 1, 0}, 2}, {{0, 1, 1}, 2}, {{0, 1, 2}, 1},
      {{0, 2, 0}, 2}, {{0, 2, 1}, 1}, {{0, 2, 2}, 2}, {{1, 1, 0}, 1}, {{1, 1, 1}, 3}, {{1, 1, 2}, 1},
      {{1, 2, 0}, 1}, {{1, 2, 1}, 2}, {{1, 2, 2}, 2}, {{2, 2, 0}, 1}, {{2, 2, 1}, 1}, {{2, 2, 2}, 3},
  };
  if (k == 1) return unit;
  if (k == 2) return doubled;
  throw std::invalid_argument("triangle multiplicity table exists for k = 1, 2");
}

}  // namespace grecip::fixtures
