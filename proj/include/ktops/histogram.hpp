#pragma once

#include <span>
#include <vector>

namespace ktops {

/// Uniform-bin histogram normalized as a density over all recorded samples:
/// density[b] = count[b] / (total * width). Samples outside [lo, hi) still
/// count toward `total`, so out-of-range mass shows up as missing area.
struct Histogram {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<long> counts;
  std::vector<double> density;
  long total = 0;

  static Histogram build(std::span<const double> samples, double lo, double hi, int bins);

  int bins() const { return static_cast<int>(counts.size()); }
  double width() const { return edges[1] - edges[0]; }
  double center(int b) const { return 0.5 * (edges[b] + edges[b + 1]); }
  /// count[b] / total
  double mass(int b) const;

  /// sum_b |mass(b) - reference_mass[b]|
  double l1_distance(std::span<const double> reference_mass) const;
};

}  // namespace ktops
