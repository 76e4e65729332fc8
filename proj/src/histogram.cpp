#include "ktops/histogram.hpp"

#include <cmath>

#include "ktops/types.hpp"

namespace ktops {

Histogram Histogram::build(std::span<const double> samples, double lo, double hi, int bins) {
  if (bins < 1 || !(hi > lo)) throw InvalidArgument("histogram needs bins >= 1 and hi > lo");
  Histogram h;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  const double w = (hi - lo) / bins;
  for (int b = 0; b <= bins; ++b) h.edges[b] = lo + b * w;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double x : samples) {
    ++h.total;
    if (!(x >= lo && x < hi)) continue;
    int b = static_cast<int>((x - lo) / w);
    if (b >= bins) b = bins - 1;
    ++h.counts[b];
  }
  h.density.resize(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    h.density[b] = h.total > 0 ? static_cast<double>(h.counts[b]) / (static_cast<double>(h.total) * w) : 0.0;
  }
  return h;
}

double Histogram::mass(int b) const {
  return total > 0 ? static_cast<double>(counts[b]) / static_cast<double>(total) : 0.0;
}

double Histogram::l1_distance(std::span<const double> reference_mass) const {
  if (reference_mass.size() != counts.size()) throw InvalidArgument("reference has the wrong number of bins");
  double acc = 0.0;
  for (int b = 0; b < bins(); ++b) acc += std::abs(mass(b) - reference_mass[b]);
  return acc;
}

}  // namespace ktops
