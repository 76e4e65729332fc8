#include "ktops/hypergeometric.hpp"

#include <cmath>
#include <string>

#include "ktops/types.hpp"

namespace ktops {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double hyp3f2_series(double a1, double a2, double a3, double b1, double b2, double z, const SeriesOptions& opts) {
  if (!(z >= 0.0 && z <= 1.0)) throw InvalidArgument("hyp3f2_series requires z in [0, 1], got " + std::to_string(z));
  if (is_nonpositive_integer(b1) || is_nonpositive_integer(b2)) {
    throw InvalidArgument("hyp3f2_series: lower parameters must not be non-positive integers");
  }
  const double excess = b1 + b2 - a1 - a2 - a3;
  if (z == 1.0 && !(excess > 0.0)) {
    throw InvalidArgument("hyp3f2_series at z = 1 needs parameter excess > 1");
  }

  double term = 1.0;
  double sum = 1.0;
  for (long n = 0; n < opts.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a1 + dn) * (a2 + dn) * (a3 + dn) * z / ((b1 + dn) * (b2 + dn) * (dn + 1.0));
    sum += term;
    if (std::abs(term) <= opts.relative_tolerance * std::abs(sum)) {
      if (z < 1.0) return sum;
      // At z = 1 the terms decay only like k^-(excess + 1); the remainder after
      // term k is about term * (k / excess - 1/2), far above the stopping term.
      const double k = dn + 1.0;
      return sum + term * (k / excess - 0.5);
    }
  }
  throw NumericalError("hyp3f2_series did not converge within " + std::to_string(opts.max_terms) + " terms");
}

}  // namespace ktops
