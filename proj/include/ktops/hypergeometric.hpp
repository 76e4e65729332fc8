#pragma once

namespace ktops {

struct SeriesOptions {
  double relative_tolerance = 1e-14;
  long max_terms = 1'000'000;
};

/// 3F2(a1, a2, a3; b1, b2; z) by direct summation for z in [0, 1].
///
/// Terms are generated by the ratio
///   t_{n+1} / t_n = (a1+n)(a2+n)(a3+n) z / ((b1+n)(b2+n)(n+1))
/// and summation stops once |t_n| <= relative_tolerance * |partial sum|.
/// At z = 1 the parameter excess b1 + b2 + 1 - a1 - a2 - a3 must exceed 1; the
/// slowly decaying remainder is then added from its asymptotic form.
/// Throws InvalidArgument for z outside [0, 1], non-positive integer b's or
/// insufficient excess, NumericalError if max_terms is reached.
double hyp3f2_series(double a1, double a2, double a3, double b1, double b2, double z,
                     const SeriesOptions& opts = {});

}  // namespace ktops
