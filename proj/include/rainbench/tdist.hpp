#pragma once

namespace rainbench {

/// Regularized incomplete beta function I_x(a, b), evaluated with Lentz's
/// continued fraction. Absolute error well below 1e-10 over the arguments
/// used here.
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t with df degrees of freedom.
double t_cdf(double t, double df);

/// Quantile (inverse CDF) of Student's t, found by bisection on t_cdf.
/// p in (0, 1), df >= 1.
double t_quantile(double p, double df);

} // namespace rainbench
