// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace conedrift {

/// Regularized lower incomplete gamma P(a, x) = gamma(a,x)/Gamma(a).
double gamma_p(double a, double x);

/// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

/// Kolmogorov distribution survival function
/// Q(t) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 t^2).
double kolmogorov_q(double t);

/// log of the rising factorial a (a+1) ... (a+k-1); k = 0 gives 0.
double log_rising_factorial(double a, int k);

}  // namespace conedrift
