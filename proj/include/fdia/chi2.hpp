#pragma once

namespace fdia {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
/// Series expansion for x < a+1, Lentz continued fraction otherwise.
double gamma_p(double a, double x);

/// Chi-square CDF with dof degrees of freedom.
double chi2_cdf(double x, double dof);

/// Inverse chi-square CDF: smallest x with CDF(x) = p, p in (0,1).
/// Wilson-Hilferty initial guess refined by safeguarded Newton steps.
double chi2_inv(double p, double dof);

} // namespace fdia
