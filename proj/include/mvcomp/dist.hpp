#pragma once

namespace mvcomp {

// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
// Lentz continued fraction with the symmetry switch at x > (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
// Series for x < a+1, continued fraction otherwise.
double reg_inc_gamma_upper(double a, double x);

// Two-sided tail 2 P(T_dof > |t|) of Student's t.
double t_two_sided_p(double t, int dof);

// Upper tail P(F_{d1,d2} > f).
double f_upper_p(double f, int d1, int d2);

// Upper tail P(chi2_dof > x).
double chi2_upper_p(double x, int dof);

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace mvcomp
