#pragma once

namespace zicount {

// Upper tail of the standard normal.
double normal_sf(double z);

// Two-sided normal p-value for a Wald statistic.
double normal_two_sided_p(double z);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chisq_sf(double x, double df);

// Upper tail of Student's t with df degrees of freedom.
double student_t_sf(double t, double df);

}  // namespace zicount
