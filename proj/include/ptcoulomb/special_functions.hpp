#pragma once

#include <complex>
#include <cstddef>

namespace ptc {

/// Real gamma function. Negative non-integer arguments are supported;
/// throws PoleError at 0, -1, -2, ...
double gamma_function(double x);

/// Associated Laguerre polynomial L_n^m(z) for real (possibly negative,
/// non-integer) upper index m and complex argument, evaluated as the
/// explicit finite sum
///
///   L_n^m(z) = sum_j (-1)^j C(n+m, n-j) z^j / j!
///
/// The generalized binomial Gamma(n+m+1) / (Gamma(m+j+1) (n-j)!) is formed
/// as the running product (m+j+1)(m+j+2)...(m+n) / (n-j)!, a polynomial in
/// m, so no term can hit a gamma pole.
template <class Real>
std::complex<Real> laguerre(int n, Real m, std::complex<Real> z) {
    // Coefficients are built from the top degree down so the running
    // product over (m+k) grows by one factor per step.
    std::complex<Real> acc{0};
    Real rising = 1;        // prod_{k=j+1}^{n} (m+k)
    Real fact_nj = 1;       // (n-j)!
    for (int j = n; j >= 0; --j) {
        Real fact_j = 1;
        for (int k = 2; k <= j; ++k) fact_j *= static_cast<Real>(k);
        const Real sign = (j % 2 == 0) ? Real(1) : Real(-1);
        const Real coeff = sign * rising / (fact_nj * fact_j);
        acc = acc * z + coeff;
        rising *= (m + static_cast<Real>(j));
        fact_nj *= static_cast<Real>(n - j + 1);
    }
    return acc;
}

inline std::complex<double> laguerre(int n, double m, std::complex<double> z) {
    return laguerre<double>(n, m, z);
}

/// Gauss hypergeometric 2F1(a, b; c; z) by its power series, |z| < 1 only.
/// Summation stops once a term drops below 1e-14 of the running sum.
/// Throws DomainError for |z| >= 1 or c a non-positive integer.
double hyp2f1(double a, double b, double c, double z);

bool is_nonpositive_integer(double x);

} // namespace ptc
