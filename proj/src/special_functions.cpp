#include "ptcoulomb/special_functions.hpp"

#include <cmath>
#include <string>

#include "ptcoulomb/errors.hpp"

namespace ptc {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::floor(x) == x;
}

double gamma_function(double x) {
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at x = " + std::to_string(x));
    }
    return std::tgamma(x);
}

double hyp2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c)) {
        throw DomainError("hyp2f1: c = " + std::to_string(c) + " is a non-positive integer");
    }
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("hyp2f1: series mode requires |z| < 1");
    }
    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < 100000; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
        sum += term;
        if (term == 0.0 || std::abs(term) <= 1e-14 * std::abs(sum)) {
            return sum;
        }
    }
    throw DomainError("hyp2f1: series did not converge");
}

} // namespace ptc
