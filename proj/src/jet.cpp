#include "ptcoulomb/jet.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptcoulomb/errors.hpp"
#include "ptcoulomb/special_functions.hpp"

namespace ptc {

namespace {

void require_same_order(const Jet& a, const Jet& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": jet orders differ (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

} // namespace

Jet::Jet(int order) {
    if (order < 0) throw std::invalid_argument("Jet: order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

Jet::Jet(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Jet: at least one coefficient required");
}

Jet Jet::constant(double value, int order) {
    Jet j(order);
    j[0] = value;
    return j;
}

Jet Jet::variable(int order) {
    Jet j(order);
    if (order >= 1) j[1] = 1.0;
    return j;
}

Jet& Jet::operator+=(const Jet& other) {
    require_same_order(*this, other, "jet sum");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& other) {
    require_same_order(*this, other, "jet difference");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

Jet& Jet::operator*=(double scale) {
    for (double& c : coeffs_) c *= scale;
    return *this;
}

Jet& Jet::operator+=(double value) {
    coeffs_[0] += value;
    return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }
Jet operator*(const Jet& a, const Jet& b) { return jet_product(a, b); }

Jet jet_product(const Jet& a, const Jet& b) {
    require_same_order(a, b, "jet product");
    const int order = a.order();
    Jet out(order);
    for (int k = 0; k <= order; ++k) {
        double s = 0.0;
        for (int i = 0; i <= k; ++i) s += a[i] * b[k - i];
        out[k] = s;
    }
    return out;
}

Jet jet_binomial_power(double p, int order) {
    Jet out(order);
    double c = 1.0;
    for (int k = 0; k <= order; ++k) {
        out[k] = c;
        c *= (p - k) / (k + 1);
    }
    return out;
}

Jet jet_reciprocal(const Jet& a) {
    if (a[0] == 0.0) throw std::invalid_argument("jet reciprocal: zero constant term");
    const int order = a.order();
    Jet out(order);
    out[0] = 1.0 / a[0];
    for (int k = 1; k <= order; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += a[i] * out[k - i];
        out[k] = -s / a[0];
    }
    return out;
}

Jet hyp2f1_jet(double a, double b, double c, const Jet& w) {
    if (is_nonpositive_integer(c)) {
        throw DomainError("hyp2f1_jet: c = " + std::to_string(c) + " is a non-positive integer");
    }
    if (w[0] != 0.0) {
        throw std::invalid_argument("hyp2f1_jet: argument jet must vanish at h = 0");
    }
    const int order = w.order();

    // Series coefficients t_k = (a)_k (b)_k / ((c)_k k!); w^k starts at h^k
    // so terms beyond k = order do not contribute.
    std::vector<double> t(static_cast<std::size_t>(order) + 1);
    t[0] = 1.0;
    for (int k = 0; k < order; ++k) {
        t[k + 1] = t[k] * (a + k) * (b + k) / ((c + k) * (k + 1));
    }

    // Horner in jets: t_0 + w (t_1 + w (t_2 + ...)).
    Jet acc = Jet::constant(t[order], order);
    for (int k = order - 1; k >= 0; --k) {
        acc = jet_product(acc, w);
        acc += t[k];
    }
    return acc;
}

} // namespace ptc
