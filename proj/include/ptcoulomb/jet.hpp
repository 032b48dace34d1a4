#pragma once

#include <span>
#include <vector>

namespace ptc {

// Truncated power series c_0 + c_1 h + ... + c_K h^K in an auxiliary
// variable h. All arithmetic truncates at the common order K.
class Jet {
public:
    explicit Jet(int order);
    explicit Jet(std::vector<double> coeffs);

    static Jet constant(double value, int order);
    // The jet of h itself: [0, 1, 0, ...].
    static Jet variable(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    double operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    double& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    std::span<const double> coeffs() const { return coeffs_; }

    Jet& operator+=(const Jet& other);
    Jet& operator-=(const Jet& other);
    Jet& operator*=(double scale);
    Jet& operator+=(double value);

    bool operator==(const Jet&) const = default;

private:
    std::vector<double> coeffs_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator*(const Jet& a, const Jet& b);

/// Cauchy product truncated at the common order. Throws
/// std::invalid_argument when the orders differ.
Jet jet_product(const Jet& a, const Jet& b);

/// Series of (1+h)^p: generalized binomial coefficients C(p, k), k = 0..order.
Jet jet_binomial_power(double p, int order);

/// Reciprocal of a jet with non-zero constant term.
Jet jet_reciprocal(const Jet& a);

/// Jet of 2F1(a, b; c; w(h)) about h = 0. The constant term of w must be
/// zero, so only the first order+1 series terms contribute. Throws
/// DomainError when c is a non-positive integer and std::invalid_argument
/// when w(0) != 0.
Jet hyp2f1_jet(double a, double b, double c, const Jet& w);

} // namespace ptc
