#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace dhopf {

using Complex = std::complex<double>;

/// Closed interval of the slow variable; must contain 0.
struct Interval {
    double lo = -3.0;
    double hi = 3.0;
    bool contains(double s) const { return s >= lo && s <= hi; }
};

enum class FieldKind { NormalForm, ModifiedExp, PolynomialReal };

/// Eigenvalue lambda_1(s) = a1(s) - i*b1 of the fast linearization along the
/// critical manifold, together with its entire continuation to complex time.
/// a1(0) = 0, a1 changes sign at s = 0, and b1 > 0.
///
/// Library fields:
///   NormalForm:     lambda_1(s) = c*s - i,            c > 0
///   ModifiedExp:    lambda_1(s) = s*exp(-a*s) - i*b,  a, b > 0
///   PolynomialReal: lambda_1(s) = p(s) - i*b1,        p real polynomial, p(0) = 0
class EigenvalueField {
public:
    static EigenvalueField normal_form(double c, Interval domain = {});
    static EigenvalueField modified_exp(double a, double b, Interval domain = {});
    static EigenvalueField polynomial_real(std::vector<double> a1_coeffs, double b1,
                                           Interval domain = {});

    FieldKind kind() const { return kind_; }
    const Interval& domain() const { return domain_; }

    double a1(double s) const;
    double b1() const { return b1_; }

    Complex lambda1(Complex tau) const;
    Complex lambda1_prime(Complex tau) const;
    Complex lambda1_second(Complex tau) const;

    /// Conjugate pair (a1 - i*b1, a1 + i*b1) at real s; rejects s outside the domain.
    std::pair<Complex, Complex> eigenvalues_at(double s) const;

    /// sup over s > 0 of the integral of a1 over [0, s]; finite only for
    /// saturating fields (ModifiedExp: 1/a^2).
    double relief_sup_real() const;

    // parameters (valid for the matching kind only)
    double param_c() const { return c_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }
    const std::vector<double>& a1_coeffs() const { return coeffs_; }

private:
    EigenvalueField() = default;

    FieldKind kind_ = FieldKind::NormalForm;
    Interval domain_;
    double c_ = 0.0;
    double a_ = 0.0;
    double b_ = 0.0;
    double b1_ = 1.0;
    std::vector<double> coeffs_;  // a1(s) = sum_k coeffs_[k] s^k (PolynomialReal)
};

}  // namespace dhopf
