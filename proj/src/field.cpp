#include "dhopf/field.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dhopf {

namespace {

void require_domain(const Interval& d) {
    if (!(d.lo < 0.0 && d.hi > 0.0))
        throw std::invalid_argument("field domain must contain 0 in its interior");
}

}  // namespace

EigenvalueField EigenvalueField::normal_form(double c, Interval domain) {
    if (!(c > 0.0)) throw std::invalid_argument("normal form requires c > 0");
    require_domain(domain);
    EigenvalueField f;
    f.kind_ = FieldKind::NormalForm;
    f.domain_ = domain;
    f.c_ = c;
    f.b1_ = 1.0;
    return f;
}

EigenvalueField EigenvalueField::modified_exp(double a, double b, Interval domain) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("modified exp requires a, b > 0");
    require_domain(domain);
    EigenvalueField f;
    f.kind_ = FieldKind::ModifiedExp;
    f.domain_ = domain;
    f.a_ = a;
    f.b_ = b;
    f.b1_ = b;
    return f;
}

EigenvalueField EigenvalueField::polynomial_real(std::vector<double> a1_coeffs, double b1,
                                                 Interval domain) {
    if (!(b1 > 0.0)) throw std::invalid_argument("polynomial field requires b1 > 0");
    if (a1_coeffs.empty() || a1_coeffs[0] != 0.0)
        throw std::invalid_argument("polynomial a1 must satisfy a1(0) = 0");
    require_domain(domain);
    EigenvalueField f;
    f.kind_ = FieldKind::PolynomialReal;
    f.domain_ = domain;
    f.b1_ = b1;
    f.coeffs_ = std::move(a1_coeffs);
    return f;
}

double EigenvalueField::a1(double s) const {
    switch (kind_) {
        case FieldKind::NormalForm: return c_ * s;
        case FieldKind::ModifiedExp: return s * std::exp(-a_ * s);
        case FieldKind::PolynomialReal: {
            double acc = 0.0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
            return acc;
        }
    }
    return 0.0;
}

Complex EigenvalueField::lambda1(Complex tau) const {
    const Complex ib(0.0, b1_);
    switch (kind_) {
        case FieldKind::NormalForm: return c_ * tau - ib;
        case FieldKind::ModifiedExp: return tau * std::exp(-a_ * tau) - ib;
        case FieldKind::PolynomialReal: {
            Complex acc = 0.0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * tau + *it;
            return acc - ib;
        }
    }
    return {};
}

Complex EigenvalueField::lambda1_prime(Complex tau) const {
    switch (kind_) {
        case FieldKind::NormalForm: return Complex(c_, 0.0);
        case FieldKind::ModifiedExp: return std::exp(-a_ * tau) * (1.0 - a_ * tau);
        case FieldKind::PolynomialReal: {
            Complex acc = 0.0;
            for (std::size_t k = coeffs_.size(); k-- > 1;)
                acc = acc * tau + static_cast<double>(k) * coeffs_[k];
            return acc;
        }
    }
    return {};
}

Complex EigenvalueField::lambda1_second(Complex tau) const {
    switch (kind_) {
        case FieldKind::NormalForm: return Complex(0.0, 0.0);
        case FieldKind::ModifiedExp: return std::exp(-a_ * tau) * (a_ * a_ * tau - 2.0 * a_);
        case FieldKind::PolynomialReal: {
            Complex acc = 0.0;
            for (std::size_t k = coeffs_.size(); k-- > 2;)
                acc = acc * tau + static_cast<double>(k) * static_cast<double>(k - 1) * coeffs_[k];
            return acc;
        }
    }
    return {};
}

std::pair<Complex, Complex> EigenvalueField::eigenvalues_at(double s) const {
    if (!domain_.contains(s)) throw std::domain_error("eigenvalues_at: s outside field domain");
    const double re = a1(s);
    return {Complex(re, -b1_), Complex(re, b1_)};
}

double EigenvalueField::relief_sup_real() const {
    if (kind_ == FieldKind::ModifiedExp) return 1.0 / (a_ * a_);
    return std::numeric_limits<double>::infinity();
}

}  // namespace dhopf
