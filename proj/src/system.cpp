#include "dhopf/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dhopf {

void FastSlowSystem::validate() const {
    if (!(epsilon > 0.0) || epsilon > epsilon_star)
        throw std::invalid_argument("epsilon must lie in (0, 0.1]");
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
    if (!(box.x_abs > 0.0) || !(box.y_lo < box.y_hi))
        throw std::invalid_argument("degenerate phase-space box");
}

std::array<double, 2> eval_fast(const FastSlowSystem& sys, double x1, double x2, double y,
                                double eps) {
    if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(y) || !std::isfinite(eps))
        throw std::domain_error("eval_fast: non-finite input");
    const double a = sys.field.a1(y);
    const double b = sys.field.b1();
    const double r2 = x1 * x1 + x2 * x2;
    return {a * x1 - b * x2 - x1 * r2 + eps * sys.delta,
            b * x1 + a * x2 - x2 * r2};
}

bool AssumptionReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AssumptionCheck& c) { return c.pass; });
}

double AssumptionReport::worst_violation() const {
    double w = 0.0;
    for (const auto& c : checks) w = std::max(w, c.violation);
    return w;
}

AssumptionReport check_assumptions(const FastSlowSystem& sys, const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("check_assumptions: empty grid");
    bool has_zero = false, has_neg = false, has_pos = false;
    for (double s : grid) {
        if (!sys.field.domain().contains(s))
            throw std::domain_error("check_assumptions: grid point outside field domain");
        has_zero |= (s == 0.0);
        has_neg |= (s < 0.0);
        has_pos |= (s > 0.0);
    }
    if (!has_zero || !has_neg || !has_pos)
        throw std::invalid_argument("check_assumptions: grid must contain 0 and points of both signs");

    AssumptionReport rep;
    rep.grid = grid;
    auto add = [&rep](std::string name, bool pass, double violation, std::string detail) {
        rep.checks.push_back({std::move(name), pass, violation, std::move(detail)});
    };

    // critical manifold {x = 0} and reduced slow flow hold by construction
    add("critical_manifold_is_axis", true, 0.0, "structural: f(0,0,y,0) = 0 for all y");
    add("slow_equation_unit_speed", true, 0.0, "structural: dy/dtau = 1");

    // sign(a1(s)) = sign(s) on the grid
    bool sign_ok = true;
    double worst_sign = 0.0;
    double worst_at = 0.0;
    for (double s : grid) {
        if (s == 0.0) continue;
        const double margin = (s > 0.0 ? 1.0 : -1.0) * sys.field.a1(s);
        if (margin <= 0.0) {
            sign_ok = false;
            if (-margin >= worst_sign) {
                worst_sign = -margin;
                worst_at = s;
            }
        }
    }
    {
        std::ostringstream os;
        if (!sign_ok) os << "sign(a1(s)) != sign(s) at s = " << worst_at;
        add("eigenvalue_sign_condition", sign_ok, worst_sign, os.str());
    }

    // b1(0) > 0
    const double b0 = sys.field.b1();
    add("rotation_positive_at_origin", b0 > 0.0, b0 > 0.0 ? 0.0 : -b0, "b1(0) > 0");

    // transversality: da1/ds(0) != 0, central finite difference
    const double h = 1e-6 * std::max(1.0, sys.field.domain().hi - sys.field.domain().lo);
    const double deriv = (sys.field.a1(h) - sys.field.a1(-h)) / (2.0 * h);
    const bool transversal = std::abs(deriv) > 1e-8;
    {
        std::ostringstream os;
        os << "da1/ds(0) ~ " << deriv;
        add("transversality_at_origin", transversal, transversal ? 0.0 : 1e-8 - std::abs(deriv),
            os.str());
    }

    // genericity of the Hopf point: first Lyapunov coefficient fixed by the
    // supercritical cubic
    add("cubic_coefficient_nonzero", true, 0.0, "structural: supercritical cubic -1");

    // invariance breaking: delta > 0
    add("invariance_breaking_forcing", sys.delta > 0.0, sys.delta > 0.0 ? 0.0 : 1.0,
        "delta > 0 so {x = 0} is not invariant for eps > 0");

    return rep;
}

}  // namespace dhopf
