#pragma once

#include <array>
#include <string>
#include <vector>

#include "dhopf/field.hpp"

namespace dhopf {

/// Phase-space box the fast-slow flow is studied on.
struct PhaseBox {
    double x_abs = 1.0;  // |x1|, |x2| <= x_abs
    double y_lo = -3.0;
    double y_hi = 3.0;
    bool contains(double x1, double x2, double y) const {
        return std::abs(x1) <= x_abs && std::abs(x2) <= x_abs && y >= y_lo && y <= y_hi;
    }
};

/// Planar Hopf fast subsystem with eigenvalue field `field` along the critical
/// manifold {x = 0}, supercritical cubic, and an additive eps*delta forcing in
/// the first fast component that breaks invariance of {x = 0} for eps > 0.
/// The slow equation is the reduced form dy/dtau = 1.
struct FastSlowSystem {
    EigenvalueField field;
    double delta = 1.0;
    double epsilon = 0.05;
    PhaseBox box;

    static constexpr double epsilon_star = 0.1;

    void validate() const;
};

/// Fast vector field f(x1, x2, y, eps) including the eps*delta forcing.
/// Rejects non-finite inputs.
std::array<double, 2> eval_fast(const FastSlowSystem& sys, double x1, double x2, double y,
                                double eps);

struct AssumptionCheck {
    std::string name;
    bool pass = false;
    double violation = 0.0;  // magnitude of the worst violation, 0 when passing
    std::string detail;
};

/// Every check performed on the given grid; nothing is skipped silently.
struct AssumptionReport {
    std::vector<AssumptionCheck> checks;
    std::vector<double> grid;
    bool all_pass() const;
    double worst_violation() const;
};

/// Grid-based verification of the standing assumptions: sign(a1(s)) = sign(s),
/// b1 > 0, transversality of a1 at 0, and delta > 0 (invariance breaking).
/// The grid must contain 0 and points of both signs.
AssumptionReport check_assumptions(const FastSlowSystem& sys, const std::vector<double>& grid);

}  // namespace dhopf
