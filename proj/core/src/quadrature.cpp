#include "relopt/quadrature.hpp"

#include <cmath>
#include <string>

#include "relopt/errors.hpp"

namespace relopt {

namespace {

struct Budget {
    std::size_t remaining;
    bool exhausted = false;
};

double simpson(double fa, double fm, double fb, double h6) { return h6 * (fa + 4.0 * fm + fb); }

constexpr int kMaxDepth = 60;  // below double resolution for any sane window

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth, Budget& budget) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h12 = (b - a) / 12.0;
    const double left = simpson(fa, flm, fm, h12);
    const double right = simpson(fm, frm, fb, h12);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol || budget.exhausted) return left + right + delta / 15.0;
    if (budget.remaining == 0 || depth >= kMaxDepth) {
        budget.exhausted = true;
        return left + right + delta / 15.0;
    }
    --budget.remaining;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, budget) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, budget);
}

} // namespace

double integrate_window(const std::function<double(double)>& f, double t1, double t2,
                        const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0)) throw ParameterError("quadrature abs_tol must be positive");
    if (!(t1 < t2)) throw ParameterError("quadrature window must satisfy t1 < t2");

    const double m = 0.5 * (t1 + t2);
    const double fa = f(t1);
    const double fm = f(m);
    const double fb = f(t2);
    const double whole = simpson(fa, fm, fb, (t2 - t1) / 6.0);

    Budget budget{cfg.max_subdivisions};
    const double value = adapt(f, t1, t2, fa, fm, fb, whole, cfg.abs_tol, 0, budget);
    if (budget.exhausted)
        throw NumericalError("quadrature tolerance " + std::to_string(cfg.abs_tol) +
                                 " not reached within " + std::to_string(cfg.max_subdivisions) +
                                 " subdivisions",
                             value);
    return value;
}

} // namespace relopt
