#include "bmw/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "bmw/errors.hpp"

namespace bmw {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
// abscissae/weights). All nodes are interior, so the rule never touches the
// endpoints of a cell.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

// Order-9 smoothstep q(t) = t^5 (126 - 420t + 540t^2 - 315t^3 + 70t^4):
// q(0)=0, q(1)=1, and the first four derivatives vanish at both ends, so the
// Jacobian q'(t) = 630 t^4 (1-t)^4 soaks up algebraic endpoint singularities
// of the integrand. By symmetry 1 - q(t) = q(1-t), which lets the distance
// to the upper endpoint be evaluated without cancellation.
double smooth9(double t) {
    return t * t * t * t * t
         * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + t * 70.0))));
}

double dsmooth9(double t) {
    const double w = t * (1.0 - t);
    const double w2 = w * w;
    return 630.0 * w2 * w2;
}

constexpr int kMaxDepth = 60;

struct Cell {
    double lo, hi;      // in map space (0,1)
    double value;
    double error;
    int depth;

    bool operator<(const Cell& other) const { return error < other.error; }
};

struct Mapped {
    // g(t) = f(x(t)) * x'(t), with s = 1 - t supplied separately so cells
    // adjacent to t = 1 keep their endpoint distance exact.
    std::function<double(double, double)> g;
};

[[noreturn]] void throw_nonfinite(double x, double v) {
    std::ostringstream msg;
    msg << "adaptive_quad: integrand returned non-finite value " << v
        << " at x = " << x;
    throw ConvergenceError(msg.str());
}

// One Gauss-Kronrod evaluation of the mapped integrand over [lo,hi] in map
// space. Bisection keeps cell bounds dyadic, so sc = 1 - c is exact and node
// distances from the t = 1 end do not cancel.
Cell gk15(const Mapped& m, double lo, double hi, int depth,
          std::size_t& evaluations) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double sc = 1.0 - c;

    auto node = [&](double dx) {
        return m.g(c + dx, sc - dx);
    };

    const double fc = node(0.0);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double v = node(-dx) + node(dx);
        kron += kWgk[j] * v;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * v;
    }
    evaluations += 15;
    Cell cell;
    cell.lo = lo;
    cell.hi = hi;
    cell.value = kron * h;
    cell.error = std::abs(kron - gauss) * h;
    cell.depth = depth;
    if (!std::isfinite(cell.value))
        throw ConvergenceError("adaptive_quad: non-finite cell estimate");
    return cell;
}

} // namespace

QuadResult adaptive_quad(const std::function<double(double)>& f,
                         double lo, double hi, double tol) {
    if (!(lo < hi))
        throw DomainError("adaptive_quad: requires lo < hi");
    if (!(tol > 0.0))
        throw DomainError("adaptive_quad: requires tol > 0");

    Mapped m;
    if (std::isinf(hi)) {
        // x = lo + q/(1-q) maps (0,1) onto (lo, inf).
        m.g = [&f, lo](double t, double s) {
            const double q = smooth9(t);
            const double qc = smooth9(s);
            if (qc <= 0.0)
                return 0.0;   // beyond representable x; integrand must vanish
            const double x = lo + q / qc;
            const double v = f(x) * dsmooth9(t) / (qc * qc);
            if (!std::isfinite(v))
                throw_nonfinite(x, v);
            return v;
        };
    } else {
        const double span = hi - lo;
        m.g = [&f, lo, hi, span](double t, double s) {
            const double q = smooth9(t);
            const double qc = smooth9(s);
            const double x = t <= 0.5 ? lo + span * q : hi - span * qc;
            const double v = f(x) * span * dsmooth9(t);
            if (!std::isfinite(v))
                throw_nonfinite(x, v);
            return v;
        };
    }

    std::size_t evaluations = 0;
    std::priority_queue<Cell> cells;
    Cell top = gk15(m, 0.0, 1.0, 0, evaluations);
    double total = top.value;
    double total_err = top.error;
    cells.push(top);

    while (total_err > tol && !cells.empty()) {
        const Cell worst = cells.top();
        cells.pop();
        if (worst.depth >= kMaxDepth) {
            std::ostringstream msg;
            msg << "adaptive_quad: subdivision depth limit exceeded, error "
                   "estimate "
                << total_err << " > tol " << tol;
            throw ConvergenceError(msg.str());
        }
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Cell left = gk15(m, worst.lo, mid, worst.depth + 1, evaluations);
        const Cell right = gk15(m, mid, worst.hi, worst.depth + 1, evaluations);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        cells.push(left);
        cells.push(right);
    }

    return QuadResult{total, total_err, evaluations};
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
    if (!(h > 0.0))
        throw DomainError("central_diff: requires h > 0");
    auto d4 = [&](double step) {
        return (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step)
                - f(x + 2.0 * step)) / (12.0 * step);
    };
    // One Richardson level over the O(h^4) stencil.
    const double coarse = d4(h);
    const double fine = d4(0.5 * h);
    return (16.0 * fine - coarse) / 15.0;
}

double brent_root(const std::function<double(double)>& f,
                  double lo, double hi, double tol) {
    if (!(lo <= hi) || !(tol > 0.0))
        throw DomainError("brent_root: invalid interval or tolerance");

    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if (fa * fb > 0.0)
        throw DomainError("brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon()
                          * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    throw ConvergenceError("brent_root: iteration cap reached");
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(lo < hi))
        throw DomainError("linear_grid: need n >= 2 and lo < hi");
    std::vector<double> g(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(lo < hi) || !(lo > 0.0))
        throw DomainError("log_grid: need n >= 2 and 0 < lo < hi");
    std::vector<double> g(n);
    const double llo = std::log(lo);
    const double step = (std::log(hi) - llo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = std::exp(llo + step * static_cast<double>(i));
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace bmw
