#include "poscert/special.hpp"

#include <cmath>
#include <string>

namespace poscert {

namespace {

Interval interval_factorial(int n)
{
    Interval f(1.0);
    for (int k = 2; k <= n; ++k)
        f = mul(f, Interval(static_cast<double>(k)));
    return f;
}

} // namespace

Interval bessel_series(int n, const Interval& x)
{
    if (n < 0)
        throw domain_error("bessel_series: order must be >= 0");
    if (x.lo < 0.0 || x.hi > 30.0)
        throw domain_error("bessel_series: argument outside [0, 30]");

    const Interval h = div(x, Interval(2.0));
    const Interval h2 = mul(h, h);

    Interval term = div(pow_int(h, n), interval_factorial(n));
    Interval sum = term;
    int k = 1;
    for (; k <= 160; ++k) {
        term = div(mul(term, h2), Interval(static_cast<double>(k) * (n + k)));
        sum = (k % 2 == 1) ? sub(sum, term) : add(sum, term);
        // ratio of term k+2 to term k+1, evaluated at the right endpoint
        const double ratio = (x.hi * x.hi / 4.0) / ((k + 1.0) * (n + k + 1.0));
        if (ratio < 0.5 && term.mag() < 1e-18)
            break;
    }
    const Interval next = div(mul(term, h2), Interval((k + 1.0) * (n + k + 1.0)));
    const double tail = mul_up(2.0, next.mag());
    return add(sum, Interval(-tail, tail));
}

Interval bessel_series_derivative(int n, const Interval& x)
{
    if (n < 1)
        throw domain_error("bessel_series_derivative: order must be >= 1");
    return div(sub(bessel_series(n - 1, x), bessel_series(n + 1, x)), Interval(2.0));
}

bool verify_positive_on(int n, const Interval& interval, int subdivisions)
{
    if (interval.lo < 0.0 || interval.hi > 30.0)
        throw domain_error("verify_positive_on: interval outside [0, 30]");
    if (subdivisions < 1)
        throw domain_error("verify_positive_on: subdivisions must be >= 1");

    if (interval.is_point()) {
        if (n == 1 && interval.lo == 0.0)
            return false; // J_1(0) = 0, not strictly positive
        return bessel_series(n, interval).lo > 0.0;
    }

    const Interval width = sub(Interval(interval.hi), Interval(interval.lo));
    for (int i = 0; i < subdivisions; ++i) {
        const Interval frac_lo = div(Interval(static_cast<double>(i)),
                                     Interval(static_cast<double>(subdivisions)));
        const Interval frac_hi = div(Interval(static_cast<double>(i + 1)),
                                     Interval(static_cast<double>(subdivisions)));
        const double cell_lo = std::max(interval.lo, add(Interval(interval.lo), mul(width, frac_lo)).lo);
        const double cell_hi = std::min(interval.hi, add(Interval(interval.lo), mul(width, frac_hi)).hi);
        const Interval cell(cell_lo, std::max(cell_lo, cell_hi));

        if (n == 1 && cell.lo == 0.0) {
            // J_1(0) = 0: certify monotone increase instead, via J_1' > 0.
            if (!(bessel_series_derivative(1, cell).lo > 0.0))
                return false;
            continue;
        }
        if (!(bessel_series(n, cell).lo > 0.0))
            return false;
    }
    return true;
}

namespace {

// sin x - x cos x: same zeros as J_{3/2} on [pi, 1.5 pi], no division by x.
Interval spherical_core(const Interval& x)
{
    return sub(sin(x), mul(x, cos(x)));
}

struct Bracket {
    double lo, hi;
    Interval f_lo, f_hi;
};

ZeroEnclosure bisect_to_width(BesselOrder order, Bracket b, double tol,
                              Interval (*f)(int, const Interval&), int n)
{
    const double target = std::min(tol, 1e-13);
    const bool descending = b.f_lo.lo > 0.0; // + -> - across the bracket
    for (int iter = 0; iter < 200 && (b.hi - b.lo) > target; ++iter) {
        bool placed = false;
        for (double theta : {0.5, 0.25, 0.75, 0.4, 0.6}) {
            const double c = b.lo + theta * (b.hi - b.lo);
            if (!(c > b.lo && c < b.hi))
                continue;
            const Interval fc = f(n, Interval(c));
            const bool positive = fc.lo > 0.0;
            const bool negative = fc.hi < 0.0;
            if (!positive && !negative)
                continue;
            if (positive == descending) {
                b.lo = c;
                b.f_lo = fc;
            } else {
                b.hi = c;
                b.f_hi = fc;
            }
            placed = true;
            break;
        }
        if (!placed) {
            if ((b.hi - b.lo) <= tol)
                break;
            throw precision_error("first_zero: bisection stagnated above the requested width");
        }
    }
    if ((b.hi - b.lo) > tol)
        throw precision_error("first_zero: requested width not reached");
    return ZeroEnclosure{order, Interval(b.lo, b.hi),
                         SignChangeCertificate{b.f_lo, b.f_hi}};
}

Interval eval_bessel(int n, const Interval& x) { return bessel_series(n, x); }
Interval eval_spherical(int /*n*/, const Interval& x) { return spherical_core(x); }

} // namespace

ZeroEnclosure first_zero(BesselOrder order, double tol)
{
    if (tol < 1e-11)
        throw domain_error("first_zero: tol must be >= 1e-11");

    if (order.twice == 1) {
        // J_{1/2}(x) = sqrt(2/(pi x)) sin x: first zero is pi itself.
        return ZeroEnclosure{order, pi_enclosure(), std::nullopt};
    }

    if (order.twice == 3) {
        // Zeros of J_{3/2} solve x = tan x; bracket the first one in [pi, 1.5 pi].
        const double a = pi_enclosure().hi;
        const double b = mul(Interval(1.5), pi_enclosure()).lo;
        const Interval fa = spherical_core(Interval(a));
        const Interval fb = spherical_core(Interval(b));
        if (!(fa.lo > 0.0 && fb.hi < 0.0))
            throw precision_error("first_zero: could not certify the [pi, 1.5 pi] bracket");
        return bisect_to_width(order, Bracket{a, b, fa, fb}, tol, eval_spherical, 0);
    }

    if (order.twice != 0 && order.twice != 2)
        throw domain_error("first_zero: supported orders are 0, 1/2, 1, 3/2");
    const int n = order.twice / 2;

    if (!verify_positive_on(n, Interval(0.0, 1.0), 16))
        throw precision_error("first_zero: positivity on [0, 1] could not be certified");

    // Scan windows [1 + (i-1) eps/2, 1 + (i-1) eps/2 + eps] for a certified
    // sign change, eps = 1/64.
    const double eps = 1.0 / 64.0;
    for (int i = 1; i <= 1024; ++i) {
        const double lo = 1.0 + (i - 1) * (eps / 2.0);
        const double hi = lo + eps;
        const Interval flo = bessel_series(n, Interval(lo));
        const Interval fhi = bessel_series(n, Interval(hi));
        if (flo.lo > 0.0 && fhi.hi < 0.0)
            return bisect_to_width(order, Bracket{lo, hi, flo, fhi}, tol, eval_bessel, n);
    }
    throw precision_error("first_zero: no certified sign change found in the scan range");
}

} // namespace poscert
