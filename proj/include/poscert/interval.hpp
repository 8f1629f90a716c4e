#ifndef POSCERT_INTERVAL_HPP
#define POSCERT_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <string>

#include "poscert/errors.hpp"

namespace poscert {

// Closed interval of binary64 endpoints with outward containment:
// every operation returns an interval that contains the exact real
// result for all real inputs drawn from the operands.  Endpoints are
// never NaN; an infinite endpoint signals overflow (or a deliberately
// unbounded quantity) and never certifies a finite bound.
//
// Rounding is software-outward: results are computed in the default
// round-to-nearest mode and each endpoint is then nudged to the next
// representable double when the exactly computed rounding error shows
// the nudge is needed.  No FPU state is touched, so everything here is
// reentrant and thread-safe.
struct Interval {
    double lo;
    double hi;

    Interval() : lo(0.0), hi(0.0) {}
    explicit Interval(double point) : lo(point), hi(point) { validate(); }
    Interval(double l, double h) : lo(l), hi(h) { validate(); }

    static Interval unchecked(double l, double h)
    {
        Interval x;
        x.lo = l;
        x.hi = h;
        return x;
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

    bool is_point() const { return lo == hi; }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool strictly_positive() const { return lo > 0.0; }
    bool strictly_negative() const { return hi < 0.0; }

private:
    void validate() const
    {
        if (std::isnan(lo) || std::isnan(hi) || !(lo <= hi))
            throw domain_error("Interval: endpoints must satisfy lo <= hi and be non-NaN");
    }
};

inline double next_up(double x)
{
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double next_down(double x)
{
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

// Basic arithmetic.  Division requires 0 to lie outside the divisor.
Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
Interval div(const Interval& a, const Interval& b);
Interval neg(const Interval& a);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

inline Interval hull(const Interval& a, const Interval& b)
{
    return Interval::unchecked(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

// Intersection of two enclosures of the same quantity.
Interval intersect(const Interval& a, const Interval& b);

// Enclosures of pi and ln 2, computed once from integer-exact series
// (Machin's formula and atanh(1/3)); no decimal literals involved.
const Interval& pi_enclosure();
const Interval& ln2_enclosure();

// Elementary functions with outward containment.
Interval sqrt(const Interval& x);            // x >= 0
Interval exp(const Interval& x);
Interval ln(const Interval& x);              // x > 0
Interval sin(const Interval& x);             // |x| <= 1e4
Interval cos(const Interval& x);             // |x| <= 1e4
Interval pow_int(const Interval& x, long n); // n < 0 requires 0 outside x
Interval pow_real(const Interval& x, const Interval& e); // x > 0 (x >= 0 when e > 0)
Interval root_n(const Interval& x, long n);  // x >= 0, n >= 1

// Gamma function on positive arguments: downward recursion to a
// Stirling series evaluated at a shifted argument >= 8, remainder
// bounded by the first omitted term.
Interval gamma(const Interval& x);           // x > 0

} // namespace poscert

#endif
