#ifndef POSCERT_SPECIAL_HPP
#define POSCERT_SPECIAL_HPP

#include <optional>

#include "poscert/interval.hpp"

namespace poscert {

// Bessel order nu, stored as 2*nu so integer and half-integer orders share
// one exact representation.  Zero-finding is first-class only for the
// orders 0, 1/2, 1, 3/2.
struct BesselOrder {
    int twice;

    static BesselOrder integer(int n) { return BesselOrder{2 * n}; }
    static BesselOrder half_integer(int k) { return BesselOrder{2 * k + 1}; }

    bool is_integer() const { return twice % 2 == 0; }
    double value() const { return 0.5 * twice; }
};

// Endpoint enclosures certifying a sign change across the bracket.
struct SignChangeCertificate {
    Interval f_at_lo;
    Interval f_at_hi;
};

struct ZeroEnclosure {
    BesselOrder order;
    Interval zero;
    // Empty when the zero is analytically exact (order 1/2: the zero is pi).
    std::optional<SignChangeCertificate> certificate;
};

// Enclosure of J_n over X, n >= 0 integer, X inside [0, 30].  Ascending
// power series; truncated where the term ratio on X drops below 1/2, with
// the tail bounded by twice the first omitted term.
Interval bessel_series(int n, const Interval& x);

// Enclosure of J_n'(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2 for n >= 1.
Interval bessel_series_derivative(int n, const Interval& x);

// True only if J_n is certified strictly positive on every subdivision
// cell of I (for n = 1 a cell touching zero is covered by a strictly
// positive derivative enclosure instead: J_1(0) = 0 and J_1 increases).
// Returns false when inconclusive; never throws for in-domain input.
bool verify_positive_on(int n, const Interval& interval, int subdivisions);

// Enclosure of the first positive zero of J_nu for nu in {0, 1/2, 1, 3/2}.
// Order 1/2 returns the pi enclosure (exact zero).  Order 3/2 brackets the
// root of sin x - x cos x on [pi, 1.5 pi].  Integer orders certify
// positivity on [0, 1], scan with step 1/64 for a certified sign change,
// then bisect.  The returned width never exceeds tol (tol >= 1e-11).
ZeroEnclosure first_zero(BesselOrder order, double tol);

} // namespace poscert

#endif
