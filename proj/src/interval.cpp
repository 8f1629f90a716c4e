#include "poscert/interval.hpp"

#include <algorithm>
#include <cfloat>
#include <cstdint>

namespace poscert {

static_assert(std::numeric_limits<double>::is_iec559, "binary64 IEEE arithmetic required");

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();
constexpr double kMinNormal = std::numeric_limits<double>::min();

// Exact rounding error of s = RN(a + b) (Knuth 2Sum); valid for finite s.
inline double two_sum_err(double a, double b, double s)
{
    const double bb = s - a;
    const double aa = s - bb;
    const double da = a - aa;
    const double db = b - bb;
    return da + db;
}

inline double add_down(double a, double b)
{
    const double s = a + b;
    if (std::isnan(s))
        throw domain_error("interval add: inf - inf");
    if (std::isinf(s))
        return (s > 0 && std::isfinite(a) && std::isfinite(b)) ? kMax : s;
    if (std::isinf(a) || std::isinf(b))
        return s;
    return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b)
{
    const double s = a + b;
    if (std::isnan(s))
        throw domain_error("interval add: inf - inf");
    if (std::isinf(s))
        return (s < 0 && std::isfinite(a) && std::isfinite(b)) ? -kMax : s;
    if (std::isinf(a) || std::isinf(b))
        return s;
    return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
}

inline double mul_down(double a, double b)
{
    if (a == 0.0 || b == 0.0)
        return 0.0;
    const double p = a * b;
    if (std::isnan(p))
        throw domain_error("interval mul: 0 * inf");
    if (std::isinf(p))
        return (p > 0 && std::isfinite(a) && std::isfinite(b)) ? kMax : p;
    if (std::isinf(a) || std::isinf(b))
        return p;
    if (std::fabs(p) < kMinNormal)
        return next_down(p);
    return std::fma(a, b, -p) < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b)
{
    if (a == 0.0 || b == 0.0)
        return 0.0;
    const double p = a * b;
    if (std::isnan(p))
        throw domain_error("interval mul: 0 * inf");
    if (std::isinf(p))
        return (p < 0 && std::isfinite(a) && std::isfinite(b)) ? -kMax : p;
    if (std::isinf(a) || std::isinf(b))
        return p;
    if (std::fabs(p) < kMinNormal)
        return next_up(p);
    return std::fma(a, b, -p) > 0 ? next_up(p) : p;
}

// q compared to the true quotient a/b: sign(q - a/b) = sign(q*b - a) * sign(b),
// and fma(q, b, -a) computes q*b - a exactly away from the subnormal range.
inline double div_down(double a, double b)
{
    if (a == 0.0)
        return 0.0;
    const double q = a / b;
    if (std::isinf(q))
        return (q > 0 && std::isfinite(a)) ? kMax : q;
    if (std::isinf(a))
        return q;
    if (std::isinf(b))
        return next_down(q);
    if (std::fabs(q) < kMinNormal || std::fabs(a) < kMinNormal)
        return next_down(q);
    const double r = std::fma(q, b, -a);
    const bool q_high = (r != 0.0) && ((r > 0) == (b > 0));
    return q_high ? next_down(q) : q;
}

inline double div_up(double a, double b)
{
    if (a == 0.0)
        return 0.0;
    const double q = a / b;
    if (std::isinf(q))
        return (q < 0 && std::isfinite(a)) ? -kMax : q;
    if (std::isinf(a))
        return q;
    if (std::isinf(b))
        return next_up(q);
    if (std::fabs(q) < kMinNormal || std::fabs(a) < kMinNormal)
        return next_up(q);
    const double r = std::fma(q, b, -a);
    const bool q_low = (r != 0.0) && ((r > 0) != (b > 0));
    return q_low ? next_up(q) : q;
}

} // namespace

Interval add(const Interval& a, const Interval& b)
{
    return Interval::unchecked(add_down(a.lo, b.lo), add_up(a.hi, b.hi));
}

Interval sub(const Interval& a, const Interval& b)
{
    return Interval::unchecked(add_down(a.lo, -b.hi), add_up(a.hi, -b.lo));
}

Interval neg(const Interval& a)
{
    return Interval::unchecked(-a.hi, -a.lo);
}

Interval mul(const Interval& a, const Interval& b)
{
    const double lo = std::min(std::min(mul_down(a.lo, b.lo), mul_down(a.lo, b.hi)),
                               std::min(mul_down(a.hi, b.lo), mul_down(a.hi, b.hi)));
    const double hi = std::max(std::max(mul_up(a.lo, b.lo), mul_up(a.lo, b.hi)),
                               std::max(mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)));
    return Interval::unchecked(lo, hi);
}

Interval div(const Interval& a, const Interval& b)
{
    if (b.lo <= 0.0 && b.hi >= 0.0)
        throw domain_error("interval div: divisor contains zero");
    const double lo = std::min(std::min(div_down(a.lo, b.lo), div_down(a.lo, b.hi)),
                               std::min(div_down(a.hi, b.lo), div_down(a.hi, b.hi)));
    const double hi = std::max(std::max(div_up(a.lo, b.lo), div_up(a.lo, b.hi)),
                               std::max(div_up(a.hi, b.lo), div_up(a.hi, b.hi)));
    return Interval::unchecked(lo, hi);
}

Interval intersect(const Interval& a, const Interval& b)
{
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (!(lo <= hi))
        throw domain_error("intersect: empty intersection of two enclosures");
    return Interval::unchecked(lo, hi);
}

namespace {

// atan(1/d) for integer d, by the alternating arctangent series with the
// first omitted term bounding the tail.
Interval atan_inv(long d, int terms)
{
    const Interval t = div(Interval(1.0), Interval(static_cast<double>(d)));
    const Interval t2 = mul(t, t);
    Interval power = t;
    Interval sum = t;
    for (int k = 1; k <= terms; ++k) {
        power = mul(power, t2);
        const Interval contrib = div(power, Interval(2.0 * k + 1.0));
        sum = (k % 2 == 1) ? sub(sum, contrib) : add(sum, contrib);
    }
    const Interval next = div(mul(power, t2), Interval(2.0 * terms + 3.0));
    return add(sum, Interval(-next.hi, next.hi));
}

// atanh(1/d), all terms positive; tail bounded geometrically.
Interval atanh_inv(long d, int terms)
{
    const Interval t = div(Interval(1.0), Interval(static_cast<double>(d)));
    const Interval t2 = mul(t, t);
    Interval power = t;
    Interval sum = t;
    for (int k = 1; k <= terms; ++k) {
        power = mul(power, t2);
        sum = add(sum, div(power, Interval(2.0 * k + 1.0)));
    }
    const Interval next = div(mul(power, t2), Interval(2.0 * terms + 3.0));
    const Interval geo = div(next, sub(Interval(1.0), t2));
    return add(sum, Interval(0.0, geo.hi));
}

} // namespace

const Interval& pi_enclosure()
{
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    static const Interval pi = [] {
        const Interval a = atan_inv(5, 30);
        const Interval b = atan_inv(239, 12);
        return sub(mul(Interval(16.0), a), mul(Interval(4.0), b));
    }();
    return pi;
}

const Interval& ln2_enclosure()
{
    static const Interval l = [] { return mul(Interval(2.0), atanh_inv(3, 30)); }();
    return l;
}

namespace {

const Interval& two_pi()
{
    static const Interval v = mul(Interval(2.0), pi_enclosure());
    return v;
}

const Interval& half_pi()
{
    static const Interval v = div(pi_enclosure(), Interval(2.0));
    return v;
}

const Interval& ln_2pi()
{
    static const Interval v = [] {
        return add(ln2_enclosure(), ln(pi_enclosure()));
    }();
    return v;
}

bool overlaps(const Interval& a, const Interval& b)
{
    return a.lo <= b.hi && b.lo <= a.hi;
}

// sin or cos of a point after reduction by the nearest multiple of 2*pi;
// the reduced argument r satisfies |r| <= pi + slack, so the Taylor terms
// decrease from the first step on and the tail is bounded by the first
// omitted term.
Interval sincos_reduced(const Interval& r, bool want_sin)
{
    const Interval r2 = mul(r, r);
    Interval term = want_sin ? r : Interval(1.0);
    Interval sum = term;
    double fact_index = want_sin ? 1.0 : 0.0;
    for (int k = 0; k < 18; ++k) {
        term = div(mul(term, r2), Interval((fact_index + 1.0) * (fact_index + 2.0)));
        fact_index += 2.0;
        sum = (k % 2 == 0) ? sub(sum, term) : add(sum, term);
    }
    const Interval next = div(mul(term, r2), Interval((fact_index + 1.0) * (fact_index + 2.0)));
    if (next.mag() >= term.mag() && term.mag() > 0)
        throw precision_error("sincos_reduced: series terms not decreasing");
    return add(sum, Interval(-next.mag(), next.mag()));
}

Interval reduce_mod_2pi(const Interval& x)
{
    const double k = std::nearbyint(x.mid() / 6.283185307179586);
    if (k == 0.0)
        return x;
    return sub(x, mul(Interval(k), two_pi()));
}

Interval sin_point(double x)
{
    return sincos_reduced(reduce_mod_2pi(Interval(x)), true);
}

Interval cos_point(double x)
{
    return sincos_reduced(reduce_mod_2pi(Interval(x)), false);
}

} // namespace

Interval sin(const Interval& x)
{
    if (x.mag() > 1.0e4)
        throw domain_error("sin: |argument| > 1e4 not supported");
    if (x.width() >= two_pi().hi)
        return Interval(-1.0, 1.0);
    const Interval y = reduce_mod_2pi(x);
    Interval result = hull(sin_point(x.lo), sin_point(x.hi));
    // Interior extrema of sin on (-2pi, 2pi): odd multiples of pi/2.
    for (int c : {-3, -1, 1, 3}) {
        const Interval cand = mul(Interval(static_cast<double>(c)), half_pi());
        if (overlaps(cand, y)) {
            const double extremum = (((c % 4) + 4) % 4 == 1) ? 1.0 : -1.0;
            result = hull(result, Interval(extremum));
        }
    }
    return intersect(result, Interval(-1.0, 1.0));
}

Interval cos(const Interval& x)
{
    if (x.mag() > 1.0e4)
        throw domain_error("cos: |argument| > 1e4 not supported");
    if (x.width() >= two_pi().hi)
        return Interval(-1.0, 1.0);
    const Interval y = reduce_mod_2pi(x);
    Interval result = hull(cos_point(x.lo), cos_point(x.hi));
    for (int c : {-2, -1, 0, 1, 2}) {
        const Interval cand = mul(Interval(static_cast<double>(c)), pi_enclosure());
        if (overlaps(cand, y)) {
            const double extremum = (c % 2 == 0) ? 1.0 : -1.0;
            result = hull(result, Interval(extremum));
        }
    }
    return intersect(result, Interval(-1.0, 1.0));
}

namespace {

inline double sqrt_down(double a)
{
    if (a == 0.0)
        return 0.0;
    const double r = std::sqrt(a);
    if (std::isinf(r))
        return r;
    if (std::fma(r, r, -a) == 0.0)
        return r;
    return next_down(r);
}

inline double sqrt_up(double a)
{
    if (a == 0.0)
        return 0.0;
    const double r = std::sqrt(a);
    if (std::isinf(r))
        return r;
    if (std::fma(r, r, -a) == 0.0)
        return r;
    return next_up(r);
}

} // namespace

Interval sqrt(const Interval& x)
{
    if (x.lo < 0.0)
        throw domain_error("sqrt: negative argument");
    return Interval::unchecked(sqrt_down(x.lo), sqrt_up(x.hi));
}

namespace {

// exp at a point via r = x - k ln2, |r| < 0.4, Taylor sum, tail bounded
// geometrically, result scaled by the exact power 2^k.
Interval exp_point(double x)
{
    if (x > 710.0)
        return Interval::unchecked(kMax, kInf);
    const double k = std::nearbyint(x * 1.4426950408889634); // ~1/ln2
    if (k < -1080.0)
        return Interval::unchecked(0.0, next_up(0.0));
    const Interval r = sub(Interval(x), mul(Interval(k), ln2_enclosure()));
    Interval term(1.0);
    Interval sum(1.0);
    for (int j = 1; j <= 22; ++j) {
        term = div(mul(term, r), Interval(static_cast<double>(j)));
        sum = add(sum, term);
    }
    const Interval next = div(mul(term, r), Interval(23.0));
    const double tail = next.mag() / (1.0 - r.mag() / 24.0);
    Interval result = add(sum, Interval(-tail, tail));
    const int ik = static_cast<int>(k);
    if (ik >= 1024)
        return Interval::unchecked(mul_down(result.lo, kMax), kInf);
    const double scale = std::ldexp(1.0, ik);
    result = mul(result, Interval(scale));
    if (result.lo < 0.0)
        result.lo = 0.0;
    return result;
}

// ln at a point: x = m 2^e with m in [sqrt(1/2), sqrt(2)), then
// ln m = 2 atanh((m-1)/(m+1)) with |t| <= 0.1716.
Interval ln_point(double x)
{
    int e = 0;
    double m = std::frexp(x, &e);
    if (m < 0.70710678118654752) {
        m *= 2.0;
        e -= 1;
    }
    const Interval t = div(sub(Interval(m), Interval(1.0)), add(Interval(m), Interval(1.0)));
    const Interval t2 = mul(t, t);
    Interval power = t;
    Interval sum = t;
    const int terms = 14;
    for (int j = 1; j <= terms; ++j) {
        power = mul(power, t2);
        sum = add(sum, div(power, Interval(2.0 * j + 1.0)));
    }
    const Interval nxt = div(mul(power, t2), Interval(2.0 * terms + 3.0));
    const Interval geo = div(nxt, sub(Interval(1.0), t2));
    sum = add(sum, Interval(-geo.mag(), geo.mag()));
    return add(mul(Interval(2.0), sum), mul(Interval(static_cast<double>(e)), ln2_enclosure()));
}

} // namespace

Interval exp(const Interval& x)
{
    const Interval lo = exp_point(x.lo);
    const Interval hi = exp_point(x.hi);
    return Interval::unchecked(std::max(0.0, lo.lo), hi.hi);
}

Interval ln(const Interval& x)
{
    if (x.lo <= 0.0)
        throw domain_error("ln: argument must be strictly positive");
    const Interval lo = ln_point(x.lo);
    const Interval hi = ln_point(x.hi);
    return Interval::unchecked(lo.lo, hi.hi);
}

namespace {

// x^n for x >= 0 by repeated squaring with one-sided rounding chains.
double pos_pow_down(double x, unsigned long n)
{
    double result = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1UL)
            result = mul_down(result, base);
        n >>= 1;
        if (n)
            base = mul_down(base, base);
    }
    return result;
}

double pos_pow_up(double x, unsigned long n)
{
    double result = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1UL)
            result = mul_up(result, base);
        n >>= 1;
        if (n)
            base = mul_up(base, base);
    }
    return result;
}

} // namespace

Interval pow_int(const Interval& x, long n)
{
    if (n == 0)
        return Interval(1.0);
    if (n < 0)
        return div(Interval(1.0), pow_int(x, -n));
    const unsigned long un = static_cast<unsigned long>(n);
    if (x.lo >= 0.0)
        return Interval::unchecked(pos_pow_down(x.lo, un), pos_pow_up(x.hi, un));
    if (x.hi <= 0.0) {
        const double alo = -x.hi;
        const double ahi = -x.lo;
        if (n % 2 == 0)
            return Interval::unchecked(pos_pow_down(alo, un), pos_pow_up(ahi, un));
        return Interval::unchecked(-pos_pow_up(ahi, un), -pos_pow_down(alo, un));
    }
    // straddles zero
    if (n % 2 == 0)
        return Interval::unchecked(0.0, pos_pow_up(x.mag(), un));
    return Interval::unchecked(-pos_pow_up(-x.lo, un), pos_pow_up(x.hi, un));
}

Interval pow_real(const Interval& x, const Interval& e)
{
    if (e.is_point() && std::floor(e.lo) == e.lo && std::fabs(e.lo) < 2147483647.0)
        return pow_int(x, static_cast<long>(e.lo));
    if (x.lo < 0.0)
        throw domain_error("pow_real: base must be nonnegative");
    if (x.lo == 0.0) {
        if (e.lo <= 0.0)
            throw domain_error("pow_real: 0 base requires a positive exponent");
        if (x.hi == 0.0)
            return Interval(0.0);
        const Interval upper = exp(mul(e, ln(Interval(x.hi))));
        return Interval::unchecked(0.0, upper.hi);
    }
    return exp(mul(e, ln(x)));
}

namespace {

double rootn_down(double a, long n)
{
    if (a == 0.0)
        return 0.0;
    const unsigned long un = static_cast<unsigned long>(n);
    double r = std::pow(a, 1.0 / static_cast<double>(n));
    for (int i = 0; i < 128 && pos_pow_up(r, un) > a; ++i)
        r = next_down(r);
    if (pos_pow_up(r, un) > a)
        return exp(div(ln(Interval(a, a)), Interval(static_cast<double>(n)))).lo;
    // try to tighten upward while staying certified
    while (pos_pow_up(next_up(r), un) <= a)
        r = next_up(r);
    return r;
}

double rootn_up(double a, long n)
{
    if (a == 0.0)
        return 0.0;
    const unsigned long un = static_cast<unsigned long>(n);
    double r = std::pow(a, 1.0 / static_cast<double>(n));
    for (int i = 0; i < 128 && pos_pow_down(r, un) < a; ++i)
        r = next_up(r);
    if (pos_pow_down(r, un) < a)
        return exp(div(ln(Interval(a, a)), Interval(static_cast<double>(n)))).hi;
    while (pos_pow_down(next_down(r), un) >= a)
        r = next_down(r);
    return r;
}

} // namespace

Interval root_n(const Interval& x, long n)
{
    if (n < 1)
        throw domain_error("root_n: order must be >= 1");
    if (x.lo < 0.0)
        throw domain_error("root_n: negative argument");
    if (n == 1)
        return x;
    return Interval::unchecked(rootn_down(x.lo, n), rootn_up(x.hi, n));
}

namespace {

// Stirling series for ln Gamma(z), z >= 8, with eight correction terms;
// the remainder is bounded in magnitude by the first omitted term.
Interval ln_gamma_stirling(const Interval& z)
{
    struct Coeff {
        double num;
        double den;
    };
    // B_{2k} / (2k (2k-1)) for k = 1..8, and the k = 9 magnitude for the tail.
    static const Coeff coeffs[8] = {
        {1.0, 12.0},      {-1.0, 360.0},     {1.0, 1260.0},  {-1.0, 1680.0},
        {1.0, 1188.0},    {-691.0, 360360.0}, {1.0, 156.0},  {-3617.0, 122400.0},
    };
    static const Coeff tail_coeff = {43867.0, 244188.0};

    const Interval lnz = ln(z);
    Interval result = sub(mul(sub(z, Interval(0.5)), lnz), z);
    result = add(result, mul(Interval(0.5), ln_2pi()));

    const Interval z2 = mul(z, z);
    Interval zpow = z; // z^(2k-1)
    for (int k = 0; k < 8; ++k) {
        const Interval c = div(Interval(coeffs[k].num), Interval(coeffs[k].den));
        result = add(result, div(c, zpow));
        zpow = mul(zpow, z2);
    }
    const Interval tail_mag = div(div(Interval(tail_coeff.num), Interval(tail_coeff.den)), zpow);
    return add(result, Interval(-tail_mag.hi, tail_mag.hi));
}

Interval gamma_core(const Interval& x)
{
    double shift = 0.0;
    if (x.lo < 8.0)
        shift = std::ceil(8.0 - x.lo);
    const Interval z = add(x, Interval(shift));
    Interval value = exp(ln_gamma_stirling(z));
    // Gamma(x) = Gamma(x + n) / (x (x+1) ... (x+n-1))
    for (double i = 0.0; i < shift; i += 1.0)
        value = div(value, add(x, Interval(i)));
    return value;
}

} // namespace

Interval gamma(const Interval& x)
{
    if (x.lo <= 0.0)
        throw domain_error("gamma: argument must be strictly positive");
    if (x.is_point())
        return gamma_core(x);
    const Interval at_lo = gamma_core(Interval(x.lo));
    const Interval at_hi = gamma_core(Interval(x.hi));
    Interval result = hull(at_lo, at_hi);
    // Gamma is unimodal on (0, inf) with its minimum inside [1.4616, 1.4617];
    // an interval straddling the minimum needs the bracket value in the hull.
    const Interval bracket(1.4616, 1.4617);
    if (overlaps(x, bracket))
        result = hull(result, gamma_core(bracket));
    return result;
}

} // namespace poscert
