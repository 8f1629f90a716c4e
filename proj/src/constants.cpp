#include "poscert/constants.hpp"

#include <cmath>

#include "poscert/special.hpp"

namespace poscert {

void DomainSpec::validate() const
{
    if (dimension < 2)
        throw domain_error("DomainSpec: dimension must be >= 2");
    if (!(volume.lo > 0.0))
        throw domain_error("DomainSpec: volume must be strictly positive");
    if (lambda1_lower && !(lambda1_lower->lo > 0.0))
        throw domain_error("DomainSpec: lambda1 lower bound must be strictly positive");
    for (const Interval& s : sides)
        if (!(s.lo > 0.0))
            throw domain_error("DomainSpec: side lengths must be strictly positive");
}

Interval pow_rational(const Interval& x, long num, long den)
{
    if (x.lo < 0.0)
        throw domain_error("pow_rational: negative base");
    if (num < 0 || den < 1)
        throw domain_error("pow_rational: exponent must be nonnegative with positive denominator");
    if (num == 0)
        return Interval(1.0);
    return root_n(pow_int(x, num), den);
}

Interval unit_ball_volume(int n)
{
    if (n < 2 || n > 10)
        throw domain_error("unit_ball_volume: dimension must be in [2, 10]");
    const Interval& pi = pi_enclosure();
    Interval numer = pow_int(pi, n / 2);
    if (n % 2 == 1)
        numer = mul(numer, sqrt(pi));
    return div(numer, gamma(Interval(n / 2.0 + 1.0)));
}

Interval rfk_constant(int n)
{
    if (n < 2 || n > 5)
        throw domain_error("rfk_constant: dimension must be in [2, 5]");
    const BesselOrder order{n - 2}; // twice the order N/2 - 1
    const ZeroEnclosure j = first_zero(order, 1e-11);
    const Interval b = unit_ball_volume(n);
    return mul(pow_rational(b, 2, n), pow_int(j.zero, 2));
}

Interval liyau_lower(int k, int n, const Interval& volume)
{
    if (k < 1)
        throw domain_error("liyau_lower: index must be >= 1");
    if (n < 2 || n > 10)
        throw domain_error("liyau_lower: dimension must be in [2, 10]");
    if (!(volume.lo > 0.0))
        throw domain_error("liyau_lower: volume must be strictly positive");
    const Interval& pi = pi_enclosure();
    const Interval front = div(mul(mul(Interval(4.0), pow_int(pi, 2)), Interval(static_cast<double>(n))),
                               Interval(static_cast<double>(n + 2)));
    const Interval ratio = div(Interval(static_cast<double>(k)), mul(unit_ball_volume(n), volume));
    return mul(front, pow_rational(ratio, 2, n));
}

namespace {

void check_talenti_domain(const Interval& p, int n)
{
    if (n < 2)
        throw domain_error("talenti: dimension must be >= 2");
    if (n == 2) {
        if (!(p.lo >= 2.0))
            throw domain_error("talenti: p must be >= 2 for N = 2");
        return;
    }
    // p in (N/(N-1), 2N/(N-2)]
    if (!(p.lo * (n - 1) > n))
        throw domain_error("talenti: p below the admissible range");
    if (!(p.hi * (n - 2) <= 2.0 * n))
        throw domain_error("talenti: p above the critical exponent");
}

} // namespace

Interval talenti(const Interval& p, int n)
{
    check_talenti_domain(p, n);
    const Interval nn(static_cast<double>(n));
    const Interval q = div(mul(nn, p), add(nn, p));

    Interval factor(1.0);
    if (!(q.is_point() && q.lo == 1.0)) {
        if (!(q.lo > 1.0))
            throw domain_error("talenti: q must be > 1 (or exactly 1 as the limit)");
        const Interval base = div(sub(q, Interval(1.0)), sub(nn, q));
        const Interval expo = sub(Interval(1.0), div(Interval(1.0), q));
        factor = pow_real(base, expo);
    }

    const Interval inv_q = div(Interval(1.0), q);
    const Interval n_pow = pow_real(nn, neg(inv_q));
    const Interval g_num = mul(gamma(add(Interval(1.0), div(nn, Interval(2.0)))), gamma(nn));
    const Interval n_over_q = div(nn, q);
    const Interval g_den = mul(gamma(n_over_q), gamma(add(Interval(1.0), sub(nn, n_over_q))));
    const Interval g = pow_real(div(g_num, g_den), div(Interval(1.0), nn));

    const Interval inv_sqrt_pi = div(Interval(1.0), sqrt(pi_enclosure()));
    return mul(mul(mul(inv_sqrt_pi, n_pow), factor), g);
}

Interval talenti(double p, int n)
{
    return talenti(Interval(p), n);
}

Interval embedding_const(double p, const DomainSpec& dom)
{
    dom.validate();
    if (p == 2.0)
        throw domain_error("embedding_const: p = 2 is served by poincare_c2");
    const Interval pI(p);
    const Interval t = talenti(pI, dom.dimension);
    const Interval expo = sub(add(div(Interval(1.0), Interval(static_cast<double>(dom.dimension))),
                                  div(Interval(1.0), pI)),
                              Interval(0.5));
    return mul(pow_real(dom.volume, expo), t);
}

Interval poincare_c2(const DomainSpec& dom)
{
    dom.validate();
    Interval lambda_lower(0.0);
    if (dom.lambda1_lower) {
        lambda_lower = *dom.lambda1_lower;
    } else if (!dom.sides.empty()) {
        if (static_cast<int>(dom.sides.size()) != dom.dimension)
            throw config_error("poincare_c2: side count must match the dimension");
        const Interval pi2 = pow_int(pi_enclosure(), 2);
        Interval sum(0.0);
        for (const Interval& s : dom.sides)
            sum = add(sum, div(pi2, pow_int(s, 2)));
        lambda_lower = sum;
    } else if (dom.dimension >= 2 && dom.dimension <= 5) {
        lambda_lower = div(rfk_constant(dom.dimension),
                           pow_rational(dom.volume, 2, dom.dimension));
    } else {
        throw config_error("poincare_c2: no lambda_1 source available for this domain");
    }
    return div(Interval(1.0), sqrt(lambda_lower));
}

} // namespace poscert
