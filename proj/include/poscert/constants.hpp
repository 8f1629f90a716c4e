#ifndef POSCERT_CONSTANTS_HPP
#define POSCERT_CONSTANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "poscert/interval.hpp"

namespace poscert {

// The ambient domain Omega: dimension, an enclosure of its volume, and
// (optionally) a certified lower bound for the first Dirichlet eigenvalue
// or exact hyperrectangle side lengths from which one follows.
struct DomainSpec {
    int dimension = 2;
    Interval volume{1.0};
    std::optional<Interval> lambda1_lower;
    std::vector<Interval> sides; // hyperrectangle side lengths, if known
    std::string lambda1_source;  // provenance of lambda1_lower, if any

    void validate() const;
};

// x^(num/den) for x >= 0, num >= 0, den >= 1, via integer powers and
// certified n-th roots (no exp/ln widening).
Interval pow_rational(const Interval& x, long num, long den);

// Volume of the unit N-ball, pi^{N/2} / Gamma(N/2 + 1), 2 <= N <= 10.
Interval unit_ball_volume(int n);

// Rayleigh-Faber-Krahn constant A_{1,N} = B_N^{2/N} j_{N/2-1,1}^2 for
// 2 <= N <= 5, giving lambda_1(Omega) >= A_{1,N} |Omega|^{-2/N}.
Interval rfk_constant(int n);

// Li-Yau style lower bound: lambda_k(Omega) >= 4 pi^2 N/(N+2)
// (k/(B_N |Omega|))^{2/N}.  The usable bound is the lo endpoint.
Interval liyau_lower(int k, int n, const Interval& volume);

// Best constant T_{p,N} of the classical Sobolev inequality
// (q = Np/(N+p)).  Admissible p: (N/(N-1), 2N/(N-2)] for N >= 3 and
// [2, inf) for N = 2, where p = 2 is the continuous q -> 1 limit.
Interval talenti(const Interval& p, int n);
Interval talenti(double p, int n);

// Embedding constant C_p(Omega) = |Omega|^{1/N + 1/p - 1/2} T_{p,N};
// the certified bound is the hi endpoint.  p = 2 is excluded here
// (use poincare_c2).
Interval embedding_const(double p, const DomainSpec& dom);

// C_2(Omega) = 1/sqrt(lower bound of lambda_1(Omega)).  Sources, in
// order: an explicit lambda1_lower, the exact hyperrectangle eigenvalue
// sum(pi^2 / l_i^2), the RFK fallback A_{1,N} |Omega|^{-2/N}.
Interval poincare_c2(const DomainSpec& dom);

} // namespace poscert

#endif
