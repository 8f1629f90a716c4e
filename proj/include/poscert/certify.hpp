#ifndef POSCERT_CERTIFY_HPP
#define POSCERT_CERTIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "poscert/constants.hpp"
#include "poscert/field.hpp"

namespace poscert {

// Polynomial growth bound -f(-t) <= lambda t + sum_i a_i t^{p_i} (t >= 0)
// with a_i >= 0 and every p_i subcritical for the ambient dimension.
struct NonlinearityBound {
    struct Term {
        double a = 0.0;
        double p = 2.0;
    };

    double lambda = 0.0;
    std::vector<Term> terms;
    std::string description;

    // f(t) = lambda t + |t|^{p-1} t
    static NonlinearityBound lane_emden(double lambda, double p);
    // f(t) = lambda (t - t^3): -f(-t) <= lambda t
    static NonlinearityBound allen_cahn(double lambda);
    // f(t) = lambda t (1-t)(t-a): -f(-t) <= lambda (1+a) t^2
    static NonlinearityBound nagumo(double lambda, double a);
    // f(t) = lambda (t + A t^2 - B t^3): -f(-t) <= lambda t + lambda A t^2
    static NonlinearityBound lions(double lambda, double a_coeff, double b_coeff);

    void validate(int dimension) const;
};

enum class Verdict {
    verified_nonnegative,
    inconclusive,
};

std::string to_string(Verdict v);

// Diagnostics for one candidate level m of the sweep.
struct LevelDiagnostics {
    double m = 0.0;
    Interval plus_norm{0.0};
    Interval support_margin{0.0};
    Interval dm_volume{0.0};
    Interval eigen_lower{0.0};
    Interval c1{0.0};
    Interval c2{0.0};
    bool support_ok = false;
    bool comparison_ok = false;
    bool eigen_ok = false;
    bool certified = false;
};

// Machine-checkable record of the positivity test: the verdict plus every
// enclosure and comparison it rests on, re-checkable from the fields alone.
struct PositivityCertificate {
    Verdict verdict = Verdict::inconclusive;

    // inputs echo
    double q = 2.0;
    double m = 0.0; // chosen level
    double rho = 0.0;
    std::string rho_provenance;
    NonlinearityBound nonlinearity;
    DomainSpec domain;

    // enclosures at the chosen level
    Interval dm_volume{0.0};
    Interval eigen_lower{0.0}; // lo = +inf encodes an empty sublevel set
    Interval support_margin{0.0};
    Interval c1{0.0};
    Interval c2{0.0};

    std::vector<std::string> assumptions;
    std::vector<LevelDiagnostics> sweep;

    // The soundness gate, re-checkable from the stored fields alone.
    bool gate_holds() const;
};

// Margin of the support condition ||u_+||_{L^q(D(m))} - C_q(Omega) rho;
// a strictly positive lo certifies |supp u_-| <= |D(m)|.
Interval support_condition(const CellMesh& mesh, const DomainSpec& dom,
                           double q, double m, double rho);

// Lower bound A_{1,N} |D(m)|^{-2/N} for the first eigenvalue on the
// minus-support.  An empty sublevel set gives an infinite bound.
Interval eigen_lower_bound(const Interval& dm_volume, int dimension);

// C1 = sum_i a_i |D(m)|^{2/N + 2/(p_i+1) - 1} T_i^2
//        (||u_-||_{L^{p_i+1}} + |Omega|^{1/N + 1/(p_i+1) - 1/2} T_i rho)^{p_i - 1},
// with T_i = T_{p_i+1, N}; hi certifies.
Interval compute_c1(const NonlinearityBound& nl, const DomainSpec& dom,
                    const Interval& dm_volume, const std::vector<Interval>& minus_norms,
                    double rho);

// C2 = 1 - (lambda / A_{1,N}) |D(m)|^{2/N}; lo certifies, and lambda <= 0
// gives C2 >= 1.
Interval compute_c2(const NonlinearityBound& nl, const Interval& dm_volume, int dimension);

// The full test: sweep the candidate levels, certify the support condition,
// then compare C1 against C2.  Certifies nonnegativity, not strict
// positivity.
PositivityCertificate certify_positivity(const CellMesh& mesh, const DomainSpec& dom,
                                         const NonlinearityBound& nl, double rho,
                                         double q, const std::vector<double>& m_candidates,
                                         const std::string& rho_provenance = "user-supplied");

// Default dyadic sweep 2^-1 .. 2^-8.
std::vector<double> default_m_candidates();

// "positivity-cert/1" serialization with hexadecimal-exact endpoints.
nlohmann::json certificate_to_json(const PositivityCertificate& cert);
PositivityCertificate certificate_from_json(const nlohmann::json& j);

} // namespace poscert

#endif
