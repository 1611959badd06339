#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oneforms/poly.hpp"
#include "oneforms/sphere.hpp"

namespace oneforms {

/// <r_1,...,r_s; p_1,...,p_s>: s simple poles with nonzero residues summing to zero.
struct ResiduePoleForm {
    std::vector<cplx> residues;
    std::vector<SpherePoint> poles;

    int s() const { return static_cast<int>(residues.size()); }
};

/// Projective coefficient vector [a_{s-2}:...:a_0 : b_s:...:b_0] of Q(z)dz/P(z).
struct CoefficientForm {
    std::vector<cplx> numerator;   // a_{s-2}..a_0, size s-1
    std::vector<cplx> denominator; // b_s..b_0, size s+1
    int s = 0;
};

/// lambda * prod(z - c_j) / prod(z - p_i) dz with the scale read in chart alpha:
/// lambda is the value of the coefficient function at z = alpha.
struct ZeroPoleForm {
    std::vector<SpherePoint> zeros; // size s-2, repetitions allowed, inf allowed
    std::vector<SpherePoint> poles; // size s, pairwise distinct
    cplx lambda{1.0};
    int chart = 1; // alpha in {1,...,2s-1}, off every zero and pole
    int s = 0;
};

enum class Representation { ResiduePole, Coefficient, ZeroPole };

const char* representation_name(Representation r);
Representation representation_from_name(const std::string& name);

/// Serialization envelope holding exactly one representation.
struct FormDocument {
    Representation representation = Representation::ResiduePole;
    int s = 0;
    std::optional<double> tolerance;

    std::optional<ResiduePoleForm> rp;
    std::optional<CoefficientForm> coef;
    std::optional<ZeroPoleForm> zp;

    static FormDocument make(ResiduePoleForm f);
    static FormDocument make(CoefficientForm f);
    static FormDocument make(ZeroPoleForm f);
};

/// Invariant checks; the residue-pole overload also projects the residues onto
/// the sum-zero hyperplane when the defect is within tolerance.
ResiduePoleForm validate(const ResiduePoleForm& form, double tol = kDefaultTol);
CoefficientForm validate(const CoefficientForm& form, double tol = kDefaultTol);
ZeroPoleForm validate(const ZeroPoleForm& form, double tol = kDefaultTol);
FormDocument validate(const FormDocument& doc, double tol = kDefaultTol);

CoefficientForm to_coefficients(const ResiduePoleForm& form, double tol = kDefaultTol);
ResiduePoleForm to_residue_pole(const CoefficientForm& form, double tol = kDefaultTol);
CoefficientForm to_coefficients(const ZeroPoleForm& form, double tol = kDefaultTol);
ZeroPoleForm to_zero_pole(const CoefficientForm& form, double tol = kDefaultTol);

FormDocument convert(const FormDocument& doc, Representation target, double tol = kDefaultTol);
ResiduePoleForm as_residue_pole(const FormDocument& doc, double tol = kDefaultTol);
ZeroPoleForm as_zero_pole(const FormDocument& doc, double tol = kDefaultTol);

/// Chart-change cocycle (Q_u(alpha)/P_u(alpha)) * (P_u(beta)/Q_u(beta)).
cplx transition_factor(const std::vector<SpherePoint>& zeros,
                       const std::vector<SpherePoint>& poles, int alpha, int beta,
                       double tol = kDefaultTol);

/// Least admissible chart index in {1,...,2s-1} for the given zeros and poles.
int least_admissible_chart(const std::vector<SpherePoint>& zeros,
                           const std::vector<SpherePoint>& poles, int s,
                           double tol = kDefaultTol);

bool is_isochronous(const ResiduePoleForm& form, double tol = kDefaultTol);
bool is_isochronous(const FormDocument& doc, double tol = kDefaultTol);

/// Value of the coefficient function Q/P at a finite non-pole point.
cplx eval_form(const ResiduePoleForm& form, cplx z, double tol = kDefaultTol);
cplx eval_form(const CoefficientForm& form, cplx z, double tol = kDefaultTol);
cplx eval_form(const ZeroPoleForm& form, cplx z, double tol = kDefaultTol);
cplx eval_form(const FormDocument& doc, cplx z, double tol = kDefaultTol);

/// Monic product of (z - p) over the finite entries of pts.
ComplexPoly monic_from_points(const std::vector<SpherePoint>& pts);

/// Raw coefficient map on finite weighted pole data, no validation: returns
/// (a_{s-2}..a_0, b_{s-1}..b_0) with monic denominator and the top numerator
/// coefficient (the residue sum) dropped. Used for derivative-rank checks.
std::pair<std::vector<cplx>, std::vector<cplx>>
rp_coefficients_affine(const std::vector<cplx>& residues, const std::vector<cplx>& poles);

} // namespace oneforms
