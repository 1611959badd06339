#include "oneforms/flat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oneforms/group.hpp"

namespace oneforms {

FlatSurfaceInvariants invariants(const FormDocument& doc, double tol) {
    const FormDocument valid = validate(doc, tol);
    const ResiduePoleForm rp = as_residue_pole(valid, tol);

    FlatSurfaceInvariants out;
    for (const cplx& r : rp.residues)
        out.circumferences.push_back(2.0 * std::numbers::pi * std::abs(r));
    std::sort(out.circumferences.begin(), out.circumferences.end());

    if (rp.s() > 2) {
        const ZeroPoleForm zp = as_zero_pole(valid, tol);
        // Group the zero multiset; repeated entries carry the multiplicity.
        std::vector<SpherePoint> zeros = zp.zeros;
        std::vector<bool> used(zeros.size(), false);
        for (size_t i = 0; i < zeros.size(); ++i) {
            if (used[i]) continue;
            int multiplicity = 1;
            used[i] = true;
            for (size_t j = i + 1; j < zeros.size(); ++j)
                if (!used[j] && points_equal(zeros[i], zeros[j], 1e-6)) {
                    used[j] = true;
                    ++multiplicity;
                }
            out.cone_angles.push_back((2.0 * multiplicity + 2.0) * std::numbers::pi);
        }
        std::sort(out.cone_angles.begin(), out.cone_angles.end());
    }
    return out;
}

ResiduePoleForm extended_action(cplx lambda, const MobiusMap& t, const ResiduePoleForm& form,
                                double tol) {
    if (std::abs(std::abs(lambda) - 1.0) > tol)
        fail(ErrorCode::NotUnitModulus, "scale factor must lie on the unit circle");
    ResiduePoleForm out = validate(form, tol);
    for (cplx& r : out.residues) r *= lambda;
    for (SpherePoint& p : out.poles) p = mobius_apply(t, p);
    return validate(out, tol);
}

std::optional<IsometryWitness> are_isometric(const ResiduePoleForm& a, const ResiduePoleForm& b,
                                             double tol) {
    const ResiduePoleForm fa = validate(a, tol);
    const ResiduePoleForm fb = validate(b, tol);
    if (fa.s() != fb.s()) fail(ErrorCode::InvalidDocument, "pole counts differ");

    // b = lambda T_* a forces lambda to be a ratio of residues.
    std::vector<cplx> candidates{cplx(1.0)};
    for (const cplx& rb : fb.residues) {
        const cplx lambda = rb / fa.residues.front();
        bool known = false;
        for (const cplx& c : candidates)
            if (std::abs(c - lambda) <= tol) {
                known = true;
                break;
            }
        if (!known) candidates.push_back(lambda);
    }

    for (const cplx& lambda : candidates) {
        if (std::abs(std::abs(lambda) - 1.0) > tol) continue;
        ResiduePoleForm scaled = fa;
        for (cplx& r : scaled.residues) r *= lambda;
        const std::optional<MobiusMap> t = are_psl_equivalent(scaled, fb, tol);
        if (t) return IsometryWitness{lambda, *t};
    }
    return std::nullopt;
}

} // namespace oneforms
