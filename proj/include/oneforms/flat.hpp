#pragma once

#include <optional>
#include <vector>

#include "oneforms/forms.hpp"

namespace oneforms {

/// Isometry invariants of the singular flat surface of a form: cone angles
/// (2k+2)pi at zeros of multiplicity k and cylinder circumferences 2pi|r| at
/// the poles. Both multisets sorted ascending.
struct FlatSurfaceInvariants {
    std::vector<double> cone_angles;
    std::vector<double> circumferences;
};

FlatSurfaceInvariants invariants(const FormDocument& doc, double tol = kDefaultTol);

/// ((lambda, T), form) -> lambda T_* form; lambda must have unit modulus.
ResiduePoleForm extended_action(cplx lambda, const MobiusMap& t, const ResiduePoleForm& form,
                                double tol = kDefaultTol);

struct IsometryWitness {
    cplx lambda;
    MobiusMap map;
};

/// Witness (lambda, T) with b = lambda T_* a, if the flat surfaces are
/// isometric; candidates with lambda = 1 are tried first.
std::optional<IsometryWitness> are_isometric(const ResiduePoleForm& a, const ResiduePoleForm& b,
                                             double tol = kDefaultTol);

} // namespace oneforms
