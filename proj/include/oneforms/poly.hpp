#pragma once

#include <utility>
#include <vector>

#include "oneforms/sphere.hpp"

namespace oneforms {

/// Dense complex polynomial, coefficients highest degree first.
/// The zero polynomial is the empty list (degree -1).
struct ComplexPoly {
    std::vector<cplx> c;

    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    cplx lead() const { return c.empty() ? cplx(0.0) : c.front(); }
};

/// Strip leading coefficients of magnitude <= eps (eps = 0 strips exact zeros).
ComplexPoly poly_trim(ComplexPoly p, double eps = 0.0);

cplx poly_eval(const ComplexPoly& p, cplx z);
ComplexPoly poly_derivative(const ComplexPoly& p);
ComplexPoly poly_mul(const ComplexPoly& p, const ComplexPoly& q);
ComplexPoly poly_add(const ComplexPoly& p, const ComplexPoly& q);
ComplexPoly poly_scale(const ComplexPoly& p, cplx k);

/// Expand leading * prod (z - root_i) through elementary symmetric functions.
ComplexPoly viete(cplx leading, const std::vector<cplx>& roots);

struct RootOptions {
    // Relative coefficient error allowed for the refactorization from the
    // clustered roots. Merging a nearly-degenerate pair into a double root
    // misrepresents the input by the squared half-split, which conditioning
    // can push a little above 1e-9.
    double residual_tol = 1e-8;
    // Chordal radius used to merge multiple roots. Coefficient noise of order
    // 1e-13 splits a double root by its square root, so the radius must sit
    // well above ~1e-6 while staying below genuine root separations.
    double cluster_tol = 1e-4;
    int max_iterations = 400;
    unsigned long long seed = 0x9e3779b97f4a7c15ull;
};

/// All roots with multiplicity (simultaneous Ehrlich-Aberth iteration plus
/// Newton polish; nearby roots are merged to their cluster mean).
/// Throws ConvergenceFailure when the refactorization residual exceeds tol.
std::vector<cplx> poly_roots(const ComplexPoly& p, const RootOptions& opts = {});
std::vector<cplx> poly_roots(const ComplexPoly& p, double tol);

/// Sylvester resultant; res(P,Q) = lc(P)^deg Q * prod Q(alpha) over roots of P.
cplx resultant(const ComplexPoly& p, const ComplexPoly& q);

/// Resultant value together with the Hadamard scale of the Sylvester matrix,
/// for relative near-zero decisions on floating data.
std::pair<cplx, double> resultant_scaled(const ComplexPoly& p, const ComplexPoly& q);

/// (-1)^{n(n-1)/2} res(P, P') / lc(P); zero iff P has a repeated root.
cplx discriminant(const ComplexPoly& p);

bool resultant_nonzero(const ComplexPoly& p, const ComplexPoly& q, double rel_tol = 1e-8);
bool discriminant_nonzero(const ComplexPoly& p, double rel_tol = 1e-8);

} // namespace oneforms
