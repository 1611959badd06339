#pragma once

#include <array>
#include <complex>
#include <optional>

#include "oneforms/errors.hpp"

namespace oneforms {

using cplx = std::complex<double>;

/// Default tolerance for all chordal/entrywise comparisons.
inline constexpr double kDefaultTol = 1e-9;

/// A point of the Riemann sphere: a finite complex number or infinity.
struct SpherePoint {
    cplx value{0.0, 0.0};
    bool infinite = false;

    SpherePoint() = default;
    SpherePoint(cplx v) : value(v) {}
    SpherePoint(double re, double im) : value(re, im) {}

    static SpherePoint inf() {
        SpherePoint p;
        p.infinite = true;
        return p;
    }
    bool is_finite() const { return !infinite; }
};

/// Chordal distance on the unit sphere model; symmetric, in [0, 2].
double chordal(const SpherePoint& p, const SpherePoint& q);
bool points_equal(const SpherePoint& p, const SpherePoint& q, double tol = kDefaultTol);

/// z -> (az+b)/(cz+d), stored normalized with ad - bc = 1.
struct MobiusMap {
    cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static MobiusMap identity() { return MobiusMap{}; }
};

/// Scale entries so ad - bc = 1. Throws DegenerateTriple on vanishing determinant.
MobiusMap mobius_normalize(cplx a, cplx b, cplx c, cplx d);

SpherePoint mobius_apply(const MobiusMap& t, const SpherePoint& p);
MobiusMap mobius_compose(const MobiusMap& t, const MobiusMap& s);
MobiusMap mobius_inverse(const MobiusMap& t);

/// Equality in PSL(2,C): entries agree up to a global sign within tol.
bool psl_equal(const MobiusMap& t, const MobiusMap& s, double tol = kDefaultTol);

/// The unique map with T(src[i]) = dst[i]; triples must be pairwise distinct.
MobiusMap mobius_from_triples(const std::array<SpherePoint, 3>& src,
                              const std::array<SpherePoint, 3>& dst,
                              double tol = kDefaultTol);

/// (p1,p2,p3,p4) = (p4-p1)(p3-p2) / ((p4-p2)(p3-p1)), with limit conventions at
/// infinity. Two coincident arguments give the forced value in {0, 1, inf};
/// three or more coincident arguments are rejected.
SpherePoint cross_ratio(const SpherePoint& p1, const SpherePoint& p2,
                        const SpherePoint& p3, const SpherePoint& p4,
                        double tol = kDefaultTol);

/// Least n >= 1 with T^n = +-I, or 0 if none is found up to max_order.
int mobius_order(const MobiusMap& t, int max_order, double tol = kDefaultTol);

} // namespace oneforms
