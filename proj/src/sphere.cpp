#include "oneforms/sphere.hpp"

#include <cmath>

namespace oneforms {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::RepeatedPole: return "RepeatedPole";
        case ErrorCode::ZeroResidue: return "ZeroResidue";
        case ErrorCode::ResidueTheoremViolation: return "ResidueTheoremViolation";
        case ErrorCode::CommonZeroPole: return "CommonZeroPole";
        case ErrorCode::MultiplePole: return "MultiplePole";
        case ErrorCode::BadChart: return "BadChart";
        case ErrorCode::BadDegree: return "BadDegree";
        case ErrorCode::DegenerateTriple: return "DegenerateTriple";
        case ErrorCode::UndefinedCrossRatio: return "UndefinedCrossRatio";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::InfiniteIsotropy: return "InfiniteIsotropy";
        case ErrorCode::TooManyPermutations: return "TooManyPermutations";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidMPoint: return "InvalidMPoint";
        case ErrorCode::NotIsochronous: return "NotIsochronous";
        case ErrorCode::ZeroImaginaryPart: return "ZeroImaginaryPart";
        case ErrorCode::NotUnitModulus: return "NotUnitModulus";
        case ErrorCode::EvaluationAtPole: return "EvaluationAtPole";
        case ErrorCode::InvalidDocument: return "InvalidDocument";
    }
    return "Unknown";
}

namespace {
// Magnitude above which a finite value is chordally indistinguishable from
// infinity in double precision; avoids overflow in |p|^2.
constexpr double kHuge = 1e150;
} // namespace

double chordal(const SpherePoint& p, const SpherePoint& q) {
    const bool pi = p.infinite || std::abs(p.value) > kHuge;
    const bool qi = q.infinite || std::abs(q.value) > kHuge;
    if (pi && qi) return 0.0;
    if (pi) return 2.0 / std::sqrt(1.0 + std::norm(q.value));
    if (qi) return 2.0 / std::sqrt(1.0 + std::norm(p.value));
    return 2.0 * std::abs(p.value - q.value) /
           std::sqrt((1.0 + std::norm(p.value)) * (1.0 + std::norm(q.value)));
}

bool points_equal(const SpherePoint& p, const SpherePoint& q, double tol) {
    return chordal(p, q) <= tol;
}

MobiusMap mobius_normalize(cplx a, cplx b, cplx c, cplx d) {
    const cplx det = a * d - b * c;
    if (std::abs(det) == 0.0)
        fail(ErrorCode::DegenerateTriple, "mobius map with vanishing determinant");
    const cplx root = std::sqrt(det);
    return MobiusMap{a / root, b / root, c / root, d / root};
}

SpherePoint mobius_apply(const MobiusMap& t, const SpherePoint& p) {
    if (p.infinite) {
        if (std::abs(t.c) == 0.0) return SpherePoint::inf();
        return SpherePoint(t.a / t.c);
    }
    const cplx num = t.a * p.value + t.b;
    const cplx den = t.c * p.value + t.d;
    if (std::abs(den) == 0.0) return SpherePoint::inf();
    return SpherePoint(num / den);
}

MobiusMap mobius_compose(const MobiusMap& t, const MobiusMap& s) {
    return mobius_normalize(t.a * s.a + t.b * s.c, t.a * s.b + t.b * s.d,
                            t.c * s.a + t.d * s.c, t.c * s.b + t.d * s.d);
}

MobiusMap mobius_inverse(const MobiusMap& t) {
    // Adjugate; determinant is already one.
    return MobiusMap{t.d, -t.b, -t.c, t.a};
}

bool psl_equal(const MobiusMap& t, const MobiusMap& s, double tol) {
    const auto close = [tol](const MobiusMap& x, const MobiusMap& y, double sign) {
        return std::abs(x.a - sign * y.a) <= tol && std::abs(x.b - sign * y.b) <= tol &&
               std::abs(x.c - sign * y.c) <= tol && std::abs(x.d - sign * y.d) <= tol;
    };
    return close(t, s, 1.0) || close(t, s, -1.0);
}

namespace {

// The map sending (z1, z2, z3) to (0, inf, 1).
MobiusMap to_zero_inf_one(const SpherePoint& z1, const SpherePoint& z2, const SpherePoint& z3) {
    if (z1.infinite) {
        // (z3 - z2)/(z - z2)
        return mobius_normalize(0.0, z3.value - z2.value, 1.0, -z2.value);
    }
    if (z2.infinite) {
        // (z - z1)/(z3 - z1)
        return mobius_normalize(1.0, -z1.value, 0.0, z3.value - z1.value);
    }
    if (z3.infinite) {
        // (z - z1)/(z - z2)
        return mobius_normalize(1.0, -z1.value, 1.0, -z2.value);
    }
    const cplx u = z3.value - z2.value;
    const cplx v = z3.value - z1.value;
    return mobius_normalize(u, -z1.value * u, v, -z2.value * v);
}

} // namespace

MobiusMap mobius_from_triples(const std::array<SpherePoint, 3>& src,
                              const std::array<SpherePoint, 3>& dst, double tol) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (points_equal(src[i], src[j], tol))
                fail(ErrorCode::DegenerateTriple, "repeated point in source triple");
            if (points_equal(dst[i], dst[j], tol))
                fail(ErrorCode::DegenerateTriple, "repeated point in destination triple");
        }
    const MobiusMap a = to_zero_inf_one(src[0], src[1], src[2]);
    const MobiusMap b = to_zero_inf_one(dst[0], dst[1], dst[2]);
    return mobius_compose(mobius_inverse(b), a);
}

SpherePoint cross_ratio(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3,
                        const SpherePoint& p4, double tol) {
    const SpherePoint pts[4] = {p1, p2, p3, p4};
    int coincident = 0;
    bool eq[4][4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (points_equal(pts[i], pts[j], tol)) {
                eq[i][j] = true;
                ++coincident;
            }
    if (coincident >= 2) {
        // Two disjoint coincident pairs still force a value; a triple does not.
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    if ((eq[i][j] && eq[i][k]) || (eq[i][j] && eq[j][k]) || (eq[i][k] && eq[j][k]))
                        fail(ErrorCode::UndefinedCrossRatio,
                             "three or more coincident cross-ratio arguments");
    }
    if (coincident > 0) {
        if (eq[0][1] || eq[2][3]) return SpherePoint(1.0);
        if (eq[0][3] || eq[1][2]) return SpherePoint(0.0);
        return SpherePoint::inf(); // p1 = p3 or p2 = p4
    }
    return mobius_apply(to_zero_inf_one(p1, p2, p3), p4);
}

int mobius_order(const MobiusMap& t, int max_order, double tol) {
    MobiusMap acc = t;
    const MobiusMap id = MobiusMap::identity();
    for (int n = 1; n <= max_order; ++n) {
        if (psl_equal(acc, id, tol)) return n;
        acc = mobius_compose(acc, t);
    }
    return 0;
}

} // namespace oneforms
