#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oneforms/flat.hpp"
#include "oneforms/forms.hpp"
#include "oneforms/group.hpp"
#include "oneforms/quotient.hpp"

namespace oneforms::testing {

struct Gen {
    std::mt19937_64 rng;

    explicit Gen(unsigned long long seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    bool chance(double p) { return uniform(0.0, 1.0) < p; }

    cplx disk(double radius) {
        while (true) {
            const cplx z(uniform(-radius, radius), uniform(-radius, radius));
            if (std::abs(z) <= radius) return z;
        }
    }

    cplx annulus(double lo, double hi) {
        const double r = uniform(lo, hi);
        const double theta = uniform(0.0, 2.0 * std::numbers::pi);
        return cplx(r * std::cos(theta), r * std::sin(theta));
    }

    /// Distinct residues summing to zero, every magnitude in [0.3, 2.2].
    std::vector<cplx> residues(int s, bool distinct = true) {
        while (true) {
            std::vector<cplx> r;
            for (int i = 0; i < s - 1; ++i) r.push_back(annulus(0.35, 1.6));
            cplx sum(0.0);
            for (const cplx& x : r) sum += x;
            r.push_back(-sum);
            bool ok = std::abs(r.back()) > 0.3 && std::abs(r.back()) < 2.2 * (s - 1);
            if (ok && distinct)
                for (size_t i = 0; i < r.size() && ok; ++i)
                    for (size_t j = i + 1; j < r.size(); ++j)
                        if (std::abs(r[i] - r[j]) < 0.15) {
                            ok = false;
                            break;
                        }
            if (ok) return r;
        }
    }

    /// Pairwise chordal separation of at least min_sep; optional pole at infinity.
    std::vector<SpherePoint> separated_points(int count, double min_sep = 0.25,
                                              bool allow_inf = false) {
        while (true) {
            std::vector<SpherePoint> pts;
            const int inf_at = allow_inf && chance(0.35) ? pick(count) : -1;
            for (int i = 0; i < count; ++i) {
                if (i == inf_at)
                    pts.push_back(SpherePoint::inf());
                else
                    pts.push_back(SpherePoint(disk(2.2)));
            }
            bool ok = true;
            for (int i = 0; i < count && ok; ++i)
                for (int j = i + 1; j < count; ++j)
                    if (chordal(pts[size_t(i)], pts[size_t(j)]) < min_sep) {
                        ok = false;
                        break;
                    }
            if (ok) return pts;
        }
    }

    ResiduePoleForm rp_form(int s, bool allow_inf = true, bool distinct_residues = true) {
        ResiduePoleForm f;
        f.residues = residues(s, distinct_residues);
        f.poles = separated_points(s, 0.25, allow_inf);
        return validate(f);
    }

    /// Zero-pole data with an optional repeated zero.
    ZeroPoleForm zp_form(int s, bool with_double_zero = false) {
        while (true) {
            ZeroPoleForm f;
            f.s = s;
            const int distinct_zeros = with_double_zero && s >= 4 ? s - 3 : s - 2;
            std::vector<SpherePoint> all =
                separated_points(distinct_zeros + s, 0.22, /*allow_inf=*/false);
            f.zeros.assign(all.begin(), all.begin() + distinct_zeros);
            if (with_double_zero && s >= 4) f.zeros.push_back(f.zeros.front());
            f.poles.assign(all.begin() + distinct_zeros, all.end());
            f.lambda = annulus(0.4, 2.0);
            try {
                f.chart = least_admissible_chart(f.zeros, f.poles, s);
                return validate(f);
            } catch (const FormsError&) {
                continue; // resample when every chart index is blocked
            }
        }
    }

    ResiduePoleForm isochronous_rp(int s, bool distinct = true) {
        ResiduePoleForm f;
        while (true) {
            std::vector<double> y;
            double sum = 0.0;
            for (int i = 0; i < s - 1; ++i) {
                double v = uniform(0.3, 1.8) * (chance(0.5) ? 1.0 : -1.0);
                y.push_back(v);
                sum += v;
            }
            y.push_back(-sum);
            bool ok = std::abs(y.back()) > 0.3;
            if (ok && distinct)
                for (size_t i = 0; i < y.size() && ok; ++i)
                    for (size_t j = i + 1; j < y.size(); ++j)
                        if (std::abs(y[i] - y[j]) < 0.1) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;
            f.residues.clear();
            for (double v : y) f.residues.emplace_back(0.0, v);
            break;
        }
        f.poles = separated_points(s, 0.25, true);
        return validate(f);
    }

    MobiusMap mobius() {
        const std::vector<SpherePoint> src = separated_points(3, 0.4);
        const std::vector<SpherePoint> dst = separated_points(3, 0.4);
        return mobius_from_triples({src[0], src[1], src[2]}, {dst[0], dst[1], dst[2]});
    }

    MPoint mpoint(int s, bool distinct_residues = true) {
        while (true) {
            MPoint m;
            m.s = s;
            const std::vector<cplx> r = residues(s, distinct_residues);
            m.residues.assign(r.begin(), r.end() - 1);
            const std::vector<SpherePoint> fixed = {SpherePoint(0.0, 0.0), SpherePoint::inf(),
                                                    SpherePoint(1.0, 0.0)};
            std::vector<SpherePoint> pts = separated_points(s - 3, 0.2);
            bool ok = true;
            for (const SpherePoint& p : pts)
                for (const SpherePoint& q : fixed)
                    if (chordal(p, q) < 0.2) ok = false;
            if (!ok) continue;
            for (const SpherePoint& p : pts) m.poles.push_back(p.value);
            return validate(m);
        }
    }

    std::vector<int> permutation(int s) {
        std::vector<int> sigma(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) sigma[size_t(i)] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        return sigma;
    }
};

/// Four-pole form with prescribed residues and pole cross-ratio.
inline ResiduePoleForm s4_with_cross_ratio(Gen& gen, const std::array<cplx, 4>& residues,
                                           cplx lambda) {
    while (true) {
        const auto pts = gen.separated_points(3, 0.35, true);
        const MobiusMap t = mobius_from_triples(
            {pts[0], pts[1], pts[2]},
            {SpherePoint(0.0, 0.0), SpherePoint::inf(), SpherePoint(1.0, 0.0)});
        const SpherePoint p4 = mobius_apply(mobius_inverse(t), SpherePoint(lambda));
        bool ok = true;
        for (const SpherePoint& p : pts)
            if (chordal(p, p4) < 0.05) ok = false;
        if (!ok) continue;
        ResiduePoleForm f;
        f.residues = {residues[0], residues[1], residues[2], residues[3]};
        f.poles = {pts[0], pts[1], pts[2], p4};
        return validate(f);
    }
}

/// Term-multiset equality of residue-pole forms.
inline bool rp_equal(const ResiduePoleForm& a, const ResiduePoleForm& b, double tol = 1e-7) {
    if (a.s() != b.s()) return false;
    std::vector<bool> used(size_t(a.s()), false);
    for (int i = 0; i < a.s(); ++i) {
        bool matched = false;
        for (int j = 0; j < b.s(); ++j) {
            if (used[size_t(j)]) continue;
            if (std::abs(a.residues[size_t(i)] - b.residues[size_t(j)]) >
                tol * (1.0 + std::abs(a.residues[size_t(i)])))
                continue;
            if (chordal(a.poles[size_t(i)], b.poles[size_t(j)]) > tol) continue;
            used[size_t(j)] = true;
            matched = true;
            break;
        }
        if (!matched) return false;
    }
    return true;
}

/// Projective equality of coefficient vectors.
inline bool coef_equal(const CoefficientForm& a, const CoefficientForm& b, double tol = 1e-7) {
    if (a.s != b.s) return false;
    std::vector<cplx> va = a.numerator, vb = b.numerator;
    va.insert(va.end(), a.denominator.begin(), a.denominator.end());
    vb.insert(vb.end(), b.denominator.begin(), b.denominator.end());
    size_t lead = 0;
    for (size_t i = 1; i < va.size(); ++i)
        if (std::abs(va[i]) > std::abs(va[lead])) lead = i;
    if (std::abs(vb[lead]) == 0.0) return false;
    const cplx scale = va[lead] / vb[lead];
    for (size_t i = 0; i < va.size(); ++i)
        if (std::abs(va[i] - scale * vb[i]) > tol * (1.0 + std::abs(va[i]))) return false;
    return true;
}

inline bool point_multiset_equal(std::vector<SpherePoint> a, std::vector<SpherePoint> b,
                                 double tol = 1e-7) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const SpherePoint& p : a) {
        bool matched = false;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j] || chordal(p, b[j]) > tol) continue;
            used[j] = true;
            matched = true;
            break;
        }
        if (!matched) return false;
    }
    return true;
}

/// Zeros/poles multisets plus agreement of the coefficient function at a probe.
inline bool zp_equal(const ZeroPoleForm& a, const ZeroPoleForm& b, double tol = 1e-7) {
    if (a.s != b.s) return false;
    if (!point_multiset_equal(a.zeros, b.zeros, tol)) return false;
    if (!point_multiset_equal(a.poles, b.poles, tol)) return false;
    for (int probe = 1; probe <= 4 * a.s; ++probe) {
        const cplx z(0.37 + 0.61 * probe, 0.23 * probe);
        try {
            const cplx va = eval_form(a, z);
            const cplx vb = eval_form(b, z);
            if (std::abs(va) < 1e-8) continue;
            return std::abs(va - vb) <= tol * std::abs(va) * 10.0;
        } catch (const FormsError&) {
            continue;
        }
    }
    return false;
}

inline std::vector<cplx> sorted_residues(const ResiduePoleForm& f) {
    std::vector<cplx> r = f.residues;
    std::sort(r.begin(), r.end(), [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return r;
}

} // namespace oneforms::testing
