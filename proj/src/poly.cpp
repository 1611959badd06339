#include "oneforms/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oneforms {

ComplexPoly poly_trim(ComplexPoly p, double eps) {
    size_t lead = 0;
    while (lead < p.c.size() && std::abs(p.c[lead]) <= eps) ++lead;
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(lead));
    return p;
}

cplx poly_eval(const ComplexPoly& p, cplx z) {
    cplx acc(0.0);
    for (const cplx& coeff : p.c) acc = acc * z + coeff;
    return acc;
}

ComplexPoly poly_derivative(const ComplexPoly& p) {
    const int n = p.degree();
    if (n <= 0) return ComplexPoly{};
    std::vector<cplx> out(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) out[static_cast<size_t>(k)] = p.c[static_cast<size_t>(k)] * cplx(double(n - k));
    return ComplexPoly{std::move(out)};
}

ComplexPoly poly_mul(const ComplexPoly& p, const ComplexPoly& q) {
    if (p.is_zero() || q.is_zero()) return ComplexPoly{};
    std::vector<cplx> out(p.c.size() + q.c.size() - 1, cplx(0.0));
    for (size_t i = 0; i < p.c.size(); ++i)
        for (size_t j = 0; j < q.c.size(); ++j) out[i + j] += p.c[i] * q.c[j];
    return ComplexPoly{std::move(out)};
}

ComplexPoly poly_add(const ComplexPoly& p, const ComplexPoly& q) {
    const size_t n = std::max(p.c.size(), q.c.size());
    std::vector<cplx> out(n, cplx(0.0));
    const size_t dp = n - p.c.size(), dq = n - q.c.size();
    for (size_t i = 0; i < p.c.size(); ++i) out[i + dp] += p.c[i];
    for (size_t i = 0; i < q.c.size(); ++i) out[i + dq] += q.c[i];
    return ComplexPoly{std::move(out)};
}

ComplexPoly poly_scale(const ComplexPoly& p, cplx k) {
    ComplexPoly out = p;
    for (cplx& coeff : out.c) coeff *= k;
    return out;
}

ComplexPoly viete(cplx leading, const std::vector<cplx>& roots) {
    std::vector<cplx> out{leading};
    for (const cplx& r : roots) {
        out.push_back(cplx(0.0));
        for (size_t i = out.size() - 1; i > 0; --i) out[i] -= r * out[i - 1];
    }
    return ComplexPoly{std::move(out)};
}

namespace {

double coeff_scale(const ComplexPoly& p) {
    double m = 0.0;
    for (const cplx& coeff : p.c) m = std::max(m, std::abs(coeff));
    return m;
}

// Two stable roots of a z^2 + b z + c.
std::pair<cplx, cplx> quadratic_roots(cplx a, cplx b, cplx c) {
    const cplx disc = std::sqrt(b * b - 4.0 * a * c);
    const cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    if (std::abs(q) == 0.0) return {cplx(0.0), cplx(0.0)};
    return {q / a, c / q};
}

std::vector<cplx> ehrlich_aberth(std::vector<cplx> monic, const RootOptions& opts) {
    const int n = static_cast<int>(monic.size()) - 1;
    std::vector<cplx> z(static_cast<size_t>(n));

    double cauchy = 0.0;
    for (int k = 1; k <= n; ++k) cauchy = std::max(cauchy, std::abs(monic[static_cast<size_t>(k)]));
    const double bound = 1.0 + cauchy;
    double r = std::pow(std::max(std::abs(monic.back()), 1e-30), 1.0 / n);
    r = std::clamp(r, 0.2, bound);

    unsigned long long state = opts.seed;
    const auto jitter = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (double(state >> 11) / double(1ull << 53) - 0.5);
    };
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + 0.41;
        const double rho = r * (1.0 + 0.08 * jitter());
        z[static_cast<size_t>(k)] = rho * cplx(std::cos(theta), std::sin(theta));
    }

    const ComplexPoly p{monic};
    const ComplexPoly dp = poly_derivative(p);
    for (int it = 0; it < opts.max_iterations; ++it) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            cplx& zk = z[static_cast<size_t>(k)];
            const cplx pv = poly_eval(p, zk);
            if (std::abs(pv) == 0.0) continue;
            cplx dv = poly_eval(dp, zk);
            if (std::abs(dv) < 1e-290) dv = cplx(1e-290);
            const cplx newton = pv / dv;
            cplx sum(0.0);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                cplx diff = zk - z[static_cast<size_t>(j)];
                if (std::abs(diff) < 1e-290) diff = cplx(1e-290);
                sum += 1.0 / diff;
            }
            cplx denom = 1.0 - newton * sum;
            if (std::abs(denom) < 1e-290) denom = cplx(1e-290);
            const cplx step = newton / denom;
            zk -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(zk)));
        }
        if (worst < 1e-15) break;
    }

    // Newton polish, kept only while the residual improves.
    for (cplx& root : z) {
        for (int it = 0; it < 8; ++it) {
            const cplx pv = poly_eval(p, root);
            const cplx dv = poly_eval(dp, root);
            if (std::abs(dv) < 1e-290) break;
            const cplx next = root - pv / dv;
            if (std::abs(poly_eval(p, next)) >= std::abs(pv)) break;
            root = next;
        }
    }
    return z;
}

// Merge roots within chordal distance tol; a cluster of size m is replaced by
// its mean polished against the (m-1)th derivative, where the multiple root of
// p is a simple one.
std::vector<cplx> cluster_roots(const ComplexPoly& p, std::vector<cplx> roots, double tol) {
    const size_t n = roots.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t a = 0; a < n; ++a) {
                if (comp[a] != ncomp) continue;
                for (size_t b = 0; b < n; ++b) {
                    if (comp[b] >= 0) continue;
                    if (chordal(SpherePoint(roots[a]), SpherePoint(roots[b])) <= tol) {
                        comp[b] = ncomp;
                        grew = true;
                    }
                }
            }
        }
        ++ncomp;
    }
    std::vector<cplx> out;
    out.reserve(n);
    for (int g = 0; g < ncomp; ++g) {
        cplx mean(0.0);
        int count = 0;
        for (size_t i = 0; i < n; ++i)
            if (comp[i] == g) {
                mean += roots[i];
                ++count;
            }
        mean /= double(count);
        if (count > 1) {
            ComplexPoly dp = p;
            for (int k = 1; k < count; ++k) dp = poly_derivative(dp);
            const ComplexPoly ddp = poly_derivative(dp);
            for (int it = 0; it < 12; ++it) {
                const cplx fv = poly_eval(dp, mean);
                const cplx dv = poly_eval(ddp, mean);
                if (std::abs(dv) < 1e-290) break;
                const cplx next = mean - fv / dv;
                if (std::abs(poly_eval(dp, next)) >= std::abs(fv)) break;
                mean = next;
            }
        }
        for (int i = 0; i < count; ++i) out.push_back(mean);
    }
    return out;
}

} // namespace

std::vector<cplx> poly_roots(const ComplexPoly& p, const RootOptions& opts) {
    ComplexPoly q = poly_trim(p);
    if (q.degree() < 1) fail(ErrorCode::ConvergenceFailure, "root finding needs degree >= 1");

    // Exact zero trailing coefficients are roots at the origin.
    int zeros_at_origin = 0;
    while (!q.c.empty() && std::abs(q.c.back()) == 0.0) {
        q.c.pop_back();
        ++zeros_at_origin;
    }

    std::vector<cplx> roots;
    const int n = q.degree();
    if (n >= 1) {
        std::vector<cplx> monic(q.c.size());
        for (size_t i = 0; i < q.c.size(); ++i) monic[i] = q.c[i] / q.lead();
        if (n == 1) {
            roots = {-monic[1]};
        } else if (n == 2) {
            auto [r1, r2] = quadratic_roots(monic[0], monic[1], monic[2]);
            roots = {r1, r2};
        } else {
            roots = ehrlich_aberth(monic, opts);
        }
    }
    for (int i = 0; i < zeros_at_origin; ++i) roots.push_back(cplx(0.0));

    const ComplexPoly original = poly_trim(p);
    roots = cluster_roots(original, std::move(roots), opts.cluster_tol);

    const ComplexPoly rebuilt = viete(original.lead(), roots);
    const double scale = std::max(coeff_scale(original), 1e-300);
    double err = 0.0;
    for (size_t i = 0; i < original.c.size(); ++i)
        err = std::max(err, std::abs(rebuilt.c[i] - original.c[i]));
    if (err / scale > opts.residual_tol)
        fail(ErrorCode::ConvergenceFailure, "root refactorization residual too large");
    return roots;
}

std::vector<cplx> poly_roots(const ComplexPoly& p, double tol) {
    RootOptions opts;
    opts.residual_tol = tol;
    return poly_roots(p, opts);
}

namespace {

// Determinant by partial-pivot LU, plus the product of initial row norms.
std::pair<cplx, double> det_and_scale(std::vector<std::vector<cplx>> m) {
    const size_t n = m.size();
    double scale = 1.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (const cplx& v : row) s += std::norm(v);
        scale *= std::sqrt(s);
    }
    cplx det(1.0);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        if (std::abs(m[pivot][col]) == 0.0) return {cplx(0.0), scale};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            const cplx f = m[r][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return {det, scale};
}

} // namespace

std::pair<cplx, double> resultant_scaled(const ComplexPoly& pin, const ComplexPoly& qin) {
    const ComplexPoly p = poly_trim(pin);
    const ComplexPoly q = poly_trim(qin);
    if (p.is_zero() || q.is_zero())
        fail(ErrorCode::BadDegree, "resultant of the zero polynomial");
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0 && n == 0) return {cplx(1.0), 1.0};
    if (m == 0) return {std::pow(p.lead(), n), std::abs(std::pow(p.lead(), n))};
    if (n == 0) return {std::pow(q.lead(), m), std::abs(std::pow(q.lead(), m))};

    const size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<cplx>> s(size, std::vector<cplx>(size, cplx(0.0)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) s[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = p.c[static_cast<size_t>(k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) s[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = q.c[static_cast<size_t>(k)];
    return det_and_scale(std::move(s));
}

cplx resultant(const ComplexPoly& p, const ComplexPoly& q) { return resultant_scaled(p, q).first; }

cplx discriminant(const ComplexPoly& pin) {
    const ComplexPoly p = poly_trim(pin);
    const int n = p.degree();
    if (n < 2) fail(ErrorCode::BadDegree, "discriminant needs degree >= 2");
    const cplx res = resultant(p, poly_derivative(p));
    const double sign = (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * res / p.lead();
}

bool resultant_nonzero(const ComplexPoly& p, const ComplexPoly& q, double rel_tol) {
    const auto [value, scale] = resultant_scaled(p, q);
    return std::abs(value) > rel_tol * std::max(scale, 1e-300);
}

bool discriminant_nonzero(const ComplexPoly& pin, double rel_tol) {
    const ComplexPoly p = poly_trim(pin);
    if (p.degree() < 2) return true;
    const auto [value, scale] = resultant_scaled(p, poly_derivative(p));
    return std::abs(value) > rel_tol * std::max(scale, 1e-300);
}

} // namespace oneforms
