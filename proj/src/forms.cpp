#include "oneforms/forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace oneforms {

const char* representation_name(Representation r) {
    switch (r) {
        case Representation::ResiduePole: return "residue_pole";
        case Representation::Coefficient: return "coefficient";
        case Representation::ZeroPole: return "zero_pole";
    }
    return "unknown";
}

Representation representation_from_name(const std::string& name) {
    if (name == "residue_pole") return Representation::ResiduePole;
    if (name == "coefficient") return Representation::Coefficient;
    if (name == "zero_pole") return Representation::ZeroPole;
    fail(ErrorCode::InvalidDocument, "unknown representation '" + name + "'");
}

FormDocument FormDocument::make(ResiduePoleForm f) {
    FormDocument doc;
    doc.representation = Representation::ResiduePole;
    doc.s = f.s();
    doc.rp = std::move(f);
    return doc;
}

FormDocument FormDocument::make(CoefficientForm f) {
    FormDocument doc;
    doc.representation = Representation::Coefficient;
    doc.s = f.s;
    doc.coef = std::move(f);
    return doc;
}

FormDocument FormDocument::make(ZeroPoleForm f) {
    FormDocument doc;
    doc.representation = Representation::ZeroPole;
    doc.s = f.s;
    doc.zp = std::move(f);
    return doc;
}

namespace {

// Chordal separation below which floating roots are treated as coincident;
// matches the multiplicity clustering radius of the root finder.
constexpr double kRootSepTol = 1e-4;

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& x : v) m = std::max(m, std::abs(x));
    return m;
}

int count_infinite(const std::vector<SpherePoint>& pts) {
    int n = 0;
    for (const SpherePoint& p : pts)
        if (p.infinite) ++n;
    return n;
}

} // namespace

ComplexPoly monic_from_points(const std::vector<SpherePoint>& pts) {
    std::vector<cplx> roots;
    roots.reserve(pts.size());
    for (const SpherePoint& p : pts)
        if (p.is_finite()) roots.push_back(p.value);
    return viete(cplx(1.0), roots);
}

ResiduePoleForm validate(const ResiduePoleForm& form, double tol) {
    const int s = form.s();
    if (s < 2 || static_cast<int>(form.poles.size()) != s)
        fail(ErrorCode::InvalidDocument, "residue-pole form needs s >= 2 matching terms");
    double rmax = 0.0;
    for (const cplx& r : form.residues) rmax = std::max(rmax, std::abs(r));
    for (const cplx& r : form.residues)
        if (std::abs(r) <= tol) fail(ErrorCode::ZeroResidue, "vanishing residue");
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (points_equal(form.poles[static_cast<size_t>(i)], form.poles[static_cast<size_t>(j)], tol))
                fail(ErrorCode::RepeatedPole, "coincident poles");
    cplx sum(0.0);
    for (const cplx& r : form.residues) sum += r;
    if (std::abs(sum) > tol * std::max(1.0, rmax) * s)
        fail(ErrorCode::ResidueTheoremViolation, "residues do not sum to zero");
    ResiduePoleForm out = form;
    const cplx shift = sum / double(s);
    for (cplx& r : out.residues) r -= shift;
    return out;
}

CoefficientForm validate(const CoefficientForm& form, double tol) {
    const int s = form.s;
    if (s < 2 || static_cast<int>(form.numerator.size()) != s - 1 ||
        static_cast<int>(form.denominator.size()) != s + 1)
        fail(ErrorCode::InvalidDocument, "coefficient form has inconsistent sizes");
    const double scale = std::max(max_abs(form.numerator), max_abs(form.denominator));
    if (scale <= 0.0) fail(ErrorCode::InvalidDocument, "all coefficients vanish");
    const double eps = tol * scale;

    const bool pole_at_inf = std::abs(form.denominator[0]) <= eps;
    if (pole_at_inf) {
        if (std::abs(form.denominator[1]) <= eps)
            fail(ErrorCode::BadDegree, "denominator degree below s-1");
        if (std::abs(form.numerator[0]) <= eps)
            fail(ErrorCode::ZeroResidue, "vanishing residue at the infinite pole");
    }

    CoefficientForm out = form;
    if (pole_at_inf) out.denominator[0] = cplx(0.0);
    const ComplexPoly p = poly_trim(ComplexPoly{out.denominator}, eps);
    const ComplexPoly q = poly_trim(ComplexPoly{out.numerator}, eps);
    if (q.is_zero()) fail(ErrorCode::BadDegree, "numerator vanishes");

    // The open conditions res(P,Q) != 0 and disc(P) != 0 are decided through
    // chordal root separation; a determinant threshold loses all scale
    // information once the degree grows.
    const std::vector<cplx> proots = poly_roots(p, RootOptions{});
    for (size_t i = 0; i < proots.size(); ++i)
        for (size_t j = i + 1; j < proots.size(); ++j)
            if (chordal(SpherePoint(proots[i]), SpherePoint(proots[j])) <= kRootSepTol)
                fail(ErrorCode::MultiplePole, "denominator has a repeated root");
    if (q.degree() >= 1) {
        for (const cplx& zq : poly_roots(q, RootOptions{}))
            for (const cplx& zp : proots)
                if (chordal(SpherePoint(zq), SpherePoint(zp)) <= kRootSepTol)
                    fail(ErrorCode::CommonZeroPole, "numerator and denominator share a root");
    }
    return out;
}

namespace {

bool chart_admissible(const std::vector<SpherePoint>& zeros, const std::vector<SpherePoint>& poles,
                      int alpha, double tol) {
    const SpherePoint a(double(alpha), 0.0);
    for (const SpherePoint& z : zeros)
        if (points_equal(a, z, tol)) return false;
    for (const SpherePoint& p : poles)
        if (points_equal(a, p, tol)) return false;
    return true;
}

} // namespace

int least_admissible_chart(const std::vector<SpherePoint>& zeros,
                           const std::vector<SpherePoint>& poles, int s, double tol) {
    for (int alpha = 1; alpha <= 2 * s - 1; ++alpha)
        if (chart_admissible(zeros, poles, alpha, tol)) return alpha;
    fail(ErrorCode::BadChart, "no admissible chart index");
}

ZeroPoleForm validate(const ZeroPoleForm& form, double tol) {
    const int s = form.s;
    if (s < 2 || static_cast<int>(form.zeros.size()) != s - 2 ||
        static_cast<int>(form.poles.size()) != s)
        fail(ErrorCode::InvalidDocument, "zero-pole form has inconsistent sizes");
    if (std::abs(form.lambda) <= tol)
        fail(ErrorCode::InvalidDocument, "vanishing scale factor");
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (points_equal(form.poles[static_cast<size_t>(i)], form.poles[static_cast<size_t>(j)], tol))
                fail(ErrorCode::RepeatedPole, "coincident poles");
    for (const SpherePoint& z : form.zeros)
        for (const SpherePoint& p : form.poles)
            if (points_equal(z, p, tol))
                fail(ErrorCode::CommonZeroPole, "zero coincides with a pole");
    if (form.chart < 1 || form.chart > 2 * s - 1 ||
        !chart_admissible(form.zeros, form.poles, form.chart, tol))
        fail(ErrorCode::BadChart, "chart index hits a zero or pole");
    return form;
}

FormDocument validate(const FormDocument& doc, double tol) {
    const double t = doc.tolerance.value_or(tol);
    const int engaged = int(doc.rp.has_value()) + int(doc.coef.has_value()) + int(doc.zp.has_value());
    if (engaged != 1) fail(ErrorCode::InvalidDocument, "document must hold exactly one representation");
    FormDocument out = doc;
    switch (doc.representation) {
        case Representation::ResiduePole:
            if (!doc.rp) fail(ErrorCode::InvalidDocument, "missing residue_pole payload");
            out.rp = validate(*doc.rp, t);
            out.s = out.rp->s();
            break;
        case Representation::Coefficient:
            if (!doc.coef) fail(ErrorCode::InvalidDocument, "missing coefficient payload");
            if (doc.coef->s != doc.s) fail(ErrorCode::InvalidDocument, "s mismatch");
            out.coef = validate(*doc.coef, t);
            break;
        case Representation::ZeroPole:
            if (!doc.zp) fail(ErrorCode::InvalidDocument, "missing zero_pole payload");
            if (doc.zp->s != doc.s) fail(ErrorCode::InvalidDocument, "s mismatch");
            out.zp = validate(*doc.zp, t);
            break;
    }
    if (out.s != doc.s) fail(ErrorCode::InvalidDocument, "s mismatch");
    return out;
}

CoefficientForm to_coefficients(const ResiduePoleForm& input, double tol) {
    const ResiduePoleForm form = validate(input, tol);
    const int s = form.s();
    const int inf_count = count_infinite(form.poles);

    CoefficientForm out;
    out.s = s;
    if (inf_count == 0) {
        // N(z) = sum_j r_j prod_{i != j} (z - p_i); its top coefficient is the
        // residue sum and is dropped exactly.
        ComplexPoly num;
        for (int j = 0; j < s; ++j) {
            std::vector<cplx> others;
            others.reserve(static_cast<size_t>(s) - 1);
            for (int i = 0; i < s; ++i)
                if (i != j) others.push_back(form.poles[static_cast<size_t>(i)].value);
            num = poly_add(num, viete(form.residues[static_cast<size_t>(j)], others));
        }
        out.numerator.assign(num.c.begin() + 1, num.c.end());
        out.denominator = monic_from_points(form.poles).c;
    } else {
        // One pole at infinity: its partial-fraction term is omitted and the
        // finite expansion has full degree s-2.
        std::vector<cplx> finite_poles;
        std::vector<cplx> finite_residues;
        for (int i = 0; i < s; ++i)
            if (form.poles[static_cast<size_t>(i)].is_finite()) {
                finite_poles.push_back(form.poles[static_cast<size_t>(i)].value);
                finite_residues.push_back(form.residues[static_cast<size_t>(i)]);
            }
        ComplexPoly num;
        const int m = static_cast<int>(finite_poles.size());
        for (int j = 0; j < m; ++j) {
            std::vector<cplx> others;
            others.reserve(static_cast<size_t>(m) - 1);
            for (int i = 0; i < m; ++i)
                if (i != j) others.push_back(finite_poles[static_cast<size_t>(i)]);
            num = poly_add(num, viete(finite_residues[static_cast<size_t>(j)], others));
        }
        out.numerator = num.c;
        out.denominator.assign(1, cplx(0.0));
        const ComplexPoly den = viete(cplx(1.0), finite_poles);
        out.denominator.insert(out.denominator.end(), den.c.begin(), den.c.end());
    }
    return validate(out, tol);
}

ResiduePoleForm to_residue_pole(const CoefficientForm& input, double tol) {
    const CoefficientForm form = validate(input, tol);
    const int s = form.s;
    const double scale = std::max(max_abs(form.numerator), max_abs(form.denominator));
    const ComplexPoly p = poly_trim(ComplexPoly{form.denominator}, tol * scale);
    const ComplexPoly q = poly_trim(ComplexPoly{form.numerator}, tol * scale);
    const bool pole_at_inf = p.degree() == s - 1;

    RootOptions opts;
    const std::vector<cplx> roots = poly_roots(p, opts);
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (chordal(SpherePoint(roots[i]), SpherePoint(roots[j])) <= opts.cluster_tol)
                fail(ErrorCode::MultiplePole, "denominator roots cluster");

    ResiduePoleForm out;
    const ComplexPoly dp = poly_derivative(p);
    cplx sum(0.0);
    for (const cplx& root : roots) {
        const cplx r = poly_eval(q, root) / poly_eval(dp, root);
        out.residues.push_back(r);
        out.poles.push_back(SpherePoint(root));
        sum += r;
    }
    if (pole_at_inf) {
        out.residues.push_back(-sum);
        out.poles.push_back(SpherePoint::inf());
    }
    return validate(out, tol);
}

CoefficientForm to_coefficients(const ZeroPoleForm& input, double tol) {
    const ZeroPoleForm form = validate(input, tol);
    const int s = form.s;
    const ComplexPoly qu = monic_from_points(form.zeros);
    const ComplexPoly pu = monic_from_points(form.poles);
    const cplx alpha(double(form.chart), 0.0);
    const cplx factor = form.lambda * poly_eval(pu, alpha) / poly_eval(qu, alpha);

    CoefficientForm out;
    out.s = s;
    out.numerator.assign(static_cast<size_t>(s - 1), cplx(0.0));
    const ComplexPoly num = poly_scale(qu, factor);
    std::copy(num.c.begin(), num.c.end(),
              out.numerator.end() - static_cast<long>(num.c.size()));
    out.denominator.assign(static_cast<size_t>(s + 1), cplx(0.0));
    std::copy(pu.c.begin(), pu.c.end(),
              out.denominator.end() - static_cast<long>(pu.c.size()));
    return validate(out, tol);
}

ZeroPoleForm to_zero_pole(const CoefficientForm& input, double tol) {
    const CoefficientForm form = validate(input, tol);
    const int s = form.s;
    const double scale = std::max(max_abs(form.numerator), max_abs(form.denominator));
    const ComplexPoly p = poly_trim(ComplexPoly{form.denominator}, tol * scale);
    const ComplexPoly q = poly_trim(ComplexPoly{form.numerator}, tol * scale);

    ZeroPoleForm out;
    out.s = s;
    RootOptions opts;
    for (const cplx& root : poly_roots(p, opts)) out.poles.push_back(SpherePoint(root));
    if (p.degree() == s - 1) out.poles.push_back(SpherePoint::inf());
    for (size_t i = 0; i < out.poles.size(); ++i)
        for (size_t j = i + 1; j < out.poles.size(); ++j)
            if (points_equal(out.poles[i], out.poles[j], opts.cluster_tol))
                fail(ErrorCode::MultiplePole, "denominator roots cluster");

    if (q.degree() >= 1)
        for (const cplx& root : poly_roots(q, opts)) out.zeros.push_back(SpherePoint(root));
    for (int i = q.degree(); i < s - 2; ++i) out.zeros.push_back(SpherePoint::inf());

    out.chart = least_admissible_chart(out.zeros, out.poles, s, tol);
    const cplx alpha(double(out.chart), 0.0);
    out.lambda = poly_eval(q, alpha) / poly_eval(p, alpha);
    return validate(out, tol);
}

FormDocument convert(const FormDocument& input, Representation target, double tol) {
    const FormDocument doc = validate(input, tol);
    const double t = doc.tolerance.value_or(tol);
    if (doc.representation == target) return doc;

    CoefficientForm coef;
    switch (doc.representation) {
        case Representation::ResiduePole: coef = to_coefficients(*doc.rp, t); break;
        case Representation::Coefficient: coef = *doc.coef; break;
        case Representation::ZeroPole: coef = to_coefficients(*doc.zp, t); break;
    }
    FormDocument out;
    switch (target) {
        case Representation::ResiduePole: out = FormDocument::make(to_residue_pole(coef, t)); break;
        case Representation::Coefficient: out = FormDocument::make(coef); break;
        case Representation::ZeroPole: out = FormDocument::make(to_zero_pole(coef, t)); break;
    }
    out.tolerance = doc.tolerance;
    return out;
}

ResiduePoleForm as_residue_pole(const FormDocument& doc, double tol) {
    return *convert(doc, Representation::ResiduePole, tol).rp;
}

ZeroPoleForm as_zero_pole(const FormDocument& doc, double tol) {
    return *convert(doc, Representation::ZeroPole, tol).zp;
}

cplx transition_factor(const std::vector<SpherePoint>& zeros,
                       const std::vector<SpherePoint>& poles, int alpha, int beta, double tol) {
    if (!chart_admissible(zeros, poles, alpha, tol) || !chart_admissible(zeros, poles, beta, tol))
        fail(ErrorCode::BadChart, "chart index hits a zero or pole");
    const ComplexPoly qu = monic_from_points(zeros);
    const ComplexPoly pu = monic_from_points(poles);
    const cplx a(double(alpha), 0.0);
    const cplx b(double(beta), 0.0);
    return (poly_eval(qu, a) / poly_eval(pu, a)) * (poly_eval(pu, b) / poly_eval(qu, b));
}

bool is_isochronous(const ResiduePoleForm& form, double tol) {
    for (const cplx& r : form.residues)
        if (std::abs(r.real()) > tol * std::abs(r)) return false;
    return true;
}

bool is_isochronous(const FormDocument& doc, double tol) {
    return is_isochronous(as_residue_pole(doc, tol), tol);
}

cplx eval_form(const ResiduePoleForm& form, cplx z, double tol) {
    cplx acc(0.0);
    for (int i = 0; i < form.s(); ++i) {
        const SpherePoint& p = form.poles[static_cast<size_t>(i)];
        if (!p.is_finite()) continue;
        if (points_equal(SpherePoint(z), p, tol))
            fail(ErrorCode::EvaluationAtPole, "evaluation point is a pole");
        acc += form.residues[static_cast<size_t>(i)] / (z - p.value);
    }
    return acc;
}

cplx eval_form(const CoefficientForm& form, cplx z, double tol) {
    const ComplexPoly p{form.denominator};
    const ComplexPoly q{form.numerator};
    const cplx pv = poly_eval(p, z);
    const double scale = std::max(max_abs(form.denominator), 1e-300) * std::max(1.0, std::pow(std::abs(z), form.s));
    if (std::abs(pv) <= tol * scale)
        fail(ErrorCode::EvaluationAtPole, "evaluation point is a pole");
    return poly_eval(q, z) / pv;
}

cplx eval_form(const ZeroPoleForm& form, cplx z, double tol) {
    for (const SpherePoint& p : form.poles)
        if (points_equal(SpherePoint(z), p, tol))
            fail(ErrorCode::EvaluationAtPole, "evaluation point is a pole");
    const ComplexPoly qu = monic_from_points(form.zeros);
    const ComplexPoly pu = monic_from_points(form.poles);
    const cplx alpha(double(form.chart), 0.0);
    const cplx factor = form.lambda * poly_eval(pu, alpha) / poly_eval(qu, alpha);
    return factor * poly_eval(qu, z) / poly_eval(pu, z);
}

cplx eval_form(const FormDocument& doc, cplx z, double tol) {
    const FormDocument d = validate(doc, tol);
    switch (d.representation) {
        case Representation::ResiduePole: return eval_form(*d.rp, z, tol);
        case Representation::Coefficient: return eval_form(*d.coef, z, tol);
        case Representation::ZeroPole: return eval_form(*d.zp, z, tol);
    }
    fail(ErrorCode::InvalidDocument, "unreachable");
}

std::pair<std::vector<cplx>, std::vector<cplx>>
rp_coefficients_affine(const std::vector<cplx>& residues, const std::vector<cplx>& poles) {
    const int s = static_cast<int>(residues.size());
    ComplexPoly num;
    for (int j = 0; j < s; ++j) {
        std::vector<cplx> others;
        others.reserve(static_cast<size_t>(s) - 1);
        for (int i = 0; i < s; ++i)
            if (i != j) others.push_back(poles[static_cast<size_t>(i)]);
        num = poly_add(num, viete(residues[static_cast<size_t>(j)], others));
    }
    std::vector<cplx> a(num.c.begin() + 1, num.c.end());
    const ComplexPoly den = viete(cplx(1.0), poles);
    std::vector<cplx> b(den.c.begin() + 1, den.c.end());
    return {std::move(a), std::move(b)};
}

} // namespace oneforms
