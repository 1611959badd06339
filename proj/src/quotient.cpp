#include "oneforms/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oneforms/group.hpp"

namespace oneforms {

MPoint validate(const MPoint& m, double tol) {
    if (m.s < 3) fail(ErrorCode::InvalidMPoint, "quotient coordinates need s >= 3");
    if (static_cast<int>(m.residues.size()) != m.s - 1 ||
        static_cast<int>(m.poles.size()) != std::max(0, m.s - 3))
        fail(ErrorCode::InvalidMPoint, "inconsistent coordinate sizes");
    cplx sum(0.0);
    for (const cplx& r : m.residues) {
        if (std::abs(r) <= tol) fail(ErrorCode::InvalidMPoint, "vanishing residue coordinate");
        sum += r;
    }
    if (std::abs(sum) <= tol) fail(ErrorCode::InvalidMPoint, "vanishing trailing residue");
    for (const cplx& p : m.poles) {
        if (std::abs(p) <= tol || std::abs(p - cplx(1.0)) <= tol)
            fail(ErrorCode::InvalidMPoint, "pole coordinate hits a normalized pole");
    }
    for (size_t i = 0; i < m.poles.size(); ++i)
        for (size_t j = i + 1; j < m.poles.size(); ++j)
            if (points_equal(SpherePoint(m.poles[i]), SpherePoint(m.poles[j]), tol))
                fail(ErrorCode::InvalidMPoint, "coincident pole coordinates");
    return m;
}

bool mpoints_equal(const MPoint& a, const MPoint& b, double tol) {
    if (a.s != b.s) return false;
    for (size_t i = 0; i < a.residues.size(); ++i)
        if (std::abs(a.residues[i] - b.residues[i]) > tol * (1.0 + std::abs(a.residues[i])))
            return false;
    for (size_t i = 0; i < a.poles.size(); ++i)
        if (chordal(SpherePoint(a.poles[i]), SpherePoint(b.poles[i])) > tol) return false;
    return true;
}

GeneratorImage symmetric_generator(int s, int j) {
    if (s < 3) fail(ErrorCode::InvalidMPoint, "generators need s >= 3");
    if (j < 1 || j > s - 1) fail(ErrorCode::IndexOutOfRange, "generator index out of range");

    GeneratorImage g;
    const int dim = s - 1;
    g.matrix.assign(static_cast<size_t>(dim), std::vector<long>(static_cast<size_t>(dim), 0));
    for (int i = 0; i < dim; ++i) g.matrix[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    if (j <= s - 2) {
        std::swap(g.matrix[static_cast<size_t>(j - 1)], g.matrix[static_cast<size_t>(j)]);
    } else {
        // Passing the implicit residue -sum into slot s-1.
        for (int i = 0; i < dim; ++i) g.matrix[static_cast<size_t>(dim - 1)][static_cast<size_t>(i)] = -1;
    }

    switch (j) {
        case 1: g.map = GeneratorImage::MapKind::Reciprocal; break;
        case 2: g.map = GeneratorImage::MapKind::ZOverZMinus1; break;
        case 3: g.map = GeneratorImage::MapKind::DivideByFirst; break;
        default:
            g.map = GeneratorImage::MapKind::SwapAdjacent;
            g.swap_index = j;
            break;
    }
    return g;
}

MPoint apply_generator(const GeneratorImage& g, const MPoint& input, double tol) {
    const MPoint m = validate(input, tol);
    MPoint out;
    out.s = m.s;
    const size_t dim = m.residues.size();
    out.residues.assign(dim, cplx(0.0));
    for (size_t i = 0; i < dim; ++i)
        for (size_t k = 0; k < dim; ++k)
            if (g.matrix[i][k] != 0) out.residues[i] += double(g.matrix[i][k]) * m.residues[k];

    out.poles = m.poles;
    switch (g.map) {
        case GeneratorImage::MapKind::Reciprocal:
            for (cplx& z : out.poles) z = 1.0 / z;
            break;
        case GeneratorImage::MapKind::ZOverZMinus1:
            for (cplx& z : out.poles) z = z / (z - 1.0);
            break;
        case GeneratorImage::MapKind::DivideByFirst: {
            if (!out.poles.empty()) {
                const cplx z4 = out.poles.front();
                for (size_t i = 1; i < out.poles.size(); ++i) out.poles[i] /= z4;
                out.poles.front() = 1.0 / z4;
            }
            break;
        }
        case GeneratorImage::MapKind::SwapAdjacent: {
            const size_t a = static_cast<size_t>(g.swap_index - 4);
            if (a + 1 >= out.poles.size())
                fail(ErrorCode::IndexOutOfRange, "pole swap out of range");
            std::swap(out.poles[a], out.poles[a + 1]);
            break;
        }
    }
    return validate(out, tol);
}

namespace {

// sigma as a word in adjacent transpositions; applying the word left to right
// realizes the left action sigma . m.
std::vector<int> adjacent_word(std::vector<int> sigma) {
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t pos = 0; pos + 1 < sigma.size(); ++pos) {
            if (sigma[pos] > sigma[pos + 1]) {
                std::swap(sigma[pos], sigma[pos + 1]);
                word.push_back(static_cast<int>(pos) + 1);
                changed = true;
            }
        }
    }
    return word;
}

} // namespace

MPoint apply_permutation(const std::vector<int>& sigma, const MPoint& input, double tol) {
    const int s = input.s;
    if (static_cast<int>(sigma.size()) != s)
        fail(ErrorCode::IndexOutOfRange, "permutation size mismatch");
    std::vector<bool> seen(static_cast<size_t>(s), false);
    for (int v : sigma) {
        if (v < 0 || v >= s || seen[static_cast<size_t>(v)])
            fail(ErrorCode::IndexOutOfRange, "not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
    MPoint m = validate(input, tol);
    for (int j : adjacent_word(sigma)) m = apply_generator(symmetric_generator(s, j), m, tol);
    return m;
}

MPoint canonicalize(const ResiduePoleForm& input, double tol) {
    const ResiduePoleForm form = validate(input, tol);
    const int s = form.s();
    if (s < 3) fail(ErrorCode::InvalidMPoint, "canonical coordinates need s >= 3");
    MPoint m;
    m.s = s;
    m.residues.assign(form.residues.begin(), form.residues.end() - 1);
    if (s > 3) {
        const MobiusMap t = mobius_from_triples(
            {form.poles[0], form.poles[1], form.poles[2]},
            {SpherePoint(0.0, 0.0), SpherePoint::inf(), SpherePoint(1.0, 0.0)}, tol);
        for (int i = 3; i < s; ++i) {
            const SpherePoint image = mobius_apply(t, form.poles[static_cast<size_t>(i)]);
            if (!image.is_finite()) fail(ErrorCode::InvalidMPoint, "pole image not finite");
            m.poles.push_back(image.value);
        }
    }
    return validate(m, tol);
}

ResiduePoleForm mpoint_form(const MPoint& input, double tol) {
    const MPoint m = validate(input, tol);
    ResiduePoleForm form;
    form.residues = m.residues;
    cplx sum(0.0);
    for (const cplx& r : m.residues) sum += r;
    form.residues.push_back(-sum);
    form.poles = {SpherePoint(0.0, 0.0), SpherePoint::inf(), SpherePoint(1.0, 0.0)};
    for (const cplx& p : m.poles) form.poles.push_back(SpherePoint(p));
    return validate(form, tol);
}

std::vector<MPoint> orbit(const MPoint& input, double tol) {
    const MPoint m = validate(input, tol);
    std::vector<int> sigma(static_cast<size_t>(m.s));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<MPoint> out;
    do {
        const MPoint image = apply_permutation(sigma, m, tol);
        bool known = false;
        for (const MPoint& o : out)
            if (mpoints_equal(o, image, tol)) {
                known = true;
                break;
            }
        if (!known) out.push_back(image);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::sort(out.begin(), out.end(), [](const MPoint& a, const MPoint& b) {
        for (size_t i = 0; i < a.residues.size(); ++i) {
            if (a.residues[i].real() != b.residues[i].real())
                return a.residues[i].real() < b.residues[i].real();
            if (a.residues[i].imag() != b.residues[i].imag())
                return a.residues[i].imag() < b.residues[i].imag();
        }
        for (size_t i = 0; i < a.poles.size(); ++i) {
            if (a.poles[i].real() != b.poles[i].real()) return a.poles[i].real() < b.poles[i].real();
            if (a.poles[i].imag() != b.poles[i].imag()) return a.poles[i].imag() < b.poles[i].imag();
        }
        return false;
    });
    return out;
}

bool same_orbit(const MPoint& a, const MPoint& b, double tol) {
    if (a.s != b.s) return false;
    const MPoint ma = validate(a, tol);
    const MPoint mb = validate(b, tol);
    std::vector<int> sigma(static_cast<size_t>(ma.s));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        if (mpoints_equal(apply_permutation(sigma, ma, tol), mb, tol)) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

IsochronousComponent isochronous_component_s4(const MPoint& input, double tol) {
    // tol widens the isochrony and boundary checks only; structural validation
    // keeps the default width.
    const MPoint m = validate(input, kDefaultTol);
    if (m.s != 4) fail(ErrorCode::InvalidMPoint, "component labels are defined for s = 4");
    double y[4];
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) {
        const cplx r = m.residues[static_cast<size_t>(i)];
        if (std::abs(r.real()) > tol * std::abs(r))
            fail(ErrorCode::NotIsochronous, "residues are not purely imaginary");
        y[i] = r.imag();
        scale = std::max(scale, std::abs(r));
    }
    y[3] = -(y[0] + y[1] + y[2]);
    for (int i = 0; i < 4; ++i)
        if (std::abs(y[i]) <= tol * std::max(1.0, scale))
            fail(ErrorCode::ZeroImaginaryPart, "sign pattern on a component boundary");

    std::vector<int> positive;
    for (int i = 0; i < 3; ++i)
        if (y[i] > 0.0) positive.push_back(i + 1);
    const bool last_positive = y[3] > 0.0;

    IsochronousComponent out;
    if (positive.size() == 3) {
        out.label = "X+";
        out.cls = 1;
    } else if (positive.empty()) {
        out.label = "X-";
        out.cls = 2;
    } else if (positive.size() == 1) {
        out.label = "X" + std::to_string(positive[0]) + (last_positive ? "+" : "-");
        out.cls = last_positive ? 3 : 2;
    } else {
        out.label = "X" + std::to_string(positive[0]) + std::to_string(positive[1]) +
                    (last_positive ? "+" : "-");
        out.cls = last_positive ? 1 : 3;
    }
    return out;
}

std::vector<IsochronousComponent> isochronous_components_s4() {
    std::vector<IsochronousComponent> out;
    out.push_back({"X+", 1});
    out.push_back({"X23+", 1});
    out.push_back({"X13+", 1});
    out.push_back({"X12+", 1});
    out.push_back({"X-", 2});
    out.push_back({"X1-", 2});
    out.push_back({"X2-", 2});
    out.push_back({"X3-", 2});
    out.push_back({"X1+", 3});
    out.push_back({"X2+", 3});
    out.push_back({"X3+", 3});
    out.push_back({"X23-", 3});
    out.push_back({"X13-", 3});
    out.push_back({"X12-", 3});
    return out;
}

int orbit_type_count(int s) {
    return static_cast<int>(isotropy_table(s).size()) + 1;
}

} // namespace oneforms
