#include "oneforms/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace oneforms {

int GroupTag::order() const {
    switch (kind) {
        case Kind::Cyclic: return n;
        case Kind::Dihedral: return 2 * n;
        case Kind::Tetrahedral: return 12;
        case Kind::Octahedral: return 24;
        case Kind::Icosahedral: return 60;
    }
    return 0;
}

std::string GroupTag::name() const {
    switch (kind) {
        case Kind::Cyclic: return "Z_" + std::to_string(n);
        case Kind::Dihedral: return "D_" + std::to_string(n);
        case Kind::Tetrahedral: return "A4";
        case Kind::Octahedral: return "S4";
        case Kind::Icosahedral: return "A5";
    }
    return "?";
}

std::string GroupTag::table_name() const {
    if (kind == Kind::Dihedral && n == 2) return "Z_2xZ_2";
    return name();
}

GroupTag group_tag_from_name(const std::string& name) {
    if (name == "A4") return GroupTag::tetrahedral();
    if (name == "S4") return GroupTag::octahedral();
    if (name == "A5") return GroupTag::icosahedral();
    if (name == "Z_2xZ_2") return GroupTag::dihedral(2);
    if (name.rfind("Z_", 0) == 0) return GroupTag::cyclic(std::stoi(name.substr(2)));
    if (name.rfind("D_", 0) == 0) return GroupTag::dihedral(std::stoi(name.substr(2)));
    fail(ErrorCode::InvalidDocument, "unknown group tag '" + name + "'");
}

ResiduePoleForm pushforward(const MobiusMap& t, const ResiduePoleForm& form, double tol) {
    ResiduePoleForm out = form;
    for (SpherePoint& p : out.poles) p = mobius_apply(t, p);
    return validate(out, tol);
}

namespace {

bool residues_close(const cplx& a, const cplx& b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::abs(a));
}

// Does T carry every term of `from` onto a distinct term of `to`?
bool verify_carries(const MobiusMap& t, const ResiduePoleForm& from, const ResiduePoleForm& to,
                    double tol) {
    const int s = from.s();
    std::vector<bool> used(static_cast<size_t>(s), false);
    for (int i = 0; i < s; ++i) {
        const SpherePoint image = mobius_apply(t, from.poles[static_cast<size_t>(i)]);
        bool matched = false;
        for (int j = 0; j < s; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if (!residues_close(from.residues[static_cast<size_t>(i)], to.residues[static_cast<size_t>(j)], tol))
                continue;
            if (!points_equal(image, to.poles[static_cast<size_t>(j)], tol)) continue;
            used[static_cast<size_t>(j)] = true;
            matched = true;
            break;
        }
        if (!matched) return false;
    }
    return true;
}

bool residue_multisets_match(const ResiduePoleForm& a, const ResiduePoleForm& b, double tol) {
    const int s = a.s();
    std::vector<bool> used(static_cast<size_t>(s), false);
    for (int i = 0; i < s; ++i) {
        bool found = false;
        for (int j = 0; j < s; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if (residues_close(a.residues[static_cast<size_t>(i)], b.residues[static_cast<size_t>(j)], tol)) {
                used[static_cast<size_t>(j)] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Every map with T(from.p1, from.p2) = (q1, q2) works when s = 2; anchor a
// third point to pick one.
std::optional<MobiusMap> two_pole_map(const ResiduePoleForm& from, const ResiduePoleForm& to,
                                      double tol) {
    const std::array<SpherePoint, 4> aux = {SpherePoint(0.0, 0.0), SpherePoint(1.0, 0.0),
                                            SpherePoint(-1.0, 0.0), SpherePoint(0.0, 1.0)};
    const auto third = [&aux, tol](const SpherePoint& a, const SpherePoint& b) {
        for (const SpherePoint& w : aux)
            if (!points_equal(w, a, tol) && !points_equal(w, b, tol)) return w;
        return SpherePoint(2.0, 2.0);
    };
    for (int perm = 0; perm < 2; ++perm) {
        const int j0 = perm, j1 = 1 - perm;
        if (!residues_close(from.residues[0], to.residues[static_cast<size_t>(j0)], tol) ||
            !residues_close(from.residues[1], to.residues[static_cast<size_t>(j1)], tol))
            continue;
        const SpherePoint wa = third(from.poles[0], from.poles[1]);
        const SpherePoint wb = third(to.poles[static_cast<size_t>(j0)], to.poles[static_cast<size_t>(j1)]);
        const MobiusMap t = mobius_compose(
            mobius_inverse(mobius_from_triples(
                {to.poles[static_cast<size_t>(j0)], to.poles[static_cast<size_t>(j1)], wb},
                {SpherePoint(0.0, 0.0), SpherePoint::inf(), SpherePoint(1.0, 0.0)}, tol)),
            mobius_from_triples({from.poles[0], from.poles[1], wa},
                                {SpherePoint(0.0, 0.0), SpherePoint::inf(), SpherePoint(1.0, 0.0)},
                                tol));
        if (verify_carries(t, from, to, tol)) return t;
    }
    return std::nullopt;
}

// Candidate maps are pinned by the images of the first three poles; images are
// restricted to poles of `to` with matching residues.
void search_carriers(const ResiduePoleForm& from, const ResiduePoleForm& to, double tol,
                     long long budget, bool collect_all, std::vector<MobiusMap>& found) {
    const int s = from.s();
    std::array<std::vector<int>, 3> candidates;
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < s; ++j)
            if (residues_close(from.residues[static_cast<size_t>(k)], to.residues[static_cast<size_t>(j)], tol))
                candidates[static_cast<size_t>(k)].push_back(j);

    long long examined = 0;
    for (int q1 : candidates[0])
        for (int q2 : candidates[1]) {
            if (q2 == q1) continue;
            for (int q3 : candidates[2]) {
                if (q3 == q1 || q3 == q2) continue;
                if (++examined > budget)
                    fail(ErrorCode::TooManyPermutations, "candidate budget exhausted");
                MobiusMap t;
                try {
                    t = mobius_from_triples(
                        {from.poles[0], from.poles[1], from.poles[2]},
                        {to.poles[static_cast<size_t>(q1)], to.poles[static_cast<size_t>(q2)],
                         to.poles[static_cast<size_t>(q3)]},
                        tol);
                } catch (const FormsError&) {
                    continue;
                }
                if (!verify_carries(t, from, to, tol)) continue;
                bool known = false;
                for (const MobiusMap& g : found)
                    if (psl_equal(t, g, 10.0 * tol)) {
                        known = true;
                        break;
                    }
                if (!known) found.push_back(t);
                if (!collect_all && !found.empty()) return;
            }
        }
}

// Sign-canonical entries for deterministic ordering of group elements.
std::array<double, 8> canonical_key(const MobiusMap& t) {
    const cplx entries[4] = {t.a, t.b, t.c, t.d};
    int lead = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(entries[i]) > std::abs(entries[lead]) + 1e-12) lead = i;
    double sign = 1.0;
    if (entries[lead].real() < -1e-12 ||
        (std::abs(entries[lead].real()) <= 1e-12 && entries[lead].imag() < 0.0))
        sign = -1.0;
    std::array<double, 8> key{};
    for (int i = 0; i < 4; ++i) {
        key[static_cast<size_t>(2 * i)] = sign * entries[i].real();
        key[static_cast<size_t>(2 * i + 1)] = sign * entries[i].imag();
    }
    return key;
}

} // namespace

GroupTag classify_finite_subgroup(const std::vector<MobiusMap>& elements, double tol) {
    const int order = static_cast<int>(elements.size());
    if (order <= 0) fail(ErrorCode::NotAGroup, "empty element set");
    bool has_identity = false;
    int max_order = 1;
    for (const MobiusMap& t : elements) {
        const int k = mobius_order(t, order + 1, std::max(tol, 1e-8));
        if (k == 0) fail(ErrorCode::NotAGroup, "element of unbounded order");
        if (k == 1) has_identity = true;
        max_order = std::max(max_order, k);
    }
    if (!has_identity) fail(ErrorCode::NotAGroup, "identity missing");
    if (max_order == order) return GroupTag::cyclic(order);
    if (order == 12 && max_order == 3) return GroupTag::tetrahedral();
    if (order == 24 && max_order == 4) return GroupTag::octahedral();
    if (order == 60 && max_order == 5) return GroupTag::icosahedral();
    if (order == 2 * max_order) return GroupTag::dihedral(max_order);
    fail(ErrorCode::NotAGroup, "element orders match no finite Mobius group");
}

FiniteMobiusGroup isotropy_group(const ResiduePoleForm& input, double tol, long long budget) {
    const ResiduePoleForm form = validate(input, tol);
    if (form.s() == 2)
        fail(ErrorCode::InfiniteIsotropy, "two-pole forms have isotropy C*");
    if (form.s() < 3) fail(ErrorCode::InvalidDocument, "isotropy needs s >= 2");

    std::vector<MobiusMap> found;
    search_carriers(form, form, tol, budget, /*collect_all=*/true, found);

    // Closure and inverse checks; the search is exhaustive, so failures would
    // signal numerical trouble rather than missing elements.
    const double loose = 100.0 * tol;
    for (const MobiusMap& g : found) {
        bool ok = false;
        const MobiusMap gi = mobius_inverse(g);
        for (const MobiusMap& h : found)
            if (psl_equal(gi, h, loose)) {
                ok = true;
                break;
            }
        if (!ok) fail(ErrorCode::NotAGroup, "isotropy set not inverse-closed");
    }
    for (const MobiusMap& g : found)
        for (const MobiusMap& h : found) {
            const MobiusMap gh = mobius_compose(g, h);
            bool ok = false;
            for (const MobiusMap& k : found)
                if (psl_equal(gh, k, loose)) {
                    ok = true;
                    break;
                }
            if (!ok) fail(ErrorCode::NotAGroup, "isotropy set not closed");
        }

    std::sort(found.begin(), found.end(), [](const MobiusMap& x, const MobiusMap& y) {
        return canonical_key(x) < canonical_key(y);
    });
    FiniteMobiusGroup group;
    group.elements = std::move(found);
    group.tag = classify_finite_subgroup(group.elements, tol);
    return group;
}

std::optional<MobiusMap> are_psl_equivalent(const ResiduePoleForm& a, const ResiduePoleForm& b,
                                            double tol, long long budget) {
    const ResiduePoleForm fa = validate(a, tol);
    const ResiduePoleForm fb = validate(b, tol);
    if (fa.s() != fb.s()) fail(ErrorCode::InvalidDocument, "pole counts differ");
    if (!residue_multisets_match(fa, fb, tol)) return std::nullopt;
    if (fa.s() == 2) return two_pole_map(fa, fb, tol);
    std::vector<MobiusMap> found;
    search_carriers(fa, fb, tol, budget, /*collect_all=*/false, found);
    if (found.empty()) return std::nullopt;
    return found.front();
}

namespace {

std::vector<SpherePoint> roots_of_unity(int n, double radius = 1.0, double offset = 0.0) {
    std::vector<SpherePoint> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + offset;
        pts.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
    }
    return pts;
}

std::array<double, 3> to_unit_sphere(const SpherePoint& w) {
    if (w.infinite) return {0.0, 0.0, 1.0};
    const double n2 = std::norm(w.value);
    return {2.0 * w.value.real() / (1.0 + n2), 2.0 * w.value.imag() / (1.0 + n2),
            (n2 - 1.0) / (1.0 + n2)};
}

SpherePoint from_unit_sphere(const std::array<double, 3>& v) {
    if (v[2] > 1.0 - 1e-12) return SpherePoint::inf();
    return SpherePoint(v[0] / (1.0 - v[2]), v[1] / (1.0 - v[2]));
}

std::vector<SpherePoint> icosahedron_vertices() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<SpherePoint> pts;
    pts.push_back(SpherePoint::inf());
    pts.push_back(SpherePoint(0.0, 0.0));
    for (const SpherePoint& p : roots_of_unity(5, phi)) pts.push_back(p);
    for (const SpherePoint& p : roots_of_unity(5, 1.0 / phi, std::numbers::pi / 5.0))
        pts.push_back(p);
    return pts;
}

// Dodecahedron vertices as normalized face centroids of the icosahedron.
std::vector<SpherePoint> dodecahedron_vertices() {
    const std::vector<SpherePoint> ico = icosahedron_vertices();
    std::vector<std::array<double, 3>> v;
    v.reserve(ico.size());
    for (const SpherePoint& p : ico) v.push_back(to_unit_sphere(p));

    const auto dot = [](const std::array<double, 3>& x, const std::array<double, 3>& y) {
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    };
    // Neighboring icosahedron vertices have dot product 1/sqrt(5).
    const auto adjacent = [&](size_t i, size_t j) { return dot(v[i], v[j]) > 0.3; };

    std::vector<SpherePoint> out;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            for (size_t k = j + 1; k < v.size(); ++k) {
                if (!(adjacent(i, j) && adjacent(j, k) && adjacent(i, k))) continue;
                std::array<double, 3> c = {v[i][0] + v[j][0] + v[k][0],
                                           v[i][1] + v[j][1] + v[k][1],
                                           v[i][2] + v[j][2] + v[k][2]};
                const double len = std::sqrt(dot(c, c));
                for (double& x : c) x /= len;
                out.push_back(from_unit_sphere(c));
            }
    if (out.size() != 20) fail(ErrorCode::NotAGroup, "icosahedron face census failed");
    return out;
}

} // namespace

namespace {

// Antipodal copy of the tetrahedron below: the three finite vertices move to
// radius sqrt(2) at the opposite angles, infinity moves to the origin.
std::vector<SpherePoint> tetrahedron_dual_vertices() {
    std::vector<SpherePoint> pts = roots_of_unity(3, std::sqrt(2.0), std::numbers::pi / 3.0);
    pts.push_back(SpherePoint(0.0, 0.0));
    return pts;
}

} // namespace

std::vector<SpherePoint> platonic_vertices(PlatonicSolid s) {
    switch (s) {
        case PlatonicSolid::Tetrahedron: {
            // One vertex at infinity, three on the circle of radius sqrt(2)/2.
            std::vector<SpherePoint> pts = roots_of_unity(3, std::sqrt(2.0) / 2.0);
            pts.push_back(SpherePoint::inf());
            return pts;
        }
        case PlatonicSolid::Cube: {
            const double lambda = (std::sqrt(6.0) - std::sqrt(2.0)) / 2.0;
            std::vector<SpherePoint> pts = roots_of_unity(4, lambda);
            for (const SpherePoint& p : roots_of_unity(4, 1.0 / lambda)) pts.push_back(p);
            return pts;
        }
        case PlatonicSolid::Octahedron: {
            std::vector<SpherePoint> pts = roots_of_unity(4, 1.0, std::numbers::pi / 4.0);
            pts.push_back(SpherePoint(0.0, 0.0));
            pts.push_back(SpherePoint::inf());
            return pts;
        }
        case PlatonicSolid::Dodecahedron: return dodecahedron_vertices();
        case PlatonicSolid::Icosahedron: return icosahedron_vertices();
    }
    fail(ErrorCode::InvalidDocument, "unknown solid");
}

PlatonicSolid platonic_dual(PlatonicSolid s) {
    switch (s) {
        case PlatonicSolid::Tetrahedron: return PlatonicSolid::Tetrahedron;
        case PlatonicSolid::Cube: return PlatonicSolid::Octahedron;
        case PlatonicSolid::Octahedron: return PlatonicSolid::Cube;
        case PlatonicSolid::Dodecahedron: return PlatonicSolid::Icosahedron;
        case PlatonicSolid::Icosahedron: return PlatonicSolid::Dodecahedron;
    }
    fail(ErrorCode::InvalidDocument, "unknown solid");
}

ResiduePoleForm realize_cyclic(int n) {
    if (n < 2) fail(ErrorCode::InvalidDocument, "cyclic realization needs n >= 2");
    ResiduePoleForm form;
    for (const SpherePoint& p : roots_of_unity(n)) {
        form.residues.emplace_back(0.0, 1.0);
        form.poles.push_back(p);
    }
    form.residues.emplace_back(0.0, -double(n));
    form.poles.emplace_back(0.0, 0.0);
    return validate(form);
}

ResiduePoleForm realize_dihedral(int n) {
    if (n < 2) fail(ErrorCode::InvalidDocument, "dihedral realization needs n >= 2");
    ResiduePoleForm form;
    for (const SpherePoint& p : roots_of_unity(n)) {
        form.residues.emplace_back(0.0, 1.0);
        form.poles.push_back(p);
    }
    form.residues.emplace_back(0.0, -double(n) / 2.0);
    form.poles.emplace_back(0.0, 0.0);
    form.residues.emplace_back(0.0, -double(n) / 2.0);
    form.poles.push_back(SpherePoint::inf());
    return validate(form);
}

ResiduePoleForm realize_platonic(PlatonicSolid s) {
    const std::vector<SpherePoint> primary = platonic_vertices(s);
    const std::vector<SpherePoint> dual = s == PlatonicSolid::Tetrahedron
                                              ? tetrahedron_dual_vertices()
                                              : platonic_vertices(platonic_dual(s));
    // The residue theorem fixes the dual residue ratio as |V(S)| / |V(S*)|.
    const double k = double(primary.size()) / double(dual.size());
    ResiduePoleForm form;
    for (const SpherePoint& p : primary) {
        form.residues.emplace_back(0.0, 1.0);
        form.poles.push_back(p);
    }
    for (const SpherePoint& p : dual) {
        form.residues.emplace_back(0.0, -k);
        form.poles.push_back(p);
    }
    return validate(form);
}

namespace {

bool polyhedral_realizable(int s, int base, const std::vector<int>& allowed) {
    for (int n1 = 0; base * n1 <= s; ++n1) {
        const int n2 = s - base * n1;
        if (std::find(allowed.begin(), allowed.end(), n2) != allowed.end() && n1 + n2 >= 2)
            return true;
    }
    return false;
}

} // namespace

bool realizable_isotropy(int s, const GroupTag& tag) {
    if (s < 3) return false;
    switch (tag.kind) {
        case GroupTag::Kind::Cyclic: {
            const int n = tag.n;
            if (n < 2 || s <= n) return false;
            const int m = s % n;
            return m == 0 || m == 1 || m == 2;
        }
        case GroupTag::Kind::Dihedral: {
            const int n = tag.n;
            if (n < 2 || s <= n) return false;
            const int m = s % n;
            return m == 0 || m == 2;
        }
        case GroupTag::Kind::Tetrahedral:
            return polyhedral_realizable(s, 12, {0, 8, 10, 14, 16, 18});
        case GroupTag::Kind::Octahedral:
            return polyhedral_realizable(s, 24, {0, 14, 18, 20, 26, 30, 32, 36});
        case GroupTag::Kind::Icosahedral:
            return polyhedral_realizable(s, 60, {0, 32, 42, 50, 62, 72, 80, 90});
    }
    return false;
}

std::vector<GroupTag> isotropy_table(int s) {
    if (s < 3) fail(ErrorCode::InvalidDocument, "isotropy table needs s >= 3");
    std::vector<GroupTag> out;
    for (int n = 2; n < s; ++n)
        if (realizable_isotropy(s, GroupTag::cyclic(n))) out.push_back(GroupTag::cyclic(n));
    for (int n = 2; n < s; ++n)
        if (realizable_isotropy(s, GroupTag::dihedral(n))) out.push_back(GroupTag::dihedral(n));
    for (const GroupTag& g :
         {GroupTag::tetrahedral(), GroupTag::octahedral(), GroupTag::icosahedral()})
        if (realizable_isotropy(s, g)) out.push_back(g);
    return out;
}

GroupTag classify_s4_by_cross_ratio(const ResiduePoleForm& input, double tol) {
    const ResiduePoleForm form = validate(input, tol);
    if (form.s() != 4) fail(ErrorCode::InvalidDocument, "cross-ratio classification needs s = 4");

    bool eq[4][4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            eq[i][j] = residues_close(form.residues[static_cast<size_t>(i)],
                                      form.residues[static_cast<size_t>(j)], tol);

    const SpherePoint lambda =
        cross_ratio(form.poles[0], form.poles[1], form.poles[2], form.poles[3], tol);
    const auto lambda_is = [&lambda, tol](cplx target) {
        return lambda.is_finite() && std::abs(lambda.value - target) <= tol * (1.0 + std::abs(target));
    };

    // Transposition (i j) needs equal residues at i, j and the matched
    // cross-ratio value: {1,2} and {3,4} pair with -1, {1,3} and {2,4} with
    // 1/2, {1,4} and {2,3} with 2.
    const struct {
        int i, j;
        double value;
    } swaps[6] = {{0, 1, -1.0}, {2, 3, -1.0}, {0, 2, 0.5},
                  {1, 3, 0.5},  {0, 3, 2.0},  {1, 2, 2.0}};
    int nontrivial = 0;
    for (const auto& sw : swaps)
        if (eq[sw.i][sw.j] && lambda_is(cplx(sw.value))) ++nontrivial;

    // Double transpositions preserve the cross-ratio unconditionally.
    const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairs)
        if (eq[pr[0]][pr[1]] && eq[pr[2]][pr[3]]) ++nontrivial;

    // A 3-cycle on three equal residues needs lambda^2 - lambda + 1 = 0.
    const bool hexagonal = lambda_is(cplx(0.5, std::sqrt(3.0) / 2.0)) ||
                           lambda_is(cplx(0.5, -std::sqrt(3.0) / 2.0));
    if (hexagonal)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k)
                    if (eq[i][j] && eq[j][k] && eq[i][k]) nontrivial += 2;

    switch (1 + nontrivial) {
        case 1: return GroupTag::cyclic(1);
        case 2: return GroupTag::cyclic(2);
        case 3: return GroupTag::cyclic(3);
        case 4: return GroupTag::dihedral(2);
        default: fail(ErrorCode::NotAGroup, "inconsistent s=4 case analysis");
    }
}

} // namespace oneforms
