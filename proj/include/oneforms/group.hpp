#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oneforms/forms.hpp"

namespace oneforms {

/// Isomorphism type of a finite subgroup of PSL(2,C).
struct GroupTag {
    enum class Kind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };
    Kind kind = Kind::Cyclic;
    int n = 1; // parameter for cyclic/dihedral

    int order() const;
    std::string name() const;       // "Z_4", "D_3", "A4", "S4", "A5"
    std::string table_name() const; // like name(), but D_2 prints as "Z_2xZ_2"
    bool operator==(const GroupTag& other) const { return kind == other.kind && n == other.n; }
    bool operator!=(const GroupTag& other) const { return !(*this == other); }

    static GroupTag cyclic(int n) { return GroupTag{Kind::Cyclic, n}; }
    static GroupTag dihedral(int n) { return GroupTag{Kind::Dihedral, n}; }
    static GroupTag tetrahedral() { return GroupTag{Kind::Tetrahedral, 0}; }
    static GroupTag octahedral() { return GroupTag{Kind::Octahedral, 0}; }
    static GroupTag icosahedral() { return GroupTag{Kind::Icosahedral, 0}; }
};

GroupTag group_tag_from_name(const std::string& name);

/// A finite subgroup of PSL(2,C), elements closed under composition and
/// inverse, listed in a canonical deterministic order.
struct FiniteMobiusGroup {
    std::vector<MobiusMap> elements;
    GroupTag tag;

    int order() const { return static_cast<int>(elements.size()); }
};

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

/// T_* <r; p> = <r; T(p)>: residues fixed, poles moved.
ResiduePoleForm pushforward(const MobiusMap& t, const ResiduePoleForm& form,
                            double tol = kDefaultTol);

/// The stabilizer {T : T_* form = form}, finite for s >= 3. The search walks
/// candidate images of the first three poles inside their residue classes;
/// `budget` caps the number of candidate triples examined.
FiniteMobiusGroup isotropy_group(const ResiduePoleForm& form, double tol = kDefaultTol,
                                 long long budget = 10'000'000);

/// Tag of a closed finite element set, decided by the element-order census.
GroupTag classify_finite_subgroup(const std::vector<MobiusMap>& elements,
                                  double tol = kDefaultTol);

/// A Mobius map carrying one weighted pole configuration onto the other, if any.
std::optional<MobiusMap> are_psl_equivalent(const ResiduePoleForm& a, const ResiduePoleForm& b,
                                            double tol = kDefaultTol,
                                            long long budget = 10'000'000);

/// Pyramid form <i,...,i,-ni; roots of unity, 0>; isotropy Z_n.
ResiduePoleForm realize_cyclic(int n);

/// Bipyramid form <i,...,i,-n/2 i,-n/2 i; roots of unity, 0, inf>; isotropy D_n.
ResiduePoleForm realize_dihedral(int n);

/// Residue i on the vertices of S and -(|V(S)|/|V(S*)|) i on the dual vertices.
ResiduePoleForm realize_platonic(PlatonicSolid s);

/// Stereographic vertex coordinates used by realize_platonic.
std::vector<SpherePoint> platonic_vertices(PlatonicSolid s);
PlatonicSolid platonic_dual(PlatonicSolid s);

/// Arithmetic realizability of G as an isotropy group at pole count s.
bool realizable_isotropy(int s, const GroupTag& tag);

/// All nontrivial tags realizable at pole count s, canonically ordered
/// (cyclic ascending, dihedral ascending, then polyhedral).
std::vector<GroupTag> isotropy_table(int s);

/// s = 4 isotropy tag via the residue pattern and the pole cross-ratio, without
/// searching; must agree with isotropy_group.
GroupTag classify_s4_by_cross_ratio(const ResiduePoleForm& form, double tol = kDefaultTol);

} // namespace oneforms
