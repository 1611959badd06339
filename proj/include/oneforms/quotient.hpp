#pragma once

#include <string>
#include <vector>

#include "oneforms/forms.hpp"

namespace oneforms {

/// Quotient coordinates (r_1,...,r_{s-1}, p_4,...,p_s) with the first three
/// poles normalized to 0, inf, 1. Poles are finite and avoid {0, 1}.
struct MPoint {
    int s = 0;
    std::vector<cplx> residues; // size s-1
    std::vector<cplx> poles;    // size s-3 (empty for s = 3)
};

/// Image of an adjacent transposition: an integer matrix on the residues and a
/// birational map on the free pole coordinates.
struct GeneratorImage {
    enum class MapKind { Reciprocal, ZOverZMinus1, DivideByFirst, SwapAdjacent };

    std::vector<std::vector<long>> matrix; // (s-1) x (s-1), det +-1
    MapKind map = MapKind::Reciprocal;
    int swap_index = 0; // generator index j for SwapAdjacent (swaps z_j, z_{j+1})
};

MPoint validate(const MPoint& m, double tol = kDefaultTol);
bool mpoints_equal(const MPoint& a, const MPoint& b, double tol = kDefaultTol);

/// Image of the adjacent transposition (j j+1) for 1 <= j <= s-1, s >= 3.
GeneratorImage symmetric_generator(int s, int j);

MPoint apply_generator(const GeneratorImage& g, const MPoint& m, double tol = kDefaultTol);

/// Left action of a permutation of {1,...,s} (given 0-based as images) through
/// its decomposition into adjacent transpositions.
MPoint apply_permutation(const std::vector<int>& sigma, const MPoint& m,
                         double tol = kDefaultTol);

/// Normalize the first three poles to (0, inf, 1) and keep the leading s-1
/// residues. MPoints are per-ordering representatives; compare via same_orbit.
MPoint canonicalize(const ResiduePoleForm& form, double tol = kDefaultTol);

/// <r_1,...,r_{s-1},-sum; 0, inf, 1, p_4,...,p_s>.
ResiduePoleForm mpoint_form(const MPoint& m, double tol = kDefaultTol);

/// Full symmetric-group orbit, deduplicated within tol and canonically sorted.
std::vector<MPoint> orbit(const MPoint& m, double tol = kDefaultTol);

bool same_orbit(const MPoint& a, const MPoint& b, double tol = kDefaultTol);

struct IsochronousComponent {
    std::string label; // one of X+, X-, Xj+, Xj-, Xj1j2+, Xj1j2-
    int cls = 0;       // identification class, 1..3
};

/// Connected component of the isochronous s = 4 locus by the sign pattern of
/// the residue imaginary parts, with its identification class.
IsochronousComponent isochronous_component_s4(const MPoint& m, double tol = kDefaultTol);

/// All 14 component labels together with their identification classes.
std::vector<IsochronousComponent> isochronous_components_s4();

/// Number of isotropy orbit types at pole count s (nontrivial tags plus one).
int orbit_type_count(int s);

} // namespace oneforms
