#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pb/homology.hpp"
#include "pb/partitions.hpp"
#include "pb/permgroups.hpp"
#include "pb/simplicial.hpp"

namespace pb {

/// Witness for a condition-A failure: group element g and a face it fixes
/// setwise but not vertexwise.
struct ConditionAWitness {
    Permutation g;
    std::vector<int32_t> face;
};

/// Condition A: every setwise face stabilizer acts trivially on the face's
/// vertices.  Returns a witness on failure.
std::optional<ConditionAWitness> condition_A_check(const EquivariantComplex& x);

/// Stronger property used by the orbit chain complex: every group element maps
/// every face, stored with ascending vertex ids, to another ascending tuple.
/// Holds for rank-graded actions; implies condition A.
bool action_is_order_preserving(const EquivariantComplex& x);

/// One generator per face orbit with induced boundary.  Valid (computes the
/// homology of |X|/G) when the action is order-preserving; quotient_homology
/// subdivides automatically otherwise.
struct OrbitChainComplex {
    std::vector<size_t> orbit_counts;            // per dimension
    std::vector<SparseIntMatrix> boundaries;     // [k+1]: C_k -> C_{k-1}, [0] = out of aug
    std::vector<std::vector<int32_t>> orbit_of;  // per dim: face index -> orbit id
    std::vector<std::vector<size_t>> orbit_reps;  // per dim: orbit id -> face index
};
OrbitChainComplex orbit_chain_complex(const EquivariantComplex& x, bool augmented = true);

/// Reduced homology of the orbit space |X|/G.  If the action is not
/// order-preserving and auto_subdivide is set, a barycentric subdivision is
/// applied first (one round restores the property for simplicial actions).
HomologySummary quotient_homology(const EquivariantComplex& x, const HomologyOptions& opts = {},
                                  bool auto_subdivide = true);

/// Homology of the quotient pair (X/G, A/G) for a G-invariant subcomplex A,
/// computed on orbit chains.
HomologySummary quotient_relative_homology(const EquivariantComplex& x,
                                           const SimplicialComplex& a,
                                           const HomologyOptions& opts = {});

/// Explicit quotient simplicial complex: vertices are vertex orbits, faces are
/// images of faces.  Correct model of |X|/G when the action is regular (after
/// two barycentric subdivisions always); used as an oracle for the orbit chain
/// complex.
SimplicialComplex explicit_quotient_complex(const EquivariantComplex& x);

/// Sub-poset of partitions fixed by every generator of G.
PartitionPoset fixed_subposet(const PartitionPoset& p, const PermGroup& g);

/// Vertices of X fixed by every group element; the induced subcomplex on them
/// is the fixed-point space for actions satisfying condition A.
std::vector<int32_t> fixed_vertices(const EquivariantComplex& x);
SimplicialComplex fixed_subcomplex(const EquivariantComplex& x);

/// Fixed points of the induced space G_+ ^_H X under K <= G: wedge of the
/// fixed complexes X^{g^-1 K g} over representatives of N_G(K;H)/H, realized
/// as a disjoint union joined to a basepoint vertex (vertex 0) by edges.
/// Empty wedge (K not subconjugate to H) gives the single basepoint.
SimplicialComplex induced_space_fixed_points(const PermGroup& g, const PermGroup& h,
                                             const EquivariantComplex& x, const PermGroup& k);

}  // namespace pb
