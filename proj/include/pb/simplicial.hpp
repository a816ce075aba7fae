#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "pb/ints.hpp"
#include "pb/partitions.hpp"
#include "pb/permgroups.hpp"

namespace pb {

/// A finite poset given by its full strict comparability relation.
/// up[i] = sorted indices j with i < j.
struct Poset {
    size_t size = 0;
    std::vector<std::vector<int32_t>> up;

    std::vector<std::vector<int32_t>> down() const;
};

Poset poset_of_partitions(const PartitionPoset& p);

/// Per-dimension face storage: faces[k] is a flat array of (k+1)-tuples of
/// vertex ids, lexicographically sorted, each tuple ascending.
class FaceSet {
  public:
    void set_dim(int k, std::vector<int32_t> flat);
    int top_dim() const { return static_cast<int>(levels_.size()) - 1; }
    size_t count(int k) const;
    size_t total() const;
    const int32_t* face(int k, size_t i) const { return levels_[k].data() + i * (k + 1); }
    const std::vector<int32_t>& flat(int k) const { return levels_[k]; }
    /// index of a face within dimension k, or -1
    long find(int k, const int32_t* verts) const;

  private:
    std::vector<std::vector<int32_t>> levels_;
};

/// Finite abstract simplicial complex.  Stores facets; the full face list is
/// expanded once on demand and cached.  `shift` is the formal suspension
/// offset used for the S^-1 / S^-2 conventions: reported homology degrees are
/// raw degrees plus shift.  The empty complex with shift 0 models S^-1; with
/// shift -1 it models S^-2 (only suspensions of it are ever realized).
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(int n_vertices, std::vector<std::vector<int32_t>> facets,
                                         int shift = 0);
    static SimplicialComplex empty_complex(int shift = 0);
    /// S^-2 stand-in: empty with shift -1 (one desuspension below S^-1).
    static SimplicialComplex virtual_s_minus_2();
    static SimplicialComplex simplex(int m);              // Delta^m
    static SimplicialComplex boundary_of_simplex(int m);  // dDelta^m = S^{m-1}
    static SimplicialComplex point();

    int n_vertices() const { return n_vertices_; }
    int shift() const { return shift_; }
    bool is_empty() const { return facets_.empty(); }
    int dim() const;  // raw dimension; -1 for empty

    const std::vector<std::vector<int32_t>>& facets() const { return facets_; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    /// vertex grades: optional strictly-monotone-along-faces grading used for
    /// equivariant sign bookkeeping.  Empty when ungraded.
    const std::vector<int32_t>& grades() const { return grades_; }
    void set_grades(std::vector<int32_t> grades);

    const FaceSet& faces() const;  // expand and cache
    std::vector<size_t> f_vector() const;
    bool has_face(const std::vector<int32_t>& face) const;
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    /// Direct face-set construction for builders that already know all faces.
    static SimplicialComplex from_all_faces(int n_vertices, FaceSet faces, int shift = 0);

    /// Induced subcomplex on a vertex subset (faces fully inside the subset),
    /// with vertices renumbered; second return maps new id -> old id.
    std::pair<SimplicialComplex, std::vector<int32_t>> induced(
        const std::vector<int32_t>& vertex_subset) const;

    void serialize(std::ostream& os) const;
    static SimplicialComplex deserialize(std::istream& is);

  private:
    int n_vertices_ = 0;
    int shift_ = 0;
    std::vector<std::vector<int32_t>> facets_;
    std::vector<std::string> labels_;
    std::vector<int32_t> grades_;
    mutable std::shared_ptr<FaceSet> cache_;
};

/// Simplicial join; vertex ids of B are offset by A's vertex count.  Joining
/// with an empty complex returns the other factor with shifts added.
SimplicialComplex join_complex(const SimplicialComplex& a, const SimplicialComplex& b);

/// Order complex: vertices = poset elements, faces = strictly increasing
/// chains, enumerated by DFS.  Face-count cap guards blowup.
SimplicialComplex order_complex(const Poset& p, size_t face_cap = 20000000);
SimplicialComplex order_complex(const PartitionPoset& p, size_t face_cap = 20000000);

/// Star and link of a chain in a poset: element indices comparable with every
/// chain member (link drops the chain itself).
struct StarLink {
    std::vector<int32_t> star;
    std::vector<int32_t> link;
};
StarLink star_and_link(const Poset& p, const std::vector<int32_t>& chain);

/// Star of a binary chain in Pi_n together with its boundary subcomplex
/// (chains of the star not containing the chain as a subchain).  Vertex ids
/// are indices into the ambient proper partition poset, compressed; the
/// mapping new id -> poset index is returned too.
struct StarBoundary {
    SimplicialComplex star;
    SimplicialComplex boundary;
    std::vector<int32_t> vertex_to_poset;  // star vertex id -> Pi_n poset index
};
StarBoundary star_boundary(const PartitionPoset& pi_n, const PartitionChain& chain);

/// Barycentric subdivision: vertices = nonempty faces of X graded by
/// dimension, faces = flags.
SimplicialComplex barycentric(const SimplicialComplex& x, size_t face_cap = 20000000);

/// S^0 * X.  Suspension of the empty complex is S^0.
SimplicialComplex unreduced_suspension(const SimplicialComplex& x);

/// A group acting on a complex through vertex permutations (one map per
/// generator, extended to all elements on demand).
struct EquivariantComplex {
    SimplicialComplex complex;
    PermGroup group;
    std::vector<std::vector<int32_t>> generator_vertex_maps;  // aligned with group.generators()

    /// vertex maps for every group element, aligned with group.elements()
    std::vector<std::vector<int32_t>> element_vertex_maps() const;
    void validate() const;  // every generator maps faces to faces
};

/// Simplicial model of S^{ld-1} with Sigma_d-action: join of dDelta^l (trivial
/// action) with l copies of dDelta^{d-1} (vertex permutation action).
/// `subdivide_sphere_factors` replaces each dDelta^{d-1} copy with its
/// barycentric subdivision, which makes every face stabilizer act trivially.
EquivariantComplex sphere_model(int d, int l, bool subdivide_sphere_factors = false);

/// Barycentric subdivision with the action transported functorially.
EquivariantComplex barycentric(const EquivariantComplex& x);

/// Join of two equivariant complexes over the same group (diagonal action).
EquivariantComplex join_equivariant(const EquivariantComplex& a, const EquivariantComplex& b);

/// Order complex of Pi_n with the action of a subgroup of Sigma_n.
EquivariantComplex pi_n_action(const PartitionPoset& pi_n, const PermGroup& g,
                               size_t face_cap = 20000000);

}  // namespace pb
