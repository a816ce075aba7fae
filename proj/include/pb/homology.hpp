#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pb/ints.hpp"
#include "pb/simplicial.hpp"

namespace pb {

/// Reduced (co)homology summary: per degree, free rank and torsion
/// coefficients (prime powers, sorted).  Degrees may be negative.
struct HomologySummary {
    struct Degree {
        long betti = 0;
        std::vector<Int> torsion;  // prime powers, ascending
        bool operator==(const Degree& o) const { return betti == o.betti && torsion == o.torsion; }
    };
    std::map<int, Degree> by_degree;  // only nonzero degrees retained

    bool operator==(const HomologySummary& o) const { return by_degree == o.by_degree; }
    bool is_zero() const { return by_degree.empty(); }
    void add(int degree, long betti, std::vector<Int> torsion = {});
    /// direct sum
    HomologySummary& merge(const HomologySummary& o);
    /// shift all degrees
    HomologySummary shifted(int delta) const;
    std::string to_string() const;

    /// homology of a join A*B from the factors' reduced homologies
    /// (degree = a + b + 1, Kunneth with Tor for torsion).
    static HomologySummary join(const HomologySummary& a, const HomologySummary& b);
    static HomologySummary sphere(int dim);  // Z in the given degree
    HomologySummary scaled(long copies) const;
};

/// Sparse integer matrix, column-major.
struct SparseIntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int32_t, Int>>> col;  // sorted by row

    void set(size_t r, size_t c, Int v);
    size_t nnz() const;
    SparseIntMatrix transposed() const;
    static SparseIntMatrix from_dense(const std::vector<std::vector<Int>>& d);
};

struct SnfOptions {
    size_t dense_core_cap = 3000;  // bail out if the non-unit core gets bigger
};

/// Invariant factors d_1 | d_2 | ... of an integer matrix (positive; count =
/// rank).  Hybrid elimination: greedy unit pivots, dense Smith on the rest.
std::vector<Int> smith_invariant_factors(SparseIntMatrix m, const SnfOptions& opts = {});

/// Rank over Q (equals number of invariant factors).
long integer_rank(SparseIntMatrix m, const SnfOptions& opts = {});

/// Rank over Z/p.
long fp_rank(const SparseIntMatrix& m, uint32_t p);

/// Z^rows modulo the column lattice of a matrix: canonical coordinates on the
/// free part of the cokernel, used to express top cocycles in a cohomology
/// basis.  Row operations are journaled so vectors can be mapped after the
/// fact; column operations are free.
class CokernelBasis {
  public:
    explicit CokernelBasis(SparseIntMatrix m, const SnfOptions& opts = {});

    long free_rank() const { return static_cast<long>(free_rows_.size()); }
    const std::vector<Int>& torsion() const { return torsion_; }  // invariant factors > 1

    /// coordinates of [v] in the free part (torsion components are checked to
    /// be well-defined and reported separately if nonzero mod d).
    std::vector<Int> express(const std::vector<Int>& v) const;

  private:
    struct RowOp {
        int32_t dst, src;
        Int coeff;
    };  // row_dst += coeff * row_src
    size_t rows_;
    std::vector<RowOp> journal_;
    std::vector<int32_t> swaps_dst_, swaps_src_;
    std::vector<std::pair<int32_t, Int>> pivots_;  // (row, invariant factor)
    std::vector<int32_t> free_rows_;
    std::vector<Int> torsion_;
    std::vector<std::vector<Int>> core_u_;  // dense row transform on core rows
    std::vector<int32_t> core_rows_;
    long core_rank_ = 0;
};

enum class CoeffMode { integer, mod_p };

struct HomologyOptions {
    CoeffMode mode = CoeffMode::integer;
    uint32_t p = 0;            // prime, for mod_p
    size_t face_cap = 1000000;  // integer mode cap (mod_p: 10x)
    SnfOptions snf;
};

/// Exact reduced homology of a complex (augmented chain complex; the empty
/// complex has H_{-1} = Z).  Degrees respect the complex's shift.
HomologySummary reduced_homology(const SimplicialComplex& x, const HomologyOptions& opts = {});

/// Homology of the quotient chain complex C(X)/C(A) for a subcomplex A (both
/// augmented, so an empty-complex A kills the augmentation and the result is
/// the unreduced homology of X; for good pairs this is the reduced homology
/// of X/A).
HomologySummary relative_homology(const SimplicialComplex& x, const SimplicialComplex& a,
                                  const HomologyOptions& opts = {});

/// Boundary matrix C_k -> C_{k-1} of a face set (k = 0 maps to the
/// augmentation when `augmented`).
SparseIntMatrix boundary_matrix(const FaceSet& fs, int k, bool augmented = true);

/// Relative boundary matrix: faces of X not in A.  `keep[k]` lists retained
/// face indices of dimension k (sorted).
SparseIntMatrix relative_boundary_matrix(const FaceSet& fs, int k,
                                         const std::vector<std::vector<int32_t>>& keep);

/// Labeled selection of top faces of a pure-top-dimension subquotient:
/// one column per selected cocycle, given as (face index into X's top
/// dimension, coefficient) lists.
struct TopCocycle {
    std::string label;
    std::vector<std::pair<size_t, int>> support;  // (top-face index, +-1)
};

/// Matrix of the map (+)_labels H^D(summand) -> H^D(X): columns are the given
/// relative cocycles expressed in a canonical basis of the free part of
/// H^D(X) = coker(boundary^T).  Torsion in H^D(X) is reported via the basis.
struct TopCohomologyMap {
    std::vector<std::vector<Int>> matrix;  // rows = H^D basis, cols = cocycles
    long h_top_free_rank = 0;
    std::vector<Int> h_top_torsion;
};
TopCohomologyMap induced_on_top_cohomology(const SimplicialComplex& x,
                                           const std::vector<TopCocycle>& selected,
                                           const SnfOptions& opts = {});

/// Exact Euler characteristic (reduced) from the f-vector.
long reduced_euler_characteristic(const SimplicialComplex& x);

/// SNF of a small dense matrix given row-major; returns invariant factors.
std::vector<Int> dense_smith(std::vector<std::vector<Int>> m,
                             std::vector<std::vector<Int>>* row_transform = nullptr);

bool all_ones(const std::vector<Int>& invariant_factors);

}  // namespace pb
