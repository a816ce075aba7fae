#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pb/homology.hpp"
#include "pb/ints.hpp"
#include "pb/permgroups.hpp"

namespace pb {

/// Hash-consed bracket monomials.  A monomial is a leaf (generator index,
/// 1-based) or a bracket of two monomials; ids are stable within one arena.
class LieArena {
  public:
    using Mono = int32_t;

    Mono leaf(int generator);
    Mono bracket(Mono left, Mono right);
    bool is_leaf(Mono m) const { return nodes_[m].left < 0; }
    int generator(Mono m) const { return nodes_[m].gen; }
    Mono left(Mono m) const { return nodes_[m].left; }
    Mono right(Mono m) const { return nodes_[m].right; }
    int weight(Mono m) const { return nodes_[m].weight; }

    /// multidegree over generators 1..k
    std::vector<int> multidegree(Mono m, int k) const;
    /// leaf labels in left-to-right order
    std::vector<int> leaf_sequence(Mono m) const;
    bool is_multilinear(Mono m, int n) const;

    std::string to_string(Mono m) const;           // "[[x2,x1],x2]"
    Mono parse(const std::string& text);           // inverse of to_string
    Mono relabel(Mono m, const std::vector<int>& image_1based);

  private:
    struct Node {
        Mono left = -1, right = -1;
        int gen = 0;
        int weight = 1;
    };
    std::vector<Node> nodes_;
    std::map<std::pair<Mono, Mono>, Mono> bracket_ids_;
    std::map<int, Mono> leaf_ids_;
};

/// Integer combination of monomials, sorted by monomial id.
using LieElement = std::vector<std::pair<LieArena::Mono, Int>>;

LieElement lie_add(const LieElement& a, const LieElement& b);
LieElement lie_scale(const LieElement& a, const Int& c);

/// Witt formula: rank of the multidegree component M(n_1,...,n_k).
Int witt(const std::vector<long>& ns);

enum class HallOrderPolicy { lex_serialization, reverse_lex };

/// Hall basic monomials up to a weight, in a fixed admissible order (weights
/// ascend; ties broken by the chosen policy on the serialized tree).
class HallBasis {
  public:
    /// `squarefree_only` restricts generation to monomials using each
    /// generator at most once (enough for multilinear work; keeps the basis
    /// small for large generator counts).  The relative Hall order is the one
    /// induced from the full basis.
    HallBasis(LieArena& arena, int k, int max_weight,
              HallOrderPolicy policy = HallOrderPolicy::lex_serialization,
              bool squarefree_only = false, size_t cap = 2000000);

    const std::vector<LieArena::Mono>& monomials() const { return monos_; }
    long index_of(LieArena::Mono m) const;  // -1 if not basic
    bool is_basic(LieArena::Mono m) const { return index_of(m) >= 0; }
    std::vector<LieArena::Mono> filter_multidegree(const std::vector<int>& ns) const;
    std::vector<LieArena::Mono> multilinear(int n) const;  // multidegree (1,...,1)
    int generators() const { return k_; }

  private:
    LieArena* arena_;
    int k_;
    std::vector<LieArena::Mono> monos_;
    std::unordered_map<LieArena::Mono, long> index_;
};

/// Rewrites arbitrary bracket monomials into the Hall basis using [u,u] = 0,
/// anticommutativity and Jacobi.  Memoized per instance.
class NormalFormer {
  public:
    NormalFormer(LieArena& arena, const HallBasis& basis) : arena_(&arena), basis_(&basis) {}
    LieElement normal_form(LieArena::Mono m);
    LieElement normal_form(const LieElement& e);

  private:
    LieElement nf_pair(LieArena::Mono a, LieArena::Mono b);  // both basic
    LieArena* arena_;
    const HallBasis* basis_;
    std::unordered_map<int64_t, LieElement> pair_cache_;
    std::unordered_map<LieArena::Mono, LieElement> mono_cache_;
};

/// Resolution: replace the occurrences of x_i (left to right) by consecutive
/// fresh variables, giving a multilinear monomial in sum(multidegree) vars.
LieArena::Mono resolution(LieArena& arena, LieArena::Mono w, int k);

/// Operadic substitution s_phi: substitute the multilinear monomials `inners`
/// for the variables of `outer`, reindexing variables of inner j by phi[j]
/// (phi[j][a-1] = global index of inner j's variable a).  Default phi is the
/// block order.
LieArena::Mono operad_substitute(LieArena& arena, LieArena::Mono outer,
                                 const std::vector<LieArena::Mono>& inners,
                                 const std::vector<std::vector<int>>& phi = {});

/// phi_w: Lie_d -> Lie_n for w with resolution wtilde in n/d variables;
/// substitutes copies of wtilde with the interleaved variable pattern
/// (copy t uses x_t, x_{t+d}, x_{t+2d}, ...).
LieArena::Mono phi_w(LieArena& arena, LieArena::Mono wtilde, int d, LieArena::Mono v);

/// The branching matrix for a composition: columns indexed by (d | gcd,
/// w in B(ns/d), coset rep of Young/Sigma_d, Hall basis element of Lie_d),
/// rows by the multilinear Hall basis of Lie_n; entries = normal form of the
/// translated substitution.  Square by the Witt identity.
struct BranchingReport {
    std::vector<long> ns;
    long dimension = 0;
    SparseIntMatrix matrix;
    std::vector<Int> snf;      // invariant factors (integer evidence)
    bool unimodular = false;
    std::string evidence;      // "integral-snf" or "modular"
    std::vector<std::pair<uint32_t, long>> modular_ranks;
    struct Block {
        long d;
        std::string w;
        long cosets;
        long lie_d_rank;
    };
    std::vector<Block> blocks;
};
BranchingReport branching_matrix(const std::vector<long>& ns,
                                 HallOrderPolicy policy = HallOrderPolicy::lex_serialization,
                                 bool integral_snf = true, size_t cap = 6000);

}  // namespace pb
