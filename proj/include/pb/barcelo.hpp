#pragma once

#include <string>
#include <vector>

#include "pb/freelie.hpp"
#include "pb/homology.hpp"
#include "pb/partitions.hpp"
#include "pb/simplicial.hpp"

namespace pb {

/// Planar binary tree with leaves labeled bijectively by {1..n}.  Nodes are
/// positional (two equal subtrees stay distinct nodes).
struct LabeledBinaryTree {
    struct Node {
        int left = -1, right = -1;
        int label = 0;  // leaf label when a leaf
    };
    std::vector<Node> nodes;
    int root = -1;
    int n_leaves = 0;

    bool is_leaf(int v) const { return nodes[v].left < 0; }
    std::vector<int> internal_nodes() const;
    /// sorted leaf labels under node v
    std::vector<int> leaves_below(int v) const;
};

/// Bijection monomial -> tree; left subtree from the left bracket argument.
LabeledBinaryTree tree_of_monomial(const LieArena& arena, LieArena::Mono w);

/// The preorder linearization: root, then right subtree, then left subtree.
std::vector<int> preorder_linearization(const LabeledBinaryTree& t);

/// Ancestors must precede descendants.
bool is_valid_linearization(const LabeledBinaryTree& t, const std::vector<int>& lin);

/// All linearizations (topological orders of the ancestor relation).
std::vector<std::vector<int>> all_linearizations(const LabeledBinaryTree& t);

/// The maximal chain of Pi_n defined by removing internal nodes in order:
/// lambda_j = partition by connected components after removing the first j.
PartitionChain chain_of_linearization(const LabeledBinaryTree& t, const std::vector<int>& lin);

/// The tree T_Lambda of a maximal chain: augment with 0-hat and 1-hat; for
/// each step connect the minima of the two parts of the class that splits.
std::vector<std::pair<int, int>> tree_from_maximal_chain(const PartitionChain& chain);

/// Fundamental (n-3)-cycle of Pi_n attached to a spanning tree on {1..n}:
/// image of the fundamental cycle of the barycentric S^{n-3} of proper
/// nonempty edge subsets.  Faces are tuples of poset indices (rank-ascending);
/// coefficients +-1.  The boundary is verified to vanish.
using SparseChain = std::vector<std::pair<std::vector<int32_t>, Int>>;
SparseChain tree_cycle(const PartitionPoset& pi_n, const std::vector<std::pair<int, int>>& edges);

/// Pairing of a top cochain (indicator of one top face) with a chain.
Int pair_cochain_cycle(const std::vector<int32_t>& face, const SparseChain& cycle);

/// Certifies that the (n-1)! classes [Lambda_w], w multilinear Hall basic,
/// are linearly independent in H^{n-3}(Pi_n): their matrix in a basis of the
/// free part of H^{n-3} has Smith form all ones.
struct BarceloReport {
    int n = 0;
    long classes = 0;
    long h_top_rank = 0;
    bool independent = false;
    bool unimodular = false;
    std::vector<Int> snf;
};
BarceloReport barcelo_rank_check(int n, size_t face_cap = 20000000);

}  // namespace pb
