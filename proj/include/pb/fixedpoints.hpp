#pragma once

#include <string>
#include <vector>

#include "pb/equivariant.hpp"
#include "pb/homology.hpp"
#include "pb/partitions.hpp"
#include "pb/permgroups.hpp"

namespace pb {

/// Orbit structure of a subgroup of Sigma_n acting on {1..n}.  The action is
/// isotypical when all orbits are isomorphic G-sets (point stabilizers
/// pairwise conjugate); in that case `d` is the common orbit size and
/// `transitive_model` is the faithful transitive image on {1..d} obtained by
/// relabeling the first orbit.
struct ActionProfile {
    PermGroup group;
    int n = 0;
    std::vector<std::vector<int>> orbit_list;
    bool isotypical = false;
    int d = 0;
    PermGroup transitive_model;
};

ActionProfile classify_action(const PermGroup& g, int n);

/// Reduced homology of Pi_m, with the formal conventions Pi_1 = S^-2 and
/// Pi_2 = S^-1.
HomologySummary pi_homology(int m);

/// Fixed-point prediction: reduced-acyclic for non-isotypical actions; for an
/// isotypical action with transitive model G <= Sigma_d the prediction is
/// |C_{Sigma_d}(G)|^{n/d - 1} copies of Sigma(|Pi_d|^G * |Pi_{n/d}|), with
/// |Pi_d|^G computed directly from the model.
HomologySummary predicted_fixed_homology(const ActionProfile& profile);

/// The poset of intermediate subgroups H < K < G, ordered by reverse
/// inclusion, together with the explicit order-reversing bijection onto the
/// G-invariant proper partitions of {1..d} (g1 H ~ g2 H iff g2^-1 g1 in K).
struct TransitiveFixedPoset {
    std::vector<PermGroup> subgroups;  // strictly intermediate
    std::vector<SetPartition> partitions;  // image of each subgroup
    Poset poset;                           // reverse inclusion, index-sorted
};
TransitiveFixedPoset transitive_fixed_poset(const PermGroup& g_transitive);

struct FixedPredictionRow {
    std::string spec;
    bool isotypical = false;
    HomologySummary direct, predicted;
    bool match = false;
};

struct FixedPredictionReport {
    std::vector<FixedPredictionRow> rows;
    bool all_match = true;
};

/// For each group spec: compare the directly computed homology of the fixed
/// subcomplex of Pi_n with the closed-form prediction.
FixedPredictionReport verify_fixed_predictions(const std::vector<std::string>& specs);

/// Representatives of the transitive subgroups of Sigma_d up to conjugacy.
/// Exhaustive subgroup search for d <= 6; for prime d every transitive group
/// contains a d-cycle, so the overgroups of one d-cycle suffice.
std::vector<PermGroup> transitive_subgroup_reps(int d);

}  // namespace pb
