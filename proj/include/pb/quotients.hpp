#pragma once

#include <map>
#include <string>
#include <vector>

#include "pb/equivariant.hpp"
#include "pb/homology.hpp"

namespace pb {

/// Quotient of S^{ld-1} * |Pi_d| by the diagonal Sigma_d-action.  The sphere
/// factors of the model are subdivided once before joining so the action is
/// regular on the join.
struct QuotientBlock {
    int d = 0, l = 0;
    size_t total_faces = 0;
    HomologySummary homology;
    std::string evidence;  // "integral" or "mod-p"
};
QuotientBlock quotient_block(int d, int l, const HomologyOptions& opts = {});

/// Mod-p dimensions of the reduced homology of the block for an odd prime:
/// one generator {i} in degree l+i-1 per integer i with i > 1, i = 0 or 1
/// mod 2(p-1), i < (p-1)l.
std::map<int, long> nakaoka_dimensions(long p, long l);

struct YoungQuotientReport {
    std::vector<long> ns;
    HomologySummary direct, predicted;
    bool match = false;
    struct Trace {
        long d, l;
        Int copies;  // witt(ns/d)
        HomologySummary block;
    };
    std::vector<Trace> trace;
};

/// Directly computed homology of Young \ Pi_n versus the predicted wedge sum
/// over d | gcd of witt(ns/d) copies of quotient_block(d, n/d - 1).
YoungQuotientReport young_quotient_homology(const std::vector<long>& ns,
                                            const HomologyOptions& opts = {});

struct WedgeVerdict {
    bool wedge_of_spheres = false;
    std::string reason;
};

/// Classification: wedge of spheres iff gcd = 1, or gcd = p prime with
/// n in {2p, 3p}.
WedgeVerdict classify_wedge_of_spheres(const std::vector<long>& ns);

struct TorsionRationalReport {
    std::vector<long> ns;
    HomologySummary computed;
    bool torsion_primes_ok = false;  // every torsion prime <= gcd(ns)
    bool free_part_ok = false;       // free part in degree n-3 of the right rank
    Int expected_free_rank = 0;
    bool passed = false;
};
TorsionRationalReport torsion_and_rational_checks(const std::vector<long>& ns,
                                                  const HomologyOptions& opts = {});

}  // namespace pb
