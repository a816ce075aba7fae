#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pb/ints.hpp"

namespace pb {

class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int n);  // identity
    Permutation(int n, std::vector<uint8_t> images_1based);

    static Permutation identity(int n) { return Permutation(n); }
    /// Parse disjoint-cycle notation "(1 2)(3 4)" on {1..n}.
    static Permutation from_cycles(const std::string& text, int n);

    int n() const { return n_; }
    int image(int i) const { return img_[i - 1]; }
    Permutation compose(const Permutation& inner) const;  // (*this) after inner
    Permutation inverse() const;
    bool is_identity() const;
    int sign() const;
    std::string cycle_string() const;

    bool operator==(const Permutation& o) const { return n_ == o.n_ && img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    const std::vector<uint8_t>& images() const { return img_; }

  private:
    int n_ = 0;
    std::vector<uint8_t> img_;  // img_[i-1] = image of i (1-based values)
};

/// Finite subgroup of Sigma_n given by generators.  The full element set is
/// materialized lazily (thread-safe) and capped.
class PermGroup {
  public:
    PermGroup() = default;
    PermGroup(int n, std::vector<Permutation> gens, std::string label = "");

    int n() const { return n_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::string& label() const { return label_; }

    /// Full sorted element list; materializes on first use.
    const std::vector<Permutation>& elements(size_t cap = kDefaultOrderCap) const;
    size_t order(size_t cap = kDefaultOrderCap) const { return elements(cap).size(); }
    bool contains(const Permutation& p) const;
    bool is_subgroup_of(const PermGroup& other) const;
    bool same_group(const PermGroup& other) const;

    static constexpr size_t kDefaultOrderCap = 1000000;

  private:
    int n_ = 0;
    std::vector<Permutation> gens_;
    std::string label_;
    mutable std::shared_ptr<std::vector<Permutation>> elements_;
    mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

PermGroup trivial_group(int n);
PermGroup symmetric_group(int n);

/// Young subgroup for consecutive blocks of the given sizes.
PermGroup young(const std::vector<int>& parts);

/// Sigma_d acting diagonally: sigma(i + jd) = sigma(i) + jd.  Requires d | n.
PermGroup diagonal_sigma_d(int d, int n);

/// Iterated wreath product Sigma_{d1} wr ... wr Sigma_{dl} on blocks of size
/// d1*...*dl, embedded diagonally across the n/(d1...dl) blocks.
PermGroup wreath(const std::vector<int>& ds, int n);

/// (Z/p)^k acting freely on {1..m*p^k} with m orbits, each regular.
PermGroup elementary_abelian(int p, int k, int m);

/// Z/k generated by a k-cycle on {1..k}, embedded diagonally in Sigma_n.
PermGroup cyclic_group(int k, int n);

/// Orbits of G on a set of points (1-based), each orbit sorted, orbits sorted
/// by minimum.
std::vector<std::vector<int>> orbits(const PermGroup& g, const std::vector<int>& points);

/// Centralizer of g inside ambient.  Requires g <= ambient.
PermGroup centralizer(const PermGroup& g, const PermGroup& ambient);

/// Representatives of N_G(K;H)/H where N_G(K;H) = {g : g^-1 K g <= H}.
/// Empty iff K is not subconjugate to H.  Requires K, H <= G.
std::vector<Permutation> subconjugators(const PermGroup& g, const PermGroup& k,
                                        const PermGroup& h);

/// All subgroups K with H <= K <= G, ordered by inclusion (index 0 = H).
std::vector<PermGroup> subgroups_between(const PermGroup& h, const PermGroup& g,
                                         size_t cap = 10000);

/// Every subgroup of G (by closure search; exact for any finite G).
std::vector<PermGroup> all_subgroups(const PermGroup& g, size_t cap = 10000);

/// One representative per G-conjugacy class of subgroups of G.
std::vector<PermGroup> subgroup_conjugacy_reps(const PermGroup& g, size_t cap = 10000);

/// Group spec mini-language shared by CLI and tests:
///   young:2,2 | wreath:2,2@8 | diag:2@8 | elab:2,2,1 | cyclic:4@4 |
///   perm:(1 2)(3 4);(1 3)(2 4)@4 | trivial@4 | sym:4[@n]
PermGroup parse_group_spec(const std::string& spec);

}  // namespace pb
