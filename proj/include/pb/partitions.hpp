#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pb/ints.hpp"

namespace pb {

class Permutation;

/// A set partition of {1..n} in canonical form.  Internally stored as a
/// restricted growth string: block index of each element, blocks numbered by
/// first occurrence.  Two partitions are equal iff their strings are equal.
class SetPartition {
  public:
    SetPartition() = default;
    SetPartition(int n, std::vector<uint8_t> rgs);

    static SetPartition indiscrete(int n);  // one block, 0-hat
    static SetPartition discrete(int n);    // all singletons, 1-hat
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    // Partition literal "1 3|2 4": blocks separated by '|', elements by spaces.
    static SetPartition parse(const std::string& text, int n = 0);
    std::string to_string() const;

    int n() const { return n_; }
    int rank() const { return rank_; }  // number of blocks
    const std::vector<uint8_t>& rgs() const { return rgs_; }
    uint8_t block_of(int element) const { return rgs_[element - 1]; }
    std::vector<std::vector<int>> blocks() const;

    bool is_indiscrete() const { return rank_ == 1; }
    bool is_discrete() const { return rank_ == n_; }

    SetPartition apply(const Permutation& sigma) const;

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && rgs_ == o.rgs_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    bool operator<(const SetPartition& o) const;  // (rank, rgs) lexicographic

  private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<uint8_t> rgs_;
};

/// true iff b refines a (every block of b is contained in a block of a).
bool refines(const SetPartition& b, const SetPartition& a);

/// Poset order: a <= b iff b is finer than a.  0-hat is the minimum.
bool leq(const SetPartition& a, const SetPartition& b);

/// Least upper bound: coarsest common refinement (blockwise intersections).
SetPartition join_of(const SetPartition& a, const SetPartition& b);

/// Greatest lower bound: finest common coarsening (transitive closure).
SetPartition meet_of(const SetPartition& a, const SetPartition& b);

/// rho_d: d blocks {i, i+d, ..., i+(n/d-1)d}.  Requires d | n.
SetPartition rho(int d, int n);

/// d x lambda: copies lambda onto each block of rho_d via the order-preserving
/// bijection of the block with {1..n/d}.  lambda is a partition of n/d.
SetPartition d_times(int d, const SetPartition& lambda, int n);

enum class PosetMode { full, proper };

/// Part_n (full) or Pi_n (proper: 0-hat and 1-hat removed), elements sorted by
/// (rank, rgs).  Proper mode of n=2 is the empty poset; n=1 has one element in
/// full mode.
class PartitionPoset {
  public:
    PartitionPoset() = default;
    PartitionPoset(int n, PosetMode mode, std::vector<SetPartition> elems);

    int n() const { return n_; }
    PosetMode mode() const { return mode_; }
    size_t size() const { return elems_.size(); }
    const SetPartition& at(size_t i) const { return elems_[i]; }
    const std::vector<SetPartition>& elements() const { return elems_; }

    // index of a partition, or -1
    long index_of(const SetPartition& p) const;
    bool leq_idx(size_t i, size_t j) const { return leq(elems_[i], elems_[j]); }

  private:
    int n_ = 0;
    PosetMode mode_ = PosetMode::proper;
    std::vector<SetPartition> elems_;
};

/// All partitions of {1..n} in canonical order.  Cap guards Bell-number blowup.
PartitionPoset enumerate_partitions(int n, PosetMode mode, int cap = 12);

/// All mu with lo <= mu <= hi (strict on both sides when open).  Requires
/// lo <= hi; enumerated via the product-of-partition-lattices structure of the
/// closed interval.
std::vector<SetPartition> interval(const SetPartition& lo, const SetPartition& hi, bool open);

/// A strictly increasing chain in Part_n.
struct PartitionChain {
    int n = 0;
    std::vector<SetPartition> parts;

    PartitionChain() = default;
    PartitionChain(int n, std::vector<SetPartition> ps);
    size_t size() const { return parts.size(); }
};

/// Every class of lambda_i is a union of at most two classes of lambda_{i+1},
/// and the top element has classes of size at most two.
bool is_binary_chain(const PartitionChain& chain);

}  // namespace pb
