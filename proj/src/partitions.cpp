#include "pb/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "pb/permgroups.hpp"

namespace pb {

namespace {

std::vector<uint8_t> canonicalize_assignment(int n, const std::vector<int>& assign) {
    // renumber block ids by first occurrence
    std::vector<int> remap(n, -1);
    std::vector<uint8_t> rgs(n);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int b = assign[i];
        if (remap[b] < 0) remap[b] = next++;
        rgs[i] = static_cast<uint8_t>(remap[b]);
    }
    return rgs;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<uint8_t> rgs) : n_(n), rgs_(std::move(rgs)) {
    if (n_ <= 0 || static_cast<int>(rgs_.size()) != n_)
        throw usage_error("SetPartition: bad ground-set size");
    int mx = -1;
    for (int i = 0; i < n_; ++i) {
        if (rgs_[i] > mx + 1) throw usage_error("SetPartition: not a restricted growth string");
        mx = std::max(mx, static_cast<int>(rgs_[i]));
    }
    rank_ = mx + 1;
}

SetPartition SetPartition::indiscrete(int n) {
    return SetPartition(n, std::vector<uint8_t>(n, 0));
}

SetPartition SetPartition::discrete(int n) {
    std::vector<uint8_t> rgs(n);
    for (int i = 0; i < n; ++i) rgs[i] = static_cast<uint8_t>(i);
    return SetPartition(n, std::move(rgs));
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> assign(n, -1);
    int bid = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw usage_error("SetPartition: empty block");
        for (int x : b) {
            if (x < 1 || x > n) throw usage_error("SetPartition: element out of range");
            if (assign[x - 1] >= 0) throw usage_error("SetPartition: blocks not disjoint");
            assign[x - 1] = bid;
        }
        ++bid;
    }
    for (int i = 0; i < n; ++i)
        if (assign[i] < 0) throw usage_error("SetPartition: blocks do not cover {1..n}");
    return SetPartition(n, canonicalize_assignment(n, assign));
}

SetPartition SetPartition::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    std::stringstream ss(text);
    std::string blk;
    int mx = 0;
    while (std::getline(ss, blk, '|')) {
        std::vector<int> b;
        std::stringstream bs(blk);
        int x;
        while (bs >> x) {
            b.push_back(x);
            mx = std::max(mx, x);
        }
        if (!b.empty()) blocks.push_back(b);
    }
    if (blocks.empty()) throw usage_error("SetPartition::parse: no blocks in '" + text + "'");
    return from_blocks(n > 0 ? n : mx, blocks);
}

std::string SetPartition::to_string() const {
    auto bs = blocks();
    std::string out;
    for (size_t i = 0; i < bs.size(); ++i) {
        if (i) out += '|';
        for (size_t j = 0; j < bs[i].size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(bs[i][j]);
        }
    }
    return out;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
    std::vector<std::vector<int>> bs(rank_);
    for (int i = 0; i < n_; ++i) bs[rgs_[i]].push_back(i + 1);
    return bs;  // ascending inside blocks, blocks ordered by minimum
}

SetPartition SetPartition::apply(const Permutation& sigma) const {
    if (sigma.n() != n_) throw usage_error("SetPartition::apply: size mismatch");
    std::vector<int> assign(n_);
    for (int i = 1; i <= n_; ++i) assign[sigma.image(i) - 1] = rgs_[i - 1];
    return SetPartition(n_, canonicalize_assignment(n_, assign));
}

bool SetPartition::operator<(const SetPartition& o) const {
    if (rank_ != o.rank_) return rank_ < o.rank_;
    return rgs_ < o.rgs_;
}

bool refines(const SetPartition& b, const SetPartition& a) {
    if (a.n() != b.n()) throw usage_error("refines: mismatched ground sets");
    // block of b -> block of a must be a well-defined map
    std::vector<int> to(b.rank(), -1);
    for (int i = 0; i < a.n(); ++i) {
        int bb = b.rgs()[i], ba = a.rgs()[i];
        if (to[bb] < 0)
            to[bb] = ba;
        else if (to[bb] != ba)
            return false;
    }
    return true;
}

bool leq(const SetPartition& a, const SetPartition& b) { return refines(b, a); }

SetPartition join_of(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n()) throw usage_error("join_of: mismatched ground sets");
    int n = a.n();
    std::vector<int> assign(n);
    // classes are the nonempty pairwise intersections
    std::vector<int> pair_id(static_cast<size_t>(a.rank()) * b.rank(), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        int key = a.rgs()[i] * b.rank() + b.rgs()[i];
        if (pair_id[key] < 0) pair_id[key] = next++;
        assign[i] = pair_id[key];
    }
    return SetPartition(n, canonicalize_assignment(n, assign));
}

SetPartition meet_of(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n()) throw usage_error("meet_of: mismatched ground sets");
    int n = a.n();
    // union-find over elements, merging within blocks of both partitions
    std::vector<int> up(n);
    for (int i = 0; i < n; ++i) up[i] = i;
    auto find = [&](int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    };
    auto unite = [&](int x, int y) { up[find(x)] = find(y); };
    std::vector<int> last_a(a.rank(), -1), last_b(b.rank(), -1);
    for (int i = 0; i < n; ++i) {
        int ba = a.rgs()[i], bb = b.rgs()[i];
        if (last_a[ba] >= 0) unite(i, last_a[ba]);
        last_a[ba] = i;
        if (last_b[bb] >= 0) unite(i, last_b[bb]);
        last_b[bb] = i;
    }
    std::vector<int> assign(n);
    for (int i = 0; i < n; ++i) assign[i] = find(i);
    return SetPartition(n, canonicalize_assignment(n, assign));
}

SetPartition rho(int d, int n) {
    if (d < 1 || n < 1 || n % d != 0) throw usage_error("rho: d must divide n");
    std::vector<int> assign(n);
    for (int i = 0; i < n; ++i) assign[i] = i % d;
    return SetPartition(n, canonicalize_assignment(n, assign));
}

SetPartition d_times(int d, const SetPartition& lambda, int n) {
    if (d < 1 || n != d * lambda.n())
        throw usage_error("d_times: n must equal d * |ground set of lambda|");
    std::vector<int> assign(n);
    // element i + (j-1)d of class i corresponds to j in {1..n/d}
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= lambda.n(); ++j)
            assign[i + (j - 1) * d - 1] = (i - 1) * lambda.rank() + lambda.rgs()[j - 1];
    return SetPartition(n, canonicalize_assignment(n, assign));
}

PartitionPoset::PartitionPoset(int n, PosetMode mode, std::vector<SetPartition> elems)
    : n_(n), mode_(mode), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
}

long PartitionPoset::index_of(const SetPartition& p) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || !(*it == p)) return -1;
    return it - elems_.begin();
}

PartitionPoset enumerate_partitions(int n, PosetMode mode, int cap) {
    if (n < 1) throw usage_error("enumerate_partitions: n must be positive");
    if (n > cap)
        throw resource_error("enumerate_partitions: n=" + std::to_string(n) +
                             " exceeds cap=" + std::to_string(cap));
    std::vector<SetPartition> out;
    std::vector<uint8_t> rgs(n, 0);
    // iterate restricted growth strings
    auto emit = [&]() {
        SetPartition p(n, rgs);
        if (mode == PosetMode::proper && (p.is_indiscrete() || p.is_discrete())) return;
        out.push_back(std::move(p));
    };
    // odometer over rgs with constraint rgs[i] <= max(rgs[0..i-1]) + 1
    std::vector<uint8_t> mx(n, 0);
    int i = 0;
    rgs.assign(n, 0);
    while (true) {
        emit();
        int j = n - 1;
        while (j > 0) {
            uint8_t limit = static_cast<uint8_t>(mx[j - 1] + 1);
            if (rgs[j] < limit) break;
            --j;
        }
        if (j == 0) break;
        ++rgs[j];
        mx[j] = std::max(mx[j - 1], rgs[j]);
        for (int t = j + 1; t < n; ++t) {
            rgs[t] = 0;
            mx[t] = mx[t - 1];
        }
        (void)i;
    }
    return PartitionPoset(n, mode, std::move(out));
}

namespace {

// All partitions of an m-element index set, as assignment vectors.
void all_set_partitions(int m, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> a(m, 0), mx(m, 0);
    while (true) {
        out.push_back(a);
        int j = m - 1;
        while (j > 0 && a[j] >= mx[j - 1] + 1) --j;
        if (j == 0) break;
        ++a[j];
        mx[j] = std::max(mx[j - 1], a[j]);
        for (int t = j + 1; t < m; ++t) {
            a[t] = 0;
            mx[t] = mx[t - 1];
        }
    }
}

}  // namespace

std::vector<SetPartition> interval(const SetPartition& lo, const SetPartition& hi, bool open) {
    if (!leq(lo, hi)) throw usage_error("interval: endpoints not comparable");
    int n = lo.n();
    // Per block c_i of lo, the hi-blocks inside c_i can be merged by any
    // partition of that index set; combine choices across blocks.
    std::vector<std::vector<int>> hi_blocks_in(lo.rank());
    for (int b = 0; b < hi.rank(); ++b) {
        // locate the lo-block containing hi-block b
        for (int i = 0; i < n; ++i)
            if (hi.rgs()[i] == b) {
                hi_blocks_in[lo.rgs()[i]].push_back(b);
                break;
            }
    }
    std::vector<std::vector<std::vector<int>>> choices(lo.rank());
    for (int c = 0; c < lo.rank(); ++c)
        all_set_partitions(static_cast<int>(hi_blocks_in[c].size()), choices[c]);

    std::vector<SetPartition> out;
    std::vector<size_t> pick(lo.rank(), 0);
    while (true) {
        // assemble: element i belongs to group (lo-block c, merge-class of its hi-block)
        std::vector<int> assign(n);
        for (int i = 0; i < n; ++i) {
            int c = lo.rgs()[i];
            int hb = hi.rgs()[i];
            const auto& local = hi_blocks_in[c];
            int pos = static_cast<int>(std::find(local.begin(), local.end(), hb) - local.begin());
            assign[i] = c * (n + 1) + choices[c][pick[c]][pos];
        }
        std::vector<int> remap_in(assign);
        // compress ids
        std::vector<int> sorted_ids(remap_in);
        std::sort(sorted_ids.begin(), sorted_ids.end());
        sorted_ids.erase(std::unique(sorted_ids.begin(), sorted_ids.end()), sorted_ids.end());
        for (int& x : remap_in)
            x = static_cast<int>(std::lower_bound(sorted_ids.begin(), sorted_ids.end(), x) -
                                 sorted_ids.begin());
        SetPartition mu(n, canonicalize_assignment(n, remap_in));
        if (!open || (mu != lo && mu != hi)) out.push_back(std::move(mu));
        // advance odometer
        int c = lo.rank() - 1;
        while (c >= 0 && pick[c] + 1 >= choices[c].size()) --c;
        if (c < 0) break;
        ++pick[c];
        for (int t = c + 1; t < lo.rank(); ++t) pick[t] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartitionChain::PartitionChain(int n_, std::vector<SetPartition> ps) : n(n_), parts(std::move(ps)) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (!(leq(parts[i], parts[i + 1])) || parts[i] == parts[i + 1])
            throw usage_error("PartitionChain: not strictly increasing");
    for (const auto& p : parts)
        if (p.n() != n) throw usage_error("PartitionChain: mixed ground sets");
}

bool is_binary_chain(const PartitionChain& chain) {
    if (chain.parts.empty()) return true;
    for (size_t i = 0; i + 1 < chain.parts.size(); ++i) {
        const auto& a = chain.parts[i];
        const auto& b = chain.parts[i + 1];
        std::vector<int> count(a.rank(), 0);
        std::vector<int> seen(b.rank(), 0);
        for (int x = 0; x < a.n(); ++x) {
            int bb = b.rgs()[x];
            if (!seen[bb]) {
                seen[bb] = 1;
                if (++count[a.rgs()[x]] > 2) return false;
            }
        }
    }
    const auto& top = chain.parts.back();
    std::vector<int> sz(top.rank(), 0);
    for (int x = 0; x < top.n(); ++x)
        if (++sz[top.rgs()[x]] > 2) return false;
    return true;
}

}  // namespace pb
