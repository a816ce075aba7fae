#include "pb/barcelo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace pb {

std::vector<int> LabeledBinaryTree::internal_nodes() const {
    std::vector<int> out;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].left >= 0) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> LabeledBinaryTree::leaves_below(int v) const {
    std::vector<int> out;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        if (is_leaf(cur))
            out.push_back(nodes[cur].label);
        else {
            stack.push_back(nodes[cur].left);
            stack.push_back(nodes[cur].right);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabeledBinaryTree tree_of_monomial(const LieArena& arena, LieArena::Mono w) {
    int n = static_cast<int>(arena.leaf_sequence(w).size());
    if (!arena.is_multilinear(w, n))
        throw usage_error("tree_of_monomial: monomial must be multilinear");
    LabeledBinaryTree t;
    t.n_leaves = n;
    std::function<int(LieArena::Mono)> rec = [&](LieArena::Mono m) -> int {
        LabeledBinaryTree::Node node;
        if (arena.is_leaf(m)) {
            node.label = arena.generator(m);
            t.nodes.push_back(node);
            return static_cast<int>(t.nodes.size()) - 1;
        }
        int l = rec(arena.left(m));
        int r = rec(arena.right(m));
        node.left = l;
        node.right = r;
        t.nodes.push_back(node);
        return static_cast<int>(t.nodes.size()) - 1;
    };
    t.root = rec(w);
    return t;
}

std::vector<int> preorder_linearization(const LabeledBinaryTree& t) {
    std::vector<int> out;
    std::function<void(int)> rec = [&](int v) {
        if (t.is_leaf(v)) return;
        out.push_back(v);
        rec(t.nodes[v].right);
        rec(t.nodes[v].left);
    };
    if (t.root >= 0) rec(t.root);
    return out;
}

bool is_valid_linearization(const LabeledBinaryTree& t, const std::vector<int>& lin) {
    auto internal = t.internal_nodes();
    if (lin.size() != internal.size()) return false;
    std::vector<int> pos(t.nodes.size(), -1);
    for (size_t i = 0; i < lin.size(); ++i) {
        if (lin[i] < 0 || lin[i] >= static_cast<int>(t.nodes.size()) || t.is_leaf(lin[i]))
            return false;
        if (pos[lin[i]] >= 0) return false;
        pos[lin[i]] = static_cast<int>(i);
    }
    // every internal node's internal children must come later
    for (int v : internal)
        for (int c : {t.nodes[v].left, t.nodes[v].right})
            if (!t.is_leaf(c) && pos[c] < pos[v]) return false;
    return true;
}

std::vector<std::vector<int>> all_linearizations(const LabeledBinaryTree& t) {
    auto internal = t.internal_nodes();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<char> used(t.nodes.size(), 0);
    std::vector<int> parent(t.nodes.size(), -1);
    for (int v : internal) {
        parent[t.nodes[v].left] = v;
        parent[t.nodes[v].right] = v;
    }
    std::function<void()> rec = [&]() {
        if (cur.size() == internal.size()) {
            out.push_back(cur);
            return;
        }
        for (int v : internal) {
            if (used[v]) continue;
            if (parent[v] >= 0 && !used[parent[v]]) continue;
            used[v] = 1;
            cur.push_back(v);
            rec();
            cur.pop_back();
            used[v] = 0;
        }
    };
    rec();
    return out;
}

PartitionChain chain_of_linearization(const LabeledBinaryTree& t, const std::vector<int>& lin) {
    if (!is_valid_linearization(t, lin))
        throw usage_error("chain_of_linearization: invalid linearization");
    int n = t.n_leaves;
    std::vector<SetPartition> parts;
    std::vector<char> removed(t.nodes.size(), 0);
    for (size_t j = 0; j + 1 < lin.size(); ++j) {  // j+1 removed nodes; stop before 1-hat
        removed[lin[j]] = 1;
        std::vector<std::vector<int>> comps;
        std::function<void(int)> collect = [&](int v) {
            if (!t.is_leaf(v) && removed[v]) {
                collect(t.nodes[v].left);
                collect(t.nodes[v].right);
            } else {
                comps.push_back(t.leaves_below(v));
            }
        };
        collect(t.root);
        parts.push_back(SetPartition::from_blocks(n, comps));
    }
    if (lin.empty() && n == 1) return PartitionChain(n, {});
    return PartitionChain(n, std::move(parts));
}

std::vector<std::pair<int, int>> tree_from_maximal_chain(const PartitionChain& chain) {
    int n = chain.n;
    std::vector<SetPartition> full;
    full.push_back(SetPartition::indiscrete(n));
    for (const auto& p : chain.parts) full.push_back(p);
    full.push_back(SetPartition::discrete(n));
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i + 1 < full.size(); ++i) {
        const auto& a = full[i];
        const auto& b = full[i + 1];
        if (b.rank() != a.rank() + 1)
            throw usage_error("tree_from_maximal_chain: chain is not maximal");
        // find the class of a split in two by b
        std::vector<int> first_b_block(a.rank(), -1);
        int split_class = -1, other_b = -1;
        for (int x = 0; x < n; ++x) {
            int ab = a.rgs()[x], bb = b.rgs()[x];
            if (first_b_block[ab] < 0)
                first_b_block[ab] = bb;
            else if (first_b_block[ab] != bb) {
                split_class = ab;
                other_b = bb;
            }
        }
        if (split_class < 0) throw usage_error("tree_from_maximal_chain: no split found");
        int min_u = 0, min_v = 0;
        for (int x = 1; x <= n; ++x) {
            if (a.rgs()[x - 1] != split_class) continue;
            if (b.rgs()[x - 1] == first_b_block[split_class] && min_u == 0) min_u = x;
            if (b.rgs()[x - 1] == other_b && min_v == 0) min_v = x;
        }
        edges.push_back({min_u, min_v});
    }
    return edges;
}

SparseChain tree_cycle(const PartitionPoset& pi_n,
                       const std::vector<std::pair<int, int>>& edges) {
    int n = pi_n.n();
    int m = static_cast<int>(edges.size());
    if (m != n - 1) throw usage_error("tree_cycle: a spanning tree needs n-1 edges");
    {
        // connectivity check
        std::vector<int> up(n);
        std::iota(up.begin(), up.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (up[x] != x) x = up[x] = up[up[x]];
            return x;
        };
        for (auto [a, b] : edges) {
            if (a < 1 || b < 1 || a > n || b > n || a == b)
                throw usage_error("tree_cycle: bad edge");
            up[find(a - 1)] = find(b - 1);
        }
        int r = find(0);
        for (int x = 1; x < n; ++x)
            if (find(x) != r) throw usage_error("tree_cycle: edges do not form a tree");
    }
    // enumerate permutations of the edge set; prefix subsets give the flag
    std::map<std::vector<int32_t>, Int> acc;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int32_t> face(n - 2);
    do {
        // union-find along the prefix; lambda(S_i) for i = 1..n-2
        std::vector<int> assign(n);
        std::iota(assign.begin(), assign.end(), 0);
        // sign of perm
        int sgn = 1;
        {
            std::vector<char> seen(m, 0);
            for (int i = 0; i < m; ++i) {
                if (seen[i]) continue;
                int len = 0, j = i;
                while (!seen[j]) {
                    seen[j] = 1;
                    j = perm[j];
                    ++len;
                }
                if (len % 2 == 0) sgn = -sgn;
            }
        }
        bool ok = true;
        for (int i = 1; i <= n - 2; ++i) {
            auto [a, b] = edges[perm[i - 1]];
            int ba = assign[a - 1], bb = assign[b - 1];
            for (int x = 0; x < n; ++x)
                if (assign[x] == bb) assign[x] = ba;
            // partition after i merges has n - i blocks; rank n - i
            std::vector<int> canon(assign);
            SetPartition p(n, [&] {
                std::vector<int> remap(n, -1);
                std::vector<uint8_t> rgs(n);
                int next = 0;
                for (int x = 0; x < n; ++x) {
                    if (remap[canon[x]] < 0) remap[canon[x]] = next++;
                    rgs[x] = static_cast<uint8_t>(remap[canon[x]]);
                }
                return rgs;
            }());
            long idx = pi_n.index_of(p);
            if (idx < 0) {
                ok = false;
                break;
            }
            // rank-ascending storage: lambda(S_{n-2}) first
            face[n - 2 - i] = static_cast<int32_t>(idx);
        }
        if (ok) acc[face] += sgn;
    } while (std::next_permutation(perm.begin(), perm.end()));
    SparseChain out;
    for (auto& [f, c] : acc)
        if (c != 0) out.push_back({f, c});
    // verify the boundary vanishes
    std::map<std::vector<int32_t>, Int> bd;
    for (const auto& [f, c] : out) {
        for (size_t skip = 0; skip < f.size(); ++skip) {
            std::vector<int32_t> sub;
            for (size_t t = 0; t < f.size(); ++t)
                if (t != skip) sub.push_back(f[t]);
            bd[sub] += (skip % 2 == 0) ? c : -c;
        }
    }
    for (const auto& [f, c] : bd)
        if (c != 0) throw usage_error("tree_cycle: boundary does not vanish");
    return out;
}

Int pair_cochain_cycle(const std::vector<int32_t>& face, const SparseChain& cycle) {
    auto it = std::lower_bound(cycle.begin(), cycle.end(), face,
                               [](const auto& e, const std::vector<int32_t>& f) {
                                   return e.first < f;
                               });
    if (it != cycle.end() && it->first == face) return it->second;
    return 0;
}

BarceloReport barcelo_rank_check(int n, size_t face_cap) {
    BarceloReport rpt;
    rpt.n = n;
    auto pi = enumerate_partitions(n, PosetMode::proper);
    auto cx = order_complex(pi, face_cap);
    LieArena arena;
    HallBasis basis(arena, n, n, HallOrderPolicy::lex_serialization, true);
    auto ml = basis.multilinear(n);
    rpt.classes = static_cast<long>(ml.size());
    const FaceSet& fs = cx.faces();
    int top = fs.top_dim();
    std::vector<TopCocycle> cocycles;
    for (auto w : ml) {
        auto t = tree_of_monomial(arena, w);
        auto lin = preorder_linearization(t);
        auto chain = chain_of_linearization(t, lin);
        std::vector<int32_t> face;
        for (const auto& p : chain.parts) face.push_back(static_cast<int32_t>(pi.index_of(p)));
        std::sort(face.begin(), face.end());
        long idx = fs.find(top, face.data());
        if (idx < 0) throw usage_error("barcelo_rank_check: chain face missing");
        cocycles.push_back({arena.to_string(w), {{static_cast<size_t>(idx), 1}}});
    }
    auto map = induced_on_top_cohomology(cx, cocycles);
    rpt.h_top_rank = map.h_top_free_rank;
    std::vector<std::vector<Int>> dense = map.matrix;
    rpt.snf = dense_smith(std::move(dense));
    rpt.unimodular = all_ones(rpt.snf) && static_cast<long>(rpt.snf.size()) == rpt.classes;
    rpt.independent = static_cast<long>(rpt.snf.size()) == rpt.classes;
    return rpt;
}

}  // namespace pb
