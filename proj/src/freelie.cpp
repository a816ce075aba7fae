#include "pb/freelie.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pb {

LieArena::Mono LieArena::leaf(int generator) {
    auto it = leaf_ids_.find(generator);
    if (it != leaf_ids_.end()) return it->second;
    Node n;
    n.gen = generator;
    n.weight = 1;
    nodes_.push_back(n);
    Mono id = static_cast<Mono>(nodes_.size() - 1);
    leaf_ids_[generator] = id;
    return id;
}

LieArena::Mono LieArena::bracket(Mono left, Mono right) {
    auto key = std::make_pair(left, right);
    auto it = bracket_ids_.find(key);
    if (it != bracket_ids_.end()) return it->second;
    Node n;
    n.left = left;
    n.right = right;
    n.weight = nodes_[left].weight + nodes_[right].weight;
    nodes_.push_back(n);
    Mono id = static_cast<Mono>(nodes_.size() - 1);
    bracket_ids_[key] = id;
    return id;
}

std::vector<int> LieArena::multidegree(Mono m, int k) const {
    std::vector<int> deg(k, 0);
    std::vector<Mono> stack{m};
    while (!stack.empty()) {
        Mono cur = stack.back();
        stack.pop_back();
        if (is_leaf(cur)) {
            int g = nodes_[cur].gen;
            if (g < 1 || g > k) throw usage_error("multidegree: generator out of range");
            ++deg[g - 1];
        } else {
            stack.push_back(nodes_[cur].left);
            stack.push_back(nodes_[cur].right);
        }
    }
    return deg;
}

std::vector<int> LieArena::leaf_sequence(Mono m) const {
    std::vector<int> out;
    // left-to-right
    std::vector<Mono> stack{m};
    while (!stack.empty()) {
        Mono cur = stack.back();
        stack.pop_back();
        if (is_leaf(cur))
            out.push_back(nodes_[cur].gen);
        else {
            stack.push_back(nodes_[cur].right);
            stack.push_back(nodes_[cur].left);
        }
    }
    return out;
}

bool LieArena::is_multilinear(Mono m, int n) const {
    auto seq = leaf_sequence(m);
    if (static_cast<int>(seq.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int g : seq) {
        if (g < 1 || g > n || seen[g - 1]) return false;
        seen[g - 1] = true;
    }
    return true;
}

std::string LieArena::to_string(Mono m) const {
    if (is_leaf(m)) return "x" + std::to_string(nodes_[m].gen);
    return "[" + to_string(nodes_[m].left) + "," + to_string(nodes_[m].right) + "]";
}

LieArena::Mono LieArena::parse(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::function<Mono()> rec = [&]() -> Mono {
        skip_ws();
        if (pos >= text.size()) throw usage_error("LieArena::parse: truncated '" + text + "'");
        if (text[pos] == '[') {
            ++pos;
            Mono l = rec();
            skip_ws();
            if (pos >= text.size() || text[pos] != ',')
                throw usage_error("LieArena::parse: expected ',' in '" + text + "'");
            ++pos;
            Mono r = rec();
            skip_ws();
            if (pos >= text.size() || text[pos] != ']')
                throw usage_error("LieArena::parse: expected ']' in '" + text + "'");
            ++pos;
            return bracket(l, r);
        }
        if (text[pos] == 'x') {
            ++pos;
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw usage_error("LieArena::parse: bad generator");
            return leaf(std::stoi(text.substr(start, pos - start)));
        }
        throw usage_error("LieArena::parse: unexpected character in '" + text + "'");
    };
    Mono m = rec();
    skip_ws();
    if (pos != text.size()) throw usage_error("LieArena::parse: trailing input in '" + text + "'");
    return m;
}

LieArena::Mono LieArena::relabel(Mono m, const std::vector<int>& image) {
    if (is_leaf(m)) {
        int g = nodes_[m].gen;
        if (g < 1 || g > static_cast<int>(image.size()))
            throw usage_error("relabel: generator out of range");
        return leaf(image[g - 1]);
    }
    Mono l = relabel(nodes_[m].left, image);
    Mono r = relabel(nodes_[m].right, image);
    return bracket(l, r);
}

LieElement lie_add(const LieElement& a, const LieElement& b) {
    LieElement out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            Int v = a[i].second + b[j].second;
            if (v != 0) out.push_back({a[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

LieElement lie_scale(const LieElement& a, const Int& c) {
    if (c == 0) return {};
    LieElement out = a;
    for (auto& [m, v] : out) v *= c;
    return out;
}

Int witt(const std::vector<long>& ns) {
    long n = 0;
    bool any = false;
    for (long x : ns) {
        if (x < 0) throw usage_error("witt: negative entry");
        if (x > 0) any = true;
        n += x;
    }
    if (!any) throw usage_error("witt: all entries zero");
    long g = gcd_of(ns);
    Int total = 0;
    for (long d = 1; d <= g; ++d) {
        if (g % d) continue;
        std::vector<long> scaled;
        for (long x : ns) scaled.push_back(x / d);
        total += mobius(d) * multinomial(n / d, scaled);
    }
    if (total % n != 0) throw usage_error("witt: formula did not divide evenly");
    return total / n;
}

HallBasis::HallBasis(LieArena& arena, int k, int max_weight, HallOrderPolicy policy,
                     bool squarefree_only, size_t cap)
    : arena_(&arena), k_(k) {
    std::vector<std::vector<LieArena::Mono>> by_weight(max_weight + 1);
    for (int g = 1; g <= k; ++g) {
        auto m = arena.leaf(g);
        by_weight[1].push_back(m);
        index_[m] = static_cast<long>(monos_.size());
        monos_.push_back(m);
    }
    auto squarefree_pair = [&](LieArena::Mono a, LieArena::Mono b) {
        auto sa = arena.leaf_sequence(a), sb = arena.leaf_sequence(b);
        std::vector<bool> seen(k, false);
        for (int g : sa) seen[g - 1] = true;
        for (int g : sb) {
            if (seen[g - 1]) return false;
            seen[g - 1] = true;
        }
        return true;
    };
    for (int w = 2; w <= max_weight; ++w) {
        std::vector<LieArena::Mono> fresh;
        for (int wi = 1; wi < w; ++wi) {
            int wj = w - wi;
            for (auto ui : by_weight[wi]) {
                for (auto uj : by_weight[wj]) {
                    if (index_[ui] <= index_[uj]) continue;
                    // Hall condition: ui is a generator, or ui=[s,t] with t <= uj
                    if (!arena.is_leaf(ui)) {
                        auto t = arena.right(ui);
                        if (index_[t] > index_[uj]) continue;
                    }
                    if (squarefree_only && !squarefree_pair(ui, uj)) continue;
                    fresh.push_back(arena.bracket(ui, uj));
                }
            }
        }
        std::sort(fresh.begin(), fresh.end(), [&](LieArena::Mono a, LieArena::Mono b) {
            auto sa = arena.to_string(a), sb = arena.to_string(b);
            return policy == HallOrderPolicy::lex_serialization ? sa < sb : sa > sb;
        });
        for (auto m : fresh) {
            if (monos_.size() >= cap) throw resource_error("HallBasis: size cap exceeded");
            index_[m] = static_cast<long>(monos_.size());
            monos_.push_back(m);
            by_weight[w].push_back(m);
        }
    }
}

long HallBasis::index_of(LieArena::Mono m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::vector<LieArena::Mono> HallBasis::filter_multidegree(const std::vector<int>& ns) const {
    std::vector<LieArena::Mono> out;
    for (auto m : monos_)
        if (arena_->multidegree(m, k_) == ns) out.push_back(m);
    return out;
}

std::vector<LieArena::Mono> HallBasis::multilinear(int n) const {
    return filter_multidegree(std::vector<int>(n, 1));
}

LieElement NormalFormer::normal_form(LieArena::Mono m) {
    auto it = mono_cache_.find(m);
    if (it != mono_cache_.end()) return it->second;
    LieElement out;
    if (arena_->is_leaf(m)) {
        out = {{m, 1}};
    } else {
        LieElement l = normal_form(arena_->left(m));
        LieElement r = normal_form(arena_->right(m));
        for (const auto& [ma, ca] : l)
            for (const auto& [mb, cb] : r) out = lie_add(out, lie_scale(nf_pair(ma, mb), ca * cb));
    }
    mono_cache_[m] = out;
    return out;
}

LieElement NormalFormer::normal_form(const LieElement& e) {
    LieElement out;
    for (const auto& [m, c] : e) out = lie_add(out, lie_scale(normal_form(m), c));
    return out;
}

LieElement NormalFormer::nf_pair(LieArena::Mono a, LieArena::Mono b) {
    if (a == b) return {};
    int64_t key = (static_cast<int64_t>(a) << 32) | static_cast<uint32_t>(b);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
    LieElement out;
    long ia = basis_->index_of(a), ib = basis_->index_of(b);
    if (ia < 0 || ib < 0) throw usage_error("nf_pair: arguments must be basic monomials");
    if (ia < ib) {
        out = lie_scale(nf_pair(b, a), -1);
    } else if (arena_->is_leaf(a) || basis_->index_of(arena_->right(a)) <= ib) {
        out = {{arena_->bracket(a, b), 1}};  // already basic
    } else {
        // a = [s,t] with t > b: [[s,t],b] = [[s,b],t] + [s,[t,b]]
        auto s = arena_->left(a);
        auto t = arena_->right(a);
        for (const auto& [m, c] : nf_pair(s, b)) out = lie_add(out, lie_scale(nf_pair(m, t), c));
        for (const auto& [m, c] : nf_pair(t, b)) out = lie_add(out, lie_scale(nf_pair(s, m), c));
    }
    pair_cache_[key] = out;
    return out;
}

LieArena::Mono resolution(LieArena& arena, LieArena::Mono w, int k) {
    auto deg = arena.multidegree(w, k);
    std::vector<int> start(k, 0);
    for (int i = 1; i < k; ++i) start[i] = start[i - 1] + deg[i - 1];
    std::vector<int> counter(k, 0);
    std::function<LieArena::Mono(LieArena::Mono)> rec = [&](LieArena::Mono m) -> LieArena::Mono {
        if (arena.is_leaf(m)) {
            int g = arena.generator(m);
            ++counter[g - 1];
            return arena.leaf(start[g - 1] + counter[g - 1]);
        }
        auto l = rec(arena.left(m));
        auto r = rec(arena.right(m));
        return arena.bracket(l, r);
    };
    return rec(w);
}

LieArena::Mono operad_substitute(LieArena& arena, LieArena::Mono outer,
                                 const std::vector<LieArena::Mono>& inners,
                                 const std::vector<std::vector<int>>& phi) {
    size_t arity = 0;
    for (int g : arena.leaf_sequence(outer)) arity = std::max<size_t>(arity, g);
    if (inners.size() != arity) throw usage_error("operad_substitute: arity mismatch");
    // default phi: block order
    std::vector<std::vector<int>> map = phi;
    if (map.empty()) {
        int next = 1;
        for (size_t j = 0; j < inners.size(); ++j) {
            int nj = static_cast<int>(arena.leaf_sequence(inners[j]).size());
            std::vector<int> mj(nj);
            for (int a = 0; a < nj; ++a) mj[a] = next++;
            map.push_back(std::move(mj));
        }
    }
    std::function<LieArena::Mono(LieArena::Mono)> rec = [&](LieArena::Mono m) -> LieArena::Mono {
        if (arena.is_leaf(m)) {
            int j = arena.generator(m);
            return arena.relabel(inners[j - 1], map[j - 1]);
        }
        auto l = rec(arena.left(m));
        auto r = rec(arena.right(m));
        return arena.bracket(l, r);
    };
    return rec(outer);
}

LieArena::Mono phi_w(LieArena& arena, LieArena::Mono wtilde, int d, LieArena::Mono v) {
    int m = static_cast<int>(arena.leaf_sequence(wtilde).size());
    std::vector<LieArena::Mono> inners(d, wtilde);
    std::vector<std::vector<int>> phi(d);
    for (int t = 1; t <= d; ++t) {
        phi[t - 1].resize(m);
        for (int j = 1; j <= m; ++j) phi[t - 1][j - 1] = t + (j - 1) * d;
    }
    return operad_substitute(arena, v, inners, phi);
}

BranchingReport branching_matrix(const std::vector<long>& ns, HallOrderPolicy policy,
                                 bool integral_snf, size_t cap) {
    long n = 0;
    for (long x : ns) {
        if (x < 1) throw usage_error("branching_matrix: composition parts must be positive");
        n += x;
    }
    long g = gcd_of(ns);
    int k = static_cast<int>(ns.size());
    LieArena arena;
    HallBasis basis_n(arena, static_cast<int>(n), static_cast<int>(n), policy, true);
    auto target = basis_n.multilinear(static_cast<int>(n));
    std::unordered_map<LieArena::Mono, long> tgt_index;
    for (size_t i = 0; i < target.size(); ++i) tgt_index[target[i]] = static_cast<long>(i);
    if (factorial(n - 1) != Int(target.size()))
        throw usage_error("branching_matrix: multilinear Hall basis has wrong size");
    if (target.size() > cap) throw resource_error("branching_matrix: dimension exceeds cap");
    NormalFormer nf(arena, basis_n);

    PermGroup yg = young(std::vector<int>(ns.begin(), ns.end()));
    BranchingReport rpt;
    rpt.ns = ns;
    rpt.dimension = static_cast<long>(target.size());
    SparseIntMatrix m;
    m.rows = target.size();
    std::vector<std::vector<std::pair<int32_t, Int>>> cols;

    for (long d = 1; d <= g; ++d) {
        if (g % d) continue;
        std::vector<int> nsd;
        long nd = n / d;
        for (long x : ns) nsd.push_back(static_cast<int>(x / d));
        HallBasis basis_k(arena, k, static_cast<int>(nd), policy);
        auto bw = basis_k.filter_multidegree(nsd);
        if (bw.empty()) continue;
        HallBasis basis_d(arena, static_cast<int>(d), static_cast<int>(d), policy, true);
        auto lie_d = basis_d.multilinear(static_cast<int>(d));
        // left coset representatives of Young / diagonal Sigma_d
        PermGroup diag = diagonal_sigma_d(static_cast<int>(d), static_cast<int>(n));
        std::vector<Permutation> reps;
        {
            std::set<std::vector<uint8_t>> seen;
            for (const auto& y : yg.elements()) {
                // canonical key: min over y * delta
                std::vector<uint8_t> best;
                for (const auto& t : diag.elements()) {
                    auto prod = y.compose(t).images();
                    if (best.empty() || prod < best) best = prod;
                }
                if (seen.insert(best).second) reps.push_back(y);
            }
        }
        for (auto w : bw) {
            auto wt = resolution(arena, w, k);
            rpt.blocks.push_back({d, arena.to_string(w), static_cast<long>(reps.size()),
                                  static_cast<long>(lie_d.size())});
            for (const auto& rep : reps) {
                std::vector<int> img(n);
                for (long i = 1; i <= n; ++i) img[i - 1] = rep.image(static_cast<int>(i));
                for (auto v : lie_d) {
                    auto mono = phi_w(arena, wt, static_cast<int>(d), v);
                    mono = arena.relabel(mono, img);
                    auto e = nf.normal_form(mono);
                    std::vector<std::pair<int32_t, Int>> col;
                    for (const auto& [mm, c] : e) {
                        auto it = tgt_index.find(mm);
                        if (it == tgt_index.end())
                            throw usage_error("branching_matrix: normal form not in basis");
                        col.push_back({static_cast<int32_t>(it->second), c});
                    }
                    std::sort(col.begin(), col.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    cols.push_back(std::move(col));
                }
            }
        }
    }
    m.cols = cols.size();
    m.col = std::move(cols);
    if (static_cast<long>(m.cols) != rpt.dimension)
        throw usage_error("branching_matrix: Witt dimension identity failed (" +
                          std::to_string(m.cols) + " columns vs " +
                          std::to_string(rpt.dimension) + ")");
    rpt.matrix = m;
    if (integral_snf) {
        rpt.snf = smith_invariant_factors(m);
        rpt.unimodular =
            static_cast<long>(rpt.snf.size()) == rpt.dimension && all_ones(rpt.snf);
        rpt.evidence = "integral-snf";
    } else {
        for (uint32_t p : {2u, 3u, 5u, 7u}) rpt.modular_ranks.push_back({p, fp_rank(m, p)});
        bool full = true;
        for (auto& [p, r] : rpt.modular_ranks)
            if (r != rpt.dimension) full = false;
        rpt.unimodular = full;  // full modular rank at several primes
        rpt.evidence = "modular";
    }
    return rpt;
}

}  // namespace pb
