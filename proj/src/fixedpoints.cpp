#include "pb/fixedpoints.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pb {

namespace {

PermGroup stabilizer_of_point(const PermGroup& g, int x) {
    std::vector<Permutation> els;
    for (const auto& p : g.elements())
        if (p.image(x) == x) els.push_back(p);
    return PermGroup(g.n(), els);
}

bool conjugate_subgroups(const PermGroup& a, const PermGroup& b, const PermGroup& ambient) {
    if (a.order() != b.order()) return false;
    const auto& be = b.elements();
    for (const auto& x : ambient.elements()) {
        Permutation xi = x.inverse();
        bool ok = true;
        for (const auto& g : a.generators())
            if (!std::binary_search(be.begin(), be.end(), xi.compose(g).compose(x))) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

ActionProfile classify_action(const PermGroup& g, int n) {
    ActionProfile pr;
    pr.group = g;
    pr.n = n;
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    pr.orbit_list = orbits(g, pts);
    size_t d = pr.orbit_list.front().size();
    bool sizes_equal = true;
    for (const auto& o : pr.orbit_list)
        if (o.size() != d) sizes_equal = false;
    pr.isotypical = sizes_equal;
    if (pr.isotypical && pr.orbit_list.size() > 1) {
        auto s0 = stabilizer_of_point(g, pr.orbit_list[0][0]);
        for (size_t i = 1; i < pr.orbit_list.size() && pr.isotypical; ++i) {
            auto si = stabilizer_of_point(g, pr.orbit_list[i][0]);
            if (!conjugate_subgroups(s0, si, g)) pr.isotypical = false;
        }
    }
    if (pr.isotypical) {
        pr.d = static_cast<int>(d);
        // faithful transitive image on the first orbit, relabeled to {1..d}
        const auto& orb = pr.orbit_list[0];
        std::vector<int> pos(n + 1, 0);
        for (size_t i = 0; i < orb.size(); ++i) pos[orb[i]] = static_cast<int>(i) + 1;
        std::vector<Permutation> gens;
        for (const auto& gen : g.generators()) {
            std::vector<uint8_t> img(d);
            for (size_t i = 0; i < orb.size(); ++i)
                img[i] = static_cast<uint8_t>(pos[gen.image(orb[i])]);
            gens.emplace_back(static_cast<int>(d), std::move(img));
        }
        pr.transitive_model = PermGroup(static_cast<int>(d), gens, g.label() + "|orbit");
    }
    return pr;
}

HomologySummary pi_homology(int m) {
    if (m == 1) return HomologySummary::sphere(-2);
    if (m == 2) return HomologySummary::sphere(-1);
    auto pi = enumerate_partitions(m, PosetMode::proper);
    return reduced_homology(order_complex(pi));
}

HomologySummary predicted_fixed_homology(const ActionProfile& profile) {
    if (!profile.isotypical) return HomologySummary{};  // reduced-acyclic
    int d = profile.d;
    int m = profile.n / d;
    // |Pi_d|^G for the transitive model
    HomologySummary fixed_d;
    if (d == 1)
        fixed_d = HomologySummary::sphere(-2);
    else if (d == 2)
        fixed_d = HomologySummary::sphere(-1);
    else {
        auto pi_d = enumerate_partitions(d, PosetMode::proper);
        auto fixed = fixed_subposet(pi_d, profile.transitive_model);
        fixed_d = reduced_homology(order_complex(fixed));
    }
    long copies = 1;
    {
        PermGroup c = centralizer(profile.transitive_model, symmetric_group(d));
        for (int i = 0; i + 1 < m; ++i) copies *= static_cast<long>(c.order());
    }
    auto joined = HomologySummary::join(fixed_d, pi_homology(m));
    return joined.shifted(1).scaled(copies);
}

TransitiveFixedPoset transitive_fixed_poset(const PermGroup& g) {
    int d = g.n();
    std::vector<int> pts(d);
    for (int i = 0; i < d; ++i) pts[i] = i + 1;
    if (orbits(g, pts).size() != 1)
        throw usage_error("transitive_fixed_poset: group is not transitive");
    PermGroup h = stabilizer_of_point(g, 1);
    auto all = subgroups_between(h, g);
    TransitiveFixedPoset out;
    for (const auto& k : all) {
        if (k.order() == h.order() || k.order() == g.order()) continue;
        out.subgroups.push_back(k);
        // partition of {1..d}: i ~ j iff g_j^-1 g_i in K, with g_i(1) = i
        std::vector<Permutation> gi(d + 1, Permutation(d));
        for (const auto& e : g.elements()) gi[e.image(1)] = e;
        std::vector<std::vector<int>> blocks;
        std::vector<char> placed(d + 1, 0);
        for (int i = 1; i <= d; ++i) {
            if (placed[i]) continue;
            std::vector<int> blk;
            for (int j = i; j <= d; ++j) {
                if (placed[j]) continue;
                if (k.contains(gi[i].inverse().compose(gi[j]))) {
                    blk.push_back(j);
                    placed[j] = 1;
                }
            }
            blocks.push_back(blk);
        }
        out.partitions.push_back(SetPartition::from_blocks(d, blocks));
    }
    // reverse inclusion: K1 < K2 iff K2 subgroup of K1; index-sort by
    // descending order so that i < j implies not (elements_j superset)
    std::vector<size_t> idx(out.subgroups.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (out.subgroups[a].order() != out.subgroups[b].order())
            return out.subgroups[a].order() > out.subgroups[b].order();
        return out.subgroups[a].elements() < out.subgroups[b].elements();
    });
    std::vector<PermGroup> subs;
    std::vector<SetPartition> parts;
    for (size_t i : idx) {
        subs.push_back(out.subgroups[i]);
        parts.push_back(out.partitions[i]);
    }
    out.subgroups = std::move(subs);
    out.partitions = std::move(parts);
    out.poset.size = out.subgroups.size();
    out.poset.up.resize(out.poset.size);
    for (size_t i = 0; i < out.subgroups.size(); ++i)
        for (size_t j = i + 1; j < out.subgroups.size(); ++j)
            if (out.subgroups[j].order() < out.subgroups[i].order() &&
                out.subgroups[j].is_subgroup_of(out.subgroups[i]))
                out.poset.up[i].push_back(static_cast<int32_t>(j));
    return out;
}

FixedPredictionReport verify_fixed_predictions(const std::vector<std::string>& specs) {
    FixedPredictionReport rpt;
    for (const auto& spec : specs) {
        FixedPredictionRow row;
        row.spec = spec;
        PermGroup g = parse_group_spec(spec);
        int n = g.n();
        auto profile = classify_action(g, n);
        row.isotypical = profile.isotypical;
        auto pi = enumerate_partitions(n, PosetMode::proper);
        auto fixed = fixed_subposet(pi, g);
        row.direct = reduced_homology(order_complex(fixed));
        row.predicted = predicted_fixed_homology(profile);
        row.match = row.direct == row.predicted;
        if (!row.match) rpt.all_match = false;
        rpt.rows.push_back(std::move(row));
    }
    return rpt;
}

std::vector<PermGroup> transitive_subgroup_reps(int d) {
    PermGroup sd = symmetric_group(d);
    std::vector<int> pts(d);
    for (int i = 0; i < d; ++i) pts[i] = i + 1;
    auto is_transitive = [&](const PermGroup& g) { return orbits(g, pts).size() == 1; };
    std::vector<PermGroup> candidates;
    bool prime = d >= 2;
    for (int q = 2; q < d; ++q)
        if (d % q == 0) prime = false;
    if (d == 1) return {trivial_group(1)};
    if (prime) {
        // every transitive subgroup of Sigma_p contains a p-cycle (Cauchy);
        // up to conjugacy it contains the standard one
        candidates = subgroups_between(cyclic_group(d, d), sd, 100000);
    } else {
        candidates = all_subgroups(sd, 100000);
    }
    // filter transitive, dedupe up to Sigma_d-conjugacy
    std::set<std::vector<Permutation>> seen;
    std::vector<PermGroup> reps;
    for (const auto& g : candidates) {
        if (!is_transitive(g)) continue;
        if (seen.count(g.elements())) continue;
        reps.push_back(g);
        for (const auto& x : sd.elements()) {
            Permutation xi = x.inverse();
            std::vector<Permutation> conj;
            for (const auto& s : g.elements()) conj.push_back(xi.compose(s).compose(x));
            std::sort(conj.begin(), conj.end());
            seen.insert(std::move(conj));
        }
    }
    return reps;
}

}  // namespace pb
