#include "pb/equivariant.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pb {

std::optional<ConditionAWitness> condition_A_check(const EquivariantComplex& x) {
    auto maps = x.element_vertex_maps();
    const auto& els = x.group.elements();
    const FaceSet& fs = x.complex.faces();
    for (size_t ei = 0; ei < els.size(); ++ei) {
        const auto& m = maps[ei];
        for (int k = 0; k <= fs.top_dim(); ++k) {
            size_t w = k + 1;
            std::vector<int32_t> img(w);
            for (size_t i = 0; i < fs.count(k); ++i) {
                const int32_t* f = fs.face(k, i);
                bool pointwise = true;
                for (size_t t = 0; t < w; ++t) {
                    img[t] = m[f[t]];
                    if (img[t] != f[t]) pointwise = false;
                }
                if (pointwise) continue;
                std::vector<int32_t> simg(img);
                std::sort(simg.begin(), simg.end());
                if (std::equal(simg.begin(), simg.end(), f))
                    return ConditionAWitness{els[ei], std::vector<int32_t>(f, f + w)};
            }
        }
    }
    return std::nullopt;
}

bool action_is_order_preserving(const EquivariantComplex& x) {
    auto maps = x.element_vertex_maps();
    const FaceSet& fs = x.complex.faces();
    for (const auto& m : maps) {
        for (int k = 1; k <= fs.top_dim(); ++k) {
            size_t w = k + 1;
            for (size_t i = 0; i < fs.count(k); ++i) {
                const int32_t* f = fs.face(k, i);
                for (size_t t = 0; t + 1 < w; ++t)
                    if (m[f[t]] >= m[f[t + 1]]) return false;
            }
        }
    }
    return true;
}

OrbitChainComplex orbit_chain_complex(const EquivariantComplex& x, bool augmented) {
    auto maps = x.element_vertex_maps();
    const FaceSet& fs = x.complex.faces();
    int top = fs.top_dim();
    OrbitChainComplex out;
    out.orbit_counts.assign(std::max(top + 1, 0), 0);
    out.orbit_of.resize(std::max(top + 1, 0));
    out.orbit_reps.resize(std::max(top + 1, 0));
    for (int k = 0; k <= top; ++k) {
        size_t w = k + 1;
        size_t cnt = fs.count(k);
        auto& oid = out.orbit_of[k];
        oid.assign(cnt, -1);
        std::vector<int32_t> img(w);
        int32_t next = 0;
        for (size_t i = 0; i < cnt; ++i) {
            if (oid[i] >= 0) continue;
            out.orbit_reps[k].push_back(i);
            for (const auto& m : maps) {
                const int32_t* f = fs.face(k, i);
                for (size_t t = 0; t < w; ++t) img[t] = m[f[t]];
                for (size_t t = 0; t + 1 < w; ++t)
                    if (img[t] >= img[t + 1])
                        throw usage_error(
                            "orbit_chain_complex: action is not order-preserving; subdivide");
                long j = fs.find(k, img.data());
                if (j < 0) throw usage_error("orbit_chain_complex: action does not preserve faces");
                oid[j] = next;
            }
            ++next;
        }
        out.orbit_counts[k] = static_cast<size_t>(next);
    }
    // boundaries on orbit generators
    out.boundaries.clear();
    {
        SparseIntMatrix aug;
        aug.rows = augmented ? 1 : 0;
        aug.cols = top >= 0 ? out.orbit_counts[0] : 0;
        aug.col.resize(aug.cols);
        if (augmented)
            for (size_t c = 0; c < aug.cols; ++c) aug.col[c].push_back({0, 1});
        out.boundaries.push_back(std::move(aug));
    }
    for (int k = 1; k <= top; ++k) {
        size_t w = k + 1;
        SparseIntMatrix m;
        m.rows = out.orbit_counts[k - 1];
        m.cols = out.orbit_counts[k];
        m.col.resize(m.cols);
        std::vector<int32_t> sub(k);
        for (size_t o = 0; o < out.orbit_reps[k].size(); ++o) {
            const int32_t* f = fs.face(k, out.orbit_reps[k][o]);
            std::map<int32_t, Int> acc;
            for (size_t skip = 0; skip < w; ++skip) {
                size_t t2 = 0;
                for (size_t t = 0; t < w; ++t)
                    if (t != skip) sub[t2++] = f[t];
                long j = fs.find(k - 1, sub.data());
                if (j < 0) throw usage_error("orbit_chain_complex: faces not downward closed");
                acc[out.orbit_of[k - 1][j]] += (skip % 2 == 0) ? 1 : -1;
            }
            for (auto& [r, v] : acc)
                if (v != 0) m.col[o].push_back({r, v});
        }
        out.boundaries.push_back(std::move(m));
    }
    return out;
}

namespace {

HomologySummary homology_of_boundaries(const std::vector<SparseIntMatrix>& bd, int lowest,
                                       const HomologyOptions& opts) {
    std::vector<long> rank(bd.size() + 1, 0);
    std::vector<std::vector<Int>> factors(bd.size());
    for (size_t i = 0; i < bd.size(); ++i) {
        if (bd[i].rows == 0 || bd[i].cols == 0) continue;
        if (opts.mode == CoeffMode::integer) {
            factors[i] = smith_invariant_factors(bd[i], opts.snf);
            rank[i] = static_cast<long>(factors[i].size());
        } else {
            rank[i] = fp_rank(bd[i], opts.p);
        }
    }
    auto prime_powers = [](const std::vector<Int>& fs) {
        std::vector<Int> out;
        for (Int d : fs) {
            if (d <= 1) continue;
            for (Int q = 2; q * q <= d; ++q)
                if (d % q == 0) {
                    Int pk = 1;
                    while (d % q == 0) {
                        pk *= q;
                        d /= q;
                    }
                    out.push_back(pk);
                }
            if (d > 1) out.push_back(d);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    HomologySummary out;
    for (size_t i = 0; i < bd.size(); ++i) {
        long dim_ck = static_cast<long>(bd[i].cols);
        long r_in = (i + 1 < bd.size()) ? rank[i + 1] : 0;
        long betti = dim_ck - rank[i] - r_in;
        std::vector<Int> torsion;
        if (opts.mode == CoeffMode::integer && i + 1 < bd.size())
            torsion = prime_powers(factors[i + 1]);
        out.add(lowest + static_cast<int>(i), betti, torsion);
    }
    return out;
}

}  // namespace

HomologySummary quotient_homology(const EquivariantComplex& x, const HomologyOptions& opts,
                                  bool auto_subdivide) {
    const EquivariantComplex* use = &x;
    EquivariantComplex subdivided;
    if (!action_is_order_preserving(x)) {
        if (!auto_subdivide)
            throw usage_error("quotient_homology: action not order-preserving");
        subdivided = barycentric(x);
        if (!action_is_order_preserving(subdivided))
            throw usage_error("quotient_homology: subdivision did not regularize the action");
        use = &subdivided;
    }
    if (use->complex.faces().total() == 0) {
        // empty complex: reduced homology of the empty space
        HomologySummary s;
        s.add(-1 + use->complex.shift(), 1);
        return s;
    }
    auto occ = orbit_chain_complex(*use, true);
    // include the augmentation level C_{-1}
    std::vector<SparseIntMatrix> bd;
    {
        SparseIntMatrix out_of_aug;
        out_of_aug.rows = 0;
        out_of_aug.cols = 1;
        out_of_aug.col.resize(1);
        bd.push_back(std::move(out_of_aug));
    }
    for (auto& b : occ.boundaries) bd.push_back(std::move(b));
    return homology_of_boundaries(bd, -1, opts).shifted(use->complex.shift());
}

HomologySummary quotient_relative_homology(const EquivariantComplex& x,
                                           const SimplicialComplex& a,
                                           const HomologyOptions& opts) {
    if (!action_is_order_preserving(x))
        throw usage_error("quotient_relative_homology: action not order-preserving");
    auto occ = orbit_chain_complex(x, false);
    const FaceSet& fx = x.complex.faces();
    const FaceSet& fa = a.faces();
    int top = fx.top_dim();
    // an orbit is retained iff its representative face is not in A
    std::vector<std::vector<char>> keep(std::max(top + 1, 0));
    std::vector<std::vector<int32_t>> newid(std::max(top + 1, 0));
    std::vector<size_t> kept_counts(std::max(top + 1, 0), 0);
    for (int k = 0; k <= top; ++k) {
        keep[k].assign(occ.orbit_counts[k], 1);
        for (size_t o = 0; o < occ.orbit_reps[k].size(); ++o)
            if (fa.find(k, fx.face(k, occ.orbit_reps[k][o])) >= 0) keep[k][o] = 0;
        newid[k].assign(occ.orbit_counts[k], -1);
        int32_t next = 0;
        for (size_t o = 0; o < occ.orbit_counts[k]; ++o)
            if (keep[k][o]) newid[k][o] = next++;
        kept_counts[k] = static_cast<size_t>(next);
    }
    std::vector<SparseIntMatrix> bd;
    {
        SparseIntMatrix zero;  // relative C_0 -> 0
        zero.rows = 0;
        zero.cols = top >= 0 ? kept_counts[0] : 0;
        zero.col.resize(zero.cols);
        bd.push_back(std::move(zero));
    }
    for (int k = 1; k <= top; ++k) {
        SparseIntMatrix m;
        m.rows = kept_counts[k - 1];
        m.cols = kept_counts[k];
        m.col.resize(m.cols);
        const auto& src = occ.boundaries[k];  // boundaries[k]: C_k -> C_{k-1}
        for (size_t o = 0; o < occ.orbit_counts[k]; ++o) {
            if (!keep[k][o]) continue;
            for (const auto& [r, v] : src.col[o])
                if (keep[k - 1][r]) m.col[newid[k][o]].push_back({newid[k - 1][r], v});
        }
        bd.push_back(std::move(m));
    }
    return homology_of_boundaries(bd, 0, opts).shifted(x.complex.shift());
}

SimplicialComplex explicit_quotient_complex(const EquivariantComplex& x) {
    auto maps = x.element_vertex_maps();
    const FaceSet& fs = x.complex.faces();
    int nv = x.complex.n_vertices();
    // vertex orbits
    std::vector<int32_t> vorbit(nv, -1);
    int32_t next = 0;
    for (int v = 0; v < nv; ++v) {
        if (vorbit[v] >= 0) continue;
        for (const auto& m : maps) vorbit[m[v]] = next;
        ++next;
    }
    FaceSet qf;
    for (int k = 0; k <= fs.top_dim(); ++k) {
        size_t w = k + 1;
        std::vector<int32_t> flat;
        std::vector<int32_t> img(w);
        for (size_t i = 0; i < fs.count(k); ++i) {
            const int32_t* f = fs.face(k, i);
            for (size_t t = 0; t < w; ++t) img[t] = vorbit[f[t]];
            std::sort(img.begin(), img.end());
            for (size_t t = 0; t + 1 < w; ++t)
                if (img[t] == img[t + 1])
                    throw usage_error(
                        "explicit_quotient_complex: face collapses onto repeated vertex orbits; "
                        "subdivide first");
            flat.insert(flat.end(), img.begin(), img.end());
        }
        // sort + dedup tuples
        size_t cnt = flat.size() / w;
        std::vector<size_t> idx(cnt);
        for (size_t t = 0; t < cnt; ++t) idx[t] = t;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w,
                                                flat.begin() + b * w, flat.begin() + (b + 1) * w);
        });
        std::vector<int32_t> sorted;
        for (size_t t : idx) {
            if (!sorted.empty() &&
                std::equal(flat.begin() + t * w, flat.begin() + (t + 1) * w, sorted.end() - w))
                continue;
            sorted.insert(sorted.end(), flat.begin() + t * w, flat.begin() + (t + 1) * w);
        }
        if (!sorted.empty()) qf.set_dim(k, std::move(sorted));
    }
    return SimplicialComplex::from_all_faces(next, std::move(qf), x.complex.shift());
}

PartitionPoset fixed_subposet(const PartitionPoset& p, const PermGroup& g) {
    std::vector<SetPartition> fixed;
    for (size_t i = 0; i < p.size(); ++i) {
        bool ok = true;
        for (const auto& gen : g.generators())
            if (!(p.at(i).apply(gen) == p.at(i))) {
                ok = false;
                break;
            }
        if (ok) fixed.push_back(p.at(i));
    }
    return PartitionPoset(p.n(), p.mode(), std::move(fixed));
}

std::vector<int32_t> fixed_vertices(const EquivariantComplex& x) {
    std::vector<int32_t> out;
    for (int v = 0; v < x.complex.n_vertices(); ++v) {
        bool ok = true;
        for (const auto& m : x.generator_vertex_maps)
            if (m[v] != v) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

SimplicialComplex fixed_subcomplex(const EquivariantComplex& x) {
    return x.complex.induced(fixed_vertices(x)).first;
}

SimplicialComplex induced_space_fixed_points(const PermGroup& g, const PermGroup& h,
                                             const EquivariantComplex& x, const PermGroup& k) {
    if (!x.group.same_group(h))
        throw usage_error("induced_space_fixed_points: X must carry the H-action");
    auto reps = subconjugators(g, k, h);
    auto maps = x.element_vertex_maps();
    const auto& h_els = h.elements();
    auto map_of = [&](const Permutation& p) -> const std::vector<int32_t>& {
        auto it = std::lower_bound(h_els.begin(), h_els.end(), p);
        if (it == h_els.end() || !(*it == p))
            throw usage_error("induced_space_fixed_points: conjugate not in H");
        return maps[it - h_els.begin()];
    };
    // assemble wedge: vertex 0 = basepoint, factors appended with an edge to 0
    std::vector<std::vector<int32_t>> facets;
    int base_offset = 1;
    for (const auto& rep : reps) {
        Permutation ri = rep.inverse();
        // fixed vertices of g^-1 K g
        std::vector<int32_t> fixed;
        for (int v = 0; v < x.complex.n_vertices(); ++v) {
            bool ok = true;
            for (const auto& kg : k.generators()) {
                const auto& m = map_of(ri.compose(kg).compose(rep));
                if (m[v] != v) {
                    ok = false;
                    break;
                }
            }
            if (ok) fixed.push_back(v);
        }
        auto [sub, vmap] = x.complex.induced(fixed);
        if (sub.n_vertices() == 0) continue;  // empty factor contributes only the basepoint
        for (const auto& f : sub.facets()) {
            std::vector<int32_t> shifted;
            for (int32_t v : f) shifted.push_back(v + base_offset);
            facets.push_back(std::move(shifted));
        }
        facets.push_back({0, base_offset});  // wedge edge to the factor's first vertex
        base_offset += sub.n_vertices();
    }
    if (facets.empty()) facets.push_back({0});
    return SimplicialComplex::from_facets(base_offset, std::move(facets));
}

}  // namespace pb
