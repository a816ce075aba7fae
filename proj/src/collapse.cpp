#include "pb/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pb {

namespace {

// lift a partition of the d classes of rho_d to a partition of {1..n}
SetPartition lift_class_partition(const SetPartition& mu, int d, int n) {
    std::vector<std::vector<int>> blocks(mu.rank());
    for (int i = 1; i <= d; ++i) {
        int b = mu.block_of(i);
        for (int j = i; j <= n; j += d) blocks[b].push_back(j);
    }
    return SetPartition::from_blocks(n, blocks);
}

// order complex of the induced subposet on the given (sorted) poset indices
SimplicialComplex subposet_complex(const PartitionPoset& poset,
                                   const std::vector<int32_t>& verts) {
    Poset p;
    p.size = verts.size();
    p.up.resize(p.size);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (poset.at(verts[i]).rank() < poset.at(verts[j]).rank() &&
                leq(poset.at(verts[i]), poset.at(verts[j])))
                p.up[i].push_back(static_cast<int32_t>(j));
    auto cx = order_complex(p);
    std::vector<int32_t> grades(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) grades[i] = poset.at(verts[i]).rank();
    if (!verts.empty()) cx.set_grades(std::move(grades));
    return cx;
}

// star of a chain: poset indices comparable with every chain element
std::vector<int32_t> star_vertices_of(const PartitionPoset& poset,
                                      const std::vector<SetPartition>& chain) {
    std::vector<int32_t> out;
    for (size_t i = 0; i < poset.size(); ++i) {
        const auto& p = poset.at(i);
        bool ok = true;
        for (const auto& c : chain)
            if (!(leq(p, c) || leq(c, p))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(static_cast<int32_t>(i));
    }
    return out;
}

}  // namespace

PieceSet build_pieces(const std::vector<long>& ns, int cap) {
    long n = 0;
    for (long x : ns) {
        if (x < 1) throw usage_error("build_pieces: composition parts must be positive");
        n += x;
    }
    if (ns.size() < 2) throw usage_error("build_pieces: need at least two composition parts");
    if (n < 3) throw usage_error("build_pieces: need n >= 3");
    if (n > cap) throw resource_error("build_pieces: n exceeds cap");
    long g = gcd_of(ns);
    int k = static_cast<int>(ns.size());

    PieceSet ps;
    ps.ns = ns;
    ps.n = n;
    ps.poset = enumerate_partitions(static_cast<int>(n), PosetMode::proper);
    ps.expected_rank = factorial(n - 1).convert_to<long>();

    LieArena arena;
    PermGroup yg = young(std::vector<int>(ns.begin(), ns.end()));

    // translation tables of poset indices, one per permutation encountered
    std::map<std::vector<uint8_t>, std::vector<int32_t>> tr_cache;
    auto translate_table = [&](const Permutation& rep) -> const std::vector<int32_t>& {
        auto it = tr_cache.find(rep.images());
        if (it != tr_cache.end()) return it->second;
        std::vector<int32_t> tr(ps.poset.size());
        for (size_t i = 0; i < ps.poset.size(); ++i)
            tr[i] = static_cast<int32_t>(ps.poset.index_of(ps.poset.at(i).apply(rep)));
        return tr_cache.emplace(rep.images(), std::move(tr)).first->second;
    };

    for (long d = 1; d <= g; ++d) {
        if (g % d) continue;
        long nd = n / d;
        if (nd < 2) continue;  // degenerate: the lifted chain would start at 1-hat
        std::vector<int> nsd;
        for (long x : ns) nsd.push_back(static_cast<int>(x / d));
        HallBasis basis_k(arena, k, static_cast<int>(nd));
        auto bw = basis_k.filter_multidegree(nsd);
        if (bw.empty()) continue;

        // chains for the Pi_d-factor cocycles
        std::vector<PartitionChain> lambda_v;
        std::vector<std::string> v_labels;
        if (d >= 3) {
            HallBasis basis_d(arena, static_cast<int>(d), static_cast<int>(d),
                              HallOrderPolicy::lex_serialization, true);
            for (auto v : basis_d.multilinear(static_cast<int>(d))) {
                auto t = tree_of_monomial(arena, v);
                lambda_v.push_back(chain_of_linearization(t, preorder_linearization(t)));
                v_labels.push_back(arena.to_string(v));
            }
        } else {
            lambda_v.push_back(PartitionChain(std::max<int>(static_cast<int>(d), 1), {}));
            v_labels.push_back("x1");
        }

        PermGroup diag = diagonal_sigma_d(static_cast<int>(d), static_cast<int>(n));
        std::vector<Permutation> reps;
        {
            std::set<std::vector<uint8_t>> seen;
            for (const auto& y : yg.elements()) {
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
            auto t = tree_of_monomial(arena, wt);
            auto base_chain = chain_of_linearization(t, preorder_linearization(t));
            std::vector<SetPartition> lifted;
            if (d >= 2) lifted.push_back(rho(static_cast<int>(d), static_cast<int>(n)));
            for (const auto& p : base_chain.parts)
                lifted.push_back(d_times(static_cast<int>(d), p, static_cast<int>(n)));

            // --- template piece (identity coset) ---
            CollapsePiece tpl;
            tpl.d = d;
            tpl.w = arena.to_string(w);
            tpl.coset_rep = Permutation(static_cast<int>(n));
            tpl.chain = PartitionChain(static_cast<int>(n), lifted);
            if (!is_binary_chain(tpl.chain))
                throw usage_error("build_pieces: lifted chain is not binary");
            tpl.star_vertices = star_vertices_of(ps.poset, lifted);
            tpl.vertex_to_poset = tpl.star_vertices;
            tpl.star = subposet_complex(ps.poset, tpl.star_vertices);
            // boundary: faces not containing the chain as a subchain
            {
                std::vector<int32_t> chain_local;
                for (const auto& p : lifted) {
                    long pidx = ps.poset.index_of(p);
                    auto it = std::lower_bound(tpl.star_vertices.begin(),
                                               tpl.star_vertices.end(),
                                               static_cast<int32_t>(pidx));
                    chain_local.push_back(
                        static_cast<int32_t>(it - tpl.star_vertices.begin()));
                }
                std::sort(chain_local.begin(), chain_local.end());
                const FaceSet& fs = tpl.star.faces();
                FaceSet bd;
                for (int kk = 0; kk <= fs.top_dim(); ++kk) {
                    size_t w2 = kk + 1;
                    std::vector<int32_t> flat;
                    for (size_t i = 0; i < fs.count(kk); ++i) {
                        const int32_t* f = fs.face(kk, i);
                        if (!std::includes(f, f + w2, chain_local.begin(), chain_local.end()))
                            flat.insert(flat.end(), f, f + w2);
                    }
                    if (!flat.empty()) bd.set_dim(kk, std::move(flat));
                }
                tpl.boundary = SimplicialComplex::from_all_faces(tpl.star.n_vertices(),
                                                                 std::move(bd));
            }
            const FaceSet& fs = tpl.star.faces();
            int top = fs.top_dim();
            if (top != static_cast<int>(n) - 3)
                throw usage_error("build_pieces: star has unexpected dimension");
            for (size_t i = 0; i < fs.count(top); ++i) {
                const int32_t* f = fs.face(top, i);
                std::vector<int32_t> pf(top + 1);
                for (int tt = 0; tt <= top; ++tt) pf[tt] = tpl.vertex_to_poset[f[tt]];
                tpl.top_faces.push_back(std::move(pf));
            }
            std::sort(tpl.top_faces.begin(), tpl.top_faces.end());
            // distinguished cocycle faces: lex-min upper chain + each Lambda_v
            const auto& m0 = tpl.top_faces.front();
            const auto& base = lifted.front();
            for (size_t vi = 0; vi < lambda_v.size(); ++vi) {
                std::vector<int32_t> face;
                for (int32_t pv : m0) {
                    const auto& part = ps.poset.at(pv);
                    if (d >= 3 && part.rank() < static_cast<int>(d) && leq(part, base))
                        continue;  // drop the Pi_d part of m0
                    face.push_back(pv);
                }
                for (const auto& mu : lambda_v[vi].parts) {
                    auto lifted_mu =
                        lift_class_partition(mu, static_cast<int>(d), static_cast<int>(n));
                    long idx = ps.poset.index_of(lifted_mu);
                    if (idx < 0) throw usage_error("build_pieces: lifted chain missing");
                    face.push_back(static_cast<int32_t>(idx));
                }
                std::sort(face.begin(), face.end());
                if (face.size() != static_cast<size_t>(n - 2))
                    throw usage_error("build_pieces: cocycle face has wrong length");
                tpl.cocycle_faces.push_back(std::move(face));
                tpl.cocycle_labels.push_back("d=" + std::to_string(d) + " w=" + tpl.w +
                                             " v=" + v_labels[vi]);
            }

            // --- coset translates ---
            for (const auto& rep : reps) {
                if (rep.is_identity()) {
                    ps.pieces.push_back(tpl);
                    continue;
                }
                const auto& tr = translate_table(rep);
                CollapsePiece piece;
                piece.d = tpl.d;
                piece.w = tpl.w;
                piece.coset_rep = rep;
                std::vector<SetPartition> translated;
                for (const auto& p : lifted) translated.push_back(p.apply(rep));
                piece.chain = PartitionChain(static_cast<int>(n), std::move(translated));
                piece.star = tpl.star;          // same local structure
                piece.boundary = tpl.boundary;  // same local structure
                piece.vertex_to_poset.resize(tpl.vertex_to_poset.size());
                for (size_t i = 0; i < tpl.vertex_to_poset.size(); ++i)
                    piece.vertex_to_poset[i] = tr[tpl.vertex_to_poset[i]];
                piece.star_vertices = piece.vertex_to_poset;
                std::sort(piece.star_vertices.begin(), piece.star_vertices.end());
                for (const auto& f : tpl.top_faces) {
                    std::vector<int32_t> tf(f.size());
                    for (size_t i = 0; i < f.size(); ++i) tf[i] = tr[f[i]];
                    std::sort(tf.begin(), tf.end());
                    piece.top_faces.push_back(std::move(tf));
                }
                std::sort(piece.top_faces.begin(), piece.top_faces.end());
                for (size_t vi = 0; vi < tpl.cocycle_faces.size(); ++vi) {
                    std::vector<int32_t> cf(tpl.cocycle_faces[vi].size());
                    for (size_t i = 0; i < cf.size(); ++i) cf[i] = tr[tpl.cocycle_faces[vi][i]];
                    std::sort(cf.begin(), cf.end());
                    piece.cocycle_faces.push_back(std::move(cf));
                    piece.cocycle_labels.push_back(tpl.cocycle_labels[vi] + " g=" +
                                                   rep.cycle_string());
                }
                ps.pieces.push_back(std::move(piece));
            }
        }
    }
    return ps;
}

bool disjointness_check(const PieceSet& ps) {
    std::set<std::vector<int32_t>> seen;
    for (const auto& piece : ps.pieces)
        for (const auto& f : piece.top_faces)
            if (!seen.insert(f).second) return false;
    return true;
}

namespace {

// checks that the distinguished cocycles of a piece form a basis of the
// relative top cohomology H^D(star, boundary); invariant under translation,
// so callers may check only one piece per (d, w)
bool piece_basis_certificate(const CollapsePiece& piece) {
    const FaceSet& fs = piece.star.faces();
    const FaceSet& fb = piece.boundary.faces();
    int topd = fs.top_dim();
    std::vector<std::vector<int32_t>> keep(topd + 1);
    for (int k = 0; k <= topd; ++k)
        for (size_t i = 0; i < fs.count(k); ++i)
            if (fb.find(k, fs.face(k, i)) < 0) keep[k].push_back(static_cast<int32_t>(i));
    auto rel = relative_boundary_matrix(fs, topd, keep);
    CokernelBasis basis(rel.transposed());
    if (!basis.torsion().empty()) return false;
    std::vector<int32_t> poset_to_local(
        1 + *std::max_element(piece.vertex_to_poset.begin(), piece.vertex_to_poset.end()), -1);
    for (size_t i = 0; i < piece.vertex_to_poset.size(); ++i)
        poset_to_local[piece.vertex_to_poset[i]] = static_cast<int32_t>(i);
    std::vector<std::vector<Int>> cols;
    for (const auto& face : piece.cocycle_faces) {
        std::vector<int32_t> local;
        for (int32_t pv : face) local.push_back(poset_to_local[pv]);
        std::sort(local.begin(), local.end());
        long idx = fs.find(topd, local.data());
        if (idx < 0) return false;
        auto it =
            std::lower_bound(keep[topd].begin(), keep[topd].end(), static_cast<int32_t>(idx));
        if (it == keep[topd].end() || *it != static_cast<int32_t>(idx)) return false;
        std::vector<Int> v(keep[topd].size(), 0);
        v[it - keep[topd].begin()] = 1;
        cols.push_back(basis.express(v));
    }
    if (basis.free_rank() != static_cast<long>(cols.size())) return false;
    std::vector<std::vector<Int>> dense(basis.free_rank(), std::vector<Int>(cols.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[c].size(); ++r) dense[r][c] = cols[c][r];
    auto snf = dense_smith(std::move(dense));
    return static_cast<long>(snf.size()) == static_cast<long>(cols.size()) && all_ones(snf);
}

}  // namespace

CollapseIsoReport verify_collapse_iso(const std::vector<long>& ns, int integral_max) {
    CollapseIsoReport rpt;
    rpt.ns = ns;
    auto ps = build_pieces(ns);
    rpt.n = ps.n;
    for (const auto& piece : ps.pieces)
        rpt.summands += static_cast<long>(piece.cocycle_faces.size());
    rpt.square = rpt.summands == ps.expected_rank;
    rpt.disjoint = disjointness_check(ps);
    rpt.piece_bases_ok = true;
    {
        std::set<std::pair<long, std::string>> checked;
        for (const auto& piece : ps.pieces)
            if (checked.insert({piece.d, piece.w}).second)
                if (!piece_basis_certificate(piece)) rpt.piece_bases_ok = false;
    }

    if (ps.n <= integral_max) {
        auto cx = order_complex(ps.poset);
        const FaceSet& fs = cx.faces();
        int top = fs.top_dim();
        std::vector<TopCocycle> cocycles;
        for (const auto& piece : ps.pieces)
            for (size_t vi = 0; vi < piece.cocycle_faces.size(); ++vi) {
                long idx = fs.find(top, piece.cocycle_faces[vi].data());
                if (idx < 0) throw usage_error("verify_collapse_iso: cocycle face missing");
                cocycles.push_back({piece.cocycle_labels[vi], {{static_cast<size_t>(idx), 1}}});
            }
        auto map = induced_on_top_cohomology(cx, cocycles);
        std::vector<std::vector<Int>> dense = map.matrix;
        rpt.snf = dense_smith(std::move(dense));
        rpt.unimodular = all_ones(rpt.snf) &&
                         static_cast<long>(rpt.snf.size()) == rpt.summands &&
                         map.h_top_free_rank == rpt.summands && map.h_top_torsion.empty();
        rpt.evidence = "integral-snf";
        rpt.passed = rpt.square && rpt.disjoint && rpt.piece_bases_ok && rpt.unimodular;
        return rpt;
    }

    // modular + rational path: pair the cocycles with explicit tree cycles
    std::map<std::vector<int32_t>, long> cocycle_of_face;
    std::vector<const std::vector<int32_t>*> faces;
    for (const auto& piece : ps.pieces)
        for (const auto& f : piece.cocycle_faces) {
            cocycle_of_face[f] = static_cast<long>(faces.size());
            faces.push_back(&f);
        }
    SparseIntMatrix pairing;
    pairing.rows = faces.size();
    pairing.cols = faces.size();
    pairing.col.resize(faces.size());
    for (size_t j = 0; j < faces.size(); ++j) {
        std::vector<SetPartition> parts;
        for (int32_t pv : *faces[j]) parts.push_back(ps.poset.at(pv));
        PartitionChain chain(static_cast<int>(ps.n), std::move(parts));
        auto edges = tree_from_maximal_chain(chain);
        auto cycle = tree_cycle(ps.poset, edges);
        Int diag = pair_cochain_cycle(*faces[j], cycle);
        if (diag != 1 && diag != -1)
            throw usage_error("verify_collapse_iso: tree cycle does not pair +-1 with its face");
        for (const auto& [f, c] : cycle) {
            auto it = cocycle_of_face.find(f);
            if (it != cocycle_of_face.end())
                pairing.col[j].push_back({static_cast<int32_t>(it->second), c});
        }
        std::sort(pairing.col[j].begin(), pairing.col[j].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    rpt.evidence = "modular+rational";
    bool full = true;
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        long r = fp_rank(pairing, p);
        rpt.modular_ranks.push_back({p, r});
        if (r != rpt.summands) full = false;
        if (r == rpt.summands) rpt.rational_rank = rpt.summands;  // rank over Q >= rank mod p
    }
    rpt.full_rank = full && rpt.rational_rank == rpt.summands;
    rpt.passed = rpt.square && rpt.disjoint && rpt.piece_bases_ok && rpt.full_rank;
    return rpt;
}

MainTheoremReport verify_main_theorem(const std::vector<long>& ns, size_t subgroup_budget) {
    MainTheoremReport rpt;
    rpt.ns = ns;
    rpt.collapse = verify_collapse_iso(ns);
    auto ps = build_pieces(ns);
    PermGroup yg = young(std::vector<int>(ns.begin(), ns.end()));
    if (yg.order() > subgroup_budget)
        throw resource_error("verify_main_theorem: Young group exceeds subgroup budget");

    // one summand per (d, w): the untranslated piece carries the Sigma_d-action
    std::map<std::pair<long, std::string>, const CollapsePiece*> summands;
    for (const auto& piece : ps.pieces)
        if (piece.coset_rep.is_identity()) summands[{piece.d, piece.w}] = &piece;

    auto subgroups = subgroup_conjugacy_reps(yg, subgroup_budget);
    rpt.fixed_ok = true;
    for (const auto& h : subgroups) {
        SubgroupFixedRow row;
        row.order = h.order();
        std::string desc;
        for (const auto& gg : h.generators()) desc += gg.cycle_string() + " ";
        row.subgroup = desc.empty() ? "trivial" : desc;
        auto fixed = fixed_subposet(ps.poset, h);
        row.lhs = reduced_homology(order_complex(fixed));
        for (const auto& [key, piece] : summands) {
            long d = key.first;
            PermGroup diag = diagonal_sigma_d(static_cast<int>(d), static_cast<int>(ps.n));
            auto reps = subconjugators(yg, h, diag);
            for (const auto& g : reps) {
                Permutation gi = g.inverse();
                std::vector<int32_t> fixed_verts;
                for (size_t vi = 0; vi < piece->vertex_to_poset.size(); ++vi) {
                    const auto& part = ps.poset.at(piece->vertex_to_poset[vi]);
                    bool ok = true;
                    for (const auto& hg : h.generators())
                        if (!(part.apply(gi.compose(hg).compose(g)) == part)) {
                            ok = false;
                            break;
                        }
                    if (ok) fixed_verts.push_back(static_cast<int32_t>(vi));
                }
                auto [star_fixed, vmap] = piece->star.induced(fixed_verts);
                auto [bd_fixed, vmap2] = piece->boundary.induced(fixed_verts);
                row.rhs.merge(relative_homology(star_fixed, bd_fixed));
            }
        }
        row.match = row.lhs == row.rhs;
        if (!row.match) rpt.fixed_ok = false;
        rpt.fixed_rows.push_back(std::move(row));
    }

    rpt.quotient_lhs = quotient_homology(pi_n_action(ps.poset, yg));
    for (const auto& [key, piece] : summands) {
        long d = key.first;
        if (d == 1) {
            rpt.quotient_rhs.merge(relative_homology(piece->star, piece->boundary));
        } else {
            EquivariantComplex star_eq;
            star_eq.complex = piece->star;
            star_eq.group = diagonal_sigma_d(static_cast<int>(d), static_cast<int>(ps.n));
            std::vector<int32_t> poset_to_local(ps.poset.size(), -1);
            for (size_t vi = 0; vi < piece->vertex_to_poset.size(); ++vi)
                poset_to_local[piece->vertex_to_poset[vi]] = static_cast<int32_t>(vi);
            for (const auto& gen : star_eq.group.generators()) {
                std::vector<int32_t> m(piece->vertex_to_poset.size());
                for (size_t vi = 0; vi < piece->vertex_to_poset.size(); ++vi) {
                    auto img = ps.poset.at(piece->vertex_to_poset[vi]).apply(gen);
                    long pidx = ps.poset.index_of(img);
                    if (pidx < 0 || poset_to_local[pidx] < 0)
                        throw usage_error("verify_main_theorem: star is not invariant");
                    m[vi] = poset_to_local[pidx];
                }
                star_eq.generator_vertex_maps.push_back(std::move(m));
            }
            rpt.quotient_rhs.merge(quotient_relative_homology(star_eq, piece->boundary));
        }
    }
    rpt.quotient_ok = rpt.quotient_lhs == rpt.quotient_rhs;
    rpt.passed = rpt.collapse.passed && rpt.fixed_ok && rpt.quotient_ok;
    return rpt;
}

}  // namespace pb
