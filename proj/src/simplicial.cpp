#include "pb/simplicial.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace pb {

std::vector<std::vector<int32_t>> Poset::down() const {
    std::vector<std::vector<int32_t>> d(size);
    for (size_t i = 0; i < size; ++i)
        for (int32_t j : up[i]) d[j].push_back(static_cast<int32_t>(i));
    for (auto& v : d) std::sort(v.begin(), v.end());
    return d;
}

Poset poset_of_partitions(const PartitionPoset& p) {
    Poset out;
    out.size = p.size();
    out.up.resize(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        const auto& a = p.at(i);
        for (size_t j = i + 1; j < p.size(); ++j) {
            const auto& b = p.at(j);
            if (b.rank() > a.rank() && leq(a, b)) out.up[i].push_back(static_cast<int32_t>(j));
        }
    }
    return out;
}

void FaceSet::set_dim(int k, std::vector<int32_t> flat) {
    if (static_cast<int>(levels_.size()) <= k) levels_.resize(k + 1);
    levels_[k] = std::move(flat);
}

size_t FaceSet::count(int k) const {
    if (k < 0 || k >= static_cast<int>(levels_.size())) return 0;
    return levels_[k].size() / (k + 1);
}

size_t FaceSet::total() const {
    size_t t = 0;
    for (int k = 0; k <= top_dim(); ++k) t += count(k);
    return t;
}

long FaceSet::find(int k, const int32_t* verts) const {
    if (k < 0 || k >= static_cast<int>(levels_.size())) return -1;
    const auto& flat = levels_[k];
    size_t w = k + 1;
    size_t lo = 0, hi = flat.size() / w;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        const int32_t* f = flat.data() + mid * w;
        if (std::lexicographical_compare(f, f + w, verts, verts + w))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < flat.size() / w && std::equal(verts, verts + w, flat.data() + lo * w))
        return static_cast<long>(lo);
    return -1;
}

SimplicialComplex SimplicialComplex::from_facets(int n_vertices,
                                                 std::vector<std::vector<int32_t>> facets,
                                                 int shift) {
    SimplicialComplex c;
    c.n_vertices_ = n_vertices;
    c.shift_ = shift;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int32_t v : f)
            if (v < 0 || v >= n_vertices) throw usage_error("from_facets: vertex out of range");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // drop non-maximal entries
    std::vector<std::vector<int32_t>> maximal;
    for (const auto& f : facets) {
        bool contained = false;
        for (const auto& g : facets) {
            if (&f == &g || g.size() < f.size()) continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end()) && g != f) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(f);
    }
    c.facets_ = std::move(maximal);
    return c;
}

SimplicialComplex SimplicialComplex::empty_complex(int shift) {
    SimplicialComplex c;
    c.shift_ = shift;
    return c;
}

SimplicialComplex SimplicialComplex::virtual_s_minus_2() { return empty_complex(-1); }

SimplicialComplex SimplicialComplex::simplex(int m) {
    std::vector<int32_t> all(m + 1);
    for (int i = 0; i <= m; ++i) all[i] = i;
    return from_facets(m + 1, {all});
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(int m) {
    if (m == 0) return empty_complex();
    std::vector<std::vector<int32_t>> facets;
    for (int skip = 0; skip <= m; ++skip) {
        std::vector<int32_t> f;
        for (int i = 0; i <= m; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return from_facets(m + 1, std::move(facets));
}

SimplicialComplex SimplicialComplex::point() { return simplex(0); }

int SimplicialComplex::dim() const {
    if (cache_) return cache_->top_dim();
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

void SimplicialComplex::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_vertices_)
        throw usage_error("set_labels: wrong length");
    labels_ = std::move(labels);
}

void SimplicialComplex::set_grades(std::vector<int32_t> grades) {
    if (static_cast<int>(grades.size()) != n_vertices_)
        throw usage_error("set_grades: wrong length");
    grades_ = std::move(grades);
}

const FaceSet& SimplicialComplex::faces() const {
    if (cache_) return *cache_;
    auto fs = std::make_shared<FaceSet>();
    // downward closure from facets, one dimension at a time
    int top = dim();
    std::vector<std::vector<int32_t>> per_dim(std::max(top + 1, 0));
    for (const auto& f : facets_) {
        int k = static_cast<int>(f.size()) - 1;
        per_dim[k].insert(per_dim[k].end(), f.begin(), f.end());
    }
    auto sort_unique = [](std::vector<int32_t>& flat, int k) {
        size_t w = k + 1;
        size_t cnt = flat.size() / w;
        std::vector<size_t> idx(cnt);
        for (size_t i = 0; i < cnt; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w,
                                                flat.begin() + b * w, flat.begin() + (b + 1) * w);
        });
        std::vector<int32_t> out;
        out.reserve(flat.size());
        for (size_t t = 0; t < cnt; ++t) {
            size_t i = idx[t];
            if (!out.empty() &&
                std::equal(flat.begin() + i * w, flat.begin() + (i + 1) * w, out.end() - w))
                continue;
            out.insert(out.end(), flat.begin() + i * w, flat.begin() + (i + 1) * w);
        }
        flat = std::move(out);
    };
    for (int k = top; k >= 0; --k) {
        sort_unique(per_dim[k], k);
        if (k == 0) break;
        // add all facets of k-faces to level k-1
        size_t w = k + 1;
        auto& src = per_dim[k];
        auto& dst = per_dim[k - 1];
        for (size_t i = 0; i * w < src.size(); ++i) {
            const int32_t* f = src.data() + i * w;
            for (size_t skip = 0; skip < w; ++skip)
                for (size_t t = 0; t < w; ++t)
                    if (t != skip) dst.push_back(f[t]);
        }
    }
    for (int k = 0; k <= top; ++k) fs->set_dim(k, std::move(per_dim[k]));
    cache_ = std::move(fs);
    return *cache_;
}

std::vector<size_t> SimplicialComplex::f_vector() const {
    const auto& fs = faces();
    std::vector<size_t> out;
    for (int k = 0; k <= fs.top_dim(); ++k) out.push_back(fs.count(k));
    return out;
}

bool SimplicialComplex::has_face(const std::vector<int32_t>& face) const {
    return faces().find(static_cast<int>(face.size()) - 1, face.data()) >= 0;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    for (const auto& f : facets())
        if (!other.has_face(f)) return false;
    return true;
}

SimplicialComplex SimplicialComplex::from_all_faces(int n_vertices, FaceSet faces, int shift) {
    SimplicialComplex c;
    c.n_vertices_ = n_vertices;
    c.shift_ = shift;
    c.cache_ = std::make_shared<FaceSet>(std::move(faces));
    // facets: faces with no coface one dimension up
    const FaceSet& fs = *c.cache_;
    for (int k = 0; k <= fs.top_dim(); ++k) {
        size_t w = k + 1;
        std::vector<char> maximal(fs.count(k), 1);
        if (k + 1 <= fs.top_dim()) {
            size_t cw = k + 2;
            for (size_t i = 0; i < fs.count(k + 1); ++i) {
                const int32_t* f = fs.face(k + 1, i);
                std::vector<int32_t> sub(w);
                for (size_t skip = 0; skip < cw; ++skip) {
                    size_t t2 = 0;
                    for (size_t t = 0; t < cw; ++t)
                        if (t != skip) sub[t2++] = f[t];
                    long idx = fs.find(k, sub.data());
                    if (idx >= 0) maximal[idx] = 0;
                }
            }
        }
        for (size_t i = 0; i < fs.count(k); ++i)
            if (maximal[i])
                c.facets_.emplace_back(fs.face(k, i), fs.face(k, i) + w);
    }
    std::sort(c.facets_.begin(), c.facets_.end());
    return c;
}

std::pair<SimplicialComplex, std::vector<int32_t>> SimplicialComplex::induced(
    const std::vector<int32_t>& vertex_subset) const {
    std::vector<int32_t> keep = vertex_subset;
    std::sort(keep.begin(), keep.end());
    std::vector<int32_t> newid(n_vertices_, -1);
    for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int32_t>(i);
    const auto& fs = faces();
    FaceSet out;
    for (int k = 0; k <= fs.top_dim(); ++k) {
        size_t w = k + 1;
        std::vector<int32_t> flat;
        for (size_t i = 0; i < fs.count(k); ++i) {
            const int32_t* f = fs.face(k, i);
            bool ok = true;
            for (size_t t = 0; t < w; ++t)
                if (newid[f[t]] < 0) {
                    ok = false;
                    break;
                }
            if (ok)
                for (size_t t = 0; t < w; ++t) flat.push_back(newid[f[t]]);
        }
        if (!flat.empty()) out.set_dim(k, std::move(flat));
    }
    auto sub = from_all_faces(static_cast<int>(keep.size()), std::move(out), shift_);
    if (!grades_.empty()) {
        std::vector<int32_t> g(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) g[i] = grades_[keep[i]];
        sub.set_grades(std::move(g));
    }
    if (!labels_.empty()) {
        std::vector<std::string> l(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) l[i] = labels_[keep[i]];
        sub.set_labels(std::move(l));
    }
    return {std::move(sub), std::move(keep)};
}

void SimplicialComplex::serialize(std::ostream& os) const {
    os << n_vertices_ << ' ' << dim() << ' ' << shift_ << '\n';
    auto fc = facets_;
    std::sort(fc.begin(), fc.end());
    for (const auto& f : fc) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << '\n';
    }
}

SimplicialComplex SimplicialComplex::deserialize(std::istream& is) {
    int nv, d, sh;
    if (!(is >> nv >> d >> sh)) throw usage_error("deserialize: bad header");
    std::string line;
    std::getline(is, line);
    std::vector<std::vector<int32_t>> facets;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::vector<int32_t> f;
        int32_t v;
        while (ss >> v) f.push_back(v);
        if (!f.empty()) facets.push_back(std::move(f));
    }
    return from_facets(nv, std::move(facets), sh);
}

SimplicialComplex join_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    auto copy_with_shift = [](const SimplicialComplex& src, int shift) {
        auto out = SimplicialComplex::from_all_faces(src.n_vertices(), src.faces(), shift);
        if (!src.grades().empty()) out.set_grades(src.grades());
        if (!src.labels().empty()) out.set_labels(src.labels());
        return out;
    };
    if (a.is_empty() && a.n_vertices() == 0) return copy_with_shift(b, a.shift() + b.shift());
    if (b.is_empty() && b.n_vertices() == 0) return copy_with_shift(a, a.shift() + b.shift());
    const FaceSet& fa = a.faces();
    const FaceSet& fb = b.faces();
    int off = a.n_vertices();
    FaceSet out;
    int top = fa.top_dim() + fb.top_dim() + 1;
    for (int k = 0; k <= top; ++k) {
        size_t w = k + 1;
        std::vector<int32_t> flat;
        // pure A faces
        if (k <= fa.top_dim()) flat.insert(flat.end(), fa.flat(k).begin(), fa.flat(k).end());
        // mixed: i-face of A then j-face of B, i+j = k-1; A ids < B ids so
        // generated tuples are sorted; enumerate in lex order directly
        for (int i = 0; i < k; ++i) {
            int j = k - 1 - i;
            if (i > fa.top_dim() || j > fb.top_dim()) continue;
            for (size_t x = 0; x < fa.count(i); ++x) {
                const int32_t* f = fa.face(i, x);
                for (size_t y = 0; y < fb.count(j); ++y) {
                    const int32_t* g = fb.face(j, y);
                    for (int t = 0; t <= i; ++t) flat.push_back(f[t]);
                    for (int t = 0; t <= j; ++t) flat.push_back(g[t] + off);
                }
            }
        }
        // pure B faces
        if (k <= fb.top_dim())
            for (size_t y = 0; y < fb.count(k); ++y) {
                const int32_t* g = fb.face(k, y);
                for (int t = 0; t <= k; ++t) flat.push_back(g[t] + off);
            }
        // sort lexicographically
        size_t cnt = flat.size() / w;
        std::vector<size_t> idx(cnt);
        for (size_t t = 0; t < cnt; ++t) idx[t] = t;
        std::sort(idx.begin(), idx.end(), [&](size_t p, size_t q) {
            return std::lexicographical_compare(flat.begin() + p * w, flat.begin() + (p + 1) * w,
                                                flat.begin() + q * w, flat.begin() + (q + 1) * w);
        });
        std::vector<int32_t> sorted;
        sorted.reserve(flat.size());
        for (size_t t : idx)
            sorted.insert(sorted.end(), flat.begin() + t * w, flat.begin() + (t + 1) * w);
        if (!sorted.empty()) out.set_dim(k, std::move(sorted));
    }
    auto joined = SimplicialComplex::from_all_faces(a.n_vertices() + b.n_vertices(),
                                                    std::move(out), a.shift() + b.shift());
    if (!a.grades().empty() && !b.grades().empty()) {
        int32_t amax = 0;
        for (int32_t g : a.grades()) amax = std::max(amax, g);
        std::vector<int32_t> grades = a.grades();
        for (int32_t g : b.grades()) grades.push_back(g + amax + 1);
        joined.set_grades(std::move(grades));
    }
    return joined;
}

SimplicialComplex order_complex(const Poset& p, size_t face_cap) {
    for (size_t i = 0; i < p.size; ++i)
        for (int32_t j : p.up[i])
            if (j <= static_cast<int32_t>(i))
                throw usage_error("order_complex: poset must be index-sorted (i<j when a_i<a_j)");
    FaceSet out;
    size_t total = 0;
    std::vector<int32_t> prev;  // flat list of chains of current length
    // chains of length 1
    std::vector<int32_t> cur(p.size);
    for (size_t i = 0; i < p.size; ++i) cur[i] = static_cast<int32_t>(i);
    int k = 0;
    while (!cur.empty()) {
        total += cur.size() / (k + 1);
        if (total > face_cap)
            throw resource_error("order_complex: face count exceeds cap " +
                                 std::to_string(face_cap));
        out.set_dim(k, cur);  // copy; extended below
        // extend every chain by each upper neighbor of its last element
        std::vector<int32_t> next;
        size_t w = k + 1;
        for (size_t i = 0; i * w < cur.size(); ++i) {
            const int32_t* c = cur.data() + i * w;
            int32_t last = c[w - 1];
            for (int32_t j : p.up[last]) {
                next.insert(next.end(), c, c + w);
                next.push_back(j);
            }
        }
        cur = std::move(next);
        ++k;
    }
    // chains generated in lex order already (cur starts sorted; extension by
    // sorted up-lists preserves lex order)
    return SimplicialComplex::from_all_faces(static_cast<int>(p.size), std::move(out));
}

SimplicialComplex order_complex(const PartitionPoset& p, size_t face_cap) {
    auto poset = poset_of_partitions(p);
    auto c = order_complex(poset, face_cap);
    std::vector<int32_t> grades(p.size());
    std::vector<std::string> labels(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        grades[i] = p.at(i).rank();
        labels[i] = p.at(i).to_string();
    }
    if (p.size()) {
        c.set_grades(std::move(grades));
        c.set_labels(std::move(labels));
    }
    return c;
}

StarLink star_and_link(const Poset& p, const std::vector<int32_t>& chain) {
    if (chain.empty()) throw usage_error("star_and_link: empty chain");
    // validate chain
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto& u = p.up[chain[i]];
        if (!std::binary_search(u.begin(), u.end(), chain[i + 1]))
            throw usage_error("star_and_link: input is not a chain");
    }
    auto down = p.down();
    StarLink out;
    for (size_t i = 0; i < p.size; ++i) {
        bool ok = true;
        for (int32_t c : chain) {
            if (static_cast<int32_t>(i) == c) continue;
            const auto& u = p.up[c];
            const auto& d = down[c];
            if (!std::binary_search(u.begin(), u.end(), static_cast<int32_t>(i)) &&
                !std::binary_search(d.begin(), d.end(), static_cast<int32_t>(i))) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.star.push_back(static_cast<int32_t>(i));
            if (!std::binary_search(chain.begin(), chain.end(), static_cast<int32_t>(i)))
                out.link.push_back(static_cast<int32_t>(i));
        }
    }
    return out;
}

StarBoundary star_boundary(const PartitionPoset& pi_n, const PartitionChain& chain) {
    if (chain.parts.empty()) throw usage_error("star_boundary: empty chain");
    if (!is_binary_chain(chain)) throw usage_error("star_boundary: chain is not binary");
    std::vector<int32_t> chain_idx;
    for (const auto& p : chain.parts) {
        long idx = pi_n.index_of(p);
        if (idx < 0) throw usage_error("star_boundary: chain element not in poset");
        chain_idx.push_back(static_cast<int32_t>(idx));
    }
    auto poset = poset_of_partitions(pi_n);
    auto sl = star_and_link(poset, chain_idx);
    // induced poset on star vertices
    auto full = order_complex(pi_n);
    auto [star_cx, vmap] = full.induced(sl.star);
    // boundary: faces of star not containing the chain as a subset
    std::vector<int32_t> chain_new;
    {
        std::vector<int32_t> inv(pi_n.size(), -1);
        for (size_t i = 0; i < vmap.size(); ++i) inv[vmap[i]] = static_cast<int32_t>(i);
        for (int32_t c : chain_idx) chain_new.push_back(inv[c]);
        std::sort(chain_new.begin(), chain_new.end());
    }
    const FaceSet& fs = star_cx.faces();
    FaceSet bd;
    for (int k = 0; k <= fs.top_dim(); ++k) {
        size_t w = k + 1;
        std::vector<int32_t> flat;
        for (size_t i = 0; i < fs.count(k); ++i) {
            const int32_t* f = fs.face(k, i);
            if (!std::includes(f, f + w, chain_new.begin(), chain_new.end()))
                flat.insert(flat.end(), f, f + w);
        }
        if (!flat.empty()) bd.set_dim(k, std::move(flat));
    }
    StarBoundary out;
    auto bd_cx = SimplicialComplex::from_all_faces(star_cx.n_vertices(), std::move(bd));
    if (!star_cx.grades().empty()) bd_cx.set_grades(star_cx.grades());
    out.star = std::move(star_cx);
    out.boundary = std::move(bd_cx);
    out.vertex_to_poset = vmap;
    return out;
}

SimplicialComplex barycentric(const SimplicialComplex& x, size_t face_cap) {
    const FaceSet& fs = x.faces();
    size_t nv = fs.total();
    if (nv == 0) return SimplicialComplex::empty_complex(x.shift());
    // vertex ids: dimension-major, lex within dimension (the FaceSet order)
    std::vector<size_t> level_offset(fs.top_dim() + 1, 0);
    for (int k = 1; k <= fs.top_dim(); ++k) level_offset[k] = level_offset[k - 1] + fs.count(k - 1);
    // containment poset up-lists
    Poset p;
    p.size = nv;
    p.up.resize(nv);
    for (int k = 0; k <= fs.top_dim(); ++k) {
        size_t w = k + 1;
        for (size_t i = 0; i < fs.count(k); ++i) {
            const int32_t* f = fs.face(k, i);
            for (int k2 = k + 1; k2 <= fs.top_dim(); ++k2) {
                size_t w2 = k2 + 1;
                for (size_t j = 0; j < fs.count(k2); ++j) {
                    const int32_t* g = fs.face(k2, j);
                    if (std::includes(g, g + w2, f, f + w))
                        p.up[level_offset[k] + i].push_back(
                            static_cast<int32_t>(level_offset[k2] + j));
                }
            }
        }
    }
    auto sd = order_complex(p, face_cap);
    auto out = SimplicialComplex::from_all_faces(sd.n_vertices(), sd.faces(), x.shift());
    std::vector<int32_t> grades(nv);
    for (int k = 0; k <= fs.top_dim(); ++k)
        for (size_t i = 0; i < fs.count(k); ++i) grades[level_offset[k] + i] = k;
    out.set_grades(std::move(grades));
    return out;
}

SimplicialComplex unreduced_suspension(const SimplicialComplex& x) {
    return join_complex(SimplicialComplex::boundary_of_simplex(1), x);
}

std::vector<std::vector<int32_t>> EquivariantComplex::element_vertex_maps() const {
    const auto& els = group.elements();
    int nv = complex.n_vertices();
    std::map<Permutation, std::vector<int32_t>> maps;
    std::vector<int32_t> id(nv);
    for (int i = 0; i < nv; ++i) id[i] = i;
    maps[Permutation(group.n())] = id;
    std::vector<Permutation> queue{Permutation(group.n())};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Permutation cur = queue[qi];
        const auto& cur_map = maps[cur];
        for (size_t gi = 0; gi < group.generators().size(); ++gi) {
            Permutation nxt = group.generators()[gi].compose(cur);
            if (maps.count(nxt)) continue;
            const auto& gmap = generator_vertex_maps[gi];
            std::vector<int32_t> m(nv);
            for (int v = 0; v < nv; ++v) m[v] = gmap[cur_map[v]];
            maps[nxt] = std::move(m);
            queue.push_back(nxt);
        }
    }
    std::vector<std::vector<int32_t>> out;
    out.reserve(els.size());
    for (const auto& e : els) {
        auto it = maps.find(e);
        if (it == maps.end()) throw usage_error("element_vertex_maps: generators do not generate");
        out.push_back(it->second);
    }
    return out;
}

void EquivariantComplex::validate() const {
    if (generator_vertex_maps.size() != group.generators().size())
        throw usage_error("EquivariantComplex: one vertex map per generator required");
    auto facets = complex.facets();
    std::sort(facets.begin(), facets.end());
    for (const auto& m : generator_vertex_maps) {
        if (static_cast<int>(m.size()) != complex.n_vertices())
            throw usage_error("EquivariantComplex: vertex map has wrong length");
        for (const auto& f : facets) {
            std::vector<int32_t> img;
            img.reserve(f.size());
            for (int32_t v : f) img.push_back(m[v]);
            std::sort(img.begin(), img.end());
            if (!std::binary_search(facets.begin(), facets.end(), img))
                throw usage_error("EquivariantComplex: generator does not preserve the complex");
        }
    }
}

EquivariantComplex join_equivariant(const EquivariantComplex& a, const EquivariantComplex& b) {
    if (!a.group.same_group(b.group))
        throw usage_error("join_equivariant: actions of different groups");
    EquivariantComplex out;
    out.complex = join_complex(a.complex, b.complex);
    out.group = a.group;
    int offa = a.complex.n_vertices();
    for (size_t gi = 0; gi < a.group.generators().size(); ++gi) {
        std::vector<int32_t> m = a.generator_vertex_maps[gi];
        for (int32_t v : b.generator_vertex_maps[gi]) m.push_back(v + offa);
        out.generator_vertex_maps.push_back(std::move(m));
    }
    return out;
}

EquivariantComplex barycentric(const EquivariantComplex& x) {
    EquivariantComplex out;
    out.complex = barycentric(x.complex);
    out.group = x.group;
    const FaceSet& fs = x.complex.faces();
    std::vector<size_t> level_offset(fs.top_dim() + 1, 0);
    for (int k = 1; k <= fs.top_dim(); ++k) level_offset[k] = level_offset[k - 1] + fs.count(k - 1);
    for (const auto& gmap : x.generator_vertex_maps) {
        std::vector<int32_t> m(fs.total());
        for (int k = 0; k <= fs.top_dim(); ++k) {
            size_t w = k + 1;
            std::vector<int32_t> img(w);
            for (size_t i = 0; i < fs.count(k); ++i) {
                const int32_t* f = fs.face(k, i);
                for (size_t t = 0; t < w; ++t) img[t] = gmap[f[t]];
                std::sort(img.begin(), img.end());
                long j = fs.find(k, img.data());
                if (j < 0) throw usage_error("barycentric: action does not preserve faces");
                m[level_offset[k] + i] = static_cast<int32_t>(level_offset[k] + j);
            }
        }
        out.generator_vertex_maps.push_back(std::move(m));
    }
    return out;
}

EquivariantComplex sphere_model(int d, int l, bool subdivide_sphere_factors) {
    if (d < 1 || l < 1) throw usage_error("sphere_model: d and l must be positive");
    PermGroup sd = symmetric_group(d);
    // trivial factor dDelta^l
    EquivariantComplex acc;
    acc.complex = SimplicialComplex::boundary_of_simplex(l);
    {
        std::vector<int32_t> g(acc.complex.n_vertices());
        for (int i = 0; i < acc.complex.n_vertices(); ++i) g[i] = 0;
        acc.complex.set_grades(std::move(g));
    }
    acc.group = sd;
    for (size_t gi = 0; gi < sd.generators().size(); ++gi) {
        std::vector<int32_t> id(acc.complex.n_vertices());
        for (int v = 0; v < acc.complex.n_vertices(); ++v) id[v] = v;
        acc.generator_vertex_maps.push_back(std::move(id));
    }
    // l copies of dDelta^{d-1} with the permutation action
    for (int copy = 0; copy < l; ++copy) {
        EquivariantComplex factor;
        factor.complex = SimplicialComplex::boundary_of_simplex(d - 1);
        factor.group = sd;
        for (const auto& gen : sd.generators()) {
            std::vector<int32_t> m(d);
            for (int v = 0; v < d; ++v) m[v] = gen.image(v + 1) - 1;
            factor.generator_vertex_maps.push_back(std::move(m));
        }
        if (d == 1) continue;  // dDelta^0 is empty: join unit
        if (!factor.complex.grades().empty() || true) {
            std::vector<int32_t> g(d, 0);
            factor.complex.set_grades(std::move(g));
        }
        if (subdivide_sphere_factors && d >= 2) factor = barycentric(factor);
        acc = join_equivariant(acc, factor);
    }
    return acc;
}

EquivariantComplex pi_n_action(const PartitionPoset& pi_n, const PermGroup& g, size_t face_cap) {
    EquivariantComplex out;
    out.complex = order_complex(pi_n, face_cap);
    out.group = g;
    for (const auto& gen : g.generators()) {
        std::vector<int32_t> m(pi_n.size());
        for (size_t i = 0; i < pi_n.size(); ++i) {
            long j = pi_n.index_of(pi_n.at(i).apply(gen));
            if (j < 0) throw usage_error("pi_n_action: action does not preserve the poset");
            m[i] = static_cast<int32_t>(j);
        }
        out.generator_vertex_maps.push_back(std::move(m));
    }
    return out;
}

}  // namespace pb
