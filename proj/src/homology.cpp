#include "pb/homology.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace pb {

void HomologySummary::add(int degree, long betti, std::vector<Int> torsion) {
    if (betti == 0 && torsion.empty()) return;
    auto& d = by_degree[degree];
    d.betti += betti;
    d.torsion.insert(d.torsion.end(), torsion.begin(), torsion.end());
    std::sort(d.torsion.begin(), d.torsion.end());
    if (d.betti == 0 && d.torsion.empty()) by_degree.erase(degree);
}

HomologySummary& HomologySummary::merge(const HomologySummary& o) {
    for (const auto& [k, d] : o.by_degree) add(k, d.betti, d.torsion);
    return *this;
}

HomologySummary HomologySummary::shifted(int delta) const {
    HomologySummary out;
    for (const auto& [k, d] : by_degree) out.by_degree[k + delta] = d;
    return out;
}

std::string HomologySummary::to_string() const {
    if (by_degree.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, d] : by_degree) {
        if (!first) os << ", ";
        first = false;
        os << "H~" << k << " = ";
        bool plus = false;
        if (d.betti > 0) {
            os << "Z";
            if (d.betti > 1) os << "^" << d.betti;
            plus = true;
        }
        for (const auto& t : d.torsion) {
            if (plus) os << " + ";
            os << "Z/" << t;
            plus = true;
        }
    }
    return os.str();
}

HomologySummary HomologySummary::sphere(int dim) {
    HomologySummary s;
    s.add(dim, 1);
    return s;
}

HomologySummary HomologySummary::scaled(long copies) const {
    HomologySummary out;
    if (copies <= 0) return out;
    for (const auto& [k, d] : by_degree) {
        std::vector<Int> tor;
        for (long c = 0; c < copies; ++c) tor.insert(tor.end(), d.torsion.begin(), d.torsion.end());
        out.add(k, d.betti * copies, tor);
    }
    return out;
}

HomologySummary HomologySummary::join(const HomologySummary& a, const HomologySummary& b) {
    HomologySummary out;
    for (const auto& [p, dp] : a.by_degree) {
        for (const auto& [q, dq] : b.by_degree) {
            // tensor part in degree p+q+1
            std::vector<Int> tor;
            for (long i = 0; i < dp.betti; ++i)
                tor.insert(tor.end(), dq.torsion.begin(), dq.torsion.end());
            for (long i = 0; i < dq.betti; ++i)
                tor.insert(tor.end(), dp.torsion.begin(), dp.torsion.end());
            for (const auto& d : dp.torsion)
                for (const auto& e : dq.torsion) tor.push_back(boost::multiprecision::gcd(d, e));
            out.add(p + q + 1, dp.betti * dq.betti, tor);
            // Tor part in degree p+q+2
            std::vector<Int> tor2;
            for (const auto& d : dp.torsion)
                for (const auto& e : dq.torsion) tor2.push_back(boost::multiprecision::gcd(d, e));
            out.add(p + q + 2, 0, tor2);
        }
    }
    return out;
}

void SparseIntMatrix::set(size_t r, size_t c, Int v) {
    if (v == 0) return;
    if (col.size() < cols) col.resize(cols);
    auto& cc = col[c];
    auto it = std::lower_bound(cc.begin(), cc.end(), r,
                               [](const auto& e, size_t rr) { return e.first < (int32_t)rr; });
    if (it != cc.end() && it->first == static_cast<int32_t>(r))
        it->second = std::move(v);
    else
        cc.insert(it, {static_cast<int32_t>(r), std::move(v)});
}

size_t SparseIntMatrix::nnz() const {
    size_t t = 0;
    for (const auto& c : col) t += c.size();
    return t;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
    SparseIntMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.col.resize(rows);
    for (size_t c = 0; c < col.size(); ++c)
        for (const auto& [r, v] : col[c]) t.col[r].push_back({static_cast<int32_t>(c), v});
    for (auto& cc : t.col)
        std::sort(cc.begin(), cc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return t;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Int>>& d) {
    SparseIntMatrix m;
    m.rows = d.size();
    m.cols = d.empty() ? 0 : d[0].size();
    m.col.resize(m.cols);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            if (d[r][c] != 0) m.col[c].push_back({static_cast<int32_t>(r), d[r][c]});
    return m;
}

std::vector<Int> dense_smith(std::vector<std::vector<Int>> m,
                             std::vector<std::vector<Int>>* row_transform) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::vector<Int>> u;
    if (row_transform) {
        u.assign(rows, std::vector<Int>(rows, 0));
        for (size_t i = 0; i < rows; ++i) u[i][i] = 1;
    }
    auto row_add = [&](size_t dst, size_t src, const Int& c) {
        for (size_t j = 0; j < cols; ++j) m[dst][j] += c * m[src][j];
        if (row_transform)
            for (size_t j = 0; j < rows; ++j) u[dst][j] += c * u[src][j];
    };
    auto row_swap = [&](size_t a, size_t b) {
        std::swap(m[a], m[b]);
        if (row_transform) std::swap(u[a], u[b]);
    };
    auto col_add = [&](size_t dst, size_t src, const Int& c) {
        for (size_t i = 0; i < rows; ++i) m[i][dst] += c * m[i][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    };
    std::vector<Int> factors;
    size_t t = 0;
    while (t < rows && t < cols) {
        // find nonzero of minimal absolute value in the active submatrix
        size_t bi = rows, bj = cols;
        Int best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (best == 0 || abs(m[i][j]) < abs(best))) {
                    best = m[i][j];
                    bi = i;
                    bj = j;
                }
        if (bi == rows) break;  // all zero
        row_swap(t, bi);
        col_swap(t, bj);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i)
            if (m[i][t] != 0) {
                Int q = m[i][t] / m[t][t];
                row_add(i, t, -q);
                if (m[i][t] != 0) clean = false;
            }
        for (size_t j = t + 1; j < cols; ++j)
            if (m[t][j] != 0) {
                Int q = m[t][j] / m[t][t];
                col_add(j, t, -q);
                if (m[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // smaller pivot now exists; repeat
        // enforce divisibility
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    row_add(t, i, 1);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        factors.push_back(abs(m[t][t]));
        ++t;
    }
    if (row_transform) *row_transform = std::move(u);
    return factors;
}

namespace {

// Sparse elimination engine with greedy unit pivots.  Row operations can be
// journaled for cokernel-coordinate computations.
struct Elimination {
    size_t rows, cols;
    std::vector<std::vector<std::pair<int32_t, Int>>> row;  // sorted by col
    std::vector<std::vector<int32_t>> col_rows;              // superset, lazily cleaned
    std::vector<int32_t> col_nnz, row_nnz;
    std::vector<char> row_retired, col_retired;
    std::vector<std::pair<int32_t, int32_t>> unit_pivots;  // (row, col)
    std::vector<std::tuple<int32_t, int32_t, Int>>* journal = nullptr;

    explicit Elimination(SparseIntMatrix m)
        : rows(m.rows), cols(m.cols), col_rows(m.cols), col_nnz(m.cols, 0), row_nnz(m.rows, 0),
          row_retired(m.rows, 0), col_retired(m.cols, 0) {
        row.resize(rows);
        for (size_t c = 0; c < m.col.size(); ++c)
            for (auto& [r, v] : m.col[c]) {
                row[r].push_back({static_cast<int32_t>(c), std::move(v)});
                col_rows[c].push_back(r);
                ++col_nnz[c];
                ++row_nnz[r];
            }
        for (auto& rr : row)
            std::sort(rr.begin(), rr.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    const Int* entry(int32_t r, int32_t c) const {
        const auto& rr = row[r];
        auto it = std::lower_bound(rr.begin(), rr.end(), c,
                                   [](const auto& e, int32_t cc) { return e.first < cc; });
        if (it != rr.end() && it->first == c) return &it->second;
        return nullptr;
    }

    // row[dst] += coeff * row[src]
    void row_op(int32_t dst, int32_t src, const Int& coeff) {
        if (journal) journal->push_back({dst, src, coeff});
        const auto& s = row[src];
        auto& d = row[dst];
        std::vector<std::pair<int32_t, Int>> out;
        out.reserve(d.size() + s.size());
        size_t i = 0, j = 0;
        while (i < d.size() || j < s.size()) {
            if (j == s.size() || (i < d.size() && d[i].first < s[j].first)) {
                out.push_back(std::move(d[i++]));
            } else if (i == d.size() || s[j].first < d[i].first) {
                Int v = coeff * s[j].second;
                if (v != 0) {
                    out.push_back({s[j].first, std::move(v)});
                    col_rows[s[j].first].push_back(dst);
                    ++col_nnz[s[j].first];
                    ++row_nnz[dst];
                }
                ++j;
            } else {
                Int v = d[i].second + coeff * s[j].second;
                if (v != 0)
                    out.push_back({d[i].first, std::move(v)});
                else {
                    --col_nnz[d[i].first];
                    --row_nnz[dst];
                }
                ++i;
                ++j;
            }
        }
        d = std::move(out);
    }

    // remove the entry at (r, c0) from every OTHER row using unit pivot row r
    void clear_column_with_unit(int32_t pr, int32_t pc, const Int& pval) {
        auto cand = col_rows[pc];  // copy; will be rebuilt
        for (int32_t r : cand) {
            if (r == pr || row_retired[r]) continue;
            const Int* e = entry(r, pc);
            if (!e) continue;
            Int coeff = -(*e) / pval;  // pval = +-1
            row_op(r, pr, coeff);
        }
        col_rows[pc].clear();
        col_rows[pc].push_back(pr);
    }

    // remove all other entries of row pr via column ops (no journal needed)
    void clear_row_with_unit(int32_t pr, int32_t pc) {
        for (auto& [c, v] : row[pr]) {
            if (c == pc) continue;
            --col_nnz[c];
            --row_nnz[pr];
        }
        Int keep;
        for (auto& [c, v] : row[pr])
            if (c == pc) keep = v;
        row[pr].clear();
        row[pr].push_back({pc, keep});
        // note: column ops would also modify other rows' entries in columns
        // c != pc; but since column pc was already cleared, row pr is the only
        // row with support in pc, and subtracting multiples of column pc from
        // other columns changes only row pr.  So the sparse structure of other
        // rows is untouched.
    }

    void run_unit_phase() {
        // bucket columns by nnz
        std::set<std::pair<int32_t, int32_t>> agenda;  // (col_nnz, col)
        for (size_t c = 0; c < cols; ++c)
            if (col_nnz[c] > 0) agenda.insert({col_nnz[c], static_cast<int32_t>(c)});
        auto refresh = [&](int32_t c, int32_t old_nnz) {
            agenda.erase({old_nnz, c});
            if (!col_retired[c] && col_nnz[c] > 0) agenda.insert({col_nnz[c], c});
        };
        while (!agenda.empty()) {
            auto [nz, c] = *agenda.begin();
            if (col_retired[c] || col_nnz[c] == 0) {
                agenda.erase(agenda.begin());
                continue;
            }
            if (nz != col_nnz[c]) {
                agenda.erase(agenda.begin());
                agenda.insert({col_nnz[c], c});
                continue;
            }
            // find unit entry in column c with min row nnz
            int32_t best_r = -1;
            Int best_v;
            int32_t best_rn = INT32_MAX;
            // clean col_rows[c]
            std::vector<int32_t> live;
            for (int32_t r : col_rows[c]) {
                if (row_retired[r]) continue;
                const Int* e = entry(r, c);
                if (!e) continue;
                live.push_back(r);
                if ((*e == 1 || *e == -1) && row_nnz[r] < best_rn) {
                    best_rn = row_nnz[r];
                    best_r = r;
                    best_v = *e;
                }
            }
            std::sort(live.begin(), live.end());
            live.erase(std::unique(live.begin(), live.end()), live.end());
            col_rows[c] = live;
            if (static_cast<int32_t>(live.size()) != col_nnz[c]) {
                // stale count; fix and re-agenda
                agenda.erase(agenda.begin());
                col_nnz[c] = static_cast<int32_t>(live.size());
                if (col_nnz[c] > 0) agenda.insert({col_nnz[c], c});
                continue;
            }
            if (best_r < 0) {
                // no unit entry in this column; skip it for now
                agenda.erase(agenda.begin());
                continue;
            }
            // snapshot nnz of touched columns to refresh agenda afterwards
            std::vector<std::pair<int32_t, int32_t>> touched;
            for (const auto& [cc, vv] : row[best_r]) touched.push_back({cc, col_nnz[cc]});
            clear_column_with_unit(best_r, c, best_v);
            clear_row_with_unit(best_r, c);
            row_retired[best_r] = 1;
            col_retired[c] = 1;
            unit_pivots.push_back({best_r, c});
            agenda.erase({nz, c});
            for (auto& [cc, old] : touched)
                if (cc != c) refresh(cc, old);
            // rows changed by clear_column_with_unit may have introduced new
            // entries in other columns; refresh handled via col_nnz updates on
            // the fly (agenda keys lazily fixed above)
            for (int32_t r : col_rows[c])
                (void)r;
        }
    }

    // gather remaining active submatrix (rows/cols with entries)
    void core(std::vector<int32_t>& core_rows, std::vector<int32_t>& core_cols,
              std::vector<std::vector<Int>>& dense) const {
        core_rows.clear();
        core_cols.clear();
        std::set<int32_t> cc;
        for (size_t r = 0; r < rows; ++r)
            if (!row_retired[r] && !row[r].empty()) {
                core_rows.push_back(static_cast<int32_t>(r));
                for (const auto& [c, v] : row[r]) cc.insert(c);
            }
        core_cols.assign(cc.begin(), cc.end());
        dense.assign(core_rows.size(), std::vector<Int>(core_cols.size(), 0));
        for (size_t i = 0; i < core_rows.size(); ++i)
            for (const auto& [c, v] : row[core_rows[i]]) {
                size_t j = std::lower_bound(core_cols.begin(), core_cols.end(), c) -
                           core_cols.begin();
                dense[i][j] = v;
            }
    }
};

}  // namespace

std::vector<Int> smith_invariant_factors(SparseIntMatrix m, const SnfOptions& opts) {
    Elimination e(std::move(m));
    e.run_unit_phase();
    std::vector<int32_t> cr, cc;
    std::vector<std::vector<Int>> dense;
    e.core(cr, cc, dense);
    if (cr.size() > opts.dense_core_cap)
        throw resource_error("smith_invariant_factors: dense core too large (" +
                             std::to_string(cr.size()) + " rows)");
    std::vector<Int> factors(e.unit_pivots.size(), 1);
    auto core_factors = dense_smith(std::move(dense));
    factors.insert(factors.end(), core_factors.begin(), core_factors.end());
    std::sort(factors.begin(), factors.end());
    return factors;
}

long integer_rank(SparseIntMatrix m, const SnfOptions& opts) {
    return static_cast<long>(smith_invariant_factors(std::move(m), opts).size());
}

long fp_rank(const SparseIntMatrix& m, uint32_t p) {
    // persistence-style column reduction; pivot = largest row index
    auto inv_mod = [&](uint32_t a) {
        // extended euclid
        int64_t t = 0, newt = 1, r = p, newr = a % p;
        while (newr != 0) {
            int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        return static_cast<uint32_t>(((t % p) + p) % p);
    };
    std::vector<std::vector<std::pair<int32_t, uint32_t>>> cols(m.cols);
    for (size_t c = 0; c < m.col.size(); ++c) {
        for (const auto& [r, v] : m.col[c]) {
            Int vm = v % static_cast<long>(p);
            long w = vm.convert_to<long>();
            uint32_t u = static_cast<uint32_t>(((w % p) + p) % p);
            if (u) cols[c].push_back({r, u});
        }
    }
    std::vector<int32_t> pivot_col(m.rows, -1);
    long rank = 0;
    std::vector<std::pair<int32_t, uint32_t>> tmp;
    for (size_t c = 0; c < cols.size(); ++c) {
        auto& col = cols[c];
        while (!col.empty()) {
            int32_t low = col.back().first;
            int32_t pc = pivot_col[low];
            if (pc < 0) {
                pivot_col[low] = static_cast<int32_t>(c);
                ++rank;
                break;
            }
            // col -= (col.low / pivot.low) * pivot
            const auto& pv = cols[pc];
            uint32_t factor =
                static_cast<uint32_t>((static_cast<uint64_t>(col.back().second) *
                                       inv_mod(pv.back().second)) %
                                      p);
            tmp.clear();
            size_t i = 0, j = 0;
            while (i < col.size() || j < pv.size()) {
                if (j == pv.size() || (i < col.size() && col[i].first < pv[j].first)) {
                    tmp.push_back(col[i++]);
                } else if (i == col.size() || pv[j].first < col[i].first) {
                    uint32_t val = static_cast<uint32_t>(
                        (p - static_cast<uint64_t>(factor) * pv[j].second % p) % p);
                    if (val) tmp.push_back({pv[j].first, val});
                    ++j;
                } else {
                    uint64_t val = (col[i].second +
                                    static_cast<uint64_t>(p - factor) * pv[j].second) %
                                   p;
                    if (val) tmp.push_back({col[i].first, static_cast<uint32_t>(val)});
                    ++i;
                    ++j;
                }
            }
            col.swap(tmp);
        }
    }
    return rank;
}

CokernelBasis::CokernelBasis(SparseIntMatrix m, const SnfOptions& opts) : rows_(m.rows) {
    Elimination e(std::move(m));
    std::vector<std::tuple<int32_t, int32_t, Int>> journal;
    e.journal = &journal;
    e.run_unit_phase();
    for (auto& [dst, src, c] : journal) journal_.push_back({dst, src, c});
    std::vector<int32_t> cc;
    std::vector<std::vector<Int>> dense;
    e.core(core_rows_, cc, dense);
    if (core_rows_.size() > opts.dense_core_cap)
        throw resource_error("CokernelBasis: dense core too large");
    std::vector<std::vector<Int>> u;
    auto core_factors = dense_smith(std::move(dense), &u);
    core_u_ = std::move(u);
    std::vector<char> is_pivot(rows_, 0);
    for (auto& [r, c] : e.unit_pivots) {
        pivots_.push_back({r, 1});
        is_pivot[r] = 1;
    }
    // core pivots: first core_factors.size() rows of U * (core rows)
    for (size_t i = 0; i < core_factors.size(); ++i) {
        if (core_factors[i] > 1) torsion_.push_back(core_factors[i]);
    }
    core_rank_ = static_cast<long>(core_factors.size());
    for (size_t r = 0; r < rows_; ++r) {
        bool in_core = std::binary_search(core_rows_.begin(), core_rows_.end(),
                                          static_cast<int32_t>(r));
        if (!is_pivot[r] && !in_core) free_rows_.push_back(static_cast<int32_t>(r));
    }
    std::sort(torsion_.begin(), torsion_.end());
}

std::vector<Int> CokernelBasis::express(const std::vector<Int>& v) const {
    if (v.size() != rows_) throw usage_error("CokernelBasis::express: wrong length");
    std::vector<Int> w = v;
    for (const auto& op : journal_) w[op.dst] += op.coeff * w[op.src];
    std::vector<Int> out;
    out.reserve(free_rows_.size() + (core_rows_.size() - core_rank_));
    for (int32_t r : free_rows_) out.push_back(w[r]);
    if (!core_rows_.empty()) {
        std::vector<Int> cw(core_rows_.size(), 0);
        for (size_t i = 0; i < core_rows_.size(); ++i) {
            for (size_t j = 0; j < core_rows_.size(); ++j)
                cw[i] += core_u_[i][j] * w[core_rows_[j]];
        }
        for (size_t i = core_rank_; i < cw.size(); ++i) out.push_back(cw[i]);
    }
    return out;
}

SparseIntMatrix boundary_matrix(const FaceSet& fs, int k, bool augmented) {
    SparseIntMatrix m;
    if (k == 0) {
        m.rows = augmented ? 1 : 0;
        m.cols = fs.count(0);
        m.col.resize(m.cols);
        if (augmented)
            for (size_t c = 0; c < m.cols; ++c) m.col[c].push_back({0, 1});
        return m;
    }
    m.rows = fs.count(k - 1);
    m.cols = fs.count(k);
    m.col.resize(m.cols);
    size_t w = k + 1;
    std::vector<int32_t> sub(k);
    for (size_t i = 0; i < m.cols; ++i) {
        const int32_t* f = fs.face(k, i);
        for (size_t skip = 0; skip < w; ++skip) {
            size_t t2 = 0;
            for (size_t t = 0; t < w; ++t)
                if (t != skip) sub[t2++] = f[t];
            long j = fs.find(k - 1, sub.data());
            if (j < 0) throw usage_error("boundary_matrix: face set not downward closed");
            m.col[i].push_back({static_cast<int32_t>(j), (skip % 2 == 0) ? Int(1) : Int(-1)});
        }
        std::sort(m.col[i].begin(), m.col[i].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
}

SparseIntMatrix relative_boundary_matrix(const FaceSet& fs, int k,
                                         const std::vector<std::vector<int32_t>>& keep) {
    auto kept = [&](int dim) -> const std::vector<int32_t>& {
        static const std::vector<int32_t> none;
        if (dim < 0 || dim >= static_cast<int>(keep.size())) return none;
        return keep[dim];
    };
    SparseIntMatrix m;
    const auto& rows_keep = kept(k - 1);
    const auto& cols_keep = kept(k);
    m.rows = rows_keep.size();
    m.cols = cols_keep.size();
    m.col.resize(m.cols);
    if (k == 0) return m;  // no augmentation in relative complexes
    size_t w = k + 1;
    std::vector<int32_t> sub(k);
    for (size_t ci = 0; ci < cols_keep.size(); ++ci) {
        const int32_t* f = fs.face(k, cols_keep[ci]);
        for (size_t skip = 0; skip < w; ++skip) {
            size_t t2 = 0;
            for (size_t t = 0; t < w; ++t)
                if (t != skip) sub[t2++] = f[t];
            long j = fs.find(k - 1, sub.data());
            if (j < 0) throw usage_error("relative_boundary_matrix: not downward closed");
            auto it = std::lower_bound(rows_keep.begin(), rows_keep.end(),
                                       static_cast<int32_t>(j));
            if (it == rows_keep.end() || *it != static_cast<int32_t>(j)) continue;  // in A
            size_t ri = it - rows_keep.begin();
            m.col[ci].push_back(
                {static_cast<int32_t>(ri), (skip % 2 == 0) ? Int(1) : Int(-1)});
        }
        std::sort(m.col[ci].begin(), m.col[ci].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
}

namespace {

std::vector<Int> prime_power_torsion(const std::vector<Int>& invariant_factors) {
    std::vector<Int> out;
    for (Int d : invariant_factors) {
        if (d <= 1) continue;
        for (Int q = 2; q * q <= d; ++q) {
            if (d % q == 0) {
                Int pk = 1;
                while (d % q == 0) {
                    pk *= q;
                    d /= q;
                }
                out.push_back(pk);
            }
        }
        if (d > 1) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

HomologySummary homology_from_boundaries(std::vector<SparseIntMatrix> bd, int lowest_degree,
                                         const HomologyOptions& opts) {
    // bd[i] = boundary from degree (lowest_degree + i) to (lowest_degree + i - 1)
    // dimension of C_k = bd[k-index].cols; bd[0] is the map out of the lowest level.
    size_t levels = bd.size();
    std::vector<long> rank(levels + 1, 0);
    std::vector<std::vector<Int>> factors(levels + 1);
    for (size_t i = 0; i < levels; ++i) {
        if (bd[i].cols == 0 || bd[i].rows == 0) {
            rank[i] = 0;
            continue;
        }
        if (opts.mode == CoeffMode::integer) {
            factors[i] = smith_invariant_factors(bd[i], opts.snf);
            rank[i] = static_cast<long>(factors[i].size());
        } else {
            rank[i] = fp_rank(bd[i], opts.p);
        }
    }
    HomologySummary out;
    for (size_t i = 0; i < levels; ++i) {
        long dim_ck = static_cast<long>(bd[i].cols);
        long r_out = rank[i];
        long r_in = (i + 1 < levels) ? rank[i + 1] : 0;
        long betti = dim_ck - r_out - r_in;
        std::vector<Int> torsion;
        if (opts.mode == CoeffMode::integer && i + 1 < levels)
            torsion = prime_power_torsion(factors[i + 1]);
        if (opts.mode == CoeffMode::mod_p) {
            // dimensions over F_p only; no torsion notion
        }
        out.add(lowest_degree + static_cast<int>(i), betti, torsion);
    }
    return out;
}

}  // namespace

HomologySummary reduced_homology(const SimplicialComplex& x, const HomologyOptions& opts) {
    const FaceSet& fs = x.faces();
    size_t cap = opts.mode == CoeffMode::integer ? opts.face_cap : opts.face_cap * 10;
    if (fs.total() > cap)
        throw resource_error("reduced_homology: face count " + std::to_string(fs.total()) +
                             " exceeds cap " + std::to_string(cap));
    int top = fs.top_dim();
    // levels: C_{-1}, C_0, ..., C_top; boundary bd[i]: level i -> i-1 with
    // level index = degree + 1
    std::vector<SparseIntMatrix> bd;
    {
        SparseIntMatrix out_of_aug;  // C_{-1} -> 0
        out_of_aug.rows = 0;
        out_of_aug.cols = 1;
        out_of_aug.col.resize(1);
        bd.push_back(std::move(out_of_aug));
    }
    for (int k = 0; k <= top; ++k) bd.push_back(boundary_matrix(fs, k, true));
    auto s = homology_from_boundaries(std::move(bd), -1, opts);
    return s.shifted(x.shift());
}

HomologySummary relative_homology(const SimplicialComplex& x, const SimplicialComplex& a,
                                  const HomologyOptions& opts) {
    const FaceSet& fx = x.faces();
    const FaceSet& fa = a.faces();
    // A must be a subcomplex on the same vertex ids
    std::vector<std::vector<int32_t>> keep(std::max(fx.top_dim() + 1, 0));
    for (int k = 0; k <= fx.top_dim(); ++k) {
        size_t w = k + 1;
        for (size_t i = 0; i < fx.count(k); ++i) {
            const int32_t* f = fx.face(k, i);
            if (fa.find(k, f) < 0) keep[k].push_back(static_cast<int32_t>(i));
        }
    }
    for (int k = 0; k <= fa.top_dim(); ++k) {
        size_t w = k + 1;
        for (size_t i = 0; i < fa.count(k); ++i)
            if (fx.find(k, fa.face(k, i)) < 0)
                throw usage_error("relative_homology: A is not a subcomplex of X");
        (void)w;
    }
    std::vector<SparseIntMatrix> bd;
    {
        SparseIntMatrix zero;  // C_0^rel -> C_{-1}^rel = 0 (augmentation lives in A)
        zero.rows = 0;
        zero.cols = keep.empty() ? 0 : keep[0].size();
        zero.col.resize(zero.cols);
        bd.push_back(std::move(zero));
    }
    for (int k = 1; k <= fx.top_dim(); ++k)
        bd.push_back(relative_boundary_matrix(fx, k, keep));
    auto s = homology_from_boundaries(std::move(bd), 0, opts);
    return s.shifted(x.shift());
}

TopCohomologyMap induced_on_top_cohomology(const SimplicialComplex& x,
                                           const std::vector<TopCocycle>& selected,
                                           const SnfOptions& opts) {
    const FaceSet& fs = x.faces();
    int d = fs.top_dim();
    // disjointness of supports
    std::set<size_t> seen;
    for (const auto& s : selected)
        for (const auto& [f, c] : s.support)
            if (!seen.insert(f).second)
                throw usage_error("induced_on_top_cohomology: overlapping top-face subsets");
    // H^D(X) = coker(delta) with delta = transpose of boundary_D
    SparseIntMatrix delta = boundary_matrix(fs, d, true).transposed();
    CokernelBasis basis(std::move(delta), opts);
    TopCohomologyMap out;
    out.h_top_free_rank = basis.free_rank();
    out.h_top_torsion = basis.torsion();
    for (const auto& s : selected) {
        std::vector<Int> v(fs.count(d), 0);
        for (const auto& [f, c] : s.support) v[f] = c;
        out.matrix.push_back(basis.express(v));
    }
    // transpose to rows = H^D basis
    std::vector<std::vector<Int>> mt(out.h_top_free_rank,
                                     std::vector<Int>(selected.size(), 0));
    for (size_t c = 0; c < out.matrix.size(); ++c)
        for (size_t r = 0; r < out.matrix[c].size(); ++r) mt[r][c] = out.matrix[c][r];
    out.matrix = std::move(mt);
    return out;
}

long reduced_euler_characteristic(const SimplicialComplex& x) {
    long chi = -1;
    const FaceSet& fs = x.faces();
    for (int k = 0; k <= fs.top_dim(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(fs.count(k));
    return chi;
}

bool all_ones(const std::vector<Int>& invariant_factors) {
    for (const auto& d : invariant_factors)
        if (d != 1) return false;
    return true;
}

}  // namespace pb
