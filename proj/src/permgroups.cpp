#include "pb/permgroups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pb {

Permutation::Permutation(int n) : n_(n), img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = static_cast<uint8_t>(i + 1);
}

Permutation::Permutation(int n, std::vector<uint8_t> images) : n_(n), img_(std::move(images)) {
    if (static_cast<int>(img_.size()) != n_) throw usage_error("Permutation: wrong length");
    std::vector<bool> seen(n_, false);
    for (uint8_t v : img_) {
        if (v < 1 || v > n_ || seen[v - 1]) throw usage_error("Permutation: not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
    Permutation p(n);
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '(') {
            size_t j = text.find(')', i);
            if (j == std::string::npos) throw usage_error("from_cycles: unbalanced parenthesis");
            std::stringstream ss(text.substr(i + 1, j - i - 1));
            std::vector<int> cyc;
            std::string tok;
            while (ss >> tok) {
                // allow comma separators
                for (char& c : tok)
                    if (c == ',') c = ' ';
                std::stringstream ts(tok);
                int x;
                while (ts >> x) cyc.push_back(x);
            }
            for (size_t t = 0; t < cyc.size(); ++t) {
                int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
                if (a < 1 || a > n) throw usage_error("from_cycles: point out of range");
                p.img_[a - 1] = static_cast<uint8_t>(b);
            }
            i = j + 1;
        } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        } else {
            throw usage_error("from_cycles: unexpected character in '" + text + "'");
        }
    }
    // validate
    return Permutation(n, p.img_);
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (n_ != inner.n_) throw usage_error("Permutation::compose: size mismatch");
    std::vector<uint8_t> img(n_);
    for (int i = 0; i < n_; ++i) img[i] = img_[inner.img_[i] - 1];
    return Permutation(n_, std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<uint8_t> img(n_);
    for (int i = 0; i < n_; ++i) img[img_[i] - 1] = static_cast<uint8_t>(i + 1);
    return Permutation(n_, std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (img_[i] != i + 1) return false;
    return true;
}

int Permutation::sign() const {
    std::vector<bool> seen(n_, false);
    int s = 1;
    for (int i = 0; i < n_; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j] - 1;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(n_, false);
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (seen[i] || img_[i] == i + 1) {
            seen[i] = true;
            continue;
        }
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            first = false;
            j = img_[j] - 1;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

PermGroup::PermGroup(int n, std::vector<Permutation> gens, std::string label)
    : n_(n), gens_(std::move(gens)), label_(std::move(label)) {
    for (const auto& g : gens_)
        if (g.n() != n_) throw usage_error("PermGroup: generator degree mismatch");
}

const std::vector<Permutation>& PermGroup::elements(size_t cap) const {
    std::lock_guard<std::mutex> lock(*mu_);
    if (elements_) return *elements_;
    // Dimino-style closure
    std::set<Permutation> seen;
    std::vector<Permutation> queue;
    Permutation id(n_);
    seen.insert(id);
    queue.push_back(id);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Permutation cur = queue[qi];
        for (const auto& g : gens_) {
            Permutation nxt = g.compose(cur);
            if (seen.insert(nxt).second) {
                if (seen.size() > cap)
                    throw resource_error("PermGroup: order exceeds cap " + std::to_string(cap));
                queue.push_back(std::move(nxt));
            }
        }
    }
    auto out = std::make_shared<std::vector<Permutation>>(seen.begin(), seen.end());
    elements_ = std::move(out);
    return *elements_;
}

bool PermGroup::contains(const Permutation& p) const {
    const auto& els = elements();
    return std::binary_search(els.begin(), els.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
    if (n_ != other.n()) return false;
    for (const auto& g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
    return is_subgroup_of(other) && other.is_subgroup_of(*this);
}

PermGroup trivial_group(int n) { return PermGroup(n, {}, "trivial"); }

PermGroup symmetric_group(int n) {
    std::vector<Permutation> gens;
    for (int i = 1; i < n; ++i) {
        std::vector<uint8_t> img(n);
        for (int j = 0; j < n; ++j) img[j] = static_cast<uint8_t>(j + 1);
        std::swap(img[i - 1], img[i]);
        gens.emplace_back(n, std::move(img));
    }
    return PermGroup(n, std::move(gens), "sym:" + std::to_string(n));
}

PermGroup young(const std::vector<int>& parts) {
    if (parts.empty()) throw usage_error("young: empty composition");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw usage_error("young: parts must be positive");
        n += p;
    }
    std::vector<Permutation> gens;
    int start = 0;
    for (int p : parts) {
        for (int i = 1; i < p; ++i) {
            std::vector<uint8_t> img(n);
            for (int j = 0; j < n; ++j) img[j] = static_cast<uint8_t>(j + 1);
            std::swap(img[start + i - 1], img[start + i]);
            gens.emplace_back(n, std::move(img));
        }
        start += p;
    }
    std::string label = "young:";
    for (size_t i = 0; i < parts.size(); ++i)
        label += (i ? "," : "") + std::to_string(parts[i]);
    return PermGroup(n, std::move(gens), label);
}

namespace {

// extend a permutation of {1..d} to {1..n} by sigma(i + jd) = sigma(i) + jd
Permutation extend_diagonally(const Permutation& s, int d, int n) {
    std::vector<uint8_t> img(n);
    for (int i = 1; i <= d; ++i)
        for (int j = 0; j < n / d; ++j)
            img[i + j * d - 1] = static_cast<uint8_t>(s.image(i) + j * d);
    return Permutation(n, std::move(img));
}

// extend a permutation of {1..D} to {1..n} acting identically on consecutive
// windows {1..D}, {D+1..2D}, ...
Permutation extend_blockwise(const Permutation& s, int D, int n) {
    std::vector<uint8_t> img(n);
    for (int j = 0; j < n / D; ++j)
        for (int i = 1; i <= D; ++i) img[j * D + i - 1] = static_cast<uint8_t>(s.image(i) + j * D);
    return Permutation(n, std::move(img));
}

}  // namespace

PermGroup diagonal_sigma_d(int d, int n) {
    if (d < 1 || n % d != 0) throw usage_error("diagonal_sigma_d: d must divide n");
    std::vector<Permutation> gens;
    for (const auto& g : symmetric_group(d).generators())
        gens.push_back(extend_diagonally(g, d, n));
    return PermGroup(n, std::move(gens), "diag:" + std::to_string(d) + "@" + std::to_string(n));
}

PermGroup wreath(const std::vector<int>& ds, int n) {
    if (ds.empty()) throw usage_error("wreath: empty factor list");
    long D = 1;
    for (int d : ds) {
        if (d < 1) throw usage_error("wreath: factors must be positive");
        D *= d;
    }
    if (D > n || n % D != 0) throw usage_error("wreath: product of factors must divide n");
    // build on {1..D} recursively: W_j = W_{j-1} wr Sigma_{d_j} on blocks of
    // size d_1...d_{j-1}
    std::vector<Permutation> gens;
    int block = 1;
    for (size_t level = 0; level < ds.size(); ++level) {
        int d = ds[level];
        if (level == 0) {
            for (const auto& g : symmetric_group(d).generators()) gens.push_back(g);
            block = d;
            // lift existing gens (none before level 0) handled below
            continue;
        }
        // lift previous gens to act on the first block of the new layer
        std::vector<Permutation> lifted;
        int newD = block * d;
        for (const auto& g : gens) {
            std::vector<uint8_t> img(newD);
            for (int i = 1; i <= newD; ++i) img[i - 1] = static_cast<uint8_t>(i);
            for (int i = 1; i <= block; ++i) img[i - 1] = static_cast<uint8_t>(g.image(i));
            lifted.emplace_back(newD, std::move(img));
        }
        // block permutations: Sigma_d permuting the d blocks of size `block`
        for (const auto& s : symmetric_group(d).generators()) {
            std::vector<uint8_t> img(newD);
            for (int b = 1; b <= d; ++b)
                for (int i = 1; i <= block; ++i)
                    img[(b - 1) * block + i - 1] =
                        static_cast<uint8_t>((s.image(b) - 1) * block + i);
            lifted.emplace_back(newD, std::move(img));
        }
        gens = std::move(lifted);
        block = newD;
    }
    std::vector<Permutation> final_gens;
    for (const auto& g : gens) final_gens.push_back(extend_blockwise(g, static_cast<int>(D), n));
    std::string label = "wreath:";
    for (size_t i = 0; i < ds.size(); ++i) label += (i ? "," : "") + std::to_string(ds[i]);
    label += "@" + std::to_string(n);
    return PermGroup(n, std::move(final_gens), label);
}

PermGroup elementary_abelian(int p, int k, int m) {
    if (p < 2 || k < 1 || m < 1) throw usage_error("elementary_abelian: bad parameters");
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) throw usage_error("elementary_abelian: p must be prime");
    long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    long n = pk * m;
    if (n > 255) throw resource_error("elementary_abelian: ground set too large");
    // regular action of (Z/p)^k on {0..p^k-1} read as base-p strings; generator
    // t adds 1 to digit t
    std::vector<Permutation> gens;
    for (int t = 0; t < k; ++t) {
        std::vector<uint8_t> img(n);
        long step = 1;
        for (int i = 0; i < t; ++i) step *= p;
        for (long x = 0; x < pk; ++x) {
            long digit = (x / step) % p;
            long y = x + ((digit + 1) % p - digit) * step;
            for (int j = 0; j < m; ++j)
                img[x + j * pk] = static_cast<uint8_t>(y + j * pk + 1);
        }
        gens.emplace_back(static_cast<int>(n), std::move(img));
    }
    return PermGroup(static_cast<int>(n), std::move(gens),
                     "elab:" + std::to_string(p) + "," + std::to_string(k) + "," +
                         std::to_string(m));
}

PermGroup cyclic_group(int k, int n) {
    if (k < 1 || n % k != 0) throw usage_error("cyclic_group: k must divide n");
    std::vector<uint8_t> base(k);
    for (int i = 1; i <= k; ++i) base[i - 1] = static_cast<uint8_t>(i % k + 1);
    Permutation cyc(k, std::move(base));
    return PermGroup(n, {extend_diagonally(cyc, k, n)},
                     "cyclic:" + std::to_string(k) + "@" + std::to_string(n));
}

std::vector<std::vector<int>> orbits(const PermGroup& g, const std::vector<int>& points) {
    std::vector<std::vector<int>> out;
    std::set<int> todo(points.begin(), points.end());
    while (!todo.empty()) {
        int start = *todo.begin();
        std::set<int> orb{start};
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (const auto& gen : g.generators()) {
                int y = gen.image(x);
                if (orb.insert(y).second) queue.push_back(y);
            }
        }
        out.emplace_back(orb.begin(), orb.end());
        for (int x : orb) todo.erase(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup centralizer(const PermGroup& g, const PermGroup& ambient) {
    if (!g.is_subgroup_of(ambient)) throw usage_error("centralizer: G must lie in ambient");
    std::vector<Permutation> els;
    for (const auto& w : ambient.elements()) {
        bool ok = true;
        for (const auto& gen : g.generators())
            if (!(w.compose(gen) == gen.compose(w))) {
                ok = false;
                break;
            }
        if (ok) els.push_back(w);
    }
    return PermGroup(ambient.n(), els, "C_{" + ambient.label() + "}(" + g.label() + ")");
}

std::vector<Permutation> subconjugators(const PermGroup& g, const PermGroup& k,
                                        const PermGroup& h) {
    if (!k.is_subgroup_of(g) || !h.is_subgroup_of(g))
        throw usage_error("subconjugators: K and H must lie in G");
    const auto& h_els = h.elements();
    std::set<Permutation> h_set(h_els.begin(), h_els.end());
    std::set<Permutation> covered;
    std::vector<Permutation> reps;
    for (const auto& x : g.elements()) {
        if (covered.count(x)) continue;
        Permutation xi = x.inverse();
        bool ok = true;
        for (const auto& kg : k.generators())
            if (!h_set.count(xi.compose(kg).compose(x))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        reps.push_back(x);
        for (const auto& hh : h_els) covered.insert(x.compose(hh));
    }
    return reps;
}

namespace {

std::vector<Permutation> closure(int n, const std::vector<Permutation>& gens, size_t cap) {
    std::set<Permutation> seen;
    std::vector<Permutation> queue;
    Permutation id(n);
    seen.insert(id);
    queue.push_back(id);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& g : gens) {
            Permutation nxt = g.compose(queue[qi]);
            if (seen.insert(nxt).second) {
                if (seen.size() > cap) throw resource_error("subgroup closure exceeds cap");
                queue.push_back(std::move(nxt));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, size_t cap) {
    const auto& els = g.elements(cap);
    int n = g.n();
    // BFS over subgroups: start from cyclic, extend by one element at a time.
    std::map<std::vector<Permutation>, std::vector<Permutation>> found;  // elements -> gens
    std::vector<std::vector<Permutation>> queue;
    {
        std::vector<Permutation> triv{Permutation(n)};
        found[triv] = {};
        queue.push_back(triv);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<Permutation> cur = queue[qi];
        std::vector<Permutation> cur_gens = found[cur];
        std::set<Permutation> cur_set(cur.begin(), cur.end());
        for (const auto& x : els) {
            if (cur_set.count(x)) continue;
            auto gens = cur_gens;
            gens.push_back(x);
            auto closed = closure(n, gens, cap);
            auto it = found.find(closed);
            if (it == found.end()) {
                found[closed] = gens;
                queue.push_back(closed);
            }
        }
    }
    std::vector<PermGroup> out;
    for (auto& [elset, gens] : found) {
        PermGroup sub(n, gens);
        (void)sub.elements();  // warm
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

std::vector<PermGroup> subgroup_conjugacy_reps(const PermGroup& g, size_t cap) {
    auto subs = all_subgroups(g, cap);
    const auto& els = g.elements();
    std::set<std::vector<Permutation>> seen;
    std::vector<PermGroup> reps;
    for (const auto& sub : subs) {
        if (seen.count(sub.elements())) continue;
        reps.push_back(sub);
        for (const auto& x : els) {
            Permutation xi = x.inverse();
            std::vector<Permutation> conj;
            conj.reserve(sub.order());
            for (const auto& s : sub.elements()) conj.push_back(xi.compose(s).compose(x));
            std::sort(conj.begin(), conj.end());
            seen.insert(std::move(conj));
        }
    }
    return reps;
}

std::vector<PermGroup> subgroups_between(const PermGroup& h, const PermGroup& g, size_t cap) {
    if (!h.is_subgroup_of(g)) throw usage_error("subgroups_between: H must lie in G");
    if (g.order(cap) > cap) throw resource_error("subgroups_between: |G| exceeds cap");
    // BFS upward from H
    std::map<std::vector<Permutation>, std::vector<Permutation>> found;
    std::vector<std::vector<Permutation>> queue;
    {
        std::vector<Permutation> base = h.elements();
        found[base] = h.generators();
        queue.push_back(base);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        auto cur = queue[qi];
        auto cur_gens = found[cur];
        std::set<Permutation> cur_set(cur.begin(), cur.end());
        for (const auto& x : g.elements()) {
            if (cur_set.count(x)) continue;
            auto gens = cur_gens;
            gens.push_back(x);
            auto closed = closure(g.n(), gens, cap);
            if (found.find(closed) == found.end()) {
                found[closed] = gens;
                queue.push_back(closed);
            }
        }
    }
    std::vector<PermGroup> out;
    for (auto& [elset, gens] : found) {
        PermGroup sub(g.n(), gens.empty() ? h.generators() : gens);
        (void)sub.elements();
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

PermGroup parse_group_spec(const std::string& spec) {
    auto fail = [&]() -> PermGroup {
        throw usage_error("parse_group_spec: cannot parse '" + spec + "'");
    };
    auto at = spec.rfind('@');
    std::string head = spec, tail;
    int n_override = 0;
    if (at != std::string::npos && spec.find('(') == std::string::npos) {
        head = spec.substr(0, at);
        tail = spec.substr(at + 1);
        n_override = std::stoi(tail);
    } else if (at != std::string::npos) {
        // perm specs contain parens; @n still at the end
        head = spec.substr(0, at);
        n_override = std::stoi(spec.substr(at + 1));
    }
    auto colon = head.find(':');
    std::string kind = colon == std::string::npos ? head : head.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : head.substr(colon + 1);
    auto parse_ints = [&](const std::string& s) {
        std::vector<int> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    if (kind == "young") {
        auto parts = parse_ints(args);
        if (parts.empty()) fail();
        return young(parts);
    }
    if (kind == "wreath") {
        auto ds = parse_ints(args);
        if (ds.empty() || n_override == 0) fail();
        return wreath(ds, n_override);
    }
    if (kind == "diag") {
        auto ds = parse_ints(args);
        if (ds.size() != 1 || n_override == 0) fail();
        return diagonal_sigma_d(ds[0], n_override);
    }
    if (kind == "elab") {
        auto ps = parse_ints(args);
        if (ps.size() != 3) fail();
        return elementary_abelian(ps[0], ps[1], ps[2]);
    }
    if (kind == "cyclic") {
        auto ks = parse_ints(args);
        if (ks.size() != 1 || n_override == 0) fail();
        return cyclic_group(ks[0], n_override);
    }
    if (kind == "sym") {
        auto ks = parse_ints(args);
        if (ks.size() != 1) fail();
        int d = ks[0];
        int n = n_override ? n_override : d;
        if (n == d) return symmetric_group(d);
        return diagonal_sigma_d(d, n);
    }
    if (kind == "trivial") {
        if (n_override == 0) fail();
        return trivial_group(n_override);
    }
    if (kind == "perm") {
        if (n_override == 0) fail();
        std::vector<Permutation> gens;
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ';'))
            if (!tok.empty()) gens.push_back(Permutation::from_cycles(tok, n_override));
        return PermGroup(n_override, std::move(gens), spec);
    }
    return fail();
}

}  // namespace pb
