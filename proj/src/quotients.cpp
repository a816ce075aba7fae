#include "pb/quotients.hpp"

#include <algorithm>

#include "pb/freelie.hpp"

namespace pb {

QuotientBlock quotient_block(int d, int l, const HomologyOptions& opts) {
    if (d < 1 || l < 1) throw usage_error("quotient_block: d and l must be positive");
    QuotientBlock out;
    out.d = d;
    out.l = l;
    if (d == 1) {
        // S^{l-1} * S^-2 = S^{l-2}; trivial group
        auto cx = join_complex(SimplicialComplex::boundary_of_simplex(l),
                               SimplicialComplex::virtual_s_minus_2());
        out.total_faces = cx.faces().total();
        out.homology = reduced_homology(cx, opts);
        out.evidence = opts.mode == CoeffMode::integer ? "integral" : "mod-p";
        return out;
    }
    auto model = sphere_model(d, l, /*subdivide_sphere_factors=*/true);
    if (d >= 3) {
        auto pi_d = enumerate_partitions(d, PosetMode::proper);
        model = join_equivariant(model, pi_n_action(pi_d, symmetric_group(d)));
    }
    out.total_faces = model.complex.faces().total();
    out.homology = quotient_homology(model, opts, /*auto_subdivide=*/false);
    out.evidence = opts.mode == CoeffMode::integer ? "integral" : "mod-p";
    return out;
}

std::map<int, long> nakaoka_dimensions(long p, long l) {
    if (p < 3 || p % 2 == 0) throw usage_error("nakaoka_dimensions: p must be an odd prime");
    std::map<int, long> out;
    for (long i = 2; i < (p - 1) * l; ++i) {
        long r = i % (2 * (p - 1));
        if (r == 0 || r == 1) ++out[static_cast<int>(l + i - 1)];
    }
    return out;
}

YoungQuotientReport young_quotient_homology(const std::vector<long>& ns,
                                            const HomologyOptions& opts) {
    long n = 0;
    for (long x : ns) {
        if (x < 1) throw usage_error("young_quotient_homology: bad composition");
        n += x;
    }
    YoungQuotientReport rpt;
    rpt.ns = ns;
    auto pi = enumerate_partitions(static_cast<int>(n), PosetMode::proper);
    PermGroup yg = young(std::vector<int>(ns.begin(), ns.end()));
    rpt.direct = quotient_homology(pi_n_action(pi, yg), opts);
    long g = gcd_of(ns);
    for (long d = 1; d <= g; ++d) {
        if (g % d) continue;
        std::vector<long> nsd;
        for (long x : ns) nsd.push_back(x / d);
        Int copies = witt(nsd);
        if (copies == 0) continue;
        long l = n / d - 1;
        auto block = quotient_block(static_cast<int>(d), static_cast<int>(l), opts);
        rpt.trace.push_back({d, l, copies, block.homology});
        rpt.predicted.merge(block.homology.scaled(copies.convert_to<long>()));
    }
    rpt.match = rpt.direct == rpt.predicted;
    return rpt;
}

WedgeVerdict classify_wedge_of_spheres(const std::vector<long>& ns) {
    long n = 0;
    for (long x : ns) n += x;
    long g = gcd_of(ns);
    WedgeVerdict v;
    if (g == 1) {
        v.wedge_of_spheres = true;
        v.reason = "gcd = 1: wedge of witt(ns) spheres S^{n-3}";
        return v;
    }
    bool prime = g >= 2;
    for (long q = 2; q < g; ++q)
        if (g % q == 0) prime = false;
    if (prime && (n == 2 * g || n == 3 * g)) {
        v.wedge_of_spheres = true;
        v.reason = "gcd = " + std::to_string(g) + " prime and n = " + std::to_string(n / g) +
                   "p: all blocks are spheres or contractible";
        return v;
    }
    v.wedge_of_spheres = false;
    v.reason = prime ? "gcd prime but n > 3p: a block carries p-torsion"
                     : "gcd composite: torsion blocks occur";
    return v;
}

TorsionRationalReport torsion_and_rational_checks(const std::vector<long>& ns,
                                                  const HomologyOptions& opts) {
    long n = 0;
    for (long x : ns) n += x;
    long g = gcd_of(ns);
    TorsionRationalReport rpt;
    rpt.ns = ns;
    auto pi = enumerate_partitions(static_cast<int>(n), PosetMode::proper);
    PermGroup yg = young(std::vector<int>(ns.begin(), ns.end()));
    rpt.computed = quotient_homology(pi_n_action(pi, yg), opts);
    // (a) torsion primes bounded by gcd
    rpt.torsion_primes_ok = true;
    for (const auto& [deg, dd] : rpt.computed.by_degree)
        for (const auto& t : dd.torsion) {
            Int x = t;
            for (Int q = 2; q * q <= x; ++q)
                while (x % q == 0) {
                    if (q > g) rpt.torsion_primes_ok = false;
                    x /= q;
                }
            if (x > 1 && x > g) rpt.torsion_primes_ok = false;
        }
    // (b) free part concentrated in degree n-3 with the predicted rank
    rpt.expected_free_rank = witt(ns);
    if (g % 2 == 0 && (n / 2) % 2 == 1) {
        std::vector<long> half;
        for (long x : ns) half.push_back(x / 2);
        rpt.expected_free_rank += witt(half);
    }
    rpt.free_part_ok = true;
    for (const auto& [deg, dd] : rpt.computed.by_degree) {
        if (deg == n - 3) {
            if (Int(dd.betti) != rpt.expected_free_rank) rpt.free_part_ok = false;
        } else if (dd.betti != 0) {
            rpt.free_part_ok = false;
        }
    }
    if (rpt.expected_free_rank > 0 && !rpt.computed.by_degree.count(static_cast<int>(n - 3)))
        rpt.free_part_ok = false;
    rpt.passed = rpt.torsion_primes_ok && rpt.free_part_ok;
    return rpt;
}

}  // namespace pb
