#include "pb/report.hpp"

#include <sstream>

namespace pb {

Json to_json(const HomologySummary& s) {
    Json j = Json::object();
    for (const auto& [deg, d] : s.by_degree) {
        Json e;
        e["betti"] = d.betti;
        Json tor = Json::array();
        for (const auto& t : d.torsion) tor.push_back(t.convert_to<long long>());
        e["torsion"] = tor;
        j[std::to_string(deg)] = e;
    }
    return j;
}

HomologySummary homology_from_json(const Json& j) {
    HomologySummary s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int deg = std::stoi(it.key());
        std::vector<Int> torsion;
        for (const auto& t : it.value().at("torsion")) torsion.push_back(Int(t.get<long long>()));
        s.add(deg, it.value().at("betti").get<long>(), torsion);
    }
    return s;
}

namespace {
Json ns_json(const std::vector<long>& ns) {
    Json a = Json::array();
    for (long x : ns) a.push_back(x);
    return a;
}
}  // namespace

Json to_json(const BranchingReport& r) {
    Json j;
    j["ns"] = ns_json(r.ns);
    j["dimension"] = r.dimension;
    j["evidence"] = r.evidence;
    j["unimodular"] = r.unimodular;
    if (!r.snf.empty()) {
        bool ones = all_ones(r.snf);
        j["snf_all_ones"] = ones;
        j["rank"] = static_cast<long>(r.snf.size());
    }
    if (!r.modular_ranks.empty()) {
        Json m = Json::object();
        for (auto& [p, rank] : r.modular_ranks) m[std::to_string(p)] = rank;
        j["modular_ranks"] = m;
    }
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json e;
        e["d"] = b.d;
        e["w"] = b.w;
        e["cosets"] = b.cosets;
        e["lie_d_rank"] = b.lie_d_rank;
        blocks.push_back(e);
    }
    j["blocks"] = blocks;
    return j;
}

Json to_json(const BarceloReport& r) {
    Json j;
    j["n"] = r.n;
    j["classes"] = r.classes;
    j["h_top_rank"] = r.h_top_rank;
    j["independent"] = r.independent;
    j["unimodular"] = r.unimodular;
    return j;
}

Json to_json(const CollapseIsoReport& r) {
    Json j;
    j["ns"] = ns_json(r.ns);
    j["n"] = r.n;
    j["summands"] = r.summands;
    j["square"] = r.square;
    j["disjoint"] = r.disjoint;
    j["piece_bases_ok"] = r.piece_bases_ok;
    j["evidence"] = r.evidence;
    if (r.evidence == "integral-snf") {
        j["unimodular"] = r.unimodular;
    } else {
        Json m = Json::object();
        for (auto& [p, rank] : r.modular_ranks) m[std::to_string(p)] = rank;
        j["modular_ranks"] = m;
        j["rational_rank"] = r.rational_rank;
        j["full_rank"] = r.full_rank;
    }
    j["passed"] = r.passed;
    return j;
}

Json to_json(const MainTheoremReport& r) {
    Json j;
    j["ns"] = ns_json(r.ns);
    j["collapse"] = to_json(r.collapse);
    Json rows = Json::array();
    for (const auto& row : r.fixed_rows) {
        Json e;
        e["subgroup"] = row.subgroup;
        e["order"] = row.order;
        e["lhs"] = to_json(row.lhs);
        e["rhs"] = to_json(row.rhs);
        e["match"] = row.match;
        rows.push_back(e);
    }
    j["fixed_points"] = rows;
    j["fixed_ok"] = r.fixed_ok;
    j["quotient_lhs"] = to_json(r.quotient_lhs);
    j["quotient_rhs"] = to_json(r.quotient_rhs);
    j["quotient_ok"] = r.quotient_ok;
    j["passed"] = r.passed;
    return j;
}

Json to_json(const FixedPredictionReport& r) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json e;
        e["spec"] = row.spec;
        e["isotypical"] = row.isotypical;
        e["direct"] = to_json(row.direct);
        e["predicted"] = to_json(row.predicted);
        e["match"] = row.match;
        rows.push_back(e);
    }
    j["rows"] = rows;
    j["all_match"] = r.all_match;
    return j;
}

Json to_json(const QuotientBlock& b) {
    Json j;
    j["d"] = b.d;
    j["l"] = b.l;
    j["total_faces"] = b.total_faces;
    j["homology"] = to_json(b.homology);
    j["evidence"] = b.evidence;
    return j;
}

Json to_json(const YoungQuotientReport& r) {
    Json j;
    j["ns"] = ns_json(r.ns);
    j["direct"] = to_json(r.direct);
    j["predicted"] = to_json(r.predicted);
    Json tr = Json::array();
    for (const auto& t : r.trace) {
        Json e;
        e["d"] = t.d;
        e["l"] = t.l;
        e["copies"] = t.copies.convert_to<long long>();
        e["block"] = to_json(t.block);
        tr.push_back(e);
    }
    j["trace"] = tr;
    j["match"] = r.match;
    return j;
}

Json to_json(const TorsionRationalReport& r) {
    Json j;
    j["ns"] = ns_json(r.ns);
    j["computed"] = to_json(r.computed);
    j["torsion_primes_ok"] = r.torsion_primes_ok;
    j["free_part_ok"] = r.free_part_ok;
    j["expected_free_rank"] = r.expected_free_rank.convert_to<long long>();
    j["passed"] = r.passed;
    return j;
}

std::string csv_of_homology(const HomologySummary& s) {
    std::ostringstream os;
    os << "degree,betti,torsion\n";
    for (const auto& [deg, d] : s.by_degree) {
        os << deg << ',' << d.betti << ',';
        for (size_t i = 0; i < d.torsion.size(); ++i) os << (i ? ";" : "") << d.torsion[i];
        os << '\n';
    }
    return os.str();
}

}  // namespace pb
