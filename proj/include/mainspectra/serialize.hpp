#pragma once

// JSON renderings of the reports. Exact values (rationals, polynomial
// coefficients) are written as strings.

#include <string>

#include "json.hpp"

#include "mainspectra/census.hpp"
#include "mainspectra/constructions.hpp"
#include "mainspectra/equitable.hpp"
#include "mainspectra/exact.hpp"
#include "mainspectra/graph6.hpp"
#include "mainspectra/main_spectrum.hpp"
#include "mainspectra/seidel.hpp"

namespace mainspectra {

using nlohmann::json;

inline json rational_json(const Rational& q) { return to_string(q); }

inline json polynomial_json(const IntegerPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    return {{"text", p.to_string()}, {"coefficients_low_to_high", coeffs}};
}

inline json to_json(const QuadraticPair& q) {
    return {{"mu0", q.mu0_exact()}, {"mu1", q.mu1_exact()}, {"mu0_float", q.mu0()}, {"mu1_float", q.mu1()}};
}

inline json to_json(const MainSpectrumReport& r) {
    json j{{"n", r.n},
           {"edges", r.edges},
           {"main_count", r.main_count},
           {"regular", r.regular},
           {"connected", r.connected},
           {"spectral_radius", r.spectral_radius}};
    j["two_walk"] = r.two_walk ? json{{"alpha", rational_json(r.two_walk->alpha)}, {"beta", rational_json(r.two_walk->beta)}}
                               : json(nullptr);
    j["harmonic_delta"] = r.harmonic_delta ? rational_json(*r.harmonic_delta) : json(nullptr);
    j["main_values"] = r.main_values ? to_json(*r.main_values) : json(nullptr);
    return j;
}

inline json to_json(const SeidelReport& s) {
    json j{{"char_poly", polynomial_json(s.char_poly)},
           {"distinct_count", s.distinct_count},
           {"strong", s.strong},
           {"regular_two_graph", s.regular_two_graph}};
    if (s.integer_spectrum) {
        json spec = json::array();
        for (const auto& [root, mult] : *s.integer_spectrum) spec.push_back({{"eigenvalue", root.str()}, {"multiplicity", mult}});
        j["integer_spectrum"] = spec;
    } else {
        j["integer_spectrum"] = nullptr;
        j["float_roots"] = s.float_roots;
    }
    return j;
}

inline json to_json(const Partition& p) { return p.blocks; }

inline json to_json(const QuotientMatrix& q) {
    json rows = json::array();
    for (std::size_t i = 0; i < q.entries.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < q.entries.cols(); ++j) row.push_back(rational_json(q.entries(i, j)));
        rows.push_back(row);
    }
    return {{"entries", rows}, {"block_sizes", q.block_sizes}, {"integral", q.integral()}};
}

inline json to_json(const SrgParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda ? json(*p.lambda) : json(nullptr)}, {"mu", p.mu ? json(*p.mu) : json(nullptr)}};
}

inline json to_json(const BoundaryCertificate& c) {
    json cands = json::array();
    for (const auto& q : c.candidates)
        cands.push_back({{"matrix", {{q.q11, q.q12}, {q.q21, q.q22}}}, {"equal_row_sums", q.equal_row_sums()}});
    return {{"alpha", c.alpha}, {"beta", c.beta}, {"impossible", c.impossible()}, {"candidates", cands}};
}

/// Validation summary for a constructed graph.
inline json validation_json(const Graph& g) {
    const auto pi = valency_partition(g);
    const auto params = two_walk_params(g);
    json valencies = json::array();
    for (const auto& block : pi.blocks) valencies.push_back({{"degree", g.degree(block.front())}, {"count", block.size()}});
    const auto diam = diameter(g);
    return {{"n", g.order()},
            {"edges", g.size()},
            {"connected", is_connected(g)},
            {"diameter", diam ? json(*diam) : json(nullptr)},
            {"valencies", valencies},
            {"valency_partition_equitable", is_equitable(g, pi)},
            {"main_count", main_eigenvalue_count(g)},
            {"two_walk",
             params ? json{{"alpha", rational_json(params->alpha)}, {"beta", rational_json(params->beta)}} : json(nullptr)}};
}

inline json to_json(const CensusKey& k) {
    json j{{"regular", k.regular}, {"valencies", valency_string(k.valencies)}, {"connected", k.connected}};
    if (!k.regular) {
        j["alpha"] = rational_json(k.alpha);
        j["beta"] = rational_json(k.beta);
    }
    return j;
}

inline json to_json(const CensusTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = to_json(r.key);
        row["count"] = r.count;
        row["representative_switching_set"] = r.representative;
        if (r.main_values) row["main_values"] = to_json(*r.main_values);
        rows.push_back(row);
    }
    const auto& v = t.verification;
    return {{"base_graph6", t.base_graph6},
            {"convention", std::string(to_string(t.convention))},
            {"members", t.members},
            {"regular", t.regular},
            {"nonregular", t.nonregular},
            {"disconnected", t.disconnected},
            {"rows", rows},
            {"verification",
             {{"structure_checks_enabled", v.two_graph_checks},
              {"seidel_sampled", v.seidel_checked},
              {"seidel_exhaustive", v.seidel_exhaustive},
              {"nonregular_structure_checked", v.structure_checked},
              {"nonregular_structure_sampled", v.structure_samples},
              {"regular_srg_checked", v.regular_srg_checked},
              {"disconnected_isolated_plus_srg_checked", v.disconnected_checked},
              {"representatives_rekeyed", v.key_cross_checked},
              {"alpha_from_trace", v.predicted_alpha ? rational_json(*v.predicted_alpha) : json(nullptr)}}}};
}

inline json to_json(const AuditReport& a) {
    json entries = json::array();
    for (const auto& e : a.entries) {
        json j{{"verdict", std::string(to_string(e.verdict))},
               {"alpha", rational_json(e.alpha)},
               {"beta", rational_json(e.beta)},
               {"valencies", valency_string(e.valencies)},
               {"reference_count", e.reference_count ? json(*e.reference_count) : json(nullptr)},
               {"computed_count", e.computed_count ? json(*e.computed_count) : json(nullptr)}};
        if (e.reference_line) j["reference_line"] = e.reference_line;
        if (e.main_values_consistent) j["main_values_consistent"] = *e.main_values_consistent;
        if (e.edge_count_consistent) j["valency_sum_consistent_with_edge_count"] = *e.edge_count_consistent;
        entries.push_back(j);
    }
    json regular = json::array();
    for (const auto& k : a.not_compared) regular.push_back(to_json(k));
    return {{"convention", std::string(to_string(a.convention))},
            {"summary",
             {{"match", a.count(Verdict::match)},
              {"count_mismatch", a.count(Verdict::count_mismatch)},
              {"missing", a.count(Verdict::missing)},
              {"extra", a.count(Verdict::extra)}}},
            {"totals",
             {{"class_size", a.class_size},
              {"computed_members", a.computed_members},
              {"computed_nonregular", a.computed_nonregular},
              {"reference_total", a.reference_total},
              {"reference_exceeds_class_size", a.reference_exceeds_class()}}},
            {"entries", entries},
            {"regular_rows_not_compared", regular}};
}

}  // namespace mainspectra
