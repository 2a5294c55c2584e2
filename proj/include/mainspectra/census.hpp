#pragma once

// Exhaustive census of a switching class: every member is classified by
// (regular | 2-walk (alpha, beta)), its valency multiset and connectivity,
// and counted. Work is split over contiguous subset ranges; the merge is
// exact addition, so the table does not depend on the worker count.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "mainspectra/exact.hpp"
#include "mainspectra/graph.hpp"
#include "mainspectra/graph6.hpp"
#include "mainspectra/linalg.hpp"
#include "mainspectra/main_spectrum.hpp"
#include "mainspectra/seidel.hpp"

namespace mainspectra {

enum class Convention {
    subsets_up_to_complement,  ///< 2^(n-1) members: switching sets avoiding vertex 0
    all_subsets,               ///< 2^n members: every labelled graph appears twice
};

inline std::string_view to_string(Convention c) {
    return c == Convention::all_subsets ? "all-subsets" : "up-to-complement";
}

inline Convention parse_convention(std::string_view s) {
    if (s == "up-to-complement") return Convention::subsets_up_to_complement;
    if (s == "all-subsets") return Convention::all_subsets;
    throw std::invalid_argument("unknown convention '" + std::string(s) + "'");
}

inline constexpr int census_max_order = 24;

inline std::uint64_t class_size(int n, Convention c) {
    return std::uint64_t{1} << (c == Convention::all_subsets ? n : n - 1);
}

/// Vertex set (bit v = vertex v) switched for the index-th member.
inline std::uint64_t switching_set(std::uint64_t index, Convention c) {
    return c == Convention::all_subsets ? index : index << 1;
}

inline Graph switching_member(const Graph& base, std::uint64_t vertex_set) {
    std::vector<int> subset;
    for (int v = 0; v < base.order(); ++v)
        if ((vertex_set >> v) & 1U) subset.push_back(v);
    return seidel_switch(base, subset);
}

/// Calls fn(vertex_set, member) for every member, in binary-counter order of
/// the switching set.
template <class Fn>
void enumerate_switching_class(const Graph& base, Convention c, Fn&& fn) {
    if (base.order() > census_max_order)
        throw std::invalid_argument("enumerate_switching_class: at most " + std::to_string(census_max_order) + " vertices");
    const std::uint64_t total = class_size(base.order(), c);
    for (std::uint64_t i = 0; i < total; ++i) {
        const auto set = switching_set(i, c);
        fn(set, switching_member(base, set));
    }
}

/// (degree, multiplicity) pairs in increasing degree.
using ValencyMultiset = std::vector<std::pair<int, int>>;

/// "4^2,6^8,8^6"
inline std::string valency_string(const ValencyMultiset& v) {
    std::string out;
    for (const auto& [deg, mult] : v) {
        if (!out.empty()) out += ',';
        out += std::to_string(deg) + '^' + std::to_string(mult);
    }
    return out;
}

/// Accepts "4^2,6^8" and "4^(2),6^(8)"; multiplicity defaults to 1.
inline ValencyMultiset parse_valency_string(std::string_view s) {
    std::map<int, int> acc;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = std::min(s.find(',', pos), s.size());
        std::string item(s.substr(pos, comma - pos));
        item.erase(std::remove_if(item.begin(), item.end(), [](char ch) { return ch == ' ' || ch == '(' || ch == ')'; }),
                   item.end());
        if (item.empty()) throw std::invalid_argument("empty valency entry in '" + std::string(s) + "'");
        const auto caret = item.find('^');
        try {
            std::size_t used = 0;
            const int deg = std::stoi(item.substr(0, caret), &used);
            if (used != std::min(caret, item.size())) throw std::invalid_argument("");
            int mult = 1;
            if (caret != std::string::npos) {
                mult = std::stoi(item.substr(caret + 1), &used);
                if (used != item.size() - caret - 1 || mult < 1) throw std::invalid_argument("");
            }
            acc[deg] += mult;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad valency entry '" + item + "'");
        }
        pos = comma + 1;
    }
    return {acc.begin(), acc.end()};
}

struct CensusKey {
    bool regular = false;
    Rational alpha = 0;  ///< zero for regular keys
    Rational beta = 0;
    ValencyMultiset valencies;
    bool connected = true;

    friend bool operator==(const CensusKey&, const CensusKey&) = default;
    friend bool operator<(const CensusKey& a, const CensusKey& b) {
        if (a.regular != b.regular) return a.regular;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        if (a.beta != b.beta) return a.beta < b.beta;
        if (a.valencies != b.valencies) return a.valencies < b.valencies;
        return a.connected > b.connected;
    }
};

struct ClassificationError : std::logic_error {
    using std::logic_error::logic_error;
};

inline ValencyMultiset valency_multiset(std::span<const int> degrees) {
    std::map<int, int> m;
    for (int d : degrees) ++m[d];
    return {m.begin(), m.end()};
}

/// Key of one member, by the exact route. A non-regular graph without 2-walk
/// parameters throws ClassificationError.
inline CensusKey classify_member(const Graph& g) {
    CensusKey key;
    const auto d = degree_vector(g);
    key.valencies = valency_multiset(d);
    key.connected = is_connected(g);
    key.regular = key.valencies.size() == 1;
    if (!key.regular) {
        const auto p = two_walk_params(g);
        if (!p)
            throw ClassificationError("non-regular member " + write_graph6(g) + " has " +
                                      std::to_string(main_eigenvalue_count(g)) + " main eigenvalues");
        key.alpha = p->alpha;
        key.beta = p->beta;
    }
    return key;
}

struct CensusRow {
    CensusKey key;
    std::uint64_t count = 0;
    std::uint64_t representative = 0;  ///< smallest switching set producing this key
    std::optional<QuadraticPair> main_values;
};

struct CensusOptions {
    Convention convention = Convention::subsets_up_to_complement;
    unsigned workers = 1;
    /// Members with index % sample_stride == 0 get the full exact checks; 0 disables sampling.
    std::uint64_t sample_stride = 32;
    /// Compare every member's Seidel polynomial with the base's.
    bool exhaustive_seidel = false;
};

struct CensusVerification {
    bool two_graph_checks = false;        ///< base is a nontrivial regular two-graph
    std::uint64_t seidel_checked = 0;  ///< sampled members whose Seidel polynomial equals the base's
    std::uint64_t seidel_exhaustive = 0;  ///< members checked by the exhaustive pass
    std::uint64_t structure_checked = 0;  ///< non-regular members whose adjacency polynomial has the predicted form
    std::uint64_t structure_samples = 0;  ///< how many of those came from the deterministic sample
    std::uint64_t regular_srg_checked = 0;       ///< regular members verified strongly regular
    std::uint64_t disconnected_checked = 0;  ///< disconnected members verified isolated vertex + SRG
    std::uint64_t key_cross_checked = 0;  ///< representatives re-keyed by the exact route
    std::optional<Rational> predicted_alpha;  ///< alpha forced by the trace identity
};

struct CensusTable {
    std::string base_graph6;
    Convention convention = Convention::subsets_up_to_complement;
    std::vector<CensusRow> rows;
    std::uint64_t members = 0;
    std::uint64_t regular = 0;
    std::uint64_t nonregular = 0;
    std::uint64_t disconnected = 0;
    CensusVerification verification;
};

namespace detail {

/// A switching-class member as adjacency bit rows (n <= 24).
struct BitMember {
    int n = 0;
    std::uint32_t rows[census_max_order] = {};

    int degree(int v) const { return std::popcount(rows[v]); }

    bool connected() const {
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == (n == 32 ? ~0U : (1U << n) - 1);
    }

    /// Constant common-neighbour counts on the vertex set `mask`.
    bool strongly_regular_on(std::uint32_t mask) const {
        int lambda = -1, mu = -1, k = -1;
        for (std::uint32_t a = mask; a; a &= a - 1) {
            const int u = std::countr_zero(a);
            const int du = std::popcount(rows[u] & mask);
            if (k < 0) k = du;
            if (du != k) return false;
            for (std::uint32_t b = a & (a - 1); b; b &= b - 1) {
                const int v = std::countr_zero(b);
                const int common = std::popcount(rows[u] & rows[v] & mask);
                int& slot = ((rows[u] >> v) & 1U) ? lambda : mu;
                if (slot < 0) slot = common;
                else if (slot != common) return false;
            }
        }
        return true;
    }
};

/// Seidel characteristic polynomial (highest degree first) in 128-bit
/// arithmetic; every intermediate stays far below 2^127 for n <= 16.
inline std::vector<__int128> small_seidel_poly(const BitMember& m) {
    return berkowitz<__int128>(static_cast<std::size_t>(m.n), [&](std::size_t i, std::size_t j) -> int {
        if (i == j) return 0;
        return ((m.rows[i] >> j) & 1U) ? -1 : 1;
    });
}

inline constexpr int small_seidel_max_order = 16;

inline BitMember bit_member(const Graph& base, std::uint64_t set) {
    BitMember m;
    m.n = base.order();
    const std::uint32_t all = (1U << m.n) - 1;
    const auto in = static_cast<std::uint32_t>(set);
    for (int v = 0; v < m.n; ++v) {
        const auto row = static_cast<std::uint32_t>(base.row(v)[0]);
        const std::uint32_t cross = ((in >> v) & 1U) ? (~in & all) : in;
        m.rows[v] = (row ^ cross) & all & ~(1U << v);
    }
    return m;
}

struct FastKey {
    CensusKey key;
    bool ok = true;  ///< false: non-regular without 2-walk parameters
};

inline FastKey fast_classify(const BitMember& m) {
    FastKey out;
    int deg[census_max_order] = {};
    for (int v = 0; v < m.n; ++v) deg[v] = m.degree(v);
    out.key.valencies = valency_multiset(std::span<const int>(deg, static_cast<std::size_t>(m.n)));
    out.key.connected = m.connected();
    out.key.regular = out.key.valencies.size() == 1;
    if (out.key.regular) return out;

    long long ad[census_max_order] = {};
    for (int v = 0; v < m.n; ++v) {
        ad[v] = 0;
        for (std::uint32_t r = m.rows[v]; r; r &= r - 1) ad[v] += deg[std::countr_zero(r)];
    }
    int other = 1;
    while (deg[other] == deg[0]) ++other;
    // alpha = (ad0 - ad_o) / (d0 - d_o), beta = ad0 - alpha d0; check A d = alpha d + beta j
    const long long num = ad[0] - ad[other], den = deg[0] - deg[other];
    for (int v = 0; v < m.n; ++v)
        if ((ad[v] - ad[0]) * den != num * (deg[v] - deg[0])) {
            out.ok = false;
            return out;
        }
    out.key.alpha = make_rational(num, den);
    out.key.beta = Rational(ad[0]) - out.key.alpha * deg[0];
    return out;
}

struct WorkerResult {
    std::map<CensusKey, CensusRow> rows;
    CensusVerification verification;
    std::uint64_t members = 0;
};

struct CensusContext {
    const Graph* base = nullptr;
    CensusOptions options;
    IntegerPolynomial base_seidel;
    bool two_graph_checks = false;
    Integer theta0, theta1;
    int nonmain0 = 0, nonmain1 = 0;
    std::optional<Rational> predicted_alpha;
    std::vector<__int128> base_small_seidel;
};

inline IntegerPolynomial predicted_char_poly(const CensusContext& ctx, const CensusKey& key) {
    return quadratic_factor({key.alpha, key.beta}) *
           IntegerPolynomial::linear_factor(ctx.theta0).pow(static_cast<unsigned>(ctx.nonmain0)) *
           IntegerPolynomial::linear_factor(ctx.theta1).pow(static_cast<unsigned>(ctx.nonmain1));
}

/// Full exact checks on one member: switching invariance of the Seidel
/// polynomial and, for non-regular members of a regular two-graph, the
/// predicted adjacency polynomial with four distinct roots.
inline bool exact_member_checks(const CensusContext& ctx, const Graph& g, const CensusKey& key,
                                CensusVerification& ver, bool from_sample) {
    if (char_poly(seidel_matrix(g)) != ctx.base_seidel)
        throw ClassificationError("switching changed the Seidel polynomial of member " + write_graph6(g));
    ++ver.seidel_checked;
    if (!ctx.two_graph_checks || key.regular) return true;
    const auto a_poly = char_poly(adjacency_matrix(g));
    if (a_poly != predicted_char_poly(ctx, key) || distinct_root_count(a_poly) != 4)
        throw ClassificationError("member " + write_graph6(g) + " violates the four-eigenvalue structure");
    ++ver.structure_checked;
    if (from_sample) ++ver.structure_samples;
    return true;
}

inline WorkerResult run_range(const CensusContext& ctx, std::uint64_t begin, std::uint64_t end) {
    WorkerResult out;
    const Graph& base = *ctx.base;
    const std::uint32_t all = (1U << base.order()) - 1;
    for (std::uint64_t i = begin; i < end; ++i) {
        const auto set = switching_set(i, ctx.options.convention);
        const auto m = bit_member(base, set);
        auto fast = fast_classify(m);
        if (!fast.ok)
            throw ClassificationError("non-regular member " + write_graph6(switching_member(base, set)) +
                                      " is not 2-walk linear");
        const CensusKey& key = fast.key;

        if (ctx.options.exhaustive_seidel) {
            const bool same = base.order() <= small_seidel_max_order
                                  ? small_seidel_poly(m) == ctx.base_small_seidel
                                  : char_poly(seidel_matrix(switching_member(base, set))) == ctx.base_seidel;
            if (!same)
                throw ClassificationError("switching changed the Seidel polynomial of member " +
                                          write_graph6(switching_member(base, set)));
            ++out.verification.seidel_exhaustive;
        }

        if (ctx.two_graph_checks) {
            if (!key.connected) {
                int isolated = -1;
                for (int v = 0; v < m.n; ++v)
                    if (m.rows[v] == 0) isolated = isolated < 0 ? v : m.n;
                const std::uint32_t rest = isolated >= 0 && isolated < m.n ? all & ~(1U << isolated) : 0;
                BitMember sub = m;
                if (!rest || !sub.strongly_regular_on(rest))
                    throw ClassificationError("disconnected member is not an isolated vertex plus an SRG");
                // the remaining part must itself be connected
                BitMember rest_only = m;
                int shift = 0;
                for (int v = 0; v < m.n; ++v) {
                    if (v == isolated) continue;
                    std::uint32_t r = 0;
                    for (int w = 0, k = 0; w < m.n; ++w) {
                        if (w == isolated) continue;
                        r |= ((m.rows[v] >> w) & 1U) << k++;
                    }
                    rest_only.rows[shift++] = r;
                }
                rest_only.n = m.n - 1;
                if (!rest_only.connected())
                    throw ClassificationError("disconnected member has more than two components");
                ++out.verification.disconnected_checked;
            } else if (key.regular) {
                if (!m.strongly_regular_on(all))
                    throw ClassificationError("regular member is not strongly regular");
                ++out.verification.regular_srg_checked;
            }
            if (!key.regular && ctx.predicted_alpha && key.alpha != *ctx.predicted_alpha)
                throw ClassificationError("non-regular member has alpha " + to_string(key.alpha) +
                                          ", trace identity forces " + to_string(*ctx.predicted_alpha));
        }

        auto [it, fresh] = out.rows.try_emplace(key);
        if (fresh) {
            it->second.key = key;
            it->second.representative = set;
        }
        ++it->second.count;
        it->second.representative = std::min(it->second.representative, set);
        ++out.members;

        if (ctx.options.sample_stride && i % ctx.options.sample_stride == 0)
            exact_member_checks(ctx, switching_member(base, set), key, out.verification, true);
    }
    return out;
}

/// Whether some switching of g is empty (complete when `complement` is set).
inline bool switches_to_uniform(const Graph& g, bool complement) {
    std::vector<int> set;
    for (int v = 1; v < g.order(); ++v)
        if (g.adjacent(0, v) != complement) set.push_back(v);
    const Graph s = seidel_switch(g, set);
    return s.size() == (complement ? static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2 : 0U);
}

}  // namespace detail

/// Census of the switching class of `base`. When the base lies in a
/// nontrivial regular two-graph with integral Seidel spectrum, the
/// structural facts of such classes are enforced on every member and a
/// violation throws ClassificationError.
inline CensusTable census_table(const Graph& base, const CensusOptions& options = {}) {
    if (base.order() > census_max_order)
        throw std::invalid_argument("census_table: at most " + std::to_string(census_max_order) + " vertices");
    if (options.workers < 1) throw std::invalid_argument("census_table: need at least one worker");

    detail::CensusContext ctx;
    ctx.base = &base;
    ctx.options = options;
    ctx.base_seidel = char_poly(seidel_matrix(base));
    if (options.exhaustive_seidel && base.order() <= detail::small_seidel_max_order) {
        ctx.base_small_seidel = detail::small_seidel_poly(detail::bit_member(base, 0));
        std::vector<Integer> high_first(ctx.base_seidel.coefficients().rbegin(), ctx.base_seidel.coefficients().rend());
        if (ctx.base_small_seidel.size() != high_first.size())
            throw std::logic_error("census_table: 128-bit Seidel polynomial has the wrong degree");
        for (std::size_t i = 0; i < high_first.size(); ++i)
            if (Integer(static_cast<long long>(ctx.base_small_seidel[i])) != high_first[i])
                throw std::logic_error("census_table: 128-bit Seidel polynomial disagrees with the exact one");
    }
    const auto seidel = seidel_report(base);
    if (base.order() >= 3 && seidel.regular_two_graph && seidel.integer_spectrum &&
        !detail::switches_to_uniform(base, false) && !detail::switches_to_uniform(base, true)) {
        const auto& spec = *seidel.integer_spectrum;
        if ((-1 - spec[0].first) % 2 == 0 && (-1 - spec[1].first) % 2 == 0) {
            ctx.two_graph_checks = true;
            ctx.theta0 = (-1 - spec[0].first) / 2;
            ctx.theta1 = (-1 - spec[1].first) / 2;
            ctx.nonmain0 = spec[0].second - 1;
            ctx.nonmain1 = spec[1].second - 1;
            // trace A = 0: alpha = -(nonmain0 theta0 + nonmain1 theta1)
            ctx.predicted_alpha = Rational(-(ctx.theta0 * ctx.nonmain0 + ctx.theta1 * ctx.nonmain1));
        }
    }

    const std::uint64_t total = class_size(base.order(), options.convention);
    const std::uint64_t workers = std::min<std::uint64_t>(options.workers, total);
    std::vector<detail::WorkerResult> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    parts[w] = detail::run_range(ctx, total * w / workers, total * (w + 1) / workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    CensusTable table;
    table.base_graph6 = write_graph6(base);
    table.convention = options.convention;
    table.verification.two_graph_checks = ctx.two_graph_checks;
    table.verification.predicted_alpha = ctx.predicted_alpha;
    std::map<CensusKey, CensusRow> merged;
    for (auto& part : parts) {
        table.members += part.members;
        auto& v = table.verification;
        v.seidel_checked += part.verification.seidel_checked;
        v.seidel_exhaustive += part.verification.seidel_exhaustive;
        v.structure_checked += part.verification.structure_checked;
        v.structure_samples += part.verification.structure_samples;
        v.regular_srg_checked += part.verification.regular_srg_checked;
        v.disconnected_checked += part.verification.disconnected_checked;
        for (auto& [key, row] : part.rows) {
            auto [it, fresh] = merged.try_emplace(key, row);
            if (!fresh) {
                it->second.count += row.count;
                it->second.representative = std::min(it->second.representative, row.representative);
            }
        }
    }

    for (auto& [key, row] : merged) {
        const Graph rep = switching_member(base, row.representative);
        if (classify_member(rep) != key)
            throw ClassificationError("fast and exact classification disagree on " + write_graph6(rep));
        ++table.verification.key_cross_checked;
        detail::exact_member_checks(ctx, rep, key, table.verification, false);
        if (!key.regular) row.main_values = main_values({key.alpha, key.beta});
        (key.regular ? table.regular : table.nonregular) += row.count;
        if (!key.connected) table.disconnected += row.count;
        table.rows.push_back(std::move(row));
    }
    return table;
}

// CSV -------------------------------------------------------------------------

inline std::string census_csv(const CensusTable& t) {
    std::ostringstream os;
    os << "alpha,beta,mu0,mu1,valencies,count,connected\n";
    for (const auto& row : t.rows) {
        const auto& k = row.key;
        if (k.regular)
            os << ",," << k.valencies.front().first << ",,";
        else
            os << to_string(k.alpha) << ',' << to_string(k.beta) << ',' << row.main_values->mu0_exact() << ','
               << row.main_values->mu1_exact() << ',';
        os << '"' << valency_string(k.valencies) << "\"," << row.count << ',' << (k.connected ? "true" : "false") << '\n';
    }
    return os.str();
}

struct ReferenceRow {
    Rational alpha, beta;
    std::string mu0, mu1;
    ValencyMultiset valencies;
    std::uint64_t count = 0;
    int line = 0;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) out.emplace_back();
        else if (ch != '\r') out.back() += ch;
    }
    if (quoted) throw std::invalid_argument("unterminated quote");
    return out;
}

}  // namespace detail

/// Reads alpha,beta,mu0,mu1,valencies,count (extra columns ignored, header
/// required). Throws std::invalid_argument with a line number on bad input.
inline std::vector<ReferenceRow> parse_reference_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("reference: empty file");
    const auto header = detail::split_csv_line(line);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* name : {"alpha", "beta", "valencies", "count"})
        if (!col.count(name)) throw std::invalid_argument(std::string("reference: missing column '") + name + "'");

    std::vector<ReferenceRow> rows;
    for (int lineno = 2; std::getline(in, line); ++lineno) {
        if (line.empty() || line == "\r") continue;
        try {
            const auto f = detail::split_csv_line(line);
            if (f.size() != header.size()) throw std::invalid_argument("expected " + std::to_string(header.size()) + " fields");
            ReferenceRow r;
            r.line = lineno;
            r.alpha = parse_rational(f[col["alpha"]]);
            r.beta = parse_rational(f[col["beta"]]);
            if (col.count("mu0")) r.mu0 = f[col["mu0"]];
            if (col.count("mu1")) r.mu1 = f[col["mu1"]];
            r.valencies = parse_valency_string(f[col["valencies"]]);
            const std::string& c = f[col["count"]];
            if (c.empty() || c.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad count '" + c + "'");
            r.count = std::stoull(c);
            rows.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("reference line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

enum class Verdict { match, count_mismatch, missing, extra };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::count_mismatch: return "count-mismatch";
        case Verdict::missing: return "missing";
        case Verdict::extra: return "extra";
    }
    return "?";
}

struct AuditEntry {
    Verdict verdict = Verdict::match;
    Rational alpha, beta;
    ValencyMultiset valencies;
    std::optional<std::uint64_t> reference_count;
    std::optional<std::uint64_t> computed_count;
    int reference_line = 0;
    /// Reference mu0/mu1 strings equal the exact renderings of (alpha, beta).
    std::optional<bool> main_values_consistent;
    /// Reference valency sum equals twice the edge count shared by the
    /// computed rows with the same (alpha, beta); unset when there are none.
    std::optional<bool> edge_count_consistent;
};

struct AuditReport {
    Convention convention = Convention::subsets_up_to_complement;
    std::vector<AuditEntry> entries;
    std::vector<CensusKey> not_compared;  ///< regular rows; the reference lists non-regular rows only
    std::uint64_t class_size = 0;
    std::uint64_t reference_total = 0;
    std::uint64_t computed_nonregular = 0;
    std::uint64_t computed_members = 0;

    std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.verdict == v; }));
    }
    bool reference_exceeds_class() const { return reference_total > class_size; }
};

/// Row-by-row comparison keyed on (alpha, beta, valency multiset). Counts are
/// reported as found; nothing is rescaled.
inline AuditReport compare_to_reference(const CensusTable& table, const std::vector<ReferenceRow>& reference) {
    AuditReport a;
    a.convention = table.convention;
    a.computed_members = table.members;
    a.computed_nonregular = table.nonregular;
    a.class_size = table.members;

    std::map<std::tuple<Rational, Rational, ValencyMultiset>, const CensusRow*> computed;
    std::map<std::pair<Rational, Rational>, std::optional<long long>> edges_by_params;
    for (const auto& row : table.rows) {
        if (row.key.regular) {
            a.not_compared.push_back(row.key);
            continue;
        }
        computed[{row.key.alpha, row.key.beta, row.key.valencies}] = &row;
        long long sum = 0;
        for (const auto& [d, m] : row.key.valencies) sum += static_cast<long long>(d) * m;
        auto [it, fresh] = edges_by_params.try_emplace({row.key.alpha, row.key.beta}, sum / 2);
        if (!fresh && it->second != sum / 2) it->second.reset();
    }

    std::map<std::tuple<Rational, Rational, ValencyMultiset>, bool> used;
    for (const auto& ref : reference) {
        AuditEntry e;
        e.alpha = ref.alpha;
        e.beta = ref.beta;
        e.valencies = ref.valencies;
        e.reference_count = ref.count;
        e.reference_line = ref.line;
        a.reference_total += ref.count;
        if (ref.alpha * ref.alpha + 4 * ref.beta > 0 && (!ref.mu0.empty() || !ref.mu1.empty())) {
            const QuadraticPair q(ref.alpha, ref.beta);
            e.main_values_consistent = ref.mu0 == q.mu0_exact() && ref.mu1 == q.mu1_exact();
        }
        if (auto it = edges_by_params.find({ref.alpha, ref.beta}); it != edges_by_params.end() && it->second) {
            long long sum = 0;
            for (const auto& [d, m] : ref.valencies) sum += static_cast<long long>(d) * m;
            e.edge_count_consistent = sum == 2 * *it->second;
        }
        const auto key = std::make_tuple(ref.alpha, ref.beta, ref.valencies);
        if (auto it = computed.find(key); it != computed.end() && !used[key]) {
            used[key] = true;
            e.computed_count = it->second->count;
            e.verdict = it->second->count == ref.count ? Verdict::match : Verdict::count_mismatch;
        } else {
            e.verdict = Verdict::missing;
        }
        a.entries.push_back(std::move(e));
    }
    for (const auto& [key, row] : computed) {
        if (used[key]) continue;
        AuditEntry e;
        e.verdict = Verdict::extra;
        e.alpha = row->key.alpha;
        e.beta = row->key.beta;
        e.valencies = row->key.valencies;
        e.computed_count = row->count;
        a.entries.push_back(std::move(e));
    }
    return a;
}

}  // namespace mainspectra
