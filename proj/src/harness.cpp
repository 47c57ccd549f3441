#include "regpow/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "regpow/io.hpp"
#include "regpow/regularity.hpp"

namespace regpow {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string format_p(double p) {
    std::ostringstream ss;
    ss << p;
    return ss.str();
}

struct Outcome {
    json line = json::object();
    bool skipped = false;
    bool asserted = true;
    bool pass = true;
    bool mismatch = false;
};

// Evaluates fn(0..count-1) on `jobs` threads; results come back in index order.
std::vector<Outcome> evaluate(std::size_t count, int jobs, bool timing,
                              const std::function<Outcome(std::size_t)>& fn) {
    std::vector<Outcome> out(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            const auto start = Clock::now();
            Outcome o;
            try {
                o = fn(k);
            } catch (const CrossCheckMismatch& ex) {
                o.mismatch = true;
                o.pass = false;
                o.line["error"] = ex.what();
            } catch (const std::exception& ex) {
                o.pass = false;
                o.line["error"] = ex.what();
            }
            if (timing) o.line["wall_ms"] = elapsed_ms(start);
            out[k] = std::move(o);
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

SuiteResult collect(std::string name, std::vector<Outcome> outcomes, const VerifyParams& params,
                    Clock::time_point start) {
    SuiteResult r;
    r.suite = std::move(name);
    r.items = outcomes.size();
    r.timing = params.timing;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        Outcome& o = outcomes[k];
        json line = {{"suite", r.suite}, {"index", k}};
        line.update(o.line);
        if (o.skipped) {
            ++r.skipped;
            line["skipped"] = true;
        } else if (!o.asserted) {
            ++r.reported;
            line["asserted"] = false;
        } else {
            ++r.checked;
            line["pass"] = o.pass;
            if (!o.pass) ++r.failures;
        }
        if (o.mismatch) {
            ++r.mismatches;
            line["cross_check_mismatch"] = true;
        }
        r.lines.push_back(std::move(line));
    }
    r.wall_ms = elapsed_ms(start);
    return r;
}

json graph_descriptor(const CorpusItem& item) {
    json j = graph_to_json(item.graph);
    j["id"] = item.id;
    return j;
}

json certificates_json(const MonomialIdeal& I, const Field& field) {
    RegularityOptions opts;
    opts.field = field;
    json out = json::array();
    for (const auto& c : regularity_via_degree_complexes(I, opts).certificates) out.push_back(certificate_to_json(c));
    return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (std::uint64_t{words[0]} << 32) | words[1];
}

std::vector<int> default_sizes(const VerifyParams& params, int nmax) {
    if (!params.random_sizes.empty()) return params.random_sizes;
    return {nmax + 1, nmax + 2};
}

// Exhaustive corpus plus seeded random graphs, or the explicit graphs when given.
std::vector<CorpusItem> suite_corpus(const VerifyParams& params, int default_nmax, CorpusMode default_mode,
                                     std::size_t default_samples, bool random_gap_free, double default_p) {
    if (!params.explicit_graphs.empty()) return params.explicit_graphs;
    const int nmax = params.nmax.value_or(default_nmax);
    auto corpus = exhaustive_corpus(nmax, params.corpus.value_or(default_mode));
    const std::size_t samples = params.samples.value_or(default_samples);
    if (samples > 0) {
        auto extra = random_corpus(samples, default_sizes(params, nmax), params.p.value_or(default_p), params.seed,
                                   random_gap_free);
        corpus.insert(corpus.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
    }
    return corpus;
}

std::vector<int> powers_of(const VerifyParams& params) {
    if (params.s) {
        if (*params.s != 2 && *params.s != 3) throw DomainError("this suite supports s = 2 or 3");
        return {*params.s};
    }
    return {2, 3};
}

} // namespace

// ---------------------------------------------------------------------------
// Corpora

std::vector<CorpusItem> labeled_corpus(int n) {
    std::vector<CorpusItem> out;
    enumerate_all(n, [&](const Graph& g) {
        out.push_back({"labeled:" + std::to_string(n) + ":" + std::to_string(g.upper_triangle_bits()), g});
    });
    return out;
}

std::vector<CorpusItem> iso_corpus(int nmin, int nmax) {
    std::vector<CorpusItem> out;
    for (int n = std::max(nmin, 1); n <= nmax; ++n) {
        for (const Graph& g : isomorphism_classes(n)) {
            out.push_back({"iso:" + std::to_string(n) + ":" + std::to_string(g.upper_triangle_bits()), g});
        }
    }
    return out;
}

std::vector<CorpusItem> random_corpus(std::size_t count, const std::vector<int>& sizes, double p,
                                      std::uint64_t seed, bool gap_free) {
    if (sizes.empty()) throw DomainError("random corpus needs at least one size");
    std::vector<CorpusItem> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const int n = sizes[k % sizes.size()];
        const std::uint64_t item_seed = derive_seed(seed, k, gap_free ? 1 : 0);
        const std::string tag = ":" + std::to_string(n) + ":" + format_p(p) + ":" + std::to_string(item_seed);
        if (gap_free) {
            auto sample = gapfree_random_graph(n, p, item_seed);
            out.push_back({"gapfree" + tag, std::move(sample.graph)});
        } else {
            out.push_back({"gnp" + tag, gnp_graph(n, p, item_seed)});
        }
    }
    return out;
}

MonomialIdeal random_squarefree_ideal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int count = 2 + static_cast<int>(rng() % 5);
    std::vector<VertexMask> masks;
    for (int k = 0; k < count; ++k) {
        const int degree = 1 + static_cast<int>(rng() % 3);
        VertexMask m = 0;
        while (std::popcount(m) < std::min(degree, n)) m |= VertexMask{1} << (rng() % static_cast<std::uint64_t>(n));
        masks.push_back(m);
    }
    return ideal_from_masks(n, masks);
}

std::vector<CorpusItem> exhaustive_corpus(int nmax, CorpusMode mode) {
    if (nmax < 1 || nmax > kMaxEnumerateVertices) {
        throw DomainError("exhaustive corpora support 1 <= nmax <= " + std::to_string(kMaxEnumerateVertices));
    }
    if (mode == CorpusMode::Iso) return iso_corpus(1, nmax);
    auto out = labeled_corpus(std::min(nmax, 5));
    if (nmax >= 6) {
        auto iso = iso_corpus(6, nmax);
        out.insert(out.end(), std::make_move_iterator(iso.begin()), std::make_move_iterator(iso.end()));
    }
    return out;
}

int default_jobs() {
    if (const char* env = std::getenv("REGPOW_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

json SuiteResult::summary() const {
    json j = {{"suite", suite},      {"summary", true},         {"items", items},
              {"checked", checked},  {"failures", failures},    {"skipped", skipped},
              {"reported", reported}, {"mismatches", mismatches}, {"pass", failures == 0 && mismatches == 0}};
    if (timing) j["wall_ms"] = wall_ms;
    return j;
}

int SuiteResult::exit_code() const {
    if (mismatches > 0) return 3;
    if (failures > 0) return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// Suites

SuiteResult verify_oracle(const VerifyParams& params) {
    const auto start = Clock::now();
    const auto corpus = suite_corpus(params, 5, CorpusMode::Labeled, 100, false, 0.5);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        o.line["field"] = params.field.to_string();
        if (item.graph.num_edges() == 0) {
            o.skipped = true;
            return o;
        }
        const MonomialIdeal I = edge_ideal(item.graph);
        const int via_complexes = regularity(I, params.field);
        const int via_betti = reg_from_betti(betti_oracle(I, params.field));
        o.line["reg_degree_complex"] = via_complexes;
        o.line["reg_betti"] = via_betti;
        o.pass = via_complexes == via_betti;
        if (!o.pass) o.line["certificates"] = certificates_json(I, params.field);
        return o;
    });
    return collect("oracle", std::move(outcomes), params, start);
}

SuiteResult verify_froberg(const VerifyParams& params) {
    const auto start = Clock::now();
    const auto corpus = suite_corpus(params, 5, CorpusMode::Labeled, 100, false, 0.5);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        o.line["field"] = params.field.to_string();
        if (item.graph.num_edges() == 0) {
            o.skipped = true;
            return o;
        }
        const MonomialIdeal I = edge_ideal(item.graph);
        const bool linear = has_linear_resolution(I, params.field, ResolutionRoute::Both);
        const bool chordal = is_chordal(complement(item.graph));
        o.line["linear_resolution"] = linear;
        o.line["complement_chordal"] = chordal;
        o.pass = linear == chordal;
        if (!o.pass) o.line["certificates"] = certificates_json(I, params.field);
        return o;
    });
    return collect("froberg", std::move(outcomes), params, start);
}

SuiteResult verify_power_formula(int s, const VerifyParams& params) {
    if (s != 2 && s != 3) throw DomainError("power formula suite supports s = 2 or 3");
    const auto start = Clock::now();
    const auto corpus = s == 2 ? suite_corpus(params, 6, CorpusMode::Iso, 100, true, 0.6)
                               : suite_corpus(params, 5, CorpusMode::Labeled, 30, true, 0.6);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        o.line["s"] = s;
        o.line["field"] = params.field.to_string();
        if (item.graph.num_edges() == 0 || !is_gap_free(item.graph)) {
            o.skipped = true;
            return o;
        }
        const MonomialIdeal I = edge_ideal(item.graph);
        const MonomialIdeal Is = power(I, s);
        const MonomialIdeal Isym = symbolic_power(I, s);
        const int r = regularity(I, params.field);
        const int expected = std::max(r + s - 1, 2 * s);
        const int r_power = regularity(Is, params.field);
        const int r_symbolic = regularity(Isym, params.field);
        o.line["reg_I"] = r;
        o.line["reg_power"] = r_power;
        o.line["reg_symbolic"] = r_symbolic;
        o.line["expected"] = expected;
        bool ok = r_power == expected && r_symbolic == expected;

        const auto extras = extra_generators(Is, Isym);
        o.line["extra_generators"] = extras.size();
        json inter = json::array();
        for (int t = 0; t < params.intermediates; ++t) {
            const auto selector = IntermediateSelector::random(derive_seed(params.seed, k, 100 + t));
            const MonomialIdeal J = intermediate_ideal(Is, Isym, selector);
            const int rj = regularity(J, params.field);
            const std::size_t added = extras.size() - extra_generators(J, Isym).size();
            inter.push_back({{"added", added}, {"reg", rj}});
            ok = ok && rj == expected;
            if (rj != expected) inter.back()["certificates"] = certificates_json(J, params.field);
        }
        o.line["intermediates"] = inter;

        if (params.rational_subsample && k % 10 == 0 && params.field != Field::rationals()) {
            const Field q = Field::rationals();
            const int rq = regularity(I, q);
            const int rpq = regularity(Is, q);
            const int rsq = regularity(Isym, q);
            const int expected_q = std::max(rq + s - 1, 2 * s);
            o.line["rational_check"] = {{"reg_I", rq}, {"reg_power", rpq}, {"reg_symbolic", rsq}};
            ok = ok && rpq == expected_q && rsq == expected_q;
        }
        o.pass = ok;
        if (!ok) {
            o.line["certificates_power"] = certificates_json(Is, params.field);
            o.line["certificates_symbolic"] = certificates_json(Isym, params.field);
        }
        return o;
    });
    return collect(s == 2 ? "pow2" : "pow3", std::move(outcomes), params, start);
}

SuiteResult verify_characterization(int s, const VerifyParams& params) {
    if (s != 2 && s != 3) throw DomainError("characterization suite supports s = 2 or 3");
    const auto start = Clock::now();
    const auto corpus = s == 2 ? suite_corpus(params, 6, CorpusMode::Iso, 0, true, 0.6)
                               : suite_corpus(params, 5, CorpusMode::Labeled, 30, true, 0.6);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        o.line["s"] = s;
        o.line["field"] = params.field.to_string();
        if (item.graph.num_edges() == 0) {
            o.skipped = true;
            return o;
        }
        const MonomialIdeal I = edge_ideal(item.graph);
        const MonomialIdeal Is = power(I, s);
        const int r = regularity(I, params.field);
        const int r_power = regularity(Is, params.field);
        const bool gap_free = is_gap_free(item.graph);
        const bool linear = r_power == 2 * s;
        o.line["reg_I"] = r;
        o.line["reg_power"] = r_power;
        o.line["gap_free"] = gap_free;
        o.line["linear_resolution"] = linear;
        try {
            const BettiTable table = betti_oracle(Is, params.field);
            const bool linear_betti = std::all_of(table.entries.begin(), table.entries.end(), [&](const auto& e) {
                return e.first.second.degree() == e.first.first + 2 * s;
            });
            o.line["linear_resolution_betti"] = linear_betti;
            if (linear_betti != linear) {
                throw CrossCheckMismatch("linear-resolution routes disagree");
            }
        } catch (const DomainError&) {
            o.line["linear_resolution_betti"] = nullptr; // lattice above cap
        }
        bool ok = linear == (gap_free && r <= s + 1);
        if (linear && !gap_free) ok = false;
        if (s == 2) {
            const bool bracket = r_power == r + 1 || r_power == r + 2;
            o.line["bracketing"] = bracket;
            ok = ok && bracket;
        }
        o.pass = ok;
        if (!ok) o.line["certificates_power"] = certificates_json(Is, params.field);
        return o;
    });
    return collect(s == 2 ? "char2" : "char3", std::move(outcomes), params, start);
}

SuiteResult verify_lowerbound(const VerifyParams& params) {
    const auto start = Clock::now();
    const int nmax = params.nmax.value_or(5);
    if (nmax < 2 || nmax > 8) throw DomainError("lowerbound suite supports 2 <= nmax <= 8");
    const std::size_t samples = params.samples.value_or(50);
    const auto powers = powers_of(params);
    struct Task {
        MonomialIdeal ideal;
        int s;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < samples; ++k) {
        const int n = 3 + static_cast<int>(k % static_cast<std::size_t>(std::max(1, nmax - 2)));
        const std::uint64_t seed = derive_seed(params.seed, k, 7);
        const MonomialIdeal I = random_squarefree_ideal(std::min(n, nmax), seed);
        for (int s : powers) tasks.push_back({I, s, seed});
    }
    auto outcomes = evaluate(tasks.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const Task& t = tasks[k];
        o.line["ideal"] = ideal_to_json(t.ideal);
        o.line["s"] = t.s;
        o.line["field"] = params.field.to_string();
        const int r = regularity(t.ideal, params.field);
        const int bound = r + t.s - 1;
        const MonomialIdeal Is = power(t.ideal, t.s);
        const MonomialIdeal Isym = symbolic_power(t.ideal, t.s);
        const int r_power = regularity(Is, params.field);
        const int r_symbolic = regularity(Isym, params.field);
        o.line["reg_I"] = r;
        o.line["bound"] = bound;
        o.line["reg_power"] = r_power;
        o.line["reg_symbolic"] = r_symbolic;
        bool ok = r_power >= bound && r_symbolic >= bound;
        json inter = json::array();
        for (int u = 0; u < params.intermediates; ++u) {
            const MonomialIdeal J =
                intermediate_ideal(Is, Isym, IntermediateSelector::random(derive_seed(t.seed, t.s, 200 + u)));
            const int rj = regularity(J, params.field);
            inter.push_back(rj);
            ok = ok && rj >= bound;
        }
        o.line["reg_intermediates"] = inter;
        o.pass = ok;
        if (!ok) o.line["certificates_I"] = certificates_json(t.ideal, params.field);
        return o;
    });
    return collect("lowerbound", std::move(outcomes), params, start);
}

SuiteResult verify_differential(const VerifyParams& params) {
    const auto start = Clock::now();
    const auto corpus = suite_corpus(params, 5, CorpusMode::Labeled, 0, false, 0.5);
    const auto powers = powers_of(params);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        if (item.graph.num_edges() == 0) {
            o.skipped = true;
            return o;
        }
        const MonomialIdeal I = edge_ideal(item.graph);
        const int n = item.graph.num_vertices();
        json per_power = json::array();
        bool ok = true;
        for (int s : powers) {
            const MonomialIdeal Isym = symbolic_power(I, s);
            std::size_t monomials = 0, disagreements = 0;
            json first_bad = nullptr;
            GammaBox box(n, std::vector<int>(static_cast<std::size_t>(n), 2 * s + 2));
            box.for_each([&](const ExponentVector& f) {
                if (f.degree() > 2 * s + 2) return;
                ++monomials;
                const bool by_cover = Isym.contains(f);
                const bool by_derivative = differential_membership(f, I, s);
                if (by_cover != by_derivative) {
                    if (disagreements++ == 0) first_bad = f.to_vector();
                }
            });
            per_power.push_back({{"s", s}, {"monomials", monomials}, {"disagreements", disagreements},
                                 {"first_disagreement", first_bad}});
            ok = ok && disagreements == 0;
        }
        o.line["checks"] = per_power;
        o.pass = ok;
        return o;
    });
    return collect("differential", std::move(outcomes), params, start);
}

SuiteResult verify_extremal_bounds(const VerifyParams& params) {
    const auto start = Clock::now();
    const auto corpus = suite_corpus(params, 6, CorpusMode::Iso, 0, false, 0.5);
    const auto powers = powers_of(params);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        o.line["field"] = params.field.to_string();
        if (item.graph.num_edges() == 0) {
            o.skipped = true;
            return o;
        }
        bool ok = true;
        json per_power = json::array();
        for (int s : powers) {
            const MonomialIdeal Isym = symbolic_power(item.graph, s);
            RegularityOptions opts;
            opts.field = params.field;
            const auto result = regularity_via_degree_complexes(Isym, opts);
            json violations = json::array();
            for (const auto& cert : result.certificates) {
                std::vector<std::string> why;
                if (cert.a.degree() > 2 * s - 2) why.push_back("|a| > 2s-2");
                for (int j = 0; j < cert.a.size(); ++j) {
                    if (cert.a[j] >= s) {
                        why.push_back("a_j >= s");
                        break;
                    }
                }
                if (auto bad = check_certificate(Isym, cert)) why.push_back(*bad);
                if (!why.empty()) violations.push_back({{"certificate", certificate_to_json(cert)}, {"violations", why}});
            }
            if (result.certificates.empty()) violations.push_back("no certificates");
            per_power.push_back({{"s", s},
                                 {"reg_symbolic", result.reg},
                                 {"certificates", result.certificates.size()},
                                 {"violations", violations}});
            ok = ok && violations.empty();
        }
        o.line["checks"] = per_power;
        o.pass = ok;
        return o;
    });
    return collect("extremal-bounds", std::move(outcomes), params, start);
}

std::vector<std::vector<int>> admissible_tuples(ColonPattern pattern, int n) {
    std::vector<std::vector<int>> out;
    switch (pattern) {
    case ColonPattern::SquarefreePair:
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) out.push_back({i, j});
        break;
    case ColonPattern::SquarePlusOne:
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) out.push_back({i, j});
        break;
    case ColonPattern::SquarePlusPair:
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = j + 1; l < n; ++l)
                    if (i != j && i != l) out.push_back({i, j, l});
        break;
    case ColonPattern::SquarefreeQuad:
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int l = j + 1; l < n; ++l)
                    for (int m = l + 1; m < n; ++m) out.push_back({i, j, l, m});
        break;
    }
    return out;
}

SuiteResult verify_colon_identities(const VerifyParams& params) {
    const auto start = Clock::now();
    const auto corpus = suite_corpus(params, 6, CorpusMode::Iso, 0, true, 0.6);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        if (item.graph.num_edges() == 0) {
            o.skipped = true;
            return o;
        }
        const bool gap_free = is_gap_free(item.graph);
        o.line["gap_free"] = gap_free;
        const MonomialIdeal I2 = symbolic_power(item.graph, 2);
        const MonomialIdeal I3 = symbolic_power(item.graph, 3);
        json counts = json::object();
        json failing = json::array();
        for (auto pattern : {ColonPattern::SquarefreePair, ColonPattern::SquarePlusOne, ColonPattern::SquarePlusPair,
                             ColonPattern::SquarefreeQuad}) {
            std::size_t tuples = 0, failed = 0;
            const MonomialIdeal& symbolic = pattern_power(pattern) == 2 ? I2 : I3;
            for (const auto& tuple : admissible_tuples(pattern, item.graph.num_vertices())) {
                ++tuples;
                const auto r = colon_identity(item.graph, symbolic, pattern, tuple);
                if (!r.holds) {
                    ++failed;
                    json vs = json::array();
                    for (int v : tuple) vs.push_back(v + 1);
                    failing.push_back({{"pattern", to_string(pattern)}, {"vertices", vs},
                                       {"lhs", ideal_to_json(r.lhs)}, {"rhs", ideal_to_json(r.rhs)}});
                }
            }
            counts[to_string(pattern)] = {{"tuples", tuples}, {"failed", failed}};
        }
        o.line["patterns"] = counts;
        if (!failing.empty()) o.line["failing"] = failing;
        o.asserted = gap_free;
        o.pass = failing.empty();
        if (!gap_free) o.line["holds"] = failing.empty();
        return o;
    });
    return collect("colon-identities", std::move(outcomes), params, start);
}

SimplicialComplex random_complex(int n, int facets, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<VertexMask> faces;
    for (int k = 0; k < facets; ++k) {
        VertexMask m = 0;
        for (int v = 0; v < n; ++v) {
            if (rng() >> 63) m |= VertexMask{1} << v;
        }
        faces.push_back(m);
    }
    return SimplicialComplex::from_faces(n, std::move(faces));
}

SuiteResult verify_homology(const VerifyParams& params) {
    const auto start = Clock::now();
    const std::size_t decompositions = params.samples.value_or(200);
    const std::vector<Field> fields{Field::gf2(), Field::gfp(3), Field::rationals()};

    // stock checks first, then the random Mayer-Vietoris decompositions
    std::vector<std::function<Outcome()>> tasks;
    for (int n = 1; n <= 6; ++n) {
        tasks.emplace_back([n, &fields] {
            Outcome o;
            o.line["check"] = "empty-complex";
            o.line["n"] = n;
            for (const auto& f : fields) {
                const auto h = homology(SimplicialComplex::empty_complex(n), f);
                o.pass = o.pass && h.dims.size() == 1 && h.dim(-1) == 1;
            }
            return o;
        });
    }
    for (int k = 1; k <= 6; ++k) {
        tasks.emplace_back([k, &fields] {
            // boundary of the k-simplex on k+1 vertices: a (k-1)-sphere
            Outcome o;
            o.line["check"] = "simplex-boundary";
            o.line["vertices"] = k + 1;
            std::vector<VertexMask> facets;
            const VertexMask all = (VertexMask{1} << (k + 1)) - 1;
            for (int v = 0; v <= k; ++v) facets.push_back(all & ~(VertexMask{1} << v));
            const auto sphere = SimplicialComplex::from_faces(k + 1, facets);
            for (const auto& f : fields) {
                const auto h = homology(sphere, f);
                o.pass = o.pass && h.dims.size() == 1 && h.dim(k - 1) == 1;
            }
            return o;
        });
    }
    for (std::size_t c = 0; c < 50; ++c) {
        tasks.emplace_back([c, &params, &fields] {
            Outcome o;
            const std::uint64_t seed = derive_seed(params.seed, c, 300);
            const int n = 3 + static_cast<int>(c % 5);
            const auto base = random_complex(n - 1, 1 + static_cast<int>(c % 4), seed);
            std::vector<VertexMask> facets;
            for (VertexMask f : base.facets()) facets.push_back(f | (VertexMask{1} << (n - 1)));
            const auto cone = SimplicialComplex::from_faces(n, facets);
            o.line["check"] = "cone";
            o.line["complex"] = complex_to_json(cone);
            for (const auto& f : fields) o.pass = o.pass && is_cone(cone, n - 1) && homology(cone, f).is_acyclic();
            return o;
        });
    }
    for (std::size_t d = 0; d < decompositions; ++d) {
        tasks.emplace_back([d, &params] {
            Outcome o;
            const std::uint64_t seed = derive_seed(params.seed, d, 400);
            const int n = 4 + static_cast<int>(d % 4);
            const auto g1 = random_complex(n, 2 + static_cast<int>(d % 5), seed);
            const auto g2 = random_complex(n, 2 + static_cast<int>((d / 5) % 5), seed ^ 0x5bd1e995U);
            const auto whole = union_of(g1, g2);
            const auto meet = intersection_of(g1, g2);
            const Field field = params.field;
            const auto h = homology(whole, field);
            const auto h1 = homology(g1, field);
            const auto h2 = homology(g2, field);
            const auto h12 = homology(meet, field);
            o.line["check"] = "mayer-vietoris";
            o.line["gamma1"] = complex_to_json(g1);
            o.line["gamma2"] = complex_to_json(g2);
            bool ok = true;
            for (const auto& [idx, dim] : h.dims) {
                // idx = i - 1
                if (dim > 0 && h1.dim(idx) == 0 && h2.dim(idx) == 0 && h12.dim(idx - 1) == 0) ok = false;
            }
            for (const auto* c : {&whole, &g1, &g2, &meet}) {
                ok = ok && homology(*c, field).euler_characteristic() == reduced_euler_characteristic(*c);
            }
            o.pass = ok;
            return o;
        });
    }
    auto outcomes = evaluate(tasks.size(), params.jobs, params.timing, [&](std::size_t k) { return tasks[k](); });
    return collect("homology", std::move(outcomes), params, start);
}

SuiteResult search_conjecture(int s, const VerifyParams& params) {
    if (s < 2) throw DomainError("conjecture search needs s >= 2");
    const int default_nmax = s >= 4 ? 5 : 6;
    if (s >= 4 && params.nmax.value_or(default_nmax) > 6) {
        throw DomainError("s >= 4 is limited to nmax <= 6");
    }
    const auto start = Clock::now();
    const auto corpus = suite_corpus(params, default_nmax, CorpusMode::Iso, 0, true, 0.6);
    auto outcomes = evaluate(corpus.size(), params.jobs, params.timing, [&](std::size_t k) {
        Outcome o;
        const auto& item = corpus[k];
        o.line["graph"] = graph_descriptor(item);
        o.line["s"] = s;
        o.line["field"] = params.field.to_string();
        o.asserted = false;
        if (item.graph.num_edges() == 0 || !is_gap_free(item.graph)) {
            o.skipped = true;
            return o;
        }
        const MonomialIdeal I = edge_ideal(item.graph);
        std::vector<int> regs;
        MonomialIdeal current = I;
        for (int t = 1; t <= s; ++t) {
            if (t > 1) current = multiply(current, I);
            regs.push_back(regularity(current, params.field));
        }
        const MonomialIdeal Isym = symbolic_power(I, s);
        const int r_symbolic = regularity(Isym, params.field);
        const int expected = std::max(regs.front() + s - 1, 2 * s);
        const bool conform = regs.back() == expected && r_symbolic == expected;
        // reg I^t - 2t changing between t and t+1 forces rstab >= t + 1
        int rstab_lower = 1;
        for (int t = 1; t < s; ++t) {
            if (regs[static_cast<std::size_t>(t - 1)] - 2 * t != regs[static_cast<std::size_t>(t)] - 2 * (t + 1)) {
                rstab_lower = t + 1;
            }
        }
        o.line["reg_powers"] = regs;
        o.line["reg_symbolic"] = r_symbolic;
        o.line["expected"] = expected;
        o.line["conform"] = conform;
        o.line["rstab_lower_bound"] = rstab_lower;
        if (!conform) {
            o.line["candidate_counterexample"] = true;
            o.line["certificates_power"] = certificates_json(current, params.field);
            o.line["certificates_symbolic"] = certificates_json(Isym, params.field);
        }
        return o;
    });
    return collect("search", std::move(outcomes), params, start);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pow2",     "pow3",          "lowerbound", "froberg",
                                                "char2",    "char3",         "colon-identities",
                                                "extremal-bounds", "oracle", "differential", "homology"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyParams& params) {
    if (name == "pow2") return verify_power_formula(2, params);
    if (name == "pow3") return verify_power_formula(3, params);
    if (name == "lowerbound") return verify_lowerbound(params);
    if (name == "froberg") return verify_froberg(params);
    if (name == "char2") return verify_characterization(2, params);
    if (name == "char3") return verify_characterization(3, params);
    if (name == "colon-identities") return verify_colon_identities(params);
    if (name == "extremal-bounds") return verify_extremal_bounds(params);
    if (name == "oracle") return verify_oracle(params);
    if (name == "differential") return verify_differential(params);
    if (name == "homology") return verify_homology(params);
    throw DomainError("unknown suite '" + name + "'");
}

} // namespace regpow
