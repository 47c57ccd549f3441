// regpow <compute|verify|search> [flags]
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 disagreement between two independent computations.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "regpow/harness.hpp"
#include "regpow/io.hpp"
#include "regpow/powers.hpp"
#include "regpow/regularity.hpp"

using namespace regpow;
using nlohmann::json;

namespace {

constexpr int kInputError = 2;

struct Options {
    std::string graph_file;
    std::string ideal_file;
    std::string task = "reg";
    std::optional<int> s;
    std::string field = "gf2";
    std::string method = "degree-complex";
    std::optional<int> nmax;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;
    int jobs = default_jobs();
    int intermediates = 3;
    bool audit_full_scan = false;
    bool timing = false;
    std::string suite;
};

struct Input {
    std::optional<Graph> graph;
    MonomialIdeal ideal;
    json descriptor;
};

Input load_input(const Options& opt) {
    if (opt.graph_file.empty() == opt.ideal_file.empty()) {
        throw DomainError("exactly one of --graph and --ideal is required");
    }
    Input in;
    if (!opt.graph_file.empty()) {
        in.graph = read_graph_file(opt.graph_file);
        in.ideal = edge_ideal(*in.graph);
        in.descriptor = {{"graph", graph_to_json(*in.graph)}, {"file", opt.graph_file}};
    } else {
        in.ideal = read_ideal_file(opt.ideal_file);
        in.descriptor = {{"ideal", ideal_to_json(in.ideal)}, {"file", opt.ideal_file}};
    }
    return in;
}

json certificates(const std::vector<RegularityCertificate>& certs) {
    json out = json::array();
    for (const auto& c : certs) out.push_back(certificate_to_json(c));
    return out;
}

int require_s(const Options& opt) {
    if (!opt.s) throw DomainError("--s is required for task " + opt.task);
    if (*opt.s < 1) throw DomainError("--s must be positive");
    return *opt.s;
}

// The ideal a task works on: I itself, or I^s when --s is given.
MonomialIdeal target_ideal(const Input& in, const Options& opt) {
    if (!opt.s) return in.ideal;
    return power(in.ideal, require_s(opt));
}

void require_proper(const MonomialIdeal& I) {
    if (I.is_zero()) throw DomainError("the ideal is zero (edgeless graph?)");
    if (I.is_unit()) throw DomainError("the ideal is the unit ideal");
}

int cmd_compute(const Options& opt) {
    const Input in = load_input(opt);
    const Field field = Field::parse(opt.field);
    if (opt.method != "degree-complex" && opt.method != "koszul" && opt.method != "both") {
        throw DomainError("unknown method '" + opt.method + "'");
    }
    json out = {{"task", opt.task}, {"field", field.to_string()}};
    out.update(in.descriptor);
    if (opt.s) out["s"] = *opt.s;

    const bool use_dc = opt.method != "koszul";
    const bool use_koszul = opt.method != "degree-complex";

    auto regularity_of = [&](const MonomialIdeal& I, json& record) {
        require_proper(I);
        std::optional<int> dc, kz;
        if (use_dc) {
            RegularityOptions ro;
            ro.field = field;
            ro.audit_full_scan = opt.audit_full_scan;
            const auto res = regularity_via_degree_complexes(I, ro);
            dc = res.reg;
            record["certificates"] = certificates(res.certificates);
            record["exponents_scanned"] = res.exponents_scanned;
        }
        if (use_koszul) kz = reg_from_betti(betti_oracle(I, field));
        if (dc && kz) {
            record["reg_degree_complex"] = *dc;
            record["reg_koszul"] = *kz;
            if (*dc != *kz) {
                record["value"] = nullptr;
                record["mismatch"] = true;
                return std::optional<int>{};
            }
        }
        record["value"] = dc ? *dc : *kz;
        record["method"] = opt.method;
        return dc ? dc : kz;
    };

    int code = 0;
    if (opt.task == "reg") {
        const MonomialIdeal I = target_ideal(in, opt);
        if (!regularity_of(I, out)) code = 3;
    } else if (opt.task == "betti") {
        const MonomialIdeal I = target_ideal(in, opt);
        require_proper(I);
        const BettiTable table = betti_oracle(I, field);
        json entries = json::array();
        for (const auto& [key, beta] : table.entries) {
            if (beta != 0) entries.push_back({{"i", key.first}, {"b", key.second.to_vector()}, {"beta", beta}});
        }
        json graded = json::array();
        for (const auto& [key, beta] : table.graded()) {
            if (beta != 0) graded.push_back({{"i", key.first}, {"j", key.second}, {"beta", beta}});
        }
        out["multigraded"] = entries;
        out["graded"] = graded;
        out["value"] = reg_from_betti(table);
        out["method"] = "koszul";
    } else if (opt.task == "linres") {
        const MonomialIdeal I = target_ideal(in, opt);
        require_proper(I);
        const auto route = opt.method == "both"     ? ResolutionRoute::Both
                           : opt.method == "koszul" ? ResolutionRoute::Betti
                                                    : ResolutionRoute::DegreeComplex;
        out["value"] = has_linear_resolution(I, field, route);
        out["method"] = opt.method;
    } else if (opt.task == "power" || opt.task == "symbolic") {
        const int s = require_s(opt);
        if (!in.ideal.is_squarefree() && opt.task == "symbolic") {
            throw DomainError("symbolic powers need a squarefree ideal");
        }
        MonomialIdeal P = opt.task == "power" ? power(in.ideal, s) : symbolic_power(in.ideal, s);
        out["ideal_out"] = ideal_to_json(P);
        if (P.is_zero()) {
            std::cerr << "warning: the " << opt.task << " power of the zero ideal is zero\n";
            out["value"] = nullptr;
        } else if (!regularity_of(P, out)) {
            code = 3;
        }
    } else if (opt.task == "gapfree") {
        if (!in.graph) throw DomainError("task gapfree needs --graph");
        out["value"] = is_gap_free(*in.graph);
    } else if (opt.task == "extremal") {
        MonomialIdeal I = in.ideal;
        if (opt.s) I = in.graph ? symbolic_power(*in.graph, *opt.s) : symbolic_power(in.ideal, *opt.s);
        require_proper(I);
        RegularityOptions ro;
        ro.field = field;
        ro.audit_full_scan = opt.audit_full_scan;
        const auto res = regularity_via_degree_complexes(I, ro);
        json certs = json::array();
        bool all_valid = true;
        for (const auto& c : res.certificates) {
            json j = certificate_to_json(c);
            const auto problem = check_certificate(I, c);
            j["valid"] = !problem;
            if (problem) {
                j["problem"] = *problem;
                all_valid = false;
            }
            certs.push_back(j);
        }
        out["value"] = res.reg;
        out["certificates"] = certs;
        out["certificates_valid"] = all_valid;
        if (!all_valid) code = 1;
    } else {
        throw DomainError("unknown task '" + opt.task + "'");
    }
    std::cout << out.dump() << '\n';
    return code;
}

VerifyParams verify_params(const Options& opt) {
    VerifyParams p;
    p.nmax = opt.nmax;
    p.samples = opt.samples;
    p.seed = opt.seed;
    p.field = Field::parse(opt.field);
    p.s = opt.s;
    p.jobs = std::max(1, opt.jobs);
    p.intermediates = opt.intermediates;
    p.timing = opt.timing;
    if (!opt.graph_file.empty()) {
        p.explicit_graphs.push_back({opt.graph_file, read_graph_file(opt.graph_file)});
    }
    return p;
}

int emit(const SuiteResult& r) {
    for (const auto& line : r.lines) std::cout << line.dump() << '\n';
    std::cout << r.summary().dump() << '\n';
    return r.exit_code();
}

int cmd_verify(const Options& opt) {
    return emit(run_suite(opt.suite, verify_params(opt)));
}

int cmd_search(const Options& opt) {
    const int s = opt.s.value_or(2);
    if (s >= 4) std::cerr << "warning: s >= 4 is expensive; corpora are capped at 6 vertices\n";
    VerifyParams p = verify_params(opt);
    p.s.reset();
    return emit(search_conjecture(s, p));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regularity of powers and symbolic powers of monomial ideals"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", opt.graph_file, "graph file (text or JSON)");
        sub->add_option("--s", opt.s, "power");
        sub->add_option("--field", opt.field, "gf2, gfp:P or q");
        sub->add_option("--jobs", opt.jobs, "worker threads (default REGPOW_JOBS or 1)");
    };

    auto* compute = app.add_subcommand("compute", "compute an invariant of one graph or ideal");
    add_common(compute);
    compute->add_option("--ideal", opt.ideal_file, "ideal JSON file");
    compute->add_option("--task", opt.task, "reg, betti, linres, power, symbolic, gapfree, extremal");
    compute->add_option("--method", opt.method, "degree-complex, koszul or both");
    compute->add_flag("--audit-full-scan", opt.audit_full_scan, "scan the enlarged box without pruning");

    auto* verify = app.add_subcommand("verify", "run a verification suite over a graph corpus");
    add_common(verify);
    verify->add_option("suite", opt.suite, "suite name")->required();
    auto add_corpus = [&](CLI::App* sub) {
        sub->add_option("--nmax", opt.nmax, "largest exhaustive vertex count");
        sub->add_option("--samples", opt.samples, "number of seeded random graphs");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--intermediates", opt.intermediates, "sampled intermediate ideals per graph");
        sub->add_flag("--timing", opt.timing, "include wall time in every line");
    };
    add_corpus(verify);

    auto* search = app.add_subcommand("search", "compare powers against max(reg I + s - 1, 2s)");
    add_common(search);
    add_corpus(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*compute) return cmd_compute(opt);
        if (*verify) return cmd_verify(opt);
        return cmd_search(opt);
    } catch (const regpow::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const CrossCheckMismatch& e) {
        std::cerr << "cross-check mismatch: " << e.what() << '\n';
        return 3;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
