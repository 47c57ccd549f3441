#include <doctest.h>

#include "regpow/harness.hpp"

using namespace regpow;

namespace {

std::string dump(const SuiteResult& r) {
    std::string out;
    for (const auto& line : r.lines) out += line.dump() + '\n';
    return out + r.summary().dump() + '\n';
}

} // namespace

TEST_CASE("corpora") {
    CHECK(labeled_corpus(4).size() == 64);
    CHECK(iso_corpus(1, 5).size() == 1 + 2 + 4 + 11 + 34);
    CHECK(exhaustive_corpus(5, CorpusMode::Labeled).size() == 1024);
    CHECK(exhaustive_corpus(6, CorpusMode::Labeled).size() == 1024 + 156);
    CHECK_THROWS_AS((exhaustive_corpus(8, CorpusMode::Iso)), DomainError);
    const auto a = random_corpus(10, {6, 7}, 0.5, 3, true);
    const auto b = random_corpus(10, {6, 7}, 0.5, 3, true);
    REQUIRE(a.size() == 10);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].id == b[k].id);
        CHECK(a[k].graph == b[k].graph);
        CHECK(is_gap_free(a[k].graph));
        CHECK(a[k].graph.num_vertices() == (k % 2 == 0 ? 6 : 7));
    }
}

TEST_CASE("reports are identical for any number of jobs") {
    VerifyParams p;
    p.nmax = 4;
    p.samples = 6;
    const auto serial = dump(verify_power_formula(2, p));
    p.jobs = 4;
    CHECK(dump(verify_power_formula(2, p)) == serial);
    p.seed = 2;
    CHECK(dump(verify_power_formula(2, p)) != serial);
}

TEST_CASE("suite bookkeeping") {
    VerifyParams p;
    p.nmax = 4;
    p.samples = 0;
    const auto r = run_suite("colon-identities", p);
    CHECK(r.items == 11 + 4 + 2 + 1);
    CHECK(r.checked + r.reported + r.skipped == r.items);
    CHECK(r.failures == 0);
    CHECK(r.exit_code() == 0);
    CHECK(r.summary()["pass"] == true);
    CHECK_FALSE(r.summary().contains("wall_ms"));
    CHECK_THROWS_AS((run_suite("nonsense", p)), DomainError);
    p.nmax = 9;
    CHECK_THROWS_AS((run_suite("froberg", p)), DomainError);
}

TEST_CASE("explicit graphs replace the corpus") {
    VerifyParams p;
    p.explicit_graphs = {{"c5", cycle_graph(5)}, {"k2k2", Graph{4, {{0, 1}, {2, 3}}}}};
    const auto r = verify_power_formula(2, p);
    CHECK(r.items == 2);
    CHECK(r.checked == 1);
    CHECK(r.skipped == 1);
    CHECK(r.lines[0]["reg_power"] == 4);
    CHECK(r.lines[0]["graph"]["id"] == "c5");
}

TEST_CASE("conjecture search reports without asserting") {
    VerifyParams p;
    p.explicit_graphs = {{"triangle", complete_graph(3)}, {"c5", cycle_graph(5)}};
    const auto r = search_conjecture(4, p);
    CHECK(r.checked == 0);
    CHECK(r.reported == 2);
    CHECK(r.exit_code() == 0);
    for (const auto& line : r.lines) {
        CHECK(line["reg_powers"].size() == 4);
        CHECK(line.contains("rstab_lower_bound"));
    }
    CHECK(r.lines[1]["reg_powers"] == nlohmann::json({3, 4, 6, 8}));
}

TEST_CASE("failures and mismatches map to exit codes") {
    SuiteResult r;
    CHECK(r.exit_code() == 0);
    r.failures = 1;
    CHECK(r.exit_code() == 1);
    r.mismatches = 1;
    CHECK(r.exit_code() == 3);
}
