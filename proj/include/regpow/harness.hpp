#pragma once

// Corpora and verification suites behind `regpow verify` and `regpow search`.
// Every suite evaluates its corpus item by item (optionally on a thread pool)
// and emits one JSON object per item, in corpus order, plus a summary.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regpow/complex.hpp"
#include "regpow/graph.hpp"
#include "regpow/monomial.hpp"
#include "regpow/powers.hpp"

namespace regpow {

struct CorpusItem {
    std::string id; // "labeled:5:37", "iso:6:1234", "gnp:7:0.5:seed", "gapfree:8:0.6:seed"
    Graph graph;
};

/// All labeled graphs on exactly n <= 7 vertices.
std::vector<CorpusItem> labeled_corpus(int n);
/// Isomorphism-class representatives for every n in [nmin, nmax], nmax <= 7.
std::vector<CorpusItem> iso_corpus(int nmin, int nmax);
/// `count` seeded G(n, p) graphs, n cycling through `sizes`; gap-free ones by rejection when requested.
std::vector<CorpusItem> random_corpus(std::size_t count, const std::vector<int>& sizes, double p,
                                      std::uint64_t seed, bool gap_free);
/// Seeded random squarefree ideal on n variables with 2..6 generators of degree 1..3.
MonomialIdeal random_squarefree_ideal(int n, std::uint64_t seed);

enum class CorpusMode { Labeled, Iso };

/// Exhaustive part of a suite corpus: labeled graphs on min(nmax, 5) vertices plus
/// isomorphism classes for 6..nmax (Labeled), or isomorphism classes for 1..nmax (Iso).
std::vector<CorpusItem> exhaustive_corpus(int nmax, CorpusMode mode);

struct VerifyParams {
    std::optional<int> nmax;                // suite default when unset
    std::optional<std::size_t> samples;     // random items on top of the exhaustive corpus
    std::vector<int> random_sizes;          // default {nmax+1, nmax+2}
    std::optional<double> p;                // G(n,p) edge probability
    std::uint64_t seed = 1;
    Field field = Field::gf2();
    bool rational_subsample = true;         // recheck every 10th item over Q
    int intermediates = 3;
    std::optional<int> s;                   // restrict to one power where a suite covers several
    std::optional<CorpusMode> corpus;
    std::vector<CorpusItem> explicit_graphs; // replaces the generated corpus when nonempty
    int jobs = 1;
    bool timing = false;                    // add wall_ms (breaks byte-identical output)
};

struct SuiteResult {
    std::string suite;
    std::vector<nlohmann::json> lines;
    std::size_t items = 0;
    std::size_t checked = 0;    // asserted items
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::size_t reported = 0;   // evaluated but not asserted
    std::size_t mismatches = 0; // internal cross-check disagreements
    double wall_ms = 0.0;
    bool timing = false;

    nlohmann::json summary() const;
    /// 3 on cross-check mismatch, 1 on failures, 0 otherwise.
    int exit_code() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();
/// Throws DomainError for unknown names or infeasible parameters.
SuiteResult run_suite(const std::string& name, const VerifyParams& params);

SuiteResult verify_oracle(const VerifyParams& params);
SuiteResult verify_froberg(const VerifyParams& params);
/// reg J = reg I^s = reg I^(s) = max(reg I + s - 1, 2s) on gap-free graphs (s = 2 or 3).
SuiteResult verify_power_formula(int s, const VerifyParams& params);
/// I^s has a linear resolution <=> G gap-free and reg I <= s + 1.
SuiteResult verify_characterization(int s, const VerifyParams& params);
SuiteResult verify_lowerbound(const VerifyParams& params);
SuiteResult verify_differential(const VerifyParams& params);
SuiteResult verify_extremal_bounds(const VerifyParams& params);
SuiteResult verify_colon_identities(const VerifyParams& params);
SuiteResult verify_homology(const VerifyParams& params);

/// reg I^s and reg I^(s) against max(reg I + s - 1, 2s) on gap-free graphs; never asserts.
SuiteResult search_conjecture(int s, const VerifyParams& params);

/// Admissible vertex tuples (0-based) for a colon-identity pattern on n vertices:
/// distinct vertices, listed once per unordered choice where the shape is symmetric.
std::vector<std::vector<int>> admissible_tuples(ColonPattern pattern, int n);

/// Random simplicial complex on n vertices with `facets` random facets; seeded.
SimplicialComplex random_complex(int n, int facets, std::uint64_t seed);

/// Jobs default: REGPOW_JOBS if set and positive, else 1.
int default_jobs();

} // namespace regpow
