#pragma once

// Castelnuovo-Mumford regularity of monomial ideals.
//
// Primary route: the degree-complex formula
//   reg(S/I) = max { |a| + i : a in N^n, i >= 0, F in Delta_a(I), F cap supp a = {},
//                             H~_{i-1}(lk F) != 0 },
// where Delta_a(I) is the Stanley-Reisner complex of sqrt(I : x^a), scanned over
// the finite box Gamma(I). Independent oracle: multigraded Betti numbers from the
// upper Koszul simplicial complexes over the lcm lattice.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "regpow/complex.hpp"
#include "regpow/monomial.hpp"

namespace regpow {

/// Two independent computations disagreed.
class CrossCheckMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RegularityCertificate {
    ExponentVector a;
    int i = 0;            // H~_{i-1}(lk F) != 0
    VertexMask face = 0;  // F, disjoint from supp a
    int value = 0;        // |a| + i = reg(S/I)
    Field field;

    friend bool operator==(const RegularityCertificate&, const RegularityCertificate&) = default;
};

/// Lexicographic by (value, a, i, F).
bool operator<(const RegularityCertificate& x, const RegularityCertificate& y);

/// Delta_a(I); the void complex when x^a lies in I.
SimplicialComplex degree_complex(const MonomialIdeal& I, const ExponentVector& a);

struct RegularityOptions {
    Field field = Field::gf2();
    /// Skip a when Delta_a(I) is a cone over a vertex of supp a (such a never contribute).
    bool prune_cones = true;
    /// Audit mode: scan the box a_j <= rho_j (one step past Gamma(I)) with no pruning.
    bool audit_full_scan = false;
    bool collect_certificates = true;
};

struct RegularityResult {
    int reg_quotient = 0; // reg(S/I)
    int reg = 0;          // reg(I) = reg(S/I) + 1
    std::vector<RegularityCertificate> certificates; // all maximizers, sorted
    std::size_t exponents_scanned = 0;
};

/// Throws DomainError for the zero or unit ideal.
RegularityResult regularity_via_degree_complexes(const MonomialIdeal& I, const RegularityOptions& options = {});
inline int regularity(const MonomialIdeal& I, const Field& field = Field::gf2()) {
    RegularityOptions opts;
    opts.field = field;
    opts.collect_certificates = false;
    return regularity_via_degree_complexes(I, opts).reg;
}

std::vector<RegularityCertificate> extremal_pairs(const MonomialIdeal& I, const Field& field = Field::gf2());

/// Re-derives every certificate condition from scratch; returns the first violated one, if any.
std::optional<std::string> check_certificate(const MonomialIdeal& I, const RegularityCertificate& cert);

// ---------------------------------------------------------------------------
// Betti oracle

struct BettiTable {
    /// (i, b) -> beta_{i,b}(I); only nonzero entries are stored.
    std::map<std::pair<int, ExponentVector>, int> entries;

    /// (i, j) -> beta_{i,j} with j = |b|.
    std::map<std::pair<int, int>, int> graded() const;
    int total(int i) const;
};

inline constexpr std::size_t kDefaultLatticeCap = 200000;

/// All lcms of nonempty subsets of the generators. DomainError past `cap` elements.
std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& I, std::size_t cap = kDefaultLatticeCap);
/// K^b(I) = { squarefree tau <= b : x^{b - tau} in I }.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const ExponentVector& b);
BettiTable betti_oracle(const MonomialIdeal& I, const Field& field = Field::gf2(),
                        std::size_t cap = kDefaultLatticeCap);
/// max(|b| - i) over nonzero entries: reg(I).
int reg_from_betti(const BettiTable& table);

enum class ResolutionRoute { DegreeComplex, Betti, Both };

/// Equigenerated in one degree d with reg I = d. Route Both computes both
/// characterizations and throws CrossCheckMismatch if they differ.
bool has_linear_resolution(const MonomialIdeal& I, const Field& field = Field::gf2(),
                           ResolutionRoute route = ResolutionRoute::DegreeComplex);

/// Common generator degree, or nullopt if generators have mixed degrees.
std::optional<int> generator_degree(const MonomialIdeal& I);

} // namespace regpow
