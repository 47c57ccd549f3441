#include "regpow/regularity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>
#include <unordered_set>

#include "regpow/powers.hpp"

namespace regpow {

bool operator<(const RegularityCertificate& x, const RegularityCertificate& y) {
    return std::tie(x.value, x.a, x.i, x.face) < std::tie(y.value, y.a, y.i, y.face);
}

SimplicialComplex degree_complex(const MonomialIdeal& I, const ExponentVector& a) {
    return complex_of_ideal(radical_colon(I, a));
}

namespace {

VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

struct Candidate {
    ExponentVector a;
    SimplicialComplex delta;
    int bound; // |a| + dim Delta + 1 >= any value this a can produce
};

// Homology indices i with H~_{i-1}(lk F) != 0, memoized per (complex, face).
class LinkHomologyCache {
public:
    explicit LinkHomologyCache(Field field) : field_(field) {}

    const std::vector<int>& nonzero_indices(const SimplicialComplex& delta, VertexMask face) {
        auto key = std::make_pair(delta.facets(), face);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<int> out;
        const HomologyProfile h = homology(link(delta, face), field_);
        for (const auto& [idx, dim] : h.dims) {
            if (dim > 0) out.push_back(idx + 1);
        }
        return cache_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    Field field_;
    std::map<std::pair<std::vector<VertexMask>, VertexMask>, std::vector<int>> cache_;
};

} // namespace

RegularityResult regularity_via_degree_complexes(const MonomialIdeal& I, const RegularityOptions& options) {
    if (I.is_zero() || I.is_unit()) throw DomainError("regularity requires a nonzero proper ideal");
    const int n = I.num_vars();
    const bool audit = options.audit_full_scan;

    std::vector<int> upper;
    for (int r : rho(I)) upper.push_back(audit ? r : std::max(r - 1, 0));
    const GammaBox box(n, upper);

    RegularityResult result;
    std::vector<Candidate> candidates;
    box.for_each([&](const ExponentVector& a) {
        ++result.exponents_scanned;
        if (I.contains(a)) return;
        SimplicialComplex delta = degree_complex(I, a);
        if (delta.is_void()) return;
        if (!audit && options.prune_cones && is_cone_over_any(delta, a.support())) return;
        const int bound = a.degree() + delta.dimension() + 1;
        candidates.push_back({a, std::move(delta), bound});
    });
    // Largest possible contribution first, so the scan can stop once no
    // remaining candidate can reach the current maximum.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.bound > y.bound; });

    LinkHomologyCache cache(options.field);
    int best = -1;
    std::vector<RegularityCertificate> certs;
    for (const Candidate& c : candidates) {
        if (!audit && c.bound < best) break;
        if (!audit && !options.collect_certificates && c.bound <= best) break;
        const VertexMask allowed = full_mask(n) & ~c.a.support();
        const int degree = c.a.degree();
        for (const auto& layer : c.delta.faces().by_dim) {
            for (VertexMask face : layer) {
                if (face & ~allowed) continue;
                for (int i : cache.nonzero_indices(c.delta, face)) {
                    const int value = degree + i;
                    if (value < best) continue;
                    if (value > best) {
                        best = value;
                        certs.clear();
                    }
                    if (options.collect_certificates) certs.push_back({c.a, i, face, value, options.field});
                }
            }
        }
    }
    if (best < 0) throw CrossCheckMismatch("no nonvanishing homology found for " + I.to_string());
    std::sort(certs.begin(), certs.end());
    result.reg_quotient = best;
    result.reg = best + 1;
    result.certificates = std::move(certs);
    return result;
}

std::vector<RegularityCertificate> extremal_pairs(const MonomialIdeal& I, const Field& field) {
    RegularityOptions opts;
    opts.field = field;
    return regularity_via_degree_complexes(I, opts).certificates;
}

std::optional<std::string> check_certificate(const MonomialIdeal& I, const RegularityCertificate& cert) {
    const ExponentVector& a = cert.a;
    if (a.size() != I.num_vars()) return "exponent has the wrong length";
    if (cert.value != a.degree() + cert.i) return "value differs from |a| + i";
    if (I.contains(a)) return "x^a lies in I";
    const auto r = rho(I);
    for (int j = 0; j < a.size(); ++j) {
        if (a[j] > std::max(r[static_cast<std::size_t>(j)] - 1, 0)) return "a lies outside the Gamma box";
    }
    if (cert.face & a.support()) return "F meets supp a";
    const SimplicialComplex delta = degree_complex(I, a);
    if (delta.is_void() || !delta.contains(cert.face)) return "F is not a face of the degree complex";
    if (is_cone_over_any(delta, a.support())) return "degree complex is a cone over a vertex of supp a";
    if (homology_dim(link(delta, cert.face), cert.i - 1, cert.field) < 1) return "homology of the link vanishes";
    return std::nullopt;
}

// ---------------------------------------------------------------------------

std::map<std::pair<int, int>, int> BettiTable::graded() const {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [key, beta] : entries) out[{key.first, key.second.degree()}] += beta;
    return out;
}

int BettiTable::total(int i) const {
    int t = 0;
    for (const auto& [key, beta] : entries) {
        if (key.first == i) t += beta;
    }
    return t;
}

std::vector<ExponentVector> lcm_lattice(const MonomialIdeal& I, std::size_t cap) {
    std::unordered_set<ExponentVector, ExponentHash> seen(I.gens().begin(), I.gens().end());
    std::vector<ExponentVector> frontier = I.gens();
    while (!frontier.empty()) {
        std::vector<ExponentVector> next;
        for (const auto& l : frontier) {
            for (const auto& g : I.gens()) {
                ExponentVector m = lcm(l, g);
                if (seen.insert(m).second) {
                    if (seen.size() > cap) {
                        throw DomainError("lcm lattice exceeds " + std::to_string(cap) + " elements");
                    }
                    next.push_back(std::move(m));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<ExponentVector> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& I, const ExponentVector& b) {
    const VertexMask supp = b.support();
    std::vector<VertexMask> faces;
    for (VertexMask tau = supp;; tau = (tau - 1) & supp) {
        ExponentVector rest = b;
        for (VertexMask r = tau; r; r &= r - 1) {
            const int j = std::countr_zero(r);
            rest.set(j, rest[j] - 1);
        }
        if (I.contains(rest)) faces.push_back(tau);
        if (tau == 0) break;
    }
    if (faces.empty()) return SimplicialComplex::void_complex(I.num_vars());
    return SimplicialComplex::from_faces(I.num_vars(), std::move(faces));
}

BettiTable betti_oracle(const MonomialIdeal& I, const Field& field, std::size_t cap) {
    if (I.is_zero() || I.is_unit()) throw DomainError("Betti numbers require a nonzero proper ideal");
    BettiTable table;
    for (const auto& b : lcm_lattice(I, cap)) {
        const HomologyProfile h = homology(upper_koszul_complex(I, b), field);
        for (const auto& [idx, dim] : h.dims) table.entries[{idx + 1, b}] = dim;
    }
    return table;
}

int reg_from_betti(const BettiTable& table) {
    if (table.entries.empty()) throw DomainError("empty Betti table");
    int reg = std::numeric_limits<int>::min();
    for (const auto& [key, beta] : table.entries) reg = std::max(reg, key.second.degree() - key.first);
    return reg;
}

std::optional<int> generator_degree(const MonomialIdeal& I) {
    if (I.is_zero()) return std::nullopt;
    const int d = I.gens().front().degree();
    for (const auto& g : I.gens()) {
        if (g.degree() != d) return std::nullopt;
    }
    return d;
}

bool has_linear_resolution(const MonomialIdeal& I, const Field& field, ResolutionRoute route) {
    if (I.is_zero() || I.is_unit()) throw DomainError("linear resolution requires a nonzero proper ideal");
    const auto d = generator_degree(I);
    if (!d) return false;
    auto by_degree_complex = [&] { return regularity(I, field) == *d; };
    auto by_betti = [&] {
        const BettiTable table = betti_oracle(I, field);
        return std::all_of(table.entries.begin(), table.entries.end(), [&](const auto& entry) {
            return entry.first.second.degree() == entry.first.first + *d;
        });
    };
    switch (route) {
    case ResolutionRoute::DegreeComplex: return by_degree_complex();
    case ResolutionRoute::Betti: return by_betti();
    case ResolutionRoute::Both: {
        const bool x = by_degree_complex();
        const bool y = by_betti();
        if (x != y) {
            throw CrossCheckMismatch("linear-resolution routes disagree on " + I.to_string());
        }
        return x;
    }
    }
    return false;
}

} // namespace regpow
