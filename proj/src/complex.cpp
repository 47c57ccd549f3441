#include "regpow/complex.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace regpow {

// ---------------------------------------------------------------------------
// Field

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Field Field::gfp(int p) {
    if (!is_prime(p)) throw DomainError("GF(p) requires prime p, got " + std::to_string(p));
    if (p > 46337) throw DomainError("GF(p) characteristic too large: " + std::to_string(p));
    return p == 2 ? gf2() : Field{Kind::GFp, p};
}

Field Field::parse(const std::string& text) {
    if (text == "gf2") return gf2();
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("gfp:", 0) == 0) {
        try {
            std::size_t used = 0;
            const int p = std::stoi(text.substr(4), &used);
            if (used == text.size() - 4) return gfp(p);
        } catch (const std::logic_error&) {
        }
    }
    throw DomainError("unknown field '" + text + "' (expected gf2, gfp:P or q)");
}

std::string Field::to_string() const {
    switch (kind) {
    case Kind::GF2: return "gf2";
    case Kind::GFp: return "gfp:" + std::to_string(p);
    case Kind::Q: return "q";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Mask helpers

std::vector<VertexMask> maximal_masks(std::vector<VertexMask> masks) {
    std::sort(masks.begin(), masks.end(), [](VertexMask a, VertexMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<VertexMask> kept;
    for (VertexMask m : masks) {
        if (std::none_of(kept.begin(), kept.end(), [m](VertexMask k) { return (m & ~k) == 0; })) {
            kept.push_back(m);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

namespace {

std::vector<VertexMask> minimal_masks(std::vector<VertexMask> masks) {
    std::sort(masks.begin(), masks.end(), [](VertexMask a, VertexMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<VertexMask> kept;
    for (VertexMask m : masks) {
        if (std::none_of(kept.begin(), kept.end(), [m](VertexMask k) { return (k & ~m) == 0; })) {
            kept.push_back(m);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

VertexMask full_mask(int n) {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

} // namespace

std::vector<VertexMask> minimal_transversals(std::span<const VertexMask> edges) {
    // Berge's incremental algorithm; edges processed smallest first keeps the
    // intermediate families small.
    std::vector<VertexMask> sorted = minimal_masks({edges.begin(), edges.end()});
    std::vector<VertexMask> current{0};
    for (VertexMask e : sorted) {
        std::vector<VertexMask> next;
        next.reserve(current.size() * 2);
        for (VertexMask t : current) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (VertexMask rest = e; rest; rest &= rest - 1) next.push_back(t | (rest & -rest));
        }
        current = minimal_masks(std::move(next));
    }
    return current;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

std::size_t FaceTable::count(int dim) const {
    const auto k = static_cast<std::size_t>(dim + 1);
    return dim >= -1 && k < by_dim.size() ? by_dim[k].size() : 0;
}

struct SimplicialComplex::Cache {
    std::once_flag once;
    FaceTable table;
};

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexMask> facets)
    : n_(n), facets_(std::move(facets)), cache_(std::make_shared<Cache>()) {
    if (n < 0 || n > kMaxVars) throw DimensionError("vertex count out of range");
    const VertexMask full = full_mask(n);
    for (VertexMask f : facets_) {
        if (f & ~full) throw DimensionError("facet uses a vertex outside [n]");
    }
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return {n, {}}; }

SimplicialComplex SimplicialComplex::empty_complex(int n) { return {n, {0}}; }

SimplicialComplex SimplicialComplex::simplex(int n, VertexMask vertices) { return {n, {vertices}}; }

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<VertexMask> faces) {
    return {n, maximal_masks(std::move(faces))};
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw DomainError("dimension of the void complex is undefined");
    int d = 0;
    for (VertexMask f : facets_) d = std::max(d, std::popcount(f));
    return d - 1;
}

bool SimplicialComplex::contains(VertexMask face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](VertexMask f) { return (face & ~f) == 0; });
}

VertexMask SimplicialComplex::vertex_mask() const noexcept {
    VertexMask m = 0;
    for (VertexMask f : facets_) m |= f;
    return m;
}

const FaceTable& SimplicialComplex::faces() const {
    if (!cache_) {
        static const FaceTable kNone;
        return kNone;
    }
    std::call_once(cache_->once, [this] {
        std::unordered_set<VertexMask> seen;
        for (VertexMask f : facets_) {
            // all submasks of f, including f and 0
            for (VertexMask sub = f;; sub = (sub - 1) & f) {
                seen.insert(sub);
                if (sub == 0) break;
            }
        }
        auto& by_dim = cache_->table.by_dim;
        for (VertexMask m : seen) {
            const auto k = static_cast<std::size_t>(std::popcount(m));
            if (by_dim.size() <= k) by_dim.resize(k + 1);
            by_dim[k].push_back(m);
        }
        for (auto& v : by_dim) std::sort(v.begin(), v.end());
    });
    return cache_->table;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& v : faces().by_dim) f.push_back(v.size());
    return f;
}

std::string SimplicialComplex::to_string() const {
    if (is_void()) return "<void>";
    std::string out = "<";
    for (std::size_t k = 0; k < facets_.size(); ++k) {
        if (k) out += ", ";
        out += '{';
        bool first = true;
        for (int v = 0; v < n_; ++v) {
            if ((facets_[k] >> v) & 1U) {
                if (!first) out += ',';
                out += std::to_string(v + 1);
                first = false;
            }
        }
        out += '}';
    }
    return out + ">";
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& I) {
    const int n = I.num_vars();
    if (!I.is_squarefree()) throw DomainError("Stanley-Reisner complex requires a squarefree ideal");
    if (I.is_unit()) return SimplicialComplex::void_complex(n);
    const VertexMask full = full_mask(n);
    const auto masks = I.squarefree_masks();
    std::vector<VertexMask> facets;
    for (VertexMask cover : minimal_transversals(masks)) facets.push_back(full & ~cover);
    return SimplicialComplex::from_faces(n, std::move(facets));
}

MonomialIdeal ideal_of_complex(const SimplicialComplex& delta) {
    if (delta.is_void()) throw DomainError("the void complex has no Stanley-Reisner ideal");
    const int n = delta.num_vertices();
    const VertexMask full = full_mask(n);
    std::vector<VertexMask> complements;
    for (VertexMask f : delta.facets()) complements.push_back(full & ~f);
    const auto nonfaces = minimal_transversals(complements);
    return ideal_from_masks(n, nonfaces);
}

SimplicialComplex link(const SimplicialComplex& delta, VertexMask face) {
    if (!delta.contains(face)) throw DomainError("link of a non-face");
    std::vector<VertexMask> parts;
    for (VertexMask f : delta.facets()) {
        if ((face & ~f) == 0) parts.push_back(f & ~face);
    }
    return SimplicialComplex::from_faces(delta.num_vertices(), std::move(parts));
}

SimplicialComplex restriction(const SimplicialComplex& delta, VertexMask vertices) {
    if (delta.is_void()) return delta;
    std::vector<VertexMask> parts;
    for (VertexMask f : delta.facets()) parts.push_back(f & vertices);
    return SimplicialComplex::from_faces(delta.num_vertices(), std::move(parts));
}

bool is_cone(const SimplicialComplex& delta, int vertex) {
    if (delta.is_void()) return false;
    const VertexMask bit = VertexMask{1} << vertex;
    return std::all_of(delta.facets().begin(), delta.facets().end(),
                       [bit](VertexMask f) { return (f & bit) != 0; });
}

bool is_cone_over_any(const SimplicialComplex& delta, VertexMask vertices) {
    if (delta.is_void()) return false;
    VertexMask common = vertices;
    for (VertexMask f : delta.facets()) common &= f;
    return common != 0;
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.num_vertices() != b.num_vertices()) throw DimensionError("vertex counts differ");
    std::vector<VertexMask> all = a.facets();
    all.insert(all.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_faces(a.num_vertices(), std::move(all));
}

SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.num_vertices() != b.num_vertices()) throw DimensionError("vertex counts differ");
    std::vector<VertexMask> all;
    for (VertexMask f : a.facets()) {
        for (VertexMask g : b.facets()) all.push_back(f & g);
    }
    return SimplicialComplex::from_faces(a.num_vertices(), std::move(all));
}

// ---------------------------------------------------------------------------
// Exact ranks

namespace {

std::size_t rank_gf2(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::uint64_t> bits(words, 0);
        for (std::size_t c = 0; c < cols; ++c) {
            if (r[c] & 1) bits[c / 64] |= std::uint64_t{1} << (c % 64);
        }
        m.push_back(std::move(bits));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < m.size() && !(m[pivot][w] & bit)) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][w] & bit) {
                for (std::size_t k = w; k < words; ++k) m[r][k] ^= m[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

std::size_t rank_gfp(const std::vector<std::vector<int>>& rows, std::size_t cols, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::int64_t> v(cols);
        for (std::size_t c = 0; c < cols; ++c) v[c] = ((r[c] % p) + p) % p;
        m.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        const std::int64_t inv = mod_inverse(m[rank][c], p);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const std::int64_t factor = m[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k) {
                m[r][k] = ((m[r][k] - factor * m[rank][k]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

// Bareiss fraction-free elimination; every division is exact.
std::size_t rank_rational(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    std::size_t rank = 0;
    cpp_int prev = 1;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

// Boundary map from dimension-d faces to dimension-(d-1) faces, one row per d-face.
std::vector<std::vector<int>> boundary_rows(const FaceTable& table, int d) {
    const auto& hi = table.by_dim[static_cast<std::size_t>(d + 1)];
    const auto& lo = table.by_dim[static_cast<std::size_t>(d)];
    std::unordered_map<VertexMask, std::size_t> index;
    index.reserve(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k) index.emplace(lo[k], k);
    std::vector<std::vector<int>> rows;
    rows.reserve(hi.size());
    for (VertexMask f : hi) {
        std::vector<int> row(lo.size(), 0);
        int position = 0;
        for (VertexMask rest = f; rest; rest &= rest - 1, ++position) {
            const VertexMask bit = rest & -rest;
            row[index.at(f & ~bit)] = (position % 2 == 0) ? 1 : -1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// rank of the augmented boundary map from dimension d to d-1; 0 outside the chain range
std::size_t boundary_rank(const FaceTable& table, int d, const Field& field) {
    if (d < 0 || static_cast<std::size_t>(d + 1) >= table.by_dim.size()) return 0;
    if (table.by_dim[static_cast<std::size_t>(d)].empty()) return 0;
    if (d == 0) return table.by_dim[1].empty() ? 0 : 1; // augmentation map onto k
    return matrix_rank(boundary_rows(table, d), field);
}

} // namespace

std::size_t matrix_rank(const std::vector<std::vector<int>>& rows, const Field& field) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    switch (field.kind) {
    case Field::Kind::GF2: return rank_gf2(rows, cols);
    case Field::Kind::GFp: return rank_gfp(rows, cols, field.p);
    case Field::Kind::Q: return rank_rational(rows, cols);
    }
    return 0;
}

int HomologyProfile::dim(int i) const {
    const auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
}

int HomologyProfile::euler_characteristic() const {
    int chi = 0;
    for (const auto& [i, d] : dims) chi += (i % 2 == 0 ? 1 : -1) * d;
    return chi;
}

int homology_dim(const SimplicialComplex& delta, int i, const Field& field) {
    if (delta.is_void()) return 0;
    const FaceTable& table = delta.faces();
    const std::size_t chains = table.count(i);
    if (chains == 0) return 0;
    const std::size_t r_out = boundary_rank(table, i, field);
    const std::size_t r_in = boundary_rank(table, i + 1, field);
    return static_cast<int>(chains - r_out - r_in);
}

HomologyProfile homology(const SimplicialComplex& delta, const Field& field) {
    HomologyProfile profile{field, {}};
    if (delta.is_void()) return profile;
    const FaceTable& table = delta.faces();
    const int top = static_cast<int>(table.by_dim.size()) - 2;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
    for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = boundary_rank(table, d, field);
    for (int i = -1; i <= top; ++i) {
        const std::size_t out = i >= 0 ? ranks[static_cast<std::size_t>(i)] : 0;
        const std::size_t in = ranks[static_cast<std::size_t>(i + 1)];
        const auto h = static_cast<int>(table.count(i) - out - in);
        if (h != 0) profile.dims[i] = h;
    }
    return profile;
}

int reduced_euler_characteristic(const SimplicialComplex& delta) {
    if (delta.is_void()) return 0;
    int chi = 0;
    const auto f = delta.f_vector();
    for (std::size_t k = 0; k < f.size(); ++k) {
        const int dim = static_cast<int>(k) - 1;
        chi += (dim % 2 == 0 ? 1 : -1) * static_cast<int>(f[k]);
    }
    return chi;
}

} // namespace regpow
