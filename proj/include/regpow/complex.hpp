#pragma once

// Facet-based simplicial complexes on [n], the Stanley-Reisner correspondence,
// and exact reduced simplicial homology over GF(2), GF(p) and Q.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "regpow/monomial.hpp"

namespace regpow {

/// Coefficient field for homology and everything computed from it.
struct Field {
    enum class Kind { GF2, GFp, Q };
    Kind kind = Kind::GF2;
    int p = 2; // characteristic for GF2/GFp, 0 for Q

    static Field gf2() { return {Kind::GF2, 2}; }
    static Field gfp(int p);
    static Field rationals() { return {Kind::Q, 0}; }
    /// Accepts "gf2", "gfp:P", "q".
    static Field parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;
};

bool is_prime(int p);

/// Minimal transversals (minimal hitting sets) of a family of vertex sets.
/// An empty member makes the family untraversable and yields no transversals.
std::vector<VertexMask> minimal_transversals(std::span<const VertexMask> edges);

/// Keeps only the inclusion-maximal masks, sorted ascending.
std::vector<VertexMask> maximal_masks(std::vector<VertexMask> masks);

/// Faces grouped by dimension; by_dim[d + 1] holds the faces of dimension d in ascending mask order.
struct FaceTable {
    std::vector<std::vector<VertexMask>> by_dim;
    std::size_t count(int dim) const;
};

class SimplicialComplex {
public:
    /// Void complex (no faces) on n vertices.
    SimplicialComplex() = default;
    static SimplicialComplex void_complex(int n);
    /// The complex {emptyset}.
    static SimplicialComplex empty_complex(int n);
    static SimplicialComplex simplex(int n, VertexMask vertices);
    /// Generated by arbitrary faces; non-maximal ones are dropped.
    static SimplicialComplex from_faces(int n, std::vector<VertexMask> faces);

    int num_vertices() const noexcept { return n_; }
    const std::vector<VertexMask>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }
    bool is_empty() const noexcept { return facets_.size() == 1 && facets_.front() == 0; }
    /// -1 for the empty complex; throws DomainError for the void complex.
    int dimension() const;
    bool contains(VertexMask face) const noexcept;
    VertexMask vertex_mask() const noexcept;

    /// Faces grouped by dimension, computed once and shared between copies.
    const FaceTable& faces() const;
    /// f_{-1}, f_0, ... as a vector indexed by dim + 1.
    std::vector<std::size_t> f_vector() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) noexcept {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    std::string to_string() const;

private:
    struct Cache;
    SimplicialComplex(int n, std::vector<VertexMask> facets);

    int n_ = 0;
    std::vector<VertexMask> facets_;
    std::shared_ptr<Cache> cache_;
};

/// Stanley-Reisner complex of a squarefree ideal; the unit ideal gives the void complex.
SimplicialComplex complex_of_ideal(const MonomialIdeal& I);
/// Stanley-Reisner ideal (minimal non-faces).
MonomialIdeal ideal_of_complex(const SimplicialComplex& delta);

SimplicialComplex link(const SimplicialComplex& delta, VertexMask face);
/// Subcomplex induced on the given vertex set.
SimplicialComplex restriction(const SimplicialComplex& delta, VertexMask vertices);
bool is_cone(const SimplicialComplex& delta, int vertex);
/// Some vertex in the mask is a cone point.
bool is_cone_over_any(const SimplicialComplex& delta, VertexMask vertices);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);

/// Reduced homology dimensions, indexed by i >= -1.
struct HomologyProfile {
    Field field;
    std::map<int, int> dims; // only nonzero entries

    int dim(int i) const;
    bool is_acyclic() const noexcept { return dims.empty(); }
    int euler_characteristic() const;
};

HomologyProfile homology(const SimplicialComplex& delta, const Field& field = Field::gf2());
/// dim H~_i only; cheaper than the full profile.
int homology_dim(const SimplicialComplex& delta, int i, const Field& field = Field::gf2());
/// Sum over faces of (-1)^dim, including the empty face.
int reduced_euler_characteristic(const SimplicialComplex& delta);

/// Rank of an integer matrix over the field (exact). Rows are given densely.
std::size_t matrix_rank(const std::vector<std::vector<int>>& rows, const Field& field);

} // namespace regpow
