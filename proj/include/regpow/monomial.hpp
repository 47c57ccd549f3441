#pragma once

// Exponent vectors (monomials) and monomial ideals given by minimal generators.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace regpow {

/// Maximum number of variables (and graph vertices) supported.
inline constexpr int kMaxVars = 32;

/// Bit j set <=> variable/vertex j+1 is present.
using VertexMask = std::uint64_t;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of N^n, read as the monomial x^a. Entries are stored inline.
class ExponentVector {
public:
    using value_type = std::uint8_t;
    static constexpr int kMaxExponent = 255;

    ExponentVector() = default;
    explicit ExponentVector(int n);
    ExponentVector(std::initializer_list<int> entries);
    explicit ExponentVector(std::span<const int> entries);

    static ExponentVector from_mask(int n, VertexMask mask);
    static ExponentVector unit(int n, int j); // x_{j+1}, 0-based j

    int size() const noexcept { return n_; }
    int operator[](int j) const noexcept { return data_[static_cast<std::size_t>(j)]; }
    void set(int j, int value);

    int degree() const noexcept;
    VertexMask support() const noexcept;
    bool is_squarefree() const noexcept;
    bool is_zero() const noexcept { return degree() == 0; }

    /// true iff x^this divides x^other.
    bool divides(const ExponentVector& other) const noexcept;

    std::vector<int> to_vector() const;

    /// Text form such as "x1^2*x3"; "1" for the zero vector.
    std::string to_string() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept;
    friend std::strong_ordering operator<=>(const ExponentVector& a,
                                            const ExponentVector& b) noexcept;

private:
    int n_ = 0;
    std::array<value_type, kMaxVars> data_{};
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
/// Componentwise a - b; requires b <= a.
ExponentVector quotient(const ExponentVector& a, const ExponentVector& b);
/// Squarefree part x_{supp a}.
ExponentVector radical(const ExponentVector& a);
/// Coefficient-free partial derivative of x^f by x^a: x^{f-a} if a <= f, otherwise zero.
std::optional<ExponentVector> star_partial(const ExponentVector& f, const ExponentVector& a);

/// Parses "x1^2*x3", "1", or "x2" for a ring with n variables.
ExponentVector parse_monomial(std::string_view text, int n);

/// A monomial ideal in k[x1..xn], stored as its minimal generators in lexicographic order.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(int n);
    static MonomialIdeal unit(int n);
    /// Ideal generated by the given variables (bit j -> x_{j+1}).
    static MonomialIdeal variables(int n, VertexMask vars);

    int num_vars() const noexcept { return n_; }
    const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
    std::size_t num_gens() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept;
    bool is_squarefree() const noexcept;
    bool contains(const ExponentVector& a) const;
    /// Every generator of other lies in this.
    bool contains(const MonomialIdeal& other) const;

    /// Squarefree generators as vertex masks; requires is_squarefree().
    std::vector<VertexMask> squarefree_masks() const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    friend MonomialIdeal minimalize(int n, std::vector<ExponentVector> gens);
    int n_ = 0;
    std::vector<ExponentVector> gens_;
};

/// Inclusion-minimal antichain generating the same ideal.
MonomialIdeal minimalize(int n, std::vector<ExponentVector> gens);
/// Squarefree ideal from generator masks.
MonomialIdeal ideal_from_masks(int n, std::span<const VertexMask> masks);

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
/// I^s; s = 0 gives the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, int s);
MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& a);
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal radical(const MonomialIdeal& I);
/// sqrt(I : x^a), generated by the supports of g / gcd(g, x^a).
MonomialIdeal radical_colon(const MonomialIdeal& I, const ExponentVector& a);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// rho_j(I) = max deg_j over generators. Throws DomainError on zero/unit ideals.
std::vector<int> rho(const MonomialIdeal& I);

/// The finite box Gamma(I) = { a : a_j <= max(rho_j - 1, 0) }, iterated in lexicographic order.
class GammaBox {
public:
    explicit GammaBox(const MonomialIdeal& I);
    GammaBox(int n, std::vector<int> upper); // inclusive upper bounds

    const std::vector<int>& upper() const noexcept { return upper_; }
    std::size_t size() const noexcept;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        ExponentVector a(n_);
        for (;;) {
            fn(static_cast<const ExponentVector&>(a));
            int j = n_ - 1;
            while (j >= 0 && a[j] == upper_[static_cast<std::size_t>(j)]) {
                a.set(j, 0);
                --j;
            }
            if (j < 0) return;
            a.set(j, a[j] + 1);
        }
    }

    std::vector<ExponentVector> to_vector() const;

private:
    int n_;
    std::vector<int> upper_;
};

} // namespace regpow
