#include "regpow/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace regpow {

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxVars) {
        throw DimensionError("variable count " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxVars) + "]");
    }
}

void check_same(int n, int m) {
    if (n != m) {
        throw DimensionError("mismatched variable counts " + std::to_string(n) + " and " +
                             std::to_string(m));
    }
}

ExponentVector::value_type checked_exponent(int v) {
    if (v < 0) throw DomainError("negative exponent " + std::to_string(v));
    if (v > ExponentVector::kMaxExponent) {
        throw DomainError("exponent overflow: " + std::to_string(v));
    }
    return static_cast<ExponentVector::value_type>(v);
}

} // namespace

ExponentVector::ExponentVector(int n) : n_(n) { check_n(n); }

ExponentVector::ExponentVector(std::initializer_list<int> entries)
    : ExponentVector(std::span<const int>(entries.begin(), entries.size())) {}

ExponentVector::ExponentVector(std::span<const int> entries)
    : n_(static_cast<int>(entries.size())) {
    check_n(n_);
    for (std::size_t j = 0; j < entries.size(); ++j) data_[j] = checked_exponent(entries[j]);
}

ExponentVector ExponentVector::from_mask(int n, VertexMask mask) {
    ExponentVector a(n);
    for (int j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) a.data_[static_cast<std::size_t>(j)] = 1;
    }
    return a;
}

ExponentVector ExponentVector::unit(int n, int j) {
    if (j < 0 || j >= n) throw DimensionError("variable index out of range");
    ExponentVector a(n);
    a.data_[static_cast<std::size_t>(j)] = 1;
    return a;
}

void ExponentVector::set(int j, int value) {
    if (j < 0 || j >= n_) throw DimensionError("variable index out of range");
    data_[static_cast<std::size_t>(j)] = checked_exponent(value);
}

int ExponentVector::degree() const noexcept {
    int d = 0;
    for (int j = 0; j < n_; ++j) d += data_[static_cast<std::size_t>(j)];
    return d;
}

VertexMask ExponentVector::support() const noexcept {
    VertexMask m = 0;
    for (int j = 0; j < n_; ++j) {
        if (data_[static_cast<std::size_t>(j)] != 0) m |= VertexMask{1} << j;
    }
    return m;
}

bool ExponentVector::is_squarefree() const noexcept {
    for (int j = 0; j < n_; ++j) {
        if (data_[static_cast<std::size_t>(j)] > 1) return false;
    }
    return true;
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
    for (int j = 0; j < n_; ++j) {
        if (data_[static_cast<std::size_t>(j)] > other.data_[static_cast<std::size_t>(j)]) {
            return false;
        }
    }
    return true;
}

std::vector<int> ExponentVector::to_vector() const {
    return {data_.begin(), data_.begin() + n_};
}

std::string ExponentVector::to_string() const {
    std::string out;
    for (int j = 0; j < n_; ++j) {
        const int e = data_[static_cast<std::size_t>(j)];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(j + 1);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    return a.n_ == b.n_ && a.data_ == b.data_;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.data_ <=> b.data_;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    check_same(a.size(), b.size());
    ExponentVector c(a.size());
    for (int j = 0; j < a.size(); ++j) c.set(j, a[j] + b[j]);
    return c;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    check_same(a.size(), b.size());
    ExponentVector c(a.size());
    for (int j = 0; j < a.size(); ++j) c.set(j, std::max(a[j], b[j]));
    return c;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
    check_same(a.size(), b.size());
    ExponentVector c(a.size());
    for (int j = 0; j < a.size(); ++j) c.set(j, std::min(a[j], b[j]));
    return c;
}

ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
    check_same(a.size(), b.size());
    if (!b.divides(a)) throw DomainError(b.to_string() + " does not divide " + a.to_string());
    ExponentVector c(a.size());
    for (int j = 0; j < a.size(); ++j) c.set(j, a[j] - b[j]);
    return c;
}

ExponentVector radical(const ExponentVector& a) {
    return ExponentVector::from_mask(a.size(), a.support());
}

std::optional<ExponentVector> star_partial(const ExponentVector& f, const ExponentVector& a) {
    check_same(f.size(), a.size());
    if (!a.divides(f)) return std::nullopt;
    return quotient(f, a);
}

ExponentVector parse_monomial(std::string_view text, int n) {
    ExponentVector a(n);
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text == "1") return a;
    auto parse_int = [&](std::string_view s) {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
            throw DomainError("malformed monomial '" + std::string(text) + "'");
        }
        return v;
    };
    while (!text.empty()) {
        const auto star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
        if (factor.size() < 2 || factor.front() != 'x') {
            throw DomainError("malformed monomial factor '" + std::string(factor) + "'");
        }
        factor.remove_prefix(1);
        int e = 1;
        if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
            e = parse_int(factor.substr(caret + 1));
            factor = factor.substr(0, caret);
        }
        const int var = parse_int(factor);
        if (var < 1 || var > n) throw DimensionError("variable x" + std::to_string(var) + " out of range");
        a.set(var - 1, a[var - 1] + e);
    }
    return a;
}

// ---------------------------------------------------------------------------

MonomialIdeal MonomialIdeal::zero(int n) {
    check_n(n);
    MonomialIdeal I;
    I.n_ = n;
    return I;
}

MonomialIdeal MonomialIdeal::unit(int n) { return minimalize(n, {ExponentVector(n)}); }

MonomialIdeal MonomialIdeal::variables(int n, VertexMask vars) {
    std::vector<ExponentVector> gens;
    for (int j = 0; j < n; ++j) {
        if ((vars >> j) & 1U) gens.push_back(ExponentVector::unit(n, j));
    }
    return minimalize(n, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_zero();
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const ExponentVector& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
    check_same(n_, a.size());
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const ExponentVector& g) { return g.divides(a); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same(n_, other.n_);
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const ExponentVector& g) { return contains(g); });
}

std::vector<VertexMask> MonomialIdeal::squarefree_masks() const {
    if (!is_squarefree()) throw DomainError("ideal is not squarefree");
    std::vector<VertexMask> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.support());
    return out;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (k) out += ", ";
        out += gens_[k].to_string();
    }
    return out + ")";
}

MonomialIdeal minimalize(int n, std::vector<ExponentVector> gens) {
    check_n(n);
    for (const auto& g : gens) check_same(n, g.size());
    // A divisor has degree <= its multiple, so scanning by degree only needs
    // to test candidates against already accepted generators.
    std::vector<std::pair<int, ExponentVector>> keyed;
    keyed.reserve(gens.size());
    for (auto& g : gens) keyed.emplace_back(g.degree(), g);
    std::sort(keyed.begin(), keyed.end());
    keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

    MonomialIdeal I;
    I.n_ = n;
    std::vector<VertexMask> supports;
    for (const auto& [deg, g] : keyed) {
        const VertexMask sg = g.support();
        bool redundant = false;
        for (std::size_t k = 0; k < I.gens_.size(); ++k) {
            if ((supports[k] & ~sg) == 0 && I.gens_[k].divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            I.gens_.push_back(g);
            supports.push_back(sg);
        }
    }
    std::sort(I.gens_.begin(), I.gens_.end());
    return I;
}

MonomialIdeal ideal_from_masks(int n, std::span<const VertexMask> masks) {
    std::vector<VertexMask> sorted(masks.begin(), masks.end());
    std::sort(sorted.begin(), sorted.end(),
              [](VertexMask a, VertexMask b) {
                  const int pa = std::popcount(a), pb = std::popcount(b);
                  return pa != pb ? pa < pb : a < b;
              });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<VertexMask> kept;
    for (VertexMask m : sorted) {
        if (std::none_of(kept.begin(), kept.end(), [m](VertexMask k) { return (k & ~m) == 0; })) {
            kept.push_back(m);
        }
    }
    std::vector<ExponentVector> gens;
    gens.reserve(kept.size());
    for (VertexMask m : kept) gens.push_back(ExponentVector::from_mask(n, m));
    return minimalize(n, std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same(I.num_vars(), J.num_vars());
    std::vector<ExponentVector> prods;
    prods.reserve(I.num_gens() * J.num_gens());
    for (const auto& g : I.gens()) {
        for (const auto& h : J.gens()) prods.push_back(g + h);
    }
    return minimalize(I.num_vars(), std::move(prods));
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same(I.num_vars(), J.num_vars());
    std::vector<ExponentVector> all = I.gens();
    all.insert(all.end(), J.gens().begin(), J.gens().end());
    return minimalize(I.num_vars(), std::move(all));
}

MonomialIdeal power(const MonomialIdeal& I, int s) {
    if (s < 0) throw DomainError("negative power");
    MonomialIdeal result = MonomialIdeal::unit(I.num_vars());
    for (int k = 0; k < s; ++k) result = multiply(result, I);
    return result;
}

MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& a) {
    check_same(I.num_vars(), a.size());
    std::vector<ExponentVector> q;
    q.reserve(I.num_gens());
    for (const auto& g : I.gens()) q.push_back(quotient(g, gcd(g, a)));
    return minimalize(I.num_vars(), std::move(q));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same(I.num_vars(), J.num_vars());
    MonomialIdeal result = MonomialIdeal::unit(I.num_vars());
    for (const auto& h : J.gens()) result = intersect(result, colon(I, h));
    return result;
}

MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<VertexMask> masks;
    masks.reserve(I.num_gens());
    for (const auto& g : I.gens()) masks.push_back(g.support());
    return ideal_from_masks(I.num_vars(), masks);
}

MonomialIdeal radical_colon(const MonomialIdeal& I, const ExponentVector& a) {
    check_same(I.num_vars(), a.size());
    std::vector<VertexMask> masks;
    masks.reserve(I.num_gens());
    for (const auto& g : I.gens()) {
        VertexMask m = 0;
        for (int j = 0; j < g.size(); ++j) {
            if (g[j] > a[j]) m |= VertexMask{1} << j;
        }
        masks.push_back(m);
    }
    return ideal_from_masks(I.num_vars(), masks);
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same(I.num_vars(), J.num_vars());
    std::vector<ExponentVector> lcms;
    lcms.reserve(I.num_gens() * J.num_gens());
    for (const auto& g : I.gens()) {
        for (const auto& h : J.gens()) lcms.push_back(lcm(g, h));
    }
    return minimalize(I.num_vars(), std::move(lcms));
}

std::vector<int> rho(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) throw DomainError("rho undefined for zero or unit ideal");
    std::vector<int> r(static_cast<std::size_t>(I.num_vars()), 0);
    for (const auto& g : I.gens()) {
        for (int j = 0; j < g.size(); ++j) r[static_cast<std::size_t>(j)] = std::max(r[static_cast<std::size_t>(j)], g[j]);
    }
    return r;
}

GammaBox::GammaBox(const MonomialIdeal& I) : n_(I.num_vars()) {
    for (int r : rho(I)) upper_.push_back(std::max(r - 1, 0));
}

GammaBox::GammaBox(int n, std::vector<int> upper) : n_(n), upper_(std::move(upper)) {
    check_same(n, static_cast<int>(upper_.size()));
    for (int u : upper_) checked_exponent(u);
}

std::size_t GammaBox::size() const noexcept {
    std::size_t total = 1;
    for (int u : upper_) total *= static_cast<std::size_t>(u + 1);
    return total;
}

std::vector<ExponentVector> GammaBox::to_vector() const {
    std::vector<ExponentVector> out;
    out.reserve(size());
    for_each([&](const ExponentVector& a) { out.push_back(a); });
    return out;
}

} // namespace regpow
