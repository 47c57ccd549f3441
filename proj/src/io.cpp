#include "regpow/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace regpow {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

// Exactly two base-10 integers separated by single spaces.
std::pair<long, long> parse_pair(std::string_view line, int lineno) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) throw ParseError("expected two integers", lineno);
    auto num = [&](std::string_view s) {
        long v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
            throw ParseError("malformed integer '" + std::string(s) + "'", lineno);
        }
        return v;
    };
    return {num(line.substr(0, sp)), num(line.substr(sp + 1))};
}

} // namespace

std::string graph_to_text(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.num_vertices()) + ' ' + std::to_string(edges.size()) + '\n';
    for (auto [u, v] : edges) out += std::to_string(u + 1) + ' ' + std::to_string(v + 1) + '\n';
    return out;
}

Graph graph_from_text(std::string_view text) {
    auto lines = split_lines(text);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("empty graph file", 1);
    const auto [n, m] = parse_pair(lines[0], 1);
    if (n < 0 || n > kMaxVars) throw ParseError("vertex count out of range", 1);
    if (m < 0) throw ParseError("negative edge count", 1);
    if (static_cast<long>(lines.size()) - 1 != m) {
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1),
                         static_cast<int>(std::min<long>(static_cast<long>(lines.size()), m + 1)) + 1);
    }
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const int lineno = static_cast<int>(k) + 1;
        auto [u, v] = parse_pair(lines[k], lineno);
        if (u < 1 || v < 1 || u > n || v > n) throw ParseError("vertex out of range", lineno);
        if (u == v) throw ParseError("loop", lineno);
        if (u > v) std::swap(u, v);
        const Edge e{static_cast<int>(u - 1), static_cast<int>(v - 1)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) throw ParseError("duplicate edge", lineno);
        edges.push_back(e);
    }
    return {static_cast<int>(n), edges};
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    return {{"n", g.num_vertices()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (e.size() != 2) throw ParseError("edge must have two endpoints", 0);
            int u = e[0].get<int>() - 1, v = e[1].get<int>() - 1;
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v);
        }
        return {n, edges};
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad graph JSON: ") + ex.what(), 0);
    } catch (const DomainError& ex) {
        throw ParseError(ex.what(), 0);
    }
}

json ideal_to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(g.to_vector());
    return {{"n", I.num_vars()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<ExponentVector> gens;
        for (const auto& g : j.at("gens")) {
            if (g.is_string()) {
                gens.push_back(parse_monomial(g.get<std::string>(), n));
                continue;
            }
            const auto entries = g.get<std::vector<int>>();
            if (static_cast<int>(entries.size()) != n) throw ParseError("generator length differs from n", 0);
            gens.emplace_back(std::span<const int>(entries));
        }
        return minimalize(n, std::move(gens));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad ideal JSON: ") + ex.what(), 0);
    } catch (const std::logic_error& ex) {
        throw ParseError(ex.what(), 0);
    }
}

json mask_to_json(VertexMask mask) {
    json out = json::array();
    for (VertexMask rest = mask; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
    return out;
}

json complex_to_json(const SimplicialComplex& delta) {
    json facets = json::array();
    for (VertexMask f : delta.facets()) facets.push_back(mask_to_json(f));
    return {{"n", delta.num_vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<VertexMask> facets;
        for (const auto& f : j.at("facets")) {
            VertexMask m = 0;
            for (int v : f.get<std::vector<int>>()) {
                if (v < 1 || v > n) throw ParseError("facet vertex out of range", 0);
                m |= VertexMask{1} << (v - 1);
            }
            facets.push_back(m);
        }
        if (facets.empty()) return SimplicialComplex::void_complex(n);
        return SimplicialComplex::from_faces(n, std::move(facets));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad complex JSON: ") + ex.what(), 0);
    }
}

json certificate_to_json(const RegularityCertificate& cert) {
    return {{"a", cert.a.to_vector()},
            {"i", cert.i},
            {"F", mask_to_json(cert.face)},
            {"value", cert.value},
            {"field", cert.field.to_string()}};
}

RegularityCertificate certificate_from_json(const json& j) {
    try {
        RegularityCertificate cert;
        const auto a = j.at("a").get<std::vector<int>>();
        cert.a = ExponentVector(std::span<const int>(a));
        cert.i = j.at("i").get<int>();
        for (int v : j.at("F").get<std::vector<int>>()) cert.face |= VertexMask{1} << (v - 1);
        cert.value = j.at("value").get<int>();
        cert.field = Field::parse(j.at("field").get<std::string>());
        return cert;
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad certificate JSON: ") + ex.what(), 0);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph read_graph_file(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return graph_from_json(json::parse(text));
        } catch (const json::parse_error& ex) {
            throw ParseError(ex.what(), 0);
        }
    }
    return graph_from_text(text);
}

MonomialIdeal read_ideal_file(const std::string& path) {
    try {
        return ideal_from_json(json::parse(read_file(path)));
    } catch (const json::parse_error& ex) {
        throw ParseError(ex.what(), 0);
    }
}

} // namespace regpow
