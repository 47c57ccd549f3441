#pragma once

// Text and JSON forms of graphs, ideals, complexes and certificates.
//
//   graph text:  "n m\n" then m lines "u v\n", 1 <= u < v <= n, edges in lexicographic order
//   graph JSON:  {"n": 4, "edges": [[1,2],[2,3]]}
//   ideal JSON:  {"n": 3, "gens": [[1,1,0],[0,1,1]]}; a generator may also be a string "x1*x2"
//   complex:     {"n": 3, "facets": [[1,2],[2,3]]}, 1-based vertices
//   certificate: {"a": [..], "i": 1, "F": [..], "value": 3, "field": "gf2"}

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "regpow/complex.hpp"
#include "regpow/graph.hpp"
#include "regpow/monomial.hpp"
#include "regpow/regularity.hpp"

namespace regpow {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

std::string graph_to_text(const Graph& g);
Graph graph_from_text(std::string_view text);
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const SimplicialComplex& delta);
SimplicialComplex complex_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const RegularityCertificate& cert);
RegularityCertificate certificate_from_json(const nlohmann::json& j);

/// 1-based vertex list of a mask.
nlohmann::json mask_to_json(VertexMask mask);

std::string read_file(const std::string& path);
/// JSON if the first non-blank character is '{', graph text otherwise.
Graph read_graph_file(const std::string& path);
MonomialIdeal read_ideal_file(const std::string& path);

} // namespace regpow
