#pragma once

#include <string>

#include "json.hpp"
#include "toricgraph/enumerate.hpp"

namespace toric {

using json = nlohmann::json;

json graph_to_json(const Graph& g);         // {"n": int, "edges": [[u,v],...]}
Graph graph_from_json(const json& j);

// {"plus": [[edgeIndex, exp],...], "minus": [[...]]} with ascending indices
json binomial_to_json(const Binomial& b);
Binomial binomial_from_json(const Graph& g, const json& j);

// {"circuit": kind, "primitive": bool, "mixed": bool, "ugb": bool, "degree": int}
json classification_to_json(const Graph& g, const Binomial& b);

json block_decomposition_to_json(const BlockDecomposition& d);
json tagged_to_json(const TaggedBinomial& t);
json report_to_json(const BasisReport& r);

// row-major array of arrays of decimal strings (debugging)
json intmat_to_json(const IntMat& A);

}  // namespace toric
