#pragma once

#include <string>

#include <json.hpp>

#include "hellylat/affine.hpp"
#include "hellylat/catalog.hpp"
#include "hellylat/coxeter.hpp"
#include "hellylat/garside.hpp"
#include "hellylat/helly.hpp"
#include "hellylat/poset.hpp"

namespace hellylat::io {

using json = nlohmann::json;

/// Reads a whole file (or stdin for "-") and parses it. Throws InputError.
json load_json(const std::string& path);
json parse_json(const std::string& text);

/// {"elements": [ids], "covers": [[lo, hi], ...]} with ids as strings.
json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const json& j);

json to_json(const PosetProfile& p, const FinitePoset& poset);

/// {"vertices": [...], "edges": [[u, v], ...]}.
json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j);

/// {"points": [...], "dist": [[...], ...]}.
MetricSample metric_from_json(const json& j);

/// {"kind": ..., "params": {...}, "children": [...], "graph": {...},
///  "labels": [[u, v, m], ...]}.
CatalogSpec catalog_spec_from_json(const json& j);
/// "boolean:3", "subspace:q=2,n=3", "product(chain:2,chain:3)".
CatalogSpec catalog_spec_from_text(const std::string& text);

/// {"u": [...], "jumps": {"i": element-id}}. Coordinates are integers or
/// "p/q" strings and must lie in (1/denom)Z.
json to_json(const affine::AffineContext& ctx, const affine::MPoint& p);
affine::MPoint mpoint_from_json(const affine::AffineContext& ctx, const json& j);

json to_json(const garside::SimplesLattice& ctx, const garside::BraidElement& g);

/// {"family": "A_extended" | "C", "coords": [...]}.
json to_json(coxeter::Family f, const coxeter::Point& x);
coxeter::Family family_from_text(const std::string& s);
std::string family_name(coxeter::Family f);
coxeter::Point point_from_text(const std::string& s);

std::string rational_text(const affine::Rational& r);

}  // namespace hellylat::io
