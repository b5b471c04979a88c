#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "zap/zgraph.hpp"

namespace zap {

using ojson = nlohmann::ordered_json;

/// Parses the graph document. Applies planar defaults; does not validate
/// semantics beyond references and ids. Throws ParseError / ReferenceError.
ZappaticGraph load_graph(std::string_view text);

/// Canonical form: keys in schema order, arrays in id order, only the
/// fields that carry information (planar weights are implied).
ojson to_json(const ZappaticGraph& g);

std::string serialize(const ZappaticGraph& g, bool pretty = false);

}  // namespace zap
