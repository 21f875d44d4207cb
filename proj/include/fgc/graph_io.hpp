#pragma once

#include "fgc/fatgraph.hpp"

#include <string>

namespace fgc {

// JSON document {"vertices":[{"id":..,"star":[..]}],"pairing":[[h,h']]};
// throws std::runtime_error with context on parse or validation failure
FatGraph read_graph(const std::string& path);
FatGraph parse_graph(const std::string& text);
std::string graph_to_json(const FatGraph& g);

}  // namespace fgc
