#pragma once

#include <string>

#include "hecke/hecke.hpp"

namespace hecke {

// JSON with fixed field order, newline-terminated.
std::string graph_to_json(const HeckeGraph& g);
// Inverse of graph_to_json; throws Parse on malformed input.
HeckeGraph graph_from_json(const std::string& text);

// Directed graph, one edge per ordered pair, labelled with its multiplicity.
std::string graph_to_dot(const HeckeGraph& g);
// src,dst,mult with vertex labels; one row per edge.
std::string graph_to_csv(const HeckeGraph& g);

// Writes through a temporary file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace hecke
