#pragma once

#include <string>

#include "fml/frt.hpp"
#include "fml/graph.hpp"

namespace fml {

// Graph file format (line oriented, '#' starts a comment line):
//   n m
//   u v              (m edge lines, 0-based ids)
//   id color         (one line per colored node, color in {B, R})
//   terminals id...
std::string write_graph(const ColoredGraph& graph);
ColoredGraph read_graph(const std::string& content);

// Labeling file format: one line per labeled edge, `u v t1 t2 ...`.
std::string write_labeling(const TemporalLabeling& labeling);
TemporalLabeling read_labeling(const std::string& content);

// Tree dump: `root id` header, then one `node parent weight` line per node
// (the root carries parent -1 and weight 0).
std::string write_tree(const WeightedTree& tree);

void save_text_file(const std::string& path, const std::string& content);
std::string load_text_file(const std::string& path);

}  // namespace fml
