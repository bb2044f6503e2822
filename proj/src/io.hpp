#pragma once

#include <iosfwd>
#include <string>

#include "bounds.hpp"
#include "intervals.hpp"
#include "representation.hpp"
#include "transforms.hpp"

namespace gridpaths {

/// Raised by every reader on malformed input; line is 1-based.
struct parse_error : std::runtime_error {
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// Graph files: first line "n m", then m lines "u v" with 0-based ids, u < v.
graph parse_graph(const std::string& text);
std::string serialize_graph(const graph& g);

// Interval files: one line "v l r" per vertex.
interval_representation parse_intervals(const std::string& text);
std::string serialize_intervals(const interval_representation& ir);

// Decomposition files: one bag per line, vertex ids space-separated.
path_decomposition parse_decomposition(const std::string& text);
std::string serialize_decomposition(const path_decomposition& pd);

// Representation files: one line "v : x1,y1 x2,y2 ..." per vertex, optional
// trailing "closed". Serialization shifts the drawing to origin (1,1).
grid_representation parse_representation(const std::string& text,
                                         rep_mode mode = rep_mode::epg);
std::string serialize_representation(const grid_representation& rep);

// Drawing files: section "vertices" with lines "v x y", then section "edges"
// with lines "u v : x1,y1 x2,y2 ...".
orthogonal_drawing parse_drawing(const std::string& text);
std::string serialize_drawing(const orthogonal_drawing& d);

// Recipe files: lines "delete-vertex v", "delete-edge u v", "contract u v".
minor_recipe parse_recipe(const std::string& text);
std::string serialize_recipe(const minor_recipe& r);

std::string report_text(const validation_report& report);
std::string report_json(const validation_report& report);

std::string stats_text(const representation_stats& s);
std::string analysis_text(const representation_stats& s, const std::vector<bound_report>& bounds);
std::string analysis_json(const representation_stats& s, const std::vector<bound_report>& bounds);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gridpaths
