#pragma once

#include <string>
#include <vector>

#include "repwords/certificate.hpp"
#include "repwords/geometry.hpp"
#include "repwords/graph.hpp"
#include "repwords/oracle.hpp"

namespace repwords {

// edge list: first line the vertex count, then one "i j" pair per line,
// 1-based; '#' starts a comment
LabeledGraph read_edge_list(const std::string& text);
std::string write_edge_list(const LabeledGraph& g);

// graph6, optionally prefixed by the ">>graph6<<" header; strict:
// exact length, bytes in [63, 126], zero padding bits
LabeledGraph read_graph6(const std::string& text);
std::string write_graph6(const LabeledGraph& g);

// sniff the format: leading digit means edge list, otherwise graph6
LabeledGraph read_graph_auto(const std::string& text);
LabeledGraph load_graph_file(const std::string& path);

std::string certificate_json(const Certificate& c);

std::string census_csv(const std::vector<CensusRow>& rows);
std::string census_json(const std::vector<CensusRow>& rows);

// model serializations; rationals are printed exactly as "num/den"
std::string mpt_json(const MptModel& m);
std::string hook_json(const HookModel& hm);
std::string co132_json(const Co132IntervalModel& m);

std::string svg_mpt_model(const MptModel& m);
std::string svg_hook_model(const HookModel& hm);
std::string svg_co132_model(const Co132IntervalModel& m);

std::string tikz_mpt_model(const MptModel& m);
std::string tikz_hook_model(const HookModel& hm);
std::string tikz_co132_model(const Co132IntervalModel& m);

}  // namespace repwords
