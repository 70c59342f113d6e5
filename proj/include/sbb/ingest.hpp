#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbb/graph.hpp"

namespace sbb {

enum class EdgeListFormat { kSignedTsv, kKonectWeighted, kUnsignedTsv };

std::optional<EdgeListFormat> parse_format_name(std::string_view name);

struct EdgeRecord {
  std::uint32_t left;
  std::uint32_t right;
  Sign sign = Sign::kPositive;  // meaningless for unsigned input
  double weight = 0.0;          // KonectWeighted only
};

// A parsed edge list with densely remapped ids. Labels hold the original
// external ids in first-appearance order.
struct EdgeList {
  EdgeListFormat format = EdgeListFormat::kSignedTsv;
  std::vector<EdgeRecord> edges;
  std::vector<std::string> left_labels;
  std::vector<std::string> right_labels;

  std::size_t left_count() const { return left_labels.size(); }
  std::size_t right_count() const { return right_labels.size(); }
  bool has_signs() const { return format != EdgeListFormat::kUnsignedTsv; }
};

// Lines starting with '%' or '#' and blank lines are skipped. Fields may be
// separated by tabs or spaces.
//   SignedTSV:       left right sign   ("1","+1","+" positive; "0","-1","-" negative)
//   UnsignedTSV:     left right
//   KonectWeighted:  left right weight [timestamp]   (weight > 0 positive, else negative)
// Throws Error(kMalformedLine), Error(kDuplicateEdge), Error(kEmptyInput).
EdgeList parse_edge_list(std::string_view text, EdgeListFormat format);

EdgeList read_edge_list(const std::string& path, EdgeListFormat format);

// Throws Error(kUnsignedInput) for unsigned lists.
SignedBipartiteGraph to_graph(const EdgeList& list, std::size_t min_left = 0,
                              std::size_t min_right = 0);

// Edges are visited in file order, one SplitMix64 draw each.
SignedBipartiteGraph assign_random_signs(const EdgeList& list, double positive_probability,
                                         std::uint64_t seed);

// weight >= threshold becomes Positive. Needs weighted input.
SignedBipartiteGraph assign_threshold_signs(const EdgeList& list, double threshold);

// SignedTSV with "+1"/"-1" tokens over dense indices, ordered by (left, right).
void write_signed_tsv(std::ostream& out, const SignedBipartiteGraph& graph);
std::string to_signed_tsv(const SignedBipartiteGraph& graph);

// Lines "L<TAB>index<TAB>label" and "R<TAB>index<TAB>label".
void write_id_map(std::ostream& out, const EdgeList& list);

struct IdMap {
  std::vector<std::string> left;
  std::vector<std::string> right;
};
IdMap parse_id_map(std::string_view text);

struct SyntheticSpec {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  double edge_probability = 0.0;
  double positive_probability = 0.5;
  std::uint64_t seed = 0;
};

// Visits pairs left-major (i over left, j over right); each pair takes one
// draw for presence and, if present, one draw for its sign.
SignedBipartiteGraph generate_random_bipartite(const SyntheticSpec& spec);

// Few left vertices with dense rows into a large right side, which yields
// large common neighborhoods between left pairs.
SignedBipartiteGraph generate_skewed_bipartite(std::size_t few_left, std::size_t many_right,
                                               double density, double positive_probability,
                                               std::uint64_t seed);

}  // namespace sbb
