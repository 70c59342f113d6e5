#include "sbb/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sbb/error.hpp"
#include "sbb/rng.hpp"

namespace sbb {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::optional<Sign> parse_sign_token(std::string_view tok) {
  if (tok == "1" || tok == "+1" || tok == "+") return Sign::kPositive;
  if (tok == "0" || tok == "-1" || tok == "-") return Sign::kNegative;
  return std::nullopt;
}

std::optional<double> parse_number(std::string_view tok) {
  // from_chars rejects a leading '+'.
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

class Remapper {
 public:
  explicit Remapper(std::vector<std::string>& labels) : labels_(labels) {}

  std::uint32_t id(std::string_view label) {
    auto [it, inserted] =
        index_.try_emplace(std::string(label), static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.emplace_back(label);
    return it->second;
  }

 private:
  std::vector<std::string>& labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::kMalformedLine,
              "line " + std::to_string(line_no) + ": " + why, line_no);
}

}  // namespace

std::optional<EdgeListFormat> parse_format_name(std::string_view name) {
  if (name == "signed-tsv") return EdgeListFormat::kSignedTsv;
  if (name == "unsigned-tsv") return EdgeListFormat::kUnsignedTsv;
  if (name == "konect") return EdgeListFormat::kKonectWeighted;
  return std::nullopt;
}

EdgeList parse_edge_list(std::string_view text, EdgeListFormat format) {
  EdgeList list;
  list.format = format;
  Remapper left(list.left_labels);
  Remapper right(list.right_labels);
  std::unordered_set<std::uint64_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields[0].front() == '%' || fields[0].front() == '#') continue;

    EdgeRecord rec{};
    switch (format) {
      case EdgeListFormat::kSignedTsv: {
        if (fields.size() != 3) malformed(line_no, "expected 3 fields");
        auto sign = parse_sign_token(fields[2]);
        if (!sign) malformed(line_no, "bad sign token '" + std::string(fields[2]) + "'");
        rec.sign = *sign;
        rec.weight = *sign == Sign::kPositive ? 1.0 : 0.0;
        break;
      }
      case EdgeListFormat::kUnsignedTsv:
        if (fields.size() != 2) malformed(line_no, "expected 2 fields");
        break;
      case EdgeListFormat::kKonectWeighted: {
        if (fields.size() != 3 && fields.size() != 4) malformed(line_no, "expected 3 or 4 fields");
        auto weight = parse_number(fields[2]);
        if (!weight) malformed(line_no, "bad weight '" + std::string(fields[2]) + "'");
        rec.weight = *weight;
        // Zero weights map to Negative, like 0/1 signed files.
        rec.sign = *weight > 0 ? Sign::kPositive : Sign::kNegative;
        break;
      }
    }
    rec.left = left.id(fields[0]);
    rec.right = right.id(fields[1]);
    if (!seen.insert((std::uint64_t{rec.left} << 32) | rec.right).second) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "line " + std::to_string(line_no) + ": duplicate edge (" +
                      std::string(fields[0]) + "," + std::string(fields[1]) + ")",
                  line_no);
    }
    list.edges.push_back(rec);
  }
  if (list.edges.empty()) throw Error(ErrorKind::kEmptyInput, "edge list contains no edges");
  return list;
}

EdgeList read_edge_list(const std::string& path, EdgeListFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str(), format);
}

namespace {

SignedBipartiteGraph build_from(const EdgeList& list, std::vector<SignedEdge> edges,
                                std::size_t min_left = 0, std::size_t min_right = 0) {
  return build_graph(std::max(list.left_count(), min_left),
                     std::max(list.right_count(), min_right), edges);
}

}  // namespace

SignedBipartiteGraph to_graph(const EdgeList& list, std::size_t min_left,
                              std::size_t min_right) {
  if (!list.has_signs()) {
    throw Error(ErrorKind::kUnsignedInput,
                "unsigned edge list: assign signs before counting");
  }
  std::vector<SignedEdge> edges;
  edges.reserve(list.edges.size());
  for (const auto& e : list.edges) edges.push_back({e.left, e.right, e.sign});
  return build_from(list, std::move(edges), min_left, min_right);
}

SignedBipartiteGraph assign_random_signs(const EdgeList& list, double positive_probability,
                                         std::uint64_t seed) {
  if (!(positive_probability >= 0.0 && positive_probability <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "positive probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<SignedEdge> edges;
  edges.reserve(list.edges.size());
  for (const auto& e : list.edges) {
    edges.push_back({e.left, e.right,
                     rng.bernoulli(positive_probability) ? Sign::kPositive : Sign::kNegative});
  }
  return build_from(list, std::move(edges));
}

SignedBipartiteGraph assign_threshold_signs(const EdgeList& list, double threshold) {
  if (list.format == EdgeListFormat::kUnsignedTsv) {
    throw Error(ErrorKind::kUnsignedInput, "threshold signs need weighted input");
  }
  std::vector<SignedEdge> edges;
  edges.reserve(list.edges.size());
  for (const auto& e : list.edges) {
    edges.push_back({e.left, e.right, e.weight >= threshold ? Sign::kPositive : Sign::kNegative});
  }
  return build_from(list, std::move(edges));
}

void write_signed_tsv(std::ostream& out, const SignedBipartiteGraph& graph) {
  for (const auto& e : graph.edges()) {
    out << e.left << '\t' << e.right << '\t' << (e.sign == Sign::kPositive ? "+1" : "-1")
        << '\n';
  }
}

std::string to_signed_tsv(const SignedBipartiteGraph& graph) {
  std::ostringstream out;
  write_signed_tsv(out, graph);
  return out.str();
}

void write_id_map(std::ostream& out, const EdgeList& list) {
  for (std::size_t i = 0; i < list.left_labels.size(); ++i) {
    out << "L\t" << i << '\t' << list.left_labels[i] << '\n';
  }
  for (std::size_t i = 0; i < list.right_labels.size(); ++i) {
    out << "R\t" << i << '\t' << list.right_labels[i] << '\n';
  }
}

IdMap parse_id_map(std::string_view text) {
  IdMap map;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) malformed(line_no, "expected side, index, label");
    const auto side = line.substr(0, t1);
    const auto idx_tok = line.substr(t1 + 1, t2 - t1 - 1);
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(idx_tok.data(), idx_tok.data() + idx_tok.size(), idx);
    if (ec != std::errc() || ptr != idx_tok.data() + idx_tok.size()) {
      malformed(line_no, "bad index");
    }
    std::vector<std::string>* target = nullptr;
    if (side == "L") target = &map.left;
    else if (side == "R") target = &map.right;
    else malformed(line_no, "side must be L or R");
    if (target->size() <= idx) target->resize(idx + 1);
    (*target)[idx] = std::string(line.substr(t2 + 1));
  }
  return map;
}

SignedBipartiteGraph generate_random_bipartite(const SyntheticSpec& spec) {
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0) ||
      !(spec.positive_probability >= 0.0 && spec.positive_probability <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "probabilities must lie in [0, 1]");
  }
  SplitMix64 rng(spec.seed);
  std::vector<SignedEdge> edges;
  for (std::uint32_t i = 0; i < spec.left_count; ++i) {
    for (std::uint32_t j = 0; j < spec.right_count; ++j) {
      if (!rng.bernoulli(spec.edge_probability)) continue;
      const Sign s = rng.bernoulli(spec.positive_probability) ? Sign::kPositive : Sign::kNegative;
      edges.push_back({i, j, s});
    }
  }
  return build_graph(spec.left_count, spec.right_count, edges);
}

SignedBipartiteGraph generate_skewed_bipartite(std::size_t few_left, std::size_t many_right,
                                               double density, double positive_probability,
                                               std::uint64_t seed) {
  return generate_random_bipartite({few_left, many_right, density, positive_probability, seed});
}

}  // namespace sbb
