#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "sbb/analytics.hpp"
#include "sbb/approx.hpp"
#include "sbb/error.hpp"
#include "sbb/exact.hpp"
#include "sbb/ingest.hpp"
#include "sbb/parallel.hpp"

namespace sbb::cli {
namespace {

using json = nlohmann::ordered_json;

// Input selection shared by every subcommand.
struct InputOptions {
  std::string input;
  std::string synthetic;
  std::string format = "signed-tsv";
  std::optional<double> sign_prob;
  std::uint64_t sign_seed = 0;
  std::optional<double> threshold;
  std::size_t left_count = 0;
  std::size_t right_count = 0;

  std::string dataset() const { return input.empty() ? synthetic : input; }
};

struct LoadedInput {
  SignedBipartiteGraph graph;
  EdgeList list;  // empty for synthetic inputs
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool seed_is_sign_seed = true) {
  cmd->add_option("--input", in.input, "Edge-list file");
  cmd->add_option("--synthetic", in.synthetic,
                  "Generated graph: random:L:R:P_EDGE:P_POS:SEED or skewed:L:R:DENSITY:P_POS:SEED");
  cmd->add_option("--format", in.format, "signed-tsv | unsigned-tsv | konect")
      ->check(CLI::IsMember({"signed-tsv", "unsigned-tsv", "konect"}));
  cmd->add_option("--sign-prob", in.sign_prob, "Random sign assignment, P(positive)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option(seed_is_sign_seed ? "--seed" : "--sign-seed", in.sign_seed,
                  "Seed for random sign assignment");
  cmd->add_option("--threshold", in.threshold, "Weight >= X becomes positive");
  cmd->add_option("--left-count", in.left_count, "Minimum left partition size");
  cmd->add_option("--right-count", in.right_count, "Minimum right partition size");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

SignedBipartiteGraph generate(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 6 || (parts[0] != "random" && parts[0] != "skewed")) {
    throw UsageError("bad --synthetic spec '" + spec + "'");
  }
  try {
    const std::size_t l = std::stoull(parts[1]);
    const std::size_t r = std::stoull(parts[2]);
    const double p = std::stod(parts[3]);
    const double q = std::stod(parts[4]);
    const std::uint64_t seed = std::stoull(parts[5]);
    if (parts[0] == "skewed") return generate_skewed_bipartite(l, r, p, q, seed);
    return generate_random_bipartite({l, r, p, q, seed});
  } catch (const std::logic_error&) {
    throw UsageError("bad --synthetic spec '" + spec + "'");
  }
}

LoadedInput load(const InputOptions& in) {
  if (in.input.empty() == in.synthetic.empty()) {
    throw UsageError("exactly one of --input or --synthetic is required");
  }
  LoadedInput loaded;
  if (!in.synthetic.empty()) {
    loaded.graph = generate(in.synthetic);
    return loaded;
  }
  const auto format = *parse_format_name(in.format);
  loaded.list = read_edge_list(in.input, format);
  const bool is_unsigned = format == EdgeListFormat::kUnsignedTsv;
  if (is_unsigned && !in.sign_prob) {
    throw UsageError("--sign-prob is required for unsigned input");
  }
  if (!is_unsigned && in.sign_prob) {
    throw UsageError("--sign-prob only applies to unsigned input");
  }
  SignedBipartiteGraph g;
  if (in.sign_prob) {
    g = assign_random_signs(loaded.list, *in.sign_prob, in.sign_seed);
  } else if (in.threshold) {
    g = assign_threshold_signs(loaded.list, *in.threshold);
  } else {
    g = to_graph(loaded.list);
  }
  if (in.left_count > g.left_count() || in.right_count > g.right_count()) {
    const auto edges = g.edges();
    g = build_graph(std::max(in.left_count, g.left_count()),
                    std::max(in.right_count, g.right_count()), edges);
  }
  loaded.graph = std::move(g);
  return loaded;
}

json count_json(Count c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

CountReport run_algo(const std::string& algo, const SignedBipartiteGraph& g,
                     std::size_t workers, bool brute_override) {
  if (algo == "brute") return brute_force_count(g, {1'000'000, brute_override});
  if (algo == "base") return bb_base(g);
  if (algo == "bucket") return bb_bucket(g);
  return par_bb_bucket(g, {workers, Chunking::guided()});
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  InputOptions in;
  std::string algo = "bucket";
  std::optional<std::size_t> threads;
  std::string output = "text";
  bool brute_override = false;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  const auto loaded = load(a.in);
  const std::size_t workers =
      a.algo == "parallel" ? resolve_threads(a.threads, std::getenv(kThreadsEnv)) : 1;
  const auto r = run_algo(a.algo, loaded.graph, workers, a.brute_override);
  if (a.output == "json") {
    json j;
    j["algo"] = a.algo;
    j["dataset"] = a.in.dataset();
    j["balanced"] = count_json(r.balanced);
    j["unbalanced"] = count_json(r.unbalanced);
    j["total"] = count_json(r.total);
    j["wedges_processed"] = r.wedges_processed;
    j["pair_checks"] = count_json(r.pair_checks);
    j["wall_time_ms"] = std::stod(format_ms(r.wall_time.count()));
    j["workers"] = workers;
    out << j.dump() << '\n';
  } else {
    out << "algo=" << a.algo << '\n'
        << "balanced=" << to_string(r.balanced) << '\n'
        << "unbalanced=" << to_string(r.unbalanced) << '\n'
        << "total=" << to_string(r.total) << '\n'
        << "wedges_processed=" << r.wedges_processed << '\n'
        << "pair_checks=" << to_string(r.pair_checks) << '\n'
        << "workers=" << workers << '\n'
        << "wall_time_ms=" << format_ms(r.wall_time.count()) << '\n';
  }
  return kOk;
}

// ---- vertex ---------------------------------------------------------------

struct VertexArgs {
  InputOptions in;
  std::optional<std::uint64_t> vertex;
  bool all = false;
};

int cmd_vertex(const VertexArgs& a, std::ostream& out) {
  if (a.vertex.has_value() == a.all) throw UsageError("give exactly one of --vertex or --all");
  const auto g = load(a.in).graph;
  if (a.all) {
    const auto counts = per_vertex_counts(g);
    out << "global_id\tbalanced\n";
    for (VertexId v = 0; v < counts.size(); ++v) out << v << '\t' << to_string(counts[v]) << '\n';
    return kOk;
  }
  if (*a.vertex >= g.vertex_count()) {
    throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(*a.vertex) + " not in graph");
  }
  const auto ref = g.vertex_ref(static_cast<VertexId>(*a.vertex));
  out << to_string(vbbfc(g, ref)) << '\n';
  return kOk;
}

// ---- estimate -------------------------------------------------------------

struct EstimateArgs {
  InputOptions in;
  double rho = 1.0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

int cmd_estimate(const EstimateArgs& a, std::ostream& out) {
  const auto g = load(a.in).graph;
  const auto r = estimate_balanced(g, a.rho, a.trials, a.seed);
  json j;
  j["rho"] = r.rho;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["mean"] = r.mean;
  j["sample_stddev"] = r.sample_stddev;
  j["estimates"] = r.estimates;
  out << j.dump() << '\n';
  return kOk;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  InputOptions in;
  std::string algos = "base,bucket,parallel";
  std::size_t repeats = 3;
  std::string threads_list;
  bool brute_override = false;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto algos = split(a.algos, ',');
  for (const auto& algo : algos) {
    if (algo != "brute" && algo != "base" && algo != "bucket" && algo != "parallel") {
      throw UsageError("unknown algo '" + algo + "'");
    }
  }
  if (a.repeats == 0) throw UsageError("--repeats must be at least 1");
  std::vector<std::size_t> thread_counts;
  if (a.threads_list.empty()) {
    thread_counts.push_back(resolve_threads(std::nullopt, std::getenv(kThreadsEnv)));
  } else {
    for (const auto& t : split(a.threads_list, ',')) {
      try {
        const auto n = std::stoull(t);
        if (n == 0) throw std::invalid_argument("zero");
        thread_counts.push_back(n);
      } catch (const std::logic_error&) {
        throw UsageError("bad --threads-list entry '" + t + "'");
      }
    }
  }

  const auto g = load(a.in).graph;
  const std::string dataset = a.in.dataset();
  std::vector<RunRecord> records;
  for (const auto& algo : algos) {
    const auto workers_for_algo =
        algo == "parallel" ? thread_counts : std::vector<std::size_t>{1};
    for (const std::size_t workers : workers_for_algo) {
      for (std::size_t rep = 0; rep < a.repeats; ++rep) {
        const auto r = run_algo(algo, g, workers, a.brute_override);
        records.push_back({algo, dataset, workers, rep, r.balanced, r.unbalanced, r.total,
                           r.wall_time.count()});
      }
    }
  }

  if (auto bad = find_disagreement(records)) {
    const auto& r = records[*bad];
    err << "error: count disagreement: " << r.algo << " (workers=" << r.workers
        << ") balanced=" << to_string(r.balanced) << " vs " << records[0].algo
        << " balanced=" << to_string(records[0].balanced) << '\n';
    return kDisagreement;
  }

  out << "algo,dataset,workers,repeat,balanced,unbalanced,total,wall_time_ms\n";
  std::map<std::pair<std::string, std::size_t>, std::vector<double>> times;
  std::vector<std::pair<std::string, std::size_t>> groups;
  for (const auto& r : records) {
    out << r.algo << ',' << csv_field(r.dataset) << ',' << r.workers << ',' << r.repeat << ','
        << to_string(r.balanced) << ',' << to_string(r.unbalanced) << ','
        << to_string(r.total) << ',' << format_ms(r.wall_time_ms) << '\n';
    auto key = std::make_pair(r.algo, r.workers);
    if (!times.contains(key)) groups.push_back(key);
    times[key].push_back(r.wall_time_ms);
  }
  if (records.size() > 1) {
    const auto& first = records.front();
    for (const auto& key : groups) {
      out << key.first << ',' << csv_field(dataset) << ',' << key.second << ",median,"
          << to_string(first.balanced) << ',' << to_string(first.unbalanced) << ','
          << to_string(first.total) << ',' << format_ms(median(times[key])) << '\n';
    }
  }
  return kOk;
}

// ---- topk / pair ----------------------------------------------------------

struct TopkArgs {
  InputOptions in;
  std::string metric;
  std::size_t k = 10;
  std::string id_map;
};

int cmd_topk(const TopkArgs& a, std::ostream& out) {
  if (a.k == 0) throw UsageError("-k must be at least 1");
  const auto g = load(a.in).graph;
  const auto metric =
      a.metric == "pos-butterfly" ? RankMetric::kPositiveButterflies : RankMetric::kPositiveDegree;
  std::optional<IdMap> labels;
  if (!a.id_map.empty()) {
    std::ifstream f(a.id_map, std::ios::binary);
    if (!f) throw UsageError("cannot open id map '" + a.id_map + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    labels = parse_id_map(buf.str());
  }
  const auto ranked = top_k(g, metric, a.k);
  out << "rank\tglobal_id\tlabel\tscore\n";
  for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
    const auto& e = ranked.entries[i];
    std::string label = std::to_string(e.id);
    if (labels) {
      const auto ref = g.vertex_ref(e.id);
      const auto& side = ref.partition == Partition::kLeft ? labels->left : labels->right;
      if (ref.index < side.size() && !side[ref.index].empty()) label = side[ref.index];
    }
    out << i + 1 << '\t' << e.id << '\t' << label << '\t' << to_string(e.score) << '\n';
  }
  return kOk;
}

struct PairArgs {
  InputOptions in;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

int cmd_pair(const PairArgs& a, std::ostream& out) {
  const auto g = load(a.in).graph;
  for (auto id : {a.a, a.b}) {
    if (id >= g.vertex_count()) {
      throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(id) + " not in graph");
    }
  }
  const auto ra = g.vertex_ref(static_cast<VertexId>(a.a));
  const auto rb = g.vertex_ref(static_cast<VertexId>(a.b));
  out << to_string(pair_collaboration(g, ra, rb)) << '\n';
  return kOk;
}

// ---- convert --------------------------------------------------------------

struct ConvertArgs {
  InputOptions in;
  std::string output_file;
  std::string id_map_out;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
  const auto loaded = load(a.in);
  if (a.output_file.empty()) {
    write_signed_tsv(out, loaded.graph);
  } else {
    std::ofstream f(a.output_file, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + a.output_file + "'");
    write_signed_tsv(f, loaded.graph);
  }
  if (!a.id_map_out.empty()) {
    std::ofstream f(a.id_map_out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + a.id_map_out + "'");
    write_id_map(f, loaded.list);
  }
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kTooLarge: return kGuard;
    case ErrorKind::kUnknownVertex: return kUnknownEntity;
    case ErrorKind::kOverflow: return kFailure;
    default: return kUsage;
  }
}

}  // namespace

std::optional<std::size_t> find_disagreement(const std::vector<RunRecord>& records) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& r = records[i];
    if (r.balanced != records[0].balanced || r.unbalanced != records[0].unbalanced ||
        r.total != records[0].total) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t resolve_threads(std::optional<std::size_t> flag, const char* env_value) {
  if (flag) return std::max<std::size_t>(1, *flag);
  if (env_value && *env_value) {
    try {
      const auto n = std::stoull(env_value);
      if (n > 0) return n;
    } catch (const std::logic_error&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced butterfly counting for signed bipartite graphs", "sbb"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count balanced butterflies");
  add_input_options(c, count.in);
  c->add_option("--algo", count.algo, "brute | base | bucket | parallel")
      ->check(CLI::IsMember({"brute", "base", "bucket", "parallel"}));
  c->add_option("--threads", count.threads, "Worker count for --algo parallel");
  c->add_option("--output", count.output, "text | json")->check(CLI::IsMember({"text", "json"}));
  c->add_flag("--allow-large", count.brute_override, "Lift the brute-force size guard");

  VertexArgs vertex;
  auto* v = app.add_subcommand("vertex", "Balanced butterflies per vertex");
  add_input_options(v, vertex.in);
  v->add_option("--vertex", vertex.vertex, "Global vertex id");
  v->add_flag("--all", vertex.all, "Emit every vertex as TSV");

  EstimateArgs est;
  auto* e = app.add_subcommand("estimate", "Sparsification estimate");
  add_input_options(e, est.in, /*seed_is_sign_seed=*/false);
  e->add_option("--rho", est.rho, "Edge keep probability in (0, 1]")->required();
  e->add_option("--trials", est.trials, "Number of independent samples")->required();
  e->add_option("--seed", est.seed, "Sampling seed")->required();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Timed runs as CSV");
  add_input_options(b, bench.in);
  b->add_option("--algos", bench.algos, "Comma-separated algorithms");
  b->add_option("--repeats", bench.repeats, "Runs per configuration");
  b->add_option("--threads-list", bench.threads_list, "Comma-separated worker counts");
  b->add_flag("--allow-large", bench.brute_override, "Lift the brute-force size guard");

  TopkArgs topk;
  auto* t = app.add_subcommand("topk", "Top-k vertices by positive metric");
  add_input_options(t, topk.in);
  t->add_option("--metric", topk.metric, "pos-butterfly | pos-degree")
      ->required()
      ->check(CLI::IsMember({"pos-butterfly", "pos-degree"}));
  t->add_option("-k", topk.k, "Number of entries");
  t->add_option("--id-map", topk.id_map, "Id map written by convert");

  PairArgs pair;
  auto* p = app.add_subcommand("pair", "All-positive butterflies shared by two vertices");
  add_input_options(p, pair.in);
  p->add_option("--a", pair.a, "First global vertex id")->required();
  p->add_option("--b", pair.b, "Second global vertex id")->required();

  ConvertArgs conv;
  auto* cv = app.add_subcommand("convert", "Write a signed edge list");
  add_input_options(cv, conv.in);
  cv->add_option("--output-file", conv.output_file, "Destination (default stdout)");
  cv->add_option("--id-map-out", conv.id_map_out, "Write the external id map here");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  try {
    if (c->parsed()) return cmd_count(count, out);
    if (v->parsed()) return cmd_vertex(vertex, out);
    if (e->parsed()) return cmd_estimate(est, out);
    if (b->parsed()) return cmd_bench(bench, out, err);
    if (t->parsed()) return cmd_topk(topk, out);
    if (p->parsed()) return cmd_pair(pair, out);
    if (cv->parsed()) return cmd_convert(conv, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const Error& ex) {
    err << "error: " << to_string(ex.kind()) << ": " << ex.what() << '\n';
    return exit_code_for(ex.kind());
  }
  return kUsage;
}

}  // namespace sbb::cli
