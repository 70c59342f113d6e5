#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "sbb/exact.hpp"
#include "sbb/ingest.hpp"

using namespace sbb;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result sbb_run(std::vector<std::string> args) {
  args.insert(args.begin(), "sbb");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("sbb_cli_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

constexpr const char* kK22 = "0\t0\t+1\n0\t1\t+1\n1\t0\t+1\n1\t1\t+1\n";

std::string json_counts(const std::string& line) {
  auto j = nlohmann::json::parse(line);
  return j["balanced"].dump() + "," + j["unbalanced"].dump() + "," + j["total"].dump();
}

}  // namespace

TEST_CASE("count") {
  TempDir dir;
  const auto k22 = dir.write("k22.tsv", kK22);
  auto r = sbb_run({"count", "--input", k22, "--format", "signed-tsv", "--algo", "bucket"});
  CHECK(r.code == 0);
  CHECK(r.out.find("balanced=1\n") != std::string::npos);
  CHECK(r.out.find("total=1\n") != std::string::npos);

  r = sbb_run({"count", "--input", k22, "--algo", "parallel", "--threads", "3", "--output", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"algo", "balanced", "unbalanced", "total", "wall_time_ms", "workers"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["workers"] == 3);

  const auto g = generate_random_bipartite({20, 20, 0.4, 0.5, 3});
  const auto file = dir.write("g.tsv", to_signed_tsv(g));
  std::vector<std::string> lines;
  for (const char* algo : {"brute", "base", "bucket", "parallel"}) {
    r = sbb_run({"count", "--input", file, "--algo", algo, "--output", "json"});
    REQUIRE(r.code == 0);
    lines.push_back(json_counts(r.out));
  }
  for (const auto& l : lines) CHECK(l == lines[0]);
  const auto expect = bb_bucket(g);
  CHECK(lines[0] == std::to_string(static_cast<std::uint64_t>(expect.balanced)) + "," +
                        std::to_string(static_cast<std::uint64_t>(expect.unbalanced)) + "," +
                        std::to_string(static_cast<std::uint64_t>(expect.total)));
}

TEST_CASE("count input handling and exit codes") {
  TempDir dir;
  const auto bad = dir.write("bad.tsv", "0 0 1\n0 1 what\n");
  auto r = sbb_run({"count", "--input", bad});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(sbb_run({"count", "--input", dir.path("missing.tsv")}).code == cli::kUsage);
  CHECK(sbb_run({"count", "--input", bad, "--algo", "magic"}).code == cli::kUsage);
  CHECK(sbb_run({"count"}).code == cli::kUsage);
  CHECK(sbb_run({}).code == cli::kUsage);

  CHECK(sbb_run({"count", "--synthetic", "random:1001:1000:0:0.5:1", "--algo", "brute"}).code ==
        cli::kGuard);
  CHECK(sbb_run({"count", "--synthetic", "random:1001:1000:0:0.5:1", "--algo", "brute",
                 "--allow-large"})
            .code == 0);

  const auto unsigned_file = dir.write("u.tsv", "a x\na y\nb x\nb y\n");
  CHECK(sbb_run({"count", "--input", unsigned_file, "--format", "unsigned-tsv"}).code ==
        cli::kUsage);
  r = sbb_run({"count", "--input", unsigned_file, "--format", "unsigned-tsv", "--sign-prob", "1",
               "--seed", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("balanced=1\n") != std::string::npos);
  // Fixed seeds give identical count fields.
  auto a = sbb_run({"count", "--input", unsigned_file, "--format", "unsigned-tsv", "--sign-prob",
                    "0.5", "--seed", "9", "--output", "json"});
  auto b = sbb_run({"count", "--input", unsigned_file, "--format", "unsigned-tsv", "--sign-prob",
                    "0.5", "--seed", "9", "--output", "json"});
  CHECK(json_counts(a.out) == json_counts(b.out));

  const auto konect = dir.write("k.txt", "% bip\n1 1 3\n1 2 -1\n2 1 2\n2 2 5\n");
  r = sbb_run({"count", "--input", konect, "--format", "konect"});
  CHECK(r.out.find("unbalanced=1\n") != std::string::npos);
}

TEST_CASE("vertex") {
  TempDir dir;
  const auto k22 = dir.write("k22.tsv", kK22);
  auto r = sbb_run({"vertex", "--input", k22, "--vertex", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(sbb_run({"vertex", "--input", k22, "--vertex", "9"}).code == cli::kUnknownEntity);
  CHECK(sbb_run({"vertex", "--input", k22}).code == cli::kUsage);

  // Padding the left side adds isolated vertex 2 and shifts the right ids.
  r = sbb_run({"vertex", "--input", k22, "--vertex", "2", "--left-count", "3"});
  CHECK(r.out == "0\n");
  r = sbb_run({"vertex", "--input", k22, "--vertex", "3", "--left-count", "3"});
  CHECK(r.out == "1\n");

  const auto g = generate_random_bipartite({15, 15, 0.5, 0.5, 12});
  const auto file = dir.write("g.tsv", to_signed_tsv(g));
  r = sbb_run({"vertex", "--input", file, "--all"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "global_id\tbalanced");
  std::uint64_t id = 0, count = 0, sum = 0;
  while (in >> id >> count) sum += count;
  const auto reloaded = to_graph(parse_edge_list(to_signed_tsv(g), EdgeListFormat::kSignedTsv));
  CHECK(sum == 4 * static_cast<std::uint64_t>(bb_bucket(reloaded).balanced));
}

TEST_CASE("estimate") {
  TempDir dir;
  const auto g = generate_random_bipartite({12, 12, 0.6, 0.5, 2});
  const auto file = dir.write("g.tsv", to_signed_tsv(g));
  auto r = sbb_run({"estimate", "--input", file, "--rho", "1", "--trials", "3", "--seed", "5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double exact = static_cast<double>(bb_bucket(g).balanced);
  REQUIRE(j["estimates"].size() == 3);
  for (const auto& e : j["estimates"]) CHECK(e.get<double>() == exact);
  CHECK(j["rho"] == 1.0);
  CHECK(j["trials"] == 3);
  CHECK(j.contains("sample_stddev"));
  CHECK(j["mean"].get<double>() == exact);

  CHECK(sbb_run({"estimate", "--input", file, "--rho", "1.5", "--trials", "3", "--seed", "5"})
            .code == cli::kUsage);
  CHECK(sbb_run({"estimate", "--input", file, "--rho", "0.5", "--trials", "0", "--seed", "5"})
            .code == cli::kUsage);
}

TEST_CASE("bench") {
  auto r = sbb_run({"bench", "--synthetic", "skewed:10:200:0.5:0.5:1", "--algos", "bucket",
                    "--repeats", "1"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "algo,dataset,workers,repeat,balanced,unbalanced,total,wall_time_ms");
  CHECK(rows[1].rfind("bucket,skewed:10:200:0.5:0.5:1,1,0,", 0) == 0);

  r = sbb_run({"bench", "--synthetic", "random:30:30:0.4:0.5:2", "--algos",
               "base,bucket,parallel", "--repeats", "2", "--threads-list", "1,2,4"});
  REQUIRE(r.code == 0);
  in = std::istringstream(r.out);
  rows.clear();
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  // 2 base + 2 bucket + 3*2 parallel runs, then one median row per configuration.
  CHECK(rows.size() == 1 + 10 + 5);
  CHECK(rows.back().find(",median,") != std::string::npos);

  CHECK(sbb_run({"bench", "--synthetic", "random:3:3:1:1:0", "--algos", "nope"}).code ==
        cli::kUsage);

  std::vector<cli::RunRecord> records(3);
  for (auto& rec : records) rec.balanced = rec.total = 4;
  CHECK_FALSE(cli::find_disagreement(records).has_value());
  records[2].balanced = 3;
  CHECK(cli::find_disagreement(records) == 2u);
}

TEST_CASE("thread resolution") {
  CHECK(cli::resolve_threads(3, "7") == 3);
  CHECK(cli::resolve_threads(std::nullopt, "7") == 7);
  CHECK(cli::resolve_threads(std::nullopt, "junk") >= 1);
  CHECK(cli::resolve_threads(std::nullopt, nullptr) >= 1);
}

TEST_CASE("convert, topk and pair") {
  TempDir dir;
  const auto konect = dir.write("ratings.txt",
                                "alice m1 8\nalice m2 7\nbob m1 9\nbob m2 6\ncarol m1 3\ncarol m2 8\n");
  const auto out_file = dir.path("signed.tsv");
  const auto map_file = dir.path("ids.tsv");
  auto r = sbb_run({"convert", "--input", konect, "--format", "konect", "--threshold", "6",
                    "--output-file", out_file, "--id-map-out", map_file});
  REQUIRE(r.code == 0);
  std::ifstream f(out_file);
  std::stringstream converted;
  converted << f.rdbuf();
  CHECK(converted.str() == "0\t0\t+1\n0\t1\t+1\n1\t0\t+1\n1\t1\t+1\n2\t0\t-1\n2\t1\t+1\n");

  r = sbb_run({"topk", "--input", out_file, "--metric", "pos-degree", "-k", "2", "--id-map",
               map_file});
  REQUIRE(r.code == 0);
  CHECK(r.out == "rank\tglobal_id\tlabel\tscore\n1\t4\tm2\t3\n2\t0\talice\t2\n");

  r = sbb_run({"topk", "--input", out_file, "--metric", "pos-butterfly", "-k", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1\t0\t0\t1\n") != std::string::npos);

  const auto k22 = dir.write("k22.tsv", kK22);
  r = sbb_run({"topk", "--input", k22, "--metric", "pos-degree", "-k", "4"});
  CHECK(r.out == "rank\tglobal_id\tlabel\tscore\n1\t0\t0\t2\n2\t1\t1\t2\n3\t2\t2\t2\n4\t3\t3\t2\n");
  CHECK(sbb_run({"topk", "--input", k22, "--metric", "pos-degree", "-k", "0"}).code == cli::kUsage);
  CHECK(sbb_run({"topk", "--input", k22, "--metric", "fame", "-k", "1"}).code == cli::kUsage);

  r = sbb_run({"pair", "--input", out_file, "--a", "0", "--b", "1"});
  CHECK(r.out == "1\n");
  CHECK(sbb_run({"pair", "--input", out_file, "--a", "0", "--b", "2"}).out == "0\n");
  CHECK(sbb_run({"pair", "--input", out_file, "--a", "0", "--b", "3"}).code == cli::kUsage);
  CHECK(sbb_run({"pair", "--input", out_file, "--a", "0", "--b", "40"}).code ==
        cli::kUnknownEntity);

  const auto unsigned_file = dir.write("u.tsv", "a x\na y\nb x\n");
  r = sbb_run({"convert", "--input", unsigned_file, "--format", "unsigned-tsv", "--sign-prob",
               "0", "--seed", "1"});
  CHECK(r.out == "0\t0\t-1\n0\t1\t-1\n1\t0\t-1\n");
}
