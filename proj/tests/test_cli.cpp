#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twlayout/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = twlayout::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

Result pipe(const std::vector<std::vector<std::string>>& stages) {
  Result r{0, {}, {}};
  for (const auto& s : stages) {
    r = run(s, r.out);
    if (r.code != 0) return r;
  }
  return r;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string column(const std::string& csv, const std::string& name) {
  std::istringstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  const auto h = split_csv(header), r = split_csv(row);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == name) return i < r.size() ? r[i] : std::string();
  }
  ADD_FAILURE() << "no column " << name;
  return {};
}

}  // namespace

TEST(Cli, TwoTreePipeline) {
  const Result r = pipe({{"generate", "--family", "ktree", "--k", "2", "--n", "100", "--seed", "1"},
                         {"layout", "track"},
                         {"draw", "balanced"},
                         {"stats"}});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(std::stoi(column(r.out, "tracks")), 54);
  EXPECT_EQ(column(r.out, "crossings"), "0");
  EXPECT_EQ(column(r.out, "x_crossings"), "0");
  EXPECT_EQ(column(r.out, "verified"), "true");
  EXPECT_EQ(column(r.out, "tracks_within_t_k"), "true");
}

TEST(Cli, GkTrackNumberOracle) {
  const Result r = pipe({{"generate", "--family", "gk", "--k", "1"}, {"oracle", "track-number"}});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("value").get<int>(), 3);
  EXPECT_TRUE(j.at("verification").at("ok").get<bool>());
}

TEST(Cli, MomentCurveObj) {
  const Result r = run({"draw", "moment", "--family", "complete", "--n", "3", "--format", "obj"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("v 0 0 0\nv 1 3 7\nv 2 8 26\n"), std::string::npos);
  EXPECT_NE(r.out.find("# origin 1 1 1"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> stages{
      {"generate", "--family", "ktree", "--k", "3", "--n", "60", "--seed", "9"}, {"layout", "track"}, {"layout", "queue"},
      {"draw", "track"}};
  const Result a = pipe(stages), b = pipe(stages);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  for (const char* key : {"track_layout", "queue_layout", "drawing"}) {
    ASSERT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j.at(key).at("verification").at("ok").get<bool>());
    EXPECT_EQ(j.at(key).at("verification").at("hash").get<std::string>().rfind("fnv1a64:", 0), 0u);
  }
}

TEST(Cli, LayoutMethods) {
  const std::string grid = run({"generate", "--family", "grid", "--rows", "5", "--cols", "6"}).out;
  for (const char* method : {"auto", "ktree", "pathwidth", "grid"}) {
    const Result r = run({"layout", "track", "--method", method}, grid);
    EXPECT_EQ(r.code, 0) << method << ": " << r.err;
  }
  const Result g3 = run({"layout", "track", "--method", "grid"}, grid);
  EXPECT_EQ(json::parse(g3.out).at("track_layout").at("tracks").size(), 3u);

  const std::string tree = run({"generate", "--family", "tree", "--n", "40", "--seed", "2"}).out;
  EXPECT_EQ(run({"layout", "stack"}, tree).code, 0);
  EXPECT_EQ(run({"layout", "queue", "--method", "tree"}, tree).code, 0);
  EXPECT_EQ(run({"layout", "partition"}, tree).code, 0);
  const Result wrapped = run({"layout", "track", "--method", "ktree", "--wrap", "--balance", "7/2"}, tree);
  EXPECT_EQ(wrapped.code, 0) << wrapped.err;

  const std::string ktree = run({"generate", "--family", "ktree", "--k", "2", "--n", "40", "--seed", "3"}).out;
  const std::string with_queue = run({"layout", "queue", "--method", "ordering"}, ktree).out;
  const Result via_queue = run({"layout", "track", "--method", "queue"}, with_queue);
  EXPECT_EQ(via_queue.code, 0) << via_queue.err;

  const std::string gk = run({"generate", "--family", "gk", "--k", "2"}).out;
  const Result gl = run({"layout", "track", "--method", "gk"}, gk);
  EXPECT_EQ(json::parse(gl.out).at("track_layout").at("tracks").size(), 6u);
}

TEST(Cli, DrawKindsAndFormats) {
  const std::string tree = run({"generate", "--family", "tree", "--n", "64", "--seed", "4"}).out;
  for (const char* kind : {"moment", "cohen", "track", "balanced"}) {
    EXPECT_EQ(run({"draw", kind}, tree).code, 0) << kind;
  }
  const Result a = run({"draw", "aspect", "--r", "4"}, tree);
  ASSERT_EQ(a.code, 0) << a.err;
  const json d = json::parse(a.out).at("drawing");
  EXPECT_EQ(d.at("construction").at("r").get<int>(), 4);
  EXPECT_EQ(run({"draw", "cohen", "--format", "svg"}, tree).out.find("<svg") != std::string::npos, true);
  EXPECT_EQ(run({"draw", "aspect", "--r", "1000"}, tree).code, twlayout::cli::kUsage);
  EXPECT_EQ(run({"draw", "moment", "--format", "csv"}, tree).code, twlayout::cli::kUsage);
}

TEST(Cli, VerifyDetectsTampering) {
  const std::string env = pipe({{"generate", "--family", "complete", "--n", "4"}, {"layout", "track"}}).out;
  EXPECT_EQ(run({"verify", "track"}, env).code, 0);
  EXPECT_EQ(run({"verify", "all"}, env).code, 0);
  json j = json::parse(env);
  j["track_layout"]["tracks"] = json{{0, 1, 2, 3}};
  const Result bad = run({"verify", "track"}, j.dump());
  EXPECT_EQ(bad.code, twlayout::cli::kVerificationFailed);
  EXPECT_FALSE(json::parse(bad.out).at("ok").get<bool>());
  EXPECT_EQ(run({"stats"}, j.dump()).code, twlayout::cli::kVerificationFailed);
  EXPECT_EQ(run({"verify", "queue"}, env).code, twlayout::cli::kUsage);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, twlayout::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, twlayout::cli::kUsage);
  EXPECT_EQ(run({"generate", "--family", "ktree", "--k", "2", "--n", "10"}).code, twlayout::cli::kUsage);
  EXPECT_EQ(run({"generate", "--family", "nope"}).code, twlayout::cli::kUsage);
  EXPECT_EQ(run({"layout", "track"}, "not json").code, twlayout::cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, twlayout::cli::kOk);
  EXPECT_EQ(run({"generate", "--family", "gk", "--k", "6", "--budget", "1000"}).code, twlayout::cli::kResourceLimit);
  EXPECT_EQ(run({"oracle", "treewidth", "--family", "path", "--n", "20"}).code, twlayout::cli::kResourceLimit);
  EXPECT_EQ(run({"layout", "track", "--method", "tree", "--family", "cycle", "--n", "5"}).code,
            twlayout::cli::kVerificationFailed);
}

TEST(Cli, OracleLimitFromEnvironment) {
  ::setenv("TWLAYOUT_QUEUE_ORACLE_MAX_N", "3", 1);
  EXPECT_EQ(run({"oracle", "queue-number", "--family", "path", "--n", "5"}).code, twlayout::cli::kResourceLimit);
  ::setenv("TWLAYOUT_QUEUE_ORACLE_MAX_N", "x", 1);
  EXPECT_EQ(run({"oracle", "queue-number", "--family", "path", "--n", "5"}).code, twlayout::cli::kUsage);
  ::unsetenv("TWLAYOUT_QUEUE_ORACLE_MAX_N");
  const Result r = run({"oracle", "queue-number", "--family", "path", "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("value").get<int>(), 1);
  for (const char* kind : {"pathwidth", "treewidth", "track-number"}) {
    EXPECT_EQ(run({"oracle", kind, "--family", "cycle", "--n", "6"}).code, 0) << kind;
  }
}
