#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "splitpeb/cli.hpp"
#include "splitpeb/io.hpp"

using namespace splitpeb;
using io::json;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("splitpeb_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_args(args, out, err);
  return {code, out.str(), err.str()};
}

std::string graph_text(const SplitGraph& g) { return io::graph_to_json(g).dump(); }

}  // namespace

TEST(GraphJson, RoundTrip) {
  auto g = gen_phoenix();
  auto back = io::parse_graph(graph_text(g));
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.clique(), g.clique());
}

TEST(GraphJson, Rejections) {
  auto code = [](const std::string& text) {
    try {
      io::parse_graph(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code("{"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"n": 2, "clique": [0, 1]})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"n": "2", "clique": [0, 1], "edges": [[0, 1]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"n": 2, "clique": [0, 1], "edges": [[0, 1, 2]]})"), ErrorCode::ParseError);
  EXPECT_EQ(code(R"({"n": 2, "clique": [0, 1], "edges": [[0, 1], [0, 1]]})"), ErrorCode::BadEdge);
  EXPECT_EQ(code(R"({"n": 2, "clique": [0, 1], "edges": [[1, 0]]})"), ErrorCode::BadEdge);
  EXPECT_EQ(code(R"({"n": 2, "clique": [0, 1], "edges": [[0, 3]]})"), ErrorCode::BadEdge);
  EXPECT_EQ(code(R"({"n": 3, "clique": [0, 1], "edges": [[0, 1]]})"), ErrorCode::Disconnected);
  EXPECT_EQ(code(R"({"n": 0, "clique": [], "edges": []})"), ErrorCode::ParseError);
}

TEST(ConfigurationJson, RoundTripAndChecks) {
  Configuration c{{0, 3, 1}};
  EXPECT_EQ(io::parse_configuration(io::configuration_to_json(c).dump(), 3), c);
  EXPECT_THROW(io::parse_configuration(R"({"counts": [1, -1]})"), Error);
  EXPECT_THROW(io::parse_configuration(R"({"counts": [1, 1]})", 3), Error);
}

TEST(StrategyJson, RoundTrip) {
  auto g = gen_pyramid();
  for (const auto& s : rootKm_strategies(g, 1)) {
    auto j = io::strategy_to_json(s);
    auto back = io::strategy_from_json(g, j);
    EXPECT_EQ(back.weights(), s.weights());
    EXPECT_EQ(back.parent(), s.parent());
  }
  auto j = json::parse(R"({"root": 0, "parent": {"1": 0, "2": 1}, "weight": {"1": [2, 1], "2": [1, 1]}})");
  auto s = io::strategy_from_json(validate_split(3, {0, 1}, {{0, 1}, {1, 2}}), j);
  EXPECT_EQ(s.tree_weight(), Rational(3));
  EXPECT_THROW(io::raw_strategy_from_json(json::parse(R"({"root": 0, "parent": {"x": 0}, "weight": {}})")), Error);
  EXPECT_THROW(io::raw_strategy_from_json(json::parse(R"({"root": 0, "parent": {}, "weight": {"1": [1, 0]}})")),
               Error);
}

TEST(Cli, ComputeSun) {
  TempDir dir;
  auto path = dir.write("sun.json", graph_text(gen_sun(6)));
  auto r = run({"compute", "--graph", path});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = r.report();
  EXPECT_EQ(j["pi"], 11);
  EXPECT_EQ(j["class0"], false);
  EXPECT_EQ(j["per_root"].size(), 6u);
  EXPECT_EQ(j["per_root"][3]["case"], "cone_ecc3");
  EXPECT_EQ(j["per_root"][3]["t_values"]["t_rs"], 11);
  EXPECT_TRUE(j["per_root"][0]["t_values"].is_null());
}

TEST(Cli, RecognizePyramid) {
  TempDir dir;
  auto path = dir.write("p.json", graph_text(gen_pyramid()));
  auto r = run({"recognize", "--graph", path});
  ASSERT_EQ(r.code, 0);
  auto j = r.report();
  EXPECT_EQ(j["pereyra"], true);
  EXPECT_EQ(j["phoenix_roots"], json::array());
  EXPECT_FALSE(j["witness"].is_null());

  auto ph = dir.write("ph.json", graph_text(gen_phoenix()));
  EXPECT_EQ(run({"recognize", "--graph", ph}).report()["phoenix_roots"], json::array({0, 4, 5}));
}

TEST(Cli, BruteP3) {
  TempDir dir;
  auto path = dir.write("p3.json", R"({"n": 3, "clique": [0, 1], "edges": [[0, 1], [1, 2]]})");
  auto r = run({"brute", "--graph", path, "--root", "0", "--k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["pi"], 4);
  EXPECT_EQ(r.report()["max_unsolvable"], json::array({0, 0, 3}));
  EXPECT_EQ(run({"brute", "--graph", path}).report()["pi"], 4);
  EXPECT_EQ(run({"brute", "--graph", path, "--root", "0", "--semigreedy"}).report()["pi"], 4);

  auto cfg = dir.write("c.json", R"({"counts": [0, 1, 2]})");
  auto s = run({"brute", "--graph", path, "--root", "0", "--config", cfg});
  ASSERT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(s.report()["solvable"], true);
}

TEST(Cli, ComputeRootAndWitness) {
  TempDir dir;
  auto path = dir.write("ph.json", graph_text(gen_phoenix()));
  auto r = run({"compute-root", "--graph", path, "--root", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["pi"], 12);
  EXPECT_EQ(r.report()["phoenix"], true);

  auto w = run({"witness", "--graph", path, "--root", "0", "--verify"});
  ASSERT_EQ(w.code, 0) << w.out;
  EXPECT_EQ(w.report()["kind"], "C_P");
  EXPECT_EQ(w.report()["size"], 11);
  EXPECT_EQ(w.report()["verified"], true);

  auto c0 = run({"witness", "--graph", path, "--root", "0", "--kind", "C_0"});
  ASSERT_EQ(c0.code, 0);
  EXPECT_TRUE(c0.report()["verified"].is_null());

  auto bad = run({"witness", "--graph", path, "--root", "1", "--kind", "C_rs"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.report()["error"], "NotApplicable");
}

TEST(Cli, Verify) {
  TempDir dir;
  auto path = dir.write("sun.json", graph_text(gen_sun(6)));
  auto r = run({"verify", "--graph", path, "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.report()["ok"], true);
  EXPECT_EQ(r.report()["mismatches"], json::array());
}

TEST(Cli, Gen) {
  auto r = run({"gen", "--family", "sun", "--n", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.report()["n"], 6);
  auto a = run({"gen", "--family", "random", "--k-size", "5", "--s-size", "7", "--p", "0.4", "--seed", "11"});
  auto b = run({"gen", "--family", "random", "--k-size", "5", "--s-size", "7", "--p", "0.4", "--seed", "11"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(io::graph_from_json(a.report()));
  EXPECT_EQ(run({"gen", "--family", "phoenix"}).report()["n"], 11);
}

TEST(Cli, Determinism) {
  TempDir dir;
  auto path = dir.write("g.json", graph_text(gen_random_split(6, 9, 0.4, 3)));
  for (const char* sub : {"compute", "recognize"}) {
    EXPECT_EQ(run({sub, "--graph", path}).out, run({sub, "--graph", path}).out);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute-root", "--graph", "x.json"}).code, 2);
  EXPECT_EQ(run({"gen"}).code, 2);
  EXPECT_EQ(run({"gen", "--family", "cube"}).code, 2);
  EXPECT_EQ(run({"compute", "--graph", "g.json", "--output", "xml"}).code, 2);
  auto r = run({"compute"});
  EXPECT_EQ(r.report()["error"], "UsageError");
  EXPECT_EQ(run({"witness", "--graph", "g.json", "--root", "0", "--kind", "C_x"}).code, 2);
}

TEST(Cli, DomainErrors) {
  TempDir dir;
  auto missing = run({"compute", "--graph", "/nonexistent/g.json"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.report()["error"], "ParseError");
  auto c4 = dir.write("c4.json", R"({"n": 4, "clique": [0, 1], "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]})");
  auto r = run({"compute", "--graph", c4});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report()["error"], "NotIndependent");
  auto p3 = dir.write("p3.json", R"({"n": 3, "clique": [0, 1], "edges": [[0, 1], [1, 2]]})");
  EXPECT_EQ(run({"compute-root", "--graph", p3, "--root", "9"}).code, 1);
}

TEST(Cli, BudgetExceeded) {
  TempDir dir;
  auto path = dir.write("sun.json", graph_text(gen_sun(12)));
  ::setenv("PEBBLE_NODE_BUDGET", "1000", 1);
  auto r = run({"brute", "--graph", path, "--root", "6"});
  ::setenv("PEBBLE_NODE_BUDGET", "zzz", 1);
  auto bad = run({"brute", "--graph", path, "--root", "6"});
  ::unsetenv("PEBBLE_NODE_BUDGET");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.report()["error"], "BudgetExceeded");
  EXPECT_EQ(bad.code, 2);
}

TEST(Cli, TextOutput) {
  TempDir dir;
  auto path = dir.write("sun.json", graph_text(gen_sun(6)));
  auto r = run({"compute", "--graph", path, "--output", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pi: 11"), std::string::npos);
  EXPECT_NE(r.out.find("per_root:"), std::string::npos);
}
