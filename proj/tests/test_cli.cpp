#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mclique/families.hpp"
#include "mclique/io.hpp"
#include "oracle.hpp"

using namespace mclique;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mclique_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome cli(const std::string& args, const std::string& env = "") {
    const auto out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = env + " " + MCLIQUE_CLI_PATH + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::string file(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name, std::ios::binary) << text;
    return (dir_ / name).string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolveTriangle) {
  const auto k3 = file("k3.clq", "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  const auto r = cli("solve " + k3 + " --algo exact");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 3);
  EXPECT_EQ(j["witness"], nlohmann::json({0, 1, 2}));
}

TEST_F(Cli, SolveHamming64) {
  std::ostringstream text;
  write_dimacs(text, *construct_instance("hamming6-4"));
  const auto path = file("hamming6-4.clq", text.str());
  const auto j = nlohmann::json::parse(cli("solve " + path).out);
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["p2"], 704);
  for (const char* algo : {"heuristic", "cp"}) {
    const auto r = cli("solve " + path + " --algo " + algo);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["size"], 4);
  }
  const auto rnd = nlohmann::json::parse(cli("solve " + path + " --algo heuristic --policy random --seed 3").out);
  EXPECT_EQ(rnd["policy"], "random");
  EXPECT_EQ(rnd["seed"], 3);
}

TEST_F(Cli, ExitCodes) {
  const auto k3 = file("k3.clq", "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("solve").code, 2);
  EXPECT_EQ(cli("solve " + k3 + " --algo magic").code, 2);
  EXPECT_EQ(cli("solve " + k3 + " --algo exact --policy random").code, 2);
  EXPECT_EQ(cli("solve " + k3 + " --format bogus").code, 2);
  EXPECT_EQ(cli("solve " + file("g.bin", "")).code, 2);
  EXPECT_EQ(cli("solve " + file("bad.clq", "p edge 2 1\ne 3 1\n")).code, 3);
  EXPECT_EQ(cli("solve " + file("c.mtx", "%%MatrixMarket matrix coordinate complex general\n1 1 0\n")).code, 3);
  EXPECT_EQ(cli("solve " + (dir_ / "absent.clq").string()).code, 5);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST_F(Cli, BruteRefusesLargeGraph) {
  std::ostringstream text;
  write_dimacs(text, oracle::random_graph(40, 0.2, 1));
  const auto r = cli("solve " + file("g40.clq", text.str()) + " --algo brute");
  EXPECT_EQ(r.code, 6);
  EXPECT_NE(r.err.find("30"), std::string::npos);
}

TEST_F(Cli, TimeoutAndEnvironmentOverrides) {
  std::ostringstream text;
  write_dimacs(text, *construct_instance("hamming8-2"));
  const auto path = file("h.clq", text.str());
  const auto r = cli("solve " + path + " --time-limit 0.1");
  EXPECT_EQ(r.code, 4);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["exact"].get<bool>());
  EXPECT_EQ(cli("solve " + path, "MCLIQUE_TIME_LIMIT=0.1").code, 4);
  EXPECT_EQ(cli("solve " + path, "MCLIQUE_TIME_LIMIT=abc").code, 2);
  EXPECT_EQ(cli("solve " + path + " --algo heuristic", "MCLIQUE_THREADS=2").code, 0);
  EXPECT_EQ(cli("solve " + path + " --algo heuristic", "MCLIQUE_THREADS=0").code, 2);
}

TEST_F(Cli, PerVertex) {
  const auto p3 = file("p3.txt", "0 1\n1 2\n");
  const auto r = cli("solve " + p3 + " --algo heuristic --per-vertex");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0: 0 1\n1: 0 1\n2: 1 2\n");
}

TEST_F(Cli, StatsAndConvert) {
  std::ostringstream text;
  write_dimacs(text, *construct_instance("c-fat200-5"));
  const auto path = file("cfat.clq", text.str());
  const auto j = nlohmann::json::parse(cli("stats " + path).out);
  EXPECT_EQ(j["n"], 200);
  EXPECT_EQ(j["m"], 8473);
  EXPECT_EQ(j["max_degree"], 86);

  const auto mtx = (dir_ / "cfat.mtx").string();
  const auto el = (dir_ / "cfat.txt").string();
  ASSERT_EQ(cli("convert " + path + " " + mtx).code, 0);
  ASSERT_EQ(cli("convert " + mtx + " " + el).code, 0);
  EXPECT_EQ(load_graph(el), *construct_instance("c-fat200-5"));
  const auto again = (dir_ / "again.clq").string();
  ASSERT_EQ(cli("convert " + path + " " + again).code, 0);
  EXPECT_EQ(slurp(again), slurp(path));
  EXPECT_EQ(cli("convert " + path + " out.xyz --to yaml").code, 2);
  EXPECT_EQ(cli("convert " + path + " " + (dir_ / "out.xyz").string()).code, 2);
}

TEST_F(Cli, GenRmat) {
  const auto out = (dir_ / "g.txt").string();
  ASSERT_EQ(cli("gen-rmat --family sd1 --scale 10 --seed 7 --out " + out).code, 0);
  const Graph g = load_graph(out);
  EXPECT_EQ(g.num_vertices(), 1024u);
  EXPECT_LE(g.num_edges(), 8u * 1024u);
  ASSERT_EQ(cli("gen-rmat --family sd1 --scale 10 --seed 7 --out " + out + "2.txt").code, 0);
  EXPECT_EQ(load_graph(out + "2.txt"), g);
  EXPECT_EQ(cli("gen-rmat --family sd9 --scale 10").code, 2);
  EXPECT_EQ(cli("gen-rmat --scale 0").code, 2);
}

TEST_F(Cli, GenDimacsAndProbe) {
  const auto r = cli("gen-dimacs --name list");
  EXPECT_NE(r.out.find("keller4 171 9435 11"), std::string::npos);
  const auto out = (dir_ / "k.clq").string();
  ASSERT_EQ(cli("gen-dimacs --name keller4 --out " + out).code, 0);
  EXPECT_EQ(load_graph(out).num_edges(), 9435u);
  EXPECT_EQ(cli("gen-dimacs --name brock200_2").code, 2);
  const auto probe = cli("probe --family er --scales 6,7");
  EXPECT_EQ(probe.code, 0);
  EXPECT_EQ(probe.out.substr(0, probe.out.find('\n')), "graph,n,m,max_degree,elapsed,size");
  EXPECT_NE(probe.out.find("rmat_er_7,128,"), std::string::npos);
}

TEST_F(Cli, Bench) {
  const auto m = file("m.txt", "h64 gen:hamming6-4\nghost ghost.clq algos=exact\n");
  const auto out = (dir_ / "out.csv").string();
  ASSERT_EQ(cli("bench " + m + " --out " + out).code, 0);
  const auto csv = slurp(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(csv.find("ghost,0,0,0,exact"), std::string::npos);
  EXPECT_NE(csv.find("missing"), std::string::npos);
  const auto empty = file("empty.txt", "");
  EXPECT_EQ(cli("bench " + empty).out.find("graph,n,m"), 0u);
  EXPECT_EQ(cli("bench " + file("bad.txt", "x gen:keller4 algos=nope\n")).code, 3);
  EXPECT_EQ(cli("bench " + (dir_ / "none.txt").string()).code, 5);
}

TEST_F(Cli, Communities) {
  const auto rec = file("r.tsv", "a 1\na 2\na 3\nb 1\nb 2\nb 3\nb 4\nc 9\n");
  const auto out = (dir_ / "c.json").string();
  ASSERT_EQ(cli("communities --input " + rec + " --threshold 0.5 --out " + out).code, 0);
  const auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["walls"], nlohmann::json({"a", "b", "c"}));
  EXPECT_EQ(j["communities"], nlohmann::json({{0, 1}}));
  EXPECT_EQ(cli("communities --input " + rec + " --threshold 2").code, 2);
  EXPECT_EQ(cli("communities --input " + file("bad.tsv", "a\n")).code, 3);
}
