#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "slr/json_io.hpp"

namespace slr {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "ramsey");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("slr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string save(const std::string& name, const CliRun& r) const {
    EXPECT_EQ(r.code, 0) << r.err;
    return write(name, r.out);
  }

  std::filesystem::path dir_;
};

TEST_F(Cli, ConstructShift3) {
  const auto r = run({"construct", "shift3", "--n", "16"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["hypergraph"]["n"], 16);
  EXPECT_EQ(j["metadata"]["bound"], 5);
}

TEST_F(Cli, OracleOnShift3) {
  const auto h = save("shift3_8.json", run({"construct", "shift3", "--n", "8"}));
  const auto r = run({"oracle", "--hypergraph", h});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["alpha"], 4);
  EXPECT_EQ(j["alpha_witness"], Json({1, 2, 3, 5}));
  EXPECT_LE(j["omega"].get<int>(), 4);
}

TEST_F(Cli, PipelineVerifyAndTamper) {
  const auto d = save("d.json", run({"construct", "shift3", "--n", "256", "--description"}));
  const auto cert = path("cert.json");
  const auto r = run({"pipeline", "--input", d, "--emit-certificate", cert});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"verify", "--input", cert}).code, 0);

  auto j = Json::parse(r.out);
  auto& v = j["core"]["vertices"];
  v[0] = v[0].get<int>() + 1 == v[1].get<int>() ? v[0].get<int>() - 1 : v[0].get<int>() + 1;
  const auto bad = write("bad.json", j.dump());
  const auto t = run({"verify", "--input", bad});
  EXPECT_EQ(t.code, 2);
  EXPECT_NE(t.err.find("verification failed"), std::string::npos);

  auto k = Json::parse(r.out);
  k["core"]["certificate"]["stages"][0]["columns"][0] = 1;
  EXPECT_EQ(run({"verify", "--input", write("bad2.json", k.dump())}).code, 2);
}

TEST_F(Cli, Deterministic) {
  const auto a = run({"construct", "random", "--d", "2", "--m", "2", "--r", "3", "--n", "30", "--seed", "17"});
  const auto b = run({"construct", "random", "--d", "2", "--m", "2", "--r", "3", "--n", "30", "--seed", "17"});
  const auto c = run({"construct", "random", "--d", "2", "--m", "2", "--r", "3", "--n", "30", "--seed", "18"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const auto d = save("d.json", run({"construct", "shift3", "--n", "128", "--description"}));
  EXPECT_EQ(run({"pipeline", "--input", d}).out, run({"pipeline", "--input", d}).out);
}

TEST_F(Cli, DecomposeStreamlineDominate) {
  const auto d = save("d.json", run({"construct", "shift3", "--n", "12", "--description"}));
  const auto dec = run({"decompose", "--input", d});
  ASSERT_EQ(dec.code, 0) << dec.err;
  EXPECT_EQ(Json::parse(dec.out)["witnesses"].size(), 2u);

  const auto m = write("m.json", R"({"matrix": [[1,5,2,8,3,9,4,7,6,10,11,12,13,14,15,16,17,18,19,20]]})");
  const auto st = run({"streamline", "--input", m, "--perturb"});
  ASSERT_EQ(st.code, 0) << st.err;
  EXPECT_EQ(run({"verify", "--input", write("st.json", st.out)}).code, 0);

  const auto inst = write("i.json", R"({"instances": [{"P": [[4,5,6,7,8],[0,1,2,8,9],[0,1,2,3,6]], "h": 0}]})");
  const auto dom = run({"dominate", "--input", inst});
  ASSERT_EQ(dom.code, 0) << dom.err;
  const auto j = Json::parse(dom.out);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["C"].size(), 3u);
  EXPECT_EQ(run({"verify", "--input", write("dom.json", dom.out)}).code, 0);
  auto bad = j;
  bad["colors"][0] = 3;
  EXPECT_EQ(run({"verify", "--input", write("bad.json", bad.dump())}).code, 2);
}

TEST_F(Cli, Multicolor) {
  auto h = Json::parse(run({"construct", "shift3", "--n", "64", "--description"}).out)["description"];
  auto co = h;
  // Complement of "f < 0" over the sign digits -, 0, +.
  co["phi"]["table"] = Json({false, true, true});
  const auto in = write("mc.json", Json({{"descriptions", {h, co}}}).dump());
  const auto r = run({"pipeline", "--input", in});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"verify", "--input", write("out.json", r.out)}).code, 0);
}

TEST_F(Cli, Bench) {
  const auto r = run({"bench", "--family", "shift3", "--from", "5", "--to", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("family,n,log2_n", 0), 0u);
  std::getline(lines, row);
  EXPECT_EQ(row, "shift3,32,5,3,2,1/30,insufficient-width,,,,,,,,");
  std::getline(lines, row);
  EXPECT_EQ(row.rfind("shift3,64,6,3,2,1/30,ok,clique,", 0), 0u);
  EXPECT_EQ(r.out.find('.'), std::string::npos);
}

TEST_F(Cli, Errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"oracle", "--input", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"oracle", "--input", write("junk.json", "{not json")}).code, 2);
  const auto e = run({"construct", "shift3", "--n", "64", "--budget", "10"});
  EXPECT_EQ(e.code, 2);
  EXPECT_NE(e.err.find("budget"), std::string::npos);
  const auto g = run({"construct", "growth", "--s", "2", "3", "--n", "10"});
  EXPECT_EQ(g.code, 2);
  EXPECT_FALSE(g.err.empty());
  EXPECT_EQ(run({"construct", "shift3", "--n", "8", "--format", "csv"}).code, 2);
}

TEST_F(Cli, OutFile) {
  const auto out = path("o.json");
  const auto r = run({"construct", "incidence", "--k", "2", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(out);
  const auto j = Json::parse(f);
  EXPECT_EQ(j["metadata"]["vertices"], 16);
}

}  // namespace
}  // namespace slr
