#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "edmf/io.hpp"

namespace {

using edmf::io::Json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = edmf::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

TEST(Cli, Snf) {
  const auto r = run({"snf", "--ring", "Z", "[[2,4],[6,8]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["invariant_factors"], Json::parse(R"(["2","4"])"));
  EXPECT_EQ(j["D"]["entries"], Json::parse(R"([["2","0"],["0","4"]])"));
  EXPECT_TRUE(j.contains("U"));
  EXPECT_TRUE(j.contains("V"));

  const auto id = run({"snf", "[[1,0],[0,1]]"});
  EXPECT_EQ(Json::parse(id.out)["D"]["entries"], Json::parse(R"([["1","0"],["0","1"]])"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"snf", "[[1,2],"}).code, edmf::cli::kParse);
  EXPECT_EQ(run({"snf", "/no/such/file.json"}).code, edmf::cli::kParse);
  EXPECT_EQ(run({"frobnicate"}).code, edmf::cli::kParse);
  EXPECT_EQ(run({"snf", "--ring", "GF(4)[x]", "[[1]]"}).code, edmf::cli::kParse);
  EXPECT_EQ(run({"classify", R"({"W": 5, "u": [[2]], "v": [[2]]})"}).code, edmf::cli::kValidation);
  EXPECT_EQ(run({"classify", R"({"W": 12, "v": 5})"}).code, edmf::cli::kPrecondition);
  EXPECT_EQ(run({"iso", R"({"W": 12, "v": 2})", R"({"W": 8, "v": 2})"}).code,
            edmf::cli::kPrecondition);
  EXPECT_EQ(run({"snf", "--format", "dot", "[[1]]"}).code, edmf::cli::kPrecondition);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Classify) {
  const auto r = run({"classify", R"({"W": 360, "v": 12})"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["labels"], Json::parse(R"([["2",2],["3",1]])"));
  EXPECT_EQ(j["elementary_factors"], Json::parse(R"(["12"])"));
  EXPECT_EQ(j["witness"], true);

  const auto trivial = run({"classify", R"({"W": 12, "v": 1})"});
  EXPECT_EQ(Json::parse(trivial.out)["labels"], Json::array());
}

TEST(Cli, ClassifyBatchPreservesOrder) {
  std::string batch = "[";
  const std::vector<int> vs{12, 5, 4, 360, 2, 30, 8, 9};
  for (std::size_t k = 0; k < vs.size(); ++k)
    batch += (k ? "," : "") + std::string(R"({"W": 360, "v": )") + std::to_string(vs[k]) + "}";
  batch += "]";
  const auto r = run({"classify", "-"}, batch);
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k)
    EXPECT_EQ(j[k]["elementary_factors"][0], std::to_string(vs[k]));
  EXPECT_EQ(run({"classify", "-"}, batch).out, r.out);
}

TEST(Cli, ClassifyConjugate) {
  // 4x4 conjugate of e_2 + e_4 + e_4 + e_8 over W = 16 by hand-picked unimodular matrices.
  const auto gen = run({"classify", R"({"W": 16, "u": [[8,0,0,0],[0,4,0,0],[0,0,4,0],[0,0,0,2]],
                                        "v": [[2,0,0,0],[0,4,0,0],[0,0,4,0],[0,0,0,8]]})"});
  const auto conj = run({"classify", R"({"W": 16, "u": [[8,-8,0,0],[0,4,0,0],[0,0,4,-4],[0,0,0,2]],
                                         "v": [[2,4,0,0],[0,4,0,0],[0,0,4,8],[0,0,0,8]]})"});
  ASSERT_EQ(gen.code, 0) << gen.err;
  ASSERT_EQ(conj.code, 0) << conj.err;
  EXPECT_EQ(Json::parse(gen.out)["labels"], Json::parse(conj.out)["labels"]);
}

TEST(Cli, Iso) {
  const auto r = run({"iso", R"({"W": 12, "v": 2})", R"({"W": 12, "v": 6})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"({"zmf": false, "hmf": true})"));
}

TEST(Cli, Cone) {
  const auto r = run({"cone", R"({"W": 12, "v1": 2, "v2": 6, "r": 1})"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["xi"], "1");
  EXPECT_EQ(j["zeta"], "4");
  EXPECT_EQ(j["is_iso"], true);
  EXPECT_EQ(j["u_invariant_factors"], Json::parse(R"(["1","4"])"));
}

TEST(Cli, Hom) {
  const auto r = run({"hom", R"({"W": 12, "v": 2})", R"({"W": 12, "v": 2})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["even"]["cyclic_factors"], Json::parse(R"(["2"])"));

  const auto p = run({"hom", "--ring", "GF(3)[x]", R"({"W": "x^4", "v": "x"})", R"({"W": "x^4", "v": "x^2"})"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(Json::parse(p.out)["even"]["cyclic_factors"], Json::parse(R"(["x"])"));
}

TEST(Cli, QuiverGolden) {
  const auto stable = run({"quiver", "2", "5", "--stable"});
  ASSERT_EQ(stable.code, 0) << stable.err;
  EXPECT_EQ(stable.out, read_file(EDMF_GOLDEN_DIR "/quiver_stable_5.dot"));
  const auto module = run({"quiver", "2", "5"});
  ASSERT_EQ(module.code, 0) << module.err;
  EXPECT_EQ(module.out, read_file(EDMF_GOLDEN_DIR "/quiver_module_5.dot"));

  const auto json = run({"quiver", "--format", "json", "2", "5", "--stable"});
  EXPECT_EQ(Json::parse(json.out)["vertices"].size(), 4u);
  EXPECT_EQ(run({"quiver", "4", "5"}).code, edmf::cli::kPrecondition);
}

TEST(Cli, DemoIsDeterministic) {
  const auto a = run({"demo"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("matches mu_5(i, j) = min(delta(i), delta(j)): yes"), std::string::npos);
  EXPECT_EQ(run({"demo"}).out, a.out);
  const auto j = run({"demo", "--format", "json", "--seed", "7"});
  ASSERT_EQ(j.code, 0) << j.err;
  const Json parsed = Json::parse(j.out);
  EXPECT_EQ(parsed["hom_table_2_5"], Json::parse("[[1,1,1,1],[1,2,2,1],[1,2,2,1],[1,1,1,1]]"));
  EXPECT_EQ(parsed["round_trip"]["ok"], true);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "edmf_cli_out.json";
  const auto r = run({"--out", path, "iso", R"({"W": 12, "v": 2})", R"({"W": 12, "v": 6})"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(read_file(path))["hmf"], true);
}

TEST(Cli, TextFormat) {
  const auto r = run({"iso", "--format", "text", R"({"W": 12, "v": 2})", R"({"W": 12, "v": 6})"});
  EXPECT_EQ(r.out, "zmf: false\nhmf: true\n");
}

}  // namespace
