#include <gtest/gtest.h>

#include "edmf/io.hpp"

namespace {

using namespace edmf;
using io::Json;

const Ring Z = Ring::integers();

TEST(Io, MatrixForms) {
  const Matrix bare = io::matrix_from_json(io::parse_json("[[2, 4], [\"6\", 8]]"), Z);
  EXPECT_EQ(bare, Matrix::from_ints(Z, {{2, 4}, {6, 8}}));

  const Ring g = Ring::polynomials(3);
  const Matrix full = io::matrix_from_json(
      io::parse_json(R"({"ring": "GF(3)[x]", "rows": 1, "cols": 2, "entries": [["x^2+1", 5]]})"), Z);
  EXPECT_EQ(full.ring(), g);
  EXPECT_EQ(full(0, 1), g.from_int(2));

  const Matrix empty = io::matrix_from_json(io::parse_json(R"({"rows": 0, "cols": 3, "entries": []})"), Z);
  EXPECT_EQ(empty.cols(), 3u);

  EXPECT_THROW(io::matrix_from_json(io::parse_json("[[1, 2], [3]]"), Z), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json("[[1.5]]"), Z), ParseError);
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"({"rows": 2, "entries": [[1]]})"), Z), ParseError);
  EXPECT_THROW(io::parse_json("[[1, 2],"), ParseError);
}

TEST(Io, MatrixRoundTrip) {
  const Matrix m = Matrix::from_ints(Z, {{-1, 0, 7}, {3, 2, 1}});
  const Json j = io::to_json(m);
  EXPECT_EQ(io::matrix_from_json(j, Ring::polynomials(5)), m);
  EXPECT_EQ(j.dump(), R"({"ring":"Z","rows":2,"cols":3,"entries":[["-1","0","7"],["3","2","1"]]})");
}

TEST(Io, Factorizations) {
  const auto e = io::factorization_from_json(io::parse_json(R"({"W": 12, "v": 2})"), Z);
  EXPECT_EQ(e, elementary(Z.from_int(2), Z.from_int(12)));
  const auto full = io::factorization_from_json(
      io::parse_json(R"({"W": "12", "u": [[0, 3], [4, 0]], "v": [[0, 3], [4, 0]]})"), Z);
  EXPECT_EQ(full.rho(), 2u);
  EXPECT_THROW(io::factorization_from_json(io::parse_json(R"({"W": 5, "u": [[2]], "v": [[2]]})"), Z),
               ValidationError);
  EXPECT_THROW(io::factorization_from_json(io::parse_json(R"({"v": 2})"), Z), ParseError);
  EXPECT_EQ(io::factorization_from_json(io::to_json(full), Z), full);
}

TEST(Io, Morphisms) {
  const auto f = io::morphism_from_json(io::parse_json(R"({"W": 12, "v1": 2, "v2": 6, "r": 1})"), Z);
  EXPECT_EQ(f.f00(), Matrix::scalar(Z.from_int(3)));
  const auto g = io::morphism_from_json(io::to_json(f), Z);
  EXPECT_EQ(g, f);
  EXPECT_THROW(io::morphism_from_json(io::parse_json(R"({"source": {"W": 12, "v": 2},
      "target": {"W": 12, "v": 6}, "f00": [[1]], "f11": [[1]]})"), Z), ValidationError);
}

TEST(Io, Classes) {
  const auto a = elementary(Z.from_int(12), Z.from_int(360));
  const MfClass c = primary_decompose(a);
  const Json j = io::to_json(c);
  EXPECT_EQ(j.dump(), R"({"W":"360","labels":[["2",2],["3",1]]})");
  EXPECT_EQ(io::class_from_json(j, Z), c);
  EXPECT_THROW(io::class_from_json(io::parse_json(R"({"W": 360, "labels": [["5", 1]]})"), Z),
               PreconditionError);
  EXPECT_THROW(io::class_from_json(io::parse_json(R"({"W": 360, "labels": [["2"]]})"), Z), ParseError);
}

TEST(Io, Decomposition) {
  const LambdaContext ctx(Z.from_int(2), 3);
  const auto d = decompose_module(ctx, std::vector<int>{2, 1, 2});
  EXPECT_EQ(io::to_json(d).dump(), R"({"p":"2","n":3,"mult":{"1":1,"2":2}})");
}

TEST(Io, RingKeyMustParse) {
  EXPECT_THROW(io::matrix_from_json(io::parse_json(R"({"ring": "GF(4)[x]", "entries": []})"), Z),
               ParseError);
}

}  // namespace
