#include "skly3/rep_io.hpp"
#include "skly3/reps.hpp"
#include "printers.hpp"

#include <gtest/gtest.h>

using namespace skly3;

TEST(RepIo, ExactRoundTrip) {
  const CyclotomicField K(12);
  const auto rep = family_s1m1m1(K, 2, K.zeta(1), K.from_int(3), 7);
  const auto j = rep_to_json(rep, FieldTag::cyclotomic(12));
  const auto back = to_matrep(K, parse_rep_json(nlohmann::json::parse(j.dump())));
  EXPECT_EQ(back.X, rep.X);
  EXPECT_EQ(back.Y, rep.Y);
  EXPECT_EQ(back.Z, rep.Z);
}

TEST(RepIo, ComplexRoundTripIsBitExact) {
  const ComplexField C(1e-9);
  const auto m = Matrix<ComplexField>::from_rows(C, {{{0.1, -1.0 / 3.0}, {2.5e-17, 7.0}}, {{-0.0, 1e300}, {M_PI, M_E}}});
  const MatRep<ComplexField> rep(m, m * m, m + m);
  const auto back = to_matrep(C, parse_rep_json(nlohmann::json::parse(rep_to_json(rep, FieldTag::complex()).dump())));
  EXPECT_EQ(back.X.data(), rep.X.data());
  EXPECT_EQ(back.Y.data(), rep.Y.data());
}

TEST(RepIo, AcceptsNumericEntriesForComplex) {
  const auto j = nlohmann::json::parse(R"({"dimension": 1, "field": "complex", "X": [[1.5]], "Y": [[[0, 2]]], "Z": [["[1, -1]"]]})");
  const auto rep = to_matrep(ComplexField(1e-9), parse_rep_json(j));
  EXPECT_EQ(rep.X(0, 0), std::complex<double>(1.5, 0));
  EXPECT_EQ(rep.Y(0, 0), std::complex<double>(0, 2));
  EXPECT_EQ(rep.Z(0, 0), std::complex<double>(1, -1));
}

TEST(RepIo, RejectsMalformedFiles) {
  using nlohmann::json;
  EXPECT_THROW(parse_rep_json(json::parse(R"({"dimension": 1, "field": "Q", "X": [[1]], "Y": [[1]]})")), ParseError);
  EXPECT_THROW(parse_rep_json(json::parse(R"({"dimension": 2, "field": "Q", "X": [[1]], "Y": [[1]], "Z": [[1]]})")),
               DimensionMismatch);
  EXPECT_THROW(parse_rep_json(json::parse(R"({"dimension": 1, "field": "Q", "X": [[1.5]], "Y": [[1]], "Z": [[1]]})")),
               ParseError);
  EXPECT_THROW(parse_rep_json(json::parse(R"({"dimension": 1, "field": "Q", "X": [["1/0"]], "Y": [[1]], "Z": [[1]]})")),
               Error);
  EXPECT_THROW(parse_rep_json(json::parse(R"({"dimension": 0, "field": "Q", "X": [], "Y": [], "Z": []})")), ParseError);
  EXPECT_THROW(read_rep_file("/nonexistent/rep.json"), ParseError);
}
