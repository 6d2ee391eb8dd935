#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "commprob/cli.hpp"
#include "support.hpp"

using namespace commprob;
using commprob::testing::corpus_path;

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  Errc spec_error(std::string const& doc, std::string* what = nullptr) {
    try {
      parse_group_spec(doc);
    } catch (Error const& e) {
      if (what) {
        *what = e.what();
      }
      return e.code();
    }
    ADD_FAILURE() << "accepted: " << doc;
    return Errc::unknown_type;
  }

}  // namespace

TEST(Spec, ParsesCorpus) {
  auto spec = parse_group_spec(commprob::testing::slurp(corpus_path("gl2_f3")));
  EXPECT_EQ(spec.name, "GL2(F3)");
  EXPECT_EQ(spec.kind, GroupElement::Kind::matrix);
  EXPECT_EQ(spec.degree, 2u);
  ASSERT_TRUE(spec.field.has_value());
  EXPECT_EQ(spec.field->p, 3u);
  EXPECT_EQ(spec.generators.size(), 2u);
  EXPECT_EQ(format_element(spec.generators[1]), "2 1;2 0");
}

TEST(Spec, ExtensionFieldMatrices) {
  auto spec = parse_group_spec(R"({"name": "SL2(F4) part", "kind": "matrix",
      "field": {"p": 2, "k": 2, "modulus": [1, 1, 1]}, "degree": 2,
      "generators": [[[1, 1], [0, 1]], [[2, 0], [0, 3]]]})");
  auto G = build_group(spec);
  EXPECT_EQ(G.order() % 4, 0u);
}

TEST(Spec, ValidationErrorsNameTheField) {
  std::string what;
  EXPECT_EQ(spec_error("{", &what), Errc::parse_error);
  EXPECT_EQ(spec_error(R"({"kind": "permutation", "degree": 3, "generators": [[0,1,2]]})", &what),
            Errc::validation_error);
  EXPECT_NE(what.find("name"), std::string::npos);
  EXPECT_EQ(spec_error(R"({"name": "x", "kind": "matrix", "field": {"p": 3}, "degree": 2,
      "generators": [[[1,0],[0,1]], [[1,2],[2,1]]]})", &what),
            Errc::validation_error);
  EXPECT_NE(what.find("generators[1]"), std::string::npos);
  EXPECT_NE(what.find("singular"), std::string::npos);
  EXPECT_EQ(spec_error(R"({"name": "x", "kind": "matrix", "field": {"p": 4}, "degree": 2,
      "generators": [[[1,0],[0,1]]]})", &what),
            Errc::validation_error);
  EXPECT_NE(what.find("field"), std::string::npos);
  EXPECT_EQ(spec_error(R"({"name": "x", "kind": "permutation", "degree": 3,
      "generators": [[0,1]]})", &what),
            Errc::validation_error);
  EXPECT_EQ(spec_error(R"({"name": "x", "kind": "braid", "degree": 3,
      "generators": [[0,1,2]]})"),
            Errc::validation_error);
  EXPECT_EQ(spec_error(R"({"name": "x", "kind": "permutation", "degree": 3,
      "generators": [[0,1,-2]]})"),
            Errc::validation_error);
}

TEST(Cli, CpdWithOracle) {
  auto r = run({"cpd", corpus_path("s3"), "--d", "3", "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "d,class_count,commuting_count,cp,oracle_class_count,match\n"
            "1,3,6,1,3,1\n"
            "2,8,18,1/2,8,1\n"
            "3,21,48,2/9,21,1\n"
            "# verdict: MATCH\n");
  EXPECT_NE(r.err.find("elapsed_ms"), std::string::npos);
}

TEST(Cli, CpdJson) {
  auto r = run({"cpd", corpus_path("q8"), "--d", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rows"][1]["cp"], "5/8");
  EXPECT_EQ(doc["rows"][1]["class_count"], "22");
}

TEST(Cli, BranchingCsv) {
  auto r = run({"branching", corpus_path("s3")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find("# check")),
            "type,tuple_length,centralizer_order,abelian,T1,T2,T3\n"
            "T1,1,6,0,1,0,0\n"
            "T2,1,2,1,1,2,0\n"
            "T3,1,3,1,1,0,3\n");
}

TEST(Cli, BranchingJsonRoundTrip) {
  for (auto const& stem : {"s4", "gl2_f3"}) {
    auto r = run({"branching", corpus_path(stem), "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto B = cli::branching_from_json(r.out);
    EXPECT_EQ(B, branching_matrix(commprob::testing::corpus_group(stem)).matrix) << stem;
  }
}

TEST(Cli, Classes) {
  auto r = run({"classes", corpus_path("gl2_f3")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# classes: 8"), std::string::npos);
  EXPECT_NE(r.out.find("# z_classes: 4"), std::string::npos);
  auto j = run({"classes", corpus_path("q8"), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out)["classes"].size(), 5u);
}

TEST(Cli, Ratio) {
  auto r = run({"ratio", corpus_path("q8"), "--dmax", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3,92,23/16,1.437500000000000,1/16"), std::string::npos);
  EXPECT_NE(r.out.find("# a: 4"), std::string::npos);
}

TEST(Cli, SymbolicAndExport) {
  auto r = run({"symbolic", "--fixture", "gl2", "--d", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2,4,1/2,1,"), std::string::npos);

  auto e = run({"symbolic", "--fixture", "gl3", "--export"});
  ASSERT_EQ(e.code, 0);
  auto path = ::testing::TempDir() + "gl3_grid.txt";
  std::ofstream(path) << e.out;
  auto f = run({"symbolic", "--matrix-file", path, "--d", "4"});
  auto g = run({"symbolic", "--fixture", "gl3", "--d", "4"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out, g.out);
  std::remove(path.c_str());
}

TEST(Cli, Family) {
  auto r = run({"family", "--family", "GL", "--size", "2", "--q", "3", "--d", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "family,size,q,order,a,base,d,base_power\nGL,2,3,48,8,1/6,3,1/36\n");
  auto bad = run({"family", "--family", "Sp", "--size", "2", "--q", "9"});
  EXPECT_EQ(bad.code, 0);
  auto even = run({"family", "--family", "O", "--size", "2", "--q", "4"});
  EXPECT_EQ(even.code, 2);
  EXPECT_NE(even.err.find("InvalidFamilyParams"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"cpd", corpus_path("s3")}).code, 2);
  EXPECT_EQ(run({"cpd", "/nonexistent.json", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"symbolic", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"symbolic", "--fixture", "gl9", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"branching", corpus_path("s3"), "--format", "xml"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (auto const& cmd : std::vector<std::vector<std::string>>{
           {"branching", corpus_path("gl3_f2"), "--format", "json"},
           {"cpd", corpus_path("s4"), "--d", "4", "--oracle"}}) {
    EXPECT_EQ(run(cmd).out, run(cmd).out);
  }
}
