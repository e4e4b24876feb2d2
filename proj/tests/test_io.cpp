#include <doctest.h>

#include "qcorona/corona.hpp"
#include "qcorona/io.hpp"

using namespace qcorona;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    io::parse_instance_text(text, "t.inst");
  } catch (const io::ParseError& e) {
    return e.line;
  }
  FAIL("no parse error for: " << text);
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    io::parse_instance_text(text, "t.inst");
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("coefficient encoding") {
  const auto inst = io::parse_instance_text(R"({"polynomials": [{"name": "f1", "coeffs": [["0","-1","0","0"],["1","0","0","0"]]}]})");
  REQUIRE(inst.polynomials.size() == 1);
  CHECK(inst.polynomials[0].name == "f1");
  CHECK(inst.polynomials[0].poly == hvar() - HPoly(Quat::i()));
}

TEST_CASE("rationals parse exactly") {
  const auto inst = io::parse_instance_text(R"({"polynomials": [{"coeffs": [["1/3", 2, "-4/6", "0"]]}]})");
  CHECK(inst.polynomials[0].poly.coeff(0) == Quat(Rat(1, 3), 2, Rat(-2, 3), 0));
  CHECK(inst.polynomials[0].name == "f1");
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK(error_line("{\n \"polynomials\": [\n  {\"coeffs\": [[\"1\",\"0\",\"0\",\"0\"],\n     [\"1\",\"0\",\"0\"]]}\n ]\n}") == 4);
  CHECK(error_message("{\"polynomials\": [{\"coeffs\": [[\"1\",\"0\",\"0\"]]}]}").find("4 components, got 3") !=
        std::string::npos);
  CHECK(error_line("{\n\"polynomials\": [\n{\"coeffs\": [[\"1\",\n\"x\",\"0\",\"0\"]]}]}") == 4);
  CHECK(error_line("{\n\"polynomials\": []\n}") == 2);
  CHECK(error_line("{\n\"polynomials\": [{\"coeffs\": [[\"1\",\"0\",\"0\",\"0\"]]}],\n\"extra\": 1\n}") == 3);
  CHECK(error_line("{\n\"polynomials\": [{\"coeffs\": [[1.5,\"0\",\"0\",\"0\"]]}]\n}") == 2);
  CHECK(error_line("{\n\"polynomials\": [\n{\"coeffs\": [[\"1\",\"0\",\"0\",\"0\"]]\n") >= 3);
}

TEST_CASE("malformed documents are rejected") {
  for (const char* bad : {
           "[]",
           "{}",
           R"({"polynomials": {}})",
           R"({"polynomials": [{"coeffs": "q"}]})",
           R"({"polynomials": [{"coeffs": [["1","0","0","0"]], "degree": 1}]})",
           R"({"polynomials": [{"name": "f", "coeffs": [["1","0","0","0"]]}, {"name": "f", "coeffs": [["1","0","0","0"]]}]})",
           R"({"polynomials": [{"coeffs": [["1/0","0","0","0"]]}]})",
           R"({"polynomials": [{"coeffs": [[true,"0","0","0"]]}]})",
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(io::parse_instance_text(bad), io::ParseError);
  }
}

TEST_CASE("instance round trip") {
  const std::string text =
      R"({"polynomials": [{"name": "g", "coeffs": [["1/2","0","-3","7/5"],["0","0","0","0"],["1","1","1","1"]]}, {"name": "f", "coeffs": [["-1","0","0","0"]]}]})";
  const auto a = io::parse_instance_text(text);
  const std::string once = io::serialize_instance(a);
  const auto b = io::parse_instance_text(once);
  REQUIRE(b.polynomials.size() == 2);
  CHECK(b.polynomials[0].name == "g");
  CHECK(b.polys() == a.polys());
  CHECK(io::serialize_instance(b) == once);
}

TEST_CASE("solution round trip with certificate") {
  const HPoly q = hvar();
  const std::vector<HPoly> fs{q - HPoly(Quat::i()), q - HPoly(Quat::j())};
  const auto sol = std::get<CoronaSolution>(solve_corona({fs}));
  io::SolutionFile file{{{{"f1", fs[0]}, {"f2", fs[1]}}}, {}, sol.certificate};
  file.solution = {{"h1", sol.hs[0]}, {"h2", sol.hs[1]}};
  const std::string text = io::serialize_solution(file);
  const auto back = io::parse_solution_text(text);
  CHECK(back.instance.polys() == fs);
  REQUIRE(back.solution.size() == 2);
  CHECK(back.solution[1].poly == sol.hs[1]);
  REQUIRE(back.certificate.has_value());
  CHECK(back.certificate->minors == sol.certificate.minors);
  CHECK(back.certificate->witnesses == sol.certificate.witnesses);
  CHECK(back.certificate->minor_columns == sol.certificate.minor_columns);
  CHECK(io::serialize_solution(back) == text);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(io::read_file("/nonexistent/instance.inst"), std::runtime_error);
}
