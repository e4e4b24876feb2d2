#pragma once

// Instance and solution files. Both are JSON documents; every rational is a
// string "p/q" or "p" (plain JSON integers are accepted on input), so no
// value ever passes through floating point.
//
//   {"polynomials": [{"name": "f1", "coeffs": [["0","-1","0","0"], ["1","0","0","0"]]}]}
//
// A quaternion is [x0, x1, x2, x3]; a polynomial lists coefficients in
// ascending degree. Solution files repeat the instance and add "solution"
// (same shape as "polynomials") and an optional "certificate".

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcorona/hpoly.hpp"
#include "qcorona/polymatrix.hpp"

namespace qcorona::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

struct NamedPoly {
  std::string name;
  HPoly poly;
};

struct Instance {
  std::vector<NamedPoly> polynomials;

  std::vector<HPoly> polys() const;
};

struct SolutionFile {
  Instance instance;
  std::vector<NamedPoly> solution;
  std::optional<FullRankCertificate> certificate;
};

Instance parse_instance_text(const std::string& text, const std::string& source = "<input>");
Instance parse_instance(const std::string& path);
std::string serialize_instance(const Instance& inst);

SolutionFile parse_solution_text(const std::string& text, const std::string& source = "<input>");
SolutionFile parse_solution(const std::string& path);
std::string serialize_solution(const SolutionFile& sol);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace qcorona::io
