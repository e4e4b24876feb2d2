#pragma once

#include <stdexcept>
#include <string>

namespace qcorona {

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// |Im(q)| is not a rational number, so q has no exact (x, y, axis) form.
class NonRationalRadius : public std::domain_error {
 public:
  explicit NonRationalRadius(const std::string& what) : std::domain_error(what) {}
};

// A post-condition that must hold by construction failed. Always a bug.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qcorona
