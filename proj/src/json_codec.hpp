#pragma once

// JSON encodings shared by the file formats and CLI reports.

#include <json.hpp>

#include "qcorona/cpoly.hpp"
#include "qcorona/hpoly.hpp"

namespace qcorona::io {

using Json = nlohmann::ordered_json;

inline Json rat_json(const Rat& r) { return to_string(r); }

inline Json quat_json(const Quat& q) {
  return Json::array({rat_json(q.x0), rat_json(q.x1), rat_json(q.x2), rat_json(q.x3)});
}

inline Json hpoly_coeffs_json(const HPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(quat_json(c));
  return out;
}

inline Json cpoly_coeffs_json(const CPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(Json::array({rat_json(c.re), rat_json(c.im)}));
  return out;
}

}  // namespace qcorona::io
