#ifndef ARITH_JSON_IO_HPP
#define ARITH_JSON_IO_HPP

#include <json.hpp>

#include "arith/freegrp.hpp"
#include "arith/intpoly.hpp"
#include "arith/zarith.hpp"

namespace arith {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const IntPoly& p) {
  ordered_json a = ordered_json::array();
  for (const Int& c : p.coeffs()) a.push_back(static_cast<long long>(c));
  return a;
}

inline ordered_json to_json(const Rat& r) {
  return {{"num", boost::multiprecision::numerator(r).str()},
          {"den", boost::multiprecision::denominator(r).str()}};
}

inline ordered_json to_json(const ZSet& k) {
  ordered_json a = ordered_json::array();
  for (long s : k.elements) a.push_back(s);
  return a;
}

inline ordered_json to_json(const SequenceWindow& w) {
  ordered_json vals = ordered_json::array();
  for (const Rat& v : w.values) vals.push_back(to_json(v));
  return {{"lo", w.lo}, {"hi", w.hi}, {"values", vals}};
}

inline ordered_json to_json(const NumericWindow& w) {
  ordered_json vals = ordered_json::array();
  for (double v : w.values) vals.push_back(v);
  return {{"lo", w.lo}, {"hi", w.hi}, {"values", vals},
          {"max_residual", w.max_residual}};
}

inline ordered_json to_json(const CMReport& r) {
  return {{"R_K", r.r_k}, {"S_K", r.s_k}, {"T1", r.t1}, {"T2", r.t2}};
}

inline ordered_json to_json(const TileResultZ& t) {
  ordered_json j;
  j["is_tile"] = t.is_tile;
  if (t.certificate) {
    j["period"] = t.certificate->period;
    j["offsets"] = t.certificate->offsets;
  }
  if (t.collision) j["collision"] = *t.collision;
  return j;
}

inline ordered_json to_json(const fg::SolutionPatch& p) {
  ordered_json cells = ordered_json::object();
  for (const auto& [w, v] : p.assignment) cells[w.str()] = to_json(v);
  return {{"rank", p.rank}, {"region_radius", p.region_radius}, {"cells", cells}};
}

inline ordered_json to_json(const fg::PatchReport& r) {
  return {{"ok", r.ok}, {"equations_checked", r.equations_checked},
          {"degenerate", r.degenerate}, {"failure", r.failure}};
}

inline ordered_json to_json(const fg::TilingReport& r) {
  return {{"ok", r.ok}, {"translates", r.translates}, {"failure", r.failure}};
}

inline ordered_json words_to_json(const std::vector<fg::Word>& ws) {
  ordered_json a = ordered_json::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

}  // namespace arith

#endif  // ARITH_JSON_IO_HPP
