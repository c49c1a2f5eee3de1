#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightpoly/coset_enumeration.hpp"
#include "tightpoly/errors.hpp"
#include "tightpoly/families.hpp"
#include "tightpoly/polyhedron.hpp"
#include "tightpoly/sggi.hpp"

namespace tightpoly {

/// One tight regular polyhedron with its enumerated group and map data.
struct ClassRecord {
  SchlafliType type;
  std::optional<OrientableParams> orientable_params;
  std::optional<NonOrientableParams> nonorientable_params;
  Presentation presentation;
  RegularRepresentation rep;
  SggiReport report;
  MapInvariants invariants;

  bool orientable() const noexcept { return orientable_params.has_value(); }
  bool dual_form() const noexcept { return nonorientable_params && nonorientable_params->is_dual_form; }
  std::string label() const;
};

inline std::string describe(const OrientableParams& o) {
  return "Lambda(" + std::to_string(o.p) + "," + std::to_string(o.q) + ")_{" + std::to_string(o.i) + "," +
         std::to_string(o.j) + "}";
}

inline std::string describe(const NonOrientableParams& n) {
  const DeltaTag& d = n.delta;
  std::string s = "Delta(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")_{(" + std::to_string(d.i) + "," +
                  std::to_string(d.j) + "," + std::to_string(d.a) + "," + std::to_string(d.b) + ")}";
  return n.is_dual_form ? "dual of " + s : s;
}

inline std::string ClassRecord::label() const {
  return orientable_params ? describe(*orientable_params) : describe(*nonorientable_params);
}

namespace detail {

inline ClassRecord verified_record(Presentation pres, SchlafliType type, bool orientable, std::size_t max_cosets,
                                   const std::string& name) {
  RegularRepresentation rep = enumerate_cosets(pres, max_cosets);
  const SggiReport report = analyze(rep);
  auto fail = [&](const std::string& what) { throw VerificationFailure(name + ": " + what); };
  if (!report.is_sggi) fail("not an sggi");
  if (!(report.type == type)) fail("wrong Schläfli type");
  if (!report.is_tight) fail("not tight (order " + std::to_string(report.order) + ")");
  if (!report.is_string_c_group) fail("intersection condition fails");
  if (report.orientable != orientable) fail("orientability differs from the family");
  const MapStructure map = build_map(rep);
  if (!validate_polyhedron(map)) fail("map violates the polyhedron axioms");
  MapInvariants inv = map_invariants(map, rep);
  return ClassRecord{type, std::nullopt, std::nullopt, std::move(pres), std::move(rep), report, inv};
}

}  // namespace detail

/// Orientable records, then non-orientable ones, each enumerated and checked.
inline std::vector<ClassRecord> classify_all(int p, int q) {
  detail::require_type(p, q);
  const SchlafliType type{static_cast<std::size_t>(p), static_cast<std::size_t>(q)};
  const std::size_t bound = std::max<std::size_t>(65536, 64 * type.p * type.q);
  std::vector<ClassRecord> out;
  for (const OrientableParams& o : classify_orientable(p, q)) {
    ClassRecord r = detail::verified_record(o.presentation(), type, true, bound, describe(o));
    r.orientable_params = o;
    out.push_back(std::move(r));
  }
  for (const NonOrientableParams& n : classify_nonorientable(p, q)) {
    ClassRecord r = detail::verified_record(n.presentation(), type, false, bound, describe(n));
    r.nonorientable_params = n;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tightpoly
