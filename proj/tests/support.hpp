#pragma once

// Checks shared by the property tests and the acceptance binary.

#include <string>
#include <vector>

#include "tightpoly/tightpoly.hpp"

namespace support {

using namespace tightpoly;

inline bool normal_power(const RegularRepresentation& rep, Element sigma, long long e) {
  return is_normal(rep, subgroup_closure(rep, {rep.power(sigma, e)}));
}

/// Normal-subgroup laws of the family the record's group comes from.
inline std::vector<std::string> family_law_violations(const ClassRecord& r) {
  std::vector<std::string> bad;
  if (r.orientable_params) {
    const auto& o = *r.orientable_params;
    if (!normal_power(r.rep, r.rep.sigma1(), o.i + 1)) bad.push_back("<sigma1^(i+1)> not normal");
    if (!normal_power(r.rep, r.rep.sigma2(), o.j - 1)) bad.push_back("<sigma2^(j-1)> not normal");
    return bad;
  }
  const DeltaTag& d = r.nonorientable_params->delta;
  const RegularRepresentation g = r.dual_form() ? dual_representation(r.rep) : r.rep;
  const Element s1 = g.sigma1();
  const Element s2 = g.sigma2();
  if (!normal_power(g, s1, d.i - 2)) bad.push_back("<sigma1^(i-2)> not normal");
  if (!normal_power(g, s2, d.j + 2)) bad.push_back("<sigma2^(j+2)> not normal");
  if (!normal_power(g, s1, 4)) bad.push_back("<sigma1^4> not normal");
  if (!normal_power(g, s2, 6)) bad.push_back("<sigma2^6> not normal");
  if (normal_power(g, s1, 2)) bad.push_back("<sigma1^2> normal");
  if (normal_power(g, s2, 2)) bad.push_back("<sigma2^2> normal");
  return bad;
}

/// Group-level and map-level invariants every tight record must satisfy.
inline std::vector<std::string> record_violations(const ClassRecord& r) {
  std::vector<std::string> bad = family_law_violations(r);
  const std::size_t p = r.type.p;
  const std::size_t q = r.type.q;
  const RegularRepresentation& rep = r.rep;
  const SggiReport report = analyze(rep);
  if (!report.is_sggi) bad.push_back("not an sggi");
  if (!report.is_string_c_group) bad.push_back("not a string C-group");
  if (!check_intersection_condition_decisive(rep)) bad.push_back("decisive intersection fails");
  if (!(report.type == r.type)) bad.push_back("wrong type");
  if (report.order != 2 * p * q) bad.push_back("not tight");
  if (report.orientable != r.orientable()) bad.push_back("orientability");
  if (evaluate_word(rep, (Word::sigma1() * Word::sigma2()).power(2)) != kIdentity) bad.push_back("(sigma1 sigma2)^2 != 1");

  const MapStructure map = build_map(rep);
  if (!validate_polyhedron(map)) bad.push_back("map axioms");
  const std::size_t V = map.vertices.size();
  const std::size_t E = map.edges.size();
  const std::size_t F = map.faces.size();
  if (V * 2 * q != rep.order() || E * 4 != rep.order() || F * 2 * p != rep.order()) bad.push_back("coset counts");
  if (V != p || F != q || 2 * E != p * q) bad.push_back("flat counts");
  const MapInvariants inv = map_invariants(map, rep);
  if (inv.euler_characteristic != static_cast<long long>(p + q) - static_cast<long long>(p * q / 2)) {
    bad.push_back("euler characteristic");
  }
  if (inv.has_multiple_edges != (inv.edge_multiplicity >= 2)) bad.push_back("multiplicity flag");

  // each adjacency is a fixed-point-free perfect matching and the flag graph is connected
  for (int k = 0; k < 3; ++k) {
    for (Element x = 0; x < map.flag_count(); ++x) {
      const Element y = map.adjacency[k][x];
      if (y == x || map.adjacency[k][y] != x) {
        bad.push_back("adjacency " + std::to_string(k) + " is not a matching");
        break;
      }
    }
  }
  std::vector<char> seen(map.flag_count(), 0);
  std::vector<Element> stack{kIdentity};
  seen[kIdentity] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (int k = 0; k < 3; ++k) {
      const Element y = map.adjacency[k][x];
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != map.flag_count()) bad.push_back("flag graph disconnected");
  return bad;
}

/// For orientable records: multiple edges iff <sigma2> has a nontrivial core.
inline bool core_matches_multiplicity(const ClassRecord& r) {
  const Subgroup core = subgroup_core(r.rep, subgroup_closure(r.rep, {r.rep.sigma2()}));
  return r.invariants.has_multiple_edges == !core.is_trivial();
}

}  // namespace support
