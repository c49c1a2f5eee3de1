#pragma once

#include <array>
#include <string>
#include <vector>

#include "tightpoly/errors.hpp"
#include "tightpoly/group.hpp"
#include "tightpoly/presentation.hpp"

namespace tightpoly {

struct SchlafliType {
  std::size_t p = 0;
  std::size_t q = 0;
  friend bool operator==(const SchlafliType&, const SchlafliType&) = default;
};

struct SggiReport {
  bool is_sggi = false;
  bool is_string_c_group = false;
  SchlafliType type;
  std::size_t order = 0;
  bool is_tight = false;
  bool orientable = false;
};

/// Three non-identity involutions with (rho0 rho2)^2 = 1.
inline bool check_sggi(const RegularRepresentation& rep) {
  for (Generator g : kGenerators) {
    const Element x = rep.generator(g);
    if (x == kIdentity || rep.act(x, g) != kIdentity) return false;
  }
  const Word r0r2{Generator::r0, Generator::r2};
  return evaluate_word(rep, r0r2.power(2)) == kIdentity;
}

/// Gamma_I for I given as a bitmask over {0, 1, 2}.
inline Subgroup distinguished_subgroup(const RegularRepresentation& rep, unsigned mask) {
  std::vector<Element> gens;
  for (Generator g : kGenerators) {
    if (mask & (1u << index_of(g))) gens.push_back(rep.generator(g));
  }
  Subgroup h = subgroup_closure(rep, gens);
  h.generating_words.clear();
  for (Generator g : kGenerators) {
    if (mask & (1u << index_of(g))) h.generating_words.push_back(Word{g});
  }
  return h;
}

/// Gamma_I ∩ Gamma_J = Gamma_{I∩J} for all 64 pairs of subsets.
inline bool check_intersection_condition(const RegularRepresentation& rep) {
  std::array<Subgroup, 8> sub;
  for (unsigned mask = 0; mask < 8; ++mask) sub[mask] = distinguished_subgroup(rep, mask);
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      std::vector<Element> meet;
      std::set_intersection(sub[i].elements.begin(), sub[i].elements.end(), sub[j].elements.begin(),
                            sub[j].elements.end(), std::back_inserter(meet));
      if (meet != sub[i & j].elements) return false;
    }
  }
  return true;
}

/// Decisive-pair form: the rank-2 subgroups are dihedral (distinct
/// non-identity generators) and <rho0, rho1> ∩ <rho1, rho2> = <rho1>.
/// Cross-checks the exhaustive version.
inline bool check_intersection_condition_decisive(const RegularRepresentation& rep) {
  const Element r0 = rep.generator(Generator::r0);
  const Element r1 = rep.generator(Generator::r1);
  const Element r2 = rep.generator(Generator::r2);
  if (r0 == kIdentity || r1 == kIdentity || r2 == kIdentity || r0 == r1 || r1 == r2) return false;
  const Subgroup face = distinguished_subgroup(rep, 0b011);
  const Subgroup vertex = distinguished_subgroup(rep, 0b110);
  std::vector<Element> meet;
  std::set_intersection(face.elements.begin(), face.elements.end(), vertex.elements.begin(), vertex.elements.end(),
                        std::back_inserter(meet));
  return meet == distinguished_subgroup(rep, 0b010).elements;
}

inline SchlafliType schlafli_type(const RegularRepresentation& rep) {
  return {element_order(rep, rep.sigma1()), element_order(rep, rep.sigma2())};
}

/// Order equals 2pq for the group's own type.
inline bool is_tight(const RegularRepresentation& rep) {
  const SchlafliType t = schlafli_type(rep);
  return rep.order() == 2 * t.p * t.q;
}

inline Subgroup rotation_subgroup(const RegularRepresentation& rep) {
  return subgroup_closure(rep, {rep.sigma1(), rep.sigma2()});
}

/// True iff <sigma1, sigma2> has index 2.
inline bool orientability(const RegularRepresentation& rep) {
  return subgroup_index(rep, rotation_subgroup(rep)) == 2;
}

inline SggiReport analyze(const RegularRepresentation& rep) {
  SggiReport report;
  report.order = rep.order();
  report.is_sggi = check_sggi(rep);
  report.type = schlafli_type(rep);
  report.is_tight = report.order == 2 * report.type.p * report.type.q;
  report.orientable = orientability(rep);
  report.is_string_c_group = report.is_sggi && check_intersection_condition(rep);
  return report;
}

/// Rewrites relators under rho_i -> rho_{2-i}. Coxeter(p,q) maps to
/// Coxeter(q,p), Lambda(p,q,i,j) to Lambda(q,p,-j,-i), everything else to Custom.
inline Presentation dual_presentation(const Presentation& pres) {
  std::vector<Word> relators;
  relators.reserve(pres.relators().size());
  for (const Word& r : pres.relators()) relators.push_back(r.dualized());
  FamilyTag tag = std::visit(
      [](const auto& t) -> FamilyTag {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CoxeterTag>) {
          return CoxeterTag{t.q, t.p};
        } else if constexpr (std::is_same_v<T, LambdaTag>) {
          return LambdaTag{t.q, t.p, static_cast<int>(residue(-t.j, t.q)), static_cast<int>(residue(-t.i, t.p))};
        } else {
          return CustomTag{};
        }
      },
      pres.tag());
  return Presentation(tag, std::move(relators));
}

/// The same group with rho0 and rho2 exchanged, renumbered breadth-first.
inline RegularRepresentation dual_representation(const RegularRepresentation& rep) {
  const std::size_t n = rep.order();
  constexpr auto unset = static_cast<Element>(-1);
  const std::array<Generator, 3> swapped{Generator::r2, Generator::r1, Generator::r0};
  std::vector<Element> order{kIdentity};
  std::vector<Element> renum(n, unset);
  renum[kIdentity] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Generator g : swapped) {
      const Element y = rep.act(order[head], g);
      if (renum[y] == unset) {
        renum[y] = static_cast<Element>(order.size());
        order.push_back(y);
      }
    }
  }
  std::array<std::vector<Element>, 3> images;
  for (int r = 0; r < 3; ++r) {
    images[r].resize(n);
    for (Element x = 0; x < n; ++x) images[r][renum[x]] = renum[rep.act(x, swapped[r])];
  }
  return RegularRepresentation(std::move(images));
}

/// Two tight string C-groups of one type define the same polyhedron iff
/// they have equal order and b's relators all hold in a.
inline bool polyhedra_isomorphic(const RegularRepresentation& a, const Presentation& /*a_pres*/,
                                 const RegularRepresentation& b, const Presentation& b_pres) {
  const SchlafliType ta = schlafli_type(a);
  const SchlafliType tb = schlafli_type(b);
  if (!(ta == tb)) {
    throw TypeMismatch("Schläfli types differ: {" + std::to_string(ta.p) + "," + std::to_string(ta.q) + "} vs {" +
                       std::to_string(tb.p) + "," + std::to_string(tb.q) + "}");
  }
  if (a.order() != b.order()) return false;
  for (const Word& r : b_pres.relators()) {
    if (evaluate_word(a, r) != kIdentity) return false;
  }
  return true;
}

}  // namespace tightpoly
