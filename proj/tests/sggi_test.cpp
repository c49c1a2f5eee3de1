#include <gtest/gtest.h>

#include "tightpoly/coset_enumeration.hpp"
#include "tightpoly/presentations.hpp"
#include "tightpoly/sggi.hpp"

using namespace tightpoly;

namespace {

RegularRepresentation rep_of(const Presentation& pres) { return enumerate_cosets(pres); }

Presentation with_extra(const Presentation& pres, const Word& extra) {
  auto relators = pres.relators();
  relators.push_back(extra);
  return Presentation::custom(relators);
}

// relators of pres other than the four mandatory ones
std::vector<Word> extra_relators(const Presentation& pres) {
  std::vector<Word> out;
  for (const Word& r : pres.relators()) {
    bool mandatory = false;
    for (const char* m : {"aa", "bb", "cc", "acac"}) mandatory |= r.cyclically_equivalent(Word::parse(m));
    if (!mandatory) out.push_back(r);
  }
  return out;
}

}  // namespace

TEST(Sggi, CoxeterGroupIsStringCGroup) {
  const auto rep = rep_of(coxeter_presentation(4, 3));
  EXPECT_TRUE(check_sggi(rep));
  EXPECT_TRUE(check_intersection_condition(rep));
  EXPECT_EQ(schlafli_type(rep), (SchlafliType{4, 3}));
  EXPECT_FALSE(is_tight(rep));
  EXPECT_EQ(rep.order(), 48u);
}

TEST(Sggi, WorkedExampleMembers) {
  const auto a = rep_of(lambda_presentation(48, 32, 11, 17));
  EXPECT_TRUE(check_sggi(a));
  const auto b = rep_of(lambda_presentation(48, 32, -1, 29));
  EXPECT_TRUE(is_tight(b));
  EXPECT_TRUE(orientability(b));
}

TEST(Sggi, DeltaGroups) {
  const auto d46 = rep_of(delta_presentation(4, 6, 2, 4, 3, 2));
  EXPECT_TRUE(check_intersection_condition(d46));
  const auto d126 = rep_of(delta_presentation(12, 6, 2, 4, 7, 2));
  EXPECT_EQ(schlafli_type(d126), (SchlafliType{12, 6}));
  const auto hemi = rep_of(delta_presentation(4, 3, 2, -2, -1, 2));
  EXPECT_FALSE(orientability(hemi));
  const SggiReport r = analyze(hemi);
  EXPECT_TRUE(r.is_sggi);
  EXPECT_TRUE(r.is_string_c_group);
  EXPECT_TRUE(r.is_tight);
  EXPECT_EQ(r.order, 24u);
}

TEST(Sggi, FlatPolyhedraOfTypePTwoAreOrientable) {
  for (int p = 2; p <= 9; ++p) {
    const auto rep = rep_of(coxeter_presentation(p, 2));
    EXPECT_TRUE(orientability(rep));
    EXPECT_TRUE(is_tight(rep));
  }
}

TEST(Sggi, FirstLambda66FailureOfIntersectionCondition) {
  // lexicographically first (i, j) giving an sggi of type {6,6} that is not a string C-group
  std::optional<std::pair<int, int>> first;
  for (int i = 0; i < 6 && !first; ++i) {
    for (int j = 0; j < 6 && !first; ++j) {
      const auto rep = rep_of(lambda_presentation(6, 6, i, j));
      if (check_sggi(rep) && schlafli_type(rep) == SchlafliType{6, 6} && !check_intersection_condition(rep)) {
        first = std::pair(i, j);
      }
    }
  }
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(*first, (std::pair<int, int>{0, 4}));
  EXPECT_EQ(rep_of(lambda_presentation(6, 6, 0, 4)).order(), 12u);
}

TEST(Sggi, FirstLambda46Collapse) {
  std::optional<std::pair<int, int>> first;
  SchlafliType collapsed;
  for (int i = 0; i < 4 && !first; ++i) {
    for (int j = 0; j < 6 && !first; ++j) {
      const auto rep = rep_of(lambda_presentation(4, 6, i, j));
      const auto t = schlafli_type(rep);
      if (!(t == SchlafliType{4, 6})) {
        first = std::pair(i, j);
        collapsed = t;
      }
    }
  }
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(*first, (std::pair<int, int>{0, 0}));
  EXPECT_EQ(4 % collapsed.p, 0u);
  EXPECT_EQ(6 % collapsed.q, 0u);
  EXPECT_TRUE(collapsed.p < 4 || collapsed.q < 6);
}

TEST(Sggi, DecisivePairAgreesWithExhaustiveCheck) {
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
          const auto rep = rep_of(lambda_presentation(p, q, i, j));
          EXPECT_EQ(check_sggi(rep) && check_intersection_condition(rep), check_intersection_condition_decisive(rep))
              << p << "," << q << "," << i << "," << j;
        }
      }
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 6; ++j) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 6; ++b) {
          const auto rep = rep_of(delta_presentation(4, 6, i, j, a, b));
          EXPECT_EQ(check_sggi(rep) && check_intersection_condition(rep), check_intersection_condition_decisive(rep));
        }
      }
    }
  }
}

TEST(Sggi, TightnessIffOrderIsTwoPQ) {
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
          const auto rep = rep_of(lambda_presentation(p, q, i, j));
          const auto t = schlafli_type(rep);
          EXPECT_EQ(is_tight(rep), rep.order() == 2 * t.p * t.q);
          if (check_intersection_condition_decisive(rep) && t == SchlafliType{std::size_t(p), std::size_t(q)}) {
            EXPECT_LE(rep.order(), std::size_t(2 * p * q));
          }
        }
      }
    }
  }
}

TEST(Sggi, DualPresentationTags) {
  EXPECT_EQ(std::get<CoxeterTag>(dual_presentation(coxeter_presentation(4, 3)).tag()), (CoxeterTag{3, 4}));
  // the {32, p'} parameter i' = 15 becomes j = -15 = 17 on the {p', 32} side
  const auto dual = dual_presentation(lambda_presentation(32, 48, 15, 1));
  EXPECT_EQ(std::get<LambdaTag>(dual.tag()), (LambdaTag{48, 32, 47, 17}));
  EXPECT_EQ(dual_presentation(delta_presentation(4, 3, 2, 1, 3, 2)).family(), "custom");
}

TEST(Sggi, DualPresentationTagMatchesItsRelators) {
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
          const auto dual = dual_presentation(lambda_presentation(p, q, i, j));
          const LambdaTag t = std::get<LambdaTag>(dual.tag());
          const auto a = rep_of(dual);
          const auto b = rep_of(lambda_presentation(t.p, t.q, t.i, t.j));
          ASSERT_EQ(a.order(), b.order());
          for (const Word& r : b.order() ? lambda_presentation(t.p, t.q, t.i, t.j).relators() : std::vector<Word>{}) {
            EXPECT_EQ(evaluate_word(a, r), kIdentity);
          }
        }
      }
    }
  }
}

TEST(Sggi, DoubleDualIsOriginal) {
  for (const auto& pres : {lambda_presentation(4, 4, -1, 1), delta_presentation(4, 6, 2, 1, 3, 2),
                           delta_presentation(12, 6, 2, 4, 7, 2)}) {
    const auto twice = dual_presentation(dual_presentation(pres));
    EXPECT_EQ(twice.relators(), pres.relators());
    EXPECT_TRUE(polyhedra_isomorphic(rep_of(pres), pres, rep_of(twice), twice));
  }
}

TEST(Sggi, DualRepresentationMatchesDualPresentation) {
  for (const auto& pres : {delta_presentation(4, 6, 2, 1, 3, 2), lambda_presentation(10, 5, 3, 1),
                           coxeter_presentation(3, 5)}) {
    const auto direct = rep_of(dual_presentation(pres));
    const auto swapped = dual_representation(rep_of(pres));
    for (Generator g : kGenerators) {
      EXPECT_TRUE(std::equal(direct.image(g).begin(), direct.image(g).end(), swapped.image(g).begin()));
    }
  }
}

TEST(Sggi, PolyhedraIsomorphic) {
  const auto h1 = delta_presentation(4, 3, 2, -2, -1, 2);
  const auto h2 = delta_presentation(4, 3, 2, 1, 3, 2);
  EXPECT_TRUE(polyhedra_isomorphic(rep_of(h1), h1, rep_of(h1), h1));
  EXPECT_TRUE(polyhedra_isomorphic(rep_of(h1), h1, rep_of(h2), h2));
  const auto d1 = delta_presentation(4, 6, 2, 1, 3, 2);
  const auto d2 = delta_presentation(4, 6, 2, 4, 3, 2);
  EXPECT_FALSE(polyhedra_isomorphic(rep_of(d1), d1, rep_of(d2), d2));
  EXPECT_THROW(polyhedra_isomorphic(rep_of(h1), h1, rep_of(d1), d1), TypeMismatch);
}

TEST(Sggi, CoveringRigidity) {
  // among tight string C-groups of one type, one-way relator satisfaction at equal order is symmetric
  for (auto [p, q] : {std::pair{4, 4}, {6, 6}, {4, 6}, {6, 4}, {8, 8}, {12, 4}}) {
    std::vector<std::pair<Presentation, RegularRepresentation>> tight;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        auto pres = lambda_presentation(p, q, i, j);
        auto rep = rep_of(pres);
        if (rep.order() == std::size_t(2 * p * q) && schlafli_type(rep) == SchlafliType{std::size_t(p), std::size_t(q)} &&
            check_intersection_condition_decisive(rep)) {
          tight.emplace_back(std::move(pres), std::move(rep));
        }
      }
    }
    ASSERT_FALSE(tight.empty());
    for (const auto& [pa, ra] : tight) {
      for (const auto& [pb, rb] : tight) {
        EXPECT_EQ(polyhedra_isomorphic(ra, pa, rb, pb), polyhedra_isomorphic(rb, pb, ra, pa));
      }
    }
  }
}

TEST(Sggi, QuotientCriterion) {
  // an sggi covering a string C-group, injective on <rho0, rho1>, is a string C-group
  std::size_t applied = 0;
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) {
          const auto pres = lambda_presentation(p, q, i, j);
          const auto g = rep_of(pres);
          if (!check_sggi(g)) continue;
          const std::size_t face = distinguished_subgroup(g, 0b011).size();
          const std::size_t q_actual = schlafli_type(g).q;
          for (std::size_t m = 1; m < q_actual; ++m) {
            if (q_actual % m != 0) continue;
            const auto k = rep_of(with_extra(pres, Word::sigma2().power(static_cast<long long>(m))));
            if (!check_sggi(k) || !check_intersection_condition(k)) continue;
            if (distinguished_subgroup(k, 0b011).size() != face) continue;
            ++applied;
            EXPECT_TRUE(check_intersection_condition(g)) << p << "," << q << "," << i << "," << j << " m=" << m;
          }
        }
      }
    }
  }
  EXPECT_GT(applied, 0u);
}

TEST(Sggi, NormalQuotientCriterion) {
  // G / <sigma_k^m> is a string C-group whenever that subgroup is normal, m >= 2
  std::size_t applied = 0;
  for (auto [p, q] : {std::pair{4, 4}, {6, 6}, {4, 6}, {8, 4}, {12, 6}, {6, 3}, {8, 8}}) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < q; ++j) {
        const auto pres = lambda_presentation(p, q, i, j);
        const auto g = rep_of(pres);
        if (!check_intersection_condition_decisive(g)) continue;
        const SchlafliType t = schlafli_type(g);
        for (int which = 0; which < 2; ++which) {
          const std::size_t n_order = which == 0 ? t.p : t.q;
          const Element sigma = which == 0 ? g.sigma1() : g.sigma2();
          const Word sigma_word = which == 0 ? Word::sigma1() : Word::sigma2();
          for (std::size_t m = 2; m < n_order; ++m) {
            if (n_order % m != 0) continue;
            const Subgroup n = subgroup_closure(g, {g.power(sigma, static_cast<long long>(m))});
            if (!is_normal(g, n)) continue;
            const auto k = rep_of(with_extra(pres, sigma_word.power(static_cast<long long>(m))));
            EXPECT_EQ(k.order() * n.size(), g.order());
            ++applied;
            EXPECT_TRUE(check_sggi(k));
            EXPECT_TRUE(check_intersection_condition(k)) << p << "," << q << "," << i << "," << j << " m=" << m;
          }
        }
      }
    }
  }
  EXPECT_GT(applied, 0u);
}

TEST(Sggi, ExtraRelatorsOfTightFamilies) {
  EXPECT_EQ(extra_relators(lambda_presentation(4, 4, 3, 1)).size(), 3u);
  EXPECT_EQ(extra_relators(delta_presentation(4, 3, 2, 1, 3, 2)).size(), 4u);
}
