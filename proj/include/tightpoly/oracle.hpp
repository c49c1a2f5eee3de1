#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tightpoly/classify.hpp"
#include "tightpoly/coset_enumeration.hpp"
#include "tightpoly/errors.hpp"
#include "tightpoly/families.hpp"
#include "tightpoly/sggi.hpp"

namespace tightpoly {

struct SweepOptions {
  std::size_t budget = 1'000'000;  ///< max enumerations for one grid
  std::size_t bound_factor = 64;   ///< coset bound is bound_factor * p * q
  std::size_t retry_factor = 4;
};

struct SweepReport {
  SchlafliType type;
  std::vector<OrientableParams> found_orientable;
  std::vector<NonOrientableParams> found_nonorientable;
  std::vector<std::string> mismatches;
  std::size_t enumerations_run = 0;
  std::chrono::duration<double> elapsed{0};
  bool skipped = false;
  std::string skip_reason;
  std::size_t closed_orientable = 0;
  std::size_t closed_nonorientable = 0;
};

/// A grid point whose group is a tight string C-group of the wanted type.
struct Survivor {
  Presentation presentation;
  RegularRepresentation rep;
  bool orientable = false;
};

template <typename Params>
struct Found {
  Params params;
  Survivor survivor;
};

namespace detail {

/// Enumerates pres and keeps it when it is a tight string C-group of type
/// (p, q). Overflow at bound and at retry_factor * bound counts as "not tight".
inline std::optional<Survivor> try_candidate(Presentation pres, std::size_t p, std::size_t q,
                                             const SweepOptions& opt, std::size_t& runs) {
  const std::size_t bound = opt.bound_factor * p * q;
  std::optional<RegularRepresentation> rep;
  try {
    ++runs;
    rep.emplace(enumerate_cosets(pres, bound));
  } catch (const BoundExceeded&) {
    try {
      ++runs;
      rep.emplace(enumerate_cosets(pres, bound * opt.retry_factor));
    } catch (const BoundExceeded&) {
      return std::nullopt;
    }
  }
  if (rep->order() != 2 * p * q) return std::nullopt;
  if (!(schlafli_type(*rep) == SchlafliType{p, q})) return std::nullopt;
  if (!check_sggi(*rep) || !check_intersection_condition(*rep)) return std::nullopt;
  const bool orientable = orientability(*rep);
  return Survivor{std::move(pres), std::move(*rep), orientable};
}

inline void require_budget(std::size_t cost, const SweepOptions& opt, const std::string& what) {
  if (cost > opt.budget) {
    throw BudgetExceeded(what + " needs " + std::to_string(cost) + " enumerations, budget is " +
                         std::to_string(opt.budget));
  }
}

template <typename Params>
void add_class(std::vector<Found<Params>>& classes, Params params, Survivor s) {
  for (const auto& c : classes) {
    if (polyhedra_isomorphic(c.survivor.rep, c.survivor.presentation, s.rep, s.presentation)) return;
  }
  classes.push_back({std::move(params), std::move(s)});
}

}  // namespace detail

/// Every Lambda(p,q)_{i,j} grid point that is a tight string C-group of type {p,q}.
inline std::vector<Found<OrientableParams>> lambda_survivors(int p, int q, const SweepOptions& opt,
                                                             std::size_t& runs) {
  detail::require_type(p, q);
  std::vector<Found<OrientableParams>> out;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      auto s = detail::try_candidate(lambda_presentation(p, q, i, j), p, q, opt, runs);
      if (s) out.push_back({OrientableParams::make(p, q, i, j), std::move(*s)});
    }
  }
  return out;
}

/// Every Delta(p,q)_{(i,j,a,b)} grid point that is a tight string C-group of type {p,q}.
inline std::vector<Found<NonOrientableParams>> delta_survivors(int p, int q, const SweepOptions& opt,
                                                               std::size_t& runs) {
  detail::require_type(p, q);
  std::vector<Found<NonOrientableParams>> out;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      for (int a = 0; a < p; ++a) {
        for (int b = 0; b < q; ++b) {
          auto s = detail::try_candidate(delta_presentation(p, q, i, j, a, b), p, q, opt, runs);
          if (s) out.push_back({NonOrientableParams{p, q, DeltaTag{p, q, i, j, a, b}, false}, std::move(*s)});
        }
      }
    }
  }
  return out;
}

/// Turns Delta(q,p) survivors into dual-form candidates of type {p,q}.
inline std::vector<Found<NonOrientableParams>> dualize(const std::vector<Found<NonOrientableParams>>& survivors) {
  std::vector<Found<NonOrientableParams>> out;
  for (const auto& f : survivors) {
    NonOrientableParams n{f.params.q, f.params.p, f.params.delta, true};
    out.push_back({n, Survivor{dual_presentation(f.survivor.presentation), dual_representation(f.survivor.rep),
                               f.survivor.orientable}});
  }
  return out;
}

inline std::vector<Found<OrientableParams>> orientable_classes(int p, int q, const SweepOptions& opt,
                                                               std::size_t& runs) {
  detail::require_budget(static_cast<std::size_t>(p) * q, opt, "Lambda sweep");
  std::vector<Found<OrientableParams>> classes;
  for (auto& f : lambda_survivors(p, q, opt, runs)) {
    if (f.survivor.orientable) detail::add_class(classes, f.params, std::move(f.survivor));
  }
  return classes;
}

inline std::vector<Found<NonOrientableParams>> nonorientable_classes(
    const std::vector<Found<NonOrientableParams>>& primal, const std::vector<Found<NonOrientableParams>>& dual) {
  std::vector<Found<NonOrientableParams>> classes;
  for (const auto* side : {&primal, &dual}) {
    for (const auto& f : *side) {
      if (!f.survivor.orientable) detail::add_class(classes, f.params, f.survivor);
    }
  }
  return classes;
}

inline std::vector<OrientableParams> brute_force_orientable(int p, int q, const SweepOptions& opt = {}) {
  std::size_t runs = 0;
  std::vector<OrientableParams> out;
  for (const auto& c : orientable_classes(p, q, opt, runs)) out.push_back(c.params);
  return out;
}

inline std::vector<NonOrientableParams> brute_force_nonorientable(int p, int q, const SweepOptions& opt = {}) {
  const std::size_t grid = static_cast<std::size_t>(p) * q * p * q;
  detail::require_budget(grid, opt, "Delta sweep");
  std::size_t runs = 0;
  const auto primal = delta_survivors(p, q, opt, runs);
  const auto dual = dualize(p == q ? primal : delta_survivors(q, p, opt, runs));
  std::vector<NonOrientableParams> out;
  for (const auto& c : nonorientable_classes(primal, dual)) out.push_back(c.params);
  return out;
}

namespace detail {

template <typename Params, typename Closed>
void compare_classes(const std::vector<Found<Params>>& brute, const std::vector<Closed>& closed,
                     std::vector<std::string>& mismatches) {
  std::vector<bool> matched(brute.size(), false);
  for (const Closed& c : closed) {
    bool hit = false;
    for (std::size_t b = 0; b < brute.size(); ++b) {
      if (polyhedra_isomorphic(brute[b].survivor.rep, brute[b].survivor.presentation, c.rep, c.presentation)) {
        if (matched[b]) mismatches.push_back("two closed-form records match the sweep class " +
                                             describe(brute[b].params));
        matched[b] = true;
        hit = true;
      }
    }
    if (!hit) mismatches.push_back("closed-form " + c.label() + " not found by the sweep");
  }
  for (std::size_t b = 0; b < brute.size(); ++b) {
    if (!matched[b]) mismatches.push_back("sweep class " + describe(brute[b].params) + " missing from closed form");
  }
}

}  // namespace detail

/// Compares closed-form and brute-force classes for one type. delta_cache
/// holds Delta survivors by type so that the dual side of {p,q} reuses the
/// primal sweep of {q,p}.
inline SweepReport verify_type(int p, int q, const SweepOptions& opt,
                               std::map<std::pair<int, int>, std::vector<Found<NonOrientableParams>>>& delta_cache) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.type = {static_cast<std::size_t>(p), static_cast<std::size_t>(q)};
  std::vector<ClassRecord> closed;
  try {
    closed = classify_all(p, q);
  } catch (const Error& e) {
    report.mismatches.push_back(std::string("closed form failed: ") + e.what());
  }
  std::vector<ClassRecord> closed_or;
  std::vector<ClassRecord> closed_non;
  for (auto& r : closed) (r.orientable() ? closed_or : closed_non).push_back(std::move(r));
  report.closed_orientable = closed_or.size();
  report.closed_nonorientable = closed_non.size();

  const auto ocls = orientable_classes(p, q, opt, report.enumerations_run);
  for (const auto& c : ocls) report.found_orientable.push_back(c.params);
  detail::compare_classes(ocls, closed_or, report.mismatches);

  const std::size_t grid = static_cast<std::size_t>(p) * q * p * q;
  if (grid > opt.budget) {
    report.skipped = true;
    report.skip_reason = "Delta sweep of " + std::to_string(grid) + " points exceeds budget " +
                         std::to_string(opt.budget);
  } else {
    auto survivors = [&](int x, int y) -> const std::vector<Found<NonOrientableParams>>& {
      auto it = delta_cache.find({x, y});
      if (it == delta_cache.end()) {
        it = delta_cache.emplace(std::pair(x, y), delta_survivors(x, y, opt, report.enumerations_run)).first;
      }
      return it->second;
    };
    const auto& primal = survivors(p, q);
    const auto dual = dualize(survivors(q, p));
    const auto ncls = nonorientable_classes(primal, dual);
    for (const auto& c : ncls) report.found_nonorientable.push_back(c.params);
    detail::compare_classes(ncls, closed_non, report.mismatches);
  }

  const bool exists = tight_existence(p, q).exists;
  if (exists != !closed.empty()) report.mismatches.push_back("existence verdict disagrees with the closed form");
  if (!report.skipped) {
    const bool brute_nonempty = !report.found_orientable.empty() || !report.found_nonorientable.empty();
    if (exists != brute_nonempty) report.mismatches.push_back("existence verdict disagrees with the sweep");
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

/// One report per type with 2 <= p <= max_p and 2 <= q <= max_q, in (p, q) order.
inline std::vector<SweepReport> verify_range(int max_p, int max_q, const SweepOptions& opt = {}) {
  std::map<std::pair<int, int>, std::vector<Found<NonOrientableParams>>> cache;
  std::vector<SweepReport> out;
  for (int p = 2; p <= max_p; ++p) {
    for (int q = 2; q <= max_q; ++q) {
      out.push_back(verify_type(p, q, opt, cache));
      // drop entries no later type can ask for
      for (auto it = cache.begin(); it != cache.end();) {
        const auto [x, y] = it->first;
        const bool as_primal = std::pair(x, y) > std::pair(p, q) && x <= max_p && y <= max_q;
        const bool as_dual = std::pair(y, x) > std::pair(p, q) && y <= max_p && x <= max_q;
        const bool needed_later = as_primal || as_dual;
        it = needed_later ? std::next(it) : cache.erase(it);
      }
    }
  }
  return out;
}

}  // namespace tightpoly
