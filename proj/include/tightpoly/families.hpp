#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "tightpoly/errors.hpp"
#include "tightpoly/number_theory.hpp"
#include "tightpoly/presentations.hpp"
#include "tightpoly/sggi.hpp"

namespace tightpoly {

/// Canonical parameters of a Lambda(p,q)_{i,j} group; k = 1 - i (mod p).
struct OrientableParams {
  int p = 0;
  int q = 0;
  int i = 0;
  int j = 0;
  int k = 0;

  static OrientableParams make(int p, int q, long long i, long long j) {
    const auto ri = static_cast<int>(residue(i, p));
    return {p, q, ri, static_cast<int>(residue(j, q)), static_cast<int>(residue(1 - ri, p))};
  }
  Presentation presentation() const { return lambda_presentation(p, q, i, j); }
  LambdaTag tag() const { return {p, q, i, j}; }

  friend bool operator==(const OrientableParams&, const OrientableParams&) = default;
  friend auto operator<=>(const OrientableParams&, const OrientableParams&) = default;
};

/// A tight non-orientable polyhedron of type {p,q}. Its group is the Delta
/// group `delta`, or for dual-form records the dual of `delta`, in which case
/// delta is of type {q,p}.
struct NonOrientableParams {
  int p = 0;
  int q = 0;
  DeltaTag delta;
  bool is_dual_form = false;

  Presentation presentation() const {
    Presentation base = delta_presentation(delta.p, delta.q, delta.i, delta.j, delta.a, delta.b);
    return is_dual_form ? dual_presentation(base) : base;
  }

  friend bool operator==(const NonOrientableParams&, const NonOrientableParams&) = default;
  friend auto operator<=>(const NonOrientableParams& x, const NonOrientableParams& y) {
    auto key = [](const NonOrientableParams& r) {
      return std::tuple(r.p, r.q, r.is_dual_form, r.delta.i, r.delta.j, r.delta.a, r.delta.b);
    };
    return key(x) <=> key(y);
  }
};

struct EdgeSimpleSolution {
  int p = 0;
  int k = 0;
  int q = 0;
  friend bool operator==(const EdgeSimpleSolution&, const EdgeSimpleSolution&) = default;
};

struct ExistenceVerdict {
  bool exists = false;
  std::vector<int> matched_cases;  ///< subset of {1,...,5}
  std::size_t orientable_count = 0;
  std::size_t nonorientable_count = 0;
};

/// Order of sigma2 for an edge-simple tight polyhedron with p-gonal faces in
/// which sigma2 sends vertex 0 to vertex k: the least m >= 1 whose vertex-2
/// image, (k-2)(m-1)/2 for odd m and k + (k-2)(m-2)/2 for even m, is 2 (mod p).
inline int q_from_p_k(int p, int k) {
  if (p < 4 || p % 2 != 0) throw InvalidK("p must be even and at least 4");
  k = static_cast<int>(residue(k, p));
  const long long half = p / 2;
  if (k % 2 != 0 || residue(static_cast<long long>(k / 2) * (k / 2) - 1, half) != 0) {
    throw InvalidK("k = " + std::to_string(k) + " is not an even solution of (k/2)^2 = 1 mod " + std::to_string(half));
  }
  for (long long m = 1; m <= 4LL * p; ++m) {
    const long long image = m % 2 == 1 ? (k - 2) * (m - 1) / 2 : k + (k - 2) * (m - 2) / 2;
    if (residue(image - 2, p) == 0) return static_cast<int>(m);
  }
  throw InvalidK("no finite order for p = " + std::to_string(p) + ", k = " + std::to_string(k));
}

/// Every (k, q) for which an edge-simple tight orientably regular polyhedron
/// of type {p, q} exists, plus the {p, 2} case (k = 2). Empty unless p is even and >= 4.
inline std::vector<EdgeSimpleSolution> edge_simple_solutions(int p) {
  std::vector<EdgeSimpleSolution> out;
  if (p < 4 || p % 2 != 0) return out;
  for (long long x : square_roots_of_unity(p / 2)) {
    const int k = static_cast<int>(residue(2 * x, p));
    const int q = q_from_p_k(p, k);
    if (q == 2 || (q >= 3 && q < p)) out.push_back({p, k, q});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
  return out;
}

/// All (i, j) with Lambda(p,q)_{i,j} the group of a tight orientably regular
/// polyhedron of type {p, q}, in canonical residues and sorted.
///
/// The face side contributes i = 1 - k from edge-simple polyhedra of type
/// {p, q'} with q' | q; the vertex side contributes j = k - 1 from the duals,
/// edge-simple of type {q, p'} with p' | p. A pair is kept when p' | i + 1
/// and q' | j - 1.
inline std::vector<OrientableParams> classify_orientable(int p, int q) {
  detail::require_type(p, q);
  if (p == 2 || q == 2) return {OrientableParams::make(p, q, -1, 1)};

  struct Side {
    long long value;
    int modulus;
  };
  std::vector<Side> face_side;
  if (q % 2 == 0) face_side.push_back({p - 1, 2});
  for (const auto& s : edge_simple_solutions(p)) {
    if (s.q >= 3 && q % s.q == 0) face_side.push_back({residue(1 - s.k, p), s.q});
  }
  std::vector<Side> vertex_side;
  if (p % 2 == 0) vertex_side.push_back({1, 2});
  for (const auto& s : edge_simple_solutions(q)) {
    if (s.q >= 3 && p % s.q == 0) vertex_side.push_back({residue(s.k - 1, q), s.q});
  }

  std::set<OrientableParams> found;
  for (const Side& f : face_side) {
    for (const Side& v : vertex_side) {
      if ((f.value + 1) % v.modulus == 0 && residue(v.value - 1, f.modulus) == 0) {
        found.insert(OrientableParams::make(p, q, f.value, v.value));
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace detail {

/// Delta(p,q) parameters of tight non-orientable polyhedra of type {p,q}
/// whose group satisfies the Delta relations directly.
inline std::vector<DeltaTag> delta_parameters(int p, int q) {
  std::vector<DeltaTag> out;
  if (p % 4 != 0 || (p / 4) % 2 == 0) return out;
  const int r = p / 4;
  const int i = r % 4 == 3 ? r - 1 : 3 * r - 1;
  const int a = 1 + p / 2;
  const int b = static_cast<int>(residue(2, q));
  std::vector<int> js;
  if (p == 4) {
    if (q % 3 != 0) return out;
    js.push_back(static_cast<int>(residue(1, q)));
    if (q % 2 == 0) js.push_back(1 + q / 2);
  } else {
    if (q % 6 != 0 || (q / 6) % 2 == 0) return out;
    js.push_back(1 + q / 2);
  }
  for (int j : js) out.push_back({p, q, i, j, a, b});
  return out;
}

}  // namespace detail

/// Tight non-orientably regular polyhedra of type {p,q}: Delta(p,q) records,
/// then dual-form records carrying Delta(q,p) parameters.
inline std::vector<NonOrientableParams> classify_nonorientable(int p, int q) {
  detail::require_type(p, q);
  std::vector<NonOrientableParams> out;
  for (const DeltaTag& d : detail::delta_parameters(p, q)) out.push_back({p, q, d, false});
  for (const DeltaTag& d : detail::delta_parameters(q, p)) out.push_back({p, q, d, true});
  return out;
}

/// Which of the five existence clauses hold for {p, q}.
inline std::vector<int> existence_cases(int p, int q) {
  std::vector<int> cases;
  const bool p_even = p % 2 == 0;
  const bool q_even = q % 2 == 0;
  if (p_even && q_even) cases.push_back(1);
  if (!p_even && q_even && (2 * p) % q == 0) cases.push_back(2);
  if (!q_even && p_even && (2 * q) % p == 0) cases.push_back(3);
  if (p == 4 && !q_even && q % 3 == 0) cases.push_back(4);
  if (q == 4 && !p_even && p % 3 == 0) cases.push_back(5);
  return cases;
}

inline ExistenceVerdict tight_existence(int p, int q) {
  ExistenceVerdict verdict;
  verdict.matched_cases = existence_cases(p, q);
  verdict.exists = !verdict.matched_cases.empty();
  verdict.orientable_count = classify_orientable(p, q).size();
  verdict.nonorientable_count = classify_nonorientable(p, q).size();
  return verdict;
}

}  // namespace tightpoly
