#pragma once

#include <string>

#include "tightpoly/presentation.hpp"

namespace tightpoly {

namespace detail {

inline void require_type(int p, int q) {
  if (p < 2 || q < 2) {
    throw InvalidType("Schläfli parameters must satisfy p, q >= 2 (got " + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
  }
}

inline std::vector<Word> coxeter_relators(int p, int q) {
  std::vector<Word> relators(detail::mandatory_relators());
  relators.push_back(Word::sigma1().power(p));
  relators.push_back(Word::sigma2().power(q));
  return relators;
}

}  // namespace detail

/// The string Coxeter group [p, q].
inline Presentation coxeter_presentation(int p, int q) {
  detail::require_type(p, q);
  return Presentation(CoxeterTag{p, q}, detail::coxeter_relators(p, q));
}

/// [p, q] with sigma2^-1 sigma1 = sigma1^i sigma2^j; i, j are reduced mod p, q.
inline Presentation lambda_presentation(int p, int q, long long i, long long j) {
  detail::require_type(p, q);
  const auto ri = static_cast<int>(residue(i, p));
  const auto rj = static_cast<int>(residue(j, q));
  std::vector<Word> relators = detail::coxeter_relators(p, q);
  Word extra = Word::sigma2_power(-1, q) * Word::sigma1() * Word::sigma2_power(-rj, q) * Word::sigma1_power(-ri, p);
  relators.push_back(extra.freely_reduced());
  return Presentation(LambdaTag{p, q, ri, rj}, std::move(relators));
}

/// [p, q] with sigma2^-1 sigma1 = sigma1^i rho1 sigma2^j and
/// sigma2^-2 sigma1 = sigma1^a sigma2^b; i, a reduced mod p and j, b mod q.
inline Presentation delta_presentation(int p, int q, long long i, long long j, long long a, long long b) {
  detail::require_type(p, q);
  const auto ri = static_cast<int>(residue(i, p));
  const auto rj = static_cast<int>(residue(j, q));
  const auto ra = static_cast<int>(residue(a, p));
  const auto rb = static_cast<int>(residue(b, q));
  std::vector<Word> relators = detail::coxeter_relators(p, q);
  Word first = Word::sigma2_power(-1, q) * Word::sigma1() * Word::sigma2_power(-rj, q) * Word{Generator::r1} *
               Word::sigma1_power(-ri, p);
  Word second = Word::sigma2_power(-2, q) * Word::sigma1() * Word::sigma2_power(-rb, q) * Word::sigma1_power(-ra, p);
  relators.push_back(first.freely_reduced());
  relators.push_back(second.freely_reduced());
  return Presentation(DeltaTag{p, q, ri, rj, ra, rb}, std::move(relators));
}

}  // namespace tightpoly
