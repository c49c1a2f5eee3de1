#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tightpoly/errors.hpp"
#include "tightpoly/word.hpp"

namespace tightpoly {

struct CoxeterTag {
  int p = 0;
  int q = 0;
  friend bool operator==(const CoxeterTag&, const CoxeterTag&) = default;
};

/// Quotient of [p,q] by sigma2^-1 sigma1 = sigma1^i sigma2^j.
struct LambdaTag {
  int p = 0;
  int q = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const LambdaTag&, const LambdaTag&) = default;
};

/// Quotient of [p,q] by sigma2^-1 sigma1 = sigma1^i rho1 sigma2^j and sigma2^-2 sigma1 = sigma1^a sigma2^b.
struct DeltaTag {
  int p = 0;
  int q = 0;
  int i = 0;
  int j = 0;
  int a = 0;
  int b = 0;
  friend bool operator==(const DeltaTag&, const DeltaTag&) = default;
};

struct CustomTag {
  friend bool operator==(const CustomTag&, const CustomTag&) = default;
};

using FamilyTag = std::variant<CoxeterTag, LambdaTag, DeltaTag, CustomTag>;

inline std::string family_name(const FamilyTag& tag) {
  return std::visit(
      [](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CoxeterTag>) return "coxeter";
        if constexpr (std::is_same_v<T, LambdaTag>) return "lambda";
        if constexpr (std::is_same_v<T, DeltaTag>) return "delta";
        return "custom";
      },
      tag);
}

/// The integers carried by a tag, in declaration order.
inline std::vector<long long> tag_parameters(const FamilyTag& tag) {
  return std::visit(
      [](const auto& t) -> std::vector<long long> {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, CoxeterTag>) return {t.p, t.q};
        if constexpr (std::is_same_v<T, LambdaTag>) return {t.p, t.q, t.i, t.j};
        if constexpr (std::is_same_v<T, DeltaTag>) return {t.p, t.q, t.i, t.j, t.a, t.b};
        return {};
      },
      tag);
}

namespace detail {

inline const std::vector<Word>& mandatory_relators() {
  static const std::vector<Word> words{
      Word{Generator::r0, Generator::r0},
      Word{Generator::r1, Generator::r1},
      Word{Generator::r2, Generator::r2},
      Word{Generator::r0, Generator::r2, Generator::r0, Generator::r2},
  };
  return words;
}

}  // namespace detail

/// A finitely presented group on rho0, rho1, rho2 with a family tag.
class Presentation {
 public:
  Presentation(FamilyTag tag, std::vector<Word> relators) : tag_(tag), relators_(std::move(relators)) {
    for (const Word& required : detail::mandatory_relators()) {
      const bool present = std::any_of(relators_.begin(), relators_.end(),
                                       [&](const Word& r) { return r.cyclically_equivalent(required); });
      if (!present) {
        throw InvalidPresentation("missing mandatory relator " + required.to_string());
      }
    }
  }

  static Presentation custom(std::vector<Word> relators) { return Presentation(CustomTag{}, std::move(relators)); }

  /// One relator per line over {a, b, c}; blank lines and '#' comments are ignored.
  static Presentation parse(std::string_view text) {
    std::vector<Word> relators;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      Word w = Word::parse(line);
      if (!w.empty()) relators.push_back(std::move(w));
    }
    return custom(std::move(relators));
  }

  const FamilyTag& tag() const noexcept { return tag_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::string family() const { return family_name(tag_); }
  std::vector<long long> parameters() const { return tag_parameters(tag_); }

  /// max(65536, 64pq) for tagged presentations, 65536 otherwise.
  std::size_t default_max_cosets() const {
    const auto params = parameters();
    std::size_t bound = 65536;
    if (params.size() >= 2) {
      bound = std::max<std::size_t>(bound, static_cast<std::size_t>(64 * params[0] * params[1]));
    }
    return bound;
  }

  std::string to_text() const {
    std::string out;
    for (const Word& r : relators_) {
      out += r.to_string();
      out += '\n';
    }
    return out;
  }

 private:
  FamilyTag tag_;
  std::vector<Word> relators_;
};

}  // namespace tightpoly
