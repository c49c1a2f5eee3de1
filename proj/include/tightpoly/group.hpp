#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tightpoly/word.hpp"

namespace tightpoly {

using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

/// A finite group given by the right-regular action of rho0, rho1, rho2 on
/// its own elements. Element 0 is the identity; element x is reached from 0
/// along a breadth-first spanning tree, which also fixes a normal-form word.
class RegularRepresentation {
 public:
  explicit RegularRepresentation(std::array<std::vector<Element>, 3> images) : images_(std::move(images)) {
    const std::size_t n = images_[0].size();
    parent_.assign(n, kIdentity);
    via_.assign(n, Generator::r0);
    depth_.assign(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<Element> queue{kIdentity};
    seen[kIdentity] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (Generator g : kGenerators) {
        const Element y = act(x, g);
        if (!seen[y]) {
          seen[y] = 1;
          parent_[y] = x;
          via_[y] = g;
          depth_[y] = depth_[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }

  std::size_t order() const noexcept { return images_[0].size(); }

  /// x * g
  Element act(Element x, Generator g) const noexcept { return images_[index_of(g)][x]; }

  Element generator(Generator g) const noexcept { return act(kIdentity, g); }

  std::span<const Element> image(Generator g) const noexcept { return images_[index_of(g)]; }

  /// x * w
  Element act(Element x, const Word& w) const noexcept {
    for (Generator g : w) x = act(x, g);
    return x;
  }

  /// Normal-form word of x (product of generators along the spanning tree).
  Word word_of(Element x) const {
    std::vector<Generator> letters(depth_[x]);
    for (std::size_t k = letters.size(); k-- > 0;) {
      letters[k] = via_[x];
      x = parent_[x];
    }
    return Word(std::move(letters));
  }

  Element multiply(Element x, Element y) const {
    // Letters of y are collected root-first, then applied to x.
    thread_local std::vector<Generator> path;
    path.clear();
    while (y != kIdentity) {
      path.push_back(via_[y]);
      y = parent_[y];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) x = act(x, *it);
    return x;
  }

  Element inverse(Element x) const noexcept {
    Element y = kIdentity;
    while (x != kIdentity) {
      y = act(y, via_[x]);
      x = parent_[x];
    }
    return y;
  }

  Element conjugate(Element x, Element by) const { return multiply(multiply(inverse(by), x), by); }

  Element power(Element x, long long e) const {
    if (e < 0) {
      x = inverse(x);
      e = -e;
    }
    Element out = kIdentity;
    for (long long k = 0; k < e; ++k) out = multiply(out, x);
    return out;
  }

  Element sigma1() const noexcept { return act(generator(Generator::r0), Generator::r1); }
  Element sigma2() const noexcept { return act(generator(Generator::r1), Generator::r2); }

 private:
  std::array<std::vector<Element>, 3> images_;
  std::vector<Element> parent_;
  std::vector<Generator> via_;
  std::vector<std::uint32_t> depth_;
};

/// A subgroup given by its (sorted) element set.
struct Subgroup {
  std::vector<Element> elements;
  std::vector<Word> generating_words;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(Element x) const { return std::binary_search(elements.begin(), elements.end(), x); }
  bool is_trivial() const noexcept { return elements.size() == 1; }
  bool subset_of(const Subgroup& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Image of the identity under right multiplication by w.
inline Element evaluate_word(const RegularRepresentation& rep, const Word& w) { return rep.act(kIdentity, w); }

inline std::size_t element_order(const RegularRepresentation& rep, Element g) {
  std::size_t m = 1;
  for (Element x = g; x != kIdentity; x = rep.multiply(x, g)) ++m;
  return m;
}

inline Subgroup subgroup_closure(const RegularRepresentation& rep, std::span<const Element> gens) {
  std::vector<char> member(rep.order(), 0);
  std::vector<Element> elements{kIdentity};
  member[kIdentity] = 1;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (Element s : gens) {
      const Element y = rep.multiply(elements[head], s);
      if (!member[y]) {
        member[y] = 1;
        elements.push_back(y);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  Subgroup h{std::move(elements), {}};
  for (Element s : gens) h.generating_words.push_back(rep.word_of(s));
  return h;
}

inline Subgroup subgroup_closure(const RegularRepresentation& rep, std::initializer_list<Element> gens) {
  return subgroup_closure(rep, std::span<const Element>(gens.begin(), gens.size()));
}

/// Subgroup generated by the elements that the given words evaluate to.
inline Subgroup subgroup_from_words(const RegularRepresentation& rep, const std::vector<Word>& words) {
  std::vector<Element> gens;
  for (const Word& w : words) gens.push_back(evaluate_word(rep, w));
  Subgroup h = subgroup_closure(rep, gens);
  h.generating_words = words;
  return h;
}

inline std::size_t subgroup_index(const RegularRepresentation& rep, const Subgroup& h) {
  return rep.order() / h.size();
}

/// Closed under conjugation by the three generators (hence by the whole group).
inline bool is_normal(const RegularRepresentation& rep, const Subgroup& h) {
  for (Generator g : kGenerators) {
    const Element x = rep.generator(g);
    for (Element e : h.elements) {
      if (!h.contains(rep.multiply(rep.multiply(x, e), x))) return false;
    }
  }
  return true;
}

/// Largest subgroup of h normal in the whole group. Intersects h with its
/// conjugates under the generators until the set stops shrinking.
inline Subgroup subgroup_core(const RegularRepresentation& rep, const Subgroup& h) {
  std::vector<Element> core = h.elements;
  std::vector<char> member(rep.order(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Generator g : kGenerators) {
      const Element x = rep.generator(g);
      std::fill(member.begin(), member.end(), 0);
      for (Element e : core) member[e] = 1;
      std::vector<Element> kept;
      kept.reserve(core.size());
      // e survives iff x e x is still in the current set, i.e. e lies in x K x.
      for (Element e : core) {
        if (member[rep.multiply(rep.multiply(x, e), x)]) kept.push_back(e);
      }
      if (kept.size() != core.size()) {
        core = std::move(kept);
        changed = true;
      }
    }
  }
  return Subgroup{std::move(core), {}};
}

}  // namespace tightpoly
