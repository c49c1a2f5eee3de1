#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "tightpoly/errors.hpp"

namespace tightpoly {

/// One of the three distinguished involutions rho0, rho1, rho2.
enum class Generator : std::uint8_t { r0 = 0, r1 = 1, r2 = 2 };

inline constexpr std::array<Generator, 3> kGenerators{Generator::r0, Generator::r1, Generator::r2};

constexpr int index_of(Generator g) noexcept { return static_cast<int>(g); }

/// rho_i -> rho_{2-i}
constexpr Generator dual_of(Generator g) noexcept { return static_cast<Generator>(2 - index_of(g)); }

constexpr char letter_of(Generator g) noexcept { return static_cast<char>('a' + index_of(g)); }

/// Reduces x into [0, m).
constexpr long long residue(long long x, long long m) noexcept {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

/// A word over the involutory alphabet. Every letter is its own inverse,
/// so the inverse of a word is its reversal.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> letters) : letters_(letters) {}
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}

  /// Parses letters from {a, b, c}; whitespace is skipped.
  static Word parse(std::string_view text) {
    Word w;
    for (char ch : text) {
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (ch < 'a' || ch > 'c') {
        throw InvalidPresentation(std::string("unexpected letter '") + ch + "' (expected a, b or c)");
      }
      w.letters_.push_back(static_cast<Generator>(ch - 'a'));
    }
    return w;
  }

  static Word sigma1() { return Word{Generator::r0, Generator::r1}; }
  static Word sigma2() { return Word{Generator::r1, Generator::r2}; }

  /// sigma1^e, using the shorter of e and e - order when order > 0.
  static Word sigma1_power(long long e, long long order = 0) { return rotation_power(sigma1(), e, order); }
  static Word sigma2_power(long long e, long long order = 0) { return rotation_power(sigma2(), e, order); }

  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Generator operator[](std::size_t k) const { return letters_[k]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const { return Word(std::vector<Generator>(letters_.rbegin(), letters_.rend())); }

  Word power(long long n) const {
    Word base = n < 0 ? inverse() : *this;
    Word out;
    for (long long k = 0; k < (n < 0 ? -n : n); ++k) out.append(base);
    return out;
  }

  Word& append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  Word& push_back(Generator g) {
    letters_.push_back(g);
    return *this;
  }

  friend Word operator*(Word lhs, const Word& rhs) { return lhs.append(rhs); }

  /// Cancels adjacent equal letters (xx = 1).
  Word freely_reduced() const {
    std::vector<Generator> out;
    out.reserve(letters_.size());
    for (Generator g : letters_) {
      if (!out.empty() && out.back() == g) {
        out.pop_back();
      } else {
        out.push_back(g);
      }
    }
    return Word(std::move(out));
  }

  /// Free reduction followed by cancellation across the ends.
  Word cyclically_reduced() const {
    Word w = freely_reduced();
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w.letters_[lo] == w.letters_[hi - 1]) {
      ++lo;
      --hi;
    }
    return Word(std::vector<Generator>(w.letters_.begin() + static_cast<long>(lo),
                                       w.letters_.begin() + static_cast<long>(hi)));
  }

  Word rotated(std::size_t shift) const {
    if (letters_.empty()) return *this;
    shift %= letters_.size();
    std::vector<Generator> out(letters_.begin() + static_cast<long>(shift), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<long>(shift));
    return Word(std::move(out));
  }

  /// Applies rho_i -> rho_{2-i} letterwise.
  Word dualized() const {
    std::vector<Generator> out;
    out.reserve(letters_.size());
    for (Generator g : letters_) out.push_back(dual_of(g));
    return Word(std::move(out));
  }

  /// True if the words agree up to rotation and reversal.
  bool cyclically_equivalent(const Word& other) const {
    if (size() != other.size()) return false;
    if (empty()) return true;
    const Word rev = other.inverse();
    for (std::size_t s = 0; s < size(); ++s) {
      const Word r = rotated(s);
      if (r == other || r == rev) return true;
    }
    return false;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(letters_.size());
    for (Generator g : letters_) s.push_back(letter_of(g));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  static Word rotation_power(const Word& base, long long e, long long order) {
    if (order > 0) {
      e = residue(e, order);
      if (2 * e > order) e -= order;
    }
    return base.power(e);
  }

  std::vector<Generator> letters_;
};

}  // namespace tightpoly
