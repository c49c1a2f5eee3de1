#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tightpoly/errors.hpp"
#include "tightpoly/group.hpp"
#include "tightpoly/presentation.hpp"

namespace tightpoly {

enum class EnumerationStrategy {
  hlt,     ///< relator tracing with scan-and-fill, lookahead when full
  felsch,  ///< first-undefined definitions with full deduction processing
};

struct EnumerationOptions {
  std::size_t max_cosets = 65536;
  EnumerationStrategy strategy = EnumerationStrategy::hlt;
};

namespace detail {

/// Coset table for the trivial subgroup of a group generated by three
/// involutions. Columns are involutions, so defining a^x = b also sets b^x = a.
class CosetTable {
 public:
  using Coset = std::int32_t;
  static constexpr Coset kNone = -1;

  CosetTable(const std::vector<Word>& relators, std::size_t max_cosets)
      : max_(std::max<std::size_t>(max_cosets, 1)), slot_cap_(std::max<std::size_t>(2 * max_, max_ + 1024)) {
    for (const Word& r : relators) {
      Word w = r.cyclically_reduced();
      // xx is implied by the involutive table.
      if (w.empty() || (w.size() == 2 && w[0] == w[1])) continue;
      std::vector<std::uint8_t> letters;
      for (Generator g : w) letters.push_back(static_cast<std::uint8_t>(index_of(g)));
      if (std::find(relators_.begin(), relators_.end(), letters) == relators_.end()) relators_.push_back(letters);
    }
    std::stable_sort(relators_.begin(), relators_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    new_coset();
  }

  void run(EnumerationStrategy strategy) {
    if (strategy == EnumerationStrategy::hlt) {
      run_hlt();
    } else {
      run_felsch();
    }
    close_relators();
  }

  RegularRepresentation to_representation() const {
    // Breadth-first renumbering from coset 0 over generators in order.
    std::vector<Coset> number(table_.size(), kNone);
    std::vector<Coset> order{0};
    number[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (int x = 0; x < 3; ++x) {
        const Coset d = table_[static_cast<std::size_t>(order[head])][x];
        if (number[static_cast<std::size_t>(d)] == kNone) {
          number[static_cast<std::size_t>(d)] = static_cast<Coset>(order.size());
          order.push_back(d);
        }
      }
    }
    std::array<std::vector<Element>, 3> images;
    for (int x = 0; x < 3; ++x) {
      images[x].resize(order.size());
      for (std::size_t k = 0; k < order.size(); ++k) {
        images[x][k] = static_cast<Element>(number[static_cast<std::size_t>(table_[static_cast<std::size_t>(order[k])][x])]);
      }
    }
    return RegularRepresentation(std::move(images));
  }

  std::size_t live() const noexcept { return live_; }

 private:
  bool is_live(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  Coset& entry(Coset c, int x) { return table_[static_cast<std::size_t>(c)][x]; }

  Coset new_coset() {
    const auto c = static_cast<Coset>(table_.size());
    table_.push_back({kNone, kNone, kNone});
    parent_.push_back(c);
    next_.push_back(kNone);
    prev_.push_back(last_);
    if (last_ != kNone) next_[static_cast<std::size_t>(last_)] = c;
    last_ = c;
    ++live_;
    return c;
  }

  /// False when the table is full or needs compaction.
  bool define(Coset a, int x) {
    if (live_ >= max_ || table_.size() >= slot_cap_) return false;
    const Coset b = new_coset();
    entry(a, x) = b;
    entry(b, x) = a;
    deductions_.push_back({a, x});
    return true;
  }

  Coset rep(Coset c) {
    Coset root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const Coset up = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = up;
    }
    return root;
  }

  void merge(Coset k, Coset l) {
    const Coset phi = rep(k);
    const Coset psi = rep(l);
    if (phi == psi) return;
    const Coset mu = std::min(phi, psi);
    const Coset nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    const Coset before = prev_[static_cast<std::size_t>(nu)];
    const Coset after = next_[static_cast<std::size_t>(nu)];
    if (before != kNone) next_[static_cast<std::size_t>(before)] = after;
    if (after != kNone) {
      prev_[static_cast<std::size_t>(after)] = before;
    } else {
      last_ = before;
    }
    --live_;
    queue_.push_back(nu);
  }

  void coincidence(Coset a, Coset b) {
    merge(a, b);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Coset c = queue_[head];
      for (int x = 0; x < 3; ++x) {
        const Coset d = entry(c, x);
        if (d == kNone) continue;
        entry(d, x) = kNone;
        const Coset mu = rep(c);
        const Coset nu = rep(d);
        if (entry(mu, x) != kNone) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, x) != kNone) {
          merge(mu, entry(nu, x));
        } else {
          entry(mu, x) = nu;
          entry(nu, x) = mu;
          deductions_.push_back({mu, x});
        }
      }
    }
    queue_.clear();
  }

  /// Traces w from a in both directions; fills gaps when allowed.
  /// Returns false only when a definition was refused.
  bool scan(Coset a, const std::vector<std::uint8_t>& w, bool fill) {
    Coset f = a;
    Coset b = a;
    long i = 0;
    long j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != kNone) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != a) coincidence(f, a);
        return true;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)]) != kNone) {
        b = entry(b, w[static_cast<std::size_t>(j)]);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        const int x = w[static_cast<std::size_t>(i)];
        entry(f, x) = b;
        entry(b, x) = f;
        deductions_.push_back({f, x});
        return true;
      }
      if (!fill) return true;
      if (!define(f, w[static_cast<std::size_t>(i)])) return false;
    }
  }

  Coset next_live(Coset c) const {
    Coset n = next_[static_cast<std::size_t>(c)];
    while (n != kNone && parent_[static_cast<std::size_t>(n)] != n) n = next_[static_cast<std::size_t>(n)];
    return n;
  }

  /// c itself if live, else the first live coset after it.
  Coset live_from(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c ? c : next_live(c); }

  void lookahead() {
    for (Coset c = 0; c != kNone; c = next_live(c)) {
      for (const auto& r : relators_) {
        scan(c, r, false);
        if (!is_live(c)) break;
      }
    }
  }

  /// Renumbers live cosets densely in list order; returns the image of `keep`.
  Coset compact(Coset keep) {
    keep = live_from(keep);
    std::vector<Coset> number(table_.size(), kNone);
    std::vector<Coset> order;
    order.reserve(live_);
    for (Coset c = 0; c != kNone; c = next_[static_cast<std::size_t>(c)]) {
      number[static_cast<std::size_t>(c)] = static_cast<Coset>(order.size());
      order.push_back(c);
    }
    std::vector<std::array<Coset, 3>> table(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int x = 0; x < 3; ++x) {
        const Coset d = table_[static_cast<std::size_t>(order[k])][x];
        table[k][x] = d == kNone ? kNone : number[static_cast<std::size_t>(d)];
      }
    }
    table_ = std::move(table);
    const std::size_t n = order.size();
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    next_.resize(n);
    prev_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      next_[k] = k + 1 < n ? static_cast<Coset>(k + 1) : kNone;
      prev_[k] = k > 0 ? static_cast<Coset>(k - 1) : kNone;
    }
    last_ = static_cast<Coset>(n - 1);
    live_ = n;
    // Callers drain or discard pending deductions before compacting.
    deductions_.clear();
    return keep == kNone ? kNone : number[static_cast<std::size_t>(keep)];
  }

  void run_hlt() {
    int lookaheads = 0;
    Coset alpha = 0;
    while (alpha != kNone) {
      deductions_.clear();
      bool ok = true;
      for (const auto& r : relators_) {
        if (!scan(alpha, r, true)) {
          ok = false;
          break;
        }
        if (!is_live(alpha)) break;
      }
      if (ok && is_live(alpha)) {
        for (int x = 0; x < 3 && ok; ++x) {
          if (entry(alpha, x) == kNone) ok = define(alpha, x);
        }
      }
      if (!ok) {
        deductions_.clear();
        if (live_ >= max_) {
          const std::size_t before = live_;
          lookahead();
          if (live_ >= max_ || live_ == before || ++lookaheads > 64) throw BoundExceeded(max_);
        }
        alpha = compact(alpha);
        continue;
      }
      alpha = is_live(alpha) ? next_[static_cast<std::size_t>(alpha)] : next_live(alpha);
    }
  }

  void build_conjugates() {
    for (const auto& r : relators_) {
      for (int reversed = 0; reversed < 2; ++reversed) {
        std::vector<std::uint8_t> w = r;
        if (reversed) std::reverse(w.begin(), w.end());
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::vector<std::uint8_t> rot(w.begin() + static_cast<long>(s), w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(s));
          auto& bucket = conjugates_[rot.front()];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(std::move(rot));
        }
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (static_cast<std::size_t>(c) >= table_.size() || !is_live(c)) continue;
      for (const auto& w : conjugates_[x]) {
        scan(c, w, false);
        if (!is_live(c)) break;
      }
      if (!is_live(c)) continue;
      const Coset d = entry(c, x);
      if (d == kNone || !is_live(d)) continue;
      for (const auto& w : conjugates_[x]) {
        scan(d, w, false);
        if (!is_live(d)) break;
      }
    }
  }

  void run_felsch() {
    build_conjugates();
    Coset c = 0;
    while (true) {
      process_deductions();
      c = live_from(c);
      int x = -1;
      while (c != kNone) {
        for (int g = 0; g < 3 && x < 0; ++g) {
          if (entry(c, g) == kNone) x = g;
        }
        if (x >= 0) break;
        c = next_live(c);
      }
      if (c == kNone) return;
      if (!define(c, x)) {
        if (live_ >= max_) throw BoundExceeded(max_);
        c = compact(c);
      }
    }
  }

  /// Final pass: every relator must close at every coset.
  void close_relators() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Coset c = 0; c != kNone; c = next_live(c)) {
        for (const auto& r : relators_) {
          Coset f = c;
          for (std::uint8_t x : r) f = entry(f, x);
          if (f != c) {
            coincidence(f, c);
            changed = true;
          }
          if (!is_live(c)) break;
        }
        if (!is_live(c)) break;
      }
      if (changed) compact(0);
    }
    compact(0);
  }

  std::size_t max_;
  std::size_t slot_cap_;
  std::vector<std::vector<std::uint8_t>> relators_;
  std::array<std::vector<std::vector<std::uint8_t>>, 3> conjugates_;
  std::vector<std::array<Coset, 3>> table_;
  std::vector<Coset> parent_;
  std::vector<Coset> next_;
  std::vector<Coset> prev_;
  Coset last_ = kNone;
  std::size_t live_ = 0;
  std::vector<Coset> queue_;
  std::vector<std::pair<Coset, int>> deductions_;
};

}  // namespace detail

/// Right-regular permutation representation of the group defined by `pres`,
/// obtained by enumerating the cosets of the trivial subgroup.
inline RegularRepresentation enumerate_cosets(const Presentation& pres, const EnumerationOptions& options) {
  detail::CosetTable table(pres.relators(), options.max_cosets);
  table.run(options.strategy);
  return table.to_representation();
}

inline RegularRepresentation enumerate_cosets(const Presentation& pres, std::size_t max_cosets) {
  return enumerate_cosets(pres, EnumerationOptions{max_cosets, EnumerationStrategy::hlt});
}

inline RegularRepresentation enumerate_cosets(const Presentation& pres) {
  return enumerate_cosets(pres, pres.default_max_cosets());
}

}  // namespace tightpoly
