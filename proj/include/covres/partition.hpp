#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "covres/util.hpp"

namespace covres {

// Integer partition with weakly decreasing positive parts.  The empty
// partition is a valid value.  Ordering is the project-wide canonical order:
// by size first, then lexicographically descending within a size class, so
// e.g. (2) sorts before (1,1).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, "partition parts must be positive");
      require(i == 0 || parts_[i - 1] >= parts_[i],
              "partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  // 1-based part access; rows beyond the length read as 0.
  int part(int i) const {
    require(i >= 1, "part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
  }

  Partition conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++t[c];
    return Partition(std::move(t));
  }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

  friend bool operator<(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return b.parts_ < a.parts_;  // lexicographically descending within a size
  }
  friend bool operator>(const Partition& a, const Partition& b) { return b < a; }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i];
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

// Frobenius coordinates: a_i = arm length + 1 and b_i = leg length + 1 of the
// i-th diagonal box, so a_1 = p_1 and b_1 = length(p).
struct FrobeniusCoords {
  std::vector<int> arms;
  std::vector<int> legs;

  bool operator==(const FrobeniusCoords&) const = default;
};

inline FrobeniusCoords to_frobenius(const Partition& p) {
  FrobeniusCoords fc;
  Partition t = p.conjugate();
  for (int i = 1; i <= p.length() && p.part(i) >= i; ++i) {
    fc.arms.push_back(p.part(i) - i + 1);
    fc.legs.push_back(t.part(i) - i + 1);
  }
  return fc;
}

inline Partition from_frobenius(const FrobeniusCoords& fc) {
  require(fc.arms.size() == fc.legs.size(),
          "frobenius coordinates need equally many arms and legs");
  int u = static_cast<int>(fc.arms.size());
  for (int i = 0; i < u; ++i) {
    require(fc.arms[i] >= 1 && fc.legs[i] >= 1,
            "frobenius arms and legs must be positive");
    require(i == 0 || (fc.arms[i - 1] > fc.arms[i] && fc.legs[i - 1] > fc.legs[i]),
            "frobenius arms and legs must be strictly decreasing");
  }
  if (u == 0) return Partition();
  std::vector<int> rows(fc.legs[0] + 0, 0);
  for (int i = 1; i <= u; ++i) {
    rows[i - 1] = fc.arms[i - 1] + i - 1;        // boxes (i, i..i+a-1) plus row prefix
    for (int j = i; j < i + fc.legs[i - 1]; ++j)  // boxes (i..i+b-1, i)
      rows[j - 1] = std::max(rows[j - 1], i);
  }
  Partition result{std::move(rows)};
  check(to_frobenius(result) == fc, "frobenius round-trip failed");
  return result;
}

// Connected rim segment of a Young diagram.  Cells are (row, column), 1-based,
// listed in walk order from the bottom-left end.
struct BorderStrip {
  std::vector<std::pair<int, int>> cells;

  int size() const { return static_cast<int>(cells.size()); }

  int columns() const {
    std::vector<int> c;
    for (auto& [r, col] : cells) c.push_back(col);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return static_cast<int>(c.size());
  }

  int rows() const {
    std::vector<int> r;
    for (auto& [row, c] : cells) r.push_back(row);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return static_cast<int>(r.size());
  }
};

// Removes the border strip of the given size that starts at the first box of
// the bottom row and follows the rim upward.  The strip is unique for a given
// start and size; returns nothing when it does not exist or when removing it
// leaves a non-partition.
inline std::optional<std::pair<Partition, BorderStrip>> remove_border_strip(
    const Partition& p, int strip_size) {
  if (p.empty() || strip_size <= 0 || strip_size > p.size()) return std::nullopt;
  BorderStrip strip;
  int l = p.length();
  for (int i = l; i >= 1 && strip.size() < strip_size; --i) {
    int lo = std::max(p.part(i + 1), 1);
    for (int c = lo; c <= p.part(i) && strip.size() < strip_size; ++c)
      strip.cells.emplace_back(i, c);
  }
  if (strip.size() < strip_size) return std::nullopt;
  std::vector<int> rows(p.parts());
  std::vector<int> low(l + 1, 0);
  for (auto& [r, c] : strip.cells) {
    if (low[r] == 0 || c < low[r]) low[r] = c;
  }
  for (int i = 1; i <= l; ++i) {
    if (low[i] == 0) continue;
    // The walk removes a contiguous range of row i; it must reach the row end,
    // otherwise the leftover cells are not left-justified.
    int removed = 0;
    for (auto& [r, c] : strip.cells)
      if (r == i) ++removed;
    if (low[i] + removed - 1 != p.part(i)) return std::nullopt;
    rows[i - 1] = low[i] - 1;
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i] < rows[i + 1]) return std::nullopt;
  return std::make_pair(Partition(std::move(rows)), std::move(strip));
}

namespace detail {
inline void gen_box(int rows, int cols, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (static_cast<int>(acc.size()) == rows) return;
  for (int p = max_part; p >= 1; --p) {
    acc.push_back(p);
    out.push_back(Partition(acc));
    gen_box(rows, cols, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace detail

// All partitions with at most `rows` rows and parts at most `cols`, in
// canonical order.  B_{rows,cols} in the write-ups of this project.
inline std::vector<Partition> enumerate_box(int rows, int cols) {
  require(rows >= 0 && cols >= 0, "box dimensions must be nonnegative");
  std::vector<Partition> out{Partition()};
  std::vector<int> acc;
  detail::gen_box(rows, cols, cols, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

// All partitions of n with length <= max_len and parts <= max_part, canonical
// order.
inline std::vector<Partition> enumerate_partitions(int n, int max_len,
                                                   int max_part) {
  std::vector<Partition> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(Partition(acc));
      return;
    }
    if (static_cast<int>(acc.size()) >= max_len) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      acc.push_back(p);
      self(self, remaining - p, p);
      acc.pop_back();
    }
  };
  if (n == 0) return {Partition()};
  if (n < 0) return {};
  rec(rec, n, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

// True when every Frobenius leg exceeds the matching arm by exactly one.
inline bool has_legs_arms_plus_one(const Partition& p) {
  FrobeniusCoords fc = to_frobenius(p);
  for (std::size_t i = 0; i < fc.arms.size(); ++i)
    if (fc.legs[i] != fc.arms[i] + 1) return false;
  return true;
}

// Partitions of m whose Frobenius legs are the arms plus one, filtered by
// length.  Empty for odd m; {()} for m = 0.
inline std::vector<Partition> enumerate_q_minus1(int m, int max_len) {
  require(m >= 0, "weight must be nonnegative");
  if (m % 2 != 0) return {};
  if (m == 0) return {Partition()};
  int k = m / 2;
  std::vector<Partition> out;
  std::vector<int> arms;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      FrobeniusCoords fc;
      fc.arms = arms;
      for (int a : arms) fc.legs.push_back(a + 1);
      Partition p = from_frobenius(fc);
      if (p.length() <= max_len) out.push_back(p);
      return;
    }
    for (int a = std::min(cap, remaining); a >= 1; --a) {
      // the rest must fit into distinct parts strictly below a
      if (remaining - a > a * (a - 1) / 2) continue;
      arms.push_back(a);
      self(self, remaining - a, a - 1);
      arms.pop_back();
    }
  };
  rec(rec, k, k);
  std::sort(out.begin(), out.end());
  return out;
}

// beta ⊂₂ alpha: containment with |alpha| - |beta| = 2 such that the two new
// boxes are not side by side in one row.  Decided on Frobenius coordinates:
// either one arm grows by one (its leg follows), or a new length-1 arm appears.
// Both arguments must be in the legs = arms + 1 family.
inline bool is_subset2(const Partition& beta, const Partition& alpha) {
  require(has_legs_arms_plus_one(beta) && has_legs_arms_plus_one(alpha),
          "is_subset2 arguments must have legs = arms + 1");
  FrobeniusCoords fa = to_frobenius(alpha), fb = to_frobenius(beta);
  std::size_t u = fa.arms.size(), v = fb.arms.size();
  if (u == v) {
    int bumps = 0;
    for (std::size_t i = 0; i < u; ++i) {
      if (fa.arms[i] == fb.arms[i] + 1)
        ++bumps;
      else if (fa.arms[i] != fb.arms[i])
        return false;
    }
    return bumps == 1;
  }
  if (u == v + 1) {
    for (std::size_t i = 0; i < v; ++i)
      if (fa.arms[i] != fb.arms[i]) return false;
    return fa.arms[v] == 1;
  }
  return false;
}

// First two conjugate parts bounded by r.
inline bool is_admissible(const Partition& p, int r) {
  int col1 = p.length();
  int col2 = 0;
  for (int q : p.parts())
    if (q >= 2) ++col2;
  return col1 + col2 <= r;
}

// Replaces the first column length by its complement in r, leaving the other
// columns unchanged.  Defined exactly when the result is again a partition,
// i.e. when p is admissible for r.
inline Partition sigma_conjugate(const Partition& p, int r) {
  require(p.length() <= r, "sigma conjugate needs first column <= r");
  Partition t = p.conjugate();
  std::vector<int> cols(t.parts());
  if (cols.empty()) cols.push_back(0);
  cols[0] = r - p.length();
  require(cols.size() < 2 || cols[0] >= cols[1],
          "sigma conjugate needs an admissible partition");
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  return Partition(cols).conjugate();
}

}  // namespace covres
