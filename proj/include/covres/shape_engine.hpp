#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "covres/partition.hpp"

namespace covres {

// Pencil type: alternating or symmetric bilinear forms.
enum class Flavor { skew, symmetric };

struct ReductionStep {
  Partition before;
  Partition after;
  BorderStrip strip;
  int contribution = 0;
};

// Result of the border-strip reduction.  An empty tau means the reduction
// dead-ends (the homological index is infinite) and the weight contributes
// no term to any resolution.
struct TauResult {
  std::optional<Partition> tau;
  std::optional<int> index;
  std::vector<ReductionStep> steps;
  bool defined() const { return tau.has_value(); }
};

// Skew reduction: strip size 2l - r - 2, index contribution c(R).
inline TauResult tau_skew(const Partition& lam, int r) {
  require(r >= 2 && r % 2 == 0, "skew reduction needs even r");
  require(lam.length() <= r, "weight longer than r");
  TauResult res;
  Partition cur = lam;
  int idx = 0;
  while (cur.length() > r / 2) {
    int s = 2 * cur.length() - r - 2;
    if (s <= 0) return res;
    auto rem = remove_border_strip(cur, s);
    if (!rem) return res;
    int c = rem->second.columns();
    res.steps.push_back({cur, rem->first, rem->second, c});
    idx += c;
    cur = rem->first;
  }
  res.tau = cur;
  res.index = idx;
  return res;
}

// Symmetric reduction: strip size 2l - r, contribution c(R) - 1, and a
// sigma flip of the end result when the number of strips removed is odd.
inline TauResult tau_sym(const Partition& lam, int r) {
  require(r >= 1, "rank must be positive");
  require(lam.length() <= r, "weight longer than r");
  TauResult res;
  Partition cur = lam;
  int idx = 0;
  int strips = 0;
  while (cur.length() > r / 2) {
    int s = 2 * cur.length() - r;
    check(s >= 1, "strip size must be positive here");
    auto rem = remove_border_strip(cur, s);
    if (!rem) return res;
    int c = rem->second.columns() - 1;
    res.steps.push_back({cur, rem->first, rem->second, c});
    idx += c;
    cur = rem->first;
    ++strips;
  }
  if (strips % 2 == 1) cur = sigma_conjugate(cur, r);
  res.tau = cur;
  res.index = idx;
  return res;
}

inline TauResult tau_reduce(const Partition& lam, int r, Flavor f) {
  return f == Flavor::skew ? tau_skew(lam, r) : tau_sym(lam, r);
}

// Terms of a minimal equivariant resolution: homological degree ->
// generator weights, each list in canonical order.
struct ResolutionShape {
  Flavor flavor = Flavor::skew;
  int r = 0;
  Partition chi;
  std::map<int, std::vector<Partition>> terms;

  int max_index() const { return terms.empty() ? -1 : terms.rbegin()->first; }

  bool operator==(const ResolutionShape& o) const {
    return flavor == o.flavor && r == o.r && chi == o.chi && terms == o.terms;
  }

  std::string str() const {
    std::string s;
    for (const auto& [t, list] : terms) {
      if (!s.empty()) s += "\n";
      s += std::to_string(t) + ":";
      for (const Partition& p : list) s += " " + p.str();
    }
    return s;
  }
};

namespace detail {

// All partitions lam of length exactly len obtained from mu by adding one
// border strip of the given size, where removing that strip from lam gives
// back mu.  Inverts the deterministic removal walk.
inline std::vector<std::pair<Partition, BorderStrip>> strip_additions(
    const Partition& mu, int len, int size) {
  std::vector<std::pair<Partition, BorderStrip>> out;
  if (size < 1 || len <= mu.length()) return out;
  for (int t = 1; t <= len; ++t) {
    std::vector<int> parts(len);
    bool ok = true;
    for (int i = 1; i < t && ok; ++i) {
      parts[i - 1] = mu.part(i);
      if (parts[i - 1] <= 0) ok = false;
    }
    if (!ok) continue;
    parts[t - 1] = size - len + t;
    for (int j = t + 1; j <= len; ++j) parts[j - 1] = mu.part(j - 1) + 1;
    if (parts[len - 1] <= 0) continue;
    for (int i = 0; i + 1 < len; ++i)
      if (parts[i] < parts[i + 1]) ok = false;
    if (!ok || parts[t - 1] <= 0) continue;
    Partition lam(parts);
    if (lam.length() != len) continue;
    auto rem = remove_border_strip(lam, size);
    if (!rem || !(rem->first == mu)) continue;
    out.emplace_back(lam, rem->second);
  }
  return out;
}

}  // namespace detail

// Every weight whose reduction lands on chi, grouped by homological index.
// The search adds strips outward from the admissible base weights; length
// grows strictly at each step, so the enumeration is exhaustive and finite.
inline ResolutionShape resolution_shape(const Partition& chi, int r,
                                        Flavor f) {
  ResolutionShape shape;
  shape.flavor = f;
  shape.r = r;
  shape.chi = chi;

  // Second member: depth parity whose weights reduce to chi, or -1 for all.
  // Only the symmetric rule flips through sigma, so only there does the
  // number of strips removed decide which base a weight belongs to.
  std::vector<std::pair<Partition, int>> bases;
  if (f == Flavor::skew) {
    require(r >= 2 && r % 2 == 0, "skew flavor needs even r");
    require(chi.length() <= r / 2, "weight too long for a skew shape");
    bases.emplace_back(chi, -1);
  } else {
    require(r >= 1, "rank must be positive");
    require(chi.length() <= r, "weight longer than r");
    if (chi.length() <= r / 2) bases.emplace_back(chi, 0);
    if (is_admissible(chi, r)) {
      Partition sig = sigma_conjugate(chi, r);
      if (sig.length() <= r / 2) bases.emplace_back(sig, 1);
    }
    require(!bases.empty(), "no reduction base exists for this weight");
  }

  std::set<Partition> seen;
  for (const auto& [base, parity] : bases) {
    // DFS over strip additions from this base
    auto grow = [&](auto&& self, const Partition& mu, int idx,
                    int depth) -> void {
      if (parity < 0 || depth % 2 == parity) {
        if (seen.insert(mu).second) {
          TauResult check_tau = tau_reduce(mu, r, f);
          check(check_tau.defined() && *check_tau.tau == chi &&
                    *check_tau.index == idx,
                "shape term fails its own reduction");
          shape.terms[idx].push_back(mu);
        }
      }
      for (int len = std::max(mu.length() + 1, r / 2 + 1); len <= r; ++len) {
        int size = f == Flavor::skew ? 2 * len - r - 2 : 2 * len - r;
        for (auto& [lam, strip] : detail::strip_additions(mu, len, size)) {
          int contrib = f == Flavor::skew ? strip.columns()
                                          : strip.columns() - 1;
          self(self, lam, idx + contrib, depth + 1);
        }
      }
    };
    grow(grow, base, 0, 0);
  }

  for (auto& [t, list] : shape.terms) std::sort(list.begin(), list.end());
  return shape;
}

// Closed form of the skew resolution when chi is wide enough: homological
// degree k holds the concatenations (chi|mu) over mu in Q_{-1}(2k).
inline ResolutionShape appendix_shape(const Partition& chi, int r) {
  require(r >= 2 && r % 2 == 0, "needs even r");
  int h = r / 2;
  require(chi.length() <= h, "weight too long");
  require(chi.part(h) >= h - 1, "weight too narrow for the closed form");

  ResolutionShape shape;
  shape.flavor = Flavor::skew;
  shape.r = r;
  shape.chi = chi;
  int k_max = (h - 1) * h / 2;
  for (int k = 0; k <= k_max; ++k) {
    std::vector<Partition> terms;
    for (const Partition& mu : enumerate_q_minus1(2 * k, h)) {
      std::vector<int> parts;
      for (int i = 1; i <= h; ++i) parts.push_back(chi.part(i));
      for (int i = 1; i <= mu.length(); ++i) parts.push_back(mu.part(i));
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      terms.emplace_back(parts);
    }
    if (!terms.empty()) {
      std::sort(terms.begin(), terms.end());
      shape.terms.emplace(k, std::move(terms));
    }
  }
  return shape;
}

inline std::vector<Partition> admissible_box(int r, int width) {
  std::vector<Partition> out;
  if (width < 0) return out;
  for (const Partition& p : enumerate_box(r, width))
    if (is_admissible(p, r)) out.push_back(p);
  return out;
}

// Index sets of the tilting generators: the main summand list, or the
// larger one generating the derived category of the resolution.
inline std::vector<Partition> tilting_summands(int n, int r, Flavor f,
                                               bool big) {
  require(r >= 1 && n >= r, "need n >= r >= 1");
  if (f == Flavor::skew) {
    require(r % 2 == 0, "skew flavor needs even r");
    int width = big ? n - r : n / 2 - r / 2;
    return enumerate_box(r / 2, width);
  }
  int width = big ? n - r : (n - r) / 2 + 1;
  return admissible_box(r, width);
}

}  // namespace covres
