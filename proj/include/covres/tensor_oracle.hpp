#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "covres/char_engine.hpp"
#include "covres/euler.hpp"
#include "covres/exact_matrix.hpp"
#include "covres/partition.hpp"
#include "covres/util.hpp"

namespace covres {

// A concrete copy of an irreducible module inside a dense tensor power of
// the underlying space; words are encoded base space_dim, position-major.
struct IrrepRealization {
  int space_dim = 0;
  int tensor_degree = 0;
  std::vector<SparseVec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

inline long word_step(int space_dim, int pos) {
  long s = 1;
  for (int t = 0; t < pos; ++t) s *= space_dim;
  return s;
}

inline std::vector<int> decode_word(long idx, int space_dim, int degree) {
  std::vector<int> w(degree);
  for (int t = 0; t < degree; ++t) {
    w[t] = static_cast<int>(idx % space_dim);
    idx /= space_dim;
  }
  return w;
}

// enumerate the products of symmetric groups acting inside each block
inline std::vector<std::vector<int>> block_permutations(
    const std::vector<std::vector<int>>& blocks, int degree) {
  std::vector<std::vector<int>> out = {std::vector<int>(degree)};
  for (int t = 0; t < degree; ++t) out[0][t] = t;
  for (const std::vector<int>& block : blocks) {
    std::vector<int> order(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<std::vector<int>> grown;
    do {
      for (const std::vector<int>& base : out) {
        std::vector<int> p = base;
        for (std::size_t i = 0; i < block.size(); ++i)
          p[block[i]] = base[block[order[i]]];
        grown.push_back(std::move(p));
      }
    } while (std::next_permutation(order.begin(), order.end()));
    out = std::move(grown);
  }
  return out;
}

inline int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  return sign;
}

// antidiagonal bilinear forms: v_a pairs with v_{r-1-a}
inline Rat form_entry(bool skew, int r, int a, int b) {
  if (a + b != r - 1) return 0;
  if (!skew) return 1;
  return a < b ? Rat(1) : Rat(-1);
}

}  // namespace detail

// Image of the Young symmetrizer for the row-major standard filling:
// symmetrize along rows, then antisymmetrize along columns.
inline IrrepRealization schur_module(const Partition& lam, int dim) {
  require(dim >= 1, "space dimension must be positive");
  require(lam.size() <= 8, "tensor degree capped at eight; shrink the weight");
  int n = static_cast<int>(lam.size());
  IrrepRealization out;
  out.space_dim = dim;
  out.tensor_degree = n;
  if (n == 0) {
    out.basis.push_back({{0, Rat(1)}});
    return out;
  }

  // cells numbered row by row
  std::vector<std::vector<int>> rows, cols(lam.part(1));
  int cell = 0;
  for (int i = 1; i <= lam.length(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < lam.part(i); ++j) {
      row.push_back(cell);
      cols[j].push_back(cell);
      ++cell;
    }
    rows.push_back(std::move(row));
  }
  std::vector<std::vector<int>> row_perms = detail::block_permutations(rows, n);
  std::vector<std::vector<int>> col_perms = detail::block_permutations(cols, n);
  std::vector<int> col_signs;
  for (const auto& p : col_perms) col_signs.push_back(detail::permutation_sign(p));

  long total = detail::word_step(dim, n);
  SparseEchelon seen;
  std::vector<int> w(n);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int t = 0; t < n; ++t) {
      w[t] = static_cast<int>(rem % dim);
      rem /= dim;
    }
    SparseVec image;
    for (std::size_t ci = 0; ci < col_perms.size(); ++ci)
      for (const std::vector<int>& rp : row_perms) {
        long target = 0;
        for (int t = 0; t < n; ++t)
          target += static_cast<long>(w[t]) *
                    detail::word_step(dim, col_perms[ci][rp[t]]);
        Rat& slot = image[target];
        slot += col_signs[ci];
        if (slot == 0) image.erase(target);
      }
    if (image.empty()) continue;
    if (seen.insert(image)) out.basis.push_back(std::move(image));
  }
  check(Int(out.dim()) == schur_dim(lam, dim),
        "symmetrizer image has the wrong dimension");
  return out;
}

namespace detail {

// torus weight of a basis letter, in coordinates of the rank-m torus
inline std::vector<int> letter_weight(int j, int r, int m) {
  std::vector<int> w(m, 0);
  if (j < m)
    w[j] = 1;
  else if (r - 1 - j >= 0 && r - 1 - j < m)
    w[r - 1 - j] = -1;
  return w;
}

inline std::vector<int> word_weight(long idx, int r, int degree, int m) {
  std::vector<int> w(m, 0);
  for (int letter : decode_word(idx, r, degree)) {
    std::vector<int> lw = letter_weight(letter, r, m);
    for (int i = 0; i < m; ++i) w[i] += lw[i];
  }
  return w;
}

// Cut a Schur module by every contraction with the chosen form.  The
// contractions are torus equivariant, so the kernel is taken one weight at a
// time, keeping every output vector weight homogeneous.
inline IrrepRealization traceless_cut(const Partition& chi, int r, bool skew) {
  IrrepRealization schur = schur_module(chi, r);
  int n = schur.tensor_degree;
  if (n < 2) return schur;
  int m = r / 2;
  std::map<std::vector<int>, std::vector<int>> by_weight;
  for (int t = 0; t < schur.dim(); ++t)
    by_weight[word_weight(schur.basis[t].begin()->first, r, n, m)].push_back(t);
  IrrepRealization out;
  out.space_dim = r;
  out.tensor_degree = n;
  for (const auto& [wt, group] : by_weight) {
    std::map<std::tuple<int, int, long>, int> rows;
    std::vector<std::map<int, Rat>> img(group.size());
    for (std::size_t g = 0; g < group.size(); ++g)
      for (const auto& [idx, c] : schur.basis[group[g]]) {
        std::vector<int> w = decode_word(idx, r, n);
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            Rat f = form_entry(skew, r, w[a], w[b]);
            if (f == 0) continue;
            long reduced = 0;
            int pos = 0;
            for (int s = 0; s < n; ++s) {
              if (s == a || s == b) continue;
              reduced += static_cast<long>(w[s]) * word_step(r, pos);
              ++pos;
            }
            int rw = rows.emplace(std::make_tuple(a, b, reduced),
                                  static_cast<int>(rows.size()))
                         .first->second;
            img[g][rw] += c * f;
          }
      }
    ExactMatrix mat(std::max(static_cast<int>(rows.size()), 1),
                    static_cast<int>(group.size()));
    for (std::size_t g = 0; g < group.size(); ++g)
      for (const auto& [rw, c] : img[g])
        if (c != 0) mat.at(rw, static_cast<int>(g)) = c;
    for (const std::vector<Rat>& combo : mat.kernel()) {
      SparseVec v;
      for (std::size_t g = 0; g < group.size(); ++g) {
        if (combo[g] == 0) continue;
        for (const auto& [idx, c] : schur.basis[group[g]]) {
          Rat& slot = v[idx];
          slot += combo[g] * c;
          if (slot == 0) v.erase(idx);
        }
      }
      check(!v.empty(), "traceless combination collapsed");
      out.basis.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace detail

inline IrrepRealization symplectic_irrep(const Partition& chi, int r) {
  require(r >= 2 && r % 2 == 0, "the symplectic space dimension must be even");
  require(chi.length() <= r / 2, "label longer than the Witt index");
  require(chi.size() <= 6, "tensor degree capped at six; shrink the label");
  IrrepRealization out = detail::traceless_cut(chi, r, true);
  check(Int(out.dim()) == sp_dim(chi, r / 2),
        "traceless cut has the wrong dimension");
  return out;
}

inline IrrepRealization orthogonal_irrep(const Partition& chi, int r) {
  require(r >= 1, "space dimension must be positive");
  require(is_admissible(chi, r), "label is not admissible at this dimension");
  require(chi.size() <= 6, "tensor degree capped at six; shrink the label");
  IrrepRealization out = detail::traceless_cut(chi, r, false);
  check(Int(out.dim()) == o_dim(chi, r),
        "traceless cut has the wrong dimension");
  return out;
}

namespace detail {

// strictly upper-triangular matrices X with X^T J + J X = 0
inline std::vector<std::vector<std::vector<Rat>>> raising_operators(int r,
                                                                    bool skew) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) slots.emplace_back(a, b);
  ExactMatrix mat(r * r, static_cast<int>(slots.size()));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto [a, b] = slots[s];
    // contribution of X_{ab} to (X^T J + J X)_{uv}
    for (int v = 0; v < r; ++v) {
      Rat j1 = form_entry(skew, r, a, v);
      if (j1 != 0) mat.at(b * r + v, static_cast<int>(s)) += j1;
    }
    for (int u = 0; u < r; ++u) {
      Rat j2 = form_entry(skew, r, u, a);
      if (j2 != 0) mat.at(u * r + b, static_cast<int>(s)) += j2;
    }
  }
  std::vector<std::vector<std::vector<Rat>>> ops;
  for (const std::vector<Rat>& combo : mat.kernel()) {
    std::vector<std::vector<Rat>> X(r, std::vector<Rat>(r, Rat(0)));
    for (std::size_t s = 0; s < slots.size(); ++s)
      X[slots[s].first][slots[s].second] = combo[s];
    ops.push_back(std::move(X));
  }
  int m = r / 2;
  std::size_t expect = skew ? m * m : (r % 2 ? m * m : m * m - m);
  check(ops.size() == expect, "positive root count is off");
  return ops;
}

// coordinates of tensor-space vectors over a realization basis
class RealizationSolver {
 public:
  explicit RealizationSolver(const IrrepRealization& real) : real_(real) {
    for (int t = 0; t < real.dim(); ++t) {
      auto dep = tracker_.insert(real.basis[t], t);
      check(!dep.has_value(), "realization basis is dependent");
    }
  }

  // exact coordinates; the vector must lie in the span
  std::vector<Rat> coordinates(const SparseVec& v) {
    std::vector<Rat> out(real_.dim());
    if (v.empty()) return out;
    auto dep = tracker_.insert(v, real_.dim() + (fresh_++));
    check(dep.has_value(), "vector escaped the realization");
    for (const auto& [tag, c] : *dep)
      if (tag < real_.dim()) out[tag] = -c;
    return out;
  }

 private:
  const IrrepRealization& real_;
  KernelTracker tracker_;
  long fresh_ = 0;
};

// apply a matrix X to one tensor factor at a time
inline SparseVec tensor_apply(const IrrepRealization& real,
                              const std::vector<std::vector<Rat>>& X,
                              const SparseVec& v) {
  SparseVec out;
  for (const auto& [idx, c] : v) {
    std::vector<int> w = decode_word(idx, real.space_dim, real.tensor_degree);
    for (int pos = 0; pos < real.tensor_degree; ++pos)
      for (int to = 0; to < real.space_dim; ++to) {
        if (X[to][w[pos]] == 0) continue;
        long nidx = idx + static_cast<long>(to - w[pos]) *
                              word_step(real.space_dim, pos);
        Rat& slot = out[nidx];
        slot += c * X[to][w[pos]];
        if (slot == 0) out.erase(nidx);
      }
  }
  return out;
}

// permute basis letters of a tensor vector
inline SparseVec tensor_relabel(const IrrepRealization& real,
                                const std::vector<int>& relabel,
                                const SparseVec& v) {
  SparseVec out;
  for (const auto& [idx, c] : v) {
    std::vector<int> w = decode_word(idx, real.space_dim, real.tensor_degree);
    long nidx = 0;
    for (int pos = 0; pos < real.tensor_degree; ++pos)
      nidx += static_cast<long>(relabel[w[pos]]) *
              word_step(real.space_dim, pos);
    Rat& slot = out[nidx];
    slot += c;
    if (slot == 0) out.erase(nidx);
  }
  return out;
}

}  // namespace detail

// Dimension of the invariants of irrep(chi) (x) Sym^d(Q (x) V*) under the
// connected classical group fixed by flavor, with the O(V) reflection fix.
inline Int invariant_dimension(const Partition& chi, int r, int d,
                               Flavor flavor) {
  require(r >= 1 && r <= 4 && d >= 0 && d <= 4 && chi.size() <= 4,
          "outside the desk-scale envelope");
  bool skew = flavor == Flavor::skew;
  if (skew) require(r % 2 == 0, "the symplectic flavor needs even dimension");
  int m = r / 2;

  IrrepRealization real =
      skew ? symplectic_irrep(chi, r) : orthogonal_irrep(chi, r);
  if (real.dim() == 0) return 0;

  // the odd orthogonal group splits off -1, which acts by total parity
  if (!skew && r % 2 == 1 && (chi.size() + d) % 2 == 1) return 0;

  // torus weight per irrep basis vector
  std::vector<std::vector<int>> bw;
  for (const SparseVec& b : real.basis) {
    std::vector<int> w =
        detail::word_weight(b.begin()->first, r, real.tensor_degree, m);
    for (const auto& [idx, c] : b)
      check(detail::word_weight(idx, r, real.tensor_degree, m) == w,
            "realization vector mixes torus weights");
    bw.push_back(std::move(w));
  }

  // monomial exponents on the r x r variable grid q_a v_j*
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(r * r, 0);
  auto rec = [&](auto&& self, int from, int left) -> void {
    if (left == 0) {
      monos.push_back(cur);
      return;
    }
    for (int s = from; s < r * r; ++s) {
      ++cur[s];
      self(self, s, left - 1);
      --cur[s];
    }
  };
  rec(rec, 0, d);
  std::map<std::vector<int>, int> mono_id;
  std::vector<std::vector<int>> mw;
  for (const auto& E : monos) {
    mono_id.emplace(E, static_cast<int>(mono_id.size()));
    std::vector<int> w(m, 0);
    for (int a = 0; a < r; ++a)
      for (int j = 0; j < r; ++j) {
        if (E[a * r + j] == 0) continue;
        std::vector<int> lw = detail::letter_weight(j, r, m);
        for (int i = 0; i < m; ++i) w[i] -= E[a * r + j] * lw[i];
      }
    mw.push_back(std::move(w));
  }

  // weight-zero slice of the product
  std::vector<std::pair<int, int>> slice;
  for (int t = 0; t < real.dim(); ++t)
    for (std::size_t e = 0; e < monos.size(); ++e) {
      bool zero = true;
      for (int i = 0; i < m; ++i)
        if (bw[t][i] + mw[e][i] != 0) zero = false;
      if (zero) slice.emplace_back(t, static_cast<int>(e));
    }
  if (slice.empty()) return 0;
  std::map<std::pair<int, int>, int> slice_id;
  for (std::size_t s = 0; s < slice.size(); ++s)
    slice_id.emplace(slice[s], static_cast<int>(s));

  std::vector<std::vector<std::vector<Rat>>> ops =
      detail::raising_operators(r, skew);
  detail::RealizationSolver solver(real);

  // irrep-side matrices of every raising operator
  std::vector<std::vector<std::vector<Rat>>> imat;
  for (const auto& X : ops) {
    std::vector<std::vector<Rat>> mt(real.dim());
    for (int t = 0; t < real.dim(); ++t)
      mt[t] = solver.coordinates(detail::tensor_apply(real, X, real.basis[t]));
    imat.push_back(std::move(mt));
  }

  // optional reflection rows for the even orthogonal group
  bool reflect = !skew && r % 2 == 0;
  std::vector<std::vector<Rat>> rmat;
  std::vector<int> swap_letters;
  if (reflect) {
    for (int j = 0; j < r; ++j) swap_letters.push_back(j);
    std::swap(swap_letters[m - 1], swap_letters[m]);
    for (int t = 0; t < real.dim(); ++t)
      rmat.push_back(solver.coordinates(
          detail::tensor_relabel(real, swap_letters, real.basis[t])));
  }

  KernelTracker kernel;
  long nullity = 0;
  std::map<std::tuple<int, int, int>, long> rows;
  auto row_of = [&](int op, int t, int e) {
    return rows.emplace(std::make_tuple(op, t, e),
                        static_cast<long>(rows.size()))
        .first->second;
  };
  for (std::size_t s = 0; s < slice.size(); ++s) {
    auto [t, e] = slice[s];
    SparseVec stacked;
    for (std::size_t o = 0; o < ops.size(); ++o) {
      // action on the irrep leg
      for (int t2 = 0; t2 < real.dim(); ++t2) {
        if (imat[o][t][t2] == 0) continue;
        stacked[row_of(static_cast<int>(o), t2, e)] += imat[o][t][t2];
      }
      // derivation on the monomial leg: X z_{a,j} = -sum_i X_{ji} z_{a,i}
      const std::vector<int>& E = monos[e];
      for (int a = 0; a < r; ++a)
        for (int j = 0; j < r; ++j) {
          if (E[a * r + j] == 0) continue;
          for (int i = 0; i < r; ++i) {
            if (ops[o][j][i] == 0) continue;
            std::vector<int> E2 = E;
            --E2[a * r + j];
            ++E2[a * r + i];
            Rat c = -ops[o][j][i] * E[a * r + j];
            stacked[row_of(static_cast<int>(o), t, mono_id.at(E2))] += c;
          }
        }
    }
    if (reflect) {
      int op = static_cast<int>(ops.size());
      const std::vector<int>& E = monos[e];
      std::vector<int> E2(r * r, 0);
      for (int a = 0; a < r; ++a)
        for (int j = 0; j < r; ++j) E2[a * r + swap_letters[j]] = E[a * r + j];
      int e2 = mono_id.at(E2);
      for (int t2 = 0; t2 < real.dim(); ++t2) {
        if (rmat[t][t2] == 0) continue;
        stacked[row_of(op, t2, e2)] += rmat[t][t2];
      }
      stacked[row_of(op, t, e)] -= 1;
    }
    for (auto it = stacked.begin(); it != stacked.end();)
      it = it->second == 0 ? stacked.erase(it) : std::next(it);
    if (kernel.insert(stacked, static_cast<long>(s)).has_value()) ++nullity;
  }
  return nullity;
}

// Degree-by-degree comparison of the oracle dimensions with the character
// route.
inline VerificationReport cross_check(const Partition& chi, int r,
                                      int max_degree, Flavor flavor) {
  std::vector<Int> expected = covariant_dims(chi, r, flavor, r, max_degree);
  VerificationReport report;
  std::ostringstream out;
  for (int d = 0; d <= max_degree; ++d) {
    Int got = invariant_dimension(chi, r, d, flavor);
    bool ok = got == expected[d];
    out << "degree " << d << ": oracle " << got.get_str() << " character "
        << expected[d].get_str() << (ok ? "" : "  MISMATCH") << "\n";
    report.ok = report.ok && ok;
    ++report.degrees_checked;
  }
  report.detail = out.str();
  return report;
}

}  // namespace covres
