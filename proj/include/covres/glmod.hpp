#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "covres/char_engine.hpp"
#include "covres/exact_matrix.hpp"
#include "covres/partition.hpp"

namespace covres {

using Weight = std::vector<int>;
using AmbientKey = std::vector<std::uint64_t>;
using GlVector = std::map<AmbientKey, Rat>;

// One exterior-power tensor factor: either a wedge of the underlying basis
// letters, or a wedge of the pair space spanned by v_ab = e_a ^ e_b.
struct GlFactor {
  enum class Kind { letters, pairs };
  Kind kind;
  int degree;
};

// Tensor product of exterior-power factors over a space of dimension q.
// Basis keys carry one bitmask per factor; pair bits follow the global
// lexicographic order on (a, b) with a < b, all indices zero-based.
class Ambient {
 public:
  Ambient(int q, std::vector<GlFactor> factors)
      : q_(q), factors_(std::move(factors)) {
    require(q >= 1 && q <= 32, "space dimension out of range");
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b) pairs_.emplace_back(a, b);
    pair_index_.assign(q * q, -1);
    for (int s = 0; s < static_cast<int>(pairs_.size()); ++s)
      pair_index_[pairs_[s].first * q + pairs_[s].second] = s;
    for (const GlFactor& f : factors_) {
      int letters = f.kind == GlFactor::Kind::letters
                        ? q
                        : static_cast<int>(pairs_.size());
      require(f.degree >= 0 && f.degree <= letters && letters <= 64,
              "factor degree out of range");
    }
  }

  int q() const { return q_; }
  const std::vector<GlFactor>& factors() const { return factors_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int pair_index(int a, int b) const { return pair_index_[a * q_ + b]; }

  Weight weight_of(const AmbientKey& key) const {
    Weight w(q_, 0);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      std::uint64_t m = key[f];
      while (m) {
        int s = __builtin_ctzll(m);
        m &= m - 1;
        if (factors_[f].kind == GlFactor::Kind::letters) {
          ++w[s];
        } else {
          ++w[pairs_[s].first];
          ++w[pairs_[s].second];
        }
      }
    }
    return w;
  }

  // E_i moves letter i+1 to letter i, F_i moves letter i to letter i+1;
  // both act by the Leibniz rule across factors.
  GlVector raise(const GlVector& v, int i) const { return act(v, i, true); }
  GlVector lower(const GlVector& v, int i) const { return act(v, i, false); }

 private:
  // replace one letter inside one factor of one key, with the re-sort sign
  void act_factor(const AmbientKey& key, std::size_t f, int i, bool up,
                  const Rat& coeff, GlVector& out) const {
    const GlFactor& fac = factors_[f];
    int from = up ? i + 1 : i;
    int to = up ? i : i + 1;
    std::uint64_t mask = key[f];
    if (fac.kind == GlFactor::Kind::letters) {
      if ((mask >> from & 1) && !(mask >> to & 1)) {
        AmbientKey nk = key;
        nk[f] = mask ^ (1ULL << from) ^ (1ULL << to);
        out[nk] += coeff;
      }
      return;
    }
    std::uint64_t rest = mask;
    while (rest) {
      int s = __builtin_ctzll(rest);
      rest &= rest - 1;
      auto [a, b] = pairs_[s];
      int na = a, nb = b;
      if (a == from)
        na = to;
      else if (b == from)
        nb = to;
      else
        continue;
      if (na == nb) continue;
      if (na > nb) std::swap(na, nb);
      int t = pair_index(na, nb);
      if (mask >> t & 1) continue;
      std::uint64_t nm = (mask ^ (1ULL << s)) | (1ULL << t);
      int lo = std::min(s, t), hi = std::max(s, t);
      std::uint64_t between =
          (mask ^ (1ULL << s)) & ((1ULL << hi) - 1) & ~((1ULL << (lo + 1)) - 1);
      AmbientKey nk = key;
      nk[f] = nm;
      if (__builtin_popcountll(between) % 2 == 0)
        out[nk] += coeff;
      else
        out[nk] -= coeff;
    }
  }

  GlVector act(const GlVector& v, int i, bool up) const {
    require(i >= 0 && i + 1 < q_, "operator index out of range");
    GlVector out;
    for (const auto& [key, c] : v)
      for (std::size_t f = 0; f < factors_.size(); ++f)
        act_factor(key, f, i, up, c, out);
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  int q_;
  std::vector<GlFactor> factors_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> pair_index_;
};

inline GlVector gl_scale(const GlVector& v, const Rat& c) {
  GlVector out;
  if (c == 0) return out;
  for (const auto& [k, x] : v) out.emplace(k, x * c);
  return out;
}

inline void gl_add(GlVector& v, const GlVector& w, const Rat& c = 1) {
  for (const auto& [k, x] : w) {
    Rat& slot = v[k];
    slot += x * c;
    if (slot == 0) v.erase(k);
  }
}

// Irreducible submodule generated by a highest-weight vector: the lowering
// closure, with the operator word that produced each basis vector kept for
// replaying equivariant maps into other ambients.
class IrrepModule {
 public:
  // Column realization of the Schur module: one letters factor per column
  // of pi, seeded with the top wedge of an initial segment in each.
  IrrepModule(const Partition& pi, int q)
      : ambient_(make_column_ambient(pi, q)) {
    AmbientKey key;
    Partition conj = pi.conjugate();
    for (int c : conj.parts()) key.push_back((1ULL << c) - 1);
    if (key.empty()) key.push_back(0);
    GlVector hw;
    hw.emplace(std::move(key), 1);
    close(std::move(hw));
    check(Int(dim()) == schur_dim(pi, q), "closure misses the module size");
  }

  IrrepModule(Ambient amb, GlVector hw) : ambient_(std::move(amb)) {
    require(!hw.empty(), "cannot close the zero vector");
    close(std::move(hw));
  }

  const Ambient& ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<GlVector>& basis() const { return basis_; }
  const std::vector<std::vector<int>>& words() const { return words_; }
  const GlVector& highest() const { return basis_[0]; }
  const std::map<Weight, std::vector<int>>& slices() const { return slices_; }

  // exact coordinates of a single-weight vector lying inside the module
  std::vector<Rat> coordinates(const GlVector& v) const {
    std::vector<Rat> coords(dim());
    if (v.empty()) return coords;
    Weight w = ambient_.weight_of(v.begin()->first);
    auto it = slices_.find(w);
    require(it != slices_.end(), "vector weight not present in the module");
    const std::vector<int>& ids = it->second;
    std::map<AmbientKey, int> rows;
    for (int id : ids)
      for (const auto& [k, c] : basis_[id])
        rows.emplace(k, static_cast<int>(rows.size()));
    for (const auto& [k, c] : v) rows.emplace(k, static_cast<int>(rows.size()));
    ExactMatrix mat(static_cast<int>(rows.size()),
                    static_cast<int>(ids.size()));
    for (std::size_t j = 0; j < ids.size(); ++j)
      for (const auto& [k, c] : basis_[ids[j]])
        mat.at(rows.at(k), static_cast<int>(j)) = c;
    std::vector<Rat> rhs(rows.size());
    for (const auto& [k, c] : v) rhs[rows.at(k)] = c;
    auto sol = mat.solve(rhs);
    require(sol.has_value(), "vector lies outside the module");
    for (std::size_t j = 0; j < ids.size(); ++j) coords[ids[j]] = (*sol)[j];
    return coords;
  }

  // replay the word that produced basis vector j on a seed living in
  // another ambient; word entries are lowering-operator indices
  static GlVector replay(const Ambient& amb, const GlVector& seed,
                         const std::vector<int>& word) {
    GlVector v = seed;
    for (int i : word) v = amb.lower(v, i);
    return v;
  }

 private:
  static Ambient make_column_ambient(const Partition& pi, int q) {
    require(pi.length() <= q, "weight longer than the space dimension");
    std::vector<GlFactor> fs;
    Partition conj = pi.conjugate();
    for (int c : conj.parts()) fs.push_back({GlFactor::Kind::letters, c});
    if (fs.empty()) fs.push_back({GlFactor::Kind::letters, 0});
    return Ambient(q, std::move(fs));
  }

  long key_id(const AmbientKey& k) {
    auto [it, fresh] = key_ids_.emplace(k, static_cast<long>(key_ids_.size()));
    return it->second;
  }

  SparseVec to_sparse(const GlVector& v) {
    SparseVec s;
    for (const auto& [k, c] : v) s.emplace(key_id(k), c);
    return s;
  }

  void close(GlVector hw) {
    std::deque<int> queue;
    auto try_add = [&](GlVector v, std::vector<int> word) {
      if (v.empty()) return;
      Weight w = ambient_.weight_of(v.begin()->first);
      if (!echelon_[w].insert(to_sparse(v))) return;
      basis_.push_back(std::move(v));
      words_.push_back(std::move(word));
      slices_[w].push_back(dim() - 1);
      queue.push_back(dim() - 1);
    };
    try_add(std::move(hw), {});
    check(dim() == 1, "seed vector vanished");
    while (!queue.empty()) {
      int id = queue.front();
      queue.pop_front();
      for (int i = 0; i + 1 < ambient_.q(); ++i) {
        GlVector low = ambient_.lower(basis_[id], i);
        if (low.empty()) continue;
        std::vector<int> word = words_[id];
        word.push_back(i);
        try_add(std::move(low), std::move(word));
      }
    }
  }

  Ambient ambient_;
  std::vector<GlVector> basis_;
  std::vector<std::vector<int>> words_;
  std::map<Weight, std::vector<int>> slices_;
  std::map<Weight, SparseEchelon> echelon_;
  std::map<AmbientKey, long> key_ids_;
};

}  // namespace covres
