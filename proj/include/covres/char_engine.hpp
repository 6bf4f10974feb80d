#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "covres/exact_matrix.hpp"
#include "covres/laurent.hpp"
#include "covres/partition.hpp"

namespace covres {

// One torus eigenvalue: (neg ? -1 : 1) * z^exp.
struct Eigenvalue {
  std::vector<int> exp;
  bool neg = false;
};

inline std::vector<Eigenvalue> gl_eigenvalues(int n) {
  std::vector<Eigenvalue> e(n);
  for (int i = 0; i < n; ++i) {
    e[i].exp.assign(n, 0);
    e[i].exp[i] = 1;
  }
  return e;
}

// Sp(2m) and SO(2m) share this torus: z_1..z_m and their inverses.
inline std::vector<Eigenvalue> sp_eigenvalues(int m) {
  std::vector<Eigenvalue> e(2 * m);
  for (int i = 0; i < m; ++i) {
    e[i].exp.assign(m, 0);
    e[i].exp[i] = 1;
    e[2 * m - 1 - i].exp.assign(m, 0);
    e[2 * m - 1 - i].exp[i] = -1;
  }
  return e;
}

inline std::vector<Eigenvalue> so_odd_eigenvalues(int m) {
  std::vector<Eigenvalue> e = sp_eigenvalues(m);
  e.insert(e.begin() + m, Eigenvalue{std::vector<int>(m, 0), false});
  return e;
}

// Eigenvalues of the reflection component of O(2m), in m-1 torus variables.
inline std::vector<Eigenvalue> o_even_twisted_eigenvalues(int m) {
  require(m >= 1, "O(2m) needs m >= 1");
  std::vector<Eigenvalue> e;
  for (int i = 0; i < m - 1; ++i) {
    Eigenvalue v;
    v.exp.assign(m - 1, 0);
    v.exp[i] = 1;
    e.push_back(v);
  }
  e.push_back(Eigenvalue{std::vector<int>(m - 1, 0), false});
  e.push_back(Eigenvalue{std::vector<int>(m - 1, 0), true});
  for (int i = m - 2; i >= 0; --i) {
    Eigenvalue v;
    v.exp.assign(m - 1, 0);
    v.exp[i] = -1;
    e.push_back(v);
  }
  return e;
}

// Products x_i x_j of distinct (strict) or weakly distinct standard
// eigenvalues; the torus acting on an exterior or symmetric square.
inline std::vector<Eigenvalue> pair_eigenvalues(int n, bool strict) {
  std::vector<Eigenvalue> e;
  for (int i = 0; i < n; ++i)
    for (int j = strict ? i + 1 : i; j < n; ++j) {
      Eigenvalue v;
      v.exp.assign(n, 0);
      v.exp[i] += 1;
      v.exp[j] += 1;
      e.push_back(v);
    }
  return e;
}

// h_0..h_kmax of the eigenvalue multiset, via 1/(1-xt) factor recurrences.
inline std::vector<LaurentCharacter> complete_homogeneous(
    const std::vector<Eigenvalue>& eigs, int kmax, int nvars) {
  require(kmax >= 0, "kmax must be non-negative");
  std::vector<LaurentCharacter> h(kmax + 1, LaurentCharacter(nvars));
  h[0] = LaurentCharacter::one(nvars);
  for (const Eigenvalue& x : eigs)
    for (int d = 1; d <= kmax; ++d) {
      LaurentCharacter t = h[d - 1];
      t.shift(x.exp, x.neg);
      h[d] += t;
    }
  return h;
}

inline std::vector<LaurentCharacter> elementary(
    const std::vector<Eigenvalue>& eigs, int kmax, int nvars) {
  require(kmax >= 0, "kmax must be non-negative");
  std::vector<LaurentCharacter> e(kmax + 1, LaurentCharacter(nvars));
  e[0] = LaurentCharacter::one(nvars);
  for (const Eigenvalue& x : eigs)
    for (int d = kmax; d >= 1; --d) {
      LaurentCharacter t = e[d - 1];
      t.shift(x.exp, x.neg);
      e[d] += t;
    }
  return e;
}

namespace detail {

// Determinant by expansion on the first remaining row, memoized on the set
// of unused columns.  Matrices stay tiny (rank of the classical group).
inline LaurentCharacter det_laurent(
    const std::vector<std::vector<LaurentCharacter>>& m, int nvars) {
  int n = static_cast<int>(m.size());
  check(n <= 20, "determinant size out of range");
  std::map<unsigned, LaurentCharacter> memo;
  auto rec = [&](auto&& self, unsigned mask) -> LaurentCharacter {
    if (mask == 0) return LaurentCharacter::one(nvars);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = n - __builtin_popcount(mask);
    LaurentCharacter acc(nvars);
    int sign = 1;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!m[row][j].is_zero()) {
        LaurentCharacter sub = self(self, mask & ~(1u << j));
        acc += m[row][j] * sub * Int(sign);
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n == 0 ? 0u : ((1u << n) - 1));
}

}  // namespace detail

// Monomial expansion of a Schur polynomial, by peeling horizontal strips off
// the last variable.  Memoized; returns by value for thread safety.
inline LaurentCharacter schur_monomials(const Partition& p, int n) {
  require(n >= 0, "variable count must be non-negative");
  if (p.length() > n) return LaurentCharacter(n);
  static std::map<std::pair<Partition, int>, LaurentCharacter> memo;
  static std::mutex mx;
  std::pair<Partition, int> key{p, n};
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  LaurentCharacter out(n);
  if (n == 0) {
    if (p.empty()) out.add_term({}, 1);
  } else {
    // enumerate mu with p/mu a horizontal strip
    std::vector<int> mu;
    auto gen = [&](auto&& self, int i) -> void {
      if (i > p.length()) {
        std::vector<int> cleaned(mu);
        while (!cleaned.empty() && cleaned.back() == 0) cleaned.pop_back();
        Partition m(cleaned);
        int strip = p.size() - m.size();
        LaurentCharacter sub = schur_monomials(m, n - 1);
        for (const auto& [e, c] : sub.terms()) {
          std::vector<int> ne = e;
          ne.push_back(strip);
          out.add_term(std::move(ne), c);
        }
        return;
      }
      int lo = p.part(i + 1), hi = p.part(i);
      for (int v = lo; v <= hi; ++v) {
        mu.push_back(v);
        self(self, i + 1);
        mu.pop_back();
      }
    };
    gen(gen, 1);
  }
  std::lock_guard<std::mutex> lk(mx);
  memo.emplace(std::move(key), out);
  return out;
}

// Schur polynomial evaluated on an arbitrary eigenvalue list, by the h-matrix
// determinant.  Independent of schur_monomials; kept as a cross-check route.
inline LaurentCharacter schur_at(const Partition& p,
                                 const std::vector<Eigenvalue>& eigs,
                                 int nvars) {
  int n = p.length();
  if (n == 0) return LaurentCharacter::one(nvars);
  auto h = complete_homogeneous(eigs, p.part(1) + n - 1, nvars);
  auto H = [&](int k) {
    return k < 0 ? LaurentCharacter(nvars) : h[k];
  };
  std::vector<std::vector<LaurentCharacter>> m(
      n, std::vector<LaurentCharacter>(n, LaurentCharacter(nvars)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = H(p.part(i) - i + j);
  return detail::det_laurent(m, nvars);
}

// Irreducible Sp(2m) character on the standard torus.  First column halves
// the h_{a+j} + h_{a-j+2} pattern, so no global 1/2 is needed.
inline LaurentCharacter char_sp(const Partition& p, int m) {
  require(p.length() <= m, "partition too long for Sp(2m)");
  static std::map<std::pair<Partition, int>, LaurentCharacter> memo;
  static std::mutex mx;
  std::pair<Partition, int> key{p, m};
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  LaurentCharacter out(m);
  int n = p.length();
  if (n == 0) {
    out = LaurentCharacter::one(m);
  } else {
    auto h = complete_homogeneous(sp_eigenvalues(m), p.part(1) + n - 1, m);
    auto H = [&](int k) { return k < 0 ? LaurentCharacter(m) : h[k]; };
    std::vector<std::vector<LaurentCharacter>> mat(
        n, std::vector<LaurentCharacter>(n, LaurentCharacter(m)));
    for (int i = 1; i <= n; ++i) {
      int a = p.part(i) - i;
      mat[i - 1][0] = H(a + 1);
      for (int j = 2; j <= n; ++j)
        mat[i - 1][j - 1] = H(a + j) + H(a - j + 2);
    }
    out = detail::det_laurent(mat, m);
  }
  std::lock_guard<std::mutex> lk(mx);
  memo.emplace(std::move(key), out);
  return out;
}

// Orthogonal character determinant over any eigenvalue list.
inline LaurentCharacter char_o_at(const Partition& p,
                                  const std::vector<Eigenvalue>& eigs,
                                  int nvars) {
  int n = p.length();
  if (n == 0) return LaurentCharacter::one(nvars);
  auto h = complete_homogeneous(eigs, p.part(1) + n - 1, nvars);
  auto H = [&](int k) { return k < 0 ? LaurentCharacter(nvars) : h[k]; };
  std::vector<std::vector<LaurentCharacter>> mat(
      n, std::vector<LaurentCharacter>(n, LaurentCharacter(nvars)));
  for (int i = 1; i <= n; ++i) {
    int a = p.part(i) - i;
    for (int j = 1; j <= n; ++j) mat[i - 1][j - 1] = H(a + j) - H(a - j);
  }
  return detail::det_laurent(mat, nvars);
}

// A partition labels an O(r) representation when its first two columns fit:
// that is exactly admissibility.
inline bool is_o_label(const Partition& p, int r) {
  return p.length() <= r && is_admissible(p, r);
}

// O(r) character on the connected component's standard torus.
inline LaurentCharacter char_o(const Partition& p, int r) {
  require(is_o_label(p, r), "not an O(r) label");
  if (r % 2 == 1) return char_o_at(p, so_odd_eigenvalues(r / 2), r / 2);
  return char_o_at(p, sp_eigenvalues(r / 2), r / 2);
}

// O(r) character on the reflection component, r even.
inline LaurentCharacter char_o_twisted(const Partition& p, int r) {
  require(r % 2 == 0, "twisted classes need even r");
  require(is_o_label(p, r), "not an O(r) label");
  int m = r / 2;
  if (p.length() <= m) return char_o_at(p, o_even_twisted_eigenvalues(m), m - 1);
  // det tensor flips the twisted component sign
  Partition q = sigma_conjugate(p, r);
  LaurentCharacter f = char_o_at(q, o_even_twisted_eigenvalues(m), m - 1);
  return f * Int(-1);
}

// Hook content formula.
inline Int schur_dim(const Partition& p, int n) {
  if (p.length() > n) return 0;
  Rat dim(1);
  Partition t = p.conjugate();
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      int hook = (p.part(i) - j) + (t.part(j) - i) + 1;
      dim *= Rat(n + j - i) / hook;
    }
  check(dim.get_den() == 1, "hook content must divide out");
  return dim.get_num();
}

inline Int sp_dim(const Partition& p, int m) {
  return char_sp(p, m).sum_of_coefficients();
}

inline Int o_dim(const Partition& p, int r) {
  return char_o(p, r).sum_of_coefficients();
}

// Restriction maps from the GL(r) torus onto the classical subgroup torus.
inline TorusMap sp_restriction(int r) {
  require(r % 2 == 0, "Sp needs even r");
  int m = r / 2;
  TorusMap t;
  t.target_vars = m;
  t.images.resize(r);
  for (int i = 0; i < m; ++i) {
    t.images[i] = {i, 1, false};
    t.images[r - 1 - i] = {i, -1, false};
  }
  return t;
}

inline TorusMap so_odd_restriction(int r) {
  require(r % 2 == 1, "needs odd r");
  int m = r / 2;
  TorusMap t;
  t.target_vars = m;
  t.images.resize(r);
  for (int i = 0; i < m; ++i) {
    t.images[i] = {i, 1, false};
    t.images[r - 1 - i] = {i, -1, false};
  }
  t.images[m] = {-1, 0, false};
  return t;
}

inline TorusMap o_even_twisted_restriction(int r) {
  require(r % 2 == 0 && r >= 2, "needs even r");
  int m = r / 2;
  TorusMap t;
  t.target_vars = m - 1;
  t.images.resize(r);
  for (int i = 0; i < m - 1; ++i) {
    t.images[i] = {i, 1, false};
    t.images[r - 1 - i] = {i, -1, false};
  }
  t.images[m - 1] = {-1, 0, false};
  t.images[m] = {-1, 0, true};
  return t;
}

struct PeelResult {
  std::map<Partition, Int> mults;
  bool ok = true;
  std::string reason;
};

namespace detail {

// Generic greedy peel: repeatedly strip coeff * reference(lex-max weight).
// reference(lam) must have lex-max term z^lam with coefficient one.
template <class Ref>
PeelResult peel_generic(LaurentCharacter f, int max_len, Ref&& reference) {
  PeelResult res;
  while (!f.is_zero()) {
    auto [e, c] = f.lex_max();
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
      if (e[i] < e[i + 1]) {
        res.ok = false;
        res.reason = "leading weight is not dominant";
        return res;
      }
    if (!e.empty() && e.back() < 0) {
      res.ok = false;
      res.reason = "leading weight has a negative entry";
      return res;
    }
    if (c < 0) {
      res.ok = false;
      res.reason = "negative leading coefficient";
      return res;
    }
    std::vector<int> clean = e;
    while (!clean.empty() && clean.back() == 0) clean.pop_back();
    Partition lam(clean);
    if (max_len >= 0 && lam.length() > max_len) {
      res.ok = false;
      res.reason = "leading weight longer than the rank allows";
      return res;
    }
    f -= reference(lam) * c;
    if (!f.is_zero()) check(f.lex_max().first < e, "peel failed to descend");
    res.mults[lam] = c;
  }
  return res;
}

}  // namespace detail

inline PeelResult try_peel_gl(const LaurentCharacter& f, int n) {
  check(f.nvars() == n, "variable count mismatch");
  return detail::peel_generic(
      f, n, [n](const Partition& lam) { return schur_monomials(lam, n); });
}

inline PeelResult try_peel_sp(const LaurentCharacter& f, int m) {
  check(f.nvars() == m, "variable count mismatch");
  return detail::peel_generic(
      f, m, [m](const Partition& lam) { return char_sp(lam, m); });
}

inline std::map<Partition, Int> peel_gl(const LaurentCharacter& f, int n) {
  PeelResult r = try_peel_gl(f, n);
  check(r.ok, "not a polynomial GL character: " + r.reason);
  return std::move(r.mults);
}

inline std::map<Partition, Int> peel_sp(const LaurentCharacter& f, int m) {
  PeelResult r = try_peel_sp(f, m);
  check(r.ok, "not an Sp character: " + r.reason);
  return std::move(r.mults);
}

// O(2m+1) labels from the restriction to the connected component.  Every
// constituent shares the parity of the ambient degree, since -id acts by
// (-1)^degree; the label with the wrong parity is traded for its partner.
inline PeelResult try_peel_o_odd(const LaurentCharacter& f, int r,
                                 int parity) {
  require(r % 2 == 1, "try_peel_o_odd needs odd r");
  int m = r / 2;
  check(f.nvars() == m, "variable count mismatch");
  auto eigs = so_odd_eigenvalues(m);
  PeelResult base = detail::peel_generic(
      f, m, [&](const Partition& lam) { return char_o_at(lam, eigs, m); });
  if (!base.ok) return base;
  PeelResult out;
  for (const auto& [mu, c] : base.mults) {
    Partition label =
        ((mu.size() & 1) == (parity & 1)) ? mu : sigma_conjugate(mu, r);
    check(is_o_label(label, r), "relabeled weight is not an O label");
    out.mults[label] += c;
  }
  return out;
}

// O(2m) labels need both components: the connected-component peel only sees
// the sum over each {mu, mu^sigma} pair, the reflection component separates
// the pair through an exact linear solve over its character values.
inline PeelResult try_peel_o_even(const LaurentCharacter& f_ord,
                                  const LaurentCharacter& f_tw, int r) {
  require(r % 2 == 0 && r >= 2, "try_peel_o_even needs even r");
  int m = r / 2;
  check(f_ord.nvars() == m, "ordinary component variable count mismatch");
  check(f_tw.nvars() == m - 1, "twisted component variable count mismatch");
  auto eigs = sp_eigenvalues(m);
  PeelResult base = detail::peel_generic(
      f_ord, m, [&](const Partition& lam) { return char_o_at(lam, eigs, m); });
  if (!base.ok) return base;

  std::vector<Partition> paired;
  for (const auto& [mu, c] : base.mults)
    if (mu.length() < m) paired.push_back(mu);

  // residual = sum over pairs of (m_mu - m_{mu^sigma}) * tw_mu
  LaurentCharacter residual = f_tw;
  std::vector<LaurentCharacter> tw;
  for (const Partition& mu : paired)
    tw.push_back(char_o_twisted(mu, r));

  std::map<std::vector<int>, int> coord;
  for (const auto& [e, c] : residual.terms()) coord.emplace(e, 0);
  for (const auto& t : tw)
    for (const auto& [e, c] : t.terms()) coord.emplace(e, 0);
  int idx = 0;
  for (auto& [e, i] : coord) i = idx++;

  std::vector<Int> d(paired.size(), 0);
  if (!paired.empty()) {
    ExactMatrix a(idx, static_cast<int>(paired.size()));
    std::vector<Rat> b(idx, Rat(0));
    for (std::size_t j = 0; j < paired.size(); ++j)
      for (const auto& [e, c] : tw[j].terms())
        a.at(coord.at(e), static_cast<int>(j)) = Rat(c);
    for (const auto& [e, c] : residual.terms())
      b[coord.at(e)] = Rat(c);
    std::vector<Rat> x = a.solve_unique(b);
    for (std::size_t j = 0; j < paired.size(); ++j) {
      check(x[j].get_den() == 1, "pair separation must be integral");
      d[j] = x[j].get_num();
    }
  } else {
    check(residual.is_zero(),
          "reflection character unaccounted for by split labels");
  }

  PeelResult out;
  for (const auto& [mu, c] : base.mults)
    if (mu.length() == m) {
      check(char_o_twisted(mu, r).is_zero(),
            "length-m label must vanish on the reflection component");
      if (c != 0) out.mults[mu] = c;
    }
  for (std::size_t j = 0; j < paired.size(); ++j) {
    Int c = base.mults.at(paired[j]);
    Int hi = c + d[j], lo = c - d[j];
    check(hi % 2 == 0 && lo % 2 == 0 && hi >= 0 && lo >= 0,
          "pair multiplicities must be non-negative integers");
    Int m_mu = hi / 2, m_sigma = lo / 2;
    if (m_mu != 0) out.mults[paired[j]] = m_mu;
    if (m_sigma != 0) out.mults[sigma_conjugate(paired[j], r)] = m_sigma;
  }
  return out;
}

// Character of the k-th exterior power of the exterior square.
inline LaurentCharacter wedge_of_wedge2_character(int k, int n) {
  require(k >= 0, "k must be non-negative");
  return elementary(pair_eigenvalues(n, true), k, n)[k];
}

// Degree-d slice of Sym of the exterior (strict) or symmetric square.
inline LaurentCharacter pair_sym_slice(int d, int n, bool strict) {
  require(d >= 0, "degree must be non-negative");
  return complete_homogeneous(pair_eigenvalues(n, strict), d, n)[d];
}

}  // namespace covres
