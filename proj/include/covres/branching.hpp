#pragma once

#include <mutex>
#include <sstream>
#include <tuple>
#include <vector>

#include "covres/cache.hpp"
#include "covres/char_engine.hpp"
#include "covres/partition.hpp"

namespace covres {

namespace detail {

// Count Littlewood-Richardson fillings of lam/mu with content nu.  Cells are
// filled row by row, right to left, so placement order equals reading order
// and the lattice condition can be enforced on every prefix.
inline Int lr_count(const Partition& lam, const Partition& mu,
                    const Partition& nu) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= lam.length(); ++i)
    for (int j = lam.part(i); j > mu.part(i); --j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> ent(
      lam.length() + 1, std::vector<int>(lam.part(1) + 2, 0));
  std::vector<int> counts(nu.length() + 1, 0);
  Int total = 0;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      ++total;
      return;
    }
    auto [i, j] = cells[k];
    int lo = (i >= 2 && j <= lam.part(i - 1)) ? ent[i - 1][j] + 1 : 1;
    int hi = (j < lam.part(i)) ? ent[i][j + 1] : nu.length();
    for (int v = lo; v <= hi; ++v) {
      if (counts[v] >= nu.part(v)) continue;
      if (v >= 2 && counts[v] >= counts[v - 1]) continue;
      ++counts[v];
      ent[i][j] = v;
      self(self, k + 1);
      --counts[v];
    }
    ent[i][j] = 0;
  };
  rec(rec, 0);
  return total;
}

}  // namespace detail

inline Int lr_coefficient(const Partition& lam, const Partition& mu,
                          const Partition& nu) {
  if (!lam.contains(mu)) return 0;
  if (lam.size() != mu.size() + nu.size()) return 0;
  if (nu.empty()) return 1;
  if (!lam.contains(nu)) return 0;
  // fewer free cells when the smaller factor is the content
  if (nu.size() > mu.size()) return lr_coefficient(lam, nu, mu);

  static std::map<std::tuple<Partition, Partition, Partition>, Int> memo;
  static std::mutex mx;
  std::tuple<Partition, Partition, Partition> key{lam, mu, nu};
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::string ck = "lr|" + lam.str() + "|" + mu.str() + "|" + nu.str();
  Int c;
  bool have = false;
  if (auto hit = DiskCache::instance().get(ck)) {
    try {
      c = Int(*hit);
      have = true;
    } catch (...) {
      have = false;
    }
  }
  if (!have) {
    c = detail::lr_count(lam, mu, nu);
    DiskCache::instance().put(ck, c.get_str());
  }
  std::lock_guard<std::mutex> lk(mx);
  memo.emplace(std::move(key), c);
  return c;
}

// s_mu * s_nu expanded in the schur basis, optionally truncated in length.
inline std::map<Partition, Int> schur_product(const Partition& mu,
                                              const Partition& nu,
                                              int max_len = -1) {
  int len_cap = mu.length() + nu.length();
  if (max_len >= 0) len_cap = std::min(len_cap, max_len);
  std::map<Partition, Int> out;
  for (const Partition& lam :
       enumerate_partitions(mu.size() + nu.size(), len_cap,
                            mu.part(1) + nu.part(1))) {
    if (!lam.contains(mu)) continue;
    Int c = lr_coefficient(lam, mu, nu);
    if (c != 0) out.emplace(lam, c);
  }
  return out;
}

inline std::vector<Partition> even_row_partitions(int size, int max_len,
                                                  int max_part) {
  std::vector<Partition> out;
  if (size % 2 != 0) return out;
  for (const Partition& d :
       enumerate_partitions(size / 2, max_len, max_part / 2)) {
    std::vector<int> parts;
    for (int x : d.parts()) parts.push_back(2 * x);
    out.emplace_back(parts);
  }
  return out;
}

inline std::vector<Partition> even_column_partitions(int size, int max_len,
                                                     int max_part) {
  std::vector<Partition> out;
  if (size % 2 != 0) return out;
  // beta = (2 delta)': the length cap bounds delta's parts and vice versa
  for (const Partition& d :
       enumerate_partitions(size / 2, max_part, max_len / 2)) {
    std::vector<int> parts;
    for (int x : d.parts()) parts.push_back(2 * x);
    out.emplace_back(Partition(parts).conjugate());
  }
  return out;
}

enum class GroupFamily { sp, o };

namespace detail {

inline std::string table_to_string(const std::map<Partition, Int>& m) {
  std::string s;
  for (const auto& [p, c] : m) {
    if (!s.empty()) s += ";";
    s += p.str() + "=" + c.get_str();
  }
  return s;
}

inline std::optional<std::map<Partition, Int>> table_from_string(
    const std::string& s) {
  std::map<Partition, Int> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) return std::nullopt;
    std::string shape = item.substr(0, eq);
    if (shape.size() < 2 || shape.front() != '(' || shape.back() != ')')
      return std::nullopt;
    std::vector<int> parts;
    std::istringstream ps(shape.substr(1, shape.size() - 2));
    std::string tok;
    while (std::getline(ps, tok, ','))
      if (!tok.empty()) parts.push_back(std::stoi(tok));
    try {
      out.emplace(Partition(parts), Int(item.substr(eq + 1)));
    } catch (...) {
      return std::nullopt;
    }
  }
  return out;
}

// Littlewood's stable formula: pair gamma against the generators of the
// invariant algebra (even columns for sp, even rows for o).
inline std::map<Partition, Int> restrict_stable(const Partition& gamma, int r,
                                                GroupFamily fam) {
  std::map<Partition, Int> out;
  std::vector<Partition> mus = enumerate_box(gamma.length(), gamma.part(1));
  for (int b = 0; b <= gamma.size(); b += 2) {
    std::vector<Partition> betas =
        fam == GroupFamily::sp
            ? even_column_partitions(b, gamma.length(), gamma.part(1))
            : even_row_partitions(b, gamma.length(), gamma.part(1));
    for (const Partition& beta : betas)
      for (const Partition& mu : mus) {
        if (mu.size() != gamma.size() - b) continue;
        Int c = lr_coefficient(gamma, mu, beta);
        if (c != 0) out[mu] += c;
      }
  }
  return out;
}

inline std::map<Partition, Int> restrict_by_peel(const Partition& gamma, int r,
                                                 GroupFamily fam) {
  LaurentCharacter big = schur_monomials(gamma, r);
  if (fam == GroupFamily::sp) {
    check(r % 2 == 0, "Sp needs even rank");
    return peel_sp(sp_restriction(r).apply(big), r / 2);
  }
  if (r % 2 == 1) {
    PeelResult res = try_peel_o_odd(so_odd_restriction(r).apply(big), r,
                                    gamma.size() % 2);
    check(res.ok, "restriction failed to peel: " + res.reason);
    return std::move(res.mults);
  }
  PeelResult res =
      try_peel_o_even(sp_restriction(r).apply(big),
                      o_even_twisted_restriction(r).apply(big), r);
  check(res.ok, "restriction failed to peel: " + res.reason);
  return std::move(res.mults);
}

}  // namespace detail

// Multiplicities of the classical-group labels in s_gamma of the standard
// representation.  Stable shapes take the combinatorial route, long shapes
// fall back to character peeling; both are checked against the dimension
// count of the restricted module.
inline std::map<Partition, Int> restrict_standard(const Partition& gamma,
                                                  int r, GroupFamily fam) {
  require(r >= 1, "rank must be positive");
  require(fam != GroupFamily::sp || r % 2 == 0, "Sp needs even rank");
  require(gamma.length() <= r, "shape too long for GL(r)");

  static std::map<std::tuple<Partition, int, int>, std::map<Partition, Int>>
      memo;
  static std::mutex mx;
  std::tuple<Partition, int, int> key{gamma, r, fam == GroupFamily::sp};
  {
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  std::string ck = std::string("restr|") +
                   (fam == GroupFamily::sp ? "sp|" : "o|") +
                   std::to_string(r) + "|" + gamma.str();
  std::map<Partition, Int> out;
  bool have = false;
  if (auto hit = DiskCache::instance().get(ck))
    if (auto parsed = detail::table_from_string(*hit)) {
      out = std::move(*parsed);
      have = true;
    }
  if (!have) {
    out = gamma.length() <= r / 2 ? detail::restrict_stable(gamma, r, fam)
                                  : detail::restrict_by_peel(gamma, r, fam);
    DiskCache::instance().put(ck, detail::table_to_string(out));
  }

  Int total = 0;
  for (const auto& [mu, c] : out) {
    check(c > 0, "restriction multiplicities must be positive");
    check(mu.size() % 2 == gamma.size() % 2,
          "restriction label has impossible parity");
    check(mu.part(1) <= gamma.part(1),
          "restriction label exceeds the source width");
    total += c * (fam == GroupFamily::sp ? sp_dim(mu, r / 2) : o_dim(mu, r));
  }
  check(total == schur_dim(gamma, r), "restriction loses dimensions");

  std::lock_guard<std::mutex> lk(mx);
  memo.emplace(std::move(key), out);
  return out;
}

inline std::map<Partition, Int> restrict_gl_to_sp(const Partition& gamma,
                                                  int r) {
  return restrict_standard(gamma, r, GroupFamily::sp);
}

inline std::map<Partition, Int> restrict_gl_to_o(const Partition& gamma,
                                                 int r) {
  return restrict_standard(gamma, r, GroupFamily::o);
}

inline Int covariant_multiplicity(const Partition& chi, const Partition& gamma,
                                  int r, GroupFamily fam) {
  if (chi.size() % 2 != gamma.size() % 2) return 0;
  if (chi.part(1) > gamma.part(1)) return 0;
  auto table = restrict_standard(gamma, r, fam);
  auto it = table.find(chi);
  return it == table.end() ? Int(0) : it->second;
}

}  // namespace covres
