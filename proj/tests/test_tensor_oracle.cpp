#include "covres/tensor_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <vector>

using namespace covres;

namespace {

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// Invariant count with no torus shortcut: stack the action of a basis of the
// whole Lie algebra over the full product space and take the nullity.
Int full_algebra_invariants(const Partition& chi, int r, int d, bool skew) {
  IrrepRealization real =
      skew ? symplectic_irrep(chi, r) : orthogonal_irrep(chi, r);
  ExactMatrix cond(r * r, r * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      int s = a * r + b;
      for (int v = 0; v < r; ++v)
        cond.at(b * r + v, s) += detail::form_entry(skew, r, a, v);
      for (int u = 0; u < r; ++u)
        cond.at(u * r + b, s) += detail::form_entry(skew, r, u, a);
    }
  std::vector<std::vector<std::vector<Rat>>> ops;
  for (const std::vector<Rat>& combo : cond.kernel()) {
    std::vector<std::vector<Rat>> X(r, std::vector<Rat>(r, Rat(0)));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) X[a][b] = combo[a * r + b];
    ops.push_back(std::move(X));
  }

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
  for (const auto& E : monos) mono_id.emplace(E, static_cast<int>(mono_id.size()));

  detail::RealizationSolver solver(real);
  std::vector<std::vector<std::vector<Rat>>> imat;
  for (const auto& X : ops) {
    std::vector<std::vector<Rat>> mt(real.dim());
    for (int t = 0; t < real.dim(); ++t)
      mt[t] = solver.coordinates(detail::tensor_apply(real, X, real.basis[t]));
    imat.push_back(std::move(mt));
  }

  KernelTracker kernel;
  Int nullity = 0;
  long col = 0;
  for (int t = 0; t < real.dim(); ++t)
    for (std::size_t e = 0; e < monos.size(); ++e) {
      SparseVec stacked;
      long stride = static_cast<long>(real.dim()) * monos.size();
      for (std::size_t o = 0; o < ops.size(); ++o) {
        for (int t2 = 0; t2 < real.dim(); ++t2)
          if (imat[o][t][t2] != 0)
            stacked[static_cast<long>(o) * stride + t2 * monos.size() + e] +=
                imat[o][t][t2];
        const std::vector<int>& E = monos[e];
        for (int a = 0; a < r; ++a)
          for (int j = 0; j < r; ++j) {
            if (E[a * r + j] == 0) continue;
            for (int i = 0; i < r; ++i) {
              if (ops[o][j][i] == 0) continue;
              std::vector<int> E2 = E;
              --E2[a * r + j];
              ++E2[a * r + i];
              stacked[static_cast<long>(o) * stride + t * monos.size() +
                      mono_id.at(E2)] += -ops[o][j][i] * E[a * r + j];
            }
          }
      }
      for (auto it = stacked.begin(); it != stacked.end();)
        it = it->second == 0 ? stacked.erase(it) : std::next(it);
      if (kernel.insert(stacked, col++).has_value()) ++nullity;
    }
  return nullity;
}

}  // namespace

TEST_CASE("symmetrizer images carry the Weyl dimensions") {
  REQUIRE(schur_module(Partition{1, 1}, 2).dim() == 1);
  REQUIRE(schur_module(Partition{2, 1}, 3).dim() == 8);
  REQUIRE(schur_module(Partition{1, 1, 1}, 2).dim() == 0);

  for (int dim = 2; dim <= 4; ++dim)
    for (const Partition& lam : enumerate_box(4, 3)) {
      if (lam.size() > 5) continue;
      IrrepRealization real = schur_module(lam, dim);
      REQUIRE(Int(real.dim()) == schur_dim(lam, dim));
      REQUIRE(real.space_dim == dim);
      REQUIRE(real.tensor_degree == static_cast<int>(lam.size()));
    }

  // each basis vector keeps the letter content of a single word
  IrrepRealization real = schur_module(Partition{2, 1}, 3);
  for (const SparseVec& b : real.basis) {
    std::map<int, int> content;
    bool first = true;
    for (const auto& [idx, c] : b) {
      std::map<int, int> cnt;
      for (int letter : detail::decode_word(idx, 3, 3)) ++cnt[letter];
      if (first) {
        content = cnt;
        first = false;
      }
      REQUIRE(cnt == content);
    }
  }

  REQUIRE_THROWS_AS(schur_module(Partition{3, 3, 3}, 3), domain_error);
  REQUIRE_THROWS_AS(schur_module(Partition{1}, 0), domain_error);
}

TEST_CASE("traceless cuts carry the classical dimensions") {
  REQUIRE(symplectic_irrep(Partition{1, 1}, 4).dim() == 5);
  REQUIRE(symplectic_irrep(Partition{1}, 4).dim() == 4);
  REQUIRE(symplectic_irrep(Partition{2, 1}, 4).dim() == 16);

  for (const Partition& chi : enumerate_box(2, 2))
    REQUIRE(Int(symplectic_irrep(chi, 4).dim()) == sp_dim(chi, 2));
  REQUIRE(Int(symplectic_irrep(Partition{1, 1, 1}, 6).dim()) ==
          sp_dim(Partition{1, 1, 1}, 3));

  for (int r : {2, 3})
    for (const Partition& chi : enumerate_box(r, 3)) {
      if (chi.size() > 3 || !is_admissible(chi, r)) continue;
      REQUIRE(Int(orthogonal_irrep(chi, r).dim()) == o_dim(chi, r));
    }
  REQUIRE(orthogonal_irrep(Partition{2}, 3).dim() == 5);
  REQUIRE(orthogonal_irrep(Partition{1, 1, 1}, 3).dim() == 1);
  REQUIRE(orthogonal_irrep(Partition{1, 1}, 4).dim() == 6);
  REQUIRE(orthogonal_irrep(Partition{2}, 4).dim() == 9);

  REQUIRE_THROWS_AS(symplectic_irrep(Partition{1}, 3), domain_error);
  REQUIRE_THROWS_AS(symplectic_irrep(Partition{1, 1, 1}, 4), domain_error);
  REQUIRE_THROWS_AS(orthogonal_irrep(Partition{2, 2, 2}, 3), domain_error);
}

TEST_CASE("invariant dimensions match the pinned spot values") {
  REQUIRE(invariant_dimension(Partition{}, 4, 2, Flavor::skew) == 6);
  REQUIRE(invariant_dimension(Partition{1}, 4, 1, Flavor::skew) == 4);
  REQUIRE(invariant_dimension(Partition{1}, 4, 2, Flavor::skew) == 0);
  REQUIRE(invariant_dimension(Partition{1}, 2, 1, Flavor::skew) == 2);

  // the reflection component cuts the torus-invariant count from 4 to 3
  REQUIRE(invariant_dimension(Partition{}, 2, 2, Flavor::symmetric) == 3);
  // -1 acts by total parity on the odd orthogonal side
  REQUIRE(invariant_dimension(Partition{1}, 3, 2, Flavor::symmetric) == 0);
  REQUIRE(invariant_dimension(Partition{1}, 3, 1, Flavor::symmetric) == 3);
  REQUIRE(invariant_dimension(Partition{}, 4, 2, Flavor::symmetric) == 10);
}

TEST_CASE("trivial label invariants fill the free generator series") {
  for (int r : {2, 4})
    for (int d = 0; d <= 4; ++d) {
      Int expect = d % 2 ? Int(0) : binom(r * (r - 1) / 2 + d / 2 - 1, d / 2);
      REQUIRE(invariant_dimension(Partition{}, r, d, Flavor::skew) == expect);
    }
  for (int r : {2, 3})
    for (int d = 0; d <= 4; ++d) {
      Int expect = d % 2 ? Int(0) : binom(r * (r + 1) / 2 + d / 2 - 1, d / 2);
      REQUIRE(invariant_dimension(Partition{}, r, d, Flavor::symmetric) ==
              expect);
    }
}

TEST_CASE("weight slicing is a shortcut, not an assumption") {
  REQUIRE(full_algebra_invariants(Partition{1}, 2, 1, true) ==
          invariant_dimension(Partition{1}, 2, 1, Flavor::skew));
  REQUIRE(full_algebra_invariants(Partition{}, 4, 2, true) ==
          invariant_dimension(Partition{}, 4, 2, Flavor::skew));
  REQUIRE(full_algebra_invariants(Partition{1, 1}, 4, 2, true) ==
          invariant_dimension(Partition{1, 1}, 4, 2, Flavor::skew));
}

TEST_CASE("cross checks replay the character dimensions") {
  VerificationReport rep = cross_check(Partition{}, 4, 4, Flavor::skew);
  INFO(rep.detail);
  REQUIRE(rep.ok);
  REQUIRE(rep.degrees_checked == 5);
  std::vector<Int> dims;
  for (int d = 0; d <= 4; ++d)
    dims.push_back(invariant_dimension(Partition{}, 4, d, Flavor::skew));
  REQUIRE(dims == std::vector<Int>{1, 0, 6, 0, 21});

  rep = cross_check(Partition{1, 1}, 4, 3, Flavor::skew);
  INFO(rep.detail);
  REQUIRE(rep.ok);

  rep = cross_check(Partition{1}, 3, 3, Flavor::symmetric);
  INFO(rep.detail);
  REQUIRE(rep.ok);
}

TEST_CASE("the desk-scale envelope is enforced") {
  REQUIRE_THROWS_AS(invariant_dimension(Partition{}, 6, 0, Flavor::skew),
                    domain_error);
  REQUIRE_THROWS_AS(invariant_dimension(Partition{}, 4, 5, Flavor::skew),
                    domain_error);
  REQUIRE_THROWS_AS(
      invariant_dimension(Partition{2, 1, 1, 1}, 4, 0, Flavor::skew),
      domain_error);
  REQUIRE_THROWS_AS(invariant_dimension(Partition{1}, 3, 1, Flavor::skew),
                    domain_error);
}
