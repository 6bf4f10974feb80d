#pragma once

#include <map>
#include <string>
#include <vector>

#include "covres/branching.hpp"
#include "covres/char_engine.hpp"
#include "covres/shape_engine.hpp"

namespace covres {

using SchurExpansion = std::map<Partition, Int>;

inline GroupFamily family_of(Flavor f) {
  return f == Flavor::skew ? GroupFamily::sp : GroupFamily::o;
}

// Graded character of the covariants module attached to chi: for each
// polynomial degree, the multiplicity of chi in the restriction of every
// Schur functor of that degree.  Wrong-parity degrees are absent.
inline std::map<int, SchurExpansion> covariant_character(const Partition& chi,
                                                         int r, Flavor f,
                                                         int max_degree) {
  require(max_degree >= 0, "degree bound must be non-negative");
  std::map<int, SchurExpansion> slices;
  GroupFamily fam = family_of(f);
  for (int d = 0; d <= max_degree; ++d) {
    if ((d - chi.size()) % 2 != 0) continue;
    SchurExpansion slice;
    for (const Partition& gamma : enumerate_partitions(d, r, d)) {
      Int m = covariant_multiplicity(chi, gamma, r, fam);
      if (m != 0) slice.emplace(gamma, m);
    }
    if (!slice.empty()) slices.emplace(d, std::move(slice));
  }
  return slices;
}

// Alternating sum of the free-module characters over the resolution terms.
// Each term contributes its generator weight times the generator slices of
// the polynomial ring, truncated to partitions of length at most r.
inline std::map<int, SchurExpansion> euler_characteristic(
    const ResolutionShape& shape, int max_degree) {
  std::map<int, SchurExpansion> slices;
  for (const auto& [t, list] : shape.terms) {
    Int sign = t % 2 == 0 ? 1 : -1;
    for (const Partition& lam : list) {
      for (int e = 0; lam.size() + 2 * e <= max_degree; ++e) {
        int d = lam.size() + 2 * e;
        auto gens = shape.flavor == Flavor::skew
                        ? even_column_partitions(2 * e, shape.r, 2 * e)
                        : even_row_partitions(2 * e, shape.r, 2 * e);
        for (const Partition& beta : gens)
          for (const auto& [nu, c] : schur_product(lam, beta, shape.r))
            slices[d][nu] += sign * c;
      }
    }
  }
  for (auto it = slices.begin(); it != slices.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();)
      jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
    it = it->second.empty() ? slices.erase(it) : std::next(it);
  }
  return slices;
}

struct VerificationReport {
  bool ok = true;
  int degrees_checked = 0;
  std::string detail;
};

// Degree-by-degree exact comparison of the covariants character with the
// alternating sum over the resolution of chi.
inline VerificationReport verify_euler(const Partition& chi, int r, Flavor f,
                                       int max_degree) {
  VerificationReport rep;
  ResolutionShape shape = resolution_shape(chi, r, f);
  auto lhs = covariant_character(chi, r, f, max_degree);
  auto rhs = euler_characteristic(shape, max_degree);
  rep.degrees_checked = max_degree + 1;
  for (int d = 0; d <= max_degree; ++d) {
    static const SchurExpansion empty;
    const SchurExpansion& a = lhs.count(d) ? lhs.at(d) : empty;
    const SchurExpansion& b = rhs.count(d) ? rhs.at(d) : empty;
    if (a != b) {
      rep.ok = false;
      rep.detail = "degree " + std::to_string(d) + ": covariants {" +
                   detail::table_to_string(a) + "} vs euler sum {" +
                   detail::table_to_string(b) + "}";
      return rep;
    }
  }
  return rep;
}

// Vector-space dimensions of the covariant slices for a quotient of rank q.
inline std::vector<Int> covariant_dims(const Partition& chi, int r, Flavor f,
                                       int q, int max_degree) {
  std::vector<Int> dims(max_degree + 1);
  for (const auto& [d, slice] : covariant_character(chi, r, f, max_degree))
    for (const auto& [gamma, m] : slice) dims[d] += m * schur_dim(gamma, q);
  return dims;
}

// Graded dimensions of the invariant maps between two covariant modules:
// in degree d, each Schur functor of the n-dimensional multiplicity space
// is weighted by the invariants in lam x mu x (that functor restricted).
inline std::vector<Int> hom_graded_dims(const Partition& lam,
                                        const Partition& mu, int n, int r,
                                        int max_degree) {
  require(r >= 2 && r % 2 == 0, "needs even r");
  int m = r / 2;
  require(lam.length() <= m && mu.length() <= m, "labels must fit the rank");
  LaurentCharacter pair = char_sp(lam, m) * char_sp(mu, m);
  TorusMap rest = sp_restriction(r);
  std::vector<Int> dims(max_degree + 1);
  for (int d = 0; d <= max_degree; ++d) {
    Int total = 0;
    for (const Partition& gamma :
         enumerate_partitions(d, std::min(n, r), d)) {
      LaurentCharacter g = rest.apply(schur_monomials(gamma, r));
      auto mults = peel_sp(pair * g, m);
      auto it = mults.find(Partition{});
      if (it != mults.end()) total += it->second * schur_dim(gamma, n);
    }
    dims[d] = total;
  }
  return dims;
}

}  // namespace covres
