#include "covres/char_engine.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace covres;

TEST_CASE("complete and elementary generating pieces") {
  auto h = complete_homogeneous(gl_eigenvalues(3), 3, 3);
  auto e = elementary(gl_eigenvalues(3), 3, 3);
  CHECK(h[2] == schur_monomials(Partition{2}, 3));
  CHECK(h[3] == schur_monomials(Partition{3}, 3));
  CHECK(e[2] == schur_monomials(Partition{1, 1}, 3));
  CHECK(e[3] == schur_monomials(Partition{1, 1, 1}, 3));
  CHECK(e[3].sum_of_coefficients() == 1);
}

TEST_CASE("schur monomial expansions") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& p : enumerate_box(4, 4)) {
      LaurentCharacter f = schur_monomials(p, n);
      CHECK(f.sum_of_coefficients() == schur_dim(p, n));
      if (n >= 2 && !f.is_zero()) {
        CHECK(f.swap_vars(0, 1) == f);
        CHECK(f.lex_max().second == 1);
      }
    }
  // determinant route agrees with the branching route
  for (const Partition& p : enumerate_box(3, 3)) {
    CHECK(schur_at(p, gl_eigenvalues(3), 3) == schur_monomials(p, 3));
    TorusMap t = sp_restriction(4);
    CHECK(schur_at(p, sp_eigenvalues(2), 2) ==
          t.apply(schur_monomials(p, 4)));
  }
}

TEST_CASE("gl peel inverts sums of schur polynomials") {
  LaurentCharacter f =
      schur_monomials(Partition{2}, 3) * Int(3) +
      schur_monomials(Partition{1, 1}, 3) * Int(2) +
      schur_monomials(Partition{3, 2, 1}, 3);
  auto m = peel_gl(f, 3);
  CHECK(m == std::map<Partition, Int>{
                 {Partition{2}, 3}, {Partition{1, 1}, 2}, {Partition{3, 2, 1}, 1}});

  auto prod = peel_gl(
      schur_monomials(Partition{1}, 2) * schur_monomials(Partition{1}, 2), 2);
  CHECK(prod == std::map<Partition, Int>{{Partition{2}, 1}, {Partition{1, 1}, 1}});

  PeelResult bad = try_peel_gl(
      LaurentCharacter::monomial({0, 1}, 1), 2);
  CHECK_FALSE(bad.ok);
  PeelResult neg = try_peel_gl(schur_monomials(Partition{1}, 2) * Int(-1), 2);
  CHECK_FALSE(neg.ok);
}

TEST_CASE("symplectic characters") {
  CHECK(sp_dim(Partition{}, 2) == 1);
  CHECK(sp_dim(Partition{1}, 2) == 4);
  CHECK(sp_dim(Partition{1, 1}, 2) == 5);
  CHECK(sp_dim(Partition{2}, 2) == 10);
  CHECK(sp_dim(Partition{2, 1}, 2) == 16);
  CHECK(sp_dim(Partition{2, 2}, 2) == 14);
  CHECK(sp_dim(Partition{1}, 3) == 6);
  CHECK(sp_dim(Partition{1, 1}, 3) == 14);
  CHECK(sp_dim(Partition{1, 1, 1}, 3) == 14);

  // Weyl group symmetry: permutations and inversions of the z's
  LaurentCharacter f = char_sp(Partition{2, 1}, 3);
  CHECK(f.swap_vars(0, 2) == f);
  CHECK(f.invert_var(1) == f);
  CHECK(f.lex_max() == std::make_pair(std::vector<int>{2, 1, 0}, Int(1)));

  auto m = peel_sp(char_sp(Partition{1}, 2) * char_sp(Partition{1}, 2), 2);
  CHECK(m == std::map<Partition, Int>{
                 {Partition{}, 1}, {Partition{1, 1}, 1}, {Partition{2}, 1}});
}

TEST_CASE("orthogonal characters on both components") {
  CHECK(o_dim(Partition{}, 3) == 1);
  CHECK(o_dim(Partition{1}, 3) == 3);
  CHECK(o_dim(Partition{1, 1}, 3) == 3);
  CHECK(o_dim(Partition{1, 1, 1}, 3) == 1);
  CHECK(o_dim(Partition{2}, 3) == 5);
  CHECK(o_dim(Partition{2, 1}, 3) == 5);
  CHECK(o_dim(Partition{3, 1}, 3) == 7);
  CHECK(o_dim(Partition{1}, 4) == 4);
  CHECK(o_dim(Partition{1, 1}, 4) == 6);
  CHECK(o_dim(Partition{2}, 4) == 9);
  CHECK(o_dim(Partition{2, 2}, 4) == 10);
  CHECK_THROWS_AS(char_o(Partition{2, 1, 1}, 3), domain_error);

  // reflection component of O(2): identity label 1, determinant -1,
  // two-dimensional labels trace zero
  CHECK(char_o_twisted(Partition{}, 2) == LaurentCharacter::one(0));
  CHECK(char_o_twisted(Partition{1, 1}, 2) ==
        LaurentCharacter::one(0) * Int(-1));
  CHECK(char_o_twisted(Partition{1}, 2).is_zero());
  CHECK(char_o_twisted(Partition{3}, 2).is_zero());

  // sigma-fixed labels vanish there in higher rank too
  CHECK(char_o_twisted(Partition{1, 1}, 4).is_zero());
  CHECK(char_o_twisted(Partition{2, 2}, 4).is_zero());
  CHECK(char_o_twisted(Partition{1, 1, 1, 1}, 4) ==
        LaurentCharacter::one(1) * Int(-1));
  CHECK(char_o_twisted(Partition{2, 1, 1}, 4) ==
        char_o_twisted(Partition{2}, 4) * Int(-1));
}

TEST_CASE("odd orthogonal peel with parity relabeling") {
  // wedge^2 of C^3 restricted from GL(3)
  TorusMap t = so_odd_restriction(3);
  LaurentCharacter f = t.apply(schur_monomials(Partition{1, 1}, 3));
  PeelResult r = try_peel_o_odd(f, 3, 0);
  REQUIRE(r.ok);
  CHECK(r.mults == std::map<Partition, Int>{{Partition{1, 1}, 1}});

  f = t.apply(schur_monomials(Partition{2, 1, 1}, 3));
  r = try_peel_o_odd(f, 3, 0);
  REQUIRE(r.ok);
  CHECK(r.mults == std::map<Partition, Int>{{Partition{1, 1}, 1}});

  f = t.apply(schur_monomials(Partition{2}, 3));
  r = try_peel_o_odd(f, 3, 0);
  REQUIRE(r.ok);
  CHECK(r.mults == std::map<Partition, Int>{{Partition{}, 1}, {Partition{2}, 1}});
}

TEST_CASE("even orthogonal peel separates conjugate pairs") {
  TorusMap ord = sp_restriction(4);
  TorusMap twi = o_even_twisted_restriction(4);
  auto restrict_o4 = [&](const Partition& p) {
    LaurentCharacter big = schur_monomials(p, 4);
    PeelResult r = try_peel_o_even(ord.apply(big), twi.apply(big), 4);
    REQUIRE(r.ok);
    return r.mults;
  };

  CHECK(restrict_o4(Partition{1, 1, 1}) ==
        std::map<Partition, Int>{{Partition{1, 1, 1}, 1}});
  CHECK(restrict_o4(Partition{1}) ==
        std::map<Partition, Int>{{Partition{1}, 1}});
  CHECK(restrict_o4(Partition{2}) ==
        std::map<Partition, Int>{{Partition{}, 1}, {Partition{2}, 1}});
  CHECK(restrict_o4(Partition{1, 1}) ==
        std::map<Partition, Int>{{Partition{1, 1}, 1}});
  CHECK(restrict_o4(Partition{1, 1, 1, 1}) ==
        std::map<Partition, Int>{{Partition{1, 1, 1, 1}, 1}});
  CHECK(restrict_o4(Partition{2, 2}) ==
        std::map<Partition, Int>{
            {Partition{}, 1}, {Partition{2}, 1}, {Partition{2, 2}, 1}});

  // dimension bookkeeping across a sweep
  for (const Partition& p : enumerate_box(4, 3)) {
    Int total = 0;
    for (const auto& [mu, c] : restrict_o4(p)) total += c * o_dim(mu, 4);
    CHECK(total == schur_dim(p, 4));
  }
}

TEST_CASE("exterior powers of the exterior square") {
  for (int n = 4; n <= 6; ++n)
    for (int k = 0; 2 * k <= 8; ++k) {
      LaurentCharacter f = wedge_of_wedge2_character(k, n);
      auto m = peel_gl(f, n);
      std::vector<Partition> expect = enumerate_q_minus1(2 * k, n);
      std::vector<Partition> got;
      Int total = 0;
      for (const auto& [p, c] : m) {
        CHECK(c == 1);
        got.push_back(p);
        total += c * schur_dim(p, n);
      }
      CHECK(got == expect);
      Int pairs = Int(n) * (n - 1) / 2;
      Int dim = 1;
      for (int i = 0; i < k; ++i) dim = dim * (pairs - i) / (i + 1);
      CHECK(total == dim);
    }
}

TEST_CASE("symmetric algebra slices of the squares") {
  // Sym^2 of the exterior square of C^4: even-column shapes of weight 4
  auto m = peel_gl(pair_sym_slice(2, 4, true), 4);
  CHECK(m == std::map<Partition, Int>{{Partition{2, 2}, 1},
                                      {Partition{1, 1, 1, 1}, 1}});
  Int dim22 = schur_dim(Partition{2, 2}, 4);
  CHECK(dim22 + schur_dim(Partition{1, 1, 1, 1}, 4) == 21);

  // general slices: multiplicity-free with the predicted column parity
  for (int n = 3; n <= 5; ++n)
    for (int d = 0; d <= 3; ++d) {
      for (const auto& [p, c] : peel_gl(pair_sym_slice(d, n, true), n)) {
        CHECK(c == 1);
        Partition t = p.conjugate();
        for (int j = 1; j <= t.length(); ++j) CHECK(t.part(j) % 2 == 0);
        CHECK(p.size() == 2 * d);
      }
      for (const auto& [p, c] : peel_gl(pair_sym_slice(d, n, false), n)) {
        CHECK(c == 1);
        for (int i = 1; i <= p.length(); ++i) CHECK(p.part(i) % 2 == 0);
        CHECK(p.size() == 2 * d);
      }
    }
}
