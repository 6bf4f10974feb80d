// Acceptance runner: every release-gating property as one pass/fail line.
// Run with no arguments for the full battery, or pass criterion numbers.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "covres/branching.hpp"
#include "covres/char_engine.hpp"
#include "covres/euler.hpp"
#include "covres/partition.hpp"
#include "covres/pieri.hpp"
#include "covres/shape_engine.hpp"
#include "covres/tensor_oracle.hpp"
#include "covres/util.hpp"

using namespace covres;

namespace {

using Terms = std::map<int, std::vector<Partition>>;

bool shapes_match(std::ostream& out, const Partition& chi, int r, Flavor f,
                  const Terms& expect) {
  ResolutionShape got = resolution_shape(chi, r, f);
  if (got.terms == expect) return true;
  out << "  shape of " << chi.str() << " at r=" << r << " is\n"
      << got.str() << "\n";
  return false;
}

bool criterion_shapes_r4(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  for (int a = 1; a <= 3; ++a) {
    ok = shapes_match(out, Partition{a}, 4, Flavor::skew,
                      Terms{{0, {Partition{a}}}}) &&
         ok;
    ++cases;
    for (int b = 1; b <= a; ++b) {
      ok = shapes_match(out, Partition{a, b}, 4, Flavor::skew,
                        Terms{{0, {Partition{a, b}}},
                              {1, {Partition{a, b, 1, 1}}}}) &&
           ok;
      ++cases;
    }
  }
  out << "  " << cases << " weights\n";
  return ok;
}

bool criterion_shapes_r6(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        Partition chi(std::vector<int>{a, b, c});
        Terms expect;
        if (c >= 2)
          expect = Terms{{0, {chi}},
                         {1, {Partition{a, b, c, 1, 1}}},
                         {2, {Partition{a, b, c, 2, 1, 1}}},
                         {3, {Partition{a, b, c, 2, 2, 2}}}};
        else if (c == 1)
          expect = Terms{{0, {chi}}, {1, {Partition{a, b, 1, 1, 1}}}};
        else if (b >= 1)
          expect = Terms{{0, {chi}}, {1, {Partition{a, b, 1, 1, 1, 1}}}};
        else
          expect = Terms{{0, {chi}}};
        ok = shapes_match(out, chi, 6, Flavor::skew, expect) && ok;
        ++cases;
      }
  out << "  " << cases << " weights\n";
  return ok;
}

bool criterion_routes_agree(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  for (int r : {4, 6}) {
    int m = r / 2;
    for (const Partition& chi : enumerate_box(m, 4)) {
      if (chi.part(m) < m - 1) continue;
      ++cases;
      if (appendix_shape(chi, r).terms !=
          resolution_shape(chi, r, Flavor::skew).terms) {
        out << "  route mismatch at chi=" << chi.str() << " r=" << r << "\n";
        ok = false;
      }
    }
  }
  out << "  " << cases << " weights\n";
  return ok;
}

bool criterion_wedge_support(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  for (int k = 0; k <= 6; ++k)
    for (int n = 1; n <= 8; ++n) {
      ++cases;
      std::map<Partition, Int> m = peel_gl(wedge_of_wedge2_character(k, n), n);
      std::vector<Partition> expect = enumerate_q_minus1(2 * k, n);
      std::vector<Partition> got;
      for (const auto& [p, c] : m) {
        if (c != 1) {
          out << "  multiplicity " << c.get_str() << " at " << p.str()
              << " (k=" << k << ", n=" << n << ")\n";
          ok = false;
        }
        got.push_back(p);
      }
      if (got != expect) {
        out << "  support mismatch at k=" << k << ", n=" << n << "\n";
        ok = false;
      }
    }
  out << "  " << cases << " characters\n";
  return ok;
}

bool euler_sweep(std::ostream& out, Flavor f, int r,
                 const std::vector<Partition>& labels, int degree, int& cases) {
  bool ok = true;
  for (const Partition& chi : labels) {
    ++cases;
    VerificationReport rep = verify_euler(chi, r, f, degree);
    if (!rep.ok) {
      out << "  chi=" << chi.str() << " r=" << r << ": " << rep.detail << "\n";
      ok = false;
    }
  }
  return ok;
}

bool criterion_euler_skew(std::ostream& out) {
  int cases = 0;
  bool ok =
      euler_sweep(out, Flavor::skew, 4, enumerate_box(2, 3), 10, cases) &&
      euler_sweep(out, Flavor::skew, 6, enumerate_box(3, 2), 10, cases);
  out << "  " << cases << " weights to degree 10\n";
  return ok;
}

bool criterion_euler_symmetric(std::ostream& out) {
  int cases = 0;
  bool ok =
      euler_sweep(out, Flavor::symmetric, 3, admissible_box(3, 2), 8, cases) &&
      euler_sweep(out, Flavor::symmetric, 4, admissible_box(4, 2), 8, cases);
  out << "  " << cases << " weights to degree 8\n";
  return ok;
}

bool criterion_oracle(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  std::vector<Partition> skew_labels{Partition{}, Partition{1}, Partition{1, 1},
                                     Partition{2, 1}};
  for (const Partition& chi : skew_labels) {
    ++cases;
    VerificationReport rep = cross_check(chi, 4, 3, Flavor::skew);
    if (!rep.ok) {
      out << "  skew chi=" << chi.str() << ":\n" << rep.detail;
      ok = false;
    }
  }
  std::vector<Partition> sym_labels{Partition{}, Partition{1}, Partition{2}};
  for (const Partition& chi : sym_labels) {
    ++cases;
    VerificationReport rep = cross_check(chi, 3, 3, Flavor::symmetric);
    if (!rep.ok) {
      out << "  symmetric chi=" << chi.str() << ":\n" << rep.detail;
      ok = false;
    }
  }
  out << "  " << cases << " labels to degree 3\n";
  return ok;
}

bool criterion_branching(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  auto sweep = [&](GroupFamily fam, int r) {
    for (int size = 0; size <= 6; ++size)
      for (const Partition& lam : enumerate_partitions(size, r / 2, size)) {
        ++cases;
        auto stable = detail::restrict_stable(lam, r, fam);
        auto peeled = detail::restrict_by_peel(lam, r, fam);
        if (stable != peeled) {
          out << "  route mismatch at lambda=" << lam.str() << " r=" << r
              << "\n";
          ok = false;
        }
        if (fam == GroupFamily::sp)
          for (const auto& [mu, mult] : stable)
            if (mu.part(1) > lam.part(1)) {
              out << "  first part grows: " << lam.str() << " -> " << mu.str()
                  << " at r=" << r << "\n";
              ok = false;
            }
      }
  };
  sweep(GroupFamily::sp, 4);
  sweep(GroupFamily::sp, 6);
  sweep(GroupFamily::o, 3);
  sweep(GroupFamily::o, 4);
  out << "  " << cases << " restrictions\n";
  return ok;
}

bool criterion_split_compositions(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  for (int dim_r = 2; dim_r <= 6; ++dim_r)
    for (int k = 1; 2 * k <= 8; ++k)
      for (const Partition& alpha : enumerate_q_minus1(2 * k, dim_r))
        for (const Partition& beta : enumerate_q_minus1(2 * k - 2, dim_r)) {
          if (!is_subset2(beta, alpha)) continue;
          ++cases;
          if (!verify_lemma_a2(alpha, beta, dim_r)) {
            out << "  vanishing composition: " << alpha.str() << " over "
                << beta.str() << " in dimension " << dim_r << "\n";
            ok = false;
          }
        }
  out << "  " << cases << " pairs\n";
  return ok && cases > 0;
}

bool criterion_pieri_end_to_end(std::ostream& out) {
  bool ok = true;
  struct Case {
    Partition chi;
    int r;
  };
  std::vector<Case> cases{{Partition{1, 1}, 4},
                          {Partition{2, 1}, 4},
                          {Partition{2, 2, 2}, 6}};
  for (const Case& c : cases) {
    PieriSystem sys1 = solve_pieri_system(c.chi, c.r, 0);
    for (const auto& [key, x] : sys1.scalars)
      if (x == 0) {
        out << "  zero scalar on " << key.first.str() << " -> "
            << key.second.str() << "\n";
        ok = false;
      }
    PieriSystem sys2 = solve_pieri_system(c.chi, c.r, 12345);
    if (!verify_uniqueness(c.chi, c.r, sys1, sys2)) {
      out << "  independent solves disagree at chi=" << c.chi.str()
          << " r=" << c.r << "\n";
      ok = false;
    }
    if (c.r == 4) {
      VerificationReport rep = verify_complex_homology(c.chi, c.r, 6);
      if (!rep.ok) {
        out << "  homology failure at chi=" << c.chi.str() << ":\n"
            << rep.detail;
        ok = false;
      }
    }
  }
  out << "  " << cases.size() << " systems\n";
  return ok;
}

bool criterion_tilting_fixtures(std::ostream& out) {
  auto P = [](std::vector<int> v) { return Partition(std::move(v)); };
  struct Fixture {
    int n, r;
    Flavor f;
    bool big;
    std::vector<Partition> expect;
  };
  std::vector<Fixture> fixtures{
      {5, 2, Flavor::skew, false, {P({}), P({1})}},
      {7, 4, Flavor::skew, false, {P({}), P({1}), P({1, 1})}},
      {6, 4, Flavor::skew, false, {P({}), P({1}), P({1, 1})}},
      {5, 2, Flavor::skew, true, {P({}), P({1}), P({2}), P({3})}},
      {7,
       4,
       Flavor::skew,
       true,
       {P({}), P({1}), P({2}), P({1, 1}), P({3}), P({2, 1}), P({3, 1}),
        P({2, 2}), P({3, 2}), P({3, 3})}},
      {6,
       4,
       Flavor::skew,
       true,
       {P({}), P({1}), P({2}), P({1, 1}), P({2, 1}), P({2, 2})}},
      {4, 2, Flavor::symmetric, false, {P({}), P({1}), P({2}), P({1, 1})}},
      {5,
       3,
       Flavor::symmetric,
       false,
       {P({}), P({1}), P({2}), P({1, 1}), P({2, 1}), P({1, 1, 1})}},
  };
  bool ok = true;
  for (const Fixture& fx : fixtures) {
    std::vector<Partition> got = tilting_summands(fx.n, fx.r, fx.f, fx.big);
    if (got != fx.expect) {
      out << "  list mismatch at n=" << fx.n << " r=" << fx.r
          << (fx.big ? " (big)" : "") << ": got";
      for (const Partition& p : got) out << " " << p.str();
      out << "\n";
      ok = false;
    }
  }
  out << "  " << fixtures.size() << " lists\n";
  return ok;
}

bool criterion_hom_dims(std::ostream& out) {
  bool ok = true;
  int cases = 0;
  std::vector<Partition> labels = enumerate_box(2, 2);
  for (int n : {4, 5})
    for (const Partition& lam : labels)
      for (const Partition& mu : labels) {
        ++cases;
        std::vector<Int> dims = hom_graded_dims(lam, mu, n, 4, 6);
        std::vector<Int> swapped = hom_graded_dims(mu, lam, n, 4, 6);
        if (dims != swapped) {
          out << "  asymmetric pair " << lam.str() << ", " << mu.str()
              << " at n=" << n << "\n";
          ok = false;
        }
        Int want0 = lam == mu ? 1 : 0;
        if (dims[0] != want0) {
          out << "  degree 0 dimension " << dims[0].get_str() << " for "
              << lam.str() << ", " << mu.str() << " at n=" << n << "\n";
          ok = false;
        }
      }
  out << "  " << cases << " pairs to degree 6\n";
  return ok;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool(std::ostream&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria{
      {1, "rank-four shape family, one- and two-term cases", 1.0,
       criterion_shapes_r4},
      {2, "rank-six shape family, all four case splits", 1.0,
       criterion_shapes_r6},
      {3, "degreewise route equals the strip route", 5.0,
       criterion_routes_agree},
      {4, "wedge powers of the pair space are multiplicity free", 30.0,
       criterion_wedge_support},
      {5, "alternating sums match covariants, alternating forms", 300.0,
       criterion_euler_skew},
      {6, "alternating sums match covariants, symmetric forms", 300.0,
       criterion_euler_symmetric},
      {7, "invariant kernel counts equal character counts", 600.0,
       criterion_oracle},
      {8, "stable branching equals character peeling", 120.0,
       criterion_branching},
      {9, "split compositions reach every smaller summand", 300.0,
       criterion_split_compositions},
      {10, "edge scalars solve uniquely and the complexes resolve", 900.0,
       criterion_pieri_end_to_end},
      {11, "tilting summand labels match the committed lists", 1.0,
       criterion_tilting_fixtures},
      {12, "hom dimension tables are symmetric with unit diagonal", 120.0,
       criterion_hom_dims},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      selected.insert(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion numbers 1..12]\n";
      return 2;
    }
  }

  int failures = 0, ran = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    ++ran;
    std::ostringstream detail;
    bool ok = false;
    std::string thrown;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      thrown = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool within = elapsed <= c.budget_seconds;
    bool pass = ok && within;
    if (!pass) ++failures;
    char line[192];
    std::snprintf(line, sizeof line, "%s %2d  %-56s %7.2fs / %gs",
                  pass ? "PASS" : "FAIL", c.id, c.name, elapsed,
                  c.budget_seconds);
    std::cout << line << "\n" << detail.str();
    if (!thrown.empty()) std::cout << "  threw: " << thrown << "\n";
    if (!within && ok) std::cout << "  over budget\n";
  }
  if (failures == 0)
    std::cout << "acceptance: all " << ran << " criteria pass\n";
  else
    std::cout << "acceptance: " << failures << " of " << ran
              << " criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
