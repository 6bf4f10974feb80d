#include "covres/partition.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>

using namespace covres;

namespace {

// Diagrammatic re-derivation of the two-box containment: beta inside alpha,
// two boxes added, and the added boxes are not side by side in one row.
bool subset2_by_diagram(const Partition& beta, const Partition& alpha) {
  if (!alpha.contains(beta)) return false;
  if (alpha.size() - beta.size() != 2) return false;
  std::vector<std::pair<int, int>> added;
  for (int i = 1; i <= alpha.length(); ++i)
    for (int c = beta.part(i) + 1; c <= alpha.part(i); ++c)
      added.emplace_back(i, c);
  REQUIRE(added.size() == 2);
  return !(added[0].first == added[1].first &&
           added[1].second == added[0].second + 1);
}

bool cells_form_border_strip(const std::vector<std::pair<int, int>>& cells) {
  std::set<std::pair<int, int>> s(cells.begin(), cells.end());
  if (s.size() != cells.size()) return false;
  // connected through edge-adjacency
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    auto [r1, c1] = cells[i];
    auto [r2, c2] = cells[i + 1];
    if (std::abs(r1 - r2) + std::abs(c1 - c2) != 1) return false;
  }
  // no 2x2 square
  for (auto& [r, c] : s)
    if (s.count({r + 1, c}) && s.count({r, c + 1}) && s.count({r + 1, c + 1}))
      return false;
  return true;
}

Int binom(int n, int k) {
  Int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("conjugate and frobenius basics") {
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK(Partition{2, 2, 2}.conjugate() == Partition{3, 3});

  FrobeniusCoords fc = to_frobenius(Partition{2, 2, 2});
  CHECK(fc.arms == std::vector<int>{2, 1});
  CHECK(fc.legs == std::vector<int>{3, 2});

  CHECK(to_frobenius(Partition{1, 1}).arms == std::vector<int>{1});
  CHECK(to_frobenius(Partition{1, 1}).legs == std::vector<int>{2});
  CHECK(to_frobenius(Partition{2, 1, 1}).arms == std::vector<int>{2});
  CHECK(to_frobenius(Partition{2, 1, 1}).legs == std::vector<int>{3});

  CHECK_THROWS_AS(Partition({1, 2}), domain_error);
  CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
}

TEST_CASE("frobenius round-trips on a box sweep") {
  for (const Partition& p : enumerate_box(6, 6)) {
    FrobeniusCoords fc = to_frobenius(p);
    CHECK(from_frobenius(fc) == p);
    int weight = 0;
    for (std::size_t i = 0; i < fc.arms.size(); ++i)
      weight += fc.arms[i] + fc.legs[i] - 1;
    CHECK(weight == p.size());
    if (!p.empty()) {
      CHECK(fc.arms[0] == p.part(1));
      CHECK(fc.legs[0] == p.length());
    }
    CHECK(p.conjugate().conjugate() == p);
  }
}

TEST_CASE("canonical enumeration order") {
  std::vector<Partition> box = enumerate_box(2, 2);
  std::vector<Partition> want = {Partition{},     Partition{1},
                                 Partition{2},    Partition{1, 1},
                                 Partition{2, 1}, Partition{2, 2}};
  CHECK(box == want);
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      CHECK(Int(enumerate_box(m, n).size()) == binom(m + n, m));
}

TEST_CASE("q_minus1 enumeration") {
  CHECK(enumerate_q_minus1(0, 8) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_q_minus1(5, 8).empty());
  CHECK(enumerate_q_minus1(2, 8) == std::vector<Partition>{Partition{1, 1}});
  CHECK(enumerate_q_minus1(4, 8) == std::vector<Partition>{Partition{2, 1, 1}});
  CHECK(enumerate_q_minus1(6, 3) == std::vector<Partition>{Partition{2, 2, 2}});
  std::vector<Partition> q6 = enumerate_q_minus1(6, 8);
  CHECK(q6 == std::vector<Partition>{Partition{3, 1, 1, 1}, Partition{2, 2, 2}});

  // agreement with a direct filter over all partitions
  for (int m = 0; m <= 12; ++m) {
    std::vector<Partition> direct;
    for (const Partition& p : enumerate_partitions(m, m, m))
      if (has_legs_arms_plus_one(p)) direct.push_back(p);
    CHECK(enumerate_q_minus1(m, m == 0 ? 1 : m) == direct);
  }
}

TEST_CASE("border strip removal walks the rim deterministically") {
  auto res = remove_border_strip(Partition{2, 2, 2, 2, 2, 2}, 4);
  REQUIRE(res.has_value());
  CHECK(res->first == Partition{2, 2, 2, 1, 1});
  CHECK(res->second.columns() == 2);
  CHECK(res->second.size() == 4);

  CHECK_FALSE(remove_border_strip(Partition{3, 1}, 2).has_value());
  CHECK_FALSE(remove_border_strip(Partition{2, 1}, 5).has_value());
  CHECK_FALSE(remove_border_strip(Partition{}, 1).has_value());
  CHECK_FALSE(remove_border_strip(Partition{2, 2}, 0).has_value());

  auto whole_column = remove_border_strip(Partition{1, 1, 1, 1}, 4);
  REQUIRE(whole_column.has_value());
  CHECK(whole_column->first == Partition{});
  CHECK(whole_column->second.columns() == 1);
}

TEST_CASE("border strip removal properties on a sweep") {
  for (const Partition& p : enumerate_box(5, 5)) {
    for (int s = 1; s <= p.size(); ++s) {
      auto res = remove_border_strip(p, s);
      if (!res) continue;
      const auto& [rest, strip] = *res;
      CHECK(rest.size() + s == p.size());
      CHECK(p.contains(rest));
      CHECK(cells_form_border_strip(strip.cells));
      CHECK(strip.cells.front() == std::make_pair(p.length(), 1));
      // removed cells are exactly the diagram difference
      std::set<std::pair<int, int>> diff;
      for (int i = 1; i <= p.length(); ++i)
        for (int c = rest.part(i) + 1; c <= p.part(i); ++c)
          diff.insert({i, c});
      std::set<std::pair<int, int>> got(strip.cells.begin(),
                                        strip.cells.end());
      CHECK(diff == got);
    }
  }
}

TEST_CASE("subset2 matches the diagrammatic definition") {
  CHECK(is_subset2(Partition{1, 1}, Partition{2, 1, 1}));
  CHECK(is_subset2(Partition{2, 1, 1}, Partition{2, 2, 2}));
  CHECK(is_subset2(Partition{}, Partition{1, 1}));
  CHECK_FALSE(is_subset2(Partition{2, 2, 2}, Partition{4, 1, 1, 1, 1}));
  CHECK_THROWS_AS(is_subset2(Partition{1, 1}, Partition{2, 2}), domain_error);

  for (int k = 1; k <= 6; ++k)
    for (const Partition& a : enumerate_q_minus1(2 * k, 6))
      for (const Partition& b : enumerate_q_minus1(2 * k - 2, 6))
        CHECK(is_subset2(b, a) == subset2_by_diagram(b, a));
}

TEST_CASE("admissibility and sigma conjugation") {
  CHECK(is_admissible(Partition{2, 1}, 3));
  CHECK_FALSE(is_admissible(Partition{2, 2}, 3));
  CHECK(is_admissible(Partition{1, 1, 1, 1}, 4));

  CHECK(sigma_conjugate(Partition{}, 4) == Partition{1, 1, 1, 1});
  CHECK(sigma_conjugate(Partition{1}, 3) == Partition{1, 1});
  CHECK(sigma_conjugate(Partition{1, 1, 1, 1}, 4) == Partition{});
  CHECK_THROWS_AS(sigma_conjugate(Partition{2, 2}, 3), domain_error);

  for (int r = 2; r <= 6; ++r) {
    for (const Partition& p : enumerate_box(r, 4)) {
      if (!is_admissible(p, r)) continue;
      Partition s = sigma_conjugate(p, r);
      CHECK(is_admissible(s, r));
      CHECK(sigma_conjugate(s, r) == p);
      // only the first column moves
      Partition pt = p.conjugate(), st = s.conjugate();
      CHECK(st.part(1) == r - pt.part(1));
      for (int j = 2; j <= std::max(pt.length(), st.length()); ++j)
        CHECK(pt.part(j) == st.part(j));
    }
  }
}
