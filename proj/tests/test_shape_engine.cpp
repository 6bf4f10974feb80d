#include "covres/shape_engine.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <optional>

using namespace covres;

namespace {

// Recursive transcriptions of the two reduction rules, kept deliberately
// separate from the loop-based production code.
std::optional<std::pair<Partition, int>> tau_skew_rec(const Partition& lam,
                                                      int r) {
  if (lam.length() <= r / 2) return std::make_pair(lam, 0);
  int s = 2 * lam.length() - r - 2;
  if (s <= 0) return std::nullopt;
  auto rem = remove_border_strip(lam, s);
  if (!rem) return std::nullopt;
  auto sub = tau_skew_rec(rem->first, r);
  if (!sub) return std::nullopt;
  return std::make_pair(sub->first, sub->second + rem->second.columns());
}

std::optional<std::pair<Partition, int>> tau_sym_rec(const Partition& lam,
                                                     int r) {
  if (lam.length() <= r / 2) return std::make_pair(lam, 0);
  auto rem = remove_border_strip(lam, 2 * lam.length() - r);
  if (!rem) return std::nullopt;
  auto sub = tau_sym_rec(rem->first, r);
  if (!sub) return std::nullopt;
  return std::make_pair(sigma_conjugate(sub->first, r),
                        sub->second + rem->second.columns() - 1);
}

bool valid_shape_weight(const Partition& chi, int r, Flavor f) {
  if (f == Flavor::skew) return chi.length() <= r / 2;
  if (chi.length() <= r / 2) return true;
  return is_admissible(chi, r) &&
         sigma_conjugate(chi, r).length() <= r / 2;
}

using Terms = std::map<int, std::vector<Partition>>;

Terms sorted(Terms t) {
  for (auto& [k, v] : t) std::sort(v.begin(), v.end());
  return t;
}

}  // namespace

TEST_CASE("reductions agree with their recursive transcription") {
  for (int r : {4, 6}) {
    for (const Partition& lam : enumerate_box(r, 4)) {
      auto want = tau_skew_rec(lam, r);
      TauResult got = tau_skew(lam, r);
      REQUIRE(got.defined() == want.has_value());
      if (want) {
        CHECK(*got.tau == want->first);
        CHECK(*got.index == want->second);
        CHECK(got.steps.size() <= static_cast<std::size_t>(r));
      }
    }
  }
  for (int r : {3, 4, 5}) {
    for (const Partition& lam : enumerate_box(r, 4)) {
      auto want = tau_sym_rec(lam, r);
      TauResult got = tau_sym(lam, r);
      REQUIRE(got.defined() == want.has_value());
      if (want) {
        CHECK(*got.tau == want->first);
        CHECK(*got.index == want->second);
        CHECK(got.tau->part(1) == lam.part(1));
      }
    }
  }
}

TEST_CASE("reduction fixtures") {
  // one strip of two boxes in one column
  TauResult t1 = tau_skew(Partition{3, 2, 1, 1}, 4);
  REQUIRE(t1.defined());
  CHECK(*t1.tau == Partition{3, 2});
  CHECK(*t1.index == 1);
  REQUIRE(t1.steps.size() == 1);
  CHECK(t1.steps[0].strip.size() == 2);
  CHECK(t1.steps[0].contribution == 1);

  // strip size hits zero at length r/2 + 1
  CHECK_FALSE(tau_skew(Partition{1, 1, 1}, 4).defined());
  // dead end after one successful removal
  TauResult t2 = tau_skew(Partition{2, 2, 2, 2}, 4);
  CHECK_FALSE(t2.defined());
  CHECK(t2.steps.size() == 1);

  // two-column strip contributes 2
  TauResult t3 = tau_skew(Partition{4, 3, 3, 2, 1, 1}, 6);
  REQUIRE(t3.defined());
  CHECK(*t3.tau == Partition{4, 3, 3});
  CHECK(*t3.index == 2);

  // full column of length r: the only strip touching row one
  for (int r : {2, 3, 4, 5, 6}) {
    std::vector<int> col(r, 1);
    TauResult t = tau_sym(Partition(col), r);
    REQUIRE(t.defined());
    CHECK(*t.tau == Partition(col));
    CHECK(*t.index == 0);
    CHECK(t.steps.size() == 1);
  }

  // odd strip count flips the base through sigma
  TauResult t4 = tau_sym(Partition{1, 1}, 3);
  REQUIRE(t4.defined());
  CHECK(*t4.tau == Partition{1, 1});
  CHECK(*t4.index == 0);

  TauResult t5 = tau_sym(Partition{2, 2, 1, 1}, 4);
  REQUIRE(t5.defined());
  CHECK(*t5.tau == Partition{2, 1, 1});
  CHECK(*t5.index == 1);

  CHECK_FALSE(tau_sym(Partition{2, 1, 1}, 3).defined());
}

TEST_CASE("resolution terms match brute-force reduction fibers") {
  struct Setup {
    Flavor flavor;
    int r;
  };
  for (Setup su : {Setup{Flavor::skew, 4}, Setup{Flavor::skew, 6},
                   Setup{Flavor::symmetric, 3}, Setup{Flavor::symmetric, 4}}) {
    const int width = 3;
    std::map<Partition, Terms> fibers;
    for (const Partition& lam : enumerate_box(su.r, width)) {
      auto res = su.flavor == Flavor::skew ? tau_skew_rec(lam, su.r)
                                           : tau_sym_rec(lam, su.r);
      if (res) fibers[res->first][res->second].push_back(lam);
    }
    for (auto& [chi, terms] : fibers)
      REQUIRE(valid_shape_weight(chi, su.r, su.flavor));
    for (const Partition& chi : enumerate_box(su.r, width)) {
      if (!valid_shape_weight(chi, su.r, su.flavor)) continue;
      ResolutionShape shape = resolution_shape(chi, su.r, su.flavor);
      Terms expect =
          fibers.count(chi) ? sorted(fibers.at(chi)) : Terms{};
      CHECK(shape.terms == expect);
    }
  }
}

TEST_CASE("rank four skew resolutions") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= a; ++b) {
      ResolutionShape s = resolution_shape(Partition{a, b}, 4, Flavor::skew);
      Terms expect{{0, {Partition{a, b}}}, {1, {Partition{a, b, 1, 1}}}};
      CHECK(s.terms == expect);
      CHECK(s.max_index() == 1);
    }
  for (int a = 0; a <= 3; ++a) {
    ResolutionShape s = resolution_shape(Partition{a}, 4, Flavor::skew);
    CHECK(s.terms == Terms{{0, {Partition{a}}}});
  }
}

TEST_CASE("rank six skew resolutions") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        ResolutionShape s =
            resolution_shape(Partition{a, b, c}, 6, Flavor::skew);
        Terms expect;
        if (c >= 2) {
          expect = {{0, {Partition{a, b, c}}},
                    {1, {Partition{a, b, c, 1, 1}}},
                    {2, {Partition{a, b, c, 2, 1, 1}}},
                    {3, {Partition{a, b, c, 2, 2, 2}}}};
        } else if (c == 1) {
          expect = {{0, {Partition{a, b, 1}}},
                    {1, {Partition{a, b, 1, 1, 1}}}};
        } else if (b >= 1) {
          expect = {{0, {Partition{a, b}}},
                    {1, {Partition{a, b, 1, 1, 1, 1}}}};
        } else {
          expect = {{0, {Partition{a}}}};
        }
        CHECK(s.terms == expect);
      }
}

TEST_CASE("skew resolution terms keep the first two rows") {
  for (int r : {4, 6})
    for (const Partition& chi : enumerate_box(r / 2, 4)) {
      ResolutionShape s = resolution_shape(chi, r, Flavor::skew);
      REQUIRE(!s.terms.empty());
      REQUIRE(s.terms.at(0) == std::vector<Partition>{chi});
      for (const auto& [t, list] : s.terms)
        for (const Partition& del : list) {
          CHECK(del.part(1) == chi.part(1));
          CHECK(del.part(2) == chi.part(2));
        }
    }
}

TEST_CASE("closed form matches the search on wide weights") {
  int cases = 0;
  for (int r : {4, 6})
    for (const Partition& chi : enumerate_box(r / 2, 4)) {
      if (chi.part(r / 2) < r / 2 - 1) continue;
      ResolutionShape closed = appendix_shape(chi, r);
      ResolutionShape searched = resolution_shape(chi, r, Flavor::skew);
      CHECK(closed == searched);
      ++cases;
    }
  CHECK(cases == 10 + 10);

  // each degree is a shifted copy of the self-paired hook set
  ResolutionShape ap = appendix_shape(Partition{3, 2, 2}, 6);
  REQUIRE(ap.terms.count(2) == 1);
  CHECK(ap.terms.at(2) == std::vector<Partition>{Partition{3, 2, 2, 2, 1, 1}});
  CHECK(ap.max_index() == 3);

  CHECK_THROWS_AS(appendix_shape(Partition{3}, 4), domain_error);
  CHECK_THROWS_AS(appendix_shape(Partition{2, 2, 1}, 6), domain_error);
}

TEST_CASE("tilting summand index sets") {
  using PV = std::vector<Partition>;
  PV b11{Partition{}, Partition{1}};
  PV b13{Partition{}, Partition{1}, Partition{2}, Partition{3}};
  PV b21{Partition{}, Partition{1}, Partition{1, 1}};
  PV b22{Partition{}, Partition{1}, Partition{2},
         Partition{1, 1}, Partition{2, 1}, Partition{2, 2}};
  PV b23{Partition{},     Partition{1},    Partition{2},    Partition{1, 1},
         Partition{3},    Partition{2, 1}, Partition{3, 1}, Partition{2, 2},
         Partition{3, 2}, Partition{3, 3}};
  CHECK(tilting_summands(5, 2, Flavor::skew, false) == b11);
  CHECK(tilting_summands(5, 2, Flavor::skew, true) == b13);
  CHECK(tilting_summands(7, 4, Flavor::skew, false) == b21);
  CHECK(tilting_summands(7, 4, Flavor::skew, true) == b23);
  CHECK(tilting_summands(6, 4, Flavor::skew, false) == b21);
  CHECK(tilting_summands(6, 4, Flavor::skew, true) == b22);

  PV a22{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}};
  PV a32{Partition{},     Partition{1},    Partition{2},
         Partition{1, 1}, Partition{2, 1}, Partition{1, 1, 1}};
  PV a42{Partition{},        Partition{1},       Partition{2},
         Partition{1, 1},    Partition{2, 1},    Partition{1, 1, 1},
         Partition{2, 2},    Partition{2, 1, 1}, Partition{1, 1, 1, 1}};
  CHECK(tilting_summands(4, 2, Flavor::symmetric, false) == a22);
  CHECK(tilting_summands(4, 2, Flavor::symmetric, true) == a22);
  CHECK(tilting_summands(5, 3, Flavor::symmetric, false) == a32);
  CHECK(tilting_summands(5, 3, Flavor::symmetric, true) == a32);
  CHECK(tilting_summands(6, 4, Flavor::symmetric, false) == a42);

  // every symmetric label passes the column test, none is missed
  for (const Partition& p : tilting_summands(8, 4, Flavor::symmetric, true))
    CHECK(p.conjugate().part(1) + p.conjugate().part(2) <= 4);
  CHECK(tilting_summands(4, 4, Flavor::skew, false) ==
        PV{Partition{}});
  CHECK_THROWS_AS(tilting_summands(3, 4, Flavor::skew, false), domain_error);
}
