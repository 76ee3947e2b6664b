#include "c2charge/crystal_strings.hpp"

#include "c2charge/kostka_oracle.hpp"

#include <doctest.h>

#include <map>

using namespace c2c;

TEST_CASE("theta maps: fixed point and the (d,1,1,1) family") {
  CHECK(theta12({0, 0, 0, 0}) == Str4{0, 0, 0, 0});
  CHECK(theta21({0, 0, 0, 0}) == Str4{0, 0, 0, 0});
  // theta21(d,1,1,1) = (1, d+1, 1, 0); the other direction does not hit it
  for (long long d = 0; d <= 6; ++d) {
    CHECK(theta21({d, 1, 1, 1}) == Str4{1, d + 1, 1, 0});
    if (d > 0) CHECK(theta12({d, 1, 1, 1}) != Str4{1, d + 1, 1, 0});
  }
}

TEST_CASE("theta maps are mutually inverse on the cones") {
  for (long long a = 0; a <= 6; ++a)
    for (long long b = 0; b <= 6; ++b)
      for (long long c = 0; c <= b; ++c)
        for (long long d = 0; d <= c; ++d) {
          Str4 x{a, b, c, d};  // a point of the str2 cone
          Str4 y = theta21(x);
          CHECK(theta12(y) == x);
          CHECK(theta21(theta12(y)) == y);
        }
}

TEST_CASE("cone membership") {
  CHECK(in_cone({0, 1, 1, 1}, {2, 0}));
  CHECK_FALSE(in_cone({0, 0, 0, 1}, {0, 5}));  // d <= lam1 fails
  CHECK(in_cone({1, 2, 1, 0}, {0, 2}));
  CHECK_FALSE(in_cone({1, 1, 1, 0}, {0, 1}));  // a <= lam2 + d - 2c + b fails
}

TEST_CASE("weights of elements") {
  CHECK(weight({{2, 0}, {0, 0, 0, 0}}) == Weight{2, 0});
  CHECK(weight({{2, 0}, {0, 1, 1, 1}}) == Weight{0, 0});
  // f2 f1 f2 from the highest weight of B((0,1)) dies at the last step
  Element el{{0, 1}, {0, 0, 0, 0}};
  auto x = f2(el);
  REQUIRE(x);
  auto y = f1(*x);
  REQUIRE(y);
  CHECK(weight(*y) == Weight{0, 0});
  CHECK_FALSE(f2(*y));
}

TEST_CASE("highest weight statistics") {
  for (Weight lam : dominant_weights_with_height_leq(5)) {
    Element v{lam, {0, 0, 0, 0}};
    CHECK(phi1(v) == lam.l1);
    CHECK(phi2(v) == lam.l2);
    CHECK(eps1(v) == 0);
    CHECK(eps2(v) == 0);
    CHECK(phi12(v) == lam.l1 + lam.l2);
    CHECK(eps12(v) == 0);
    CHECK(z_function(v) == 2 * (lam.l1 + lam.l2));
    CHECK(weyl_act(weyl_s1(), v).lam == lam);
    CHECK(weight(s1(v)) == s1_weight(lam));
  }
}

TEST_CASE("first steps from small highest weights") {
  CHECK(f2({{0, 1}, {0, 0, 0, 0}})->s == Str4{1, 0, 0, 0});
  // f1 f2 f1 (v_(2,0)) has str2 (0,1,1,1)
  Element v{{2, 0}, {0, 0, 0, 0}};
  Element x = *f1(*f2(*f1(v)));
  CHECK(x.s == Str4{0, 1, 1, 1});
}

TEST_CASE("crystal axioms hold exhaustively") {
  for (Weight lam : dominant_weights_with_height_leq(6)) {
    Crystal cr(lam);
    CHECK(static_cast<long long>(cr.size()) == weyl_dim(lam));
    size_t highest = 0;
    std::map<Weight, long long> mult;
    for (size_t i = 0; i < cr.size(); ++i) {
      Element el = cr.element(i);
      ++mult[weight(el)];
      if (eps1(el) == 0 && eps2(el) == 0) ++highest;
      CHECK(phi1(el) - eps1(el) == pairing(weight(el), RootKind::A1));
      CHECK(phi2(el) - eps2(el) == pairing(weight(el), RootKind::A2));
      CHECK(phi12(el) - eps12(el) == pairing(weight(el), RootKind::A12));
      // partner property and weight shifts
      if (auto x = f1(el)) {
        CHECK(weight(*x) == weight(el) - root_vector(RootKind::A1));
        CHECK(e1(*x)->s == el.s);
      }
      if (auto x = f2(el)) {
        CHECK(weight(*x) == weight(el) - root_vector(RootKind::A2));
        CHECK(e2(*x)->s == el.s);
      }
      if (auto x = e1(el)) CHECK(f1(*x)->s == el.s);
      if (auto x = e2(el)) CHECK(f2(*x)->s == el.s);
    }
    CHECK(highest == 1);
    for (const auto& [mu, n] : mult) CHECK(n == weight_multiplicity(lam, mu));
  }
}

TEST_CASE("weyl action: involutions and the braid relation") {
  for (Weight lam : dominant_weights_with_height_leq(4)) {
    Crystal cr(lam);
    for (size_t i = 0; i < cr.size(); ++i) {
      Element el = cr.element(i);
      CHECK(s1(s1(el)).s == el.s);
      CHECK(s2(s2(el)).s == el.s);
      CHECK(weight(s1(el)) == s1_weight(weight(el)));
      CHECK(weight(s2(el)) == s2_weight(weight(el)));
      Element b = el;
      for (int k = 0; k < 4; ++k) b = s1(s2(b));
      CHECK(b.s == el.s);
    }
  }
}

TEST_CASE("string parameters are the greedy epsilon extraction") {
  for (Weight lam : dominant_weights_with_height_leq(4)) {
    Crystal cr(lam);
    for (size_t i = 0; i < cr.size(); ++i) {
      Element el = cr.element(i);
      Str4 s;
      Element cur = el;
      auto strip = [&](auto op, long long& n) {
        while (auto up = op(cur)) {
          cur = *up;
          ++n;
        }
      };
      strip(e2, s.a);
      strip(e1, s.b);
      strip(e2, s.c);
      strip(e1, s.d);
      CHECK(s == el.s);
      CHECK(cur.s == Str4{0, 0, 0, 0});
    }
  }
}

TEST_CASE("modified operator case table") {
  // c = d = 0 row: (2,2,0,0) -> (1,1,0,0)
  Element el{{2, 0}, {2, 2, 0, 0}};
  REQUIRE(in_cone(el.s, el.lam));
  auto x = e21_bar(el);
  REQUIRE(x);
  CHECK(x->s == Str4{1, 1, 0, 0});
}
