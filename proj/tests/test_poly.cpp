#include <catch_amalgamated.hpp>

#include <random>

#include "coxl2/error.hpp"
#include "coxl2/rational.hpp"

using namespace coxl2;

namespace {

MultiPoly random_poly(std::mt19937& rng, std::size_t nvars, int terms, int maxdeg) {
  MultiPoly p(nvars);
  for (int i = 0; i < terms; ++i) {
    Exponents e(nvars);
    for (auto& x : e) x = rng() % (maxdeg + 1);
    p.add_term(e, static_cast<long>(rng() % 11) - 5);
  }
  return p;
}

MultiPoly x(std::size_t n, std::size_t i) { return MultiPoly::variable(n, i); }
MultiPoly one(std::size_t n) { return MultiPoly::constant(n, 1); }

bool associate(const MultiPoly& a, const MultiPoly& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  auto q = x(1, 0);
  auto p = one(1) + q * 2 + q * q * 2 + q.pow(3);
  CHECK(p.to_string({"q"}) == "1 + 2*q + 2*q^2 + q^3");
  CHECK(p.total_degree() == 3);
  CHECK(p.evaluate({mpq_class(1)}) == 6);
  CHECK((p - p).is_zero());
  CHECK(p.reversed({3}) == p);  // palindromic
  auto a = x(2, 0), b = x(2, 1);
  CHECK((a - b).to_string({"a", "b"}) == "-b + a");
  CHECK(((one(2) + a) * (one(2) + b)).terms().size() == 4);
  CHECK(a.substitute_monomials({{2}, {3}}, 1) == x(1, 0).pow(2));
}

TEST_CASE("exact division") {
  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(rng, 3, 5, 3), b = random_poly(rng, 3, 4, 2);
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  auto q = x(1, 0);
  CHECK_FALSE(divide_exact(q + one(1), q).has_value());
  CHECK_FALSE(divide_exact(one(1) * 3, one(1) * 2).has_value());
}

TEST_CASE("multivariate gcd recovers planted common factors") {
  std::mt19937 rng(2);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + i % 3;
    auto a = random_poly(rng, n, 3, 2), b = random_poly(rng, n, 3, 2), c = random_poly(rng, n, 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto g = gcd(a * c, b * c);
    // c divides g, and g / c is the gcd of a and b
    auto k = divide_exact(g, c);
    REQUIRE(k.has_value());
    CHECK(associate(*k, gcd(a, b)));
    CHECK(divide_exact(a * c, g).has_value());
    CHECK(divide_exact(b * c, g).has_value());
  }
}

TEST_CASE("gcd small cases") {
  auto q = x(1, 0);
  auto o = one(1);
  CHECK(gcd(o + o * 2 * q + q * q * 2 + q.pow(3), o + q) == o + q);
  CHECK(gcd(q * 6, q * q * 4) == q * 2);
  CHECK(gcd(MultiPoly(1), q * -3) == q * 3);
  auto a = x(2, 0), b = x(2, 1), o2 = one(2);
  CHECK(gcd((o2 + a) * (o2 + a * b), (o2 + a * b) * (o2 + b)) == o2 + a * b);
}

TEST_CASE("rational functions are canonical") {
  auto q = x(1, 0);
  auto o = one(1);
  RationalFn dinf(o + q, o - q);
  CHECK(dinf.num() == o + q);
  CHECK(dinf.den() == o - q);
  RationalFn flipped(-(o + q), q - o);
  CHECK(flipped == dinf);
  RationalFn r((o + q) * (o - q), (o - q) * 2);
  CHECK(r.num() == o + q);
  CHECK(r.den() == o * 2);
  CHECK((dinf * dinf.inverse()) == RationalFn::constant(1, 1));
  CHECK((dinf - dinf).is_zero());
  CHECK(dinf.evaluate({mpq_class(1, 2)}) == 3);
  try {
    dinf.evaluate({mpq_class(1)});
    FAIL("expected PoleAtQ");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleAtQ);
  }
  auto sum = RationalFn(o, o + q) + RationalFn(q, o + q);
  CHECK(sum == RationalFn::constant(1, 1));
}

TEST_CASE("Sturm root counting") {
  // (x - 1/2)(x - 1)(x - 3)
  UPoly p = UPoly({mpq_class(-1, 2), 1}) * UPoly({-1, 1}) * UPoly({-3, 1});
  CHECK(count_roots(p, 0, 1) == 2);
  CHECK(count_roots(p, 0, mpq_class(99, 100)) == 1);
  CHECK(count_roots(p, mpq_class(1, 2), 1) == 1);  // half-open (1/2, 1]
  CHECK(count_roots(p, 1, 10) == 1);
  CHECK(count_roots_above(p, 0) == 3);
  CHECK(count_roots_above(p, 3) == 0);
  // repeated root counts once
  UPoly sq = UPoly({-1, 1}) * UPoly({-1, 1}) * UPoly({1, 0, 1});
  CHECK(count_roots_above(sq, -100) == 1);
  auto iso = isolate_roots(p, 0, 4, mpq_class(1, 1000));
  REQUIRE(iso.size() == 3);
  CHECK(iso[0].first < mpq_class(1, 2));
  CHECK(iso[0].second >= mpq_class(1, 2));
  CHECK(root_bound(p) > 3);
}

TEST_CASE("Sturm counts match rational root planting") {
  std::mt19937 rng(9);
  for (int i = 0; i < 40; ++i) {
    UPoly p = UPoly::constant(1);
    std::vector<mpq_class> roots;
    int k = 1 + rng() % 4;
    for (int j = 0; j < k; ++j) {
      mpq_class r(static_cast<long>(rng() % 40) - 20, 1 + rng() % 7);
      r.canonicalize();
      roots.push_back(r);
      p = p * UPoly({-r, 1});
    }
    p = p * UPoly({1, 0, 1});  // no real roots
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::size_t expect = std::count_if(roots.begin(), roots.end(), [](auto& r) { return r > 0 && r <= 2; });
    CHECK(count_roots(p, 0, 2) == expect);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == mpq_class(3, 2));
  CHECK(parse_rational("4/2") == 2);
  CHECK(parse_rational("0.25") == mpq_class(1, 4));
  CHECK(parse_rational("-1/3") == mpq_class(-1, 3));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK(rational_to_string(mpq_class(6, 4)) == "3/2");
}
