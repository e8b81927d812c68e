#include "corpus.hpp"

#include <doctest.h>

using namespace folinv;
using corpus::P2;

TEST_CASE("germ construction rejects bad input") {
  CHECK_THROWS_AS(make_germ(Poly(2), Poly(2)), InvalidInput);
  CHECK_THROWS_AS(make_germ(P2("x*y"), P2("x^2")), InvalidInput);
  CHECK_THROWS_AS(make_germ(P2("x"), parse_poly("z", 3)), InvalidInput);
  CHECK_THROWS_AS(make_germ(P2("x"), Poly(2)), InvalidInput);
  CHECK_NOTHROW(make_germ(P2("x"), P2("y^2")));
  CHECK(make_germ(P2("1 + x"), P2("y")).singular() == false);
  CHECK(corpus::radial().singular());
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(corpus::radial()) == 1);
  CHECK(multiplicity(corpus::fk(5)) == 5);
  CHECK(multiplicity(corpus::cusp()) == 1);
  CHECK(multiplicity(make_germ(P2("x^3"), P2("y^4"))) == 3);
}

TEST_CASE("invariance test") {
  CHECK(invariance_test(corpus::radial(), P2("x - y")));
  CHECK_FALSE(invariance_test(corpus::radial(), P2("y - x^2")));
  CHECK(invariance_test(corpus::fk(5), P2("x*y")));
  CHECK(invariance_test(corpus::cusp(), P2("y^2 - x^3")));
  CHECK_THROWS(invariance_test(corpus::radial(), Poly(2)));
}

TEST_CASE("balanced equation validation") {
  auto F = corpus::radial();
  CHECK_NOTHROW(make_balanced(F, P2("x*y*(x-y)"), P2("x+y")));
  CHECK_THROWS_AS(make_balanced(F, P2("x^2*y"), std::nullopt), InvalidInput);
  CHECK_THROWS_AS(make_balanced(F, P2("x*y"), P2("x")), InvalidInput);
  CHECK_THROWS_AS(make_balanced(F, P2("y - x^2"), std::nullopt), InvalidInput);
  CHECK_THROWS_AS(make_balanced(F, P2("x + 1"), std::nullopt), InvalidInput);
}

TEST_CASE("Milnor and Tjurina numbers") {
  CHECK(milnor_foliation(corpus::radial()) == 1);
  CHECK(milnor_foliation(corpus::cusp()) == 2);
  CHECK(milnor_foliation(corpus::fk(5)) == 45);
  CHECK_THROWS_AS(milnor_curve(P2("x^2*y")), NonIsolated);
  CHECK_THROWS_AS(tjurina_curve(P2("y^2")), NonIsolated);

  CHECK(milnor_curve(P2("x*y*(x-y)")) == 4);
  CHECK(tjurina_curve(P2("x*y*(x-y)")) == 4);
  CHECK(milnor_curve(P2("y^2 - x^3")) == 2);
  CHECK(tjurina_curve(P2("y^2 - x^3")) == 2);
  CHECK(milnor_curve(P2("x*y")) == 1);
  CHECK(tjurina_curve(P2("x*y")) == 1);
  // not quasi-homogeneous: tau < mu
  CHECK(milnor_curve(P2("x^4 + y^5 + x^2*y^3")) == 12);
  CHECK(tjurina_curve(P2("x^4 + y^5 + x^2*y^3")) == 11);

  CHECK(tjurina_foliation(corpus::radial(), P2("x*y*(x-y)")) == 1);
  CHECK(tjurina_foliation(corpus::fk(5), P2("x*y")) == 13);
  CHECK(tjurina_foliation(corpus::cusp(), P2("y^2 - x^3")) == 2);
}

TEST_CASE("intersection multiplicity") {
  CHECK(intersection_multiplicity(P2("x*y*(x-y)"), P2("x+y")) == 3);
  CHECK(intersection_multiplicity(P2("x"), P2("y")) == 1);
  CHECK(intersection_multiplicity(P2("y^2 - x^3"), P2("y^2 + x^3")) == 6);
  CHECK_THROWS_AS(intersection_multiplicity(P2("x*y"), P2("x*(x+y)")), InvalidInput);
  // a curve missing the origin meets nothing there
  CHECK(intersection_multiplicity(P2("x"), P2("1 + y")) == 0);
}

TEST_CASE("intersection bilinearity and tangent-cone bound") {
  std::mt19937 rng(31337);
  int checked = 0;
  while (checked < 15) {
    Poly f = corpus::random_poly(rng, 1, 3, 0.5);
    Poly g = corpus::random_poly(rng, 1, 3, 0.5);
    Poly h = corpus::random_poly(rng, 1, 3, 0.5);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    if (!coprime(f, g * h)) continue;
    auto a = intersection_multiplicity(f, g), b = intersection_multiplicity(f, h);
    CHECK(intersection_multiplicity(f, g * h) == a + b);
    CHECK(a >= static_cast<std::size_t>(f.order() * g.order()));
    if (coprime(f.lowest_part(), g.lowest_part()))
      CHECK(a == static_cast<std::size_t>(f.order() * g.order()));
    ++checked;
  }
}

TEST_CASE("generic polar") {
  auto F = corpus::radial();
  auto B = make_balanced(F, P2("x*y*(x-y)"), P2("x+y"));
  std::vector<Probe> three = {{1, 1}, {1, 2}, {2, 1}};
  auto polar = generic_polar(F, three, &B);
  CHECK(polar.polar.degree() == 1);
  CHECK(polar.certified);
  CHECK(intersection_multiplicity(polar.polar, P2("x+y")) == 1);
  // (1:1) gives x - y, a branch of B0, so only the other probes count
  CHECK_FALSE(polar.table[0].values[0].has_value());
  for (std::size_t i = 1; i < 3; ++i) CHECK(*polar.table[i].values[0] == 3);

  auto cusp = corpus::cusp();
  for (const auto& probe : default_probes()) {
    Poly p = cusp.P * probe.a + cusp.Q * probe.b;
    CHECK(intersection_multiplicity(p, P2("y^2 - x^3")) == 3);
  }

  auto without = generic_polar(cusp, default_probes());
  CHECK(without.value_names == std::vector<std::string>{"nu(polar)", "mu(polar)"});
  CHECK(without.certified);
  CHECK_THROWS(generic_polar(cusp, {}));
  CHECK(default_probes(11).size() == 11);
}

TEST_CASE("polar excess") {
  auto rad = corpus::radial();
  auto B = make_balanced(rad, P2("x*y*(x-y)"), P2("x+y"));
  CHECK(excess_polar(rad, B, P2("2*x - y")) == 0);

  auto cusp = corpus::cusp();
  auto Bc = make_balanced(cusp, P2("y^2 - x^3"), std::nullopt);
  CHECK(excess_polar(cusp, Bc, P2("-3*x^2 + 2*y")) == 0);

  // x dy + 3 y dx: saddle with eigenvalue ratio -3
  auto saddle = make_germ(P2("3*y"), P2("x"));
  auto Bs = make_balanced(saddle, P2("x*y"), std::nullopt);
  auto polar = generic_polar(saddle, default_probes(), &Bs);
  CHECK(intersection_multiplicity(polar.polar, P2("x*y")) == 2);
  CHECK(excess_polar(saddle, Bs, polar.polar) == 0);
}

TEST_CASE("tangency excess") {
  auto rad = corpus::radial();
  CHECK(tangency_excess(rad, make_balanced(rad, P2("x*y*(x-y)"), P2("x+y"))) == 0);
  auto fk = corpus::fk(5);
  CHECK(tangency_excess(fk, make_balanced(fk, P2("x*y"), std::nullopt)) == 4);
  auto f6 = corpus::fk(6);
  CHECK(tangency_excess(f6, make_balanced(f6, P2("x*y"), std::nullopt)) == 5);
  auto cusp = corpus::cusp();
  CHECK(tangency_excess(cusp, make_balanced(cusp, P2("y^2 - x^3"), std::nullopt)) == 0);
}

TEST_CASE("GSV index") {
  CHECK(gsv_index(corpus::cusp(), P2("y^2 - x^3")) == 0);
  CHECK(gsv_index(corpus::radial(), P2("x*y*(x-y)")) == -3);
  CHECK(gsv_index(make_germ(P2("y"), P2("2*x")), P2("x*y")) == 0);
  for (const auto& f : corpus::random_hamiltonians(17, 5)) CHECK(gsv_index(corpus::hamiltonian(f), f) == 0);
}

TEST_CASE("semi-homogeneity") {
  CHECK(is_semihomogeneous(P2("x*y*(x-y)")));
  CHECK_FALSE(is_semihomogeneous(P2("y^2 - x^3")));
  CHECK(is_semihomogeneous(P2("x^2 + y^2 + y^3")));
  CHECK_THROWS(is_semihomogeneous(Poly(2)));
}

TEST_CASE("curve Milnor bound with equality for semi-homogeneous germs") {
  for (const auto& f : corpus::random_non_semihomogeneous(3, 6)) {
    const long long n = f.order();
    CHECK((n - 1) * (n - 1) <= static_cast<long long>(milnor_curve(f)));
  }
  for (const char* s : {"x*y*(x-y) + y^5", "x^2 + y^2 + x^3"}) {
    Poly f = P2(s);
    const long long n = f.order();
    CHECK((n - 1) * (n - 1) == static_cast<long long>(milnor_curve(f)));
  }
}

TEST_CASE("polar identity on second-type instances") {
  struct Case {
    FoliationGerm F;
    Poly zero;
    std::optional<Poly> pole;
  };
  std::vector<Case> cases = {{corpus::radial(), P2("x*y*(x-y)"), P2("x+y")},
                             {corpus::cusp(), P2("y^2 - x^3"), std::nullopt},
                             {make_germ(P2("3*y"), P2("x")), P2("x*y"), std::nullopt}};
  for (const auto& f : corpus::random_hamiltonians(23, 4)) cases.push_back({corpus::hamiltonian(f), f, std::nullopt});
  for (const auto& c : cases) {
    auto B = make_balanced(c.F, c.zero, c.pole);
    REQUIRE(tangency_excess(c.F, B) == 0);
    auto polar = generic_polar(c.F, default_probes(), &B);
    long long lhs = intersection_multiplicity(polar.polar, B.zero.f);
    long long rhs = (B.pole ? intersection_multiplicity(polar.polar, B.pole->f) : 0) +
                    static_cast<long long>(milnor_foliation(c.F)) + multiplicity(c.F);
    CHECK(lhs == rhs);
    CHECK(tjurina_foliation(c.F, B.zero.f) <= milnor_foliation(c.F));
  }
}
