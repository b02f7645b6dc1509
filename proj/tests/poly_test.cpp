#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.hpp"

using namespace pgb;
using tu::P;

TEST_CASE("addition: cancellation, identity, random-evaluation oracle") {
  auto r = tu::ring_xy_a();
  CHECK(P(r, "x + y") + P(r, "-y") == P(r, "x"));
  auto f = P(r, "a*x^2 - 3*y + 1/2");
  CHECK(f + Polynomial::zero(r) == f);

  auto rb = Ring::make({"x"}, {"a", "b"});
  auto lhs = P(rb, "a*x - b") + P(rb, "b");
  CHECK(lhs == P(rb, "a*x"));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) {
    auto pt = tu::random_point(rng, rb->names());
    CHECK(lhs.eval(pt) == P(rb, "a*x - b").eval(pt) + P(rb, "b").eval(pt));
  }
}

TEST_CASE("multiplication examples") {
  auto r = tu::ring_xy_a();
  CHECK(P(r, "x") * P(r, "y") == P(r, "x*y"));
  CHECK((P(r, "x + 1") * Polynomial::zero(r)).is_zero());

  auto ru = Ring::make({"x1"}, {"u1", "u2"});
  // Example 10's eliminated generator arises as u1 * (u1^2 + u2^2 - 2*u1).
  CHECK(P(ru, "u1") * P(ru, "u1^2 + u2^2 - 2*u1") == P(ru, "u1^3 + u1*u2^2 - 2*u1^2"));
}

TEST_CASE("ring mismatch is rejected") {
  auto r1 = Ring::make({"x"}, {"a"});
  auto r2 = Ring::make({"x"}, {"b"});
  CHECK_THROWS_AS(P(r1, "x") + P(r2, "x"), ring_mismatch);
  CHECK_THROWS_AS(P(r1, "x") * P(r2, "x"), ring_mismatch);
}

TEST_CASE("leading term, variables-only and full") {
  auto r = Ring::make({"x"}, {"a", "b"});
  auto f = P(r, "a*x + b");
  CHECK(f.leading_x_monomial() == Monomial::var(*r->index_of("x")));
  CHECK(f.leading_x_coeff() == P(r, "a"));

  auto rxy = Ring::make({"x", "y"}, {"b"});
  auto g = P(rxy, "x^2 + b*y^2");
  CHECK(g.leading_x_monomial() == Monomial::var(*rxy->index_of("x"), 2));
  CHECK(g.x_coefficient(g.leading_x_monomial()) == P(rxy, "1"));

  auto rc = Ring::make({"x", "y"}, {"c", "d"});
  auto h = P(rc, "2*c*y + d");
  CHECK(h.leading_x_monomial() == Monomial::var(*rc->index_of("y")));
  CHECK(h.leading_x_coeff() == P(rc, "2*c"));

  CHECK_THROWS_AS(Polynomial::zero(r).leading_term(), zero_polynomial_error);
}

TEST_CASE("content/primitive split") {
  auto r = Ring::make({"x1"}, {"u1", "u2"});
  // Constant in x: the content is the polynomial itself.
  auto f = P(r, "-1/2*u1^5 - 1/2*u1^3*u2^2 + u1^4");
  auto [c, p] = f.content_primitive();
  CHECK(c * p == f);
  CHECK(c.canonical_scaled() == P(r, "u1^5 + u1^3*u2^2 - 2*u1^4"));
  CHECK(c.canonical_scaled() == (P(r, "u1^3") * P(r, "u1^2 + u2^2 - 2*u1")).canonical_scaled());

  auto ra = Ring::make({"x"}, {"a"});
  auto [ca, pa] = P(ra, "a*x").content_primitive();
  CHECK(ca == P(ra, "a"));
  CHECK(pa == P(ra, "x"));

  auto rc = Ring::make({"x", "y"}, {"c", "d"});
  auto g = P(rc, "2*x + 2*c*y + 2*d");
  auto [cg, pg] = g.content_primitive();
  CHECK(cg == P(rc, "2"));
  CHECK(pg == P(rc, "x + c*y + d"));
  CHECK(cg * pg == g);
}

TEST_CASE("specialization homomorphism") {
  auto r = Ring::make({"x", "y"}, {"a"});
  CHECK(P(r, "a*x").specialize({{"a", Rat(0)}}).is_zero());

  auto rb = Ring::make({"x"}, {"a", "b"});
  CHECK(P(rb, "a*x - b").specialize({{"a", rat(2)}, {"b", rat(4)}}) == P(rb, "2*x - 4"));
  CHECK_THROWS_AS(P(rb, "a*x - b").specialize({{"a", rat(2)}}), error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto f = tu::random_poly(rng, r);
    auto g = tu::random_poly(rng, r);
    std::map<std::string, Rat> pt{{"a", tu::random_rat(rng)}};
    CHECK((f * g).specialize(pt) == f.specialize(pt) * g.specialize(pt));
    CHECK((f + g).specialize(pt) == f.specialize(pt) + g.specialize(pt));
  }
}

TEST_CASE("squarefree part") {
  auto r = Ring::make({"x1"}, {"u1", "u2"});
  CHECK(squarefree_part(P(r, "u2^3")) == P(r, "u2"));
  CHECK(squarefree_part(P(r, "u1^2 + u2^2 - 2*u1")) == P(r, "u1^2 + u2^2 - 2*u1"));

  auto rab = Ring::make({"x"}, {"a", "b"});
  // (a-b)^2 (a+2) -> (a-b)(a+2), frozen expansion.
  auto f = P(rab, "(a - b)^2 * (a + 2)");
  auto sq = squarefree_part(f);
  CHECK(sq == P(rab, "a^2 - a*b + 2*a - 2*b").canonical_scaled());
  // Oracle: no repeated factors remain (joint gcd with all partials).
  auto joint = sq;
  for (auto sym : {"a", "b"}) joint = poly_gcd(joint, sq.derivative(*rab->index_of(sym)));
  CHECK(joint.is_constant());
  CHECK_THROWS_AS(squarefree_part(Polynomial::zero(r)), zero_polynomial_error);
}

TEST_CASE("squarefree specialization zero-set agreement") {
  auto r = Ring::make({"x"}, {"a", "b"});
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    auto f = tu::random_poly(rng, r, 3, 2, 4);
    if (f.is_zero()) continue;
    auto sf = squarefree_part(f);
    auto pt = tu::random_point(rng, r->names(), 4);
    CHECK((f.eval(pt) == 0) == (sf.eval(pt) == 0));
  }
}

TEST_CASE("ring axioms on random triples") {
  auto r = Ring::make({"x", "y"}, {"a"}, OrderTag::GrevLex, OrderTag::Lex);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    auto f = tu::random_poly(rng, r);
    auto g = tu::random_poly(rng, r);
    auto h = tu::random_poly(rng, r);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("evaluation homomorphism on all symbols") {
  auto r = Ring::make({"x", "y"}, {"a"});
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    auto f = tu::random_poly(rng, r);
    auto g = tu::random_poly(rng, r);
    auto pt = tu::random_point(rng, r->names(), 5);
    CHECK((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
    CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
  }
}

TEST_CASE("order laws: multiplicative, 1 minimal") {
  for (auto vt : {OrderTag::Lex, OrderTag::GrevLex}) {
    auto r = Ring::make({"x", "y", "z"}, {"a", "b"}, vt,
                        vt == OrderTag::Lex ? OrderTag::GrevLex : OrderTag::Lex);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      auto m1 = tu::random_monomial(rng, r->symbol_count());
      auto m2 = tu::random_monomial(rng, r->symbol_count());
      auto m = tu::random_monomial(rng, r->symbol_count());
      auto c = r->compare(m1, m2);
      CHECK(r->compare(m1 * m, m2 * m) == c);
      CHECK(r->compare(m1, Monomial::one()) >= 0);
      // Total: equal only when identical.
      if (c == std::strong_ordering::equal) CHECK(m1 == m2);
    }
  }
}

TEST_CASE("block order: any variable beats every parameter monomial") {
  auto r = Ring::make({"x"}, {"a", "b"});
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    auto mu = tu::random_monomial(rng, r->symbol_count());
    if (mu.exponent(0) > 0) continue;  // parameter-only wanted
    CHECK(r->compare(Monomial::var(0), mu) > 0);
  }
}

TEST_CASE("sparse comparators agree with dense reference") {
  auto lexr = Ring::make({"x", "y", "z", "w"}, {});
  auto grvr = Ring::make({"x", "y", "z", "w"}, {}, OrderTag::GrevLex, OrderTag::Lex);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    auto m1 = tu::random_monomial(rng, 4);
    auto m2 = tu::random_monomial(rng, 4);
    int dl = tu::dense_lex_cmp(m1, m2, 0, 4);
    int dg = tu::dense_grevlex_cmp(m1, m2, 0, 4);
    auto sl = lexr->compare(m1, m2);
    auto sg = grvr->compare(m1, m2);
    CHECK((sl < 0 ? -1 : sl > 0 ? 1 : 0) == dl);
    CHECK((sg < 0 ? -1 : sg > 0 ? 1 : 0) == dg);
  }
}

TEST_CASE("content_primitive round-trip on random polynomials") {
  auto r = Ring::make({"x", "y"}, {"a", "b"});
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    auto f = tu::random_poly(rng, r, 4, 2, 5);
    if (f.is_zero()) continue;
    auto g = tu::random_poly(rng, r, 2, 1, 3);
    if (!g.is_zero()) f = f * g;  // encourage nontrivial content
    auto [c, p] = f.content_primitive();
    CHECK(c * p == f);
    CHECK(p == p.canonical_scaled());
    CHECK(c.parameters_only());
  }
}

TEST_CASE("canonical printing round-trips through the parser") {
  auto r = Ring::make({"x", "y"}, {"a", "b"});
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    auto f = tu::random_poly(rng, r);
    CHECK(parse_polynomial(f.str(), r) == f);
  }
  CHECK(Polynomial::zero(r).str() == "0");
}
