#include "prymchow/polyring.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace prymchow;

namespace {

IntPoly random_poly(std::mt19937 &rng, std::vector<Var> const &vars, int max_terms = 5, unsigned max_exp = 2)
{
	std::uniform_int_distribution<int> nterms(0, max_terms), coeff(-9, 9);
	std::uniform_int_distribution<unsigned> ex(0, max_exp);
	IntPoly p;
	for (int t = nterms(rng); t > 0; --t)
	{
		Monomial m{};
		for (Var v : vars)
			m.set(v, ex(rng));
		p.add_term(m, coeff(rng));
	}
	return p;
}

} // namespace

TEST_CASE("variable degrees")
{
	CHECK(var_degree(Var::b1) == 1);
	CHECK(var_degree(Var::b2) == 2);
	CHECK(var_degree(Var::l2) == 2);
	CHECK(var_degree(Var::c2) == 2);
	CHECK(var_degree(Var::g) == 1);
	CHECK(var_degree(Var::h) == 1);
	CHECK("b2*g + b1^3"_p.degree() == 3);
	CHECK("b2*g + b1^3"_p.is_homogeneous());
	CHECK_FALSE("b2 + b1"_p.is_homogeneous());
}

TEST_CASE("printing follows the display order")
{
	CHECK("4*b2 + h^2 - h*b1"_p.to_string() == "h^2 - b1*h + 4*b2");
	CHECK("b1*g + g^2"_p.to_string() == "b1*g + g^2");
	CHECK("-2*b1 - 2*g"_p.to_string() == "-2*b1 - 2*g");
	CHECK(IntPoly().to_string() == "0");
	CHECK(IntPoly(-7L).to_string() == "-7");
}

TEST_CASE("parser")
{
	CHECK("-32*b1*b2*(3*b1^2+4*b2)"_p == "-96*b1^3*b2 - 128*b1*b2^2"_p);
	CHECK("(b1 + g)^2"_p == "b1^2 + 2*b1*g + g^2"_p);
	CHECK("-(h - 1)"_p == "1 - h"_p);
	CHECK_THROWS_AS(IntPoly::parse("b1 +"), std::invalid_argument);
	CHECK_THROWS_AS(IntPoly::parse("q1"), std::invalid_argument);
	CHECK_THROWS_AS(IntPoly::parse("b1^"), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials")
{
	std::mt19937 rng(20261018);
	std::vector<Var> vars{Var::b1, Var::b2, Var::g, Var::h};
	for (int i = 0; i < 200; ++i)
	{
		IntPoly a = random_poly(rng, vars), b = random_poly(rng, vars), c = random_poly(rng, vars);
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK((a + b) + c == a + (b + c));
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK(a - a == IntPoly());
		CHECK(a * IntPoly(1L) == a);
		CHECK((a * IntPoly()).is_zero());
	}
}

TEST_CASE("to_string and parse roundtrip")
{
	std::mt19937 rng(7);
	std::vector<Var> vars{Var::b1, Var::b2, Var::g, Var::h, Var::l1, Var::c2};
	for (int i = 0; i < 300; ++i)
	{
		IntPoly a = random_poly(rng, vars, 6, 3);
		CHECK(IntPoly::parse(a.to_string()) == a);
	}
}

TEST_CASE("substitution")
{
	CHECK("h^2 - b1*h"_p.substitute(Var::h, "b1 + g"_p) == "b1*g + g^2"_p);
	CHECK_THROWS_AS("h"_p.substitute(Var::h, "b2"_p), std::invalid_argument);
	CHECK_THROWS_AS("b2"_p.substitute(Var::b2, "b1 + 1"_p), std::invalid_argument);
	CHECK("b2 + g"_p.substitute(Var::b2, "b1^2"_p) == "b1^2 + g"_p);
}

TEST_CASE("components and coefficients")
{
	IntPoly p = "h^2*b1 + 3*h*b2 + g + 1"_p;
	CHECK(p.degree_in(Var::h) == 2);
	CHECK(p.coefficient_of(Var::h, 1) == "3*b2"_p);
	CHECK(p.coefficient_of(Var::h, 0) == "g + 1"_p);
	CHECK(p.homogeneous_component(3) == "h^2*b1 + 3*h*b2"_p);
	CHECK(p.homogeneous_component(0) == "1"_p);
	CHECK(p.degree() == 3);
	CHECK("6*b1 - 4*g"_p.divisible_by(2));
	CHECK_FALSE("6*b1 - 3*g"_p.divisible_by(2));
}

TEST_CASE("exact quotient")
{
	auto q = exact_quotient("-96*b1^3*b2 - 128*b1*b2^2"_p, "2*b1"_p);
	REQUIRE(q);
	CHECK(*q == "-48*b1^2*b2 - 64*b2^2"_p);
	CHECK_FALSE(exact_quotient("b1 + 1"_p, "2*b1"_p));
	auto q2 = exact_quotient("b1^2 + 2*b1*g + g^2"_p, "b1 + g"_p);
	REQUIRE(q2);
	CHECK(*q2 == "b1 + g"_p);
}

TEST_CASE("monomials of degree")
{
	auto ms = monomials_of_degree(2, {Var::b1, Var::b2, Var::g});
	CHECK(ms.size() == 4); // b1^2, b1*g, g^2, b2
	for (auto const &m : ms)
		CHECK(m.degree() == 2);
}

TEST_CASE("ring presentation")
{
	RingPresentation bg = bg_presentation();
	CHECK(bg.relations.size() == 2);
	CHECK_THROWS_AS(RingPresentation({Var::b1, Var::b1}, {}), std::invalid_argument);
	CHECK_THROWS_AS(RingPresentation({Var::b1}, {"b1 + 1"_p}), std::invalid_argument);
}
