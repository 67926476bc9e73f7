#include "prymchow/projcalc.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace prymchow;

TEST_CASE("low s-classes")
{
	CHECK(s_to_h(4, 0) == "1"_p);
	CHECK(s_to_h(4, 1) == "h"_p);
	CHECK(s_to_h(2, 2) == "h^2 + c1*h + 2*c2"_p);
	CHECK(s_to_h_concrete(4, 2) == "h^2 - b1*h + 4*b2"_p);
	CHECK(s_to_h_concrete(4, 2).to_string() == "h^2 - b1*h + 4*b2");
	CHECK_THROWS_AS(s_to_h(5, 0), std::out_of_range);
	CHECK_THROWS_AS(s_to_h(2, 3), std::out_of_range);
}

TEST_CASE("h-power identities in the s-basis")
{
	CHECK(h_to_s(2, 2) == SClassVec(2, {"-2*c2"_p, "-c1"_p, "1"_p}));
	CHECK(h_to_s(4, 2) == SClassVec(4, {"-4*c2"_p, "-c1"_p, "1"_p}));
	CHECK(h_to_s(3, 3) == SClassVec(3, {"3*c1*c2"_p, "c1^2 - 7*c2"_p, "-3*c1"_p, "1"_p}));
	CHECK(h_to_s(4, 4) == SClassVec(4, {"-4*c1^2*c2 + 40*c2^2"_p, "32*c1*c2 - c1^3"_p, "7*c1^2 - 16*c2"_p, "-6*c1"_p, "1"_p}));
	CHECK_THROWS_AS(h_to_s(3, 4), std::out_of_range);
	CHECK_THROWS_AS(h_poly_to_s(2, "h^3"_p), std::invalid_argument);
}

TEST_CASE("h_to_s and s_to_h roundtrip for r <= 4, k <= r")
{
	for (int r = 1; r <= kMaxSymPower; ++r)
	{
		for (int k = 0; k <= r; ++k)
			CHECK(h_to_s(r, k).to_h(ChernBasis::abstract) == IntPoly(Var::h).pow(static_cast<unsigned>(k)));
		for (int j = 0; j <= r; ++j)
		{
			CHECK(h_poly_to_s(r, s_to_h(r, j)) == SClassVec::basis(r, j));
			CHECK(h_poly_to_s(r, s_to_h_concrete(r, j), ChernBasis::concrete) == SClassVec::basis(r, j));
		}
	}
}

TEST_CASE("s-class vectors")
{
	SClassVec v(4, {"-4*(b1 + g)"_p, "2"_p});
	CHECK(v.to_string() == "2*s_4^1 + (-4*b1 - 4*g)*s_4^0");
	CHECK(v.codimension() == 1);
	CHECK(SClassVec(2, {"1"_p, "h"_p}).codimension() == std::nullopt);
	CHECK(SClassVec(2).to_string() == "0");
	CHECK(SClassVec(3).is_zero());
	CHECK(SClassVec(4, {"-12*b2"_p, "0"_p, "1"_p}).to_string() == "s_4^2 - 12*b2*s_4^0");
	CHECK_THROWS_AS(SClassVec(1) + SClassVec(2), std::invalid_argument);
	CHECK_THROWS_AS(SClassVec(0), std::out_of_range);
	CHECK_THROWS_AS(SClassVec(1, {"1"_p, "1"_p, "1"_p}), std::invalid_argument);
	CHECK(SClassVec(2, {"c1"_p}).concrete() == SClassVec(2, {"-b1"_p}));
}

TEST_CASE("projective relation of Sym4 of the dual")
{
	IntPoly P = proj_relation(sym_roots(4, true));
	CHECK(P.degree_in(Var::h) == 5);
	CHECK(P.coefficient_of(Var::h, 5) == "1"_p);
	CHECK(P.coefficient_of(Var::h, 4) == "-10*b1"_p);
	CHECK(P.is_homogeneous());
}

TEST_CASE("projective reduction is idempotent and order independent")
{
	std::mt19937 rng(5);
	std::uniform_int_distribution<int> coeff(-4, 4);
	std::uniform_int_distribution<unsigned> ex(0, 4);
	for (int r = 1; r <= 2; ++r)
	{
		BiProjClass d = diagonal_class(sym_roots(r, false));
		for (int t = 0; t < 40; ++t)
		{
			IntPoly p;
			for (int k = 0; k < 4; ++k)
			{
				Monomial m{};
				m.set(Var::h1, ex(rng));
				m.set(Var::h2, ex(rng));
				m.set(Var::c1, ex(rng) % 2);
				p.add_term(m, coeff(rng));
			}
			BiProjClass b{p, d.chern};
			BiProjClass once = b.reduced(Var::h1);
			CHECK(once.reduced(Var::h1).poly == once.poly);
			CHECK(once.poly == b.reduced(Var::h2).poly);
			CHECK(once.poly.degree_in(Var::h1) <= static_cast<unsigned>(r));
			CHECK(once.poly.degree_in(Var::h2) <= static_cast<unsigned>(r));
		}
	}
}

TEST_CASE("diagonal class is monic in each hyperplane variable")
{
	for (int r = 1; r <= 4; ++r)
	{
		BundleSpec W = sym_roots(r, false);
		BiProjClass d = diagonal_class(W);
		CHECK(d.poly.coefficient_of(Var::h1, static_cast<unsigned>(r)) == "1"_p);
		CHECK(d.poly.coefficient_of(Var::h2, static_cast<unsigned>(r)) == "1"_p);
		CHECK(d.poly.is_homogeneous());
		CHECK(*d.poly.degree() == r);
	}
	CHECK_THROWS_AS(diagonal_class(BundleSpec{{"r1"_p}, "L"}), std::invalid_argument);
	CHECK_THROWS_AS(diagonal_push(sym_roots(1, false), 2), std::out_of_range);
}

TEST_CASE("diagonal pushforwards on P(E) and P(Sym2 E)")
{
	CHECK(diagonal_push(sym_roots(1, false), 1).poly == "h1*h2 - c2"_p);
	CHECK(diagonal_push(sym_roots(2, false), 1).poly == "h1^2*h2 + h1*h2^2 + 3*c1*h1*h2 - 4*c1*c2"_p);
	CHECK(diagonal_push(sym_roots(2, false), 2).poly == "h1^2*h2^2 - (2*c1^2 + 4*c2)*h1*h2 - 4*c1*c2*(h1 + h2)"_p);
}
