#include "prymchow/hermite.hpp"
#include "prymchow/ideal.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace prymchow;

TEST_CASE("echelon lattice solves integer combinations")
{
	EchelonLattice<Integer> lat(2);
	lat.insert({4, 6});
	lat.insert({6, 9});
	CHECK(lat.contains({2, 3}));
	CHECK_FALSE(lat.contains({1, 1}));
	auto combo = lat.solve({2, 3});
	REQUIRE(combo);
	CHECK((*combo)[0] * 4 + (*combo)[1] * 6 == 2);
	CHECK((*combo)[0] * 6 + (*combo)[1] * 9 == 3);
}

TEST_CASE("hermite form has positive reduced pivots")
{
	EchelonLattice<Integer> lat(3);
	lat.insert({2, 4, 6});
	lat.insert({0, 3, 1});
	lat.insert({4, 5, 7});
	auto H = lat.hermite_form();
	std::size_t col = 0;
	for (std::size_t i = 0; i < H.size(); ++i)
	{
		while (H[i][col] == 0)
			++col;
		CHECK(H[i][col] > 0);
		for (std::size_t k = 0; k < i; ++k)
		{
			CHECK(H[k][col] >= 0);
			CHECK(H[k][col] < H[i][col]);
		}
	}
}

TEST_CASE("torsion in the BG-style ideal")
{
	HomogeneousIdeal I({"2*g"_p, "g^2 + b1*g"_p});
	CHECK(I.contains("4*g"_p));
	CHECK(I.contains("2*b1*g"_p)); // 2g * b1
	CHECK_FALSE(I.contains("g"_p));
	CHECK_FALSE(I.contains("b1*g"_p));
	CHECK(I.contains("g^3 + b1^2*g"_p));
	CHECK(I.contains(IntPoly()));
	CHECK_THROWS_AS(I.member("g + g^2"_p), std::invalid_argument);
	CHECK_THROWS_AS(HomogeneousIdeal({"g + 1"_p}), std::invalid_argument);
}

TEST_CASE("equal_mod compares every component")
{
	HomogeneousIdeal I({"2*g"_p, "g^2 + b1*g"_p});
	CHECK(I.equal_mod("1 - b1 + g"_p, "1 - b1 - g"_p));
	CHECK(I.equal_mod("g^2 + 3*g"_p, "-b1*g + g"_p));
	CHECK_FALSE(I.equal_mod("1 + g"_p, "1"_p));
}

TEST_CASE("certificate replay is sound on random members")
{
	std::mt19937 rng(99);
	std::vector<IntPoly> gens{"2*g"_p, "2*b1"_p, "8*b2"_p, "g^2 + b1*g"_p, "b1^2 + b1*g"_p};
	HomogeneousIdeal I(gens);
	std::vector<IntPoly> deg1{"b1"_p, "g"_p}, deg2{"b1^2"_p, "b1*g"_p, "g^2"_p, "b2"_p};
	std::uniform_int_distribution<int> c(-5, 5);
	int positives = 0;
	for (int t = 0; t < 100; ++t)
	{
		// A random degree-3 element of the ideal.
		IntPoly p = c(rng) * gens[0] * deg2[t % 4] + c(rng) * gens[1] * deg2[(t + 1) % 4] +
		            c(rng) * gens[2] * deg1[t % 2] + c(rng) * gens[3] * deg1[(t + 1) % 2] + c(rng) * gens[4] * deg1[t % 2];
		auto cert = I.member(p);
		REQUIRE(cert);
		CHECK(cert->replay(gens) == p);
		++positives;
		// Perturb by something outside the ideal.
		CHECK_FALSE(I.contains(p + "b1*b2"_p));
	}
	CHECK(positives == 100);
}

TEST_CASE("ideal comparison is reflexive and symmetric")
{
	std::vector<IntPoly> a{"2*g"_p, "2*b1"_p, "8*b2"_p, "g^2 + b1*g"_p, "b1^2 + b1*g"_p};
	std::vector<IntPoly> b{"2*g"_p, "2*b1 + 2*g"_p, "8*b2 + 2*b1^2"_p, "g^2 + b1*g"_p, "b1^2 + b1*g + 4*g^2"_p};
	std::vector<IntPoly> c{"2*g"_p, "4*b1"_p, "8*b2"_p, "g^2 + b1*g"_p, "b1^2 + b1*g"_p};
	CHECK(ideal_equal(a, a).equal());
	CHECK(ideal_equal(a, b).equal());
	CHECK(ideal_equal(b, a).equal());
	CHECK_FALSE(ideal_equal(a, c).equal());
	CHECK_FALSE(ideal_equal(c, a).equal());
	auto cmp = ideal_equal(c, a);
	CHECK(cmp.a_in_b[1]);
	CHECK_FALSE(cmp.b_in_a[1]);
}

TEST_CASE("free function wrappers")
{
	std::vector<IntPoly> gens{"2*g"_p, "g^2 + b1*g"_p};
	CHECK(ideal_member("6*g"_p, gens));
	CHECK(equal_mod("b1 + 3*g"_p, "b1 + g"_p, gens));
	auto cert = ideal_member("2*b2*g + g^3 + b1*g^2"_p, gens);
	REQUIRE(cert);
	CHECK(cert->replay(gens) == "2*b2*g + g^3 + b1*g^2"_p);
	CHECK_FALSE(cert->to_string(gens).empty());
}
