#include "prymchow/chern.hpp"

#include <catch_amalgamated.hpp>

#include <map>
#include <random>

using namespace prymchow;

namespace {

Integer eval(IntPoly const &p, std::map<Var, long> const &at)
{
	Integer sum = 0;
	for (auto const &[m, c] : p.terms())
	{
		Integer t = c;
		for (Var v : kAllVars)
			for (unsigned e = 0; e < m[v]; ++e)
				t *= at.count(v) ? at.at(v) : 0;
		sum += t;
	}
	return sum;
}

IntPoly random_base_poly(std::mt19937 &rng)
{
	std::uniform_int_distribution<int> coeff(-6, 6), nterms(1, 5);
	std::uniform_int_distribution<unsigned> ex(0, 3);
	IntPoly p;
	for (int t = nterms(rng); t > 0; --t)
	{
		Monomial m{};
		m.set(Var::b1, ex(rng));
		m.set(Var::b2, ex(rng));
		m.set(Var::g, ex(rng) % 2);
		p.add_term(m, coeff(rng));
	}
	return p;
}

} // namespace

TEST_CASE("symmetric reduction roundtrip on 100 random expressions")
{
	std::mt19937 rng(4242);
	for (int i = 0; i < 100; ++i)
	{
		IntPoly q = random_base_poly(rng);
		IntPoly roots = expand_in_roots(q);
		ChernRootExpr e(roots);
		REQUIRE(e.is_symmetric());
		CHECK(e.reduce() == q);
		CHECK(ChernRootExpr(expand_in_roots(q.substitute(Var::b1, "c1"_p).substitute(Var::b2, "c2"_p),
		                                    ChernBasis::abstract))
		          .reduce(ChernBasis::abstract) == q.substitute(Var::b1, "c1"_p).substitute(Var::b2, "c2"_p));
	}
}

TEST_CASE("non-symmetric expressions are rejected with the remainder")
{
	ChernRootExpr e("r1^2 + r2"_p);
	CHECK_FALSE(e.is_symmetric());
	try
	{
		e.reduce();
		FAIL("expected NonSymmetricError");
	}
	catch (NonSymmetricError const &err)
	{
		CHECK(err.remainder() == "r1^2 - r1 - r2^2 + r2"_p);
	}
}

TEST_CASE("Chern classes of symmetric powers agree with numeric root evaluation")
{
	for (int n = 1; n <= 4; ++n)
		for (bool dual : {false, true})
		{
			BundleSpec spec = sym_roots(n, dual);
			for (long a : {-3L, 1L, 2L})
				for (long b : {-1L, 4L})
				{
					// Oracle: elementary symmetric functions of the numeric roots.
					std::vector<Integer> e(static_cast<std::size_t>(n) + 2, 0);
					e[0] = 1;
					for (int i = 0; i <= n; ++i)
					{
						long root = i * a + (n - i) * b;
						if (dual)
							root = -root;
						for (int k = n + 1; k >= 1; --k)
							e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * root;
					}
					std::map<Var, long> at{{Var::b1, a + b}, {Var::b2, a * b}};
					for (int k = 0; k <= n + 1; ++k)
						CHECK(eval(chern_component(spec, k), at) == e[static_cast<std::size_t>(k)]);
				}
		}
}

TEST_CASE("Chern classes of Sym4 of the dual")
{
	BundleSpec s4 = sym_roots(4, true);
	CHECK(s4.label == "Sym4(Vdual)");
	CHECK(chern_component(s4, 1) == "-10*b1"_p);
	CHECK(chern_component(s4, 5) == "-32*b1*b2*(3*b1^2 + 4*b2)"_p);
	CHECK_THROWS_AS(chern_component(s4, 6), std::out_of_range);
	CHECK_THROWS_AS(chern_component(s4, -1), std::out_of_range);
}

TEST_CASE("duality negates odd Chern classes")
{
	for (int n = 1; n <= 4; ++n)
		for (int k = 0; k <= n + 1; ++k)
		{
			IntPoly c = chern_component(sym_roots(n, false), k);
			IntPoly cd = chern_component(sym_roots(n, true), k);
			CHECK(cd == (k % 2 ? -c : c));
		}
}

TEST_CASE("twisting shifts c1 by rank times the line class")
{
	for (int n = 1; n <= 4; ++n)
	{
		BundleSpec spec = sym_roots(n, true);
		BundleSpec tw = twist(spec, "g"_p, "Gamma");
		CHECK(chern_component(tw, 1) == chern_component(spec, 1) + IntPoly(n + 1) * "g"_p);
		CHECK(tw.label == spec.label + "(x)Gamma");
		// Agrees with the binomial twisting formula.
		std::vector<IntPoly> classes;
		for (int k = 0; k <= n + 1; ++k)
			classes.push_back(chern_component(spec, k));
		auto twisted = twist_chern_classes(classes, "g"_p);
		for (int k = 0; k <= n + 1; ++k)
			CHECK(chern_component(tw, k) == twisted[static_cast<std::size_t>(k)]);
	}
	CHECK_THROWS_AS(twist(sym_roots(1, false), "b2"_p), std::invalid_argument);
}

TEST_CASE("total Chern class of the standard bundle")
{
	CHECK(total_chern(sym_roots(1, false)) == "1 + b1 + b2"_p);
	CHECK(total_chern(sym_roots(1, true)) == "1 - b1 + b2"_p);
	CHECK(total_chern(sym_roots(1, false), ChernBasis::abstract) == "1 + c1 + c2"_p);
	CHECK(to_concrete("c1 + c2"_p) == "-b1 + b2"_p);
}
