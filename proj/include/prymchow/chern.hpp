#ifndef PRYMCHOW_CHERN_HPP
#define PRYMCHOW_CHERN_HPP

// Chern-root calculus for bundles built from a rank-2 bundle with formal
// roots r1, r2.
//
// Two coefficient bases are supported. In the concrete basis r1, r2 are the
// roots of V (so r1 + r2 = b1, r1*r2 = b2) and duals are formed by negating
// roots. In the abstract basis r1, r2 are the roots of a generic rank-2
// bundle E with Chern classes c1, c2. to_concrete() bridges the abstract basis
// to E = V^dual, i.e. c1 -> -b1, c2 -> b2.

#include "prymchow/polyring.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prymchow {

enum class ChernBasis { concrete, abstract };

/// Thrown when a root expression is not invariant under r1 <-> r2.
class NonSymmetricError : public std::domain_error
{
  public:
	explicit NonSymmetricError(IntPoly remainder)
	    : std::domain_error("expression is not symmetric in r1, r2; p - swap(p) = " + remainder.to_string()),
	      remainder_(std::move(remainder))
	{}

	IntPoly const &remainder() const { return remainder_; }

  private:
	IntPoly remainder_;
};

inline IntPoly swap_roots(IntPoly const &p)
{
	IntPoly out;
	for (auto const &[m, c] : p.terms())
	{
		Monomial s = m;
		s.set(Var::r1, m[Var::r2]);
		s.set(Var::r2, m[Var::r1]);
		out.add_term(s, c);
	}
	return out;
}

/// Polynomial in the formal roots r1, r2 with base-variable coefficients.
class ChernRootExpr
{
  public:
	ChernRootExpr() = default;
	ChernRootExpr(IntPoly p) : poly_(std::move(p)) {}

	IntPoly const &poly() const { return poly_; }

	bool is_symmetric() const { return swap_roots(poly_) == poly_; }

	/// Rewrites in elementary symmetric functions: e1 = r1 + r2, e2 = r1*r2
	/// become b1, b2 (concrete) or c1, c2 (abstract).
	IntPoly reduce(ChernBasis basis = ChernBasis::concrete) const
	{
		IntPoly diff = poly_ - swap_roots(poly_);
		if (!diff.is_zero())
			throw NonSymmetricError(diff);
		IntPoly const e1 = IntPoly(Var::r1) + IntPoly(Var::r2);
		IntPoly const e2 = IntPoly(Var::r1) * IntPoly(Var::r2);
		IntPoly const t1 = basis == ChernBasis::concrete ? IntPoly(Var::b1) : IntPoly(Var::c1);
		IntPoly const t2 = basis == ChernBasis::concrete ? IntPoly(Var::b2) : IntPoly(Var::c2);

		IntPoly rest = poly_, out;
		while (!rest.is_zero())
		{
			// Leading term in lex order on (r1, r2); symmetric => a >= b.
			Monomial lead{};
			Integer coeff;
			bool found = false;
			for (auto const &[m, c] : rest.terms())
				if (!found || m[Var::r1] > lead[Var::r1] ||
				    (m[Var::r1] == lead[Var::r1] && m[Var::r2] > lead[Var::r2]) ||
				    (m[Var::r1] == lead[Var::r1] && m[Var::r2] == lead[Var::r2] && GradedLexGreater{}(m, lead)))
				{
					lead = m;
					coeff = c;
					found = true;
				}
			unsigned a = lead[Var::r1], b = lead[Var::r2];
			Monomial base = lead;
			base.set(Var::r1, 0);
			base.set(Var::r2, 0);
			IntPoly scalar = IntPoly::term(coeff, base);
			rest -= scalar * e1.pow(a - b) * e2.pow(b);
			out += scalar * t1.pow(a - b) * t2.pow(b);
		}
		return out;
	}

  private:
	IntPoly poly_;
};

/// Inverse of reduce(): b1 -> r1 + r2, b2 -> r1*r2 (or c1, c2 likewise).
inline IntPoly expand_in_roots(IntPoly const &p, ChernBasis basis = ChernBasis::concrete)
{
	IntPoly const e1 = IntPoly(Var::r1) + IntPoly(Var::r2);
	IntPoly const e2 = IntPoly(Var::r1) * IntPoly(Var::r2);
	if (basis == ChernBasis::concrete)
		return p.substitute(Var::b1, e1).substitute(Var::b2, e2);
	return p.substitute(Var::c1, e1).substitute(Var::c2, e2);
}

/// c1 -> -b1, c2 -> b2: specialises E to V^dual.
inline IntPoly to_concrete(IntPoly const &p)
{
	return p.substitute(Var::c1, -IntPoly(Var::b1)).substitute(Var::c2, IntPoly(Var::b2));
}

struct BundleSpec
{
	std::vector<IntPoly> roots;
	std::string label;

	std::size_t rank() const { return roots.size(); }
};

/// Roots of Sym^n of the standard rank-2 bundle: i*r1 + (n-i)*r2, negated for
/// the dual.
inline BundleSpec sym_roots(int n, bool dual)
{
	if (n < 1)
		throw std::invalid_argument("symmetric power must be at least 1");
	BundleSpec spec;
	for (int i = 0; i <= n; ++i)
	{
		IntPoly root = i * IntPoly(Var::r1) + (n - i) * IntPoly(Var::r2);
		spec.roots.push_back(dual ? -root : root);
	}
	std::string base = dual ? "Vdual" : "V";
	spec.label = n == 1 ? base : "Sym" + std::to_string(n) + "(" + base + ")";
	return spec;
}

/// Twist by a line bundle with first Chern class `lineclass`.
inline BundleSpec twist(BundleSpec spec, IntPoly const &lineclass, std::string const &line_label = {})
{
	if (!lineclass.is_homogeneous() || (!lineclass.is_zero() && *lineclass.degree() != 1))
		throw std::invalid_argument("twisting class must be homogeneous of degree 1, got " + lineclass.to_string());
	for (auto &r : spec.roots)
		r += lineclass;
	spec.label += "(x)" + (line_label.empty() ? "[" + lineclass.to_string() + "]" : line_label);
	return spec;
}

/// Product of (1 + root) over all roots, reduced symmetrically.
inline IntPoly total_chern(BundleSpec const &spec, ChernBasis basis = ChernBasis::concrete)
{
	IntPoly prod(1L);
	for (auto const &r : spec.roots)
		prod *= IntPoly(1L) + r;
	return ChernRootExpr(prod).reduce(basis);
}

inline IntPoly chern_component(BundleSpec const &spec, int i, ChernBasis basis = ChernBasis::concrete)
{
	if (i < 0 || static_cast<std::size_t>(i) > spec.rank())
		throw std::out_of_range("Chern class index " + std::to_string(i) + " outside [0, " +
		                        std::to_string(spec.rank()) + "]");
	// Elementary symmetric function of the roots, built directly in degree i.
	std::vector<IntPoly> e(spec.rank() + 1);
	e[0] = IntPoly(1L);
	for (auto const &r : spec.roots)
		for (std::size_t k = spec.rank(); k >= 1; --k)
			e[k] += e[k - 1] * r;
	return ChernRootExpr(e[static_cast<std::size_t>(i)]).reduce(basis);
}

/// Chern classes c_0..c_n of E (x) L for a rank-n bundle E, given those of E
/// and c1(L) = `line`: c_k(E (x) L) = sum_i binom(n - i, k - i) c_i(E) line^(k-i).
inline std::vector<IntPoly> twist_chern_classes(std::vector<IntPoly> const &classes, IntPoly const &line)
{
	std::size_t n = classes.size() - 1;
	std::vector<IntPoly> out(n + 1);
	for (std::size_t k = 0; k <= n; ++k)
		for (std::size_t i = 0; i <= k; ++i)
		{
			Integer binom;
			mpz_bin_uiui(binom.get_mpz_t(), n - i, k - i);
			out[k] += binom * classes[i] * line.pow(static_cast<unsigned>(k - i));
		}
	return out;
}

} // namespace prymchow

#endif
