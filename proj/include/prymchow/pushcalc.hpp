#ifndef PRYMCHOW_PUSHCALC_HPP
#define PRYMCHOW_PUSHCALC_HPP

// Pushforwards along multiplication and squaring maps between the spaces
// P(Sym^r V^dual), and the fundamental classes of the finite torus-orbit
// subsets {X,Y}, {XY}, {X^2,Y^2}, ... used by the envelope.

#include "prymchow/chern.hpp"
#include "prymchow/ideal.hpp"
#include "prymchow/projcalc.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymchow {

inline Integer binomial(unsigned long n, unsigned long k)
{
	Integer out;
	mpz_bin_uiui(out.get_mpz_t(), n, k);
	return out;
}

/// mult_*: (s_a^alpha, s_b^beta) -> binom(a+b-alpha-beta, a-alpha) s_(a+b)^(alpha+beta),
/// extended bilinearly over the base ring.
inline SClassVec mult_push(SClassVec const &u, SClassVec const &v)
{
	int a = u.r(), b = v.r();
	if (a + b > kMaxSymPower)
		throw std::out_of_range("multiplication into Sym^" + std::to_string(a + b) + " is outside the modelled spaces");
	SClassVec out(a + b);
	for (int alpha = 0; alpha <= a; ++alpha)
	{
		if (u.at(alpha).is_zero())
			continue;
		for (int beta = 0; beta <= b; ++beta)
		{
			if (v.at(beta).is_zero())
				continue;
			Integer k = binomial(static_cast<unsigned long>(a + b - alpha - beta), static_cast<unsigned long>(a - alpha));
			out.at(alpha + beta) += k * (u.at(alpha) * v.at(beta));
		}
	}
	return out;
}

enum class SquareSource { PE, PSym2 };

inline std::string_view to_string(SquareSource s) { return s == SquareSource::PE ? "P(E)" : "P(Sym2 E)"; }

/// Pushforward of h^k along the squaring map P(W) -> P(Sym^2 W) computed as
/// mult o Delta: each h1^i h2^j of Delta_*(h^k) becomes mult(h^i, h^j).
inline SClassVec square_push_h_power(SquareSource source, int k)
{
	int a = source == SquareSource::PE ? 1 : 2;
	BiProjClass pushed = diagonal_push(sym_roots(a, false), k, ChernBasis::abstract);
	SClassVec out(2 * a);
	for (unsigned i = 0; i <= pushed.poly.degree_in(Var::h1); ++i)
	{
		IntPoly row = pushed.poly.coefficient_of(Var::h1, i);
		for (unsigned j = 0; j <= row.degree_in(Var::h2); ++j)
		{
			IntPoly coeff = row.coefficient_of(Var::h2, j);
			if (coeff.is_zero())
				continue;
			out += coeff * mult_push(h_to_s(a, static_cast<int>(i)), h_to_s(a, static_cast<int>(j)));
		}
	}
	return out;
}

/// Squaring pushforward of u. With the concrete basis the c1, c2 appearing in
/// the transfer table are specialised to -b1, b2.
inline SClassVec sq_push(SquareSource source, SClassVec const &u, ChernBasis basis = ChernBasis::abstract)
{
	int a = source == SquareSource::PE ? 1 : 2;
	if (u.r() != a)
		throw std::invalid_argument("squaring from " + std::string(to_string(source)) + " expects a class on P(Sym^" +
		                            std::to_string(a) + "), got r = " + std::to_string(u.r()));
	SClassVec out(2 * a);
	for (int j = 0; j <= a; ++j)
	{
		if (u.at(j).is_zero())
			continue;
		// s_a^j as a polynomial in h, then push each power.
		IntPoly as_h = s_to_h(a, j);
		SClassVec image(2 * a);
		for (unsigned k = 0; k <= as_h.degree_in(Var::h); ++k)
		{
			IntPoly c = as_h.coefficient_of(Var::h, k);
			if (!c.is_zero())
				image += c * square_push_h_power(source, static_cast<int>(k));
		}
		if (basis == ChernBasis::concrete)
			image = image.concrete();
		out += u.at(j) * image;
	}
	return out;
}

enum class SubsetLabel { X_Y, XY, X2_Y2, X2Y_XY2, X3_Y3, X2Y2, X3Y_XY3, X4_Y4 };

inline constexpr std::array<SubsetLabel, 8> kAllSubsets = {
    SubsetLabel::X_Y,   SubsetLabel::XY,   SubsetLabel::X2_Y2,   SubsetLabel::X2Y_XY2,
    SubsetLabel::X3_Y3, SubsetLabel::X2Y2, SubsetLabel::X3Y_XY3, SubsetLabel::X4_Y4};

inline std::string_view to_string(SubsetLabel l)
{
	constexpr std::array<std::string_view, 8> names = {"X_Y",   "XY",   "X2_Y2",   "X2Y_XY2",
	                                                   "X3_Y3", "X2Y2", "X3Y_XY3", "X4_Y4"};
	return names[static_cast<std::size_t>(l)];
}

enum class Origin { fixture, derived };

/// Closed forms of the finite-subset classes as displayed in the literature,
/// coefficients in Z[b1, b2, g]. Used as regression oracles.
inline SClassVec displayed_subset_class(SubsetLabel l)
{
	switch (l)
	{
	case SubsetLabel::X_Y: return SClassVec(1, {"-b1 - g"_p, "2"_p});
	case SubsetLabel::XY: return SClassVec(2, {"2*b2"_p, "g - b1"_p, "1"_p});
	case SubsetLabel::X2_Y2: return SClassVec(2, {"2*(b1^2 - 2*b2)"_p, "-2*b1"_p, "2"_p});
	case SubsetLabel::X2Y_XY2: return SClassVec(3, {"-6*b2*b1"_p, "2*(2*b2 + b1^2)"_p, "-(3*b1 + g)"_p, "2"_p});
	case SubsetLabel::X3_Y3:
		return SClassVec(3, {"6*b1*(3*b2 - b1^2)"_p, "2*(3*b1^2 - 6*b2)"_p, "g - 3*b1"_p, "2"_p});
	case SubsetLabel::X2Y2:
		return SClassVec(4, {"24*b2^2"_p, "-12*b2*b1"_p, "2*(b1^2 + 2*b2)"_p, "-2*b1"_p, "1"_p});
	case SubsetLabel::X3Y_XY3:
		return SClassVec(4, {"24*b2*(b1^2 - 2*b2)"_p, "-6*b1^3"_p, "6*b1^2"_p, "-4*b1"_p, "2"_p});
	case SubsetLabel::X4_Y4:
		return SClassVec(4, {"24*(b1^4 + 2*b2^2 - 4*b2*b1^2)"_p, "24*b1*(b2 - b1^2)"_p, "12*(b1^2 - 2*b2)"_p,
		                     "-4*b1"_p, "2"_p});
	}
	throw std::logic_error("unknown subset label");
}

inline HomogeneousIdeal const &bg_ideal()
{
	static HomogeneousIdeal const ideal(bg_presentation().relations);
	return ideal;
}

/// Coefficientwise equality of two s-classes in CH*(BG).
inline bool equal_in_bg(SClassVec const &a, SClassVec const &b)
{
	if (a.r() != b.r())
		return false;
	for (int j = 0; j <= a.r(); ++j)
		if (!bg_ideal().equal_mod(a.at(j), b.at(j)))
			return false;
	return true;
}

struct FiniteSubsetClass
{
	SubsetLabel label;
	SClassVec value;     // fixture value or recipe output, exact in Z[b1,b2,g]
	Origin origin;
	SClassVec displayed; // closed form it is compared against

	/// value == displayed as polynomials.
	bool literal_match() const { return value == displayed; }
	/// value == displayed in CH*(BG).
	bool matches_displayed() const { return equal_in_bg(value, displayed); }
};

/// Thrown by require_displayed() on the first coefficient that differs in
/// CH*(BG).
struct SubsetDerivationError : std::runtime_error
{
	SubsetLabel label;
	int s_index;
	IntPoly difference;

	SubsetDerivationError(SubsetLabel l, int j, IntPoly diff)
	    : std::runtime_error("derived [" + std::string(to_string(l)) + "] differs in the coefficient of s^" +
	                         std::to_string(j) + " by " + diff.to_string()),
	      label(l), s_index(j), difference(std::move(diff))
	{}
};

inline void require_displayed(FiniteSubsetClass const &c)
{
	for (int j = 0; j <= c.value.r(); ++j)
		if (!bg_ideal().equal_mod(c.value.at(j), c.displayed.at(j)))
			throw SubsetDerivationError(c.label, j, c.value.at(j) - c.displayed.at(j));
}

/// [{X,Y}] on P(V^dual). Taken as given: its derivation pushes forward along
/// BG_m^2 -> BG with formulas not reproduced here.
inline FiniteSubsetClass class_X_Y()
{
	SClassVec v = displayed_subset_class(SubsetLabel::X_Y);
	return {SubsetLabel::X_Y, v, Origin::fixture, v};
}

/// Intermediate objects of the [{XY}] derivation.
struct XYDerivation
{
	IntPoly twisted_total;  // c(Sym^2 V^dual (x) Gamma (x) det V), exact
	IntPoly quotient_c1;    // c1(Q)
	IntPoly quotient_c2;    // c2(Q)
	bool c3_vanishes;       // c3 of the rank-3 bundle is zero in CH*(BG)
	IntPoly top_class;      // c2(Q (x) O(1) (x) Gamma^dual (x) det V^dual) in h
	SClassVec value{2};     // top_class in the s_2 basis
};

/// [{XY}] = c2(pi^*Q (x) O(1) (x) Gamma^dual (x) det V^dual), where Q is the
/// quotient of Sym^2 V^dual (x) Gamma (x) det V by the section XY.
inline XYDerivation derive_class_XY()
{
	IntPoly const gamma(Var::g), b1(Var::b1), h(Var::h);
	BundleSpec bundle = twist(sym_roots(2, true), gamma + b1, "Gamma(x)det(V)");
	XYDerivation d;
	d.twisted_total = total_chern(bundle);
	// Q has the same total Chern class and rank 2.
	d.quotient_c1 = d.twisted_total.homogeneous_component(1);
	d.quotient_c2 = d.twisted_total.homogeneous_component(2);
	d.c3_vanishes = bg_ideal().contains(d.twisted_total.homogeneous_component(3));
	auto twisted = twist_chern_classes({IntPoly(1L), d.quotient_c1, d.quotient_c2}, h - gamma - b1);
	d.top_class = twisted[2];
	d.value = h_poly_to_s(2, d.top_class, ChernBasis::concrete);
	return d;
}

/// The derived [{XY}]; throws if it disagrees with the closed form in CH*(BG).
inline FiniteSubsetClass class_XY()
{
	XYDerivation d = derive_class_XY();
	if (!d.c3_vanishes)
		throw std::runtime_error("c3 of the twisted bundle does not vanish; XY is not a nowhere-zero section");
	FiniteSubsetClass c{SubsetLabel::XY, d.value, Origin::derived, displayed_subset_class(SubsetLabel::XY)};
	require_displayed(c);
	return c;
}

/// The six product recipes, run on exact values:
///   X2_Y2 = mult(X_Y, X_Y) - 2 XY        X2Y_XY2 = mult(X_Y, XY)
///   X3_Y3 = mult(X_Y, X2_Y2) - X2Y_XY2   X2Y2    = mult(XY, XY)
///   X3Y_XY3 = mult(XY, X2_Y2)            X4_Y4   = mult(X2_Y2, X2_Y2) - 2 X2Y2
/// Results are not compared here; see require_displayed().
inline std::vector<FiniteSubsetClass> derive_finite_subsets(FiniteSubsetClass const &x_y, FiniteSubsetClass const &xy)
{
	std::vector<FiniteSubsetClass> out;
	auto add = [&](SubsetLabel l, SClassVec v) -> SClassVec {
		out.push_back({l, v, Origin::derived, displayed_subset_class(l)});
		return v;
	};
	IntPoly const two(2L);
	SClassVec const &X_Y = x_y.value, &XY = xy.value;
	SClassVec X2_Y2 = add(SubsetLabel::X2_Y2, mult_push(X_Y, X_Y) - two * XY);
	SClassVec X2Y_XY2 = add(SubsetLabel::X2Y_XY2, mult_push(X_Y, XY));
	add(SubsetLabel::X3_Y3, mult_push(X_Y, X2_Y2) - X2Y_XY2);
	SClassVec X2Y2 = add(SubsetLabel::X2Y2, mult_push(XY, XY));
	add(SubsetLabel::X3Y_XY3, mult_push(XY, X2_Y2));
	add(SubsetLabel::X4_Y4, mult_push(X2_Y2, X2_Y2) - two * X2Y2);
	return out;
}

inline std::vector<FiniteSubsetClass> derive_finite_subsets()
{
	return derive_finite_subsets(class_X_Y(), class_XY());
}

/// All eight subset classes keyed by label: the fixture, the derived [{XY}]
/// and the six recipe outputs.
struct SubsetLibrary
{
	std::array<SClassVec, 8> values{SClassVec(1), SClassVec(1), SClassVec(1), SClassVec(1),
	                                SClassVec(1), SClassVec(1), SClassVec(1), SClassVec(1)};

	SClassVec const &operator[](SubsetLabel l) const { return values[static_cast<std::size_t>(l)]; }
	SClassVec &operator[](SubsetLabel l) { return values[static_cast<std::size_t>(l)]; }
};

inline SubsetLibrary subset_library(FiniteSubsetClass const &x_y, FiniteSubsetClass const &xy)
{
	SubsetLibrary lib;
	lib[SubsetLabel::X_Y] = x_y.value;
	lib[SubsetLabel::XY] = xy.value;
	for (auto const &c : derive_finite_subsets(x_y, xy))
		lib[c.label] = c.value;
	return lib;
}

} // namespace prymchow

#endif
