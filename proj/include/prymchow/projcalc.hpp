#ifndef PRYMCHOW_PROJCALC_HPP
#define PRYMCHOW_PROJCALC_HPP

// Projective-bundle calculus on P(Sym^r E) for a rank-2 bundle E.
//
// Classes on P(Sym^r E) are carried in the basis s_r^0, ..., s_r^r, where
// s_r^j is the pushforward of j hyperplane classes along the multiplication
// map P(E)^j x P(Sym^(r-j) E) -> P(Sym^r E). In terms of h:
//
//   s_r^0 = 1,  s_r^1 = h,
//   s_r^(j+1) = (h + j*c1) s_r^j + j(r+1-j) c2 s_r^(j-1).

#include "prymchow/chern.hpp"
#include "prymchow/polyring.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymchow {

inline constexpr int kMaxSymPower = 4;

/// s_r^j as a polynomial in h, c1, c2.
inline IntPoly s_to_h(int r, int j)
{
	if (r < 1 || r > kMaxSymPower)
		throw std::out_of_range("symmetric power r = " + std::to_string(r) + " outside [1, 4]");
	if (j < 0 || j > r)
		throw std::out_of_range("s_" + std::to_string(r) + "^" + std::to_string(j) + " is not defined");
	IntPoly const h(Var::h), c1(Var::c1), c2(Var::c2);
	IntPoly prev, cur(1L);
	for (int k = 0; k < j; ++k)
	{
		IntPoly next = (h + k * c1) * cur + (k * (r + 1 - k)) * c2 * prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

/// s_r^j in h, b1, b2 (E = V^dual).
inline IntPoly s_to_h_concrete(int r, int j) { return to_concrete(s_to_h(r, j)); }

/// A class sum_j coeffs[j] * s_r^j on P(Sym^r E).
class SClassVec
{
  public:
	explicit SClassVec(int r) : r_(r), coeffs_(static_cast<std::size_t>(r) + 1)
	{
		if (r < 1 || r > kMaxSymPower)
			throw std::out_of_range("symmetric power r = " + std::to_string(r) + " outside [1, 4]");
	}

	SClassVec(int r, std::vector<IntPoly> coeffs) : SClassVec(r)
	{
		if (coeffs.size() > coeffs_.size())
			throw std::invalid_argument("too many s-basis coefficients for r = " + std::to_string(r));
		for (std::size_t j = 0; j < coeffs.size(); ++j)
			coeffs_[j] = std::move(coeffs[j]);
	}

	/// The basis element s_r^j.
	static SClassVec basis(int r, int j)
	{
		SClassVec v(r);
		v.at(j) = IntPoly(1L);
		return v;
	}

	int r() const { return r_; }
	std::vector<IntPoly> const &coeffs() const { return coeffs_; }

	IntPoly const &at(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
	IntPoly &at(int j) { return coeffs_.at(static_cast<std::size_t>(j)); }

	bool is_zero() const
	{
		for (auto const &c : coeffs_)
			if (!c.is_zero())
				return false;
		return true;
	}

	/// Pure codimension of the class, if homogeneous. The zero class has none.
	std::optional<int> codimension() const
	{
		std::optional<int> d;
		for (int j = 0; j <= r_; ++j)
		{
			auto const &c = at(j);
			if (c.is_zero())
				continue;
			if (!c.is_homogeneous())
				return std::nullopt;
			int here = *c.degree() + j;
			if (d && *d != here)
				return std::nullopt;
			d = here;
		}
		return d;
	}

	SClassVec &operator+=(SClassVec const &o)
	{
		check_same(o);
		for (int j = 0; j <= r_; ++j)
			at(j) += o.at(j);
		return *this;
	}

	SClassVec &operator-=(SClassVec const &o)
	{
		check_same(o);
		for (int j = 0; j <= r_; ++j)
			at(j) -= o.at(j);
		return *this;
	}

	friend SClassVec operator+(SClassVec a, SClassVec const &b) { return a += b; }
	friend SClassVec operator-(SClassVec a, SClassVec const &b) { return a -= b; }

	friend SClassVec operator*(IntPoly const &k, SClassVec v)
	{
		for (auto &c : v.coeffs_)
			c = k * c;
		return v;
	}

	friend bool operator==(SClassVec const &, SClassVec const &) = default;

	/// Polynomial in h. Coefficients in c1, c2 use the abstract basis; b1, b2
	/// coefficients use the concrete one.
	IntPoly to_h(ChernBasis basis) const
	{
		IntPoly out;
		for (int j = 0; j <= r_; ++j)
			if (!at(j).is_zero())
				out += at(j) * (basis == ChernBasis::concrete ? s_to_h_concrete(r_, j) : s_to_h(r_, j));
		return out;
	}

	/// Applies c1 -> -b1, c2 -> b2 to every coefficient.
	SClassVec concrete() const
	{
		SClassVec out(r_);
		for (int j = 0; j <= r_; ++j)
			out.at(j) = to_concrete(at(j));
		return out;
	}

	std::string to_string() const
	{
		std::string out;
		for (int j = r_; j >= 0; --j)
		{
			IntPoly const &c = at(j);
			if (c.is_zero())
				continue;
			std::string s = "s_" + std::to_string(r_) + "^" + std::to_string(j);
			std::string body;
			bool negative = false;
			if (c.size() == 1)
			{
				auto const &[m, k] = *c.terms().begin();
				negative = k < 0;
				IntPoly mag = c * Integer(negative ? -1 : 1);
				body = mag == IntPoly(1L) ? s : mag.to_string() + "*" + s;
			}
			else
				body = "(" + c.to_string() + ")*" + s;
			if (out.empty())
				out = negative ? "-" + body : body;
			else
				out += (negative ? " - " : " + ") + body;
		}
		return out.empty() ? "0" : out;
	}

  private:
	int r_;
	std::vector<IntPoly> coeffs_;

	void check_same(SClassVec const &o) const
	{
		if (o.r_ != r_)
			throw std::invalid_argument("s-classes live on different spaces: r = " + std::to_string(r_) + " vs " +
			                            std::to_string(o.r_));
	}
};

/// Expresses a polynomial in h (coefficients free of h) in the s_r basis by
/// triangular inversion of the s -> h recursion.
inline SClassVec h_poly_to_s(int r, IntPoly p, ChernBasis basis = ChernBasis::abstract)
{
	if (static_cast<int>(p.degree_in(Var::h)) > r)
		throw std::invalid_argument("h-degree " + std::to_string(p.degree_in(Var::h)) + " exceeds r = " +
		                            std::to_string(r) + "; no s-basis identity on this space");
	SClassVec out(r);
	for (int k = r; k >= 0; --k)
	{
		IntPoly lead = p.coefficient_of(Var::h, static_cast<unsigned>(k));
		if (lead.is_zero())
			continue;
		out.at(k) += lead;
		p -= lead * (basis == ChernBasis::concrete ? s_to_h_concrete(r, k) : s_to_h(r, k));
	}
	return out;
}

/// h^k on P(Sym^r E) in the s_r basis (abstract c1, c2 coefficients).
inline SClassVec h_to_s(int r, int k)
{
	if (k < 0)
		throw std::out_of_range("negative power of h");
	if (k > r)
		throw std::out_of_range("h^" + std::to_string(k) + " has no s-basis identity on P(Sym^" + std::to_string(r) + ")");
	return h_poly_to_s(r, IntPoly(Var::h).pow(static_cast<unsigned>(k)));
}

/// Chern classes c_0..c_n of a bundle in the requested basis.
inline std::vector<IntPoly> chern_classes(BundleSpec const &spec, ChernBasis basis)
{
	std::vector<IntPoly> out;
	for (std::size_t i = 0; i <= spec.rank(); ++i)
		out.push_back(chern_component(spec, static_cast<int>(i), basis));
	return out;
}

/// Projective-bundle relation sum_i var^(n-i) c_i.
inline IntPoly proj_relation(std::vector<IntPoly> const &classes, Var var = Var::h)
{
	std::size_t n = classes.size() - 1;
	IntPoly out;
	for (std::size_t i = 0; i <= n; ++i)
		out += IntPoly(var).pow(static_cast<unsigned>(n - i)) * classes[i];
	return out;
}

inline IntPoly proj_relation(BundleSpec const &spec, ChernBasis basis = ChernBasis::concrete, Var var = Var::h)
{
	return proj_relation(chern_classes(spec, basis), var);
}

/// Reduces p modulo the monic relation sum_i var^(n-i) c_i until deg_var < n.
inline IntPoly reduce_projective(IntPoly p, Var var, std::vector<IntPoly> const &classes)
{
	unsigned n = static_cast<unsigned>(classes.size() - 1);
	IntPoly const rel = proj_relation(classes, var);
	while (p.degree_in(var) >= n)
	{
		unsigned top = p.degree_in(var);
		IntPoly lead = p.coefficient_of(var, top);
		p -= lead * IntPoly(var).pow(top - n) * rel;
	}
	return p;
}

/// A class on P(W) x P(W) as a polynomial in h1, h2.
struct BiProjClass
{
	IntPoly poly;
	std::vector<IntPoly> chern; // c_0..c_n of W

	std::size_t rank() const { return chern.size() - 1; }

	BiProjClass reduced(Var first = Var::h1) const
	{
		Var second = first == Var::h1 ? Var::h2 : Var::h1;
		return {reduce_projective(reduce_projective(poly, first, chern), second, chern), chern};
	}
};

/// [Delta] = degree-(n-1) part of c(W) / ((1 - h1)(1 - h2)).
inline BiProjClass diagonal_class(BundleSpec const &spec, ChernBasis basis = ChernBasis::abstract)
{
	if (spec.rank() < 2)
		throw std::invalid_argument("diagonal class needs rank >= 2");
	auto classes = chern_classes(spec, basis);
	int n = static_cast<int>(spec.rank());
	IntPoly out;
	for (int i = 0; i <= n - 1; ++i)
		for (int a = 0; a <= n - 1 - i; ++a)
		{
			int b = n - 1 - i - a;
			out += classes[static_cast<std::size_t>(i)] * IntPoly(Var::h1).pow(static_cast<unsigned>(a)) *
			       IntPoly(Var::h2).pow(static_cast<unsigned>(b));
		}
	return {out, classes};
}

/// Delta_*(h^k) = h1^k [Delta], reduced in h1 then h2.
inline BiProjClass diagonal_push(BundleSpec const &spec, int k, ChernBasis basis = ChernBasis::abstract)
{
	if (k < 0 || k >= static_cast<int>(spec.rank()))
		throw std::out_of_range("diagonal pushforward of h^" + std::to_string(k) + " needs 0 <= k < rank");
	BiProjClass d = diagonal_class(spec, basis);
	d.poly = IntPoly(Var::h1).pow(static_cast<unsigned>(k)) * d.poly;
	return d.reduced(Var::h1);
}

} // namespace prymchow

#endif
