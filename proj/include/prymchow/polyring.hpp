#ifndef PRYMCHOW_POLYRING_HPP
#define PRYMCHOW_POLYRING_HPP

// Sparse multivariate polynomials with unbounded integer coefficients over a
// fixed universe of graded variables.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prymchow {

using Integer = mpz_class;

/// Every symbol the engine knows about. Enumerator order is the order in
/// which variables are spelled inside a monomial ("b1*g", "l1*g", "b1*h").
enum class Var : std::uint8_t { b1, l1, g, b2, l2, h, h1, h2, r1, r2, c1, c2 };

inline constexpr std::size_t kVarCount = 12;

inline constexpr std::array<Var, kVarCount> kAllVars = {
    Var::b1, Var::l1, Var::g,  Var::b2, Var::l2, Var::h,
    Var::h1, Var::h2, Var::r1, Var::r2, Var::c1, Var::c2};

inline constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }

inline constexpr int var_degree(Var v)
{
	switch (v)
	{
	case Var::b2:
	case Var::l2:
	case Var::c2: return 2;
	default: return 1;
	}
}

inline constexpr std::string_view var_name(Var v)
{
	constexpr std::array<std::string_view, kVarCount> names = {
	    "b1", "l1", "g", "b2", "l2", "h", "h1", "h2", "r1", "r2", "c1", "c2"};
	return names[index_of(v)];
}

inline std::optional<Var> var_from_name(std::string_view name)
{
	for (Var v : kAllVars)
		if (var_name(v) == name)
			return v;
	return std::nullopt;
}

// Comparison priority for the display order. Hyperplane classes come first so
// that projective-bundle expressions read as polynomials in h; the base
// variables follow as b1 > g > b2.
inline constexpr std::array<Var, kVarCount> kDisplayPriority = {
    Var::h,  Var::h1, Var::h2, Var::b1, Var::l1, Var::g,
    Var::b2, Var::l2, Var::r1, Var::r2, Var::c1, Var::c2};

struct Monomial
{
	std::array<std::uint8_t, kVarCount> exps{};

	static Monomial of(Var v, unsigned e = 1)
	{
		Monomial m;
		m.set(v, e);
		return m;
	}

	unsigned operator[](Var v) const { return exps[index_of(v)]; }

	void set(Var v, unsigned e)
	{
		if (e > 255)
			throw std::overflow_error("exponent exceeds 255");
		exps[index_of(v)] = static_cast<std::uint8_t>(e);
	}

	int degree() const
	{
		int d = 0;
		for (Var v : kAllVars)
			d += var_degree(v) * exps[index_of(v)];
		return d;
	}

	bool is_one() const
	{
		return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
	}

	bool divides(Monomial const &other) const
	{
		for (std::size_t i = 0; i < kVarCount; ++i)
			if (exps[i] > other.exps[i])
				return false;
		return true;
	}

	friend Monomial operator*(Monomial a, Monomial const &b)
	{
		for (Var v : kAllVars)
			a.set(v, a[v] + b[v]);
		return a;
	}

	/// Requires `b.divides(a)`.
	friend Monomial operator/(Monomial a, Monomial const &b)
	{
		for (std::size_t i = 0; i < kVarCount; ++i)
			a.exps[i] = static_cast<std::uint8_t>(a.exps[i] - b.exps[i]);
		return a;
	}

	friend bool operator==(Monomial const &, Monomial const &) = default;

	std::string to_string() const
	{
		std::string out;
		for (Var v : kAllVars)
		{
			auto e = (*this)[v];
			if (e == 0)
				continue;
			if (!out.empty())
				out += '*';
			out += var_name(v);
			if (e > 1)
				out += "^" + std::to_string(e);
		}
		return out.empty() ? "1" : out;
	}
};

/// Graded lexicographic "greater than": higher weighted degree first, ties
/// broken lexicographically along kDisplayPriority.
struct GradedLexGreater
{
	bool operator()(Monomial const &a, Monomial const &b) const
	{
		int da = a.degree(), db = b.degree();
		if (da != db)
			return da > db;
		for (Var v : kDisplayPriority)
			if (a[v] != b[v])
				return a[v] > b[v];
		return false;
	}
};

class IntPoly
{
  public:
	using TermMap = std::map<Monomial, Integer, GradedLexGreater>;

	IntPoly() = default;
	IntPoly(long c) { add_term(Monomial{}, Integer(c)); }
	IntPoly(Integer const &c) { add_term(Monomial{}, c); }
	IntPoly(Var v) { add_term(Monomial::of(v), Integer(1)); }

	static IntPoly term(Integer const &c, Monomial const &m)
	{
		IntPoly p;
		p.add_term(m, c);
		return p;
	}

	static IntPoly variable(Var v) { return IntPoly(v); }

	TermMap const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	Integer coefficient(Monomial const &m) const
	{
		auto it = terms_.find(m);
		return it == terms_.end() ? Integer(0) : it->second;
	}

	void add_term(Monomial const &m, Integer const &c)
	{
		if (c == 0)
			return;
		auto [it, inserted] = terms_.try_emplace(m, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	/// Maximal weighted degree of a term; nullopt for the zero polynomial.
	std::optional<int> degree() const
	{
		if (terms_.empty())
			return std::nullopt;
		return terms_.begin()->first.degree();
	}

	/// Zero counts as homogeneous (of every degree).
	bool is_homogeneous() const
	{
		if (terms_.empty())
			return true;
		int d = terms_.begin()->first.degree();
		return std::all_of(terms_.begin(), terms_.end(),
		                   [d](auto const &t) { return t.first.degree() == d; });
	}

	IntPoly homogeneous_component(int d) const
	{
		IntPoly out;
		for (auto const &[m, c] : terms_)
			if (m.degree() == d)
				out.terms_.emplace_hint(out.terms_.end(), m, c);
		return out;
	}

	/// Homogeneous pieces keyed by degree.
	std::map<int, IntPoly> components() const
	{
		std::map<int, IntPoly> out;
		for (auto const &[m, c] : terms_)
			out[m.degree()].terms_.emplace(m, c);
		return out;
	}

	unsigned degree_in(Var v) const
	{
		unsigned d = 0;
		for (auto const &[m, c] : terms_)
			d = std::max(d, m[v]);
		return d;
	}

	bool uses(Var v) const { return degree_in(v) > 0; }

	/// Coefficient of v^k, viewing the polynomial as univariate in v.
	IntPoly coefficient_of(Var v, unsigned k) const
	{
		IntPoly out;
		for (auto const &[m, c] : terms_)
			if (m[v] == k)
			{
				Monomial rest = m;
				rest.set(v, 0);
				out.add_term(rest, c);
			}
		return out;
	}

	IntPoly operator-() const
	{
		IntPoly out = *this;
		for (auto &[m, c] : out.terms_)
			c = -c;
		return out;
	}

	IntPoly &operator+=(IntPoly const &o)
	{
		for (auto const &[m, c] : o.terms_)
			add_term(m, c);
		return *this;
	}

	IntPoly &operator-=(IntPoly const &o)
	{
		for (auto const &[m, c] : o.terms_)
			add_term(m, -c);
		return *this;
	}

	IntPoly &operator*=(IntPoly const &o) { return *this = *this * o; }

	friend IntPoly operator+(IntPoly a, IntPoly const &b) { return a += b; }
	friend IntPoly operator-(IntPoly a, IntPoly const &b) { return a -= b; }

	friend IntPoly operator*(IntPoly const &a, IntPoly const &b)
	{
		IntPoly out;
		for (auto const &[ma, ca] : a.terms_)
			for (auto const &[mb, cb] : b.terms_)
				out.add_term(ma * mb, ca * cb);
		return out;
	}

	friend IntPoly operator*(IntPoly a, Integer const &k)
	{
		if (k == 0)
			return {};
		for (auto &[m, c] : a.terms_)
			c *= k;
		return a;
	}

	friend bool operator==(IntPoly const &a, IntPoly const &b) { return a.terms_ == b.terms_; }

	IntPoly pow(unsigned e) const
	{
		IntPoly out(1L), base = *this;
		while (e)
		{
			if (e & 1u)
				out *= base;
			e >>= 1u;
			if (e)
				base *= base;
		}
		return out;
	}

	/// Replaces v by `replacement`. The replacement must be homogeneous of the
	/// same degree as v so that gradedness is preserved.
	IntPoly substitute(Var v, IntPoly const &replacement) const
	{
		if (!replacement.is_zero() &&
		    (!replacement.is_homogeneous() || *replacement.degree() != var_degree(v)))
			throw std::invalid_argument("substitution for " + std::string(var_name(v)) +
			                            " must be homogeneous of degree " +
			                            std::to_string(var_degree(v)));
		unsigned top = degree_in(v);
		std::vector<IntPoly> powers{IntPoly(1L)};
		for (unsigned k = 1; k <= top; ++k)
			powers.push_back(powers.back() * replacement);
		IntPoly out;
		for (auto const &[m, c] : terms_)
		{
			Monomial rest = m;
			rest.set(v, 0);
			out += powers[m[v]] * term(c, rest);
		}
		return out;
	}

	/// True iff every coefficient is divisible by k.
	bool divisible_by(Integer const &k) const
	{
		return std::all_of(terms_.begin(), terms_.end(),
		                   [&](auto const &t) { return mpz_divisible_p(t.second.get_mpz_t(), k.get_mpz_t()) != 0; });
	}

	std::string to_string() const
	{
		if (terms_.empty())
			return "0";
		std::string out;
		bool first = true;
		for (auto const &[m, c] : terms_)
		{
			bool negative = c < 0;
			Integer mag = abs(c);
			if (first)
				out += negative ? "-" : "";
			else
				out += negative ? " - " : " + ";
			first = false;
			if (m.is_one())
				out += mag.get_str();
			else if (mag == 1)
				out += m.to_string();
			else
				out += mag.get_str() + "*" + m.to_string();
		}
		return out;
	}

	/// Parses the serialized form, plus parentheses and powers of
	/// subexpressions, e.g. "-32*b1*b2*(3*b1^2+4*b2)".
	static IntPoly parse(std::string_view text);

  private:
	TermMap terms_;
};

inline IntPoly operator*(Integer const &k, IntPoly const &p) { return p * k; }
inline IntPoly operator*(long k, IntPoly const &p) { return p * Integer(k); }

inline std::ostream &operator<<(std::ostream &os, IntPoly const &p) { return os << p.to_string(); }

namespace detail {

class PolyParser
{
  public:
	explicit PolyParser(std::string_view s) : s_(s) {}

	IntPoly run()
	{
		IntPoly p = expr();
		skip();
		if (pos_ != s_.size())
			fail("trailing input");
		return p;
	}

  private:
	std::string_view s_;
	std::size_t pos_ = 0;

	[[noreturn]] void fail(std::string const &what) const
	{
		throw std::invalid_argument("cannot parse polynomial \"" + std::string(s_) + "\" at " +
		                            std::to_string(pos_) + ": " + what);
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool eat(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	IntPoly expr()
	{
		IntPoly acc;
		bool negate = false;
		if (eat('-'))
			negate = true;
		else
			eat('+');
		acc = negate ? -product() : product();
		while (true)
		{
			if (eat('+'))
				acc += product();
			else if (eat('-'))
				acc -= product();
			else
				return acc;
		}
	}

	IntPoly product()
	{
		IntPoly acc = power();
		while (eat('*'))
			acc *= power();
		return acc;
	}

	IntPoly power()
	{
		IntPoly base = primary();
		if (eat('^'))
		{
			skip();
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			if (start == pos_)
				fail("expected exponent");
			base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
		}
		return base;
	}

	IntPoly primary()
	{
		skip();
		if (eat('('))
		{
			IntPoly inner = expr();
			if (!eat(')'))
				fail("expected ')'");
			return inner;
		}
		if (pos_ >= s_.size())
			fail("unexpected end");
		std::size_t start = pos_;
		if (std::isdigit(static_cast<unsigned char>(s_[pos_])))
		{
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			return IntPoly(Integer(std::string(s_.substr(start, pos_ - start))));
		}
		while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		auto v = var_from_name(s_.substr(start, pos_ - start));
		if (!v)
			fail("unknown variable");
		return IntPoly(*v);
	}
};

} // namespace detail

inline IntPoly IntPoly::parse(std::string_view text) { return detail::PolyParser(text).run(); }

inline IntPoly operator""_p(char const *s, std::size_t n) { return IntPoly::parse({s, n}); }

/// All monomials in `vars` of weighted degree exactly d, in display order.
inline std::vector<Monomial> monomials_of_degree(int d, std::vector<Var> const &vars)
{
	std::vector<Monomial> out;
	if (d < 0)
		return out;
	Monomial cur;
	auto rec = [&](auto &self, std::size_t i, int left) -> void {
		if (i == vars.size())
		{
			if (left == 0)
				out.push_back(cur);
			return;
		}
		int w = var_degree(vars[i]);
		for (int e = 0; e * w <= left; ++e)
		{
			cur.set(vars[i], static_cast<unsigned>(e));
			self(self, i + 1, left - e * w);
		}
		cur.set(vars[i], 0);
	};
	rec(rec, 0, d);
	std::sort(out.begin(), out.end(), GradedLexGreater{});
	return out;
}

/// Ordered variable list plus homogeneous relations.
struct RingPresentation
{
	std::vector<Var> variables;
	std::vector<IntPoly> relations;

	RingPresentation(std::vector<Var> vars, std::vector<IntPoly> rels)
	    : variables(std::move(vars)), relations(std::move(rels))
	{
		for (std::size_t i = 0; i < variables.size(); ++i)
			for (std::size_t j = i + 1; j < variables.size(); ++j)
				if (variables[i] == variables[j])
					throw std::invalid_argument("duplicate variable in ring presentation");
		for (auto const &r : relations)
			if (!r.is_homogeneous())
				throw std::invalid_argument("relation " + r.to_string() + " is not homogeneous");
	}

	std::vector<Monomial> monomials_of_degree(int d) const { return prymchow::monomials_of_degree(d, variables); }
};

inline std::vector<Monomial> monomials_of_degree(int d, RingPresentation const &ring)
{
	return ring.monomials_of_degree(d);
}

/// Z[b1, b2, g] / (2g, g^2 + b1*g).
inline RingPresentation bg_presentation()
{
	return RingPresentation({Var::b1, Var::b2, Var::g}, {2 * IntPoly(Var::g), "g^2 + b1*g"_p});
}

/// Exact quotient p / d if d divides p in Z[vars], otherwise nullopt.
inline std::optional<IntPoly> exact_quotient(IntPoly p, IntPoly const &d)
{
	if (d.is_zero())
		throw std::invalid_argument("division by zero polynomial");
	auto const &[lead_m, lead_c] = *d.terms().begin();
	IntPoly q;
	while (!p.is_zero())
	{
		auto const &[m, c] = *p.terms().begin();
		if (!lead_m.divides(m) || !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t()))
			return std::nullopt;
		IntPoly t = IntPoly::term(Integer(c / lead_c), m / lead_m);
		q += t;
		p -= t * d;
	}
	return q;
}

} // namespace prymchow

#endif
