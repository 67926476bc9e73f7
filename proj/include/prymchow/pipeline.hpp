#ifndef PRYMCHOW_PIPELINE_HPP
#define PRYMCHOW_PIPELINE_HPP

// Excision assembly for CH*(R_2).
//
// CH*(P(Sym^4 V^dual)) = Z[b1,b2,g,h] / (2g, g^2 + b1*g, P(h)). Removing the
// discriminant kills the image of the envelope pushforward, and removing the
// zero section of the G_m-torsor sets h = b1 + g. All pushforwards are
// computed exactly in the free ring; the relations enter only through ideal
// membership at the end.

#include "prymchow/chern.hpp"
#include "prymchow/ideal.hpp"
#include "prymchow/projcalc.hpp"
#include "prymchow/pushcalc.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace prymchow {

enum class ComponentId { p11, p12, p21, p22, p23, p31, p32, p4 };

inline constexpr std::array<ComponentId, 8> kAllComponents = {ComponentId::p11, ComponentId::p12, ComponentId::p21,
                                                              ComponentId::p22, ComponentId::p23, ComponentId::p31,
                                                              ComponentId::p32, ComponentId::p4};

inline std::string_view to_string(ComponentId c)
{
	constexpr std::array<std::string_view, 8> names = {"p11", "p12", "p21", "p22", "p23", "p31", "p32", "p4"};
	return names[static_cast<std::size_t>(c)];
}

struct EnvelopeComponent
{
	ComponentId id;
	std::string map;       // what the component does to binary forms
	std::string procedure; // how its pushforward is computed
	std::optional<std::string> skip_reason;
};

inline std::vector<EnvelopeComponent> envelope_components()
{
	std::string const factors = "factors through p11";
	return {
	    {ComponentId::p11, "P(V*) x P(Sym2 V*) -> P(Sym4 V*), (F,G) -> F^2 G", "mult(sq(s_1^i), s_2^j)", {}},
	    {ComponentId::p12, "P(Sym3 V*) x {X,Y} -> P(Sym4 V*), (F,G) -> FG", "mult(s_3^i, [X_Y])", {}},
	    {ComponentId::p21, "P(Sym2 V*) -> P(Sym4 V*), F -> F^2", "sq(s_2^j)", {}},
	    {ComponentId::p22, "P(V*) x P(V*) x {X,Y} -> P(Sym4 V*), (F1,F2,G) -> F1^2 F2 G",
	     "mult(sq(s_1^i), mult(s_1^j, [X_Y]))", factors},
	    {ComponentId::p23, "P(Sym2 V*) x {X^2,Y^2,XY} -> P(Sym4 V*), (F,G) -> FG",
	     "mult(s_2^j, [X2_Y2]), mult(s_2^j, [XY])", {}},
	    {ComponentId::p31, "P(V*) x {X^3,Y^3,X^2Y,XY^2} -> P(Sym4 V*), (F,G) -> FG",
	     "mult(s_1^i, [X3_Y3]), mult(s_1^i, [X2Y_XY2])", {}},
	    {ComponentId::p32, "P(V*) x {X^2,Y^2,XY} -> P(Sym4 V*), (F,G) -> F^2 G",
	     "mult(sq(s_1^i), [X2_Y2]), mult(sq(s_1^i), [XY])", factors},
	    {ComponentId::p4, "{X^4,Y^4,X^3Y,XY^3,X^2Y^2} -> P(Sym4 V*)", "[X4_Y4], [X3Y_XY3], [X2Y2]", {}},
	};
}

struct Pushforward
{
	ComponentId component;
	std::string source; // e.g. "s_1^1 (x) s_2^0"
	SClassVec value;    // on P(Sym^4 V^dual), coefficients in Z[b1,b2,g]

	std::string provenance() const { return std::string(to_string(component)) + "/" + source; }
};

/// h -> b1 + g.
inline IntPoly torsor_substitute(IntPoly const &p) { return p.substitute(Var::h, "b1 + g"_p); }

/// A class on P(Sym^4 V^dual) written in h and then restricted along h = b1 + g.
inline IntPoly torsor_substitute(SClassVec const &v) { return torsor_substitute(v.to_h(ChernBasis::concrete)); }

struct ExcisionIdeal
{
	std::vector<IntPoly> generators;
	std::vector<std::string> provenance;

	void add(IntPoly g, std::string why)
	{
		if (!g.is_homogeneous())
			throw std::logic_error("excision generator " + g.to_string() + " from " + why + " is not homogeneous");
		generators.push_back(std::move(g));
		provenance.push_back(std::move(why));
	}
};

/// Which pieces go into the assembled ideal; the defaults give the full one.
struct AssemblyOptions
{
	bool bg_relation_2g = true;
	bool bg_relation_quadratic = true;
	bool projective_relation = true;
	std::set<ComponentId> dropped_components;
};

/// A generator with the spelling used in the final presentation.
struct DisplayedGenerator
{
	std::string text;
	IntPoly poly;
};

inline std::vector<DisplayedGenerator> displayed(std::initializer_list<char const *> texts)
{
	std::vector<DisplayedGenerator> out;
	for (char const *t : texts)
		out.push_back({t, IntPoly::parse(t)});
	return out;
}

/// (2g, 2b1, 8b2, g^2 + b1*g, b1^2 + b1*g).
inline std::vector<DisplayedGenerator> target_generators()
{
	return displayed({"2*g", "2*b1", "8*b2", "g^2+b1*g", "b1^2+b1*g"});
}

/// The answer in Hodge classes: (2*l1, 2*g, 8*l2, g^2+l1*g, l1^2+l1*g).
inline std::vector<DisplayedGenerator> hodge_generators()
{
	return displayed({"2*l1", "2*g", "8*l2", "g^2+l1*g", "l1^2+l1*g"});
}

/// b_i = (-1)^i l_i.
inline IntPoly relabel_to_hodge(IntPoly const &p)
{
	return p.substitute(Var::b1, -IntPoly(Var::l1)).substitute(Var::b2, IntPoly(Var::l2));
}

inline std::string hodge_presentation()
{
	std::string out = "CH*(R_2) = Z[l1,l2,g]/(";
	bool first = true;
	for (auto const &g : hodge_generators())
	{
		out += (first ? "" : ", ") + g.text;
		first = false;
	}
	return out + ")";
}

inline std::vector<IntPoly> polys_of(std::vector<DisplayedGenerator> const &gens)
{
	std::vector<IntPoly> out;
	for (auto const &g : gens)
		out.push_back(g.poly);
	return out;
}

struct TheoremResult
{
	bool verified = false;
	ExcisionIdeal assembled;
	std::vector<IntPoly> target;
	IdealComparison comparison;
	bool relabel_matches = false; // relabelled target == Hodge-class ideal
	std::string presentation;

	/// Human-readable failures: generator and direction.
	std::vector<std::string> failures() const
	{
		std::vector<std::string> out;
		for (std::size_t i = 0; i < comparison.a_in_b.size(); ++i)
			if (!comparison.a_in_b[i])
				out.push_back("assembled generator " + assembled.generators[i].to_string() + " (" +
				              assembled.provenance[i] + ") is not in the target ideal");
		for (std::size_t i = 0; i < comparison.b_in_a.size(); ++i)
			if (!comparison.b_in_a[i])
				out.push_back("target generator " + target[i].to_string() + " is not in the assembled ideal");
		if (!relabel_matches)
			out.push_back("relabelled target does not match the Hodge-class presentation");
		return out;
	}
};

struct Fixtures
{
	FiniteSubsetClass x_y = class_X_Y();
	FiniteSubsetClass xy = class_XY();
};

class R2Pipeline
{
  public:
	explicit R2Pipeline(Fixtures fixtures = {})
	    : fixtures_(std::move(fixtures)), target_(polys_of(target_generators()))
	{}

	Fixtures const &fixtures() const { return fixtures_; }
	HomogeneousIdeal const &target_ideal() const { return target_; }

	/// Exact values of all subset classes, derived from the fixtures.
	SubsetLibrary const &library() const
	{
		if (!library_)
			library_ = subset_library(fixtures_.x_y, fixtures_.xy);
		return *library_;
	}

	/// The pushforward of every s-basis class of every non-skipped component.
	std::vector<Pushforward> const &envelope_pushforwards() const
	{
		if (pushforwards_)
			return *pushforwards_;
		auto const &lib = library();
		std::vector<Pushforward> out;
		auto s = [](int r, int j) { return SClassVec::basis(r, j); };
		auto label = [](int r, int j) { return "s_" + std::to_string(r) + "^" + std::to_string(j); };

		for (int i = 0; i <= 1; ++i)
			for (int j = 0; j <= 2; ++j)
				out.push_back({ComponentId::p11, label(1, i) + " (x) " + label(2, j),
				               mult_push(sq_push(SquareSource::PE, s(1, i), ChernBasis::concrete), s(2, j))});
		for (int i = 0; i <= 3; ++i)
			out.push_back({ComponentId::p12, label(3, i) + " (x) [X_Y]", mult_push(s(3, i), lib[SubsetLabel::X_Y])});
		for (int j = 0; j <= 2; ++j)
			out.push_back({ComponentId::p21, label(2, j), sq_push(SquareSource::PSym2, s(2, j), ChernBasis::concrete)});
		for (SubsetLabel g : {SubsetLabel::X2_Y2, SubsetLabel::XY})
			for (int j = 0; j <= 2; ++j)
				out.push_back({ComponentId::p23, label(2, j) + " (x) [" + std::string(to_string(g)) + "]",
				               mult_push(s(2, j), lib[g])});
		for (SubsetLabel g : {SubsetLabel::X3_Y3, SubsetLabel::X2Y_XY2})
			for (int i = 0; i <= 1; ++i)
				out.push_back({ComponentId::p31, label(1, i) + " (x) [" + std::string(to_string(g)) + "]",
				               mult_push(s(1, i), lib[g])});
		for (SubsetLabel g : {SubsetLabel::X4_Y4, SubsetLabel::X3Y_XY3, SubsetLabel::X2Y2})
			out.push_back({ComponentId::p4, "[" + std::string(to_string(g)) + "]", lib[g]});
		pushforwards_ = std::move(out);
		return *pushforwards_;
	}

	/// The two components that factor through p11, computed anyway.
	std::vector<Pushforward> factoring_pushforwards() const
	{
		auto const &lib = library();
		std::vector<Pushforward> out;
		auto s = [](int r, int j) { return SClassVec::basis(r, j); };
		for (int i = 0; i <= 1; ++i)
			for (int j = 0; j <= 1; ++j)
				out.push_back({ComponentId::p22,
				               "s_1^" + std::to_string(i) + " (x) s_1^" + std::to_string(j) + " (x) [X_Y]",
				               mult_push(sq_push(SquareSource::PE, s(1, i), ChernBasis::concrete),
				                         mult_push(s(1, j), lib[SubsetLabel::X_Y]))});
		for (SubsetLabel g : {SubsetLabel::X2_Y2, SubsetLabel::XY})
			for (int i = 0; i <= 1; ++i)
				out.push_back({ComponentId::p32, "s_1^" + std::to_string(i) + " (x) [" + std::string(to_string(g)) + "]",
				               mult_push(sq_push(SquareSource::PE, s(1, i), ChernBasis::concrete), lib[g])});
		return out;
	}

	/// P(h) = sum_i h^(5-i) c_i(Sym^4 V^dual).
	static IntPoly projective_relation() { return proj_relation(sym_roots(4, true), ChernBasis::concrete); }

	ExcisionIdeal assemble(AssemblyOptions const &opts = {}) const
	{
		ExcisionIdeal ideal;
		if (opts.bg_relation_2g)
			ideal.add("2*g"_p, "BG relation");
		if (opts.bg_relation_quadratic)
			ideal.add("g^2 + b1*g"_p, "BG relation");
		if (opts.projective_relation)
			ideal.add(torsor_substitute(projective_relation()), "P(h)");
		for (auto const &pf : envelope_pushforwards())
			if (!opts.dropped_components.count(pf.component))
				ideal.add(torsor_substitute(pf.value), pf.provenance());
		return ideal;
	}

	HomogeneousIdeal const &assembled_ideal() const
	{
		if (!assembled_)
			assembled_.emplace(assemble().generators);
		return *assembled_;
	}

	TheoremResult verify_theorem(AssemblyOptions const &opts = {}) const
	{
		TheoremResult res;
		res.assembled = assemble(opts);
		res.target = target_.generators();
		bool is_default = opts.bg_relation_2g && opts.bg_relation_quadratic && opts.projective_relation &&
		                  opts.dropped_components.empty();
		res.comparison = compare_ideals(is_default ? assembled_ideal() : HomogeneousIdeal(res.assembled.generators),
		                                target_);
		std::vector<IntPoly> relabelled;
		for (auto const &g : target_.generators())
			relabelled.push_back(relabel_to_hodge(g));
		res.relabel_matches = ideal_equal(relabelled, polys_of(hodge_generators())).equal();
		res.verified = res.comparison.equal() && res.relabel_matches;
		if (res.verified)
			res.presentation = hodge_presentation();
		return res;
	}

	/// alpha * mult(s_a^a', s_(4-a)^b') restricted along h = b1 + g lies in
	/// the target ideal. Only defined when (b1 + g) | alpha, or a' + b' >= 1
	/// and 2 | alpha, or a' + b' >= 3.
	bool check_remark_vanishing(IntPoly const &alpha, int a, int a_prime, int b_prime) const
	{
		if (a < 1 || a > 3 || a_prime < 0 || a_prime > a || b_prime < 0 || b_prime > 4 - a)
			throw std::out_of_range("index triple outside the admissible range");
		if (!remark_applies(alpha, a_prime + b_prime))
			throw std::invalid_argument("no vanishing claim for alpha = " + alpha.to_string() + " with a' + b' = " +
			                            std::to_string(a_prime + b_prime));
		SClassVec prod = alpha * mult_push(SClassVec::basis(a, a_prime), SClassVec::basis(4 - a, b_prime));
		return target_.contains(torsor_substitute(prod));
	}

	static bool remark_applies(IntPoly const &alpha, int index_sum)
	{
		if (exact_quotient(alpha, "b1 + g"_p))
			return true;
		if (index_sum >= 1 && alpha.divisible_by(2))
			return true;
		return index_sum >= 3;
	}

  private:
	Fixtures fixtures_;
	HomogeneousIdeal target_;
	mutable std::optional<SubsetLibrary> library_;
	mutable std::optional<std::vector<Pushforward>> pushforwards_;
	mutable std::optional<HomogeneousIdeal> assembled_;
};

} // namespace prymchow

#endif
