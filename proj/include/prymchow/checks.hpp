#ifndef PRYMCHOW_CHECKS_HPP
#define PRYMCHOW_CHECKS_HPP

// The registry of named checks. Each check recomputes one family of
// identities and compares it with its closed form, line by line.

#include "prymchow/chern.hpp"
#include "prymchow/ideal.hpp"
#include "prymchow/pipeline.hpp"
#include "prymchow/projcalc.hpp"
#include "prymchow/pushcalc.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prymchow {

struct CheckLine
{
	std::string label;
	bool pass;
	std::string detail;
};

struct CheckResult
{
	std::string id;
	std::vector<CheckLine> lines;

	std::size_t passed() const
	{
		return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](auto const &l) { return l.pass; }));
	}

	bool pass() const { return !lines.empty() && passed() == lines.size(); }

	std::string summary() const
	{
		std::string s = std::to_string(passed()) + "/" + std::to_string(lines.size()) + " lines pass";
		for (auto const &l : lines)
			if (!l.pass)
				s += "; FAIL " + l.label + ": " + l.detail;
		return s;
	}
};

namespace checks {

inline CheckLine same(std::string label, IntPoly const &computed, IntPoly const &expected)
{
	bool ok = computed == expected;
	return {std::move(label), ok,
	        ok ? computed.to_string()
	           : "computed " + computed.to_string() + ", expected " + expected.to_string() + ", difference " +
	                 (computed - expected).to_string()};
}

inline CheckLine same(std::string label, SClassVec const &computed, SClassVec const &expected)
{
	bool ok = computed == expected;
	return {std::move(label), ok,
	        ok ? computed.to_string() : "computed " + computed.to_string() + ", expected " + expected.to_string()};
}

/// Equality in CH*(BG); the detail notes whether the match is literal.
inline CheckLine same_in_bg(std::string label, SClassVec const &computed, SClassVec const &expected)
{
	if (computed.r() == expected.r())
		for (int j = 0; j <= computed.r(); ++j)
			if (!bg_ideal().equal_mod(computed.at(j), expected.at(j)))
				return {std::move(label), false,
				        "coefficient of s_" + std::to_string(computed.r()) + "^" + std::to_string(j) + " differs by " +
				            (computed.at(j) - expected.at(j)).to_string() + " (not in (2*g, g^2 + b1*g)); computed " +
				            computed.to_string() + ", expected " + expected.to_string()};
	if (computed.r() != expected.r())
		return {std::move(label), false, "classes live on different spaces"};
	return {std::move(label), true,
	        expected.to_string() + (computed == expected ? "" : " (equal modulo 2*g, g^2 + b1*g)")};
}

inline CheckLine same_in_bg(std::string label, IntPoly const &computed, IntPoly const &expected)
{
	bool ok = bg_ideal().equal_mod(computed, expected);
	return {std::move(label), ok,
	        ok ? expected.to_string() + (computed == expected ? "" : " (equal modulo 2*g, g^2 + b1*g)")
	           : "computed " + computed.to_string() + ", expected " + expected.to_string() + " in CH*(BG)"};
}

inline CheckLine member(std::string label, IntPoly const &p, HomogeneousIdeal const &ideal)
{
	auto cert = ideal.member(p);
	if (!cert)
		return {std::move(label), false, p.to_string() + " is not in the ideal"};
	if (cert->replay(ideal.generators()) != p)
		return {std::move(label), false, "certificate replay does not reproduce " + p.to_string()};
	return {std::move(label), true, p.to_string() + " = " + cert->to_string(ideal.generators())};
}

inline CheckLine holds(std::string label, bool ok, std::string detail)
{
	return {std::move(label), ok, std::move(detail)};
}

inline SClassVec sclass(int r, std::initializer_list<char const *> coeffs_low_to_high)
{
	std::vector<IntPoly> c;
	for (char const *t : coeffs_low_to_high)
		c.push_back(IntPoly::parse(t));
	return SClassVec(r, std::move(c));
}

inline CheckResult diag_pe(R2Pipeline const &)
{
	BundleSpec E = sym_roots(1, false);
	return {"diag-pe",
	        {same("c(E)", total_chern(E, ChernBasis::abstract), "1 + c1 + c2"_p),
	         same("[Delta_P(E)]", diagonal_class(E).poly, "h1 + h2 + c1"_p),
	         same("Delta_*(1)", diagonal_push(E, 0).poly, "h1 + h2 + c1"_p),
	         same("Delta_*(h)", diagonal_push(E, 1).poly, "h1*h2 - c2"_p)}};
}

inline CheckResult diag_psym2(R2Pipeline const &)
{
	BundleSpec W = sym_roots(2, false);
	BiProjClass pushed_h2 = diagonal_push(W, 2);
	BiProjClass raw{"h1^2"_p * diagonal_class(W).poly, pushed_h2.chern};
	return {"diag-psym2",
	        {same("c(Sym2 E)", total_chern(W, ChernBasis::abstract), "1 + 3*c1 + 2*c1^2 + 4*c2 + 4*c1*c2"_p),
	         same("[Delta_P(Sym2 E)]", diagonal_class(W).poly,
	              "h1^2 + h1*h2 + h2^2 + 3*c1*(h1 + h2) + 2*c1^2 + 4*c2"_p),
	         same("Delta_*(1)", diagonal_push(W, 0).poly, "h1^2 + h1*h2 + h2^2 + 3*c1*(h1 + h2) + 2*c1^2 + 4*c2"_p),
	         same("Delta_*(h)", diagonal_push(W, 1).poly, "h1^2*h2 + h1*h2^2 + 3*c1*h1*h2 - 4*c1*c2"_p),
	         same("Delta_*(h^2)", pushed_h2.poly, "h1^2*h2^2 - (2*c1^2 + 4*c2)*h1*h2 - 4*c1*c2*(h1 + h2)"_p),
	         same("reduction order h2 before h1", raw.reduced(Var::h2).poly, raw.reduced(Var::h1).poly)}};
}

inline CheckResult sq_pe(R2Pipeline const &)
{
	auto sq = [](int j) { return sq_push(SquareSource::PE, SClassVec::basis(1, j)); };
	return {"sq-pe",
	        {same("sq(s_1^0)", sq(0), sclass(2, {"2*c1", "2", "0"})),
	         same("sq(s_1^1)", sq(1), sclass(2, {"-2*c2", "0", "1"}))}};
}

inline CheckResult sq_psym2(R2Pipeline const &)
{
	auto sq = [](int j) { return sq_push(SquareSource::PSym2, SClassVec::basis(2, j)); };
	return {"sq-psym2",
	        {same("sq(s_2^0)", sq(0), sclass(4, {"12*c1^2", "12*c1", "4"})),
	         same("sq(s_2^1)", sq(1), sclass(4, {"-24*c1*c2", "-12*c2", "2*c1", "2"})),
	         same("sq(s_2^2)", sq(2), sclass(4, {"24*c2^2", "0", "-4*c2", "0", "1"}))}};
}

inline CheckResult class_xy(R2Pipeline const &)
{
	XYDerivation d = derive_class_XY();
	return {"class-xy",
	        {same_in_bg("c(Sym2 V* (x) Gamma (x) det V)", d.twisted_total, "1 + g - b1*(g + b1) + 4*b2"_p),
	         holds("c3 vanishes (XY is a nowhere-zero section)", d.c3_vanishes,
	               d.twisted_total.homogeneous_component(3).to_string() + " in (2*g, g^2 + b1*g)"),
	         same_in_bg("[{XY}]", d.value, displayed_subset_class(SubsetLabel::XY))}};
}

inline CheckResult finite_subsets(R2Pipeline const &p)
{
	CheckResult res{"finite-subsets", {}};
	std::vector<FiniteSubsetClass> derived = derive_finite_subsets(p.fixtures().x_y, p.fixtures().xy);
	for (auto const &c : derived)
		res.lines.push_back(same_in_bg(std::string(to_string(c.label)), c.value, c.displayed));
	return res;
}

inline CheckResult h_to_s_identities(R2Pipeline const &)
{
	CheckResult res{"h-to-s", {}};
	// General-r identities for h^2, h^3, h^4 in the abstract basis.
	auto h2 = [](int r) {
		return SClassVec(r, {IntPoly(-r) * "c2"_p, "-c1"_p, "1"_p});
	};
	auto h3 = [](int r) {
		return SClassVec(r, {IntPoly(r) * "c1*c2"_p, "c1^2"_p + IntPoly(2 - 3 * r) * "c2"_p, "-3*c1"_p, "1"_p});
	};
	auto h4 = [](int r) {
		return SClassVec(r, {-(IntPoly(r) * "c1^2*c2"_p - IntPoly(3 * r * r - 2 * r) * "c2^2"_p),
		                     IntPoly(10 * r - 8) * "c1*c2"_p - "c1^3"_p,
		                     "7*c1^2"_p - IntPoly(6 * r - 8) * "c2"_p, "-6*c1"_p, "1"_p});
	};
	for (int r = 2; r <= 4; ++r)
		res.lines.push_back(same("h^2 on P(Sym" + std::to_string(r) + ")", h_to_s(r, 2), h2(r)));
	for (int r = 3; r <= 4; ++r)
		res.lines.push_back(same("h^3 on P(Sym" + std::to_string(r) + ")", h_to_s(r, 3), h3(r)));
	res.lines.push_back(same("h^4 on P(Sym4)", h_to_s(4, 4), h4(4)));

	// The three rewritings on P(Sym^4 V*) in terms of lower s-classes.
	IntPoly const h(Var::h);
	auto s = [](int j) { return s_to_h_concrete(4, j); };
	res.lines.push_back(same("s_4^2 = h^2 - b1*h + 4*b2", s(2), "h^2 - b1*h + 4*b2"_p));
	res.lines.push_back(same("s_4^3 = h^3 - 3*b1*s_4^2 - (b1^2 - 10*b2)*s_4^1 + 4*b1*b2", s(3),
	                         h.pow(3) - "3*b1"_p * s(2) - "b1^2 - 10*b2"_p * s(1) + "4*b1*b2"_p));
	res.lines.push_back(same("s_4^4 = h^4 - 6*b1*s_4^3 - (7*b1^2 - 16*b2)*s_4^2 + (32*b1*b2 - b1^3)*s_4^1 + "
	                         "4*b1^2*b2 - 40*b2^2",
	                         s(4),
	                         h.pow(4) - "6*b1"_p * s(3) - "7*b1^2 - 16*b2"_p * s(2) + "32*b1*b2 - b1^3"_p * s(1) +
	                             "4*b1^2*b2 - 40*b2^2"_p));

	// Roundtrip h^k -> s -> h for every admissible (r, k).
	bool all = true;
	std::string bad;
	for (int r = 1; r <= kMaxSymPower; ++r)
		for (int k = 0; k <= r; ++k)
			if (h_to_s(r, k).to_h(ChernBasis::abstract) != h.pow(static_cast<unsigned>(k)))
			{
				all = false;
				bad += " (r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")";
			}
	res.lines.push_back(holds("roundtrip h^k -> s -> h for r <= 4, k <= r", all, all ? "14 cases" : "fails at" + bad));
	return res;
}

inline CheckResult envelope_generators(R2Pipeline const &p)
{
	auto const &pf = p.envelope_pushforwards();
	auto find = [&](std::string_view prov) -> Pushforward const & {
		for (auto const &x : pf)
			if (x.provenance() == prov)
				return x;
		throw std::logic_error("no pushforward " + std::string(prov));
	};
	auto const &p11 = find("p11/s_1^1 (x) s_2^0");
	auto const &p12_0 = find("p12/s_3^0 (x) [X_Y]");
	auto const &p12_1 = find("p12/s_3^1 (x) [X_Y]");
	return {"envelope-generators",
	        {same("p11/s_1^1 (x) s_2^0", p11.value, sclass(4, {"-12*b2", "0", "1"})),
	         same("p12/s_3^0 (x) [X_Y]", p12_0.value, sclass(4, {"-4*(b1 + g)", "2"})),
	         same_in_bg("p12/s_3^0 (x) [X_Y] reduced", p12_0.value, sclass(4, {"-4*b1", "2"})),
	         same("p12/s_3^1 (x) [X_Y]", p12_1.value, sclass(4, {"0", "-3*(b1 + g)", "2"})),
	         same("p21/s_2^0", find("p21/s_2^0").value, sclass(4, {"12*b1^2", "-12*b1", "4"})),
	         same("p21/s_2^1", find("p21/s_2^1").value, sclass(4, {"24*b1*b2", "-12*b2", "-2*b1", "2"})),
	         same("p21/s_2^2", find("p21/s_2^2").value, sclass(4, {"24*b2^2", "0", "-4*b2", "0", "1"})),
	         same_in_bg("p12/s_3^0 at h = b1 + g", torsor_substitute(p12_0.value), "-2*b1"_p),
	         same_in_bg("p12/s_3^1 at h = b1 + g", torsor_substitute(p12_1.value), "8*b2 - 3*b1*(b1 + g)"_p),
	         same_in_bg("p11/s_1^1 (x) s_2^0 at h = b1 + g", torsor_substitute(p11.value), "-8*b2"_p)}};
}

inline CheckResult envelope_vanishing(R2Pipeline const &p)
{
	CheckResult res{"envelope-vanishing", {}};
	for (auto const &pf : p.envelope_pushforwards())
		res.lines.push_back(member(pf.provenance(), torsor_substitute(pf.value), p.target_ideal()));
	return res;
}

/// Witness coefficients tried for every admissible index triple.
inline std::vector<IntPoly> remark_witnesses() { return {"b1 + g"_p, "2"_p, "2*b1"_p, "2*b2"_p, "1"_p}; }

inline CheckResult remark_vanishing(R2Pipeline const &p)
{
	CheckResult res{"remark-vanishing", {}};
	for (int a = 1; a <= 3; ++a)
		for (int ap = 0; ap <= a; ++ap)
			for (int bp = 0; bp <= 4 - a; ++bp)
				for (auto const &alpha : remark_witnesses())
				{
					if (!R2Pipeline::remark_applies(alpha, ap + bp))
						continue;
					std::string label = "(" + alpha.to_string() + ")*mult(s_" + std::to_string(a) + "^" +
					                    std::to_string(ap) + ", s_" + std::to_string(4 - a) + "^" + std::to_string(bp) +
					                    ")";
					bool ok = p.check_remark_vanishing(alpha, a, ap, bp);
					res.lines.push_back(holds(label, ok, ok ? "in target ideal" : "not in target ideal"));
				}
	return res;
}

inline CheckResult ph_vanishing(R2Pipeline const &p)
{
	BundleSpec S4 = sym_roots(4, true);
	IntPoly c4 = chern_component(S4, 4), c5 = chern_component(S4, 5);
	IntPoly const h(Var::h);
	auto quotient_c5 = exact_quotient(c5, "2*b1"_p);
	auto quotient_hc4 = exact_quotient(h * c4, "2*h"_p);
	return {"ph-vanishing",
	        {same("c5(Sym4 V*)", c5, "-32*b1*b2*(3*b1^2 + 4*b2)"_p),
	         holds("2*b1 divides c5", quotient_c5.has_value(),
	               quotient_c5 ? "c5 = 2*b1*(" + quotient_c5->to_string() + ")" : "no exact quotient"),
	         holds("2*h divides h*c4", quotient_hc4.has_value(),
	               quotient_hc4 ? "h*c4 = 2*h*(" + quotient_hc4->to_string() + ")" : "no exact quotient"),
	         member("P(b1 + g)", torsor_substitute(R2Pipeline::projective_relation()), p.target_ideal())}};
}

inline CheckResult factoring_redundancy(R2Pipeline const &p)
{
	CheckResult res{"factoring-redundancy", {}};
	for (auto const &pf : p.factoring_pushforwards())
		res.lines.push_back(member(pf.provenance(), torsor_substitute(pf.value), p.assembled_ideal()));
	return res;
}

inline CheckResult theorem(R2Pipeline const &p)
{
	CheckResult res{"theorem", {}};
	TheoremResult t = p.verify_theorem();
	bool forward = std::all_of(t.comparison.a_in_b.begin(), t.comparison.a_in_b.end(), [](auto const &c) { return c.has_value(); });
	res.lines.push_back(holds("assembled ideal inside (2*g, 2*b1, 8*b2, g^2+b1*g, b1^2+b1*g)", forward,
	                          std::to_string(t.assembled.generators.size()) + " generators checked"));
	for (std::size_t i = 0; i < t.target.size(); ++i)
	{
		auto const &cert = t.comparison.b_in_a[i];
		res.lines.push_back(holds(t.target[i].to_string() + " in assembled ideal", cert.has_value(),
		                          cert ? cert->to_string(t.assembled.generators) : "not a member"));
	}
	res.lines.push_back(holds("relabel b_i = (-1)^i l_i", t.relabel_matches, hodge_presentation()));

	AssemblyOptions no_p12;
	no_p12.dropped_components = {ComponentId::p12};
	TheoremResult ablated = p.verify_theorem(no_p12);
	bool two_b1_fails = !HomogeneousIdeal(ablated.assembled.generators).contains("2*b1"_p);
	res.lines.push_back(holds("without p12 the equality breaks", !ablated.comparison.equal() && two_b1_fails,
	                          two_b1_fails ? "2*b1 is no longer generated" : "2*b1 is still generated"));

	AssemblyOptions no_ph;
	no_ph.projective_relation = false;
	res.lines.push_back(holds("without P(h) the equality persists", p.verify_theorem(no_ph).comparison.equal(),
	                          "P(b1 + g) is redundant"));

	AssemblyOptions no_2g;
	no_2g.bg_relation_2g = false;
	bool breaks = !p.verify_theorem(no_2g).comparison.equal();
	res.lines.push_back(holds("without 2*g the equality breaks", breaks,
	                          breaks ? "2*g is not generated by the rest" : "2*g is generated by the rest"));
	return res;
}

} // namespace checks

struct CheckSpec
{
	std::string_view id;
	std::string_view description;
	CheckResult (*run)(R2Pipeline const &);
};

inline std::span<CheckSpec const> check_registry()
{
	static constexpr std::array<CheckSpec, 13> registry = {{
	    {"diag-pe", "diagonal class of P(E) and its pushforwards", checks::diag_pe},
	    {"diag-psym2", "diagonal class of P(Sym2 E) and its pushforwards", checks::diag_psym2},
	    {"sq-pe", "squaring pushforward P(E) -> P(Sym2 E)", checks::sq_pe},
	    {"sq-psym2", "squaring pushforward P(Sym2 E) -> P(Sym4 E)", checks::sq_psym2},
	    {"class-xy", "Chern-class derivation of [{XY}]", checks::class_xy},
	    {"finite-subsets", "product recipes for the six finite-subset classes", checks::finite_subsets},
	    {"h-to-s", "powers of h in the s-basis", checks::h_to_s_identities},
	    {"envelope-generators", "displayed envelope pushforwards", checks::envelope_generators},
	    {"envelope-vanishing", "every envelope pushforward lies in the target ideal", checks::envelope_vanishing},
	    {"remark-vanishing", "alpha*mult(s_a^a', s_(4-a)^b') vanishing criteria", checks::remark_vanishing},
	    {"ph-vanishing", "P(b1 + g) lies in the target ideal", checks::ph_vanishing},
	    {"factoring-redundancy", "p22 and p32 add nothing to the assembled ideal", checks::factoring_redundancy},
	    {"theorem", "assembled ideal equals the target ideal", checks::theorem},
	}};
	return registry;
}

inline CheckSpec const *find_check(std::string_view id)
{
	for (auto const &c : check_registry())
		if (c.id == id)
			return &c;
	return nullptr;
}

inline std::string check_ids()
{
	std::string out;
	for (auto const &c : check_registry())
		out += (out.empty() ? "" : ", ") + std::string(c.id);
	return out;
}

} // namespace prymchow

#endif
