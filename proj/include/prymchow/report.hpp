#ifndef PRYMCHOW_REPORT_HPP
#define PRYMCHOW_REPORT_HPP

// Full verification run and its text / JSON serializations.

#include "prymchow/checks.hpp"
#include "prymchow/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

namespace prymchow {

inline constexpr char const *kVersion = "1.0.0";

struct TheoremSummary
{
	bool verified = false;
	std::vector<std::string> computed_generators;
	std::vector<std::string> target_generators;
	std::string presentation;
	std::vector<std::string> failures;
};

struct VerificationReport
{
	std::string version = kVersion;
	std::vector<CheckResult> checks;
	TheoremSummary theorem;
	std::int64_t timing_ms = 0;

	bool all_pass() const
	{
		for (auto const &c : checks)
			if (!c.pass())
				return false;
		return theorem.verified;
	}
};

inline TheoremSummary summarize(TheoremResult const &t)
{
	TheoremSummary s;
	s.verified = t.verified;
	for (auto const &g : t.assembled.generators)
		s.computed_generators.push_back(g.to_string());
	for (auto const &g : target_generators())
		s.target_generators.push_back(g.text);
	s.presentation = t.presentation;
	s.failures = t.failures();
	return s;
}

/// Runs every registered check in registry order, then the theorem.
inline VerificationReport run_verification(R2Pipeline const &pipeline)
{
	auto start = std::chrono::steady_clock::now();
	VerificationReport rep;
	for (auto const &c : check_registry())
		rep.checks.push_back(c.run(pipeline));
	rep.theorem = summarize(pipeline.verify_theorem());
	rep.timing_ms =
	    std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
	return rep;
}

inline nlohmann::ordered_json to_json(CheckLine const &l)
{
	return {{"label", l.label}, {"pass", l.pass}, {"detail", l.detail}};
}

inline nlohmann::ordered_json to_json(CheckResult const &c, bool with_lines = false)
{
	nlohmann::ordered_json j{{"id", c.id}, {"pass", c.pass()}, {"detail", c.summary()}};
	if (with_lines)
	{
		j["lines"] = nlohmann::ordered_json::array();
		for (auto const &l : c.lines)
			j["lines"].push_back(to_json(l));
	}
	return j;
}

inline nlohmann::ordered_json to_json(VerificationReport const &r)
{
	nlohmann::ordered_json checks = nlohmann::ordered_json::array();
	for (auto const &c : r.checks)
		checks.push_back(to_json(c));
	return {{"version", r.version},
	        {"checks", checks},
	        {"theorem",
	         {{"verified", r.theorem.verified},
	          {"computed_generators", r.theorem.computed_generators},
	          {"target_generators", r.theorem.target_generators},
	          {"presentation", r.theorem.presentation}}},
	        {"timing_ms", r.timing_ms}};
}

struct TextStyle
{
	bool color = false;

	std::string verdict(bool pass) const
	{
		if (!color)
			return pass ? "PASS" : "FAIL";
		return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
	}
};

inline std::string to_text(CheckResult const &c, TextStyle style = {}, bool all_lines = true)
{
	std::string out;
	for (auto const &l : c.lines)
		if (all_lines || !l.pass)
			out += "  " + style.verdict(l.pass) + " " + l.label + ": " + l.detail + "\n";
	out += style.verdict(c.pass()) + " " + c.id + " (" + std::to_string(c.passed()) + "/" +
	       std::to_string(c.lines.size()) + ")\n";
	return out;
}

/// Failing lines are expanded; the last line is the presentation when the
/// theorem is verified.
inline std::string to_text(VerificationReport const &r, TextStyle style = {})
{
	std::string out;
	for (auto const &c : r.checks)
		out += to_text(c, style, false);
	out += "computed generators: " + std::to_string(r.theorem.computed_generators.size()) + "\n";
	std::string target;
	for (auto const &t : r.theorem.target_generators)
		target += (target.empty() ? "" : ", ") + t;
	out += "target ideal: (" + target + ")\n";
	for (auto const &f : r.theorem.failures)
		out += "  " + f + "\n";
	out += "theorem: " + std::string(r.theorem.verified ? "verified" : "NOT verified") + "\n";
	if (r.theorem.verified)
		out += r.theorem.presentation + "\n";
	return out;
}

enum class DumpKind { envelope, chern, ideal, sclasses };

inline std::optional<DumpKind> dump_kind(std::string_view name)
{
	if (name == "envelope")
		return DumpKind::envelope;
	if (name == "chern")
		return DumpKind::chern;
	if (name == "ideal")
		return DumpKind::ideal;
	if (name == "sclasses")
		return DumpKind::sclasses;
	return std::nullopt;
}

/// One dumped object; `text` is its line in text output.
struct DumpEntry
{
	nlohmann::ordered_json json;
	std::string text;
};

inline std::vector<DumpEntry> dump(DumpKind kind, R2Pipeline const &pipeline)
{
	std::vector<DumpEntry> out;
	switch (kind)
	{
	case DumpKind::envelope:
		for (auto const &c : envelope_components())
			if (c.skip_reason)
				out.push_back({{{"component", std::string(to_string(c.id))}, {"skipped", *c.skip_reason}},
				               std::string(to_string(c.id)) + ": skipped (" + *c.skip_reason + ")"});
		for (auto const &pf : pipeline.envelope_pushforwards())
		{
			IntPoly restricted = torsor_substitute(pf.value);
			out.push_back({{{"component", std::string(to_string(pf.component))},
			                {"source", pf.source},
			                {"pushforward", pf.value.to_string()},
			                {"at_h_eq_b1_plus_g", restricted.to_string()}},
			               std::string(to_string(pf.component)) + " | " + pf.source + " | " + pf.value.to_string() +
			                   " | h = b1 + g: " + restricted.to_string()});
		}
		break;
	case DumpKind::chern:
		for (int k = 1; k <= kMaxSymPower; ++k)
		{
			BundleSpec spec = sym_roots(k, true);
			for (int i = 0; i <= k + 1; ++i)
			{
				std::string name = "c" + std::to_string(i) + "(" + spec.label + ")";
				std::string value = chern_component(spec, i).to_string();
				out.push_back({{{"class", name}, {"value", value}}, name + " = " + value});
			}
		}
		break;
	case DumpKind::ideal:
	{
		ExcisionIdeal ideal = pipeline.assemble();
		for (std::size_t i = 0; i < ideal.generators.size(); ++i)
		{
			std::string g = ideal.generators[i].to_string();
			out.push_back({{{"generator", g}, {"provenance", ideal.provenance[i]}}, g + "    [" + ideal.provenance[i] + "]"});
		}
		break;
	}
	case DumpKind::sclasses:
		for (int r = 1; r <= kMaxSymPower; ++r)
			for (int j = 0; j <= r; ++j)
			{
				std::string name = "s_" + std::to_string(r) + "^" + std::to_string(j);
				std::string value = s_to_h_concrete(r, j).to_string();
				out.push_back({{{"class", name}, {"value", value}}, name + " = " + value});
			}
		break;
	}
	return out;
}

} // namespace prymchow

#endif
