#include "prymchow/report.hpp"

#include <catch_amalgamated.hpp>

using namespace prymchow;

namespace {

R2Pipeline const &pipeline()
{
	static R2Pipeline const p;
	return p;
}

bool has_text(std::vector<DumpEntry> const &entries, std::string const &line)
{
	for (auto const &e : entries)
		if (e.text == line)
			return true;
	return false;
}

} // namespace

TEST_CASE("registry is closed and ordered")
{
	auto reg = check_registry();
	REQUIRE(reg.size() == 13);
	CHECK(reg.front().id == "diag-pe");
	CHECK(reg.back().id == "theorem");
	CHECK(find_check("ph-vanishing") != nullptr);
	CHECK(find_check("nonsense-id") == nullptr);
	CHECK(check_ids().find("factoring-redundancy") != std::string::npos);
}

TEST_CASE("every check except finite-subsets passes")
{
	for (auto const &c : check_registry())
	{
		CheckResult r = c.run(pipeline());
		INFO(r.id << ": " << r.summary());
		CHECK_FALSE(r.lines.empty());
		if (r.id == "finite-subsets")
			continue;
		CHECK(r.pass());
	}
}

TEST_CASE("finite-subsets reports the one failing class with its difference")
{
	CheckResult r = find_check("finite-subsets")->run(pipeline());
	REQUIRE(r.lines.size() == 6);
	CHECK(r.passed() == 5);
	for (auto const &l : r.lines)
		CHECK(l.pass == (l.label != "X4_Y4"));
	CHECK(r.summary().find("coefficient of s_4^1") != std::string::npos);
}

TEST_CASE("ph-vanishing carries a certificate")
{
	CheckResult r = find_check("ph-vanishing")->run(pipeline());
	bool found = false;
	for (auto const &l : r.lines)
		if (l.label == "P(b1 + g)")
		{
			found = true;
			CHECK(l.pass);
			CHECK(l.detail.find(" = ") != std::string::npos);
		}
	CHECK(found);
}

TEST_CASE("vanishing suites are large enough")
{
	CHECK(find_check("envelope-vanishing")->run(pipeline()).lines.size() == 26);
	CHECK(find_check("remark-vanishing")->run(pipeline()).lines.size() >= 20);
}

TEST_CASE("report serialization")
{
	VerificationReport rep = run_verification(pipeline());
	CHECK(rep.theorem.verified);
	CHECK_FALSE(rep.all_pass());
	auto j = to_json(rep);
	CHECK(j["version"] == kVersion);
	CHECK(j["checks"].size() == 13);
	CHECK(j["theorem"]["verified"] == true);
	CHECK(j["theorem"]["target_generators"].size() == 5);
	CHECK(j["theorem"]["computed_generators"].size() == 29);
	CHECK(j["theorem"]["presentation"] == hodge_presentation());
	CHECK(j["timing_ms"].is_number_integer());
	for (auto const &c : j["checks"])
	{
		CHECK(c["id"].is_string());
		CHECK(c["pass"].is_boolean());
		CHECK(c["detail"].is_string());
	}

	std::string text = to_text(rep);
	CHECK(text.substr(text.rfind('\n', text.size() - 2) + 1) == hodge_presentation() + "\n");
	CHECK(text.find("FAIL finite-subsets") != std::string::npos);
	CHECK(text.find("\033[") == std::string::npos);
	CHECK(to_text(rep, {true}).find("\033[32mPASS") != std::string::npos);
}

TEST_CASE("text and json verdicts agree")
{
	VerificationReport rep = run_verification(pipeline());
	auto j = to_json(rep);
	std::string text = to_text(rep);
	for (std::size_t i = 0; i < rep.checks.size(); ++i)
	{
		bool pass = j["checks"][i]["pass"];
		std::string verdict = (pass ? "PASS " : "FAIL ") + rep.checks[i].id + " (";
		CHECK(text.find(verdict) != std::string::npos);
	}
}

TEST_CASE("reports are deterministic apart from timing")
{
	VerificationReport a = run_verification(pipeline());
	VerificationReport b = run_verification(R2Pipeline{});
	a.timing_ms = b.timing_ms = 0;
	CHECK(to_json(a).dump() == to_json(b).dump());
	CHECK(to_text(a) == to_text(b));
}

TEST_CASE("dumps")
{
	CHECK(has_text(dump(DumpKind::chern, pipeline()), "c5(Sym4(Vdual)) = -96*b1^3*b2 - 128*b1*b2^2"));
	CHECK(IntPoly::parse("-96*b1^3*b2 - 128*b1*b2^2") == IntPoly::parse("-32*b1*b2*(3*b1^2+4*b2)"));
	CHECK(has_text(dump(DumpKind::sclasses, pipeline()), "s_4^2 = h^2 - b1*h + 4*b2"));
	CHECK(has_text(dump(DumpKind::ideal, pipeline()), "2*g    [BG relation]"));
	auto env = dump(DumpKind::envelope, pipeline());
	CHECK(env.size() == 28);
	CHECK(has_text(env, "p22: skipped (factors through p11)"));
	CHECK(dump_kind("envelope") == DumpKind::envelope);
	CHECK_FALSE(dump_kind("everything"));
}
