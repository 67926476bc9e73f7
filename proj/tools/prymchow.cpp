// prymchow: runs the R_2 Chow ring verification and its individual checks.

#include "prymchow/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <unistd.h>

namespace {

using namespace prymchow;

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2 };

bool use_color()
{
	char const *no_color = std::getenv("NO_COLOR");
	return (no_color == nullptr || *no_color == '\0') && isatty(STDOUT_FILENO);
}

Fixtures make_fixtures(bool corrupt)
{
	Fixtures f;
	if (corrupt)
		f.x_y.value.at(0) = "b1"_p;
	return f;
}

int cmd_verify(R2Pipeline const &p, bool json)
{
	VerificationReport rep = run_verification(p);
	if (json)
		std::cout << to_json(rep).dump(2) << "\n";
	else
		std::cout << to_text(rep, {use_color()});
	return rep.all_pass() ? kPass : kCheckFailed;
}

int cmd_check(R2Pipeline const &p, std::string const &id, bool json)
{
	CheckSpec const *spec = find_check(id);
	if (!spec)
	{
		std::cerr << "unknown check id '" << id << "'; valid ids: " << check_ids() << "\n";
		return kUsage;
	}
	CheckResult res = spec->run(p);
	if (json)
		std::cout << to_json(res, true).dump(2) << "\n";
	else
		std::cout << to_text(res, {use_color()});
	return res.pass() ? kPass : kCheckFailed;
}

int cmd_dump(R2Pipeline const &p, std::string const &what, bool json)
{
	auto kind = dump_kind(what);
	if (!kind)
	{
		std::cerr << "unknown dump target '" << what << "'; valid: envelope, chern, ideal, sclasses\n";
		return kUsage;
	}
	auto entries = dump(*kind, p);
	if (json)
	{
		nlohmann::ordered_json arr = nlohmann::ordered_json::array();
		for (auto const &e : entries)
			arr.push_back(e.json);
		std::cout << nlohmann::ordered_json{{"dump", what}, {"entries", arr}}.dump(2) << "\n";
	}
	else
		for (auto const &e : entries)
			std::cout << e.text << "\n";
	return kPass;
}

int cmd_list()
{
	for (auto const &c : check_registry())
		std::cout << c.id << "  " << c.description << "\n";
	return kPass;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Verifies the integral Chow ring of the moduli stack R_2 of genus-2 Prym pairs."};
	app.require_subcommand(1);

	std::string format = "text";
	app.add_option("--format", format, "output format")
	    ->check(CLI::IsMember({"text", "json"}))
	    ->capture_default_str();
	bool corrupt = false;
	app.add_flag("--corrupt-fixture", corrupt, "perturb the [X_Y] fixture (test hook)")->group("");

	auto *verify = app.add_subcommand("verify", "run every check and the theorem");
	auto *check = app.add_subcommand("check", "run one check");
	std::string check_id;
	check->add_option("id", check_id, "check id (see list-checks)")->required();
	auto *dump_cmd = app.add_subcommand("dump", "print intermediate objects");
	std::string dump_what;
	dump_cmd->add_option("what", dump_what, "envelope | chern | ideal | sclasses")->required();
	auto *list = app.add_subcommand("list-checks", "list the check registry");

	for (auto *sub : {verify, check, dump_cmd, list})
	{
		sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
		sub->add_flag("--corrupt-fixture", corrupt, "perturb the [X_Y] fixture (test hook)")->group("");
	}

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e);
		return code == 0 ? kPass : kUsage;
	}

	try
	{
		bool json = format == "json";
		R2Pipeline pipeline(make_fixtures(corrupt));
		if (*verify)
			return cmd_verify(pipeline, json);
		if (*check)
			return cmd_check(pipeline, check_id, json);
		if (*dump_cmd)
			return cmd_dump(pipeline, dump_what, json);
		return cmd_list();
	}
	catch (std::exception const &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return kUsage;
	}
}
