#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
	int exit_code;
	std::string out;
};

RunResult run_cli(const std::string& args) {
	std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
	                       "/qmock_cli_out.txt";
	std::string cmd = std::string(QMOCK_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
	int rc = std::system(cmd.c_str());
	std::ifstream in(out_path, std::ios::binary);
	std::ostringstream ss;
	ss << in.rdbuf();
	return {WEXITSTATUS(rc), ss.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
	std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
	                   "/" + name;
	std::ofstream out(path, std::ios::binary);
	out << content;
	return path;
}

} // namespace

TEST_CASE("expand emits series text") {
	RunResult r = run_cli("expand \"1 * f2^5 f1^-4\" --trunc 5");
	CHECK(r.exit_code == 0);
	CHECK(r.out == "0\t1\n1\t4\n2\t9\n3\t20\n4\t40\n5\t72\n");
}

TEST_CASE("expand pentagonal signs") {
	RunResult r = run_cli("expand \"1 * f1^1\" --trunc 12");
	CHECK(r.exit_code == 0);
	CHECK(r.out == "0\t1\n1\t-1\n2\t-1\n5\t1\n7\t1\n12\t-1\n");
}

TEST_CASE("malformed quotient exits 2 citing the scale") {
	RunResult r = run_cli("expand \"1 * f0^2\" --trunc 5");
	CHECK(r.exit_code == 2);
	CHECK(r.out.find("scale must be >= 1") != std::string::npos);
}

TEST_CASE("fit round trip through files") {
	RunResult series = run_cli("bcoeffs --trunc 600 --progression 3,0");
	REQUIRE(series.exit_code == 0);
	std::string path = temp_file("b3n.txt", series.out);
	RunResult fitted = run_cli("fit " + path + " --max-scale 12");
	CHECK(fitted.exit_code == 0);
	CHECK(fitted.out == "1 * f2^7 f3^2 f1^-6 f4^-1 f6^-1\n");
}

TEST_CASE("fit reports a structured failure on noise") {
	std::string path = temp_file("noise.txt", "0\t1\n1\t1\n7\t5\n");
	RunResult r = run_cli("fit " + path + " --max-scale 6");
	CHECK(r.exit_code == 1);
	CHECK(r.out.find("no-eta-quotient-found") != std::string::npos);
	CHECK(r.out.find("obstruction") != std::string::npos);
}

TEST_CASE("bcoeffs reproduces the published 51-digit coefficient") {
	RunResult r = run_cli("bcoeffs --trunc 3001 --progression 3,0");
	REQUIRE(r.exit_code == 0);
	CHECK(r.out.find("1000\t226621172121394950726209294107119502848934920312640\n") !=
	      std::string::npos);
	CHECK(r.out.find("999\t213349810381656918950139080761530838997673680728800\n") !=
	      std::string::npos);
}

TEST_CASE("bcoeffs respects --mod") {
	RunResult r = run_cli("bcoeffs --trunc 20 --progression 6,3 --mod 6");
	CHECK(r.exit_code == 0);
	CHECK(r.out.empty()); /* b(6n+3) == 0 (mod 6): nothing nonzero to print */
}

TEST_CASE("verify --json emits schema-stable sorted keys and exit codes") {
	RunResult r = run_cli("verify --suite rank --json");
	CHECK(r.exit_code == 0);
	nlohmann::json j = nlohmann::json::parse(r.out);
	REQUIRE(j.contains("items"));
	REQUIRE(j["items"].is_array());
	CHECK(j["suite"] == "rank");
	CHECK(j["runtime_ms"] == 0); /* deterministic by default */
	for (const auto& it : j["items"]) {
		CHECK(it.contains("claim_id"));
		CHECK(it.contains("source"));
		CHECK(it.contains("checked_instances"));
		CHECK(it.contains("holds"));
		CHECK(it.contains("counterexamples"));
	}
	/* byte-identical across runs */
	RunResult r2 = run_cli("verify --suite rank --json");
	CHECK(r.out == r2.out);
}

TEST_CASE("falsified suites exit 1") {
	/* the fixed suite contains the misprinted 150n+108 claim */
	RunResult r = run_cli("verify --suite fixed --raw-budget 2500 --even-budget 6000");
	CHECK(r.exit_code == 1);
	CHECK(r.out.find("FAIL b-150n+108-mod16") != std::string::npos);
}

TEST_CASE("unknown suite exits 2") {
	RunResult r = run_cli("verify --suite nonsense");
	CHECK(r.exit_code == 2);
}

TEST_CASE("rank subcommand with an external table") {
	std::string table =
	    "A7   66   -3125   125    5125\nB7,1 66   -3125   14     924\n"
	    "C7   -176 -16807  0      -16807\nD7,1 -176 -16807  49     -8624\n"
	    "D7,2 -176 -16807  1      -176\nE7   -658 -371293 -2197  1074333\n"
	    "F7,1 -658 -371293 0      0\nF7,2 -658 -371293 364    -239512\n"
	    "F7,3 -658 -371293 98     -64484\n";
	std::string path = temp_file("table.txt", table);
	RunResult r = run_cli("rank --system D7 --mod 9 --table " + path);
	CHECK(r.exit_code == 0);
	CHECK(r.out == "rank(D7 mod 9) = 8\n");
	RunResult nf = run_cli("rank --system F7 --mod 5 --cutoff 3");
	CHECK(nf.exit_code == 1);
	CHECK(nf.out.find("not-found") != std::string::npos);
}

TEST_CASE("newman subcommand") {
	RunResult r = run_cli("newman --suite nt2 --m 31 --a-budget 6000 --json");
	CHECK(r.exit_code == 0);
	nlohmann::json j = nlohmann::json::parse(r.out);
	CHECK(j["items"][0]["holds"] == true);
}
