#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/recurrence.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

using namespace qmock;

TEST_CASE("worked example system") {
	SequenceSystem sys = example_system_f12();
	auto f1 = rec_prefix(sys.members[0], 5);
	auto f2 = rec_prefix(sys.members[1], 5);
	CHECK(f1 == std::vector<Coeff>{0, 1, 2, 5, 12, 29});
	CHECK(f2 == std::vector<Coeff>{1, 0, -3, -3, 6, 15});
	auto r = rank_of_system(sys, 2);
	REQUIRE(r.has_value());
	CHECK(*r == 4);
}

TEST_CASE("a rank need not exist") {
	/* S(a) = 2a+1: S(a) = 2S(a-1) - S(a-2), never even */
	SequenceSystem odd{"odd", {{"S", 2, -1, 1, 3}}};
	CHECK_FALSE(rank_of_system(odd, 2, 500).has_value());
	/* found ranks are stable under a larger cutoff */
	auto r1 = rank_of_system(example_system_f12(), 2, 10);
	auto r2 = rank_of_system(example_system_f12(), 2, 10000);
	CHECK(r1 == r2);
}

TEST_CASE("table ranks mod 9") {
	RankTriple r = table1_ranks(9);
	REQUIRE(r.r1.has_value());
	REQUIRE(r.r2.has_value());
	REQUIRE(r.r3.has_value());
	CHECK(*r.r1 == 5);
	CHECK(*r.r2 == 8);
	CHECK(*r.r3 == 8);
}

TEST_CASE("B7,1 residue prefix mod 9") {
	auto pre = rec_prefix(table1().B71, 5);
	long expect[] = {5, 6, 8, 3, 2, 0};
	for (long i = 0; i <= 5; ++i) {
		Coeff m = pre[i] % 9;
		if (m < 0) m += 9;
		CHECK(m == expect[i]);
	}
}

TEST_CASE("one exact recurrence step: A7(2)") {
	CHECK(rec_eval(table1().A7, 2) == Coeff(66) * 5125 - Coeff(3125) * 125);
	CHECK(rec_eval(table1().A7, 2) == -52375);
}

TEST_CASE("F7,1 vanishes identically") {
	auto pre = rec_prefix(table1().F71, 20);
	for (const Coeff& v : pre) CHECK(v == 0);
}

TEST_CASE("base values for the power laws") {
	E1Report rep = verify_e1();
	CHECK(rep.holds_at_ranks);
	/* the printed index-12 statement does not match the table data */
	CHECK_FALSE(rep.printed_index_matches);
	CHECK(rep.a7_at_printed == 8);
	CHECK(rep.c7_at_printed == 3);
	CHECK(rep.e7_at_printed == 2);
	CHECK(rep.note.find("mismatch") != std::string::npos);
}

TEST_CASE("table data file parses, matches the compiled table, and checksums") {
	std::ifstream in(QMOCK_TABLE1_PATH, std::ios::binary);
	REQUIRE(in.good());
	std::ostringstream ss;
	ss << in.rdbuf();
	std::string text = ss.str();

	CHECK(parse_table1(text) == table1());

	/* FNV-1a 64 over the exact file bytes */
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : text) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	CHECK(h == 0x49bfe358e51f7b78ULL);

	CHECK_THROWS_AS(parse_table1("A7 1 2 3\n"), std::invalid_argument);
	CHECK_THROWS_AS(parse_table1("Z9 1 2 3 4\n"), std::invalid_argument);
	CHECK_THROWS_AS(parse_table1(""), std::invalid_argument);
}

TEST_CASE("b(12n+3) reduction through f1^7") {
	BContext ctx(1000, 2000);
	auto reps = verify_f17(80, ctx);
	REQUIRE(reps.size() == 4);
	CHECK(reps[0].holds);
	CHECK(reps[0].checked_instances == 81);
	CHECK(reps[1].holds); /* b(3) == 6 (mod 54) */
	CHECK(reps[2].holds); /* a7(12) == 0 (mod 9) */
	CHECK(reps[3].holds);
	CHECK(reps[3].note.find("implied") != std::string::npos);
}
