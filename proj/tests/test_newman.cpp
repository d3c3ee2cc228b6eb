#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/eta.hpp"
#include "qmock/newman.hpp"

using namespace qmock;

static const Series& a12k() {
	static const Series a = a_series(12000);
	return a;
}

TEST_CASE("a series values, dual route") {
	const Series& a = a12k();
	/* brute finite product (1-q)^4 (1-q^2)^4-free: prod (1-q^j)^4 (1-q^{2j}) */
	long N = 80;
	Series s = Series::one(N);
	for (long j = 1; j <= N; ++j) {
		for (int rep = 0; rep < 4; ++rep) s.mul_factor(-1, j);
		if (2 * j <= N) s.mul_factor(-1, 2 * j);
	}
	for (long n = 0; n <= N; ++n) CHECK(a[n] == s[n]);
	CHECK(a[0] == 1);
	CHECK(a[1] == -4);
	CHECK(a[2] == 1);
	CHECK(a[11] == -28);
	CHECK(a[20] == -23);
	CHECK(a[31] % 8 == 0);
}

TEST_CASE("prime data per the residue tables") {
	const Series& a = a12k();
	PrimeData d3 = prime_data(3, a);
	CHECK(d3.r == 4);
	CHECK(d3.s == 27);
	CHECK(d3.nu == 4);
	CHECK(d3.g == 297);
	CHECK(d3.g % 8 == 1);

	PrimeData d5 = prime_data(5, a);
	CHECK(d5.r == -2);
	CHECK(d5.s == 125);
	CHECK(d5.nu == 8);

	PrimeData d7 = prime_data(7, a);
	CHECK(d7.r == -24);
	CHECK(d7.nu == 2);
	CHECK(d7.g == -343);

	CHECK(prime_data(11, a).nu == 4);
	CHECK(prime_data(13, a).nu == 8);
	for (long p : {3L, 5L, 7L, 11L, 13L}) {
		PrimeData d = prime_data(p, a);
		CHECK(d.h % 8 == 0);
		Coeff gm = d.g % 8;
		if (gm < 0) gm += 8;
		CHECK(gm == 1);
	}
	CHECK_THROWS_AS(prime_data(4, a), std::invalid_argument);
	/* consistency: r(3) = a(2) + (-1)(3)(2/3)_L = 1 + 3 */
	CHECK(d3.r == a[2] + (-1) * 3 * legendre(2, 3));
}

TEST_CASE("gamma factor") {
	const Series& a = a12k();
	CHECK(gamma_factor(1, 3, a) == 7);
	/* at n = 0 the Legendre difference cancels, leaving a((p^2-1)/4) */
	CHECK(gamma_factor(0, 3, a) == a[2]);
	CHECK(gamma_factor(0, 5, a) == a[6]);
	/* and that differs from r(p), which carries the extra Legendre term */
	CHECK(gamma_factor(0, 3, a) != prime_data(3, a).r);
	/* the subtracted Legendre term drops when p | (p^2-1)/4 - n */
	CHECK(gamma_factor(2, 3, a) == a[2] - 3 * legendre(2, 3));
	CHECK(gamma_factor(2, 3, a) == 4);
}

TEST_CASE("three-term identity, exact") {
	const Series& a = a12k();
	ClaimReport r3 = verify_newman(3, 200, a);
	CHECK(r3.holds);
	CHECK(r3.checked_instances == 201);
	ClaimReport r5 = verify_newman(5, 60, a);
	CHECK(r5.holds);
	/* hand instances: at n=1 the third term sits at the non-integer -1/9
	 * and drops; at n=2 it is a(0/9) = a(0) and contributes in full */
	CHECK(a[11] == gamma_factor(1, 3, a) * a[1]);
	CHECK(a[20] == gamma_factor(2, 3, a) * a[2] - 27 * a[0]);
	CHECK_THROWS_AS(verify_newman(3, 5000, a), std::invalid_argument);
}

TEST_CASE("specialized fourth-power identity: a(20) = r a(2) - s a(0)") {
	const Series& a = a12k();
	CHECK(a[20] == 4 * a[2] - 27 * a[0]);
	CHECK(verify_newman_specialized(3, 50, a).holds);
	CHECK(verify_newman_specialized(5, 17, a).holds);
}

TEST_CASE("U/V sequences") {
	const Series& a = a12k();
	auto uv = uv_sequence(3, 10, a);
	CHECK(uv[0].u == 0);
	CHECK(uv[0].v == 1);
	CHECK(uv[1].u == 1);
	CHECK(uv[1].v == 0);
	CHECK(uv[2].u == 4);   /* r */
	CHECK(uv[2].v == -27); /* -s */
}

TEST_CASE("closed form via U/V for p=3, k <= 2") {
	CHECK(verify_lemma_71(3, 2, 10, a12k()).holds);
	CHECK(verify_lemma_71(5, 1, 10, a12k()).holds);
}

TEST_CASE("mod-8 recurrence lemmas to k = 50") {
	for (long p : {3L, 5L, 7L, 11L, 13L}) {
		CHECK_MESSAGE(verify_lemma_72(p, 50, a12k()).holds, p);
		CHECK_MESSAGE(verify_lemma_73(p, 50, a12k()).holds, p);
	}
}

TEST_CASE("mod-72 layers at p=3 within a reduced budget") {
	BContext ctx(1200, 10000);
	auto reps = verify_nt1(3, 500, 4, a12k(), ctx);
	REQUIRE(reps.size() == 3);
	CHECK(reps[0].id == "b18n4-reduction");
	CHECK(reps[0].holds);
	CHECK(reps[0].checked_instances == 501);
	CHECK(reps[1].holds); /* a(2187n+1640) == 0 (mod 8), n <= 4, 3 coprime */
	CHECK(reps[1].checked_instances == 3);
	CHECK(reps[2].holds); /* a(1) == 4, a(8201) == 4 g(3) == 4 (mod 8) */
	CHECK(reps[2].checked_instances == 2);
	CHECK((a12k()[1] - 4) % 8 == 0);
	CHECK((a12k()[8201] - 4 * 297) % 8 == 0);
}

TEST_CASE("a(6n+4) family and its b-side consequence") {
	BContext ctx(1200, 10000);
	auto reps = verify_nt3(300, 100, a12k(), ctx);
	REQUIRE(reps.size() == 2);
	CHECK(reps[0].holds);
	CHECK(reps[0].checked_instances == 301);
	CHECK(reps[1].holds);
	CHECK(reps[1].checked_instances == 101);
	/* direct spot check from the raw generator */
	CHECK(ctx.raw()[76] % 72 == 0);
}

TEST_CASE("square family at m = 31") {
	const Series& a = a12k();
	CHECK(squarefull_part(125) == 125);
	CHECK(squarefull_part(127) == 1);
	CHECK(squarefull_part(1127) == 49); /* 7^2 * 23 */
	ClaimReport rep = verify_nt2(31, {1, 3, 5, 7, 9, 11, 13}, a);
	CHECK(rep.holds);
	CHECK(rep.checked_instances == 6); /* n = 5 shares a factor with 2*125 */
	CHECK(rep.note.find("n=5 inadmissible") != std::string::npos);
	/* a(1) = -4 is not 0 mod 8, so m = 1 is rejected outright */
	CHECK_THROWS_AS(verify_nt2(1, {1}, a), std::invalid_argument);
}

TEST_CASE("b(6n+4) == 9 f3^4 f6 (mod 72)") {
	BContext ctx(1200, 5000);
	Series rhs = expand(EtaQuotient{9, 0, {{3, 4}, {6, 1}}}, 400);
	for (long n = 0; n <= 400; ++n) CHECK((ctx.b(6 * n + 4) - rhs[n]) % 72 == 0);
}

TEST_CASE("listed a-progressions mod 8") {
	auto reps = verify_a_progressions(500, a12k());
	REQUIRE(reps.size() == 7);
	for (const ClaimReport& r : reps) {
		CHECK_MESSAGE(r.holds, r.id);
		CHECK(r.checked_instances >= 300);
	}
	/* composite consequence: b(18(9n+5)+4) == 0 (mod 72) */
	BContext ctx(1200, 10000);
	for (long n = 0; n <= 100; ++n) CHECK(ctx.b(162 * n + 94) % 72 == 0);
}

TEST_CASE("conjecture scan finds the (31, 5) counterexample") {
	ScanResult res = conjecture_scan(60, a_series(3000));
	CHECK(res.candidates > 0);
	CHECK(res.instances > 0);
	REQUIRE(res.counterexamples.size() == 1);
	CHECK(res.counterexamples[0].first == 31);
	CHECK(res.counterexamples[0].second == 5);
	/* the witness itself */
	CHECK(a12k()[781] == 484);
}
