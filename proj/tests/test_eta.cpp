#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/eta.hpp"
#include "qmock/mock.hpp"

#include <random>

using namespace qmock;

TEST_CASE("expand examples") {
	/* f2^5/f1^4 carries b(2n): 1, 4, 9, 20, 40, ... */
	Series e = expand(EtaQuotient{1, 0, {{2, 5}, {1, -4}}}, 30);
	CHECK(e[0] == 1);
	CHECK(e[1] == 4);
	CHECK(e[2] == 9);
	CHECK(e[3] == 20);
	CHECK(e[4] == 40);
	Series b = b_series(60);
	for (long n = 0; n <= 30; ++n) CHECK(e[n] == b[2 * n]);

	CHECK(expand(EtaQuotient{2, 0, {{2, 10}, {1, -9}}}, 0)[0] == 2);
	CHECK(expand(EtaQuotient{7, 0, {}}, 5) == Series::monomial(7, 0, 5));
}

TEST_CASE("expand rejects malformed quotients") {
	CHECK_THROWS_AS(expand(EtaQuotient{1, 0, {{0, 2}}}, 10), std::invalid_argument);
	CHECK_THROWS_AS(expand(EtaQuotient{1, 0, {{2, 0}}}, 10), std::invalid_argument);
}

TEST_CASE("fit rediscovers the b(3n) quotient") {
	Series b = b_series(700);
	FitResult f = fit(extract_progression(b, {3, 0}), 12);
	REQUIRE(f.ok);
	EtaQuotient expected{1, 0, {{2, 7}, {3, 2}, {1, -6}, {4, -1}, {6, -1}}};
	CHECK(f.quotient == expected);
}

TEST_CASE("fit round trip on a plain Euler factor") {
	FitResult f = fit(euler_f(1, 100), 5);
	REQUIRE(f.ok);
	CHECK(f.quotient == EtaQuotient{1, 0, {{1, 1}}});
}

TEST_CASE("fit recovers the mu2(3n+1) quotient with negative scalar") {
	Series mu = mu_series(601);
	FitResult f = fit(extract_progression(mu, {3, 1}), 15);
	REQUIRE(f.ok);
	EtaQuotient expected{-1, 0, {{2, 7}, {12, 2}, {1, -1}, {4, -6}, {6, -1}}};
	CHECK(f.quotient == expected);
}

TEST_CASE("fit failures are structured") {
	CHECK_THROWS_AS(fit(Series(20), 5), std::invalid_argument);

	/* noise is not an eta quotient */
	Series noise(40);
	noise.coeff(0) = 1;
	noise.coeff(1) = 1;
	noise.coeff(37) = 5;
	FitResult f = fit(noise, 6);
	CHECK_FALSE(f.ok);
	CHECK(f.obstruction_index > 0);
	CHECK_FALSE(f.reason.empty());
}

TEST_CASE("fit is independent of the truncation once scales are visible") {
	Series b = b_series(1206);
	Series sub = extract_progression(b, {3, 0}); /* trunc 402 */
	FitResult f400 = fit(sub, 12);
	Series sub200 = extract_progression(b_series(600), {3, 0});
	FitResult f200 = fit(sub200, 12);
	REQUIRE(f400.ok);
	REQUIRE(f200.ok);
	CHECK(f400.quotient == f200.quotient);
}

TEST_CASE("fit/expand round trip on random quotients") {
	std::mt19937_64 rng(20240801);
	std::uniform_int_distribution<long> nscales(1, 4), scale(1, 8), expo(1, 6),
	    scal(1, 9), shift(0, 3), coin(0, 1);
	for (int rep = 0; rep < 100; ++rep) {
		EtaQuotient e;
		e.scalar = scal(rng) * (coin(rng) ? 1 : -1);
		e.qshift = shift(rng);
		long k = nscales(rng);
		for (long i = 0; i < k; ++i) {
			long m = scale(rng);
			long ex = expo(rng) * (coin(rng) ? 1 : -1);
			long merged = e.terms.count(m) ? e.terms[m] + ex : ex;
			if (merged == 0) e.terms.erase(m);
			else e.terms[m] = merged;
		}
		FitResult f = fit(expand(e, 300), 8);
		REQUIRE(f.ok);
		CHECK(f.quotient == e);
	}
}

TEST_CASE("verify_eta_identity and its negative control") {
	Series b = b_series(1600);
	Series b4n = extract_progression(b, {4, 0});
	EtaQuotient rhs{1, 0, {{2, 14}, {1, -9}, {4, -4}}};
	IdentityReport rep = verify_eta_identity(b4n, rhs, 400);
	CHECK(rep.holds);
	CHECK(rep.checked_to == 400);

	EtaQuotient wrong = rhs;
	wrong.terms[4] = -3; /* perturbed exponent */
	IdentityReport bad = verify_eta_identity(b4n, wrong, 400);
	CHECK_FALSE(bad.holds);
	CHECK(bad.first_mismatch >= 0);
}

TEST_CASE("eta text format round trip") {
	EtaQuotient e{1, 0, {{2, 7}, {3, 2}, {1, -6}, {4, -1}, {6, -1}}};
	CHECK(to_text(e) == "1 * f2^7 f3^2 f1^-6 f4^-1 f6^-1");
	CHECK(eta_from_text(to_text(e)) == e);

	EtaQuotient shifted{-3, 2, {{5, 4}}};
	CHECK(to_text(shifted) == "-3 * q^2 * f5^4");
	CHECK(eta_from_text(to_text(shifted)) == shifted);

	CHECK(eta_from_text("1 * f1^1") == EtaQuotient{1, 0, {{1, 1}}});
	CHECK(eta_from_text("f2^5 f1^-4") == EtaQuotient{1, 0, {{2, 5}, {1, -4}}});
	CHECK(eta_from_text("2 * f2") == EtaQuotient{2, 0, {{2, 1}}});

	CHECK_THROWS_WITH_AS(eta_from_text("1 * f0^2"),
	                     "eta text: scale must be >= 1 in 'f0^2'", std::invalid_argument);
	CHECK_THROWS_AS(eta_from_text(""), std::invalid_argument);
	CHECK_THROWS_AS(eta_from_text("1 * g3^2"), std::invalid_argument);
}
