#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmock/congruence.hpp"
#include "qmock/mock.hpp"

using namespace qmock;

static const BContext& ctx() {
	static const BContext c(2500, 10000);
	return c;
}

TEST_CASE("legendre symbol") {
	CHECK(legendre(2, 3) == -1);
	CHECK(legendre(-3, 5) == -1);
	CHECK(legendre(-3, 7) == 1);
	CHECK(legendre(21, 7) == 0);
	CHECK(legendre(4, 5) == 1);
	CHECK(legendre(Coeff("123456789123456789"), 13) == legendre(123456789123456789 % 13, 13));
	CHECK_THROWS_AS(legendre(3, 4), std::invalid_argument);
	CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
}

TEST_CASE("b context routes agree and bound checking works") {
	const BContext& c = ctx();
	CHECK(c.b(0) == 1);
	CHECK(c.b(3) == 6);
	CHECK(c.b(9) == 54);
	/* even arguments beyond the raw budget go through the expansion */
	CHECK(c.in_budget(20000));
	CHECK_FALSE(c.in_budget(20001));
	CHECK_FALSE(c.in_budget(19999)); /* odd and beyond the raw budget */
	CHECK_THROWS_AS(c.b(3001), std::out_of_range);
	CHECK_NOTHROW(c.b(19998));
}

TEST_CASE("fixed claims: everything except the misprinted residue holds") {
	for (const CongruenceClaim& claim : fixed_claims()) {
		ClaimReport rep = verify_fixed(claim, ctx());
		CHECK(rep.checked_instances > 0);
		if (claim.id == "b-150n+108-mod16") {
			CHECK_FALSE(rep.holds);
			REQUIRE(rep.counterexamples.size() >= 3);
			CHECK(rep.counterexamples[0] == 1);
			CHECK(rep.counterexamples[1] == 2);
			CHECK(rep.counterexamples[2] == 3);
		} else {
			CHECK_MESSAGE(rep.holds, claim.id);
		}
	}
}

TEST_CASE("a sweep with no reachable instance is a budget error") {
	BContext tiny(50, 60);
	CongruenceClaim far{"far", {300, 177}, 25, 10, "out of reach"};
	CHECK_THROWS_AS(verify_fixed(far, tiny), std::invalid_argument);
}

TEST_CASE("the misprint is pinned down: b(258) == 8 (mod 16)") {
	CHECK(ctx().b(258) % 16 == 8);
	/* while the corrected residue class is clean */
	for (long n = 0; n <= 15; ++n) CHECK(ctx().b(150 * n + 102) % 16 == 0);
}

TEST_CASE("theorem base congruences at n <= 200") {
	const BContext& c = ctx();
	for (long n = 0; n <= 200; ++n) {
		CHECK(c.b(6 * n + 3) % 6 == 0);
		CHECK(c.b(36 * n + 22) % 36 == 0);
		CHECK(c.b(12 * n + 9) % 54 == 0);
	}
}

TEST_CASE("mod-2 family") {
	ClaimReport r0 = verify_family_mod2(5, 0, 60, ctx());
	CHECK(r0.holds);
	CHECK(r0.checked_instances == 48); /* n <= 60 minus multiples of 5 */
	ClaimReport r1 = verify_family_mod2(5, 1, 5, ctx());
	CHECK(r1.holds);
	CHECK(r1.checked_instances == 4); /* n = 5 is excluded by the coprimality filter */
	ClaimReport r7 = verify_family_mod2(7, 0, 10, ctx());
	CHECK(r7.holds);
	CHECK(r7.checked_instances == 0);
	CHECK(r7.note.find("inapplicable") != std::string::npos);
	CHECK_THROWS_AS(verify_family_mod2(4, 0, 10, ctx()), std::invalid_argument);
}

TEST_CASE("mod-4 family at p=3, ell=1") {
	auto reps = verify_family_mod4(3, 1, 1, 150, ctx());
	REQUIRE(reps.size() == 5); /* base + (iter, cor) x k in {0,1} */
	for (const ClaimReport& r : reps) {
		CHECK_MESSAGE(r.holds, r.id);
		CHECK(r.checked_instances > 0);
	}
	/* the k=0 iteration is b(18n+4) == b(2n) (mod 4) */
	CHECK(reps[1].id == "family-mod4-iter-p3-l1-k0");
	/* ell=2 has (9/3) = 0, not -1 */
	auto inapp = verify_family_mod4(3, 2, 1, 50, ctx());
	REQUIRE(inapp.size() == 1);
	CHECK(inapp[0].note.find("inapplicable") != std::string::npos);
}

TEST_CASE("base case spot value: b(22) == 0 (mod 4) and (mod 36)") {
	CHECK(ctx().b(22) % 4 == 0);
	CHECK(ctx().b(22) % 36 == 0);
	CHECK(ctx().b(22) == 1404);
}

TEST_CASE("mod-8 family at p=5: ell = 2 and 4 are exactly the admissible ones") {
	for (long ell : {1L, 3L}) {
		auto reps = verify_family_mod8(5, ell, 0, 50, ctx());
		REQUIRE(reps.size() == 1);
		CHECK(reps[0].note.find("inapplicable") != std::string::npos);
	}
	for (long ell : {2L, 4L}) {
		auto reps = verify_family_mod8(5, ell, 1, 100, ctx());
		REQUIRE(reps.size() == 5);
		for (const ClaimReport& r : reps) CHECK_MESSAGE(r.holds, r.id);
	}
	/* the published example: b(20n+8), b(20n+16) == 0 (mod 8), and mod 40
	 * once the listed mod-5 congruence is combined */
	for (long n = 0; n <= 40; ++n) {
		CHECK(ctx().b(20 * n + 8) % 40 == 0);
		CHECK(ctx().b(20 * n + 16) % 40 == 0);
	}
}

TEST_CASE("mod-8 family at p=3, ell=2") {
	auto reps = verify_family_mod8(3, 2, 1, 100, ctx());
	REQUIRE(reps.size() == 5);
	for (const ClaimReport& r : reps) CHECK_MESSAGE(r.holds, r.id);
}

TEST_CASE("mod-36 family at p=5") {
	/* squares mod 5 are {1,4}: 12l+9 is 1,3,0,2 mod 5 for l=1..4 */
	for (long ell : {2L, 4L}) {
		auto reps = verify_family_mod36(5, ell, 1, 60, ctx());
		REQUIRE(reps.size() == 5);
		for (const ClaimReport& r : reps) CHECK_MESSAGE(r.holds, r.id);
	}
	for (long ell : {1L, 3L}) {
		auto reps = verify_family_mod36(5, ell, 0, 50, ctx());
		REQUIRE(reps.size() == 1);
		CHECK(reps[0].note.find("inapplicable") != std::string::npos);
	}
	CHECK_THROWS_AS(verify_family_mod36(3, 1, 0, 10, ctx()), std::invalid_argument);
	/* divisibility base: b(4) = 9 d(0) with d(0) = 1 */
	CHECK(ctx().b(4) == 9);
	CHECK(ctx().sixn4_over9()[0] == 1);
}

TEST_CASE("d-form iteration spot check: d(25n+18) == d(n) (mod 4)") {
	const Series& d = ctx().sixn4_over9();
	for (long n = 0; n <= 60; ++n) {
		Coeff diff = d[25 * n + 18] - 5 * d[n];
		CHECK(diff % 4 == 0);
	}
}

TEST_CASE("representation by 3x^2 + y^2") {
	auto w4 = rep_3x2_plus_y2(4);
	REQUIRE(w4.has_value());
	CHECK(3 * w4->first * w4->first + w4->second * w4->second == 4);
	auto w28 = rep_3x2_plus_y2(28);
	REQUIRE(w28.has_value());
	CHECK(3 * w28->first * w28->first + w28->second * w28->second == 28);
	CHECK_FALSE(rep_3x2_plus_y2(2).has_value());
}

TEST_CASE("pentagonal-support parity matches b(3n) mod 2 and the index predicate") {
	const BContext& c = ctx();
	auto pent_parity = [](long n) {
		/* #{(m >= 0, j in Z) : 3(2m+1)^2 + (6j-1)^2 = 24n+4} mod 2 */
		long target = 24 * n + 4;
		long count = 0;
		for (long m = 0; 3 * (2 * m + 1) * (2 * m + 1) <= target; ++m) {
			long rest = target - 3 * (2 * m + 1) * (2 * m + 1);
			long y = 0;
			while (y * y < rest) ++y;
			if (y * y != rest) continue;
			/* y or -y must be of the shape 6j-1 */
			if (y % 6 == 5) ++count; /* y = 6j-1 with j >= 1 */
			if (y % 6 == 1) ++count; /* -y = 6j-1 */
		}
		return count % 2;
	};
	auto index_predicate = [](long n) {
		for (long k = 0; 6 * k * k - 2 * k <= n; ++k)
			if (2 * k * (3 * k + 1) == n || 2 * k * (3 * k - 1) == n) return true;
		return false;
	};
	for (long n = 0; n <= 400; ++n) {
		long parity = (c.b(3 * n) % 2 != 0) ? 1 : 0;
		CHECK(parity == pent_parity(n));
		CHECK((parity == 1) == index_predicate(n));
	}
}

TEST_CASE("corollary indices coincide with the iterated theorem indices") {
	/* substituting pn+ell into the iteration must give exactly the
	 * corollary progression; at n = 0 both name the same coefficient */
	for (long p : {3L, 5L, 7L}) {
		for (long ell = 1; ell < p; ++ell) {
			for (long k = 0; k <= 1; ++k) {
				long p2k2 = pow_long_checked(p, 2 * k + 2);
				CHECK(2 * p2k2 * ell + (p2k2 - 1) / 2 == ((4 * ell + 1) * p2k2 - 1) / 2);
				CHECK(4 * p2k2 * ell + (p2k2 - 1) / 2 == ((8 * ell + 1) * p2k2 - 1) / 2);
				CHECK(6 * p2k2 * ell + 4 + 6 * (3 * (p2k2 - 1) / 4) ==
				      (3 * p2k2 * (4 * ell + 3) - 1) / 2);
			}
		}
	}
}

TEST_CASE("p-adic valuation") {
	CHECK(padic_val(3, 27) == 3);
	CHECK(padic_val(5, 220) == 1);
	CHECK(padic_val(7, 10) == 0);
	CHECK_THROWS_AS(padic_val(3, 0), std::invalid_argument);
	/* the valuation that powers the mod-2 family: odd at the family indices */
	CHECK(padic_val(5, 24 * (5 * 1 + (25 - 1) / 6) + 4) % 2 == 1);
}

TEST_CASE("valuation mechanism behind the mod-2 family") {
	/* 24(p^{2k+1} n + (p^{2k+2}-1)/6) + 4 has odd p-valuation when p does
	 * not divide n, hence no 3x^2+y^2 representation */
	long p = 5;
	for (long k : {0L, 1L}) {
		long pk = pow_long_checked(p, 2 * k + 1);
		for (long n = 1; n <= 10; ++n) {
			if (n % p == 0) continue;
			long N = 24 * (pk * n + (pk * p - 1) / 6) + 4;
			CHECK(padic_val(p, N) == 2 * k + 1);
			CHECK_FALSE(rep_3x2_plus_y2(N).has_value());
		}
	}
}
