#ifndef QMOCK_SUITES_HPP
#define QMOCK_SUITES_HPP

#include "qmock/congruence.hpp"
#include "qmock/series.hpp"

#include <string>
#include <vector>

namespace qmock {

struct ReportItem {
	std::string id;
	std::string source;
	bool holds = false;
	long checked_to = 0;
	std::vector<long> counterexamples;
	std::string notes;
};

struct Report {
	std::string suite;
	std::vector<ReportItem> items; /* registry order */
	long runtime_ms = 0;

	bool all_hold() const;
};

ReportItem to_item(const ClaimReport& c);

/* Deterministic JSON: keys sorted, arrays in registry order. runtime_ms is
 * emitted as given; suite runners leave it 0 unless the caller times them,
 * so identical inputs produce byte-identical output. */
std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);

/* One "ok|FAIL id (details)" line per item. */
std::string to_text(const Report& r);

/* Shared series context for the verification suites. The budgets are the
 * documented defaults: raw b to 5000, b(2n) and b(6n+4)/9 expansions to
 * 20000 (arguments to 40000), a(n) to 100000. */
struct SuiteContext {
	BContext b;
	Series a;

	explicit SuiteContext(long raw_budget = 5000, long even_budget = 20000,
	                      long a_budget = 100000);
};

/* Every generating-function identity, the even-part identity, the fit
 * rediscoveries of the three raw-coefficient quotients, and the seeded
 * 100-case fit/expand round trip. */
Report run_identities_suite(long trunc = 400, unsigned long seed = 12345);

/* The dissection lemmas and the psi / f(-q)^3 p-dissections. */
Report run_dissections_suite(long trunc_lemmas = 400, long trunc_p = 300);

/* The fixed congruence registry. */
Report run_fixed_suite(const BContext& ctx);

/* The four prime-parameterized families at their documented parameters. */
Report run_families_suite(const BContext& ctx);

/* The a(n)-side layer: the three-term identity, the U/V lemmas, the mod-72
 * families, the square family at m = 31, the a-progressions, and the
 * conjecture scan to m <= 500. */
Report run_newman_suite(const SuiteContext& ctx, long scan_m_max = 500);

/* Recurrence ranks, the base-value checks, and the b(12n+3) reduction. */
Report run_rank_suite(const BContext& ctx, long f17_n_max = 80);

std::vector<Report> run_all_suites(const SuiteContext& ctx);

} // namespace qmock

#endif
