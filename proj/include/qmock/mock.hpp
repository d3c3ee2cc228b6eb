#ifndef QMOCK_MOCK_HPP
#define QMOCK_MOCK_HPP

#include "qmock/eta.hpp"
#include "qmock/series.hpp"

#include <string>
#include <vector>

namespace qmock {

/* B(q) = sum_{k>=0} q^k (-q;q^2)_k / (q;q^2)_{k+1}.
 * Summand k is divisible by q^k, so summation to k = trunc is exact; each
 * summand follows from the previous by one sparse multiply and one sparse
 * divide, keeping the whole build at O(N^2) coefficient additions. */
Series b_series(long trunc);

/* The other published shape of the same function,
 * sum_{k>=0} q^{k(k+1)} (-q^2;q^2)_k / (q;q^2)_{k+1}^2; the q-valuation of
 * summand k is k(k+1), so only ~sqrt(trunc) summands contribute. Used as a
 * cross-check against b_series. */
Series b_series_quadratic(long trunc);

/* A(q) = sum_{k>=0} q^{k+1} (-q^2;q^2)_k / (q;q^2)_{k+1}; starts at q. */
Series mock_a_series(long trunc);

/* mu(q) = sum_{k>=0} (-1)^k q^{k^2} (q;q^2)_k / (-q^2;q^2)_k^2. */
Series mu_series(long trunc);

/* A registered generating-function identity for a subsequence of one of
 * the three coefficient families: series 'b', 'A' (curly-A), or 'u' (mu).
 * rhs is a sum of eta quotients (one identity needs two summands).
 * rhs_printed, when nonempty, is a differing right side carried by the
 * source; verify_genfun checks it too and reports where it breaks. */
struct GenFunEntry {
	std::string key;
	char family; /* 'b', 'A', 'u' */
	Progression prog;
	std::vector<EtaQuotient> rhs;
	std::vector<EtaQuotient> rhs_printed;
	std::string source;
};

const std::vector<GenFunEntry>& genfun_registry();
const GenFunEntry& genfun_entry(const std::string& key);

struct GenFunReport {
	std::string key;
	IdentityReport established;          /* the verified right side */
	bool printed_differs = false;        /* a differing printed form exists */
	long printed_first_mismatch = -1;    /* where the printed form breaks */
	std::string note;
};

/* Compare the registered subsequence of the named family against the
 * registered right side, exact through trunc terms of the subsequence.
 * The overload taking source_full reuses an already computed full series
 * for the entry's family (must reach prog.step*trunc + prog.offset). */
GenFunReport verify_genfun(const std::string& key, long trunc);
GenFunReport verify_genfun(const GenFunEntry& e, const Series& source_full, long trunc);

/* (B(q) + B(-q))/2 = f_4^5/f_2^4; the halving must be exact (all odd
 * coefficients of the sum cancel), otherwise the generator is broken. */
IdentityReport even_part_identity(long trunc);

} // namespace qmock

#endif
