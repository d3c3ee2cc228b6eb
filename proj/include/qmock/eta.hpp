#ifndef QMOCK_ETA_HPP
#define QMOCK_ETA_HPP

#include "qmock/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qmock {

/* scalar * q^qshift * prod_m f_m^{e_m}, where f_m = (q^m;q^m)_inf.
 * No zero exponents are stored and scales are strictly positive. */
struct EtaQuotient {
	Coeff scalar = 1;
	long qshift = 0;
	std::map<long, long> terms; /* scale -> exponent */

	bool operator==(const EtaQuotient&) const = default;
};

/* Truncated expansion. Negative exponents go through the exact unit
 * division, so quotients like f_2^5/f_1^4 expand in O(N^1.5). */
Series expand(const EtaQuotient& e, long trunc);

struct FitResult {
	bool ok = false;
	EtaQuotient quotient;         /* meaningful when ok */
	long obstruction_index = -1;  /* first index that resists, when !ok */
	std::string reason;           /* empty when ok */
};

/* Greedy eta-quotient recognition: factor out the leading monomial, then
 * read e_m off the residual's q^m coefficient for m = 1..max_scale, since
 * f_m^e = 1 - e q^m + O(q^{m+1}) and higher scales cannot reach q^m.
 * Succeeds iff the residual collapses to 1 through the full truncation;
 * a leftover residual is a structured failure, not an exception (inspecting
 * failures is part of the intended workflow). The zero series throws. */
FitResult fit(const Series& s, long max_scale = 24);

struct IdentityReport {
	bool holds = false;
	long first_mismatch = -1; /* -1 when holds */
	long checked_to = 0;
};

/* Compare lhs against expand(rhs) coefficientwise through trunc.
 * Requires trunc <= lhs.trunc(). */
IdentityReport verify_eta_identity(const Series& lhs, const EtaQuotient& rhs, long trunc);

/* Compare two series through trunc (both must reach it). */
IdentityReport compare_series(const Series& lhs, const Series& rhs, long trunc);

/* Text form "c * q^t * f1^a f2^b ...": the q^t part is omitted when t = 0,
 * positive exponents print before negative ones, ascending scale within
 * each group. eta_from_text parses the same grammar (exponent defaults to
 * 1 when the ^e part is omitted) and rejects scales < 1. */
std::string to_text(const EtaQuotient& e);
EtaQuotient eta_from_text(std::string_view text);

} // namespace qmock

#endif
