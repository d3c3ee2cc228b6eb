#ifndef QMOCK_THETA_HPP
#define QMOCK_THETA_HPP

#include "qmock/eta.hpp"
#include "qmock/series.hpp"

namespace qmock {

/* sign * q^exponent, the argument shape taken by the general theta series. */
struct MonomialArg {
	int sign = 1;      /* +1 or -1 */
	long exponent = 0; /* >= 0 */
};

/* Ramanujan's f(a,b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2} for monomial
 * a, b. The summation range is the exact set of n whose exponent
 * ((ea+eb)n^2 + (ea-eb)n)/2 stays within the truncation, solved from the
 * quadratic. Requires ea + eb >= 1 (else the series diverges). */
Series theta_f(MonomialArg a, MonomialArg b, long trunc);

/* phi(q) = f(q,q) and psi(q) = f(q,q^3), computed through their
 * eta-quotient forms f_2^5/(f_1^2 f_4^2) and f_2^2/f_1. */
Series phi(long trunc);
Series psi(long trunc);

/* The p-dissection of psi(q) for an odd prime p:
 *   sum_{k=0}^{(p-3)/2} q^{(k^2+k)/2} f(q^{(p^2+(2k+1)p)/2}, q^{(p^2-(2k+1)p)/2})
 *   + q^{(p^2-1)/8} psi(q^{p^2}).
 * include_tail=false drops the psi(q^{p^2}) term (used to confirm which
 * residue class mod p that term alone populates). */
Series psi_p_dissection(long p, long trunc, bool include_tail = true);

/* The p-dissection of f(-q)^3 for a prime p >= 3: half the signed double
 * sum over k != (p-1)/2 with weights (2pn+2k+1), plus
 * (-1)^{(p-1)/2} p q^{(p^2-1)/8} f(-q^{p^2})^3.
 * The double sum is accumulated over all (k,n) and halved exactly; an odd
 * coefficient at that point would be an implementation bug and throws. */
Series fcube_p_dissection(long p, long trunc, bool include_tail = true);

/* The three 2-/3-dissection lemmas used by the congruence proofs, named by
 * the quotient they dissect. */
enum class DissectionLemma {
	f3_over_f1cubed,  /* f3/f1^3   = f4^6 f6^3/(f2^9 f12^2) + 3q f4^2 f6 f12^2/f2^7 */
	f3sq_over_f1sq,   /* f3^2/f1^2 = f4^4 f6 f12^2/(f2^5 f8 f24) + 2q f4 f6^2 f8 f24/(f2^4 f12) */
	f2_over_f1sq,     /* f2/f1^2   = f6^4 f9^6/(f3^8 f18^3) + 2q f6^3 f9^3/f3^7 + 4q^2 f6^2 f18^3/f3^6 */
};

IdentityReport verify_hirschhorn(DissectionLemma id, long trunc);

bool is_prime(long n);

} // namespace qmock

#endif
