#ifndef QMOCK_CONGRUENCE_HPP
#define QMOCK_CONGRUENCE_HPP

#include "qmock/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmock {

/* Legendre symbol (a/p) for an odd prime p, by Euler's criterion. */
int legendre(const Coeff& a, long p);
int legendre(long a, long p);

/* base^e in long arithmetic, throwing on overflow of the index range. */
long pow_long_checked(long base, long e);

/* "b(step*n + offset) == 0 (mod modulus) for 0 <= n <= n_max". */
struct CongruenceClaim {
	std::string id;
	Progression prog;
	long modulus = 1;
	long n_max = 0;
	std::string source;
};

/* The fixed congruence registry: the prior-work congruences, the three
 * base-theorem congruences (n <= 200), and the published congruence list.
 * Claims stay exactly as their sources state them; the one item that is
 * false as printed (150n+108 mod 16 -- counterexample at n=1) is kept so
 * the falsification is reported, with the residue that actually completes
 * the family (102) registered alongside as "-corrected". */
const std::vector<CongruenceClaim>& fixed_claims();

struct ClaimReport {
	std::string id;
	std::string source;
	long checked_instances = 0;
	bool holds = false;
	std::vector<long> counterexamples;
	std::string note;
};

/* Shared b(n) evaluation context. Raw values come from the defining sum up
 * to raw_budget; even arguments additionally come from the expansion of
 * f_2^5/f_1^4 (the b(2n) generating function) up to 2*even_budget, which
 * is far cheaper at large index. The two routes are cross-checked on their
 * overlap at construction. d(n) = b(6n+4)/9 is kept as its own expansion
 * for the mod-36 family. */
class BContext {
public:
	explicit BContext(long raw_budget = 5000, long even_budget = 20000);

	bool in_budget(long n) const;
	Coeff b(long n) const; /* throws std::out_of_range beyond every route */

	long raw_budget() const { return raw_.trunc(); }
	long even_budget() const { return even_.trunc(); }
	const Series& raw() const { return raw_; }
	const Series& even() const { return even_; }       /* b(2n) */
	const Series& sixn4_over9() const { return d_; }   /* d(n) = b(6n+4)/9 */

private:
	Series raw_;
	Series even_;
	Series d_;
};

/* Check one fixed claim; instances beyond the context budget reduce
 * checked_instances (never silently pass). */
ClaimReport verify_fixed(const CongruenceClaim& claim, const BContext& ctx);

/* b(3p^{2k+1}n + (p^{2k+2}-1)/2) == 0 (mod 2) for p inert in the sense
 * (-3/p) = -1, over n <= n_max with p not dividing n. Returns an
 * inapplicable (holds, 0 instances) report when the side condition fails. */
ClaimReport verify_family_mod2(long p, long k, long n_max, const BContext& ctx);

/* The mod-4 family at (p, ell) with (4ell+1/p) = -1:
 *   base:      b(2(pn+ell)) == 0 (mod 4)
 *   iteration: b(2p^{2k+2}n + (p^{2k+2}-1)/2) == (-1)^{(k+1)(p-1)/2} p^{k+1} b(2n) (mod 4)
 *   corollary: b(2p^{2k+3}n + ((4ell+1)p^{2k+2}-1)/2) == 0 (mod 4)
 * for k <= k_max. The iteration is the multiplied-through form of the
 * source's p^{-k-1} statement (p odd is a unit mod 4). */
std::vector<ClaimReport> verify_family_mod4(long p, long ell, long k_max, long n_max,
                                            const BContext& ctx);

/* The mod-8 family at (p, ell) with (8ell+1/p) = -1:
 *   base:      b(4(pn+ell)) == 0 (mod 8)
 *   iteration: b(4n) == b(4p^{2k+2}n + (p^{2k+2}-1)/2) (mod 8)
 *   corollary: b(4p^{2k+3}n + ((8ell+1)p^{2k+2}-1)/2) == 0 (mod 8). */
std::vector<ClaimReport> verify_family_mod8(long p, long ell, long k_max, long n_max,
                                            const BContext& ctx);

/* The mod-36 family at (p, ell), p >= 5, with (12ell+9/p) = -1:
 *   base:      b(6(pn+ell)+4) == 0 (mod 36)
 *   iteration in d(n) = b(6n+4)/9 (exact integers):
 *              d(p^{2k+2}n + 3(p^{2k+2}-1)/4) == ((-1)^{(p-1)/2} p)^{k+1} d(n) (mod 4)
 *   corollary: b(6p^{2k+3}n + (3p^{2k+2}(4ell+3)-1)/2) == 0 (mod 36).
 * The d form is the divided-by-9 restatement of the source's 9^{-k-1}
 * iteration (9 is not invertible mod 36); 9 | b(6n+4) is asserted. */
std::vector<ClaimReport> verify_family_mod36(long p, long ell, long k_max, long n_max,
                                             const BContext& ctx);

/* Witness for N = 3x^2 + y^2 by brute force over x <= sqrt(N/3). */
std::optional<std::pair<long, long>> rep_3x2_plus_y2(long N);

/* Exponent of the largest power of p dividing N >= 1. */
long padic_val(long p, long N);

} // namespace qmock

#endif
