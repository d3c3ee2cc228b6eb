#ifndef QMOCK_NEWMAN_HPP
#define QMOCK_NEWMAN_HPP

#include "qmock/congruence.hpp"
#include "qmock/series.hpp"

#include <string>
#include <vector>

namespace qmock {

/* a(n) = [q^n] f_1^4 f_2. */
Series a_series(long trunc);

/* Per-prime bundle:
 *   r = a((p^2-1)/4) + (-1)^{(p-1)/2} p ((p^2-1)/4 / p)_L, s = p^3,
 *   nu = 2/4/8 according as r == 0 (mod 8), r == 4 (mod 8), r == 2 (mod 4),
 *   g, h = the nu-indexed polynomials in r and s.
 * h(p) == 0 (mod 8) always; prime_data asserts it. */
struct PrimeData {
	long p = 0;
	Coeff r, s;
	int nu = 0;
	Coeff g, h;
};

/* Needs a up to (p^2-1)/4. Throws if r is odd (nu would be undefined). */
PrimeData prime_data(long p, const Series& a);

/* gamma(n) = a((p^2-1)/4) + (-1)^{(p-1)/2} p ((t/p)_L - ((t-n)/p)_L),
 * t = (p^2-1)/4, the multiplier in the three-term a(n) identity. */
Coeff gamma_factor(long n, long p, const Series& a);

/* a(p^2 n + (p^2-1)/4) = gamma(n) a(n) - p^3 a((n - (p^2-1)/4)/p^2),
 * with a(x) = 0 whenever x is not a nonnegative integer. Exact equality,
 * not merely mod 8. Needs a up to p^2 n_max + (p^2-1)/4. */
ClaimReport verify_newman(long p, long n_max, const Series& a);

/* The n -> p^2 n + (p^2-1)/4 specialization
 * a(p^4 n + (p^4-1)/4) = r a(p^2 n + (p^2-1)/4) - s a(n), cross-checked
 * against a direct gamma evaluation along the same indices. */
ClaimReport verify_newman_specialized(long p, long n_max, const Series& a);

struct UVState {
	long k = 0;
	Coeff u, v;
};

/* U_0 = 0, U_1 = 1, V_0 = 1, V_1 = 0, then X_k = r X_{k-1} - s X_{k-2}. */
std::vector<UVState> uv_sequence(long p, long k_max, const Series& a);

/* a(p^{2k} n + (p^{2k}-1)/4) = U_k a(p^2 n + (p^2-1)/4) + V_k a(n). */
ClaimReport verify_lemma_71(long p, long k_max, long n_max, const Series& a);

/* r U_{nu(k+1)-1} + V_{nu(k+1)-1} == 0 (mod 8) for k <= k_max, together
 * with the closed form h(p) = r U_{nu-1} + V_{nu-1}. */
ClaimReport verify_lemma_72(long p, long k_max, const Series& a);

/* U_{nu k} == 0 and V_{nu k} == g^k (mod 8) for k <= k_max. */
ClaimReport verify_lemma_73(long p, long k_max, const Series& a);

/* The mod-72 reduction b(18n+4) == 9 a(n) (mod 72) plus the two layers of
 * the 36 g^k theorem at the smallest reachable indices:
 *   B: a(p^{2nu(k+1)-1} n + (p^{2nu(k+1)}-1)/4) == 0 (mod 8), p coprime n
 *      (k = 0; for p = 3 this is a(2187n+1640))
 *   C: a(p^{2nu k} + (p^{2nu k}-1)/4) == 4 g^k (mod 8) for k = 0, 1. */
std::vector<ClaimReport> verify_nt1(long p, long n_max_reduction, long n_max_family,
                                    const Series& a, const BContext& ctx);

/* Base congruence a(6n+4) == 0 (mod 8) by direct enumeration (bounded
 * verification, not a modular-forms certificate), and its k = 0
 * consequence b(108n+76) == 0 (mod 72). */
std::vector<ClaimReport> verify_nt3(long n_max_base, long n_max_b, const Series& a,
                                    const BContext& ctx);

/* For a(m) == 0 (mod 8): a(m n^2 + (n^2-1)/4) == 0 (mod 8) for odd n
 * coprime to 2 * (square-full part of 4m+1). Inadmissible n are skipped
 * with a note. */
ClaimReport verify_nt2(long m, const std::vector<long>& n_list, const Series& a);

/* The listed a-progressions mod 8 (9n+5, 9n+8, 10n+4, 10n+8, 14n+4,
 * 14n+8, 14n+10). */
std::vector<ClaimReport> verify_a_progressions(long n_max, const Series& a);

/* Scan m <= m_max with a(m) == 0 (mod 8): factor 4m+3 by trial division,
 * take g = its square-full part, and test every odd n coprime to 2g with
 * m n^2 + (n^2-1)/4 inside the series budget. Counterexamples are
 * collected, not suppressed: the first one appears at m = 31, n = 5
 * (a(781) = 484). */
struct ScanResult {
	long m_max = 0;
	long candidates = 0; /* m values with a(m) == 0 (mod 8) */
	long instances = 0;  /* (m, n) pairs tested */
	std::vector<std::pair<long, long>> counterexamples;
};
ScanResult conjecture_scan(long m_max, const Series& a);

/* Square-full part of x: product of p^e over prime powers p^e || x, e >= 2. */
long squarefull_part(long x);

} // namespace qmock

#endif
