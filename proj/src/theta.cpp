#include "qmock/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace qmock {

bool is_prime(long n) {
	if (n < 2) return false;
	for (long d = 2; d * d <= n; ++d)
		if (n % d == 0) return false;
	return true;
}

namespace {

long isqrt_floor(long x) {
	if (x < 0) return -1;
	long r = static_cast<long>(std::sqrt(static_cast<double>(x)));
	while (r * r > x) --r;
	while ((r + 1) * (r + 1) <= x) ++r;
	return r;
}

/* Largest n with A*n^2 + B*n <= 2T and smallest such n (A >= 1). */
void quadratic_range(long A, long B, long T, long& n_lo, long& n_hi) {
	long disc = B * B + 8 * A * T;
	long root = isqrt_floor(disc);
	n_hi = (-B + root) / (2 * A);
	while (A * (n_hi + 1) * (n_hi + 1) + B * (n_hi + 1) <= 2 * T) ++n_hi;
	while (A * n_hi * n_hi + B * n_hi > 2 * T) --n_hi;
	n_lo = -((B + root) / (2 * A)) - 1;
	while (A * n_lo * n_lo + B * n_lo > 2 * T) ++n_lo;
	while (A * (n_lo - 1) * (n_lo - 1) + B * (n_lo - 1) <= 2 * T) --n_lo;
}

int sign_pow(int sign, long k) {
	return (sign == 1 || k % 2 == 0) ? 1 : -1;
}

} // namespace

Series theta_f(MonomialArg a, MonomialArg b, long trunc) {
	if ((a.sign != 1 && a.sign != -1) || (b.sign != 1 && b.sign != -1))
		throw std::invalid_argument("theta_f argument signs must be +1 or -1");
	if (a.exponent < 0 || b.exponent < 0)
		throw std::invalid_argument("theta_f argument exponents must be >= 0");
	long A = a.exponent + b.exponent;
	if (A < 1)
		throw std::invalid_argument("theta_f diverges: combined exponent must be >= 1");
	long B = a.exponent - b.exponent;

	Series s(trunc);
	long n_lo, n_hi;
	quadratic_range(A, B, trunc, n_lo, n_hi);
	for (long n = n_lo; n <= n_hi; ++n) {
		long ta = n * (n + 1) / 2; /* exponent on a */
		long tb = n * (n - 1) / 2; /* exponent on b */
		long e = a.exponent * ta + b.exponent * tb;
		if (e > trunc) continue;
		s.coeff(e) += sign_pow(a.sign, ta) * sign_pow(b.sign, tb);
	}
	return s;
}

Series phi(long trunc) {
	return expand(EtaQuotient{1, 0, {{2, 5}, {1, -2}, {4, -2}}}, trunc);
}

Series psi(long trunc) {
	return expand(EtaQuotient{1, 0, {{2, 2}, {1, -1}}}, trunc);
}

Series psi_p_dissection(long p, long trunc, bool include_tail) {
	if (p == 2 || !is_prime(p))
		throw std::invalid_argument("psi_p_dissection requires an odd prime");
	Series out(trunc);
	for (long k = 0; k <= (p - 3) / 2; ++k) {
		long sh = (k * k + k) / 2;
		if (sh > trunc) break;
		Series part = theta_f({1, (p * p + (2 * k + 1) * p) / 2},
		                      {1, (p * p - (2 * k + 1) * p) / 2}, trunc - sh);
		out.add_shifted(part, sh);
	}
	if (include_tail) {
		long sh = (p * p - 1) / 8;
		if (sh <= trunc) {
			Series tail = dilate(psi((trunc - sh) / (p * p)), p * p, trunc - sh);
			out.add_shifted(tail, sh);
		}
	}
	return out;
}

Series fcube_p_dissection(long p, long trunc, bool include_tail) {
	if (p < 3 || !is_prime(p))
		throw std::invalid_argument("fcube_p_dissection requires a prime >= 3");
	Series acc(trunc);
	for (long k = 0; k < p; ++k) {
		if (k == (p - 1) / 2) continue;
		long base = (k * k + k) / 2;
		if (base > trunc) continue;
		/* exponent: base + p*n(p*n + 2k+1)/2 <= trunc */
		long n_lo, n_hi;
		quadratic_range(p * p, p * (2 * k + 1), trunc - base, n_lo, n_hi);
		for (long n = n_lo; n <= n_hi; ++n) {
			long e = base + p * n * (p * n + 2 * k + 1) / 2;
			if (e > trunc || e < 0) continue;
			long w = 2 * p * n + 2 * k + 1;
			acc.coeff(e) += ((k + n) % 2 == 0) ? w : -w;
		}
	}
	/* The (k,n) <-> (p-1-k, -n-1) pairing doubles every exponent, so the
	 * accumulated sum must be even coefficientwise before halving. */
	Series out(trunc);
	for (long i = 0; i <= trunc; ++i) {
		if (mpz_odd_p(acc[i].get_mpz_t()))
			throw std::logic_error("fcube_p_dissection: half-integer assembly");
		mpz_tdiv_q_2exp(out.coeff(i).get_mpz_t(), acc[i].get_mpz_t(), 1);
	}
	if (include_tail) {
		long sh = (p * p - 1) / 8;
		if (sh <= trunc) {
			Series tail = dilate(jacobi_cube((trunc - sh) / (p * p)), p * p, trunc - sh);
			Coeff w = ((p - 1) / 2 % 2 == 0) ? Coeff(p) : Coeff(-p);
			out.add_shifted(tail, sh, w);
		}
	}
	return out;
}

IdentityReport verify_hirschhorn(DissectionLemma id, long trunc) {
	Series lhs(trunc), rhs(trunc);
	switch (id) {
	case DissectionLemma::f3_over_f1cubed:
		lhs = expand(EtaQuotient{1, 0, {{3, 1}, {1, -3}}}, trunc);
		rhs = expand(EtaQuotient{1, 0, {{4, 6}, {6, 3}, {2, -9}, {12, -2}}}, trunc);
		rhs = add(rhs, expand(EtaQuotient{3, 1, {{4, 2}, {6, 1}, {12, 2}, {2, -7}}}, trunc));
		break;
	case DissectionLemma::f3sq_over_f1sq:
		lhs = expand(EtaQuotient{1, 0, {{3, 2}, {1, -2}}}, trunc);
		rhs = expand(
		    EtaQuotient{1, 0, {{4, 4}, {6, 1}, {12, 2}, {2, -5}, {8, -1}, {24, -1}}}, trunc);
		rhs = add(rhs, expand(EtaQuotient{2, 1,
		                                  {{4, 1}, {6, 2}, {8, 1}, {24, 1}, {2, -4}, {12, -1}}},
		                      trunc));
		break;
	case DissectionLemma::f2_over_f1sq:
		lhs = expand(EtaQuotient{1, 0, {{2, 1}, {1, -2}}}, trunc);
		rhs = expand(EtaQuotient{1, 0, {{6, 4}, {9, 6}, {3, -8}, {18, -3}}}, trunc);
		rhs = add(rhs, expand(EtaQuotient{2, 1, {{6, 3}, {9, 3}, {3, -7}}}, trunc));
		rhs = add(rhs, expand(EtaQuotient{4, 2, {{6, 2}, {18, 3}, {3, -6}}}, trunc));
		break;
	}
	return compare_series(lhs, rhs, trunc);
}

} // namespace qmock
