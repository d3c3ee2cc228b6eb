#ifndef QMOCK_SERIES_HPP
#define QMOCK_SERIES_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qmock {

/* Exact integer coefficient. Arbitrary precision throughout: the series in
 * this library reach coefficients of 50+ decimal digits well before q^3000,
 * and every verification is an exact integer statement. */
using Coeff = mpz_class;

/* Arithmetic progression step*n + offset, used both to index subsequences
 * and as a residue class in dissections. */
struct Progression {
	long step = 1;   /* >= 1 */
	long offset = 0; /* >= 0; < step when used as a residue class */
};

/* Truncated formal power series in q with exact integer coefficients.
 * A Series of truncation N stores the N+1 coefficients of q^0..q^N.
 *
 * Binary operations truncate the result at the smaller operand truncation.
 * Values are treated as immutable once built; the mutating members below
 * (mul_factor, div_factor, ...) exist for the O(N) incremental updates the
 * series generators rely on and are meant for local accumulator use. */
class Series {
public:
	explicit Series(long trunc);

	/* c * q^t, truncated at trunc. Throws std::invalid_argument if
	 * t > trunc: a monomial that would vanish entirely is almost always
	 * a budget mistake at the call site. */
	static Series monomial(const Coeff& c, long t, long trunc);
	static Series one(long trunc) { return monomial(1, 0, trunc); }

	long trunc() const { return trunc_; }
	const Coeff& operator[](long n) const { return c_[static_cast<size_t>(n)]; }
	Coeff& coeff(long n) { return c_[static_cast<size_t>(n)]; }

	long nonzero_count() const;
	bool is_zero() const;
	/* Smallest n with nonzero coefficient, or -1 for the zero series. */
	long order() const;

	bool operator==(const Series& other) const = default;

	/* In-place builders, all exact.
	 * mul_factor: multiply by (1 + sign*q^m), m >= 1.
	 * div_factor: divide by (1 + sign*q^m), m >= 1 (always exact).
	 * shift_up:   multiply by q^s, dropping overflowed terms. */
	void mul_factor(int sign, long m);
	void div_factor(int sign, long m);
	void shift_up(long s);
	void add_shifted(const Series& src, long shift, const Coeff& scale = 1);
	void negate_inplace();

private:
	long trunc_;
	std::vector<Coeff> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scalar_mul(const Coeff& c, const Series& a);

/* Exact Cauchy product, trunc = min of operand truncs. The outer loop runs
 * over the operand with fewer nonzero coefficients, so multiplying by a
 * pentagonal-support series costs O(N^1.5) instead of O(N^2). */
Series mul(const Series& a, const Series& b);

/* a / b for b with constant coefficient +1 or -1; exact by the triangular
 * recurrence (every division is by that unit). Throws on a non-unit. */
Series div_exact_unit(const Series& a, const Series& b);

/* Multiplicative inverse; constant term must be +1 or -1. */
Series invert(const Series& a);

/* Repeated-squaring power; pow(a,0) = 1; negative e inverts first. */
Series pow(const Series& a, long e);

/* q -> q^m. Coefficient of q^{mn} in the result is a[n]; trunc preserved. */
Series substitute_power(const Series& a, long m);

/* q -> -q: negate odd-index coefficients. */
Series substitute_sign(const Series& a);

/* Place a[n] at q^{mn} in a series truncated at trunc. Requires a to be
 * accurate to floor(trunc/m), i.e. a.trunc() >= floor(trunc/m). */
Series dilate(const Series& a, long m, long trunc);

/* result[n] = a[step*n + offset]; trunc = floor((a.trunc - offset)/step).
 * offset > a.trunc throws: an empty extraction is a budget mistake. */
Series extract_progression(const Series& a, const Progression& p);

/* Every coefficient replaced by its least nonnegative residue mod m >= 1. */
Series reduce_mod(const Series& a, const Coeff& m);

/* (q^m;q^m)_inf expanded by the pentagonal number theorem:
 * sum over k in Z of (-1)^k q^{m*k(3k-1)/2}. */
Series euler_f(long m, long trunc);

/* f_1^3 = sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}. */
Series jacobi_cube(long trunc);

/* prod_{j=0}^{count-1} (1 - sign*q^{offset + j*step}), truncated. */
Series finite_pochhammer(int sign, long offset, long step, long count, long trunc);

/* Text form: one "n<TAB>coefficient" line per nonzero coefficient,
 * ascending n, newline-terminated. parse accepts the same grammar; the
 * truncation of the parsed series is the largest index present unless
 * trunc >= 0 forces it. */
std::string to_text(const Series& a);
Series series_from_text(std::string_view text, long trunc = -1);

} // namespace qmock

#endif
