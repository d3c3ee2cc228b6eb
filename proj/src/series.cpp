#include "qmock/series.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qmock {

Series::Series(long trunc) : trunc_(trunc) {
	if (trunc < 0)
		throw std::invalid_argument("series truncation must be nonnegative");
	c_.resize(static_cast<size_t>(trunc) + 1);
}

Series Series::monomial(const Coeff& c, long t, long trunc) {
	if (t < 0)
		throw std::invalid_argument("monomial exponent must be nonnegative");
	if (t > trunc)
		throw std::invalid_argument("monomial exponent exceeds truncation");
	Series s(trunc);
	s.c_[static_cast<size_t>(t)] = c;
	return s;
}

long Series::nonzero_count() const {
	long n = 0;
	for (const Coeff& v : c_)
		if (mpz_sgn(v.get_mpz_t()) != 0) ++n;
	return n;
}

bool Series::is_zero() const { return order() < 0; }

long Series::order() const {
	for (long i = 0; i <= trunc_; ++i)
		if (mpz_sgn(c_[static_cast<size_t>(i)].get_mpz_t()) != 0) return i;
	return -1;
}

void Series::mul_factor(int sign, long m) {
	if (m < 1) throw std::invalid_argument("mul_factor requires m >= 1");
	/* (1 + s*q^m): new[i] = old[i] + s*old[i-m], top down. */
	if (sign > 0) {
		for (long i = trunc_; i >= m; --i)
			c_[static_cast<size_t>(i)] += c_[static_cast<size_t>(i - m)];
	} else {
		for (long i = trunc_; i >= m; --i)
			c_[static_cast<size_t>(i)] -= c_[static_cast<size_t>(i - m)];
	}
}

void Series::div_factor(int sign, long m) {
	if (m < 1) throw std::invalid_argument("div_factor requires m >= 1");
	/* r = s/(1 + sg*q^m) satisfies r[i] = s[i] - sg*r[i-m], bottom up. */
	if (sign > 0) {
		for (long i = m; i <= trunc_; ++i)
			c_[static_cast<size_t>(i)] -= c_[static_cast<size_t>(i - m)];
	} else {
		for (long i = m; i <= trunc_; ++i)
			c_[static_cast<size_t>(i)] += c_[static_cast<size_t>(i - m)];
	}
}

void Series::shift_up(long s) {
	if (s == 0) return;
	for (long i = trunc_; i >= s; --i)
		c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i - s)];
	for (long i = 0; i < std::min(s, trunc_ + 1); ++i)
		c_[static_cast<size_t>(i)] = 0;
}

void Series::add_shifted(const Series& src, long shift, const Coeff& scale) {
	long top = std::min(src.trunc_, trunc_ - shift);
	if (scale == 1) {
		for (long i = 0; i <= top; ++i)
			c_[static_cast<size_t>(i + shift)] += src.c_[static_cast<size_t>(i)];
	} else {
		for (long i = 0; i <= top; ++i)
			mpz_addmul(c_[static_cast<size_t>(i + shift)].get_mpz_t(),
			           src.c_[static_cast<size_t>(i)].get_mpz_t(), scale.get_mpz_t());
	}
}

void Series::negate_inplace() {
	for (Coeff& v : c_) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
}

Series add(const Series& a, const Series& b) {
	long n = std::min(a.trunc(), b.trunc());
	Series r(n);
	for (long i = 0; i <= n; ++i) r.coeff(i) = a[i] + b[i];
	return r;
}

Series sub(const Series& a, const Series& b) {
	long n = std::min(a.trunc(), b.trunc());
	Series r(n);
	for (long i = 0; i <= n; ++i) r.coeff(i) = a[i] - b[i];
	return r;
}

Series neg(const Series& a) {
	Series r = a;
	r.negate_inplace();
	return r;
}

Series scalar_mul(const Coeff& c, const Series& a) {
	Series r(a.trunc());
	for (long i = 0; i <= a.trunc(); ++i) r.coeff(i) = c * a[i];
	return r;
}

Series mul(const Series& x, const Series& y) {
	long n = std::min(x.trunc(), y.trunc());
	long nx = 0, ny = 0;
	for (long i = 0; i <= n; ++i) {
		if (mpz_sgn(x[i].get_mpz_t())) ++nx;
		if (mpz_sgn(y[i].get_mpz_t())) ++ny;
	}
	const Series& a = (nx <= ny) ? x : y;
	const Series& b = (nx <= ny) ? y : x;
	Series r(n);
	for (long i = 0; i <= n; ++i) {
		if (mpz_sgn(a[i].get_mpz_t()) == 0) continue;
		mpz_srcptr ai = a[i].get_mpz_t();
		long jmax = n - i;
		for (long j = 0; j <= jmax; ++j) {
			if (mpz_sgn(b[j].get_mpz_t()))
				mpz_addmul(r.coeff(i + j).get_mpz_t(), ai, b[j].get_mpz_t());
		}
	}
	return r;
}

Series div_exact_unit(const Series& a, const Series& b) {
	long n = std::min(a.trunc(), b.trunc());
	int c0 = 0;
	if (b[0] == 1) c0 = 1;
	else if (b[0] == -1) c0 = -1;
	else throw std::invalid_argument("division requires constant term +1 or -1");

	/* Collect nonzero divisor entries once; the triangular solve then costs
	 * O(N * nnz(b)), which keeps division by pentagonal series cheap. */
	std::vector<long> idx;
	for (long k = 1; k <= n; ++k)
		if (mpz_sgn(b[k].get_mpz_t())) idx.push_back(k);

	Series r(n);
	Coeff acc;
	for (long i = 0; i <= n; ++i) {
		acc = a[i];
		for (long k : idx) {
			if (k > i) break;
			mpz_submul(acc.get_mpz_t(), b[k].get_mpz_t(), r[i - k].get_mpz_t());
		}
		if (c0 < 0) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
		r.coeff(i) = acc;
	}
	return r;
}

Series invert(const Series& a) { return div_exact_unit(Series::one(a.trunc()), a); }

Series pow(const Series& a, long e) {
	if (e == 0) return Series::one(a.trunc());
	Series base = (e < 0) ? invert(a) : a;
	unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
	Series result = Series::one(a.trunc());
	while (k > 0) {
		if (k & 1) result = mul(result, base);
		k >>= 1;
		if (k) base = mul(base, base);
	}
	return result;
}

Series substitute_power(const Series& a, long m) {
	if (m < 1) throw std::invalid_argument("substitution power must be >= 1");
	Series r(a.trunc());
	for (long i = 0; i * m <= a.trunc(); ++i) r.coeff(i * m) = a[i];
	return r;
}

Series substitute_sign(const Series& a) {
	Series r = a;
	for (long i = 1; i <= a.trunc(); i += 2)
		mpz_neg(r.coeff(i).get_mpz_t(), r.coeff(i).get_mpz_t());
	return r;
}

Series dilate(const Series& a, long m, long trunc) {
	if (m < 1) throw std::invalid_argument("dilation scale must be >= 1");
	if (a.trunc() < trunc / m)
		throw std::invalid_argument("dilate: input series too short for target truncation");
	Series r(trunc);
	for (long i = 0; i * m <= trunc; ++i) r.coeff(i * m) = a[i];
	return r;
}

Series extract_progression(const Series& a, const Progression& p) {
	if (p.step < 1) throw std::invalid_argument("progression step must be >= 1");
	if (p.offset < 0) throw std::invalid_argument("progression offset must be >= 0");
	if (p.offset > a.trunc())
		throw std::invalid_argument("progression offset exceeds series truncation");
	long n = (a.trunc() - p.offset) / p.step;
	Series r(n);
	for (long i = 0; i <= n; ++i) r.coeff(i) = a[p.step * i + p.offset];
	return r;
}

Series reduce_mod(const Series& a, const Coeff& m) {
	if (m < 1) throw std::invalid_argument("modulus must be >= 1");
	Series r(a.trunc());
	for (long i = 0; i <= a.trunc(); ++i)
		mpz_mod(r.coeff(i).get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
	return r;
}

Series euler_f(long m, long trunc) {
	if (m < 1) throw std::invalid_argument("euler_f scale must be >= 1");
	Series s(trunc);
	s.coeff(0) = 1;
	for (long k = 1;; ++k) {
		/* generalized pentagonal exponents m*k(3k-1)/2 and m*k(3k+1)/2 */
		long e1 = m * (k * (3 * k - 1) / 2);
		long e2 = m * (k * (3 * k + 1) / 2);
		if (e1 > trunc) break;
		int sg = (k % 2 == 0) ? 1 : -1;
		s.coeff(e1) += sg;
		if (e2 <= trunc) s.coeff(e2) += sg;
	}
	return s;
}

Series jacobi_cube(long trunc) {
	Series s(trunc);
	for (long k = 0; k * (k + 1) / 2 <= trunc; ++k) {
		long c = 2 * k + 1;
		s.coeff(k * (k + 1) / 2) = (k % 2 == 0) ? c : -c;
	}
	return s;
}

Series finite_pochhammer(int sign, long offset, long step, long count, long trunc) {
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("finite_pochhammer sign must be +1 or -1");
	if (step < 1) throw std::invalid_argument("finite_pochhammer step must be >= 1");
	if (count < 0) throw std::invalid_argument("finite_pochhammer count must be >= 0");
	Series s = Series::one(trunc);
	for (long j = 0; j < count; ++j) {
		long e = offset + j * step;
		if (e > trunc) break; /* factor is 1 modulo the truncation */
		if (e == 0) {
			/* constant factor (1 - sign) */
			s = scalar_mul(1 - sign, s);
		} else {
			s.mul_factor(-sign, e);
		}
	}
	return s;
}

std::string to_text(const Series& a) {
	std::ostringstream out;
	for (long i = 0; i <= a.trunc(); ++i)
		if (mpz_sgn(a[i].get_mpz_t()) != 0)
			out << i << '\t' << a[i].get_str() << '\n';
	return out.str();
}

Series series_from_text(std::string_view text, long trunc) {
	std::vector<std::pair<long, Coeff>> entries;
	long max_n = 0;
	size_t pos = 0;
	long lineno = 0;
	while (pos < text.size()) {
		size_t eol = text.find('\n', pos);
		std::string_view line = text.substr(pos, eol == std::string_view::npos
		                                             ? std::string_view::npos
		                                             : eol - pos);
		pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
		++lineno;
		if (line.empty()) continue;
		size_t tab = line.find('\t');
		if (tab == std::string_view::npos)
			throw std::invalid_argument("series text line " + std::to_string(lineno) +
			                            ": expected n<TAB>coefficient");
		long n = 0;
		auto [p, ec] = std::from_chars(line.data(), line.data() + tab, n);
		if (ec != std::errc() || p != line.data() + tab || n < 0)
			throw std::invalid_argument("series text line " + std::to_string(lineno) +
			                            ": bad index");
		Coeff c;
		if (c.set_str(std::string(line.substr(tab + 1)), 10) != 0)
			throw std::invalid_argument("series text line " + std::to_string(lineno) +
			                            ": bad coefficient");
		entries.emplace_back(n, c);
		max_n = std::max(max_n, n);
	}
	long t = (trunc >= 0) ? trunc : max_n;
	Series s(t);
	for (const auto& [n, c] : entries)
		if (n <= t) s.coeff(n) = c;
	return s;
}

} // namespace qmock
