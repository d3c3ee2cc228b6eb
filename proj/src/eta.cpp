#include "qmock/eta.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qmock {

Series expand(const EtaQuotient& e, long trunc) {
	for (const auto& [m, ex] : e.terms) {
		if (m < 1) throw std::invalid_argument("eta quotient scale must be >= 1");
		if (ex == 0) throw std::invalid_argument("eta quotient stores no zero exponents");
	}
	if (e.qshift < 0) throw std::invalid_argument("eta quotient q-shift must be >= 0");
	if (e.qshift > trunc) return Series(trunc);
	Series s = Series::monomial(e.scalar, e.qshift, trunc);
	for (const auto& [m, ex] : e.terms) {
		Series f = euler_f(m, trunc);
		for (long i = 0; i < (ex > 0 ? ex : -ex); ++i)
			s = (ex > 0) ? mul(s, f) : div_exact_unit(s, f);
	}
	return s;
}

FitResult fit(const Series& s, long max_scale) {
	long t = s.order();
	if (t < 0) throw std::invalid_argument("fit requires a nonzero series");
	FitResult out;
	out.quotient.scalar = s[t];
	out.quotient.qshift = t;

	long n = s.trunc() - t;
	Series r(n);
	for (long i = 0; i <= n; ++i) {
		Coeff q, rem;
		mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), s[i + t].get_mpz_t(),
		            s[t].get_mpz_t());
		if (rem != 0) {
			out.obstruction_index = i + t;
			out.reason = "leading coefficient does not divide the series";
			return out;
		}
		r.coeff(i) = q;
	}

	for (long m = 1; m <= std::min(max_scale, n); ++m) {
		/* residual = 1 - e_m q^m + O(q^{m+1}) forces the exponent */
		if (!r[m].fits_slong_p()) {
			out.obstruction_index = m + t;
			out.reason = "residual coefficient out of exponent range";
			return out;
		}
		long e = -static_cast<long>(mpz_get_si(r[m].get_mpz_t()));
		if (e == 0) continue;
		Series f = euler_f(m, n);
		for (long i = 0; i < (e > 0 ? e : -e); ++i)
			r = (e > 0) ? div_exact_unit(r, f) : mul(r, f);
		out.quotient.terms[m] = e;
	}

	for (long i = 1; i <= n; ++i) {
		if (r[i] != 0) {
			out.obstruction_index = i + t;
			out.reason = "residual nonzero beyond max scale";
			out.quotient = EtaQuotient{};
			return out;
		}
	}
	out.ok = true;
	return out;
}

IdentityReport compare_series(const Series& lhs, const Series& rhs, long trunc) {
	if (trunc > lhs.trunc() || trunc > rhs.trunc())
		throw std::invalid_argument("comparison range exceeds a series truncation");
	IdentityReport rep;
	rep.checked_to = trunc;
	for (long i = 0; i <= trunc; ++i) {
		if (lhs[i] != rhs[i]) {
			rep.first_mismatch = i;
			return rep;
		}
	}
	rep.holds = true;
	return rep;
}

IdentityReport verify_eta_identity(const Series& lhs, const EtaQuotient& rhs, long trunc) {
	if (trunc > lhs.trunc())
		throw std::invalid_argument("verification range exceeds lhs truncation");
	return compare_series(lhs, expand(rhs, trunc), trunc);
}

std::string to_text(const EtaQuotient& e) {
	std::ostringstream out;
	out << e.scalar.get_str();
	if (e.qshift > 0) out << " * q^" << e.qshift;
	/* two passes: positive exponents, then negative */
	std::ostringstream body;
	for (const auto& [m, ex] : e.terms)
		if (ex > 0) body << " f" << m << '^' << ex;
	for (const auto& [m, ex] : e.terms)
		if (ex < 0) body << " f" << m << '^' << ex;
	std::string b = body.str();
	if (!b.empty()) out << " *" << b;
	return out.str();
}

namespace {

long parse_long(std::string_view tok, const char* what) {
	long v = 0;
	auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
	if (ec != std::errc() || p != tok.data() + tok.size())
		throw std::invalid_argument(std::string("eta text: bad ") + what + " '" +
		                            std::string(tok) + "'");
	return v;
}

} // namespace

EtaQuotient eta_from_text(std::string_view text) {
	/* grammar: scalar ( '*' (q^T | fM^E | fM) )*, '*' separators optional */
	EtaQuotient e;
	std::vector<std::string> toks;
	std::string cur;
	for (char ch : text) {
		if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
			if (!cur.empty()) { toks.push_back(cur); cur.clear(); }
		} else {
			cur.push_back(ch);
		}
	}
	if (!cur.empty()) toks.push_back(cur);
	if (toks.empty()) throw std::invalid_argument("eta text: empty input");

	size_t start = 0;
	if (toks[0][0] == 'f' || toks[0][0] == 'q') {
		e.scalar = 1; /* scalar omitted */
	} else {
		if (e.scalar.set_str(toks[0], 10) != 0)
			throw std::invalid_argument("eta text: bad scalar '" + toks[0] + "'");
		start = 1;
	}
	for (size_t i = start; i < toks.size(); ++i) {
		const std::string& tk = toks[i];
		if (tk[0] == 'q') {
			if (tk.size() < 3 || tk[1] != '^')
				throw std::invalid_argument("eta text: expected q^T, got '" + tk + "'");
			long t = parse_long(std::string_view(tk).substr(2), "q exponent");
			if (t < 0) throw std::invalid_argument("eta text: q exponent must be >= 0");
			e.qshift += t;
		} else if (tk[0] == 'f') {
			size_t caret = tk.find('^');
			std::string_view scale_tok =
			    std::string_view(tk).substr(1, caret == std::string::npos
			                                       ? std::string::npos
			                                       : caret - 1);
			long m = parse_long(scale_tok, "scale");
			if (m < 1)
				throw std::invalid_argument("eta text: scale must be >= 1 in '" + tk + "'");
			long ex = 1;
			if (caret != std::string::npos)
				ex = parse_long(std::string_view(tk).substr(caret + 1), "exponent");
			long merged = e.terms.count(m) ? e.terms[m] + ex : ex;
			if (merged == 0) e.terms.erase(m);
			else e.terms[m] = merged;
		} else {
			throw std::invalid_argument("eta text: unexpected token '" + tk + "'");
		}
	}
	return e;
}

} // namespace qmock
