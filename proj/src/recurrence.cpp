#include "qmock/recurrence.hpp"

#include "qmock/eta.hpp"

#include <sstream>
#include <stdexcept>

namespace qmock {

Coeff rec_eval(const Order2Rec& rec, long alpha) {
	if (alpha == 0) return rec.init0;
	if (alpha == 1) return rec.init1;
	Coeff prev = rec.init0, cur = rec.init1;
	for (long k = 2; k <= alpha; ++k) {
		Coeff next = rec.coeff1 * cur + rec.coeff2 * prev;
		prev = std::move(cur);
		cur = std::move(next);
	}
	return cur;
}

std::vector<Coeff> rec_prefix(const Order2Rec& rec, long upto) {
	std::vector<Coeff> v;
	v.reserve(static_cast<size_t>(upto) + 1);
	v.push_back(rec.init0);
	if (upto >= 1) v.push_back(rec.init1);
	for (long k = 2; k <= upto; ++k)
		v.push_back(rec.coeff1 * v[k - 1] + rec.coeff2 * v[k - 2]);
	return v;
}

std::optional<long> rank_of_system(const SequenceSystem& sys, long m, long cutoff) {
	if (sys.members.empty()) return 0; /* empty system has rank 0 by convention */
	if (m < 2) throw std::invalid_argument("rank modulus must be >= 2");
	if (cutoff < 1) throw std::invalid_argument("rank cutoff must be >= 1");
	/* march all members in lockstep mod m */
	struct State {
		Coeff c1, c2, prev, cur;
	};
	std::vector<State> st;
	for (const Order2Rec& r : sys.members) {
		State s;
		s.c1 = r.coeff1 % m;
		s.c2 = r.coeff2 % m;
		s.prev = r.init0 % m;
		s.cur = r.init1 % m;
		st.push_back(std::move(s));
	}
	auto all_zero_at = [&](bool first) {
		for (const State& s : st)
			if ((first ? s.prev : s.cur) % m != 0) return false;
		return true;
	};
	if (all_zero_at(true)) return 0;
	for (long alpha = 1; alpha <= cutoff; ++alpha) {
		if (all_zero_at(false)) return alpha;
		for (State& s : st) {
			Coeff next = (s.c1 * s.cur + s.c2 * s.prev) % m;
			s.prev = std::move(s.cur);
			s.cur = std::move(next);
		}
	}
	return std::nullopt;
}

namespace {

Table1 build_table1() {
	Table1 t;
	Coeff x7 = 66, y7 = -3125;         /* y(7) = -5^5 */
	Coeff s7 = -176, t7 = -16807;      /* t(7) = -7^5 */
	Coeff u7 = -658, v7 = -371293;     /* v(7) = -13^5 */
	t.A7 = {"A7", x7, y7, 125, 5125};
	t.B71 = {"B7,1", x7, y7, 14, 924};
	t.C7 = {"C7", s7, t7, 0, -16807};
	t.D71 = {"D7,1", s7, t7, 49, -8624};
	t.D72 = {"D7,2", s7, t7, 1, -176};
	t.E7 = {"E7", u7, v7, -2197, 1074333}; /* E7(0) = -13^3 */
	t.F71 = {"F7,1", u7, v7, 0, 0};
	t.F72 = {"F7,2", u7, v7, 364, -239512};
	t.F73 = {"F7,3", u7, v7, 98, -64484};
	return t;
}

} // namespace

const Table1& table1() {
	static const Table1 t = build_table1();
	return t;
}

Table1 parse_table1(std::string_view text) {
	/* format: one "label coeff1 coeff2 init0 init1" line per sequence,
	 * '#' comments and blank lines ignored */
	Table1 t;
	std::istringstream in{std::string(text)};
	std::string line;
	int seen = 0;
	while (std::getline(in, line)) {
		size_t h = line.find('#');
		if (h != std::string::npos) line.erase(h);
		std::istringstream ls(line);
		std::string label, c1, c2, i0, i1;
		if (!(ls >> label >> c1 >> c2 >> i0 >> i1)) {
			if (!label.empty())
				throw std::invalid_argument("table line needs 5 fields: " + line);
			continue;
		}
		Order2Rec rec{label, Coeff(c1), Coeff(c2), Coeff(i0), Coeff(i1)};
		if (label == "A7") t.A7 = rec;
		else if (label == "B7,1") t.B71 = rec;
		else if (label == "C7") t.C7 = rec;
		else if (label == "D7,1") t.D71 = rec;
		else if (label == "D7,2") t.D72 = rec;
		else if (label == "E7") t.E7 = rec;
		else if (label == "F7,1") t.F71 = rec;
		else if (label == "F7,2") t.F72 = rec;
		else if (label == "F7,3") t.F73 = rec;
		else throw std::invalid_argument("unknown sequence label: " + label);
		++seen;
	}
	if (seen != 9) throw std::invalid_argument("table must define exactly 9 sequences");
	return t;
}

RankTriple table1_ranks(long m, long cutoff) {
	const Table1& t = table1();
	RankTriple r;
	r.r1 = rank_of_system({"B7", {t.B71}}, m, cutoff);
	r.r2 = rank_of_system({"D7", {t.D71, t.D72}}, m, cutoff);
	r.r3 = rank_of_system({"F7", {t.F71, t.F72, t.F73}}, m, cutoff);
	return r;
}

SequenceSystem example_system_f12() {
	return {"F1F2", {{"F1", 2, 1, 0, 1}, {"F2", 1, -3, 1, 0}}};
}

E1Report verify_e1() {
	const Table1& t = table1();
	E1Report rep;
	RankTriple ranks = table1_ranks(9);
	if (!ranks.r1 || !ranks.r2 || !ranks.r3) {
		rep.note = "a companion system has no rank mod 9 below the cutoff";
		return rep;
	}
	auto mod9 = [](const Coeff& v) {
		Coeff r = v % 9;
		if (r < 0) r += 9;
		return r.get_si();
	};
	long a_rank = mod9(rec_eval(t.A7, *ranks.r1));
	long c_rank = mod9(rec_eval(t.C7, *ranks.r2));
	long e_rank = mod9(rec_eval(t.E7, *ranks.r3));
	rep.holds_at_ranks = (a_rank == 1 && c_rank == 8 && e_rank == 1);
	rep.a7_at_printed = mod9(rec_eval(t.A7, 12));
	rep.c7_at_printed = mod9(rec_eval(t.C7, 12));
	rep.e7_at_printed = mod9(rec_eval(t.E7, 12));
	rep.printed_index_matches =
	    (rep.a7_at_printed == 1 && rep.c7_at_printed == 8 && rep.e7_at_printed == 1);
	if (!rep.printed_index_matches)
		rep.note = "printed index 12 gives (" + std::to_string(rep.a7_at_printed) + "," +
		           std::to_string(rep.c7_at_printed) + "," +
		           std::to_string(rep.e7_at_printed) +
		           ") mod 9; the power laws need the values at the ranks (5,8,8), "
		           "which are (1,8,1) as required -- data-vs-source mismatch at "
		           "index 12, reported verbatim";
	return rep;
}

std::vector<ClaimReport> verify_f17(long n_max, const BContext& ctx) {
	std::vector<ClaimReport> out;
	Series a7 = pow(euler_f(1, std::max(n_max, 12L)), 7);
	{
		ClaimReport rep;
		rep.id = "b12n3-reduction";
		rep.source = "b(12n+3) == 6 a7(n) (mod 54), a7(n) = [q^n] f_1^7";
		rep.holds = true;
		for (long n = 0; n <= n_max; ++n) {
			if (!ctx.in_budget(12 * n + 3)) {
				rep.note = "budget limited to n <= " + std::to_string(n - 1);
				break;
			}
			++rep.checked_instances;
			if ((ctx.b(12 * n + 3) - 6 * a7[n]) % 54 != 0) {
				rep.holds = false;
				rep.counterexamples.push_back(n);
			}
		}
		out.push_back(rep);
	}
	{
		ClaimReport rep;
		rep.id = "b3-base-case";
		rep.source = "alpha = 0 base case: b(3) == 6 (mod 54)";
		rep.checked_instances = 1;
		rep.holds = (ctx.b(3) - 6) % 54 == 0;
		if (!rep.holds) rep.counterexamples.push_back(0);
		out.push_back(rep);
	}
	{
		ClaimReport rep;
		rep.id = "a7-12-mod9";
		rep.source = "a7(12) == 0 (mod 9), the seed of the power-law families";
		rep.checked_instances = 1;
		rep.holds = a7[12] % 9 == 0;
		out.push_back(rep);
	}
	{
		ClaimReport rep;
		rep.id = "power-law-progressions";
		rep.source = "alpha >= 1 progressions (indices >= 5^11)";
		rep.holds = true;
		rep.note = "implied, not directly enumerated: arguments exceed any direct "
		           "series budget; follows from the b(12n+3) reduction and the "
		           "sequence layer";
		out.push_back(rep);
	}
	return out;
}

} // namespace qmock
