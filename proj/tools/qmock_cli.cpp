#include "qmock/eta.hpp"
#include "qmock/mock.hpp"
#include "qmock/newman.hpp"
#include "qmock/recurrence.hpp"
#include "qmock/suites.hpp"
#include "qmock/theta.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

/* exit codes: 0 all claims hold, 1 at least one falsified, 2 usage/budget */
constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw std::invalid_argument("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

int emit_reports(std::vector<qmock::Report> reports, bool json, bool timing, long ms) {
	bool ok = true;
	for (qmock::Report& r : reports) {
		r.runtime_ms = timing ? ms : 0;
		ok = ok && r.all_hold();
	}
	if (json) {
		if (reports.size() == 1) std::cout << qmock::to_json(reports[0]);
		else std::cout << qmock::to_json(reports);
	} else {
		for (const qmock::Report& r : reports) std::cout << qmock::to_text(r);
		if (timing) std::cout << "runtime " << ms << " ms\n";
	}
	return ok ? kExitOk : kExitFalsified;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact q-series toolkit for the second order mock theta function B(q)"};
	app.require_subcommand(1);

	/* ---- expand ---- */
	std::string expand_spec;
	long expand_trunc = 100;
	CLI::App* cmd_expand = app.add_subcommand("expand", "expand an eta-quotient expression");
	cmd_expand->add_option("spec", expand_spec, "e.g. \"1 * f2^5 f1^-4\"")->required();
	cmd_expand->add_option("--trunc", expand_trunc, "truncation order");

	/* ---- fit ---- */
	std::string fit_file;
	long fit_max_scale = 24, fit_trunc = -1;
	CLI::App* cmd_fit = app.add_subcommand("fit", "fit an eta quotient to a series file");
	cmd_fit->add_option("file", fit_file, "series text file (n<TAB>coefficient lines)")
	    ->required();
	cmd_fit->add_option("--max-scale", fit_max_scale, "largest scale to try");
	cmd_fit->add_option("--trunc", fit_trunc, "override the series truncation");

	/* ---- bcoeffs ---- */
	long bc_trunc = 1000, bc_mod = 0;
	std::string bc_prog;
	CLI::App* cmd_b = app.add_subcommand("bcoeffs", "emit coefficients of B(q)");
	cmd_b->add_option("--trunc", bc_trunc, "truncation order");
	cmd_b->add_option("--progression", bc_prog, "extract subsequence A,B");
	cmd_b->add_option("--mod", bc_mod, "reduce coefficients mod M");

	/* ---- verify ---- */
	std::string vf_suite;
	bool vf_json = false, vf_timing = false;
	long vf_trunc = 400, vf_raw = 5000, vf_even = 20000, vf_a = 100000, vf_scan = 500;
	long vf_p = 0, vf_l = 0, vf_kmax = 1, vf_nmax = 200;
	unsigned long vf_seed = 12345;
	CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
	cmd_verify
	    ->add_option("--suite", vf_suite,
	                 "identities|dissections|fixed|families|newman|rank|all")
	    ->required();
	cmd_verify->add_flag("--json", vf_json, "JSON report on stdout");
	cmd_verify->add_flag("--timing", vf_timing, "include wall time (breaks byte determinism)");
	cmd_verify->add_option("--trunc", vf_trunc, "identity/dissection truncation");
	cmd_verify->add_option("--raw-budget", vf_raw, "raw b(n) series truncation");
	cmd_verify->add_option("--even-budget", vf_even, "b(2n) expansion truncation");
	cmd_verify->add_option("--a-budget", vf_a, "a(n) series truncation");
	cmd_verify->add_option("--scan-max", vf_scan, "conjecture scan bound on m");
	cmd_verify->add_option("--seed", vf_seed, "seed for the fit round-trip cases");
	cmd_verify->add_option("--p", vf_p, "restrict the families suite to one prime");
	cmd_verify->add_option("--l", vf_l, "restrict the families suite to one residue");
	cmd_verify->add_option("--kmax", vf_kmax, "family iteration depth");
	cmd_verify->add_option("--nmax", vf_nmax, "family sweep bound");

	/* ---- newman ---- */
	std::string nm_suite;
	long nm_p = 3, nm_kmax = 50, nm_nmax = 200, nm_m = 31, nm_a_budget = 100000;
	bool nm_json = false;
	CLI::App* cmd_newman = app.add_subcommand("newman", "a(n) = [q^n] f1^4 f2 layer checks");
	cmd_newman->add_option("--suite", nm_suite, "identity|lemmas|nt1|nt3|nt2|scan")->required();
	cmd_newman->add_option("--p", nm_p, "prime parameter");
	cmd_newman->add_option("--kmax", nm_kmax, "recurrence depth");
	cmd_newman->add_option("--nmax", nm_nmax, "sweep bound");
	cmd_newman->add_option("--m", nm_m, "square-family base m");
	cmd_newman->add_option("--a-budget", nm_a_budget, "a(n) series truncation");
	cmd_newman->add_flag("--json", nm_json, "JSON report on stdout");

	/* ---- rank ---- */
	std::string rk_system = "f12-example", rk_table;
	long rk_mod = 2, rk_cutoff = 10000;
	CLI::App* cmd_rank = app.add_subcommand("rank", "rank of a recurrence system");
	cmd_rank->add_option("--system", rk_system, "f12-example|B7|D7|F7");
	cmd_rank->add_option("--mod", rk_mod, "modulus")->required();
	cmd_rank->add_option("--cutoff", rk_cutoff, "search bound");
	cmd_rank->add_option("--table", rk_table, "sequence data file overriding the built-in table");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		if (e.get_exit_code() == 0) return app.exit(e); /* --help */
		app.exit(e);
		return kExitUsage;
	}

	try {
		if (cmd_expand->parsed()) {
			qmock::EtaQuotient e = qmock::eta_from_text(expand_spec);
			std::cout << qmock::to_text(qmock::expand(e, expand_trunc));
			return kExitOk;
		}

		if (cmd_fit->parsed()) {
			qmock::Series s = qmock::series_from_text(read_file(fit_file), fit_trunc);
			qmock::FitResult f = qmock::fit(s, fit_max_scale);
			if (f.ok) {
				std::cout << qmock::to_text(f.quotient) << "\n";
				return kExitOk;
			}
			std::cout << "no-eta-quotient-found: first obstruction at n="
			          << f.obstruction_index << " (" << f.reason << ")\n";
			return kExitFalsified;
		}

		if (cmd_b->parsed()) {
			qmock::Series s = qmock::b_series(bc_trunc);
			if (!bc_prog.empty()) {
				long a = 0, b = 0;
				if (std::sscanf(bc_prog.c_str(), "%ld,%ld", &a, &b) != 2 || a < 1 || b < 0)
					throw std::invalid_argument("--progression expects A,B with A >= 1");
				s = qmock::extract_progression(s, {a, b});
			}
			if (bc_mod > 0) s = qmock::reduce_mod(s, bc_mod);
			std::cout << qmock::to_text(s);
			return kExitOk;
		}

		if (cmd_verify->parsed()) {
			auto t0 = std::chrono::steady_clock::now();
			std::vector<qmock::Report> reports;
			if (vf_suite == "identities") {
				reports.push_back(qmock::run_identities_suite(vf_trunc, vf_seed));
			} else if (vf_suite == "dissections") {
				reports.push_back(qmock::run_dissections_suite(vf_trunc, 300));
			} else if (vf_suite == "fixed") {
				qmock::BContext ctx(vf_raw, vf_even);
				reports.push_back(qmock::run_fixed_suite(ctx));
			} else if (vf_suite == "families") {
				qmock::BContext ctx(vf_raw, vf_even);
				if (vf_p == 0) {
					reports.push_back(qmock::run_families_suite(ctx));
				} else {
					/* single-parameter run: every family that admits (p, l) */
					qmock::Report rep;
					rep.suite = "families";
					if (vf_p >= 5)
						for (long k = 0; k <= vf_kmax; ++k)
							rep.items.push_back(qmock::to_item(
							    qmock::verify_family_mod2(vf_p, k, vf_nmax, ctx)));
					long lo = (vf_l > 0) ? vf_l : 1;
					long hi = (vf_l > 0) ? vf_l : vf_p - 1;
					for (long ell = lo; ell <= hi; ++ell) {
						for (auto& c : qmock::verify_family_mod4(vf_p, ell, vf_kmax,
						                                         vf_nmax, ctx))
							rep.items.push_back(qmock::to_item(c));
						for (auto& c : qmock::verify_family_mod8(vf_p, ell, vf_kmax,
						                                         vf_nmax, ctx))
							rep.items.push_back(qmock::to_item(c));
						if (vf_p >= 5)
							for (auto& c : qmock::verify_family_mod36(vf_p, ell, vf_kmax,
							                                          vf_nmax, ctx))
								rep.items.push_back(qmock::to_item(c));
					}
					reports.push_back(std::move(rep));
				}
			} else if (vf_suite == "newman") {
				qmock::SuiteContext ctx(vf_raw, vf_even, vf_a);
				reports.push_back(qmock::run_newman_suite(ctx, vf_scan));
			} else if (vf_suite == "rank") {
				qmock::BContext ctx(vf_raw, vf_even);
				reports.push_back(qmock::run_rank_suite(ctx));
			} else if (vf_suite == "all") {
				qmock::SuiteContext ctx(vf_raw, vf_even, vf_a);
				reports = qmock::run_all_suites(ctx);
			} else {
				std::cerr << "unknown suite '" << vf_suite << "'\n";
				return kExitUsage;
			}
			long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
			              std::chrono::steady_clock::now() - t0)
			              .count();
			return emit_reports(std::move(reports), vf_json, vf_timing, ms);
		}

		if (cmd_newman->parsed()) {
			qmock::Series a = qmock::a_series(nm_a_budget);
			qmock::Report rep;
			rep.suite = "newman-" + nm_suite;
			if (nm_suite == "identity") {
				rep.items.push_back(qmock::to_item(qmock::verify_newman(nm_p, nm_nmax, a)));
				rep.items.push_back(
				    qmock::to_item(qmock::verify_newman_specialized(nm_p, nm_nmax / 4, a)));
			} else if (nm_suite == "lemmas") {
				rep.items.push_back(qmock::to_item(qmock::verify_lemma_72(nm_p, nm_kmax, a)));
				rep.items.push_back(qmock::to_item(qmock::verify_lemma_73(nm_p, nm_kmax, a)));
			} else if (nm_suite == "nt1") {
				qmock::BContext ctx;
				for (auto& c : qmock::verify_nt1(nm_p, 1000, 40, a, ctx))
					rep.items.push_back(qmock::to_item(c));
			} else if (nm_suite == "nt3") {
				qmock::BContext ctx;
				for (auto& c : qmock::verify_nt3(2000, 100, a, ctx))
					rep.items.push_back(qmock::to_item(c));
			} else if (nm_suite == "nt2") {
				rep.items.push_back(
				    qmock::to_item(qmock::verify_nt2(nm_m, {1, 3, 7, 9, 11, 13}, a)));
			} else if (nm_suite == "scan") {
				qmock::ScanResult scan = qmock::conjecture_scan(nm_nmax > 0 ? nm_nmax : 500, a);
				qmock::ReportItem it;
				it.id = "square-family-conjecture-scan";
				it.source = "scan to m <= " + std::to_string(scan.m_max);
				it.checked_to = scan.instances;
				it.holds = scan.counterexamples.empty();
				for (auto& [m, n] : scan.counterexamples) {
					it.counterexamples.push_back(m);
					it.counterexamples.push_back(n);
				}
				if (!it.holds) it.notes = "counterexamples listed as (m, n) pairs";
				rep.items.push_back(it);
			} else {
				std::cerr << "unknown newman suite '" << nm_suite << "'\n";
				return kExitUsage;
			}
			return emit_reports({rep}, nm_json, false, 0);
		}

		if (cmd_rank->parsed()) {
			qmock::Table1 t =
			    rk_table.empty() ? qmock::table1() : qmock::parse_table1(read_file(rk_table));
			qmock::SequenceSystem sys;
			if (rk_system == "f12-example") sys = qmock::example_system_f12();
			else if (rk_system == "B7") sys = {"B7", {t.B71}};
			else if (rk_system == "D7") sys = {"D7", {t.D71, t.D72}};
			else if (rk_system == "F7") sys = {"F7", {t.F71, t.F72, t.F73}};
			else {
				std::cerr << "unknown system '" << rk_system << "'\n";
				return kExitUsage;
			}
			auto r = qmock::rank_of_system(sys, rk_mod, rk_cutoff);
			if (r) {
				std::cout << "rank(" << sys.label << " mod " << rk_mod << ") = " << *r << "\n";
				return kExitOk;
			}
			std::cout << "not-found: no index <= " << rk_cutoff << " clears " << sys.label
			          << " mod " << rk_mod << "\n";
			return kExitFalsified;
		}
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
