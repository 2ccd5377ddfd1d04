// Command-line front end: single-spec verdicts, table reproduction, the
// classical Alexander cross-check, branched-cover homology and a selftest.
// Exit codes: 0 clean verdict, 1 usage error, 2 internal inconsistency.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "slicesieve/homology.hpp"
#include "slicesieve/obstruct.hpp"

using json = nlohmann::ordered_json;
using namespace slicesieve;

namespace {

json integer_json(const Integer& v) {
    // int64 when it fits, decimal string otherwise
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json coeffs_json(const CanonicalPoly& c) {
    json arr = json::array();
    if (c.is_zero()) return arr;
    for (const Integer& v : c.coeffs()) arr.push_back(integer_json(v));
    return arr;
}

json coeffs_json(const LaurentPoly& p) {
    json arr = json::array();
    if (p.is_zero()) return arr;
    for (long e = 0; e <= p.degree(); ++e) arr.push_back(integer_json(p.coeff(e).get_num()));
    return arr;
}

json hypotheses_json(const HypothesisReport& hy) {
    return json{{"m_odd", hy.m_odd},
                {"p_divides_m", hy.p_divides_m},
                {"two_primitive_mod_p", hy.two_primitive_mod_p},
                {"p_coprime_to_band", hy.p_coprime_to_band},
                {"n_at_least_half_p", hy.n_at_least_half_p},
                {"not_exceptional_pair", hy.not_exceptional_pair},
                {"split_ok", hy.split_ok},
                {"all_pass", hy.all_pass()}};
}

json report_json(const ObstructionReport& r) {
    json j;
    j["spec"] = {{"n", r.n}, {"m", r.m}, {"p", r.p}, {"sign", r.sign > 0 ? "plus" : "minus"}};
    j["hypotheses"] = hypotheses_json(r.hypotheses);
    j["a"] = r.hypotheses.a;
    j["b"] = r.hypotheses.b;
    j["f"] = coeffs_json(r.f);
    j["g"] = coeffs_json(r.g);
    j["h"] = r.h ? coeffs_json(*r.h) : json(nullptr);
    j["numerator"] = coeffs_json(r.numerator);
    j["verdict"] = verdict_name(r.chain.verdict);
    j["chain"] = {{"lakatos", r.chain.lakatos_pass},
                  {"eisenstein", r.chain.eisenstein_pass},
                  {"f_divides_g", r.chain.f_divides_g},
                  {"descent", coeffs_json(r.chain.descent_poly)}};
    if (!r.chain.failing_stage.empty()) j["chain"]["failing_stage"] = r.chain.failing_stage;
    return j;
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot open output file " + output);
    out << text;
}

std::string render(const std::vector<long>& coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return LaurentPoly::from_coeffs(c).to_string();
}

struct SpecArgs {
    long n = 0;
    long m = 0;
    long p = 0;  // 0 = pick the default
    std::string sign = "plus";
    std::string format = "text";
    std::string strategy = "eval-interp";
    std::string mode = "both";
    std::string output;

    PretzelKnot knot() const { return PretzelKnot(n, m, sign == "plus" ? +1 : -1); }

    long prime() const {
        if (p != 0) return p;
        long d = default_prime(m);
        if (d == 0)
            throw std::invalid_argument(
                "no prime divisor of m has 2 as a primitive root; pass --p explicitly");
        return d;
    }
};

void add_spec_flags(CLI::App* cmd, SpecArgs& args, bool with_p) {
    cmd->add_option("--n", args.n, "half the first-band crossing count")->required();
    cmd->add_option("--m", args.m, "second-band crossing count (odd)")->required();
    if (with_p)
        cmd->add_option("--p", args.p,
                        "character prime (default: smallest prime divisor of m with 2 primitive)");
    cmd->add_option("--sign", args.sign, "family sign")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", args.output, "write the report to a file instead of stdout");
}

int cmd_analyze(const SpecArgs& args) {
    PretzelKnot knot = args.knot();
    ObstructionReport r = norm_obstruction_verdict(knot, args.prime(),
                                                   verdict_mode_from_name(args.mode),
                                                   det_strategy_from_name(args.strategy));
    if (args.format == "json")
        emit(report_json(r).dump(2) + "\n", args.output);
    else
        emit(r.to_text(), args.output);
    return 0;
}

int cmd_tables(long p, bool verify, const std::string& format, const std::string& output) {
    const std::vector<TableRow>& golden = golden_table_rows(p);
    long lo = p == 11 ? 6 : p == 5 ? 3 : (p + 1) / 2;
    long hi = p == 11 ? 14 : p == 5 ? 9 : (p + 1) / 2 + 8;
    std::vector<TableRow> rows = generate_table_rows(p, lo, hi);

    if (verify) {
        if (golden.empty())
            throw std::invalid_argument("no golden data for p = " + std::to_string(p) +
                                        "; only p = 5 and p = 11 have published tables");
        bool ok = rows.size() == golden.size();
        std::ostringstream bad;
        for (size_t i = 0; ok && i < rows.size(); ++i) {
            if (rows[i].n == golden[i].n && rows[i].f == golden[i].f && rows[i].g == golden[i].g)
                continue;
            ok = false;
            bad << "row n = " << golden[i].n << ": expected f = " << render(golden[i].f)
                << ", g = " << render(golden[i].g) << "; got f = " << render(rows[i].f)
                << ", g = " << render(rows[i].g) << "\n";
        }
        if (!ok) {
            std::cerr << "table mismatch at p = " << p << "\n" << bad.str();
            return 2;
        }
        std::cout << rows.size() << " rows match at p = " << p << "\n";
        return 0;
    }

    if (format == "json") {
        json j;
        j["p"] = p;
        j["golden"] = !golden.empty();
        j["rows"] = json::array();
        for (const TableRow& row : rows)
            j["rows"].push_back({{"n", row.n}, {"f", row.f}, {"g", row.g}});
        emit(j.dump(2) + "\n", output);
        return 0;
    }

    std::ostringstream os;
    os << "f_b(t) and g_n(t) at p = " << p;
    if (golden.empty()) os << "  [no golden data for this prime]";
    os << "\n";
    for (const TableRow& row : rows)
        os << "  n = " << row.n << "\n    f = " << render(row.f) << "\n    g = " << render(row.g)
           << "\n";
    emit(os.str(), output);
    return 0;
}

int cmd_alexander(const SpecArgs& args) {
    PretzelKnot knot = args.knot();
    CanonicalPoly seifert = alexander_from_seifert(knot);
    ReducedPresentation rp = reduced_presentation(knot);
    CanonicalPoly fox = alexander_from_presentation(rp.relators, 8, rp.meridian);
    if (seifert != fox) {
        std::cerr << "Seifert and Fox routes disagree: " << seifert.to_string() << " vs "
                  << fox.to_string() << "\n";
        return 2;
    }
    if (args.format == "json") {
        json j;
        j["spec"] = {{"n", knot.n}, {"m", knot.m}, {"sign", knot.sign > 0 ? "plus" : "minus"}};
        j["alexander"] = coeffs_json(seifert);
        emit(j.dump(2) + "\n", args.output);
    } else {
        std::ostringstream os;
        os << knot.name() << "\nalexander = " << seifert.to_string() << "\n";
        emit(os.str(), args.output);
    }
    return 0;
}

int cmd_homology(const SpecArgs& args) {
    PretzelKnot knot = args.knot();
    long p = args.prime();
    GF2ModuleStructure h1 = branched_cover_h1_mod2(knot, p);
    HypothesisReport hy = hypothesis_check(knot, p);
    if (args.format == "json") {
        json j;
        j["spec"] = {{"n", knot.n},
                     {"m", knot.m},
                     {"p", p},
                     {"sign", knot.sign > 0 ? "plus" : "minus"}};
        j["invariant_factors"] = json::array();
        for (const GF2Poly& f : h1.invariant_factors) j["invariant_factors"].push_back(f.to_string());
        j["cyclic"] = h1.cyclic;
        j["f2_dimension"] = h1.f2_dimension;
        j["iso_to_vp"] = h1.iso_to_vp;
        j["hypotheses"] = hypotheses_json(hy);
        emit(j.dump(2) + "\n", args.output);
    } else {
        std::ostringstream os;
        os << knot.name() << "  p = " << p << "\nH1 of the p-fold branched cover mod 2: "
           << (h1.cyclic ? "cyclic" : "not cyclic") << ", dim " << h1.f2_dimension
           << ", iso to V_p: " << (h1.iso_to_vp ? "yes" : "no") << "\n";
        for (const GF2Poly& f : h1.invariant_factors)
            os << "  invariant factor " << f.to_string() << "\n";
        emit(os.str(), args.output);
    }
    return 0;
}

// One suite of the selftest; prints its own pass/fail line.
bool run_suite(const std::string& name, bool (*body)(std::ostream&)) {
    std::ostringstream diag;
    bool ok = false;
    try {
        ok = body(diag);
    } catch (const std::exception& e) {
        diag << "exception: " << e.what() << "\n";
    }
    std::cout << "  " << name << std::string(name.size() < 14 ? 14 - name.size() : 1, ' ')
              << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) std::cerr << diag.str();
    return ok;
}

bool suite_identities(std::ostream& diag) {
    for (long p : {3L, 5L, 7L, 11L}) {
        CompanionPair cp = companion_pair(p);
        PolyMatrix a = PolyMatrix::identity(static_cast<size_t>(p));
        a.at(0, 0) = LaurentPoly::constant(-1);
        a.at(1, 1) = LaurentPoly::constant(-1);
        PolyMatrix ti = PolyMatrix::identity(static_cast<size_t>(p)).scaled(LaurentPoly::t());
        if ((cp.x * a).pow(p) != ti) {
            diag << "(xa)^p != tI at p = " << p << "\n";
            return false;
        }
        if (cp.y != a * cp.x * a) {
            diag << "y != axa at p = " << p << "\n";
            return false;
        }
        long n = (p + 1) / 2;
        PolyMatrix id = PolyMatrix::identity(static_cast<size_t>(p));
        for (long k : {(p - 1) / 2, (p - 1) / 2 + p}) {
            PolyMatrix xyk = (cp.x * cp.y).pow(k);
            if (xyk * cp.x != cp.y * xyk) {
                diag << "(xy)^k x != y (xy)^k at p = " << p << ", k = " << k << "\n";
                return false;
            }
            PolyMatrix lift = id + cp.y * xyk;
            if (block_e(cp, k) * (id - cp.x * cp.y) != lift * (id - cp.y)) {
                diag << "E(1-xy) identity fails at p = " << p << ", k = " << k << "\n";
                return false;
            }
            if (block_c(cp, k) * (id - cp.y * cp.x) != lift * (id - cp.x)) {
                diag << "C(1-yx) identity fails at p = " << p << ", k = " << k << "\n";
                return false;
            }
            if (mat_det(block_c(cp, k), DetStrategy::Bareiss) !=
                mat_det(block_e(cp, k), DetStrategy::Bareiss)) {
                diag << "det C != det E at p = " << p << ", k = " << k << "\n";
                return false;
            }
        }
        long k1 = (p - 1) / 2, k2 = k1 + p;
        PolyMatrix lhs = mat_adjugate(block_e(cp, k1)) * block_m(cp, k1, n);
        PolyMatrix rhs = mat_adjugate(block_e(cp, k2)) * block_m(cp, k2, n);
        LaurentPoly d1 = mat_det(block_e(cp, k1), DetStrategy::Bareiss);
        LaurentPoly d2 = mat_det(block_e(cp, k2), DetStrategy::Bareiss);
        if (lhs.scaled(d2) != rhs.scaled(d1)) {
            diag << "E^{-1} M depends on k at p = " << p << "\n";
            return false;
        }
    }
    return true;
}

bool suite_fox_identity(std::ostream& diag) {
    struct Case {
        long n, m, p;
        int sign;
    };
    for (const Case& c : {Case{2, 3, 3, +1}, Case{3, 5, 5, +1}, Case{4, 3, 3, -1}}) {
        PretzelKnot knot(c.n, c.m, c.sign);
        ReducedPresentation rp = reduced_presentation(knot);
        RepImages rep = cover_rep(CharacterData{c.p, {0, 2}, 1});
        std::vector<int> cols{0, 1, 2, 3, 4, 5, 6, 7};
        auto grid = fox_matrix(rp.wada, cols);
        size_t d = static_cast<size_t>(rep.dim());
        PolyMatrix id = PolyMatrix::identity(d);
        for (size_t r = 0; r < rp.wada.size(); ++r) {
            // free fundamental identity: sum_j (dw/dg_j)(g_j - 1) = w - 1
            PolyMatrix acc(d, d);
            for (size_t j = 0; j < cols.size(); ++j)
                acc = acc + ring_image(grid[r][j], rep) * (rep.img[cols[j]] - id);
            PolyMatrix w = word_image(rp.wada[r], rep);
            if (acc != w - id) {
                diag << "fox identity fails for " << knot.name() << " relator " << r << "\n";
                return false;
            }
            if (w != id) {
                diag << "relator image not trivial for " << knot.name() << " relator " << r
                     << "\n";
                return false;
            }
        }
    }
    return true;
}

bool suite_tables(std::ostream& diag) {
    for (long p : {5L, 11L}) {
        const std::vector<TableRow>& golden = golden_table_rows(p);
        std::vector<TableRow> rows =
            generate_table_rows(p, golden.front().n, golden.back().n);
        if (rows.size() != golden.size()) {
            diag << "row count mismatch at p = " << p << "\n";
            return false;
        }
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].n != golden[i].n || rows[i].f != golden[i].f ||
                rows[i].g != golden[i].g) {
                diag << "golden row n = " << golden[i].n << " at p = " << p << " mismatches\n";
                return false;
            }
    }
    return true;
}

bool pipeline_case(long n, long m, long p, std::ostream& diag) {
    ObstructionReport r = norm_obstruction_verdict(PretzelKnot(n, m, +1), p);
    if (r.chain.verdict != Verdict::ObstructedNotSlice) {
        diag << "expected ObstructedNotSlice, got " << verdict_name(r.chain.verdict) << "\n";
        return false;
    }
    if (!r.h) {
        diag << "pipeline did not extract h\n";
        return false;
    }
    LaurentPoly prod = r.f.poly() * r.g.poly() * r.h->poly() * r.h->poly();
    if (!doteq(r.numerator.poly(), prod)) {
        diag << "numerator does not factor as f g h^2\n";
        return false;
    }
    return true;
}

bool suite_pipeline_p3(std::ostream& diag) { return pipeline_case(2, 3, 3, diag); }
bool suite_pipeline_p11(std::ostream& diag) { return pipeline_case(6, 11, 11, diag); }

int cmd_selftest(bool quick) {
    std::cout << "selftest" << (quick ? " (quick)" : "") << "\n";
    bool ok = true;
    ok &= run_suite("identities", suite_identities);
    ok &= run_suite("fox-identity", suite_fox_identity);
    ok &= run_suite("tables", suite_tables);
    ok &= run_suite("pipeline-p3", suite_pipeline_p3);
    if (quick)
        std::cout << "  pipeline-p11  skipped\n";
    else
        ok &= run_suite("pipeline-p11", suite_pipeline_p11);
    std::cout << (ok ? "all suites passed" : "selftest FAILED") << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* threads = std::getenv("SLICE_SIEVE_THREADS")) {
        int t = std::atoi(threads);
        if (t > 0) omp_set_num_threads(t);
    }
#endif

    CLI::App app{"sliceness obstructions for the pretzel knots P(2n, m, -(2n+-1), -m)"};
    app.require_subcommand(1);

    SpecArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "compute the obstruction verdict");
    add_spec_flags(analyze, analyze_args, true);
    analyze->add_option("--det-strategy", analyze_args.strategy, "determinant algorithm")
        ->check(CLI::IsMember({"cofactor", "bareiss", "eval-interp"}))
        ->capture_default_str();
    analyze->add_option("--mode", analyze_args.mode, "verdict route")
        ->check(CLI::IsMember({"closed-form", "pipeline", "both"}))
        ->capture_default_str();

    long tables_p = 11;
    bool tables_verify = false;
    SpecArgs tables_args;
    CLI::App* tables = app.add_subcommand("tables", "regenerate the f/g tables");
    tables->add_option("--p", tables_p, "table prime")->capture_default_str();
    tables->add_flag("--verify", tables_verify, "compare against the embedded golden rows");
    tables->add_option("--format", tables_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    tables->add_option("--output", tables_args.output, "write to a file instead of stdout");

    SpecArgs alex_args;
    CLI::App* alexander =
        app.add_subcommand("alexander", "classical Alexander polynomial, both routes");
    add_spec_flags(alexander, alex_args, false);

    SpecArgs hom_args;
    CLI::App* homology =
        app.add_subcommand("homology", "mod-2 homology of the p-fold branched cover");
    add_spec_flags(homology, hom_args, true);

    bool quick = false;
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in consistency suites");
    selftest->add_flag("--quick", quick, "skip the p = 11 end-to-end case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_args);
        if (*tables)
            return cmd_tables(tables_p, tables_verify, tables_args.format, tables_args.output);
        if (*alexander) return cmd_alexander(alex_args);
        if (*homology) return cmd_homology(hom_args);
        if (*selftest) return cmd_selftest(quick);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
