#include "cdlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdlab/expr.hpp"
#include "cdlab/fixtures.hpp"
#include "cdlab/formulas.hpp"
#include "cdlab/subalgebras.hpp"
#include "cdlab/zero_divisors.hpp"

namespace cdlab {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
    std::string sig_str;
    int level = 0;
    int threads = 0;
    std::string format;
    std::string out;
    std::string fixtures;
    bool force = false;
};

void add_signature_opts(CLI::App* cmd, CommonOpts& o) {
    auto* sig = cmd->add_option("--sig", o.sig_str, "signature as q,p");
    auto* lvl = cmd->add_option("--level", o.level, "level n, same as --sig n,0");
    sig->excludes(lvl);
    lvl->excludes(sig);
}

void add_output_opts(CLI::App* cmd, CommonOpts& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "md", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write output to a file instead of stdout");
}

Signature parse_signature(const CommonOpts& o) {
    if (!o.sig_str.empty()) {
        int q = 0, p = 0;
        char comma = 0;
        std::istringstream in(o.sig_str);
        if (!(in >> q >> comma >> p) || comma != ',' || !in.eof())
            throw CLI::ValidationError("--sig", "expected q,p");
        return Signature(q, p);
    }
    if (o.level > 0) return Signature::level(o.level);
    throw CLI::ValidationError("signature", "one of --sig or --level is required");
}

struct OutputTable {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string render_table(const OutputTable& t, const std::string& format) {
    std::ostringstream out;
    if (format == "csv") {
        for (size_t i = 0; i < t.headers.size(); ++i)
            out << (i ? "," : "") << csv_cell(t.headers[i]);
        out << "\n";
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
            out << "\n";
        }
    } else {  // md
        out << "|";
        for (const auto& h : t.headers) out << " " << h << " |";
        out << "\n|";
        for (size_t i = 0; i < t.headers.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& row : t.rows) {
            out << "|";
            for (const auto& cell : row) out << " " << cell << " |";
            out << "\n";
        }
    }
    return out.str();
}

void write_output(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

void emit(const CommonOpts& o, const ordered_json& j, const OutputTable& t) {
    if (o.format == "json")
        write_output(o, j.dump(2) + "\n");
    else
        write_output(o, render_table(t, o.format));
}

ordered_json signature_json(const Algebra& alg) {
    return ordered_json::array({alg.signature().q(), alg.signature().p()});
}

// ------------------------------------------------------------------ mul

void run_mul(const CommonOpts& o, const std::string& expr_text) {
    Algebra alg(parse_signature(o));
    std::string result = format(evaluate(parse(expr_text, alg.signature()), alg), alg);
    if (o.format == "json") {
        ordered_json j{{"level", alg.n()},
                       {"signature", signature_json(alg)},
                       {"expr", expr_text},
                       {"result", result}};
        write_output(o, j.dump(2) + "\n");
    } else {
        write_output(o, result + "\n");
    }
}

// ------------------------------------------------------------------ classify

Triad parse_triad_arg(const Algebra& alg, const std::string& arg) {
    std::vector<Mask> masks;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) {
        // rejoin bracket blade labels that legitimately contain commas
        while (token.find('[') != std::string::npos &&
               token.find(']') == std::string::npos) {
            std::string rest;
            if (!std::getline(in, rest, ',')) break;
            token += "," + rest;
        }
        Element e = evaluate(parse(token, alg.signature()), alg);
        const auto& cs = e.coeffs();
        if (cs.size() != 1 || cs.begin()->first == 0 || !(cs.begin()->second == Rational(1)))
            throw std::domain_error("triad tokens must be plain pure blades: " + token);
        masks.push_back(cs.begin()->first);
    }
    if (masks.size() != 3) throw std::domain_error("--triad needs three blades");
    std::sort(masks.begin(), masks.end());
    return make_triad(alg, masks[0], masks[1], masks[2]);
}

void run_classify(const CommonOpts& o, const std::string& triad_arg) {
    Algebra alg(parse_signature(o));
    Triad t = parse_triad_arg(alg, triad_arg);

    TypePattern pat = type_pattern(alg, t);
    NonAssocType ty = pat.type();
    TriadKind kind = triad_kind(alg, t);
    MoufangFlags mf = moufang_check(alg, t);
    bool mal = malcev_check(alg, t);
    std::vector<Mode> modes = mode_survey(alg, t);
    Subalgebra sub = classify_subalgebra(alg, t);

    const char* kind_name = kind == TriadKind::ASSOCIATIVE    ? "associative"
                            : kind == TriadKind::NON_CYCLE    ? "non-cycle"
                                                              : "cycle-first";
    std::string silo;
    if (kind == TriadKind::CYCLE_FIRST) {
        std::array<Mask, 3> ring{t.b, t.c, t.b ^ t.c};
        std::sort(ring.begin(), ring.end());
        silo = silo_name(silo_of(alg, make_cycle_group(alg, ring[0], ring[1], t.d)));
    }
    std::string mode_str;
    for (Mode m : modes) mode_str += std::string(mode_str.empty() ? "" : " ") + mode_letter(m);

    std::string triad_str = alg.basis_label(t.b) + "," + alg.basis_label(t.c) + "," +
                            alg.basis_label(t.d);
    if (o.format == "json") {
        ordered_json j{{"level", alg.n()},
                       {"signature", signature_json(alg)},
                       {"triad", ordered_json::array({alg.basis_label(t.b), alg.basis_label(t.c),
                                                      alg.basis_label(t.d)})},
                       {"masks", ordered_json::array({t.b, t.c, t.d})},
                       {"pattern", ordered_json::array({pat.z1, pat.z2, pat.z3})},
                       {"type", std::string(1, type_letter(ty))},
                       {"kind", kind_name},
                       {"silo", silo.empty() ? ordered_json() : ordered_json(silo)},
                       {"moufang", ordered_json::array({mf.m1, mf.m2, mf.m3})},
                       {"malcev", mal},
                       {"modes", ordered_json::array()},
                       {"subalgebra", subalgebra_class_name(sub.cls)}};
        for (Mode m : modes) j["modes"].push_back(mode_letter(m));
        write_output(o, j.dump(2) + "\n");
        return;
    }
    std::ostringstream outp;
    outp << "triad: " << triad_str << "\n"
         << "pattern: z1=" << pat.z1 << " z2=" << pat.z2 << " z3=" << pat.z3 << "\n"
         << "type: " << (ty == NonAssocType::ASSOC ? std::string("associative")
                                                   : std::string(1, type_letter(ty)))
         << "\n"
         << "kind: " << kind_name << "\n";
    if (!silo.empty()) outp << "silo: " << silo << "\n";
    outp << "moufang: m1=" << mf.m1 << " m2=" << mf.m2 << " m3=" << mf.m3 << "\n"
         << "malcev: " << mal << "\n"
         << "modes: " << (mode_str.empty() ? "-" : mode_str) << "\n"
         << "subalgebra: " << subalgebra_class_name(sub.cls) << "\n";
    write_output(o, outp.str());
}

// ------------------------------------------------------------------ census

void run_census_triads(const CommonOpts& o, const Algebra& alg) {
    if (alg.n() > 10 && !o.force)
        throw CLI::ValidationError("census", "n > 10 is expensive; pass --force to run");
    TriadCensus c = triad_census(alg, o.threads);

    ordered_json j{{"level", alg.n()}, {"signature", signature_json(alg)}};
    j["associative"] = c.associative;
    j["nonCycles"] = ordered_json::object();
    const char* letters[4] = {"A", "B", "C", "X"};
    for (int i = 0; i < 4; ++i) j["nonCycles"][letters[i]] = c.non_cycle[i];
    j["silos"] = ordered_json::object();
    for (int i = 0; i < 8; ++i) j["silos"][kSiloNames[i]] = c.silos[i];
    j["nonCycleTotal"] = c.non_cycle_total();
    j["cycleGroups"] = c.cycle_groups();
    j["total"] = c.total();

    OutputTable t;
    t.headers = {"metric", "value"};
    t.rows.push_back({"associative", std::to_string(c.associative)});
    for (int i = 0; i < 4; ++i)
        t.rows.push_back({std::string("nonCycle") + letters[i], std::to_string(c.non_cycle[i])});
    for (int i = 0; i < 8; ++i)
        t.rows.push_back({std::string("silo") + kSiloNames[i], std::to_string(c.silos[i])});
    t.rows.push_back({"nonCycleTotal", std::to_string(c.non_cycle_total())});
    t.rows.push_back({"cycleGroups", std::to_string(c.cycle_groups())});
    t.rows.push_back({"total", std::to_string(c.total())});
    emit(o, j, t);
}

void run_census_subalgebras(const CommonOpts& o, const Algebra& alg) {
    if (alg.n() > 8 && !o.force)
        throw CLI::ValidationError("census", "subalgebras above n = 8 need --force");
    SubalgebraCensus c = subalgebra_census(alg, o.threads);
    ordered_json j{{"level", alg.n()},       {"signature", signature_json(alg)},
                   {"H", c.H},               {"O", c.O},
                   {"P4", c.P4},             {"P12", c.P12},
                   {"P14", c.P14},           {"pTotal", c.p_total()}};
    OutputTable t;
    t.headers = {"class", "count"};
    t.rows = {{"H", std::to_string(c.H)},     {"O", std::to_string(c.O)},
              {"P4", std::to_string(c.P4)},   {"P12", std::to_string(c.P12)},
              {"P14", std::to_string(c.P14)}, {"pTotal", std::to_string(c.p_total())}};
    emit(o, j, t);
}

// ------------------------------------------------------------------ zd

ordered_json pair_json(const Algebra& alg, const ZeroDivisorPair& p) {
    return ordered_json{
        {"f1", ordered_json::array({ordered_json::array({alg.basis_label(p.x), 1}),
                                    ordered_json::array({alg.basis_label(p.y), 1})})},
        {"f2", ordered_json::array({ordered_json::array({alg.basis_label(p.u), 1}),
                                    ordered_json::array({alg.basis_label(p.v), p.tv})})}};
}

void run_zd(const CommonOpts& o, const Algebra& alg, const std::string& action,
            bool strict_squares) {
    if (action == "enumerate") {
        if (alg.n() > 8)
            throw CLI::ValidationError("zd", "listings stop at n = 8; use zd count");
        std::vector<ZeroDivisorPair> pairs = zd_direct_search(alg, o.threads, strict_squares);
        ordered_json j = ordered_json::array();
        OutputTable t;
        t.headers = {"x", "y", "u", "v", "tv"};
        for (const ZeroDivisorPair& p : pairs) {
            j.push_back(pair_json(alg, p));
            t.rows.push_back({alg.basis_label(p.x), alg.basis_label(p.y), alg.basis_label(p.u),
                              alg.basis_label(p.v), std::to_string(p.tv)});
        }
        emit(o, j, t);
    } else if (action == "count") {
        if (alg.n() > 10 && !o.force)
            throw CLI::ValidationError("zd", "n > 10 is expensive; pass --force to run");
        ZdCensus c = zd_census(alg, o.threads, strict_squares);
        ordered_json j{{"level", alg.n()},
                       {"signature", signature_json(alg)},
                       {"count", c.count}};
        OutputTable t;
        t.headers = {"metric", "value"};
        t.rows = {{"count", std::to_string(c.count)}};
        emit(o, j, t);
    } else {  // primaries
        if (alg.n() > 8 && !o.force)
            throw CLI::ValidationError("zd", "primaries above n = 8 need --force");
        std::vector<PrimaryOrbit> orbits = zd_primaries(alg, o.threads);
        ordered_json j = ordered_json::array();
        OutputTable t;
        t.headers = {"representative", "size", "cells"};
        for (const PrimaryOrbit& orb : orbits) {
            const Triad& r = orb.representative;
            ordered_json cells = ordered_json::array();
            std::string cell_str;
            for (const auto& [ci, m] : orb.cells) {
                cells.push_back(ordered_json::array({ci, mode_letter(m)}));
                cell_str += (cell_str.empty() ? "" : " ") + std::to_string(ci) + ":" +
                            mode_letter(m);
            }
            j.push_back(ordered_json{
                {"representative",
                 ordered_json::array({alg.basis_label(r.b), alg.basis_label(r.c),
                                      alg.basis_label(r.d)})},
                {"masks", ordered_json::array({r.b, r.c, r.d})},
                {"size", orb.size},
                {"cells", cells}});
            t.rows.push_back({alg.basis_label(r.b) + " " + alg.basis_label(r.c) + " " +
                                  alg.basis_label(r.d),
                              std::to_string(orb.size), cell_str});
        }
        emit(o, j, t);
    }
}

// ------------------------------------------------------------------ formulas

void run_formulas(const CommonOpts& o, int m_max) {
    std::vector<CountReport> reports = consistency_check(m_max);
    ordered_json j = ordered_json::array();
    OutputTable t;
    t.headers = {"m", "N", "H", "S", "O", "Z", "triadTotal", "consistent"};
    for (const CountReport& r : reports) {
        ordered_json e{{"m", r.m},   {"N", r.N},
                       {"H", r.H},   {"S", r.S},
                       {"O", r.O},   {"Z", r.Z},
                       {"triadTotal", r.triad_total},
                       {"consistent", r.consistent}};
        if (!r.failures.empty()) e["failures"] = r.failures;
        j.push_back(e);
        t.rows.push_back({std::to_string(r.m), std::to_string(r.N), std::to_string(r.H),
                          std::to_string(r.S), std::to_string(r.O), std::to_string(r.Z),
                          std::to_string(r.triad_total), r.consistent ? "true" : "false"});
    }
    emit(o, j, t);
}

// ------------------------------------------------------------------ verify

struct Verifier {
    int failures = 0;
    int checks = 0;

    void expect(const std::string& what, long long got, long long want) {
        ++checks;
        if (got == want) {
            std::cout << "[ok] " << what << " = " << got << "\n";
        } else {
            ++failures;
            std::cout << "[mismatch] " << what << ": got " << got << ", expected " << want
                      << "\n";
        }
    }
    void note(const std::string& what) { std::cout << "[skip] " << what << "\n"; }
};

int run_verify(const CommonOpts& o) {
    Algebra alg(parse_signature(o));
    int n = alg.n();
    bool imaginary = alg.signature().p() == 0;
    if (n > 10 && !o.force)
        throw CLI::ValidationError("verify", "n > 10 is expensive; pass --force to run");
    Verifier v;

    // closed forms are internally consistent
    int m = std::min(std::max(n - 3, 0), 7);
    bool formulas_ok = true;
    for (const CountReport& r : consistency_check(m))
        if (!r.consistent) formulas_ok = false;
    v.expect("formula consistency m<=" + std::to_string(m), formulas_ok ? 1 : 0, 1);

    long long N = alg.N();
    v.expect("pure trace", alg.pure_trace(), imaginary ? -N : 1);

    if (imaginary) {
        ordered_json ts = load_fixture("triad_structure", o.fixtures);
        ordered_json nas = load_fixture("nonassoc_structure", o.fixtures);
        ordered_json card = load_fixture("cardinality", o.fixtures);
        std::string key = std::to_string(n);

        if (ts.contains(key)) {
            TriadCensus c = triad_census(alg, o.threads);
            const ordered_json& row = ts[key];
            v.expect("associative triads", c.associative, row["associative"].get<long long>());
            v.expect("non-cycle triads", c.non_cycle_total(), row["nonCycles"].get<long long>());
            v.expect("cycle triads", 3 * c.cycle_groups(), row["cycleTriads"].get<long long>());
            v.expect("triad total", c.total(), row["total"].get<long long>());
            if (nas.contains(key)) {
                const ordered_json& nrow = nas[key];
                const char* letters[4] = {"A", "B", "C", "X"};
                for (int i = 0; i < 4; ++i)
                    v.expect(std::string("non-cycle ") + letters[i], c.non_cycle[i],
                             nrow["nonCycles"][letters[i]].get<long long>());
                for (int i = 0; i < 8; ++i)
                    v.expect(std::string("silo ") + kSiloNames[i], c.silos[i],
                             nrow["silos"][kSiloNames[i]].get<long long>());
            }
            if (card["levels"].contains(key)) {
                const ordered_json& crow = card["levels"][key];
                long long na = c.non_cycle_total() + 3 * c.cycle_groups();
                v.expect("non-associative triads", na, crow["naTriads"].get<long long>());
                v.expect("28 factor", na / 28, crow["factor28"].get<long long>());
            }
        } else {
            v.note("no triad fixtures at n = " + std::to_string(n));
        }

        if (card["levels"].contains(key)) {
            ZdCensus z = zd_census(alg, o.threads);
            const ordered_json& crow = card["levels"][key];
            v.expect("zero-divisor count", z.count, crow["zd"].get<long long>());
            if (n >= 4) v.expect("84 factor", z.count / 84, crow["factor84"].get<long long>());
            if (n >= 3 && n <= 10)
                v.expect("z formula", z.count, z_count(n - 3));
        }

        ordered_json sc = load_fixture("subalgebra_census", o.fixtures);
        if (sc.contains(key) && (n <= 8 || o.force)) {
            SubalgebraCensus c = subalgebra_census(alg, o.threads);
            const ordered_json& row = sc[key];
            v.expect("subalgebras H", c.H, row["H"].get<long long>());
            v.expect("subalgebras O", c.O, row["O"].get<long long>());
            v.expect("subalgebras P4", c.P4, row["P4"].get<long long>());
            v.expect("subalgebras P12", c.P12, row["P12"].get<long long>());
            v.expect("subalgebras P14", c.P14, row["P14"].get<long long>());
        } else if (sc.contains(key)) {
            v.note("subalgebra census above n = 8 needs --force");
        }
    } else {
        ordered_json card = load_fixture("cardinality", o.fixtures);
        bool found = false;
        for (const ordered_json& row : card["split"]) {
            if (row["signature"][0].get<int>() == alg.signature().q() &&
                row["signature"][1].get<int>() == alg.signature().p()) {
                ZdCensus z = zd_census(alg, o.threads);
                v.expect("zero-divisor count", z.count, row["zd"].get<long long>());
                found = true;
            }
        }
        if (!found) v.note("no split fixture for this signature");
    }

    std::cout << (v.failures ? "FAIL" : "OK") << " (" << (v.checks - v.failures) << "/"
              << v.checks << " checks)" << "\n";
    return v.failures ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"graded Cayley-Dickson algebra laboratory"};
    app.require_subcommand(1);
    int exit_code = 0;

    CommonOpts mul_o;
    std::string mul_expr;
    auto* mul = app.add_subcommand("mul", "evaluate a blade expression");
    add_signature_opts(mul, mul_o);
    add_output_opts(mul, mul_o, "text");
    mul->add_option("expr", mul_expr, "expression, e.g. \"(o1 - o1234)*(o2 + o34)\"")
        ->required();
    mul->callback([&]() { run_mul(mul_o, mul_expr); });

    CommonOpts cls_o;
    std::string cls_triad;
    auto* cls = app.add_subcommand("classify", "classify a triad of pure blades");
    add_signature_opts(cls, cls_o);
    add_output_opts(cls, cls_o, "text");
    cls->add_option("--triad", cls_triad, "three blades, e.g. o1,o2,o34")->required();
    cls->callback([&]() { run_classify(cls_o, cls_triad); });

    CommonOpts cen_o;
    std::string cen_kind;
    auto* cen = app.add_subcommand("census", "exhaustive triad or subalgebra census");
    add_signature_opts(cen, cen_o);
    add_output_opts(cen, cen_o, "json");
    cen->add_option("kind", cen_kind, "triads or subalgebras")
        ->required()
        ->check(CLI::IsMember({"triads", "subalgebras"}));
    cen->add_option("--threads", cen_o.threads, "worker threads (0 = auto)");
    cen->add_flag("--force", cen_o.force, "run expensive levels anyway");
    cen->callback([&]() {
        Algebra alg(parse_signature(cen_o));
        if (cen_kind == "triads")
            run_census_triads(cen_o, alg);
        else
            run_census_subalgebras(cen_o, alg);
    });

    CommonOpts zd_o;
    std::string zd_action;
    bool zd_strict = false;
    auto* zd = app.add_subcommand("zd", "zero-divisor search, counts, primaries");
    add_signature_opts(zd, zd_o);
    add_output_opts(zd, zd_o, "json");
    zd->add_option("action", zd_action, "enumerate, count, or primaries")
        ->required()
        ->check(CLI::IsMember({"enumerate", "count", "primaries"}));
    zd->add_option("--threads", zd_o.threads, "worker threads (0 = auto)");
    zd->add_flag("--force", zd_o.force, "run expensive levels anyway");
    zd->add_flag("--strict-squares", zd_strict,
                 "require equal squares within each factor");
    zd->callback([&]() {
        Algebra alg(parse_signature(zd_o));
        run_zd(zd_o, alg, zd_action, zd_strict);
    });

    CommonOpts for_o;
    int for_mmax = 4;
    auto* fml = app.add_subcommand("formulas", "closed-form counts and cross-checks");
    add_output_opts(fml, for_o, "json");
    fml->add_option("--mmax", for_mmax, "largest ultronion index m")
        ->check(CLI::Range(0, 7))
        ->capture_default_str();
    fml->callback([&]() { run_formulas(for_o, for_mmax); });

    CommonOpts ver_o;
    auto* ver = app.add_subcommand("verify", "diff censuses and counts against fixtures");
    add_signature_opts(ver, ver_o);
    ver->add_option("--threads", ver_o.threads, "worker threads (0 = auto)");
    ver->add_option("--fixtures", ver_o.fixtures, "fixture directory override");
    ver->add_flag("--force", ver_o.force, "run expensive levels anyway");
    ver->callback([&]() { exit_code = run_verify(ver_o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace cdlab
