// wr: command-line front end for the wr core library.

#include "expected_data.hpp"

#include "wr/bigaction.hpp"
#include "wr/cover.hpp"
#include "wr/rayclass.hpp"
#include "wr/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace wr;
using io::json;

namespace {

struct Output {
    std::string path;
    std::string format;

    void write(const std::string& text) const
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
        f << text;
    }
};

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// inline JSON, or @path
json json_arg(const std::string& s)
{
    if (!s.empty() && s[0] == '@') return io::parse(read_file(s.substr(1)));
    return io::parse(s);
}

const auto Prime = CLI::Validator(
    [](std::string& s) -> std::string {
        try {
            if (!is_prime_u32(std::stoull(s))) return s + " is not prime";
        } catch (const std::exception&) {
            return s + " is not an integer";
        }
        return {};
    },
    "PRIME");

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------------ field

struct FieldArgs {
    uint32_t p = 0;
    unsigned e = 1;
    std::string elem;
    unsigned sub = 0;
};

int run_field(const FieldArgs& a, const Output& out)
{
    FieldCtx k = make_field(a.p, a.e);
    json j = io::to_json(k);
    j["q"] = io::big_to_json(k.q_big());
    if (!a.elem.empty()) {
        FqElem x = io::elem_from_json(k, json_arg(a.elem));
        unsigned d = a.sub ? a.sub : 1;
        if (k.e() % d) throw Error(ErrorCode::NotASubfieldDegree, std::to_string(d) + " does not divide e");
        j["elem"] = io::to_json(x);
        j["frobenius"] = io::to_json(x.frobenius());
        j["pth_root"] = io::to_json(x.pth_root());
        j["trace"] = io::to_json(frobenius_trace(x, d));
        j["sub_degree"] = d;
    }
    if (out.format == "text") {
        std::ostringstream s;
        s << "F_" << k.q_big() << " = F_" << k.p() << "[x]/(" << json(k.modulus()).dump() << ")\n";
        if (j.contains("trace")) s << "trace to degree " << j["sub_degree"] << ": " << j["trace"].dump() << "\n";
        out.write(s.str());
    } else {
        out.write(dump(j));
    }
    return 0;
}

// ---------------------------------------------------------- cover-analyze

int run_cover_analyze(const std::string& file, bool splits, const Output& out)
{
    CoverSpec c = io::cover_from_json(io::parse(read_file(file)));
    CoverAnalysis a = analyze(c);
    json j = io::to_json(a);
    j["label"] = c.label;
    if (splits) j["splits"] = split_summary(c).str();
    if (out.format == "text") {
        std::ostringstream s;
        s << (c.label.empty() ? "cover" : c.label) << ": degree " << a.degree << ", conductor " << a.conductor
          << ", genus " << a.genus;
        if (splits) s << ", splits " << j["splits"].get<std::string>();
        s << "\n";
        out.write(s.str());
    } else {
        out.write(dump(j));
    }
    return 0;
}

// ---------------------------------------------------------------- adjoint

int run_adjoint(uint32_t p, unsigned e, const std::string& poly, const Output& out)
{
    FieldCtx k = make_field(p, e);
    FqPoly f = io::poly_from_json(k, json_arg(poly));
    AdditiveOp ad = palindromic(f);
    unsigned N = splitting_degree(ad);
    KernelBasis kb = linearize_kernel(ad, N);
    json j{{"f", io::to_json(f)},
           {"Ad_f", io::to_json(ad)},
           {"s", ad.degree() / 2},
           {"splitting_degree", N},
           {"kernel_dim", kb.basis.size()}};
    out.write(dump(j));
    return 0;
}

// --------------------------------------------------------------- rayclass

std::string inv_exps(const AbelianInvariants& inv)
{
    std::string s;
    for (size_t i = 0; i < inv.exps.size(); ++i)
        s += (i ? ";" : "") + std::to_string(inv.exps[i]);
    return s;
}

int run_rayclass_orders(uint32_t p, unsigned e, uint64_t m_min, uint64_t m_max, const GsOptions& opt,
                        const Output& out)
{
    auto rows = gs_table(p, e, m_max, opt);
    if (out.format == "json") {
        json a = json::array();
        for (auto& r : rows) {
            if (r.m < m_min) continue;
            a.push_back(json{{"m", r.m},
                             {"order_exp", r.order_exp},
                             {"exponent_exp", r.inv.exponent_exp()},
                             {"invariants", io::to_json(r.inv)},
                             {"N_m", io::big_to_json(r.N_m)}});
        }
        out.write(dump(json{{"p", p}, {"e", e}, {"rows", a}}));
        return 0;
    }
    std::ostringstream s;
    s << "m,order_exp,exponent_exp,invariants,N_m\n";
    for (auto& r : rows) {
        if (r.m < m_min) continue;
        s << r.m << ',' << r.order_exp << ',' << r.inv.exponent_exp() << ',' << inv_exps(r.inv) << ',' << r.N_m
          << '\n';
    }
    out.write(s.str());
    return 0;
}

// ----------------------------------------------------------- family-build

json family_json(const std::string& kind, const FamilyParams& fp)
{
    Family fam = family_build(kind, fp);
    json covers = json::array();
    for (auto& c : fam.covers)
        covers.push_back(io::to_json(c));
    auto ladder = tower_compose(fam.covers);
    json lj = json::array();
    for (auto& l : ladder)
        lj.push_back(io::to_json(l));
    TowerGenus tg = tower_genus(ladder);
    json j{{"kind", kind},
           {"p", fp.p},
           {"e", fp.e},
           {"covers", covers},
           {"notes", fam.notes},
           {"ladder", lj},
           {"degree", io::big_to_json(tg.degree)},
           {"conductor", tg.top_conductor},
           {"genus", io::big_to_json(tg.genus)}};
    try {
        j["invariants"] = io::to_json(invariants_from_power_orders(fp.p, character_power_orders(fam.covers)));
    } catch (const Error&) {
        // longer Witt vectors: structure not computed
    }
    return j;
}

// ------------------------------------------------------------- basechange

int run_basechange(const std::string& file, const std::string& S_arg, const Output& out)
{
    CoverSpec c = io::cover_from_json(io::parse(read_file(file)));
    AdditiveOp S = io::additive_from_json(c.ctx, json_arg(S_arg));
    CoverSpec b = base_change(c, S);
    BigInt g0 = analyze(c).genus, g1 = analyze(b).genus;
    BigInt degS = ipow(BigInt(c.ctx.p()), unsigned(S.degree()));
    json red = json::array();
    for (auto& f : reduce_witt(b.rhs, ReduceMode::geometric).coords)
        red.push_back(io::to_json(f));
    json j{{"cover", io::to_json(b)},
           {"reduced_rhs", red},
           {"genus_before", io::big_to_json(g0)},
           {"genus_after", io::big_to_json(g1)},
           {"degree_S", io::big_to_json(degS)},
           {"genus_scales", bool(g1 == degS * g0)}};
    out.write(dump(j));
    return 0;
}

// -------------------------------------------------------- reproduce-table

struct Range {
    uint64_t lo, hi;
    unsigned order;
    std::string label;
};

std::vector<std::vector<std::string>> csv_rows(const char* text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            f.push_back(cell);
        rows.push_back(f);
    }
    return rows;
}

std::string ratio_line(const std::string& name, const Rational& r)
{
    return name + " = " + rational_str(r) + " (" + decimal6(r) + ")";
}

int run_reproduce(uint32_t p, unsigned e, unsigned jobs, const Output& out)
{
    GsOptions opt;
    opt.jobs = jobs;
    opt.invariants = false;
    uint64_t m2 = find_m2(p, e, opt);
    auto rows = gs_table(p, e, m2, opt);

    std::vector<Range> ranges;
    for (auto& r : rows) {
        if (ranges.empty() || ranges.back().order != r.order_exp)
            ranges.push_back({r.m, r.m, r.order_exp, {}});
        else
            ranges.back().hi = r.m;
    }

    std::vector<std::string> problems;
    std::optional<Rational> ratio_ks, ratio_fam;
    const BigInt q = ipow(BigInt(p), e);
    if (e % 2 == 0) {
        auto ladder = tower_compose(family_build("table", {p, e, 2, 0}).covers);
        for (auto& l : ladder) {
            auto it = std::find_if(ranges.begin(), ranges.end(), [&](const Range& g) { return g.lo == l.conductor; });
            if (it == ranges.end()) {
                problems.push_back("no ray class jump at conductor " + std::to_string(l.conductor));
                continue;
            }
            it->label = l.label;
            if (ipow(BigInt(p), it->order) != l.degree)
                problems.push_back("equation degree differs from ray class degree at m = " + std::to_string(l.conductor));
        }
        TowerGenus tg = tower_genus(ladder);
        ratio_ks = Rational(q * tg.degree, tg.genus);
        auto lad_fam = tower_compose(family_build("lauter-even", {p, e, 2, 0}).covers);
        TowerGenus g_fam = tower_genus(lad_fam);
        ratio_fam = Rational(q * g_fam.degree, g_fam.genus);
    }

    std::ostringstream s;
    s << "m_min,m_max,order_log_p,label\n";
    for (auto& g : ranges)
        s << g.lo << ',' << g.hi << ',' << g.order << ',' << g.label << '\n';
    if (ratio_ks) s << ratio_line("ratio_KSm2", *ratio_ks) << '\n';
    if (ratio_fam) s << ratio_line("ratio_family", *ratio_fam) << '\n';

    bool have_expected = p == 5 && e == 4;
    if (have_expected) {
        auto want = csv_rows(data::table_p5_e4);
        if (want.size() != ranges.size())
            problems.push_back("expected " + std::to_string(want.size()) + " rows, got " + std::to_string(ranges.size()));
        for (size_t i = 0; i < std::min(want.size(), ranges.size()); ++i) {
            const auto& w = want[i];
            const auto& g = ranges[i];
            if (std::stoull(w[0]) != g.lo || std::stoull(w[1]) != g.hi || std::stoul(w[2]) != g.order)
                problems.push_back("row " + std::to_string(i + 1) + " differs");
        }
        for (auto& w : csv_rows(data::ratios_p5_e4)) {
            const auto& got = w[0] == "ratio_KSm2" ? ratio_ks : ratio_fam;
            double v = std::stod(w[1]), tol = std::stod(w[2]);
            if (!got || std::fabs(got->convert_to<double>() - v) > tol) problems.push_back(w[0] + " outside tolerance");
        }
    }
    if (!have_expected)
        s << "PASS: no expected values for p=" << p << " e=" << e << "; internal checks only\n";
    if (problems.empty() && have_expected) s << "PASS: table and ratios match expected values\n";
    for (auto& pr : problems)
        s << "FAIL: " << pr << '\n';
    out.write(s.str());
    return problems.empty() ? 0 : 1;
}

void add_output(CLI::App* sc, Output& out, std::vector<std::string> formats)
{
    out.format = formats.front();
    sc->add_option("--out", out.path, "output path (default stdout)");
    sc->add_option("--format", out.format, "output format")->check(CLI::IsMember(formats));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wild ramification workbench"};
    app.require_subcommand(1);
    std::function<int()> action;

    FieldArgs fa;
    Output fo;
    auto* field = app.add_subcommand("field", "field context, Frobenius and traces");
    field->add_option("--p", fa.p, "characteristic")->required()->check(Prime);
    field->add_option("--e", fa.e, "extension degree")->required()->check(CLI::Range(1u, 64u));
    field->add_option("--elem", fa.elem, "element as a JSON array of e coefficients");
    field->add_option("--sub-degree", fa.sub, "trace target degree (divides e)")->check(CLI::PositiveNumber);
    add_output(field, fo, {"json", "text"});
    field->callback([&] { action = [&] { return run_field(fa, fo); }; });

    std::string cover_file;
    bool no_splits = false;
    Output co;
    auto* ca = app.add_subcommand("cover-analyze", "degree, conductor, genus and splitting of a cover file");
    ca->add_option("cover", cover_file, "cover JSON")->required()->check(CLI::ExistingFile);
    ca->add_flag("--no-splits", no_splits, "skip the scan over rational places");
    add_output(ca, co, {"json", "text"});
    ca->callback([&] { action = [&] { return run_cover_analyze(cover_file, !no_splits, co); }; });

    uint32_t ap = 0;
    unsigned ae = 1;
    std::string apoly;
    Output ao;
    auto* adj = app.add_subcommand("adjoint", "palindromic polynomial of f = X S(X) + cX and its kernel");
    adj->add_option("--p", ap)->required()->check(Prime);
    adj->add_option("--e", ae)->required()->check(CLI::Range(1u, 64u));
    adj->add_option("--f", apoly, "f as JSON [[exp, elem], ...] or @file")->required();
    add_output(adj, ao, {"json"});
    adj->callback([&] { action = [&] { return run_adjoint(ap, ae, apoly, ao); }; });

    uint32_t rp = 0;
    unsigned re = 1;
    uint64_t m_min = 0, m_max = 0;
    bool no_inv = false;
    GsOptions ropt;
    Output ro;
    auto* ro_cmd = app.add_subcommand("rayclass-orders", "orders and invariants of G_S(m) for m <= m-max");
    ro_cmd->add_option("--p", rp)->required()->check(Prime);
    ro_cmd->add_option("--e", re)->required()->check(CLI::Range(1u, 64u));
    ro_cmd->add_option("--m-max", m_max)->required();
    ro_cmd->add_option("--m-min", m_min);
    ro_cmd->add_option("--jobs", ropt.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    ro_cmd->add_flag("--no-invariants", no_inv, "orders only");
    add_output(ro_cmd, ro, {"csv", "json"});
    ro_cmd->callback([&] {
        ropt.invariants = !no_inv;
        action = [&] { return run_rayclass_orders(rp, re, m_min, m_max, ropt, ro); };
    });

    uint32_t mp = 0;
    unsigned me = 1;
    auto* m2 = app.add_subcommand("rayclass-m2", "least conductor where G_S(m) is not p-elementary");
    m2->add_option("--p", mp)->required()->check(Prime);
    m2->add_option("--e", me)->required()->check(CLI::Range(1u, 64u));
    m2->callback([&] {
        action = [&] {
            std::cout << find_m2(mp, me) << "\n";
            return 0;
        };
    });

    std::string kind;
    FamilyParams fp;
    Output fbo;
    auto* fb = app.add_subcommand("family-build", "equations of a cover family with its tower ladder");
    fb->add_option("kind", kind)->required()->check(
        CLI::IsMember({"lauter-even", "lauter-odd", "exponent-pn", "table", "table-row"}));
    fb->add_option("--p", fp.p)->required()->check(Prime);
    fb->add_option("--e", fp.e)->required()->check(CLI::Range(1u, 64u));
    fb->add_option("--n", fp.n, "Witt length for exponent-pn")->check(CLI::Range(2u, 8u));
    fb->add_option("--m", fp.m, "conductor for table-row");
    add_output(fb, fbo, {"json"});
    fb->callback([&] {
        action = [&] {
            fbo.write(dump(family_json(kind, fp)));
            return 0;
        };
    });

    std::string bc_file, bc_S;
    Output bo;
    auto* bc = app.add_subcommand("basechange", "substitute X = S(Z) and compare genera");
    bc->add_option("cover", bc_file, "cover JSON")->required()->check(CLI::ExistingFile);
    bc->add_option("--S", bc_S, "additive operator {\"coeffs_F\": [...]} or @file")->required();
    add_output(bc, bo, {"json"});
    bc->callback([&] { action = [&] { return run_basechange(bc_file, bc_S, bo); }; });

    std::string prof_file;
    bool strict = false;
    Output po;
    auto* ba = app.add_subcommand("bigaction-check", "big-action ratios and sieve verdicts for a profile");
    ba->add_option("profile", prof_file, "profile JSON")->required()->check(CLI::ExistingFile);
    ba->add_flag("--strict", strict, "fail when a rule lacks g2_invariants or s");
    add_output(ba, po, {"json"});
    ba->callback([&] {
        action = [&] {
            ActionProfile a = io::profile_from_json(io::parse(read_file(prof_file)));
            po.write(dump(io::to_json(analyze_profile(a, strict))));
            return 0;
        };
    });

    uint32_t tp = 5;
    unsigned te = 4, tjobs = 1;
    Output to;
    auto* rt = app.add_subcommand("reproduce-table", "ray class table up to m_2 with equations and ratios");
    rt->add_option("--p", tp)->check(Prime);
    rt->add_option("--e", te)->check(CLI::Range(1u, 64u));
    rt->add_option("--jobs", tjobs)->check(CLI::Range(1u, 256u));
    add_output(rt, to, {"csv"});
    rt->callback([&] { action = [&] { return run_reproduce(tp, te, tjobs, to); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::ResourceLimit) std::cerr << "raise WR_RESOURCE_CAP to allow larger m*e\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
