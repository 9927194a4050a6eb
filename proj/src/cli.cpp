#include "eccspec/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eccspec/closed_form.hpp"
#include "eccspec/ecc_matrix.hpp"
#include "eccspec/errors.hpp"
#include "eccspec/io.hpp"
#include "eccspec/spectral.hpp"
#include "eccspec/verify.hpp"

namespace eccspec::cli {

namespace {

using nlohmann::json;

// JSON number carrying exactly the digits format_number prints.
double rounded(double x)
{
    return std::stod(format_number(x));
}

struct GraphSource {
    std::string parts;
    std::string edges;
    std::string g6;
    std::string gen;

    void attach(CLI::App* app)
    {
        auto* p = app->add_option("--parts", parts, "partition n1,n2,... of K_{n1,...,np}");
        auto* e = app->add_option("--edges", edges, "edge-list file");
        auto* g = app->add_option("--g6", g6, "graph6 string");
        auto* x = app->add_option("--gen", gen, "generator expression, e.g. strong(K(2,2),complete(2))");
        p->excludes(e, g, x);
        e->excludes(g, x);
        g->excludes(x);
    }

    std::optional<MultipartiteSpec> spec() const
    {
        if (parts.empty()) return std::nullopt;
        return parse_parts(parts);
    }

    Graph resolve() const
    {
        if (!parts.empty()) return build_multipartite(parse_parts(parts));
        if (!edges.empty()) {
            std::ifstream in(edges);
            if (!in) throw ParseError("cannot open edge list " + edges);
            std::stringstream buf;
            buf << in.rdbuf();
            return parse_edge_list(buf.str());
        }
        if (!g6.empty()) return parse_graph6(g6);
        if (!gen.empty()) return build_generator(parse_generator(gen));
        throw ParseError("one of --parts, --edges, --g6 or --gen is required");
    }
};

struct SpectrumRow {
    double value;
    int multiplicity;
    std::string exact;
};

void emit_spectrum(std::ostream& out, const std::string& format, const std::optional<MultipartiteSpec>& spec,
                   const std::string& source, const char* case_tag, const std::vector<SpectrumRow>& rows)
{
    if (format == "csv") {
        for (const auto& r : rows) out << format_number(r.value) << ',' << r.multiplicity << '\n';
        return;
    }
    if (format == "json") {
        json j;
        if (spec) j["parts"] = spec->to_string();
        j["source"] = source;
        if (case_tag) j["case"] = case_tag;
        j["groups"] = json::array();
        for (const auto& r : rows) {
            json g{{"value", rounded(r.value)}, {"multiplicity", r.multiplicity}};
            if (!r.exact.empty()) g["exact"] = r.exact;
            j["groups"].push_back(g);
        }
        out << j.dump(2) << '\n';
        return;
    }
    if (spec) out << "parts: " << spec->to_string() << '\n';
    out << "source: " << source << '\n';
    if (case_tag) out << "case: " << case_tag << '\n';
    for (const auto& r : rows) {
        out << format_number(r.value) << '\t' << r.multiplicity;
        if (!r.exact.empty()) out << '\t' << r.exact;
        out << '\n';
    }
}

std::vector<SpectrumRow> rows_of(const Spectrum& s)
{
    std::vector<SpectrumRow> rows;
    for (const auto& g : s.groups) rows.push_back({g.value, g.multiplicity, {}});
    return rows;
}

std::vector<SpectrumRow> rows_of(const ClosedFormSpectrum& s)
{
    std::vector<SpectrumRow> rows;
    for (const auto& e : s.entries) rows.push_back({e.value, e.multiplicity, e.exact ? e.exact->to_string() : ""});
    return rows;
}

Spectrum numeric_spectrum(const Graph& g, double tol)
{
    return spectrum_of(eccentricity_matrix(g).values, tol);
}

bool cospectral(const Spectrum& a, const Spectrum& b)
{
    if (a.groups.size() != b.groups.size()) return false;
    for (std::size_t i = 0; i < a.groups.size(); ++i)
        if (a.groups[i].multiplicity != b.groups[i].multiplicity || std::abs(a.groups[i].value - b.groups[i].value) > 1e-8)
            return false;
    return true;
}

std::string scientific(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void emit_report_text(std::ostream& out, const VerificationReport& r)
{
    out << "theorem " << r.theorem << " n=" << r.n_min << ".." << r.n_max << " cases=" << r.cases
        << " max_dev=" << scientific(r.max_dev) << ' ' << (r.pass() ? "PASS" : "FAIL") << '\n';
    for (const auto& [k, w] : r.witnesses)
        out << "  witness " << k << ": " << w.spec << " = " << format_number(w.value) << (w.unique ? "" : " (tied)")
            << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
    for (const auto& v : r.violations)
        out << "  violation " << v.spec << " [" << v.check << "] expected " << v.expected << " got " << v.actual << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Eccentricity spectra and energies of graphs"};
    app.name("eccspec");
    app.require_subcommand(1);

    // gen
    GraphSource gen_src;
    std::string gen_out = "edgelist";
    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    gen_src.attach(gen);
    gen->add_option("--out", gen_out, "edgelist | graph6")->check(CLI::IsMember({"edgelist", "graph6"}));

    // eccmx
    GraphSource ecc_src;
    std::string ecc_format = "text";
    auto* eccmx = app.add_subcommand("eccmx", "print the eccentricity matrix");
    ecc_src.attach(eccmx);
    eccmx->add_option("--format", ecc_format)->check(CLI::IsMember({"text", "json", "csv"}));

    // spectrum / energy
    GraphSource spec_src;
    std::string spec_format = "text";
    bool spec_closed = false;
    bool spec_numeric = false;
    double tol = 0.0;  // 0: 1e-8 * max(1, ||M||)
    auto* spectrum = app.add_subcommand("spectrum", "eccentricity spectrum");
    spec_src.attach(spectrum);
    auto* sc = spectrum->add_flag("--closed", spec_closed, "closed form (requires --parts)");
    spectrum->add_flag("--numeric", spec_numeric, "numeric eigensolver (default)")->excludes(sc);
    spectrum->add_option("--format", spec_format)->check(CLI::IsMember({"text", "json", "csv"}));
    spectrum->add_option("--tol", tol, "multiplicity clustering tolerance")->check(CLI::NonNegativeNumber);

    GraphSource en_src;
    std::string en_format = "text";
    bool en_closed = false;
    bool en_numeric = false;
    auto* energy_cmd = app.add_subcommand("energy", "eccentricity energy and spectral radius");
    en_src.attach(energy_cmd);
    auto* ec = energy_cmd->add_flag("--closed", en_closed, "closed form (requires --parts)");
    energy_cmd->add_flag("--numeric", en_numeric, "numeric eigensolver (default)")->excludes(ec);
    energy_cmd->add_option("--format", en_format)->check(CLI::IsMember({"text", "json"}));
    energy_cmd->add_option("--tol", tol)->check(CLI::NonNegativeNumber);

    // bounds
    int bounds_n = 0;
    std::string bounds_format = "text";
    auto* bounds = app.add_subcommand("bounds", "radius and energy bounds over K_{n1..np} on n vertices");
    bounds->add_option("--n", bounds_n)->required();
    bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"text", "json"}));

    // verify
    std::string theorem;
    int v_n = 0;
    int v_nmax = 0;
    int v_cap = 14;
    long long perturb = 0;
    std::string v_format = "json";
    auto* verify = app.add_subcommand("verify", "exhaustive verification run");
    verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"1", "2", "3", "5", "6", "lemma2"}));
    verify->add_option("--n", v_n, "smallest n (theorems 1-3, lemma2) or largest n (5, 6)")->required();
    verify->add_option("--nmax", v_nmax, "largest n");
    verify->add_option("--cap", v_cap, "upper limit on n for exhaustive partition runs");
    verify->add_option("--format", v_format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--tol", tol, "multiplicity clustering tolerance")->check(CLI::NonNegativeNumber);
    verify->add_option("--perturb-split-constant", perturb, "fault injection: shift the split quadratic's constant term");

    // equienergetic
    int eq_n = 0;
    int eq_i = 0;
    std::string eq_format = "text";
    auto* equi = app.add_subcommand("equienergetic", "K_{n,n} x K_2 versus K_{n+i,n,n,n-i}");
    equi->add_option("--n", eq_n)->required();
    equi->add_option("--i", eq_i)->required();
    equi->add_option("--format", eq_format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "eccspec: " << e.what() << '\n';
        return InputError;
    }

    try {
        if (gen->parsed()) {
            const Graph g = gen_src.resolve();
            if (gen_out == "graph6") out << emit_graph6(g) << '\n';
            else out << emit_edge_list(g);
            return Ok;
        }

        if (eccmx->parsed()) {
            const auto e = eccentricity_matrix(ecc_src.resolve());
            if (ecc_format == "json") {
                json rows = json::array();
                for (std::size_t r = 0; r < e.size(); ++r) rows.push_back(std::vector<int>(e.values.row(r).begin(), e.values.row(r).end()));
                out << json{{"n", e.size()}, {"matrix", rows}}.dump() << '\n';
            } else {
                const char sep = ecc_format == "csv" ? ',' : ' ';
                for (std::size_t r = 0; r < e.size(); ++r) {
                    for (std::size_t c = 0; c < e.size(); ++c) out << (c ? std::string(1, sep) : "") << e(r, c);
                    out << '\n';
                }
            }
            return Ok;
        }

        if (spectrum->parsed()) {
            const auto spec = spec_src.spec();
            if (spec_closed) {
                if (!spec) throw ParseError("--closed needs --parts");
                const auto closed = multipartite_spectrum_closed(*spec);
                emit_spectrum(out, spec_format, spec, "closed", to_string(closed.case_tag), rows_of(closed));
            } else {
                emit_spectrum(out, spec_format, spec, "numeric", nullptr, rows_of(numeric_spectrum(spec_src.resolve(), tol)));
            }
            return Ok;
        }

        if (energy_cmd->parsed()) {
            const auto spec = en_src.spec();
            Spectrum s;
            if (en_closed) {
                if (!spec) throw ParseError("--closed needs --parts");
                s = multipartite_spectrum_closed(*spec).to_spectrum();
            } else {
                s = numeric_spectrum(en_src.resolve(), tol);
            }
            const double e = energy(s);
            const double radius = spectral_radius(s);
            if (en_format == "json") {
                json j{{"source", en_closed ? "closed" : "numeric"}, {"energy", rounded(e)}, {"radius", rounded(radius)}};
                if (spec) j["parts"] = spec->to_string();
                out << j.dump() << '\n';
            } else {
                if (spec) out << "parts: " << spec->to_string() << '\n';
                out << "energy: " << format_number(e) << '\n';
                out << "radius: " << format_number(radius) << '\n';
            }
            return Ok;
        }

        if (bounds->parsed()) {
            const double radius = radius_upper_bound(bounds_n);
            const auto eb = energy_bounds(bounds_n);
            if (bounds_format == "json") {
                out << json{{"n", bounds_n},
                            {"radius_upper", rounded(radius)},
                            {"energy_lower", rounded(eb.lower)},
                            {"energy_upper", rounded(eb.upper)}}
                           .dump()
                    << '\n';
            } else {
                out << "n: " << bounds_n << '\n'
                    << "radius_upper: " << format_number(radius) << '\n'
                    << "energy_lower: " << format_number(eb.lower) << '\n'
                    << "energy_upper: " << format_number(eb.upper) << '\n';
            }
            return Ok;
        }

        if (verify->parsed()) {
            VerifyOptions opts;
            opts.group_tol = tol;
            opts.closed.split_constant_offset = perturb;
            const int hi = v_nmax > 0 ? v_nmax : v_n;
            VerificationReport report;
            if (theorem == "5" || theorem == "6") {
                report = theorem == "5" ? verify_product_spectra(hi, opts) : verify_equienergetic(hi, opts);
            } else {
                if (v_n < 4 || hi < v_n) throw PreconditionViolated("need 4 <= --n <= --nmax");
                if (hi > v_cap) throw PreconditionViolated("--nmax exceeds --cap " + std::to_string(v_cap));
                if (theorem == "1")
                    report = verify_range(v_n, hi, [&](int n) { return verify_closed_forms(n, opts); });
                else if (theorem == "lemma2")
                    report = verify_range(v_n, hi, [](int n) { return verify_complement_identity(n); });
                else if (theorem == "2")
                    report = verify_range(v_n, hi, [&](int n) { return verify_radius_bound(n, opts); });
                else
                    report = verify_range(v_n, hi, [&](int n) { return verify_energy_bounds(n, opts); });
            }
            if (v_format == "text") emit_report_text(out, report);
            else out << to_json(report).dump(2) << '\n';
            return report.pass() ? Ok : VerificationFailed;
        }

        if (equi->parsed()) {
            const auto pair = equienergetic_pair(eq_n, eq_i);
            const auto a = numeric_spectrum(pair.product, tol);
            const auto b = numeric_spectrum(pair.multipartite, tol);
            const double ea = energy(a);
            const double eb = energy(b);
            const bool equal_energy = std::abs(ea - eb) < 1e-8;
            const bool same = cospectral(a, b);
            const bool ok = equal_energy && !same;
            const std::string name_a = "K(" + std::to_string(eq_n) + "," + std::to_string(eq_n) + ")xK2";
            const std::string name_b = "K(" + pair.partition.to_string() + ")";
            if (eq_format == "json") {
                auto groups = [](const Spectrum& s) {
                    json g = json::array();
                    for (const auto& x : s.groups) g.push_back({{"value", rounded(x.value)}, {"multiplicity", x.multiplicity}});
                    return g;
                };
                out << json{{"graph_a", name_a},
                            {"graph_b", name_b},
                            {"energy_a", rounded(ea)},
                            {"energy_b", rounded(eb)},
                            {"predicted", rounded(pair.predicted_energy)},
                            {"spectrum_a", groups(a)},
                            {"spectrum_b", groups(b)},
                            {"cospectral", same},
                            {"equienergetic", equal_energy},
                            {"within_usual_range", pair.within_usual_range}}
                           .dump(2)
                    << '\n';
            } else {
                out << name_a << " energy: " << format_number(ea) << '\n';
                out << name_b << " energy: " << format_number(eb) << '\n';
                out << "predicted: " << format_number(pair.predicted_energy) << '\n';
                out << "equienergetic: " << (equal_energy ? "yes" : "no") << '\n';
                out << "cospectral: " << (same ? "yes" : "no") << '\n';
            }
            return ok ? Ok : VerificationFailed;
        }
    } catch (const Error& e) {
        err << "eccspec: " << e.what() << '\n';
        return InputError;
    }
    return InputError;
}

}  // namespace eccspec::cli
