#include "qcrank/cli.hpp"

#include "qcrank/qproducts.hpp"
#include "qcrank/report.hpp"
#include "qcrank/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

namespace qcrank {
namespace {

struct Options {
    std::string seq_name;
    Exponent limit = 0;
    std::string eta_spec;
    Exponent eta_order = 0;
    std::string modulus;
    std::string format = "bfile";

    std::vector<std::string> checks;
    bool all = false;
    bool list = false;
    std::optional<Exponent> order;
    std::string report_path;
    unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<mpz_class> parse_modulus(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    mpz_class m;
    if (m.set_str(text, 10) != 0 || m < 2)
        throw UsageError("--mod must be an integer >= 2, got '" + text + "'");
    return m;
}

// Writes (exponent, coefficient) rows for e = from..to.
void emit(std::ostream& out, const std::string& format, const std::string& name,
          const std::optional<mpz_class>& m, const Series& s, Exponent from, Exponent to)
{
    if (format == "json") {
        nlohmann::json values = nlohmann::json::array();
        for (Exponent e = from; e <= to; ++e)
            values.push_back(s.coeff(e).get_str());
        nlohmann::json j = {{"name", name},
                            {"modulus", m ? nlohmann::json(m->get_str()) : nlohmann::json(nullptr)},
                            {"offset", from},
                            {"values", values}};
        out << j.dump() << "\n";
        return;
    }
    const char sep = format == "csv" ? ',' : ' ';
    if (format == "csv")
        out << "n,value\n";
    for (Exponent e = from; e <= to; ++e)
        out << e << sep << s.coeff(e).get_str() << "\n";
}

int cmd_seq(const Options& o, std::ostream& out)
{
    auto m = parse_modulus(o.modulus);
    const Exponent N = o.limit;
    Series s;
    if (o.seq_name == "a") {
        s = a_series(N, m);
    } else if (o.seq_name == "p") {
        s = p_series(N, m);
    } else if (o.seq_name == "C") {
        s = c_series(N, m);
    } else {
        Series p = p_series(N), c = c_series(N);
        Series twice = o.seq_name == "ce" ? p + c : p - c;
        std::vector<mpz_class> halves;
        for (Exponent n = 0; n <= N; ++n)
            halves.push_back(twice.coeff(n) / 2);
        s = Series::from_coefficients(0, halves, N);
        if (m)
            s = reduce_mod(s, *m);
    }
    emit(out, o.format, o.seq_name, m, s, 0, N);
    return exit_ok;
}

int cmd_eta(const Options& o, std::ostream& out, std::ostream& err)
{
    auto m = parse_modulus(o.modulus);
    EtaQuotientSpec spec;
    try {
        spec = parse_eta_spec(o.eta_spec);
    } catch (const ParseError& e) {
        err << "error: cannot parse eta spec: " << e.what()
            << "\n  " << o.eta_spec << "\n  " << std::string(e.position(), ' ') << "^\n";
        return exit_usage;
    }
    Series s = eta_expand(spec, o.eta_order, m);
    emit(out, o.format, spec.to_string(), m, s, std::min<Exponent>(0, s.valuation()), o.eta_order);
    return exit_ok;
}

void print_result(std::ostream& out, const CheckResult& r)
{
    out << (r.status == CheckStatus::pass ? "PASS " : "FAIL ") << r.id << "  order " << r.order_used
        << "  " << static_cast<long>(r.runtime_ms) << " ms";
    if (r.first_failure) {
        out << "  first failure";
        if (r.first_failure->index >= 0)
            out << " at q^" << r.first_failure->index;
        out << ": expected " << r.first_failure->expected << ", got " << r.first_failure->actual;
    }
    if (!r.note.empty())
        out << "  (" << r.note << ")";
    out << "\n";
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const Registry& reg = Registry::catalogue();
    if (o.list) {
        for (const auto& c : reg.checks())
            out << c.id << "  " << c.default_order << "  " << c.anchor << "\n";
        return exit_ok;
    }
    if (o.order && *o.order < kMinCheckOrder)
        throw UsageError("--order must be at least " + std::to_string(kMinCheckOrder));

    std::vector<std::string> ids, unknown;
    if (o.all)
        for (const auto& c : reg.checks())
            ids.push_back(c.id);
    for (const auto& id : o.checks) {
        if (!reg.find(id))
            unknown.push_back(id);
        else if (std::find(ids.begin(), ids.end(), id) == ids.end())
            ids.push_back(id);
    }
    if (ids.empty() && unknown.empty())
        throw UsageError("verify needs --check ID or --all");
    for (const auto& id : unknown)
        err << "error: unknown check id '" << id << "'\n";

    auto start = std::chrono::steady_clock::now();
    ReportDocument doc;
    doc.order_override = o.order;
    doc.checks = reg.run_many(ids, o.order, o.jobs);
    doc.wall_clock_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    for (const auto& r : doc.checks)
        print_result(out, r);

    const auto failed =
        std::count_if(doc.checks.begin(), doc.checks.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
    out << doc.checks.size() - failed << "/" << doc.checks.size() << " checks passed\n";

    if (!o.report_path.empty()) {
        std::ofstream f(o.report_path);
        if (!(f << render_report(doc))) {
            err << "error: cannot write report to " << o.report_path << "\n";
            return exit_usage;
        }
    }
    if (!unknown.empty())
        return exit_usage;
    return failed ? exit_verification_failed : exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact truncated q-series engine for crank and partition identities", "qcrank"};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"bfile", "json", "csv"};

    auto* seq = app.add_subcommand("seq", "print a(n), C(n), c_e(n), c_o(n) or p(n) for n = 0..limit");
    seq->add_option("name", o.seq_name, "sequence")
        ->required()
        ->check(CLI::IsMember({"a", "C", "ce", "co", "p"}));
    seq->add_option("--limit", o.limit, "largest n")->required()->check(CLI::Range(Exponent(1), kOrderCap));
    seq->add_option("--mod", o.modulus, "reduce modulo m");
    seq->add_option("--format", o.format, "bfile, json or csv")->check(CLI::IsMember(formats));

    auto* eta = app.add_subcommand("eta", "expand an eta quotient such as 1:-3,2:2;qshift=0");
    eta->add_option("spec", o.eta_spec, "delta:exponent list")->required();
    eta->add_option("--order", o.eta_order, "largest exponent")->required()->check(CLI::Range(Exponent(0), kOrderCap));
    eta->add_option("--mod", o.modulus, "reduce modulo m");
    eta->add_option("--format", o.format, "bfile, json or csv")->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "run catalogued checks");
    verify->add_option("--check", o.checks, "check id (repeatable)");
    verify->add_flag("--all", o.all, "run every check");
    verify->add_flag("--list", o.list, "list check ids and default orders");
    verify->add_option("--order", o.order, "override every check's default order");
    verify->add_option("--report", o.report_path, "write a JSON report here");
    verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (seq->parsed())
            return cmd_seq(o, out);
        if (eta->parsed())
            return cmd_eta(o, out, err);
        return cmd_verify(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace qcrank
