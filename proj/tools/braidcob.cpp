#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "braidcob/cert_json.hpp"
#include "braidcob/garside.hpp"
#include "braidcob/replication.hpp"
#include "braidcob/seifert.hpp"
#include "braidcob/signature.hpp"

using namespace braidcob;

namespace {

struct WordArgs {
    int strands = 0;
    std::string letters;
    std::string file;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BraidWord load_word(const WordArgs& a) {
    if (!a.file.empty()) return word_from_json(parse_json(read_file(a.file)));
    if (a.strands < 1) throw ValidationError("--strands is required with a letter list");
    return BraidWord(a.strands, parse_letters(a.letters));
}

void add_word_options(CLI::App* cmd, WordArgs& a, const std::string& prefix = "") {
    const std::string p = prefix.empty() ? "" : prefix + "-";
    cmd->add_option("--" + p + "strands", a.strands, "strand count");
    cmd->add_option("--" + (prefix.empty() ? std::string("word") : prefix), a.letters, "comma-separated letters");
    cmd->add_option("--" + p + "file", a.file, "JSON word file {\"n\":..,\"w\":[..]}");
}

Rational parse_theta(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) throw ValidationError("");
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ValidationError("theta must look like p/q, got \"" + text + "\"");
    }
}

std::string rational_text(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (Letter k : parse_letters(text)) out.push_back(k);
    return out;
}

Sigma6Options sigma6_options() {
    Sigma6Options o;
    if (const char* bits = std::getenv("BRAIDCOB_PRECISION_BITS")) {
        try {
            o.precision.start_bits = std::stoi(bits);
        } catch (const std::exception&) {
            throw ValidationError(std::string("BRAIDCOB_PRECISION_BITS is not an integer: ") + bits);
        }
        if (o.precision.start_bits < 16) throw ValidationError("BRAIDCOB_PRECISION_BITS must be at least 16");
        o.precision.max_bits = std::max(o.precision.max_bits, 2 * o.precision.start_bits);
    }
    return o;
}

std::string factor_text(const SimpleFactor& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + std::to_string(f[i] + 1);
    return s + "]";
}

void print_report(const CertificateReport& r) {
    for (const StepVerdict& v : r.step_log)
        std::cout << "  " << v.index << '\t' << v.op << '\t' << v.cost << '\t' << v.verdict << '\n';
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("not evaluated"); };
    std::cout << "cost " << r.total_cost << " (" << r.tcube_steps << " tcube)\n"
              << "sigma6 start " << opt(r.sigma6_start) << ", end " << opt(r.sigma6_end) << '\n'
              << "lower bound " << opt(r.lower_bound) << '\n';
    if (!r.diagnosis.empty()) std::cout << "diagnosis: " << r.diagnosis << '\n';
    std::cout << (r.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid words, signatures and cobordism certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // braid
    auto* braid = app.add_subcommand("braid", "braid word operations");
    braid->require_subcommand(1);
    WordArgs nf_word;
    auto* nf = braid->add_subcommand("nf", "left normal form");
    add_word_options(nf, nf_word);
    WordArgs lhs, rhs;
    int eq_strands = 0;
    auto* eq = braid->add_subcommand("eq", "decide equality of two braids");
    eq->add_option("--strands", eq_strands, "strand count for --lhs/--rhs");
    eq->add_option("--lhs", lhs.letters, "comma-separated letters");
    eq->add_option("--rhs", rhs.letters, "comma-separated letters");
    eq->add_option("--lhs-file", lhs.file, "JSON word file");
    eq->add_option("--rhs-file", rhs.file, "JSON word file");

    // link
    auto* link = app.add_subcommand("link", "invariants of braid closures");
    link->require_subcommand(1);
    WordArgs sig_word;
    std::string theta;
    bool want_sigma6 = false;
    auto* sig = link->add_subcommand("sigma", "Levine-Tristram signature or sigma_6");
    add_word_options(sig, sig_word);
    auto* theta_opt = sig->add_option("--theta", theta, "p/q in (0,1)");
    auto* s6_flag = sig->add_flag("--sigma6", want_sigma6, "limit at 1/6 from above, sigma_6(3_1)=2");
    theta_opt->excludes(s6_flag);
    WordArgs alex_word;
    auto* alex = link->add_subcommand("alexander", "Alexander polynomial");
    add_word_options(alex, alex_word);

    // cert
    auto* cert = app.add_subcommand("cert", "cobordism certificates");
    cert->require_subcommand(1);
    auto* gen = cert->add_subcommand("gen", "emit a built-in certificate as JSON");
    gen->require_subcommand(1);
    gen->add_subcommand("fourstrand", "a^-3 c^-3 (abc)^12 to the trivial 4-braid");
    gen->add_subcommand("coxeter", "(abc)^12 to the trivial 4-braid");
    int six_l = 2;
    auto* six = gen->add_subcommand("sixstrand", "T(6,12l+6) to 3_1^{20l}");
    six->add_option("--l", six_l, "l >= 2")->required();
    long tn = 0, tnp = 0;
    auto* tref = gen->add_subcommand("trefoils", "3_1^{n'} to 3_1^n");
    tref->add_option("--n", tn)->required();
    tref->add_option("--nprime", tnp)->required();
    std::string cert_file;
    bool no_sigma = false;
    auto* ver = cert->add_subcommand("verify", "replay a certificate file");
    ver->add_option("file", cert_file, "certificate JSON")->required();
    ver->add_flag("--no-sigma6", no_sigma, "skip the sigma_6 bound audit");

    // tables
    auto* paper = app.add_subcommand("paper", "bound tables");
    paper->require_subcommand(1);
    int mmax = 12, nmax = 20;
    auto* gg = paper->add_subcommand("gg-table", "sigma_6(T(m,n)) against 5mn/18");
    gg->add_option("--mmax", mmax);
    gg->add_option("--nmax", nmax);
    std::string grid = "6,12,18", offsets = "0,5,10";
    auto* thm = paper->add_subcommand("theorem-table", "upper/lower bounds for d(T(m,n), 3_1^N) as CSV");
    thm->add_option("--grid", grid, "values of m and n");
    thm->add_option("--offsets", offsets, "N - ceil(7mn/24)");
    int cm = 6, cn = 6;
    auto* clover = paper->add_subcommand("clover", "5mn/18 - 20m - 20n - 200");
    clover->add_option("--m", cm)->required();
    clover->add_option("--n", cn)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nf->parsed()) {
            const CanonicalBraid c = normal_form(load_word(nf_word));
            if (json) {
                Json factors = Json::array();
                for (const SimpleFactor& f : c.factors) {
                    std::vector<int> img;
                    for (auto v : f) img.push_back(v + 1);
                    factors.push_back(img);
                }
                std::cout << Json{{"strands", c.strands}, {"infimum", c.infimum}, {"factors", factors},
                                  {"word", word_to_json(to_word(c))}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << "Delta^" << c.infimum;
                for (const SimpleFactor& f : c.factors) std::cout << ' ' << factor_text(f);
                std::cout << '\n' << to_string(to_word(c)) << '\n';
            }
        } else if (eq->parsed()) {
            if (lhs.file.empty()) lhs.strands = eq_strands;
            if (rhs.file.empty()) rhs.strands = eq_strands;
            const bool same = equal(load_word(lhs), load_word(rhs));
            if (json)
                std::cout << Json{{"equal", same}}.dump() << '\n';
            else
                std::cout << (same ? "equal" : "not equal") << '\n';
        } else if (sig->parsed()) {
            const BraidWord w = load_word(sig_word);
            if (want_sigma6) {
                const Sigma6Result r = sigma6_limit(w, sigma6_options());
                if (json)
                    std::cout << Json{{"sigma6", r.value}, {"offset", rational_text(r.offset)},
                                      {"evaluations", r.evaluations}}
                                     .dump()
                              << '\n';
                else
                    std::cout << r.value << '\n';
            } else {
                if (theta.empty()) throw ValidationError("give --theta p/q or --sigma6");
                const SignatureProfile p = signature_at(w, parse_theta(theta), sigma6_options().precision);
                if (json)
                    std::cout << Json{{"theta", rational_text(p.theta)}, {"signature", p.signature},
                                      {"nullity", p.nullity}, {"precision_bits", p.precision_bits}}
                                     .dump()
                              << '\n';
                else
                    std::cout << "signature " << p.signature << " nullity " << p.nullity << '\n';
            }
        } else if (alex->parsed()) {
            const AlexanderPolynomial a = alexander(load_word(alex_word));
            if (json) {
                Json coeffs = Json::array();
                for (const BigInt& c : a.coefficients) coeffs.push_back(c.str());
                std::cout << Json{{"coefficients", coeffs}, {"text", a.to_string()}}.dump() << '\n';
            } else {
                std::cout << a.to_string() << '\n';
            }
        } else if (gen->parsed()) {
            CobordismCertificate c;
            if (gen->got_subcommand("fourstrand"))
                c = fourstrand_certificate();
            else if (gen->got_subcommand("coxeter"))
                c = coxeter_certificate();
            else if (six->parsed())
                c = sixstrand_certificate(six_l);
            else
                c = trefoil_stack_certificate(tn, tnp);
            std::cout << certificate_to_json(c).dump(1) << '\n';
        } else if (ver->parsed()) {
            const CobordismCertificate c = certificate_from_json(parse_json(read_file(cert_file)));
            VerifyOptions o;
            o.sigma6 = sigma6_options();
            o.evaluate_sigma6 = !no_sigma;
            const CertificateReport r = verify(c, o);
            if (json)
                std::cout << report_to_json(r).dump(1) << '\n';
            else
                print_report(r);
            return r.passed() ? 0 : 1;
        } else if (gg->parsed()) {
            Json rows = Json::array();
            if (!json) std::cout << "m\tn\tsigma6\t5mn/18\ttol\twithin\n";
            for (int m = 1; m <= mmax; ++m)
                for (int n = 1; n <= nmax; ++n) {
                    const int s = sigma6(torus_word(m, n), sigma6_options());
                    const Estimate e = gg_estimate(m, n);
                    const Rational d = Rational(s) - e.center;
                    const bool within = (d < Rational(0) ? -d : d) <= Rational(e.tolerance);
                    if (json)
                        rows.push_back(Json{{"m", m}, {"n", n}, {"sigma6", s}, {"center", rational_text(e.center)},
                                            {"tolerance", e.tolerance}, {"within", within}});
                    else
                        std::cout << m << '\t' << n << '\t' << s << '\t' << rational_text(e.center) << '\t'
                                  << e.tolerance << '\t' << (within ? "yes" : "no") << '\n';
                }
            if (json) std::cout << rows.dump(1) << '\n';
        } else if (thm->parsed()) {
            BoundOptions o;
            o.sigma6 = sigma6_options();
            std::vector<BoundReport> rows;
            const std::vector<int> values = parse_ints(grid);
            for (int m : values)
                for (int n : values)
                    for (int d : parse_ints(offsets)) rows.push_back(theorem_bound(m, n, (7L * m * n + 23) / 24 + d, o));
            if (json) {
                Json out = Json::array();
                for (const BoundReport& r : rows) out.push_back(bound_to_json(r));
                std::cout << out.dump(1) << '\n';
            } else {
                write_bound_csv(std::cout, rows);
            }
            for (const BoundReport& r : rows)
                if (!r.pass) return 1;
        } else if (clover->parsed()) {
            const Rational v = clover_bound(cm, cn);
            if (json)
                std::cout << Json{{"m", cm}, {"n", cn}, {"clover_bound", rational_text(v)},
                                  {"vacuous", v <= Rational(0)}}
                                 .dump()
                          << '\n';
            else
                std::cout << rational_text(v) << (v <= Rational(0) ? " (vacuous)" : "") << '\n';
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
