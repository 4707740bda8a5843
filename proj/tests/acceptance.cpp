// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "braidcob/garside.hpp"
#include "braidcob/replication.hpp"
#include "braidcob/seifert.hpp"
#include "oracles.hpp"

using namespace braidcob;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

BraidWord rep(int n, const std::vector<Letter>& p, int times) {
    std::vector<Letter> w;
    for (int i = 0; i < times; ++i) w.insert(w.end(), p.begin(), p.end());
    return BraidWord(n, w);
}

BraidWord trefoil_sum(int N) {
    std::vector<Letter> w;
    for (Letter g = 1; g <= N; ++g) w.insert(w.end(), {g, g, g});
    return BraidWord(N + 1, w);
}

// Every sigma_6 evaluation from criteria 3-5, replayed for criterion 11.
struct Evaluation {
    BraidWord word;
    int value;
};
std::vector<Evaluation> evaluations;

int recorded_sigma6(const BraidWord& w) {
    const int v = sigma6(w);
    evaluations.push_back({w, v});
    return v;
}

int failures = 0;

void report(int id, const std::string& what, const std::function<std::string(bool&)>& body) {
    const auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (ok ? "PASS" : "FAIL") << " [" << id << "] " << what << " | " << detail << " (" << seconds_since(t0)
         << " s)";
    std::cout << line.str() << std::endl;
}

}  // namespace

int main() {
    report(1, "braid identities (abc)^12 = (a^2cba^3cb)^4 and (a^2b)^4 = (a^3b)^3", [](bool& ok) {
        const auto t0 = Clock::now();
        const bool a = equal(rep(4, {1, 2, 3}, 12), rep(4, {1, 1, 3, 2, 1, 1, 1, 3, 2}, 4));
        const double ta = seconds_since(t0);
        const auto t1 = Clock::now();
        const bool b = equal(rep(4, {1, 1, 2}, 4), rep(4, {1, 1, 1, 2}, 3));
        const double tb = seconds_since(t1);
        ok = a && b && ta < 1 && tb < 1;
        std::ostringstream s;
        s << "first " << a << " in " << ta << " s, second " << b << " in " << tb << " s";
        return s.str();
    });

    report(2, "fourstrand: 10 cube removals to the trivial braid; coxeter: 12", [](bool& ok) {
        const CertificateReport f = verify(fourstrand_certificate());
        const CertificateReport c = verify(coxeter_certificate());
        const BraidWord triv(4, {});
        ok = f.passed() && f.tcube_steps == 10 && f.total_cost == 10 && f.final_state.trefoils_pos == 10 &&
             f.final_state.closures.size() == 1 && equal(f.final_state.closures[0], triv) && c.passed() &&
             c.tcube_steps == 12 && c.total_cost == 12 && c.final_state.trefoils_pos == 12 &&
             equal(c.final_state.closures[0], triv);
        return "fourstrand tcubes " + std::to_string(f.tcube_steps) + ", coxeter tcubes " +
               std::to_string(c.tcube_steps);
    });

    report(3, "sigma6(3_1) = 2 and sigma6(3_1^N) = 2N for N <= 50", [](bool& ok) {
        ok = recorded_sigma6(BraidWord(2, {1, 1, 1})) == 2;
        int bad = 0;
        for (int N = 1; N <= 50; ++N)
            if (recorded_sigma6(trefoil_sum(N)) != 2 * N) ++bad;
        ok = ok && bad == 0;
        return std::to_string(bad) + " mismatches";
    });

    report(4, "|sigma6(T(6,m)) - 5m/3| <= 12 for 1 <= m <= 30, under 5 minutes", [](bool& ok) {
        const auto t0 = Clock::now();
        double worst = 0;
        std::string signed_e;
        for (int m = 1; m <= 30; ++m) {
            const double e = recorded_sigma6(torus_word(6, m)) - 5.0 * m / 3.0;
            worst = std::max(worst, std::abs(e));
            if (m % 6 == 0) signed_e += (signed_e.empty() ? "" : ",") + std::to_string(std::lround(e));
        }
        const double t = seconds_since(t0);
        ok = worst <= 12 && t < 300;
        std::ostringstream s;
        s << "max |E| " << worst << ", E at m=6,12,..,30: " << signed_e;
        return s.str();
    });

    report(5, "|sigma6(T(m,n)) - 5mn/18| <= 2m for m in {6,12}, n <= 20", [](bool& ok) {
        int bad = 0;
        double worst = 0;
        for (int m : {6, 12})
            for (int n = 1; n <= 20; ++n) {
                const double d = std::abs(recorded_sigma6(torus_word(m, n)) - 5.0 * m * n / 18.0);
                worst = std::max(worst, d / (2 * m));
                if (d > 2 * m) ++bad;
            }
        ok = bad == 0;
        std::ostringstream s;
        s << bad << " violations, worst ratio " << worst;
        return s.str();
    });

    report(6, "signature_at equals the torus oracle for p in {2,3}, q <= 13, 20 random theta", [](bool& ok) {
        std::mt19937 rng(2024);
        int checked = 0, bad = 0;
        for (int p : {2, 3})
            for (int q = 1; q <= 13; ++q) {
                if (std::gcd(p, q) != 1) continue;
                int drawn = 0;
                while (drawn < 20) {
                    const long b = 10007, a = 1 + static_cast<long>(rng() % (b - 1));
                    const Rational theta(a, b);
                    if (!oracle::litherland(p, q, a, b)) continue;  // jump
                    ++drawn;
                    ++checked;
                    const int got = signature_at(torus_word(p, q), theta).signature;
                    if (got != torus_signature_oracle(p, q, theta) || got != *oracle::litherland(p, q, a, b)) ++bad;
                }
            }
        ok = bad == 0 && checked > 0;
        return std::to_string(checked) + " evaluations, " + std::to_string(bad) + " mismatches";
    });

    report(7, "trefoil stacks: cost = 2(n'-n) = lower bound for 10 random pairs", [](bool& ok) {
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> d(0, 20);
        ok = true;
        std::string pairs;
        for (int k = 0; k < 10;) {
            const int a = d(rng), b = d(rng);
            if (a >= b) continue;
            ++k;
            const CertificateReport r = verify(trefoil_stack_certificate(a, b));
            ok = ok && r.passed() && r.total_cost == 2 * (b - a) && r.lower_bound == r.total_cost;
            pairs += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        }
        return pairs;
    });

    report(8, "sixstrand l in {2,3}: verifies, |cost + sigma6(T(6,12l+6)) - 40l| <= 200, < 2 min each",
           [](bool& ok) {
               ok = true;
               std::ostringstream s;
               for (int l : {2, 3}) {
                   const auto t0 = Clock::now();
                   const CertificateReport r = verify(sixstrand_certificate(l));
                   const double t = seconds_since(t0);
                   const int sig = sigma6(torus_word(6, 12 * l + 6));
                   const long err = r.total_cost + sig - 40L * l;
                   ok = ok && r.passed() && r.final_state.trefoils_pos == 20 * l && std::labs(err) <= 200 && t < 120;
                   s << "l=" << l << " cost " << r.total_cost << " sigma6 " << sig << " error " << err << " verify "
                     << t << " s; ";
               }
               return s.str();
           });

    report(9, "theorem_bound grid m,n in {6,12,18}, N = ceil(7mn/24)+{0,5,10}", [](bool& ok) {
        ok = true;
        long worst = 0;
        int points = 0;
        for (int m : {6, 12, 18})
            for (int n : {6, 12, 18})
                for (int d : {0, 5, 10}) {
                    const BoundReport r = theorem_bound(m, n, (7L * m * n + 23) / 24 + d);
                    ++points;
                    ok = ok && r.lower <= r.upper && std::labs(r.slack) <= 20L * m + 20L * n + 200;
                    worst = std::max(worst, r.slack);
                }
        return std::to_string(points) + " points, largest slack " + std::to_string(worst);
    });

    report(10, "isotopy audits for bbl_word and cabled_torus_word, l <= 3", [](bool& ok) {
        ok = true;
        const std::vector<Rational> thetas{Rational(1, 9), Rational(1, 5), Rational(2, 7), Rational(3, 8),
                                           Rational(12, 25)};
        for (int l = 1; l <= 3; ++l) {
            const BraidWord b = bbl_word(l), t3 = torus_word(3, 6 * l + 3);
            const BraidWord c = cabled_torus_word(l), t6 = torus_word(6, 12 * l + 6);
            ok = ok && components(b) == components(t3) && exponent_sum(b) == exponent_sum(t3) &&
                 alexander(b) == alexander(t3);
            ok = ok && components(c) == components(t6) && exponent_sum(c) == exponent_sum(t6) &&
                 c.size() == static_cast<std::size_t>(60 * l + 30) && alexander(c) == alexander(t6);
            for (const Rational& th : thetas) {
                const SignatureProfile x = signature_at(b, th), y = signature_at(t3, th);
                const SignatureProfile u = signature_at(c, th), v = signature_at(t6, th);
                ok = ok && x.signature == y.signature && x.nullity == y.nullity && u.signature == v.signature &&
                     u.nullity == v.nullity;
            }
        }
        return std::string("components, exponent sum, letter count, Alexander, 5 signatures (audit only)");
    });

    report(11, "every sigma6 from criteria 3-5 reproduces at doubled precision and one more halving", [](bool& ok) {
        int bad = 0;
        for (const Evaluation& e : evaluations) {
            Sigma6Options o;
            o.precision.start_bits *= 2;
            o.precision.max_bits *= 2;
            o.start_offset /= 2;
            if (sigma6(e.word, o) != e.value) ++bad;
        }
        ok = bad == 0 && !evaluations.empty();
        return std::to_string(evaluations.size()) + " evaluations, " + std::to_string(bad) + " changed";
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
