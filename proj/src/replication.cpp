#include "braidcob/replication.hpp"

#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <tuple>

#include "braidcob/garside.hpp"
#include "braidcob/seifert.hpp"

namespace braidcob {
namespace {

using Letters = std::vector<Letter>;

void append(Letters& out, const Letters& more, int times = 1) {
    for (int i = 0; i < times; ++i) out.insert(out.end(), more.begin(), more.end());
}

Letters inverse_letters(const Letters& w) {
    Letters out(w.rbegin(), w.rend());
    for (Letter& k : out) k = -k;
    return out;
}

// Replays steps as they are recorded, so a generator bug surfaces at build time.
class Script {
public:
    explicit Script(FormalLink start) : start_(start), state_(std::move(start)) {}

    void push(const Step& s) {
        try {
            state_ = apply_step(state_, s);
        } catch (const StepError& e) {
            throw std::logic_error("certificate construction failed at step " + std::to_string(steps_.size()) + " (" +
                                   step_name(s) + "): " + e.what());
        }
        steps_.push_back(s);
    }

    const Letters& word(std::size_t c = 0) const { return state_.closures.at(c).letters(); }
    int strands(std::size_t c = 0) const { return state_.closures.at(c).strands(); }

    void equiv(Letters target, std::size_t c = 0) {
        push(step::Equivalence{c, BraidWord(strands(c), std::move(target))});
    }
    // Replaces word[pos, pos+len) by `with` through an Equivalence step.
    void rewrite(std::size_t pos, std::size_t len, const Letters& with, std::size_t c = 0) {
        const Letters& w = word(c);
        Letters t(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        append(t, with);
        t.insert(t.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
        equiv(std::move(t), c);
    }
    void tcube(std::size_t pos, std::size_t c = 0) {
        const Letter k = word(c).at(pos);
        push(step::TCube{c, pos, std::abs(k), k > 0 ? 1 : -1});
    }
    void del(std::size_t pos, std::size_t c = 0) { push(step::SaddleDelete{c, pos}); }
    void ins(std::size_t pos, Letter k, std::size_t c = 0) { push(step::SaddleInsert{c, pos, k}); }
    void stab(int sign, std::size_t c = 0) { push(step::MarkovStab{c, sign}); }
    void destab(std::size_t c = 0) { push(step::MarkovDestab{c}); }
    void cross(std::size_t pos, std::size_t c = 0) { push(step::CrossingChange{c, pos}); }

    CobordismCertificate finish(std::string meta) const { return {start_, steps_, state_, std::move(meta)}; }

private:
    FormalLink start_;
    FormalLink state_;
    std::vector<Step> steps_;
};

// First cube of `k` in word[from, to).
std::size_t find_cube(const Letters& w, std::size_t from, std::size_t to, Letter k) {
    for (std::size_t i = from; i + 3 <= to; ++i)
        if (w[i] == k && w[i + 1] == k && w[i + 2] == k) return i;
    throw std::logic_error("certificate construction failed: no cube of " + std::to_string(k));
}

// Cube-removal chain on (abc)^12 sitting at word[o, o+36), ending in c^2 a^3 c
// (6 letters) after 10 cubes.
void fourstrand_core(Script& s, std::size_t o) {
    const Letter a = 1, b = 2, c = 3;
    Letters gamma;
    append(gamma, {a, a, c, b, a, a, a, c, b}, 4);
    s.rewrite(o, 36, gamma);
    for (std::size_t p = 0; p < 4; ++p) s.tcube(o + 6 * p + 4);
    // now (a^2 (cb)^2)^4
    Letters v{c, c};
    append(v, {a, a, b, c, c, c}, 3);
    append(v, {a, a, b, c});
    s.rewrite(o, 24, v);
    for (int i = 0; i < 3; ++i) s.tcube(find_cube(s.word(), o, o + 24 - 3 * i, c));
    Letters u{c, c};
    append(u, {a, a, a, b}, 3);
    u.push_back(c);
    s.rewrite(o, 15, u);
    s.tcube(o + 6);  // second a^3
    s.tcube(o + 7);  // third a^3
    s.tcube(o + 5);  // b^3
}

Letters coxeter_power() {
    Letters w;
    append(w, {1, 2, 3}, 12);
    return w;
}

FormalLink single(BraidWord w, long tpos = 0) {
    FormalLink f;
    f.closures.push_back(std::move(w));
    f.trefoils_pos = tpos;
    return f;
}

long ceil_div(long p, long q) { return (p + q - 1) / q; }

}  // namespace

BraidWord torus_word(int m, int n) {
    if (m < 1 || n < 0) throw ValidationError("torus_word needs m >= 1, n >= 0");
    Letters period;
    for (int i = 1; i < m; ++i) period.push_back(i);
    Letters w;
    append(w, period, n);
    return BraidWord(m, std::move(w));
}

namespace {
Letters bbl_half(int l) {
    Letters h{2, 1, 1, 1, 1, 2, 1, 1, 1};
    append(h, {2, 1, 1, 1, 1, 1}, l - 1);
    return h;
}
}  // namespace

BraidWord bbl_word(int l) {
    if (l < 1) throw ValidationError("bbl_word needs l >= 1");
    Letters w;
    append(w, bbl_half(l), 2);
    return BraidWord(3, std::move(w));
}

BraidWord cabled_torus_word(int l) {
    if (l < 1) throw ValidationError("cabled_torus_word needs l >= 1");
    Letters w;
    append(w, {1, 3, 5}, 4 * l + 2);
    append(w, cable2(bbl_word(l)).letters());
    return BraidWord(6, std::move(w));
}

BraidWord knot_K_word(int k, int l) {
    if (k < 1 || l < 1) throw ValidationError("knot_K_word needs k, l >= 1");
    if (std::gcd(k, l) != 1) throw ValidationError("knot_K_word needs coprime k, l");
    Letters w;
    append(w, {-5, -4, -3, -2, -1}, 1 + 6 * k * l);
    append(w, torus_word(6 * k, 6 * l).letters());
    return BraidWord(6 * k, std::move(w));
}

CobordismCertificate fourstrand_certificate() {
    Letters w{-1, -1, -1, -3, -3, -3};
    append(w, coxeter_power());
    Script s(single(BraidWord(4, w)));
    fourstrand_core(s, 6);
    s.equiv({});
    return s.finish("fourstrand: a^-3 c^-3 (abc)^12 to the trivial 4-braid by 10 cube removals");
}

CobordismCertificate coxeter_certificate() {
    Script s(single(BraidWord(4, coxeter_power())));
    fourstrand_core(s, 0);
    s.equiv({3, 3, 3, 1, 1, 1});
    s.tcube(0);
    s.tcube(0);
    return s.finish("coxeter: (abc)^12 to the trivial 4-braid by 12 cube removals");
}

CobordismCertificate sixstrand_certificate(int l) {
    if (l < 2) throw ValidationError("sixstrand_certificate needs l >= 2");
    const BraidWord start = cabled_torus_word(l);
    Script s(single(start));

    // Phase 1: slide framing letters behind every kept (bacb)^5 and drop the rest.
    const Letters half = bbl_half(l);
    Letters core;
    append(core, half, 2);
    const std::array<Letters, 2> cable{Letters{2, 1, 3, 2}, Letters{4, 3, 5, 4}};
    std::array<int, 3> at{0, 1, 2};  // front pair now sitting at each pair position
    std::array<long, 3> used{0, 0, 0};
    struct Entry {
        Letter k;
        bool keep;
    };
    std::vector<Entry> body;
    const std::size_t dropped = 9;  // b a^4 b a^3 per half
    for (std::size_t t = 0; t < core.size(); ++t) {
        const std::size_t in_half = t % half.size();
        const bool keep = in_half >= dropped;
        const Letter g = core[t];
        for (Letter k : cable[static_cast<std::size_t>(g - 1)]) body.push_back({k, keep});
        std::swap(at[static_cast<std::size_t>(g - 1)], at[static_cast<std::size_t>(g)]);
        if (keep && (in_half - dropped) % 6 == 5) {
            for (int i = 0; i < 3; ++i) body.push_back({1, true});
            for (int i = 0; i < 3; ++i) body.push_back({3, true});
            used[static_cast<std::size_t>(at[0])] += 3;
            used[static_cast<std::size_t>(at[1])] += 3;
        }
    }
    std::vector<Entry> slid;
    for (int p = 0; p < 3; ++p) {
        const long left = 4 * l + 2 - used[static_cast<std::size_t>(p)];
        if (left < 0) throw std::logic_error("certificate construction failed: framing pair over-used");
        for (long i = 0; i < left; ++i) slid.push_back({2 * p + 1, false});
    }
    slid.insert(slid.end(), body.begin(), body.end());
    Letters slid_word;
    for (const Entry& e : slid) slid_word.push_back(e.k);
    s.equiv(slid_word);
    for (std::size_t i = 0; i < slid.size();) {
        if (slid[i].keep) {
            ++i;
            continue;
        }
        s.del(i);
        slid.erase(slid.begin() + static_cast<std::ptrdiff_t>(i));
    }
    const long phase1 = static_cast<long>(slid_word.size() - slid.size());
    if (phase1 > 120) throw std::logic_error("certificate construction failed: saddle phase exceeds 120");

    // Phase 2: each block dced (bacb)^5 a^3 c^3 = dced (bacb)^-1 a^-3 c^-3 (abc)^12.
    const Letters dced{4, 3, 5, 4};
    const Letters xinv{-2, -3, -1, -2};
    const int blocks = 2 * l - 2;
    {
        Letters beta;
        for (int j = 0; j < blocks; ++j) {
            append(beta, dced);
            append(beta, {2, 1, 3, 2}, 5);
            append(beta, {1, 1, 1, 3, 3, 3});
        }
        s.equiv(beta);  // literal check that phase 1 reached beta
        Letters split;
        for (int j = 0; j < blocks; ++j) {
            append(split, dced);
            append(split, xinv);
            append(split, {-1, -1, -1, -3, -3, -3});
            append(split, coxeter_power());
        }
        s.equiv(split);
    }
    for (int j = 0; j < blocks; ++j) {
        const std::size_t o = static_cast<std::size_t>(8 * j) + 8 + 6;
        fourstrand_core(s, o);
        s.rewrite(o - 6, 12, {});
    }

    // Phase 3: alpha = P P with P = (dced (bacb)^-1)^{l-1}. Conjugating P by the
    // simple braid c below inverts it, so two inserted copies of c kill alpha.
    const Letters conj{2, 3, 4, 5, 1, 2, 3, 4, 2, 3, 1, 2};
    const std::size_t plen = static_cast<std::size_t>(8 * (l - 1));
    {
        std::size_t pos = plen;
        for (Letter k : inverse_letters(conj)) s.ins(pos++, k);
        for (Letter k : conj) s.ins(s.word().size(), k);
        s.equiv({});
    }
    for (Letter k = 1; k <= 5; ++k) s.ins(s.word().size(), k);
    for (int i = 0; i < 5; ++i) s.destab();

    // Trefoil count 20l-20 -> 20l: unknot -> Hopf link # 3_1 -> unknot # 3_1.
    for (int i = 0; i < 20; ++i) {
        s.stab(1);
        s.equiv({1, 1, 1, -1, -1});
        s.tcube(0);
        s.del(0);
        s.destab();
    }
    return s.finish("sixstrand l=" + std::to_string(l) + ": T(6," + std::to_string(12 * l + 6) + ") to 3_1^" +
                    std::to_string(20 * l) + "; phase-1 saddles " + std::to_string(phase1) +
                    ", cube removals " + std::to_string(10 * blocks) + ", 20 appended trefoils");
}

CobordismCertificate trefoil_stack_certificate(long n, long nprime) {
    if (n < 0 || nprime < n) throw ValidationError("trefoil_stack_certificate needs n' >= n >= 0");
    const long j = nprime - n;
    if (j > 200) throw ValidationError("trefoil_stack_certificate supports n' - n <= 200");
    Letters w;
    for (Letter g = 1; g <= j; ++g) append(w, {g, g, g});
    Script s(single(BraidWord(static_cast<int>(j) + 1, w), n));
    for (long i = 0; i < j; ++i) {
        // -g g g = g in the group
        s.cross(static_cast<std::size_t>(i));
        s.rewrite(static_cast<std::size_t>(i), 3, {static_cast<Letter>(i + 1)});
    }
    for (long i = 0; i < j; ++i) s.destab();
    return s.finish("trefoil stack: 3_1^" + std::to_string(nprime) + " to 3_1^" + std::to_string(n) + " by " +
                    std::to_string(j) + " crossing changes");
}

long sixstrand_cost(int l) {
    static std::mutex mu;
    static std::map<int, long> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(l);
        if (it != memo.end()) return it->second;
    }
    long total = 0;
    for (const Step& st : sixstrand_certificate(l).steps) total += step_cost(st);
    std::lock_guard<std::mutex> lock(mu);
    memo[l] = total;
    return total;
}

long twisting_bound(int k, int l, long t) {
    if (k < 1 || l < 1) throw ValidationError("twisting_bound needs k, l >= 1");
    if (std::gcd(k, l) != 1) throw ValidationError("twisting_bound needs coprime k, l");
    if (2 * t < static_cast<long>(k - 1) * (l - 1))
        throw ValidationError("twisting_bound needs t >= (k-1)(l-1)/2");
    return 2 * t + 10;
}

long mccoy_genus_side(long t) {
    if (t < 0) throw ValidationError("mccoy_genus_side needs t >= 0");
    return t;
}

Estimate gg_estimate(int m, int n) {
    if (m < 1) throw ValidationError("gg_estimate needs m >= 1");
    return {Rational(5L * m * n, 18), m % 6 == 0 ? 2L * m : 2L * m + 15};
}

Rational clover_bound(int m, int n, const BoundConstants& k) {
    return Rational(5L * m * n, 18) - Rational(k.a * m + k.b * n + k.c);
}

namespace {

int torus_sigma6(int m, int n, const Sigma6Options& o) {
    using Key = std::tuple<int, int, int, int, std::int64_t, std::int64_t, int, int>;
    static std::mutex mu;
    static std::map<Key, int> memo;
    const Key key{m, n, o.precision.start_bits, o.precision.max_bits, o.start_offset.numerator(),
                  o.start_offset.denominator(), o.max_halvings, o.agreement};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    const int v = sigma6(torus_word(m, n), o);
    std::lock_guard<std::mutex> lock(mu);
    memo[key] = v;
    return v;
}

// Cost of T(6, 6K) -> 3_1^target through the sixstrand certificate, moving to an
// odd K >= 5 first when needed.
long sixstrand_route(long K, long target) {
    long odd = K;
    if (odd < 5) odd = 5;
    if (odd % 2 == 0) ++odd;
    const long L = (odd - 1) / 2;
    return 30 * std::abs(K - odd) + sixstrand_cost(static_cast<int>(L)) + 2 * std::abs(target - 20 * L);
}

}  // namespace

BoundReport theorem_bound(int m, int n, long N, const BoundOptions& options) {
    if (m < 1 || n < 1) throw ValidationError("theorem_bound needs m, n >= 1");
    const long need = ceil_div(7L * m * n, 24);
    if (N < need) throw ValidationError("theorem_bound needs N >= ceil(7mn/24) = " + std::to_string(need));
    BoundReport r;
    r.m = m;
    r.n = n;
    r.N = N;
    r.sigma_estimate = Rational(5L * m * n, 18);

    // Cable route: T(m,n) -> T(6k,6l) -> T(6,6kl) # K_t -> 3_1^N.
    const int k = std::max(1, (m + 3) / 6);
    int l = std::max(1, (n + 3) / 6);
    long cable = static_cast<long>(std::abs(n - 6 * l)) * (m - 1) + static_cast<long>(std::abs(m - 6 * k)) * (6 * l - 1);
    int l2 = l;
    while (std::gcd(k, l2) != 1) ++l2;
    cable += 6L * (l2 - l) * (6 * k - 1);
    const long t = ceil_div(static_cast<long>(k - 1) * (l2 - 1), 2);
    cable += twisting_bound(k, l2, t);
    cable += sixstrand_route(static_cast<long>(k) * l2, N - mccoy_genus_side(t));

    // Direct route: resolve T(m,n) to the unknot, then build 3_1^N.
    const long direct = static_cast<long>(m - 1) * (n - 1) + 2 * N;
    r.upper = std::min(cable, direct);
    r.route = cable <= direct ? "cable(k=" + std::to_string(k) + ",l=" + std::to_string(l2) + ",t=" + std::to_string(t) + ")"
                              : "direct";

    const long rows = static_cast<long>(m - 1) * n - m + 1;
    if (rows <= options.desk_rows) {
        r.sigma6 = torus_sigma6(m, n, options.sigma6);
        r.lower = std::abs(2 * N - *r.sigma6);
    } else {
        const Estimate e = gg_estimate(m, n);
        const Rational lo = Rational(2 * N) - e.center - Rational(e.tolerance);
        const std::int64_t num = lo.numerator(), den = lo.denominator();
        const long ceil = num >= 0 ? (num + den - 1) / den : -((-num) / den);
        r.lower = std::max(0L, ceil);
    }
    r.slack = r.upper - r.lower;
    r.window = options.constants.a * m + options.constants.b * n + options.constants.c;
    r.pass = r.lower <= r.upper && std::abs(r.slack) <= r.window;
    return r;
}

void write_bound_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
    out << "m,n,N,upper,lower,slack,window,pass\n";
    for (const BoundReport& r : rows)
        out << r.m << ',' << r.n << ',' << r.N << ',' << r.upper << ',' << r.lower << ',' << r.slack << ','
            << r.window << ',' << (r.pass ? "true" : "false") << '\n';
}

}  // namespace braidcob
