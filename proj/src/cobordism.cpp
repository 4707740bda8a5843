#include "braidcob/cobordism.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "braidcob/garside.hpp"

namespace braidcob {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& reason) { throw StepError(0, reason); }

const BraidWord& closure_at(const FormalLink& link, std::size_t i) {
    if (i >= link.closures.size())
        fail("closure " + std::to_string(i) + " does not exist (" + std::to_string(link.closures.size()) +
             " closures)");
    return link.closures[i];
}

std::vector<Letter> erase_range(const std::vector<Letter>& v, std::size_t pos, std::size_t count) {
    std::vector<Letter> out = v;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos), out.begin() + static_cast<std::ptrdiff_t>(pos + count));
    return out;
}

std::optional<int> closure_sigma6(const BraidWord& w, const Sigma6Options& options) {
    try {
        return sigma6(w, options);
    } catch (const PrecisionError&) {
        return std::nullopt;
    }
}

std::string state_summary(const FormalLink& l) {
    std::string s = "closures=[";
    for (std::size_t i = 0; i < l.closures.size(); ++i) s += (i ? "; " : "") + to_string(l.closures[i]);
    s += "] tpos=" + std::to_string(l.trefoils_pos) + " tneg=" + std::to_string(l.trefoils_neg) +
         " asserted=" + std::to_string(l.assertions.size());
    return s;
}

}  // namespace

int FormalLink::component_count() const {
    int total = 0;
    for (const auto& w : closures) total += components(w);
    for (const auto& a : assertions) total += a.components;
    return total;
}

int step_cost(const Step& s) {
    return std::visit(overloaded{
                          [](const step::SaddleDelete&) { return 1; },
                          [](const step::SaddleInsert&) { return 1; },
                          [](const step::TCube&) { return 1; },
                          [](const step::CrossingChange&) { return 2; },
                          [](const auto&) { return 0; },
                      },
                      s);
}

std::string step_name(const Step& s) {
    return std::visit(overloaded{
                          [](const step::Equivalence&) { return std::string("equiv"); },
                          [](const step::Conjugation&) { return std::string("conj"); },
                          [](const step::MarkovStab&) { return std::string("stab"); },
                          [](const step::MarkovDestab&) { return std::string("destab"); },
                          [](const step::SaddleDelete&) { return std::string("saddle_delete"); },
                          [](const step::SaddleInsert&) { return std::string("saddle_insert"); },
                          [](const step::TCube&) { return std::string("tcube"); },
                          [](const step::CrossingChange&) { return std::string("crossing_change"); },
                          [](const step::ConcordanceAssertion&) { return std::string("concordance"); },
                          [](const step::SumSplit&) { return std::string("sum_split"); },
                          [](const step::SumMerge&) { return std::string("sum_merge"); },
                      },
                      s);
}

std::size_t step_closure(const Step& s) {
    return std::visit([](const auto& v) { return v.closure; }, s);
}

FormalLink apply_step(const FormalLink& state, const Step& s) {
    FormalLink next = state;
    std::visit(
        overloaded{
            [&](const step::Equivalence& e) {
                const BraidWord& cur = closure_at(state, e.closure);
                if (cur.strands() != e.target.strands())
                    fail("equivalence target has " + std::to_string(e.target.strands()) + " strands, closure has " +
                         std::to_string(cur.strands()));
                if (!equal(cur, e.target)) fail("equivalence fails: target is not the same braid");
                next.closures[e.closure] = e.target;
            },
            [&](const step::Conjugation& c) {
                const BraidWord& cur = closure_at(state, c.closure);
                if (cur.strands() != c.by.strands()) fail("conjugating braid has the wrong strand count");
                next.closures[c.closure] = compose(compose(invert(c.by), cur), c.by);
            },
            [&](const step::MarkovStab& m) {
                if (m.sign != 1 && m.sign != -1) fail("stabilization sign must be +1 or -1");
                next.closures[m.closure] = markov_stabilize(closure_at(state, m.closure), m.sign);
            },
            [&](const step::MarkovDestab& m) {
                try {
                    next.closures[m.closure] = markov_destabilize(closure_at(state, m.closure));
                } catch (const ValidationError& e) {
                    fail(std::string("destabilization ineligible: ") + e.what());
                }
            },
            [&](const step::SaddleDelete& d) {
                const BraidWord& cur = closure_at(state, d.closure);
                if (d.pos >= cur.size())
                    fail("saddle delete at " + std::to_string(d.pos) + " outside word of length " +
                         std::to_string(cur.size()));
                next.closures[d.closure] = BraidWord(cur.strands(), erase_range(cur.letters(), d.pos, 1));
            },
            [&](const step::SaddleInsert& d) {
                const BraidWord& cur = closure_at(state, d.closure);
                if (d.pos > cur.size())
                    fail("saddle insert at " + std::to_string(d.pos) + " outside word of length " +
                         std::to_string(cur.size()));
                std::vector<Letter> letters = cur.letters();
                letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(d.pos), d.letter);
                try {
                    next.closures[d.closure] = BraidWord(cur.strands(), std::move(letters));
                } catch (const ValidationError& e) {
                    fail(std::string("saddle insert: ") + e.what());
                }
            },
            [&](const step::TCube& t) {
                const BraidWord& cur = closure_at(state, t.closure);
                if (t.sign != 1 && t.sign != -1) fail("tcube sign must be +1 or -1");
                const Letter want = t.sign * t.gen;
                if (t.pos + 3 > cur.size())
                    fail("tcube at " + std::to_string(t.pos) + " runs past the word end");
                for (std::size_t i = 0; i < 3; ++i)
                    if (cur[t.pos + i] != want)
                        fail("no cube of " + std::to_string(want) + " at position " + std::to_string(t.pos) +
                             " (found " + std::to_string(cur[t.pos + i]) + " at " + std::to_string(t.pos + i) + ")");
                next.closures[t.closure] = BraidWord(cur.strands(), erase_range(cur.letters(), t.pos, 3));
                if (t.sign > 0)
                    ++next.trefoils_pos;
                else
                    ++next.trefoils_neg;
            },
            [&](const step::CrossingChange& c) {
                const BraidWord& cur = closure_at(state, c.closure);
                if (c.pos >= cur.size())
                    fail("crossing change at " + std::to_string(c.pos) + " outside word of length " +
                         std::to_string(cur.size()));
                std::vector<Letter> letters = cur.letters();
                letters[c.pos] = -letters[c.pos];
                next.closures[c.closure] = BraidWord(cur.strands(), std::move(letters));
            },
            [&](const step::ConcordanceAssertion& c) {
                const BraidWord& cur = closure_at(state, c.closure);
                const int from = components(cur);
                if (const auto* w = std::get_if<BraidWord>(&c.to)) {
                    if (components(*w) != from)
                        fail("concordance changes component count " + std::to_string(from) + " -> " +
                             std::to_string(components(*w)));
                    next.closures[c.closure] = *w;
                } else {
                    const auto& a = std::get<AssertedSummand>(c.to);
                    if (a.components != from)
                        fail("concordance changes component count " + std::to_string(from) + " -> " +
                             std::to_string(a.components));
                    next.closures.erase(next.closures.begin() + static_cast<std::ptrdiff_t>(c.closure));
                    next.assertions.push_back(a);
                }
            },
            [&](const step::SumSplit& sp) {
                const BraidWord& cur = closure_at(state, sp.closure);
                if (sp.at < 1 || sp.at >= cur.strands()) fail("split point outside 1..n-1");
                std::vector<Letter> left, right;
                for (Letter k : cur.letters()) {
                    if (std::abs(k) == sp.at) fail("split generator " + std::to_string(sp.at) + " occurs in the word");
                    if (std::abs(k) < sp.at)
                        left.push_back(k);
                    else
                        right.push_back(k > 0 ? k - sp.at : k + sp.at);
                }
                next.closures[sp.closure] = BraidWord(sp.at, std::move(left));
                next.closures.insert(next.closures.begin() + static_cast<std::ptrdiff_t>(sp.closure) + 1,
                                     BraidWord(cur.strands() - sp.at, std::move(right)));
            },
            [&](const step::SumMerge& m) {
                const BraidWord& a = closure_at(state, m.closure);
                const BraidWord& b = closure_at(state, m.with);
                if (m.closure == m.with) fail("cannot merge a closure with itself");
                const int n = a.strands() + b.strands();
                std::vector<Letter> letters = a.letters();
                for (Letter k : b.letters()) letters.push_back(k > 0 ? k + a.strands() : k - a.strands());
                next.closures[m.closure] = BraidWord(n, std::move(letters));
                next.closures.erase(next.closures.begin() + static_cast<std::ptrdiff_t>(m.with));
            },
        },
        s);
    return next;
}

std::optional<int> sigma6(const FormalLink& link, const Sigma6Options& options) {
    long total = 2 * link.trefoils_pos - 2 * link.trefoils_neg;
    for (const auto& a : link.assertions) {
        if (!a.sigma6) return std::nullopt;
        total += *a.sigma6;
    }
    for (const auto& w : link.closures) {
        const auto v = closure_sigma6(w, options);
        if (!v) return std::nullopt;
        total += *v;
    }
    return static_cast<int>(total);
}

bool same_state(const FormalLink& a, const FormalLink& b) { return state_diff(a, b).empty(); }

std::string state_diff(const FormalLink& a, const FormalLink& b) {
    if (a.closures.size() != b.closures.size())
        return "closure count " + std::to_string(a.closures.size()) + " vs " + std::to_string(b.closures.size());
    for (std::size_t i = 0; i < a.closures.size(); ++i) {
        const auto& x = a.closures[i];
        const auto& y = b.closures[i];
        if (x.strands() != y.strands() || !equal(x, y))
            return "closure " + std::to_string(i) + " differs: " + to_string(x) + " vs " + to_string(y);
    }
    if (a.trefoils_pos != b.trefoils_pos)
        return "tpos " + std::to_string(a.trefoils_pos) + " vs " + std::to_string(b.trefoils_pos);
    if (a.trefoils_neg != b.trefoils_neg)
        return "tneg " + std::to_string(a.trefoils_neg) + " vs " + std::to_string(b.trefoils_neg);
    if (a.assertions != b.assertions) return "asserted summands differ";
    return {};
}

namespace {

// Multiset comparison of closures by canonical form.
std::string multiset_diff(const FormalLink& replayed, const FormalLink& declared) {
    auto keys = [](const FormalLink& l) {
        std::vector<std::string> k;
        for (const auto& w : l.closures) k.push_back(normal_form(w).key());
        std::sort(k.begin(), k.end());
        return k;
    };
    if (keys(replayed) != keys(declared))
        return "replayed closures are not group-equal to the declared end: " + state_summary(replayed) + " vs " +
               state_summary(declared);
    if (replayed.trefoils_pos != declared.trefoils_pos || replayed.trefoils_neg != declared.trefoils_neg)
        return "trefoil counters differ: replayed " + state_summary(replayed) + " vs declared " +
               state_summary(declared);
    auto a = replayed.assertions, b = declared.assertions;
    auto by_label = [](const AssertedSummand& x, const AssertedSummand& y) { return x.label < y.label; };
    std::sort(a.begin(), a.end(), by_label);
    std::sort(b.begin(), b.end(), by_label);
    if (a != b) return "asserted summands differ from the declared end";
    return {};
}

}  // namespace

CertificateReport verify(const CobordismCertificate& cert, const VerifyOptions& options) {
    CertificateReport report;
    FormalLink state = cert.start;
    bool sigma_unknown = false;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const Step& s = cert.steps[i];
        StepVerdict v{i, step_name(s), step_cost(s), "ok"};
        try {
            FormalLink next = apply_step(state, s);
            if (const auto* c = std::get_if<step::ConcordanceAssertion>(&s); c && options.evaluate_sigma6) {
                // sigma_6 is a concordance invariant: source and target must agree.
                const auto from = closure_sigma6(state.closures[c->closure], options.sigma6);
                std::optional<int> to;
                if (const auto* w = std::get_if<BraidWord>(&c->to))
                    to = closure_sigma6(*w, options.sigma6);
                else
                    to = std::get<AssertedSummand>(c->to).sigma6;
                if (from && to && *from != *to)
                    throw StepError(i, "concordance breaks sigma6: " + std::to_string(*from) + " vs " +
                                           std::to_string(*to));
                if (!from || !to) v.verdict = "ok (sigma6 not evaluated)";
                if (const auto* a = std::get_if<AssertedSummand>(&c->to); a && !a->sigma6) sigma_unknown = true;
            }
            state = std::move(next);
        } catch (const StepError& e) {
            const std::string what = e.what();
            const std::string reason = what.substr(what.find(": ") + 2);
            v.verdict = reason;
            report.step_log.push_back(v);
            report.diagnosis = "step " + std::to_string(i) + " (" + v.op + "): " + reason;
            report.final_state = state;
            return report;
        }
        report.total_cost += v.cost;
        if (std::holds_alternative<step::TCube>(s)) ++report.tcube_steps;
        report.step_log.push_back(std::move(v));
    }
    report.replay_ok = true;
    report.final_state = state;
    const std::string diff = multiset_diff(state, cert.end);
    report.end_matches = diff.empty();
    if (!diff.empty()) report.diagnosis = "end state mismatch: " + diff;

    if (options.evaluate_sigma6 && !sigma_unknown) {
        report.sigma6_start = sigma6(cert.start, options.sigma6);
        report.sigma6_end = sigma6(cert.end, options.sigma6);
        if (report.sigma6_start && report.sigma6_end) {
            report.lower_bound = std::labs(static_cast<long>(*report.sigma6_start) - *report.sigma6_end);
            report.bound_ok = *report.lower_bound <= report.total_cost;
            if (!*report.bound_ok && report.diagnosis.empty())
                report.diagnosis = "cost " + std::to_string(report.total_cost) + " below the sigma6 lower bound " +
                                   std::to_string(*report.lower_bound);
        }
    }
    return report;
}

CobordismCertificate compose_certificates(const CobordismCertificate& first, const CobordismCertificate& second) {
    const std::string diff = state_diff(first.end, second.start);
    if (!diff.empty()) throw ValidationError("certificate endpoints do not match: " + diff);
    CobordismCertificate out;
    out.start = first.start;
    out.steps = first.steps;
    // Rewrite literally different but group-equal closures so positions in the
    // second script refer to its own words.
    for (std::size_t i = 0; i < first.end.closures.size(); ++i)
        if (first.end.closures[i] != second.start.closures[i])
            out.steps.push_back(step::Equivalence{i, second.start.closures[i]});
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
    out.end = second.end;
    out.meta = first.meta.empty() ? second.meta : second.meta.empty() ? first.meta : first.meta + " ; " + second.meta;
    return out;
}

std::pair<CobordismCertificate, CobordismCertificate> split_certificate(const CobordismCertificate& cert,
                                                                       std::size_t count) {
    if (count > cert.steps.size()) throw ValidationError("split point past the last step");
    FormalLink mid = cert.start;
    for (std::size_t i = 0; i < count; ++i) {
        try {
            mid = apply_step(mid, cert.steps[i]);
        } catch (const StepError& e) {
            throw StepError(i, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        }
    }
    CobordismCertificate head{cert.start, {cert.steps.begin(), cert.steps.begin() + static_cast<std::ptrdiff_t>(count)},
                              mid, cert.meta};
    CobordismCertificate tail{mid, {cert.steps.begin() + static_cast<std::ptrdiff_t>(count), cert.steps.end()},
                              cert.end, cert.meta};
    return {std::move(head), std::move(tail)};
}

}  // namespace braidcob
