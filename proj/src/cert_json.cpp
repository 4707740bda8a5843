#include "braidcob/cert_json.hpp"

namespace braidcob {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Runs a decoder, turning schema exceptions into FormatError.
template <class F>
auto decode(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed ") + what + ": " + e.what());
    }
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<int> read_optional_int(const Json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<int>();
}

Json asserted_to_json(const AssertedSummand& a) {
    Json j{{"label", a.label}, {"components", a.components}, {"justification", a.justification}};
    j["sigma6"] = a.sigma6 ? Json(*a.sigma6) : Json("unknown");
    return j;
}

AssertedSummand asserted_from_json(const Json& j) {
    AssertedSummand a;
    a.label = j.at("label").get<std::string>();
    a.components = j.at("components").get<int>();
    const Json& s = j.at("sigma6");
    if (s.is_string()) {
        if (s.get<std::string>() != "unknown") throw FormatError("asserted sigma6 must be an integer or \"unknown\"");
    } else {
        a.sigma6 = s.get<int>();
    }
    a.justification = j.value("justification", std::string());
    return a;
}

}  // namespace

Json word_to_json(const BraidWord& w) { return Json{{"n", w.strands()}, {"w", w.letters()}}; }

BraidWord word_from_json(const Json& j) {
    return decode("braid word", [&] {
        return BraidWord(j.at("n").get<int>(), j.at("w").get<std::vector<Letter>>());
    });
}

Json link_to_json(const FormalLink& l) {
    Json closures = Json::array();
    for (const BraidWord& w : l.closures) closures.push_back(word_to_json(w));
    Json asserted = Json::array();
    for (const AssertedSummand& a : l.assertions) asserted.push_back(asserted_to_json(a));
    return Json{{"closures", closures}, {"tpos", l.trefoils_pos}, {"tneg", l.trefoils_neg}, {"asserted", asserted}};
}

FormalLink link_from_json(const Json& j) {
    return decode("link", [&] {
        FormalLink l;
        for (const Json& w : j.at("closures")) l.closures.push_back(word_from_json(w));
        l.trefoils_pos = j.value("tpos", 0L);
        l.trefoils_neg = j.value("tneg", 0L);
        if (j.contains("asserted"))
            for (const Json& a : j.at("asserted")) l.assertions.push_back(asserted_from_json(a));
        return l;
    });
}

Json step_to_json(const Step& s) {
    Json j{{"op", step_name(s)}, {"closure", step_closure(s)}};
    std::visit(overloaded{
                   [&](const step::Equivalence& e) { j["target"] = word_to_json(e.target); },
                   [&](const step::Conjugation& c) { j["by"] = word_to_json(c.by); },
                   [&](const step::MarkovStab& m) { j["sign"] = m.sign; },
                   [&](const step::MarkovDestab&) {},
                   [&](const step::SaddleDelete& d) { j["pos"] = d.pos; },
                   [&](const step::SaddleInsert& d) {
                       j["pos"] = d.pos;
                       j["letter"] = d.letter;
                   },
                   [&](const step::TCube& t) {
                       j["pos"] = t.pos;
                       j["gen"] = t.gen;
                       j["sign"] = t.sign;
                   },
                   [&](const step::CrossingChange& c) { j["pos"] = c.pos; },
                   [&](const step::ConcordanceAssertion& c) {
                       if (const auto* w = std::get_if<BraidWord>(&c.to))
                           j["to"] = Json{{"word", word_to_json(*w)}};
                       else
                           j["to"] = Json{{"asserted", asserted_to_json(std::get<AssertedSummand>(c.to))}};
                       j["justification"] = c.justification;
                   },
                   [&](const step::SumSplit& sp) { j["at"] = sp.at; },
                   [&](const step::SumMerge& m) { j["with"] = m.with; },
               },
               s);
    return j;
}

Step step_from_json(const Json& j) {
    return decode("step", [&]() -> Step {
        const std::string op = j.at("op").get<std::string>();
        const auto c = j.at("closure").get<std::size_t>();
        if (op == "equiv") return step::Equivalence{c, word_from_json(j.at("target"))};
        if (op == "conj") return step::Conjugation{c, word_from_json(j.at("by"))};
        if (op == "stab") return step::MarkovStab{c, j.at("sign").get<int>()};
        if (op == "destab") return step::MarkovDestab{c};
        if (op == "saddle_delete") return step::SaddleDelete{c, j.at("pos").get<std::size_t>()};
        if (op == "saddle_insert")
            return step::SaddleInsert{c, j.at("pos").get<std::size_t>(), j.at("letter").get<Letter>()};
        if (op == "tcube")
            return step::TCube{c, j.at("pos").get<std::size_t>(), j.at("gen").get<int>(), j.at("sign").get<int>()};
        if (op == "crossing_change") return step::CrossingChange{c, j.at("pos").get<std::size_t>()};
        if (op == "concordance") {
            step::ConcordanceAssertion a;
            a.closure = c;
            const Json& to = j.at("to");
            if (to.contains("word"))
                a.to = word_from_json(to.at("word"));
            else
                a.to = asserted_from_json(to.at("asserted"));
            a.justification = j.value("justification", std::string());
            return a;
        }
        if (op == "sum_split") return step::SumSplit{c, j.at("at").get<int>()};
        if (op == "sum_merge") return step::SumMerge{c, j.at("with").get<std::size_t>()};
        throw FormatError("unknown step op \"" + op + "\"");
    });
}

Json certificate_to_json(const CobordismCertificate& c) {
    Json steps = Json::array();
    for (const Step& s : c.steps) steps.push_back(step_to_json(s));
    return Json{{"start", link_to_json(c.start)}, {"steps", steps}, {"end", link_to_json(c.end)}, {"meta", c.meta}};
}

CobordismCertificate certificate_from_json(const Json& j) {
    return decode("certificate", [&] {
        CobordismCertificate c;
        c.start = link_from_json(j.at("start"));
        for (const Json& s : j.at("steps")) c.steps.push_back(step_from_json(s));
        c.end = link_from_json(j.at("end"));
        c.meta = j.value("meta", std::string());
        return c;
    });
}

Json report_to_json(const CertificateReport& r) {
    Json steps = Json::array();
    for (const StepVerdict& v : r.step_log)
        steps.push_back(Json{{"index", v.index}, {"op", v.op}, {"cost", v.cost}, {"verdict", v.verdict}});
    Json j{{"passed", r.passed()},
           {"replay_ok", r.replay_ok},
           {"end_matches", r.end_matches},
           {"diagnosis", r.diagnosis},
           {"total_cost", r.total_cost},
           {"tcube_steps", r.tcube_steps},
           {"sigma6_start", optional_int(r.sigma6_start)},
           {"sigma6_end", optional_int(r.sigma6_end)},
           {"final_state", link_to_json(r.final_state)},
           {"steps", steps}};
    j["lower_bound"] = r.lower_bound ? Json(*r.lower_bound) : Json(nullptr);
    j["bound_ok"] = r.bound_ok ? Json(*r.bound_ok) : Json(nullptr);
    return j;
}

CertificateReport report_from_json(const Json& j) {
    return decode("report", [&] {
        CertificateReport r;
        r.replay_ok = j.at("replay_ok").get<bool>();
        r.end_matches = j.at("end_matches").get<bool>();
        r.diagnosis = j.at("diagnosis").get<std::string>();
        r.total_cost = j.at("total_cost").get<long>();
        r.tcube_steps = j.at("tcube_steps").get<long>();
        r.sigma6_start = read_optional_int(j.at("sigma6_start"));
        r.sigma6_end = read_optional_int(j.at("sigma6_end"));
        if (!j.at("lower_bound").is_null()) r.lower_bound = j.at("lower_bound").get<long>();
        if (!j.at("bound_ok").is_null()) r.bound_ok = j.at("bound_ok").get<bool>();
        r.final_state = link_from_json(j.at("final_state"));
        for (const Json& s : j.at("steps"))
            r.step_log.push_back({s.at("index").get<std::size_t>(), s.at("op").get<std::string>(),
                                  s.at("cost").get<int>(), s.at("verdict").get<std::string>()});
        return r;
    });
}

Json bound_to_json(const BoundReport& r) {
    Json j{{"m", r.m},         {"n", r.n},         {"N", r.N},
           {"upper", r.upper}, {"lower", r.lower}, {"slack", r.slack},
           {"window", r.window}, {"pass", r.pass}, {"route", r.route}};
    j["sigma_estimate"] = std::to_string(r.sigma_estimate.numerator()) + "/" +
                          std::to_string(r.sigma_estimate.denominator());
    j["sigma6"] = optional_int(r.sigma6);
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace braidcob
