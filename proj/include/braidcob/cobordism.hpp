#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "braidcob/braid.hpp"
#include "braidcob/signature.hpp"

namespace braidcob {

/// A summand whose identity is asserted rather than carried as a braid.
struct AssertedSummand {
    std::string label;
    int components = 1;
    std::optional<int> sigma6;  // nullopt: unknown
    std::string justification;

    friend bool operator==(const AssertedSummand&, const AssertedSummand&) = default;
};

/// Disjoint union of braid closures, connect-summed with trefoils (all attached to
/// one existing component) and with asserted summands.
struct FormalLink {
    std::vector<BraidWord> closures;
    long trefoils_pos = 0;
    long trefoils_neg = 0;
    std::vector<AssertedSummand> assertions;

    int component_count() const;
};

namespace step {

struct Equivalence {
    std::size_t closure = 0;
    BraidWord target;
};
struct Conjugation {
    std::size_t closure = 0;
    BraidWord by;  // w -> by^{-1} w by
};
struct MarkovStab {
    std::size_t closure = 0;
    int sign = 1;
};
struct MarkovDestab {
    std::size_t closure = 0;
};
struct SaddleDelete {
    std::size_t closure = 0;
    std::size_t pos = 0;
};
struct SaddleInsert {
    std::size_t closure = 0;
    std::size_t pos = 0;
    Letter letter = 1;
};
struct TCube {
    std::size_t closure = 0;
    std::size_t pos = 0;
    int gen = 1;
    int sign = 1;
};
struct CrossingChange {
    std::size_t closure = 0;
    std::size_t pos = 0;
};
/// Replaces a closure by a concordant word or asserted summand.
struct ConcordanceAssertion {
    std::size_t closure = 0;
    std::variant<BraidWord, AssertedSummand> to;
    std::string justification;
};
/// Splits a closure whose word never uses generator `at` into the closures on
/// strands 1..at and at+1..n.
struct SumSplit {
    std::size_t closure = 0;
    int at = 1;
};
/// Disjoint union of two closures; `second` is stacked to the right of `first`
/// and removed from the list.
struct SumMerge {
    std::size_t closure = 0;
    std::size_t with = 1;
};

}  // namespace step

using Step = std::variant<step::Equivalence, step::Conjugation, step::MarkovStab, step::MarkovDestab,
                          step::SaddleDelete, step::SaddleInsert, step::TCube, step::CrossingChange,
                          step::ConcordanceAssertion, step::SumSplit, step::SumMerge>;

/// Saddle cost (number of 1-handles) of a step.
int step_cost(const Step& s);
std::string step_name(const Step& s);
std::size_t step_closure(const Step& s);

struct CobordismCertificate {
    FormalLink start;
    std::vector<Step> steps;
    FormalLink end;
    std::string meta;
};

class StepError : public std::runtime_error {
public:
    StepError(std::size_t index, const std::string& reason)
        : std::runtime_error("step " + std::to_string(index) + ": " + reason), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Applies one step; throws StepError (index 0) when the step is not valid here.
FormalLink apply_step(const FormalLink& state, const Step& s);

/// sigma_6 of a formal link; nullopt if some summand is unknown or a closure's
/// limit does not resolve.
std::optional<int> sigma6(const FormalLink& link, const Sigma6Options& options = {});

struct StepVerdict {
    std::size_t index = 0;
    std::string op;
    int cost = 0;
    std::string verdict;  // "ok", "ok (sigma6 not evaluated)", or a failure reason
};

struct CertificateReport {
    bool replay_ok = false;
    bool end_matches = false;
    std::string diagnosis;
    long total_cost = 0;
    long tcube_steps = 0;
    std::optional<int> sigma6_start;
    std::optional<int> sigma6_end;
    std::optional<long> lower_bound;
    std::optional<bool> bound_ok;
    FormalLink final_state;
    std::vector<StepVerdict> step_log;

    bool passed() const { return replay_ok && end_matches && bound_ok.value_or(true); }
};

struct VerifyOptions {
    Sigma6Options sigma6;
    bool evaluate_sigma6 = true;
};

/// Replays the certificate and audits the sigma_6 lower bound against the cost.
CertificateReport verify(const CobordismCertificate& cert, const VerifyOptions& options = {});

/// Group-equal closures in the same order, same counters, same assertions.
bool same_state(const FormalLink& a, const FormalLink& b);
/// Human-readable first difference, empty if same_state.
std::string state_diff(const FormalLink& a, const FormalLink& b);

CobordismCertificate compose_certificates(const CobordismCertificate& first, const CobordismCertificate& second);

/// The certificate's first `count` steps, ending at the replayed state, and the
/// rest starting there.
std::pair<CobordismCertificate, CobordismCertificate> split_certificate(const CobordismCertificate& cert,
                                                                       std::size_t count);

}  // namespace braidcob
