#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>

#include "braidcob/braid.hpp"
#include "braidcob/hermitian.hpp"
#include "braidcob/seifert.hpp"

namespace braidcob {

using Rational = boost::rational<std::int64_t>;

/// An eigenvalue could not be separated from zero within the precision cap, or the
/// limit defining sigma_6 did not stabilize.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrecisionPolicy {
    int start_bits = 128;
    int max_bits = 4096;
};

/// Levine-Tristram data at omega = exp(2 pi i theta), standard convention
/// (positive trefoil: -2 on (1/6, 5/6)).
struct SignatureProfile {
    Rational theta;
    int signature = 0;
    int nullity = 0;       // with the split correction: + (surface pieces - 1)
    int form_nullity = 0;  // nullity of the block Seifert form itself
    int precision_bits = 0;
};

/// Inertia of (1 - w) V + (1 - conj w) V^T at exactly `bits` bits of working precision.
Inertia form_inertia(const IntMatrix& v, const Rational& theta, int bits);

SignatureProfile signature_at(const SeifertMatrix& s, const Rational& theta, const PrecisionPolicy& policy = {});
SignatureProfile signature_at(const BraidWord& w, const Rational& theta, const PrecisionPolicy& policy = {});

struct Sigma6Options {
    PrecisionPolicy precision;
    Rational start_offset{1, 1024};
    int max_halvings = 20;
    int agreement = 3;  // consecutive evaluations that must agree
};

struct Sigma6Result {
    int value = 0;  // negated standard signature: sigma_6(positive trefoil) = +2
    Rational offset;  // last offset evaluated
    int evaluations = 0;
};

/// One-sided limit of the signature as theta decreases to 1/6, reported with
/// sigma_6(3_1) = +2.
Sigma6Result sigma6_limit(const BraidWord& w, const Sigma6Options& options = {});
int sigma6(const BraidWord& w, const Sigma6Options& options = {});

/// Signature of T(p, q) at a non-jump theta by lattice counting over
/// x = i/p + j/q: -1 when theta < x < theta + 1, +1 otherwise.
int torus_signature_oracle(int p, int q, const Rational& theta);

}  // namespace braidcob
