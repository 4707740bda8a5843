#include "braidcob/signature.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <numeric>
#include <string>

namespace braidcob {
namespace {

using Real = boost::multiprecision::mpfr_float;

// Sets the thread's default MPFR precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int bits) : saved_(Real::default_precision()) {
        Real::default_precision(digits10_for(bits));
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

    static unsigned digits10_for(int bits) {
        return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
    }

private:
    unsigned saved_;
};

std::string theta_text(const Rational& theta) {
    return std::to_string(theta.numerator()) + "/" + std::to_string(theta.denominator());
}

}  // namespace

Inertia form_inertia(const IntMatrix& v, const Rational& theta, int bits) {
    PrecisionGuard guard(bits);
    const Eigen::Index n = v.rows();
    const Real pi = 4 * boost::multiprecision::atan(Real(1));
    const Real angle = 2 * pi * Real(theta.numerator()) / Real(theta.denominator());
    const Real c = boost::multiprecision::cos(angle);
    const Real s = boost::multiprecision::sin(angle);
    const Real one_minus_c = 1 - c;

    DenseMatrix<Real> re(n, n), im(n, n);
    Real max_abs = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            re(i, j) = one_minus_c * (v(i, j) + v(j, i));
            im(i, j) = s * (v(j, i) - v(i, j));
            const Real m = abs(re(i, j)) + abs(im(i, j));
            if (m > max_abs) max_abs = m;
        }
    // Backward-error scale for the pivoted factorization: n^2 ulps of the largest
    // entry with a 2^16 growth allowance.
    const Real tol = ldexp(max_abs * Real(n) * Real(n), 16 - bits);
    return hermitian_inertia<Real>(std::move(re), std::move(im), tol);
}

SignatureProfile signature_at(const SeifertMatrix& s, const Rational& theta, const PrecisionPolicy& policy) {
    if (theta <= Rational(0) || theta >= Rational(1))
        throw ValidationError("theta must lie in (0,1), got " + theta_text(theta));
    SignatureProfile out;
    out.theta = theta;
    if (s.size() == 0) {
        out.precision_bits = policy.start_bits;
        out.nullity = s.pieces - 1;
        return out;
    }
    int bits = policy.start_bits;
    Inertia lo = form_inertia(s.entries, theta, bits);
    while (2 * bits <= policy.max_bits) {
        const Inertia hi = form_inertia(s.entries, theta, 2 * bits);
        if (hi == lo) {
            out.signature = lo.signature();
            out.form_nullity = lo.zero;
            out.nullity = lo.zero + s.pieces - 1;
            out.precision_bits = bits;
            return out;
        }
        bits *= 2;
        lo = hi;
    }
    throw PrecisionError("precision unresolved at theta=" + theta_text(theta) + " up to " +
                         std::to_string(policy.max_bits) + " bits");
}

SignatureProfile signature_at(const BraidWord& w, const Rational& theta, const PrecisionPolicy& policy) {
    return signature_at(seifert_matrix(w), theta, policy);
}

Sigma6Result sigma6_limit(const BraidWord& w, const Sigma6Options& options) {
    const SeifertMatrix s = seifert_matrix(w);
    const Rational base(1, 6);
    Rational offset = options.start_offset;
    int run = 0;
    int last_signature = 0, last_nullity = -1;
    bool alexander_vanishes = false, alexander_known = false;
    Sigma6Result result;
    for (int step = 0; step <= options.max_halvings + options.agreement - 1; ++step) {
        const SignatureProfile p = signature_at(s, base + offset, options.precision);
        ++result.evaluations;
        result.offset = offset;
        if (run > 0 && p.signature == last_signature && p.form_nullity == last_nullity)
            ++run;
        else
            run = 1;
        last_signature = p.signature;
        last_nullity = p.form_nullity;
        bool regular = p.form_nullity == 0;
        if (!regular && run >= options.agreement) {
            if (!alexander_known) {
                // Identically vanishing Alexander polynomial: the form is degenerate
                // for every theta, so a stable positive nullity is the generic value.
                alexander_vanishes = s.pieces > 1 ||
                                     normalize_alexander(pencil_determinant(s.entries, s.entries.transpose())).is_zero();
                alexander_known = true;
            }
            regular = alexander_vanishes;
        }
        if (regular && run >= options.agreement) {
            result.value = -p.signature;
            return result;
        }
        if (step >= options.max_halvings) break;
        offset /= 2;
    }
    throw PrecisionError("sigma_6 limit did not stabilize for " + to_string(w).substr(0, 60) + " after " +
                         std::to_string(options.max_halvings) + " halvings");
}

int sigma6(const BraidWord& w, const Sigma6Options& options) { return sigma6_limit(w, options).value; }

int torus_signature_oracle(int p, int q, const Rational& theta) {
    if (p < 1 || q < 1) throw ValidationError("torus parameters must be positive");
    if (std::gcd(p, q) != 1) throw ValidationError("torus_signature_oracle needs coprime p, q");
    if (theta <= Rational(0) || theta >= Rational(1))
        throw ValidationError("theta must lie in (0,1), got " + theta_text(theta));
    int sig = 0;
    for (int i = 1; i < p; ++i)
        for (int j = 1; j < q; ++j) {
            const Rational x(static_cast<std::int64_t>(i) * q + static_cast<std::int64_t>(j) * p,
                             static_cast<std::int64_t>(p) * q);
            if (x == theta || x == theta + 1) throw ValidationError("evaluation at jump theta=" + theta_text(theta));
            sig += (theta < x && x < theta + 1) ? -1 : 1;
        }
    return sig;
}

}  // namespace braidcob
