#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braidcob/braid.hpp"
#include "braidcob/cobordism.hpp"
#include "braidcob/signature.hpp"

namespace braidcob {

/// (sigma_1 ... sigma_{m-1})^n in B_m.
BraidWord torus_word(int m, int n);
/// (b a^4 b a^3 (b a^5)^{l-1})^2 in B_3, closing up to T(3, 6l+3).
BraidWord bbl_word(int l);
/// Framed 2-cable of bbl_word(l) in B_6: (ace)^{4l+2} followed by the cable.
BraidWord cabled_torus_word(int l);
/// (abcde)^{-1-6kl} times the torus word of T(6k, 6l), in B_{6k}.
BraidWord knot_K_word(int k, int l);

CobordismCertificate fourstrand_certificate();
CobordismCertificate coxeter_certificate();
/// T(6, 12l+6) to 3_1^{20l}; l >= 2.
CobordismCertificate sixstrand_certificate(int l);
/// 3_1^{n'} to 3_1^{n}; n' >= n >= 0.
CobordismCertificate trefoil_stack_certificate(long n, long nprime);

/// Total step cost of sixstrand_certificate(l), memoized.
long sixstrand_cost(int l);

/// Upper bound 2t+10 for d_chi(T(6k,6l), T(6,6kl) # K) with g_4(K) <= t.
long twisting_bound(int k, int l, long t);
long mccoy_genus_side(long t);

struct Estimate {
    Rational center;
    long tolerance = 0;
};
/// 5mn/18 with tolerance 2m (6 | m) or 2m + 15.
Estimate gg_estimate(int m, int n);

struct BoundConstants {
    long a = 20;
    long b = 20;
    long c = 200;
};

struct BoundReport {
    int m = 0, n = 0;
    long N = 0;
    long upper = 0;
    Rational sigma_estimate;
    std::optional<int> sigma6;  // set when computed exactly
    long lower = 0;
    long slack = 0;
    long window = 0;
    bool pass = false;
    std::string route;
};

struct BoundOptions {
    BoundConstants constants;
    Sigma6Options sigma6;
    long desk_rows = 400;  // largest Seifert matrix evaluated exactly
};

BoundReport theorem_bound(int m, int n, long N, const BoundOptions& options = {});
/// 5mn/18 - Am - Bn - C.
Rational clover_bound(int m, int n, const BoundConstants& constants = {});

void write_bound_csv(std::ostream& out, const std::vector<BoundReport>& rows);

}  // namespace braidcob
