#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "braidcob/braid.hpp"

namespace braidcob {

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using BigInt = boost::multiprecision::cpp_int;

/// Seifert form of the surface Seifert's algorithm produces on a closed braid:
/// one disk per strand, one half-twisted band per letter.
struct SeifertMatrix {
    IntMatrix entries;
    int components = 1;
    long euler_char = 1;  // strands - letters
    int pieces = 1;       // connected pieces of the surface

    Eigen::Index size() const { return entries.rows(); }
};

/// Basis: one loop per pair of consecutive letters in the same generator column,
/// ordered by column then position. Local rules (rows index the first loop):
///   diagonal       -1 if both bands positive, +1 if both negative, else 0;
///   shared band q  V(prev,next) = +1 if q positive, V(next,prev) = -1 if negative;
///   adjacent columns, loop (p,q) in column i and (p',q') in column i+1:
///                  V = -1 if p < p' < q < q', V = +1 if p' < p < q' < q.
SeifertMatrix seifert_matrix(const BraidWord& w);

/// det(V - t V^T) with powers of t and the overall sign normalized away: the
/// lowest coefficient is positive and both end coefficients are nonzero. The zero
/// polynomial has no coefficients.
struct AlexanderPolynomial {
    std::vector<BigInt> coefficients;

    bool is_zero() const { return coefficients.empty(); }
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    bool is_symmetric() const;
    std::string to_string() const;

    friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;
};

AlexanderPolynomial normalize_alexander(std::vector<BigInt> coefficients);

/// Exact det(A - tB) over Z[t] by multimodular evaluation; A and B must be square
/// and of equal size.
std::vector<BigInt> pencil_determinant(const IntMatrix& a, const IntMatrix& b);

AlexanderPolynomial alexander(const BraidWord& w);

}  // namespace braidcob
