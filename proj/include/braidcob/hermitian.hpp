#pragma once

#include <Eigen/Core>
#include <cmath>
#include <utility>

namespace braidcob {

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int signature() const { return positive - negative; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Inertia of the Hermitian matrix re + i*im (re symmetric, im antisymmetric) by
/// Sylvester's law on a Bunch-Parlett pivoted LDL* factorization. Elimination stops
/// once every entry of the remaining Schur complement is at most `tol` in modulus;
/// that block counts as the null space.
template <typename Scalar>
Inertia hermitian_inertia(DenseMatrix<Scalar> re, DenseMatrix<Scalar> im, const Scalar& tol) {
    using std::abs;
    using std::sqrt;
    const Eigen::Index n = re.rows();
    // (1 + sqrt 17) / 8 bounds element growth for complete pivoting.
    const Scalar alpha = (Scalar(1) + sqrt(Scalar(17))) / Scalar(8);
    const Scalar tol2 = tol * tol;

    Eigen::Matrix<Eigen::Index, Eigen::Dynamic, 1> act(n);
    for (Eigen::Index i = 0; i < n; ++i) act(i) = i;
    Eigen::Index live = n;
    Inertia out;

    auto drop = [&](Eigen::Index slot) {
        std::swap(act(slot), act(live - 1));
        --live;
    };

    while (live > 0) {
        Scalar max_off2 = 0, max_diag = 0;
        Eigen::Index off_r = -1, off_s = -1, diag_r = -1;
        for (Eigen::Index a = 0; a < live; ++a) {
            const Eigen::Index i = act(a);
            const Scalar d = abs(re(i, i));
            if (diag_r < 0 || d > max_diag) {
                max_diag = d;
                diag_r = a;
            }
            for (Eigen::Index b = a + 1; b < live; ++b) {
                const Eigen::Index j = act(b);
                const Scalar m2 = re(i, j) * re(i, j) + im(i, j) * im(i, j);
                if (off_r < 0 || m2 > max_off2) {
                    max_off2 = m2;
                    off_r = a;
                    off_s = b;
                }
            }
        }
        if (max_diag <= tol && max_off2 <= tol2) {
            out.zero += static_cast<int>(live);
            break;
        }
        if (off_r < 0 || max_diag * max_diag >= alpha * alpha * max_off2) {
            // 1x1 pivot
            const Eigen::Index k = act(diag_r);
            const Scalar d = re(k, k);
            if (d > 0)
                ++out.positive;
            else
                ++out.negative;
            drop(diag_r);
            for (Eigen::Index a = 0; a < live; ++a) {
                const Eigen::Index i = act(a);
                // w_i = H_ik / d
                const Scalar wr = re(i, k) / d, wi = im(i, k) / d;
                for (Eigen::Index b = a; b < live; ++b) {
                    const Eigen::Index j = act(b);
                    // H_ij -= w_i * conj(H_jk)
                    const Scalar cr = re(j, k), ci = -im(j, k);
                    re(i, j) -= wr * cr - wi * ci;
                    im(i, j) -= wr * ci + wi * cr;
                    re(j, i) = re(i, j);
                    im(j, i) = -im(i, j);
                }
                im(i, i) = 0;
            }
        } else {
            // 2x2 pivot on the largest off-diagonal entry: det < 0, inertia (1, 1).
            const Eigen::Index r = act(off_r), s = act(off_s);
            ++out.positive;
            ++out.negative;
            const Scalar arr = re(r, r), ass = re(s, s);
            const Scalar br = re(r, s), bi = im(r, s);
            const Scalar det = arr * ass - (br * br + bi * bi);
            // E^{-1} = (1/det) [[ass, -b], [-conj b, arr]]
            const Eigen::Index hi = std::max(off_r, off_s), lo = std::min(off_r, off_s);
            drop(hi);
            drop(lo);
            for (Eigen::Index a = 0; a < live; ++a) {
                const Eigen::Index i = act(a);
                const Scalar c0r = re(i, r), c0i = im(i, r);
                const Scalar c1r = re(i, s), c1i = im(i, s);
                // W_i = C_i E^{-1}
                const Scalar w0r = (c0r * ass - (c1r * br + c1i * bi)) / det;
                const Scalar w0i = (c0i * ass - (c1i * br - c1r * bi)) / det;
                const Scalar w1r = (c1r * arr - (c0r * br - c0i * bi)) / det;
                const Scalar w1i = (c1i * arr - (c0i * br + c0r * bi)) / det;
                for (Eigen::Index b = a; b < live; ++b) {
                    const Eigen::Index j = act(b);
                    // H_ij -= W_i0 conj(C_j0) + W_i1 conj(C_j1)
                    const Scalar d0r = re(j, r), d0i = -im(j, r);
                    const Scalar d1r = re(j, s), d1i = -im(j, s);
                    re(i, j) -= (w0r * d0r - w0i * d0i) + (w1r * d1r - w1i * d1i);
                    im(i, j) -= (w0r * d0i + w0i * d0r) + (w1r * d1i + w1i * d1r);
                    re(j, i) = re(i, j);
                    im(j, i) = -im(i, j);
                }
                im(i, i) = 0;
            }
        }
    }
    return out;
}

}  // namespace braidcob
