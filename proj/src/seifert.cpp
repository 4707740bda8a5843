#include "braidcob/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>

namespace braidcob {
namespace {

struct Loop {
    int column;
    std::size_t first;
    std::size_t second;
};

// ---- arithmetic modulo a prime below 2^31 ----

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using ModMatrix = std::vector<std::vector<u64>>;

// Determinant and inverse by Gauss-Jordan; returns false if singular.
bool invert_mod(ModMatrix m, ModMatrix& inv, u64& det, u64 p) {
    const std::size_t n = m.size();
    inv.assign(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return false;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            std::swap(inv[piv], inv[c]);
            det = (p - det) % p;
        }
        det = mul_mod(det, m[c][c], p);
        const u64 s = inv_mod(m[c][c], p);
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] = mul_mod(m[c][j], s, p);
            inv[c][j] = mul_mod(inv[c][j], s, p);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const u64 f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = (m[r][j] + p - mul_mod(f, m[c][j], p)) % p;
                inv[r][j] = (inv[r][j] + p - mul_mod(f, inv[c][j], p)) % p;
            }
        }
    }
    return true;
}

// Characteristic polynomial det(xI - C), coefficients low to high, via reduction
// to upper Hessenberg form.
std::vector<u64> charpoly_mod(ModMatrix h, u64 p) {
    const std::size_t n = h.size();
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t piv = c + 1;
        while (piv < n && h[piv][c] == 0) ++piv;
        if (piv == n) continue;
        if (piv != c + 1) {
            std::swap(h[piv], h[c + 1]);
            for (auto& row : h) std::swap(row[piv], row[c + 1]);
        }
        const u64 s = inv_mod(h[c + 1][c], p);
        for (std::size_t r = c + 2; r < n; ++r) {
            if (h[r][c] == 0) continue;
            const u64 f = mul_mod(h[r][c], s, p);
            // row_r -= f row_{c+1}; col_{c+1} += f col_r
            for (std::size_t j = 0; j < n; ++j) h[r][j] = (h[r][j] + p - mul_mod(f, h[c + 1][j], p)) % p;
            for (std::size_t i = 0; i < n; ++i) h[i][c + 1] = (h[i][c + 1] + mul_mod(f, h[i][r], p)) % p;
        }
    }
    // p_k(x) = det(xI - H_k) for the leading k x k block.
    std::vector<std::vector<u64>> poly(n + 1);
    poly[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t m = k - 1;  // new row/column index
        std::vector<u64> next(k + 1, 0);
        // (x - h_mm) p_{k-1}
        for (std::size_t d = 0; d < poly[m].size(); ++d) {
            next[d + 1] = (next[d + 1] + poly[m][d]) % p;
            next[d] = (next[d] + p - mul_mod(h[m][m], poly[m][d], p)) % p;
        }
        u64 prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = mul_mod(prod, h[i + 1][i], p);
            if (prod == 0) break;
            const u64 f = mul_mod(prod, h[i][m], p);
            for (std::size_t d = 0; d < poly[i].size(); ++d)
                next[d] = (next[d] + p - mul_mod(f, poly[i][d], p)) % p;
        }
        poly[k] = std::move(next);
    }
    return poly[n];
}

// det(A - tB) mod p as coefficients low to high (length n+1).
std::vector<u64> pencil_det_mod(const IntMatrix& a, const IntMatrix& b, u64 p) {
    const auto n = static_cast<std::size_t>(a.rows());
    auto reduce = [p](long v) { return static_cast<u64>(((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)); };
    std::vector<u64> result(n + 1, 0);
    for (u64 t0 = 0; t0 <= n && t0 < p; ++t0) {
        ModMatrix m0(n, std::vector<u64>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m0[i][j] = (reduce(a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) + p -
                            mul_mod(t0, reduce(b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))), p)) % p;
        ModMatrix inv;
        u64 det0 = 0;
        if (!invert_mod(m0, inv, det0, p)) continue;
        // C = M0^{-1} B; det(A - tB) = det(M0) det(I - uC) with u = t - t0.
        ModMatrix c(n, std::vector<u64>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (inv[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] = (c[i][j] + mul_mod(inv[i][k], reduce(b(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j))), p)) % p;
            }
        const std::vector<u64> chi = charpoly_mod(std::move(c), p);
        std::vector<u64> q(n + 1);  // coefficient of u^j is chi_{n-j}
        for (std::size_t j = 0; j <= n; ++j) q[j] = mul_mod(det0, chi[n - j], p);
        // Horner in the shifted variable: q(t - t0).
        std::vector<u64> out(1, 0);
        const u64 neg_t0 = (p - t0 % p) % p;
        for (std::size_t j = n + 1; j-- > 0;) {
            std::vector<u64> next(out.size() + 1, 0);
            for (std::size_t d = 0; d < out.size(); ++d) {
                next[d + 1] = (next[d + 1] + out[d]) % p;
                next[d] = (next[d] + mul_mod(out[d], neg_t0, p)) % p;
            }
            next[0] = (next[0] + q[j]) % p;
            out = std::move(next);
        }
        out.resize(n + 1);
        return out;
    }
    return result;  // singular at n+1 points: the polynomial vanishes mod p
}

}  // namespace

SeifertMatrix seifert_matrix(const BraidWord& w) {
    const int n = w.strands();
    std::vector<std::vector<std::size_t>> columns(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        columns[static_cast<std::size_t>(std::abs(w[pos]) - 1)].push_back(pos);

    std::vector<Loop> loops;
    std::vector<std::size_t> column_start(columns.size() + 1, 0);
    int unused = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        column_start[c] = loops.size();
        if (columns[c].empty()) ++unused;
        for (std::size_t j = 0; j + 1 < columns[c].size(); ++j)
            loops.push_back({static_cast<int>(c), columns[c][j], columns[c][j + 1]});
    }
    column_start[columns.size()] = loops.size();

    const auto m = static_cast<Eigen::Index>(loops.size());
    SeifertMatrix s;
    s.entries = IntMatrix::Zero(m, m);
    s.components = components(w);
    s.euler_char = static_cast<long>(n) - static_cast<long>(w.size());
    s.pieces = unused + 1;

    auto sign = [&w](std::size_t pos) { return w[pos] > 0 ? 1 : -1; };
    for (Eigen::Index a = 0; a < m; ++a) {
        const Loop& la = loops[static_cast<std::size_t>(a)];
        s.entries(a, a) = -(sign(la.first) + sign(la.second)) / 2;
        if (a + 1 < m && loops[static_cast<std::size_t>(a + 1)].column == la.column) {
            if (sign(la.second) > 0)
                s.entries(a, a + 1) = 1;
            else
                s.entries(a + 1, a) = -1;
        }
        const auto next_col = static_cast<std::size_t>(la.column) + 1;
        if (next_col >= columns.size()) continue;
        for (std::size_t b = column_start[next_col]; b < column_start[next_col + 1]; ++b) {
            const Loop& lb = loops[b];
            if (la.first < lb.first && lb.first < la.second && la.second < lb.second)
                s.entries(a, static_cast<Eigen::Index>(b)) = -1;
            else if (lb.first < la.first && la.first < lb.second && lb.second < la.second)
                s.entries(a, static_cast<Eigen::Index>(b)) = 1;
        }
    }
    return s;
}

bool AlexanderPolynomial::is_symmetric() const {
    const auto& c = coefficients;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const BigInt& mirror = c[c.size() - 1 - i];
        if (c[i] != mirror && c[i] != -mirror) return false;
    }
    // Either palindromic or antipalindromic as a whole.
    bool pal = true, anti = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        pal = pal && c[i] == c[c.size() - 1 - i];
        anti = anti && c[i] == -c[c.size() - 1 - i];
    }
    return pal || anti;
}

std::string AlexanderPolynomial::to_string() const {
    if (coefficients.empty()) return "0";
    std::string s;
    for (std::size_t d = coefficients.size(); d-- > 0;) {
        const BigInt& c = coefficients[d];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (mag != 1 || d == 0) s += mag.str();
        if (d >= 1) s += "t";
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s;
}

AlexanderPolynomial normalize_alexander(std::vector<BigInt> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    auto first = std::find_if(c.begin(), c.end(), [](const BigInt& v) { return v != 0; });
    c.erase(c.begin(), first);
    if (!c.empty() && c.front() < 0)
        for (auto& v : c) v = -v;
    return AlexanderPolynomial{std::move(c)};
}

std::vector<BigInt> pencil_determinant(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw ValidationError("pencil_determinant needs two square matrices of equal size");
    const auto n = static_cast<std::size_t>(a.rows());
    if (n == 0) return {BigInt(1)};
    // Every coefficient is bounded by the product of the row l1-norms of [A | B].
    double log2_bound = 1.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const double row = static_cast<double>(a.row(i).cwiseAbs().sum() + b.row(i).cwiseAbs().sum());
        log2_bound += std::log2(std::max(row, 1.0));
    }
    std::vector<BigInt> value(n + 1, 0);
    BigInt modulus = 1;
    double log2_modulus = 0.0;
    u64 candidate = (u64{1} << 31) - 1;
    while (log2_modulus < log2_bound + 1.0) {
        while (!is_prime(candidate)) --candidate;
        const u64 p = candidate--;
        const std::vector<u64> residues = pencil_det_mod(a, b, p);
        // Garner-style CRT update of every coefficient.
        const u64 m_mod_p = static_cast<u64>(modulus % p);
        const u64 inv = inv_mod(m_mod_p, p);
        for (std::size_t d = 0; d <= n; ++d) {
            const u64 cur = static_cast<u64>(((value[d] % p) + p) % p);
            const u64 delta = mul_mod((residues[d] + p - cur) % p, inv, p);
            value[d] += modulus * delta;
        }
        modulus *= p;
        log2_modulus += std::log2(static_cast<double>(p));
    }
    const BigInt half = modulus / 2;
    for (auto& v : value)
        if (v > half) v -= modulus;
    return value;
}

AlexanderPolynomial alexander(const BraidWord& w) {
    const SeifertMatrix s = seifert_matrix(w);
    if (s.size() == 0) {
        // Empty surface piece per unused column: the unknot gives 1, split links 0.
        return normalize_alexander({BigInt(s.pieces == 1 ? 1 : 0)});
    }
    if (s.pieces > 1) return AlexanderPolynomial{};
    return normalize_alexander(pencil_determinant(s.entries, s.entries.transpose()));
}

}  // namespace braidcob
