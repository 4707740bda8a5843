#include "braidcob/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace braidcob {
namespace {

SimpleFactor identity_factor(int n) {
    SimpleFactor f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), std::uint8_t{0});
    return f;
}

bool is_identity(const SimpleFactor& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != i) return false;
    return true;
}

bool is_delta(const SimpleFactor& f) {
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i)
        if (f[i] != n - 1 - i) return false;
    return true;
}

SimpleFactor inverse(const SimpleFactor& f) {
    SimpleFactor inv(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = static_cast<std::uint8_t>(i);
    return inv;
}

// sigma_{i+1} as a simple factor (0-based column i).
SimpleFactor generator_factor(int n, int column) {
    SimpleFactor f = identity_factor(n);
    std::swap(f[static_cast<std::size_t>(column)], f[static_cast<std::size_t>(column) + 1]);
    return f;
}

// Delta * sigma^{-1} at 0-based column i: the simple X with X * sigma_i = Delta.
SimpleFactor delta_complement(int n, int column) {
    SimpleFactor f(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        int r = n - 1 - p;
        if (r == column)
            r = column + 1;
        else if (r == column + 1)
            r = column;
        f[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(r);
    }
    return f;
}

// Rewrites (a, b) into a left-weighted pair with the same product. Returns true if
// anything moved.
bool left_weight(SimpleFactor& a, SimpleFactor& b) {
    const int n = static_cast<int>(a.size());
    SimpleFactor a_inv = inverse(a);
    SimpleFactor b_inv = inverse(b);
    bool changed = false;
    for (;;) {
        int move = -1;
        for (int i = 0; i + 1 < n; ++i) {
            const auto u = static_cast<std::size_t>(i);
            // i starts b and does not finish a
            if (b[u] > b[u + 1] && a_inv[u] < a_inv[u + 1]) {
                move = i;
                break;
            }
        }
        if (move < 0) return changed;
        changed = true;
        const auto u = static_cast<std::size_t>(move);
        // a <- a * sigma: positions u, u+1 swap at the end of a.
        std::swap(a_inv[u], a_inv[u + 1]);
        a[a_inv[u]] = static_cast<std::uint8_t>(u);
        a[a_inv[u + 1]] = static_cast<std::uint8_t>(u + 1);
        // b <- sigma^{-1} * b: strands starting at u, u+1 trade places.
        std::swap(b[u], b[u + 1]);
        b_inv[b[u]] = static_cast<std::uint8_t>(u);
        b_inv[b[u + 1]] = static_cast<std::uint8_t>(u + 1);
    }
}

void push_factor(CanonicalBraid& c, SimpleFactor y) {
    auto& f = c.factors;
    f.push_back(std::move(y));
    for (std::size_t j = f.size() - 1; j > 0; --j)
        if (!left_weight(f[j - 1], f[j])) break;
    while (!f.empty() && is_identity(f.back())) f.pop_back();
    // Delta factors can only sit at the front of a left-weighted sequence.
    std::size_t deltas = 0;
    while (deltas < f.size() && is_delta(f[deltas])) ++deltas;
    if (deltas) {
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(deltas));
        c.infimum += static_cast<long>(deltas);
    }
}

}  // namespace

std::string CanonicalBraid::key() const {
    std::string s = std::to_string(strands) + ":" + std::to_string(infimum) + ":";
    for (const auto& f : factors) {
        for (auto v : f) s += std::to_string(v) + ',';
        s += '|';
    }
    return s;
}

CanonicalBraid normal_form(const BraidWord& w) {
    const int n = w.strands();
    if (n > 255) throw ValidationError("normal_form supports at most 255 strands");
    CanonicalBraid c;
    c.strands = n;
    long negatives = 0;
    for (Letter k : w.letters()) negatives += k < 0;
    // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); every Delta^{-1} is moved to the
    // front, conjugating what it passes by tau: sigma_i -> sigma_{n-i}.
    c.infimum = -negatives;
    long seen = 0;
    for (Letter k : w.letters()) {
        if (k < 0) ++seen;
        int column = std::abs(k) - 1;
        if ((negatives - seen) % 2 != 0) column = n - 2 - column;
        push_factor(c, k > 0 ? generator_factor(n, column) : delta_complement(n, column));
    }
    return c;
}

bool equal(const BraidWord& lhs, const BraidWord& rhs) {
    if (lhs.strands() != rhs.strands())
        throw ValidationError("strand-count mismatch: " + std::to_string(lhs.strands()) + " vs " +
                              std::to_string(rhs.strands()));
    return normal_form(lhs) == normal_form(rhs);
}

BraidWord half_twist(int strands) {
    std::vector<Letter> out;
    for (int top = strands - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) out.push_back(i);
    return BraidWord(strands, std::move(out));
}

BraidWord to_word(const CanonicalBraid& c) {
    const int n = c.strands;
    std::vector<Letter> out;
    const BraidWord delta = half_twist(n);
    for (long i = 0; i < std::abs(c.infimum); ++i)
        for (Letter k : delta.letters()) out.push_back(c.infimum > 0 ? k : -k);
    if (c.infimum < 0) std::reverse(out.begin(), out.end());
    for (const auto& f : c.factors) {
        // Bubble sort the strands into place; each adjacent swap is one positive crossing.
        std::vector<int> at(static_cast<std::size_t>(n));  // end position of strand at position p
        for (int p = 0; p < n; ++p) at[static_cast<std::size_t>(p)] = f[static_cast<std::size_t>(p)];
        for (bool moved = true; moved;) {
            moved = false;
            for (int i = 0; i + 1 < n; ++i) {
                const auto u = static_cast<std::size_t>(i);
                if (at[u] > at[u + 1]) {
                    std::swap(at[u], at[u + 1]);
                    out.push_back(i + 1);
                    moved = true;
                }
            }
        }
    }
    return BraidWord(n, std::move(out));
}

}  // namespace braidcob
