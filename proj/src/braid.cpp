#include "braidcob/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidcob {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
        throw ValidationError("strand count must be positive, got " + std::to_string(strands_));
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const Letter k = letters_[i];
        if (k == 0)
            throw ValidationError("letter at position " + std::to_string(i) + " is zero");
        if (std::abs(k) > strands_ - 1)
            throw ValidationError("letter " + std::to_string(std::abs(k)) + " at position " +
                                  std::to_string(i) + " exceeds n-1=" + std::to_string(strands_ - 1));
    }
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)])
            throw ValidationError("not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++cycles;
        for (int j = start; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)])
            seen[static_cast<std::size_t>(j)] = true;
    }
    return cycles;
}

BraidWord make_word(int strands, std::vector<Letter> letters) {
    return BraidWord(strands, std::move(letters));
}

BraidWord compose(const BraidWord& lhs, const BraidWord& rhs) {
    if (lhs.strands() != rhs.strands())
        throw ValidationError("strand-count mismatch: " + std::to_string(lhs.strands()) + " vs " +
                              std::to_string(rhs.strands()));
    std::vector<Letter> out = lhs.letters();
    out.insert(out.end(), rhs.letters().begin(), rhs.letters().end());
    return BraidWord(lhs.strands(), std::move(out));
}

BraidWord invert(const BraidWord& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (Letter& k : out) k = -k;
    return BraidWord(w.strands(), std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
    // A single stack pass reaches the fixed point of pairwise cancellation.
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter k : w.letters()) {
        if (!out.empty() && out.back() == -k)
            out.pop_back();
        else
            out.push_back(k);
    }
    return BraidWord(w.strands(), std::move(out));
}

BraidWord power(const BraidWord& w, int exponent) {
    const BraidWord base = exponent < 0 ? invert(w) : w;
    std::vector<Letter> out;
    out.reserve(base.size() * static_cast<std::size_t>(std::abs(exponent)));
    for (int i = 0; i < std::abs(exponent); ++i)
        out.insert(out.end(), base.letters().begin(), base.letters().end());
    return BraidWord(w.strands(), std::move(out));
}

BraidWord mirror(const BraidWord& w) {
    std::vector<Letter> out = w.letters();
    for (Letter& k : out) k = -k;
    return BraidWord(w.strands(), std::move(out));
}

BraidWord shift(const BraidWord& w, int offset, int strands) {
    std::vector<Letter> out = w.letters();
    for (Letter& k : out) k += k > 0 ? offset : -offset;
    return BraidWord(strands, std::move(out));
}

Permutation permutation(const BraidWord& w) {
    // Track which strand sits at each position; the result maps start to end position.
    std::vector<int> at(static_cast<std::size_t>(w.strands()));
    std::iota(at.begin(), at.end(), 0);
    for (Letter k : w.letters()) {
        const auto i = static_cast<std::size_t>(std::abs(k) - 1);
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> images(at.size());
    for (std::size_t pos = 0; pos < at.size(); ++pos) images[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
    return Permutation(std::move(images));
}

int components(const BraidWord& w) { return permutation(w).cycle_count(); }

long exponent_sum(const BraidWord& w) {
    long sum = 0;
    for (Letter k : w.letters()) sum += k > 0 ? 1 : -1;
    return sum;
}

BraidWord cable2(const BraidWord& w) {
    if (w.strands() != 3)
        throw ValidationError("cable2 expects a 3-strand word, got " + std::to_string(w.strands()));
    static const std::vector<Letter> image_a{2, 1, 3, 2};
    static const std::vector<Letter> image_b{4, 3, 5, 4};
    std::vector<Letter> out;
    out.reserve(4 * w.size());
    for (Letter k : w.letters()) {
        const auto& img = std::abs(k) == 1 ? image_a : image_b;
        if (k > 0) {
            out.insert(out.end(), img.begin(), img.end());
        } else {
            for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
        }
    }
    return BraidWord(6, std::move(out));
}

BraidWord markov_stabilize(const BraidWord& w, int sign) {
    if (sign != 1 && sign != -1) throw ValidationError("stabilization sign must be +1 or -1");
    std::vector<Letter> out = w.letters();
    out.push_back(sign * w.strands());
    return BraidWord(w.strands() + 1, std::move(out));
}

BraidWord markov_destabilize(const BraidWord& w) {
    const int last = w.strands() - 1;
    if (last < 1) throw ValidationError("cannot destabilize a 1-strand word");
    std::size_t uses = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (std::abs(w[i]) == last) {
            ++uses;
            where = i;
        }
    }
    if (uses != 1)
        throw ValidationError("destabilization needs generator " + std::to_string(last) +
                              " exactly once, found " + std::to_string(uses));
    // Conjugating the single letter to the end is closure-preserving and keeps the
    // remaining letters in cyclic order.
    std::vector<Letter> out;
    out.reserve(w.size() - 1);
    out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(where) + 1, w.letters().end());
    out.insert(out.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(where));
    return BraidWord(w.strands() - 1, std::move(out));
}

std::vector<Letter> parse_letters(const std::string& text) {
    std::vector<Letter> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("malformed letter '" + item + "'");
        }
        if (used != item.size()) throw ValidationError("malformed letter '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string to_string(const BraidWord& w) {
    std::string s = "B" + std::to_string(w.strands()) + "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    return s + "]";
}

}  // namespace braidcob
