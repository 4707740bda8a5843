#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcob {

/// Raised when a braid word or a derived object violates its invariants.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Signed generator index: +i is sigma_i, -i is sigma_i^{-1}, 1-based.
using Letter = std::int32_t;

/// A word in the standard generators of the braid group on `strands()` strands.
/// Immutable once built; the empty word is the identity.
class BraidWord {
public:
    BraidWord() : strands_(1) {}
    BraidWord(int strands, std::vector<Letter> letters);

    int strands() const noexcept { return strands_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

/// A bijection of {0..n-1}; images[i] is where position i goes.
class Permutation {
public:
    explicit Permutation(int n);
    explicit Permutation(std::vector<int> images);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const noexcept { return images_; }
    int cycle_count() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

BraidWord make_word(int strands, std::vector<Letter> letters);

BraidWord compose(const BraidWord& lhs, const BraidWord& rhs);
BraidWord invert(const BraidWord& w);
BraidWord free_reduce(const BraidWord& w);
BraidWord power(const BraidWord& w, int exponent);

/// Letters flipped in sign, order kept. Its closure is the mirror image.
BraidWord mirror(const BraidWord& w);

/// Image of w under sigma_i -> sigma_{i+shift} inside B_strands.
BraidWord shift(const BraidWord& w, int offset, int strands);

Permutation permutation(const BraidWord& w);
int components(const BraidWord& w);
long exponent_sum(const BraidWord& w);

/// Framed 2-cable B_3 -> B_6: a -> bacb, b -> dced.
BraidWord cable2(const BraidWord& w);

BraidWord markov_stabilize(const BraidWord& w, int sign);
BraidWord markov_destabilize(const BraidWord& w);

/// Reads "1,-2,3" style text.
std::vector<Letter> parse_letters(const std::string& text);
std::string to_string(const BraidWord& w);

}  // namespace braidcob
