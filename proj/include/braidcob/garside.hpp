#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidcob/braid.hpp"

namespace braidcob {

/// Positive permutation braid, stored by the end position of the strand starting
/// at each position (0-based).
using SimpleFactor = std::vector<std::uint8_t>;

/// Left normal form Delta^infimum * factors[0] * ... * factors[r-1]. Every factor is
/// a proper simple element and consecutive factors are left-weighted, so the form
/// is a complete invariant of the group element.
struct CanonicalBraid {
    int strands = 1;
    long infimum = 0;
    std::vector<SimpleFactor> factors;

    long supremum() const { return infimum + static_cast<long>(factors.size()); }
    std::string key() const;

    friend bool operator==(const CanonicalBraid&, const CanonicalBraid&) = default;
};

CanonicalBraid normal_form(const BraidWord& w);
bool equal(const BraidWord& lhs, const BraidWord& rhs);

/// A positive word whose value is the given canonical braid (Delta expanded when
/// the infimum is nonnegative); negative infimum yields a mixed word.
BraidWord to_word(const CanonicalBraid& c);

/// The half twist Delta of B_n as a positive word.
BraidWord half_twist(int strands);

}  // namespace braidcob
