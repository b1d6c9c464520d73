#pragma once

#include "resband/geometry.hpp"

#include <cstdint>
#include <vector>

namespace resband {

using SignVec = std::vector<std::int8_t>;  // entries +1 / -1, indexed by normalized line

// An open chamber of the normalized affine arrangement.
struct Chamber {
    SignVec signs;
    bool bounded = false;
    std::array<RealAlgebraic, 2> witness;  // exact interior point, normalized coords
};

class ChamberSet {
public:
    const std::vector<Chamber>& all() const { return chambers_; }
    std::size_t size() const { return chambers_.size(); }
    const Chamber& operator[](std::size_t i) const { return chambers_[i]; }
    // index of the chamber with the given sign vector, or npos
    std::size_t find(const SignVec& signs) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend ChamberSet enumerate_chambers(const NormalizedArrangement& arr);

private:
    std::vector<Chamber> chambers_;
};

// Exact vertical-strip sweep. Chambers are returned sorted by sign vector
// (lexicographic, minus before plus) so output is deterministic.
ChamberSet enumerate_chambers(const NormalizedArrangement& arr);

std::vector<std::size_t> separating_set(const Chamber& c1, const Chamber& c2);
std::size_t distance(const Chamber& c1, const Chamber& c2);

} // namespace resband
