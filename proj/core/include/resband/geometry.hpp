#pragma once

#include "resband/real_algebraic.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace resband {

// A projective line {a x + b y + c z = 0} with a declared orientation:
// the triple itself matters, not just its span.
struct ProjLine {
    RealAlgebraic a, b, c;
    bool is_degenerate() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
};

bool proportional(const ProjLine& l, const ProjLine& m);

// Homogeneous point, normalized so its first nonzero coordinate is 1.
using ProjPoint = std::array<RealAlgebraic, 3>;

ProjPoint meet(const ProjLine& l, const ProjLine& m);  // throws if proportional
RealAlgebraic eval(const ProjLine& l, const ProjPoint& p);

// The projective arrangement cA. Invariants: at least 3 lines, pairwise
// non-proportional, not all through one point.
class ProjArrangement {
public:
    explicit ProjArrangement(std::vector<ProjLine> lines);  // validates, throws parse_error
    const std::vector<ProjLine>& lines() const { return lines_; }
    std::size_t size() const { return lines_.size(); }

private:
    std::vector<ProjLine> lines_;
};

struct MultiplePoint {
    ProjPoint point;
    std::vector<std::size_t> incident;  // line indices, ascending
    std::size_t multiplicity() const { return incident.size(); }
};

// All pairwise intersection points grouped by exact coincidence, each with
// its full incident set (multiplicity >= 2). Order: first occurrence over
// pairs (i, j), i < j ascending.
std::vector<MultiplePoint> multiple_points(const ProjArrangement& arr);

// 3x3 matrix over the coordinate field, row major.
struct Mat3 {
    std::array<RealAlgebraic, 9> m;
    static Mat3 identity();
    Mat3 operator*(const Mat3& rhs) const;
    RealAlgebraic det() const;
    Mat3 inverse() const;  // throws invariant_error when singular
};

// An affine line a x + b y + c = 0 in a deconed chart, remembering which
// projective line it came from.
struct AffineLine {
    RealAlgebraic a, b, c;
    std::size_t source;  // index into the ProjArrangement
};

// The affine chart obtained by sending one line of cA to infinity.
// to_chart maps homogeneous source coordinates to chart coordinates
// (third row = the chosen line, so its vanishing locus is z' = 0).
struct DeconedChart {
    std::vector<AffineLine> lines;  // the n remaining lines, original order
    std::size_t infinity_index;
    Mat3 to_chart, from_chart;
};

DeconedChart decone(const ProjArrangement& arr, std::size_t infinity_index);

// Chart satisfying the normalization every downstream computation assumes:
// no horizontal line, all intersections strictly above the x-axis, crossings
// 0 < a_1 < ... < a_n, origin in the negative half-plane of every line.
// Lines are renumbered by ascending crossing.
struct NormalizedArrangement {
    DeconedChart chart;
    std::vector<AffineLine> lines;          // oriented, ordered by crossing
    std::vector<RealAlgebraic> crossings;   // a_i, strictly increasing
    std::vector<std::size_t> chart_index;   // normalized position -> index into chart.lines
    std::vector<int> flip;                  // +1/-1: normalized alpha vs chart alpha on chart coords
    // affine map: chart coords -> normalized coords
    std::array<RealAlgebraic, 4> lin;       // row major 2x2
    std::array<RealAlgebraic, 2> shift;
    std::size_t size() const { return lines.size(); }

    std::array<RealAlgebraic, 2> to_chart_point(const std::array<RealAlgebraic, 2>& p) const;
};

NormalizedArrangement normalize(const DeconedChart& chart);

} // namespace resband
