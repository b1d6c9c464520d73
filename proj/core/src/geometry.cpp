#include "resband/geometry.hpp"

#include "resband/errors.hpp"

#include <algorithm>

namespace resband {

bool proportional(const ProjLine& l, const ProjLine& m) {
    return (l.a * m.b - l.b * m.a).is_zero() && (l.b * m.c - l.c * m.b).is_zero() &&
           (l.a * m.c - l.c * m.a).is_zero();
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    ProjPoint p{l.b * m.c - l.c * m.b, l.c * m.a - l.a * m.c, l.a * m.b - l.b * m.a};
    for (auto& x : p) {
        if (x.is_zero()) continue;
        RealAlgebraic inv = RealAlgebraic(1) / x;
        for (auto& y : p) y *= inv;
        return p;
    }
    throw invariant_error("meet of proportional lines");
}

RealAlgebraic eval(const ProjLine& l, const ProjPoint& p) {
    return l.a * p[0] + l.b * p[1] + l.c * p[2];
}

ProjArrangement::ProjArrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
    if (lines_.size() < 3)
        throw parse_error("arrangement needs at least 3 projective lines");
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        if (lines_[i].is_degenerate())
            throw parse_error("degenerate line (0,0,0) at index " + std::to_string(i));
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (proportional(lines_[i], lines_[j]))
                throw parse_error("duplicate line: indices " + std::to_string(i) + " and " +
                                  std::to_string(j));
    }
    ProjPoint p = meet(lines_[0], lines_[1]);
    bool all_through = true;
    for (std::size_t i = 2; i < lines_.size(); ++i)
        if (!eval(lines_[i], p).is_zero()) { all_through = false; break; }
    if (all_through)
        throw parse_error("all lines concurrent through one point");
}

std::vector<MultiplePoint> multiple_points(const ProjArrangement& arr) {
    const auto& L = arr.lines();
    std::vector<MultiplePoint> pts;
    for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            ProjPoint p = meet(L[i], L[j]);
            bool known = false;
            for (const auto& q : pts)
                if (q.point[0] == p[0] && q.point[1] == p[1] && q.point[2] == p[2]) {
                    known = true;
                    break;
                }
            if (known) continue;
            MultiplePoint mp;
            mp.point = p;
            for (std::size_t k = 0; k < L.size(); ++k)
                if (eval(L[k], p).is_zero()) mp.incident.push_back(k);
            pts.push_back(std::move(mp));
        }
    }
    return pts;
}

Mat3 Mat3::identity() {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = RealAlgebraic(i % 4 == 0 ? 1 : 0);
    return r;
}

Mat3 Mat3::operator*(const Mat3& rhs) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            RealAlgebraic s(0);
            for (int k = 0; k < 3; ++k) s += m[i * 3 + k] * rhs.m[k * 3 + j];
            r.m[i * 3 + j] = s;
        }
    return r;
}

RealAlgebraic Mat3::det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Mat3 Mat3::inverse() const {
    RealAlgebraic d = det();
    if (d.is_zero()) throw invariant_error("singular 3x3 matrix");
    RealAlgebraic inv = RealAlgebraic(1) / d;
    Mat3 r;
    auto cof = [&](int r0, int c0, int r1, int c1) {
        return m[r0 * 3 + c0] * m[r1 * 3 + c1] - m[r0 * 3 + c1] * m[r1 * 3 + c0];
    };
    r.m[0] = cof(1, 1, 2, 2) * inv;
    r.m[1] = -(m[1] * m[8] - m[2] * m[7]) * inv;
    r.m[2] = (m[1] * m[5] - m[2] * m[4]) * inv;
    r.m[3] = -(m[3] * m[8] - m[5] * m[6]) * inv;
    r.m[4] = (m[0] * m[8] - m[2] * m[6]) * inv;
    r.m[5] = -(m[0] * m[5] - m[2] * m[3]) * inv;
    r.m[6] = cof(1, 0, 2, 1) * inv;
    r.m[7] = -(m[0] * m[7] - m[1] * m[6]) * inv;
    r.m[8] = (m[0] * m[4] - m[1] * m[3]) * inv;
    return r;
}

DeconedChart decone(const ProjArrangement& arr, std::size_t infinity_index) {
    if (infinity_index >= arr.size())
        throw parse_error("infinity index out of range");
    const ProjLine& ell = arr.lines()[infinity_index];
    Mat3 T;
    auto set_row = [&](int row, RealAlgebraic x, RealAlgebraic y, RealAlgebraic z) {
        T.m[row * 3 + 0] = std::move(x);
        T.m[row * 3 + 1] = std::move(y);
        T.m[row * 3 + 2] = std::move(z);
    };
    // Third row is the chosen line; complete with two standard basis rows.
    if (!ell.c.is_zero() && ell.a.is_zero() && ell.b.is_zero()) {
        T = Mat3::identity();  // chart of an input already written affinely
        T.m[8] = ell.c;
    } else if (!ell.c.is_zero()) {
        set_row(0, 1, 0, 0);
        set_row(1, 0, 1, 0);
        set_row(2, ell.a, ell.b, ell.c);
    } else if (!ell.b.is_zero()) {
        set_row(0, 1, 0, 0);
        set_row(1, 0, 0, 1);
        set_row(2, ell.a, ell.b, ell.c);
    } else {
        set_row(0, 0, 1, 0);
        set_row(1, 0, 0, 1);
        set_row(2, ell.a, ell.b, ell.c);
    }
    DeconedChart chart;
    chart.infinity_index = infinity_index;
    chart.to_chart = T;
    chart.from_chart = T.inverse();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == infinity_index) continue;
        const ProjLine& l = arr.lines()[i];
        // row covector transforms by T^-1 on the right
        const Mat3& V = chart.from_chart;
        AffineLine al;
        al.a = l.a * V.m[0] + l.b * V.m[3] + l.c * V.m[6];
        al.b = l.a * V.m[1] + l.b * V.m[4] + l.c * V.m[7];
        al.c = l.a * V.m[2] + l.b * V.m[5] + l.c * V.m[8];
        al.source = i;
        if (al.a.is_zero() && al.b.is_zero())
            throw invariant_error("line collapsed onto the chart's infinity");
        chart.lines.push_back(std::move(al));
    }
    return chart;
}

namespace {

// candidate rational parameters 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
Rational candidate_param(unsigned k) {
    if (k == 0) return Rational(0);
    unsigned level = (k + 3) / 4;
    switch ((k - 1) % 4) {
        case 0: return Rational(static_cast<long>(level));
        case 1: return Rational(-static_cast<long>(level));
        case 2: return Rational(1, static_cast<long>(level + 1));
        default: return Rational(-1, static_cast<long>(level + 1));
    }
}

} // namespace

std::array<RealAlgebraic, 2> NormalizedArrangement::to_chart_point(
    const std::array<RealAlgebraic, 2>& p) const {
    // invert: p_norm = lin * p_chart + shift
    RealAlgebraic det = lin[0] * lin[3] - lin[1] * lin[2];
    RealAlgebraic inv = RealAlgebraic(1) / det;
    RealAlgebraic x = p[0] - shift[0], y = p[1] - shift[1];
    return {(lin[3] * x - lin[1] * y) * inv, (lin[0] * y - lin[2] * x) * inv};
}

NormalizedArrangement normalize(const DeconedChart& chart) {
    const std::size_t n = chart.lines.size();
    if (n < 2) throw invariant_error("normalization needs at least 2 affine lines");

    // Step 1: y-shear (X, Y) -> (X, Y - s X) makes every line non-horizontal.
    // Line aX + bY + c becomes (a + s b) x' + b y' + c.
    Rational s;
    for (unsigned k = 0;; ++k) {
        if (k > 10000) throw invariant_error("no shear candidate found");
        s = candidate_param(k);
        bool ok = true;
        for (const auto& l : chart.lines)
            if ((l.a + l.b * RealAlgebraic(s)).is_zero()) { ok = false; break; }
        if (ok) break;
    }
    std::vector<AffineLine> work = chart.lines;
    for (auto& l : work) l.a = l.a + l.b * RealAlgebraic(s);

    // Intersections in sheared coordinates.
    struct Pt { RealAlgebraic x, y; };
    std::vector<Pt> pts;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RealAlgebraic det = work[i].a * work[j].b - work[j].a * work[i].b;
            if (det.is_zero()) continue;
            any = true;
            RealAlgebraic inv = RealAlgebraic(1) / det;
            RealAlgebraic x = (work[i].b * work[j].c - work[j].b * work[i].c) * inv;
            RealAlgebraic y = (work[j].a * work[i].c - work[i].a * work[j].c) * inv;
            bool dup = false;
            for (const auto& p : pts)
                if (p.x == x && p.y == y) { dup = true; break; }
            if (!dup) pts.push_back({std::move(x), std::move(y)});
        }
    if (!any) throw invariant_error("all lines parallel in chart");

    // Step 2: x-shear (x', y') -> (x' - u y', y') separates x-projections
    // of all intersection points.
    Rational u;
    for (unsigned k = 0;; ++k) {
        if (k > 10000) throw invariant_error("no projection candidate found");
        u = candidate_param(k);
        RealAlgebraic ur{u};
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (((pts[i].x - ur * pts[i].y) - (pts[j].x - ur * pts[j].y)).is_zero()) {
                    ok = false;
                    break;
                }
            }
        if (ok) break;
    }
    RealAlgebraic ur{u};
    for (auto& l : work) l.b = l.b + l.a * ur;  // substitute x = x'' + u y''
    for (auto& p : pts) p.x = p.x - ur * p.y;

    // Step 3: translate so intersections sit at y >= 1 and crossings at x >= 1.
    RealAlgebraic ymin = pts[0].y;
    for (const auto& p : pts)
        if (p.y < ymin) ymin = p.y;
    RealAlgebraic dy = ymin - RealAlgebraic(1);
    std::vector<RealAlgebraic> crossing(n);
    for (std::size_t i = 0; i < n; ++i) {
        // after y-translation y = y''' + dy: c += b * dy
        work[i].c = work[i].c + work[i].b * dy;
        crossing[i] = -(work[i].c) / work[i].a;
    }
    RealAlgebraic xmin = crossing[0];
    for (const auto& x : crossing)
        if (x < xmin) xmin = x;
    RealAlgebraic dx = xmin - RealAlgebraic(1);
    for (std::size_t i = 0; i < n; ++i) {
        work[i].c = work[i].c + work[i].a * dx;
        crossing[i] = crossing[i] - dx;
    }

    // Step 4: order by crossing and orient all lines negative at the origin.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return crossing[i] < crossing[j];
    });
    NormalizedArrangement na;
    na.chart = chart;
    na.chart_index = order;
    for (std::size_t k = 0; k < n; ++k) {
        AffineLine l = work[order[k]];
        int f = 1;
        int cs = l.c.sign();
        if (cs == 0) throw invariant_error("line passes through the flag origin");
        if (cs > 0) {
            l.a = -l.a; l.b = -l.b; l.c = -l.c;
            f = -1;
        }
        na.lines.push_back(std::move(l));
        na.crossings.push_back(crossing[order[k]]);
        na.flip.push_back(f);
    }
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!(na.crossings[k] < na.crossings[k + 1]))
            throw invariant_error("crossings not strictly increasing");

    // composite map chart -> normalized:
    // x_n = X - u (Y - s X) - dx = (1 + u s) X - u Y - dx
    // y_n = (Y - s X) - dy
    RealAlgebraic sr{s};
    na.lin = {RealAlgebraic(1) + ur * sr, -ur, -sr, RealAlgebraic(1)};
    na.shift = {-dx, -dy};
    return na;
}

} // namespace resband
