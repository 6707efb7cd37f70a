#include "hpfold/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace hpfold {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

struct Offset {
    int du, dv, dl;
    Sublattice sub;
};

// Neighbor offsets per source sublattice, frozen from the distance
// predicate dist <= 2 (see the module comment in the header). Order: 3
// units, 6 short diagonals, 3 long diagonals, 4 upper, 4 lower.
constexpr std::array<Offset, 20> kFromA = {{
    {0, 0, 0, Sublattice::B},
    {0, -1, 0, Sublattice::B},
    {1, -1, 0, Sublattice::B},
    {1, 0, 0, Sublattice::A},
    {-1, 0, 0, Sublattice::A},
    {0, 1, 0, Sublattice::A},
    {0, -1, 0, Sublattice::A},
    {1, -1, 0, Sublattice::A},
    {-1, 1, 0, Sublattice::A},
    {1, 0, 0, Sublattice::B},
    {-1, 0, 0, Sublattice::B},
    {1, -2, 0, Sublattice::B},
    {0, 0, 1, Sublattice::A},
    {0, 0, 1, Sublattice::B},
    {0, -1, 1, Sublattice::B},
    {1, -1, 1, Sublattice::B},
    {0, 0, -1, Sublattice::A},
    {0, 0, -1, Sublattice::B},
    {0, -1, -1, Sublattice::B},
    {1, -1, -1, Sublattice::B},
}};

constexpr std::array<Offset, 20> kFromB = {{
    {0, 0, 0, Sublattice::A},
    {0, 1, 0, Sublattice::A},
    {-1, 1, 0, Sublattice::A},
    {1, 0, 0, Sublattice::B},
    {-1, 0, 0, Sublattice::B},
    {0, 1, 0, Sublattice::B},
    {0, -1, 0, Sublattice::B},
    {1, -1, 0, Sublattice::B},
    {-1, 1, 0, Sublattice::B},
    {1, 0, 0, Sublattice::A},
    {-1, 0, 0, Sublattice::A},
    {-1, 2, 0, Sublattice::A},
    {0, 0, 1, Sublattice::B},
    {0, 0, 1, Sublattice::A},
    {0, 1, 1, Sublattice::A},
    {-1, 1, 1, Sublattice::A},
    {0, 0, -1, Sublattice::B},
    {0, 0, -1, Sublattice::A},
    {0, 1, -1, Sublattice::A},
    {-1, 1, -1, Sublattice::A},
}};

using I128 = __int128;

struct Vec3 {
    I128 x, y, z;
};

Vec3 sub3(const IntPoint& a, const IntPoint& b) {
    return {static_cast<I128>(a.x) - b.x, static_cast<I128>(a.y) - b.y,
            static_cast<I128>(a.z) - b.z};
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

I128 dot3(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

bool is_zero(const Vec3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

int sgn(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// 2D orientation after dropping one axis. The drop does not preserve the
// metric, only incidence, which is all an intersection test needs.
struct Vec2 {
    I128 x, y;
};

Vec2 drop_axis(const Vec3& a, int axis) {
    switch (axis) {
        case 0: return {a.y, a.z};
        case 1: return {a.x, a.z};
        default: return {a.x, a.y};
    }
}

I128 cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace

const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::NonDiagonal: return "non-diagonal";
        case EdgeClass::Diagonal: return "diagonal";
        case EdgeClass::LayerDiagonal: return "layer-diagonal";
        case EdgeClass::LayerNonDiagonal: return "layer-non-diagonal";
    }
    return "?";
}

IntPoint int_embedding(const LatticeVertex& a) {
    return {static_cast<std::int64_t>(2) * a.u + a.v,
            static_cast<std::int64_t>(3) * a.v + (a.sub == Sublattice::B ? 2 : 0),
            static_cast<std::int64_t>(3) * a.layer};
}

std::int64_t dist4sq(const LatticeVertex& a, const LatticeVertex& b) {
    const IntPoint d = int_embedding(a) - int_embedding(b);
    return 3 * d.x * d.x + d.y * d.y + d.z * d.z;
}

Point3 cartesian(const LatticeVertex& v) {
    const IntPoint p = int_embedding(v);
    return {0.5 * kSqrt3 * static_cast<double>(p.x), 0.5 * static_cast<double>(p.y),
            0.5 * static_cast<double>(p.z)};
}

bool adjacent(const LatticeVertex& a, const LatticeVertex& b) {
    const std::int64_t q = dist4sq(a, b);
    return q > 0 && q <= 16;
}

std::array<LatticeVertex, 20> neighbors(const LatticeVertex& v) {
    const auto& table = (v.sub == Sublattice::A) ? kFromA : kFromB;
    std::array<LatticeVertex, 20> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        out[i] = LatticeVertex{v.layer + table[i].dl, v.u + table[i].du, v.v + table[i].dv,
                               table[i].sub};
    }
    return out;
}

EdgeClass classify_edge(const LatticeVertex& a, const LatticeVertex& b) {
    const std::int64_t q = dist4sq(a, b);
    if (q == 0 || q > 16) throw NotAdjacentError();
    if (a.layer == b.layer) {
        return q == 4 ? EdgeClass::NonDiagonal : EdgeClass::Diagonal;
    }
    // q = 9 is the vertical edge (same cell, same sublattice), q = 13 slants.
    return q == 9 ? EdgeClass::LayerNonDiagonal : EdgeClass::LayerDiagonal;
}

std::vector<LatticeVertex> edge_neighborhood(const LatticeVertex& a, const LatticeVertex& b) {
    if (!adjacent(a, b)) throw NotAdjacentError();
    auto na = neighbors(a);
    auto nb = neighbors(b);
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    std::vector<LatticeVertex> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

bool segments_cross(const LatticeVertex& a1, const LatticeVertex& a2,
                    const LatticeVertex& b1, const LatticeVertex& b2) {
    const IntPoint p1 = int_embedding(a1);
    const IntPoint p2 = int_embedding(a2);
    const IntPoint p3 = int_embedding(b1);
    const IntPoint p4 = int_embedding(b2);

    // Identical edge compared with itself (possibly reversed): excluded by
    // contract.
    if ((p1 == p3 && p2 == p4) || (p1 == p4 && p2 == p3)) return false;

    const Vec3 d1 = sub3(p2, p1);
    const Vec3 d2 = sub3(p4, p3);
    const Vec3 w = sub3(p3, p1);

    const Vec3 n = cross3(d1, d2);
    if (!is_zero(n)) {
        // Non-parallel: coplanar iff the connecting vector lies in the plane.
        if (dot3(w, n) != 0) return false;
        int axis = 2;
        if (n.x != 0) axis = 0;
        else if (n.y != 0) axis = 1;
        const Vec2 q1 = drop_axis(Vec3{p1.x, p1.y, p1.z}, axis);
        const Vec2 q2 = drop_axis(Vec3{p2.x, p2.y, p2.z}, axis);
        const Vec2 q3 = drop_axis(Vec3{p3.x, p3.y, p3.z}, axis);
        const Vec2 q4 = drop_axis(Vec3{p4.x, p4.y, p4.z}, axis);
        const auto orient = [](const Vec2& o, const Vec2& a, const Vec2& b) {
            return sgn(cross2(Vec2{a.x - o.x, a.y - o.y}, Vec2{b.x - o.x, b.y - o.y}));
        };
        const int o1 = orient(q1, q2, q3);
        const int o2 = orient(q1, q2, q4);
        const int o3 = orient(q3, q4, q1);
        const int o4 = orient(q3, q4, q2);
        bool meet = false;
        if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
            // Covers proper crossings and endpoint-on-interior touches.
            meet = (o1 * o2 < 0 && o3 * o4 < 0) ||
                   (o1 == 0 && o3 * o4 < 0) || (o2 == 0 && o3 * o4 < 0) ||
                   (o3 == 0 && o1 * o2 < 0) || (o4 == 0 && o1 * o2 < 0);
        }
        if (!meet) {
            // Endpoint-only touches: a zero orientation with the endpoint
            // strictly inside the other segment.
            const auto on_segment_interior = [&](const Vec2& p, const Vec2& s1, const Vec2& s2,
                                                 int orient_sign) {
                if (orient_sign != 0) return false;
                const bool within_x = (p.x > std::min(s1.x, s2.x) && p.x < std::max(s1.x, s2.x)) ||
                                      (s1.x == s2.x && p.x == s1.x);
                const bool within_y = (p.y > std::min(s1.y, s2.y) && p.y < std::max(s1.y, s2.y)) ||
                                      (s1.y == s2.y && p.y == s1.y);
                return within_x && within_y && !(p.x == s1.x && p.y == s1.y) &&
                       !(p.x == s2.x && p.y == s2.y);
            };
            meet = on_segment_interior(q3, q1, q2, o1) || on_segment_interior(q4, q1, q2, o2) ||
                   on_segment_interior(q1, q3, q4, o3) || on_segment_interior(q2, q3, q4, o4);
        }
        if (!meet) return false;
        // A meeting point that is a shared endpoint does not count.
        if (p1 == p3 || p1 == p4 || p2 == p3 || p2 == p4) {
            // With one shared endpoint and non-parallel directions the only
            // possible meet is that endpoint unless an endpoint of one edge
            // lies strictly inside the other; re-test excluding the shared
            // vertex.
            const auto strictly_inside = [&](const IntPoint& p, const IntPoint& s1,
                                             const IntPoint& s2) {
                const Vec3 a = sub3(p, s1);
                const Vec3 b = sub3(s2, s1);
                if (!is_zero(cross3(a, b))) return false;
                const I128 t = dot3(a, b);
                return t > 0 && t < dot3(b, b);
            };
            return strictly_inside(p3, p1, p2) || strictly_inside(p4, p1, p2) ||
                   strictly_inside(p1, p3, p4) || strictly_inside(p2, p3, p4);
        }
        return true;
    }

    // Parallel. Distinct lines never meet; collinear segments may overlap.
    if (!is_zero(cross3(w, d1))) return false;
    const I128 len2 = dot3(d1, d1);
    I128 t3 = dot3(sub3(p3, p1), d1);
    I128 t4 = dot3(sub3(p4, p1), d1);
    if (t3 > t4) std::swap(t3, t4);
    const I128 lo = std::max<I128>(0, t3);
    const I128 hi = std::min<I128>(len2, t4);
    if (lo > hi) return false;
    if (lo < hi) return true;  // overlap of positive length
    // Single-point overlap: it is an endpoint of both; shared endpoints do
    // not count.
    return false;
}

}  // namespace hpfold
