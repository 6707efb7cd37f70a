#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hpfold {

// Layered honeycomb lattice with in-layer diagonals and inter-layer edges.
//
// A vertex lives on one honeycomb sheet ("layer"); within a sheet it is
// addressed by a unit cell (u, v) and a sublattice tag (A or B). Sheets are
// stacked vertically at spacing 1.5 with in-layer edge length 1, so the
// Euclidean ball of radius 2 around a vertex contains exactly 20 other
// vertices: 3 at distance 1, 6 at distance sqrt(3) and 3 at distance 2 in
// the same sheet, plus 4 in each adjacent sheet (1 vertical + 3 slanted).
//
// All geometry is done on scaled integer coordinates
//     X = 2u + v,  Y = 3v + 2*[sub == B],  Z = 3*layer,
// where the true position is (sqrt(3)/2 * X, Y/2, Z/2). Squared distance is
// (3*X^2 + Y^2 + Z^2)/4, so adjacency, edge classes and segment crossings
// are all decided in exact integer arithmetic.

enum class Sublattice : std::uint8_t { A = 0, B = 1 };

struct LatticeVertex {
    int layer = 0;
    int u = 0;
    int v = 0;
    Sublattice sub = Sublattice::A;

    friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
    friend auto operator<=>(const LatticeVertex&, const LatticeVertex&) = default;
};

struct VertexHash {
    std::size_t operator()(const LatticeVertex& a) const {
        std::uint64_t h = static_cast<std::uint32_t>(a.layer);
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(a.u);
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(a.v);
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(a.sub);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

enum class EdgeClass : std::uint8_t {
    NonDiagonal,       // same layer, distance 1
    Diagonal,          // same layer, distance sqrt(3) or 2
    LayerDiagonal,     // adjacent layers, slanted (above/below a unit neighbor)
    LayerNonDiagonal,  // adjacent layers, vertically aligned
};

const char* edge_class_name(EdgeClass c);

struct Point3 {
    double x = 0;
    double y = 0;
    double z = 0;
};

// Scaled integer embedding; the exact backbone of every geometric predicate.
struct IntPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend bool operator==(const IntPoint&, const IntPoint&) = default;
    friend IntPoint operator-(const IntPoint& a, const IntPoint& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
};

IntPoint int_embedding(const LatticeVertex& v);

// 4 * squared Euclidean distance, exact.
std::int64_t dist4sq(const LatticeVertex& a, const LatticeVertex& b);

Point3 cartesian(const LatticeVertex& v);

bool adjacent(const LatticeVertex& a, const LatticeVertex& b);

// The 20 neighbors, in a fixed deterministic order (units, in-layer
// diagonals, upper layer, lower layer).
std::array<LatticeVertex, 20> neighbors(const LatticeVertex& v);

struct NotAdjacentError : std::invalid_argument {
    NotAdjacentError() : std::invalid_argument("vertices are not lattice-adjacent") {}
};

EdgeClass classify_edge(const LatticeVertex& a, const LatticeVertex& b);

// N(e): common neighbors of the two endpoints, sorted.
std::vector<LatticeVertex> edge_neighborhood(const LatticeVertex& a, const LatticeVertex& b);

// True iff the closed segments meet at a point that is not a shared endpoint
// of the two edges. Exact; non-coplanar segments never cross. Identical
// edges (same endpoint set) report false; callers never compare an edge
// with itself.
bool segments_cross(const LatticeVertex& a1, const LatticeVertex& a2,
                    const LatticeVertex& b1, const LatticeVertex& b2);

}  // namespace hpfold
