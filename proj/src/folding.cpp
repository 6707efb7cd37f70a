#include "hpfold/folding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <unordered_set>

namespace hpfold {

namespace {

using VertexSet = std::unordered_set<LatticeVertex, VertexHash>;
using Edge = std::pair<LatticeVertex, LatticeVertex>;

double true_distance(const LatticeVertex& a, const LatticeVertex& b) {
    return 0.5 * std::sqrt(static_cast<double>(dist4sq(a, b)));
}

bool edge_crosses_any(const LatticeVertex& a, const LatticeVertex& b,
                      const std::vector<Edge>& edges) {
    for (const auto& [c, d] : edges) {
        if (segments_cross(a, b, c, d)) return true;
    }
    return false;
}

// Exact-length self-avoiding detour. Finds vertices p_0..p_{len-1} with
// p_0 adjacent to `from` (when set), p_{len-1} adjacent to `to` (when set),
// every vertex free, and no new binding edge crossing an existing one.
// Neighbor order is fixed, so the result is deterministic.
class DetourRouter {
  public:
    DetourRouter(const VertexSet& occupied, const std::vector<Edge>& edges)
        : occupied_(occupied), edges_(edges) {}

    std::optional<std::vector<LatticeVertex>> route(const std::optional<LatticeVertex>& from,
                                                    const std::optional<LatticeVertex>& to,
                                                    int len) {
        path_.clear();
        used_.clear();
        own_edges_.clear();
        to_ = to;
        nodes_ = 0;
        if (len <= 0) return std::vector<LatticeVertex>{};
        std::vector<LatticeVertex> starts;
        if (from) {
            for (const auto& w : neighbors(*from)) starts.push_back(w);
        } else if (to) {
            // No start anchor: grow backward from the target side instead.
            auto rev = route(to, std::nullopt, len);
            if (!rev) return std::nullopt;
            std::reverse(rev->begin(), rev->end());
            return rev;
        } else {
            return std::nullopt;
        }
        order_candidates(starts, len - 1);
        for (const auto& s : starts) {
            if (!usable(s)) continue;
            if (from && edge_crosses_any(*from, s, edges_)) continue;
            if (extend(s, len - 1, from)) {
                auto out = path_;
                return out;
            }
        }
        return std::nullopt;
    }

  private:
    bool usable(const LatticeVertex& v) const {
        return !occupied_.contains(v) && !used_.contains(v);
    }

    // Prefer uncrowded vertices so detours spread into open space instead of
    // consuming the few cells that later detours will need; among equally
    // crowded options, track a distance-to-target profile matching the
    // remaining budget.
    void order_candidates(std::vector<LatticeVertex>& cand, int rem) const {
        const double want = 1.0 + static_cast<double>(rem);
        std::vector<std::pair<double, int>> keys(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            int crowd = 0;
            for (const auto& w : neighbors(cand[i])) {
                if (occupied_.contains(w) || used_.contains(w)) ++crowd;
            }
            const double profile =
                to_ ? std::abs(true_distance(cand[i], *to_) - want) : 0.0;
            keys[i] = {crowd * 64.0 + profile, static_cast<int>(i)};
        }
        std::stable_sort(keys.begin(), keys.end());
        std::vector<LatticeVertex> out(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            out[i] = cand[static_cast<std::size_t>(keys[i].second)];
        }
        cand = std::move(out);
    }

    bool reachable(const LatticeVertex& v, int rem) const {
        if (!to_) return true;
        return true_distance(v, *to_) <= 2.0 * rem + 2.0 + 1e-9;
    }

    bool extend(const LatticeVertex& v, int rem, const std::optional<LatticeVertex>& prev) {
        if (++nodes_ > kNodeCap) {
            throw RoutingError("detour search exceeded its node cap");
        }
        if (!reachable(v, rem)) return false;
        if (rem == 0 && to_) {
            if (!adjacent(v, *to_)) return false;
            if (edge_crosses_any(v, *to_, edges_) || edge_crosses_any(v, *to_, own_edges_)) {
                return false;
            }
        }
        path_.push_back(v);
        used_.insert(v);
        if (prev) own_edges_.emplace_back(*prev, v);
        if (rem == 0) {
            if (prev) own_edges_.pop_back();
            return true;  // caller pops nothing; path_ holds the result
        }
        std::vector<LatticeVertex> cand;
        for (const auto& w : neighbors(v)) cand.push_back(w);
        order_candidates(cand, rem - 1);
        for (const auto& w : cand) {
            if (!usable(w)) continue;
            if (edge_crosses_any(v, w, edges_) || edge_crosses_any(v, w, own_edges_)) continue;
            if (extend(w, rem - 1, v)) {
                if (prev) own_edges_.pop_back();
                return true;
            }
        }
        if (prev) own_edges_.pop_back();
        used_.erase(v);
        path_.pop_back();
        return false;
    }

    static constexpr std::int64_t kNodeCap = 4'000'000;

    const VertexSet& occupied_;
    const std::vector<Edge>& edges_;
    std::vector<Edge> own_edges_;
    std::vector<LatticeVertex> path_;
    VertexSet used_;
    std::optional<LatticeVertex> to_;
    std::int64_t nodes_ = 0;
};

// Assembles the full walk given the core placement of every H, routing each
// P-run through free space. Detours are routed shortest-first (short runs
// have the fewest legal placements); when a run still finds its cells
// consumed by an earlier detour, the assembly restarts with that run routed
// first. The schedule is deterministic and stops when promoting no longer
// helps.
Conformation assemble_walk(const HPSequence& seq, const std::vector<LatticeVertex>& h_core) {
    std::vector<Run> base_order = seq.p_runs;
    std::stable_sort(base_order.begin(), base_order.end(), [](const Run& a, const Run& b) {
        return a.length != b.length ? a.length < b.length : a.start < b.start;
    });

    std::vector<Edge> core_edges;
    {
        int h_idx = 0;
        for (int i = 0; i + 1 < seq.length(); ++i) {
            const bool h0 = seq.is_h(i);
            const bool h1 = seq.is_h(i + 1);
            if (h0 && h1) {
                core_edges.emplace_back(h_core[static_cast<std::size_t>(h_idx)],
                                        h_core[static_cast<std::size_t>(h_idx + 1)]);
            }
            if (h0) ++h_idx;
        }
    }

    std::vector<int> promoted;  // positions of runs that must route first
    const int max_attempts = 2 * static_cast<int>(seq.p_runs.size()) + 2;

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        VertexSet occupied;
        for (const auto& v : h_core) occupied.insert(v);
        std::vector<Edge> binding_edges = core_edges;

        std::vector<LatticeVertex> placement(static_cast<std::size_t>(seq.length()));
        {
            int h_idx = 0;
            for (int i = 0; i < seq.length(); ++i) {
                if (seq.is_h(i)) {
                    placement[static_cast<std::size_t>(i)] =
                        h_core[static_cast<std::size_t>(h_idx++)];
                }
            }
        }

        std::vector<Run> order;
        for (const int start : promoted) {
            for (const auto& run : base_order) {
                if (run.start == start) order.push_back(run);
            }
        }
        for (const auto& run : base_order) {
            if (std::find(promoted.begin(), promoted.end(), run.start) == promoted.end()) {
                order.push_back(run);
            }
        }

        int failed_at = -1;
        for (const auto& run : order) {
            const int before = run.start - 1;
            const int after = run.start + run.length;
            std::optional<LatticeVertex> from, to;
            if (before >= 0) from = placement[static_cast<std::size_t>(before)];
            if (after < seq.length()) to = placement[static_cast<std::size_t>(after)];
            DetourRouter router(occupied, binding_edges);
            auto path = router.route(from, to, run.length);
            if (!path) {
                failed_at = run.start;
                break;
            }
            for (int off = 0; off < run.length; ++off) {
                const auto& v = (*path)[static_cast<std::size_t>(off)];
                placement[static_cast<std::size_t>(run.start + off)] = v;
                occupied.insert(v);
            }
            std::optional<LatticeVertex> prev = from;
            for (const auto& v : *path) {
                if (prev) binding_edges.emplace_back(*prev, v);
                prev = v;
            }
            if (to) binding_edges.emplace_back(*prev, *to);
        }

        if (failed_at < 0) return build_conformation(seq, std::move(placement));
        if (!promoted.empty() && promoted.front() == failed_at) {
            break;  // promoting cannot help any further
        }
        std::erase(promoted, failed_at);
        promoted.insert(promoted.begin(), failed_at);
    }
    throw RoutingError("no legal detour arrangement for the P-runs of this string");
}

// The six ring slots of the helix hexagon, in walk order.
constexpr std::array<std::array<int, 3>, 6> kRingSlots = {{
    {0, 0, 0},  // A(0,0)
    {0, 0, 1},  // B(0,0)
    {0, 1, 0},  // A(0,1)
    {1, 0, 1},  // B(1,0)
    {1, 0, 0},  // A(1,0)
    {1, -1, 1},  // B(1,-1)
}};

LatticeVertex ring_vertex(int layer, int slot) {
    const auto& [u, v, sub] = kRingSlots[static_cast<std::size_t>(slot)];
    return LatticeVertex{layer, u, v, sub == 0 ? Sublattice::A : Sublattice::B};
}

// Serpentine patch cells for r chains of s, in "downward" walk order: row
// r-1 first, row 0 last, ending at (row 0, col 0), rows connected by
// same-column steps. Row j: col c even -> A(c/2, -j); c odd -> B((c+1)/2,
// -j-1).
std::vector<LatticeVertex> serpentine_down(int rows, int cols, int layer) {
    std::vector<LatticeVertex> cells;
    cells.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    const auto cell = [&](int row, int col) {
        if (col % 2 == 0) {
            return LatticeVertex{layer, col / 2, -row, Sublattice::A};
        }
        return LatticeVertex{layer, (col + 1) / 2, -row - 1, Sublattice::B};
    };
    for (int j = rows - 1; j >= 0; --j) {
        // Row 0 runs right-to-left so the walk ends at (0, 0); parity
        // alternates upward from there.
        const bool right_to_left = (j % 2 == 0);
        if (right_to_left) {
            for (int c = cols - 1; c >= 0; --c) cells.push_back(cell(j, c));
        } else {
            for (int c = 0; c < cols; ++c) cells.push_back(cell(j, c));
        }
    }
    return cells;
}

}  // namespace

std::pair<int, int> chain_factorization(int m1) {
    if (m1 < 1) throw DomainError("chain_factorization requires m1 >= 1");
    int best_r = 1;
    for (int i = 1; static_cast<long>(i) * i <= m1; ++i) {
        if (m1 % i == 0) best_r = i;
    }
    int r = best_r;
    int s = m1 / best_r;
    if (r == 1 && m1 > 3) {
        r = static_cast<int>(std::floor(std::sqrt(static_cast<double>(m1))));
        while (r > 1 && static_cast<long>(r) * r > m1) --r;
        s = (m1 + r - 1) / r;  // last chain runs short
    }
    return {r, s};
}

Conformation helix_arrangement(const HPSequence& seq) {
    if (seq.n < 1) throw DomainError("helix_arrangement requires at least one H");
    std::vector<LatticeVertex> core;
    core.reserve(static_cast<std::size_t>(seq.n));
    for (int j = 0; j < seq.n; ++j) {
        core.push_back(ring_vertex(j / 6, j % 6));
    }
    return assemble_walk(seq, core);
}

Conformation layer_arrangement(const HPSequence& seq) {
    if (seq.n < 2) throw DomainError("layer_arrangement requires at least two H's");
    const int m1 = seq.n / 2;
    const int m2 = seq.n - m1;
    const auto [r1, s1] = chain_factorization(m1);
    const auto [r2, s2] = chain_factorization(m2);

    // Upper layer (prefix): downward serpentine ending at A(0,0) on layer 1;
    // with a short last chain the unused cells are trimmed from the front.
    const auto upper_full = serpentine_down(r1, s1, 1);
    std::vector<LatticeVertex> core(upper_full.end() - m1, upper_full.end());

    // Lower layer (suffix): the reverse serpentine starting at A(0,0) on
    // layer 0, directly below the upper walk's end.
    auto lower_full = serpentine_down(r2, s2, 0);
    std::reverse(lower_full.begin(), lower_full.end());
    core.insert(core.end(), lower_full.begin(), lower_full.begin() + m2);

    return assemble_walk(seq, core);
}

namespace {

class BruteForceSearch {
  public:
    BruteForceSearch(const HPSequence& seq, std::int64_t budget, bool use_symmetry)
        : seq_(seq), budget_(budget), use_symmetry_(use_symmetry), t_(seq.length()) {}

    BruteForceResult run() {
        place_.assign(static_cast<std::size_t>(t_), LatticeVertex{});
        occupied_.clear();
        best_contacts_ = -1;
        nodes_ = 0;
        aborted_ = false;

        put(0, LatticeVertex{0, 0, 0, Sublattice::A});
        descend(1, 0);
        lift(0);

        BruteForceResult out;
        out.max_contacts = std::max(best_contacts_, 0L);
        out.exhausted = !aborted_;
        out.nodes = nodes_;
        if (best_contacts_ >= 0) out.best = build_conformation(seq_, best_place_);
        return out;
    }

  private:
    void descend(int i, long contacts) {
        if (i == t_) {
            if (contacts > best_contacts_ ||
                (contacts == best_contacts_ && place_ < best_place_)) {
                best_contacts_ = contacts;
                best_place_ = place_;
            }
            return;
        }
        if (aborted_) return;

        const LatticeVertex& prev = place_[static_cast<std::size_t>(i - 1)];
        if (i == 1 && use_symmetry_) {
            // One representative per symmetry orbit of the 20 neighbors:
            // unit, short diagonal, long diagonal, vertical, slanted.
            const std::array<LatticeVertex, 5> reps = {{
                {0, 0, 0, Sublattice::B},
                {0, 1, 0, Sublattice::A},
                {0, 1, 0, Sublattice::B},
                {1, 0, 0, Sublattice::A},
                {1, 0, 0, Sublattice::B},
            }};
            for (const auto& w : reps) try_vertex(i, w, contacts);
            return;
        }
        for (const auto& w : neighbors(prev)) try_vertex(i, w, contacts);
    }

    void try_vertex(int i, const LatticeVertex& w, long contacts) {
        if (aborted_) return;
        if (occupied_.contains(w)) return;
        const LatticeVertex& prev = place_[static_cast<std::size_t>(i - 1)];
        // The edge sharing the endpoint prev cannot overlap the new edge on
        // this lattice, so start the crossing scan one edge earlier.
        for (int j = 0; j <= i - 3; ++j) {
            if (segments_cross(prev, w, place_[static_cast<std::size_t>(j)],
                               place_[static_cast<std::size_t>(j + 1)])) {
                return;
            }
        }
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        long gained = 0;
        if (seq_.is_h(i)) {
            for (const auto& nb : neighbors(w)) {
                const auto it = occupied_.find(nb);
                if (it == occupied_.end()) continue;
                const int j = it->second;
                if (j <= i - 2 && seq_.is_h(j)) ++gained;
            }
        }
        put(i, w);
        descend(i + 1, contacts + gained);
        lift(i);
    }

    void put(int i, const LatticeVertex& w) {
        place_[static_cast<std::size_t>(i)] = w;
        occupied_.emplace(w, i);
    }
    void lift(int i) { occupied_.erase(place_[static_cast<std::size_t>(i)]); }

    const HPSequence& seq_;
    const std::int64_t budget_;
    const bool use_symmetry_;
    const int t_;

    std::vector<LatticeVertex> place_;
    std::vector<LatticeVertex> best_place_;
    std::unordered_map<LatticeVertex, int, VertexHash> occupied_;
    long best_contacts_ = -1;
    std::int64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

BruteForceResult brute_force_max(const HPSequence& seq, std::int64_t budget, bool use_symmetry) {
    if (seq.length() < 1) throw DomainError("brute_force_max requires a non-empty string");
    if (budget <= 0) throw DomainError("brute_force_max requires a positive budget");
    if (seq.length() == 1) {
        BruteForceResult out;
        out.best = build_conformation(seq, {LatticeVertex{0, 0, 0, Sublattice::A}});
        out.max_contacts = 0;
        out.exhausted = true;
        out.nodes = 1;
        return out;
    }
    BruteForceSearch search(seq, budget, use_symmetry);
    return search.run();
}

}  // namespace hpfold
