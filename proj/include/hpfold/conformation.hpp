#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hpfold/lattice.hpp"
#include "hpfold/rational.hpp"
#include "hpfold/sequence.hpp"

namespace hpfold {

// Edge bookkeeping of a validated conformation.
//
// binding     walk edges (consecutive residues)
// contacts    non-binding lattice edges with two H endpoints, counted once
//             per unordered edge
// alternating binding edges joining an H and a P
// loss        non-binding lattice edges incident to at least one placed H
//             that are not contacts, counted once per unordered edge
//
// The analysis layer compares against bounds that count contact incidences
// per H (each contact edge has two H endpoints), i.e. 2 * contacts.
struct EdgeCensus {
    long binding = 0;
    long contacts = 0;
    long alternating = 0;
    long loss = 0;
};

enum class ViolationKind { LengthMismatch, SelfIntersection, NonAdjacentStep, BindingCross };

struct ConformationError : std::runtime_error {
    ViolationKind kind;
    int i = -1;
    int j = -1;
    ConformationError(ViolationKind k, int i_, int j_, const std::string& what)
        : std::runtime_error(what), kind(k), i(i_), j(j_) {}
};

class Conformation {
  public:
    const HPSequence& sequence() const { return seq_; }
    const std::vector<LatticeVertex>& placement() const { return place_; }
    const EdgeCensus& census() const { return census_; }

    const LatticeVertex& at(int i) const { return place_[static_cast<std::size_t>(i)]; }
    int length() const { return static_cast<int>(place_.size()); }

    // Index of the residue at vertex w, or nullopt if the vertex is unused.
    std::optional<int> residue_at(const LatticeVertex& w) const;

    bool is_binding_pair(int i, int j) const { return i - j == 1 || j - i == 1; }

  private:
    friend Conformation build_conformation(HPSequence seq, std::vector<LatticeVertex> placement);

    HPSequence seq_;
    std::vector<LatticeVertex> place_;
    std::unordered_map<LatticeVertex, int, VertexHash> occupied_;
    EdgeCensus census_;
};

// Validates length -> step adjacency -> self-avoidance -> binding crossings,
// in that order, and returns the conformation with its census populated.
// Throws ConformationError identifying the first violated rule.
Conformation build_conformation(HPSequence seq, std::vector<LatticeVertex> placement);

// Number of contact edges (unordered). Recounts from scratch; equals
// census().contacts for a validated conformation.
long count_contacts(const Conformation& c);

EdgeCensus edge_census(const Conformation& c);

// Per-H contact degrees (only placed H residues, in residue order).
std::vector<int> contact_degrees(const Conformation& c);

// Exact 18n - k/2.
Rational upper_bound(const HPSequence& seq);

struct LossNeighborhoodReport {
    long loss_edges = 0;
    // Max alternating edges with both endpoints inside N(e) over all loss
    // edges e.
    int max_alternating_in_neighborhood = 0;
    // The proof-side quantity: max binding edges incident to a loss edge's
    // endpoints.
    int max_binding_at_endpoints = 0;
    long violations = 0;  // loss edges with > 4 alternating edges in N(e)
};

LossNeighborhoodReport check_loss_neighborhoods(const Conformation& c);

// --- conformation document (structured text form used by the CLI) ---

std::string serialize_conformation(const Conformation& c);

struct DocumentError : std::runtime_error {
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

struct ParsedDocument {
    HPSequence seq;
    std::vector<LatticeVertex> placement;
    EdgeCensus stored_census;
};

ParsedDocument parse_conformation_document(const std::string& text);

}  // namespace hpfold
