#include "hpfold/conformation.hpp"

#include <algorithm>
#include <json.hpp>

namespace hpfold {

using json = nlohmann::json;

std::optional<int> Conformation::residue_at(const LatticeVertex& w) const {
    const auto it = occupied_.find(w);
    if (it == occupied_.end()) return std::nullopt;
    return it->second;
}

Conformation build_conformation(HPSequence seq, std::vector<LatticeVertex> placement) {
    Conformation c;
    if (static_cast<int>(placement.size()) != seq.length()) {
        throw ConformationError(ViolationKind::LengthMismatch, -1, -1,
                                "placement has " + std::to_string(placement.size()) +
                                    " vertices for " + std::to_string(seq.length()) +
                                    " residues");
    }
    const int t = static_cast<int>(placement.size());
    for (int i = 0; i + 1 < t; ++i) {
        if (!adjacent(placement[static_cast<std::size_t>(i)],
                      placement[static_cast<std::size_t>(i + 1)])) {
            throw ConformationError(ViolationKind::NonAdjacentStep, i, i + 1,
                                    "step " + std::to_string(i) + " -> " + std::to_string(i + 1) +
                                        " is not a lattice edge");
        }
    }
    std::unordered_map<LatticeVertex, int, VertexHash> occ;
    occ.reserve(static_cast<std::size_t>(t) * 2);
    for (int i = 0; i < t; ++i) {
        const auto [it, fresh] = occ.emplace(placement[static_cast<std::size_t>(i)], i);
        if (!fresh) {
            throw ConformationError(ViolationKind::SelfIntersection, it->second, i,
                                    "residues " + std::to_string(it->second) + " and " +
                                        std::to_string(i) + " share a vertex");
        }
    }
    for (int i = 0; i + 1 < t; ++i) {
        for (int j = i + 2; j + 1 < t; ++j) {
            if (segments_cross(placement[static_cast<std::size_t>(i)],
                               placement[static_cast<std::size_t>(i + 1)],
                               placement[static_cast<std::size_t>(j)],
                               placement[static_cast<std::size_t>(j + 1)])) {
                throw ConformationError(ViolationKind::BindingCross, i, j,
                                        "binding edges " + std::to_string(i) + " and " +
                                            std::to_string(j) + " cross");
            }
        }
    }
    c.seq_ = std::move(seq);
    c.place_ = std::move(placement);
    c.occupied_ = std::move(occ);
    c.census_ = edge_census(c);
    return c;
}

long count_contacts(const Conformation& c) {
    long contacts = 0;
    const int t = c.length();
    for (int i = 0; i < t; ++i) {
        if (!c.sequence().is_h(i)) continue;
        for (const auto& w : neighbors(c.at(i))) {
            const auto j = c.residue_at(w);
            if (!j || *j <= i) continue;  // count each unordered pair once
            if (!c.sequence().is_h(*j)) continue;
            if (c.is_binding_pair(i, *j)) continue;
            ++contacts;
        }
    }
    return contacts;
}

EdgeCensus edge_census(const Conformation& c) {
    EdgeCensus out;
    const int t = c.length();
    out.binding = t >= 1 ? t - 1 : 0;
    for (int i = 0; i + 1 < t; ++i) {
        if (c.sequence().is_h(i) != c.sequence().is_h(i + 1)) ++out.alternating;
    }
    for (int i = 0; i < t; ++i) {
        if (!c.sequence().is_h(i)) continue;
        for (const auto& w : neighbors(c.at(i))) {
            const auto j = c.residue_at(w);
            if (j && c.sequence().is_h(*j)) {
                if (c.is_binding_pair(i, *j)) continue;
                if (*j > i) ++out.contacts;
            } else {
                // Other endpoint is a P or unused: this H is the edge's only
                // H endpoint, so the edge is counted exactly once here.
                if (j && c.is_binding_pair(i, *j)) continue;
                ++out.loss;
            }
        }
    }
    return out;
}

std::vector<int> contact_degrees(const Conformation& c) {
    std::vector<int> degrees;
    const int t = c.length();
    for (int i = 0; i < t; ++i) {
        if (!c.sequence().is_h(i)) continue;
        int deg = 0;
        for (const auto& w : neighbors(c.at(i))) {
            const auto j = c.residue_at(w);
            if (j && c.sequence().is_h(*j) && !c.is_binding_pair(i, *j)) ++deg;
        }
        degrees.push_back(deg);
    }
    return degrees;
}

Rational upper_bound(const HPSequence& seq) {
    return Rational(36LL * seq.n - seq.k, 2);
}

LossNeighborhoodReport check_loss_neighborhoods(const Conformation& c) {
    LossNeighborhoodReport report;
    const int t = c.length();

    // Alternating (H-P binding) edges as vertex pairs.
    std::vector<std::pair<LatticeVertex, LatticeVertex>> alternating;
    for (int i = 0; i + 1 < t; ++i) {
        if (c.sequence().is_h(i) != c.sequence().is_h(i + 1)) {
            alternating.emplace_back(c.at(i), c.at(i + 1));
        }
    }

    const auto binding_degree = [&](const LatticeVertex& v) {
        const auto idx = c.residue_at(v);
        if (!idx) return 0;
        int deg = 0;
        if (*idx > 0) ++deg;
        if (*idx + 1 < t) ++deg;
        return deg;
    };

    for (int i = 0; i < t; ++i) {
        if (!c.sequence().is_h(i)) continue;
        for (const auto& w : neighbors(c.at(i))) {
            const auto j = c.residue_at(w);
            if (j && c.sequence().is_h(*j)) continue;  // binding or contact
            if (j && c.is_binding_pair(i, *j)) continue;
            // Loss edge (c.at(i), w); i is its only H endpoint, so each loss
            // edge is visited exactly once.
            ++report.loss_edges;
            const auto hood = edge_neighborhood(c.at(i), w);
            int alt_inside = 0;
            for (const auto& [a, b] : alternating) {
                const bool a_in = std::binary_search(hood.begin(), hood.end(), a);
                const bool b_in = std::binary_search(hood.begin(), hood.end(), b);
                if (a_in && b_in) ++alt_inside;
            }
            report.max_alternating_in_neighborhood =
                std::max(report.max_alternating_in_neighborhood, alt_inside);
            if (alt_inside > 4) ++report.violations;
            report.max_binding_at_endpoints = std::max(
                report.max_binding_at_endpoints, binding_degree(c.at(i)) + binding_degree(w));
        }
    }
    return report;
}

std::string serialize_conformation(const Conformation& c) {
    json doc;
    doc["format_version"] = 1;
    doc["sequence"] = c.sequence().residues;
    json residues = json::array();
    for (int i = 0; i < c.length(); ++i) {
        const auto& v = c.at(i);
        residues.push_back({{"index", i},
                            {"residue", std::string(1, c.sequence().residues[static_cast<std::size_t>(i)])},
                            {"layer", v.layer},
                            {"u", v.u},
                            {"v", v.v},
                            {"sublattice", v.sub == Sublattice::A ? "A" : "B"}});
    }
    doc["residues"] = std::move(residues);
    const auto& census = c.census();
    doc["census"] = {{"binding", census.binding},
                     {"contacts", census.contacts},
                     {"alternating", census.alternating},
                     {"loss", census.loss}};
    const Rational ub = upper_bound(c.sequence());
    doc["bounds"] = {{"n", c.sequence().n},
                     {"k", c.sequence().k},
                     {"upper_bound_num", ub.num},
                     {"upper_bound_den", ub.den}};
    return doc.dump(2) + "\n";
}

ParsedDocument parse_conformation_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentError(std::string("not a valid conformation document: ") + e.what());
    }
    try {
        if (doc.at("format_version").get<int>() != 1) {
            throw DocumentError("unsupported format_version");
        }
        ParsedDocument out;
        out.seq = parse_hp(doc.at("sequence").get<std::string>());
        const auto& residues = doc.at("residues");
        out.placement.reserve(residues.size());
        int expect = 0;
        for (const auto& r : residues) {
            if (r.at("index").get<int>() != expect++) {
                throw DocumentError("residue indices are not consecutive from 0");
            }
            LatticeVertex v;
            v.layer = r.at("layer").get<int>();
            v.u = r.at("u").get<int>();
            v.v = r.at("v").get<int>();
            const std::string sub = r.at("sublattice").get<std::string>();
            if (sub != "A" && sub != "B") throw DocumentError("sublattice must be A or B");
            v.sub = sub == "A" ? Sublattice::A : Sublattice::B;
            out.placement.push_back(v);
        }
        const auto& census = doc.at("census");
        out.stored_census.binding = census.at("binding").get<long>();
        out.stored_census.contacts = census.at("contacts").get<long>();
        out.stored_census.alternating = census.at("alternating").get<long>();
        out.stored_census.loss = census.at("loss").get<long>();
        return out;
    } catch (const json::exception& e) {
        throw DocumentError(std::string("malformed conformation document: ") + e.what());
    }
}

}  // namespace hpfold
