#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spingauge/ising.hpp"
#include "spingauge/topology.hpp"

// Minor embedding: each logical variable is represented by a chain of
// physical qubits held together by a ferromagnetic coupling. Only the
// deterministic complete-graph layout is generated here; arbitrary
// embeddings can be supplied by the caller and are validated the same way.
//
// Splitting rules for embed_problem:
//   - h_i is divided evenly over the qubits of chain(i),
//   - J_ij is divided evenly over all physical edges between chain(i) and
//     chain(j),
//   - every physical edge inside a chain gets coupling -chain_strength,
//   - the offset is carried through unchanged.
// For a chain-consistent ("unbroken") physical state the physical energy
// equals the logical energy minus chain_strength times the number of
// intra-chain edges.

namespace spingauge {

struct Embedding {
    std::map<int, std::vector<int>> chains;  // logical index -> physical qubits

    bool operator==(const Embedding&) const = default;
};

struct ChainStats {
    double break_fraction = 0.0;  // broken-chain observations / (chains * reads)
    int max_chain_length = 0;
};

// Checks chain nonemptiness, disjointness, connectivity within t, and that
// every logical edge in `logical_edges` has at least one physical edge
// between the two chains. Returns human-readable problems; empty means valid.
inline std::vector<std::string> validate_embedding(const Embedding& e, int num_logical,
                                                   const std::vector<std::pair<int, int>>& logical_edges,
                                                   const Topology& t) {
    std::vector<std::string> issues;
    std::set<int> used;
    for (int v = 0; v < num_logical; ++v) {
        auto it = e.chains.find(v);
        if (it == e.chains.end() || it->second.empty()) {
            issues.push_back("variable " + std::to_string(v) + " has no chain");
            continue;
        }
        for (int q : it->second) {
            if (q < 0 || q >= t.num_qubits) {
                issues.push_back("chain of " + std::to_string(v) + " uses qubit " + std::to_string(q) +
                                 " outside the topology");
            } else if (!used.insert(q).second) {
                issues.push_back("qubit " + std::to_string(q) + " appears in more than one chain");
            }
        }
        // connectivity of the induced subgraph, by flood fill
        const auto& chain = it->second;
        std::set<int> members(chain.begin(), chain.end());
        std::set<int> seen{chain.front()};
        std::vector<int> stack{chain.front()};
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int nb : members)
                if (!seen.count(nb) && t.has_edge(q, nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
        }
        if (seen.size() != members.size())
            issues.push_back("chain of " + std::to_string(v) + " is not connected");
    }
    for (auto [a, b] : logical_edges) {
        auto ia = e.chains.find(a);
        auto ib = e.chains.find(b);
        if (ia == e.chains.end() || ib == e.chains.end()) continue;  // reported above
        bool coupled = false;
        for (int qa : ia->second) {
            for (int qb : ib->second)
                if (t.has_edge(qa, qb)) {
                    coupled = true;
                    break;
                }
            if (coupled) break;
        }
        if (!coupled)
            issues.push_back("no physical edge between chains of " + std::to_string(a) + " and " +
                             std::to_string(b));
    }
    return issues;
}

// Triangle layout for the complete graph K_k on a Chimera topology. Logical
// variable 4*band + pos occupies the side-1 qubits at `pos` in column `band`
// for rows 0..band, plus the side-0 qubits at `pos` in row `band` for
// columns band..req-1, where req = ceil(k/4). Every chain is a path of
// req + 1 qubits; chains of different variables always meet inside a cell.
inline Embedding embed_complete(int k, const Topology& t) {
    if (k < 1) throw std::invalid_argument("need at least one logical variable");
    const int m = chimera_grid_size(t.num_qubits);
    if (m == 0) throw std::invalid_argument("complete-graph layout requires a Chimera topology");
    Embedding e;
    if (k == 1) {
        e.chains[0] = {chimera_index(m, 0, 0, 0, 0)};
        return e;
    }
    const int req = (k + 3) / 4;
    if (req > m)
        throw std::invalid_argument("K" + std::to_string(k) + " needs a chimera grid of at least " +
                                    std::to_string(req));
    for (int v = 0; v < k; ++v) {
        const int band = v / 4;
        const int pos = v % 4;
        std::vector<int> chain;
        for (int r = 0; r <= band; ++r) chain.push_back(chimera_index(m, r, band, 1, pos));
        for (int c = band; c < req; ++c) chain.push_back(chimera_index(m, band, c, 0, pos));
        e.chains[v] = std::move(chain);
    }
    return e;
}

inline IsingProblem embed_problem(const IsingProblem& logical, const Embedding& e, const Topology& t,
                                  double chain_strength) {
    if (!(chain_strength > 0.0)) throw std::invalid_argument("chain_strength must be positive");
    std::vector<std::pair<int, int>> logical_edges;
    logical_edges.reserve(logical.J.size());
    for (const auto& [ij, v] : logical.J) {
        (void)v;
        logical_edges.push_back(ij);
    }
    auto issues = validate_embedding(e, logical.n, logical_edges, t);
    if (!issues.empty()) throw std::invalid_argument("invalid embedding: " + issues.front());

    IsingProblem phys(t.num_qubits);
    phys.offset = logical.offset;
    for (const auto& [i, hv] : logical.h) {
        const auto& chain = e.chains.at(i);
        const double share = hv / static_cast<double>(chain.size());
        for (int q : chain) phys.set_field(q, phys.field(q) + share);
    }
    for (const auto& [ij, jv] : logical.J) {
        const auto& ca = e.chains.at(ij.first);
        const auto& cb = e.chains.at(ij.second);
        std::vector<std::pair<int, int>> avail;
        for (int qa : ca)
            for (int qb : cb)
                if (t.has_edge(qa, qb)) avail.push_back({qa, qb});
        const double share = jv / static_cast<double>(avail.size());
        for (auto [qa, qb] : avail) phys.set_coupling(qa, qb, phys.coupling(qa, qb) + share);
    }
    for (const auto& [v, chain] : e.chains) {
        (void)v;
        for (std::size_t a = 0; a < chain.size(); ++a)
            for (std::size_t b = a + 1; b < chain.size(); ++b)
                if (t.has_edge(chain[a], chain[b])) phys.set_coupling(chain[a], chain[b], -chain_strength);
    }
    return phys;
}

// Common heuristic default: twice the largest coefficient magnitude of the
// logical problem (at least 1 for an all-zero problem).
inline double default_chain_strength(const IsingProblem& logical) {
    double mx = 0.0;
    for (const auto& [i, v] : logical.h) { (void)i; mx = std::max(mx, std::abs(v)); }
    for (const auto& [ij, v] : logical.J) { (void)ij; mx = std::max(mx, std::abs(v)); }
    return mx > 0.0 ? 2.0 * mx : 1.0;
}

// Majority vote over each chain; a tie is resolved by the spin of the
// lowest-indexed physical qubit in the chain. Any disagreement inside a
// chain counts as one broken observation per read carrying it.
inline std::pair<SampleSet, ChainStats> unembed(const SampleSet& physical, const Embedding& e,
                                                const IsingProblem& logical) {
    ChainStats stats;
    for (const auto& [v, chain] : e.chains) {
        if (v < 0 || v >= logical.n) throw std::invalid_argument("chain for unknown logical variable");
        if (chain.empty()) throw std::invalid_argument("empty chain");
        stats.max_chain_length = std::max(stats.max_chain_length, static_cast<int>(chain.size()));
    }
    for (int v = 0; v < logical.n; ++v)
        if (!e.chains.count(v)) throw std::invalid_argument("missing chain for logical variable " + std::to_string(v));

    SampleSet out;
    out.samples.reserve(physical.samples.size());
    std::uint64_t broken = 0;
    std::uint64_t reads = 0;
    for (const auto& smp : physical.samples) {
        Sample dec;
        dec.s.resize(static_cast<std::size_t>(logical.n));
        dec.occurrences = smp.occurrences;
        reads += smp.occurrences;
        for (const auto& [v, chain] : e.chains) {
            int vote = 0;
            int lowest = chain.front();
            for (int q : chain) {
                if (q >= static_cast<int>(smp.s.size()))
                    throw std::invalid_argument("physical sample shorter than embedding target");
                vote += smp.s[static_cast<std::size_t>(q)];
                lowest = std::min(lowest, q);
            }
            const bool unanimous = std::abs(vote) == static_cast<int>(chain.size());
            if (!unanimous) broken += smp.occurrences;
            Spin value;
            if (vote > 0) value = 1;
            else if (vote < 0) value = -1;
            else value = smp.s[static_cast<std::size_t>(lowest)];
            dec.s[static_cast<std::size_t>(v)] = value;
        }
        dec.energy = energy(logical, dec.s);
        out.samples.push_back(std::move(dec));
    }
    const std::uint64_t denom = static_cast<std::uint64_t>(e.chains.size()) * reads;
    stats.break_fraction = denom == 0 ? 0.0 : static_cast<double>(broken) / static_cast<double>(denom);
    return {std::move(out), stats};
}

}  // namespace spingauge
