#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spingauge/ising.hpp"

// Hardware connectivity graphs. The main constructor builds an ideal
// (defect-free) Chimera C_m: an m x m grid of K_{4,4} unit cells.
//
// Qubit indexing is cell-major, row-major, side-then-position:
//
//   index(r, c, side, pos) = 8*(r*m + c) + 4*side + pos
//
// with r, c in [0, m), side in {0, 1} and pos in [0, 4). Side-0 qubits of a
// cell couple to the side-0 qubits at the same position in the horizontally
// adjacent cells; side-1 qubits couple vertically. Within a cell every
// side-0 qubit couples to every side-1 qubit (16 intra-cell edges).
//
// This indexing is fixed so that embeddings and test fixtures are stable.

namespace spingauge {

struct Topology {
    int num_qubits = 0;
    std::set<std::pair<int, int>> edges;  // normalized i < j
    std::string label;

    bool has_edge(int i, int j) const {
        if (i == j) return false;
        return edges.count(i < j ? std::pair{i, j} : std::pair{j, i}) > 0;
    }

    int degree(int i) const {
        if (i < 0 || i >= num_qubits) throw std::out_of_range("qubit index out of range");
        int d = 0;
        for (const auto& [a, b] : edges)
            if (a == i || b == i) ++d;
        return d;
    }

    std::vector<int> neighbors(int i) const {
        if (i < 0 || i >= num_qubits) throw std::out_of_range("qubit index out of range");
        std::vector<int> out;
        for (const auto& [a, b] : edges) {
            if (a == i) out.push_back(b);
            else if (b == i) out.push_back(a);
        }
        return out;
    }

    bool operator==(const Topology&) const = default;
};

inline Topology make_topology(int num_qubits, const std::vector<std::pair<int, int>>& edge_list,
                              std::string label = "custom") {
    if (num_qubits < 0) throw std::invalid_argument("negative qubit count");
    Topology t;
    t.num_qubits = num_qubits;
    t.label = std::move(label);
    for (auto [i, j] : edge_list) {
        if (i == j) throw std::invalid_argument("self-loop in edge list");
        if (i < 0 || j < 0 || i >= num_qubits || j >= num_qubits)
            throw std::invalid_argument("edge index out of range");
        t.edges.insert(i < j ? std::pair{i, j} : std::pair{j, i});
    }
    return t;
}

inline int chimera_index(int m, int r, int c, int side, int pos) {
    return 8 * (r * m + c) + 4 * side + pos;
}

inline Topology chimera(int m) {
    if (m < 1) throw std::invalid_argument("chimera grid size must be >= 1");
    Topology t;
    t.num_qubits = 8 * m * m;
    t.label = "chimera-" + std::to_string(m);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            for (int p = 0; p < 4; ++p) {
                // intra-cell K_{4,4}
                for (int q = 0; q < 4; ++q)
                    t.edges.insert({chimera_index(m, r, c, 0, p), chimera_index(m, r, c, 1, q)});
                // side 0 couples to the next column, side 1 to the next row
                if (c + 1 < m)
                    t.edges.insert({chimera_index(m, r, c, 0, p), chimera_index(m, r, c + 1, 0, p)});
                if (r + 1 < m)
                    t.edges.insert({chimera_index(m, r, c, 1, p), chimera_index(m, r + 1, c, 1, p)});
            }
        }
    }
    return t;
}

// Grid size of an ideal Chimera with the given qubit count, or 0 if the
// count is not of the form 8*m*m.
inline int chimera_grid_size(int num_qubits) {
    for (int m = 1; 8 * m * m <= num_qubits; ++m)
        if (8 * m * m == num_qubits) return m;
    return 0;
}

struct Violation {
    int i = 0;
    int j = 0;
    std::string reason;
};

// Lists every coupling of p that cannot be realized on t: pairs without a
// coupler and indices outside the topology. Empty result means realizable.
inline std::vector<Violation> validate_against(const IsingProblem& p, const Topology& t) {
    std::vector<Violation> out;
    for (const auto& [i, v] : p.h) {
        (void)v;
        if (i < 0 || i >= t.num_qubits) out.push_back({i, i, "field index outside topology"});
    }
    for (const auto& [ij, v] : p.J) {
        (void)v;
        auto [i, j] = ij;
        if (i < 0 || i >= t.num_qubits || j < 0 || j >= t.num_qubits) {
            out.push_back({i, j, "index outside topology"});
        } else if (!t.has_edge(i, j)) {
            out.push_back({i, j, "no coupler between qubits"});
        }
    }
    return out;
}

}  // namespace spingauge
