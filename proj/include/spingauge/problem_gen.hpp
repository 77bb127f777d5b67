#pragma once

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spingauge/ising.hpp"
#include "spingauge/rng.hpp"
#include "spingauge/topology.hpp"

// Benchmark problem generators: RAN1 instances on a hardware graph, and the
// binary least-squares column subproblem arising in nonnegative/binary
// matrix factorization (the annealer-facing step of the alternating scheme).

namespace spingauge {

// h identically zero, one coupling per topology edge drawn uniformly from
// {-1, +1}. Edges are visited in sorted order, so a seed pins the instance.
inline IsingProblem ran1(const Topology& t, Rng& rng) {
    IsingProblem p(t.num_qubits);
    for (const auto& [i, j] : t.edges) p.set_coupling(i, j, fair_bit(rng) ? 1.0 : -1.0);
    return p;
}

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {
        if (r < 0 || c < 0) throw std::invalid_argument("negative matrix dimension");
    }

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const Matrix&) const = default;
};

// CSV with one row per line, comma-separated numeric fields.
inline Matrix parse_csv_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("ragged CSV matrix");
        rows.push_back(std::move(row));
    }
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    return m;
}

// Data for one factorization step A ~ B C with B fixed: A is real n x m,
// B is nonnegative n x k. Each column of C is recovered independently by
// minimizing ||A_col - B c||^2 over binary c.
struct NbmfInstance {
    Matrix A;
    Matrix B;

    NbmfInstance() = default;
    NbmfInstance(Matrix a, Matrix b) : A(std::move(a)), B(std::move(b)) {
        if (A.rows != B.rows) throw std::invalid_argument("A and B must have the same row count");
        for (double v : B.data)
            if (v < 0.0) throw std::invalid_argument("B must be nonnegative");
    }

    bool operator==(const NbmfInstance&) const = default;
};

// QUBO for ||A_col - B c||^2 over binary c (using c_i^2 = c_i):
//   Q_ii = (B^T B)_ii - 2 (B^T A_col)_i
//   Q_ij = 2 (B^T B)_ij              for i < j
//   offset = ||A_col||^2
inline QuboProblem nbmf_column_qubo(const NbmfInstance& inst, int col) {
    if (col < 0 || col >= inst.A.cols) throw std::invalid_argument("column index out of range");
    const int n = inst.B.rows;
    const int k = inst.B.cols;
    QuboProblem q(k);
    for (int i = 0; i < k; ++i) {
        double btb_ii = 0.0;
        double bta_i = 0.0;
        for (int r = 0; r < n; ++r) {
            btb_ii += inst.B.at(r, i) * inst.B.at(r, i);
            bta_i += inst.B.at(r, i) * inst.A.at(r, col);
        }
        q.set_linear(i, btb_ii - 2.0 * bta_i);
        for (int j = i + 1; j < k; ++j) {
            double btb_ij = 0.0;
            for (int r = 0; r < n; ++r) btb_ij += inst.B.at(r, i) * inst.B.at(r, j);
            q.set_quadratic(i, j, 2.0 * btb_ij);
        }
    }
    for (int r = 0; r < n; ++r) q.offset += inst.A.at(r, col) * inst.A.at(r, col);
    return q;
}

inline IsingProblem nbmf_column_ising(const NbmfInstance& inst, int col) {
    return qubo_to_ising(nbmf_column_qubo(inst, col));
}

}  // namespace spingauge
