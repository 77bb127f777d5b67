#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Core value types for Ising and QUBO problems.
//
// An Ising problem over n spins s_i in {+1,-1} has energy
//   E(s) = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j + offset
// with sparse linear fields h and couplings J. Couplings are stored once
// per unordered pair (i < j); an absent entry means exactly zero.
//
// All types are immutable values after construction in the sense that no
// operation in this library mutates its inputs; sharing across threads is
// safe as long as callers follow the same convention.

namespace spingauge {

using Spin = std::int8_t;
using Spins = std::vector<Spin>;

inline std::pair<int, int> coupler_key(int i, int j) {
    if (i == j) throw std::invalid_argument("coupler indices must differ");
    return i < j ? std::pair<int, int>{i, j} : std::pair<int, int>{j, i};
}

struct IsingProblem {
    int n = 0;
    std::map<int, double> h;
    std::map<std::pair<int, int>, double> J;
    double offset = 0.0;

    IsingProblem() = default;
    explicit IsingProblem(int num_vars) : n(num_vars) {
        if (num_vars < 0) throw std::invalid_argument("negative variable count");
    }

    void check_index(int i) const {
        if (i < 0 || i >= n) throw std::out_of_range("variable index " + std::to_string(i) + " not in [0," + std::to_string(n) + ")");
    }

    // Setting a value to exactly zero erases the entry, keeping the
    // sparsity invariant "absent means zero".
    void set_field(int i, double v) {
        check_index(i);
        if (v == 0.0) h.erase(i); else h[i] = v;
    }

    void set_coupling(int i, int j, double v) {
        check_index(i);
        check_index(j);
        auto key = coupler_key(i, j);
        if (v == 0.0) J.erase(key); else J[key] = v;
    }

    double field(int i) const {
        auto it = h.find(i);
        return it == h.end() ? 0.0 : it->second;
    }

    double coupling(int i, int j) const {
        auto it = J.find(coupler_key(i, j));
        return it == J.end() ? 0.0 : it->second;
    }

    bool operator==(const IsingProblem&) const = default;
};

inline void check_spins(const IsingProblem& p, const Spins& s) {
    if (static_cast<int>(s.size()) != p.n)
        throw std::invalid_argument("spin vector length " + std::to_string(s.size()) +
                                    " does not match problem size " + std::to_string(p.n));
    for (Spin v : s)
        if (v != 1 && v != -1) throw std::invalid_argument("spin values must be +1 or -1");
}

inline double energy(const IsingProblem& p, const Spins& s) {
    check_spins(p, s);
    double e = 0.0;
    for (const auto& [i, v] : p.h) e += v * s[i];
    for (const auto& [ij, v] : p.J) e += v * s[ij.first] * s[ij.second];
    return e + p.offset;
}

// Field/coupling-wise sum of two problems on the same index set.
inline IsingProblem add(const IsingProblem& a, const IsingProblem& b) {
    if (a.n != b.n) throw std::invalid_argument("cannot add problems of different size");
    IsingProblem out = a;
    for (const auto& [i, v] : b.h) {
        double sum = out.field(i) + v;
        if (sum == 0.0) out.h.erase(i); else out.h[i] = sum;
    }
    for (const auto& [ij, v] : b.J) {
        auto it = out.J.find(ij);
        double sum = (it == out.J.end() ? 0.0 : it->second) + v;
        if (sum == 0.0) out.J.erase(ij); else out.J[ij] = sum;
    }
    out.offset += b.offset;
    return out;
}

inline bool is_integer(double v) { return std::isfinite(v) && std::nearbyint(v) == v; }

// True when every coefficient is an exactly representable integer, in which
// case all energies evaluate with zero rounding error.
inline bool is_integer_valued(const IsingProblem& p) {
    if (!is_integer(p.offset)) return false;
    for (const auto& [i, v] : p.h) { (void)i; if (!is_integer(v)) return false; }
    for (const auto& [ij, v] : p.J) { (void)ij; if (!is_integer(v)) return false; }
    return true;
}

struct Sample {
    Spins s;
    double energy = 0.0;
    std::uint64_t occurrences = 1;

    bool operator==(const Sample&) const = default;
};

struct SampleSet {
    std::vector<Sample> samples;

    std::uint64_t num_reads() const {
        std::uint64_t total = 0;
        for (const auto& smp : samples) total += smp.occurrences;
        return total;
    }

    bool operator==(const SampleSet&) const = default;
};

// QUBO over binary variables x_i in {0,1}:
//   E(x) = sum_i Q_ii x_i + sum_{i<j} Q_ij x_i x_j + offset
// Diagonal entries are stored under the key (i, i).
struct QuboProblem {
    int n = 0;
    std::map<std::pair<int, int>, double> Q;
    double offset = 0.0;

    QuboProblem() = default;
    explicit QuboProblem(int num_vars) : n(num_vars) {
        if (num_vars < 0) throw std::invalid_argument("negative variable count");
    }

    void check_index(int i) const {
        if (i < 0 || i >= n) throw std::out_of_range("variable index out of range");
    }

    void set_linear(int i, double v) {
        check_index(i);
        if (v == 0.0) Q.erase({i, i}); else Q[{i, i}] = v;
    }

    void set_quadratic(int i, int j, double v) {
        check_index(i);
        check_index(j);
        auto key = coupler_key(i, j);
        if (v == 0.0) Q.erase(key); else Q[key] = v;
    }

    bool operator==(const QuboProblem&) const = default;
};

using Bits = std::vector<std::uint8_t>;

inline double qubo_energy(const QuboProblem& q, const Bits& x) {
    if (static_cast<int>(x.size()) != q.n)
        throw std::invalid_argument("assignment length does not match QUBO size");
    double e = 0.0;
    for (const auto& [ij, v] : q.Q) e += v * x[ij.first] * x[ij.second];
    return e + q.offset;
}

// The x = (1+s)/2 bijection between binary assignments and spin vectors.
inline Spins spins_from_bits(const Bits& x) {
    Spins s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? 1 : -1;
    return s;
}

inline Bits bits_from_spins(const Spins& s) {
    Bits x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i] > 0 ? 1 : 0;
    return x;
}

// Change of variables x_i = (1 + s_i)/2. The returned problem satisfies
// qubo_energy(q, x) == energy(result, spins_from_bits(x)) for every x,
// exactly up to the carried offset arithmetic.
inline IsingProblem qubo_to_ising(const QuboProblem& q) {
    IsingProblem p(q.n);
    for (const auto& [ij, v] : q.Q) {
        auto [i, j] = ij;
        if (i == j) {
            p.set_field(i, p.field(i) + v / 2.0);
            p.offset += v / 2.0;
        } else {
            p.set_field(i, p.field(i) + v / 4.0);
            p.set_field(j, p.field(j) + v / 4.0);
            p.set_coupling(i, j, p.coupling(i, j) + v / 4.0);
            p.offset += v / 4.0;
        }
    }
    p.offset += q.offset;
    return p;
}

}  // namespace spingauge
