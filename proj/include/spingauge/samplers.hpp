#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spingauge/ising.hpp"
#include "spingauge/rng.hpp"

// Classical stand-ins for a quantum annealer: an exhaustive oracle, the
// exact Boltzmann distribution, and a simulated annealing sampler. The
// annealer is modeled as a device that preferentially returns low-energy
// states; nothing here simulates quantum dynamics.

namespace spingauge {

enum class SamplerKind { simulated_annealing, exact_boltzmann };

struct AnnealParams {
    std::uint64_t num_reads = 100;
    std::uint64_t sweeps = 1000;
    double beta_initial = 0.1;
    double beta_final = 3.0;
    std::uint64_t seed = 0;

    void validate() const {
        if (num_reads < 1) throw std::invalid_argument("num_reads must be >= 1");
        if (sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
        if (!(beta_initial > 0.0) || !(beta_initial <= beta_final))
            throw std::invalid_argument("need 0 < beta_initial <= beta_final");
    }

    bool operator==(const AnnealParams&) const = default;
};

namespace detail {

// Flattened terms for fast repeated evaluation.
struct FlatProblem {
    int n = 0;
    std::vector<double> h;                              // dense fields
    std::vector<std::pair<std::pair<int, int>, double>> couplings;
    std::vector<std::vector<std::pair<int, double>>> adj;  // adj[i] = (j, J_ij)
    double offset = 0.0;

    explicit FlatProblem(const IsingProblem& p)
        : n(p.n), h(static_cast<std::size_t>(p.n), 0.0), adj(static_cast<std::size_t>(p.n)), offset(p.offset) {
        for (const auto& [i, v] : p.h) h[static_cast<std::size_t>(i)] = v;
        couplings.reserve(p.J.size());
        for (const auto& [ij, v] : p.J) {
            couplings.push_back({ij, v});
            adj[static_cast<std::size_t>(ij.first)].push_back({ij.second, v});
            adj[static_cast<std::size_t>(ij.second)].push_back({ij.first, v});
        }
    }

    double eval(const Spins& s) const {
        double e = offset;
        for (int i = 0; i < n; ++i) e += h[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)];
        for (const auto& [ij, v] : couplings)
            e += v * s[static_cast<std::size_t>(ij.first)] * s[static_cast<std::size_t>(ij.second)];
        return e;
    }

    // Energy change of flipping spin i.
    double flip_delta(const Spins& s, int i) const {
        double local = h[static_cast<std::size_t>(i)];
        for (const auto& [j, v] : adj[static_cast<std::size_t>(i)])
            local += v * s[static_cast<std::size_t>(j)];
        return -2.0 * s[static_cast<std::size_t>(i)] * local;
    }
};

}  // namespace detail

// State enumeration convention shared by the exhaustive routines: bit i of
// the index set means s_i = +1.
inline Spins spins_from_index(int n, std::uint64_t idx) {
    Spins s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (idx >> i) & 1 ? 1 : -1;
    return s;
}

inline std::uint64_t index_from_spins(const Spins& s) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > 0) idx |= std::uint64_t{1} << i;
    return idx;
}

struct BruteForceResult {
    Spins state;  // lexicographically smallest minimizer, -1 < +1
    double energy = 0.0;
    std::uint64_t degeneracy = 0;
};

inline BruteForceResult brute_force_min(const IsingProblem& p) {
    if (p.n > 24) throw std::invalid_argument("brute force guard: n must be <= 24");
    if (p.n < 0) throw std::invalid_argument("negative problem size");
    detail::FlatProblem fp(p);
    BruteForceResult best;
    const std::uint64_t total = std::uint64_t{1} << p.n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Spins s = spins_from_index(p.n, idx);
        double e = fp.eval(s);
        if (best.degeneracy == 0 || e < best.energy) {
            best = {std::move(s), e, 1};
        } else if (e == best.energy) {
            ++best.degeneracy;
            if (std::lexicographical_compare(s.begin(), s.end(), best.state.begin(), best.state.end()))
                best.state = std::move(s);
        }
    }
    return best;
}

struct ExactDistribution {
    int n = 0;
    double beta = 1.0;
    std::vector<double> prob;  // indexed by the spins_from_index convention

    double prob_of(const Spins& s) const { return prob.at(index_from_spins(s)); }

    bool operator==(const ExactDistribution&) const = default;
};

// Normalized Gibbs distribution P(s) proportional to exp(-beta E(s)),
// computed with a log-sum-exp stabilized partition function. The partition
// sum runs over value-sorted terms, which tightens the rounding error and
// makes the result invariant under any relabeling of states (in particular
// a gauge transformation permutes states but yields bit-identical
// probabilities).
inline ExactDistribution exact_boltzmann(const IsingProblem& p, double beta) {
    if (p.n > 20) throw std::invalid_argument("exact distribution guard: n must be <= 20");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    detail::FlatProblem fp(p);
    const std::uint64_t total = std::uint64_t{1} << p.n;
    std::vector<double> logw(total);
    double maxw = -std::numeric_limits<double>::infinity();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        logw[idx] = -beta * fp.eval(spins_from_index(p.n, idx));
        maxw = std::max(maxw, logw[idx]);
    }
    std::vector<double> terms(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) terms[idx] = std::exp(logw[idx] - maxw);
    std::vector<double> sorted = terms;
    std::sort(sorted.begin(), sorted.end());
    double z = 0.0;
    for (double t : sorted) z += t;
    ExactDistribution d;
    d.n = p.n;
    d.beta = beta;
    d.prob.resize(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) d.prob[idx] = terms[idx] / z;
    return d;
}

namespace detail {

// One annealing read: random (or supplied) start, then `sweeps` sequential
// Metropolis passes under a geometric beta ramp.
inline Spins anneal_read(const FlatProblem& fp, const AnnealParams& params, std::uint64_t read_index,
                         const std::optional<Spins>& initial_state) {
    Rng rng(params.seed + read_index);
    Spins s;
    if (initial_state) {
        s = *initial_state;
    } else {
        s.resize(static_cast<std::size_t>(fp.n));
        for (auto& v : s) v = fair_bit(rng) ? 1 : -1;
    }
    const double ratio = params.beta_final / params.beta_initial;
    for (std::uint64_t sweep = 0; sweep < params.sweeps; ++sweep) {
        const double frac = params.sweeps > 1 ? static_cast<double>(sweep) / static_cast<double>(params.sweeps - 1) : 1.0;
        const double beta = params.beta_initial * std::pow(ratio, frac);
        for (int i = 0; i < fp.n; ++i) {
            const double delta = fp.flip_delta(s, i);
            if (delta <= 0.0 || uniform_unit(rng) < std::exp(-beta * delta))
                s[static_cast<std::size_t>(i)] = static_cast<Spin>(-s[static_cast<std::size_t>(i)]);
        }
    }
    return s;
}

}  // namespace detail

// num_reads independent reads; read r draws from its own engine seeded with
// seed + r, so serial and parallel execution produce identical output.
// Identical final states aggregate into one sample, ordered by first
// appearance; summed occurrences equal num_reads.
inline SampleSet simulated_annealing(const IsingProblem& p, const AnnealParams& params,
                                     const std::optional<Spins>& initial_state = std::nullopt) {
    params.validate();
    if (initial_state) check_spins(p, *initial_state);
    detail::FlatProblem fp(p);

    std::vector<Spins> finals(params.num_reads);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(hw, params.num_reads));
    if (workers <= 1) {
        for (std::uint64_t r = 0; r < params.num_reads; ++r)
            finals[r] = detail::anneal_read(fp, params, r, initial_state);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t r = w; r < params.num_reads; r += workers)
                    finals[r] = detail::anneal_read(fp, params, r, initial_state);
            });
        }
        for (auto& th : pool) th.join();
    }

    SampleSet out;
    std::map<Spins, std::size_t> slot;
    for (auto& s : finals) {
        auto [it, inserted] = slot.try_emplace(s, out.samples.size());
        if (inserted)
            out.samples.push_back({s, energy(p, s), 1});
        else
            ++out.samples[it->second].occurrences;
    }
    return out;
}

}  // namespace spingauge
