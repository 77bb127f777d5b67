#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "spingauge/ising.hpp"
#include "spingauge/rng.hpp"
#include "spingauge/samplers.hpp"
#include "spingauge/spin_reversal.hpp"

// Evaluation harness: empirical energy CDFs, the signed average probability
// difference between two CDFs, and the multi-gauge comparison experiment
// that samples a problem under a set of fresh keys and reports how the
// transformed runs compare with the untransformed baseline.

namespace spingauge {

struct EnergyCdf {
    // (energy, cumulative probability), energies strictly increasing,
    // probabilities nondecreasing with final value 1.
    std::vector<std::pair<double, double>> steps;

    // Right-continuous evaluation: probability of energy <= e.
    double value_at(double e) const {
        double p = 0.0;
        for (const auto& [energy, cum] : steps) {
            if (energy > e) break;
            p = cum;
        }
        return p;
    }

    bool operator==(const EnergyCdf&) const = default;
};

// Occurrence-weighted empirical CDF over the distinct energies of a sample set.
inline EnergyCdf cdf(const SampleSet& ss) {
    if (ss.samples.empty()) throw std::invalid_argument("cannot build CDF of empty sample set");
    std::map<double, std::uint64_t> counts;
    std::uint64_t total = 0;
    for (const auto& smp : ss.samples) {
        counts[smp.energy] += smp.occurrences;
        total += smp.occurrences;
    }
    EnergyCdf out;
    out.steps.reserve(counts.size());
    std::uint64_t running = 0;
    for (const auto& [e, c] : counts) {
        running += c;
        out.steps.push_back({e, static_cast<double>(running) / static_cast<double>(total)});
    }
    return out;
}

// Exact CDF of the Gibbs distribution of p, for the exact-sampler mode.
// Mass is accumulated in value-sorted order so that gauge-equivalent
// problems produce bit-identical CDFs.
inline EnergyCdf cdf(const IsingProblem& p, const ExactDistribution& d) {
    if (p.n != d.n) throw std::invalid_argument("distribution does not match problem size");
    std::vector<std::pair<double, double>> pairs(d.prob.size());
    for (std::uint64_t idx = 0; idx < d.prob.size(); ++idx)
        pairs[idx] = {energy(p, spins_from_index(d.n, idx)), d.prob[idx]};
    std::sort(pairs.begin(), pairs.end());
    EnergyCdf out;
    double running = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        running += pairs[i].second;
        if (i + 1 == pairs.size() || pairs[i + 1].first != pairs[i].first)
            out.steps.push_back({pairs[i].first, running});
    }
    if (!out.steps.empty()) out.steps.back().second = 1.0;  // clamp rounding residue
    return out;
}

// Mean of [F_baseline(e) - F_other(e)] over the union of both step grids,
// in percent. Positive means the baseline distribution sits higher, i.e.
// the baseline outperformed. Antisymmetric by construction.
inline double avg_cdf_diff(const EnergyCdf& baseline, const EnergyCdf& other) {
    std::vector<double> grid;
    grid.reserve(baseline.steps.size() + other.steps.size());
    for (const auto& [e, c] : baseline.steps) grid.push_back(e);
    for (const auto& [e, c] : other.steps) grid.push_back(e);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.empty()) return 0.0;
    double acc = 0.0;
    for (double e : grid) acc += baseline.value_at(e) - other.value_at(e);
    return 100.0 * acc / static_cast<double>(grid.size());
}

struct ComparisonReport {
    EnergyCdf baseline_cdf;
    std::vector<EnergyCdf> transformed_cdfs;
    std::vector<double> per_transform_diffs;  // percent, baseline minus transform
    double avg_diff_percent = 0.0;            // mean of per_transform_diffs

    bool operator==(const ComparisonReport&) const = default;
};

struct GaugeExperimentConfig {
    int num_transforms = 10;
    std::uint64_t reads = 10000;
    SamplerKind sampler = SamplerKind::simulated_annealing;
    std::uint64_t sweeps = 1000;
    double beta_initial = 0.1;
    double beta_final = 3.0;
    double exact_beta = 1.0;  // inverse temperature for the exact sampler
    std::uint64_t seed = 0;
    // Test hooks: force_zero_keys replaces every generated key with the
    // identity key; share_sampler_seed reuses the baseline sampler stream
    // for every transform so that identical pipelines compare equal.
    bool force_zero_keys = false;
    bool share_sampler_seed = false;
};

// Baseline run plus num_transforms encrypted runs under fresh keys, each
// decoded and compared against the baseline CDF. All randomness derives
// from cfg.seed: keys from one stream, each sampler pipeline from its own.
inline ComparisonReport gauge_experiment(const IsingProblem& p, const GaugeExperimentConfig& cfg) {
    if (cfg.num_transforms < 1) throw std::invalid_argument("need at least one transform");
    Rng key_rng(derive_seed(cfg.seed, 0));
    auto pipeline_seed = [&](int pipeline) {
        // pipeline 0 is the baseline, 1..T the transforms
        const int effective = cfg.share_sampler_seed ? 0 : pipeline;
        return derive_seed(cfg.seed, 1 + static_cast<std::uint64_t>(effective));
    };

    auto run = [&](const IsingProblem& prob, int pipeline) -> SampleSet {
        AnnealParams params;
        params.num_reads = cfg.reads;
        params.sweeps = cfg.sweeps;
        params.beta_initial = cfg.beta_initial;
        params.beta_final = cfg.beta_final;
        params.seed = pipeline_seed(pipeline);
        return simulated_annealing(prob, params);
    };

    ComparisonReport report;
    if (cfg.sampler == SamplerKind::exact_boltzmann)
        report.baseline_cdf = cdf(p, exact_boltzmann(p, cfg.exact_beta));
    else
        report.baseline_cdf = cdf(run(p, 0));

    for (int tindex = 0; tindex < cfg.num_transforms; ++tindex) {
        SecretKey key = keygen(p.n, key_rng);
        if (cfg.force_zero_keys) key = SecretKey::zeros(p.n);
        const IsingProblem encoded = encode_problem(p, key);
        EnergyCdf transformed;
        if (cfg.sampler == SamplerKind::exact_boltzmann) {
            // Decoding permutes states and leaves energies alone, so the
            // decoded Gibbs CDF is the CDF of the encoded problem itself.
            transformed = cdf(encoded, exact_boltzmann(encoded, cfg.exact_beta));
        } else {
            const SampleSet raw = simulated_annealing(encoded, AnnealParams{cfg.reads, cfg.sweeps, cfg.beta_initial, cfg.beta_final, pipeline_seed(1 + tindex)});
            transformed = cdf(decode_sampleset(raw, key, p));
        }
        report.per_transform_diffs.push_back(avg_cdf_diff(report.baseline_cdf, transformed));
        report.transformed_cdfs.push_back(std::move(transformed));
    }
    double sum = 0.0;
    for (double d : report.per_transform_diffs) sum += d;
    report.avg_diff_percent = sum / static_cast<double>(report.per_transform_diffs.size());
    return report;
}

// CSV rows `series,energy,cum_prob` with series in
// {baseline, transform_0, ..., transform_{T-1}}.
inline void write_cdf_csv(std::ostream& out, const ComparisonReport& report) {
    out << "series,energy,cum_prob\n";
    auto emit = [&](const std::string& series, const EnergyCdf& c) {
        for (const auto& [e, p] : c.steps) out << series << ',' << e << ',' << p << '\n';
    };
    emit("baseline", report.baseline_cdf);
    for (std::size_t t = 0; t < report.transformed_cdfs.size(); ++t)
        emit("transform_" + std::to_string(t), report.transformed_cdfs[t]);
}

}  // namespace spingauge
