#pragma once

#include <string>

#include "json.hpp"
#include "spingauge/analysis.hpp"
#include "spingauge/embedding.hpp"
#include "spingauge/ising.hpp"
#include "spingauge/problem_gen.hpp"
#include "spingauge/samplers.hpp"
#include "spingauge/spin_reversal.hpp"
#include "spingauge/topology.hpp"

// Canonical JSON documents. Writers emit sorted, normalized entries
// (couplings with i < j, edge lists sorted lexicographically) so that equal
// values serialize to identical bytes. Loaders validate invariants and
// throw std::invalid_argument on violations.
//
//   IsingProblem  {"n": int, "h": [[i, v], ...], "J": [[i, j, v], ...], "offset": v}
//   SampleSet     {"samples": [{"s": [+-1, ...], "energy": v, "occurrences": k}, ...]}
//   SecretKey     {"n": int, "x": [0|1, ...]}
//   Topology      {"num_qubits": int, "edges": [[i, j], ...], "label": str}
//   Embedding     {"chains": {"0": [q, ...], ...}}
//   AnnealParams  {"num_reads": k, "sweeps": k, "beta_initial": v, "beta_final": v, "seed": k}

namespace spingauge {

using json = nlohmann::json;

inline json problem_to_json(const IsingProblem& p) {
    json jh = json::array();
    for (const auto& [i, v] : p.h) jh.push_back({i, v});
    json jj = json::array();
    for (const auto& [ij, v] : p.J) jj.push_back({ij.first, ij.second, v});
    return {{"n", p.n}, {"h", jh}, {"J", jj}, {"offset", p.offset}};
}

inline IsingProblem problem_from_json(const json& j) {
    IsingProblem p(j.at("n").get<int>());
    if (j.contains("offset")) p.offset = j.at("offset").get<double>();
    if (j.contains("h")) {
        for (const auto& entry : j.at("h")) {
            if (!entry.is_array() || entry.size() != 2) throw std::invalid_argument("h entries must be [i, value]");
            const int i = entry[0].get<int>();
            if (p.h.count(i)) throw std::invalid_argument("duplicate field index " + std::to_string(i));
            p.set_field(i, entry[1].get<double>());
        }
    }
    if (j.contains("J")) {
        for (const auto& entry : j.at("J")) {
            if (!entry.is_array() || entry.size() != 3) throw std::invalid_argument("J entries must be [i, j, value]");
            const int a = entry[0].get<int>();
            const int b = entry[1].get<int>();
            p.check_index(a);
            p.check_index(b);
            if (p.J.count(coupler_key(a, b)))
                throw std::invalid_argument("duplicate coupling (" + std::to_string(a) + "," + std::to_string(b) + ")");
            p.set_coupling(a, b, entry[2].get<double>());
        }
    }
    return p;
}

inline json spins_to_json(const Spins& s) {
    json arr = json::array();
    for (Spin v : s) arr.push_back(static_cast<int>(v));
    return arr;
}

inline Spins spins_from_json(const json& j) {
    Spins s;
    s.reserve(j.size());
    for (const auto& v : j) {
        const int val = v.get<int>();
        if (val != 1 && val != -1) throw std::invalid_argument("spin values must be +1 or -1");
        s.push_back(static_cast<Spin>(val));
    }
    return s;
}

inline json sampleset_to_json(const SampleSet& ss) {
    json arr = json::array();
    for (const auto& smp : ss.samples)
        arr.push_back({{"s", spins_to_json(smp.s)}, {"energy", smp.energy}, {"occurrences", smp.occurrences}});
    return {{"samples", arr}};
}

inline SampleSet sampleset_from_json(const json& j) {
    SampleSet ss;
    for (const auto& entry : j.at("samples")) {
        Sample smp;
        smp.s = spins_from_json(entry.at("s"));
        smp.energy = entry.at("energy").get<double>();
        smp.occurrences = entry.at("occurrences").get<std::uint64_t>();
        if (smp.occurrences < 1) throw std::invalid_argument("occurrences must be >= 1");
        ss.samples.push_back(std::move(smp));
    }
    return ss;
}

inline json key_to_json(const SecretKey& k) {
    json bits = json::array();
    for (auto b : k.x) bits.push_back(static_cast<int>(b));
    return {{"n", k.n()}, {"x", bits}};
}

inline SecretKey key_from_json(const json& j) {
    SecretKey k;
    for (const auto& b : j.at("x")) {
        const int bit = b.get<int>();
        if (bit != 0 && bit != 1) throw std::invalid_argument("key entries must be bits");
        k.x.push_back(static_cast<std::uint8_t>(bit));
    }
    if (j.at("n").get<int>() != k.n()) throw std::invalid_argument("key length does not match n");
    return k;
}

inline json topology_to_json(const Topology& t) {
    json edges = json::array();
    for (const auto& [i, j] : t.edges) edges.push_back({i, j});
    return {{"num_qubits", t.num_qubits}, {"edges", edges}, {"label", t.label}};
}

inline Topology topology_from_json(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e[0].get<int>(), e[1].get<int>()});
    return make_topology(j.at("num_qubits").get<int>(), edges,
                         j.contains("label") ? j.at("label").get<std::string>() : "custom");
}

inline json embedding_to_json(const Embedding& e) {
    json chains = json::object();
    for (const auto& [v, chain] : e.chains) chains[std::to_string(v)] = chain;
    return {{"chains", chains}};
}

inline Embedding embedding_from_json(const json& j) {
    Embedding e;
    for (const auto& [k, v] : j.at("chains").items()) {
        const int var = std::stoi(k);
        std::vector<int> chain = v.get<std::vector<int>>();
        if (chain.empty()) throw std::invalid_argument("empty chain for variable " + k);
        e.chains[var] = std::move(chain);
    }
    return e;
}

inline json params_to_json(const AnnealParams& p) {
    return {{"num_reads", p.num_reads}, {"sweeps", p.sweeps}, {"beta_initial", p.beta_initial},
            {"beta_final", p.beta_final}, {"seed", p.seed}};
}

inline AnnealParams params_from_json(const json& j) {
    AnnealParams p;
    if (j.contains("num_reads")) p.num_reads = j.at("num_reads").get<std::uint64_t>();
    if (j.contains("sweeps")) p.sweeps = j.at("sweeps").get<std::uint64_t>();
    if (j.contains("beta_initial")) p.beta_initial = j.at("beta_initial").get<double>();
    if (j.contains("beta_final")) p.beta_final = j.at("beta_final").get<double>();
    if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
    p.validate();
    return p;
}

inline json cdf_to_json(const EnergyCdf& c) {
    json arr = json::array();
    for (const auto& [e, p] : c.steps) arr.push_back({e, p});
    return arr;
}

inline json report_to_json(const ComparisonReport& r) {
    json transforms = json::array();
    for (const auto& c : r.transformed_cdfs) transforms.push_back(cdf_to_json(c));
    return {{"baseline_cdf", cdf_to_json(r.baseline_cdf)},
            {"transformed_cdfs", transforms},
            {"per_transform_diffs", r.per_transform_diffs},
            {"avg_diff_percent", r.avg_diff_percent}};
}

inline json nbmf_to_json(const NbmfInstance& inst) {
    auto matrix = [](const Matrix& m) {
        json rows = json::array();
        for (int r = 0; r < m.rows; ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
            rows.push_back(row);
        }
        return rows;
    };
    return {{"A", matrix(inst.A)}, {"B", matrix(inst.B)}};
}

inline NbmfInstance nbmf_from_json(const json& j) {
    auto matrix = [](const json& rows) {
        Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
        for (int r = 0; r < m.rows; ++r) {
            const auto& row = rows[static_cast<std::size_t>(r)];
            if (static_cast<int>(row.size()) != m.cols) throw std::invalid_argument("ragged matrix");
            for (int c = 0; c < m.cols; ++c) m.at(r, c) = row[static_cast<std::size_t>(c)].get<double>();
        }
        return m;
    };
    return NbmfInstance(matrix(j.at("A")), matrix(j.at("B")));
}

}  // namespace spingauge
