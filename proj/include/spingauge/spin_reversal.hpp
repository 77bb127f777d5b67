#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spingauge/ising.hpp"
#include "spingauge/rng.hpp"

// Spin reversal (gauge) transformation used as a homomorphic encryption
// layer. A secret bit string x of length n maps a problem (h, J) to
//
//   h*_i  = g_i h_i,   J*_ij = g_i g_j J_ij,   g_i = (-1)^{x_i}
//
// and samples back through s_i = g_i s*_i. Energies are invariant:
// the encoded problem evaluated at an encoded sample gives the same value
// as the original problem at the decoded sample, so an untrusted solver
// works on (h*, J*) without learning (h, J) or the returned states.
//
// The transform preserves sparsity patterns and coefficient magnitudes, so
// anything realizable on given hardware stays realizable after encoding.

namespace spingauge {

struct SecretKey {
    std::vector<std::uint8_t> x;  // bits, one per variable

    int n() const { return static_cast<int>(x.size()); }

    // (-1)^{x_i}: +1 for bit 0, -1 for bit 1.
    int sign(int i) const { return x[i] ? -1 : 1; }

    static SecretKey zeros(int n) {
        if (n < 0) throw std::invalid_argument("negative key length");
        return SecretKey{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
    }

    bool operator==(const SecretKey&) const = default;
};

// Derived sign form of the key, g_i = (-1)^{x_i}.
inline std::vector<Spin> sign_vector(const SecretKey& k) {
    std::vector<Spin> g(k.x.size());
    for (std::size_t i = 0; i < k.x.size(); ++i) g[i] = k.x[i] ? -1 : 1;
    return g;
}

// n independent fair bits drawn from rng. Deterministic given the engine
// state. Callers wanting cryptographic keys should seed from a CSPRNG;
// the library itself only requires a seedable source so that tests and
// experiments are reproducible.
inline SecretKey keygen(int n, Rng& rng) {
    if (n < 0) throw std::invalid_argument("negative key length");
    SecretKey k;
    k.x.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) k.x[i] = static_cast<std::uint8_t>(fair_bit(rng));
    return k;
}

inline void check_key(const SecretKey& k, int n) {
    if (k.n() != n)
        throw std::invalid_argument("key length " + std::to_string(k.n()) +
                                    " does not match size " + std::to_string(n));
    for (auto b : k.x)
        if (b != 0 && b != 1) throw std::invalid_argument("key entries must be bits");
}

// h*_i = g_i h_i, J*_ij = g_i g_j J_ij; offset untouched. Involution: applying
// the same key twice restores the input bit-exactly.
inline IsingProblem encode_problem(const IsingProblem& p, const SecretKey& k) {
    check_key(k, p.n);
    IsingProblem out = p;
    for (auto& [i, v] : out.h)
        if (k.x[i]) v = -v;
    for (auto& [ij, v] : out.J)
        if (k.x[ij.first] != k.x[ij.second]) v = -v;
    return out;
}

// s_i = g_i s*_i. Self-inverse; the same map encodes an initial state for
// reverse annealing before it is sent out.
inline Spins decode_sample(const Spins& s, const SecretKey& k) {
    check_key(k, static_cast<int>(s.size()));
    Spins out = s;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (k.x[i]) out[i] = static_cast<Spin>(-out[i]);
    return out;
}

// Raised when decoded samples disagree with the energies recorded by the
// solver, i.e. the transcript was corrupted or decoded with the wrong key.
class integrity_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Decodes every sample and recomputes its energy against the original
// problem. The recomputed energy must match the stored one (which the
// solver produced from the encoded problem): exactly for integer-valued
// problems, within 1e-9 relative otherwise.
inline SampleSet decode_sampleset(const SampleSet& ss, const SecretKey& k,
                                  const IsingProblem& original) {
    check_key(k, original.n);
    const bool exact = is_integer_valued(original);
    SampleSet out;
    out.samples.reserve(ss.samples.size());
    for (const auto& smp : ss.samples) {
        Sample dec;
        dec.s = decode_sample(smp.s, k);
        dec.occurrences = smp.occurrences;
        dec.energy = energy(original, dec.s);
        const double err = std::abs(dec.energy - smp.energy);
        const double tol = exact ? 0.0 : 1e-9 * std::max(1.0, std::abs(smp.energy));
        if (err > tol)
            throw integrity_error("decoded sample energy " + std::to_string(dec.energy) +
                                  " does not match recorded energy " + std::to_string(smp.energy));
        out.samples.push_back(std::move(dec));
    }
    return out;
}

// Sum of two problems encoded under the same key. Whether the keys really
// match is the callers' business -- the solver cannot tell, which is the
// point. Satisfies
//   combine_encrypted(encode(p1,k), encode(p2,k)) == encode(p1 + p2, k)
// bit-exactly.
inline IsingProblem combine_encrypted(const IsingProblem& a, const IsingProblem& b) {
    return add(a, b);
}

}  // namespace spingauge
