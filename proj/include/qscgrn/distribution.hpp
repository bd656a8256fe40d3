#pragma once

#include <cstdint>
#include <vector>

#include "qscgrn/errors.hpp"

namespace qscgrn {

// Probability vector over the 2^n basis states of an n-qubit register.
// Entry x corresponds to the basis state whose bit k is the state of
// qubit q_k (bit 0 = q_0, least significant).
struct Distribution {
    int n_qubits = 0;
    std::vector<double> p;

    std::uint64_t size() const { return p.size(); }
};

Distribution make_distribution(int n_qubits);

// Sets entry 0 to zero and rescales the remainder to sum to 1.
// Throws degenerate_distribution_error when the mass outside the all-zero
// state is below `tol`.
void zero_and_rescale(Distribution& d, double tol = 1e-12);

// Laplace smoothing on a zeroed-and-rescaled distribution:
//   p_hat(x) = (m * p(x) + alpha) / (m + 2^n * alpha)
// Occurrence counts for a model distribution are m * p(x), possibly
// fractional. With alpha == 0 and zero entries the downstream KL loss is
// undefined; a note is appended to `warnings` when provided.
Distribution smooth(const Distribution& p, std::uint64_t m, double alpha,
                    std::vector<std::string>* warnings = nullptr);

// KL divergence sum_x a(x) * ln(a(x) / b(x)); natural logarithm.
// Both inputs must be strictly positive.
double kl_loss(const Distribution& p_out_hat, const Distribution& p_obs_hat);

// Sum of squared entry differences over all basis states, computed on
// unsmoothed zeroed-and-rescaled distributions.
double sq_error(const Distribution& p_out, const Distribution& p_obs);

} // namespace qscgrn
