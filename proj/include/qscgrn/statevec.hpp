#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qscgrn/distribution.hpp"

namespace qscgrn {

// Default cap on register size: 2^24 real amplitudes = 128 MiB.
inline constexpr int kDefaultMaxQubits = 24;

// Amplitudes of an n-qubit register. All gates used here (Ry, c-Ry, c-NOT,
// R) are real orthogonal and the initial state is real, so amplitudes are
// stored as real scalars. Bit k of a basis index is the state of qubit q_k
// (bit 0 = q_0, least significant).
class StateVector {
  public:
    // Constructs |0...0>: amplitude 1 at index 0.
    explicit StateVector(int n_qubits, int max_qubits = kDefaultMaxQubits);

    int num_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amp_.size(); }

    double operator[](std::uint64_t x) const { return amp_[x]; }
    double& operator[](std::uint64_t x) { return amp_[x]; }

    const std::vector<double>& amplitudes() const { return amp_; }
    std::vector<double>& amplitudes() { return amp_; }

    double norm_sq() const;

    // Ry(theta) on one qubit: for every index pair (i, j) differing only in
    // the target bit,
    //   a_i' = cos(theta/2) a_i - sin(theta/2) a_j
    //   a_j' = sin(theta/2) a_i + cos(theta/2) a_j
    void apply_ry(int qubit, double theta);

    // Ry(theta) on the target, restricted to index pairs whose control bit
    // is 1; control-bit-0 amplitudes are untouched.
    void apply_cry(int control, int target, double theta);

    // Swaps amplitude pairs whose control bit is 1.
    void apply_cnot(int control, int target);

    // Plain rotation R(c) = [[cos c, -sin c], [sin c, cos c]]; identical to
    // apply_ry with theta = 2c.
    void apply_r(int qubit, double c);

    // d/dtheta of apply_cry: the control-1 subspace gets the pair update
    //   a_i' = (-sin(theta/2) a_i - cos(theta/2) a_j) / 2
    //   a_j' = ( cos(theta/2) a_i - sin(theta/2) a_j) / 2
    // and the control-0 subspace is annihilated. Used by the analytic
    // gradient; not a unitary.
    void apply_cry_derivative(int control, int target, double theta);

    // Squared amplitudes.
    Distribution probabilities() const;

  private:
    void check_qubit(int qubit) const;
    void check_pair(int control, int target) const;
    // In-place strided pair update restricted to indices matching
    // control_mask (0 = unrestricted).
    void pair_rotate(int target, double c, double s, std::uint64_t control_mask);

    int n_qubits_;
    std::vector<double> amp_;
};

// Renders a basis index as a ket label with q_{n-1} leftmost and q_0
// rightmost, e.g. index 2 with n = 2 -> "|10>".
std::string ket_string(std::uint64_t basis_index, int n_qubits);

} // namespace qscgrn
