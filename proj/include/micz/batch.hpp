#pragma once

#include <cstddef>
#include <vector>

namespace micz::batch {

// Structure-of-arrays layout for bulk invariant sweeps over Euclidean
// parameters (A, L). Lanes are independent; invalid lanes produce inf/nan
// residuals rather than throwing.
struct EuclideanBatch {
    std::vector<double> ax, ay, az;
    std::vector<double> lx, ly, lz;

    std::size_t size() const { return ax.size(); }
    void push_back(double Ax, double Ay, double Az, double Lx, double Ly, double Lz);
};

// Per-lane residuals of the bijection and scalar-functional identities:
//   roundtrip    max component error of the Euclidean -> Minkowski -> Euclidean loop
//   l_norm       |l^2 + 1|
//   a_dot_l      |a . l|
//   a0           time component of a (membership requires > 0)
//   energy_gap   |E computed on (A, L) - E computed on (a, l)|
//   ecc_identity |(|L - mu A|^2 - |L x A|^2) - (L^2 - mu^2)(1 - A^2)|
struct SweepResults {
    std::vector<double> roundtrip;
    std::vector<double> l_norm;
    std::vector<double> a_dot_l;
    std::vector<double> a0;
    std::vector<double> energy_gap;
    std::vector<double> ecc_identity;

    void resize(std::size_t n);
};

enum class Isa { Scalar, Avx2 };

bool isa_available(Isa isa);
Isa active_isa(); // widest available

// Kernels are written with a fixed evaluation order and compiled without
// floating-point contraction, so every ISA produces bit-identical results.
SweepResults invariant_sweep(const EuclideanBatch& b, Isa isa);
SweepResults invariant_sweep(const EuclideanBatch& b); // active_isa()

namespace detail {
void sweep_scalar(const EuclideanBatch& b, SweepResults& out, std::size_t begin,
                  std::size_t end);
#ifdef MICZ_HAVE_AVX2_KERNELS
void sweep_avx2(const EuclideanBatch& b, SweepResults& out, std::size_t begin,
                std::size_t end);
#endif
} // namespace detail

} // namespace micz::batch
