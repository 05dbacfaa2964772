#include "micz/batch.hpp"

#include "micz/errors.hpp"

namespace micz::batch {

void EuclideanBatch::push_back(double Ax, double Ay, double Az, double Lx, double Ly,
                               double Lz)
{
    ax.push_back(Ax);
    ay.push_back(Ay);
    az.push_back(Az);
    lx.push_back(Lx);
    ly.push_back(Ly);
    lz.push_back(Lz);
}

void SweepResults::resize(std::size_t n)
{
    roundtrip.resize(n);
    l_norm.resize(n);
    a_dot_l.resize(n);
    a0.resize(n);
    energy_gap.resize(n);
    ecc_identity.resize(n);
}

bool isa_available(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(MICZ_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(_M_X64))
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

SweepResults invariant_sweep(const EuclideanBatch& b, Isa isa)
{
    if (!isa_available(isa))
        throw MiczError(ErrorCode::InvalidArgument,
                        "invariant_sweep: requested ISA not available on this host");
    SweepResults out;
    out.resize(b.size());
    switch (isa) {
    case Isa::Scalar: detail::sweep_scalar(b, out, 0, b.size()); break;
    case Isa::Avx2:
#ifdef MICZ_HAVE_AVX2_KERNELS
        detail::sweep_avx2(b, out, 0, b.size());
#endif
        break;
    }
    return out;
}

SweepResults invariant_sweep(const EuclideanBatch& b)
{
    return invariant_sweep(b, active_isa());
}

} // namespace micz::batch
