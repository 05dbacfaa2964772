#include <cmath>

#include "micz/batch.hpp"

// Reference lane kernel. The AVX2 kernel replays this exact operation
// sequence four lanes at a time; both translation units are compiled with
// floating-point contraction disabled so the results agree bit for bit.

namespace micz::batch::detail {

namespace {

// mirror of _mm256_max_pd operand semantics
inline double vmax(double a, double b) { return a > b ? a : b; }

} // namespace

void sweep_scalar(const EuclideanBatch& b, SweepResults& out, std::size_t begin,
                  std::size_t end)
{
    for (std::size_t i = begin; i < end; ++i) {
        const double ax = b.ax[i], ay = b.ay[i], az = b.az[i];
        const double lx = b.lx[i], ly = b.ly[i], lz = b.lz[i];

        const double mu = (lx * ax + ly * ay) + lz * az;
        const double L2 = (lx * lx + ly * ly) + lz * lz;
        const double A2 = (ax * ax + ay * ay) + az * az;
        const double m = L2 - mu * mu;
        const double inv = 1.0 / m;
        const double rs = 1.0 / std::sqrt(m);

        const double a0 = inv;
        const double a1 = inv * ax, a2 = inv * ay, a3 = inv * az;
        const double l0 = rs * mu;
        const double l1 = rs * lx, l2 = rs * ly, l3 = rs * lz;

        const double scale = std::sqrt(1.0 / a0);
        const double rAx = a1 / a0, rAy = a2 / a0, rAz = a3 / a0;
        const double rLx = l1 * scale, rLy = l2 * scale, rLz = l3 * scale;
        double rt = std::fabs(rAx - ax);
        rt = vmax(rt, std::fabs(rAy - ay));
        rt = vmax(rt, std::fabs(rAz - az));
        rt = vmax(rt, std::fabs(rLx - lx));
        rt = vmax(rt, std::fabs(rLy - ly));
        rt = vmax(rt, std::fabs(rLz - lz));
        out.roundtrip[i] = rt;

        const double lsq = ((l0 * l0 - l1 * l1) - l2 * l2) - l3 * l3;
        out.l_norm[i] = std::fabs(lsq + 1.0);

        const double adl = ((a0 * l0 - a1 * l1) - a2 * l2) - a3 * l3;
        out.a_dot_l[i] = std::fabs(adl);

        out.a0[i] = a0;

        const double ee = ((A2 - 1.0) * inv) * 0.5;
        const double asq = ((a0 * a0 - a1 * a1) - a2 * a2) - a3 * a3;
        const double em = (0.0 - asq) / (a0 + a0);
        out.energy_gap[i] = std::fabs(ee - em);

        const double dx = lx - mu * ax, dy = ly - mu * ay, dz = lz - mu * az;
        const double n2 = (dx * dx + dy * dy) + dz * dz;
        const double cx = ly * az - lz * ay;
        const double cy = lz * ax - lx * az;
        const double cz = lx * ay - ly * ax;
        const double c2 = (cx * cx + cy * cy) + cz * cz;
        out.ecc_identity[i] = std::fabs((n2 - c2) - m * (1.0 - A2));
    }
}

} // namespace micz::batch::detail
