#include "micz/batch.hpp"

#ifdef MICZ_HAVE_AVX2_KERNELS

#include <immintrin.h>

// Four-lane replay of the scalar kernel's operation sequence. No FMA: every
// multiply-add stays a separate mul and add, matching the contraction-free
// scalar build.

namespace micz::batch::detail {

namespace {

inline __m256d vabs(__m256d x)
{
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

} // namespace

void sweep_avx2(const EuclideanBatch& b, SweepResults& out, std::size_t begin,
                std::size_t end)
{
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d zero = _mm256_setzero_pd();

    std::size_t i = begin;
    for (; i + 4 <= end; i += 4) {
        const __m256d ax = _mm256_loadu_pd(&b.ax[i]);
        const __m256d ay = _mm256_loadu_pd(&b.ay[i]);
        const __m256d az = _mm256_loadu_pd(&b.az[i]);
        const __m256d lx = _mm256_loadu_pd(&b.lx[i]);
        const __m256d ly = _mm256_loadu_pd(&b.ly[i]);
        const __m256d lz = _mm256_loadu_pd(&b.lz[i]);

        const __m256d mu = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(lx, ax), _mm256_mul_pd(ly, ay)),
            _mm256_mul_pd(lz, az));
        const __m256d L2 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(lx, lx), _mm256_mul_pd(ly, ly)),
            _mm256_mul_pd(lz, lz));
        const __m256d A2 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(ax, ax), _mm256_mul_pd(ay, ay)),
            _mm256_mul_pd(az, az));
        const __m256d m = _mm256_sub_pd(L2, _mm256_mul_pd(mu, mu));
        const __m256d inv = _mm256_div_pd(one, m);
        const __m256d rs = _mm256_div_pd(one, _mm256_sqrt_pd(m));

        const __m256d a0 = inv;
        const __m256d a1 = _mm256_mul_pd(inv, ax);
        const __m256d a2 = _mm256_mul_pd(inv, ay);
        const __m256d a3 = _mm256_mul_pd(inv, az);
        const __m256d l0 = _mm256_mul_pd(rs, mu);
        const __m256d l1 = _mm256_mul_pd(rs, lx);
        const __m256d l2 = _mm256_mul_pd(rs, ly);
        const __m256d l3 = _mm256_mul_pd(rs, lz);

        const __m256d scale = _mm256_sqrt_pd(_mm256_div_pd(one, a0));
        const __m256d rAx = _mm256_div_pd(a1, a0);
        const __m256d rAy = _mm256_div_pd(a2, a0);
        const __m256d rAz = _mm256_div_pd(a3, a0);
        const __m256d rLx = _mm256_mul_pd(l1, scale);
        const __m256d rLy = _mm256_mul_pd(l2, scale);
        const __m256d rLz = _mm256_mul_pd(l3, scale);
        __m256d rt = vabs(_mm256_sub_pd(rAx, ax));
        rt = _mm256_max_pd(rt, vabs(_mm256_sub_pd(rAy, ay)));
        rt = _mm256_max_pd(rt, vabs(_mm256_sub_pd(rAz, az)));
        rt = _mm256_max_pd(rt, vabs(_mm256_sub_pd(rLx, lx)));
        rt = _mm256_max_pd(rt, vabs(_mm256_sub_pd(rLy, ly)));
        rt = _mm256_max_pd(rt, vabs(_mm256_sub_pd(rLz, lz)));
        _mm256_storeu_pd(&out.roundtrip[i], rt);

        const __m256d lsq = _mm256_sub_pd(
            _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(l0, l0), _mm256_mul_pd(l1, l1)),
                          _mm256_mul_pd(l2, l2)),
            _mm256_mul_pd(l3, l3));
        _mm256_storeu_pd(&out.l_norm[i], vabs(_mm256_add_pd(lsq, one)));

        const __m256d adl = _mm256_sub_pd(
            _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(a0, l0), _mm256_mul_pd(a1, l1)),
                          _mm256_mul_pd(a2, l2)),
            _mm256_mul_pd(a3, l3));
        _mm256_storeu_pd(&out.a_dot_l[i], vabs(adl));

        _mm256_storeu_pd(&out.a0[i], a0);

        const __m256d ee = _mm256_mul_pd(_mm256_mul_pd(_mm256_sub_pd(A2, one), inv), half);
        const __m256d asq = _mm256_sub_pd(
            _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(a0, a0), _mm256_mul_pd(a1, a1)),
                          _mm256_mul_pd(a2, a2)),
            _mm256_mul_pd(a3, a3));
        const __m256d em =
            _mm256_div_pd(_mm256_sub_pd(zero, asq), _mm256_add_pd(a0, a0));
        _mm256_storeu_pd(&out.energy_gap[i], vabs(_mm256_sub_pd(ee, em)));

        const __m256d dx = _mm256_sub_pd(lx, _mm256_mul_pd(mu, ax));
        const __m256d dy = _mm256_sub_pd(ly, _mm256_mul_pd(mu, ay));
        const __m256d dz = _mm256_sub_pd(lz, _mm256_mul_pd(mu, az));
        const __m256d n2 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
            _mm256_mul_pd(dz, dz));
        const __m256d cx = _mm256_sub_pd(_mm256_mul_pd(ly, az), _mm256_mul_pd(lz, ay));
        const __m256d cy = _mm256_sub_pd(_mm256_mul_pd(lz, ax), _mm256_mul_pd(lx, az));
        const __m256d cz = _mm256_sub_pd(_mm256_mul_pd(lx, ay), _mm256_mul_pd(ly, ax));
        const __m256d c2 = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(cx, cx), _mm256_mul_pd(cy, cy)),
            _mm256_mul_pd(cz, cz));
        const __m256d ei = vabs(_mm256_sub_pd(
            _mm256_sub_pd(n2, c2), _mm256_mul_pd(m, _mm256_sub_pd(one, A2))));
        _mm256_storeu_pd(&out.ecc_identity[i], ei);
    }
    if (i < end)
        sweep_scalar(b, out, i, end);
}

} // namespace micz::batch::detail

#endif // MICZ_HAVE_AVX2_KERNELS
