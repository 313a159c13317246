// AVX2+FMA kernel table. Compiled with -mavx2 -mfma; callers reach it only
// through the runtime dispatcher after a CPU support check.

#include "nfipp/kernels.hpp"

#if defined(NFIPP_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstring>
#include <limits>

namespace nfipp::kern {

namespace {

inline __m256d load4(const double* p) { return _mm256_loadu_pd(p); }
inline void store4(double* p, __m256d v) { _mm256_storeu_pd(p, v); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline __m256d abs4(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

// Small-magnitude int64 lanes to double (values must fit in int32).
inline __m256d small_i64_to_f64(__m256i v) {
  const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  const __m256i packed = _mm256_permutevar8x32_epi32(v, idx);
  return _mm256_cvtepi32_pd(_mm256_castsi256_si128(packed));
}

// exp with Cephes-style range reduction and rational approximation,
// accurate to a few ulp over the full finite range.
inline __m256d exp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
  const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
  const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
  const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
  const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
  const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
  const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
  const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);

  const __m256d n_d = _mm256_round_pd(
      _mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n_d, c1, x);
  r = _mm256_fnmadd_pd(n_d, c2, r);

  const __m256d xx = _mm256_mul_pd(r, r);
  const __m256d px = _mm256_mul_pd(
      r, _mm256_fmadd_pd(_mm256_fmadd_pd(p0, xx, p1), xx, p2));
  const __m256d qx = _mm256_fmadd_pd(
      _mm256_fmadd_pd(_mm256_fmadd_pd(q0, xx, q1), xx, q2), xx, q3);
  const __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  __m256d y = _mm256_fmadd_pd(two, e, one);

  // Scale by 2^n, split into two factors so |n| up to ~1075 never builds an
  // out-of-range exponent on its own.
  const __m128i n32 = _mm256_cvtpd_epi32(n_d);
  const __m128i n1_32 = _mm_srai_epi32(n32, 1);
  const __m128i n2_32 = _mm_sub_epi32(n32, n1_32);
  const __m256i bias = _mm256_set1_epi64x(1023);
  const __m256i f1 = _mm256_slli_epi64(
      _mm256_add_epi64(_mm256_cvtepi32_epi64(n1_32), bias), 52);
  const __m256i f2 = _mm256_slli_epi64(
      _mm256_add_epi64(_mm256_cvtepi32_epi64(n2_32), bias), 52);
  y = _mm256_mul_pd(y, _mm256_castsi256_pd(f1));
  y = _mm256_mul_pd(y, _mm256_castsi256_pd(f2));

  const __m256d under =
      _mm256_cmp_pd(x, _mm256_set1_pd(-745.2), _CMP_LT_OQ);
  const __m256d over =
      _mm256_cmp_pd(x, _mm256_set1_pd(709.782712893384), _CMP_GT_OQ);
  y = _mm256_blendv_pd(y, _mm256_setzero_pd(), under);
  y = _mm256_blendv_pd(
      y, _mm256_set1_pd(std::numeric_limits<double>::infinity()), over);
  return y;
}

// Natural log, Cephes-style: frexp via bit twiddling, rational polynomial on
// the reduced mantissa. Handles denormals, zero, negatives, inf, NaN.
inline __m256d log4(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d min_normal = _mm256_set1_pd(2.2250738585072014e-308);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  // normalize denormals so the exponent field is usable
  const __m256d is_den = _mm256_and_pd(_mm256_cmp_pd(x, zero, _CMP_GT_OQ),
                                       _mm256_cmp_pd(x, min_normal, _CMP_LT_OQ));
  const __m256d xs =
      _mm256_blendv_pd(x, _mm256_mul_pd(x, _mm256_set1_pd(0x1.0p54)), is_den);

  const __m256i bits = _mm256_castpd_si256(xs);
  const __m256i biased = _mm256_and_si256(_mm256_srli_epi64(bits, 52),
                                          _mm256_set1_epi64x(0x7ff));
  const __m256i e_i = _mm256_sub_epi64(biased, _mm256_set1_epi64x(1022));
  __m256d e = small_i64_to_f64(e_i);
  e = _mm256_sub_pd(e, _mm256_and_pd(is_den, _mm256_set1_pd(54.0)));

  const __m256d mant_mask =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL));
  const __m256d half_bits =
      _mm256_castsi256_pd(_mm256_set1_epi64x(0x3FE0000000000000LL));
  __m256d m = _mm256_or_pd(_mm256_and_pd(xs, mant_mask), half_bits);

  const __m256d sqrth = _mm256_set1_pd(0.70710678118654752440);
  const __m256d below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(below, one));
  m = _mm256_sub_pd(_mm256_add_pd(m, _mm256_and_pd(below, m)), one);

  const __m256d P0 = _mm256_set1_pd(1.01875663804580931796e-4);
  const __m256d P1 = _mm256_set1_pd(4.97494994976747001425e-1);
  const __m256d P2 = _mm256_set1_pd(4.70579119878881725854e0);
  const __m256d P3 = _mm256_set1_pd(1.44989225341610930846e1);
  const __m256d P4 = _mm256_set1_pd(1.79368678507819816313e1);
  const __m256d P5 = _mm256_set1_pd(7.70838733755885391666e0);
  const __m256d Q0 = _mm256_set1_pd(1.12873587189167450590e1);
  const __m256d Q1 = _mm256_set1_pd(4.52279145837532221105e1);
  const __m256d Q2 = _mm256_set1_pd(8.29875266912776603211e1);
  const __m256d Q3 = _mm256_set1_pd(7.11544750618563894466e1);
  const __m256d Q4 = _mm256_set1_pd(2.31251620126765340583e1);

  const __m256d z = _mm256_mul_pd(m, m);
  __m256d pn = _mm256_fmadd_pd(P0, m, P1);
  pn = _mm256_fmadd_pd(pn, m, P2);
  pn = _mm256_fmadd_pd(pn, m, P3);
  pn = _mm256_fmadd_pd(pn, m, P4);
  pn = _mm256_fmadd_pd(pn, m, P5);
  __m256d qn = _mm256_add_pd(m, Q0);
  qn = _mm256_fmadd_pd(qn, m, Q1);
  qn = _mm256_fmadd_pd(qn, m, Q2);
  qn = _mm256_fmadd_pd(qn, m, Q3);
  qn = _mm256_fmadd_pd(qn, m, Q4);

  __m256d y = _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(m, z), pn), qn);
  y = _mm256_fmadd_pd(e, _mm256_set1_pd(-2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(half, z, y);
  __m256d res = _mm256_add_pd(m, y);
  res = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), res);

  // special cases
  const __m256d nan_mask = _mm256_or_pd(_mm256_cmp_pd(x, x, _CMP_UNORD_Q),
                                        _mm256_cmp_pd(x, zero, _CMP_LT_OQ));
  res = _mm256_blendv_pd(
      res, _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN()), nan_mask);
  res = _mm256_blendv_pd(
      res, _mm256_set1_pd(-std::numeric_limits<double>::infinity()),
      _mm256_cmp_pd(x, zero, _CMP_EQ_OQ));
  res = _mm256_blendv_pd(res, inf, _mm256_cmp_pd(x, inf, _CMP_EQ_OQ));
  return res;
}

// log(1+u) for u in [0,1]; Kahan correction recovers the low bits lost in 1+u.
inline __m256d log1p4(__m256d u) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d z = _mm256_add_pd(one, u);
  const __m256d l = log4(z);
  const __m256d corr =
      _mm256_div_pd(_mm256_sub_pd(u, _mm256_sub_pd(z, one)), z);
  return _mm256_add_pd(l, corr);
}

inline __m256d tanh4(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d a = abs4(x);

  const __m256d s = exp4(_mm256_add_pd(a, a));
  const __m256d large =
      _mm256_sub_pd(one, _mm256_div_pd(two, _mm256_add_pd(s, one)));

  const __m256d P0 = _mm256_set1_pd(-9.64399179425052238628e-1);
  const __m256d P1 = _mm256_set1_pd(-9.92877231001918586564e1);
  const __m256d P2 = _mm256_set1_pd(-1.61468768441708447952e3);
  const __m256d Q0 = _mm256_set1_pd(1.12811678491632931402e2);
  const __m256d Q1 = _mm256_set1_pd(2.23548839060100448583e3);
  const __m256d Q2 = _mm256_set1_pd(4.84406305325125486048e3);
  const __m256d s2 = _mm256_mul_pd(x, x);
  const __m256d pp = _mm256_fmadd_pd(_mm256_fmadd_pd(P0, s2, P1), s2, P2);
  __m256d qq = _mm256_add_pd(s2, Q0);
  qq = _mm256_fmadd_pd(qq, s2, Q1);
  qq = _mm256_fmadd_pd(qq, s2, Q2);
  const __m256d small =
      _mm256_fmadd_pd(_mm256_mul_pd(x, s2), _mm256_div_pd(pp, qq), x);

  const __m256d sign = _mm256_and_pd(x, _mm256_set1_pd(-0.0));
  const __m256d large_signed = _mm256_or_pd(large, sign);
  const __m256d use_large =
      _mm256_cmp_pd(a, _mm256_set1_pd(0.625), _CMP_GE_OQ);
  return _mm256_blendv_pd(small, large_signed, use_large);
}

inline __m256d sigmoid4(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d t = exp4(_mm256_sub_pd(_mm256_setzero_pd(), abs4(x)));
  const __m256d denom = _mm256_add_pd(one, t);
  const __m256d pos = _mm256_div_pd(one, denom);
  const __m256d neg = _mm256_div_pd(t, denom);
  const __m256d nonneg = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_GE_OQ);
  return _mm256_blendv_pd(neg, pos, nonneg);
}

inline __m256d softplus4(__m256d x) {
  const __m256d m = _mm256_max_pd(x, _mm256_setzero_pd());
  const __m256d u = exp4(_mm256_sub_pd(_mm256_setzero_pd(), abs4(x)));
  return _mm256_add_pd(m, log1p4(u));
}

// Elementwise map with a buffered tail so every lane goes through the same
// vector math regardless of array length.
template <__m256d (*F)(__m256d)>
void map1(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store4(y + i, F(load4(x + i)));
  if (i < n) {
    alignas(32) double bx[4] = {0.0, 0.0, 0.0, 0.0};
    alignas(32) double by[4];
    std::memcpy(bx, x + i, (n - i) * sizeof(double));
    _mm256_store_pd(by, F(_mm256_load_pd(bx)));
    std::memcpy(y + i, by, (n - i) * sizeof(double));
  }
}

void exp_a(const double* x, double* y, std::size_t n) { map1<exp4>(x, y, n); }
void log_a(const double* x, double* y, std::size_t n) { map1<log4>(x, y, n); }
void tanh_a(const double* x, double* y, std::size_t n) { map1<tanh4>(x, y, n); }
void sigmoid_a(const double* x, double* y, std::size_t n) {
  map1<sigmoid4>(x, y, n);
}
void softplus_a(const double* x, double* y, std::size_t n) {
  map1<softplus4>(x, y, n);
}

double sum_a(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, load4(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

double dot_a(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(load4(a + i), load4(b + i), acc);
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

void axpy_a(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store4(y + i, _mm256_fmadd_pd(av, load4(x + i), load4(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void mul_one_minus_sq_a(const double* a, double* y, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d av = load4(a + i);
    const __m256d f = _mm256_fnmadd_pd(av, av, one);
    store4(y + i, _mm256_mul_pd(load4(y + i), f));
  }
  for (; i < n; ++i) y[i] *= 1.0 - a[i] * a[i];
}

void affine_batch_a(const double* x, const double* w, const double* bias,
                    double* z, std::size_t n, std::size_t in,
                    std::size_t out) {
  for (std::size_t t = 0; t < n; ++t) {
    const double* xt = x + t * in;
    double* zt = z + t * out;
    for (std::size_t o = 0; o < out; ++o)
      zt[o] = bias[o] + dot_a(w + o * in, xt, in);
  }
}

void affine_backprop_batch_a(const double* dz, const double* w, double* dx,
                             std::size_t n, std::size_t in, std::size_t out) {
  for (std::size_t t = 0; t < n; ++t) {
    const double* dzt = dz + t * out;
    double* dxt = dx + t * in;
    std::memset(dxt, 0, in * sizeof(double));
    for (std::size_t o = 0; o < out; ++o)
      axpy_a(dzt[o], w + o * in, dxt, in);
  }
}

void grad_accum_batch_a(const double* dz, const double* x, double* gw,
                        double* gb, std::size_t n, std::size_t in,
                        std::size_t out) {
  for (std::size_t t = 0; t < n; ++t) {
    const double* dzt = dz + t * out;
    const double* xt = x + t * in;
    for (std::size_t o = 0; o < out; ++o) {
      axpy_a(dzt[o], xt, gw + o * in, in);
      gb[o] += dzt[o];
    }
  }
}

double poisson_ll_a(const double* lam, const double* k, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = load4(lam + i);
    const __m256d kv = load4(k + i);
    acc = _mm256_add_pd(acc, _mm256_fmsub_pd(kv, log4(l), l));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += k[i] * std::log(lam[i]) - lam[i];
  return r;
}

void poisson_delta_a(const double* lam, const double* k, const double* sig,
                     double* d, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ratio = _mm256_div_pd(load4(k + i), load4(lam + i));
    store4(d + i,
           _mm256_mul_pd(_mm256_sub_pd(ratio, one), load4(sig + i)));
  }
  for (; i < n; ++i) d[i] = (k[i] / lam[i] - 1.0) * sig[i];
}

double sse_a(const double* lam, const double* k, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_sub_pd(load4(lam + i), load4(k + i));
    acc = _mm256_fmadd_pd(r, r, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) {
    const double t = lam[i] - k[i];
    r += t * t;
  }
  return r;
}

void gaussian_delta_a(const double* lam, const double* k, const double* sig,
                      double* d, std::size_t n) {
  const __m256d m2 = _mm256_set1_pd(-2.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_sub_pd(load4(lam + i), load4(k + i));
    store4(d + i, _mm256_mul_pd(_mm256_mul_pd(m2, r), load4(sig + i)));
  }
  for (; i < n; ++i) d[i] = -2.0 * (lam[i] - k[i]) * sig[i];
}

constexpr Ops kAvx2Ops = {
    "avx2",            exp_a,
    log_a,             tanh_a,
    sigmoid_a,         softplus_a,
    sum_a,             dot_a,
    axpy_a,            mul_one_minus_sq_a,
    affine_batch_a,    affine_backprop_batch_a,
    grad_accum_batch_a, poisson_ll_a,
    poisson_delta_a,   sse_a,
    gaussian_delta_a,
};

}  // namespace

const Ops* nfipp_avx2_table() { return &kAvx2Ops; }

}  // namespace nfipp::kern

#endif  // NFIPP_HAVE_AVX2
