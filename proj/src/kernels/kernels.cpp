#include "nfipp/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "nfipp/errors.hpp"

namespace nfipp::kern {

namespace {

void exp_s(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(x[i]);
}

void log_s(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::log(x[i]);
}

void tanh_s(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::tanh(x[i]);
}

void sigmoid_s(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::exp(-std::fabs(x[i]));
    y[i] = x[i] >= 0.0 ? 1.0 / (1.0 + t) : t / (1.0 + t);
  }
}

void softplus_s(const double* x, double* y, std::size_t n) {
  // max(x,0) + log1p(e^{-|x|}) is the overflow-safe form on both sides.
  for (std::size_t i = 0; i < n; ++i) {
    const double m = x[i] > 0.0 ? x[i] : 0.0;
    y[i] = m + std::log1p(std::exp(-std::fabs(x[i])));
  }
}

double sum_s(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double dot_s(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_s(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void mul_one_minus_sq_s(const double* a, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= 1.0 - a[i] * a[i];
}

void affine_batch_s(const double* x, const double* w, const double* bias,
                    double* z, std::size_t n, std::size_t in,
                    std::size_t out) {
  for (std::size_t t = 0; t < n; ++t) {
    const double* xt = x + t * in;
    double* zt = z + t * out;
    for (std::size_t o = 0; o < out; ++o)
      zt[o] = bias[o] + dot_s(w + o * in, xt, in);
  }
}

void affine_backprop_batch_s(const double* dz, const double* w, double* dx,
                             std::size_t n, std::size_t in, std::size_t out) {
  for (std::size_t t = 0; t < n; ++t) {
    const double* dzt = dz + t * out;
    double* dxt = dx + t * in;
    std::memset(dxt, 0, in * sizeof(double));
    for (std::size_t o = 0; o < out; ++o)
      axpy_s(dzt[o], w + o * in, dxt, in);
  }
}

void grad_accum_batch_s(const double* dz, const double* x, double* gw,
                        double* gb, std::size_t n, std::size_t in,
                        std::size_t out) {
  for (std::size_t t = 0; t < n; ++t) {
    const double* dzt = dz + t * out;
    const double* xt = x + t * in;
    for (std::size_t o = 0; o < out; ++o) {
      axpy_s(dzt[o], xt, gw + o * in, in);
      gb[o] += dzt[o];
    }
  }
}

double poisson_ll_s(const double* lam, const double* k, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += k[i] * std::log(lam[i]) - lam[i];
  return acc;
}

void poisson_delta_s(const double* lam, const double* k, const double* sig,
                     double* d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) d[i] = (k[i] / lam[i] - 1.0) * sig[i];
}

double sse_s(const double* lam, const double* k, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = lam[i] - k[i];
    acc += r * r;
  }
  return acc;
}

void gaussian_delta_s(const double* lam, const double* k, const double* sig,
                      double* d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    d[i] = -2.0 * (lam[i] - k[i]) * sig[i];
}

constexpr Ops kScalarOps = {
    "scalar",          exp_s,
    log_s,             tanh_s,
    sigmoid_s,         softplus_s,
    sum_s,             dot_s,
    axpy_s,            mul_one_minus_sq_s,
    affine_batch_s,    affine_backprop_batch_s,
    grad_accum_batch_s, poisson_ll_s,
    poisson_delta_s,   sse_s,
    gaussian_delta_s,
};

std::atomic<const Ops*> g_forced{nullptr};

const Ops* select_default() {
  if (const char* env = std::getenv("NFIPP_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &kScalarOps;
    if (std::strcmp(env, "avx2") == 0) {
      if (const Ops* t = avx2_ops()) return t;
      throw ArgumentError("NFIPP_KERNELS=avx2 but AVX2+FMA is unavailable");
    }
  }
  if (const Ops* t = avx2_ops()) return t;
  return &kScalarOps;
}

}  // namespace

#if defined(NFIPP_HAVE_AVX2)
const Ops* nfipp_avx2_table();  // kernels_avx2.cpp
#endif

bool cpu_has_avx2() {
#if defined(NFIPP_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops* avx2_ops() {
#if defined(NFIPP_HAVE_AVX2)
  return cpu_has_avx2() ? nfipp_avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Ops& scalar_ops() { return kScalarOps; }

const Ops& ops() {
  static const Ops* auto_selected = select_default();
  const Ops* forced = g_forced.load(std::memory_order_acquire);
  return forced ? *forced : *auto_selected;
}

void set_backend(Backend backend) {
  switch (backend) {
    case Backend::automatic:
      g_forced.store(nullptr, std::memory_order_release);
      return;
    case Backend::scalar:
      g_forced.store(&kScalarOps, std::memory_order_release);
      return;
    case Backend::avx2:
      if (const Ops* t = avx2_ops()) {
        g_forced.store(t, std::memory_order_release);
        return;
      }
      throw ArgumentError("AVX2 kernel backend unavailable on this CPU/build");
  }
}

const char* active_backend_name() { return ops().name; }

}  // namespace nfipp::kern
