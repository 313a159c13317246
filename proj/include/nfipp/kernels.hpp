#pragma once

#include <cstddef>

namespace nfipp::kern {

// Batched numeric primitives behind runtime CPU dispatch. The scalar table is
// the reference; the AVX2 table must agree with it within the tolerances
// pinned in the equivalence tests. Arrays are contiguous doubles. No aliasing
// between inputs and outputs unless a comment says otherwise.
struct Ops {
  const char* name;

  void (*exp_v)(const double* x, double* y, std::size_t n);
  void (*log_v)(const double* x, double* y, std::size_t n);
  void (*tanh_v)(const double* x, double* y, std::size_t n);
  void (*sigmoid_v)(const double* x, double* y, std::size_t n);
  void (*softplus_v)(const double* x, double* y, std::size_t n);

  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x (in place)
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y[i] *= (1 - a[i]^2); tanh backprop through cached activations, in place
  void (*mul_one_minus_sq)(const double* a, double* y, std::size_t n);

  // z[t,:] = W x[t,:] + b. W is out*in row-major, x is n*in, z is n*out.
  void (*affine_batch)(const double* x, const double* w, const double* bias,
                       double* z, std::size_t n, std::size_t in,
                       std::size_t out);
  // dx[t,:] = W^T dz[t,:]. dz is n*out, dx is n*in (overwritten).
  void (*affine_backprop_batch)(const double* dz, const double* w, double* dx,
                                std::size_t n, std::size_t in,
                                std::size_t out);
  // gw[o,j] += sum_t dz[t,o]*x[t,j]; gb[o] += sum_t dz[t,o] (accumulating)
  void (*grad_accum_batch)(const double* dz, const double* x, double* gw,
                           double* gb, std::size_t n, std::size_t in,
                           std::size_t out);

  // sum_i k[i]*log(lam[i]) - lam[i]. Caller handles the log-factorial term.
  double (*poisson_ll)(const double* lam, const double* k, std::size_t n);
  // d[i] = (k[i]/lam[i] - 1) * sig[i]
  void (*poisson_delta)(const double* lam, const double* k, const double* sig,
                        double* d, std::size_t n);
  // sum_i (lam[i] - k[i])^2
  double (*sse)(const double* lam, const double* k, std::size_t n);
  // d[i] = -2 * (lam[i] - k[i]) * sig[i]
  void (*gaussian_delta)(const double* lam, const double* k, const double* sig,
                         double* d, std::size_t n);
};

enum class Backend { automatic, scalar, avx2 };

// Active table. Defaults to the best supported backend; the NFIPP_KERNELS
// environment variable ("scalar" or "avx2") or set_backend() override it.
const Ops& ops();
const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when this build or CPU lacks AVX2+FMA

// Throws ArgumentError when the requested backend is unavailable.
void set_backend(Backend backend);
const char* active_backend_name();
bool cpu_has_avx2();

}  // namespace nfipp::kern
