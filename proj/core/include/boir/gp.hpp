// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

namespace boir {

struct KernelParams {
    double signal_var = 1.0;
    double lengthscale = 0.5;
    double noise_var = 1e-4;
};

/// Squared-exponential covariance: signal_var * exp(-||a-b||^2 / (2 l^2)).
double kernel_se(const std::vector<double>& a, const std::vector<double>& b,
                 double signal_var, double lengthscale);

/// signal_var = Var(y) floored at 1e-4; lengthscale and noise_var from
/// `base` (their defaults otherwise).
KernelParams default_kernel_params(const std::vector<double>& ys,
                                   KernelParams base = {});

/// Gaussian-process regression with a squared-exponential kernel and a
/// constant prior mean set to the observation mean. The Gram matrix is
/// Cholesky-factorized once at fit time; a failed factorization escalates
/// diagonal jitter up to 1e-4 before giving up (SingularKernel).
class GpModel {
public:
    GpModel();
    GpModel(GpModel&&) noexcept;
    GpModel& operator=(GpModel&&) noexcept;
    ~GpModel();

    /// Fits to (xs, ys). With no observations the model is the prior:
    /// mean 0, variance signal_var everywhere.
    static GpModel fit(const std::vector<std::vector<double>>& xs,
                       const std::vector<double>& ys, KernelParams params);

    struct Posterior {
        double mean;
        double var;  // clamped at 0
    };
    Posterior posterior(const std::vector<double>& x) const;

    double log_marginal_likelihood() const;
    const KernelParams& params() const { return params_; }
    std::size_t size() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    KernelParams params_;
};

/// Grid search over lengthscale {0.1, 0.2, ..., 2.0} x noise_var
/// {1e-6, 1e-5, 1e-4, 1e-3, 1e-2} maximizing the log marginal likelihood;
/// signal_var stays at Var(y). Ties keep the first maximum; combinations
/// whose factorization fails are skipped.
KernelParams ml2_grid_search(const std::vector<std::vector<double>>& xs,
                             const std::vector<double>& ys);

/// Closed-form Expected Improvement for maximization. At var = 0 this is
/// max(mean - f_best, 0).
double expected_improvement(double mean, double var, double f_best);

}  // namespace boir
