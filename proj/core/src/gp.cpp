// SPDX-License-Identifier: Apache-2.0
#include "boir/gp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "boir/errors.hpp"

namespace boir {

double kernel_se(const std::vector<double>& a, const std::vector<double>& b,
                 double signal_var, double lengthscale) {
    double d2 = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        d2 += d * d;
    }
    return signal_var * std::exp(-d2 / (2 * lengthscale * lengthscale));
}

KernelParams default_kernel_params(const std::vector<double>& ys, KernelParams base) {
    KernelParams p = base;
    double mean = 0;
    for (double y : ys) mean += y;
    if (!ys.empty()) mean /= static_cast<double>(ys.size());
    double var = 0;
    for (double y : ys) var += (y - mean) * (y - mean);
    if (!ys.empty()) var /= static_cast<double>(ys.size());
    p.signal_var = std::max(var, 1e-4);
    return p;
}

struct GpModel::Impl {
    std::vector<std::vector<double>> xs;
    Eigen::MatrixXd chol_lower;
    Eigen::VectorXd alpha;     // (K + noise I)^-1 (y - mean)
    Eigen::VectorXd centered;  // y - mean
    double mean = 0;
};

GpModel::GpModel() : impl_(new Impl) {}
GpModel::GpModel(GpModel&&) noexcept = default;
GpModel& GpModel::operator=(GpModel&&) noexcept = default;
GpModel::~GpModel() = default;

std::size_t GpModel::size() const { return impl_->xs.size(); }

GpModel GpModel::fit(const std::vector<std::vector<double>>& xs,
                     const std::vector<double>& ys, KernelParams params) {
    GpModel model;
    model.params_ = params;
    auto& impl = *model.impl_;
    impl.xs = xs;
    const auto n = static_cast<Eigen::Index>(xs.size());
    if (n == 0) return model;

    double mean = 0;
    for (double y : ys) mean += y;
    mean /= static_cast<double>(ys.size());
    impl.mean = mean;
    impl.centered.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) impl.centered[i] = ys[i] - mean;

    Eigen::MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double v = kernel_se(xs[i], xs[j], params.signal_var, params.lengthscale);
            k(i, j) = v;
            k(j, i) = v;
        }

    const double jitters[] = {0.0, 1e-10, 1e-8, 1e-6, 1e-4};
    for (double jitter : jitters) {
        Eigen::MatrixXd a = k;
        a.diagonal().array() += params.noise_var + jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(a);
        if (llt.info() == Eigen::Success) {
            impl.chol_lower = llt.matrixL();
            impl.alpha = llt.solve(impl.centered);
            return model;
        }
    }
    throw SingularKernel("kernel matrix not positive definite after jitter escalation");
}

GpModel::Posterior GpModel::posterior(const std::vector<double>& x) const {
    const auto& impl = *impl_;
    const auto n = static_cast<Eigen::Index>(impl.xs.size());
    if (n == 0) return {impl.mean, params_.signal_var};

    Eigen::VectorXd kstar(n);
    for (Eigen::Index i = 0; i < n; ++i)
        kstar[i] = kernel_se(impl.xs[i], x, params_.signal_var, params_.lengthscale);
    const double mean = impl.mean + kstar.dot(impl.alpha);
    Eigen::VectorXd v = impl.chol_lower.triangularView<Eigen::Lower>().solve(kstar);
    const double var = params_.signal_var - v.squaredNorm();
    return {mean, std::max(var, 0.0)};
}

double GpModel::log_marginal_likelihood() const {
    const auto& impl = *impl_;
    const auto n = static_cast<Eigen::Index>(impl.xs.size());
    if (n == 0) return 0;
    double log_det_half = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        log_det_half += std::log(impl.chol_lower(i, i));
    return -0.5 * impl.centered.dot(impl.alpha) - log_det_half -
           0.5 * static_cast<double>(n) * std::log(2 * std::numbers::pi);
}

KernelParams ml2_grid_search(const std::vector<std::vector<double>>& xs,
                             const std::vector<double>& ys) {
    KernelParams best = default_kernel_params(ys);
    double best_lml = -std::numeric_limits<double>::infinity();
    for (int li = 1; li <= 20; ++li) {
        for (int ni = -6; ni <= -2; ++ni) {
            KernelParams p = default_kernel_params(ys);
            p.lengthscale = 0.1 * li;
            p.noise_var = std::pow(10.0, ni);
            try {
                GpModel model = GpModel::fit(xs, ys, p);
                const double lml = model.log_marginal_likelihood();
                if (lml > best_lml) {
                    best_lml = lml;
                    best = p;
                }
            } catch (const SingularKernel&) {
            }
        }
    }
    return best;
}

double expected_improvement(double mean, double var, double f_best) {
    const double improvement = mean - f_best;
    if (var <= 0) return std::max(improvement, 0.0);
    const double sigma = std::sqrt(var);
    const double z = improvement / sigma;
    const double cdf = 0.5 * std::erfc(-z / std::sqrt(2.0));
    const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2 * std::numbers::pi);
    return std::max(improvement * cdf + sigma * pdf, 0.0);
}

}  // namespace boir
