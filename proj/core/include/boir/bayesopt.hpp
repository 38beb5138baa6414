// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "boir/errors.hpp"
#include "boir/gp.hpp"
#include "boir/rng.hpp"

namespace boir {

template <typename Point>
struct Obs {
    std::vector<double> x;
    Point point;
    double y;
};

template <typename Point>
struct BoState {
    std::vector<Obs<Point>> history;
    std::size_t best_index = 0;

    const Obs<Point>& best() const { return history[best_index]; }
};

struct BoOptions {
    std::size_t budget = 50;
    std::size_t init = 10;
    std::size_t candidates = 2000;
    std::uint64_t seed = 42;
    /// ML-II kernel refit period in evaluations; 0 keeps the seed kernel.
    std::size_t refit_every = 5;
    KernelParams kernel;
};

/// Draws n_candidates points and returns the Expected-Improvement argmax
/// (ties keep the first). `sample_point(rng)` must yield a valid point and
/// `encode_point(point)` its surrogate coordinates.
template <typename Point, typename Sampler, typename Encoder>
Point propose_next(const GpModel& model, Sampler&& sample_point,
                   Encoder&& encode_point, double f_best,
                   std::size_t n_candidates, Rng& rng) {
    Point best_point = sample_point(rng);
    auto post = model.posterior(encode_point(best_point));
    double best_ei = expected_improvement(post.mean, post.var, f_best);
    for (std::size_t i = 1; i < n_candidates; ++i) {
        Point candidate = sample_point(rng);
        post = model.posterior(encode_point(candidate));
        const double ei = expected_improvement(post.mean, post.var, f_best);
        if (ei > best_ei) {
            best_ei = ei;
            best_point = std::move(candidate);
        }
    }
    return best_point;
}

/// Sequential surrogate-driven optimization: an initial random design of
/// opt.init points, then fit-propose-evaluate until opt.budget evaluations
/// exist. Every evaluation draws from its own seed stream Rng(seed, i), so a
/// run resumed from persisted history continues exactly where the
/// uninterrupted run would have gone. `on_eval(index, obs, best_y)` fires
/// after each fresh evaluation, before the next proposal.
template <typename Point, typename Sampler, typename Encoder, typename Objective,
          typename OnEval>
BoState<Point> run_bo_loop(Sampler&& sample_point, Encoder&& encode_point,
                           Objective&& objective, const BoOptions& opt,
                           OnEval&& on_eval, std::vector<Obs<Point>> preload = {}) {
    if (opt.init < 1 || opt.budget < opt.init)
        throw UserError("budget must be >= init >= 1");
    if (opt.candidates < 1) throw UserError("candidates must be >= 1");

    BoState<Point> state;
    state.history = std::move(preload);
    for (std::size_t i = 1; i < state.history.size(); ++i)
        if (state.history[i].y > state.history[state.best_index].y) state.best_index = i;

    auto evaluate = [&](Point point) {
        Obs<Point> obs{encode_point(point), std::move(point), 0.0};
        obs.y = objective(obs.point);
        state.history.push_back(std::move(obs));
        const std::size_t i = state.history.size() - 1;
        if (state.history[i].y > state.history[state.best_index].y) state.best_index = i;
        on_eval(i, state.history[i], state.history[state.best_index].y);
    };

    while (state.history.size() < opt.init && state.history.size() < opt.budget) {
        Rng rng(opt.seed, state.history.size());
        evaluate(sample_point(rng));
    }

    while (state.history.size() < opt.budget) {
        const std::size_t n = state.history.size();
        std::vector<std::vector<double>> xs;
        std::vector<double> ys;
        xs.reserve(n);
        ys.reserve(n);
        for (const auto& obs : state.history) {
            xs.push_back(obs.x);
            ys.push_back(obs.y);
        }
        // The kernel refit at the most recent period boundary is recomputed
        // from the history prefix so that a resumed run sees exactly the
        // state the uninterrupted run had.
        KernelParams kernel = opt.kernel;
        if (opt.refit_every > 0) {
            const std::size_t boundary =
                opt.init + (n - opt.init) / opt.refit_every * opt.refit_every;
            kernel = ml2_grid_search(
                {xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(boundary)},
                {ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(boundary)});
        }
        GpModel model = GpModel::fit(xs, ys, default_kernel_params(ys, kernel));
        Rng rng(opt.seed, n);
        evaluate(propose_next<Point>(model, sample_point, encode_point,
                                     state.history[state.best_index].y,
                                     opt.candidates, rng));
    }
    return state;
}

}  // namespace boir
