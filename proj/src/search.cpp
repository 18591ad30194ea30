#include "tomoctx/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tomoctx::search {

namespace {

/// Reflect a coordinate back into [lo, hi].
double reflect(double x, double lo, double hi) {
    if (hi <= lo) return lo;
    double span = hi - lo;
    double t = std::fmod(x - lo, 2.0 * span);
    if (t < 0.0) t += 2.0 * span;
    return t <= span ? lo + t : hi - (t - span);
}

}  // namespace

SearchResult maximize(const std::function<double(const std::vector<double>&)>& objective,
                      const Box& box, const SearchConfig& cfg) {
    const size_t dim = box.lo.size();
    if (dim == 0 || box.hi.size() != dim)
        throw std::invalid_argument("maximize: invalid box");
    if (cfg.grid_resolution < 2 || cfg.tol <= 0.0)
        throw std::invalid_argument("maximize: invalid config");

    auto eval = [&](const std::vector<double>& x) {
        double v = objective(x);
        if (std::isnan(v))
            throw std::runtime_error("maximize: objective returned NaN at x[0]=" +
                                     std::to_string(x[0]));
        return v;
    };

    SearchResult res;

    // Coarse scan: grid_resolution points per axis, endpoints included.
    const int n = cfg.grid_resolution;
    std::vector<int> idx(dim, 0);
    std::vector<double> x(dim);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> best_x(dim);
    bool done = false;
    while (!done) {
        for (size_t d = 0; d < dim; ++d)
            x[d] = box.lo[d] + (box.hi[d] - box.lo[d]) * idx[d] / double(n - 1);
        double v = eval(x);
        res.scan.push_back({x, v});
        if (v > best) {
            best = v;
            best_x = x;
        }
        size_t d = 0;
        while (d < dim && ++idx[d] == n) idx[d++] = 0;
        done = (d == dim);
    }

    // Nelder-Mead refinement from the best grid point.
    const size_t nv = dim + 1;
    std::vector<std::vector<double>> simplex(nv, best_x);
    for (size_t d = 0; d < dim; ++d) {
        double step = (box.hi[d] - box.lo[d]) / double(2 * (n - 1));
        simplex[d + 1][d] = reflect(best_x[d] + step, box.lo[d], box.hi[d]);
    }
    std::vector<double> fv(nv);
    for (size_t i = 0; i < nv; ++i) fv[i] = eval(simplex[i]);

    auto clamp_point = [&](std::vector<double>& p) {
        for (size_t d = 0; d < dim; ++d) p[d] = reflect(p[d], box.lo[d], box.hi[d]);
    };

    for (int iter = 0; iter < cfg.refine_iters; ++iter) {
        std::vector<size_t> order(nv);
        for (size_t i = 0; i < nv; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return fv[a] > fv[b]; });
        size_t ibest = order[0], iworst = order[nv - 1], isecond = order[nv - 2];
        if (fv[ibest] - fv[iworst] < cfg.tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (size_t i = 0; i < nv; ++i) {
            if (i == iworst) continue;
            for (size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
        }
        for (size_t d = 0; d < dim; ++d) centroid[d] /= double(dim);

        auto along = [&](double t) {
            std::vector<double> p(dim);
            for (size_t d = 0; d < dim; ++d)
                p[d] = centroid[d] + t * (centroid[d] - simplex[iworst][d]);
            clamp_point(p);
            return p;
        };

        auto xr = along(1.0);
        double fr = eval(xr);
        if (fr > fv[ibest]) {
            auto xe = along(2.0);
            double fe = eval(xe);
            if (fe > fr) {
                simplex[iworst] = xe;
                fv[iworst] = fe;
            } else {
                simplex[iworst] = xr;
                fv[iworst] = fr;
            }
        } else if (fr > fv[isecond]) {
            simplex[iworst] = xr;
            fv[iworst] = fr;
        } else {
            auto xc = along(-0.5);
            double fc = eval(xc);
            if (fc > fv[iworst]) {
                simplex[iworst] = xc;
                fv[iworst] = fc;
            } else {
                for (size_t i = 0; i < nv; ++i) {
                    if (i == ibest) continue;
                    for (size_t d = 0; d < dim; ++d)
                        simplex[i][d] = simplex[ibest][d] +
                                        0.5 * (simplex[i][d] - simplex[ibest][d]);
                    fv[i] = eval(simplex[i]);
                }
            }
        }
    }

    size_t winner = 0;
    for (size_t i = 1; i < nv; ++i)
        if (fv[i] > fv[winner]) winner = i;
    if (fv[winner] >= best) {
        res.argmax = simplex[winner];
        res.value = fv[winner];
    } else {
        res.argmax = best_x;
        res.value = best;
    }
    return res;
}

}  // namespace tomoctx::search
