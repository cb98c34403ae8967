#include "vcw/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vcw/error.hpp"

namespace vcw {

Grid1D::Grid1D(double length, std::size_t cells) : length_(length), cells_(cells), dx_(0.0) {
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw Error(ErrorCode::InvalidGrid, "domain length must be positive");
    }
    if (cells < 8) {
        throw Error(ErrorCode::InvalidGrid, "need at least 8 cells, got " + std::to_string(cells));
    }
    dx_ = length / static_cast<double>(cells);
}

bool Field::all_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

void require_aligned(const Grid1D& grid, const Field& f) {
    if (f.size() != grid.nodes()) {
        throw Error(ErrorCode::MisalignedField, "field has " + std::to_string(f.size()) +
                                                    " values, grid has " +
                                                    std::to_string(grid.nodes()) + " nodes");
    }
}

Field diff_first(const Grid1D& grid, const Field& f, DiffMode mode) {
    require_aligned(grid, f);
    const std::size_t n = grid.cells();
    const double dx = grid.dx();
    Field out(grid);

    switch (mode) {
        case DiffMode::central:
            for (std::size_t i = 1; i < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
            out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
            out[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * dx);
            break;
        case DiffMode::upwind_positive_speed:
            for (std::size_t i = 1; i <= n; ++i) out[i] = (f[i] - f[i - 1]) / dx;
            out[0] = (f[1] - f[0]) / dx;
            break;
        case DiffMode::one_sided:
            for (std::size_t i = 1; i < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
            out[0] = (f[1] - f[0]) / dx;
            out[n] = (f[n] - f[n - 1]) / dx;
            break;
    }
    return out;
}

Field diff_second(const Grid1D& grid, const Field& f) {
    require_aligned(grid, f);
    const std::size_t n = grid.cells();
    const double inv_dx2 = 1.0 / (grid.dx() * grid.dx());
    Field out(grid);
    for (std::size_t i = 1; i < n; ++i) out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * inv_dx2;
    out[0] = out[1];
    out[n] = out[n - 1];
    return out;
}

double integrate(const Grid1D& grid, std::span<const double> f) {
    if (f.size() != grid.nodes()) {
        throw Error(ErrorCode::MisalignedField, "integrand does not match the grid");
    }
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
    return sum * grid.dx();
}

double integrate(const Grid1D& grid, const Field& f) { return integrate(grid, f.span()); }

namespace {

template <class Fn>
double trapezoid_of(const Grid1D& grid, const Field& f, Fn&& g) {
    const std::size_t n = grid.cells();
    double sum = 0.5 * (g(f[0], 0) + g(f[n], n));
    for (std::size_t i = 1; i < n; ++i) sum += g(f[i], i);
    return sum * grid.dx();
}

}  // namespace

double integrate_norm(const Grid1D& grid, const Field& f, const NormKind& kind) {
    require_aligned(grid, f);
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, norm::L1>) {
                return trapezoid_of(grid, f, [](double v, std::size_t) { return std::abs(v); });
            } else if constexpr (std::is_same_v<K, norm::L2sq>) {
                return trapezoid_of(grid, f, [](double v, std::size_t) { return v * v; });
            } else if constexpr (std::is_same_v<K, norm::Lp>) {
                if (!(k.p >= 1.0)) {
                    throw Error(ErrorCode::InvalidExponent, "Lp norm needs p >= 1");
                }
                const double p = k.p;
                const double integral = trapezoid_of(
                    grid, f, [p](double v, std::size_t) { return std::pow(std::abs(v), p); });
                return std::pow(integral, 1.0 / p);
            } else if constexpr (std::is_same_v<K, norm::Sup>) {
                return sup_abs(f);
            } else {
                require_aligned(grid, k.weight);
                const Field& w = k.weight;
                return trapezoid_of(grid, f, [&w](double v, std::size_t i) { return v * v * w[i]; });
            }
        },
        kind);
}

double l1(const Grid1D& grid, const Field& f) { return integrate_norm(grid, f, norm::L1{}); }

double l2sq(const Grid1D& grid, const Field& f) { return integrate_norm(grid, f, norm::L2sq{}); }

double sup_abs(const Field& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace vcw
