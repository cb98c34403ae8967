#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace vcw {

/// Uniform nodes x_i = i*dx, i = 0..n, on the truncated half-line [0, L].
class Grid1D {
public:
    /// Throws Error{InvalidGrid} unless L > 0 and n >= 8.
    Grid1D(double length, std::size_t cells);

    double length() const { return length_; }
    std::size_t cells() const { return cells_; }
    std::size_t nodes() const { return cells_ + 1; }
    double dx() const { return dx_; }
    double x(std::size_t i) const { return static_cast<double>(i) * dx_; }

private:
    double length_;
    std::size_t cells_;
    double dx_;
};

/// Nodal values on a Grid1D.
class Field {
public:
    Field() = default;
    explicit Field(std::size_t size, double value = 0.0) : values_(size, value) {}
    explicit Field(std::vector<double> values) : values_(std::move(values)) {}
    explicit Field(const Grid1D& grid, double value = 0.0) : values_(grid.nodes(), value) {}

    std::size_t size() const { return values_.size(); }
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }
    double front() const { return values_.front(); }
    double back() const { return values_.back(); }

    std::span<double> span() { return values_; }
    std::span<const double> span() const { return values_; }
    const std::vector<double>& values() const { return values_; }

    auto begin() { return values_.begin(); }
    auto end() { return values_.end(); }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool all_finite() const;

private:
    std::vector<double> values_;
};

/// Samples f at every node.
template <class Fn>
Field sample(const Grid1D& grid, Fn&& f) {
    Field out(grid);
    for (std::size_t i = 0; i < grid.nodes(); ++i) out[i] = f(grid.x(i));
    return out;
}

/// Throws Error{MisalignedField} when f does not have grid.nodes() entries.
void require_aligned(const Grid1D& grid, const Field& f);

enum class DiffMode {
    central,                ///< second order everywhere, one-sided 3-point stencils at the ends
    upwind_positive_speed,  ///< backward difference, forward at node 0
    one_sided,              ///< central interior, first-order forward/backward at the ends
};

Field diff_first(const Grid1D& grid, const Field& f, DiffMode mode = DiffMode::central);

/// Three-point second difference; boundary nodes copy their interior neighbour.
Field diff_second(const Grid1D& grid, const Field& f);

/// Slope at interior node i (1 <= i < n) for a rightward drift: the
/// second-order upwind stencil (3f_i - 4f_{i-1} + f_{i-2})/(2dx), central at i = 1.
inline double drift_slope(const Field& f, std::size_t i, double dx) {
    if (i < 2) return (f[i + 1] - f[i - 1]) / (2.0 * dx);
    return (3.0 * f[i] - 4.0 * f[i - 1] + f[i - 2]) / (2.0 * dx);
}

namespace norm {
struct L1 {};
struct L2sq {};
struct Lp {
    double p;
};
struct Sup {};
struct WeightedL2sq {
    const Field& weight;
};
}  // namespace norm

using NormKind = std::variant<norm::L1, norm::L2sq, norm::Lp, norm::Sup, norm::WeightedL2sq>;

/// Composite trapezoid quadrature of the chosen norm over [0, L]. Lp returns the
/// p-th root; L2sq and WeightedL2sq return squared quantities.
double integrate_norm(const Grid1D& grid, const Field& f, const NormKind& kind);

/// Plain trapezoid integral of f over [0, L].
double integrate(const Grid1D& grid, const Field& f);
double integrate(const Grid1D& grid, std::span<const double> f);

double l1(const Grid1D& grid, const Field& f);
double l2sq(const Grid1D& grid, const Field& f);
double sup_abs(const Field& f);

}  // namespace vcw
