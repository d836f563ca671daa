#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>

#include "fhn/errors.hpp"

namespace fhn {

// Parameter triple (a, gamma, epsilon) of the two-component excitable system
//   u_t = u_xx + u(u+a)(1-u-a) - w
//   w_t = eps (u - gamma w)
// plus an optional frame speed override used when a module needs a comoving
// frame different from the computed linear spreading speed.
struct ModelParams {
    double a;
    double gamma;
    double epsilon;
    std::optional<double> c;  // frame speed override

    ModelParams(double a_, double gamma_, double epsilon_,
                std::optional<double> c_ = std::nullopt)
        : a(a_), gamma(gamma_), epsilon(epsilon_), c(c_) {
        if (!(a > 0.0 && a < 0.5))
            throw ConfigError("ModelParams: require 0 < a < 1/2, got a=" + std::to_string(a));
        if (!(gamma > 0.0 && gamma < 4.0))
            throw ConfigError("ModelParams: require 0 < gamma < 4, got gamma=" + std::to_string(gamma));
        if (epsilon < 0.0)
            throw ConfigError("ModelParams: require epsilon >= 0");
    }

    // Existence range of the pattern-forming fronts; values of `a` outside it
    // are allowed for exploratory scans and merely clear this flag.
    bool oscillatory_regime() const {
        const double lo = (3.0 - std::sqrt(6.0)) / 6.0;
        return a > lo && a < 0.5;
    }
};

using StateVec = Eigen::Vector2d;

// Kinetics F(u) and its Jacobian. The cubic is u(u+a)(1-u-a).
template <typename Scalar>
Scalar cubic(Scalar u, double a) {
    return u * (u + a) * (Scalar(1) - u - a);
}

template <typename Scalar>
Scalar cubic_deriv(Scalar u, double a) {
    return (u + a) * (Scalar(1) - u - a) + u * (Scalar(1) - u - a) - u * (u + a);
}

inline StateVec reaction(const StateVec& s, const ModelParams& p) {
    return {cubic(s[0], p.a) - s[1], p.epsilon * (s[0] - p.gamma * s[1])};
}

inline Eigen::Matrix2d jacobian(const StateVec& s, const ModelParams& p) {
    Eigen::Matrix2d J;
    J << cubic_deriv(s[0], p.a), -1.0, p.epsilon, -p.epsilon * p.gamma;
    return J;
}

// F'(0): entries (1,1)=a(1-a), (1,2)=-1, (2,1)=eps, (2,2)=-eps*gamma.
inline Eigen::Matrix2d jacobian_origin(const ModelParams& p) {
    return jacobian(StateVec::Zero(), p);
}

// Quintic smoothstep, C^2 monotone 0->1 on [0,1].
inline double smoothstep5(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

// Spatial weights. `exp_right` is the front weight: identically 1 for xi<=0,
// e^{eta xi} for xi>=1, with a quintic blend in the exponent in between.
// `algebraic` is |xi|^{r-} / |xi|^{r+} on the two tails with a smooth middle.
struct WeightSpec {
    enum class Kind { exp_right, algebraic };
    Kind kind = Kind::exp_right;
    double eta = 0.0;      // rate for exp_right
    double r_minus = 0.0;  // tail exponents for algebraic
    double r_plus = 0.0;
    double origin = 0.0;   // translation of the weight profile

    static WeightSpec exponential(double eta_lin, double origin = 0.0) {
        WeightSpec ws;
        ws.kind = Kind::exp_right;
        ws.eta = eta_lin;
        ws.origin = origin;
        return ws;
    }
    static WeightSpec algebraic(double rm, double rp) {
        WeightSpec ws;
        ws.kind = Kind::algebraic;
        ws.r_minus = rm;
        ws.r_plus = rp;
        return ws;
    }
};

inline double weight_eval(const WeightSpec& ws, double xi_abs) {
    const double xi = xi_abs - ws.origin;
    if (ws.kind == WeightSpec::Kind::exp_right) {
        if (xi <= 0.0) return 1.0;
        if (xi >= 1.0) return std::exp(ws.eta * xi);
        return std::exp(ws.eta * xi * smoothstep5(xi));
    }
    // algebraic: |xi|^{r-} on xi<=-1, |xi|^{r+} on xi>=1, blended through 1
    // in the middle (the weight equals 1 at |xi|<=... the blend keeps it C^1).
    if (xi <= -1.0) return std::pow(-xi, ws.r_minus);
    if (xi >= 1.0) return std::pow(xi, ws.r_plus);
    if (xi >= 0.0) return std::pow(1.0 + xi * xi, 0.5 * ws.r_plus * smoothstep5(xi));
    return std::pow(1.0 + xi * xi, 0.5 * ws.r_minus * smoothstep5(-xi));
}

}  // namespace fhn
