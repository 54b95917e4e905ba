#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>

namespace mixedlip {

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Levenberg-Marquardt with a central-difference Jacobian; returns the final max-norm residual
inline double levenberg_marquardt(const ResidualFn& F, Eigen::VectorXd& x, int max_iter = 80, double tol = 1e-14) {
    Eigen::VectorXd r = F(x);
    double cost = r.squaredNorm();
    double lambda = 1e-3;
    const int n = static_cast<int>(x.size());
    for (int it = 0; it < max_iter && r.lpNorm<Eigen::Infinity>() > tol; ++it) {
        Eigen::MatrixXd J(r.size(), n);
        for (int j = 0; j < n; ++j) {
            double h = 1e-7 * std::max(1.0, std::fabs(x[j]));
            Eigen::VectorXd xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            J.col(j) = (F(xp) - F(xm)) / (2 * h);
        }
        Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd g = J.transpose() * r;
        bool improved = false;
        for (int tries = 0; tries < 12; ++tries) {
            Eigen::MatrixXd M = A;
            M.diagonal().array() += lambda * (1.0 + A.diagonal().array());
            Eigen::VectorXd step = M.ldlt().solve(-g);
            Eigen::VectorXd xn = x + step;
            Eigen::VectorXd rn = F(xn);
            double cn = rn.squaredNorm();
            if (std::isfinite(cn) && cn < cost) {
                x = xn;
                r = rn;
                cost = cn;
                lambda = std::max(lambda * 0.2, 1e-12);
                improved = true;
                break;
            }
            lambda *= 8;
        }
        if (!improved) break;
    }
    return r.lpNorm<Eigen::Infinity>();
}

}  // namespace mixedlip
