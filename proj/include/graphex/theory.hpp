#ifndef GRAPHEX_THEORY_HPP
#define GRAPHEX_THEORY_HPP

#include <vector>

#include "graphex/bipartite_models.hpp"
#include "graphex/models.hpp"

namespace graphex {

inline constexpr double kDefaultRelTol = 1e-8;

/// E[N_p] at `size`: p*size * int (1 - exp(-p*size*mu)) rho. Throws
/// NumericalError when the quadrature does not converge.
double expected_N_p(const ModelSpec& model, double p, double size, double rel_tol = kDefaultRelTol);

/// int (1 - exp(-c mu(x))) rho(dx).
double vertex_integral(const ModelSpec& model, double c, double rel_tol = kDefaultRelTol);

/// log(en1/enp)/(-log p) - 1 - sigma.
double bias_from_expectations(double en1, double enp, double p, double sigma);

/// bias_from_expectations applied to expected_N_p at p and 1.
double bias_b(const ModelSpec& model, double p, double size, double rel_tol = kDefaultRelTol);

/// Leading-order E[N_1] for sigma in [0,1): size^{1+sigma} * l * Gamma(1-sigma).
/// Throws DomainError for models without a constant slowly-varying limit.
double asymptotic_N_1(const ModelSpec& model, double size);

struct BiasDiagnostics {
    std::vector<double> sizes;
    std::vector<double> gamma_values;
    std::vector<double> bias_values;
    double slope = 0.0;
};

/// |I(p a)/(p^sigma I(a)) - 1| and b per size, plus the OLS slope of
/// log Gamma on log size over the top half of the grid.
BiasDiagnostics gamma_diagnostic(const ModelSpec& model, double p, const std::vector<double>& sizes,
                                 double rel_tol = kDefaultRelTol);

/// OLS slope of log(ys) on log(xs) over the last ceil(n/2) points.
double top_half_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// (s/2) int (1 - exp(-(alpha/2) mu_v)) rho.
double expected_M(const BipartiteModelSpec& model, double s, double alpha, double rel_tol = kDefaultRelTol);

/// s alpha^k / k! int mu_v^k exp(-alpha mu_v) rho, k >= 1.
double expected_Dk(const BipartiteModelSpec& model, double s, double alpha, unsigned k,
                   double rel_tol = kDefaultRelTol);

/// s int (1 - exp(-alpha mu_v)) rho: expected non-isolated left vertices.
double expected_left_vertices(const BipartiteModelSpec& model, double s, double alpha,
                              double rel_tol = kDefaultRelTol);

}  // namespace graphex

#endif  // GRAPHEX_THEORY_HPP
