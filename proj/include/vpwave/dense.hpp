#pragma once

#include <Eigen/Dense>

#include "vpwave/vpkernel.hpp"

namespace vpwave::dense {

/// A_{h,k} = Phi_{n,h}(y_k^n), n x 2n.
Eigen::MatrixXd scaling_at_y(const VpParams& params);

/// (G_n)_{r,s} = 3 (pi/n) sum_i nu_i p_i(x_r) p_i(x_s).
Eigen::MatrixXd gram_matrix(const VpParams& params);

/// (G_n^{-1})_{r,s} = (1/3) (pi/n) sum_i p_i(x_r) p_i(x_s) / nu_i.
Eigen::MatrixXd gram_inverse(const VpParams& params);

/// Two-scale block matrix [[I, A], [-A^T, I]], 3n x 3n.
Eigen::MatrixXd two_scale_matrix(const VpParams& params);

/// Its closed-form inverse [[G^-1, -G^-1 A], [A^T G^-1, I - A^T G^-1 A]].
Eigen::MatrixXd two_scale_inverse(const VpParams& params);

/// <basis_n, Phi^perp_{3n,j}> / nu_{3n,j} by quadrature, 3n x 3n. Rows are
/// Phi^perp_{n,0..n-1} followed by psi^perp_{n,n..3n-1}.
Eigen::MatrixXd ortho_two_scale_by_quadrature(const VpParams& params);

}  // namespace vpwave::dense
