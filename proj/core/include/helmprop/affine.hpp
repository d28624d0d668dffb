#pragma once

#include <Eigen/Dense>
#include <string>

#include "helmprop/types.hpp"

namespace helmprop {

/// Affine transformation of the ambient space R^(1+d):
///   X |-> G X + gamma,  G in GL(1+d).
/// Axis 0 is the propagation axis; axes 1..d span the hologram plane.
struct AffineMap {
  Eigen::MatrixXd linear;       // (1+d) x (1+d)
  Eigen::VectorXd translation;  // 1+d

  AffineMap() = default;
  AffineMap(Eigen::MatrixXd G, Eigen::VectorXd gamma);

  static AffineMap identity(int d);
  /// Rotation of angle `radians` in the (x0, x_axis) coordinate plane.
  static AffineMap rotation(int d, double radians, int axis = 1);
  static AffineMap translate(Eigen::VectorXd gamma);

  int dim() const { return static_cast<int>(translation.size()) - 1; }
  bool is_identity(double tol = 0.0) const;

  Eigen::VectorXd apply(const Eigen::VectorXd& X) const {
    return linear * X + translation;
  }

  /// Composition: (a.then(b))(X) = b(a(X)).
  AffineMap then(const AffineMap& next) const;
};

/// Parses the textual affine-map spec. Pieces separated by ';' compose
/// left-to-right (the leftmost piece is applied first):
///   rot:<degrees>          rotation in the (x0,x1) plane (any d)
///   rot2:<degrees>         rotation in the (x0,x2) plane (d = 2 only)
///   mat:<(1+d)^2 entries>  row-major comma-separated linear part
///   trans:<1+d entries>    translation vector
/// `dim` fixes d; pass 0 to infer it from mat:/trans: pieces.
AffineMap parse_affine(const std::string& spec, int dim = 0);

}  // namespace helmprop
