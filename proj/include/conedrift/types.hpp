// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace conedrift {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using VectorRef = Eigen::Ref<const Eigen::VectorXd>;
using MatrixRef = Eigen::Ref<const Eigen::MatrixXd>;

/// Stable failure codes so callers (notably the CLI) can map domain
/// failures to exit codes without string matching.
enum class Fault {
  stabilizer,     ///< nontrivial stabilizer: no simplicial decomposition
  not_recurrent,  ///< gauge not irreducible on its effective space
  guard,          ///< desk-scale enumeration/dimension guard tripped
  degenerate,     ///< singular system or zero-volume simplex
};

class DomainError : public std::runtime_error {
 public:
  DomainError(Fault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  Fault fault() const { return fault_; }

 private:
  Fault fault_;
};

}  // namespace conedrift
