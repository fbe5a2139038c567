// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace vqe {

struct LadderOp {
  int mode = 0;
  bool dagger = false;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
  friend auto operator<=>(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp create(int mode) { return {mode, true}; }
inline LadderOp annihilate(int mode) { return {mode, false}; }

/// coefficient * ops[0] ops[1] ... (leftmost operator acts last).
struct FermionTerm {
  double coefficient = 0.0;
  std::vector<LadderOp> ops;
};

/**
 * @brief Real-weighted sum of products of fermionic ladder operators.
 *
 * An empty product is the identity.
 */
class FermionOperator {
 public:
  explicit FermionOperator(int n_modes = 1);

  int n_modes() const noexcept { return n_modes_; }
  const std::vector<FermionTerm>& terms() const noexcept { return terms_; }

  void add(double coefficient, std::vector<LadderOp> ops);
  FermionOperator& operator+=(const FermionOperator& other);

  /// Reverse each product and flip every dagger.
  FermionOperator adjoint() const;

  /**
   * @brief Canonical form: daggers left of annihilators, each group in
   * descending mode order, like products merged, |c| <= tol dropped.
   */
  FermionOperator normal_ordered(double tol = 1e-12) const;

  std::string to_string() const;

 private:
  int n_modes_;
  std::vector<FermionTerm> terms_;
};

/// True when both operators have identical normal-ordered forms within tol.
bool equivalent(const FermionOperator& a, const FermionOperator& b, double tol = 1e-10);

}  // namespace vqe
