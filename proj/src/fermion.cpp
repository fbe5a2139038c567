// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/fermion.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "vqe/error.hpp"

namespace vqe {
namespace {

// Position of `a` relative to `b` in canonical order: daggers first, then
// descending mode.
bool canonical_before(const LadderOp& a, const LadderOp& b) {
  if (a.dagger != b.dagger) return a.dagger;
  return a.mode > b.mode;
}

void normal_order_into(double coefficient, std::vector<LadderOp> ops,
                       std::map<std::vector<LadderOp>, double>& out) {
  std::vector<std::pair<double, std::vector<LadderOp>>> stack;
  stack.emplace_back(coefficient, std::move(ops));
  while (!stack.empty()) {
    auto [c, word] = std::move(stack.back());
    stack.pop_back();
    bool done = true;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      const LadderOp left = word[i];
      const LadderOp right = word[i + 1];
      if (left == right) {
        // a a = a+ a+ = 0
        done = true;
        word.clear();
        c = 0.0;
        break;
      }
      if (canonical_before(left, right)) continue;
      done = false;
      if (left.mode == right.mode) {
        // a_i a+_i = 1 - a+_i a_i
        std::vector<LadderOp> contracted;
        contracted.reserve(word.size() - 2);
        contracted.insert(contracted.end(), word.begin(), word.begin() + i);
        contracted.insert(contracted.end(), word.begin() + i + 2, word.end());
        stack.emplace_back(c, std::move(contracted));
      }
      std::swap(word[i], word[i + 1]);
      stack.emplace_back(-c, std::move(word));
      break;
    }
    if (done && c != 0.0) out[word] += c;
  }
}

}  // namespace

FermionOperator::FermionOperator(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 1) throw SizeError("fermion operator needs at least one mode");
}

void FermionOperator::add(double coefficient, std::vector<LadderOp> ops) {
  for (const auto& op : ops) {
    if (op.mode < 0 || op.mode >= n_modes_) {
      throw IndexError("mode " + std::to_string(op.mode) + " outside " +
                       std::to_string(n_modes_) + "-mode operator");
    }
  }
  terms_.push_back(FermionTerm{coefficient, std::move(ops)});
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  if (other.n_modes_ != n_modes_) throw SizeError("mode count mismatch in sum");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_modes_);
  for (const auto& t : terms_) {
    std::vector<LadderOp> ops(t.ops.rbegin(), t.ops.rend());
    for (auto& op : ops) op.dagger = !op.dagger;
    out.terms_.push_back(FermionTerm{t.coefficient, std::move(ops)});
  }
  return out;
}

FermionOperator FermionOperator::normal_ordered(double tol) const {
  std::map<std::vector<LadderOp>, double> merged;
  for (const auto& t : terms_) normal_order_into(t.coefficient, t.ops, merged);
  FermionOperator out(n_modes_);
  for (auto& [ops, c] : merged) {
    if (std::abs(c) > tol) out.terms_.push_back(FermionTerm{c, ops});
  }
  return out;
}

std::string FermionOperator::to_string() const {
  std::ostringstream s;
  for (const auto& t : terms_) {
    s << t.coefficient;
    for (const auto& op : t.ops) s << ' ' << op.mode << (op.dagger ? "^" : "");
    s << '\n';
  }
  return s.str();
}

bool equivalent(const FermionOperator& a, const FermionOperator& b, double tol) {
  FermionOperator diff = a;
  for (const auto& t : b.terms()) diff.add(-t.coefficient, t.ops);
  return diff.normal_ordered(tol).terms().empty();
}

}  // namespace vqe
