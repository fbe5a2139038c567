// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vqe {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define VQE_DECLARE_ERROR(Name)        \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

VQE_DECLARE_ERROR(LabelError);
VQE_DECLARE_ERROR(SizeError);
VQE_DECLARE_ERROR(IndexError);
VQE_DECLARE_ERROR(HermiticityError);
VQE_DECLARE_ERROR(BindingError);
VQE_DECLARE_ERROR(ParseError);
VQE_DECLARE_ERROR(ElementError);
VQE_DECLARE_ERROR(GeometryError);
VQE_DECLARE_ERROR(BasisError);
VQE_DECLARE_ERROR(ConsistencyError);
VQE_DECLARE_ERROR(ActiveSpaceError);
VQE_DECLARE_ERROR(SectorViolationError);
VQE_DECLARE_ERROR(OccupationError);
VQE_DECLARE_ERROR(AnsatzError);
VQE_DECLARE_ERROR(ConfigError);

#undef VQE_DECLARE_ERROR

/// SCF failed to reach self-consistency; carries the last total energy.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_energy)
      : Error(what), last_energy_(last_energy) {}
  double last_energy() const noexcept { return last_energy_; }

 private:
  double last_energy_;
};

/// Objective returned a non-finite value.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace vqe
