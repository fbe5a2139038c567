// Copyright 2026 The vqe-workbench Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "vqe/statevector.hpp"

#include <bit>
#include <cmath>

#include "vqe/error.hpp"

namespace vqe {
namespace {

void check_register(int n) {
  if (n < 1 || n > kMaxStateQubits) {
    throw SizeError("state register must hold 1.." + std::to_string(kMaxStateQubits) +
                    " qubits, got " + std::to_string(n));
  }
}

double parity_sign(std::uint64_t bits) { return (std::popcount(bits) & 1) ? -1.0 : 1.0; }

}  // namespace

StateVector StateVector::zero(int n_qubits) { return basis_state(n_qubits, 0); }

StateVector StateVector::basis_state(int n_qubits, std::uint64_t basis) {
  check_register(n_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  if (basis >= dim) {
    throw IndexError("basis index " + std::to_string(basis) + " outside " +
                     std::to_string(n_qubits) + "-qubit register");
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[basis] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw SizeError("amplitude count must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  check_register(n);
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::check_qubit(int q) const {
  if (q < 0 || q >= n_qubits_) {
    throw IndexError("qubit " + std::to_string(q) + " outside " +
                     std::to_string(n_qubits_) + "-qubit register");
  }
}

std::array<Complex, 4> u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {Complex{c, 0.0}, -std::polar(s, lambda), std::polar(s, phi),
          std::polar(c, phi + lambda)};
}

StateVector& StateVector::apply_u3(int qubit, double theta, double phi, double lambda) {
  check_qubit(qubit);
  const auto m = u3_matrix(theta, phi, lambda);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (b & bit) continue;
    const Complex a0 = amps_[b];
    const Complex a1 = amps_[b | bit];
    amps_[b] = m[0] * a0 + m[1] * a1;
    amps_[b | bit] = m[2] * a0 + m[3] * a1;
  }
  return *this;
}

StateVector& StateVector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw IndexError("CNOT control and target coincide");
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t b = 0; b < dim; ++b) {
    if ((b & cbit) && !(b & tbit)) std::swap(amps_[b], amps_[b | tbit]);
  }
  return *this;
}

StateVector& StateVector::apply_pauli_rotation(const PauliString& p, double angle) {
  if (p.n_qubits != n_qubits_) {
    throw LabelError("rotation label on " + std::to_string(p.n_qubits) +
                     " qubits applied to " + std::to_string(n_qubits_) + "-qubit state");
  }
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Complex minus_i_s{0.0, -s};
  const std::uint64_t dim = amps_.size();
  if (p.x == 0) {
    const Complex plus = Complex{c, 0.0} + minus_i_s;
    const Complex minus = Complex{c, 0.0} - minus_i_s;
    for (std::uint64_t b = 0; b < dim; ++b) {
      amps_[b] *= (std::popcount(p.z & b) & 1) ? minus : plus;
    }
    return *this;
  }
  const std::uint64_t high = std::bit_floor(p.x);
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (b & high) continue;
    const std::uint64_t partner = b ^ p.x;
    const Complex a = amps_[b];
    const Complex a_partner = amps_[partner];
    amps_[b] = c * a + minus_i_s * p.phase_on(partner) * a_partner;
    amps_[partner] = c * a_partner + minus_i_s * p.phase_on(b) * a;
  }
  return *this;
}

StateVector& StateVector::apply_pauli_rotation(std::string_view label, double angle) {
  return apply_pauli_rotation(PauliString::from_label(label), angle);
}

double expectation(const StateVector& state, const PauliSum& h) {
  if (!h.is_hermitian()) {
    throw HermiticityError("expectation requires a Hermitian (real-coefficient) sum");
  }
  if (h.n_qubits() != state.n_qubits()) {
    throw SizeError("Hamiltonian on " + std::to_string(h.n_qubits()) +
                    " qubits, state on " + std::to_string(state.n_qubits()));
  }
  const auto amps = state.amplitudes();
  const std::uint64_t dim = amps.size();
  Complex total{0.0, 0.0};
  double weight = 0.0;
  for (const auto& t : h.terms()) {
    weight += std::abs(t.coefficient);
    if (t.word.is_identity()) {
      total += t.coefficient;
      continue;
    }
    Complex acc{0.0, 0.0};
    const std::uint64_t x = t.word.x;
    const std::uint64_t z = t.word.z;
    for (std::uint64_t b = 0; b < dim; ++b) {
      acc += std::conj(amps[b ^ x]) * amps[b] * parity_sign(z & b);
    }
    // i^{|x&z|} from the Y convention.
    switch (std::popcount(x & z) % 4) {
      case 1: acc *= Complex{0.0, 1.0}; break;
      case 2: acc = -acc; break;
      case 3: acc *= Complex{0.0, -1.0}; break;
      default: break;
    }
    total += t.coefficient * acc;
  }
  if (std::abs(total.imag()) > 1e-10 * std::max(1.0, weight)) {
    throw HermiticityError("expectation has imaginary residue " +
                           std::to_string(total.imag()));
  }
  return total.real();
}

double Angle::bind(std::span<const double> params) const {
  if (slot < 0) return constant;
  return constant + scale * params[static_cast<std::size_t>(slot)];
}

Circuit::Circuit(int n_qubits, std::uint64_t initial_state)
    : n_qubits_(n_qubits), initial_state_(initial_state) {
  check_register(n_qubits);
  if (initial_state >= (std::uint64_t{1} << n_qubits)) {
    throw IndexError("initial basis state outside register");
  }
}

int Circuit::add_parameter(std::string name) {
  parameter_names_.push_back(std::move(name));
  return n_parameters() - 1;
}

void Circuit::check_angle(const Angle& a) const {
  if (a.slot >= n_parameters()) {
    throw BindingError("angle references undeclared parameter slot " +
                       std::to_string(a.slot));
  }
}

Circuit& Circuit::u3(int qubit, Angle theta, Angle phi, Angle lambda) {
  if (qubit < 0 || qubit >= n_qubits_) throw IndexError("U3 qubit out of range");
  check_angle(theta);
  check_angle(phi);
  check_angle(lambda);
  gates_.emplace_back(U3Gate{qubit, theta, phi, lambda});
  return *this;
}

Circuit& Circuit::cnot(int control, int target) {
  if (control < 0 || control >= n_qubits_ || target < 0 || target >= n_qubits_ ||
      control == target) {
    throw IndexError("invalid CNOT qubits " + std::to_string(control) + "->" +
                     std::to_string(target));
  }
  gates_.emplace_back(CnotGate{control, target});
  return *this;
}

Circuit& Circuit::pauli_rotation(const PauliString& p, Angle angle) {
  if (p.n_qubits != n_qubits_) throw LabelError("rotation label length mismatch");
  check_angle(angle);
  gates_.emplace_back(PauliRotationGate{p, angle});
  return *this;
}

std::vector<double> Circuit::bind(const std::map<std::string, double>& bindings) const {
  std::vector<double> values;
  values.reserve(parameter_names_.size());
  for (const auto& name : parameter_names_) {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw BindingError("parameter '" + name + "' is unbound");
    values.push_back(it->second);
  }
  return values;
}

StateVector run_circuit(const Circuit& c, std::span<const double> params) {
  if (static_cast<int>(params.size()) != c.n_parameters()) {
    throw BindingError("circuit has " + std::to_string(c.n_parameters()) +
                       " parameter slots, got " + std::to_string(params.size()) + " values");
  }
  StateVector psi = StateVector::basis_state(c.n_qubits(), c.initial_state());
  for (const auto& gate : c.gates()) {
    std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, U3Gate>) {
            psi.apply_u3(g.qubit, g.theta.bind(params), g.phi.bind(params),
                         g.lambda.bind(params));
          } else if constexpr (std::is_same_v<G, CnotGate>) {
            psi.apply_cnot(g.control, g.target);
          } else {
            psi.apply_pauli_rotation(g.pauli, g.angle.bind(params));
          }
        },
        gate);
  }
  return psi;
}

StateVector run_circuit(const Circuit& c, const std::map<std::string, double>& bindings) {
  const auto values = c.bind(bindings);
  return run_circuit(c, values);
}

}  // namespace vqe
