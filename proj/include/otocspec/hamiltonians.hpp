#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "otocspec/linalg.hpp"

namespace otocspec {

enum class ModelFamily { ChaoticXYZ, XXZ, MBLHeisenberg, FreeFermionXX };

std::string_view to_string(ModelFamily family);
// Throws UnknownFamily.
ModelFamily parse_model_family(std::string_view name);

// Couplings for all families; each family reads only its own fields.
//   ChaoticXYZ:    jx, jy, jz, h
//   XXZ:           j, delta, h
//   MBLHeisenberg: j, h (disorder bound), disorder_seed
//   FreeFermionXX: j
struct ModelSpec {
  ModelFamily family = ModelFamily::ChaoticXYZ;
  int num_sites = 2;
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
  double j = 1.0;
  double delta = 0.0;
  double h = 0.0;
  std::uint64_t disorder_seed = 0;

  // Short label used as the `model` column of exported tables.
  std::string tag() const;
  // Throws InvalidArgument on N < 2 or a negative disorder bound.
  void validate() const;

  static ModelSpec chaotic_xyz(int n, double jx = -0.4, double jy = -2.0, double jz = -1.0,
                               double h = 0.75);
  static ModelSpec xxz(int n, double j = 1.0, double delta = 0.0, double h = 0.0);
  static ModelSpec mbl_heisenberg(int n, double j = 1.0, double bound = 5.0,
                                  std::uint64_t seed = 0);
  static ModelSpec free_fermion_xx(int n, double j = 1.0);
};

struct DisorderRealization {
  RealVector fields;  // h_i uniform in [-bound, bound]
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Independent realization for (seed, stream).
DisorderRealization draw_disorder(const ModelSpec& spec, std::uint64_t stream = 0);

// Open-boundary chain Hamiltonian, dimension 2^N. MBL requires a realization.
ComplexMatrix build_hamiltonian(const ModelSpec& spec,
                                const std::optional<DisorderRealization>& realization = {});

// N x N single-particle hopping matrix of the XX chain, h_{a,a+1} = 2J.
RealMatrix build_hopping_matrix(const ModelSpec& spec);

enum class Pauli { X, Y, Z };

Pauli parse_pauli(std::string_view label);
ComplexMatrix pauli_matrix(Pauli p);
ComplexMatrix pauli_on_site(Pauli p, int site, int num_sites);
ComplexMatrix swap_gate(int i, int j, int num_sites);

}  // namespace otocspec
