#include "otocspec/hamiltonians.hpp"

#include <cmath>
#include <sstream>

#include "otocspec/error.hpp"

namespace otocspec {

namespace {

constexpr int kMaxSites = 12;

void check_sites(int num_sites) {
  if (num_sites < 1 || num_sites > kMaxSites) {
    throw Error(ErrorCode::InvalidArgument,
                "number of sites must be in [1, " + std::to_string(kMaxSites) + "]");
  }
}

void check_site(int site, int num_sites) {
  if (site < 0 || site >= num_sites) {
    throw Error(ErrorCode::SiteOutOfRange,
                "site " + std::to_string(site) + " not in [0, " + std::to_string(num_sites) + ")");
  }
}

// Generic open-chain XYZ-plus-field Hamiltonian:
//   sum_b (jx X_b X_b+1 + jy Y_b Y_b+1 + jz Z_b Z_b+1) + sum_b field_b Z_b
ComplexMatrix xyz_chain(int n, double jx, double jy, double jz, const RealVector& field) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix h = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int b = 0; b < n; ++b) diag += field(b) * (qubit_bit(s, b) ? -1.0 : 1.0);
    for (int b = 0; b + 1 < n; ++b) {
      const bool same = qubit_bit(s, b) == qubit_bit(s, b + 1);
      diag += jz * (same ? 1.0 : -1.0);
      // X X flips both bits with amplitude 1; Y Y with -1 (equal bits) or +1.
      const std::size_t flipped = s ^ (std::size_t{3} << b);
      const double amp = jx + jy * (same ? -1.0 : 1.0);
      if (amp != 0.0) h(static_cast<Eigen::Index>(flipped), static_cast<Eigen::Index>(s)) += amp;
    }
    h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) += diag;
  }
  return h;
}

}  // namespace

std::string_view to_string(ModelFamily family) {
  switch (family) {
    case ModelFamily::ChaoticXYZ: return "ChaoticXYZ";
    case ModelFamily::XXZ: return "XXZ";
    case ModelFamily::MBLHeisenberg: return "MBLHeisenberg";
    case ModelFamily::FreeFermionXX: return "FreeFermionXX";
  }
  return "Unknown";
}

ModelFamily parse_model_family(std::string_view name) {
  for (auto f : {ModelFamily::ChaoticXYZ, ModelFamily::XXZ, ModelFamily::MBLHeisenberg,
                 ModelFamily::FreeFermionXX}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::UnknownFamily, "unknown model family '" + std::string(name) + "'");
}

std::string ModelSpec::tag() const {
  std::ostringstream os;
  os << to_string(family) << "_N" << num_sites;
  return os.str();
}

void ModelSpec::validate() const {
  if (num_sites < 2 || num_sites > kMaxSites) {
    throw Error(ErrorCode::InvalidArgument, "numSites must be in [2, 12]");
  }
  if (family == ModelFamily::MBLHeisenberg && !(h >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "disorder bound must be >= 0");
  }
  for (double c : {jx, jy, jz, j, delta, h}) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite coupling");
  }
}

ModelSpec ModelSpec::chaotic_xyz(int n, double jx, double jy, double jz, double h) {
  ModelSpec s;
  s.family = ModelFamily::ChaoticXYZ;
  s.num_sites = n;
  s.jx = jx;
  s.jy = jy;
  s.jz = jz;
  s.h = h;
  return s;
}

ModelSpec ModelSpec::xxz(int n, double j, double delta, double h) {
  ModelSpec s;
  s.family = ModelFamily::XXZ;
  s.num_sites = n;
  s.j = j;
  s.delta = delta;
  s.h = h;
  return s;
}

ModelSpec ModelSpec::mbl_heisenberg(int n, double j, double bound, std::uint64_t seed) {
  ModelSpec s;
  s.family = ModelFamily::MBLHeisenberg;
  s.num_sites = n;
  s.j = j;
  s.h = bound;
  s.disorder_seed = seed;
  return s;
}

ModelSpec ModelSpec::free_fermion_xx(int n, double j) {
  ModelSpec s;
  s.family = ModelFamily::FreeFermionXX;
  s.num_sites = n;
  s.j = j;
  return s;
}

DisorderRealization draw_disorder(const ModelSpec& spec, std::uint64_t stream) {
  spec.validate();
  Philox rng(spec.disorder_seed, stream);
  DisorderRealization out;
  out.seed = spec.disorder_seed;
  out.stream = stream;
  out.fields.resize(spec.num_sites);
  for (int b = 0; b < spec.num_sites; ++b) out.fields(b) = spec.h * (2.0 * rng.uniform() - 1.0);
  return out;
}

ComplexMatrix build_hamiltonian(const ModelSpec& spec,
                                const std::optional<DisorderRealization>& realization) {
  spec.validate();
  const int n = spec.num_sites;
  const bool is_mbl = spec.family == ModelFamily::MBLHeisenberg;
  if (is_mbl && !realization) {
    throw Error(ErrorCode::MissingDisorder, "MBLHeisenberg requires a disorder realization");
  }
  if (!is_mbl && realization) {
    throw Error(ErrorCode::InvalidArgument, "disorder realization given for a clean model");
  }
  switch (spec.family) {
    case ModelFamily::ChaoticXYZ:
      return xyz_chain(n, spec.jx, spec.jy, spec.jz, RealVector::Constant(n, spec.h));
    case ModelFamily::XXZ:
      return xyz_chain(n, spec.j, spec.j, spec.j * spec.delta, RealVector::Constant(n, spec.h));
    case ModelFamily::MBLHeisenberg:
      if (realization->fields.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "disorder realization has wrong length");
      }
      return xyz_chain(n, spec.j, spec.j, spec.j, realization->fields);
    case ModelFamily::FreeFermionXX:
      return xyz_chain(n, spec.j, spec.j, 0.0, RealVector::Zero(n));
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled model family");
}

RealMatrix build_hopping_matrix(const ModelSpec& spec) {
  if (spec.family != ModelFamily::FreeFermionXX) {
    throw Error(ErrorCode::WrongFamily, "hopping matrix is defined for FreeFermionXX only");
  }
  spec.validate();
  const int n = spec.num_sites;
  RealMatrix h = RealMatrix::Zero(n, n);
  // X X + Y Y = 2 (s+ s- + s- s+) maps to 2 (c^dag_a c_a+1 + h.c.).
  for (int a = 0; a + 1 < n; ++a) {
    h(a, a + 1) = 2.0 * spec.j;
    h(a + 1, a) = 2.0 * spec.j;
  }
  return h;
}

Pauli parse_pauli(std::string_view label) {
  if (label == "X") return Pauli::X;
  if (label == "Y") return Pauli::Y;
  if (label == "Z") return Pauli::Z;
  throw Error(ErrorCode::InvalidArgument, "operator label must be X, Y or Z");
}

ComplexMatrix pauli_matrix(Pauli p) {
  ComplexMatrix m(2, 2);
  switch (p) {
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

ComplexMatrix pauli_on_site(Pauli p, int site, int num_sites) {
  check_sites(num_sites);
  check_site(site, num_sites);
  // High qubits are the left Kronecker factors.
  const ComplexMatrix high = identity(std::size_t{1} << (num_sites - 1 - site));
  const ComplexMatrix low = identity(std::size_t{1} << site);
  return kron(kron(high, pauli_matrix(p)), low);
}

ComplexMatrix swap_gate(int i, int j, int num_sites) {
  check_sites(num_sites);
  check_site(i, num_sites);
  check_site(j, num_sites);
  if (i == j) throw Error(ErrorCode::EqualSites, "swap requires distinct sites");
  const std::size_t dim = std::size_t{1} << num_sites;
  ComplexMatrix s = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t target = b;
    if (qubit_bit(b, i) != qubit_bit(b, j)) target ^= (std::size_t{1} << i) | (std::size_t{1} << j);
    s(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return s;
}

}  // namespace otocspec
