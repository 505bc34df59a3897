#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliffqc/topology.hpp"

namespace cliffqc {

/// A single cartesian gaussian primitive: exponent alpha (bohr^-2), center,
/// and per-axis angular indices (i, j, k). On a periodic axis the factor is
/// the Clifford gaussian
///   ((L/2pi) sin(2pi (s - c)/L))^i exp(-(alpha L^2/pi^2) sin^2(pi (s - c)/L)),
/// on an open axis the ordinary (s - c)^i exp(-alpha (s - c)^2); which axes
/// are periodic comes from the topology the primitive is used with.
struct GaussPrimitive {
  double exponent = 1.0;
  Vec3 center = Vec3::Zero();
  std::array<int, 3> angular{0, 0, 0};

  int total_angular() const { return angular[0] + angular[1] + angular[2]; }
};

using CliffordPrimitive = GaussPrimitive;
using FreePrimitive = GaussPrimitive;

/// Pointwise value with the periodic axes of `cell` using the Clifford
/// factor and the rest the free factor.
double eval_primitive(const SupercellTopology& cell, const GaussPrimitive& p,
                      const Vec3& r);

enum class ShellKind { s = 0, p = 1, d = 2 };

int shell_angular_momentum(ShellKind kind);
/// Cartesian components of a shell in storage order (x, y, z / xx, xy, ...).
const std::vector<std::array<int, 3>>& shell_components(ShellKind kind);

struct PrimitiveEntry {
  double exponent;
  double coefficient;  // raw contraction coefficient as read from the file
};

struct ContractedShell {
  ShellKind kind = ShellKind::s;
  std::vector<PrimitiveEntry> primitives;  // sorted by descending exponent
};

/// Element -> shells map as read from a basis file; coefficients are stored
/// raw, normalization happens when the basis is instantiated on a geometry.
class BasisSet {
 public:
  BasisSet() = default;
  BasisSet(std::string name,
           std::map<std::string, std::vector<ContractedShell>> shells);

  const std::string& name() const { return name_; }
  bool has_element(const std::string& symbol) const;
  const std::vector<ContractedShell>& shells(const std::string& symbol) const;
  const std::map<std::string, std::vector<ContractedShell>>& all() const {
    return shells_;
  }
  std::uint64_t hash() const;

 private:
  std::string name_;
  std::map<std::string, std::vector<ContractedShell>> shells_;
};

/// Parses basis text in either the native format
///   ELEMENT H
///   s 3
///   <exponent> <coefficient>   (3 lines)
/// or the plain-text exchange format with `SYMBOL 0` element headers,
/// `S 3 1.00` shell headers and `****` terminators. `#` and `!` start
/// comments. Shells above d are rejected.
BasisSet parse_basis_text(const std::string& text, const std::string& name = "");
BasisSet read_basis_file(const std::string& path);

/// One normalized atomic orbital: a contracted cartesian gaussian pinned to a
/// geometry site. `coefficients` already contain contraction coefficient x
/// primitive reference norm x overall AO norm, so tensor assembly needs no
/// further scaling.
struct AOFunction {
  int atom = 0;
  int shell = 0;
  std::array<int, 3> angular{0, 0, 0};
  Vec3 center = Vec3::Zero();
  std::vector<double> exponents;
  std::vector<double> coefficients;

  GaussPrimitive primitive(std::size_t k) const {
    return GaussPrimitive{exponents[k], center, angular};
  }
  std::size_t n_primitives() const { return exponents.size(); }
};

class AOBasis {
 public:
  AOBasis() = default;
  AOBasis(std::vector<AOFunction> aos, SupercellTopology topology,
          std::uint64_t basis_hash, std::string basis_name);

  int size() const { return static_cast<int>(aos_.size()); }
  const AOFunction& ao(int mu) const { return aos_[static_cast<std::size_t>(mu)]; }
  const std::vector<AOFunction>& aos() const { return aos_; }
  const SupercellTopology& topology() const { return topology_; }
  std::uint64_t basis_hash() const { return basis_hash_; }
  const std::string& basis_name() const { return basis_name_; }

 private:
  std::vector<AOFunction> aos_;
  SupercellTopology topology_;
  std::uint64_t basis_hash_ = 0;
  std::string basis_name_;
};

/// Instantiates the basis on a geometry: AOs ordered by (atom, shell,
/// cartesian component), each normalized to unit self-overlap under the
/// active metric (torus overlap when the topology is periodic, free-space
/// overlap otherwise). Contraction coefficients are combined with free-space
/// primitive reference norms first, matching the convention of published
/// basis tabulations.
AOBasis build_ao_basis(const Geometry& geometry, const BasisSet& basis);

/// Symbol for a nuclear charge ("H", "He", ...); supports Z <= 18.
std::string element_symbol(int charge);

}  // namespace cliffqc
