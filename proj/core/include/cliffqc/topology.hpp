#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace cliffqc {

using Vec3 = Eigen::Vector3d;

/// Orthorhombic Clifford supercell. The cell is periodic in the first
/// `periodic_dims` Cartesian axes (x first, then y, then z) and open along
/// the remaining ones. Distances between points are measured in the flat
/// embedding space of the torus: each periodic axis contributes
/// (L_s/pi)^2 sin^2(pi ds / L_s), each open axis its plain squared
/// difference.
class SupercellTopology {
 public:
  /// Molecular topology (no periodic axes).
  SupercellTopology() = default;

  /// Periodic in the first `periodic_dims` axes with the given edge
  /// lengths (bohr). Lengths of open axes are ignored.
  SupercellTopology(int periodic_dims, const std::array<double, 3>& lengths);

  int periodic_dims() const { return periodic_dims_; }
  bool periodic(int axis) const { return axis < periodic_dims_; }
  bool molecular() const { return periodic_dims_ == 0; }
  double length(int axis) const { return lengths_[axis]; }

  /// Wraps a coordinate of a periodic axis into [0, L); identity for open axes.
  double wrap(int axis, double x) const;

  bool operator==(const SupercellTopology&) const = default;

 private:
  int periodic_dims_ = 0;
  std::array<double, 3> lengths_{0.0, 0.0, 0.0};
};

/// Euclidean distance measured in the embedding space of the Clifford torus.
double torus_distance(const SupercellTopology& cell, const Vec3& a, const Vec3& b);

struct Nucleus {
  int charge = 1;
  Vec3 position = Vec3::Zero();
};

/// A set of nuclei on a supercell. Periodic coordinates are stored wrapped
/// into [0, L_s); no two nuclei may sit at torus distance zero.
class Geometry {
 public:
  Geometry() = default;
  Geometry(std::vector<Nucleus> nuclei, SupercellTopology topology);

  const std::vector<Nucleus>& nuclei() const { return nuclei_; }
  const SupercellTopology& topology() const { return topology_; }
  int n_atoms() const { return static_cast<int>(nuclei_.size()); }
  int n_electrons_neutral() const;

  /// FNV-1a hash of the canonical text representation; used to tag tensors
  /// and run records.
  std::uint64_t hash() const;

 private:
  std::vector<Nucleus> nuclei_;
  SupercellTopology topology_;
};

/// Hydrogen chain on a quasi-1D Clifford torus: n = 1, L_x = n_atoms*spacing,
/// nuclei at x = k*spacing on the x axis.
Geometry build_torus_chain(int n_atoms, double spacing);

/// Hydrogen chain as an explicit ring in open space: nuclei on a circle in
/// the xy plane whose chord between neighbors equals `spacing`.
Geometry build_ring_chain(int n_atoms, double spacing);

/// Sum of Z_A Z_B / |r_A - r_B|_E over unordered nucleus pairs.
double nuclear_repulsion(const Geometry& geometry);

/// Plain-text geometry format: header `n L_x [L_y [L_z]]` (n = 0 omits the
/// lengths), then one line `Z x y z` per nucleus, coordinates in bohr.
/// `#` starts a comment.
Geometry parse_geometry(const std::string& text);
Geometry read_geometry_file(const std::string& path);
std::string format_geometry(const Geometry& geometry);

}  // namespace cliffqc
