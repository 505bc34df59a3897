#include "cliffqc/topology.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cliffqc/error.hpp"

namespace cliffqc {

namespace {

constexpr double kPi = std::numbers::pi;
// Pair distances below this are treated as coincident nuclei.
constexpr double kCoincidenceThreshold = 1e-10;

}  // namespace

SupercellTopology::SupercellTopology(int periodic_dims,
                                     const std::array<double, 3>& lengths)
    : periodic_dims_(periodic_dims), lengths_(lengths) {
  if (periodic_dims < 0 || periodic_dims > 3) {
    throw DomainError("periodic_dims must be in {0,1,2,3}, got " +
                      std::to_string(periodic_dims));
  }
  for (int s = 0; s < periodic_dims_; ++s) {
    if (!(lengths_[s] > 0.0) || !std::isfinite(lengths_[s])) {
      throw DomainError("supercell length L_" + std::string(1, "xyz"[s]) +
                        " must be positive");
    }
  }
  for (int s = periodic_dims_; s < 3; ++s) lengths_[s] = 0.0;
}

double SupercellTopology::wrap(int axis, double x) const {
  if (!periodic(axis)) return x;
  const double L = lengths_[axis];
  double w = std::fmod(x, L);
  if (w < 0.0) w += L;
  // fmod can return exactly L after the correction when x is a tiny
  // negative number.
  if (w >= L) w -= L;
  return w;
}

double torus_distance(const SupercellTopology& cell, const Vec3& a, const Vec3& b) {
  double d2 = 0.0;
  for (int s = 0; s < 3; ++s) {
    const double ds = a[s] - b[s];
    if (cell.periodic(s)) {
      const double L = cell.length(s);
      const double u = (L / kPi) * std::sin(kPi * ds / L);
      d2 += u * u;
    } else {
      d2 += ds * ds;
    }
  }
  return std::sqrt(d2);
}

Geometry::Geometry(std::vector<Nucleus> nuclei, SupercellTopology topology)
    : nuclei_(std::move(nuclei)), topology_(topology) {
  for (auto& nuc : nuclei_) {
    if (nuc.charge <= 0) {
      throw DomainError("nuclear charge must be a positive integer");
    }
    for (int s = 0; s < 3; ++s) {
      nuc.position[s] = topology_.wrap(s, nuc.position[s]);
    }
  }
  for (std::size_t i = 0; i < nuclei_.size(); ++i) {
    for (std::size_t j = i + 1; j < nuclei_.size(); ++j) {
      const double d = torus_distance(topology_, nuclei_[i].position,
                                      nuclei_[j].position);
      if (d < kCoincidenceThreshold) {
        throw DomainError("nuclei " + std::to_string(i) + " and " +
                          std::to_string(j) + " coincide (torus distance " +
                          std::to_string(d) + ")");
      }
    }
  }
}

int Geometry::n_electrons_neutral() const {
  int n = 0;
  for (const auto& nuc : nuclei_) n += nuc.charge;
  return n;
}

std::uint64_t Geometry::hash() const {
  const std::string repr = format_geometry(*this);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : repr) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Geometry build_torus_chain(int n_atoms, double spacing) {
  if (n_atoms < 2) {
    throw DomainError("torus chain needs at least 2 atoms, got " +
                      std::to_string(n_atoms));
  }
  if (!(spacing > 0.0)) throw DomainError("chain spacing must be positive");
  SupercellTopology cell(1, {n_atoms * spacing, 0.0, 0.0});
  std::vector<Nucleus> nuclei;
  nuclei.reserve(n_atoms);
  for (int k = 0; k < n_atoms; ++k) {
    nuclei.push_back({1, Vec3(k * spacing, 0.0, 0.0)});
  }
  return Geometry(std::move(nuclei), cell);
}

Geometry build_ring_chain(int n_atoms, double spacing) {
  if (n_atoms < 3) {
    throw DomainError("ring chain needs at least 3 atoms, got " +
                      std::to_string(n_atoms));
  }
  if (!(spacing > 0.0)) throw DomainError("chain spacing must be positive");
  // Chord between neighbors equals the chain spacing.
  const double radius = spacing / (2.0 * std::sin(kPi / n_atoms));
  std::vector<Nucleus> nuclei;
  nuclei.reserve(n_atoms);
  for (int k = 0; k < n_atoms; ++k) {
    const double phi = 2.0 * kPi * k / n_atoms;
    nuclei.push_back({1, Vec3(radius * std::cos(phi), radius * std::sin(phi), 0.0)});
  }
  return Geometry(std::move(nuclei), SupercellTopology());
}

double nuclear_repulsion(const Geometry& geometry) {
  const auto& nuclei = geometry.nuclei();
  double energy = 0.0;
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    for (std::size_t j = i + 1; j < nuclei.size(); ++j) {
      const double d = torus_distance(geometry.topology(), nuclei[i].position,
                                      nuclei[j].position);
      if (d < kCoincidenceThreshold) {
        throw DomainError("nuclear repulsion singular: nuclei " +
                          std::to_string(i) + " and " + std::to_string(j) +
                          " at torus distance " + std::to_string(d));
      }
      energy += nuclei[i].charge * nuclei[j].charge / d;
    }
  }
  return energy;
}

Geometry parse_geometry(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash_pos = line.find('#');
      if (hash_pos != std::string::npos) line.erase(hash_pos);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  if (!next_content_line(header)) {
    throw ParseError("geometry: empty input");
  }
  std::istringstream hs(header);
  int n = -1;
  if (!(hs >> n) || n < 0 || n > 3) {
    throw ParseError("geometry: header must start with n in {0,1,2,3}", lineno);
  }
  std::array<double, 3> lengths{0.0, 0.0, 0.0};
  for (int s = 0; s < n; ++s) {
    if (!(hs >> lengths[s])) {
      throw ParseError("geometry: header needs " + std::to_string(n) +
                           " supercell lengths",
                       lineno);
    }
  }
  SupercellTopology cell(n, lengths);

  std::vector<Nucleus> nuclei;
  std::string body;
  while (next_content_line(body)) {
    std::istringstream bs(body);
    Nucleus nuc;
    if (!(bs >> nuc.charge >> nuc.position[0] >> nuc.position[1] >>
          nuc.position[2])) {
      throw ParseError("geometry: expected `Z x y z`", lineno);
    }
    nuclei.push_back(nuc);
  }
  if (nuclei.empty()) throw ParseError("geometry: no nuclei");
  return Geometry(std::move(nuclei), cell);
}

Geometry read_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open geometry file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_geometry(buf.str());
}

std::string format_geometry(const Geometry& geometry) {
  const auto& cell = geometry.topology();
  std::ostringstream out;
  char buf[128];
  out << cell.periodic_dims();
  for (int s = 0; s < cell.periodic_dims(); ++s) {
    std::snprintf(buf, sizeof(buf), " %.17g", cell.length(s));
    out << buf;
  }
  out << '\n';
  for (const auto& nuc : geometry.nuclei()) {
    std::snprintf(buf, sizeof(buf), "%d %.17g %.17g %.17g\n", nuc.charge,
                  nuc.position[0], nuc.position[1], nuc.position[2]);
    out << buf;
  }
  return out.str();
}

}  // namespace cliffqc
