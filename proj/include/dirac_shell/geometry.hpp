#pragma once

#include <array>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "dirac_shell/types.hpp"

namespace dirac_shell {

enum class SurfaceKind { Sphere, Mesh };

struct SurfaceDescriptor {
  SurfaceKind kind = SurfaceKind::Sphere;
  int level = 0;
  double radius = 1.0;
  // Product-grid shape; zero for mesh samples.
  int n_colatitude = 0;
  int n_longitude = 0;

  /// Highest spherical-harmonic degree the product grid integrates exactly
  /// against another of the same degree. -1 for meshes.
  int max_degree() const { return kind == SurfaceKind::Sphere ? n_colatitude - 1 : -1; }
  std::string name() const;
};

/// Quadrature nodes on a closed surface with outward unit normals and positive weights.
struct BoundarySample {
  std::vector<Vec3> nodes;
  std::vector<Vec3> normals;
  std::vector<double> weights;
  SurfaceDescriptor descriptor;

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
  /// Sum_i w_i N_i; vanishes for closed surfaces.
  Vec3 normal_moment() const;
  /// Mean nearest-neighbour distance between nodes.
  double node_spacing() const;
};

/// Gauss-Legendre nodes in colatitude times uniform nodes in longitude.
/// level L uses 4L + 4 colatitudes and 8L + 7 longitudes.
BoundarySample sphere_sample(int level, double radius = 1.0);

/// Product-grid shape used by sphere_sample for a given level.
int sphere_colatitudes(int level);
int sphere_longitudes(int level);

struct TriangulatedSurface {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  /// true when the triangle's (i, j, k) winding gives the outward normal.
  std::vector<bool> outward;

  int euler_characteristic() const;
  double area() const;
};

/// Parse an ASCII OFF stream and validate it as a closed orientable triangulated
/// surface. Errors carry the offending line, face or edge.
TriangulatedSurface parse_off(std::istream &in, const std::string &source = "<stream>");
TriangulatedSurface load_mesh(const std::filesystem::path &path);
void write_off(std::ostream &out, const TriangulatedSurface &surface);

/// Check that every edge is shared by exactly two triangles with opposite
/// orientation and fill the outward flags from the sign of the enclosed volume.
void validate_surface(TriangulatedSurface &surface);

/// One node per triangle: centroid, area weight, oriented unit face normal.
BoundarySample mesh_sample(const TriangulatedSurface &surface);

TriangulatedSurface octahedron(double radius = 1.0);
TriangulatedSurface regular_tetrahedron(double edge);
/// Icosahedron refined `subdivisions` times with vertices projected to the sphere.
TriangulatedSurface icosphere(int subdivisions, double radius = 1.0);

} // namespace dirac_shell
