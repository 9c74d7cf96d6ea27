#include "dirac_shell/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "dirac_shell/quadrature.hpp"

namespace dirac_shell {

std::string SurfaceDescriptor::name() const {
  if (kind == SurfaceKind::Sphere)
    return "sphere";
  return "mesh";
}

double BoundarySample::total_weight() const {
  double s = 0.0;
  for (double w : weights)
    s += w;
  return s;
}

Vec3 BoundarySample::normal_moment() const {
  Vec3 s = Vec3::Zero();
  for (std::size_t i = 0; i < size(); ++i)
    s += weights[i] * normals[i];
  return s;
}

double BoundarySample::node_spacing() const {
  if (size() < 2)
    return std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i)
        best = std::min(best, (nodes[i] - nodes[j]).norm());
    total += best;
  }
  return total / static_cast<double>(size());
}

int sphere_colatitudes(int level) { return 4 * level + 4; }
int sphere_longitudes(int level) { return 2 * sphere_colatitudes(level) - 1; }

BoundarySample sphere_sample(int level, double radius) {
  if (level < 1)
    throw std::invalid_argument("sphere_sample: level must be >= 1");
  if (!(radius > 0.0))
    throw std::invalid_argument("sphere_sample: radius must be positive");
  const int nt = sphere_colatitudes(level);
  const int np = sphere_longitudes(level);
  // Gauss-Legendre in cos(theta); nodes never hit the poles.
  const QuadratureRule gl = gauss_legendre(nt);

  BoundarySample s;
  s.descriptor = {SurfaceKind::Sphere, level, radius, nt, np};
  s.nodes.reserve(nt * np);
  s.normals.reserve(nt * np);
  s.weights.reserve(nt * np);
  const double dphi = 2.0 * kPi / np;
  for (int i = 0; i < nt; ++i) {
    // descending z so index 0 is nearest the north pole
    const double z = gl.nodes[nt - 1 - i];
    const double w = gl.weights[nt - 1 - i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int k = 0; k < np; ++k) {
      const double phi = dphi * k;
      const Vec3 n(rho * std::cos(phi), rho * std::sin(phi), z);
      s.normals.push_back(n);
      s.nodes.push_back(radius * n);
      s.weights.push_back(radius * radius * w * dphi);
    }
  }
  return s;
}

int TriangulatedSurface::euler_characteristic() const {
  std::map<std::pair<int, int>, int> edges;
  for (const auto &t : triangles)
    for (int e = 0; e < 3; ++e) {
      int a = t[e], b = t[(e + 1) % 3];
      if (a > b)
        std::swap(a, b);
      edges[{a, b}]++;
    }
  return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
         static_cast<int>(triangles.size());
}

double TriangulatedSurface::area() const {
  double a = 0.0;
  for (const auto &t : triangles)
    a += 0.5 * (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
  return a;
}

namespace {

// Next line that is not blank or a comment; tracks the line number.
bool next_content_line(std::istream &in, std::string &line, int &lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      return true;
  }
  return false;
}

[[noreturn]] void fail(const std::string &source, int lineno, const std::string &what) {
  throw ParseError(source + ":" + std::to_string(lineno) + ": " + what);
}

} // namespace

TriangulatedSurface parse_off(std::istream &in, const std::string &source) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno))
    fail(source, lineno, "empty file");
  std::istringstream header(line);
  std::string magic;
  header >> magic;
  if (magic != "OFF")
    fail(source, lineno, "expected 'OFF' header, got '" + magic + "'");

  long nv = -1, nf = -1, ne = 0;
  if (!(header >> nv >> nf)) {
    if (!next_content_line(in, line, lineno))
      fail(source, lineno, "missing counts line");
    std::istringstream counts(line);
    if (!(counts >> nv >> nf))
      fail(source, lineno, "malformed counts line");
    counts >> ne;
  }
  if (nv < 0 || nf < 0)
    fail(source, lineno, "negative counts");

  TriangulatedSurface surf;
  surf.vertices.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!next_content_line(in, line, lineno))
      fail(source, lineno, "unexpected end of file in vertex " + std::to_string(i));
    std::istringstream v(line);
    double x, y, z;
    if (!(v >> x >> y >> z))
      fail(source, lineno, "malformed vertex " + std::to_string(i));
    surf.vertices.emplace_back(x, y, z);
  }
  surf.triangles.reserve(nf);
  for (long f = 0; f < nf; ++f) {
    if (!next_content_line(in, line, lineno))
      fail(source, lineno, "unexpected end of file in face " + std::to_string(f));
    std::istringstream fs(line);
    int k;
    std::array<long, 3> idx{};
    if (!(fs >> k))
      fail(source, lineno, "malformed face " + std::to_string(f));
    if (k != 3)
      fail(source, lineno, "face " + std::to_string(f) + " has " + std::to_string(k) +
                               " vertices; only triangles are supported");
    if (!(fs >> idx[0] >> idx[1] >> idx[2]))
      fail(source, lineno, "malformed face " + std::to_string(f));
    for (long i : idx)
      if (i < 0 || i >= nv)
        fail(source, lineno,
             "face " + std::to_string(f) + " references vertex index " + std::to_string(i) +
                 " out of range [0, " + std::to_string(nv) + ")");
    surf.triangles.push_back({static_cast<int>(idx[0]), static_cast<int>(idx[1]),
                              static_cast<int>(idx[2])});
  }
  try {
    validate_surface(surf);
  } catch (const ParseError &e) {
    throw ParseError(source + ": " + e.what());
  }
  return surf;
}

TriangulatedSurface load_mesh(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open mesh file " + path.string());
  return parse_off(in, path.string());
}

void write_off(std::ostream &out, const TriangulatedSurface &surface) {
  out << "OFF\n" << surface.vertices.size() << ' ' << surface.triangles.size() << " 0\n";
  out.precision(17);
  for (const auto &v : surface.vertices)
    out << v(0) << ' ' << v(1) << ' ' << v(2) << '\n';
  for (const auto &t : surface.triangles)
    out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void validate_surface(TriangulatedSurface &surface) {
  // directed edge -> face that uses it
  std::map<std::pair<int, int>, int> directed;
  for (std::size_t f = 0; f < surface.triangles.size(); ++f) {
    const auto &t = surface.triangles[f];
    for (int e = 0; e < 3; ++e) {
      const int a = t[e], b = t[(e + 1) % 3];
      if (a == b)
        throw ParseError("face " + std::to_string(f) + " repeats vertex " + std::to_string(a));
      auto [it, inserted] = directed.emplace(std::pair{a, b}, static_cast<int>(f));
      if (!inserted)
        throw ParseError("non-manifold or inconsistently oriented edge (" + std::to_string(a) +
                         ", " + std::to_string(b) + ") in faces " + std::to_string(it->second) +
                         " and " + std::to_string(f));
    }
  }
  for (const auto &[edge, f] : directed) {
    if (!directed.contains({edge.second, edge.first}))
      throw ParseError("open boundary at edge (" + std::to_string(edge.first) + ", " +
                       std::to_string(edge.second) + ") of face " + std::to_string(f));
  }
  // Divergence theorem: 6 V = sum over faces of v0 . (v1 x v2).
  double six_volume = 0.0;
  for (const auto &t : surface.triangles)
    six_volume += surface.vertices[t[0]].dot(surface.vertices[t[1]].cross(surface.vertices[t[2]]));
  surface.outward.assign(surface.triangles.size(), six_volume >= 0.0);
}

BoundarySample mesh_sample(const TriangulatedSurface &surface) {
  BoundarySample s;
  s.descriptor.kind = SurfaceKind::Mesh;
  s.descriptor.radius = 0.0;
  const std::size_t nf = surface.triangles.size();
  s.nodes.reserve(nf);
  s.normals.reserve(nf);
  s.weights.reserve(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto &t = surface.triangles[f];
    const Vec3 &a = surface.vertices.at(t[0]);
    const Vec3 &b = surface.vertices.at(t[1]);
    const Vec3 &c = surface.vertices.at(t[2]);
    const Vec3 cr = (b - a).cross(c - a);
    const double scale = std::max({(b - a).squaredNorm(), (c - a).squaredNorm(),
                                   (c - b).squaredNorm()});
    const double twice_area = cr.norm();
    if (!(twice_area > 1e-14 * scale) || scale == 0.0)
      throw DomainError("mesh_sample: degenerate triangle " + std::to_string(f));
    const bool out = f < surface.outward.size() ? surface.outward[f] : true;
    s.nodes.push_back((a + b + c) / 3.0);
    s.normals.push_back((out ? 1.0 : -1.0) * cr / twice_area);
    s.weights.push_back(0.5 * twice_area);
  }
  return s;
}

TriangulatedSurface octahedron(double radius) {
  TriangulatedSurface s;
  s.vertices = {{radius, 0, 0}, {-radius, 0, 0}, {0, radius, 0},
                {0, -radius, 0}, {0, 0, radius}, {0, 0, -radius}};
  s.triangles = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                 {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  validate_surface(s);
  return s;
}

TriangulatedSurface regular_tetrahedron(double edge) {
  // Alternate cube corners, scaled so the edge is `edge`.
  const double h = edge / (2.0 * std::sqrt(2.0));
  TriangulatedSurface s;
  s.vertices = {{h, h, h}, {h, -h, -h}, {-h, h, -h}, {-h, -h, h}};
  s.triangles = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  validate_surface(s);
  return s;
}

TriangulatedSurface icosphere(int subdivisions, double radius) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
                         {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
                         {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  std::vector<std::array<int, 3>> f = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (auto &p : v)
    p.normalize();
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end())
        return it->second;
      v.push_back((v[a] + v[b]).normalized());
      const int idx = static_cast<int>(v.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(f.size() * 4);
    for (const auto &tri : f) {
      const int a = mid(tri[0], tri[1]);
      const int b = mid(tri[1], tri[2]);
      const int c = mid(tri[2], tri[0]);
      next.push_back({tri[0], a, c});
      next.push_back({tri[1], b, a});
      next.push_back({tri[2], c, b});
      next.push_back({a, b, c});
    }
    f = std::move(next);
  }
  TriangulatedSurface surf;
  for (auto &p : v)
    surf.vertices.push_back(radius * p);
  surf.triangles = std::move(f);
  validate_surface(surf);
  return surf;
}

} // namespace dirac_shell
