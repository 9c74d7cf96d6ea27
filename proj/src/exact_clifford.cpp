#include "dirac_shell/exact_clifford.hpp"

#include <stdexcept>

namespace dirac_shell {

namespace {

GaussianRational gr(long re, long im = 0) { return {mpq_class(re), mpq_class(im)}; }

ExactMatrix4 zero4() {
  ExactMatrix4 m;
  for (auto &row : m)
    row.fill(gr(0));
  return m;
}

} // namespace

ExactMatrix4 exact_identity() {
  ExactMatrix4 m = zero4();
  for (int i = 0; i < 4; ++i)
    m[i][i] = gr(1);
  return m;
}

ExactMatrix4 exact_beta() {
  ExactMatrix4 m = zero4();
  m[0][0] = m[1][1] = gr(1);
  m[2][2] = m[3][3] = gr(-1);
  return m;
}

ExactMatrix4 exact_alpha(int j) {
  GaussianRational s[2][2];
  switch (j) {
  case 1: s[0][0] = gr(0); s[0][1] = gr(1); s[1][0] = gr(1); s[1][1] = gr(0); break;
  case 2: s[0][0] = gr(0); s[0][1] = gr(0, -1); s[1][0] = gr(0, 1); s[1][1] = gr(0); break;
  case 3: s[0][0] = gr(1); s[0][1] = gr(0); s[1][0] = gr(0); s[1][1] = gr(-1); break;
  default: throw std::out_of_range("exact_alpha: index must be 1, 2 or 3");
  }
  ExactMatrix4 m = zero4();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      m[r][c + 2] = s[r][c];
      m[r + 2][c] = s[r][c];
    }
  return m;
}

ExactMatrix4 exact_alpha_dot(const std::array<mpq_class, 3> &n) {
  ExactMatrix4 m = zero4();
  for (int j = 0; j < 3; ++j)
    m = m + scaled(exact_alpha(j + 1), n[j]);
  return m;
}

ExactMatrix4 operator*(const ExactMatrix4 &a, const ExactMatrix4 &b) {
  ExactMatrix4 m = zero4();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k)
        m[r][c] = m[r][c] + a[r][k] * b[k][c];
  return m;
}

ExactMatrix4 operator+(const ExactMatrix4 &a, const ExactMatrix4 &b) {
  ExactMatrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m[r][c] = a[r][c] + b[r][c];
  return m;
}

ExactMatrix4 scaled(const ExactMatrix4 &a, const mpq_class &s) {
  ExactMatrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m[r][c] = {a[r][c].re * s, a[r][c].im * s};
  return m;
}

bool is_zero(const ExactMatrix4 &a) {
  for (const auto &row : a)
    for (const auto &e : row)
      if (sgn(e.re) != 0 || sgn(e.im) != 0)
        return false;
  return true;
}

std::vector<std::array<mpq_class, 3>> rational_unit_normals() {
  std::vector<std::array<mpq_class, 3>> out;
  // Pythagorean quadruples a^2 + b^2 + c^2 = d^2 with all sign patterns of one triple.
  const long quads[][4] = {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {3, 4, 0, 5},
                           {1, 2, 2, 3}, {2, 3, 6, 7}, {1, 4, 8, 9}, {4, 4, 7, 9}};
  for (const auto &q : quads)
    out.push_back({mpq_class(q[0], q[3]), mpq_class(q[1], q[3]), mpq_class(q[2], q[3])});
  out.push_back({mpq_class(-2, 7), mpq_class(3, 7), mpq_class(-6, 7)});
  out.push_back({mpq_class(-1, 3), mpq_class(-2, 3), mpq_class(2, 3)});
  for (auto &n : out)
    for (auto &c : n)
      c.canonicalize();
  return out;
}

std::vector<NamedCheck> exact_clifford_checks() {
  std::vector<NamedCheck> out;
  const ExactMatrix4 id = exact_identity();
  const ExactMatrix4 beta = exact_beta();
  const ExactMatrix4 minus_two_id = scaled(id, -2);
  for (int j = 1; j <= 3; ++j)
    for (int k = 1; k <= 3; ++k) {
      ExactMatrix4 s = exact_alpha(j) * exact_alpha(k) + exact_alpha(k) * exact_alpha(j);
      if (j == k)
        s = s + minus_two_id;
      out.push_back({"{alpha_" + std::to_string(j) + ", alpha_" + std::to_string(k) + "} = 2 delta",
                     is_zero(s)});
    }
  for (int j = 1; j <= 3; ++j)
    out.push_back({"{alpha_" + std::to_string(j) + ", beta} = 0",
                   is_zero(exact_alpha(j) * beta + beta * exact_alpha(j))});
  out.push_back({"beta^2 = 1", is_zero(beta * beta + scaled(id, -1))});
  for (const auto &n : rational_unit_normals()) {
    const ExactMatrix4 an = exact_alpha_dot(n);
    const std::string tag = "(" + n[0].get_str() + "," + n[1].get_str() + "," + n[2].get_str() + ")";
    out.push_back({"(alpha.N)^2 = 1 at N=" + tag, is_zero(an * an + scaled(id, -1))});
    out.push_back({"{beta, alpha.N} = 0 at N=" + tag, is_zero(beta * an + an * beta)});
  }
  return out;
}

} // namespace dirac_shell
