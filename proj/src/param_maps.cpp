#include "dirac_shell/param_maps.hpp"

#include <charconv>
#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "dirac_shell/expression.hpp"
#include "dirac_shell/types.hpp"

namespace dirac_shell {

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Exact value of a decimal literal such as "-12.50e-3".
mpq_class parse_decimal(const std::string &s) {
  static const std::regex re(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re) || (m[2].length() == 0 && m[3].length() == 0))
    throw ParseError("not a decimal literal: '" + s + "'");
  const std::string digits = m[2].str() + m[3].str();
  mpz_class num(digits.empty() ? "0" : digits, 10);
  long exp10 = m[4].matched ? std::stol(m[4].str()) : 0;
  exp10 -= static_cast<long>(m[3].length());
  if (std::labs(exp10) > 4000)
    throw ParseError("decimal exponent out of range: '" + s + "'");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return m[1] == "-" ? mpq_class(-q) : q;
}

std::string strip(const std::string &s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  return out;
}

} // namespace

Scalar::Scalar(const mpq_class &q) : exact_(true), q_(q), x_(0.0) {
  q_.canonicalize();
  x_ = q_.get_d();
}

Scalar Scalar::approx(double x) {
  Scalar s;
  s.exact_ = false;
  s.x_ = x;
  return s;
}

const mpq_class &Scalar::rational() const {
  if (!exact_)
    throw std::logic_error("Scalar::rational: value is not exact");
  return q_;
}

bool Scalar::is_zero(double tol) const { return exact_ ? sgn(q_) == 0 : std::abs(x_) <= tol; }

int Scalar::sign(double tol) const {
  if (exact_)
    return sgn(q_);
  return std::abs(x_) <= tol ? 0 : (x_ > 0 ? 1 : -1);
}

Scalar operator+(const Scalar &a, const Scalar &b) {
  return a.exact_ && b.exact_ ? Scalar(mpq_class(a.q_ + b.q_)) : Scalar::approx(a.x_ + b.x_);
}
Scalar operator-(const Scalar &a, const Scalar &b) {
  return a.exact_ && b.exact_ ? Scalar(mpq_class(a.q_ - b.q_)) : Scalar::approx(a.x_ - b.x_);
}
Scalar operator*(const Scalar &a, const Scalar &b) {
  return a.exact_ && b.exact_ ? Scalar(mpq_class(a.q_ * b.q_)) : Scalar::approx(a.x_ * b.x_);
}
Scalar operator/(const Scalar &a, const Scalar &b) {
  if (a.exact_ && b.exact_) {
    if (sgn(b.q_) == 0)
      throw DomainError("exact division by zero");
    return Scalar(mpq_class(a.q_ / b.q_));
  }
  return Scalar::approx(a.x_ / b.x_);
}
Scalar operator-(const Scalar &a) { return a.exact_ ? Scalar(mpq_class(-a.q_)) : Scalar::approx(-a.x_); }

std::string Scalar::to_string() const { return exact_ ? q_.get_str() : shortest(x_); }

Scalar parse_scalar(const std::string &text) {
  const std::string s = strip(text);
  if (s.empty())
    throw ParseError("empty number");
  static const std::regex dec(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  static const std::regex frac(R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)/([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)$)");
  std::smatch m;
  if (std::regex_match(s, dec))
    return Scalar(parse_decimal(s));
  if (std::regex_match(s, m, frac)) {
    const mpq_class den = parse_decimal(m[2].str());
    if (sgn(den) == 0)
      throw ParseError("zero denominator in '" + text + "'");
    return Scalar(mpq_class(parse_decimal(m[1].str()) / den));
  }
  const double v = evaluate_constant(s);
  if (!std::isfinite(v))
    throw ParseError("non-finite value '" + text + "'");
  return Scalar::approx(v);
}

Angle Angle::quarter_turns(long k) {
  Angle a;
  a.quarter_ = k;
  a.radians_ = static_cast<double>(k) * kPi / 2.0;
  return a;
}

Angle Angle::radians(double t) {
  Angle a;
  a.radians_ = t;
  return a;
}

Angle Angle::parse(const std::string &text) {
  const std::string s = strip(text);
  static const std::regex pi_re(R"(^([+-]?)(\d*)\*?pi(?:/(\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_re)) {
    const long mult = m[2].length() ? std::stol(m[2].str()) : 1;
    const long den = m[3].matched ? std::stol(m[3].str()) : 1;
    const long sign = m[1] == "-" ? -1 : 1;
    if (den == 1)
      return quarter_turns(sign * 2 * mult);
    if (den == 2)
      return quarter_turns(sign * mult);
    if (den > 0 && (2 * mult) % den == 0)
      return quarter_turns(sign * 2 * mult / den);
  }
  const Scalar v = parse_scalar(s);
  if (v.is_exact() && sgn(v.rational()) == 0)
    return quarter_turns(0);
  return radians(v.value());
}

Scalar Angle::cos() const {
  if (quarter_) {
    static const long table[4] = {1, 0, -1, 0};
    return Scalar(table[((*quarter_ % 4) + 4) % 4]);
  }
  return Scalar::approx(std::cos(radians_));
}

Scalar Angle::sin() const {
  if (quarter_) {
    static const long table[4] = {0, 1, 0, -1};
    return Scalar(table[((*quarter_ % 4) + 4) % 4]);
  }
  return Scalar::approx(std::sin(radians_));
}

std::string Angle::to_string() const {
  if (quarter_)
    return std::to_string(*quarter_) + "*pi/2";
  return shortest(radians_);
}

bool TransformResult::admissible() const {
  for (const auto &p : predicates)
    if (!p.passed)
      return false;
  return true;
}

namespace {

Predicate nonzero(const std::string &name, const Scalar &v, double tol) {
  return {name, !v.is_zero(tol), v.is_exact(), v.value()};
}

} // namespace

TransformResult transform(const Scalar &le, const Scalar &ln, const Angle &theta, double tol) {
  const Scalar d = le * le - ln * ln;
  const Scalar c = theta.cos(), s = theta.sin();
  const Scalar four(4L), two(2L);
  TransformResult r;
  r.gamma = (d + four) * (Scalar(1L) + c) / two - four + two * ln * s;
  r.lambda_n_prime = ln * c - (d + four) * s / four;
  const Scalar ep = le * le - r.lambda_n_prime * r.lambda_n_prime;
  r.exact = r.gamma.is_exact() && ep.is_exact();
  r.predicates.push_back(nonzero("d != 0", d, tol));
  r.predicates.push_back(nonzero("d != 4", d - four, tol));
  r.predicates.push_back(nonzero("gamma != 0", r.gamma, tol));
  r.predicates.push_back(nonzero("le^2 - ln'^2 != 0", ep, tol));
  r.predicates.push_back(nonzero("le^2 - ln'^2 != gamma^2/4", ep - r.gamma * r.gamma / four, tol));
  if (!ep.is_zero(tol))
    r.target = ParamPair{r.gamma * le / ep, r.gamma * r.lambda_n_prime / ep};
  return r;
}

ParamPair coro1_map(const Scalar &le, const Scalar &ln, double tol) {
  const Scalar d = le * le - ln * ln;
  if (d.is_zero(tol))
    throw DomainError("coro1_map: lambda_e^2 - lambda_n^2 = 0 is excluded");
  if ((d - Scalar(4L)).is_zero(tol))
    throw DomainError("coro1_map: lambda_e^2 - lambda_n^2 = 4 is excluded");
  return {Scalar(-4L) * le / d, Scalar(4L) * ln / d};
}

ParamPair coro2_map(const Scalar &le, const Scalar &ln, int sign, double tol) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("coro2_map: sign must be +1 or -1");
  if (le.is_zero(tol))
    throw DomainError("coro2_map: lambda_e must be nonzero");
  const Scalar d = le * le - ln * ln;
  if (!(d + Scalar(4L)).is_zero(tol))
    throw DomainError("coro2_map: requires lambda_e^2 - lambda_n^2 = -4, got " + d.to_string());
  return {(Scalar(2L * sign) * ln - Scalar(4L)) / le, Scalar(0L)};
}

Coro3Theta coro3_theta(const Scalar &le, const Scalar &ln, double tol) {
  if (le.is_zero(tol) || ln.is_zero(tol))
    throw DomainError("coro3_theta: lambda_e and lambda_n must both be nonzero");
  const Scalar d = le * le - ln * ln;
  const Scalar four(4L), two(2L);
  if (d.is_zero(tol))
    throw DomainError("coro3_theta: lambda_e^2 - lambda_n^2 = 0 is excluded");
  if ((d - four).is_zero(tol))
    throw DomainError("coro3_theta: lambda_e^2 - lambda_n^2 = 4 is excluded");
  if ((d + four).is_zero(tol))
    throw DomainError("coro3_theta: lambda_e^2 - lambda_n^2 = -4 makes the tangent condition "
                      "degenerate; use coro2_map");
  if ((d + two * le - four).is_zero(tol) || (d - two * le - four).is_zero(tol))
    throw DomainError("coro3_theta: lambda_e^2 - lambda_n^2 +- 2 lambda_e = 4 is excluded");

  const Scalar p = Scalar(16L) - d * d;
  const Scalar q = four * le * (d + four);
  const Scalar den = Scalar(16L) + d * d + Scalar(8L) * (le * le + ln * ln);
  Coro3Theta out;
  out.forbidden_cos = {(p / den).value(), ((p + q) / den).value(), ((p - q) / den).value()};
  auto clashes = [&](double c) {
    for (double f : out.forbidden_cos)
      if (std::abs(c - f) <= tol)
        return true;
    return false;
  };
  out.theta = std::atan((four * ln / (d + four)).value());
  out.cos_theta = std::cos(out.theta);
  if (clashes(out.cos_theta)) {
    out.theta += kPi;
    out.cos_theta = std::cos(out.theta);
    out.used_fallback = true;
    if (clashes(out.cos_theta))
      throw std::logic_error("coro3_theta: both branches hit a forbidden cosine");
  }
  return out;
}

Coro3Result coro3_map(const Scalar &le, const Scalar &ln, double tol) {
  Coro3Result r;
  r.theta = coro3_theta(le, ln, tol);
  const double t = r.theta.theta;
  r.value = (2.0 * ln.value() * (1.0 + std::cos(t)) / std::sin(t) - 4.0) / le.value();
  const TransformResult tr = transform(le, ln, Angle::radians(t), tol);
  r.gamma = tr.gamma.value();
  r.lambda_n_prime = tr.lambda_n_prime.value();
  r.target = {Scalar::approx(r.value), Scalar(0L)};
  return r;
}

RegionLabel classify_region(const Scalar &le, const Scalar &ln, double tol) {
  RegionLabel r;
  const Scalar four(4L), two(2L);
  r.d = le * le - ln * ln;
  r.exact = r.d.is_exact();
  r.on_d0 = r.d.is_zero(tol);
  r.on_d4 = (r.d - four).is_zero(tol);
  r.on_dm4 = (r.d + four).is_zero(tol);
  r.on_red_plus = (r.d + two * le - four).is_zero(tol);
  r.on_red_minus = (r.d - two * le - four).is_zero(tol);
  const bool le0 = le.is_zero(tol), ln0 = ln.is_zero(tol);
  if (!r.on_d0 && !r.on_d4) {
    r.applicable.push_back("self_adjoint");
    r.applicable.push_back("coro1");
  }
  if (!le0 && r.on_dm4)
    r.applicable.push_back("coro2");
  if (!le0 && !ln0 && !r.on_d0 && !r.on_abs_d4() && !r.on_red_plus && !r.on_red_minus)
    r.applicable.push_back("coro3");
  return r;
}

GridSpec GridSpec::parse(const std::string &text) {
  const std::string s = strip(text);
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw ParseError("grid '" + text + "': expected 'le_min:le_max:n,ln_min:ln_max:n'");
  auto axis = [&](const std::string &part, double &lo, double &hi, int &n) {
    const auto a = part.find(':');
    const auto b = a == std::string::npos ? a : part.find(':', a + 1);
    if (a == std::string::npos || b == std::string::npos || part.find(':', b + 1) != std::string::npos)
      throw ParseError("grid '" + text + "': axis '" + part + "' must be min:max:n");
    lo = parse_scalar(part.substr(0, a)).value();
    hi = parse_scalar(part.substr(a + 1, b - a - 1)).value();
    const std::string count = part.substr(b + 1);
    std::size_t used = 0;
    try {
      n = std::stoi(count, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used == 0 || used != count.size())
      throw ParseError("grid '" + text + "': bad point count '" + count + "'");
  };
  GridSpec g;
  axis(s.substr(0, comma), g.le_min, g.le_max, g.le_count);
  axis(s.substr(comma + 1), g.ln_min, g.ln_max, g.ln_count);
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (!(le_min < le_max) || !(ln_min < ln_max))
    throw DomainError("grid: empty range");
  if (le_count < 2 || ln_count < 2)
    throw DomainError("grid: need at least two points per axis");
}

std::vector<CurvePoint> region_curves(const GridSpec &g) {
  g.validate();
  std::vector<CurvePoint> out;
  const double slack = 1e-12 * std::max({1.0, std::abs(g.le_min), std::abs(g.le_max),
                                         std::abs(g.ln_min), std::abs(g.ln_max)});
  auto in_box = [&](double le, double ln) {
    return le >= g.le_min - slack && le <= g.le_max + slack && ln >= g.ln_min - slack &&
           ln <= g.ln_max + slack;
  };
  auto add = [&](const char *id, double le, double ln) {
    if (in_box(le, ln))
      out.push_back({id, le, ln});
  };
  auto le_at = [&](int k) { return g.le_min + (g.le_max - g.le_min) * k / (g.le_count - 1); };
  auto ln_at = [&](int k) { return g.ln_min + (g.ln_max - g.ln_min) * k / (g.ln_count - 1); };
  for (int k = 0; k < g.le_count; ++k) {
    const double le = le_at(k);
    add("d=0", le, le);
    if (le != 0.0)
      add("d=0", le, -le);
  }
  for (int k = 0; k < g.ln_count; ++k) {
    const double ln = ln_at(k), r = std::sqrt(4.0 + ln * ln);
    add("d=4", r, ln);
    add("d=4", -r, ln);
  }
  for (int k = 0; k < g.le_count; ++k) {
    const double le = le_at(k), r = std::sqrt(le * le + 4.0);
    add("d=-4", le, r);
    add("d=-4", le, -r);
  }
  for (int k = 0; k < g.ln_count; ++k) {
    const double ln = ln_at(k), r = std::sqrt(5.0 + ln * ln);
    add("d+2le=4", -1.0 + r, ln);
    add("d+2le=4", -1.0 - r, ln);
    add("d-2le=4", 1.0 + r, ln);
    add("d-2le=4", 1.0 - r, ln);
  }
  return out;
}

std::string region_curves_csv(const std::vector<CurvePoint> &points) {
  std::ostringstream os;
  os << "curve_id,lambda_e,lambda_n\n";
  for (const auto &p : points)
    os << p.curve_id << ',' << shortest(p.lambda_e) << ',' << shortest(p.lambda_n) << '\n';
  return os.str();
}

} // namespace dirac_shell
