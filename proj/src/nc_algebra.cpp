#include "dirac_shell/nc_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dirac_shell {

bool is_valid_word(const Word &w) {
  return std::all_of(w.begin(), w.end(), [](char ch) { return ch == 'n' || ch == 'C'; });
}

NCPoly::NCPoly(Complex c) { add_term(Word{}, c); }

NCPoly NCPoly::word(const Word &w, Complex c) {
  if (!is_valid_word(w))
    throw std::invalid_argument("NCPoly: word '" + w + "' uses letters outside {n, C}");
  NCPoly p;
  p.add_term(w, c);
  return p;
}

void NCPoly::add_term(const Word &w, Complex c) {
  if (c == Complex(0.0, 0.0))
    return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0, 0.0))
      terms_.erase(it);
  }
}

Complex NCPoly::coefficient(const Word &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

std::size_t NCPoly::max_length() const {
  std::size_t m = 0;
  for (const auto &[w, c] : terms_)
    m = std::max(m, w.size());
  return m;
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o) {
  for (const auto &[w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

NCPoly operator-(const NCPoly &a) {
  NCPoly out;
  for (const auto &[w, c] : a.terms_)
    out.add_term(w, -c);
  return out;
}

NCPoly operator*(const NCPoly &a, const NCPoly &b) {
  NCPoly out;
  for (const auto &[wa, ca] : a.terms_)
    for (const auto &[wb, cb] : b.terms_)
      out.add_term(wa + wb, ca * cb);
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto &[w, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
    os << (w.empty() ? "1" : w);
  }
  return os.str();
}

bool is_normal_word(const Word &w) {
  return w.find("nn") == Word::npos && w.find("CnC") == Word::npos;
}

std::pair<Complex, Word> rewrite_word(const Word &w, RewriteOrder order) {
  if (!is_valid_word(w))
    throw std::invalid_argument("rewrite_word: word '" + w + "' uses letters outside {n, C}");
  Complex coef(1.0, 0.0);
  Word cur = w;
  for (;;) {
    std::size_t nn, cnc;
    if (order == RewriteOrder::Leftmost) {
      nn = cur.find("nn");
      cnc = cur.find("CnC");
    } else {
      nn = cur.rfind("nn");
      cnc = cur.rfind("CnC");
    }
    if (nn == Word::npos && cnc == Word::npos)
      return {coef, cur};
    bool use_nn;
    if (nn == Word::npos)
      use_nn = false;
    else if (cnc == Word::npos)
      use_nn = true;
    else
      use_nn = order == RewriteOrder::Leftmost ? nn < cnc : nn > cnc;
    if (use_nn) {
      cur.erase(nn, 2);
    } else {
      cur.replace(cnc, 3, "n");
      coef *= -0.25;
    }
  }
}

NCPoly rewrite(const NCPoly &p, RewriteOrder order) {
  NCPoly out;
  for (const auto &[w, c] : p.terms()) {
    const auto [k, nw] = rewrite_word(w, order);
    out += NCPoly::word(nw, k * c);
  }
  return out;
}

IdentityResult verify_identity(const NCPoly &lhs, const NCPoly &rhs, double tolerance) {
  IdentityResult r;
  r.lhs = rewrite(lhs);
  r.rhs = rewrite(rhs);
  double scale = 1.0;
  auto scan = [&](const NCPoly &p) {
    for (const auto &[w, c] : p.terms())
      scale = std::max(scale, std::abs(c));
  };
  scan(r.lhs);
  scan(r.rhs);
  const NCPoly diff = r.lhs - r.rhs;
  for (const auto &[w, c] : diff.terms())
    r.deviation = std::max(r.deviation, std::abs(c));
  r.relative_deviation = r.deviation / scale;
  r.equal = r.relative_deviation <= tolerance;
  auto in_basis = [](const NCPoly &p) {
    for (const auto &[w, c] : p.terms())
      if (w != "" && w != "n" && w != "C" && w != "Cn")
        return false;
    return true;
  };
  r.closed_over_basis = in_basis(r.lhs) && in_basis(r.rhs);
  return r;
}

namespace {

double checked_d(double le, double ln) {
  const double d = le * le - ln * ln;
  if (d == 0.0 || !std::isfinite(d))
    throw DomainError("lambda_e^2 - lambda_n^2 must be nonzero and finite");
  return d;
}

double gamma_of(double le, double ln, double theta) {
  const double d = le * le - ln * ln;
  const double s = std::sin(0.5 * theta);
  return d - (d + 4.0) * s * s + 2.0 * ln * std::sin(theta);
}

NCPoly anticomm(const NCPoly &a, const NCPoly &b) { return a * b + b * a; }

const NCPoly kN = NCPoly::n();
const NCPoly kC = NCPoly::C();

} // namespace

NCPoly electrostatic_lambda(double lambda_e, double lambda_n) {
  const double d = checked_d(lambda_e, lambda_n);
  return NCPoly(-lambda_e / d) + NCPoly(lambda_n / d) * kN - kC;
}

NCPoly gauged_lambda(double lambda_e, double lambda_n, double theta) {
  checked_d(lambda_e, lambda_n);
  const double g = gamma_of(lambda_e, lambda_n, theta);
  if (g == 0.0)
    throw DomainError("gamma vanishes for these parameters");
  const double d = lambda_e * lambda_e - lambda_n * lambda_n;
  const double lnp = lambda_n * std::cos(theta) - 0.25 * (d + 4.0) * std::sin(theta);
  return NCPoly(-lambda_e / g) + NCPoly(lnp / g) * kN - kC;
}

IdentityResult check_intertwining(double lambda_e, double lambda_n, double theta,
                                  double tolerance) {
  const NCPoly lam = electrostatic_lambda(lambda_e, lambda_n);
  const NCPoly lam_z = gauged_lambda(lambda_e, lambda_n, theta);
  const Complex z = std::polar(1.0, theta);
  const NCPoly half = NCPoly(0.5 * (1.0 + z));
  const NCPoly mi = NCPoly((1.0 - z) * kI);
  const NCPoly lhs = lam_z * (half + mi * kN * (lam + kC));
  const NCPoly rhs = (half - mi * kC * kN) * lam;
  return verify_identity(lhs, rhs, tolerance);
}

IdentityResult check_intertwining_rhs(double l1, double l2, Complex z, double tolerance) {
  const NCPoly mi = NCPoly((1.0 - z) * kI);
  const NCPoly lhs =
      (NCPoly(0.5 * (1.0 + z)) - mi * kC * kN) * (NCPoly(l1) + NCPoly(l2) * kN - kC);
  const NCPoly rhs = NCPoly(l1 * 0.5 * (1.0 + z)) +
                     NCPoly(l2 * 0.5 * (1.0 + z) - 0.25 * (1.0 - z) * kI) * kN -
                     NCPoly(l1 * (1.0 - z) * kI) * kC * kN -
                     NCPoly(0.5 * (1.0 + z) + l2 * (1.0 - z) * kI) * kC;
  return verify_identity(lhs, rhs, tolerance);
}

IdentityResult check_intertwining_product(double l1, double l2, Complex z, double tolerance) {
  const NCPoly a = NCPoly(0.5 * (1.0 + z) + l2 * (1.0 - z) * kI);
  const NCPoly b = NCPoly(l1 * (1.0 - z) * kI) * kN;
  const NCPoly lhs = (a + b) * (a - b);
  const NCPoly rhs = NCPoly(0.25 * (1.0 + z) * (1.0 + z) + (l1 * l1 - l2 * l2) * (1.0 - z) * (1.0 - z) +
                            l2 * (1.0 - z * z) * kI);
  return verify_identity(lhs, rhs, tolerance);
}

IdentityResult check_factorization(double lambda_e, double lambda_n, double tolerance) {
  const double d = checked_d(lambda_e, lambda_n);
  const NCPoly plus = NCPoly(lambda_e / d) - NCPoly(lambda_n / d) * kN + kC;
  const NCPoly minus = NCPoly(lambda_e / d) + NCPoly(lambda_n / d) * kN - kC;
  const NCPoly rhs =
      NCPoly(1.0 / d - 0.25) + (NCPoly(lambda_n / d) - kC * kN) * anticomm(kC, kN);
  return verify_identity(plus * minus, rhs, tolerance);
}

IdentityResult check_magnetic_square(double lambda, double tolerance) {
  if (lambda == 0.0 || !std::isfinite(lambda))
    throw DomainError("check_magnetic_square: lambda must be finite and nonzero");
  const NCPoly inv_n = NCPoly(1.0 / lambda) * kN;
  const NCPoly lam = -inv_n - kC;
  const NCPoly rhs = NCPoly(1.0 / (lambda * lambda) + 0.25) + kC * kN * anticomm(kC, kN) +
                     anticomm(inv_n, kC);
  return verify_identity(lam * lam, rhs, tolerance);
}

IdentityResult check_electrostatic_potential(double lambda_e, double lambda_n, double tolerance) {
  const NCPoly v = NCPoly(lambda_e) + NCPoly(lambda_n) * kN;
  return verify_identity(v * (electrostatic_lambda(lambda_e, lambda_n) + kC), NCPoly(-1.0),
                         tolerance);
}

IdentityResult check_magnetic_potential(double lambda, double tolerance) {
  if (lambda == 0.0 || !std::isfinite(lambda))
    throw DomainError("check_magnetic_potential: lambda must be finite and nonzero");
  const NCPoly lam = -NCPoly(1.0 / lambda) * kN - kC;
  return verify_identity(NCPoly(lambda) * kN * (lam + kC), NCPoly(-1.0), tolerance);
}

namespace {

std::pair<double, double> admissible_pair(SplitMix64 &rng) {
  for (;;) {
    const double le = rng.uniform(-5.0, 5.0), ln = rng.uniform(-5.0, 5.0);
    if (std::abs(le * le - ln * ln) > 0.1)
      return {le, ln};
  }
}

double nonzero_scalar(SplitMix64 &rng) {
  for (;;) {
    const double l = rng.uniform(-5.0, 5.0);
    if (std::abs(l) > 0.1)
      return l;
  }
}

std::vector<CatalogueEntry> build_catalogue() {
  std::vector<CatalogueEntry> c;
  c.push_back({"intertwining",
               "Lambda_z((1+z)/2 + (1-z) i n (Lambda + C)) = ((1+z)/2 - (1-z) i C n) Lambda",
               [](SplitMix64 &rng) {
                 for (;;) {
                   const auto [le, ln] = admissible_pair(rng);
                   const double th = rng.uniform(-kPi, kPi);
                   if (std::abs(gamma_of(le, ln, th)) > 0.1)
                     return check_intertwining(le, ln, th);
                 }
               }});
  c.push_back({"intertwining_rhs",
               "((1+z)/2 - (1-z) i C n)(l1 + l2 n - C) in four-term form", [](SplitMix64 &rng) {
                 const double l1 = rng.uniform(-5.0, 5.0), l2 = rng.uniform(-5.0, 5.0);
                 return check_intertwining_rhs(l1, l2, std::polar(1.0, rng.uniform(-kPi, kPi)));
               }});
  c.push_back({"intertwining_product",
               "((1+z)/2 + l2(1-z)i + l1(1-z)i n)((1+z)/2 + l2(1-z)i - l1(1-z)i n) is scalar",
               [](SplitMix64 &rng) {
                 const double l1 = rng.uniform(-5.0, 5.0), l2 = rng.uniform(-5.0, 5.0);
                 return check_intertwining_product(l1, l2,
                                                   std::polar(1.0, rng.uniform(-kPi, kPi)));
               }});
  c.push_back({"factorization", "Lambda_+ Lambda_- = 1/d - 1/4 + (ln/d - C n){C, n}",
               [](SplitMix64 &rng) {
                 const auto [le, ln] = admissible_pair(rng);
                 return check_factorization(le, ln);
               }});
  c.push_back({"magnetic_square",
               "(-(1/l) n - C)^2 = 1/l^2 + 1/4 + C n {C, n} + {(1/l) n, C}",
               [](SplitMix64 &rng) { return check_magnetic_square(nonzero_scalar(rng)); }});
  c.push_back({"potential_identity", "(le + ln n)(Lambda + C) = -1", [](SplitMix64 &rng) {
                 const auto [le, ln] = admissible_pair(rng);
                 return check_electrostatic_potential(le, ln);
               }});
  c.push_back({"magnetic_potential_identity", "l n (Lambda_l + C) = -1",
               [](SplitMix64 &rng) { return check_magnetic_potential(nonzero_scalar(rng)); }});
  return c;
}

} // namespace

const std::vector<CatalogueEntry> &identity_catalogue() {
  static const std::vector<CatalogueEntry> catalogue = build_catalogue();
  return catalogue;
}

const CatalogueEntry &catalogue_entry(const std::string &key) {
  for (const auto &e : identity_catalogue())
    if (e.key == key)
      return e;
  throw std::invalid_argument("unknown identity '" + key + "'");
}

CatalogueRun run_catalogue_entry(const CatalogueEntry &entry, std::size_t samples,
                                 SplitMix64 &rng, double tolerance) {
  CatalogueRun run;
  run.key = entry.key;
  run.samples = samples;
  for (std::size_t k = 0; k < samples; ++k) {
    const IdentityResult r = entry.check_random(rng);
    run.max_deviation = std::max(run.max_deviation, r.deviation);
    run.max_relative_deviation = std::max(run.max_relative_deviation, r.relative_deviation);
    if (r.relative_deviation <= tolerance)
      ++run.passed;
  }
  return run;
}

} // namespace dirac_shell
