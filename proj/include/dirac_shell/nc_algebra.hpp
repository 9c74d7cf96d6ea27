#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dirac_shell/rng.hpp"
#include "dirac_shell/types.hpp"

namespace dirac_shell {

/// Word over the two-letter alphabet {n, C}; n stands for alpha.N and C for the
/// boundary operator C_sigma. The empty word is the identity.
using Word = std::string;

bool is_valid_word(const Word &w);

/// Finite linear combination of words with complex coefficients. Terms with an
/// exactly zero coefficient are never stored.
class NCPoly {
public:
  NCPoly() = default;
  NCPoly(Complex c); // NOLINT: scalars promote implicitly
  NCPoly(double c) : NCPoly(Complex(c, 0.0)) {} // NOLINT

  static NCPoly word(const Word &w, Complex c = 1.0);
  static NCPoly n() { return word("n"); }
  static NCPoly C() { return word("C"); }

  const std::map<Word, Complex> &terms() const { return terms_; }
  Complex coefficient(const Word &w) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t max_length() const;

  NCPoly &operator+=(const NCPoly &o);
  NCPoly &operator-=(const NCPoly &o);
  friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
  friend NCPoly operator-(const NCPoly &a);
  friend NCPoly operator*(const NCPoly &a, const NCPoly &b);

  std::string to_string() const;

private:
  void add_term(const Word &w, Complex c);
  std::map<Word, Complex> terms_;
};

enum class RewriteOrder { Leftmost, Rightmost };

/// Reduces one word with nn -> 1 and CnC -> -n/4. Each step shortens the word,
/// so this terminates after at most |w|/2 steps.
std::pair<Complex, Word> rewrite_word(const Word &w, RewriteOrder order = RewriteOrder::Leftmost);
NCPoly rewrite(const NCPoly &p, RewriteOrder order = RewriteOrder::Leftmost);
/// True when the word contains neither nn nor CnC.
bool is_normal_word(const Word &w);

struct IdentityResult {
  bool equal = false;
  /// max over words of |lhs - rhs| after rewriting.
  double deviation = 0.0;
  /// deviation / max(1, largest coefficient magnitude).
  double relative_deviation = 0.0;
  NCPoly lhs;
  NCPoly rhs;
  /// Every word of both sides lies in {1, n, C, Cn}.
  bool closed_over_basis = false;
};

/// Rewrites both sides and compares coefficients. Equality is decided on the
/// relative deviation.
IdentityResult verify_identity(const NCPoly &lhs, const NCPoly &rhs, double tolerance = 1e-12);

/// Lambda = l1 + l2 n - C with l1 = -le/d, l2 = ln/d.
NCPoly electrostatic_lambda(double lambda_e, double lambda_n);
/// Lambda_z = (ln' n - le)/gamma - C.
NCPoly gauged_lambda(double lambda_e, double lambda_n, double theta);

/// Lambda_z ((1+z)/2 + (1-z) i n (Lambda + C)) = ((1+z)/2 - (1-z) i C n) Lambda, z = e^{i theta}.
/// Throws DomainError when d = 0 or gamma = 0.
IdentityResult check_intertwining(double lambda_e, double lambda_n, double theta,
                                  double tolerance = 1e-12);
/// ((1+z)/2 - (1-z) i C n)(l1 + l2 n - C) against its four-term expansion.
IdentityResult check_intertwining_rhs(double l1, double l2, Complex z, double tolerance = 1e-12);
/// Product of ((1+z)/2 + l2 (1-z) i +- l1 (1-z) i n) against the scalar
/// (1+z)^2/4 + (l1^2 - l2^2)(1-z)^2 + l2 (1 - z^2) i.
IdentityResult check_intertwining_product(double l1, double l2, Complex z,
                                          double tolerance = 1e-12);
/// Lambda_+ Lambda_- = 1/d - 1/4 + (ln/d - C n){C, n}. Throws DomainError when d = 0.
IdentityResult check_factorization(double lambda_e, double lambda_n, double tolerance = 1e-12);
/// (-(1/l) n - C)^2 = 1/l^2 + 1/4 + C n {C, n} + {(1/l) n, C}. Throws DomainError when l = 0.
IdentityResult check_magnetic_square(double lambda, double tolerance = 1e-12);
/// (le + ln n)(Lambda + C) = -1. Throws DomainError when d = 0.
IdentityResult check_electrostatic_potential(double lambda_e, double lambda_n,
                                             double tolerance = 1e-12);
/// l n (Lambda_l + C) = -1 with Lambda_l = -(1/l) n - C. Throws DomainError when l = 0.
IdentityResult check_magnetic_potential(double lambda, double tolerance = 1e-12);

struct CatalogueEntry {
  std::string key;
  std::string description;
  /// Draws one admissible random parameter sample and checks the identity there.
  std::function<IdentityResult(SplitMix64 &)> check_random;
};

/// Keys: intertwining, intertwining_rhs, intertwining_product, factorization,
/// magnetic_square, potential_identity, magnetic_potential_identity.
const std::vector<CatalogueEntry> &identity_catalogue();
const CatalogueEntry &catalogue_entry(const std::string &key);

struct CatalogueRun {
  std::string key;
  std::size_t samples = 0;
  std::size_t passed = 0;
  double max_deviation = 0.0;
  double max_relative_deviation = 0.0;
};

CatalogueRun run_catalogue_entry(const CatalogueEntry &entry, std::size_t samples,
                                 SplitMix64 &rng, double tolerance = 1e-12);

} // namespace dirac_shell
