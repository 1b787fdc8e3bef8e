#pragma once

#include "hyperg/gale.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperg {

enum class VarSide { X, Z };

// Monomial exponents are rationals so the same type carries the fractional
// z^{k/κ} bookkeeping of the invariantization module; ordinary rings keep
// them integral (non-Laurent: nonnegative).
struct WeylRing {
  int vars = 0;
  bool laurent = false;
  bool fractional = false;
  VarSide side = VarSide::X;

  bool operator==(const WeylRing& o) const {
    return vars == o.vars && side == o.side;
  }
};

inline WeylRing x_ring(int n, bool laurent = false) { return {n, laurent, false, VarSide::X}; }
inline WeylRing z_ring(int m, bool laurent = false) { return {m, laurent, false, VarSide::Z}; }
inline WeylRing z_frac_ring(int m) { return {m, true, true, VarSide::Z}; }

struct WeylTerm {
  std::vector<Rat> xexp;
  std::vector<int> dexp;
};

struct TermLess {
  bool operator()(const WeylTerm& a, const WeylTerm& b) const {
    for (size_t i = 0; i < a.xexp.size(); ++i) {
      if (a.xexp[i] != b.xexp[i]) return a.xexp[i] < b.xexp[i];
    }
    return a.dexp < b.dexp;
  }
};

// Normal-ordered element of a Weyl algebra: sum of c · x^a ∂^b with all x's
// to the left.  Canonical (lexicographic) term order, no zero coefficients.
class WeylOp {
 public:
  WeylOp() = default;
  explicit WeylOp(WeylRing ring) : ring_(ring) {}

  static WeylOp zero(WeylRing ring) { return WeylOp(ring); }
  static WeylOp constant(WeylRing ring, const Rat& c);
  static WeylOp monomial(WeylRing ring, const std::vector<Rat>& xexp,
                         const std::vector<int>& dexp, const Rat& coeff);
  static WeylOp variable(WeylRing ring, int i);    // x_i
  static WeylOp derivative(WeylRing ring, int i);  // ∂_i
  static WeylOp theta(WeylRing ring, int i);       // x_i ∂_i

  const WeylRing& ring() const { return ring_; }
  const std::map<WeylTerm, Rat, TermLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const WeylTerm& t, const Rat& c);

  WeylOp operator-() const;
  WeylOp operator+(const WeylOp& o) const;
  WeylOp operator-(const WeylOp& o) const;
  WeylOp operator*(const WeylOp& o) const;
  WeylOp scaled(const Rat& c) const;
  WeylOp pow(int k) const;

  bool operator==(const WeylOp& o) const {
    return ring_ == o.ring_ && terms_.size() == o.terms_.size() &&
           std::equal(terms_.begin(), terms_.end(), o.terms_.begin(),
                      [](const auto& a, const auto& b) {
                        return a.second == b.second && a.first.xexp == b.first.xexp &&
                               a.first.dexp == b.first.dexp;
                      });
  }

 private:
  WeylRing ring_;
  std::map<WeylTerm, Rat, TermLess> terms_;
};

// Commutative polynomial with nonnegative integer exponents (θ-polynomials,
// ∂-polynomials, symbols with integer data).
struct CPoly {
  int vars = 0;
  std::map<std::vector<int>, Rat> terms;

  static CPoly zero(int vars) { return CPoly{vars, {}}; }
  static CPoly constant(int vars, const Rat& c);
  static CPoly variable(int vars, int i);

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& e, const Rat& c);
  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly scaled(const Rat& c) const;
  Rat eval(const QVec& point) const;
  int total_degree() const;
  bool operator==(const CPoly& o) const { return vars == o.vars && terms == o.terms; }
};

// Commutative symbol in x_1..x_n, ξ_1..ξ_n (rational x-exponents allowed).
struct CotangentSymbol {
  int vars = 0;
  std::map<WeylTerm, Rat, TermLess> terms;  // xexp ↔ x, dexp ↔ ξ

  bool is_zero() const { return terms.empty(); }
  void add_term(const WeylTerm& t, const Rat& c);
  CotangentSymbol operator*(const CotangentSymbol& o) const;
  bool operator==(const CotangentSymbol& o) const {
    return vars == o.vars &&
           std::equal(terms.begin(), terms.end(), o.terms.begin(), o.terms.end(),
                      [](const auto& a, const auto& b) {
                        return a.second == b.second && a.first.xexp == b.first.xexp &&
                               a.first.dexp == b.first.dexp;
                      });
  }
};

struct WeightVector {
  QVec Lx, Ld;
};

struct InitialForm {
  std::optional<CotangentSymbol> symbol;  // set when Lx+Ld = c·1 with c > 0
  std::optional<WeylOp> op;               // set in the (−w,w) case
};

// Rising/falling helpers shared across modules.
Rat falling_factorial(const Rat& c, int k);
Int binomial(long n, long k);

// A-degree A(u−v) of a homogeneous operator, std::nullopt if mixed.
std::optional<QVec> a_degree(const WeylOp& p, const ZMat& A);

std::vector<WeylOp> euler_operators(const ZMat& A, const QVec& beta, WeylRing ring);

// Decomposition p = Σ x^{Bv} poly_v(θ) of a torus-invariant operator; basis
// selects which lattice the monomial exponents must live in.
enum class LatticeBasis { B, C };
std::vector<std::pair<ZVec, CPoly>> invariant_theta_form(const WeylOp& p,
                                                         const GaleContext& ctx,
                                                         LatticeBasis basis);

InitialForm initial_form(const WeylOp& p, const WeightVector& L);

// op • (coeff · x^e) as a list of (exponent, coefficient) monomials.
std::vector<std::pair<QVec, Rat>> apply_to_monomial(const WeylOp& op, const QVec& exponent,
                                                    const Rat& coeff = Rat(1));

// x_j ↦ x_j + 1 (polynomial exponents only).
WeylOp substitute_shift_one(const WeylOp& op, int j);

// Set x_j = 1 for all j in `vars` and restrict to the first m variables;
// requires the operator to be free of ∂_j for those j.
WeylOp set_vars_to_one(const WeylOp& op, int m, WeylRing target);

// Product of shifted linear forms ∏_ℓ (row·η + shift − ℓ) expanded as a
// normal-ordered operator; `row` indexes B's rows, η_i = z_i ∂_i.
WeylOp linear_form_product(const WeylRing& ring, const ZMat& B,
                           const std::vector<std::pair<int, Rat>>& factors);

std::string to_string(const WeylOp& op);
std::string to_string(const CPoly& p, const std::string& varname);
WeylOp parse_weyl(const std::string& text, WeylRing ring);

}  // namespace hyperg
