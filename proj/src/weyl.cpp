#include "hyperg/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hyperg {

Rat falling_factorial(const Rat& c, int k) {
  Rat out = 1;
  for (int l = 0; l < k; ++l) out *= (c - l);
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

WeylOp WeylOp::constant(WeylRing ring, const Rat& c) {
  WeylOp op(ring);
  WeylTerm t{std::vector<Rat>(static_cast<size_t>(ring.vars), Rat(0)),
             std::vector<int>(static_cast<size_t>(ring.vars), 0)};
  op.add_term(t, c);
  return op;
}

WeylOp WeylOp::monomial(WeylRing ring, const std::vector<Rat>& xexp,
                        const std::vector<int>& dexp, const Rat& coeff) {
  WeylOp op(ring);
  op.add_term(WeylTerm{xexp, dexp}, coeff);
  return op;
}

WeylOp WeylOp::variable(WeylRing ring, int i) {
  std::vector<Rat> a(static_cast<size_t>(ring.vars), Rat(0));
  std::vector<int> b(static_cast<size_t>(ring.vars), 0);
  a[static_cast<size_t>(i)] = 1;
  return monomial(ring, a, b, 1);
}

WeylOp WeylOp::derivative(WeylRing ring, int i) {
  std::vector<Rat> a(static_cast<size_t>(ring.vars), Rat(0));
  std::vector<int> b(static_cast<size_t>(ring.vars), 0);
  b[static_cast<size_t>(i)] = 1;
  return monomial(ring, a, b, 1);
}

WeylOp WeylOp::theta(WeylRing ring, int i) {
  std::vector<Rat> a(static_cast<size_t>(ring.vars), Rat(0));
  std::vector<int> b(static_cast<size_t>(ring.vars), 0);
  a[static_cast<size_t>(i)] = 1;
  b[static_cast<size_t>(i)] = 1;
  return monomial(ring, a, b, 1);
}

void WeylOp::add_term(const WeylTerm& t, const Rat& c) {
  if (static_cast<int>(t.xexp.size()) != ring_.vars ||
      static_cast<int>(t.dexp.size()) != ring_.vars)
    throw invalid("term arity does not match ring");
  if (c == 0) return;
  for (int i = 0; i < ring_.vars; ++i) {
    if (t.dexp[static_cast<size_t>(i)] < 0) throw invalid("negative derivative exponent");
    const Rat& x = t.xexp[static_cast<size_t>(i)];
    if (!ring_.fractional && !is_integer(x)) throw invalid("fractional exponent outside fractional ring");
    if (!ring_.laurent && x < 0) throw invalid("negative exponent outside Laurent ring");
  }
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylOp WeylOp::operator-() const { return scaled(Rat(-1)); }

WeylOp WeylOp::operator+(const WeylOp& o) const {
  if (!(ring_ == o.ring_)) throw invalid("ring mismatch");
  WeylOp out = *this;
  out.ring_.laurent = ring_.laurent || o.ring_.laurent;
  out.ring_.fractional = ring_.fractional || o.ring_.fractional;
  for (const auto& [t, c] : o.terms_) out.add_term(t, c);
  return out;
}

WeylOp WeylOp::operator-(const WeylOp& o) const { return *this + (-o); }

WeylOp WeylOp::scaled(const Rat& c) const {
  WeylOp out(ring_);
  if (c == 0) return out;
  for (const auto& [t, v] : terms_) out.terms_.emplace(t, Rat(v * c));
  return out;
}

WeylOp WeylOp::operator*(const WeylOp& o) const {
  if (!(ring_ == o.ring_)) throw invalid("ring mismatch");
  WeylRing rr = ring_;
  rr.laurent = ring_.laurent || o.ring_.laurent;
  rr.fractional = ring_.fractional || o.ring_.fractional;
  WeylOp out(rr);
  const int n = ring_.vars;
  for (const auto& [lt, lc] : terms_) {
    for (const auto& [rt, rc] : o.terms_) {
      // ∂^b x^c = Σ_k  C(b,k) (c)_k x^{c-k} ∂^{b-k}, independently per variable
      std::vector<int> k(static_cast<size_t>(n), 0);
      for (;;) {
        Rat coeff = lc * rc;
        for (int i = 0; i < n && coeff != 0; ++i) {
          int ki = k[static_cast<size_t>(i)];
          if (ki == 0) continue;
          coeff *= Rat(binomial(lt.dexp[static_cast<size_t>(i)], ki));
          coeff *= falling_factorial(rt.xexp[static_cast<size_t>(i)], ki);
        }
        if (coeff != 0) {
          WeylTerm t;
          t.xexp.resize(static_cast<size_t>(n));
          t.dexp.resize(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i) {
            t.xexp[static_cast<size_t>(i)] =
                lt.xexp[static_cast<size_t>(i)] + rt.xexp[static_cast<size_t>(i)] - k[static_cast<size_t>(i)];
            t.dexp[static_cast<size_t>(i)] =
                lt.dexp[static_cast<size_t>(i)] + rt.dexp[static_cast<size_t>(i)] - k[static_cast<size_t>(i)];
          }
          out.add_term(t, coeff);
        }
        // odometer over 0 <= k_i <= b_i
        int i = 0;
        for (; i < n; ++i) {
          if (k[static_cast<size_t>(i)] < lt.dexp[static_cast<size_t>(i)]) {
            ++k[static_cast<size_t>(i)];
            break;
          }
          k[static_cast<size_t>(i)] = 0;
        }
        if (i == n) break;
      }
    }
  }
  return out;
}

WeylOp WeylOp::pow(int k) const {
  if (k < 0) throw invalid("negative operator power");
  WeylOp out = WeylOp::constant(ring_, 1);
  for (int i = 0; i < k; ++i) out = out * (*this);
  return out;
}

CPoly CPoly::constant(int vars, const Rat& c) {
  CPoly p{vars, {}};
  p.add_term(std::vector<int>(static_cast<size_t>(vars), 0), c);
  return p;
}

CPoly CPoly::variable(int vars, int i) {
  CPoly p{vars, {}};
  std::vector<int> e(static_cast<size_t>(vars), 0);
  e[static_cast<size_t>(i)] = 1;
  p.add_term(e, 1);
  return p;
}

void CPoly::add_term(const std::vector<int>& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly out = *this;
  for (const auto& [e, c] : o.terms) out.add_term(e, c);
  return out;
}

CPoly CPoly::operator-(const CPoly& o) const { return *this + o.scaled(Rat(-1)); }

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly out{vars, {}};
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      std::vector<int> e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, Rat(c1 * c2));
    }
  return out;
}

CPoly CPoly::scaled(const Rat& c) const {
  CPoly out{vars, {}};
  if (c == 0) return out;
  for (const auto& [e, v] : terms) out.terms.emplace(e, Rat(v * c));
  return out;
}

Rat CPoly::eval(const QVec& point) const {
  Rat out = 0;
  for (const auto& [e, c] : terms) {
    Rat v = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) v *= point(static_cast<Eigen::Index>(i));
    out += v;
  }
  return out;
}

int CPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void CotangentSymbol::add_term(const WeylTerm& t, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(t);
  if (it == terms.end()) {
    terms.emplace(t, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

CotangentSymbol CotangentSymbol::operator*(const CotangentSymbol& o) const {
  CotangentSymbol out{vars, {}};
  for (const auto& [t1, c1] : terms)
    for (const auto& [t2, c2] : o.terms) {
      WeylTerm t;
      t.xexp.resize(t1.xexp.size());
      t.dexp.resize(t1.dexp.size());
      for (size_t i = 0; i < t.xexp.size(); ++i) {
        t.xexp[i] = t1.xexp[i] + t2.xexp[i];
        t.dexp[i] = t1.dexp[i] + t2.dexp[i];
      }
      out.add_term(t, Rat(c1 * c2));
    }
  return out;
}

std::optional<QVec> a_degree(const WeylOp& p, const ZMat& A) {
  if (A.cols() != p.ring().vars) throw invalid("grading matrix arity mismatch");
  std::optional<QVec> deg;
  for (const auto& [t, c] : p.terms()) {
    QVec diff(A.cols());
    for (Eigen::Index i = 0; i < A.cols(); ++i)
      diff(i) = t.xexp[static_cast<size_t>(i)] - t.dexp[static_cast<size_t>(i)];
    QVec d = to_q(A) * diff;
    if (!deg) {
      deg = d;
    } else if (!mat_eq(*deg, d)) {
      return std::nullopt;
    }
  }
  if (!deg) deg = QVec::Zero(A.rows());  // the zero operator is homogeneous
  return deg;
}

std::vector<WeylOp> euler_operators(const ZMat& A, const QVec& beta, WeylRing ring) {
  if (A.cols() != ring.vars || beta.size() != A.rows())
    throw invalid("Euler operator dimension mismatch");
  std::vector<WeylOp> out;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    WeylOp e = WeylOp::constant(ring, -beta(i));
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0)
        e = e + WeylOp::theta(ring, static_cast<int>(j)).scaled(Rat(A(i, j)));
    out.push_back(e);
  }
  return out;
}

std::vector<std::pair<ZVec, CPoly>> invariant_theta_form(const WeylOp& p,
                                                         const GaleContext& ctx,
                                                         LatticeBasis basis) {
  auto deg = a_degree(p, ctx.A);
  if (!deg || !mat_is_zero(*deg)) throw invalid("not torus invariant");
  const ZMat& M = (basis == LatticeBasis::B) ? ctx.B : ctx.C;
  std::map<std::vector<Int>, CPoly> acc;
  const int n = p.ring().vars;
  for (const auto& [t, c] : p.terms()) {
    ZVec w(n);
    for (int i = 0; i < n; ++i) {
      const Rat& x = t.xexp[static_cast<size_t>(i)];
      if (!is_integer(x)) throw invalid("fractional exponent has no theta form");
      w(i) = x.get_num() - t.dexp[static_cast<size_t>(i)];
    }
    auto v = solve_integer(M, w);
    if (!v) throw invalid("outside lattice image");
    CPoly poly = CPoly::constant(n, c);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < t.dexp[static_cast<size_t>(i)]; ++l)
        poly = poly * (CPoly::variable(n, i) - CPoly::constant(n, rat(l)));
    std::vector<Int> key(static_cast<size_t>(v->size()));
    for (Eigen::Index i = 0; i < v->size(); ++i) key[static_cast<size_t>(i)] = (*v)(i);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, poly);
    else
      it->second = it->second + poly;
  }
  std::vector<std::pair<ZVec, CPoly>> out;
  for (const auto& [key, poly] : acc) {
    if (poly.is_zero()) continue;
    ZVec v(static_cast<Eigen::Index>(key.size()));
    for (size_t i = 0; i < key.size(); ++i) v(static_cast<Eigen::Index>(i)) = key[i];
    out.push_back({v, poly});
  }
  return out;
}

InitialForm initial_form(const WeylOp& p, const WeightVector& L) {
  if (p.is_zero()) throw invalid("initial form of the zero operator");
  const int n = p.ring().vars;
  if (L.Lx.size() != n || L.Ld.size() != n) throw invalid("weight vector arity mismatch");
  Rat c = L.Lx(0) + L.Ld(0);
  for (Eigen::Index i = 0; i < n; ++i)
    if (L.Lx(i) + L.Ld(i) != c) throw invalid("weight vector must satisfy Lx+Ld = c·1");
  if (c < 0) throw invalid("weight vector must satisfy c >= 0");

  bool first = true;
  Rat top = 0;
  for (const auto& [t, coeff] : p.terms()) {
    Rat w = 0;
    for (int i = 0; i < n; ++i)
      w += L.Lx(i) * t.xexp[static_cast<size_t>(i)] + L.Ld(i) * Rat(t.dexp[static_cast<size_t>(i)]);
    if (first || w > top) {
      top = w;
      first = false;
    }
  }

  InitialForm out;
  if (c > 0) {
    CotangentSymbol sym{n, {}};
    for (const auto& [t, coeff] : p.terms()) {
      Rat w = 0;
      for (int i = 0; i < n; ++i)
        w += L.Lx(i) * t.xexp[static_cast<size_t>(i)] + L.Ld(i) * Rat(t.dexp[static_cast<size_t>(i)]);
      if (w == top) sym.add_term(t, coeff);
    }
    out.symbol = sym;
  } else {
    WeylOp op(p.ring());
    for (const auto& [t, coeff] : p.terms()) {
      Rat w = 0;
      for (int i = 0; i < n; ++i)
        w += L.Lx(i) * t.xexp[static_cast<size_t>(i)] + L.Ld(i) * Rat(t.dexp[static_cast<size_t>(i)]);
      if (w == top) op.add_term(t, coeff);
    }
    out.op = op;
  }
  return out;
}

std::vector<std::pair<QVec, Rat>> apply_to_monomial(const WeylOp& op, const QVec& exponent,
                                                    const Rat& coeff) {
  const int n = op.ring().vars;
  if (exponent.size() != n) throw invalid("monomial arity mismatch");
  std::map<std::vector<Rat>, Rat> acc;
  for (const auto& [t, c] : op.terms()) {
    Rat v = c * coeff;
    for (int i = 0; i < n && v != 0; ++i)
      v *= falling_factorial(exponent(i), t.dexp[static_cast<size_t>(i)]);
    if (v == 0) continue;
    std::vector<Rat> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      e[static_cast<size_t>(i)] = exponent(i) + t.xexp[static_cast<size_t>(i)] -
                                  Rat(t.dexp[static_cast<size_t>(i)]);
    auto it = acc.find(e);
    if (it == acc.end())
      acc.emplace(e, v);
    else {
      it->second += v;
      if (it->second == 0) acc.erase(it);
    }
  }
  std::vector<std::pair<QVec, Rat>> out;
  for (const auto& [e, v] : acc) {
    QVec q(static_cast<Eigen::Index>(e.size()));
    for (size_t i = 0; i < e.size(); ++i) q(static_cast<Eigen::Index>(i)) = e[i];
    out.push_back({q, v});
  }
  return out;
}

WeylOp substitute_shift_one(const WeylOp& op, int j) {
  WeylOp out(op.ring());
  for (const auto& [t, c] : op.terms()) {
    const Rat& xj = t.xexp[static_cast<size_t>(j)];
    if (!is_integer(xj) || xj < 0) throw invalid("shift substitution needs polynomial exponents");
    long a = to_long(xj.get_num());
    for (long k = 0; k <= a; ++k) {
      WeylTerm nt = t;
      nt.xexp[static_cast<size_t>(j)] = rat(k);
      out.add_term(nt, Rat(c * Rat(binomial(a, k))));
    }
  }
  return out;
}

WeylOp set_vars_to_one(const WeylOp& op, int m, WeylRing target) {
  if (target.vars != m) throw invalid("target ring arity mismatch");
  WeylOp out(target);
  for (const auto& [t, c] : op.terms()) {
    for (size_t i = static_cast<size_t>(m); i < t.dexp.size(); ++i)
      if (t.dexp[i] != 0) throw invalid("operator still involves a restricted derivative");
    WeylTerm nt;
    nt.xexp.assign(t.xexp.begin(), t.xexp.begin() + m);
    nt.dexp.assign(t.dexp.begin(), t.dexp.begin() + m);
    out.add_term(nt, c);
  }
  return out;
}

WeylOp linear_form_product(const WeylRing& ring, const ZMat& B,
                           const std::vector<std::pair<int, Rat>>& factors) {
  WeylOp out = WeylOp::constant(ring, 1);
  for (const auto& [row, shift] : factors) {
    WeylOp f = WeylOp::constant(ring, shift);
    for (Eigen::Index j = 0; j < B.cols(); ++j)
      if (B(row, j) != 0) f = f + WeylOp::theta(ring, static_cast<int>(j)).scaled(Rat(B(row, j)));
    out = out * f;
  }
  return out;
}

namespace {

std::string var_name(VarSide side, bool deriv, int i) {
  std::string base = (side == VarSide::X) ? "x" : "z";
  return (deriv ? "d" + base : base) + std::to_string(i + 1);
}

std::string exp_str(const Rat& e) {
  if (is_integer(e)) return e.get_num().get_str();
  return "(" + rat_str(e) + ")";
}

}  // namespace

std::string to_string(const WeylOp& op) {
  if (op.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : op.terms()) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::vector<std::string> parts;
    for (size_t i = 0; i < t.xexp.size(); ++i)
      if (t.xexp[i] != 0) {
        std::string p = var_name(op.ring().side, false, static_cast<int>(i));
        if (t.xexp[i] != 1) p += "^" + exp_str(t.xexp[i]);
        parts.push_back(p);
      }
    for (size_t i = 0; i < t.dexp.size(); ++i)
      if (t.dexp[i] != 0) {
        std::string p = var_name(op.ring().side, true, static_cast<int>(i));
        if (t.dexp[i] != 1) p += "^" + std::to_string(t.dexp[i]);
        parts.push_back(p);
      }
    if (parts.empty()) {
      os << rat_str(coeff);
    } else {
      if (coeff != 1) os << rat_str(coeff) << "*";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "*";
        os << parts[i];
      }
    }
  }
  return os.str();
}

std::string to_string(const CPoly& p, const std::string& varname) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    std::vector<std::string> parts;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) {
        std::string part = varname + std::to_string(i + 1);
        if (e[i] != 1) part += "^" + std::to_string(e[i]);
        parts.push_back(part);
      }
    if (parts.empty()) {
      os << rat_str(coeff);
    } else {
      if (coeff != 1) os << rat_str(coeff) << "*";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "*";
        os << parts[i];
      }
    }
  }
  return os.str();
}

namespace {

struct Parser {
  std::string s;
  size_t pos = 0;
  WeylRing ring;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  Int integer() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw invalid("expected integer in operator text");
    return Int(s.substr(start, pos - start));
  }

  Rat exponent() {
    if (eat('(')) {
      Int num = integer();
      Rat r(num);
      if (eat('/')) r = rat(num, integer());
      if (!eat(')')) throw invalid("unbalanced exponent parenthesis");
      return r;
    }
    return Rat(integer());
  }

  WeylOp factor() {
    skip();
    if (pos >= s.size()) throw invalid("unexpected end of operator text");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      Rat r(num);
      if (eat('/')) r = rat(num, integer());
      return WeylOp::constant(ring, r);
    }
    if (eat('(')) {
      WeylOp inner = expr();
      if (!eat(')')) throw invalid("unbalanced parenthesis");
      return maybe_power(inner);
    }
    // identifier
    size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name = s.substr(start, pos - start);
    size_t numStart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (numStart == pos) throw invalid("variable '" + name + "' needs an index");
    int idx = std::stoi(s.substr(numStart, pos - numStart)) - 1;
    if (idx < 0 || idx >= ring.vars) throw invalid("variable index out of range");
    WeylOp base(ring);
    if (name == "x" || name == "z")
      base = WeylOp::variable(ring, idx);
    else if (name == "dx" || name == "dz")
      base = WeylOp::derivative(ring, idx);
    else if (name == "t" || name == "e")
      base = WeylOp::theta(ring, idx);
    else
      throw invalid("unknown variable '" + name + "'");
    return maybe_power(base);
  }

  WeylOp maybe_power(const WeylOp& base) {
    if (!eat('^')) return base;
    Rat e = exponent();
    if (is_integer(e)) {
      long k = to_long(e.get_num());
      if (k >= 0) return base.pow(static_cast<int>(k));
      // negative powers only for pure monomials
      if (base.terms().size() == 1) {
        const auto& [t, c] = *base.terms().begin();
        bool pureX = true;
        for (int d : t.dexp) pureX = pureX && d == 0;
        if (pureX && c == 1) {
          WeylTerm nt = t;
          for (auto& x : nt.xexp) x *= Rat(k);
          return WeylOp::monomial(ring, nt.xexp, nt.dexp, 1);
        }
      }
      throw invalid("negative power of a non-monomial");
    }
    // fractional powers only for pure monomials
    if (base.terms().size() == 1) {
      const auto& [t, c] = *base.terms().begin();
      bool pureX = true;
      for (int d : t.dexp) pureX = pureX && d == 0;
      if (pureX && c == 1) {
        WeylTerm nt = t;
        for (auto& x : nt.xexp) x *= e;
        return WeylOp::monomial(ring, nt.xexp, nt.dexp, 1);
      }
    }
    throw invalid("fractional power of a non-monomial");
  }

  WeylOp term() {
    WeylOp out = factor();
    while (true) {
      skip();
      if (eat('*')) {
        out = out * factor();
        continue;
      }
      break;
    }
    return out;
  }

  WeylOp expr() {
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    else eat('+');
    WeylOp out = term();
    if (neg) out = -out;
    for (;;) {
      skip();
      if (eat('+')) {
        out = out + term();
      } else if (eat('-')) {
        out = out - term();
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

WeylOp parse_weyl(const std::string& text, WeylRing ring) {
  Parser p;
  p.s = text;
  p.ring = ring;
  WeylOp out = p.expr();
  p.skip();
  if (p.pos != p.s.size()) throw invalid("trailing characters in operator text");
  return out;
}

}  // namespace hyperg
