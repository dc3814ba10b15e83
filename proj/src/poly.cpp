#include "fatlab/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fatlab {

Poly Poly::variable(int index, int nvars) {
  Poly p;
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_[e] = Rational(1);
  return p;
}

bool Poly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (unsigned x : e)
      if (x) return false;
  return true;
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("Poly: not constant");
  return terms_.begin()->second;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    if (var < int(e.size())) d = std::max(d, int(e[var]));
  return d;
}

std::vector<int> Poly::support() const {
  std::vector<int> out;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < int(e.size()); ++i)
      if (e[i] && std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

Poly Poly::operator-() const {
  Poly p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

void Poly::prune(const Exponents& k) {
  auto it = terms_.find(k);
  if (it != terms_.end() && it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] += c;
    prune(e);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] -= c;
    prune(e);
  }
  return *this;
}

Poly::Exponents Poly::add_exp(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto e = Poly::add_exp(ea, eb);
      p.terms_[e] += ca * cb;
      p.prune(e);
    }
  return p;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  Poly rem = *this, quot;
  // lex leading term division; exactness guarantees termination with zero rest
  const auto& dlead = *divisor.terms_.rbegin();
  while (!rem.terms_.empty()) {
    const auto& rlead = *rem.terms_.rbegin();
    Exponents q(std::max(rlead.first.size(), dlead.first.size()), 0);
    for (size_t i = 0; i < q.size(); ++i) {
      unsigned re = i < rlead.first.size() ? rlead.first[i] : 0;
      unsigned de = i < dlead.first.size() ? dlead.first[i] : 0;
      if (re < de) throw std::domain_error("Poly::divide_exact: not divisible");
      q[i] = re - de;
    }
    Poly mono;
    mono.terms_[q] = rlead.second / dlead.second;
    quot += mono;
    rem -= mono * divisor;
  }
  return quot;
}

Poly Poly::substitute(const std::map<int, Rational>& values) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents rest(e.size(), 0);
    for (int i = 0; i < int(e.size()); ++i) {
      auto it = values.find(i);
      if (it == values.end()) {
        rest[i] = e[i];
        continue;
      }
      for (unsigned k = 0; k < e[i]; ++k) coeff *= it->second;
    }
    if (coeff.is_zero()) continue;
    out.terms_[rest] += coeff;
    out.prune(rest);
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < int(e.size()); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool has_var = false;
    for (unsigned x : e)
      if (x) has_var = true;
    if (!a.is_one() || !has_var) os << a.str();
    bool star = !a.is_one() || !has_var;
    for (int i = 0; i < int(e.size()); ++i) {
      if (!e[i]) continue;
      if (star) os << "*";
      os << var_names[i];
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

std::vector<Rational> univariate_coeffs(const Poly& p, int var) {
  std::vector<Rational> coeffs(size_t(p.degree_in(var)) + 1);
  for (const auto& [e, c] : p.terms()) {
    unsigned d = 0;
    for (int i = 0; i < int(e.size()); ++i) {
      if (e[i] == 0) continue;
      if (i != var) throw std::invalid_argument("univariate_coeffs: extra variable present");
      d = e[i];
    }
    coeffs[d] = c;
  }
  return coeffs;
}

namespace {

void chop(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::vector<Rational> derivative(const std::vector<Rational>& c) {
  std::vector<Rational> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(Rational(long(i)) * c[i]);
  return d;
}

// Remainder of polynomial division over Q.
std::vector<Rational> rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  chop(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    chop(a);
  }
  return a;
}

int sign_at_inf(const std::vector<Rational>& c, int dir) {
  if (c.empty()) return 0;
  int s = c.back().sign();
  if (dir < 0 && (c.size() - 1) % 2 == 1) s = -s;
  return s;
}

}  // namespace

int count_real_roots(std::vector<Rational> coeffs) {
  chop(coeffs);
  if (coeffs.size() <= 1) return 0;  // constants have no roots (0 poly excluded)
  // Sturm chain
  std::vector<std::vector<Rational>> chain;
  chain.push_back(coeffs);
  chain.push_back(derivative(coeffs));
  chop(chain.back());
  while (chain.back().size() > 0) {
    auto r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  auto variations = [&](int dir) {
    int v = 0, prev = 0;
    for (const auto& p : chain) {
      int s = sign_at_inf(p, dir);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  return variations(-1) - variations(+1);
}

namespace {

std::vector<mpz_class> divisors_of(mpz_class n, bool& ok) {
  n = ::abs(n);
  std::vector<mpz_class> out;
  if (n == 0 || n > 1000000000) {
    ok = false;
    return out;
  }
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  ok = true;
  return out;
}

}  // namespace

RationalRoots rational_roots(std::vector<Rational> coeffs) {
  RationalRoots out;
  chop(coeffs);
  if (coeffs.size() <= 1) {
    out.complete = true;  // nonzero constant: no roots at all
    return out;
  }
  // factor out x^k
  size_t k = 0;
  while (k < coeffs.size() && coeffs[k].is_zero()) ++k;
  if (k > 0) {
    out.roots.push_back(Rational(0));
    coeffs.erase(coeffs.begin(), coeffs.begin() + k);
  }
  auto eval = [&](const Rational& x) {
    Rational acc;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  auto deflate = [&](const Rational& r) {
    // synthetic division by (x - r)
    std::vector<Rational> q(coeffs.size() - 1);
    Rational carry;
    for (size_t i = coeffs.size(); i-- > 1;) {
      carry = coeffs[i] + carry * r;
      q[i - 1] = carry;
    }
    coeffs = std::move(q);
  };
  // integer scaling, then candidates p/q with p | trailing, q | leading
  while (coeffs.size() > 1) {
    mpz_class lcm(1);
    for (const auto& c : coeffs) {
      mpz_class den = c.den(), g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    mpz_class a0 = coeffs.front().num() * (lcm / coeffs.front().den());
    mpz_class an = coeffs.back().num() * (lcm / coeffs.back().den());
    bool ok0 = true, okn = true;
    auto ps = divisors_of(a0, ok0);
    auto qs = divisors_of(an, okn);
    if (!ok0 || !okn) return out;  // incomplete
    bool found = false;
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int sign : {1, -1}) {
          Rational cand(mpq_class(sign > 0 ? p : -p, q));
          if (!eval(cand).is_zero()) continue;
          bool dup = false;
          for (const auto& r : out.roots) dup = dup || r == cand;
          if (!dup) out.roots.push_back(cand);
          while (coeffs.size() > 1 && eval(cand).is_zero()) deflate(cand);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  out.complete = count_real_roots(coeffs) == 0;
  return out;
}

Poly PolyMat::var(const std::string& name) const {
  for (int i = 0; i < int(vars_.size()); ++i)
    if (vars_[i] == name) return Poly::variable(i, nvars());
  throw std::invalid_argument("PolyMat: unknown variable " + name);
}

GenericRankResult generic_rank(const PolyMat& p) {
  GenericRankResult res;
  const int R = p.rows(), C = p.cols();
  std::vector<std::vector<Poly>> a(R, std::vector<Poly>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) a[i][j] = p.at(i, j);

  Poly prev = Poly::constant(Rational(1));
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    // prefer constant pivots (they never vanish), then fewer terms
    auto score = [&](int i) {
      return std::pair<int, size_t>(a[i][col].is_constant() ? 0 : 1, a[i][col].terms().size());
    };
    int piv = -1;
    for (int i = row; i < R; ++i)
      if (!a[i][col].is_zero()) {
        if (piv < 0 || score(i) < score(piv)) piv = i;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    const Poly pivot = a[row][col];
    for (int i = row + 1; i < R; ++i) {
      const Poly head = a[i][col];
      for (int j = col; j < C; ++j)
        a[i][j] = (a[i][j] * pivot - head * a[row][j]).divide_exact(prev);
    }
    res.pivots.push_back(pivot);
    prev = pivot;
    ++row;
  }
  res.rank = row;
  if (res.pivots.empty()) {
    res.certified = true;  // zero matrix: rank 0 everywhere
    return res;
  }

  // monic normalization so equal loci compare equal
  auto normalized = [](const Poly& q) {
    return q.divide_exact(Poly::constant(q.terms().rbegin()->second));
  };
  // -1: vanishes somewhere real, 0: undecided, +1: never vanishes over R
  auto real_vanishing = [](const Poly& q) {
    if (q.is_constant()) return +1;
    auto sup = q.support();
    if (sup.size() != 1) return 0;
    return count_real_roots(univariate_coeffs(q, sup[0])) > 0 ? -1 : +1;
  };

  if (real_vanishing(res.pivots.back()) == +1) {
    // The final pivot equals (up to sign) an rxr minor of the input, so its
    // nonvanishing pins the rank at every real point.
    res.certified = true;
    return res;
  }
  for (const Poly& piv : res.pivots) {
    int v = real_vanishing(piv);
    if (v == +1) continue;
    Poly n = normalized(piv);
    auto& dst = v == -1 ? res.degenerate_loci : res.undecided;
    bool dup = false;
    for (const Poly& seen : dst) dup = dup || seen == n;
    if (!dup) dst.push_back(std::move(n));
  }
  return res;
}

}  // namespace fatlab
