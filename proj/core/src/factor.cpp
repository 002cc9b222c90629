#include "modpic/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "modpic/errors.hpp"
#include "modpic/rng.hpp"

namespace modpic {

namespace {

constexpr std::uint64_t kSplitterSeed = 0x9d2c5680u;

Poly pth_root_poly(const Poly& f) {
  const FieldDesc& fd = f.field();
  const std::uint32_t p = fd.p;
  std::vector<FieldElem> out;
  for (int i = 0; i <= f.degree(); i += p) {
    // p-th root in F_{p^k} is the (k-1)-fold Frobenius
    Int e = 1;
    for (std::uint32_t j = 0; j + 1 < fd.k; ++j) e *= p;
    out.push_back(f.coeff(i).pow(e));
  }
  return Poly(fd, std::move(out), f.var());
}

// multiplicity map for a monic input
void squarefree_parts(const Poly& f, unsigned mult, std::map<Poly, unsigned>& out);

void accumulate(const Poly& g, unsigned mult, std::map<Poly, unsigned>& out) {
  if (g.degree() <= 0) return;
  out[g] += mult;
}

void squarefree_parts(const Poly& f, unsigned mult, std::map<Poly, unsigned>& out) {
  const FieldDesc& fd = f.field();
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    // f = h(x^p)
    squarefree_parts(pth_root_poly(f), mult * fd.p, out);
    return;
  }
  Poly c = Poly::gcd(f, d);
  Poly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    Poly y = Poly::gcd(w, c);
    Poly z = w / y;
    accumulate(z, mult * i, out);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_parts(pth_root_poly(c), mult * fd.p, out);
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const Poly& f, unsigned d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f.monic());
    return;
  }
  const FieldDesc& fd = f.field();
  const Int q = Int(fd.order());
  const FieldDesc base{fd.p, fd.k};
  Poly one = Poly::constant(FieldElem::one(base), f.var());
  while (true) {
    // random polynomial of degree < deg f
    std::vector<FieldElem> cs;
    for (int i = 0; i < f.degree(); ++i)
      cs.push_back(FieldElem::from_code(base, rng.below(fd.order())));
    Poly a(base, std::move(cs), f.var());
    if (a.degree() < 1) continue;
    Poly g = Poly::gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, rng, out);
      edf(f / g, d, rng, out);
      return;
    }
    Poly b;
    if (fd.p == 2) {
      // trace map over F_{2^k}: a + a^2 + ... + a^{2^(kd-1)}
      Poly t = a % f;
      Poly acc = t;
      std::uint64_t steps = static_cast<std::uint64_t>(fd.k) * d;
      for (std::uint64_t i = 1; i < steps; ++i) {
        t = (t * t) % f;
        acc = (acc + t) % f;
      }
      b = acc;
    } else {
      Int e = (boost::multiprecision::pow(q, d) - 1) / 2;
      b = Poly::pow_mod(a, e, f) - one;
    }
    Poly g2 = Poly::gcd(b, f);
    if (g2.degree() > 0 && g2.degree() < f.degree()) {
      edf(g2, d, rng, out);
      edf(f / g2, d, rng, out);
      return;
    }
  }
}

// exhaustive root splitting for small degrees; remainder is irreducible
// whenever its degree is 2 or 3
void factor_by_roots(const Poly& f, unsigned mult, std::map<Poly, unsigned>& out) {
  const FieldDesc& fd = f.field();
  Poly rest = f.monic();
  for (std::uint64_t c = 0; c < fd.order() && rest.degree() > 0; ++c) {
    FieldElem a = FieldElem::from_code(fd, c);
    Poly lin(fd, {-a, FieldElem::one(fd)}, f.var());
    while (rest.degree() > 0 && rest.eval(a).is_zero()) {
      rest = rest / lin;
      out[lin] += mult;
    }
  }
  if (rest.degree() > 0) out[rest.monic()] += mult;
}

}  // namespace

Factorization poly_factor(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("poly_factor: zero polynomial");
  const FieldDesc& fd = f.field();
  if (fd.p == 0) throw std::domain_error("poly_factor: finite fields only");
  Factorization result;
  result.unit = f.leading();
  if (f.degree() == 0) return result;

  std::map<Poly, unsigned> sqf;
  squarefree_parts(f.monic(), 1, sqf);

  std::map<Poly, unsigned> irred;
  for (const auto& [part, mult] : sqf) {
    if (part.degree() <= 3) {
      factor_by_roots(part, mult, irred);
      continue;
    }
    // distinct-degree, then equal-degree splitting
    Poly rest = part.monic();
    Poly h = Poly::x(fd, f.var()) % rest;
    Poly xpoly = Poly::x(fd, f.var());
    unsigned d = 0;
    Rng rng(kSplitterSeed);
    while (rest.degree() > 0) {
      ++d;
      if (rest.degree() < static_cast<int>(2 * d)) {
        irred[rest.monic()] += mult;  // what is left is irreducible
        break;
      }
      h = Poly::pow_mod(h, Int(fd.order()), rest);
      Poly g = Poly::gcd(h - xpoly, rest);
      if (g.degree() > 0) {
        std::vector<Poly> pieces;
        edf(g, d, rng, pieces);
        for (const auto& piece : pieces) irred[piece] += mult;
        rest = rest / g;
        h = h % rest;
      }
    }
  }

  result.factors.assign(irred.begin(), irred.end());
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
  return result;
}

bool is_irreducible(const Poly& f) {
  const FieldDesc& fd = f.field();
  if (fd.p == 0) throw std::domain_error("is_irreducible: finite fields only");
  int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  Poly m = f.monic();
  Poly xp = Poly::x(fd, f.var());
  // x^(q^d) == x (mod f)
  Poly h = xp % m;
  for (int i = 0; i < d; ++i) h = Poly::pow_mod(h, Int(fd.order()), m);
  if (!(h == xp % m)) return false;
  // gcd(x^(q^(d/l)) - x, f) == 1 for prime divisors l of d
  for (int l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool prime = true;
    for (int t = 2; t * t <= l; ++t)
      if (l % t == 0) prime = false;
    if (!prime) continue;
    Poly g = xp % m;
    for (int i = 0; i < d / l; ++i) g = Poly::pow_mod(g, Int(fd.order()), m);
    if (Poly::gcd(g - xp, m).degree() != 0) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const FieldDesc& f, unsigned degree) {
  if (f.p == 0) throw std::domain_error("monic_irreducibles: finite fields only");
  std::vector<Poly> out;
  const std::uint64_t q = f.order();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (count > 2000000ULL / q) throw BoundsError("too many polynomials to enumerate");
    count *= q;
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<FieldElem> cs;
    std::uint64_t c = code;
    for (unsigned i = 0; i < degree; ++i) {
      cs.push_back(FieldElem::from_code(f, c % q));
      c /= q;
    }
    cs.push_back(FieldElem::one(f));
    Poly cand(f, std::move(cs));
    if (is_irreducible(cand)) out.push_back(cand);
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.cmp(b) < 0; });
  return out;
}

std::vector<std::pair<FieldElem, unsigned>> roots_with_multiplicity(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("roots of zero polynomial");
  const FieldDesc& fd = f.field();
  std::vector<std::pair<FieldElem, unsigned>> out;
  if (fd.p != 0) {
    Poly rest = f;
    for (std::uint64_t c = 0; c < fd.order(); ++c) {
      FieldElem a = FieldElem::from_code(fd, c);
      unsigned m = 0;
      Poly lin(fd, {-a, FieldElem::one(fd)}, f.var());
      while (rest.degree() > 0 && rest.eval(a).is_zero()) {
        rest = rest / lin;
        ++m;
      }
      if (m > 0) out.emplace_back(a, m);
    }
    return out;
  }
  // rationals: candidates num/den from divisors of the cleared coefficients
  Poly rest = f;
  while (rest.degree() > 0) {
    // clear denominators
    Int lcm = 1;
    for (int i = 0; i <= rest.degree(); ++i) {
      Int den = boost::multiprecision::denominator(rest.coeff(i).rat());
      lcm = lcm / gcd_int(lcm, den) * den;
    }
    std::vector<Int> ic(rest.degree() + 1);
    for (int i = 0; i <= rest.degree(); ++i)
      ic[i] = boost::multiprecision::numerator(rest.coeff(i).rat() * Rat(lcm));
    // strip powers of t
    if (ic[0] == 0) {
      unsigned m = 0;
      Poly tpoly = Poly::x(fd, f.var());
      while (rest.degree() > 0 && rest.coeff(0).is_zero()) {
        rest = rest / tpoly;
        ++m;
      }
      out.emplace_back(FieldElem::zero(fd), m);
      continue;
    }
    auto divisors = [](Int n) {
      n = abs_int(n);
      std::vector<Int> ds;
      for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
          ds.push_back(d);
          ds.push_back(n / d);
        }
        if (ds.size() > 4096) throw BoundsError("rational root search: too many divisors");
      }
      return ds;
    };
    std::vector<Int> nums = divisors(ic[0]);
    std::vector<Int> dens = divisors(ic.back());
    bool found = false;
    for (const Int& nu : nums) {
      for (const Int& de : dens) {
        for (int sign : {1, -1}) {
          Rat cand = Rat(sign * nu, de);
          FieldElem a = FieldElem::from_rat(cand);
          if (!rest.eval(a).is_zero()) continue;
          unsigned m = 0;
          Poly lin(fd, {-a, FieldElem::one(fd)}, f.var());
          while (rest.degree() > 0 && rest.eval(a).is_zero()) {
            rest = rest / lin;
            ++m;
          }
          out.emplace_back(a, m);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;  // remainder has no rational roots
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
  return out;
}

}  // namespace modpic
