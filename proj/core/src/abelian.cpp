#include "modpic/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "modpic/errors.hpp"
#include "modpic/rng.hpp"
#include "modpic/version.hpp"

namespace modpic {

Int FinAbGroup::order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

Int FinAbGroup::exponent() const {
  return invariant_factors.empty() ? Int(1) : invariant_factors.back();
}

std::string FinAbGroup::str() const {
  if (invariant_factors.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) os << " + ";
    os << "Z/" << invariant_factors[i];
  }
  return os.str();
}

namespace {

std::map<Int, unsigned> factorize(Int n) {
  std::map<Int, unsigned> f;
  for (Int d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  if (n > 1) ++f[n];
  return f;
}

// rebuild an invariant chain from a multiset of prime powers
FinAbGroup from_prime_powers(std::map<Int, std::vector<unsigned>> parts) {
  // sort exponents descending per prime, then zip by rank
  std::size_t rank = 0;
  for (auto& [p, exps] : parts) {
    std::sort(exps.rbegin(), exps.rend());
    rank = std::max(rank, exps.size());
  }
  std::vector<Int> ds(rank, 1);
  for (auto& [p, exps] : parts)
    for (std::size_t i = 0; i < exps.size(); ++i)
      ds[i] *= boost::multiprecision::pow(p, exps[i]);
  std::sort(ds.begin(), ds.end());
  FinAbGroup g;
  for (const Int& d : ds)
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

std::map<Int, std::vector<unsigned>> prime_power_parts(const FinAbGroup& g) {
  std::map<Int, std::vector<unsigned>> parts;
  for (const Int& d : g.invariant_factors)
    for (const auto& [p, e] : factorize(d)) parts[p].push_back(e);
  return parts;
}

}  // namespace

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  auto parts = prime_power_parts(a);
  for (const auto& [p, exps] : prime_power_parts(b))
    parts[p].insert(parts[p].end(), exps.begin(), exps.end());
  return from_prime_powers(std::move(parts));
}

FinAbGroup p_part(const FinAbGroup& g, const Int& p) {
  std::map<Int, std::vector<unsigned>> keep;
  for (const auto& [q, exps] : prime_power_parts(g))
    if (q == p) keep[q] = exps;
  return from_prime_powers(std::move(keep));
}

FinAbGroup prime_to_p_part(const FinAbGroup& g, const Int& p) {
  std::map<Int, std::vector<unsigned>> keep;
  for (const auto& [q, exps] : prime_power_parts(g))
    if (q != p) keep[q] = exps;
  return from_prime_powers(std::move(keep));
}

GroupFromRelations group_from_relations(std::size_t generators, const IntMatrix& relations) {
  if (relations.cols() != generators && relations.rows() != 0)
    throw std::domain_error("relation matrix column count != generator count");
  SnfResult snf = smith_normal_form(relations);
  GroupFromRelations out;
  std::size_t rank = 0;
  std::size_t n = std::min(relations.rows(), relations.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = snf.d.at(i, i);
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.finite.invariant_factors.push_back(d);
  }
  out.free_rank = static_cast<long long>(generators) - static_cast<long long>(rank);
  return out;
}

// ---------------------------------------------------------------------------

EnumeratedGroup::EnumeratedGroup(std::size_t size, Mul mul, std::size_t identity)
    : n_(size), mul_(std::move(mul)), id_(identity) {
  if (n_ == 0) throw MalformedGroupError("empty element set");
  if (n_ > kMaxEnumeratedGroup) throw BoundsError("enumerated group exceeds the size cap");
  spot_check();

  const Int order_n = Int(n_);
  auto fac = factorize(order_n);

  // order of every element; x^n != id means the input is not a group
  std::vector<Int> orders(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    if (power(x, order_n) != id_)
      throw MalformedGroupError("element order does not divide the set size");
    Int o = order_n;
    for (const auto& [p, e] : fac)
      for (unsigned i = 0; i < e; ++i) {
        if (o % p != 0) break;
        if (power(x, o / p) == id_)
          o /= p;
        else
          break;
      }
    orders[x] = o;
  }

  dlog_.assign(n_, ~std::uint64_t{0});
  dlog_[id_] = 0;
  std::vector<std::size_t> members{id_};

  while (members.size() < n_) {
    // greedy: maximal order among elements outside the current subgroup
    std::size_t best = n_;
    for (std::size_t x = 0; x < n_; ++x) {
      if (dlog_[x] != ~std::uint64_t{0}) continue;
      if (best == n_ || orders[x] > orders[best]) best = x;
    }
    if (best == n_) throw MalformedGroupError("set not closed under multiplication");

    // index of <previous subgroup, best> over the previous subgroup
    std::size_t m = greedy_gens_.size();
    std::uint64_t radix = 1;
    for (const Int& e : greedy_index_) radix *= static_cast<std::uint64_t>(e);

    std::size_t pw = best;
    Int e = 1;
    while (dlog_[pw] == ~std::uint64_t{0}) {
      pw = mul_(pw, best);
      ++e;
    }
    greedy_gens_.push_back(best);
    greedy_index_.push_back(e);

    // relation row appended later from (e, dlog of best^e)
    // extend the subgroup: members x best^j for 1 <= j < e
    std::vector<std::size_t> snapshot = members;
    std::size_t bj = id_;
    for (Int j = 1; j < e; ++j) {
      bj = mul_(bj, best);
      for (std::size_t s : snapshot) {
        std::size_t y = mul_(s, bj);
        if (y >= n_) throw MalformedGroupError("multiplication left the element set");
        if (dlog_[y] != ~std::uint64_t{0})
          throw MalformedGroupError("coset overlap: multiplication is not a group law");
        dlog_[y] = dlog_[s] + static_cast<std::uint64_t>(j) * radix;
        members.push_back(y);
      }
    }
    (void)m;
  }

  // relation lattice: gen_i^{e_i} = product of earlier generators
  const std::size_t m = greedy_gens_.size();
  IntMatrix rel(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t pw = power(greedy_gens_[i], greedy_index_[i]);
    std::vector<Int> c = greedy_coords(pw);
    for (std::size_t j = 0; j < i; ++j) rel.at(i, j) = -c[j];
    rel.at(i, i) = greedy_index_[i];
  }

  SnfResult snf = smith_normal_form(rel);
  v_ = snf.v;
  dfull_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    dfull_[i] = snf.d.at(i, i);
    if (dfull_[i] == 0) throw MalformedGroupError("relation lattice has infinite quotient");
    if (dfull_[i] > 1) kept_.push_back(i);
  }
  for (std::size_t i : kept_) group_.invariant_factors.push_back(dfull_[i]);

  // witness per invariant factor: row i of V^{-1} in greedy generators
  for (std::size_t i : kept_) {
    std::size_t w = id_;
    for (std::size_t j = 0; j < m; ++j) {
      Int exp = snf.vinv.at(i, j) % Int(n_);
      if (exp < 0) exp += Int(n_);
      w = mul_(w, power(greedy_gens_[j], exp));
    }
    inv_gens_.push_back(w);
  }
}

void EnumeratedGroup::spot_check() const {
  Rng rng(0x5eedc0de);
  const std::size_t trials = std::min<std::size_t>(64, n_ * n_);
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t a = rng.below(n_), b = rng.below(n_), c = rng.below(n_);
    std::size_t ab = mul_(a, b);
    if (ab >= n_) throw MalformedGroupError("closure violated");
    if (mul_(ab, c) != mul_(a, mul_(b, c))) throw MalformedGroupError("associativity violated");
    if (mul_(a, b) != mul_(b, a)) throw MalformedGroupError("commutativity violated");
  }
  if (mul_(id_, id_) != id_) throw MalformedGroupError("identity violated");
  for (std::size_t t = 0; t < std::min<std::size_t>(16, n_); ++t) {
    std::size_t a = rng.below(n_);
    if (mul_(id_, a) != a) throw MalformedGroupError("identity violated");
  }
}

std::size_t EnumeratedGroup::power(std::size_t a, Int e) const {
  if (e < 0) throw std::domain_error("negative exponent");
  std::size_t r = id_, b = a;
  while (e > 0) {
    if ((e & 1) != 0) r = mul_(r, b);
    b = mul_(b, b);
    e >>= 1;
  }
  return r;
}

Int EnumeratedGroup::element_order(std::size_t a) const {
  Int o = 1;
  std::size_t x = a;
  while (x != id_) {
    x = mul_(x, a);
    ++o;
    if (o > Int(n_)) throw MalformedGroupError("element order exceeds the set size");
  }
  return o;
}

std::vector<Int> EnumeratedGroup::greedy_coords(std::size_t element) const {
  std::uint64_t code = dlog_[element];
  if (code == ~std::uint64_t{0}) throw std::domain_error("element outside the enumerated group");
  std::vector<Int> c(greedy_gens_.size());
  for (std::size_t i = 0; i < greedy_gens_.size(); ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(greedy_index_[i]);
    c[i] = Int(code % e);
    code /= e;
  }
  return c;
}

std::vector<Int> EnumeratedGroup::coords(std::size_t element) const {
  std::vector<Int> g = greedy_coords(element);
  const std::size_t m = greedy_gens_.size();
  std::vector<Int> out;
  out.reserve(kept_.size());
  for (std::size_t idx : kept_) {
    Int s = 0;
    for (std::size_t i = 0; i < m; ++i) s += g[i] * v_.at(i, idx);
    s %= dfull_[idx];
    if (s < 0) s += dfull_[idx];
    out.push_back(s);
  }
  return out;
}

}  // namespace modpic
