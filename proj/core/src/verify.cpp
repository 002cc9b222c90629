#include "modpic/verify.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "modpic/errors.hpp"
#include "modpic/localunits.hpp"
#include "modpic/picard.hpp"
#include "modpic/sampling.hpp"
#include "modpic/version.hpp"

namespace modpic {

std::string Instance::str() const {
  return curve.str() + " ; D = " + modulus.str();
}

namespace {

constexpr int kGenRetries = 400;

Modulus random_p1_modulus(const Curve& c, Rng& rng, bool require_nonreduced) {
  const FieldDesc& f = c.field();
  unsigned max_deg = Grid::kMaxResidueDegree / f.k;
  std::vector<Place> pool = places_of_p1(c, std::min(max_deg, 3u)).places;
  std::size_t count = 1 + rng.below(3);
  std::vector<std::pair<Place, unsigned>> comps;
  long long total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Place& p = pool[rng.below(pool.size())];
    bool dup = false;
    for (const auto& [q, n] : comps) dup = dup || q == p;
    if (dup) continue;
    long long room = (Grid::kMaxModulusDegree - total) / p.degree();
    if (room < 1) continue;
    unsigned n = 1 + static_cast<unsigned>(rng.below(static_cast<std::uint64_t>(room)));
    comps.emplace_back(p, n);
    total += static_cast<long long>(n) * p.degree();
  }
  if (comps.empty()) throw BoundsError("empty draw");
  if (require_nonreduced) {
    bool has = false;
    for (const auto& [p, n] : comps) has = has || n > 1;
    if (!has) {
      // bump a multiplicity if the degree budget allows it
      for (auto& [p, n] : comps) {
        if (total + p.degree() <= Grid::kMaxModulusDegree) {
          ++n;
          total += p.degree();
          has = true;
          break;
        }
      }
      if (!has) throw BoundsError("cannot make the draw non-reduced");
    }
  }
  return Modulus(c, std::move(comps));
}

Int structure_size_estimate(const Curve& c, const Modulus& d) {
  Int od = 1;
  for (const auto& [p, n] : d.components()) {
    Int qp = Int(p.residue_field().order());
    od *= (qp - 1) * boost::multiprecision::pow(qp, n - 1);
  }
  Int h = c.kind() == CurveKind::Elliptic ? Int(elliptic_points(c).size()) : Int(1);
  return od * h;
}

}  // namespace

Instance random_charp_instance(Rng& rng, bool require_nonreduced, bool allow_elliptic) {
  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    try {
      std::uint32_t p = Grid::kPrimes[rng.below(3)];
      bool elliptic = allow_elliptic && p == Grid::kEllipticPrime && rng.coin();
      if (elliptic) return random_elliptic_instance(rng, require_nonreduced);
      std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(Grid::kMaxExtension));
      Curve c = Curve::p1(make_field(p, k));
      Modulus d = random_p1_modulus(c, rng, require_nonreduced);
      if (structure_size_estimate(c, d) > Int(kMaxEnumeratedGroup)) continue;
      return Instance{c, d};
    } catch (const BoundsError&) {
      continue;
    }
  }
  throw std::runtime_error("random_charp_instance: no admissible draw");
}

Instance random_elliptic_instance(Rng& rng, bool require_nonreduced) {
  FieldDesc f = make_field(Grid::kEllipticPrime, 1);
  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    try {
      Curve c = rng.coin() ? Curve::elliptic(f, FieldElem::one(f), FieldElem::zero(f))
                           : Curve::elliptic(f, FieldElem::zero(f), FieldElem::one(f));
      std::vector<Place> pool = elliptic_places(c);
      std::size_t count = 1 + rng.below(2);
      std::vector<std::pair<Place, unsigned>> comps;
      long long total = 0;
      for (std::size_t i = 0; i < count; ++i) {
        const Place& p = pool[rng.below(pool.size())];
        bool dup = false;
        for (const auto& [q, n] : comps) dup = dup || q == p;
        if (dup) continue;
        long long room = Grid::kMaxModulusDegree - total;
        if (room < 1) continue;
        unsigned n = 1 + static_cast<unsigned>(rng.below(std::min<long long>(room, 4)));
        comps.emplace_back(p, n);
        total += n;
      }
      if (comps.empty()) continue;
      if (require_nonreduced && comps[0].second == 1) comps[0].second = 2;
      Modulus d(c, std::move(comps));
      if (structure_size_estimate(c, d) > Int(kMaxEnumeratedGroup)) continue;
      // the structure itself validates the rational-point model
      picard_structure(c, d);
      return Instance{c, d};
    } catch (const BoundsError&) {
      continue;
    }
  }
  throw std::runtime_error("random_elliptic_instance: no admissible draw");
}

Instance random_char0_instance(Rng& rng, bool require_nonreduced) {
  Curve c = Curve::p1(rational_field());
  const FieldDesc& f = c.field();
  for (int attempt = 0; attempt < kGenRetries; ++attempt) {
    unsigned r = 1 + static_cast<unsigned>(rng.below(Grid::kChar0MaxComponents));
    std::vector<std::pair<Place, unsigned>> comps;
    for (unsigned i = 0; i < r; ++i) {
      Place p = rng.below(5) == 0
                    ? Place::p1_infinity(c)
                    : Place::p1_rational(c, FieldElem::from_int(f, Int(rng.range(-3, 3))));
      bool dup = false;
      for (const auto& [q, n] : comps) dup = dup || q == p;
      if (dup) continue;
      unsigned n = 1 + static_cast<unsigned>(rng.below(Grid::kChar0MaxMultiplicity));
      comps.emplace_back(p, n);
    }
    if (comps.empty()) continue;
    if (require_nonreduced) {
      bool has = false;
      for (auto& [p, n] : comps) has = has || n > 1;
      if (!has) comps[0].second = 2;
    }
    return Instance{c, Modulus(c, std::move(comps))};
  }
  throw std::runtime_error("random_char0_instance: no admissible draw");
}

// ---------------------------------------------------------------------------

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "p-primary") return Suite::PPrimary;
  if (name == "char0-divisible") return Suite::Char0Divisible;
  if (name == "key-lem") return Suite::KeyLem;
  if (name == "key-lem-p") return Suite::KeyLemP;
  if (name == "norm-compat") return Suite::NormCompat;
  if (name == "torsion-iso") return Suite::TorsionIso;
  if (name == "lang-orders") return Suite::LangOrders;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::PPrimary: return "p-primary";
    case Suite::Char0Divisible: return "char0-divisible";
    case Suite::KeyLem: return "key-lem";
    case Suite::KeyLemP: return "key-lem-p";
    case Suite::NormCompat: return "norm-compat";
    case Suite::TorsionIso: return "torsion-iso";
    case Suite::LangOrders: return "lang-orders";
  }
  return "?";
}

std::vector<std::string> all_suite_names() {
  return {"p-primary", "char0-divisible", "key-lem",    "key-lem-p",
          "norm-compat", "torsion-iso",     "lang-orders"};
}

namespace {

bool is_power_of(const Int& n, const Int& p) {
  Int m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

TruncSeries random_one_unit(const ResidueField& rf, std::size_t prec, Rng& rng) {
  TruncSeries s = TruncSeries::one(rf, prec);
  for (std::size_t i = 1; i < prec; ++i) {
    if (rf.is_rational()) {
      long long num = rng.range(-5, 5);
      long long den = rng.range(1, 3);
      s.set_coeff(i, rf.from_base(FieldElem::from_rat(Rat(num, den))));
    } else {
      s.set_coeff(i, rf.from_code(rng.below(rf.order())));
    }
  }
  return s;
}

TrialResult run_trial(Suite s, std::uint64_t subseed, TestCorruption corruption) {
  TrialResult tr;
  tr.subseed = subseed;
  Rng rng(subseed);
  try {
    switch (s) {
      case Suite::PPrimary: {
        Instance inst = random_charp_instance(rng, true);
        tr.instance = inst.str();
        UnipotentPart u = unipotent_part(inst.curve, inst.modulus);
        const Int p = Int(inst.curve.field().p);
        bool ok = is_power_of(u.order == 0 ? Int(1) : u.order, p) || u.order == 1;
        ok = ok && u.certified && u.group.order() == u.order;
        tr.pass = ok;
        std::ostringstream os;
        os << "|U| = " << u.order << " = " << u.group.str();
        tr.detail = os.str();
        break;
      }
      case Suite::Char0Divisible: {
        Instance inst = random_char0_instance(rng, true);
        tr.instance = inst.str();
        bool ok = true;
        std::string why;
        for (const auto& [p, n] : inst.modulus.components()) {
          if (n < 2) continue;
          ResidueField rf = p.residue_field();
          TruncSeries x = random_one_unit(rf, n, rng);
          TruncSeries y = random_one_unit(rf, n, rng);
          for (unsigned nn = 2; nn <= 12 && ok; ++nn) {
            TruncSeries r = nth_root_in_quotient(x, Int(nn));
            if (!(r.pow(Int(nn)) == x)) {
              ok = false;
              why = "root^n != x at n=" + std::to_string(nn);
            }
            if (ok && !(x == y) && x.pow(Int(nn)) == y.pow(Int(nn))) {
              ok = false;
              why = "n-th power map not injective at n=" + std::to_string(nn);
            }
          }
        }
        tr.pass = ok;
        tr.detail = ok ? "exact unique roots for n <= 12" : why;
        break;
      }
      case Suite::KeyLem: {
        ResidueField rf;  // Q
        std::size_t prec = 2 + rng.below(5);  // n <= 6
        TruncSeries sa = random_one_unit(rf, prec, rng);
        TruncSeries sb = random_one_unit(rf, prec, rng);
        TruncSeries w(rf, prec);
        for (std::size_t i = 1; i < prec; ++i)
          w.set_coeff(i, rf.from_base(FieldElem::from_rat(Rat(rng.range(-4, 4), rng.range(1, 3)))));
        bool ok = truncated_exp(truncated_log(sa)) == sa;
        ok = ok && truncated_log(truncated_exp(w)) == w;
        ok = ok && truncated_log(sa * sb) == truncated_log(sa) + truncated_log(sb);
        std::ostringstream os;
        os << "precision " << prec;
        tr.instance = os.str();
        tr.pass = ok;
        tr.detail = ok ? "log/exp mutually inverse, log additive" : "log/exp identity failed";
        break;
      }
      case Suite::KeyLemP: {
        Instance inst = random_charp_instance(rng, true);
        tr.instance = inst.str();
        const std::uint32_t p = inst.curve.field().p;
        unsigned max_n = 1;
        for (const auto& [pl, n] : inst.modulus.components()) max_n = std::max(max_n, n);
        unsigned m = p_power_exponent(p, max_n);
        GSample f{RationalFunction::one(inst.curve), 1};
        bool escaped = true;
        try {
          f = sample_g_red_element(inst.curve, inst.modulus, rng, 24);
        } catch (const std::runtime_error&) {
          // rational-divisor functions can be stuck inside G(C,D) on some
          // elliptic instances; the lemma still applies to any f in G(red)
          f = sample_g_element(inst.curve, inst.modulus.reduced(), rng);
          escaped = false;
        }
        GSample fpm{f.base, f.exponent * boost::multiprecision::pow(Int(p), m)};
        bool ok = sample_in_g(fpm, inst.modulus);
        tr.pass = ok;
        std::ostringstream os;
        os << "m = " << m << ", f^{p^m} in G" << (escaped ? "" : " (f already in G(C,D))");
        tr.detail = ok ? os.str() : "f^{p^m} escaped G(C,D)";
        break;
      }
      case Suite::NormCompat: {
        Instance inst = random_charp_instance(rng, false, /*allow_elliptic=*/false);
        tr.instance = inst.str();
        const Curve& target = inst.curve;
        Curve source = Curve::p1(target.field());
        RationalFunction phi = sample_cover(source, 1 + rng.below(3), rng);
        Modulus pulled = modulus_pullback(phi, inst.modulus, source);
        GSample g = sample_g_element(source, pulled, rng);
        RationalFunction norm = norm_along_cover(phi, g.base, target);
        bool ok = in_modulus_group(norm, inst.modulus);
        ZeroCycle push = pushforward_cycle(phi, divisor_of(g.base), target);
        ok = ok && push == divisor_of(norm);
        tr.pass = ok;
        std::ostringstream os;
        os << "cover degree " << std::max(phi.num().degree(), phi.den().degree());
        tr.detail = ok ? os.str() + ", norm compatible" : "norm/pushforward mismatch";
        break;
      }
      case Suite::TorsionIso: {
        Instance inst = random_charp_instance(rng, true);
        tr.instance = inst.str();
        StructurePtr st = picard_structure(inst.curve, inst.modulus);
        TorsionDecomposition td = torsion_decomposition(st);
        FinAbGroup compare = td.prime_to_p_reduced;
        if (corruption == TestCorruption::TorsionComparison)
          compare.invariant_factors.push_back(Int(2));  // deliberately wrong fixture
        bool ok = td.prime_to_p == compare;
        tr.pass = ok;
        std::ostringstream os;
        os << "prime-to-p: " << td.prime_to_p.str() << " vs reduced " << compare.str();
        tr.detail = os.str();
        break;
      }
      case Suite::LangOrders: {
        Instance inst = random_elliptic_instance(rng, rng.coin());
        tr.instance = inst.str();
        StructurePtr st = picard_structure(inst.curve, inst.modulus);
        Int points = Int(elliptic_points(inst.curve).size());
        const Int q = Int(inst.curve.field().order());
        Int od = 1;
        for (const auto& [pl, n] : inst.modulus.components()) {
          Int qp = Int(pl.residue_field().order());
          od *= (qp - 1) * boost::multiprecision::pow(qp, n - 1);
        }
        Int expected = inst.modulus.empty() ? points : points * od / (q - 1);
        bool ok = st->pic0_order() == expected;
        StructurePtr red = picard_structure(inst.curve, inst.modulus.reduced(),
                                            st->base_as_place());
        UnipotentPart u = unipotent_part(inst.curve, inst.modulus);
        ok = ok && st->pic0_order() == u.order * red->pic0_order();
        tr.pass = ok;
        std::ostringstream os;
        os << "|Pic0| = " << st->pic0_order() << ", |E| * |O_D^x|/(q-1) = " << expected;
        tr.detail = os.str();
        break;
      }
    }
  } catch (const std::exception& e) {
    tr.pass = false;
    tr.detail = std::string("exception: ") + e.what();
  }
  return tr;
}

// constructed witnesses: p^(m-1) genuinely fails for D = (p+1)[(t)], f = 1+t
TrialResult key_lem_p_witness(std::uint32_t p) {
  TrialResult tr;
  tr.subseed = p;  // replay key: witness trials are indexed by the prime
  Curve c = Curve::p1(make_field(p, 1));
  const FieldDesc& f = c.field();
  Place pt = Place::p1_rational(c, FieldElem::zero(f));
  Modulus d(c, {{pt, p + 1}});
  RationalFunction one_plus_t =
      RationalFunction::p1(c, Poly::from_ints(f, {1, 1}), Poly::from_ints(f, {1}));
  unsigned m = p_power_exponent(p, p + 1);
  GSample at_m{one_plus_t, boost::multiprecision::pow(Int(p), m)};
  GSample at_m1{one_plus_t, boost::multiprecision::pow(Int(p), m - 1)};
  bool ok = sample_in_g(at_m, d) && !sample_in_g(at_m1, d) &&
            in_modulus_group(one_plus_t, d.reduced());
  tr.instance = "witness p=" + std::to_string(p) + ", D = " + d.str() + ", f = 1+t";
  tr.pass = ok;
  tr.detail = ok ? "p^m suffices and p^(m-1) fails" : "witness check failed";
  return tr;
}

}  // namespace

VerifyReport run_suite(Suite s, unsigned trials, std::uint64_t seed, TestCorruption corruption) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.suite = suite_name(s);
  rep.trials = trials;
  rep.seed = seed;
  rep.grid_version = Grid::kGridVersion;
  rep.version = kVersion;

  if (s == Suite::KeyLemP)
    for (std::uint32_t p : Grid::kPrimes) rep.results.push_back(key_lem_p_witness(p));

  Rng seeder(seed);
  std::vector<std::uint64_t> subseeds;
  for (unsigned i = 0; i < trials; ++i) subseeds.push_back(seeder.next());
  // trials are independent; results merge in seed order
  for (std::uint64_t sub : subseeds) rep.results.push_back(run_trial(s, sub, corruption));

  rep.all_pass = true;
  for (const TrialResult& tr : rep.results) rep.all_pass = rep.all_pass && tr.pass;
  rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

VerifyReport replay_payload(const std::string& payload_json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(payload_json);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid replay payload: ") + e.what());
  }
  if (!j.contains("suite") || !j.contains("subseed"))
    throw ParseError("replay payload wants {suite, subseed}");
  auto s = suite_from_name(j["suite"].get<std::string>());
  if (!s) throw ParseError("unknown suite in replay payload");
  std::uint64_t subseed = j["subseed"].get<std::uint64_t>();

  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.suite = suite_name(*s);
  rep.trials = 1;
  rep.seed = subseed;
  rep.grid_version = Grid::kGridVersion;
  rep.version = kVersion;
  rep.results.push_back(run_trial(*s, subseed, TestCorruption::None));
  rep.all_pass = rep.results.front().pass;
  rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  return rep;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["trials"] = trials;
  j["seed"] = seed;
  j["grid"] = grid_version;
  j["version"] = version;
  j["all_pass"] = all_pass;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const TrialResult& tr : results) {
    nlohmann::ordered_json r;
    r["subseed"] = tr.subseed;
    r["instance"] = tr.instance;
    r["pass"] = tr.pass;
    r["detail"] = tr.detail;
    if (!tr.pass) r["replay"] = {{"suite", suite}, {"subseed", tr.subseed}};
    rs.push_back(r);
  }
  j["results"] = rs;
  return j.dump(2) + "\n";
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (all_pass ? "PASS" : "FAIL") << " (" << results.size()
     << " trials, seed " << seed << ", " << grid_version << ")\n";
  for (const TrialResult& tr : results) {
    if (tr.pass) continue;
    os << "  FAIL subseed=" << tr.subseed << " instance=" << tr.instance << " : " << tr.detail
       << "\n";
  }
  return os.str();
}

}  // namespace modpic
