#include "modpic/picard.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "modpic/errors.hpp"
#include "modpic/factor.hpp"
#include "modpic/version.hpp"

namespace modpic {

bool ModulusClass::is_zero() const {
  if (degree != 0) return false;
  for (const Int& c : finite)
    if (c != 0) return false;
  for (const Rat& t : torus)
    if (t != 1) return false;
  for (const Rat& u : unipotent)
    if (u != 0) return false;
  return true;
}

std::string ModulusClass::str() const {
  std::ostringstream os;
  os << "deg=" << degree;
  if (char_p) {
    os << " finite=(";
    for (std::size_t i = 0; i < finite.size(); ++i) os << (i ? "," : "") << finite[i];
    os << ")";
  } else {
    os << " torus=(";
    for (std::size_t i = 0; i < torus.size(); ++i) os << (i ? "," : "") << torus[i];
    os << ") unipotent=(";
    for (std::size_t i = 0; i < unipotent.size(); ++i) os << (i ? "," : "") << unipotent[i];
    os << ")";
  }
  return os.str();
}

std::string DivisibilityReport::str() const {
  std::ostringstream os;
  os << "n=" << n << ": unipotent " << (unipotent_divisible ? "divisible" : "obstructed");
  if (!obstructed_factors.empty()) {
    os << "; obstructed invariant factors:";
    for (const Int& d : obstructed_factors) os << " " << d;
  }
  if (torus_obstructed) os << "; torus direction needs n-th roots in Q^x";
  if (degree0_divisible()) os << "; degree-0 part divisible";
  return os.str();
}

// ---------------------------------------------------------------------------
// Miller-style reduction on an elliptic curve

namespace {

// fold a list of affine points: sum [P_i] = [S] + (N-1)[O] + div(acc),
// S returned (may be O, in which case sum [P_i] = N [O] + div(acc))
EPoint fold_points(const Curve& e, std::vector<EPoint> pts, RationalFunction& acc) {
  const FieldDesc& f = e.field();
  while (pts.size() >= 2) {
    EPoint p = pts.back();
    pts.pop_back();
    EPoint q = pts.back();
    pts.pop_back();
    RationalFunction line = line_function(e, p, q);
    EPoint r = ep_add(e, p, q);
    acc = acc * line;
    if (!r.infinity) {
      Poly vert(f, {-r.x, FieldElem::one(f)}, "x");
      acc = acc / RationalFunction::elliptic(e, vert, Poly::zero(f, "x"),
                                             Poly::constant(FieldElem::one(f), "x"));
      pts.push_back(r);
    }
  }
  return pts.empty() ? EPoint::at_infinity() : pts.front();
}

}  // namespace

RationalFunction elliptic_principal_function(const Curve& e, const ZeroCycle& c) {
  if (e.kind() != CurveKind::Elliptic)
    throw std::domain_error("elliptic_principal_function: wrong curve");
  if (c.degree() != 0) throw std::domain_error("cycle is not of degree 0");
  std::vector<EPoint> pos, neg;
  Int total = 0;
  for (const auto& [p, m] : c.support()) {
    if (p.type() == PlaceType::EInfinity) continue;  // O bookkeeping is implicit
    total += abs_int(m);
    if (total > 4096) throw BoundsError("principal reduction: cycle too large");
    for (Int i = 0; i < abs_int(m); ++i)
      (m > 0 ? pos : neg).push_back(p.point());
  }
  // canonical processing order
  auto by_point = [](const EPoint& a, const EPoint& b) { return a.cmp(b) < 0; };
  std::sort(pos.begin(), pos.end(), by_point);
  std::sort(neg.begin(), neg.end(), by_point);

  RationalFunction hp = RationalFunction::one(e), hn = RationalFunction::one(e);
  EPoint sp = fold_points(e, std::move(pos), hp);
  EPoint sn = fold_points(e, std::move(neg), hn);
  if (!(sp == sn))
    throw std::domain_error("cycle is not principal: group-law sum is nonzero");
  return hp / hn;  // [S+] - [S-] cancels since the sums agree
}

// ---------------------------------------------------------------------------
// GroupStructure

GroupStructure::GroupStructure(const Curve& c, const Modulus& d)
    : curve_(c), d_(d), base_(c) {}

StructurePtr GroupStructure::build(const Curve& c, const Modulus& d, std::optional<Place> base) {
  if (!(d.curve() == c)) throw std::domain_error("modulus lives on a different curve");
  auto s = std::shared_ptr<GroupStructure>(new GroupStructure(c, d));
  s->charp_ = c.field().p != 0;
  s->base_override_ = std::move(base);
  if (s->charp_)
    s->build_charp();
  else
    s->build_char0();
  return s;
}

void GroupStructure::choose_base() {
  if (base_override_) {
    const Place& b = *base_override_;
    if (!(b.curve() == curve_)) throw std::domain_error("base place on a different curve");
    if (b.degree() != 1) throw ParseError("base place must have degree 1");
    if (d_.contains(b)) throw SupportError("base place meets |D|");
    base_ = ZeroCycle(curve_, {{b, Int(1)}});
    return;
  }
  const FieldDesc& f = curve_.field();
  if (curve_.kind() == CurveKind::Elliptic) {
    for (const Place& p : elliptic_places(curve_)) {
      if (!d_.contains(p)) {
        base_ = ZeroCycle(curve_, {{p, Int(1)}});
        return;
      }
    }
    throw BoundsError("no rational point available off |D| to serve as base");
  }
  // P1: prefer infinity, then rational places, then a degree-1 combination
  Place inf = Place::p1_infinity(curve_);
  if (!d_.contains(inf)) {
    base_ = ZeroCycle(curve_, {{inf, Int(1)}});
    return;
  }
  if (f.p == 0) {
    for (long long a = 0;; a = a >= 0 ? -(a + 1) : -a) {
      Place p = Place::p1_rational(curve_, FieldElem::from_int(f, Int(a)));
      if (!d_.contains(p)) {
        base_ = ZeroCycle(curve_, {{p, Int(1)}});
        return;
      }
    }
  }
  for (std::uint64_t code = 0; code < f.order(); ++code) {
    Place p = Place::p1_rational(curve_, FieldElem::from_code(f, code));
    if (!d_.contains(p)) {
      base_ = ZeroCycle(curve_, {{p, Int(1)}});
      return;
    }
  }
  // all rational places covered: combine free places of higher degree into a
  // degree-1 cycle by the extended gcd of the available degrees
  Int g = 0;
  ZeroCycle combo(curve_);
  for (unsigned deg = 2; deg <= 8 && g != 1; ++deg) {
    for (const Poly& pi : monic_irreducibles(f, deg)) {
      Place p = Place::p1_finite(curve_, pi);
      if (d_.contains(p)) continue;
      Int x, y;
      Int g2 = ext_gcd(g, Int(deg), x, y);
      if (g2 == g && g != 0) break;  // this degree cannot improve the gcd
      combo = combo * x + ZeroCycle(curve_, {{p, y}});
      g = g2;
      break;
    }
  }
  if (g != 1) throw BoundsError("no degree-1 base class available off |D|");
  base_ = combo;
}

std::size_t GroupStructure::point_index(const EPoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p,
                             [](const EPoint& a, const EPoint& b) { return a.cmp(b) < 0; });
  if (it == points_.end() || !(*it == p)) throw std::logic_error("point not on the curve list");
  return static_cast<std::size_t>(it - points_.begin());
}

void GroupStructure::build_charp() {
  const FieldDesc& f = curve_.field();
  const Int q = Int(f.order());

  // size guardrail: |O_D^x| * |Pic0(C)|
  Int od_order = 1;
  for (const auto& [p, n] : d_.components()) {
    ResidueField rf = p.residue_field();
    Int qp = Int(rf.order());
    od_order *= (qp - 1) * boost::multiprecision::pow(qp, n - 1);
  }
  Int h_curve = 1;
  if (curve_.kind() == CurveKind::Elliptic) h_curve = Int(elliptic_points(curve_).size());
  if (od_order * h_curve > Int(kMaxEnumeratedGroup))
    throw BoundsError("structure exceeds the size cap");

  choose_base();

  // per-place data and concrete generator numbering
  std::vector<std::pair<int, Int>> gen_orders;  // (kind marker, order) in generator order
  int next_gen = 0;
  for (const auto& [p, n] : d_.components()) {
    PlaceData pd;
    pd.place = p;
    pd.level = n;
    pd.rf = p.residue_field();
    Int qp = Int(pd.rf.order());
    pd.kappa_order = qp - 1;
    if (pd.kappa_order > 1) {
      pd.kappa_gen = pd.rf.primitive_unit();
      pd.kappa_dlog.assign(static_cast<std::size_t>(pd.rf.order()), 0);
      Poly pw = pd.rf.one();
      for (Int e = 0; e < pd.kappa_order; ++e) {
        pd.kappa_dlog[pd.rf.code(pw)] = static_cast<std::uint32_t>(e);
        pw = pd.rf.mul(pw, pd.kappa_gen);
      }
      pd.residue_gen = next_gen++;
      gen_orders.emplace_back(0, pd.kappa_order);
    }
    if (n > 1) {
      pd.engine = std::make_shared<LocalUnitEngine>(pd.rf, n);
      const EnumeratedGroup& ug = pd.engine->group();
      for (const Int& dinv : ug.structure().invariant_factors) {
        pd.unit_gens.push_back(next_gen++);
        gen_orders.emplace_back(1, dinv);
      }
    }
    places_.push_back(std::move(pd));
  }

  // elliptic lifts
  std::vector<std::vector<Int>> cross_rows;
  if (curve_.kind() == CurveKind::Elliptic) {
    points_ = elliptic_points(curve_);
    jgroup_ = std::make_shared<EnumeratedGroup>(
        points_.size(),
        [this](std::size_t a, std::size_t b) {
          return point_index(ep_add(curve_, points_[a], points_[b]));
        },
        0);

    // base point (single free rational point by construction)
    EPoint bpt = base_.support().front().first.point();

    // witness paths: every point as a sum of (Q - B) over free points
    std::vector<int> parent(points_.size(), -1);
    std::vector<std::size_t> parent_step(points_.size(), 0);
    std::vector<bool> seen(points_.size(), false);
    std::vector<std::size_t> frees;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (!d_.contains(Place::elliptic(curve_, points_[i]))) frees.push_back(i);
    std::vector<std::size_t> queue{point_index(EPoint::at_infinity())};
    seen[queue[0]] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t cur = queue[qi];
      for (std::size_t fi : frees) {
        EPoint step = ep_add(curve_, points_[fi], ep_neg(curve_, bpt));
        std::size_t nxt = point_index(ep_add(curve_, points_[cur], step));
        if (seen[nxt]) continue;
        seen[nxt] = true;
        parent[nxt] = static_cast<int>(cur);
        parent_step[nxt] = fi;
        queue.push_back(nxt);
      }
    }
    for (bool s : seen)
      if (!s)
        throw BoundsError(
            "rational points off |D| do not generate E(F_q); "
            "instance outside the rational-point model");

    const EnumeratedGroup& jg = *jgroup_;
    for (std::size_t gi = 0; gi < jg.generators().size(); ++gi) {
      std::size_t target = jg.generators()[gi];
      ZeroCycle lift(curve_);
      std::size_t cur = target;
      while (parent[cur] >= 0) {
        Place qp = Place::elliptic(curve_, points_[parent_step[cur]]);
        lift = lift + ZeroCycle(curve_, {{qp, Int(1)}}) - base_;
        cur = static_cast<std::size_t>(parent[cur]);
      }
      lift_cycles_.push_back(lift);
      lift_orders_.push_back(jg.structure().invariant_factors[gi]);
      lift_gens_.push_back(next_gen++);
      gen_orders.emplace_back(2, lift_orders_.back());
    }
  }

  num_gens_ = static_cast<std::size_t>(next_gen);

  if (curve_.kind() == CurveKind::Elliptic) {
    // cross relations o_j l_j = class of div(h_j) in the unit part
    for (std::size_t gi = 0; gi < lift_cycles_.size(); ++gi) {
      ZeroCycle cyc = lift_cycles_[gi] * lift_orders_[gi];
      RationalFunction h = elliptic_principal_function(curve_, cyc);
      std::vector<Int> row(num_gens_, 0);
      std::vector<Int> jets = concrete_coords_of_jets(h);
      for (std::size_t i = 0; i < jets.size(); ++i) row[i] = -jets[i];
      row[static_cast<std::size_t>(lift_gens_[gi])] += lift_orders_[gi];
      cross_rows.push_back(std::move(row));
    }
  }

  // relation matrix: generator orders, the diagonal F_q^x relation, and the
  // elliptic cross relations
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < num_gens_; ++i) {
    if (gen_orders[i].first == 2) continue;  // lift orders live in cross rows
    std::vector<Int> row(num_gens_, 0);
    row[i] = gen_orders[i].second;
    rows.push_back(std::move(row));
  }
  if (!d_.empty() && q > 2) {
    FieldElem g0 = primitive_element(f);
    std::vector<Int> row(num_gens_, 0);
    for (const PlaceData& pd : places_) {
      if (pd.residue_gen < 0) continue;
      Poly emb = pd.rf.from_base(g0);
      row[static_cast<std::size_t>(pd.residue_gen)] =
          Int(pd.kappa_dlog[pd.rf.code(emb)]);
    }
    rows.push_back(std::move(row));
  }
  for (auto& r : cross_rows) rows.push_back(std::move(r));

  IntMatrix rel(rows.size(), num_gens_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < num_gens_; ++j) rel.at(i, j) = rows[i][j];

  SnfResult snf = smith_normal_form(rel);
  v_ = snf.v;
  vinv_ = snf.vinv;
  dfull_.assign(num_gens_, 0);
  std::size_t rank = std::min(rel.rows(), rel.cols());
  for (std::size_t i = 0; i < num_gens_; ++i) {
    dfull_[i] = i < rank ? snf.d.at(i, i) : Int(0);
    if (dfull_[i] == 0)
      throw std::logic_error("picard presentation has unexpected free rank");
    if (dfull_[i] > 1) kept_.push_back(i);
  }
  for (std::size_t i : kept_) finite_.invariant_factors.push_back(dfull_[i]);
  pic0_order_ = finite_.order();

  // exactness audit against the unit-group bookkeeping
  Int expected = d_.empty() ? h_curve : od_order / (q - 1) * h_curve;
  if (pic0_order_ != expected)
    throw std::logic_error("picard structure: order audit failed (presentation bug)");
}

void GroupStructure::build_char0() {
  if (curve_.kind() != CurveKind::P1)
    throw BoundsError("characteristic 0 supports P1 over Q only");
  choose_base();
  for (const auto& [p, n] : d_.components()) {
    PlaceData pd;
    pd.place = p;
    pd.level = n;
    pd.rf = p.residue_field();
    places_.push_back(std::move(pd));
    unip_dim_ += n - 1;
  }
  torus_rank_ = places_.empty() ? 0 : places_.size() - 1;
}

std::vector<Int> GroupStructure::concrete_coords_of_jets(const RationalFunction& h) const {
  std::vector<Int> out(num_gens_, 0);
  for (const PlaceData& pd : places_) {
    TruncSeries exp = local_expansion(h, pd.place, pd.level);
    Poly c0 = exp.coeff(0);
    if (pd.rf.is_zero(c0))
      throw std::domain_error("function is not a unit at a place of the modulus");
    if (pd.residue_gen >= 0)
      out[static_cast<std::size_t>(pd.residue_gen)] = Int(pd.kappa_dlog[pd.rf.code(c0)]);
    if (pd.level > 1) {
      Poly inv0 = pd.rf.inv(c0);
      TruncSeries unit = exp;
      for (std::size_t i = 0; i < unit.precision(); ++i)
        unit.set_coeff(i, pd.rf.mul(unit.coeff(i), inv0));
      std::size_t code = pd.engine->from_series(unit);
      std::vector<Int> uc = pd.engine->group().coords(code);
      for (std::size_t j = 0; j < uc.size(); ++j)
        out[static_cast<std::size_t>(pd.unit_gens[j])] = uc[j];
    }
  }
  return out;
}

std::vector<Int> GroupStructure::reduce_coords(const std::vector<Int>& concrete) const {
  std::vector<Int> out;
  out.reserve(kept_.size());
  for (std::size_t idx : kept_) {
    Int s = 0;
    for (std::size_t i = 0; i < num_gens_; ++i) s += concrete[i] * v_.at(i, idx);
    s %= dfull_[idx];
    if (s < 0) s += dfull_[idx];
    out.push_back(s);
  }
  return out;
}

RationalFunction GroupStructure::principal_witness(const ZeroCycle& c) const {
  if (curve_.kind() == CurveKind::Elliptic) return elliptic_principal_function(curve_, c);
  const FieldDesc& f = curve_.field();
  Poly num = Poly::constant(FieldElem::one(f), "t");
  Poly den = num;
  for (const auto& [p, m] : c.support()) {
    if (p.at_infinity()) continue;  // balanced by the degree-0 condition
    if (m > 0)
      for (Int i = 0; i < m; ++i) num = num * p.poly();
    else
      for (Int i = 0; i < -m; ++i) den = den * p.poly();
  }
  return RationalFunction::p1(curve_, num, den);
}

ModulusClass GroupStructure::class_of(const ZeroCycle& z) const {
  if (!(z.curve() == curve_)) throw std::domain_error("cycle lives on a different curve");
  if (z.meets(d_)) throw SupportError("cycle support meets |D|");

  ModulusClass out;
  out.char_p = charp_;
  out.degree = z.degree();
  ZeroCycle z0 = z - base_ * out.degree;

  if (!charp_) {
    // explicit function with div = z0, monic product of linear factors
    RationalFunction h = principal_witness(z0);
    const FieldDesc& f = curve_.field();
    std::vector<Rat> residues;
    for (const PlaceData& pd : places_) {
      TruncSeries exp = local_expansion(h, pd.place, pd.level);
      FieldElem c0 = exp.coeff(0).is_zero() ? FieldElem::zero(f) : exp.coeff(0)[0];
      if (c0.is_zero()) throw std::domain_error("witness is not a unit along |D|");
      residues.push_back(c0.rat());
      if (pd.level > 1) {
        FieldElem inv0 = c0.inverse();
        TruncSeries unit = exp;
        for (std::size_t i = 0; i < unit.precision(); ++i)
          unit.set_coeff(i, unit.coeff(i) * Poly::constant(inv0, "t"));
        TruncSeries lg = series_log(unit);
        for (std::size_t i = 1; i < pd.level; ++i)
          out.unipotent.push_back(lg.coeff(i).is_zero() ? Rat(0) : lg.coeff(i)[0].rat());
      }
    }
    for (std::size_t i = 1; i < residues.size(); ++i)
      out.torus.push_back(residues[i] / residues[0]);
    return out;
  }

  std::vector<Int> concrete(num_gens_, 0);
  ZeroCycle w = z0;
  if (curve_.kind() == CurveKind::Elliptic) {
    EPoint s = EPoint::at_infinity();
    for (const auto& [p, m] : z0.support())
      s = ep_add(curve_, s, ep_mul(curve_, m, p.point()));
    std::vector<Int> a = jgroup_->coords(point_index(s));
    for (std::size_t j = 0; j < a.size(); ++j) {
      concrete[static_cast<std::size_t>(lift_gens_[j])] = a[j];
      w = w - lift_cycles_[j] * a[j];
    }
  }
  RationalFunction h = principal_witness(w);
  std::vector<Int> jets = concrete_coords_of_jets(h);
  for (std::size_t i = 0; i < num_gens_; ++i) concrete[i] += jets[i];
  out.finite = reduce_coords(concrete);
  return out;
}

std::string GroupStructure::base_description() const { return base_.str(); }

std::optional<Place> GroupStructure::base_as_place() const {
  if (base_.support().size() == 1 && base_.support().front().second == 1)
    return base_.support().front().first;
  return std::nullopt;
}

std::vector<std::string> GroupStructure::generator_descriptions() const {
  std::vector<std::string> concrete;
  concrete.reserve(num_gens_);
  for (const PlaceData& pd : places_) {
    if (pd.residue_gen >= 0)
      concrete.push_back("kappa(" + pd.place.str() + ")^x gen " + pd.kappa_gen.str());
    for (std::size_t j = 0; j < pd.unit_gens.size(); ++j) {
      std::ostringstream os;
      os << "unit gen " << j + 1 << " at " << pd.place.str() << " level " << pd.level;
      concrete.push_back(os.str());
    }
  }
  for (std::size_t j = 0; j < lift_cycles_.size(); ++j)
    concrete.push_back("lift of " + lift_cycles_[j].str());

  std::vector<std::string> out;
  for (std::size_t a = 0; a < kept_.size(); ++a) {
    std::ostringstream os;
    os << "Z/" << dfull_[kept_[a]] << ": ";
    bool first = true;
    for (std::size_t i = 0; i < num_gens_; ++i) {
      Int e = vinv_.at(kept_[a], i);
      if (e == 0) continue;
      if (!first) os << " * ";
      first = false;
      os << "(" << concrete[i] << ")^" << e;
    }
    if (first) os << "1";
    out.push_back(os.str());
  }
  return out;
}

UnipotentPart GroupStructure::unipotent() const { return unipotent_part(curve_, d_); }

// --------------------------------------------------------------------------

StructurePtr picard_structure(const Curve& c, const Modulus& d, std::optional<Place> base) {
  return GroupStructure::build(c, d, std::move(base));
}

ModulusClass class_of(const ZeroCycle& z, const StructurePtr& s) { return s->class_of(z); }

UnipotentPart unipotent_part(const Curve& c, const Modulus& d) {
  if (!(d.curve() == c)) throw std::domain_error("modulus lives on a different curve");
  UnipotentPart out;
  out.char_p = c.field().p != 0;
  for (const auto& [p, n] : d.components()) {
    out.components.emplace_back(p, n);
    if (n <= 1) continue;
    LocalUnitStructure ls = local_unit_structure(p, n);
    if (out.char_p) {
      out.group = direct_sum(out.group, ls.group);
      out.order *= ls.order;
    } else {
      out.dimension += ls.dimension;
    }
  }
  if (out.char_p) {
    // p-primary certification
    Int o = out.order;
    const Int p = Int(c.field().p);
    while (o % p == 0) o /= p;
    out.certified = (o == 1) && (out.group.order() == out.order);
  } else {
    out.certified = true;  // Q-vector space, divisibility is exact division
  }
  return out;
}

TorsionDecomposition torsion_decomposition(const StructurePtr& s) {
  TorsionDecomposition out;
  out.char_p = s->char_p();
  if (!s->char_p()) {
    out.sign_rank = s->torus_rank();
    out.reduced_matches = true;  // torsion = sign vectors on both sides
    return out;
  }
  const Int p = Int(s->curve().field().p);
  out.p_primary = p_part(s->finite_part(), p);
  out.prime_to_p = prime_to_p_part(s->finite_part(), p);
  StructurePtr red =
      GroupStructure::build(s->curve(), s->modulus().reduced(), s->base_as_place());
  out.prime_to_p_reduced = prime_to_p_part(red->finite_part(), p);
  out.reduced_matches = out.prime_to_p == out.prime_to_p_reduced;
  return out;
}

DivisibilityReport divisibility_check(const StructurePtr& s, const Int& n) {
  DivisibilityReport out;
  out.n = n;
  if (!s->char_p()) {
    out.unipotent_divisible = true;
    out.torus_obstructed = n > 1 && s->torus_rank() > 0;
    return out;
  }
  const Int p = Int(s->curve().field().p);
  out.unipotent_divisible = gcd_int(n, p) == 1;
  for (const Int& d : s->finite_part().invariant_factors)
    if (gcd_int(d, n) != 1) out.obstructed_factors.push_back(d);
  return out;
}

// --------------------------------------------------------------------------

PiMap::PiMap(StructurePtr from, StructurePtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (!(from_->curve() == to_->curve())) throw std::domain_error("pi map: curves differ");
  if (!(from_->modulus().reduced() == to_->modulus().reduced()))
    throw std::domain_error("pi map: moduli have different supports");
  if (!to_->modulus().is_reduced())
    throw std::domain_error("pi map: target must carry the reduced modulus");
  if (!(from_->base_cycle() == to_->base_cycle()))
    throw std::domain_error("pi map: structures use different base classes");
  if (!from_->char_p()) return;

  gen_images_.assign(from_->num_gens_, {});
  auto image_of_concrete = [&](std::size_t target_gen) {
    std::vector<Int> e(to_->num_gens_, 0);
    e[target_gen] = 1;
    return to_->reduce_coords(e);
  };
  for (std::size_t pi = 0; pi < from_->places_.size(); ++pi) {
    const auto& pd = from_->places_[pi];
    const auto& pr = to_->places_[pi];
    if (pd.residue_gen >= 0)
      gen_images_[static_cast<std::size_t>(pd.residue_gen)] =
          image_of_concrete(static_cast<std::size_t>(pr.residue_gen));
    for (int ug : pd.unit_gens)
      gen_images_[static_cast<std::size_t>(ug)] =
          std::vector<Int>(to_->kept_.size(), 0);  // unit jets die at level 1
  }
  for (std::size_t j = 0; j < from_->lift_gens_.size(); ++j)
    gen_images_[static_cast<std::size_t>(from_->lift_gens_[j])] =
        image_of_concrete(static_cast<std::size_t>(to_->lift_gens_[j]));
}

ModulusClass PiMap::apply(const ModulusClass& c) const {
  ModulusClass out;
  out.char_p = c.char_p;
  out.degree = c.degree;
  if (!c.char_p) {
    out.torus = c.torus;  // unipotent coordinates die
    return out;
  }
  // lift invariant coordinates to the concrete generators, map, reduce
  std::vector<Int> concrete(from_->num_gens_, 0);
  for (std::size_t a = 0; a < c.finite.size(); ++a) {
    std::size_t row = from_->kept_[a];
    for (std::size_t i = 0; i < from_->num_gens_; ++i)
      concrete[i] += c.finite[a] * from_->vinv_.at(row, i);
  }
  std::vector<Int> acc(to_->kept_.size(), 0);
  for (std::size_t i = 0; i < from_->num_gens_; ++i) {
    if (concrete[i] == 0) continue;
    const std::vector<Int>& img = gen_images_[i];
    for (std::size_t a = 0; a < acc.size(); ++a) acc[a] += concrete[i] * img[a];
  }
  for (std::size_t a = 0; a < acc.size(); ++a) {
    const Int& d = to_->dfull_[to_->kept_[a]];
    acc[a] %= d;
    if (acc[a] < 0) acc[a] += d;
  }
  out.finite = std::move(acc);
  return out;
}

}  // namespace modpic
