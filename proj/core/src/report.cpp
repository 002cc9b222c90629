#include "modpic/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "modpic/version.hpp"

namespace modpic {

namespace {

using json = nlohmann::ordered_json;

json factors_json(const FinAbGroup& g) {
  json a = json::array();
  for (const Int& d : g.invariant_factors) a.push_back(d.str());
  return a;
}

json class_json(const ModulusClass& c) {
  json j;
  j["degree"] = c.degree.str();
  if (c.char_p) {
    json f = json::array();
    for (const Int& x : c.finite) f.push_back(x.str());
    j["finite"] = f;
  } else {
    json t = json::array();
    for (const Rat& x : c.torus) {
      std::ostringstream os;
      os << x;
      t.push_back(os.str());
    }
    j["torus"] = t;
    json u = json::array();
    for (const Rat& x : c.unipotent) {
      std::ostringstream os;
      os << x;
      u.push_back(os.str());
    }
    j["unipotent"] = u;
  }
  return j;
}

}  // namespace

StructureReport StructureReport::compute(const PairDescription& pair) {
  StructureReport r;
  r.structure = picard_structure(pair.curve, pair.modulus, pair.base);
  r.reduced = pair.modulus.is_reduced()
                  ? r.structure
                  : picard_structure(pair.curve, pair.modulus.reduced(),
                                     r.structure->base_as_place());
  r.unipotent = unipotent_part(pair.curve, pair.modulus);
  r.torsion = torsion_decomposition(r.structure);
  return r;
}

std::string StructureReport::to_json() const {
  json j;
  j["version"] = kVersion;
  j["curve"] = structure->curve().str();
  j["modulus"] = structure->modulus().str();
  j["base"] = structure->base_description();
  j["free_rank"] = structure->free_rank();
  if (structure->char_p()) {
    j["finite_invariant_factors"] = factors_json(structure->finite_part());
    j["pic0_order"] = structure->pic0_order().str();
    j["unipotent"] = {{"invariant_factors", factors_json(unipotent.group)},
                      {"order", unipotent.order.str()},
                      {"p_primary_certified", unipotent.certified}};
    j["torsion"] = {{"p_primary", factors_json(torsion.p_primary)},
                    {"prime_to_p", factors_json(torsion.prime_to_p)},
                    {"prime_to_p_reduced", factors_json(torsion.prime_to_p_reduced)},
                    {"prime_to_p_matches_reduced", torsion.reduced_matches}};
    j["reduced"] = {{"finite_invariant_factors", factors_json(reduced->finite_part())},
                    {"pic0_order", reduced->pic0_order().str()}};
    Int kernel = structure->pic0_order() / reduced->pic0_order();
    j["comparison"] = {{"kernel_order", kernel.str()},
                       {"orders_consistent", kernel == unipotent.order}};
    j["generators"] = structure->generator_descriptions();
  } else {
    j["torus_rank"] = structure->torus_rank();
    j["unipotent_dimension"] = structure->unipotent_dimension();
    std::ostringstream os;
    os << "{+-1}^" << structure->torus_rank();
    j["torsion"] = os.str();
  }
  return j.dump(2) + "\n";
}

std::string StructureReport::to_text() const {
  std::ostringstream os;
  os << "pair: " << structure->curve().str() << " with D = " << structure->modulus().str()
     << "\n";
  os << "base class: " << structure->base_description() << "\n";
  os << "free rank: " << structure->free_rank() << " (degree)\n";
  if (structure->char_p()) {
    os << "finite part: " << structure->finite_part().str()
       << "  (order " << structure->pic0_order() << ")\n";
    os << "unipotent part U: " << unipotent.group.str() << "  (order " << unipotent.order
       << (unipotent.certified ? ", p-primary certified" : "") << ")\n";
    os << "torsion: p-primary " << torsion.p_primary.str() << "; prime-to-p "
       << torsion.prime_to_p.str() << "\n";
    os << "reduced modulus: finite part " << reduced->finite_part().str() << " (order "
       << reduced->pic0_order() << ")\n";
    os << "prime-to-p part matches reduced: " << (torsion.reduced_matches ? "yes" : "NO")
       << "\n";
    os << "generators:\n";
    for (const std::string& g : structure->generator_descriptions()) os << "  " << g << "\n";
  } else {
    os << "torus rank: " << structure->torus_rank() << "\n";
    os << "unipotent dimension: " << structure->unipotent_dimension() << "\n";
    os << "torsion: {+-1}^" << structure->torus_rank() << "\n";
  }
  return os.str();
}

ClassReport ClassReport::compute(const PairDescription& pair, const ZeroCycle& z) {
  ClassReport r;
  r.cycle = z.str();
  StructurePtr s = picard_structure(pair.curve, pair.modulus, pair.base);
  StructurePtr red = pair.modulus.is_reduced()
                         ? s
                         : picard_structure(pair.curve, pair.modulus.reduced(),
                                            s->base_as_place());
  r.cls = s->class_of(z);
  PiMap pi(s, red);
  r.pi_image = pi.apply(r.cls);
  r.in_unipotent = r.cls.degree == 0 && r.pi_image.is_zero();
  return r;
}

std::string ClassReport::to_json() const {
  json j;
  j["version"] = kVersion;
  j["cycle"] = cycle;
  j["class"] = class_json(cls);
  j["pi_image"] = class_json(pi_image);
  j["in_unipotent_part"] = in_unipotent;
  return j.dump(2) + "\n";
}

std::string ClassReport::to_text() const {
  std::ostringstream os;
  os << "cycle: " << cycle << "\n";
  os << "class: " << cls.str() << "\n";
  os << "pi image: " << pi_image.str() << "\n";
  os << "lies in U: " << (in_unipotent ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace modpic
