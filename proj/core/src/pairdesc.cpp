#include "modpic/pairdesc.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "modpic/errors.hpp"
#include "modpic/factor.hpp"

namespace modpic {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// expression parser

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;
  const Curve& curve;

  explicit ExprParser(const std::string& text, const Curve& c) : s(text), curve(c) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("expression error at position " + std::to_string(pos) + ": " + why);
  }

  RationalFunction parse_expr() {
    RationalFunction acc = parse_term();
    while (true) {
      if (eat('+'))
        acc = acc + parse_term();
      else if (eat('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  RationalFunction parse_term() {
    RationalFunction acc = parse_power();
    while (true) {
      if (eat('*'))
        acc = acc * parse_power();
      else if (eat('/'))
        acc = acc / parse_power();
      else
        return acc;
    }
  }

  RationalFunction parse_power() {
    RationalFunction base = parse_atom();
    if (eat('^')) {
      bool neg = eat('-');
      Int e = parse_integer();
      if (neg) e = -e;
      return base.pow(e);
    }
    return base;
  }

  Int parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  RationalFunction parse_atom() {
    skip_ws();
    if (eat('(')) {
      RationalFunction e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('-')) return -parse_atom();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = parse_integer();
      const FieldDesc& f = curve.field();
      if (f.p != 0 && f.k > 1) {
        // integer literals over extension fields denote canonical codes
        Int q = Int(f.order());
        Int code = n % q;
        if (code < 0) code += q;
        return RationalFunction::constant(
            curve, FieldElem::from_code(f, code.convert_to<std::uint64_t>()));
      }
      return RationalFunction::constant(curve, FieldElem::from_int(f, n));
    }
    if (c == 't' && curve.kind() == CurveKind::P1) {
      ++pos;
      return RationalFunction::coordinate(curve);
    }
    if (c == 'x' && curve.kind() == CurveKind::Elliptic) {
      ++pos;
      return RationalFunction::coordinate(curve);
    }
    if (c == 'y' && curve.kind() == CurveKind::Elliptic) {
      ++pos;
      return RationalFunction::coordinate_y(curve);
    }
    fail("unexpected character");
  }
};

Poly expression_to_poly(const RationalFunction& f, const std::string& what) {
  if (f.curve().kind() != CurveKind::P1)
    throw ParseError(what + ": polynomial expressions live on P1");
  if (f.den().degree() != 0) throw ParseError(what + ": expected a polynomial, got a fraction");
  return f.num() * f.den()[0].inverse();
}

FieldElem parse_field_literal(const std::string& text, const FieldDesc& f) {
  std::string t = text;
  if (f.p == 0) {
    auto slash = t.find('/');
    if (slash != std::string::npos)
      return FieldElem::from_rat(Rat(Int(t.substr(0, slash)), Int(t.substr(slash + 1))));
    return FieldElem::from_rat(Rat(Int(t)));
  }
  Int n(t);
  if (f.k > 1) {
    Int q = Int(f.order());
    Int code = n % q;
    if (code < 0) code += q;
    return FieldElem::from_code(f, code.convert_to<std::uint64_t>());
  }
  return FieldElem::from_int(f, n);
}

}  // namespace

Place parse_place_token(const std::string& token, const Curve& c) {
  std::string t = token;
  // trim
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  if (t.empty()) throw ParseError("empty place token");
  if (t == "inf") {
    if (c.kind() != CurveKind::P1) throw ParseError("'inf' is a P1 place");
    return Place::p1_infinity(c);
  }
  if (t == "O") {
    if (c.kind() != CurveKind::Elliptic) throw ParseError("'O' is an elliptic place");
    return Place::elliptic(c, EPoint::at_infinity());
  }
  if (t.rfind("pt:", 0) == 0 ||
      (c.kind() == CurveKind::Elliptic && t.find(',') != std::string::npos)) {
    if (c.kind() != CurveKind::Elliptic) throw ParseError("'pt:' places live on elliptic curves");
    std::string rest = t.rfind("pt:", 0) == 0 ? t.substr(3) : t;
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
      rest = rest.substr(1, rest.size() - 2);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("'pt:' wants coordinates x,y");
    FieldElem x = parse_field_literal(rest.substr(0, comma), c.field());
    FieldElem y = parse_field_literal(rest.substr(comma + 1), c.field());
    EPoint p = EPoint::affine(x, y);
    if (!on_curve(c, p)) throw ParseError("point " + p.str() + " is not on the curve");
    return Place::elliptic(c, p);
  }
  std::string expr = t;
  if (t.rfind("poly:", 0) == 0) expr = t.substr(5);
  if (c.kind() != CurveKind::P1) throw ParseError("polynomial places live on P1");
  ExprParser parser(expr, c);
  RationalFunction f = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != expr.size()) throw ParseError("trailing input in place token");
  Poly p = expression_to_poly(f, "place token");
  if (p.degree() < 1) throw ParseError("place polynomial must be nonconstant");
  Poly monic = p.monic();
  if (c.field().p != 0 && !is_irreducible(monic))
    throw ParseError("place polynomial must be irreducible");
  return Place::p1_finite(c, monic);
}

RationalFunction parse_function_expression(const std::string& text, const Curve& c) {
  ExprParser parser(text, c);
  RationalFunction f = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) throw ParseError("trailing input in expression");
  return f;
}

ZeroCycle parse_cycle_expression(const std::string& text, const Curve& c) {
  ZeroCycle z(c);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) throw ParseError("empty cycle expression");
      break;
    }
    Int sign = 1;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between cycle terms");
    }
    first = false;
    skip_ws();
    // optional integer coefficient
    Int coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coeff = Int(text.substr(start, pos - start));
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos < text.size() && text[pos] == '[') {
      std::size_t close = text.find(']', pos);
      if (close == std::string::npos) throw ParseError("unterminated '[' in cycle");
      Place p = parse_place_token(text.substr(pos + 1, close - pos - 1), c);
      pos = close + 1;
      z = z + ZeroCycle(c, {{p, sign * coeff}});
      continue;
    }
    if (text.compare(pos, 3, "div") == 0) {
      pos += 3;
      skip_ws();
      if (pos == text.size() || text[pos] != '(') throw ParseError("div wants '('");
      // find the matching parenthesis
      int depth = 0;
      std::size_t start = pos;
      while (pos < text.size()) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')' && --depth == 0) break;
        ++pos;
      }
      if (depth != 0) throw ParseError("unbalanced parentheses in div(...)");
      std::string inner = text.substr(start + 1, pos - start - 1);
      ++pos;
      RationalFunction f = parse_function_expression(inner, c);
      if (f.is_zero()) throw ParseError("div of the zero function");
      z = z + divisor_of(f) * (sign * coeff);
      continue;
    }
    throw ParseError("expected '[place]' or 'div(...)' in cycle expression");
  }
  return z;
}

// ---------------------------------------------------------------------------

namespace {

PairDescription parse_pair(const json& j) {
  if (!j.is_object()) throw ParseError("pair description must be a JSON object");
  if (!j.contains("characteristic") || !j["characteristic"].is_number_unsigned())
    throw ParseError("missing or invalid 'characteristic'");
  std::uint32_t p = j["characteristic"].get<std::uint32_t>();
  std::uint32_t k = 1;
  if (j.contains("extension_degree")) {
    if (!j["extension_degree"].is_number_unsigned())
      throw ParseError("'extension_degree' must be a positive integer");
    k = j["extension_degree"].get<std::uint32_t>();
  }
  FieldDesc field = make_field(p, k);

  if (!j.contains("curve") || !j["curve"].is_object() || !j["curve"].contains("kind"))
    throw ParseError("missing 'curve' object with 'kind'");
  std::string kind = j["curve"]["kind"].get<std::string>();
  Curve curve = Curve::p1(field);
  if (kind == "P1" || kind == "p1") {
    curve = Curve::p1(field);
  } else if (kind == "elliptic") {
    if (!j["curve"].contains("a") || !j["curve"].contains("b"))
      throw ParseError("elliptic curve wants coefficients 'a' and 'b'");
    auto lit = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    FieldElem a = parse_field_literal(lit(j["curve"]["a"]), field);
    FieldElem b = parse_field_literal(lit(j["curve"]["b"]), field);
    curve = Curve::elliptic(field, a, b);
  } else {
    throw ParseError("curve kind must be 'P1' or 'elliptic'");
  }

  std::vector<std::pair<Place, unsigned>> comps;
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array()) throw ParseError("'modulus' must be an array");
    for (const auto& item : j["modulus"]) {
      if (!item.is_object() || !item.contains("place") || !item.contains("mult"))
        throw ParseError("modulus entries are {place, mult}");
      if (!item["mult"].is_number_unsigned() || item["mult"].get<unsigned>() < 1)
        throw ParseError("modulus multiplicities must be integers >= 1");
      comps.emplace_back(parse_place_token(item["place"].get<std::string>(), curve),
                         item["mult"].get<unsigned>());
    }
  }
  PairDescription out(curve, Modulus(curve, std::move(comps)));
  if (j.contains("base")) out.base = parse_place_token(j["base"].get<std::string>(), curve);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ParseError("'seed' must be unsigned");
    out.seed = j["seed"].get<std::uint64_t>();
  }
  return out;
}

}  // namespace

PairDescription parse_pair_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_pair(j);
}

PairDescription parse_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pair file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pair_json(ss.str());
}

std::string PairDescription::canonical_json() const {
  json j;
  j["characteristic"] = curve.field().p;
  j["extension_degree"] = curve.field().k;
  if (curve.kind() == CurveKind::P1) {
    j["curve"] = {{"kind", "P1"}};
  } else {
    j["curve"] = {{"kind", "elliptic"}, {"a", curve.a().str()}, {"b", curve.b().str()}};
  }
  json comps = json::array();
  for (const auto& [p, n] : modulus.components())
    comps.push_back({{"place", p.str()}, {"mult", n}});
  j["modulus"] = comps;
  if (base) j["base"] = base->str();
  return j.dump();
}

}  // namespace modpic
