#ifndef RAMDEPTH_DOCUMENT_HPP_
#define RAMDEPTH_DOCUMENT_HPP_

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "classfunc.hpp"
#include "cyclotomic.hpp"
#include "filtration.hpp"
#include "innerforms.hpp"
#include "projective.hpp"

namespace ramdepth {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalar encodings: rationals as integers or {num, den}; cyclotomic numbers
// as rationals or {N, coeffs} with the canonical coefficient vector.

inline Json rat_to_json(const Rat& r) {
  if (is_integer(r)) return Json(rat_as_long(r));
  Json j;
  j["num"] = to_long(numerator(r));
  j["den"] = to_long(denominator(r));
  return j;
}

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  require(j.is_object() && j.contains("num") && j.contains("den"),
          "SchemaError", "rational must be an integer or {num, den}");
  require(j["num"].is_number_integer() && j["den"].is_number_integer(),
          "SchemaError", "rational parts must be integers");
  Rat r(Int(j["num"].get<long long>()), Int(j["den"].get<long long>()));
  return r;
}

inline Json cyc_to_json(const Cyc& c) {
  if (c.is_rational()) return rat_to_json(c.as_rational());
  Json j;
  j["N"] = c.conductor();
  Json coeffs = Json::array();
  for (const Rat& r : c.coeffs()) coeffs.push_back(rat_to_json(r));
  j["coeffs"] = coeffs;
  return j;
}

inline Cyc cyc_from_json(const Json& j) {
  if (j.is_number_integer() || (j.is_object() && j.contains("num")))
    return Cyc(rat_from_json(j));
  require(j.is_object() && j.contains("N") && j.contains("coeffs"),
          "SchemaError", "cyclotomic value must be rational or {N, coeffs}");
  long n = j["N"].get<long>();
  require(n >= 1, "SchemaError", "cyclotomic order must be positive");
  const Json& coeffs = j["coeffs"];
  require(coeffs.is_array() && coeffs.size() == static_cast<std::size_t>(n),
          "SchemaError", "cyclotomic value needs one coefficient per power");
  Cyc out(0);
  for (long k = 0; k < n; ++k) {
    Rat c = rat_from_json(coeffs[static_cast<std::size_t>(k)]);
    if (c != 0) out = out + Cyc::root_of_unity(n, k) * Cyc(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parameter specifications: references into the document's character tables.

struct ParameterSummandSpec {
  std::string type;  // "induced" | "orbit" | "finite_orbit" | "unramified" | "ramified_symbol"
  std::string ref;   // character or subgroup-character name, where applicable
  long b = 1;
  long conductor = 1;
  long dim = 1;
};

struct ParameterSpec {
  std::string name;
  std::string kind;  // "monomial" | "wd"
  std::vector<ParameterSummandSpec> summands;
};

struct FixtureDocument {
  std::string name;
  FilteredGroupPtr fg;  // null for documents without a group section
  std::vector<std::pair<std::string, ClassFunction>> characters;
  std::vector<std::pair<std::string, SubgroupWithCharacter>> subchars;
  std::vector<ParameterSpec> parameters;
  std::vector<EssL2Datum> segments;
  Json expect = Json::object();  // key -> {value, provenance}

  const ClassFunction& character(const std::string& id) const {
    for (const auto& [n, c] : characters)
      if (n == id) return c;
    fail("UnknownName", "no character named " + id);
  }

  const SubgroupWithCharacter& subchar(const std::string& id) const {
    for (const auto& [n, c] : subchars)
      if (n == id) return c;
    fail("UnknownName", "no subgroup character named " + id);
  }

  const ParameterSpec& parameter(const std::string& id) const {
    for (const auto& p : parameters)
      if (p.name == id) return p;
    fail("UnknownName", "no parameter named " + id);
  }

  MonomialParameter monomial_parameter(const ParameterSpec& spec) const {
    require(spec.kind == "monomial", "SchemaError",
            "parameter " + spec.name + " is not of monomial kind");
    require(fg != nullptr, "SchemaError", "monomial parameter needs a group");
    MonomialParameter mp;
    mp.fg = fg;
    for (const auto& s : spec.summands) {
      if (s.type == "induced")
        mp.summands.emplace_back(subchar(s.ref));
      else if (s.type == "orbit")
        mp.summands.emplace_back(character(s.ref));
      else
        fail("SchemaError", "unknown monomial summand type " + s.type);
    }
    return mp;
  }

  WDParameter wd_parameter(const ParameterSpec& spec) const {
    require(spec.kind == "wd", "SchemaError",
            "parameter " + spec.name + " is not of wd kind");
    std::vector<WDSummand> summands;
    for (const auto& s : spec.summands) {
      require(s.b >= 1, "SchemaError", "summand multiplier b must be >= 1");
      if (s.type == "finite_orbit") {
        require(fg != nullptr, "SchemaError", "finite orbit needs a group");
        summands.push_back(WDSummand{InertialDatum{FiniteOrbit{fg, character(s.ref)}}, s.b});
      } else if (s.type == "unramified") {
        summands.push_back(WDSummand{InertialDatum{UnramifiedChar{}}, s.b});
      } else if (s.type == "ramified_symbol") {
        RamifiedCharSymbol sym;
        sym.conductor_exponent = s.conductor;
        sym.dim = s.dim;
        summands.push_back(WDSummand{InertialDatum{sym}, s.b});
      } else {
        fail("SchemaError", "unknown wd summand type " + s.type);
      }
    }
    return WDParameter(std::move(summands));
  }
};

// ---------------------------------------------------------------------------
// Serialization.

inline Json fixture_to_json(const FixtureDocument& doc) {
  Json j;
  j["name"] = doc.name;
  if (doc.fg) {
    const FiniteGroup& g = doc.fg->group();
    Json group;
    group["order"] = g.order();
    group["mul"] = g.mul_table();
    j["group"] = group;
    Json filt;
    Json levels = Json::array();
    for (const Subgroup& h : doc.fg->levels()) levels.push_back(h);
    filt["levels"] = levels;
    if (doc.fg->residual_char()) filt["p"] = *doc.fg->residual_char();
    j["filtration"] = filt;
  }
  if (!doc.characters.empty()) {
    Json arr = Json::array();
    for (const auto& [name, chi] : doc.characters) {
      Json c;
      c["name"] = name;
      Json vals = Json::array();
      for (const Cyc& v : chi.class_values()) vals.push_back(cyc_to_json(v));
      c["class_values"] = vals;
      arr.push_back(c);
    }
    j["characters"] = arr;
  }
  if (!doc.subchars.empty()) {
    Json arr = Json::array();
    for (const auto& [name, sc] : doc.subchars) {
      Json c;
      c["name"] = name;
      c["subgroup"] = sc.carrier();
      Json vals = Json::array();
      for (const Cyc& v : sc.values()) vals.push_back(cyc_to_json(v));
      c["values"] = vals;
      arr.push_back(c);
    }
    j["subchars"] = arr;
  }
  if (!doc.parameters.empty()) {
    Json arr = Json::array();
    for (const auto& p : doc.parameters) {
      Json q;
      q["name"] = p.name;
      q["kind"] = p.kind;
      Json summands = Json::array();
      for (const auto& s : p.summands) {
        Json t;
        t["type"] = s.type;
        if (s.type == "induced")
          t["subchar"] = s.ref;
        else if (s.type == "orbit" || s.type == "finite_orbit")
          t["character"] = s.ref;
        if (p.kind == "wd") t["b"] = s.b;
        if (s.type == "ramified_symbol") {
          t["conductor"] = s.conductor;
          t["dim"] = s.dim;
        }
        summands.push_back(t);
      }
      q["summands"] = summands;
      arr.push_back(q);
    }
    j["parameters"] = arr;
  }
  if (!doc.segments.empty()) {
    Json arr = Json::array();
    for (const EssL2Datum& e : doc.segments) {
      Json s;
      s["n"] = e.form.n;
      s["d"] = e.form.d;
      s["m"] = e.form.m;
      s["a"] = e.sigma.a;
      s["b"] = e.b;
      s["s_sigma"] = e.sigma.s_sigma;
      s["depth"] = rat_to_json(e.sigma.depth);
      s["unramified"] = e.sigma.unramified;
      arr.push_back(s);
    }
    j["segments"] = arr;
  }
  j["expect"] = doc.expect;
  return j;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace detail {

inline void expect_keys(const Json& j, std::initializer_list<const char*> keys,
                        const std::string& where) {
  for (auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* k : keys)
      if (key == k) known = true;
    require(known, "SchemaError", "unknown key '" + key + "' in " + where);
  }
}

}  // namespace detail

inline FixtureDocument fixture_from_json(const Json& j) {
  require(j.is_object(), "SchemaError", "fixture must be a JSON object");
  detail::expect_keys(j,
                      {"name", "group", "filtration", "characters", "subchars",
                       "parameters", "segments", "expect"},
                      "fixture");
  FixtureDocument doc;
  require(j.contains("name") && j["name"].is_string(), "SchemaError",
          "fixture needs a string name");
  doc.name = j["name"].get<std::string>();

  if (j.contains("group")) {
    require(j.contains("filtration"), "SchemaError",
            "a group section needs a filtration section");
    const Json& gj = j["group"];
    detail::expect_keys(gj, {"order", "mul"}, "group");
    require(gj.contains("order") && gj.contains("mul"), "SchemaError",
            "group needs order and mul");
    int n = gj["order"].get<int>();
    std::vector<int> mul = gj["mul"].get<std::vector<int>>();
    require(mul.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
            "SchemaError", "mul table must have order^2 entries");
    FiniteGroup g(n, std::move(mul));

    const Json& fj = j["filtration"];
    detail::expect_keys(fj, {"levels", "p"}, "filtration");
    require(fj.contains("levels") && fj["levels"].is_array(), "SchemaError",
            "filtration needs a levels array");
    std::vector<Subgroup> levels;
    for (const Json& lv : fj["levels"]) levels.push_back(lv.get<Subgroup>());
    std::optional<long> p;
    if (fj.contains("p")) p = fj["p"].get<long>();
    doc.fg = std::make_shared<const FilteredGroup>(std::move(g), std::move(levels), p);
  } else {
    require(!j.contains("filtration"), "SchemaError",
            "a filtration section needs a group section");
  }

  if (j.contains("characters")) {
    require(doc.fg != nullptr, "SchemaError", "characters need a group");
    for (const Json& cj : j["characters"]) {
      detail::expect_keys(cj, {"name", "class_values"}, "character");
      require(cj.contains("name") && cj.contains("class_values"), "SchemaError",
              "character needs name and class_values");
      std::vector<Cyc> vals;
      for (const Json& vj : cj["class_values"]) vals.push_back(cyc_from_json(vj));
      doc.characters.emplace_back(cj["name"].get<std::string>(),
                                  ClassFunction(doc.fg, std::move(vals), true));
    }
  }

  if (j.contains("subchars")) {
    require(doc.fg != nullptr, "SchemaError", "subgroup characters need a group");
    for (const Json& cj : j["subchars"]) {
      detail::expect_keys(cj, {"name", "subgroup", "values"}, "subchar");
      require(cj.contains("name") && cj.contains("subgroup") && cj.contains("values"),
              "SchemaError", "subchar needs name, subgroup and values");
      Subgroup h = cj["subgroup"].get<Subgroup>();
      std::vector<Cyc> vals;
      for (const Json& vj : cj["values"]) vals.push_back(cyc_from_json(vj));
      doc.subchars.emplace_back(cj["name"].get<std::string>(),
                                SubgroupWithCharacter(doc.fg, std::move(h), std::move(vals)));
    }
  }

  if (j.contains("parameters")) {
    for (const Json& pj : j["parameters"]) {
      detail::expect_keys(pj, {"name", "kind", "summands"}, "parameter");
      require(pj.contains("name") && pj.contains("kind") && pj.contains("summands"),
              "SchemaError", "parameter needs name, kind and summands");
      ParameterSpec spec;
      spec.name = pj["name"].get<std::string>();
      spec.kind = pj["kind"].get<std::string>();
      require(spec.kind == "monomial" || spec.kind == "wd", "SchemaError",
              "parameter kind must be monomial or wd");
      for (const Json& sj : pj["summands"]) {
        detail::expect_keys(sj,
                            {"type", "subchar", "character", "b", "conductor", "dim"},
                            "summand");
        ParameterSummandSpec s;
        require(sj.contains("type"), "SchemaError", "summand needs a type");
        s.type = sj["type"].get<std::string>();
        if (sj.contains("subchar")) s.ref = sj["subchar"].get<std::string>();
        if (sj.contains("character")) s.ref = sj["character"].get<std::string>();
        if (sj.contains("b")) s.b = sj["b"].get<long>();
        if (sj.contains("conductor")) s.conductor = sj["conductor"].get<long>();
        if (sj.contains("dim")) s.dim = sj["dim"].get<long>();
        spec.summands.push_back(std::move(s));
      }
      doc.parameters.push_back(std::move(spec));
      // resolve references and validate eagerly
      const ParameterSpec& back = doc.parameters.back();
      if (back.kind == "monomial")
        validate_parameter(doc.monomial_parameter(back));
      else
        doc.wd_parameter(back);
    }
  }

  if (j.contains("segments")) {
    for (const Json& sj : j["segments"]) {
      detail::expect_keys(sj, {"n", "d", "m", "a", "b", "s_sigma", "depth", "unramified"},
                          "segment");
      for (const char* k : {"n", "d", "m", "a", "b", "s_sigma", "depth", "unramified"})
        require(sj.contains(k), "SchemaError",
                std::string("segment needs field ") + k);
      EssL2Datum e;
      e.form = InnerForm{sj["n"].get<long>(), sj["d"].get<long>(), sj["m"].get<long>()};
      e.sigma.a = sj["a"].get<long>();
      e.b = sj["b"].get<long>();
      e.sigma.s_sigma = sj["s_sigma"].get<long>();
      e.sigma.depth = rat_from_json(sj["depth"]);
      e.sigma.unramified = sj["unramified"].get<bool>();
      validate_essl2(e);
      doc.segments.push_back(e);
    }
  }

  if (j.contains("expect")) {
    require(j["expect"].is_object(), "SchemaError", "expect must be an object");
    for (auto& [key, entry] : j["expect"].items()) {
      (void)key;
      require(entry.is_object() && entry.contains("value"), "SchemaError",
              "each expectation needs a value");
      detail::expect_keys(entry, {"value", "provenance"}, "expectation");
    }
    doc.expect = j["expect"];
  }
  return doc;
}

inline FixtureDocument load_fixture(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "SchemaError", "cannot open fixture file " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail("SchemaError", "invalid JSON in " + path + ": " + e.what());
  }
  return fixture_from_json(j);
}

inline void save_fixture(const FixtureDocument& doc, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), "SchemaError", "cannot write fixture file " + path);
  out << fixture_to_json(doc).dump(2) << "\n";
}

}  // namespace ramdepth

#endif
