#include "cgs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cgs/error.hpp"

namespace cgs::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << content;
    if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error(ErrorCode::InvalidArgument, "cannot rename " + tmp);
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<long>(v.get_si()));
  return Json(to_decimal(v));
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<unsigned long long>()));
  if (j.is_string()) return from_decimal(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

namespace {

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

Json element_json(const AlgebraicInteger& x) {
  Json arr = Json::array();
  for (const auto& c : x.coeffs) arr.push_back(integer_json(c));
  return arr;
}

AlgebraicInteger element_from_json(const Json& j, const NumberField& field) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be a coefficient array");
  ZPoly a;
  for (const auto& c : j) a.push_back(integer_from_json(c));
  normalize(a);
  return field.from_poly(a);
}

}  // namespace

NumberField parse_field(const std::string& text) {
  const Json j = parse_json(text, "field file");
  if (!j.is_object() || !j.contains("T") || !j["T"].is_array())
    throw Error(ErrorCode::ParseError, "field file needs a \"T\" coefficient array");
  ZPoly T;
  for (const auto& c : j["T"]) T.push_back(integer_from_json(c));
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw Error(ErrorCode::ParseError, "\"label\" must be a string");
    label = j["label"].get<std::string>();
  }
  if (T.empty() || T.back() != 1)
    throw Error(ErrorCode::NotMonic, "the last coefficient of T must be 1");
  return NumberField::make(T, label);
}

Json field_json(const NumberField& field) {
  Json T = Json::array();
  for (const auto& c : field.T()) T.push_back(integer_json(c));
  return Json{{"T", T}, {"label", field.label()}};
}

std::string relation_db(const NumberField& field, const FactorBase& fb, const RelationSet& rels) {
  Json T = Json::array();
  for (const auto& c : field.T()) T.push_back(integer_json(c));
  Json header{{"fb_hash", rels.fb_hash},
              {"T", T},
              {"t", rels.region.t},
              {"S", rels.region.S},
              {"next_index", rels.next_index},
              {"B", fb.bound},
              {"inner", rels.region.inner},
              {"skip_reducible", rels.region.skip_reducible},
              {"skip_imprimitive", rels.region.skip_imprimitive},
              {"tested", rels.counters.tested},
              {"smooth", rels.counters.smooth},
              {"excluded_hits", rels.counters.excluded_hits},
              {"units", rels.counters.units},
              {"target", rels.target},
              {"absorbed", rels.absorbed}};
  Json dets = Json::array();
  for (const auto& d : rels.det_history) dets.push_back(to_decimal(d));
  header["det_history"] = dets;
  std::string out = header.dump() + "\n";
  for (const Relation& r : rels.relations) {
    Json line{{"x", element_json(r.x)}, {"norm", to_decimal(r.norm)}, {"e", r.e}};
    out += line.dump() + "\n";
  }
  return out;
}

RelationSet parse_relation_db(const std::string& text, const NumberField& field, const FactorBase& fb) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "relation database is empty");
  const Json h = parse_json(line, "relation database header");
  RelationSet rels;
  try {
    rels.fb_hash = h.at("fb_hash").get<std::string>();
    if (rels.fb_hash != fb.hash())
      throw Error(ErrorCode::HashMismatch, "relation database belongs to another factor base");
    ZPoly T;
    for (const auto& c : h.at("T")) T.push_back(integer_from_json(c));
    if (T != field.T()) throw Error(ErrorCode::HashMismatch, "relation database belongs to another field");
    rels.region.t = h.at("t").get<unsigned>();
    rels.region.S = h.at("S").get<long>();
    rels.next_index = h.at("next_index").get<std::uint64_t>();
    rels.region.inner = h.value("inner", 0L);
    rels.region.skip_reducible = h.value("skip_reducible", false);
    rels.region.skip_imprimitive = h.value("skip_imprimitive", true);
    rels.counters.tested = h.value("tested", std::uint64_t{0});
    rels.counters.smooth = h.value("smooth", std::uint64_t{0});
    rels.counters.excluded_hits = h.value("excluded_hits", std::uint64_t{0});
    rels.counters.units = h.value("units", std::uint64_t{0});
    rels.target = h.value("target", std::size_t{0});
    rels.absorbed = h.value("absorbed", std::size_t{0});
    if (h.contains("det_history"))
      for (const auto& d : h.at("det_history")) rels.det_history.push_back(from_decimal(d.get<std::string>()));
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Json r = parse_json(line, "relation line");
      Relation rel;
      rel.x = element_from_json(r.at("x"), field);
      rel.norm = from_decimal(r.at("norm").get<std::string>());
      rel.e = r.at("e").get<std::vector<int>>();
      if (rel.e.size() != fb.size()) throw Error(ErrorCode::ParseError, "exponent vector has the wrong length");
      rels.relations.push_back(std::move(rel));
    }
    if (rels.absorbed > rels.relations.size())
      throw Error(ErrorCode::ParseError, "relation database header counts more relations than it holds");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("relation database: ") + e.what());
  }
  return rels;
}

Json class_group_json(const ClassGroupResult& r) {
  Json inv = Json::array();
  for (const auto& d : r.invariants) inv.push_back(integer_json(d));
  Json hist = Json::array();
  for (const auto& d : r.det_history) hist.push_back(to_decimal(d));
  return Json{{"h", to_decimal(r.h)},
              {"invariants", inv},
              {"certified", r.certified},
              {"pruned_columns", r.pruned_columns},
              {"det_history", hist}};
}

IdealHNF parse_ideal(const std::string& text, const NumberField& field) {
  const Json j = parse_json(text, "ideal file");
  try {
    if (j.contains("generators")) {
      std::vector<AlgebraicInteger> gens;
      for (const auto& g : j.at("generators")) gens.push_back(element_from_json(g, field));
      return IdealHNF::from_generators(field, gens);
    }
    if (j.contains("hnf")) {
      Matrix rows;
      for (const auto& row : j.at("hnf")) {
        Vector v;
        for (const auto& c : row) v.push_back(integer_from_json(c));
        if (v.size() != static_cast<std::size_t>(field.degree()))
          throw Error(ErrorCode::ParseError, "HNF rows must have n entries");
        rows.push_back(std::move(v));
      }
      return IdealHNF::from_rows(field, rows);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("ideal file: ") + e.what());
  }
  throw Error(ErrorCode::ParseError, "ideal file needs \"generators\" or \"hnf\"");
}

Json witness_json(const GeneratorWitness& w) {
  Json factors = Json::array();
  for (const auto& [x, e] : w.numerator) factors.push_back(Json{{"x", element_json(x)}, {"exp", static_cast<long>(e)}});
  for (const auto& [x, e] : w.denominator)
    factors.push_back(Json{{"x", element_json(x)}, {"exp", -static_cast<long>(e)}});
  Json out{{"factors", factors}, {"verified", w.verified}};
  if (w.value) out["value"] = element_json(*w.value);
  return out;
}

Json descriptor_json(const ClassDescriptor& d) {
  return Json{{"n0", d.n0}, {"d0", d.d0}, {"alpha", d.alpha}, {"gamma", d.gamma}, {"omega", d.omega}};
}

}  // namespace cgs::io
