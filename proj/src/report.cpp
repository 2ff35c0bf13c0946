#include "surfising/report.hpp"

#include <cmath>
#include <map>

namespace surfising {

using nlohmann::json;

json poly_to_json(const MultiPoly& p, const VariableNamer& namer) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (auto [v, e] : m.factors()) mono.push_back(json::array({namer(v), e}));
    terms.push_back(json::array({mono, c.real(), c.imag()}));
  }
  return terms;
}

json to_json(const ResultBlock& b) {
  json j;
  j["command"] = b.command;
  j["fixture"] = b.fixture;
  j["method"] = b.method;
  j["quantity"] = b.quantity;
  if (b.snapped) {
    j["snapped"] = poly_to_json(*b.snapped, b.namer);
    j["snapped_text"] = render(*b.snapped, RenderMode::integer, b.namer);
  }
  if (b.raw) {
    j["raw"] = poly_to_json(*b.raw, b.namer);
    j["raw_text"] = render(*b.raw, RenderMode::raw, b.namer);
  }
  if (b.scalar) j["scalar"] = *b.scalar;
  j["residual"] = b.residual;
  if (b.seconds) j["seconds"] = *b.seconds;
  j["diagnostics"] = b.diagnostics;
  return j;
}

namespace {

std::map<std::string, std::pair<double, double>> term_map(const json& terms) {
  std::map<std::string, std::pair<double, double>> out;
  for (const auto& t : terms) {
    std::string key;
    for (const auto& f : t.at(0)) {
      if (!key.empty()) key += "*";
      key += f.at(0).get<std::string>();
      int e = f.at(1).get<int>();
      if (e != 1) key += "^" + std::to_string(e);
    }
    if (key.empty()) key = "1";
    auto& slot = out[key];
    slot.first += t.at(1).get<double>();
    slot.second += t.at(2).get<double>();
  }
  return out;
}

}  // namespace

CompareReport compare(const json& a, const json& b, double tol) {
  CompareReport r;
  auto field = [](const json& j, const char* k) { return j.contains(k) ? j.at(k).get<std::string>() : std::string{}; };
  if (field(a, "fixture") != field(b, "fixture")) {
    r.comparable = false;
    r.reason = "fixtures differ: " + field(a, "fixture") + " vs " + field(b, "fixture");
    return r;
  }
  if (field(a, "quantity") != field(b, "quantity")) {
    r.comparable = false;
    r.reason = "quantities differ: " + field(a, "quantity") + " vs " + field(b, "quantity");
    return r;
  }
  if (a.contains("snapped") && b.contains("snapped")) {
    auto ta = term_map(a.at("snapped"));
    auto tb = term_map(b.at("snapped"));
    for (const auto& [k, _] : tb) ta.try_emplace(k, 0.0, 0.0);
    for (const auto& [k, va] : ta) {
      auto it = tb.find(k);
      std::pair<double, double> vb = it == tb.end() ? std::pair{0.0, 0.0} : it->second;
      double d = std::hypot(va.first - vb.first, va.second - vb.second);
      r.max_deviation = std::max(r.max_deviation, d);
      if (d > tol) r.offending.push_back(k);
    }
    return r;
  }
  if (a.contains("scalar") && b.contains("scalar")) {
    double x = a.at("scalar").get<double>(), y = b.at("scalar").get<double>();
    r.max_deviation = std::abs(x - y);
    if (r.max_deviation > tol * std::max(1.0, std::abs(x))) r.offending.push_back("value");
    return r;
  }
  r.comparable = false;
  r.reason = "blocks carry different result kinds";
  return r;
}

}  // namespace surfising
