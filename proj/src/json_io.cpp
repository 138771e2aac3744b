#include "minv/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minv {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::domain_error(std::string("missing field: ") + key);
  return j.at(key);
}

std::vector<std::vector<Rat>> forms_from_json(const Json& j) {
  std::vector<std::vector<Rat>> forms;
  for (const auto& row : require(j, "forms")) {
    std::vector<Rat> f;
    for (const auto& x : row) f.push_back(parse_rational(x.get<std::string>()));
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::domain_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("JSON parse error: ") + e.what());
  }
}

Multigraph multigraph_from_json(const Json& j) {
  Multigraph g;
  g.vertices = require(j, "vertices").get<int>();
  int idx = 0;
  for (const auto& e : require(j, "edges")) {
    if (!e.is_array() || e.size() < 2) throw std::domain_error("edge needs two endpoints");
    Multigraph::Edge edge;
    edge.u = e[0].get<int>();
    edge.w = e[1].get<int>();
    edge.label = e.size() > 2 ? e[2].get<std::string>() : "e" + std::to_string(idx);
    ++idx;
    g.edges.push_back(std::move(edge));
  }
  g.validate();
  return g;
}

Multigraph multigraph_from_text(const std::string& text) {
  Multigraph g;
  g.vertices = 1;
  std::istringstream in(text);
  std::string line;
  int idx = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int u, w;
    if (!(ls >> u >> w)) continue;
    if (u < 0 || w < 0) throw std::domain_error("negative vertex id");
    g.vertices = std::max({g.vertices, u + 1, w + 1});
    g.edges.push_back({u, w, "e" + std::to_string(idx++)});
  }
  g.validate();
  return g;
}

Multigraph multigraph_from_file(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = parse_json_text(text);
    if (j.contains("type") && j.at("type") != "graph")
      throw std::domain_error("expected a graph input");
    return multigraph_from_json(j);
  }
  return multigraph_from_text(text);
}

ParsedMatroid matroid_from_json(const Json& j) {
  std::string type = require(j, "type").get<std::string>();
  if (type == "uniform") {
    int rank = require(j, "rank").get<int>();
    int size = require(j, "size").get<int>();
    return {Matroid::uniform(rank, size), type};
  }
  if (type == "graph") {
    return {Matroid::graphic(multigraph_from_json(j)), type};
  }
  if (type == "matrix") {
    std::vector<std::vector<Rat>> columns;
    for (const auto& col : require(j, "columns")) {
      std::vector<Rat> c;
      for (const auto& x : col) c.push_back(parse_rational(x.get<std::string>()));
      columns.push_back(std::move(c));
    }
    std::vector<std::string> labels;
    if (j.contains("labels"))
      for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
    else
      for (size_t i = 0; i < columns.size(); ++i) labels.push_back("c" + std::to_string(i));
    return {Matroid::linear_rational(std::move(columns), std::move(labels)), type};
  }
  if (type == "circuits") {
    std::vector<std::string> labels;
    for (const auto& l : require(j, "labels")) labels.push_back(l.get<std::string>());
    GroundSet gs(labels);
    std::vector<Mask> circuits;
    for (const auto& c : require(j, "circuits")) {
      Mask m = 0;
      for (const auto& x : c) m |= Mask(1) << gs.index_of(x.get<std::string>());
      circuits.push_back(m);
    }
    return {Matroid::explicit_circuits(std::move(labels), std::move(circuits)), type};
  }
  throw std::domain_error("unknown matroid type: " + type);
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return Json{{"coeffs", coeffs}};
}

IntPolynomial polynomial_from_json(const Json& j) {
  IntSeq coeffs;
  for (const auto& c : require(j, "coeffs")) coeffs.push_back(parse_int(c.get<std::string>()));
  return IntPolynomial(std::move(coeffs));
}

Json intseq_to_json(const IntSeq& s) {
  Json out = Json::array();
  for (const Int& x : s) out.push_back(to_decimal(x));
  return out;
}

AffineArrangement affine_from_json(const Json& j) {
  AffineArrangement a;
  a.forms = forms_from_json(j);
  a.validate();
  return a;
}

CentralArrangement central_from_json(const Json& j) {
  CentralArrangement a;
  a.forms = forms_from_json(j);
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) a.labels.push_back(l.get<std::string>());
  a.validate();
  return a;
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["log_concave"] = v.log_concave;
  out["strictly_log_concave"] = v.strictly_log_concave;
  out["internal_zeros"] = v.internal_zeros;
  out["nonnegative"] = v.nonnegative;
  out["sign_alternating"] = v.sign_alternating;
  if (v.first_violation)
    out["first_violation"] = *v.first_violation;
  else
    out["first_violation"] = nullptr;
  return out;
}

Json report_to_json(const TheoremReport& r) {
  Json out;
  out["name"] = r.name;
  out["label"] = r.label;
  out["representable_over_Q"] = r.representable;
  out["elements"] = r.n;
  out["rank"] = r.rank;
  out["has_loops"] = r.has_loops;
  if (!r.note.empty()) out["note"] = r.note;
  out["f_in"] = intseq_to_json(r.f_in);
  out["h_in"] = intseq_to_json(r.h_in);
  out["orderings"] = r.f_bc.size();
  out["f_bc"] = intseq_to_json(r.f_bc.front());
  out["h_bc"] = intseq_to_json(r.h_bc.front());
  out["bc_ordering_invariant"] = r.bc_ordering_invariant;
  out["whitney_abs"] = intseq_to_json(r.whitney_abs);
  out["verdict_h_in"] = verdict_to_json(r.v_h_in);
  out["verdict_h_bc"] = verdict_to_json(r.v_h_bc);
  out["verdict_f_in"] = verdict_to_json(r.v_f_in);
  out["verdict_f_bc"] = verdict_to_json(r.v_f_bc);
  out["pass"] = r.pass;
  return out;
}

}  // namespace minv
