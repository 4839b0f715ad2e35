#include "kronface/serialize.hpp"

#include "kronface/errors.hpp"

namespace kronface {

void to_json(Json& j, const Partition& p) { j = p.parts(); }
void from_json(const Json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(Json& j, const Permutation& p) { j = p.one_line(); }
void from_json(const Json& j, Permutation& p) { p = Permutation(j.get<std::vector<int>>()); }

void to_json(Json& j, const GridIndex& c) { j = Json::array({c.row, c.col}); }
void from_json(const Json& j, GridIndex& c) { c = {j.at(0).get<int>(), j.at(1).get<int>()}; }

void to_json(Json& j, const WeylPair& v) { j = Json::array({v.first, v.second}); }
void from_json(const Json& j, WeylPair& v) { v = {j.at(0).get<Permutation>(), j.at(1).get<Permutation>()}; }

void to_json(Json& j, const OrderMatrix& m) {
  j = Json{{"n1", m.n1()},
           {"n2", m.n2()},
           {"ranks", m.ranks()},
           {"witness", {{"x", m.witness().x}, {"y", m.witness().y}}},
           {"display", m.to_string()}};
}

void from_json(const Json& j, OrderMatrix& m) {
  AdditiveWitness w;
  if (j.contains("witness")) {
    w.x = j.at("witness").at("x").get<std::vector<int>>();
    w.y = j.at("witness").at("y").get<std::vector<int>>();
  }
  m = OrderMatrix(j.at("n1").get<int>(), j.at("n2").get<int>(), j.at("ranks").get<std::vector<int>>(), w);
}

void to_json(Json& j, const ConfigAnchor& a) {
  j = Json{{"kind", to_string(a.kind)}, {"k", a.k}, {"k2", a.k2}, {"cells", a.cells}};
}

void from_json(const Json& j, ConfigAnchor& a) {
  a.kind = parse_config_kind(j.at("kind").get<std::string>());
  a.k = j.at("k").get<int>();
  a.k2 = j.at("k2").get<int>();
  a.cells = j.at("cells").get<std::vector<GridIndex>>();
}

void to_json(Json& j, const PairDescriptor& p) {
  j = Json{{"matrix_id", p.matrix_id},
           {"matrix", p.source},
           {"kind", to_string(p.anchor.kind)},
           {"anchor", p.anchor},
           {"v", p.v},
           {"v_hat", p.v_hat},
           {"u_hat", p.u_hat},
           {"u_hat_cycles", to_cycle_string(p.u_hat)},
           {"status", to_string(p.status)}};
}

void from_json(const Json& j, PairDescriptor& p) {
  p.matrix_id = j.at("matrix_id").get<int>();
  p.source = j.at("matrix").get<OrderMatrix>();
  p.anchor = j.at("anchor").get<ConfigAnchor>();
  p.v = j.at("v").get<WeylPair>();
  p.v_hat = j.at("v_hat").get<Permutation>();
  p.u_hat = j.at("u_hat").get<Permutation>();
  p.status = parse_pair_status(j.at("status").get<std::string>());
}

void to_json(Json& j, const FaceEquation& e) {
  Json rhs = Json::array();
  for (int g : e.gammas) rhs.push_back("gamma_" + std::to_string(g));
  j = Json{{"lhs", (e.is_alpha ? "alpha_" : "beta_") + std::to_string(e.index)}, {"rhs", rhs}};
}

void from_json(const Json& j, FaceEquation& e) {
  std::string text = j.at("lhs").get<std::string>() + " =";
  bool first = true;
  for (const auto& g : j.at("rhs")) {
    text += (first ? " " : " + ") + g.get<std::string>();
    first = false;
  }
  e = parse_face_equation(text);
}

void to_json(Json& j, const LatticeTriple& t) {
  j = Json{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}};
}

void from_json(const Json& j, LatticeTriple& t) {
  t.alpha = j.at("alpha").get<Partition>();
  t.beta = j.at("beta").get<Partition>();
  t.gamma = j.at("gamma").get<Partition>();
}

void to_json(Json& j, const PairRef& r) {
  j = Json{{"matrix_id", r.matrix_id}, {"matrix", r.matrix}, {"anchor", r.anchor}};
}

void from_json(const Json& j, PairRef& r) {
  r.matrix_id = j.at("matrix_id").get<int>();
  r.matrix = j.at("matrix").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
}

void to_json(Json& j, const StabilityReport& r) {
  j = Json{{"enumerated", r.enumerated}, {"verified", r.verified},         {"undetermined", r.undetermined},
           {"stable", r.stable},         {"almost_stable", r.almost_stable}, {"refuted", r.refuted},
           {"non_stable", r.non_stable}, {"refuting", r.refuting}};
}

void from_json(const Json& j, StabilityReport& r) {
  r.enumerated = j.at("enumerated").get<int>();
  r.verified = j.at("verified").get<int>();
  r.undetermined = j.at("undetermined").get<int>();
  r.stable = j.at("stable").get<int>();
  r.almost_stable = j.at("almost_stable").get<int>();
  r.refuted = j.at("refuted").get<int>();
  r.non_stable = j.at("non_stable").get<std::vector<LatticeTriple>>();
  r.refuting = j.at("refuting").get<std::vector<LatticeTriple>>();
}

Json rational_matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    out.push_back(std::move(r));
  }
  return out;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  RationalMatrix m;
  for (const auto& row : j) {
    RationalVector r;
    for (const auto& x : row) r.emplace_back(x.get<std::string>());
    m.push_back(std::move(r));
  }
  return m;
}

void to_json(Json& j, const FaceDescriptor& f) {
  Json rendered = Json::array();
  for (const auto& row : f.span_equations) rendered.push_back(render_row(row, f.n1, f.n2));
  j = Json{{"n1", f.n1},
           {"n2", f.n2},
           {"u_hat", f.u_hat},
           {"u_hat_cycles", to_cycle_string(f.u_hat)},
           {"status", to_string(f.status)},
           {"class", to_string(f.classify())},
           {"equations", f.equations},
           {"mu_zero_system", rational_matrix_to_json(f.mu_zero_system)},
           {"span_equations", rational_matrix_to_json(f.span_equations)},
           {"span_rendered", rendered},
           {"dimension_estimate", f.dimension_estimate},
           {"certificate", f.certificate ? Json(*f.certificate) : Json(nullptr)},
           {"stability", f.stability},
           {"provenance", f.provenance},
           {"collision", f.collision}};
}

void from_json(const Json& j, FaceDescriptor& f) {
  f.n1 = j.at("n1").get<int>();
  f.n2 = j.at("n2").get<int>();
  f.u_hat = j.at("u_hat").get<Permutation>();
  f.status = parse_pair_status(j.at("status").get<std::string>());
  f.equations = j.at("equations").get<std::vector<FaceEquation>>();
  f.mu_zero_system = rational_matrix_from_json(j.at("mu_zero_system"));
  f.span_equations = rational_matrix_from_json(j.at("span_equations"));
  f.dimension_estimate = j.at("dimension_estimate").get<int>();
  f.certificate.reset();
  if (!j.at("certificate").is_null()) f.certificate = j.at("certificate").get<LatticeTriple>();
  f.stability = j.at("stability").get<StabilityReport>();
  f.provenance = j.at("provenance").get<std::vector<PairRef>>();
  f.collision = j.at("collision").get<bool>();
}

Json result_to_json(const PipelineResult& r) {
  const auto& o = r.options;
  return Json{{"parameters",
               {{"n1", o.n1}, {"n2", o.n2}, {"n_max", o.n_max}, {"depth", o.depth}, {"cert_n_max", o.cert_n_max}}},
              {"order_matrices", r.matrices},
              {"pairs", r.pairs},
              {"faces", r.faces}};
}

}  // namespace kronface
