#include "oddsym/json_io.hpp"

namespace oddsym {

Json to_json(const Int& x) { return x.str(); }

Json to_json(const IntVec& v) {
  Json j = Json::array();
  for (const Int& x : v) j.push_back(x.str());
  return j;
}

Json to_json(const IntMat& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    j.push_back(std::move(row));
  }
  return j;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  return Int(j.get<std::string>());
}

IntVec int_vec_from_json(const Json& j) {
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

IntMat int_mat_from_json(const Json& j) {
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(int_vec_from_json(r));
  return IntMat::from_rows(rows);
}

Json to_json(const FiniteComplex& fc) {
  Json j;
  j["family"] = fc.family;
  j["n"] = fc.n;
  j["box"] = fc.box;
  if (!fc.relative_to.empty()) {
    Json sig = Json::array();
    for (const IntVec& u : fc.relative_to) sig.push_back(to_json(u));
    j["relative_to"] = std::move(sig);
  }
  Json verts = Json::array();
  for (const IntVec& u : fc.vertices) verts.push_back(to_json(u));
  j["vertices"] = std::move(verts);
  Json simps = Json::array();
  for (const auto& s : fc.simplices) simps.push_back(s);
  j["simplices"] = std::move(simps);
  return j;
}

FiniteComplex complex_from_json(const Json& j) {
  FiniteComplex fc;
  fc.family = j.at("family").get<std::string>();
  fc.n = j.at("n").get<std::size_t>();
  fc.box = j.value("box", 0);
  if (j.contains("relative_to"))
    for (const auto& u : j.at("relative_to")) fc.relative_to.push_back(int_vec_from_json(u));
  for (const auto& u : j.at("vertices")) fc.vertices.push_back(int_vec_from_json(u));
  for (const auto& s : j.at("simplices")) fc.simplices.push_back(s.get<std::vector<std::size_t>>());
  return fc;
}

Json to_json(const HomologyReport& report) {
  Json j;
  j["coefficients"] = to_string(report.coefficients);
  j["reduced"] = report.reduced;
  Json degrees = Json::array();
  for (const auto& h : report.degrees) {
    Json d;
    d["degree"] = h.degree;
    d["betti_q"] = h.betti_q;
    if (h.betti_f2) d["betti_f2"] = *h.betti_f2;
    if (report.coefficients == Coefficients::Z) {
      Json t = Json::array();
      for (const Int& x : h.torsion) t.push_back(x.str());
      d["torsion"] = std::move(t);
    }
    degrees.push_back(std::move(d));
  }
  j["degrees"] = std::move(degrees);
  j["euler_from_cells"] = report.euler_from_cells.str();
  j["euler_from_betti"] = report.euler_from_betti.str();
  j["connectivity"] = report.connectivity;
  return j;
}

namespace {

Json weight_json(const Weight& w) {
  Json j = Json::array();
  for (std::int64_t x : w) j.push_back(x);
  return j;
}

}  // namespace

Json to_json(const std::vector<KostantRow>& rows, const Partition& lambda, std::size_t n) {
  Json j;
  j["n"] = n;
  j["lambda"] = lambda.to_csv();
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["degree"] = row.degree;
    r["w"] = row.w.window;
    r["w_inv_rho"] = weight_json(row.w_inv_rho);
    r["levi"] = weight_json(row.levi);
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  return j;
}

Json to_json(const PartitionMultiset& ms) {
  Json arr = Json::array();
  for (const auto& [p, c] : ms) {
    Json e;
    e["partition"] = p.to_csv();
    e["multiplicity"] = c.str();
    arr.push_back(std::move(e));
  }
  return arr;
}

Json to_json(const Polynomial& poly) {
  Json j;
  j["degree"] = poly.degree();
  Json coeffs = Json::array();
  for (const Rat& c : poly.coeffs) {
    if (denominator(c) == 1)
      coeffs.push_back(numerator(c).str());
    else
      coeffs.push_back(numerator(c).str() + "/" + denominator(c).str());
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json to_json(const OrbitReport& report) {
  Json j;
  j["partial_basis_with_v"] = report.partial_basis_with_v;
  j["pairings"] = report.pairings;
  j["rho_condition"] = report.rho_condition;
  j["phi_condition"] = report.phi_condition;
  j["all"] = report.all();
  return j;
}

Json to_json(const NecessityReport& report) {
  Json j;
  j["kind"] = report.kind == OrbitKind::X ? "X" : "IX";
  j["n"] = report.n;
  j["tuple_size"] = report.tuple_size;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["mean_length"] = report.mean_length;
  j["pass"] = report.pass;
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    Json c;
    c["trial"] = ce.trial;
    c["word"] = ce.word.to_csv();
    Json imgs = Json::array();
    for (const IntVec& u : ce.images) imgs.push_back(to_json(u));
    c["images"] = std::move(imgs);
    c["conditions"] = to_json(ce.report);
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const ReachabilityResult& result) {
  Json j;
  Json tgt = Json::array();
  for (const IntVec& u : result.target) tgt.push_back(to_json(u));
  j["target"] = std::move(tgt);
  j["found"] = result.found;
  j["witness"] = result.found ? Json(result.witness.to_csv()) : Json(nullptr);
  j["depth_searched"] = result.depth_searched;
  j["states_visited"] = result.states_visited;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace oddsym
