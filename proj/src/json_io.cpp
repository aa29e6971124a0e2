#include "qsc/json_io.hpp"

#include <stdexcept>

namespace qsc::json {

Json to_json(const Composition& alpha) { return Json(alpha.as_vector()); }

Json to_json(const Cell& c) { return Json::array({c.col, c.row}); }

Json to_json(const Entry& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

Json to_json(const Filling& f) {
  Json j;
  j["shape"] = to_json(f.shape());
  j["rows"] = f.rows();
  return j;
}

Json to_json(const BasisExpansion& e) {
  Json j;
  j["basis"] = to_string(e.basis);
  j["degree"] = e.degree;
  Json coeffs = Json::object();
  for (const auto& [alpha, c] : e.coeffs) coeffs[alpha.to_string()] = c;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json to_json(const MExpr& f) { return to_json(BasisExpansion{Basis::Monomial, f.degree(), f.coeffs()}); }

Json to_json(const TraceStep& s) {
  Json j;
  j["action"] = to_string(s.action);
  j["cell"] = to_json(s.cell);
  j["carried"] = to_json(s.carried);
  j["occupant"] = to_json(s.occupant);
  return j;
}

namespace {

Json cells(const std::vector<Cell>& cs) {
  Json out = Json::array();
  for (const Cell& c : cs) out.push_back(to_json(c));
  return out;
}

Json steps(const std::vector<TraceStep>& ts) {
  Json out = Json::array();
  for (const auto& s : ts) out.push_back(to_json(s));
  return out;
}

}  // namespace

Json to_json(const InsertionResult& r, int k) {
  Json j;
  j["kind"] = "insert";
  j["value"] = k;
  j["trace"] = steps(r.trace);
  j["bumping_path"] = cells(r.bumping_path);
  j["new_cell"] = to_json(r.new_cell);
  j["created_row"] = r.created_row;
  j["tableau"] = to_json(r.tableau);
  return j;
}

Json to_json(const RaptureResult& r) {
  Json j;
  j["kind"] = "rapture";
  j["trace"] = steps(r.trace);
  j["escape_route"] = cells(r.escape_route);
  j["output"] = to_json(r.output);
  j["tableau"] = to_json(r.tableau);
  return j;
}

Json to_json(const RecordingPair& pq) {
  Json j;
  j["P"] = to_json(pq.p);
  j["Q"] = to_json(pq.q);
  return j;
}

Json to_json(const RWTree& tree) {
  // Nested form, children in tree order.
  auto node = [&](auto&& self, std::size_t i) -> Json {
    const RWNode& n = tree.nodes[i];
    Json j;
    j["depth"] = n.depth;
    j["rows"] = n.rows;
    j["leaf"] = n.leaf;
    if (n.leaf) {
      j[tree.direction == RWDirection::Forward ? "shape" : "multiplicities"] =
          to_json(leaf_label(tree, n));
    }
    Json kids = Json::array();
    for (std::size_t c : n.children) kids.push_back(self(self, c));
    j["children"] = std::move(kids);
    return j;
  };
  Json j;
  j["direction"] = to_string(tree.direction);
  j["alpha"] = to_json(tree.alpha);
  j["node_count"] = tree.nodes.size();
  j["leaf_count"] = tree.leaves().size();
  j["root"] = tree.nodes.empty() ? Json() : node(node, 0);
  return j;
}

Json to_json(const ConjectureReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["coefficient_conjecture"] = rep.coefficient_conjecture_holds() ? "no violations" : "violations";
  j["alternating_conjecture"] = rep.alternating_conjecture_holds() ? "no violations" : "violations";
  j["distinct_part_partitions_checked"] = rep.distinct_part_partitions_checked;

  Json range = Json::array();
  for (const auto& w : rep.range_violations) {
    range.push_back({{"alpha", w.alpha.to_string()}, {"beta", w.beta.to_string()}, {"value", w.value}});
  }
  j["range_violations"] = std::move(range);
  Json sums = Json::array();
  for (const auto& w : rep.sum_rule_violations) {
    sums.push_back({{"alpha", w.alpha.to_string()}, {"expected", w.expected}, {"actual", w.actual}});
  }
  j["sum_rule_violations"] = std::move(sums);
  Json alt = Json::array();
  for (const auto& w : rep.alternating_violations) {
    alt.push_back({{"lambda", w.lambda.to_string()},
                   {"beta", w.beta.to_string()},
                   {"expected", w.expected},
                   {"actual", w.actual}});
  }
  j["alternating_violations"] = std::move(alt);

  Json exps = Json::object();
  for (const auto& [alpha, e] : rep.expansions) exps[alpha.to_string()] = to_json(e);
  j["expansions"] = std::move(exps);
  return j;
}

// ---- readers ----------------------------------------------------------------

Composition composition_from_json(const Json& j) {
  if (j.is_string()) return Composition::parse(j.get<std::string>());
  if (!j.is_array()) throw std::invalid_argument("composition must be an array or a string");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("composition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Composition(std::move(parts));
}

Cell cell_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument("cell must be [col, row]");
  }
  return Cell{j[0].get<int>(), j[1].get<int>()};
}

Filling filling_from_json(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("rows")) throw std::invalid_argument("filling object needs a \"rows\" field");
    rows = &j.at("rows");
  }
  if (!rows->is_array()) throw std::invalid_argument("filling rows must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& row : *rows) {
    if (!row.is_array()) throw std::invalid_argument("filling rows must be an array of arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::invalid_argument("filling entries must be integers");
      r.push_back(v.get<int>());
    }
    out.push_back(std::move(r));
  }
  Filling f(std::move(out));
  if (j.is_object() && j.contains("shape") && composition_from_json(j.at("shape")) != f.shape()) {
    throw std::invalid_argument("filling \"shape\" does not match its rows");
  }
  return f;
}

BasisExpansion expansion_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("coeffs")) {
    throw std::invalid_argument("expansion must be an object with \"basis\" and \"coeffs\"");
  }
  BasisExpansion e;
  e.basis = parse_basis(j.at("basis").get<std::string>());
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_object()) throw std::invalid_argument("\"coeffs\" must be an object");
  if (j.contains("degree")) {
    e.degree = j.at("degree").get<int>();
  } else if (!coeffs.empty()) {
    e.degree = Composition::parse(coeffs.begin().key()).size();
  }
  for (const auto& [key, value] : coeffs.items()) {
    if (!value.is_number_integer()) throw std::invalid_argument("coefficients must be integers");
    e.add(Composition::parse(key), value.get<Coeff>());
  }
  return e;
}

}  // namespace qsc::json
