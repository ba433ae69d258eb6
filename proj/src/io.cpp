#include "dlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dlat::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw PreconditionError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int index_in(const Json& v, int n, const char* what) {
  if (!v.is_number_integer()) bad(std::string(what) + " must be an integer index");
  long long i = v.get<long long>();
  if (i < 0 || i >= n) bad(std::string(what) + " index " + std::to_string(i) + " out of range");
  return static_cast<int>(i);
}

std::vector<std::pair<int, int>> pairs_from(const Json& j, int n) {
  if (!j.is_array()) bad("'leq' must be an array of [i, j] pairs");
  std::vector<std::pair<int, int>> out;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) bad("'leq' entries must be [i, j] pairs");
    out.emplace_back(index_in(p[0], n, "leq"), index_in(p[1], n, "leq"));
  }
  return out;
}

std::vector<std::string> names_from(const Json& j) {
  if (!j.is_array()) bad("'elements' must be an array");
  std::vector<std::string> names;
  for (const Json& e : j) names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  return names;
}

Rational rational_from(const Json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  bad("quaternion components must be rational strings or integers");
}

std::string rule_name(Rule r) { return r == Rule::Up ? "up" : "down"; }

Json arc_json(const Arc& a) { return Json::array({a.top, a.bottom}); }

}  // namespace

Json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) bad("cannot open '" + file.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("'" + file.string() + "': " + e.what());
  }
}

FiniteLattice lattice_from_json(const Json& j) {
  std::vector<std::string> names = names_from(field(j, "elements"));
  const int n = static_cast<int>(names.size());
  OrderRelation leq(n);
  for (auto [a, b] : pairs_from(field(j, "leq"), n)) leq.set(a, b);
  leq.close_reflexive_transitive();
  return FiniteLattice::build(leq, std::move(names));
}

Json lattice_to_json(const FiniteLattice& lat) {
  Json leq = Json::array();
  for (const Arc& a : lat.covers()) leq.push_back(Json::array({a.bottom, a.top}));
  return {{"elements", lat.names()}, {"leq", leq}};
}

std::vector<Arc> arcs_from_json(const Json& j) {
  if (!j.is_array()) bad("'arcs' must be an array of [top, bottom] pairs");
  std::vector<Arc> arcs;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      bad("'arcs' entries must be [top, bottom] index pairs");
    }
    arcs.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return arcs;
}

ArcFile arc_file_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& lat = field(j, "lattice");
  if (!lat.is_string()) bad("'lattice' must be a file path");
  std::filesystem::path p = lat.get<std::string>();
  if (p.is_relative()) p = base_dir / p;
  return {p, arcs_from_json(field(j, "arcs"))};
}

Json arcs_to_json(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back(arc_json(a));
  return out;
}

PointedPoset poset_from_json(const Json& j) {
  std::vector<std::string> names = names_from(field(j, "elements"));
  const int n = static_cast<int>(names.size());
  if (n < 2 || n > 64) bad("pointed poset needs between 2 and 64 elements");
  int b = index_in(field(j, "bottom"), n, "bottom");
  int t = index_in(field(j, "top"), n, "top");
  auto pairs = pairs_from(field(j, "leq"), n);
  return PointedPoset(QuasiOrder::generated(n, b, t, pairs), std::move(names));
}

Json quasi_order_to_json(const QuasiOrder& q) {
  Json leq = Json::array();
  for (int i = 0; i < q.size(); ++i) {
    for (int k = 0; k < q.size(); ++k) {
      if (i != k && q.leq(i, k)) leq.push_back(Json::array({i, k}));
    }
  }
  return {{"size", q.size()}, {"bottom", q.bottom()}, {"top", q.top()}, {"leq", leq}};
}

Json poset_to_json(const PointedPoset& p) {
  Json j = quasi_order_to_json(p.order());
  j.erase("size");
  j["elements"] = p.names();
  return j;
}

std::vector<Quaternion> quaternions_from_json(const Json& j) {
  const Json& e = field(j, "elements");
  if (!e.is_array()) bad("'elements' must be an array of quaternions");
  std::vector<Quaternion> out;
  for (const Json& q : e) {
    if (!q.is_array() || q.size() != 4) bad("a quaternion is written [a, b, c, d]");
    out.emplace_back(rational_from(q[0]), rational_from(q[1]), rational_from(q[2]), rational_from(q[3]));
  }
  return out;
}

Json quaternion_to_json(const Quaternion& q) { return q.to_strings(); }

Json poly_to_json(const NCPoly& p) {
  Json out = Json::array();
  for (const Quaternion& c : p.coeffs()) out.push_back(quaternion_to_json(c));
  return out;
}

Json report_to_json(const PseudoRootLattice& pl, const GenerationReport& r) {
  auto arcs_json = [](const std::vector<Arc>& arcs) { return arcs_to_json(arcs); };
  Json steps = Json::array();
  for (const DerivationStep& s : r.steps) {
    Json step = {{"diamond", {s.diamond.top, s.diamond.left, s.diamond.right, s.diamond.bottom}},
                 {"rule", rule_name(s.rule)}};
    for (int k = 0; k < 2; ++k) {
      step["operands"].push_back(
          {{"arc", arc_json(s.operands[k])}, {"psi", quaternion_to_json(s.operand_values[k])}});
      step["produced"].push_back({{"arc", arc_json(s.produced[k])},
                                  {"psi", quaternion_to_json(s.values[k])},
                                  {"fresh", s.fresh[k]}});
    }
    steps.push_back(std::move(step));
  }
  Json degenerate = Json::array();
  for (const Diamond& d : r.degenerate) degenerate.push_back({d.top, d.left, d.right, d.bottom});
  return {{"elements", pl.lattice().names()},
          {"given", arcs_json(r.given)},
          {"closure", arcs_json(r.closure)},
          {"derived", arcs_json(r.derived)},
          {"underived", arcs_json(r.underived)},
          {"mismatches", arcs_json(r.mismatches)},
          {"degenerate", degenerate},
          {"steps", steps},
          {"exact", r.exact()},
          {"complete", r.complete()}};
}

std::string report_text(const PseudoRootLattice& pl, const GenerationReport& r) {
  const FiniteLattice& lat = pl.lattice();
  auto arc = [&](const Arc& a) { return "[" + lat.name(a.top) + "] -> [" + lat.name(a.bottom) + "]"; };
  std::ostringstream os;
  os << "given " << r.given.size() << " arcs, closure " << r.closure.size() << " arcs, derived "
     << r.derived.size() << "\n";
  for (const DerivationStep& s : r.steps) {
    os << "  " << rule_name(s.rule) << ": " << arc(s.operands[0]) << ", " << arc(s.operands[1]) << "\n";
    for (int k = 0; k < 2; ++k) {
      os << "    " << arc(s.produced[k]) << "  psi = " << s.values[k].str() << (s.fresh[k] ? "" : "  (known)")
         << "\n";
    }
  }
  for (const Diamond& d : r.degenerate) {
    os << "  degenerate diamond at [" << lat.name(d.top) << "] / [" << lat.name(d.bottom) << "]\n";
  }
  for (const Arc& a : r.mismatches) os << "  MISMATCH " << arc(a) << "\n";
  for (const Arc& a : r.underived) os << "  not derived " << arc(a) << "\n";
  os << (r.ok() ? "exact and complete" : "FAILED") << "\n";
  return os.str();
}

}  // namespace dlat::io
