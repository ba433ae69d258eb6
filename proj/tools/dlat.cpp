#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dlat/birkhoff.hpp"
#include "dlat/diamond.hpp"
#include "dlat/io.hpp"
#include "dlat/lattice.hpp"
#include "dlat/pseudoroots.hpp"
#include "dlat/suites.hpp"

namespace fs = std::filesystem;
using dlat::io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Options {
  bool json = false;
  std::uint64_t seed = dlat::kDefaultSeed;
  int trials = 0;
  std::string file, method, lattice, arcs, set, family, suite, out;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string arc_name(const dlat::FiniteLattice& lat, const dlat::Arc& a) {
  return lat.name(a.top) + " -> " + lat.name(a.bottom);
}

int lattice_check(const Options& o) {
  dlat::FiniteLattice lat = dlat::io::lattice_from_json(dlat::io::read_json(o.file));
  const bool modular = dlat::is_modular(lat);
  const bool distributive = dlat::is_distributive(lat);
  Json j = {{"valid", true},
            {"elements", lat.size()},
            {"covers", lat.covers().size()},
            {"diamonds", lat.diamonds().size()},
            {"height", lat.height()},
            {"ranked", dlat::is_ranked(lat)},
            {"modular", modular},
            {"distributive", distributive}};
  std::ostringstream os;
  os << "lattice: " << lat.size() << " elements, " << lat.covers().size() << " covers, height " << lat.height()
     << "\nranked: " << (dlat::is_ranked(lat) ? "yes" : "no") << "\nmodular: " << (modular ? "yes" : "no")
     << "\ndistributive: " << (distributive ? "yes" : "no") << "\n";
  emit(o, j, os.str());
  return kOk;
}

std::vector<dlat::Arc> read_arcs(const Json& j) {
  if (j.is_array()) return dlat::io::arcs_from_json(j);
  if (!j.is_object() || !j.contains("arcs")) throw dlat::PreconditionError("arc file has no 'arcs' field");
  return dlat::io::arcs_from_json(j.at("arcs"));
}

int closure(const Options& o) {
  Json arc_json = dlat::io::read_json(o.arcs);
  fs::path lattice_path = o.lattice;
  if (lattice_path.empty()) {
    lattice_path = dlat::io::arc_file_from_json(arc_json, fs::path(o.arcs).parent_path()).lattice;
  }
  dlat::FiniteLattice lat = dlat::io::lattice_from_json(dlat::io::read_json(lattice_path));
  std::vector<dlat::Arc> given = read_arcs(arc_json);
  dlat::ArcSet b = dlat::ArcSet::from_arcs(lat, given);

  Json j = {{"method", o.method}};
  std::ostringstream extra;
  std::optional<dlat::ArcSet> result;
  if (o.method == "naive") {
    result = dlat::closure_naive(b);
  } else if (o.method == "mldc") {
    dlat::MldcResult r = dlat::closure_mldc(b);
    result = r.arcs;
    j["packing"] = r.packing.blocks;
    for (const auto& block : r.packing.blocks) {
      extra << "block:";
      for (dlat::Element x : block) extra << " " << lat.name(x);
      extra << "\n";
    }
  } else {
    dlat::BirkhoffRepresentation rep = dlat::birkhoff_representation(lat);
    dlat::DldcResult r = dlat::closure_dldc(lat, rep, b);
    result = r.arcs;
    j["poset"] = dlat::io::poset_to_json(rep.model.poset);
    j["family"] = Json::array();
    for (const dlat::QuasiOrder& q : r.family) j["family"].push_back(dlat::io::quasi_order_to_json(q));
    extra << "quasi-orders in family: " << r.family.size() << "\n";
  }
  const bool all = *result == dlat::ArcSet::all(lat);
  j["arcs"] = dlat::io::arcs_to_json(result->arcs());
  j["generates_all"] = all;

  std::ostringstream os;
  os << "closure (" << o.method << "): " << result->size() << " of " << lat.covers().size() << " arcs\n";
  for (const dlat::Arc& a : result->arcs()) os << "  " << arc_name(lat, a) << "\n";
  os << extra.str() << "generates all arcs: " << (all ? "yes" : "no") << "\n";
  emit(o, j, os.str());
  return kOk;
}

int wedderburn(const Options& o) {
  std::vector<dlat::Quaternion> s = dlat::io::quaternions_from_json(dlat::io::read_json(o.set));
  dlat::NCPoly f = dlat::wedderburn(s);
  emit(o, {{"degree", f.degree()}, {"coefficients", dlat::io::poly_to_json(f)}}, "f_S = " + f.str() + "\n");
  return kOk;
}

int pseudoroots(const Options& o) {
  dlat::PseudoRootLattice pl = dlat::PseudoRootLattice::build(dlat::io::quaternions_from_json(dlat::io::read_json(o.set)));
  const dlat::FiniteLattice& lat = pl.lattice();
  dlat::ArcSet b = o.arcs.empty() ? pl.zero_arcs() : dlat::ArcSet::from_arcs(lat, read_arcs(dlat::io::read_json(o.arcs)));
  dlat::GenerationReport report = dlat::rational_generation_check(pl, b);

  Json psi = Json::array();
  std::ostringstream os;
  os << "f_S = " << pl.f_s().str() << " (" << lat.size() << " polynomials, generic: "
     << (dlat::generic_check(pl) ? "yes" : "no") << ")\n";
  for (std::size_t k = 0; k < lat.covers().size(); ++k) {
    const dlat::Arc& a = lat.covers()[k];
    psi.push_back({{"arc", {a.top, a.bottom}}, {"psi", dlat::io::quaternion_to_json(pl.psi_table()[k])}});
    os << "  psi(" << arc_name(lat, a) << ") = " << pl.psi_table()[k].str() << "\n";
  }
  Json polys = Json::array();
  for (const dlat::NCPoly& p : pl.polys()) polys.push_back(dlat::io::poly_to_json(p));
  Json j = {{"polynomials", polys},
            {"generic", dlat::generic_check(pl)},
            {"psi", psi},
            {"report", dlat::io::report_to_json(pl, report)}};
  emit(o, j, os.str() + dlat::io::report_text(pl, report));
  return report.ok() ? kOk : kFailed;
}

int gen(const Options& o) {
  Json j = dlat::io::lattice_to_json(dlat::make_standard(o.family));
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(o.out);
    if (!(f << j.dump(2) << "\n")) throw dlat::PreconditionError("cannot write '" + o.out + "'");
  }
  return kOk;
}

int verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = dlat::suite_names();
  } else {
    names.push_back(o.suite);
  }
  dlat::SuiteOptions opts;
  opts.seed = o.seed;
  if (o.trials > 0) opts.trials = o.trials;
  bool ok = true;
  Json j = Json::array();
  std::ostringstream os;
  for (const std::string& n : names) {
    dlat::SuiteResult r = dlat::run_suite(n, opts);
    ok = ok && r.passed;
    j.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  emit(o, j, os.str());
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Diamond closure on finite lattices and quaternion pseudo-roots"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON on stdout");
  app.add_option("--seed", o.seed, "Random seed for verification suites");
  app.add_option("--trials", o.trials, "Trial count override for verification suites");

  auto* lattice = app.add_subcommand("lattice", "Lattice file utilities");
  lattice->require_subcommand(1);
  auto* check = lattice->add_subcommand("check", "Check the lattice axioms and report structure");
  check->add_option("file", o.file, "Lattice JSON")->required()->check(CLI::ExistingFile);

  auto* clo = app.add_subcommand("closure", "Diamond closure of an arc set");
  clo->add_option("--method", o.method)->required()->check(CLI::IsMember({"naive", "mldc", "dldc"}));
  clo->add_option("--lattice", o.lattice, "Lattice JSON (defaults to the arc file's 'lattice')")
      ->check(CLI::ExistingFile);
  clo->add_option("--arcs", o.arcs, "Arc-set JSON")->required()->check(CLI::ExistingFile);

  auto* wed = app.add_subcommand("wedderburn", "Wedderburn polynomial of a quaternion set");
  wed->add_option("--set", o.set, "Quaternion-set JSON")->required()->check(CLI::ExistingFile);

  auto* pr = app.add_subcommand("pseudoroots", "Pseudo-root lattice, psi table and generation replay");
  pr->add_option("--set", o.set, "Quaternion-set JSON")->required()->check(CLI::ExistingFile);
  pr->add_option("--arcs", o.arcs, "Starting arcs (default: the zero arcs)")->check(CLI::ExistingFile);

  auto* g = app.add_subcommand("gen", "Emit a standard lattice as JSON");
  g->add_option("--family", o.family, "boolean:N, chain:N, m3, n5, divisors:N or product(A,B)")->required();
  g->add_option("--out", o.out, "Output file (default stdout)");

  auto* v = app.add_subcommand("verify", "Run an acceptance suite");
  std::string suites = "all";
  for (const std::string& n : dlat::suite_names()) suites += ", " + n;
  v->add_option("--suite", o.suite, "One of: " + suites)->required();
  v->add_option("--seed", o.seed, "Random seed");
  v->add_option("--trials", o.trials, "Trial count override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return lattice_check(o);
    if (*clo) return closure(o);
    if (*wed) return wedderburn(o);
    if (*pr) return pseudoroots(o);
    if (*g) return gen(o);
    if (*v) return verify(o);
  } catch (const dlat::PreconditionError& e) {
    if (o.json) std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    if (o.json) std::cout << Json{{"error", e.what()}}.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    if (o.json) std::cout << Json{{"failure", e.what()}}.dump(2) << "\n";
    std::cerr << "failure: " << e.what() << "\n";
    return kFailed;
  }
  return kInputError;
}
