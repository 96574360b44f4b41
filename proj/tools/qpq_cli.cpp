// Command-line front end: slope words on the pillowcase, the free-product
// triviality obstruction, Alexander-module kernel comparison, Blanchfield
// pairings, the Litherland satellite sum, and the full verification suite.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "qpq/alexander.hpp"
#include "qpq/obstruction.hpp"
#include "qpq/slopes.hpp"
#include "qpq/verify.hpp"
#include "qpq/words.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  std::string format = "text";
  std::string out;
  int parallelism = 0;  // 0 = library default
};

int emit(const GlobalOpts& g, const std::string& text, const json& machine) {
  const std::string payload = g.format == "json" ? machine.dump(2) + "\n" : text;
  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "error: cannot open " << g.out << "\n";
      return 2;
    }
    f << payload;
  }
  return 0;
}

std::pair<long, long> parse_pq(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected p,q (e.g. 3,2)");
  return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
}

// Module vectors for the blanchfield command: four rationals c0,c1,c0,c1
// describing (c0 + c1 t, c0 + c1 t) in (a1, a2)-coordinates.
qpq::ModuleVector parse_module_vector(const std::string& text) {
  std::stringstream ss(text);
  std::vector<qpq::Rational> parts;
  std::string item;
  while (std::getline(ss, item, ','))
    parts.emplace_back(item);
  if (parts.size() != 4)
    throw std::invalid_argument("expected four rationals c0,c1,c0,c1");
  return {qpq::FieldElem(parts[0], parts[1]), qpq::FieldElem(parts[2], parts[3])};
}

int cmd_slope_word(const GlobalOpts& g, const std::string& slope, bool oracle) {
  const qpq::SlopeParam s = qpq::SlopeParam::parse(slope);
  const qpq::SignSequence eps = qpq::epsilon_sequence(s);
  const qpq::GroupWord omega = qpq::omega_word(s);
  const qpq::GroupWord relator = qpq::slope_relator(s);

  json j = {{"slope", s.str()},
            {"epsilon", eps.str()},
            {"omega", omega.str()},
            {"relator", relator.str()}};
  std::ostringstream text;
  text << "slope    " << s.str() << "\n"
       << "epsilon  " << (eps.signs.empty() ? "(empty)" : eps.str()) << "\n"
       << "omega    " << omega.str() << "\n"
       << "relator  " << relator.str() << "\n";
  if (oracle && !s.is_zero()) {
    const qpq::SignSequence walked = qpq::grid_walk_oracle(s);
    const bool agree = walked == eps;
    j["oracle"] = walked.str();
    j["oracle_agrees"] = agree;
    text << "oracle   " << walked.str() << (agree ? "  (agrees)" : "  (DISAGREES)") << "\n";
  }
  return emit(g, text.str(), j);
}

int cmd_obstruct(const GlobalOpts& g, const std::string& pq, const std::string& slope) {
  const auto [p, q] = parse_pq(pq);
  const qpq::TorusKnotParams t = qpq::TorusKnotParams::make(p, q);
  const qpq::SlopeParam s = qpq::SlopeParam::parse(slope);
  const qpq::ObstructionReport r = qpq::obstruct_triviality(s, t);

  std::ostringstream text;
  text << "torus knot  T(" << t.p << "," << t.q << ")  a=" << t.a << " b=" << t.b << "\n"
       << "slope       " << s.str() << "\n"
       << "relator(u,v)  " << r.relator_uv.str() << "\n"
       << "relator(x,y)  " << r.relator_xy.str() << "\n"
       << "normal form   " << r.normal_form.str() << "\n"
       << "syllables     " << r.syllable_count << "\n"
       << "verdict       " << (r.nontrivial ? "nontrivial (slope obstructed)" : "trivial")
       << "\n";
  return emit(g, text.str(), json::parse(r.to_json()));
}

int cmd_kernels(const GlobalOpts& g, long k1, long k2) {
  const qpq::KernelVerdict v = qpq::kernels_distinct(k1, k2);
  std::ostringstream text;
  text << "w_" << k1 << "           " << qpq::w_k(k1).str() << "\n"
       << "w_" << k2 << "           " << qpq::w_k(k2).str() << "\n"
       << "difference    (0, " << v.difference_second.str() << ")\n"
       << "c^2+cd+d^2    " << v.quadratic_coefficient.str() << "\n"
       << "self-pairing  " << v.self_pairing.str() << "\n"
       << "verdict       " << (v.distinct ? "kernels distinct" : "kernels equal") << "\n";
  json j = json::parse(v.to_json());
  j["k1"] = k1;
  j["k2"] = k2;
  return emit(g, text.str(), j);
}

int cmd_blanchfield(const GlobalOpts& g, const std::string& xs, const std::string& ys) {
  const qpq::ModuleVector x = parse_module_vector(xs);
  const qpq::ModuleVector y = parse_module_vector(ys);
  const qpq::TorsionPairingValue bl = qpq::blanchfield_pair(
      qpq::embed_module_vector(x), qpq::embed_module_vector(y), qpq::seifert_square_knot());
  std::ostringstream text;
  text << "x        " << x.str() << "\n"
       << "y        " << y.str() << "\n"
       << "Bl(x,y)  " << bl.str() << "\n";
  json j = {{"x", x.str()}, {"y", y.str()}, {"pairing", bl.str()}, {"zero", bl.is_zero()}};
  return emit(g, text.str(), j);
}

int cmd_satellite(const GlobalOpts& g, long w) {
  const qpq::ModulePresentation trefoil = qpq::presentation_matrix(qpq::seifert_trefoil());
  const qpq::ModulePresentation sum = qpq::litherland_sum(trefoil, trefoil, w);
  const qpq::LaurentPoly ideal = qpq::order_ideal(sum);

  json rows = json::array();
  std::ostringstream text;
  text << "presentation (pattern block + companion block at t^" << w << "):\n";
  for (std::size_t i = 0; i < sum.rows(); ++i) {
    json row = json::array();
    text << "  [";
    for (std::size_t j = 0; j < sum.cols(); ++j) {
      row.push_back(sum(i, j).str());
      text << (j ? ", " : "") << sum(i, j).str();
    }
    rows.push_back(row);
    text << "]\n";
  }
  text << "order ideal  " << ideal.str() << "\n";
  json j = {{"winding", w}, {"presentation", rows}, {"order_ideal", ideal.str()}};
  return emit(g, text.str(), j);
}

int cmd_verify_all(const GlobalOpts& g, const qpq::verify::Options& opts) {
  const auto results = qpq::verify::run_all(opts);
  const int rc = emit(g, qpq::verify::to_table(results), json::parse(qpq::verify::to_json(results)));
  if (rc != 0) return rc;
  return qpq::verify::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice-disk obstructions for generalized square knots"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--parallelism", g.parallelism, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write the report to a file instead of stdout");

  std::string slope = "2/1", pq = "3,2", xvec = "0,0,1,0", yvec = "0,0,1,0";
  bool oracle = false;
  long k1 = 0, k2 = 1, winding = 1;
  qpq::verify::Options vopts;

  auto* sw = app.add_subcommand("slope-word", "Sign sequence, omega word and slope relator");
  sw->add_option("--slope", slope, "Slope c/d with c even")->required();
  sw->add_flag("--oracle", oracle, "Also run the grid-walk oracle");

  auto* ob = app.add_subcommand("obstruct", "Triviality obstruction for one slope");
  ob->add_option("--pq", pq, "Torus knot parameters p,q")->required();
  ob->add_option("--slope", slope, "Slope c/d with c even")->required();

  auto* ke = app.add_subcommand("kernels", "Compare the kernels P_k1 and P_k2");
  ke->add_option("--k1", k1)->required()->check(CLI::NonNegativeNumber);
  ke->add_option("--k2", k2)->required()->check(CLI::NonNegativeNumber);

  auto* bl = app.add_subcommand("blanchfield", "Blanchfield pairing on the square-knot module");
  bl->add_option("--x", xvec, "First vector as c0,c1,c0,c1 (a-coordinates)");
  bl->add_option("--y", yvec, "Second vector as c0,c1,c0,c1 (a-coordinates)");

  auto* sa = app.add_subcommand("satellite", "Litherland direct-sum presentation");
  sa->add_option("--w", winding, "Winding number (nonzero)")->required();

  auto* va = app.add_subcommand("verify-all", "Run the full verification suite");
  va->add_option("--sweep-cmax", vopts.sweep_cmax)->check(CLI::PositiveNumber);
  va->add_option("--sweep-pmax", vopts.sweep_pmax)->check(CLI::PositiveNumber);
  va->add_option("--kmax", vopts.kmax)->check(CLI::PositiveNumber);

  // Let the global options (--format, --out, --parallelism) appear after the
  // subcommand name as well.
  for (auto* sub : {sw, ob, ke, bl, sa, va}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (g.parallelism > 0) omp_set_num_threads(g.parallelism);

  try {
    if (sw->parsed()) return cmd_slope_word(g, slope, oracle);
    if (ob->parsed()) return cmd_obstruct(g, pq, slope);
    if (ke->parsed()) return cmd_kernels(g, k1, k2);
    if (bl->parsed()) return cmd_blanchfield(g, xvec, yvec);
    if (sa->parsed()) return cmd_satellite(g, winding);
    if (va->parsed()) return cmd_verify_all(g, vopts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
