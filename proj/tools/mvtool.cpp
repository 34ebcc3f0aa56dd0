// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvcycles/mvcycles.hpp"

namespace {

using mv::io::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("not an integer list: " + s);
    }
  }
  return out;
}

/// A file path, or an inline JSON document when the text starts with '{'.
json load_json(const std::string& arg) {
  try {
    if (!arg.empty() && arg.front() == '{') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw InputError("cannot open " + arg);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

void print(const json& j) { std::cout << mv::io::dump(j); }

std::string cell(const mv::Coweight& c) { return c.str(); }

void print_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (width.size() <= k) width.push_back(0);
      width[k] = std::max(width[k], r[k].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t k = 0; k < r.size(); ++k) {
      line += r[k];
      if (k + 1 < r.size()) line += std::string(width[k] - r[k].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

mv::Coweight parse_coweight(const std::string& s) { return mv::Coweight(parse_ints(s)); }

struct Options {
  std::string format = "json";
  // enumerate
  int n = 0;
  std::string weight, alpha, beta;
  // polytope / sample / verify inputs
  std::string picture, lambda, svg, trace;
  double svg_scale = 40.0;
  bool svg_labels = true;
  // lattice analyze
  std::string lattice_file;
  std::string arith = "exact";
  bool with_polytope = true;
  // randomness and budgets
  std::uint64_t seed = 0;
  int retries = 10;
  std::size_t budget = 0;
  std::string check;
};

int cmd_enumerate(const Options& o) {
  std::vector<mv::KostantPicture> pics;
  int n = o.n;
  if (!o.alpha.empty() || !o.beta.empty()) {
    if (o.alpha.empty() || o.beta.empty()) throw InputError("--alpha and --beta go together");
    auto a = parse_coweight(o.alpha), b = parse_coweight(o.beta);
    if (a.size() != b.size()) throw InputError("--alpha and --beta differ in length");
    n = static_cast<int>(a.size());
    pics = mv::enumerate_mv_cycles(a, b);
  } else {
    if (o.n < 1) throw InputError("--n is required (or --alpha/--beta)");
    auto w = parse_ints(o.weight);
    if (static_cast<int>(w.size()) != o.n - 1) throw InputError("--weight needs n-1 entries");
    pics = mv::enumerate_pictures(o.n, mv::RootCombination(w));
  }
  if (o.format == "table") {
    std::vector<std::vector<std::string>> rows{{"#", "loops", "len"}};
    for (std::size_t k = 0; k < pics.size(); ++k) {
      auto s = pics[k].str();
      rows.push_back({std::to_string(k + 1), s.substr(0, s.find('/')), std::to_string(pics[k].length())});
    }
    print_table(rows);
    std::cout << pics.size() << " pictures\n";
    return 0;
  }
  json arr = json::array();
  for (const auto& p : pics) arr.push_back(mv::io::to_json(p));
  print(json{{"n", n}, {"count", pics.size()}, {"pictures", arr}});
  return 0;
}

mv::KostantPicture need_picture(const Options& o) {
  if (o.picture.empty()) throw InputError("--picture is required");
  return mv::io::picture_from_json(load_json(o.picture));
}

mv::Coweight need_lambda(const Options& o, int n) {
  if (o.lambda.empty()) throw InputError("--lambda is required");
  auto lam = parse_coweight(o.lambda);
  if (static_cast<int>(lam.size()) != n) throw InputError("--lambda needs n entries");
  return lam;
}

int cmd_polytope(const Options& o) {
  auto p = need_picture(o);
  auto lam = need_lambda(o, p.n());
  auto P = mv::mv_polytope(p, lam);
  if (!o.svg.empty()) {
    if (p.n() != 3) throw InputError("--svg needs n = 3");
    std::ofstream out(o.svg);
    if (!out) throw InputError("cannot write " + o.svg);
    out << mv::render_svg(P, {o.svg_scale, o.svg_labels});
  }
  if (o.format == "table") {
    std::vector<std::vector<std::string>> rows{{"w", "nu(w)"}};
    for (const auto& [w, v] : P.vertex_by_perm) rows.push_back({w.str(), cell(v)});
    print_table(rows);
    std::cout << P.vertices.size() << " distinct vertices, " << P.facets.size() << " facet bounds\n";
    return 0;
  }
  json j = mv::io::to_json(P);
  if (!o.trace.empty()) {
    auto w = mv::Permutation::parse(o.trace);
    if (w.n() != p.n()) throw InputError("--trace permutation has the wrong size");
    j["trace"] = mv::io::to_json(mv::collapse_sequence(p, w.one_line()));
  }
  print(j);
  return 0;
}

/// Recomputes δ and p(Y) over the prime field from the same generators.
json modular_cross_check(const json& doc, const mv::QLattice& Y) {
  std::vector<mv::TermVector> gens;
  for (const auto& g : doc.at("generators")) gens.push_back(mv::io::term_vector_from_json(g));
  std::optional<std::pair<int, int>> window;
  if (doc.contains("window")) window = std::pair{doc["window"][0].get<int>(), doc["window"][1].get<int>()};
  auto Z = mv::Lattice<mv::ModP>::from_generators(Y.n(), gens, window);
  bool same = Z.delta() == Y.delta() && mv::picture_of(Z) == mv::picture_of(Y) &&
              Z.relative_dimension() == Y.relative_dimension();
  return json{{"modulus", "2^61-1"}, {"agrees_with_exact", same}};
}

int cmd_lattice(const Options& o) {
  auto doc = load_json(o.lattice_file);
  auto Y = mv::io::lattice_from_json(doc);
  auto p = mv::picture_of(Y);
  auto lam = mv::lambda_of(Y, p);
  mv::KostantPicture target = o.picture.empty() ? p : mv::io::picture_from_json(load_json(o.picture));
  if (target.n() != Y.n()) throw InputError("--picture has the wrong number of columns");
  bool weak = mv::is_weakly_compatible(Y, target);
  json verdicts{{"weak", weak}};
  if (weak) {
    bool compat = mv::is_compatible(Y, target);
    verdicts["compatible"] = compat;
    verdicts["strong"] = compat && mv::is_strongly_compatible(Y, target);
  } else {
    verdicts["compatible"] = false;
    verdicts["strong"] = false;
  }
  json j{{"n", Y.n()},
         {"delta", mv::io::to_json(Y.delta())},
         {"relative_dimension", Y.relative_dimension()},
         {"dim0", Y.dim0()},
         {"picture", mv::io::to_json(p)},
         {"weight", picture_weight(p).coefficients()},
         {"lambda", mv::io::to_json(lam)},
         {"against", mv::io::to_json(target)},
         {"verdicts", verdicts}};
  if (o.arith == "modular") j["modular"] = modular_cross_check(doc, Y);
  mv::MVPolytope orbit;
  if (o.with_polytope) {
    orbit = mv::orbit_polytope(Y);
    j["orbit_polytope"] = mv::io::to_json(orbit);
    j["equals_mv_polytope"] = mv::verify::first_difference(orbit, mv::mv_polytope(p, lam)).empty();
  }
  if (o.format == "table") {
    auto ps = p.str();
    std::vector<std::vector<std::string>> rows{
        {"delta", Y.delta().str()},
        {"relative dimension", std::to_string(Y.relative_dimension())},
        {"dim0", std::to_string(Y.dim0())},
        {"picture", ps.substr(0, ps.find('/'))},
        {"lambda", lam.str()},
        {"weakly compatible", verdicts["weak"].get<bool>() ? "yes" : "no"},
        {"compatible", verdicts["compatible"].get<bool>() ? "yes" : "no"},
        {"strongly compatible", verdicts["strong"].get<bool>() ? "yes" : "no"}};
    if (o.with_polytope) rows.push_back({"P(Y) = P(p,lambda)", j["equals_mv_polytope"].get<bool>() ? "yes" : "no"});
    if (j.contains("modular")) rows.push_back({"modular agrees", j["modular"]["agrees_with_exact"].get<bool>() ? "yes" : "no"});
    print_table(rows);
    return 0;
  }
  print(j);
  return 0;
}

int cmd_sample(const Options& o) {
  auto p = need_picture(o);
  auto lam = need_lambda(o, p.n());
  std::mt19937_64 rng(o.seed);
  std::optional<mv::Sample> drawn;
  try {
    drawn = mv::sample(p, lam, rng, o.retries);
  } catch (const mv::RetriesExhausted& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  const mv::Sample& s = *drawn;
  json j{{"picture", mv::io::to_json(p)},
         {"lambda", mv::io::to_json(lam)},
         {"seed", o.seed},
         {"attempts", s.attempts},
         {"point", mv::io::to_json(s.point)},
         {"lattice", mv::io::to_json(s.lattice)}};
  if (o.format == "table") {
    std::cout << "attempts " << s.attempts << "\n";
    for (const auto& v : s.lattice.basis_terms()) std::cout << v.str() << "\n";
    return 0;
  }
  print(j);
  return 0;
}

int cmd_verify(const Options& o) {
  namespace V = mv::verify;
  const mv::KostantPicture pstar(
      6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 4}, {3, 4}, {3, 6}, {4, 6}, {4, 6}, {5, 6}});
  const mv::Coweight pstar_lambda{2, 0, 1, 0, -1, -2};
  auto pick_picture = [&] { return o.picture.empty() ? pstar : need_picture(o); };
  auto pick_lambda = [&](const mv::KostantPicture& p) {
    return o.lambda.empty() && o.picture.empty() ? pstar_lambda : need_lambda(o, p.n());
  };
  auto budget = [&](std::size_t dflt) { return o.budget ? o.budget : dflt; };
  std::vector<V::Report> reports;
  auto want = [&](const char* name) { return o.check == "all" || o.check == name; };
  if (want("commutativity")) reports.push_back(V::sweep_commutativity(4, 6, budget(1000), o.seed));
  if (want("ancestry")) reports.push_back(V::sweep_ancestry(4, 6, budget(1000), o.seed));
  if (want("kostant")) reports.push_back(V::sweep_kostant(5, 10));
  if (want("strong-moment")) {
    auto p = pick_picture();
    reports.push_back(V::sweep_strong_moment(p, pick_lambda(p), budget(20), o.seed));
  }
  if (want("purity")) {
    if (!o.alpha.empty() || !o.beta.empty()) {
      if (o.alpha.empty() || o.beta.empty()) throw InputError("--alpha and --beta go together");
      reports.push_back(V::sweep_purity(parse_coweight(o.alpha), parse_coweight(o.beta)));
    } else {
      reports.push_back(V::sweep_purity_random(budget(20), 5, 8, o.seed));
    }
  }
  if (want("hrep")) {
    auto p = pick_picture();
    reports.push_back(V::sweep_hrep(p, pick_lambda(p), budget(3), o.seed));
  }
  if (want("degeneration")) {
    reports.push_back(V::sweep_degeneration(budget(50), o.seed, 4));
    if (!o.budget) reports.push_back(V::sweep_degeneration(10, o.seed, 5));
  }
  if (want("round-trip")) reports.push_back(V::sweep_round_trip(budget(500), o.seed));
  if (reports.empty()) throw InputError("unknown check " + o.check);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.format == "table") {
    std::vector<std::vector<std::string>> rows{{"check", "instances", "failures", "seconds", "result"}};
    for (const auto& r : reports) {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
      rows.push_back({r.name, std::to_string(r.instances), std::to_string(r.failures.size()), secs,
                      r.passed() ? "PASS" : "FAIL"});
    }
    print_table(rows);
    for (const auto& r : reports)
      for (const auto& f : r.failures) std::cout << r.name << ": " << f.dump() << "\n";
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    print(json{{"seed", o.seed}, {"passed", ok}, {"reports", arr}});
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MV-cycles and MV-polytopes through the lattice model"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* en = app.add_subcommand("enumerate", "List Kostant pictures of a weight, or MV-cycles between two coweights");
  en->add_option("--n", o.n, "Number of columns");
  en->add_option("--weight", o.weight, "Simple-root coefficients, comma separated");
  en->add_option("--alpha", o.alpha, "Highest coweight");
  en->add_option("--beta", o.beta, "Lowest coweight");
  add_format(en);

  auto* po = app.add_subcommand("polytope", "MV-polytope of a picture");
  po->add_option("--picture", o.picture, "Picture JSON file or inline document")->required();
  po->add_option("--lambda", o.lambda, "Highest coweight")->required();
  po->add_option("--svg", o.svg, "Write a drawing (n = 3 only)");
  po->add_option("--scale", o.svg_scale, "SVG units per lattice step");
  po->add_flag("!--no-labels", o.svg_labels, "Omit vertex labels in the SVG");
  po->add_option("--trace", o.trace, "Include the collapse trace for this permutation");
  add_format(po);

  auto* la = app.add_subcommand("lattice", "Lattice commands");
  la->require_subcommand(1);
  auto* an = la->add_subcommand("analyze", "Invariants, picture and compatibility of a lattice");
  an->add_option("file", o.lattice_file, "Lattice JSON file")->required();
  an->add_option("--picture", o.picture, "Picture to test against (default: the lattice's own)");
  an->add_option("--arith", o.arith, "Arithmetic for a cross-check")->check(CLI::IsMember({"exact", "modular"}));
  an->add_flag("!--no-polytope", o.with_polytope, "Skip the orbit polytope");
  add_format(an);

  auto* sa = app.add_subcommand("sample", "Random strongly compatible lattice for (p, lambda)");
  sa->add_option("--picture", o.picture, "Picture JSON file or inline document")->required();
  sa->add_option("--lambda", o.lambda, "Highest coweight")->required();
  sa->add_option("--seed", o.seed, "Random seed")->required();
  sa->add_option("--retries", o.retries, "Attempts before giving up")->check(CLI::PositiveNumber);
  add_format(sa);

  auto* ve = app.add_subcommand("verify", "Run a verification sweep");
  ve->add_option("check", o.check, "Which sweep")
      ->required()
      ->check(CLI::IsMember({"commutativity", "ancestry", "kostant", "strong-moment", "purity", "hrep",
                             "degeneration", "round-trip", "all"}));
  ve->add_option("--seed", o.seed, "Random seed")->required();
  ve->add_option("--budget", o.budget, "Instance budget for the random part");
  ve->add_option("--picture", o.picture, "Picture for strong-moment and hrep (default p*)");
  ve->add_option("--lambda", o.lambda, "Coweight for strong-moment and hrep");
  ve->add_option("--alpha", o.alpha, "Highest coweight for purity");
  ve->add_option("--beta", o.beta, "Lowest coweight for purity");
  add_format(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (en->parsed()) return cmd_enumerate(o);
    if (po->parsed()) return cmd_polytope(o);
    if (an->parsed()) return cmd_lattice(o);
    if (sa->parsed()) return cmd_sample(o);
    if (ve->parsed()) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mv::io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
