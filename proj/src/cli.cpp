#include "summandlab/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <iostream>
#include <sstream>

#include "summandlab/catalog.hpp"
#include "summandlab/errors.hpp"
#include "summandlab/graded_rings.hpp"
#include "summandlab/parser.hpp"
#include "summandlab/splitting.hpp"
#include "summandlab/surface.hpp"

namespace summandlab::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

PolyRing parse_ring(const std::string& spec) {
  std::vector<std::string> names;
  for (const auto& part : split(spec, ',')) {
    std::string name = trim(part);
    if (!name.empty()) names.push_back(name);
  }
  if (names.empty()) throw AlgebraError(Errc::BadParams, "empty variable list");
  return PolyRing(names);
}

std::vector<Polynomial> parse_poly_list(const std::string& text, const PolyRing& ring) {
  std::vector<Polynomial> polys;
  for (const auto& part : split(text, ';')) {
    std::string body = trim(part);
    if (!body.empty()) polys.push_back(parse_polynomial(body, ring));
  }
  return polys;
}

std::vector<std::vector<long>> parse_weight_matrix(const std::string& text) {
  std::vector<std::vector<long>> rows;
  for (const auto& row_text : split(text, ';')) {
    if (trim(row_text).empty()) continue;
    std::vector<long> row;
    for (const auto& entry : split(row_text, ',')) {
      row.push_back(std::stol(trim(entry)));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw AlgebraError(Errc::BadParams, "empty weight matrix");
  return rows;
}

RingMap load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw AlgebraError(Errc::BadParams, "cannot open map file: " + path);
  std::string source_vars, source_ideal, target_vars, target_ideal, map_spec;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw AlgebraError(Errc::BadParams, "map file line without ':': " + t);
    }
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "source vars") source_vars = value;
    else if (key == "source ideal") source_ideal = value;
    else if (key == "target vars") target_vars = value;
    else if (key == "target ideal") target_ideal = value;
    else if (key == "map") map_spec = value;
    else throw AlgebraError(Errc::BadParams, "unknown map file key: " + key);
  }
  if (source_vars.empty() || target_vars.empty() || map_spec.empty()) {
    throw AlgebraError(Errc::BadParams,
                       "map file needs 'source vars', 'target vars' and 'map' entries");
  }
  PolyRing source_ring = parse_ring(source_vars);
  PolyRing target_ring = parse_ring(target_vars);
  QuotientRing source(source_ring, Ideal(source_ring, parse_poly_list(source_ideal, source_ring)));
  QuotientRing target(target_ring, Ideal(target_ring, parse_poly_list(target_ideal, target_ring)));

  std::vector<Polynomial> images(source_ring.arity(), Polynomial::zero(target_ring));
  std::vector<bool> assigned(source_ring.arity(), false);
  for (const auto& entry : split(map_spec, ';')) {
    std::string body = trim(entry);
    if (body.empty()) continue;
    auto arrow = body.find("->");
    if (arrow == std::string::npos) {
      throw AlgebraError(Errc::BadParams, "map entry without '->': " + body);
    }
    std::string var = trim(body.substr(0, arrow));
    auto idx = source_ring.index_of(var);
    if (!idx) throw AlgebraError(Errc::UnknownVariable, "map entry for unknown variable " + var);
    images[*idx] = parse_polynomial(trim(body.substr(arrow + 2)), target_ring);
    assigned[*idx] = true;
  }
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (!assigned[i]) {
      throw AlgebraError(Errc::BadParams,
                         "map file does not assign variable " + source_ring.variable(i));
    }
  }
  return RingMap(source, target, images);
}

json poly_list_json(const std::vector<Polynomial>& polys) {
  json arr = json::array();
  for (const auto& p : polys) arr.push_back(p.to_string());
  return arr;
}

json monomial_list_json(const PolyRing& ring, const std::vector<Monomial>& monomials) {
  json arr = json::array();
  for (const auto& m : monomials) {
    arr.push_back(Polynomial::term(ring, m, Scalar(1)).to_string());
  }
  return arr;
}

json point_json(const std::vector<Scalar>& point) {
  json arr = json::array();
  for (const auto& c : point) arr.push_back(to_string(c));
  return arr;
}

json map_json(const RingMap& map) {
  json j;
  j["source_vars"] = map.source().ambient().variables();
  j["source_ideal"] = poly_list_json(map.source().ideal().generators());
  j["target_vars"] = map.target().ambient().variables();
  j["target_ideal"] = poly_list_json(map.target().ideal().generators());
  json images = json::object();
  for (std::size_t i = 0; i < map.images().size(); ++i) {
    images[map.source().ambient().variable(i)] = map.images()[i].to_string();
  }
  j["images"] = images;
  return j;
}

struct ArgReader {
  std::vector<std::string> args;
  std::size_t pos = 0;
  bool done() const { return pos >= args.size(); }
  std::string next(const std::string& what) {
    if (done()) throw AlgebraError(Errc::BadParams, "missing " + what);
    return args[pos++];
  }
};

std::map<std::string, std::string> read_flags(ArgReader& reader,
                                              const std::set<std::string>& known) {
  std::map<std::string, std::string> flags;
  while (!reader.done()) {
    std::string flag = reader.next("flag");
    if (flag.rfind("--", 0) != 0 || !known.count(flag)) {
      throw AlgebraError(Errc::BadParams, "unknown flag: " + flag);
    }
    flags[flag.substr(2)] = reader.next("value for " + flag);
  }
  return flags;
}

std::string require(const std::map<std::string, std::string>& flags, const std::string& key) {
  auto it = flags.find(key);
  if (it == flags.end()) throw AlgebraError(Errc::BadParams, "missing --" + key);
  return it->second;
}

CommandResult run_groebner(ArgReader& reader) {
  auto flags = read_flags(reader, {"--ring", "--ideal", "--order"});
  PolyRing ring = parse_ring(require(flags, "ring"));
  Ideal ideal(ring, parse_poly_list(require(flags, "ideal"), ring));
  MonomialOrder order = MonomialOrder::parse(
      flags.count("order") ? flags.at("order") : "degrevlex");
  auto gb = reduced_groebner(ideal, order);
  CommandResult result;
  result.status = "ok";
  result.exit_code = 0;
  result.payload["variables"] = ring.variables();
  result.payload["order"] = order.key();
  result.payload["basis"] = poly_list_json(gb->basis());
  return result;
}

CommandResult run_kernel(ArgReader& reader) {
  auto flags = read_flags(reader, {"--map"});
  RingMap map = load_map_file(require(flags, "map"));
  Ideal k = kernel(map);
  CommandResult result;
  result.status = "ok";
  result.exit_code = 0;
  result.payload["map"] = map_json(map);
  result.payload["kernel"] = poly_list_json(
      reduced_groebner(k, MonomialOrder::degrevlex())->basis());
  return result;
}

CommandResult run_verify_splitting(ArgReader& reader) {
  auto flags = read_flags(reader, {"--map", "--splitting", "--bound"});
  RingMap map = load_map_file(require(flags, "map"));
  std::string kind = flags.count("splitting") ? flags.at("splitting") : "semigroup";
  int bound = flags.count("bound") ? std::stoi(flags.at("bound")) : 0;
  SplittingSpec spec = [&] {
    if (kind == "semigroup") return SplittingSpec::make_semigroup_projection(map, bound);
    if (kind == "trace") return SplittingSpec::make_trace_split(map, bound);
    throw AlgebraError(Errc::BadParams, "splitting kind must be semigroup or trace");
  }();
  SplittingReport report = verify_splitting(map, spec, bound);

  CommandResult result;
  bool ok = report.verdict == SplittingReport::Verdict::VerifiedToBound;
  result.status = ok ? "ok" : "refuted";
  result.exit_code = ok ? 0 : 1;
  result.payload["verdict"] = ok ? "verified-to-bound" : "refuted";
  result.payload["bound"] = report.degree_bound;
  result.payload["sigma_of_one"] = report.sigma_of_one.to_string();
  if (kind == "trace") {
    result.payload["trace_rank"] = to_string(spec.trace_rank());
    result.payload["trace_basis"] =
        monomial_list_json(map.target().ambient(), spec.trace_basis());
  }
  json violations = json::array();
  for (const auto& v : report.violations) {
    json row;
    row["variable"] = v.source_variable;
    row["monomial"] = Polynomial::term(map.target().ambient(), v.monomial, Scalar(1)).to_string();
    row["lhs"] = v.lhs.to_string();
    row["rhs"] = v.rhs.to_string();
    violations.push_back(row);
  }
  result.payload["violations"] = violations;
  return result;
}

CommandResult run_invariants(ArgReader& reader) {
  auto flags = read_flags(reader, {"--weights", "--bound", "--vars"});
  auto rows = parse_weight_matrix(require(flags, "weights"));
  int bound = flags.count("bound") ? std::stoi(flags.at("bound")) : 10;
  std::size_t arity = rows[0].size();
  PolyRing ring = flags.count("vars")
                      ? parse_ring(flags.at("vars"))
                      : [&] {
                          std::vector<std::string> names;
                          for (std::size_t i = 0; i < arity; ++i) {
                            names.push_back("x" + std::to_string(i + 1));
                          }
                          return PolyRing(names);
                        }();
  if (ring.arity() != arity) {
    throw AlgebraError(Errc::ArityMismatch, "--vars arity does not match the weight matrix");
  }
  TorusAction action{MultiGrading(rows)};
  InvariantMonomials inv = invariant_monomials(action, arity, bound);
  InvariantMonomials gens = monoid_minimal_generators(action, arity, bound);
  CommandResult result;
  result.status = "ok";
  result.exit_code = 0;
  result.payload["bound"] = bound;
  result.payload["monomials"] = monomial_list_json(ring, inv.monomials);
  result.payload["count"] = inv.monomials.size();
  result.payload["minimal_generators"] = monomial_list_json(ring, gens.monomials);
  return result;
}

CommandResult run_analyze_cubic(ArgReader& reader) {
  auto flags = read_flags(reader, {"--poly", "--ring"});
  PolyRing ring = flags.count("ring") ? parse_ring(flags.at("ring"))
                                      : PolyRing({"x", "y", "z", "w"});
  Polynomial form = parse_polynomial(require(flags, "poly"), ring);
  SurfaceVerdict verdict = cubic_verdict(form);
  CommandResult result;
  result.status = "ok";
  result.exit_code = 0;
  result.payload["verdict"] = to_string(verdict.verdict);
  result.payload["justification"] = verdict.justification;
  result.payload["mu_sum"] = verdict.mu_sum;
  json config = json::array();
  for (const auto& t : verdict.configuration) config.push_back(t.name());
  result.payload["configuration"] = config;
  json points = json::array();
  for (const auto& report : verdict.reports) {
    json row;
    row["point"] = point_json(report.point);
    row["chart"] = report.chart;
    row["milnor"] = report.milnor;
    row["hessian_corank"] = report.hessian_corank;
    row["type"] = report.type.name();
    points.push_back(row);
  }
  result.payload["points"] = points;
  return result;
}

CommandResult run_example(ArgReader& reader) {
  std::string key = reader.next("example key");
  std::vector<long> params;
  while (!reader.done()) params.push_back(std::stol(reader.next("parameter")));
  NamedExample ex = build_named_example(key, params);
  CommandResult result;
  result.status = "ok";
  result.exit_code = 0;
  result.payload["key"] = ex.key;
  result.payload["description"] = ex.description;
  if (ex.ring) {
    result.payload["ring"]["variables"] = ex.ring->ambient().variables();
    result.payload["ring"]["ideal"] = poly_list_json(ex.ring->ideal().generators());
  }
  if (ex.map) result.payload["map"] = map_json(*ex.map);
  if (ex.matrix) {
    json rows = json::array();
    for (std::size_t i = 1; i <= ex.matrix->size(); ++i) {
      json row = json::array();
      for (std::size_t j = 1; j <= ex.matrix->size(); ++j) {
        row.push_back(ex.matrix->entry(i, j).to_string());
      }
      rows.push_back(row);
    }
    result.payload["matrix"] = rows;
  }
  if (ex.grading) result.payload["grading"] = ex.grading->rows();
  if (!ex.named_polynomials.empty()) {
    json polys = json::object();
    for (const auto& [name, p] : ex.named_polynomials) polys[name] = p.to_string();
    result.payload["polynomials"] = polys;
  }
  return result;
}

CommandResult run_veronese(ArgReader& reader) {
  auto flags = read_flags(reader, {"--vars", "--degree", "--weights"});
  long n = std::stol(require(flags, "vars"));
  long d = std::stol(require(flags, "degree"));
  std::vector<long> weights(n, 1);
  if (flags.count("weights")) {
    auto rows = parse_weight_matrix(flags.at("weights"));
    weights = rows[0];
  }
  VeronesePresentation ver = veronese_presentation(n, weights, d);
  CommandResult result;
  result.status = "ok";
  result.exit_code = 0;
  result.payload["generators"] =
      monomial_list_json(ver.embedding.target().ambient(), ver.generators);
  result.payload["presentation_ideal"] = poly_list_json(
      reduced_groebner(ver.presented.ideal(), MonomialOrder::degrevlex())->basis());
  result.payload["map"] = map_json(ver.embedding);
  return result;
}

const char* kUsage =
    "usage: summand-lab <command> [flags]\n"
    "  groebner --ring <vars> --ideal <polys;...> [--order lex|degrevlex]\n"
    "  kernel --map <spec-file>\n"
    "  verify-splitting --map <spec-file> [--splitting semigroup|trace] [--bound n]\n"
    "  invariants --weights <r1c1,r1c2;r2c1,...> [--bound n] [--vars names]\n"
    "  analyze-cubic --poly <text> [--ring x,y,z,w]\n"
    "  example <key> [params...]\n"
    "  veronese --vars <n> --degree <d> [--weights w1,w2,...]\n";

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  auto start = std::chrono::steady_clock::now();
  CommandResult result;
  result.command = args.empty() ? "" : args[0];
  try {
    ArgReader reader{args, 1};
    if (args.empty()) {
      throw AlgebraError(Errc::BadParams, std::string("no command given\n") + kUsage);
    } else if (args[0] == "groebner") {
      result = run_groebner(reader);
    } else if (args[0] == "kernel") {
      result = run_kernel(reader);
    } else if (args[0] == "verify-splitting") {
      result = run_verify_splitting(reader);
    } else if (args[0] == "invariants") {
      result = run_invariants(reader);
    } else if (args[0] == "analyze-cubic") {
      result = run_analyze_cubic(reader);
    } else if (args[0] == "example") {
      result = run_example(reader);
    } else if (args[0] == "veronese") {
      result = run_veronese(reader);
    } else {
      throw AlgebraError(Errc::BadParams,
                         "unknown command: " + args[0] + "\n" + kUsage);
    }
    result.command = args[0];
  } catch (const AlgebraError& e) {
    result.status = "error";
    result.exit_code = 2;
    result.payload = json::object();
    result.payload["error"]["code"] = errc_name(e.code());
    result.payload["error"]["message"] = e.what();
    if (!e.witness().empty()) result.payload["error"]["witness"] = e.witness();
  } catch (const std::exception& e) {
    result.status = "error";
    result.exit_code = 2;
    result.payload = json::object();
    result.payload["error"]["code"] = "internal";
    result.payload["error"]["message"] = e.what();
  }
  auto stop = std::chrono::steady_clock::now();
  result.timing_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return result;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CommandResult result = dispatch(args);
  json out;
  out["command"] = result.command;
  out["status"] = result.status;
  out["payload"] = result.payload;
  std::cout << out.dump(2) << std::endl;
  std::cerr << result.command << ": " << result.status << " (" << result.timing_ms << " ms)"
            << std::endl;
  return result.exit_code;
}

}  // namespace summandlab::cli
