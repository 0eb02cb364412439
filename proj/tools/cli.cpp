#include "bier/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bier/bier_sphere.hpp"
#include "bier/buchstaber.hpp"
#include "bier/chordal.hpp"
#include "bier/coloring.hpp"
#include "bier/error.hpp"
#include "bier/fixtures.hpp"
#include "bier/io.hpp"
#include "bier/stacked.hpp"
#include "bier/verify.hpp"

namespace bier::cli {

namespace {

using nlohmann::json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;
constexpr int kInconclusive = 3;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

SimplicialComplex load(const std::string& path, Io& io) {
  std::vector<std::string> warnings;
  auto k = io::parse_complex(read_source(path, io.in), &warnings);
  for (const auto& w : warnings) io.err << "warning: " << w << '\n';
  return k;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  file << text;
}

// Bier labels above m print as primes.
std::string name(int v, int m) { return v > m ? std::to_string(v - m) + "'" : std::to_string(v); }

json names(std::span<const int> labels, int m) {
  json a = json::array();
  for (int v : labels) a.push_back(name(v, m));
  return a;
}

json coloring_json(const coloring::Coloring& c, int m) {
  json j = json::object();
  for (std::size_t v = 1; v < c.color_of.size(); ++v) {
    if (c.color_of[v] >= 0) j[name(static_cast<int>(v), m)] = c.color_of[v];
  }
  return j;
}

json char_map_json(const buchstaber::CharacteristicMap& map, int m) {
  json rows = json::array();
  json vertices = json::array();
  for (const auto& [v, vec] : map.vectors) {
    vertices.push_back(name(v, m));
    rows.push_back(vec);
  }
  return {{"target_rank", map.target_rank}, {"modulus", map.modulus}, {"vertices", vertices}, {"matrix", rows}};
}

json sphere_json(const CheckReport& r) {
  return {{"ok", r.ok()}, {"euler_characteristic", r.euler_characteristic}, {"failures", r.failures}};
}

json chordal_json(const chordal::ChordalClassification& c, int m) {
  json j{{"chordal", c.chordal}};
  if (c.chordal) {
    j["k"] = c.k;
    j["side"] = chordal::to_string(c.side);
    j["polytope"] = c.polytope;
  } else {
    j["induced_cycle"] = names(c.witness, m);
  }
  return j;
}

void emit(Io& io, const json& j) { io.out << j.dump(2) << '\n'; }

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Error(ErrorCode::kInvalidInput, "format '" + format + "' is not available for this command");
}

int cmd_dual(const std::string& path, const std::string& format, Io& io) {
  check_format(format, {"json", "dot"});
  const auto d = alexander_dual(load(path, io));
  if (format == "dot") {
    io.out << to_dot(one_skeleton(d));
  } else {
    emit(io, io::to_json(d));
  }
  return kOk;
}

int cmd_build(const std::string& path, const std::string& format, Io& io) {
  check_format(format, {"json", "dot"});
  const auto b = bier(load(path, io));
  if (format == "dot") {
    io.out << to_dot(one_skeleton(b.complex), b.m);
    return kOk;
  }
  json j = io::to_json(b.complex);
  j["prime_offset"] = b.m;
  j["sphere_check"] = sphere_json(check_sphere(b));
  emit(io, j);
  return kOk;
}

int cmd_fvector(const std::string& path, const std::string& of, Io& io) {
  const auto k = load(path, io);
  SimplicialComplex target = k;
  if (of == "dual") target = alexander_dual(k);
  if (of == "bier") target = bier(k).complex;
  emit(io, {{"of", of}, {"f_vector", f_vector(target).counts}});
  return kOk;
}

int cmd_chi(const std::string& path, const std::string& of, Io& io) {
  const auto k = load(path, io);
  const int m = k.ground_size();
  json j{{"of", of}};
  if (of == "bier") {
    const auto b = bier(k);
    const auto r = coloring::chromatic_number(b.complex);
    const auto bounds = coloring::chi_bier_bounds(k);
    j["chi"] = r.chi;
    j["coloring"] = coloring_json(r.coloring, m);
    j["bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
  } else {
    const auto target = of == "dual" ? alexander_dual(k) : k;
    if (target.vertices().empty()) {
      j["chi"] = 0;
      j["coloring"] = json::object();
    } else {
      const auto r = coloring::chromatic_number(target);
      j["chi"] = r.chi;
      j["coloring"] = coloring_json(r.coloring, of == "dual" ? 0 : m);
    }
  }
  emit(io, j);
  return kOk;
}

int cmd_buchstaber(const std::string& path, int p, bool oracle, std::int64_t budget, Io& io) {
  if (p != 0 && !buchstaber::is_prime(p)) throw Error(ErrorCode::kInvalidInput, "--p must be 0 or a prime");
  const auto k = load(path, io);
  const auto b = bier(k);
  const auto r = buchstaber::buchstaber_of_bier(k, p);
  json j{{"modulus", p},
         {"value", r.value},
         {"formula", buchstaber::buchstaber_formula(k)},
         {"upper_bound", r.upper_bound},
         {"certificate", char_map_json(r.certificate, b.m)}};
  if (oracle) {
    buchstaber::OracleOptions options;
    options.budget = budget;
    const int q = p == 0 ? 2 : p;
    const auto o = buchstaber::s_p_oracle(b.complex, q, options);
    json oj{{"p", q}, {"nodes", o.nodes}};
    if (o.status == buchstaber::OracleStatus::kExact) {
      oj["status"] = "EXACT";
      oj["value"] = o.value;
      oj["refuted_ranks"] = o.refuted_ranks;
      oj["certificate"] = char_map_json(o.certificate, b.m);
      oj["agrees"] = o.value == r.value;
    } else {
      oj["status"] = "SKIPPED";
    }
    j["oracle"] = oj;
  }
  emit(io, j);
  return kOk;
}

int cmd_chordal(const std::string& path, const std::string& realize, const std::string& format, Io& io) {
  check_format(format, {"json", "off"});
  const auto k = load(path, io);
  const auto c = chordal::classify_chordal_bier(k);
  if (format == "off" || !realize.empty()) {
    if (!c.chordal) throw Error(ErrorCode::kNotChordalBier, "Bier(K) is not chordal; nothing to realize");
    const auto r = chordal::realize_stacked(k);
    const auto off = chordal::to_off(r);
    if (!realize.empty()) write_file(realize, off);
    if (format == "off") {
      io.out << off;
      return kOk;
    }
  }
  emit(io, chordal_json(c, k.ground_size()));
  return kOk;
}

int cmd_classify(const std::string& path, Io& io) {
  const auto k = load(path, io);
  const int m = k.ground_size();
  const auto b = bier(k);
  const auto chi = coloring::chromatic_number(b.complex);
  const auto bounds = coloring::chi_bier_bounds(k);
  const auto type = coloring::recognize_min_chromatic_type(b);
  const auto s = coloring::suspension_structure(b);
  json chromatic{{"chi", chi.chi},
                 {"lower", bounds.lower},
                 {"upper", bounds.upper},
                 {"type", coloring::to_string(type.type)},
                 {"suspension", coloring::to_string(s.kind)}};
  if (m >= 3 && m <= 8) {
    const auto mc = coloring::min_colorable_classifier(k);
    chromatic["min_colorable"] = mc.min_colorable;
    chromatic["trace"] = mc.trace;
  }
  const auto f = f_vector(k);
  emit(io, {{"m", m},
            {"f0_bier", b.complex.vertices().size()},
            {"chromatic", chromatic},
            {"chordal", chordal_json(chordal::classify_chordal_bier(k), m)},
            {"buchstaber",
             {{"value", buchstaber::buchstaber_formula(k)}, {"f0", f.at(0)}, {"f_m_minus_2", f.at(m - 2)}}}});
  return kOk;
}

int cmd_fixtures(const std::string& fixture, int m, int k, Io& io) {
  auto need_m = [&] {
    if (m <= 0) throw Error(ErrorCode::kBadM, "--m is required for " + fixture);
  };
  SimplicialComplex out = SimplicialComplex::void_complex(1);
  if (fixture.starts_with("gamma") || fixture == "g4") {
    if (m > 0 && m != 3) throw Error(ErrorCode::kBadM, fixture + " lives on [3]");
    if (fixture == "gamma3") out = fixtures::gamma3();
    else if (fixture == "gamma4") out = fixtures::gamma4();
    else if (fixture == "g4") out = fixtures::g4();
    else if (fixture == "gamma5") out = fixtures::gamma5();
    else if (fixture == "gamma6") out = fixtures::gamma6();
    else throw Error(ErrorCode::kInvalidInput, "unknown fixture " + fixture);
  } else if (fixture == "km") {
    need_m();
    out = fixtures::km(m);
  } else if (fixture == "skeleton" || fixture == "simplex") {
    need_m();
    if (k < 0) throw Error(ErrorCode::kBadM, "--k is required for " + fixture);
    out = fixture == "skeleton" ? fixtures::skeleton(m, k) : fixtures::simplex(m, k);
  } else {
    throw Error(ErrorCode::kInvalidInput, "unknown fixture " + fixture);
  }
  emit(io, io::to_json(out));
  return kOk;
}

int cmd_verify(int m, const std::string& theorem, const verify::VerifyOptions& options, const std::string& report_path,
               bool timing, Io& io) {
  std::vector<verify::TheoremId> ids;
  if (theorem == "all") {
    ids = verify::all_theorems();
  } else if (auto id = verify::parse_theorem(theorem)) {
    ids.push_back(*id);
  } else {
    throw Error(ErrorCode::kInvalidInput, "unknown theorem '" + theorem + "'");
  }
  json reports = json::array();
  int code = kOk;
  for (auto id : ids) {
    const auto r = verify::verify_theorem(id, m, options);
    reports.push_back(verify::to_json(r, timing));
    if (r.status == verify::Status::kFail) code = kViolation;
    if (r.status == verify::Status::kSkipped && code == kOk) code = kInconclusive;
  }
  const json j = ids.size() == 1 ? reports.front() : reports;
  if (!report_path.empty()) write_file(report_path, j.dump(2) + "\n");
  emit(io, j);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Bier spheres: construction, classification and exhaustive verification", "bier"};
  app.require_subcommand(1);

  std::string path = "-";
  std::string format = "json";
  auto input = [&](CLI::App* sub) { sub->add_option("file", path, "complex JSON, '-' for stdin"); };
  auto formats = [&](CLI::App* sub, const std::string& allowed) {
    sub->add_option("--format", format, "output format: " + allowed);
  };

  auto* dual = app.add_subcommand("dual", "Alexander dual");
  input(dual);
  formats(dual, "json|dot");

  auto* build = app.add_subcommand("build", "Bier sphere");
  input(build);
  formats(build, "json|dot");

  std::string of = "k";
  auto* fv = app.add_subcommand("fvector", "f-vector (f_-1 first)");
  input(fv);
  fv->add_option("--of", of, "k|dual|bier")->check(CLI::IsMember({"k", "dual", "bier"}));

  std::string chi_of = "bier";
  auto* chi = app.add_subcommand("chi", "chromatic number with a witness coloring");
  input(chi);
  chi->add_option("--of", chi_of, "k|dual|bier")->check(CLI::IsMember({"k", "dual", "bier"}));

  int p = 0;
  bool oracle = false;
  std::int64_t budget = 100'000'000;
  auto* buch = app.add_subcommand("buchstaber", "Buchstaber number of the Bier sphere");
  input(buch);
  buch->add_option("--p", p, "0 for integers, or a prime");
  buch->add_flag("--oracle", oracle, "also run the exhaustive mod-p search (p in {2,3})");
  buch->add_option("--budget", budget, "oracle nodes per top-level branch");

  std::string realize;
  auto* chord = app.add_subcommand("chordal", "chordality of the Bier sphere");
  input(chord);
  chord->add_option("--realize", realize, "write the stacked realization to this file");
  formats(chord, "json|off");

  auto* classify = app.add_subcommand("classify", "chromatic, chordal and Buchstaber summary");
  input(classify);

  std::string fixture;
  int fm = 0;
  int fk = -1;
  auto* fix = app.add_subcommand("fixtures", "named complexes");
  fix->add_option("--name", fixture, "gamma3|gamma4|g4|gamma5|gamma6|km|skeleton|simplex")->required();
  fix->add_option("--m", fm, "ground set size");
  fix->add_option("--k", fk, "skeleton dimension or simplex size");

  int vm = 0;
  std::string theorem;
  std::string report_path;
  bool timing = false;
  verify::VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "exhaustive theorem check over all complexes on [m]");
  ver->add_option("--m", vm, "ground set size (2..6)")->required();
  ver->add_option("--theorem", theorem, "sphere|chromatic|buchstaber|chordal|symmetry|suspension|all")->required();
  ver->add_flag("--up-to-iso", vo.up_to_iso, "check one complex per isomorphism class");
  ver->add_option("--jobs", vo.jobs, "worker threads");
  ver->add_option("--sample", vo.sample, "seeded subsample size");
  ver->add_option("--seed", vo.seed, "subsample seed");
  ver->add_flag("--full", vo.full, "at m=6, check every complex instead of a sample");
  ver->add_flag("--oracle", vo.oracle, "buchstaber: run the mod-p oracle");
  ver->add_option("--p", vo.p, "oracle prime");
  ver->add_option("--budget", vo.budget, "oracle nodes per top-level branch");
  ver->add_option("--report", report_path, "also write the report here");
  ver->add_flag("--timing", timing, "include wall time in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*dual) return cmd_dual(path, format, io);
    if (*build) return cmd_build(path, format, io);
    if (*fv) return cmd_fvector(path, of, io);
    if (*chi) return cmd_chi(path, chi_of, io);
    if (*buch) return cmd_buchstaber(path, p, oracle, budget, io);
    if (*chord) return cmd_chordal(path, realize, format, io);
    if (*classify) return cmd_classify(path, io);
    if (*fix) return cmd_fixtures(fixture, fm, fk, io);
    if (*ver) return cmd_verify(vm, theorem, vo, report_path, timing, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bier::cli
