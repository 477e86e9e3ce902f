#include "linkalg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "linkalg/errors.hpp"
#include "linkalg/gb_engine.hpp"
#include "linkalg/invariants.hpp"
#include "linkalg/linkage.hpp"
#include "linkalg/stanley_reisner.hpp"
#include "linkalg/theorem_lab.hpp"

namespace linkalg::cli {

namespace {

MonomialIdeal need_monomial(const Ideal& I, const std::string& what) {
  auto m = I.as_monomial();
  if (!m) throw InputError(what + " must be a monomial ideal");
  return *m;
}

Ideal parse_ideal(const std::string& text, const RingPtr& R) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty() || t == "0") return Ideal::zero(R);
  return Ideal::parse(text, R);
}

CyclicModule parse_module(const std::string& text, const RingPtr& R) {
  return CyclicModule(parse_ideal(text, R));
}

MonomialPrime parse_prime(const std::string& text, const RingPtr& R) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty() || tok == "0") continue;
    int i = R->index_of(tok);
    if (i < 0) throw InputError("unknown variable '" + tok + "' in prime");
    idx.push_back(static_cast<std::size_t>(i));
  }
  return MonomialPrime::from_indices(R->nvars(), idx);
}

// -- operations shared by the subcommands and session tasks --

Json op_gb(const Ideal& I) { return {{"gb", I.gb_strings()}, {"monomial", I.is_monomial()}}; }

Json op_decompose(const Ideal& I) {
  auto a = need_monomial(I, "ideal");
  Json comps = Json::array();
  if (!a.is_zero() && !a.is_unit())
    for (const auto& q : irreducible_decomposition(a)) comps.push_back(q.gen_strings(*I.ring()));
  return {{"components", comps}};
}

Json op_ass(const Ideal& I) { return {{"ass", primes_json(associated_primes(need_monomial(I, "ideal")), *I.ring())}}; }
Json op_minprimes(const Ideal& I) {
  return {{"min_primes", primes_json(minimal_primes(need_monomial(I, "ideal")), *I.ring())}};
}
Json op_radical(const Ideal& I) {
  return {{"radical", ideal_json(Ideal::from_monomial(mono_radical(need_monomial(I, "ideal")), I.ring()))}};
}
Json op_dim(const Ideal& I) {
  CyclicModule M(I);
  const int d = M.dim();
  return {{"dim", d}, {"height", static_cast<int>(I.ring()->nvars()) - d}};
}
Json op_cd(const Ideal& I, const std::string& prime) {
  auto a = need_monomial(I, "ideal");
  if (prime.empty()) return {{"cd", cd_squarefree(a)}, {"radicalized", !a.is_squarefree()}};
  auto r = cd_on_quotient(a, parse_prime(prime, I.ring()));
  return {{"cd", r.cd}, {"unit_image", r.unit_image}, {"zero_image", r.zero_image}};
}
Json op_colon(const Ideal& I, const Ideal& J) { return {{"colon", ideal_json(ideal_quotient(I, J))}}; }
Json op_intersect(const Ideal& I, const Ideal& J) { return {{"intersection", ideal_json(ideal_intersect(I, J))}}; }

Json op_depth(const CyclicModule& M) {
  return {{"depth", M.depth()}, {"dim", M.dim()}, {"cm", M.is_cohen_macaulay()}};
}
Json op_cm(const CyclicModule& M) { return {{"cm", M.is_cohen_macaulay()}}; }
Json op_assh(const CyclicModule& M) { return {{"assh", primes_json(assh(M), *M.ring())}}; }
Json op_equidim(const CyclicModule& M) { return {{"equidimensional", is_equidimensional(M)}}; }
Json op_grade(const Ideal& a, const CyclicModule& M) { return {{"grade", koszul_grade(a, M)}}; }

Json op_att(const Ideal& a, const CyclicModule& M, bool via_cd) {
  PrimeSet s;
  if (via_cd)
    s = att_top_H_via_cd(need_monomial(a, "a"), M);
  else if (auto m = a.as_monomial())
    s = att_top_H(*m, M);
  else
    s = att_top_H(a, M);
  return {{"n", M.dim()}, {"att", primes_json(s, *M.ring())}};
}
Json op_assf0(const Ideal& a, const CyclicModule& M) {
  return {{"ass_f0", primes_json(ass_F0(need_monomial(a, "a"), M), *M.ring())}};
}

Json module_json(const FPModule& N) {
  Json rel = Json::array();
  for (const auto& r : N.relations()) rel.push_back(element_to_string(r));
  return {{"rank", N.rank()}, {"relations", rel}, {"base", ideal_json(N.base())}};
}

Json op_ext1(const Ideal& a, const CyclicModule& M) {
  if (M.is_free()) throw PreconditionError("ext1 needs a zerodivisor base: J must be nonzero");
  FPModule E = ext1_selfdual(a, M.J());
  const bool zero = E.is_zero();
  Json j{{"zero", zero}};
  j["ass"] = zero ? Json::array() : primes_json(ass_monomial(E), *M.ring());
  j["presentation"] = module_json(E);
  return j;
}

Json op_check(const Ideal& a, const Ideal& b, const Ideal& I, const CyclicModule& M) {
  return check_linked(a, b, I, M).to_json();
}
Json op_link_of(const Ideal& a, const Ideal& I, const CyclicModule& M) {
  auto l = link_of(a, I, M);
  return {{"b", ideal_json(l.b)}, {"closes", l.closes}, {"certificate", l.certificate.to_json()}};
}

FPModule target_module(const CyclicModule& M, const std::string& hom, const std::string& ext) {
  if (!hom.empty() && !ext.empty()) throw InputError("--hom and --ext are exclusive");
  if (!hom.empty()) return hom_cyclic(parse_ideal(hom, M.ring()), FPModule::cyclic(M.J()));
  if (!ext.empty()) return ext1_selfdual(parse_ideal(ext, M.ring()), M.J());
  return FPModule::cyclic(M.J());
}

struct Args {
  std::string ring, ideal, module, a, b, I, poly, by, with, vars, prime, seq, hom, ext, target, file;
  std::uint64_t max_spairs = 0, timeout_soft = 0, seed = 1;
  std::size_t jobs = 1, count = 10, random = 20, nvars = 3;
  unsigned maxdeg = 2;
  int max_length = -1;
  bool all_permutations = false, via_cd = false, details = false, emit = false, lex = false;
};

std::string summary_line(const std::string& command, const Json& j) {
  std::string s = command;
  int shown = 0;
  for (const auto& [k, v] : j.items()) {
    if (k == "schema_version" || k == "command" || shown == 4) continue;
    if (v.is_number() || v.is_boolean()) {
      s += " " + k + "=" + v.dump();
      ++shown;
    }
  }
  return s;
}

}  // namespace

// -- sessions --

namespace {

const std::regex kIdent("[A-Za-z_][A-Za-z0-9_']*");

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> words_of(const std::string& s) {
  std::vector<std::string> w;
  std::stringstream ss(s);
  for (std::string t; ss >> t;) w.push_back(t);
  return w;
}

struct TaskShape {
  std::size_t ideals = 0;
  bool module_arg = false;  // takes a module name instead of ideals
  bool over = false;        // accepts "over M"
  bool over_required = false;
};

const std::map<std::string, TaskShape>& task_shapes() {
  static const std::map<std::string, TaskShape> shapes{
      {"gb", {1}},
      {"ass", {1}},
      {"minprimes", {1}},
      {"decompose", {1}},
      {"radical", {1}},
      {"dim", {1}},
      {"cd", {1}},
      {"colon", {2}},
      {"intersect", {2}},
      {"depth", {0, true}},
      {"cm", {0, true}},
      {"equidim", {0, true}},
      {"assh", {0, true}},
      {"grade", {1, false, true}},
      {"att-top", {1, false, true}},
      {"assf0", {1, false, true}},
      {"ext1", {1, false, true, true}},
      {"linkage check", {3, false, true}},
      {"linkage link-of", {2, false, true}},
  };
  return shapes;
}

std::string line_error(int line, const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; }

}  // namespace

SessionFile parse_session_text(const std::string& text) {
  SessionFile s;
  std::map<std::string, char> names;  // 'i' ideal, 'm' module
  RingPtr R;
  std::stringstream in(text);
  int line = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line;
    std::string l = trim(raw.substr(0, raw.find('#')));
    if (l.empty()) continue;
    const auto sp = l.find_first_of(" \t");
    const std::string head = l.substr(0, sp), rest = sp == std::string::npos ? "" : trim(l.substr(sp));
    auto fail = [&](const std::string& msg) { throw InputError(line_error(line, msg)); };
    if (head == "ring") {
      if (R) fail("ring declared twice");
      try {
        R = Ring::from_list(rest);
      } catch (const std::exception& e) {
        fail(e.what());
      }
      s.vars = R->names();
      continue;
    }
    if (!R) fail("'" + head + "' before the ring declaration");
    if (head == "ideal" || head == "module") {
      const auto eq = rest.find('=');
      if (eq == std::string::npos) fail("expected '" + head + " NAME = ...'");
      const std::string name = trim(rest.substr(0, eq)), body = trim(rest.substr(eq + 1));
      if (!std::regex_match(name, kIdent) || name == "R") fail("bad name '" + name + "'");
      if (names.count(name)) fail("name '" + name + "' already defined");
      if (head == "ideal") {
        Ideal I;
        try {
          I = parse_ideal(body, R);
        } catch (const std::exception& e) {
          fail(e.what());
        }
        std::string canon;
        for (std::size_t k = 0; k < I.gens().size(); ++k) canon += (k ? ", " : "") + I.gens()[k].to_string();
        s.ideals.emplace_back(name, canon.empty() ? "0" : canon);
        names[name] = 'i';
      } else {
        auto w = words_of(body);
        std::string ref;
        if (w.size() == 3 && w[0] == "R" && w[1] == "/") ref = w[2];
        else if (!(w.size() == 1 && w[0] == "R")) fail("expected 'module NAME = R / IDEAL' or 'module NAME = R'");
        if (!ref.empty() && names[ref] != 'i') fail("unknown ideal '" + ref + "'");
        s.modules.emplace_back(name, ref);
        names[name] = 'm';
      }
      continue;
    }
    if (head == "task") {
      auto w = words_of(rest);
      if (w.empty()) fail("empty task");
      std::string key = w[0];
      std::size_t first = 1;
      if (key == "linkage" && w.size() > 1) {
        key += " " + w[1];
        first = 2;
      }
      auto it = task_shapes().find(key);
      if (it == task_shapes().end()) fail("unknown task '" + key + "'");
      const auto& shape = it->second;
      std::vector<std::string> args(w.begin() + static_cast<std::ptrdiff_t>(first), w.end());
      std::string over;
      if (args.size() >= 2 && args[args.size() - 2] == "over") {
        if (!shape.over) fail("task '" + key + "' takes no 'over' clause");
        over = args.back();
        args.resize(args.size() - 2);
      }
      if (shape.over_required && over.empty()) fail("task '" + key + "' needs 'over MODULE'");
      const std::size_t want = shape.module_arg ? 1 : shape.ideals;
      if (args.size() != want) fail("task '" + key + "' takes " + std::to_string(want) + " argument(s)");
      for (const auto& a : args) {
        const char need = shape.module_arg ? 'm' : 'i';
        auto f = names.find(a);
        if (f == names.end() || f->second != need)
          fail(std::string("unknown ") + (need == 'm' ? "module" : "ideal") + " '" + a + "'");
      }
      if (!over.empty()) {
        auto f = names.find(over);
        if (f == names.end() || f->second != 'm') fail("unknown module '" + over + "'");
      }
      s.tasks.push_back({line, w});
      continue;
    }
    fail("unknown statement '" + head + "'");
  }
  if (!R) throw InputError("session has no ring declaration");
  return s;
}

SessionFile parse_session(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read session file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_session_text(ss.str());
}

std::string emit_session(const SessionFile& s) {
  std::string out = "ring ";
  for (std::size_t i = 0; i < s.vars.size(); ++i) out += (i ? ", " : "") + s.vars[i];
  out += "\n";
  for (const auto& [name, gens] : s.ideals) out += "ideal " + name + " = " + gens + "\n";
  for (const auto& [name, ref] : s.modules) out += "module " + name + " = R" + (ref.empty() ? "" : " / " + ref) + "\n";
  for (const auto& t : s.tasks) {
    out += "task";
    for (const auto& w : t.words) out += " " + w;
    out += "\n";
  }
  return out;
}

Json run_session(const SessionFile& s) {
  auto R = Ring::make(s.vars);
  std::map<std::string, Ideal> ideals;
  std::map<std::string, CyclicModule> modules;
  for (const auto& [name, gens] : s.ideals) ideals.emplace(name, parse_ideal(gens, R));
  for (const auto& [name, ref] : s.modules)
    modules.emplace(name, ref.empty() ? CyclicModule::free(R) : CyclicModule(ideals.at(ref)));
  Json results = Json::array();
  for (const auto& t : s.tasks) {
    std::vector<std::string> w = t.words;
    std::string key = w[0];
    std::size_t first = 1;
    if (key == "linkage") {
      key += " " + w[1];
      first = 2;
    }
    std::vector<std::string> args(w.begin() + static_cast<std::ptrdiff_t>(first), w.end());
    CyclicModule over = CyclicModule::free(R);
    if (args.size() >= 2 && args[args.size() - 2] == "over") {
      over = modules.at(args.back());
      args.resize(args.size() - 2);
    }
    auto id = [&](std::size_t k) { return ideals.at(args[k]); };
    Json r;
    try {
      if (key == "gb") r = op_gb(id(0));
      else if (key == "ass") r = op_ass(id(0));
      else if (key == "minprimes") r = op_minprimes(id(0));
      else if (key == "decompose") r = op_decompose(id(0));
      else if (key == "radical") r = op_radical(id(0));
      else if (key == "dim") r = op_dim(id(0));
      else if (key == "cd") r = op_cd(id(0), "");
      else if (key == "colon") r = op_colon(id(0), id(1));
      else if (key == "intersect") r = op_intersect(id(0), id(1));
      else if (key == "depth") r = op_depth(modules.at(args[0]));
      else if (key == "cm") r = op_cm(modules.at(args[0]));
      else if (key == "equidim") r = op_equidim(modules.at(args[0]));
      else if (key == "assh") r = op_assh(modules.at(args[0]));
      else if (key == "grade") r = op_grade(id(0), over);
      else if (key == "att-top") r = op_att(id(0), over, false);
      else if (key == "assf0") r = op_assf0(id(0), over);
      else if (key == "ext1") r = op_ext1(id(0), over);
      else if (key == "linkage check") r = op_check(id(0), id(1), id(2), over);
      else if (key == "linkage link-of") r = op_link_of(id(0), id(1), over);
    } catch (const PreconditionError& e) {
      r = {{"error", {{"kind", "precondition"}, {"message", e.what()}}}};
    } catch (const InputError& e) {
      r = {{"error", {{"kind", "input"}, {"message", e.what()}}}};
    }
    std::string text;
    for (std::size_t k = 0; k < w.size(); ++k) text += (k ? " " : "") + w[k];
    results.push_back({{"line", t.line}, {"task", text}, {"result", r}});
  }
  return {{"ring", s.vars}, {"results", results}};
}

// -- argv front end --

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Args A;
  CLI::App app{"Linkage, local cohomology invariants and Cohen-Macaulay tests over Q[x1..xn]", "linkalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", A.ring, "comma-separated variable list");
  app.add_option("--max-spairs", A.max_spairs, "S-pair budget per Groebner computation");
  app.add_option("--timeout-soft", A.timeout_soft, "soft wall-clock limit in milliseconds");
  app.add_option("--jobs", A.jobs, "worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--seed", A.seed, "random seed");

  auto sub = [&](const std::string& name, const std::string& desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };
  auto ideal_opt = [&](CLI::App* s) { s->add_option("--ideal", A.ideal, "ideal generators")->required(); };
  auto module_opt = [&](CLI::App* s) { s->add_option("--module", A.module, "defining ideal J of M = R/J (default 0)"); };

  auto* gbc = sub("gb", "reduced Groebner basis");
  ideal_opt(gbc);
  gbc->add_flag("--lex", A.lex, "lexicographic order instead of degrevlex");
  auto* member = sub("member", "ideal membership");
  ideal_opt(member);
  member->add_option("--poly", A.poly, "polynomial")->required();
  auto* colon = sub("colon", "ideal quotient I : J");
  ideal_opt(colon);
  colon->add_option("--by", A.by, "divisor ideal")->required();
  auto* inter = sub("intersect", "intersection of two ideals");
  ideal_opt(inter);
  inter->add_option("--with", A.with, "second ideal")->required();
  auto* sat = sub("saturate", "saturation I : f^inf");
  ideal_opt(sat);
  sat->add_option("--by", A.by, "polynomial")->required();
  auto* elim = sub("eliminate", "elimination ideal");
  ideal_opt(elim);
  elim->add_option("--vars", A.vars, "variables to eliminate")->required();
  auto* decompose = sub("decompose", "irreducible decomposition of a monomial ideal");
  ideal_opt(decompose);
  auto* ass_c = sub("ass", "associated primes of R/I (monomial I)");
  ideal_opt(ass_c);
  auto* minp = sub("minprimes", "minimal primes of R/I (monomial I)");
  ideal_opt(minp);
  auto* assh_c = sub("assh", "Assh of M = R/J (monomial J)");
  module_opt(assh_c);
  auto* rad = sub("radical", "radical of a monomial ideal");
  ideal_opt(rad);
  auto* dim = sub("dim", "Krull dimension and height");
  ideal_opt(dim);
  auto* depth = sub("depth", "depth, dimension and CM status of R/I");
  ideal_opt(depth);
  auto* cm = sub("cm", "Cohen-Macaulay test for R/I");
  ideal_opt(cm);
  auto* cd = sub("cd", "cohomological dimension of a monomial ideal");
  ideal_opt(cd);
  cd->add_option("--prime", A.prime, "compute cd(a, R/p) instead");
  auto* grade = sub("grade", "grade of a on M via Koszul homology");
  grade->add_option("--a", A.a, "ideal a")->required();
  module_opt(grade);
  auto* regseq = sub("regseq", "regular sequence test on M");
  regseq->add_option("--seq", A.seq, "comma-separated sequence")->required();
  module_opt(regseq);
  regseq->add_flag("--all-permutations", A.all_permutations, "also test every reordering");
  auto* ann = sub("ann", "annihilator of M or of Hom(R/a, M)");
  module_opt(ann);
  ann->add_option("--hom", A.hom, "use Hom(R/hom, M)");
  ann->add_option("--ext", A.ext, "use Ext^1(R'/ext, R'/ext) with R' = M");
  auto* assm = sub("assmember", "p in Ass N for N = M, Hom(R/a, M) or Ext^1");
  assm->add_option("--prime", A.prime, "monomial prime as a variable list")->required();
  module_opt(assm);
  assm->add_option("--hom", A.hom, "use Hom(R/hom, M)");
  assm->add_option("--ext", A.ext, "use Ext^1(R'/ext, R'/ext) with R' = M");
  auto* ext1 = sub("ext1", "Ext^1(R'/a, R'/a) over R' = R/J through Hom(a, R'/a)");
  ext1->add_option("--a", A.a, "ideal a")->required();
  ext1->add_option("--module", A.module, "defining ideal J of R'")->required();

  auto* linkage = sub("linkage", "linkage of ideals over M = R/J");
  linkage->require_subcommand(1);
  auto* lcheck = linkage->add_subcommand("check", "certify a ~ b by I over M");
  lcheck->fallthrough();
  lcheck->add_option("--a", A.a)->required();
  lcheck->add_option("--b", A.b)->required();
  lcheck->add_option("--I", A.I)->required();
  module_opt(lcheck);
  auto* lof = linkage->add_subcommand("link-of", "b = IM :_M a with its certificate");
  lof->fallthrough();
  lof->add_option("--a", A.a)->required();
  lof->add_option("--I", A.I)->required();
  module_opt(lof);
  auto* lrand = linkage->add_subcommand("random", "seeded random linked pairs");
  lrand->fallthrough();
  module_opt(lrand);
  lrand->add_option("--count", A.count, "number of certificates");
  lrand->add_option("--maxdeg", A.maxdeg, "maximum generator degree");
  lrand->add_option("--max-length", A.max_length, "maximum length of I (default dim M)");

  auto* att = sub("att-top", "Att H^n_a(M), n = dim M");
  att->add_option("--a", A.a)->required();
  module_opt(att);
  att->add_flag("--via-cd", A.via_cd, "use the cohomological-dimension formula (squarefree a)");
  auto* assf0 = sub("assf0", "Ass F^0_a(M)");
  assf0->add_option("--a", A.a)->required();
  module_opt(assf0);
  auto* htm = sub("htm", "ht_M p = dim M_p");
  htm->add_option("--prime", A.prime)->required();
  module_opt(htm);
  auto* equidim = sub("equidim", "equidimensionality of M");
  module_opt(equidim);

  auto* verify = sub("verify", "randomized theorem checks");
  verify->add_option("target", A.target, "claim to check")->required()->check(CLI::IsMember(verify_targets()));
  verify->add_option("--random", A.random, "number of instances");
  verify->add_option("--vars", A.nvars, "number of variables");
  verify->add_option("--maxdeg", A.maxdeg, "maximum degree");
  module_opt(verify);
  verify->add_flag("--details", A.details, "include every verdict");

  auto* session = sub("session", "run a session file");
  session->add_option("file", A.file, "session file")->required();
  session->add_flag("--emit", A.emit, "print the canonical session text instead of running it");

  std::string command = "linkalg";
  auto emit_error = [&](int code, const std::string& kind, const std::string& msg) {
    Json j{{"schema_version", kSchemaVersion}, {"command", command}, {"error", {{"kind", kind}, {"message", msg}}}};
    out << j.dump(2) << "\n";
    err << "linkalg: " << msg << "\n";
    return code;
  };

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error(1, "usage", e.what());
  }

  for (auto* s : app.get_subcommands()) {
    command = s->get_name();
    for (auto* t : s->get_subcommands()) command += " " + t->get_name();
  }

  gb::set_default_spair_budget(A.max_spairs ? A.max_spairs : 100000);
  gb::set_soft_timeout(A.timeout_soft);
  struct ClearTimeout {
    ~ClearTimeout() { gb::set_soft_timeout(0); }
  } clear_timeout;

  try {
    Json body;
    RingPtr ring;
    auto R = [&] {
      if (A.ring.empty()) throw InputError("--ring is required");
      if (!ring) ring = Ring::from_list(A.ring, A.lex ? MonomialOrder::lex() : MonomialOrder::degrevlex());
      return ring;
    };
    auto ideal = [&](const std::string& t) { return parse_ideal(t, R()); };
    auto module = [&] { return parse_module(A.module, R()); };

    if (*gbc) body = op_gb(ideal(A.ideal));
    else if (*member) {
      auto I = ideal(A.ideal);
      auto f = parse_poly(A.poly, I.ring());
      body = {{"member", I.contains(f)}, {"normal_form", I.normal_form(f).to_string()}};
    } else if (*colon) body = op_colon(ideal(A.ideal), ideal(A.by));
    else if (*inter) body = op_intersect(ideal(A.ideal), ideal(A.with));
    else if (*sat) {
      auto I = ideal(A.ideal);
      body = {{"saturation", ideal_json(saturate(I, parse_poly(A.by, I.ring())))}};
    } else if (*elim) {
      auto I = ideal(A.ideal);
      std::vector<std::size_t> drop;
      for (const auto& p : parse_prime(A.vars, I.ring()).indices()) drop.push_back(p);
      auto E = eliminate(I, drop);
      body = {{"ring", E.ring()->names()}, {"elimination", ideal_json(E)}};
    } else if (*decompose) body = op_decompose(ideal(A.ideal));
    else if (*ass_c) body = op_ass(ideal(A.ideal));
    else if (*minp) body = op_minprimes(ideal(A.ideal));
    else if (*assh_c) body = op_assh(module());
    else if (*rad) body = op_radical(ideal(A.ideal));
    else if (*dim) body = op_dim(ideal(A.ideal));
    else if (*depth) body = op_depth(CyclicModule(ideal(A.ideal)));
    else if (*cm) body = op_cm(CyclicModule(ideal(A.ideal)));
    else if (*cd) body = op_cd(ideal(A.ideal), A.prime);
    else if (*grade) body = op_grade(ideal(A.a), module());
    else if (*regseq) {
      auto M = module();
      auto seq = parse_poly_list(A.seq, M.ring());
      auto r = is_regular_sequence(seq, M, A.all_permutations);
      Json steps = Json::array();
      for (const auto& s : r.steps) steps.push_back({{"element", s.element}, {"nonzerodivisor", s.nonzerodivisor}});
      body = {{"regular", r.regular}, {"failing_step", r.failing_step}, {"proper", r.proper}, {"steps", steps}};
      if (r.permutation_consistent) body["permutation_consistent"] = *r.permutation_consistent;
    } else if (*ann) {
      auto M = module();
      body = {{"annihilator", ideal_json(annihilator(target_module(M, A.hom, A.ext)))}};
    } else if (*assm) {
      auto M = module();
      body = {{"member", ass_member(parse_prime(A.prime, M.ring()), target_module(M, A.hom, A.ext))}};
    } else if (*ext1) {
      auto M = module();
      body = op_ext1(parse_ideal(A.a, M.ring()), M);
    } else if (*lcheck) {
      auto M = module();
      body = op_check(parse_ideal(A.a, M.ring()), parse_ideal(A.b, M.ring()), parse_ideal(A.I, M.ring()), M);
    } else if (*lof) {
      auto M = module();
      body = op_link_of(parse_ideal(A.a, M.ring()), parse_ideal(A.I, M.ring()), M);
    } else if (*lrand) {
      auto M = module();
      LinkParams p;
      p.count = A.count;
      p.maxdeg = A.maxdeg;
      p.seed = A.seed;
      p.max_length = A.max_length;
      auto s = random_linked_pairs(M, p);
      Json certs = Json::array();
      for (const auto& c : s.certificates) certs.push_back(c.to_json());
      body = {{"certificates", certs}, {"attempts", s.attempts}, {"budget_rejections", s.budget_rejections}};
    } else if (*att) {
      auto M = module();
      body = op_att(parse_ideal(A.a, M.ring()), M, A.via_cd);
    } else if (*assf0) {
      auto M = module();
      body = op_assf0(parse_ideal(A.a, M.ring()), M);
    } else if (*htm) {
      auto M = module();
      body = {{"ht", ht_M(parse_prime(A.prime, M.ring()), M)}};
    } else if (*equidim) body = op_equidim(module());
    else if (*verify) {
      InstanceParams p;
      p.vars = A.nvars;
      p.maxdeg = A.maxdeg;
      p.count = A.random;
      p.seed = A.seed;
      p.jobs = A.jobs;
      p.timeout_soft_ms = A.timeout_soft;
      p.details = A.details;
      if (!A.module.empty()) p.module = A.module;
      body = run_verify(A.target, p);
    } else if (*session) {
      auto s = parse_session(A.file);
      if (A.emit) {
        out << emit_session(s);
        return 0;
      }
      body = run_session(s);
    }

    Json j{{"schema_version", kSchemaVersion}, {"command", command}};
    for (const auto& [k, v] : body.items()) j[k] = v;
    out << j.dump(2) << "\n";
    err << summary_line(command, j) << "\n";
    return 0;
  } catch (const ResourceError& e) {
    return emit_error(2, "budget", e.what());
  } catch (const InputError& e) {
    return emit_error(1, "input", e.what());
  } catch (const PreconditionError& e) {
    return emit_error(1, "precondition", e.what());
  }
}

}  // namespace linkalg::cli
