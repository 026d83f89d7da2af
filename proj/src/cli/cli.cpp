#include "nomfix/cli.hpp"

#include <functional>
#include <sstream>

#include "nomfix/cunify.hpp"
#include "nomfix/fixpoint.hpp"
#include "nomfix/freshness.hpp"
#include "nomfix/oracle.hpp"
#include "nomfix/translate.hpp"
#include "nomfix/unify.hpp"

namespace nomfix::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<std::string, Command>>& command_table() {
  static const std::vector<std::pair<std::string, Command>> table = {
      {"alpha", Command::alpha},   {"fresh", Command::fresh},
      {"fixp", Command::fixp},     {"unify", Command::unify},
      {"cunify", Command::cunify}, {"translate", Command::translate},
      {"selfcheck", Command::selfcheck}};
  return table;
}

json to_json(const TraceNode& n) {
  json j;
  j["rule"] = n.rule;
  j["goal"] = n.goal;
  j["ok"] = n.ok;
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(to_json(c));
  j["children"] = std::move(kids);
  return j;
}

void trace_lines(const TraceNode& n, int depth, std::vector<std::string>& out) {
  out.push_back(std::string(2 * depth, ' ') + (n.ok ? "+ " : "- ") + "(" + n.rule + ") " + n.goal);
  for (const auto& c : n.children) trace_lines(c, depth + 1, out);
}

json context_json(const FixpointContext& ctx) {
  json arr = json::array();
  for (const auto& c : ctx.constraints()) {
    json e;
    e["perm"] = to_string(c.perm);
    e["var"] = c.var.name();
    arr.push_back(std::move(e));
  }
  return arr;
}

json subst_json(const Substitution& s) {
  json arr = json::array();
  for (const auto& [x, t] : s.bindings()) {
    json e;
    e["var"] = x.name();
    e["term"] = to_string(t);
    arr.push_back(std::move(e));
  }
  return arr;
}

json solution_json(const Solution& sol) {
  json j;
  j["context"] = context_json(sol.context);
  j["subst"] = subst_json(sol.subst);
  return j;
}

json witness_json(const Witness& w) {
  json j;
  j["kind"] = failure_name(w.kind);
  j["constraint"] = to_string(w.constraint);
  return j;
}

json step_json(const SimplStep& st) {
  json j;
  j["rule"] = st.rule;
  j["consumed"] = to_string(st.consumed);
  json produced = json::array();
  for (const auto& c : st.produced) produced.push_back(to_string(c));
  j["produced"] = std::move(produced);
  if (st.binding) {
    json b;
    b["var"] = st.binding->first.name();
    b["term"] = to_string(st.binding->second);
    j["binding"] = std::move(b);
  }
  return j;
}

std::string step_line(const SimplStep& st) {
  std::string out = "(" + st.rule + ") " + to_string(st.consumed);
  if (st.binding) {
    out += "  [" + st.binding->first.name() + " -> " + to_string(st.binding->second) + "]";
  } else {
    out += "  =>  {";
    for (std::size_t i = 0; i < st.produced.size(); ++i) {
      out += (i ? ", " : "") + to_string(st.produced[i]);
    }
    out += "}";
  }
  return out;
}

std::string status_name(DerivationTree::Status s) {
  switch (s) {
    case DerivationTree::Status::inner:
      return "inner";
    case DerivationTree::Status::success:
      return "success";
    case DerivationTree::Status::fail:
      return "fail";
  }
  return "inner";
}

json tree_json(const DerivationTree& t) {
  json j;
  j["problem"] = to_string(t.problem);
  if (!t.rule.empty()) j["rule"] = t.rule;
  if (t.binding) {
    json b;
    b["var"] = t.binding->first.name();
    b["term"] = to_string(t.binding->second);
    j["binding"] = std::move(b);
  }
  j["status"] = status_name(t.status);
  if (t.reason) j["reason"] = witness_json(*t.reason);
  json kids = json::array();
  for (const auto& c : t.children) kids.push_back(tree_json(c));
  j["children"] = std::move(kids);
  return j;
}

void tree_lines(const DerivationTree& t, int depth, std::vector<std::string>& out) {
  std::string line = std::string(2 * depth, ' ');
  if (!t.rule.empty()) line += "(" + t.rule + ") ";
  line += to_string(t.problem);
  if (t.status == DerivationTree::Status::success) line += "  success";
  if (t.status == DerivationTree::Status::fail && t.reason) {
    line += "  fail(" + failure_name(t.reason->kind) + ")";
  }
  out.push_back(line);
  for (const auto& c : t.children) tree_lines(c, depth + 1, out);
}

NameGenerator make_generator(const ProblemFile& file, const Flags& flags) {
  if (!valid_fresh_prefix(flags.fresh_prefix)) {
    throw InputError("invalid --fresh-prefix '" + flags.fresh_prefix +
                     "': expected '#' followed by letters");
  }
  NameGenerator gen(flags.fresh_prefix);
  for (const auto& c : file.fix_context.constraints()) avoid_atoms(gen, c.perm);
  for (const auto& c : file.fresh_context.constraints()) gen.avoid(c.atom);
  for (const auto& c : file.constraints) {
    avoid_atoms(gen, c.lhs);
    avoid_atoms(gen, c.perm);
    gen.avoid(c.atom);
    if (c.kind == ParsedConstraint::Kind::eq) avoid_atoms(gen, c.rhs);
  }
  return gen;
}

std::string where(const ParsedConstraint& c) {
  return std::to_string(c.line) + ":" + std::to_string(c.column);
}

// Fixed-point view of the file's context.
FixpointContext fix_context(const ProblemFile& file, NameGenerator& gen,
                            std::vector<std::string>& explain) {
  if (file.context_kind != ProblemFile::ContextKind::fresh) return file.fix_context;
  std::vector<TranslationRecord> record;
  FixpointContext ctx = fresh_to_fixp(file.fresh_context, gen, &record);
  for (const auto& r : record) {
    explain.push_back(r.source.atom.str() + " fresh " + r.source.var.name() + "  =>  " +
                      to_string(r.target.perm) + " fix " + r.target.var.name());
  }
  return ctx;
}

// a fresh? t  ~>  (a c) fix? t, (c c') fix? Y for Y in var(t)
std::vector<FixConstraint> fresh_constraint_to_fix(const ParsedConstraint& c, NameGenerator& gen,
                                                   std::vector<std::string>& explain) {
  const Atom c1 = gen.fresh();
  const Atom c2 = gen.fresh();
  std::vector<FixConstraint> out{{Permutation::swap(c.atom, c1), c.lhs}};
  for (const auto& y : free_vars(c.lhs)) out.push_back({Permutation::swap(c1, c2), Term::var(y)});
  std::string line = to_string(c) + "  =>  ";
  for (std::size_t i = 0; i < out.size(); ++i) {
    line += (i ? ", " : "") + to_string(Constraint(out[i]));
  }
  explain.push_back(line);
  return out;
}

Problem fix_problem(const ProblemFile& file, NameGenerator& gen, std::vector<std::string>& explain) {
  Problem pr;
  const FixpointContext ctx = fix_context(file, gen, explain);
  for (const auto& c : ctx.constraints()) {
    pr.constraints.emplace_back(FixConstraint{c.perm, Term::var(c.var)});
  }
  for (const auto& c : file.constraints) {
    switch (c.kind) {
      case ParsedConstraint::Kind::eq:
        pr.constraints.emplace_back(EqConstraint{c.lhs, c.rhs});
        break;
      case ParsedConstraint::Kind::fix:
        pr.constraints.emplace_back(FixConstraint{c.perm, c.lhs});
        break;
      case ParsedConstraint::Kind::fresh:
        for (auto& fx : fresh_constraint_to_fix(c, gen, explain)) pr.constraints.emplace_back(fx);
        break;
    }
  }
  return pr;
}

void add_explain(Report& r, const Flags& flags, const std::vector<std::string>& explain) {
  if (!flags.explain) return;
  json arr = json::array();
  for (const auto& e : explain) {
    arr.push_back(e);
    r.lines.push_back("translated: " + e);
  }
  r.body["translation"] = std::move(arr);
}

// alpha, fresh and fixp: one verdict per constraint; derivable iff all hold.
Report judgements(Command cmd, const ProblemFile& file, const Flags& flags) {
  Report r;
  r.command = cmd;
  NameGenerator gen = make_generator(file, flags);
  std::vector<std::string> explain;
  CheckOptions copts;
  copts.trace = flags.trace;

  const bool fresh_ctx = file.context_kind == ProblemFile::ContextKind::fresh;
  FreshnessContext delta = file.fresh_context;
  FixpointContext upsilon = file.fix_context;
  if (cmd == Command::fresh && !fresh_ctx) {
    delta = fixp_to_fresh(file.fix_context);
    for (const auto& c : delta.constraints()) {
      explain.push_back("context " + c.atom.str() + " fresh " + c.var.name());
    }
  }
  if (cmd == Command::fixp) upsilon = fix_context(file, gen, explain);

  json results = json::array();
  bool all = true;
  for (const auto& c : file.constraints) {
    Verdict v;
    switch (cmd) {
      case Command::alpha:
        if (c.kind != ParsedConstraint::Kind::eq) {
          throw InputError(where(c) + ": alpha expects '=?' constraints");
        }
        v = fresh_ctx ? check_alpha_fresh(file.signature, delta, c.lhs, c.rhs, copts)
                      : check_alpha_fixp(file.signature, upsilon, c.lhs, c.rhs, gen, copts);
        break;
      case Command::fresh:
        if (c.kind != ParsedConstraint::Kind::fresh) {
          throw InputError(where(c) + ": fresh expects 'fresh?' constraints");
        }
        v = check_fresh(delta, c.atom, c.lhs, copts);
        break;
      case Command::fixp:
        if (c.kind == ParsedConstraint::Kind::fix) {
          v = check_fixp(file.signature, upsilon, c.perm, c.lhs, gen, copts);
        } else if (c.kind == ParsedConstraint::Kind::fresh) {
          auto fixes = fresh_constraint_to_fix(c, gen, explain);
          FixpointContext ext = upsilon;
          for (std::size_t i = 1; i < fixes.size(); ++i) ext.add(fixes[i].perm, fixes[i].target.var());
          v = check_fixp(file.signature, ext, fixes[0].perm, fixes[0].target, gen, copts);
        } else {
          throw InputError(where(c) + ": fixp expects 'fix?' or 'fresh?' constraints");
        }
        break;
      default:
        break;
    }
    all = all && v.holds;
    json e;
    e["constraint"] = to_string(c);
    e["holds"] = v.holds;
    if (v.trace) e["trace"] = to_json(*v.trace);
    results.push_back(std::move(e));
    r.lines.push_back(std::string(v.holds ? "holds: " : "fails: ") + to_string(c));
    if (v.trace) trace_lines(*v.trace, 1, r.lines);
  }
  r.body["status"] = all ? "derivable" : "not-derivable";
  r.body["results"] = std::move(results);
  add_explain(r, flags, explain);
  r.lines.insert(r.lines.begin(), all ? "derivable" : "not derivable");
  r.exit_code = all ? 0 : 1;
  return r;
}

Report run_unify(const ProblemFile& file, const Flags& flags) {
  Report r;
  r.command = Command::unify;
  NameGenerator gen = make_generator(file, flags);
  std::vector<std::string> explain;
  const Problem pr = fix_problem(file, gen, explain);
  UnifyOptions opts;
  opts.trace = flags.trace;
  opts.fresh_prefix = flags.fresh_prefix;
  UnifyResult res;
  try {
    res = unify(file.signature, pr, opts);
  } catch (const SignatureError& e) {
    throw InputError(e.what());
  }
  if (res.solved()) {
    r.body["status"] = "solved";
    r.body["context"] = context_json(res.solution->context);
    r.body["subst"] = subst_json(res.solution->subst);
    r.lines.push_back("solved");
    r.lines.push_back(to_string(*res.solution));
  } else {
    r.body["status"] = "unsolvable";
    r.body["witness"] = witness_json(*res.witness);
    r.lines.push_back("unsolvable (" + failure_name(res.witness->kind) +
                      "): " + to_string(res.witness->constraint));
  }
  if (flags.trace) {
    json steps = json::array();
    for (const auto& st : res.steps) {
      steps.push_back(step_json(st));
      r.lines.push_back("  " + step_line(st));
    }
    r.body["trace"] = std::move(steps);
  }
  add_explain(r, flags, explain);
  r.exit_code = res.solved() ? 0 : 1;
  return r;
}

Report run_cunify(const ProblemFile& file, const Flags& flags) {
  Report r;
  r.command = Command::cunify;
  NameGenerator gen = make_generator(file, flags);
  std::vector<std::string> explain;
  const Problem pr = fix_problem(file, gen, explain);
  CUnifyOptions opts;
  opts.dedup = flags.dedup;
  opts.jobs = flags.jobs == 0 ? 1 : flags.jobs;
  opts.fresh_prefix = flags.fresh_prefix;
  opts.keep_tree = flags.tree || flags.trace;
  CUnifyResult res;
  try {
    res = c_unify(file.signature, pr, opts);
  } catch (const SignatureError& e) {
    throw InputError(e.what());
  }
  const bool ok = !res.solutions.empty();
  r.body["status"] = ok ? "solved" : "unsolvable";
  json sols = json::array();
  r.lines.push_back(ok ? "solved: " + std::to_string(res.solutions.size()) + " solution(s)"
                       : "unsolvable");
  for (const auto& s : res.solutions) {
    sols.push_back(solution_json(s));
    r.lines.push_back(to_string(s));
  }
  r.body["solutions"] = std::move(sols);
  if (opts.keep_tree) {
    r.body["tree"] = tree_json(res.tree);
    tree_lines(res.tree, 1, r.lines);
  }
  add_explain(r, flags, explain);
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report run_translate(const ProblemFile& file, const Flags& flags) {
  Report r;
  r.command = Command::translate;
  NameGenerator gen = make_generator(file, flags);
  ProblemFile out;
  out.signature = file.signature;
  std::vector<std::string> explain;
  if (file.context_kind == ProblemFile::ContextKind::fresh) {
    out.context_kind = ProblemFile::ContextKind::fix;
    out.fix_context = fix_context(file, gen, explain);
  } else if (file.context_kind == ProblemFile::ContextKind::fix) {
    out.context_kind = ProblemFile::ContextKind::fresh;
    out.fresh_context = fixp_to_fresh(file.fix_context);
  }
  for (const auto& c : file.constraints) {
    if (c.kind == ParsedConstraint::Kind::fresh) {
      for (auto& fx : fresh_constraint_to_fix(c, gen, explain)) {
        ParsedConstraint pc = c;
        pc.kind = ParsedConstraint::Kind::fix;
        pc.perm = fx.perm;
        pc.lhs = fx.target;
        out.constraints.push_back(std::move(pc));
      }
    } else if (c.kind == ParsedConstraint::Kind::fix) {
      for (const auto& a : support_perm(c.perm)) {
        ParsedConstraint pc = c;
        pc.kind = ParsedConstraint::Kind::fresh;
        pc.atom = a;
        out.constraints.push_back(std::move(pc));
      }
    } else {
      out.constraints.push_back(c);
    }
  }
  const std::string text = serialize_problem(out);
  r.body["status"] = "translated";
  if (out.context_kind == ProblemFile::ContextKind::fix) {
    r.body["fix_context"] = context_json(out.fix_context);
  } else if (out.context_kind == ProblemFile::ContextKind::fresh) {
    json arr = json::array();
    for (const auto& c : out.fresh_context.constraints()) {
      json e;
      e["atom"] = c.atom.str();
      e["var"] = c.var.name();
      arr.push_back(std::move(e));
    }
    r.body["fresh_context"] = std::move(arr);
  }
  r.body["problem"] = text;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) r.lines.push_back(line);
  add_explain(r, flags, explain);
  r.exit_code = 0;
  return r;
}

// Ground agreement between the canonical-form oracle and both engines.
Report run_selfcheck(const Flags&) {
  Report r;
  r.command = Command::selfcheck;
  oracle::TermPool pool = oracle::default_pool().ground();
  pool.atoms = {Atom::user("a"), Atom::user("b")};
  pool.max_depth = 1;
  const Signature sig = pool.signature();
  const auto terms = oracle::enumerate_terms(pool);
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  for (const auto& s : terms) {
    for (const auto& t : terms) {
      ++pairs;
      const bool o = oracle::ground_alpha_oracle(sig, s, t);
      const bool fr = check_alpha_fresh(sig, {}, s, t).holds;
      const bool fx = check_alpha_fixp(sig, {}, s, t).holds;
      if (o != fr || o != fx) {
        ++disagreements;
        r.lines.push_back("disagreement: " + to_string(s) + " ~ " + to_string(t));
      }
    }
  }
  r.body["status"] = disagreements == 0 ? "ok" : "failed";
  r.body["pairs"] = pairs;
  r.body["disagreements"] = disagreements;
  r.lines.insert(r.lines.begin(), "selfcheck: " + std::to_string(pairs) + " pairs, " +
                                      std::to_string(disagreements) + " disagreements");
  r.exit_code = disagreements == 0 ? 0 : 1;
  return r;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [n, c] : command_table()) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [n, cmd] : command_table()) {
    if (cmd == c) return n;
  }
  return "";
}

Report run_command(Command cmd, const ProblemFile& file, const Flags& flags) {
  switch (cmd) {
    case Command::alpha:
    case Command::fresh:
    case Command::fixp:
      return judgements(cmd, file, flags);
    case Command::unify:
      return run_unify(file, flags);
    case Command::cunify:
      return run_cunify(file, flags);
    case Command::translate:
      return run_translate(file, flags);
    case Command::selfcheck:
      return run_selfcheck(flags);
  }
  throw InputError("unknown command");
}

Report error_report(Command cmd, const std::string& message) {
  Report r;
  r.command = cmd;
  r.exit_code = 2;
  r.body["status"] = "error";
  r.body["message"] = message;
  r.lines.push_back("error: " + message);
  return r;
}

std::string serialize_report(const Report& r, Format format) {
  if (format == Format::json) return r.body.dump() + "\n";
  std::string out;
  for (const auto& l : r.lines) out += l + "\n";
  return out;
}

}  // namespace nomfix::cli
