#pragma once

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "afmx/io.hpp"
#include "afmx/oracle.hpp"
#include "afmx/semantics.hpp"

namespace afmx {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kInternal = 3 };

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string format_for(const std::string& flag, const std::string& path) {
  if (!flag.empty()) return flag;
  auto ends_with = [&path](std::string_view ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends_with(".tgf")) return "tgf";
  if (ends_with(".apx")) return "apx";
  throw UsageError("cannot infer format of '" + path + "'; pass --format tgf|apx");
}

inline ParsedFramework load(const std::string& path, const std::string& format_flag) {
  const std::string format = format_for(format_flag, path);
  const std::string text = read_file(path);
  return format == "tgf" ? parse_tgf(text) : parse_apx(text);
}

inline ArgSet resolve_names(const std::string& list, const NameMap& names) {
  std::vector<Arg> ids;
  std::stringstream in(list);
  for (std::string name; std::getline(in, name, ',');) {
    if (!names.has(name)) throw UsageError("unknown argument '" + name + "'");
    ids.push_back(names.id(name));
  }
  return ArgSet(std::move(ids));
}

struct SolveOptions {
  std::string format;
  std::string semantics;
  std::string task;
  std::string arg;
  std::string file;
};

inline void solve(const SolveOptions& opt, std::ostream& out) {
  const Semantics tag = parse_semantics(opt.semantics);
  const Question q = parse_question(opt.task);
  const ParsedFramework pf = load(opt.file, opt.format);
  ArgSet a;
  if (needs_argument(q)) {
    if (opt.arg.empty()) throw UsageError("task " + opt.task + " needs --arg");
    a = resolve_names(opt.arg, pf.names);
  }
  const ExtensionFamily fam = extensions(pf.framework, tag);
  const QueryResult r = query(pf.framework, fam, q, a);

  switch (q) {
  case Question::Exists:
  case Question::ContainedInSome:
  case Question::ContainedInAll:
  case Question::AttackedBySome:
  case Question::AttackedByAll: out << (r.holds ? "YES" : "NO") << '\n'; break;
  case Question::SomeExtension:
  case Question::SomeContaining:
  case Question::SomeAttacking:
    if (r.extensions.empty()) out << "NO\n";
    else out << format_set(r.extensions.front(), pf.names) << '\n';
    break;
  case Question::AllExtensions:
  case Question::AllContaining:
  case Question::AllAttacking:
    for (const auto& e : r.extensions) out << format_set(e, pf.names) << '\n';
    break;
  }
}

struct VerifyOptions {
  std::string file;
  std::string format;
  GeneratorConfig gen{8, 0.3, 1};
  int count = 1;
  int oracle_bound = oracle::kDefaultBound;
};

/// Matrix path vs brute-force oracle on every semantics. Returns true when
/// nothing disagrees.
inline bool verify(const VerifyOptions& opt, std::ostream& out) {
  std::vector<Framework> corpus;
  if (!opt.file.empty()) {
    corpus.push_back(load(opt.file, opt.format).framework);
  } else {
    if (opt.count < 1) throw UsageError("--count must be positive");
    for (int i = 0; i < opt.count; ++i) {
      GeneratorConfig cfg = opt.gen;
      cfg.seed = opt.gen.seed + static_cast<std::uint64_t>(i);
      corpus.push_back(generate(cfg));
    }
  }
  for (const auto& f : corpus)
    if (f.size() > opt.oracle_bound)
      throw UsageError("framework has " + std::to_string(f.size()) + " arguments, above --oracle-bound " + std::to_string(opt.oracle_bound));

  bool all_ok = true;
  auto report = [&](std::string_view label, int mismatches) {
    const int total = static_cast<int>(corpus.size());
    out << label << ' ' << (mismatches == 0 ? "PASS" : "FAIL") << ' ' << (total - mismatches) << '/' << total << '\n';
    all_ok = all_ok && mismatches == 0;
  };
  for (Semantics tag : kAllSemantics) {
    int bad = 0;
    for (const auto& f : corpus)
      if (extensions(f, tag) != oracle::family(f, tag, opt.oracle_bound)) ++bad;
    report(to_code(tag), bad);
  }
  int bad = 0;
  for (const auto& f : corpus) {
    const auto gr = extensions(f, Semantics::Grounded);
    if (gr.size() != 1 || gr.sets.front() != oracle::grounded_fixpoint(f)) ++bad;
  }
  report("gr-fixpoint", bad);
  out << "verify: " << (all_ok ? "PASS" : "FAIL") << '\n';
  return all_ok;
}

} // namespace cli_detail

/// `afmx solve|gen|verify ...`. Writes results to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on usage error, 2 on parse error, 3 when a
/// computed result breaks a guaranteed property.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extensions of abstract argumentation frameworks via attack-matrix sub-blocks", "afmx"};
  app.require_subcommand(1);

  cli_detail::SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Answer a reasoning task on a framework file");
  solve->add_option("--format", so.format, "Input format (default: by file extension)")->check(CLI::IsMember({"tgf", "apx"}));
  solve->add_option("--semantics", so.semantics, "cf, st, ad, co, pr, gr, id, sst or eg")->required();
  solve->add_option("--task", so.task, "EE, SE, DC, DS, AC, AS, EX, SC, EC, SA or EA")->required();
  solve->add_option("--arg", so.arg, "Argument name, or comma-separated names, for DC/DS/AC/AS/SC/EC/SA/EA");
  solve->add_option("file", so.file, "Framework file")->required();

  GeneratorConfig gc;
  std::string gen_format = "tgf";
  auto* gen = app.add_subcommand("gen", "Print a random framework");
  gen->add_option("--n", gc.n, "Number of arguments")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--p", gc.p, "Attack probability per ordered pair")->required();
  gen->add_option("--seed", gc.seed, "Random seed");
  gen->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"tgf", "apx"}));

  cli_detail::VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "Check the matrix solver against the brute-force oracle");
  ver->add_option("file", vo.file, "Framework file (omit to use a generated corpus)");
  ver->add_option("--format", vo.format, "Input format (default: by file extension)")->check(CLI::IsMember({"tgf", "apx"}));
  ver->add_option("--n", vo.gen.n, "Arguments per generated framework")->check(CLI::NonNegativeNumber);
  ver->add_option("--p", vo.gen.p, "Attack probability for generated frameworks");
  ver->add_option("--seed", vo.gen.seed, "Seed of the first generated framework");
  ver->add_option("--count", vo.count, "Number of generated frameworks");
  ver->add_option("--oracle-bound", vo.oracle_bound, "Largest framework the oracle accepts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) {
      cli_detail::solve(so, out);
    } else if (*gen) {
      const Framework f = generate(gc);
      const NameMap names = NameMap::numeric(f.size());
      out << (gen_format == "apx" ? write_apx(f, names) : write_tgf(f, names));
    } else if (*ver) {
      if (!cli_detail::verify(vo, out)) return kInternal;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

} // namespace afmx
