// parwb: a workbench for strong partial actions of finite monoids on finite
// semigroups. Subcommands check the action axioms, compute the X_M classes,
// explore the associated rewriting system, decide the globalization
// criteria, and enumerate small actions.
//
// Exit codes: 0 success / positive verdict, 2 malformed input, 3 not locally
// confluent, 4 not globalizable, 5 hypotheses not applicable, 6 size cap
// exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "parwb/criteria.hpp"
#include "parwb/globalization.hpp"
#include "parwb/json_io.hpp"
#include "parwb/workbench.hpp"

namespace {

using namespace parwb;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNotConfluent = 3;
constexpr int kExitNotGlobalizable = 4;
constexpr int kExitNotApplicable = 5;
constexpr int kExitSizeCap = 6;

std::uint64_t effective_cap(std::uint64_t cli_cap) {
  if (cli_cap != 0) return cli_cap;
  if (const char* env = std::getenv("PARWB_CAP")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1'000'000;
}

PartialAction load_validated(const std::string& file) {
  auto action = load_action_file(file);
  const auto validation = validate_partial_action(action);
  if (!validation.ok()) {
    for (const auto& f : validation.failures) {
      std::cout << "axiom " << to_string(f.axiom) << " fails: " << f.detail
                << "\n";
    }
    throw InputError("not a strong partial action");
  }
  return action;
}

int run_validate(const std::string& file) {
  const auto j = load_json_file(file);
  if (j.contains("maps")) {
    const auto action = action_from_json(
        j, std::filesystem::path(file).parent_path());
    const auto validation = validate_partial_action(action);
    for (const auto& f : validation.failures) {
      std::cout << "axiom " << to_string(f.axiom) << " fails: " << f.detail
                << "\n";
    }
    if (!validation.ok()) return kExitBadInput;
    std::cout << "valid strong partial action of "
              << action.monoid.size() << " monoid elements on "
              << action.carrier.size() << " carrier elements\n";
  } else if (j.contains("structure")) {
    const auto pa = linear_pa01_from_json(j);
    std::cout << "valid linear {0,1}-action on an F_" << pa.algebra.p
              << " algebra of dimension " << pa.algebra.dim << "\n";
  } else if (j.contains("identity")) {
    const auto m = monoid_from_json(j);
    std::cout << "valid monoid with " << m.size() << " elements\n";
  } else {
    const auto s = semigroup_from_json(j);
    std::cout << "valid semigroup with " << s.size() << " elements\n";
  }
  return kExitOk;
}

void print_classes(const PartialAction& action, const MXPartition& p) {
  for (int c = 0; c < p.num_classes(); ++c) {
    std::cout << class_to_string(action, p, c) << "\n";
  }
}

int run_classes(const std::string& file, bool closed_form, bool check) {
  const auto action = load_validated(file);
  if (check) {
    const auto generic = classes_generic(action);
    const auto closed = classes_g0_closed_form(action);
    if (generic.class_of != closed.class_of) {
      std::cout << "DISAGREEMENT between the generic closure and the closed "
                   "form\n";
      return 1;
    }
    std::cout << "generic closure and closed form agree on "
              << generic.num_classes() << " classes\n";
    return kExitOk;
  }
  const auto p =
      closed_form ? classes_g0_closed_form(action) : classes_generic(action);
  print_classes(action, p);
  return kExitOk;
}

Word parse_word(const PartialAction& action, const MXPartition& p,
                const std::string& text) {
  Word word;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '<') throw InputError("word tokens look like <m,x>");
    const size_t end = text.find('>', pos);
    if (end == std::string::npos) throw InputError("unterminated token");
    const std::string token = text.substr(pos + 1, end - pos - 1);
    const size_t comma = token.find(',');
    if (comma == std::string::npos) {
      throw InputError("word tokens look like <m,x>");
    }
    const std::string m_name = token.substr(0, comma);
    const std::string x_name = token.substr(comma + 1);
    int m = -1, x = -1;
    for (int i = 0; i < action.monoid.size(); ++i) {
      if (action.monoid.name(i) == m_name) m = i;
    }
    for (int i = 0; i < action.carrier.size(); ++i) {
      if (action.carrier.name(i) == x_name) x = i;
    }
    if (m < 0) throw InputError("unknown monoid element: " + m_name);
    if (x < 0) throw InputError("unknown carrier element: " + x_name);
    word.push_back(p.class_id(m, x));
    pos = end + 1;
  }
  if (word.empty()) throw InputError("empty word");
  return word;
}

int run_rewrite(const std::string& file, const std::string& word_text) {
  const auto action = load_validated(file);
  const auto p = classes_generic(action);
  RewriteSystem rs(action, p);
  const Word start = parse_word(action, p, word_text);

  auto label = [&](const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += " ";
      out += class_to_string(action, p, w[i]);
    }
    return out;
  };
  std::cout << "digraph reducts {\n";
  for (const Word& w : rs.all_reducts(start)) {
    std::cout << "  \"" << label(w) << "\";\n";
    for (const Word& r : rs.one_step_reducts(w)) {
      std::cout << "  \"" << label(w) << "\" -> \"" << label(r) << "\";\n";
    }
  }
  std::cout << "}\n";
  return kExitOk;
}

int run_confluence(const std::string& file, std::uint64_t cap) {
  const auto action = load_validated(file);
  const auto p = classes_generic(action);
  RewriteSystem rs(action, p);
  const auto verdict = is_locally_confluent(rs, effective_cap(cap));
  switch (verdict.status) {
    case ConfluenceVerdict::Status::kConfluent:
      std::cout << "locally confluent (" << p.num_classes() << " classes, "
                << verdict.words_checked << " words checked)\n";
      return kExitOk;
    case ConfluenceVerdict::Status::kTooLarge:
      std::cout << "too large: the 2/3-letter sweep exceeds the word cap\n";
      return kExitSizeCap;
    case ConfluenceVerdict::Status::kNotConfluent:
      break;
  }
  const auto& w = *verdict.witness;
  auto print_word = [&](const char* prefix, const Word& word) {
    std::cout << prefix;
    for (size_t i = 0; i < word.size(); ++i) {
      std::cout << (i ? " " : "") << class_to_string(action, p, word[i]);
    }
    std::cout << "\n";
  };
  std::cout << "not locally confluent\n";
  print_word("word:    ", w.word);
  print_word("reduct1: ", w.reduct_a);
  print_word("reduct2: ", w.reduct_b);
  return kExitNotConfluent;
}

int run_criteria_cmd(const std::string& file, bool as_json,
                     std::uint64_t cap) {
  const auto action = load_validated(file);
  CriteriaOptions options;
  options.confluence_word_cap = effective_cap(cap);
  const auto report = run_criteria(action, options);
  if (as_json) {
    std::cout << criteria_report_to_json(report).dump(2) << "\n";
  } else {
    auto line = [](const std::string& name, const ConditionResult& c) {
      std::cout << "  " << name << ": " << to_string(c.verdict);
      if (c.failed()) std::cout << "  witness " << c.witness_text;
      if (c.verdict == Verdict::kNotApplicable) std::cout << "  (" << c.reason << ")";
      std::cout << "\n";
    };
    std::cout << "hypotheses (dom/im ideal, dom/im unital):\n";
    for (const auto& h : report.hypotheses) {
      std::cout << "  alpha_" << h.element << ": " << (h.dom_ideal ? "+" : "-")
                << (h.im_ideal ? "+" : "-") << " " << (h.dom_unital ? "+" : "-")
                << (h.im_unital ? "+" : "-") << "\n";
    }
    std::cout << "conditions:\n";
    line("LC1 ", report.lc1);
    line("LC1'", report.lc1_prime);
    line("LC2 ", report.lc2);
    line("LC2'", report.lc2_prime);
    line("LC3 ", report.lc3);
    line("H   ", report.h);
    line("left-zero", report.left_zero);
    std::cout << "rewriting system: " << report.confluence.status << "\n";
    std::cout << "globalizable: " << report.globalizable << "\n";
    std::cout << "locally confluent: " << report.locally_confluent << "\n";
  }
  if (report.globalizable == "yes") return kExitOk;
  if (report.globalizable == "no") return kExitNotGlobalizable;
  return kExitNotApplicable;
}

int run_globalize(const std::string& file, int enumerate_len,
                  std::uint64_t cap, int max_len,
                  std::uint64_t max_visited) {
  const auto action = load_validated(file);
  const auto p = classes_generic(action);
  std::cout << "X_M classes (" << p.num_classes() << "):\n";
  print_classes(action, p);
  std::cout << "beta tables (rows: monoid elements, columns: class ids):\n";
  for (int m = 0; m < action.monoid.size(); ++m) {
    std::cout << "  beta_" << action.monoid.name(m) << ":";
    for (int c = 0; c < p.num_classes(); ++c) std::cout << " " << p.beta[m][c];
    std::cout << "\n";
  }
  std::cout << "iota:";
  for (int x = 0; x < action.carrier.size(); ++x) {
    std::cout << " " << action.carrier.name(x) << "->" << p.iota[x];
  }
  std::cout << "\n";
  RewriteSystem rs(action, p);
  const auto verdict = is_locally_confluent(rs, effective_cap(cap));
  if (verdict.status == ConfluenceVerdict::Status::kTooLarge) {
    std::cout << "confluence sweep exceeds the word cap\n";
    return kExitSizeCap;
  }
  if (!verdict.locally_confluent()) {
    std::cout << "rewriting system is not locally confluent; normal-form "
                 "words are not enumerated\n";
    UniqueNfBounds bounds;
    bounds.confluence_word_cap = effective_cap(cap);
    bounds.max_len = max_len;
    bounds.max_visited = max_visited;
    const auto nf = unique_nf_condition(rs, bounds);
    switch (nf.status) {
      case UniqueNfResult::Status::kHolds:
        std::cout << "unique-normal-form condition: holds\n";
        break;
      case UniqueNfResult::Status::kInconclusive:
        std::cout << "unique-normal-form condition: inconclusive within "
                     "max-len "
                  << max_len << ", max-visited " << max_visited << "\n";
        break;
      case UniqueNfResult::Status::kViolated: {
        std::cout << "unique-normal-form condition: violated, "
                  << class_to_string(action, p, nf.violation->class_mx)
                  << " is equivalent to "
                  << class_to_string(action, p, nf.violation->class_iota)
                  << " via:\n";
        for (const auto& w : nf.violation->chain) {
          std::cout << " ";
          for (size_t i = 0; i < w.size(); ++i) {
            std::cout << (i ? " " : " ") << class_to_string(action, p, w[i]);
          }
          std::cout << "\n";
        }
        break;
      }
    }
    return kExitNotConfluent;
  }
  const ReflectionSemigroup refl(rs, effective_cap(cap));
  std::cout << "normal-form words up to length " << enumerate_len << ":\n";
  for (const auto& w : refl.enumerate(enumerate_len)) {
    for (size_t i = 0; i < w.size(); ++i) {
      std::cout << (i ? " " : "  ") << class_to_string(action, p, w[i]);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int run_algebra(const std::string& file) {
  const auto pa = load_algebra_action_file(file);
  std::cout << "algebra: F_" << pa.algebra.p << ", dimension "
            << pa.algebra.dim << "\n";
  std::cout << "dom alpha_0 rank: " << pa.dom0_rref.size() << "\n";
  const auto kernel = pa.ker0_rref();
  std::cout << "ker alpha_0:";
  if (kernel.empty()) std::cout << " 0";
  for (const auto& row : kernel) {
    std::cout << " " << pa.algebra.vector_name(row);
  }
  std::cout << "\n";
  const auto d = decide_globalizable_algebra01(pa);
  switch (d.verdict) {
    case Verdict::kPass:
      std::cout << "globalizable: yes (ker alpha_0 is an ideal)\n";
      return kExitOk;
    case Verdict::kFail:
      std::cout << "globalizable: no (" << d.witness_text << ")\n";
      return kExitNotGlobalizable;
    case Verdict::kNotApplicable:
      std::cout << "not applicable: " << d.reason << "\n";
      return kExitNotApplicable;
  }
  return kExitOk;
}

int run_enumerate(const std::string& monoid_file, const std::string& carrier_file,
                  const std::vector<std::string>& filter_names, bool report,
                  std::uint64_t cap) {
  const auto monoid = monoid_from_json(load_json_file(monoid_file));
  const auto carrier = semigroup_from_json(load_json_file(carrier_file));
  EnumerationFilters filters;
  for (const auto& f : filter_names) {
    if (f == "ideal-domains-only") {
      filters.ideal_domains_only = true;
    } else if (f == "unital-only") {
      filters.unital_only = true;
    } else if (f == "g0-only") {
      filters.g0_only = true;
    } else {
      throw InputError("unknown filter: " + f +
                       " (expected ideal-domains-only, unital-only, g0-only)");
    }
  }
  CriteriaOptions options;
  options.confluence_word_cap = effective_cap(cap);
  std::uint64_t count = 0;
  enumerate_partial_actions(monoid, carrier, filters,
                            [&](const PartialAction& a) {
                              ++count;
                              if (report) {
                                std::cout
                                    << criteria_report_to_json(
                                           run_criteria(a, options))
                                           .dump()
                                    << "\n";
                              } else {
                                std::cout << action_to_json(a).dump() << "\n";
                              }
                              return true;
                            });
  std::cerr << count << " actions\n";
  return kExitOk;
}

int run_fixtures(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const auto& name : fixture_names()) {
    const auto path = std::filesystem::path(out_dir) / (name + ".json");
    std::ofstream out(path);
    out << action_to_json(fixture(name)).dump(2) << "\n";
    std::cout << path.string() << "\n";
  }
  const auto algebra_path = std::filesystem::path(out_dir) / "EX3.json";
  std::ofstream out(algebra_path);
  out << linear_pa01_to_json(fixture_ex3_algebra()).dump(2) << "\n";
  std::cout << algebra_path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for strong partial monoid actions on semigroups"};
  app.require_subcommand(1);
  std::uint64_t cap = 0;
  app.add_option("--cap", cap,
                 "word cap for confluence sweeps (default 1000000, or "
                 "PARWB_CAP)");
  int max_len = 6;
  std::uint64_t max_visited = 100'000;
  app.add_option("--max-len", max_len,
                 "word-length bound for equivalence searches");
  app.add_option("--max-visited", max_visited,
                 "visit budget for equivalence searches");

  std::string file, word_text, monoid_file, carrier_file, out_dir = "fixtures";
  bool closed_form = false, check = false, as_json = false, report = false;
  int enumerate_len = 0;
  std::vector<std::string> filters;

  auto* validate = app.add_subcommand("validate", "check a JSON input");
  validate->add_option("file", file)->required();

  auto* classes = app.add_subcommand("classes", "print the X_M classes");
  classes->add_option("file", file)->required();
  classes->add_flag("--closed-form", closed_form,
                    "use the G^0 closed-form class descriptions");
  classes->add_flag("--check", check, "run both constructions and compare");

  auto* rewrite = app.add_subcommand("rewrite", "print a reduct graph in DOT");
  rewrite->add_option("file", file)->required();
  rewrite->add_option("--word", word_text, "word as \"<m,x> <m,x> ...\"")
      ->required();

  auto* confluence =
      app.add_subcommand("confluence", "decide local confluence");
  confluence->add_option("file", file)->required();

  auto* criteria = app.add_subcommand("criteria", "run the named criteria");
  criteria->add_option("file", file)->required();
  criteria->add_flag("--json", as_json, "emit the report as JSON");

  auto* globalize =
      app.add_subcommand("globalize", "print X_M, beta, iota and normal forms");
  globalize->add_option("file", file)->required();
  globalize->add_option("--enumerate", enumerate_len,
                        "also list normal-form words up to this length");

  auto* algebra = app.add_subcommand("algebra", "decide the kernel criterion");
  algebra->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list all valid actions");
  enumerate->add_option("--monoid", monoid_file)->required();
  enumerate->add_option("--carrier", carrier_file)->required();
  enumerate->add_option("--filter", filters)->expected(-1);
  enumerate->add_flag("--report", report, "emit one criteria report per line");

  auto* fixtures =
      app.add_subcommand("fixtures", "write the named example actions");
  fixtures->add_option("--out", out_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(file);
    if (classes->parsed()) return run_classes(file, closed_form, check);
    if (rewrite->parsed()) return run_rewrite(file, word_text);
    if (confluence->parsed()) return run_confluence(file, cap);
    if (criteria->parsed()) return run_criteria_cmd(file, as_json, cap);
    if (globalize->parsed()) {
      return run_globalize(file, enumerate_len, cap, max_len, max_visited);
    }
    if (algebra->parsed()) return run_algebra(file);
    if (enumerate->parsed()) {
      return run_enumerate(monoid_file, carrier_file, filters, report, cap);
    }
    if (fixtures->parsed()) return run_fixtures(out_dir);
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
