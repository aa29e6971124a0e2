#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qsc/composition.hpp"
#include "qsc/dirt.hpp"
#include "qsc/insertion.hpp"
#include "qsc/json_io.hpp"
#include "qsc/qsym.hpp"
#include "qsc/rw_tree.hpp"
#include "qsc/tableau.hpp"
#include "qsc/verify.hpp"

namespace qsc::cli {

namespace {

using qsc::json::Json;

// Contract violations detected before any computation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kVerifyGuard = 9;
constexpr int kConjectureGuard = 8;

// QSC_MAX_N replaces the built-in guard when set to a positive integer.
int guard_limit(int fallback) {
  if (const char* env = std::getenv("QSC_MAX_N")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

void check_guard(int n, int fallback, bool force, const std::string& what) {
  const int limit = guard_limit(fallback);
  if (n > limit && !force) {
    throw UsageError(what + " " + std::to_string(n) + " exceeds the guard " +
                     std::to_string(limit) + "; pass --force or set QSC_MAX_N");
  }
}

Filling read_tableau(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return json::filling_from_json(Json::parse(text));
  }
  return Filling::parse_text(text);
}

std::vector<int> read_word(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw UsageError("malformed word letter '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- expand -------------------------------------------------------------------

BasisExpansion expand(Basis from, const Composition& alpha, Basis to) {
  if (from == Basis::YoungNCSchur && to == Basis::Immaculate) return yns_to_imm(alpha);
  if (!is_qsym_basis(from) || !is_qsym_basis(to)) {
    throw UsageError("unsupported expansion " + to_string(from) + " -> " + to_string(to) +
                     " (noncommutative bases support only youngncschur -> immaculate)");
  }
  if (from == Basis::DualImmaculate && to == Basis::YoungQS) return dimm_to_yqs(alpha);
  if (from == Basis::YoungQS && to == Basis::Fundamental) return yqs_f_expansion(alpha);
  if (from == Basis::DualImmaculate && to == Basis::Fundamental) return dimm_f_expansion(alpha);
  if (from == to) return BasisExpansion{to, alpha.size(), {{alpha, 1}}};
  return expand_in(basis_element(from, alpha), to);
}

// ---- text rendering ---------------------------------------------------------------

std::string symbol(Basis b) {
  switch (b) {
    case Basis::Monomial: return "M";
    case Basis::Fundamental: return "F";
    case Basis::YoungQS: return "YQS";
    case Basis::DualImmaculate: return "DImm";
    case Basis::Immaculate: return "Imm";
    case Basis::YoungNCSchur: return "YNS";
  }
  return "?";
}

std::string linear_combination(const BasisExpansion& e) {
  if (e.coeffs.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : e.coeffs) {
    const Coeff mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += symbol(e.basis) + "(" + alpha.to_string() + ")";
  }
  return out;
}

Json verify_json(const VerifyReport& rep) {
  Json j;
  j["suite"] = to_string(rep.suite);
  j["max_n"] = rep.max_n;
  j["passed"] = rep.passed();
  j["cases"] = rep.cases.size();
  j["checks"] = rep.total_checks();
  Json notes = Json::object();
  for (const auto& [k, v] : rep.notes) notes[k] = v;
  j["notes"] = std::move(notes);
  Json failures = Json::array();
  for (const auto& c : rep.cases) {
    if (!c.passed) failures.push_back({{"case", c.label}, {"detail", c.detail}});
  }
  j["failures"] = std::move(failures);
  return j;
}

void verify_text(std::ostream& out, const VerifyReport& rep, bool verbose) {
  for (const auto& c : rep.cases) {
    if (verbose || !c.passed) {
      out << (c.passed ? "PASS " : "FAIL ") << c.label << " (" << c.checks << " checks)";
      if (!c.passed) out << ": " << c.detail;
      out << '\n';
    }
  }
  for (const auto& [k, v] : rep.notes) out << "  " << k << ": " << v << '\n';
  out << to_string(rep.suite) << " max-n=" << rep.max_n << ": "
      << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.cases.size() << " cases, "
      << rep.total_checks() << " checks)\n";
}

void conjecture_text(std::ostream& out, const ConjectureReport& rep) {
  out << "degree " << rep.n << '\n';
  for (const auto& [alpha, e] : rep.expansions) {
    out << "  YQS(" << alpha.to_string() << ") = " << linear_combination(e) << '\n';
  }
  out << "coefficients in {-1,0,1} with hook sum rule: "
      << (rep.coefficient_conjecture_holds() ? "no violations" : "violations found") << '\n';
  for (const auto& w : rep.range_violations) {
    out << "  coefficient " << w.value << " at alpha=" << w.alpha.to_string()
        << " beta=" << w.beta.to_string() << '\n';
  }
  for (const auto& w : rep.sum_rule_violations) {
    out << "  coefficient sum " << w.actual << " (expected " << w.expected
        << ") at alpha=" << w.alpha.to_string() << '\n';
  }
  out << "alternating sum over rearrangements (" << rep.distinct_part_partitions_checked
      << " distinct-part partitions): "
      << (rep.alternating_conjecture_holds() ? "no violations" : "violations found") << '\n';
  for (const auto& w : rep.alternating_violations) {
    out << "  lambda=" << w.lambda.to_string() << " beta=" << w.beta.to_string()
        << " expected " << w.expected << " got " << w.actual << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tableau insertion and quasisymmetric expansions", "qsc"};
  app.require_subcommand(1);

  // expand
  std::string from_name, to_name, alpha_text;
  std::string format = "json";
  auto* expand_cmd = app.add_subcommand("expand", "Expand a basis element in another basis");
  expand_cmd->add_option("--from", from_name, "Source basis")->required();
  expand_cmd->add_option("--alpha", alpha_text, "Index composition, e.g. 2,2")->required();
  expand_cmd->add_option("--to", to_name, "Target basis")->required();
  expand_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  // demo
  std::string tableau_text, cell_text, word_text;
  int k = 0;
  auto* demo_cmd = app.add_subcommand("demo", "Step-by-step insertion, rapture or word insertion");
  demo_cmd->require_subcommand(1);
  auto* demo_insert = demo_cmd->add_subcommand("insert", "Insert k into a tableau");
  demo_insert->add_option("--k", k, "Value to insert")->required();
  demo_insert->add_option("--tableau", tableau_text, "JSON or text (rows bottom-up, '/'-separated)")
      ->required();
  auto* demo_rapture = demo_cmd->add_subcommand("rapture", "Rapture the entry in a cell");
  demo_rapture->add_option("--tableau", tableau_text, "JSON or text tableau")->required();
  demo_rapture->add_option("--cell", cell_text, "col,row (1-based, rows from the bottom)")->required();
  auto* demo_word = demo_cmd->add_subcommand("word", "Insert a word and record");
  demo_word->add_option("--word", word_text, "Letters separated by spaces or commas")->required();
  auto* demo_uninsert = demo_cmd->add_subcommand("uninsert", "Recover a word from a (P, Q) pair");
  std::string p_text, q_text;
  demo_uninsert->add_option("--p", p_text, "Insertion tableau")->required();
  demo_uninsert->add_option("--q", q_text, "Recording tableau")->required();

  // enumerate
  std::string kind, shape_text, strips_text;
  int max_entry = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "List tableaux of a shape");
  enum_cmd->add_option("--kind", kind, "sit, syct, ssyct, semistandard-immaculate or dirt")
      ->required()
      ->check(CLI::IsMember({"sit", "syct", "ssyct", "semistandard-immaculate", "dirt"}));
  enum_cmd->add_option("--shape", shape_text, "Shape composition")->required();
  enum_cmd->add_option("--strips", strips_text, "Row strip shape (dirt only; default all)");
  enum_cmd->add_option("--max-entry", max_entry, "Largest entry (semistandard kinds)");

  // tree
  std::string direction = "forward";
  std::string tree_format = "json";
  auto* tree_cmd = app.add_subcommand("tree", "Derivation tree of an expansion");
  tree_cmd->add_option("--alpha", alpha_text, "Index composition")->required();
  tree_cmd->add_option("--direction", direction, "forward or dual")
      ->check(CLI::IsMember({"forward", "dual"}));
  tree_cmd->add_option("--format", tree_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  // verify
  std::string suite_name;
  int max_n = 0;
  bool force = false, verbose = false;
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("--suite", suite_name, "inverse, descents, triple-agreement, symmetry, "
                                                "positivity, dominance or all")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "Largest degree")->required();
  verify_cmd->add_flag("--force", force, "Allow degrees above the guard");
  verify_cmd->add_flag("--verbose", verbose, "Print every case");
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // conjectures
  int conj_n = 0;
  std::string conj_format = "text";
  auto* conj_cmd = app.add_subcommand("conjectures", "Empirical report on the signed expansion conjectures");
  conj_cmd->add_option("--n", conj_n, "Degree")->required();
  conj_cmd->add_flag("--force", force, "Allow degrees above the guard");
  conj_cmd->add_option("--format", conj_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (expand_cmd->parsed()) {
      const Basis from = parse_basis(from_name);
      const Basis to = parse_basis(to_name);
      const BasisExpansion e = expand(from, Composition::parse(alpha_text), to);
      if (format == "text") {
        out << symbol(from) << "(" << alpha_text << ") = " << linear_combination(e) << '\n';
      } else {
        emit(out, json::to_json(e));
      }
      return kOk;
    }

    if (demo_cmd->parsed()) {
      if (demo_insert->parsed()) {
        const InsertionResult r = insert(read_tableau(tableau_text), k);
        emit(out, json::to_json(r, k));
      } else if (demo_rapture->parsed()) {
        const Cell c = json::cell_from_json(Json::parse("[" + cell_text + "]"));
        emit(out, json::to_json(rapture(read_tableau(tableau_text), c)));
      } else if (demo_word->parsed()) {
        const std::vector<int> word = read_word(word_text);
        Json j;
        j["word"] = word;
        Json steps = Json::array();
        Filling p;
        for (int v : word) {
          const InsertionResult r = insert(p, v);
          steps.push_back(json::to_json(r, v));
          p = r.tableau;
        }
        const RecordingPair pq = insert_word(word);
        j["steps"] = std::move(steps);
        j["P"] = json::to_json(pq.p);
        j["Q"] = json::to_json(pq.q);
        j["Q_is_dirt"] = is_dirt(pq.q);
        emit(out, j);
      } else if (demo_uninsert->parsed()) {
        Json j;
        j["word"] = uninsert(read_tableau(p_text), read_tableau(q_text));
        emit(out, j);
      }
      return kOk;
    }

    if (enum_cmd->parsed()) {
      const Composition shape = Composition::parse(shape_text);
      std::vector<Filling> fs;
      if (kind == "sit") {
        fs = enumerate_standard(shape, StandardKind::Immaculate);
      } else if (kind == "syct") {
        fs = enumerate_standard(shape, StandardKind::Syct);
      } else if (kind == "ssyct" || kind == "semistandard-immaculate") {
        if (max_entry < 1) throw UsageError("--max-entry must be at least 1 for " + kind);
        fs = enumerate_semistandard(
            shape, kind == "ssyct" ? SemistandardKind::Ssyct : SemistandardKind::Immaculate, max_entry);
      } else {
        if (!strips_text.empty()) {
          fs = enumerate_dirts(shape, Composition::parse(strips_text));
        } else {
          for (const auto& s : compositions_of(shape.size(), shape.length())) {
            for (auto& f : enumerate_dirts(shape, s)) fs.push_back(std::move(f));
          }
        }
      }
      Json j;
      j["kind"] = kind;
      j["shape"] = json::to_json(shape);
      j["count"] = fs.size();
      Json items = Json::array();
      for (const auto& f : fs) items.push_back(json::to_json(f));
      j["tableaux"] = std::move(items);
      emit(out, j);
      return kOk;
    }

    if (tree_cmd->parsed()) {
      const Composition alpha = Composition::parse(alpha_text);
      const RWResult r = direction == "forward" ? rw_forward(alpha) : rw_dual(alpha);
      if (tree_format == "dot") {
        out << to_dot(r.tree);
      } else {
        Json j;
        j["tree"] = json::to_json(r.tree);
        j["expansion"] = json::to_json(r.expansion);
        emit(out, j);
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      if (max_n < 1) throw UsageError("--max-n must be at least 1");
      check_guard(max_n, kVerifyGuard, force, "--max-n");
      const std::vector<Suite> suites =
          suite_name == "all" ? all_suites() : std::vector<Suite>{parse_suite(suite_name)};
      bool all_passed = true;
      Json reports = Json::array();
      for (Suite s : suites) {
        const VerifyReport rep = run_suite(s, max_n);
        all_passed = all_passed && rep.passed();
        if (verify_format == "json") {
          reports.push_back(verify_json(rep));
        } else {
          verify_text(out, rep, verbose);
        }
      }
      if (verify_format == "json") emit(out, reports);
      return all_passed ? kOk : kCheckFailed;
    }

    if (conj_cmd->parsed()) {
      if (conj_n < 1) throw UsageError("--n must be at least 1");
      check_guard(conj_n, kConjectureGuard, force, "--n");
      const ConjectureReport rep = check_conjectures(conj_n);
      if (conj_format == "json") {
        emit(out, json::to_json(rep));
      } else {
        conjecture_text(out, rep);
      }
      return kOk;  // findings are reported, never a failure
    }
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qsc::cli
