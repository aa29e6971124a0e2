#include "qsc/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qsc/composition.hpp"
#include "qsc/dirt.hpp"
#include "qsc/insertion.hpp"
#include "qsc/qsym.hpp"
#include "qsc/rw_tree.hpp"
#include "qsc/tableau.hpp"

namespace qsc {

namespace {

constexpr std::pair<Suite, std::string_view> kSuiteNames[] = {
    {Suite::Inverse, "inverse"},       {Suite::Descents, "descents"},
    {Suite::TripleAgreement, "triple-agreement"}, {Suite::Symmetry, "symmetry"},
    {Suite::Positivity, "positivity"}, {Suite::Dominance, "dominance"},
};

VerifyCase make_case(std::string label) {
  VerifyCase c;
  c.label = std::move(label);
  return c;
}

// Records one check; keeps only the first failure message.
void check(VerifyCase& c, bool ok, const std::string& what) {
  ++c.checks;
  if (ok) return;
  if (c.passed) c.detail = what;
  c.passed = false;
}

std::string cells_text(const std::vector<Cell>& cs) {
  std::string out;
  for (const Cell& c : cs) out += to_string(c);
  return out;
}

std::string expansion_text(const BasisExpansion& e) {
  std::string out = "{";
  for (const auto& [a, c] : e.coeffs) {
    if (out.size() > 1) out += ", ";
    out += "(" + a.to_string() + "):" + std::to_string(c);
  }
  return out + "}";
}

std::string label(const Composition& alpha) {
  return "n=" + std::to_string(alpha.size()) + " alpha=" + alpha.to_string();
}

// (n-k, 1^k)
bool is_reverse_hook(const Composition& alpha) {
  for (std::size_t i = 1; i < alpha.length(); ++i) {
    if (alpha[i] != 1) return false;
  }
  return !alpha.empty();
}

void run_inverse(VerifyReport& rep) {
  std::set<Filling> seen;
  std::size_t infinite_outputs = 0;
  std::size_t virtuous_cells = 0;
  for (int n = 1; n <= rep.max_n; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      VerifyCase vc = make_case(label(alpha));
      for (const auto& u : enumerate_standard(alpha, StandardKind::Immaculate)) {
        const std::vector<int> word = immaculate_reading_word(u);
        Filling p;
        std::vector<Filling> states{p};
        for (int k : word) {
          const InsertionResult ins = insert(p, k);
          const RaptureResult rap = rapture(ins.tableau, ins.new_cell);
          std::vector<Cell> mirrored(ins.bumping_path.rbegin(), ins.bumping_path.rend());
          check(vc, rap.tableau == p && rap.output == k && rap.escape_route == mirrored,
                "rapture after inserting " + std::to_string(k) + " into " + p.to_text() +
                    " gave " + rap.tableau.to_text() + " output " + rap.output.to_string() +
                    " route " + cells_text(rap.escape_route) + " vs path " +
                    cells_text(ins.bumping_path));
          p = ins.tableau;
          states.push_back(p);
        }
        const RecordingPair pq = insert_word(word);
        check(vc, is_dirt(pq.q), "recording tableau " + pq.q.to_text() + " is not a DIRT");
        check(vc, uninsert(pq.p, pq.q) == word, "uninsert does not recover " + u.to_text());

        for (const Filling& t : states) {
          if (t.empty() || !seen.insert(t).second) continue;
          for (int r = 1; r <= static_cast<int>(t.num_rows()); ++r) {
            const Cell c{t.row_length(r), r};
            if (!is_virtuous(t, c)) continue;
            ++virtuous_cells;
            const RaptureResult rap = rapture(t, c);
            if (rap.output.is_infinite()) {
              ++infinite_outputs;
              continue;
            }
            const InsertionResult ins = insert(rap.tableau, rap.output.value());
            std::vector<Cell> mirrored(rap.escape_route.rbegin(), rap.escape_route.rend());
            check(vc, ins.tableau == t && ins.bumping_path == mirrored,
                  "insert after rapturing " + to_string(c) + " of " + t.to_text() + " gave " +
                      ins.tableau.to_text() + " path " + cells_text(ins.bumping_path));
          }
        }
      }
      rep.cases.push_back(std::move(vc));
    }
  }
  rep.notes.push_back({"distinct intermediate tableaux", seen.size()});
  rep.notes.push_back({"virtuous cells raptured", virtuous_cells});
  rep.notes.push_back({"rapture outputs of infinity (no inverse claimed)", infinite_outputs});
}

void run_descents(VerifyReport& rep) {
  for (int n = 1; n <= rep.max_n; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      VerifyCase vc = make_case(label(alpha));
      for (const auto& u : enumerate_standard(alpha, StandardKind::Immaculate)) {
        const RecordingPair pq = insert_word(immaculate_reading_word(u));
        check(vc, immaculate_descent_set(u) == young_descent_set(pq.p),
              "descent sets differ for " + u.to_text() + " -> " + pq.p.to_text());
      }
      rep.cases.push_back(std::move(vc));
    }
  }
}

void run_triple_agreement(VerifyReport& rep) {
  for (int n = 1; n <= rep.max_n; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      VerifyCase vc = make_case(label(alpha));
      // Distinct recording tableaux per shape; each pairs with every SYCT of
      // that shape, which accounts for all standard immaculate tableaux.
      std::set<Filling> recordings;
      std::size_t sits = 0;
      for (const auto& u : enumerate_standard(alpha, StandardKind::Immaculate)) {
        recordings.insert(insert_word(immaculate_reading_word(u)).q);
        ++sits;
      }
      BasisExpansion by_insertion{Basis::YoungQS, n, {}};
      for (const auto& q : recordings) by_insertion.add(q.shape(), 1);
      std::size_t pairs = 0;
      for (const auto& [beta, c] : by_insertion.coeffs) {
        pairs += static_cast<std::size_t>(c) * enumerate_standard(beta, StandardKind::Syct).size();
      }
      check(vc, pairs == sits,
            std::to_string(sits) + " standard immaculate tableaux but " + std::to_string(pairs) +
                " (SYCT, DIRT) pairs");

      const BasisExpansion by_dirts = dimm_to_yqs(alpha);
      const BasisExpansion by_tree = rw_forward(alpha).expansion;
      check(vc, by_insertion == by_dirts,
            "insertion " + expansion_text(by_insertion) + " vs DIRTs " + expansion_text(by_dirts));
      check(vc, by_tree == by_dirts,
            "forward tree " + expansion_text(by_tree) + " vs DIRTs " + expansion_text(by_dirts));
      const BasisExpansion dual_tree = rw_dual(alpha).expansion;
      const BasisExpansion transposed = yns_to_imm(alpha);
      check(vc, dual_tree == transposed,
            "dual tree " + expansion_text(dual_tree) + " vs transposed DIRTs " + expansion_text(transposed));
      MExpr recombined(n);
      for (const auto& [beta, c] : by_dirts.coeffs) recombined += basis_element(Basis::YoungQS, beta) * c;
      check(vc, recombined == basis_element(Basis::DualImmaculate, alpha),
            "sum of Young QS terms differs from the dual immaculate element");
      rep.cases.push_back(std::move(vc));
    }
  }
}

void run_symmetry(VerifyReport& rep) {
  for (int n = 1; n <= rep.max_n; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      VerifyCase vc = make_case(label(alpha));
      const MExpr f = basis_element(Basis::DualImmaculate, alpha);
      const bool hook = is_reverse_hook(alpha);
      check(vc, is_symmetric(f) == hook,
            std::string("is_symmetric is ") + (hook ? "false" : "true") + " for " + alpha.to_string());
      if (hook) check(vc, f == schur_m_expansion(alpha), "differs from the Schur function");
      rep.cases.push_back(std::move(vc));
    }
  }
}

void run_positivity(VerifyReport& rep) {
  for (int total = 2; total <= rep.max_n; ++total) {
    for (int a = 1; a < total; ++a) {
      for (const auto& lambda : partitions_of(a)) {
        const MExpr s = schur_m_expansion(lambda);
        for (const auto& alpha : compositions_of(total - a)) {
          VerifyCase vc = make_case("lambda=" + lambda.to_string() + " alpha=" + alpha.to_string());
          const BasisExpansion e =
              expand_in(quasi_shuffle(s, basis_element(Basis::DualImmaculate, alpha)), Basis::YoungQS);
          const bool ok = std::all_of(e.coeffs.begin(), e.coeffs.end(),
                                      [](const auto& kv) { return kv.second >= 0; });
          check(vc, ok, "negative Young QS coefficient in " + expansion_text(e));
          rep.cases.push_back(std::move(vc));
        }
      }
    }
  }
  if (rep.max_n >= 4) {
    VerifyCase vc = make_case("negative witness lambda=2,1 alpha=1");
    const BasisExpansion e =
        expand_in(quasi_shuffle(schur_m_expansion({2, 1}), basis_element(Basis::DualImmaculate, {1})),
                  Basis::DualImmaculate);
    const bool has_negative = std::any_of(e.coeffs.begin(), e.coeffs.end(),
                                          [](const auto& kv) { return kv.second < 0; });
    check(vc, has_negative, "no negative dual immaculate coefficient in " + expansion_text(e));
    rep.cases.push_back(std::move(vc));
  }
}

void run_dominance(VerifyReport& rep) {
  for (int n = 1; n <= rep.max_n; ++n) {
    const auto comps = compositions_of(n);
    std::map<Composition, BasisExpansion, GrevlexLess> matrix;
    for (const auto& alpha : comps) matrix.emplace(alpha, dimm_to_yqs(alpha));

    for (const auto& alpha : comps) {
      VerifyCase vc = make_case(label(alpha));
      const BasisExpansion& c = matrix.at(alpha);
      for (const auto& [beta, v] : c.coeffs) {
        check(vc, beta.length() == alpha.length() && dominates(alpha, beta),
              "nonzero coefficient at " + beta.to_string() + " not dominated by " + alpha.to_string());
      }
      check(vc, c.coefficient(alpha) == 1, "diagonal coefficient is " + std::to_string(c.coefficient(alpha)));
      if (is_partition(alpha)) {
        // Column of a partition: only the partition itself reaches it.
        for (const auto& other : comps) {
          const Coeff v = matrix.at(other).coefficient(alpha);
          check(vc, v == (other == alpha ? 1 : 0),
                "coefficient of YQS(" + alpha.to_string() + ") in DImm(" + other.to_string() +
                    ") is " + std::to_string(v));
        }
        const BasisExpansion single{Basis::Immaculate, n, {{alpha, 1}}};
        const BasisExpansion d = yns_to_imm(alpha);
        check(vc, d == single, "dual partition expansion " + expansion_text(d) + " is not a singleton");
        // Every rearrangement of the partition appears in its own expansion.
        std::vector<int> parts = alpha.as_vector();
        std::sort(parts.begin(), parts.end());
        do {
          check(vc, c.coefficient(Composition(parts)) > 0,
                "rearrangement " + Composition(parts).to_string() + " missing");
        } while (std::next_permutation(parts.begin(), parts.end()));
      }
      rep.cases.push_back(std::move(vc));
    }
  }
}

}  // namespace

std::string to_string(Suite s) {
  for (const auto& [suite, name] : kSuiteNames) {
    if (suite == s) return std::string(name);
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (const auto& [suite, n] : kSuiteNames) {
    if (n == name) return suite;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& [suite, name] : kSuiteNames) out.push_back(suite);
  return out;
}

bool VerifyReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const VerifyCase& c) { return c.passed; });
}

std::size_t VerifyReport::total_checks() const {
  std::size_t sum = 0;
  for (const auto& c : cases) sum += c.checks;
  return sum;
}

std::optional<VerifyCase> VerifyReport::first_failure() const {
  for (const auto& c : cases) {
    if (!c.passed) return c;
  }
  return std::nullopt;
}

VerifyReport run_suite(Suite s, int max_n) {
  if (max_n < 1) throw std::invalid_argument("run_suite: max_n must be at least 1");
  VerifyReport rep;
  rep.suite = s;
  rep.max_n = max_n;
  try {
    switch (s) {
      case Suite::Inverse: run_inverse(rep); break;
      case Suite::Descents: run_descents(rep); break;
      case Suite::TripleAgreement: run_triple_agreement(rep); break;
      case Suite::Symmetry: run_symmetry(rep); break;
      case Suite::Positivity: run_positivity(rep); break;
      case Suite::Dominance: run_dominance(rep); break;
    }
  } catch (const std::exception& e) {
    // A precondition failure inside the library is itself a counterexample.
    VerifyCase c = make_case("exception");
    check(c, false, e.what());
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

}  // namespace qsc
