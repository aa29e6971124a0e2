// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every comparison is exact; the only tolerance is the number of allowed
// failures per suite, pinned at zero below.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qsc/dirt.hpp"
#include "qsc/insertion.hpp"
#include "qsc/qsym.hpp"
#include "qsc/rw_tree.hpp"
#include "qsc/tableau.hpp"
#include "qsc/verify.hpp"

using namespace qsc;

namespace {

constexpr std::size_t kAllowedFailures = 0;
constexpr int kInverseMaxN = 7;
constexpr int kDescentsMaxN = 7;
constexpr int kTripleMaxN = 6;
constexpr int kOracleMaxN = 5;
constexpr int kSymmetryMaxN = 7;
constexpr int kPositivityMaxN = 6;
constexpr int kDominanceMaxN = 7;
constexpr int kConjectureMaxN = 7;

// Collects the failed sub-checks of one criterion.
struct Checker {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

BasisExpansion make(Basis b, int n, std::initializer_list<std::pair<Composition, Coeff>> terms) {
  BasisExpansion e{b, n, {}};
  for (const auto& [a, c] : terms) e.add(a, c);
  return e;
}

std::vector<Entry> word(std::initializer_list<int> xs) {
  std::vector<Entry> out;
  for (int x : xs) out.push_back(x == 0 ? Entry::infinity() : Entry(x));
  return out;
}

void worked_examples(Checker& ck) {
  const InsertionResult ins = insert(Filling({{2}, {3, 4, 7}, {6, 8}}), 5);
  ck(ins.tableau == Filling({{2, 8}, {3, 4, 5}, {6, 7}}), "bumping example tableau");
  ck(ins.bumping_path == std::vector<Cell>{{3, 2}, {2, 3}, {2, 1}}, "bumping example path");

  const InsertionResult nr = insert(Filling({{1, 3}, {4, 5}}), 2);
  ck(nr.tableau == Filling({{1, 2}, {3}, {4, 5}}) && nr.created_row, "new-row example");

  const RaptureResult r5 = rapture(Filling({{2, 8}, {3, 4, 5}, {6, 7}}), {2, 1});
  ck(r5.tableau == Filling({{2}, {3, 4, 7}, {6, 8}}) && r5.output == 5, "rapture with evictions");
  const RaptureResult r2 = rapture(Filling({{1, 2}, {3}, {4, 5}}), {1, 2});
  ck(r2.tableau == Filling({{1, 3}, {4, 5}}) && r2.output == 2, "rapture closing a row");

  const std::vector<int> w{4, 6, 9, 2, 8, 1, 3, 5, 7};
  const RecordingPair pq = insert_word(w);
  ck(pq.p == Filling({{1, 9}, {2, 3, 5, 7}, {4, 6, 8}}), "word example P");
  ck(pq.q == Filling({{6, 7}, {4, 5, 8, 9}, {1, 2, 3}}), "word example Q");

  const Filling t({{1}, {2, 3, 5}, {4, 6}});
  ck(young_reading_word(t) == word({0, 0, 5, 6, 3, 0, 4, 2, 1}), "Young reading word");
  ck(immaculate_reading_word(t) == std::vector<int>{4, 6, 2, 3, 5, 1}, "immaculate reading word");

  // The three standard immaculate tableaux of shape (2,2): SIT, SYCT, DIRT, F.
  struct Row {
    Filling sit, syct, dirt;
    Composition f;
  };
  const std::vector<Row> table{
      {Filling({{1, 2}, {3, 4}}), Filling({{1, 2}, {3, 4}}), Filling({{3, 4}, {1, 2}}), {2, 2}},
      {Filling({{1, 3}, {2, 4}}), Filling({{1, 4}, {2, 3}}), Filling({{3, 4}, {1, 2}}), {1, 2, 1}},
      {Filling({{1, 4}, {2, 3}}), Filling({{1}, {2, 3, 4}}), Filling({{3}, {1, 2, 4}}), {1, 3}},
  };
  const auto sits = enumerate_standard({2, 2}, StandardKind::Immaculate);
  ck(sits.size() == table.size(), "three standard immaculate tableaux of shape (2,2)");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    const RecordingPair got = insert_word(immaculate_reading_word(row.sit));
    const std::string tag = "SIT/SYCT/DIRT row " + std::to_string(i + 1);
    ck(got.p == row.syct, tag + " SYCT");
    ck(got.q == row.dirt && is_dirt(got.q), tag + " DIRT");
    ck(composition_from_set(immaculate_descent_set(row.sit), 4) == row.f, tag + " F of SIT");
    ck(composition_from_set(young_descent_set(row.syct), 4) == row.f, tag + " F of SYCT");
  }

  ck(row_strip_shape(Filling({{5}, {2, 3, 4, 7}, {1, 6}})) == Composition{1, 3, 3}, "row strip example");
}

void expansion_goldens(Checker& ck) {
  ck(dimm_f_expansion({1, 2, 1}) == make(Basis::Fundamental, 4, {{{1, 2, 1}, 1}, {{1, 1, 2}, 1}}),
     "DImm(1,2,1) in F");
  ck(yqs_f_expansion({1, 2, 1}) == make(Basis::Fundamental, 4, {{{1, 2, 1}, 1}}), "YQS(1,2,1) in F");
  ck(dimm_f_expansion({2, 2}) == make(Basis::Fundamental, 4, {{{2, 2}, 1}, {{1, 2, 1}, 1}, {{1, 3}, 1}}),
     "DImm(2,2) in F");
  const BasisExpansion d22 = make(Basis::YoungQS, 4, {{{2, 2}, 1}, {{1, 3}, 1}});
  ck(dimm_to_yqs({2, 2}) == d22, "DImm(2,2) in YQS via DIRTs");
  ck(expand_in(basis_element(Basis::DualImmaculate, {2, 2}), Basis::YoungQS) == d22, "DImm(2,2) in YQS exact");
  const BasisExpansion d222 = make(
      Basis::YoungQS, 6, {{{2, 2, 2}, 1}, {{2, 1, 3}, 1}, {{1, 3, 2}, 1}, {{1, 2, 3}, 2}, {{1, 1, 4}, 1}});
  ck(dimm_to_yqs({2, 2, 2}) == d222, "DImm(2,2,2) in YQS via DIRTs");
  ck(expand_in(basis_element(Basis::DualImmaculate, {2, 2, 2}), Basis::YoungQS) == d222,
     "DImm(2,2,2) in YQS exact");
  ck(rw_forward({2, 2, 2}).expansion == d222, "DImm(2,2,2) via forward tree");
  const BasisExpansion y123 =
      make(Basis::Immaculate, 6,
           {{{3, 2, 1}, 1}, {{2, 3, 1}, 1}, {{3, 1, 2}, 1}, {{2, 2, 2}, 2}, {{1, 3, 2}, 1}, {{2, 1, 3}, 1}, {{1, 2, 3}, 1}});
  ck(yns_to_imm({1, 2, 3}) == y123, "YNS(1,2,3) in Imm via DIRTs");
  ck(rw_dual({1, 2, 3}).expansion == y123, "YNS(1,2,3) via dual tree");
}

void oracle_equivalence(Checker& ck) {
  for (int n = 1; n <= kOracleMaxN; ++n) {
    for (const auto& a : compositions_of(n)) {
      const MExpr y = basis_element(Basis::YoungQS, a);
      const MExpr d = basis_element(Basis::DualImmaculate, a);
      for (const auto& g : compositions_of(n)) {
        const std::string tag = a.to_string() + " at " + g.to_string();
        ck(y.coefficient(g) == oracle::filling_count(a, g, true), "YQS " + tag);
        ck(d.coefficient(g) == oracle::filling_count(a, g, false), "DImm " + tag);
        ck(y.coefficient(g) == monomial_coefficient_oracle(Basis::YoungQS, a, g), "YQS library oracle " + tag);
        ck(d.coefficient(g) == monomial_coefficient_oracle(Basis::DualImmaculate, a, g),
           "DImm library oracle " + tag);
      }
    }
  }
}

void suite(Checker& ck, Suite s, int max_n, std::string* notes = nullptr) {
  const VerifyReport rep = run_suite(s, max_n);
  std::size_t failed = 0;
  for (const auto& c : rep.cases) failed += c.passed ? 0 : 1;
  ck.count += rep.total_checks();
  if (failed > kAllowedFailures) {
    const auto f = rep.first_failure();
    ck.failures.push_back(to_string(s) + ": " + std::to_string(failed) + " failing cases, first " +
                          (f ? f->label + " " + f->detail : std::string{}));
  }
  if (notes) {
    for (const auto& [k, v] : rep.notes) *notes += " " + k + "=" + std::to_string(v);
  }
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& title, const std::function<void(Checker&)>& body,
                    const std::string& extra = {}) {
    Checker ck;
    std::string where;
    try {
      body(ck);
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = ck.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << " (" << ck.count
              << " checks";
    if (!ok) std::cout << ", " << ck.failures.size() << " failed; first: " << ck.failures.front();
    std::cout << ")" << extra << "\n";
  };

  report(1, "worked-example goldens", worked_examples);
  report(2, "expansion goldens", expansion_goldens);
  std::string inverse_notes;
  report(3, "insertion and rapture are mutually inverse, n <= 7",
         [&](Checker& ck) { suite(ck, Suite::Inverse, kInverseMaxN, &inverse_notes); });
  if (!inverse_notes.empty()) std::cout << "         notes:" << inverse_notes << "\n";
  report(4, "descent sets preserved by insertion, n <= 7",
         [](Checker& ck) { suite(ck, Suite::Descents, kDescentsMaxN); });
  report(5, "insertion, DIRT enumeration and both trees agree, n <= 6",
         [](Checker& ck) { suite(ck, Suite::TripleAgreement, kTripleMaxN); });
  report(6, "descent-derived monomial coefficients equal brute-force counts, n <= 5", oracle_equivalence);
  report(7, "symmetric exactly at (n-k,1^k), equal to the Schur function, n <= 7",
         [](Checker& ck) { suite(ck, Suite::Symmetry, kSymmetryMaxN); });
  report(8, "Schur times dual immaculate is Young QS positive, total degree <= 6; negative witness",
         [](Checker& ck) { suite(ck, Suite::Positivity, kPositivityMaxN); });
  report(9, "dominance, equal lengths, unit diagonal, partition columns, n <= 7",
         [](Checker& ck) { suite(ck, Suite::Dominance, kDominanceMaxN); });
  std::cout << "         note: for a partition lambda, dimm_to_yqs(lambda) is not a singleton (every\n"
               "         rearrangement of lambda appears); what is checked is that lambda occurs only in\n"
               "         dimm_to_yqs(lambda) among all alpha of that size, and yns_to_imm(lambda) = {lambda:1}.\n";

  // Empirical: reported, never asserted. Only the pinned case can fail.
  std::ostringstream conj;
  report(10, "conjecture report n <= 7 with pinned YQS(2,1) = DImm(2,1) - DImm(1,2)", [&](Checker& ck) {
    const ConjectureReport r3 = check_conjectures(3);
    ck(r3.expansions.at({2, 1}) == make(Basis::DualImmaculate, 3, {{{2, 1}, 1}, {{1, 2}, -1}}),
       "pinned YQS(2,1)");
    for (int n = 1; n <= kConjectureMaxN; ++n) {
      const ConjectureReport r = check_conjectures(n);
      conj << "         n=" << n << ": range/sum-rule violations "
           << r.range_violations.size() + r.sum_rule_violations.size() << ", alternating violations "
           << r.alternating_violations.size() << " over " << r.distinct_part_partitions_checked
           << " distinct-part partitions\n";
    }
  });
  std::cout << conj.str();

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
