#include "qsc/qsym.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "qsc/dirt.hpp"
#include "qsc/tableau.hpp"

namespace qsc {

namespace mp = boost::multiprecision;
using Rational = mp::cpp_rational;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (add)");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow (mul)");
  return r;
}

namespace {

void add_into(CoeffMap& m, const Composition& alpha, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(alpha, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) m.erase(it);
}

Coeff lookup(const CoeffMap& m, const Composition& alpha) {
  auto it = m.find(alpha);
  return it == m.end() ? 0 : it->second;
}

// Read-mostly memo table. Values are computed outside the lock; the first
// writer wins so every reader sees one value per key.
template <class Key, class Value, class Less = std::less<Key>>
class Memo {
 public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value, Less> table_;
};

}  // namespace

// ---- MExpr ----------------------------------------------------------------

MExpr MExpr::monomial(const Composition& alpha, Coeff c) {
  MExpr out(alpha.size());
  out.add(alpha, c);
  return out;
}

Coeff MExpr::coefficient(const Composition& alpha) const { return lookup(coeffs_, alpha); }

void MExpr::add(const Composition& alpha, Coeff c) {
  if (alpha.size() != degree_) {
    throw std::invalid_argument("MExpr: composition " + alpha.to_string() + " is not of degree " +
                                std::to_string(degree_));
  }
  add_into(coeffs_, alpha, c);
}

MExpr& MExpr::operator+=(const MExpr& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) throw std::invalid_argument("MExpr: degree mismatch in sum");
  for (const auto& [a, c] : other.coeffs_) add_into(coeffs_, a, c);
  return *this;
}

MExpr& MExpr::operator-=(const MExpr& other) { return *this += other * Coeff{-1}; }

MExpr& MExpr::operator*=(Coeff c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [a, v] : coeffs_) v = checked_mul(v, c);
  return *this;
}

// ---- bases ----------------------------------------------------------------

std::string to_string(Basis b) {
  switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::Fundamental: return "fundamental";
    case Basis::YoungQS: return "youngqs";
    case Basis::DualImmaculate: return "dualimmaculate";
    case Basis::Immaculate: return "immaculate";
    case Basis::YoungNCSchur: return "youngncschur";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '-' || ch == '_') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (key == "m" || key == "monomial") return Basis::Monomial;
  if (key == "f" || key == "fundamental") return Basis::Fundamental;
  if (key == "youngqs" || key == "yqs") return Basis::YoungQS;
  if (key == "dualimmaculate" || key == "dimm") return Basis::DualImmaculate;
  if (key == "immaculate" || key == "imm") return Basis::Immaculate;
  if (key == "youngncschur" || key == "yns") return Basis::YoungNCSchur;
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

bool is_qsym_basis(Basis b) {
  return b == Basis::Monomial || b == Basis::Fundamental || b == Basis::YoungQS ||
         b == Basis::DualImmaculate;
}

Coeff BasisExpansion::coefficient(const Composition& alpha) const { return lookup(coeffs, alpha); }

void BasisExpansion::add(const Composition& alpha, Coeff c) {
  if (alpha.size() != degree) {
    throw std::invalid_argument("BasisExpansion: composition " + alpha.to_string() +
                                " is not of degree " + std::to_string(degree));
  }
  add_into(coeffs, alpha, c);
}

// ---- F <-> M ----------------------------------------------------------------

MExpr f_to_m(const Composition& alpha) {
  MExpr out(alpha.size());
  for (const auto& beta : refinements(alpha)) out.add(beta, 1);
  return out;
}

BasisExpansion m_to_f(const MExpr& f) {
  BasisExpansion out{Basis::Fundamental, f.degree(), {}};
  for (const auto& [alpha, c] : f.coeffs()) {
    for (const auto& beta : refinements(alpha)) {
      const bool odd = (beta.length() - alpha.length()) % 2 == 1;
      out.add(beta, odd ? -c : c);
    }
  }
  return out;
}

namespace {

BasisExpansion descent_bucketing(const Composition& alpha, StandardKind kind) {
  BasisExpansion out{Basis::Fundamental, alpha.size(), {}};
  const int n = alpha.size();
  for (const auto& t : enumerate_standard(alpha, kind)) {
    const auto des = kind == StandardKind::Syct ? young_descent_set(t) : immaculate_descent_set(t);
    out.add(composition_from_set(des, n), 1);
  }
  return out;
}

}  // namespace

BasisExpansion yqs_f_expansion(const Composition& alpha) {
  return descent_bucketing(alpha, StandardKind::Syct);
}

BasisExpansion dimm_f_expansion(const Composition& alpha) {
  return descent_bucketing(alpha, StandardKind::Immaculate);
}

MExpr to_mexpr(const BasisExpansion& e) {
  if (!is_qsym_basis(e.basis)) {
    throw std::invalid_argument("to_mexpr: " + to_string(e.basis) + " is not a QSym basis");
  }
  MExpr out(e.degree);
  for (const auto& [alpha, c] : e.coeffs) out += basis_element(e.basis, alpha) * c;
  return out;
}

MExpr basis_element(Basis b, const Composition& alpha) {
  static Memo<std::pair<int, Composition>, MExpr> cache;
  switch (b) {
    case Basis::Monomial: return MExpr::monomial(alpha);
    case Basis::Fundamental: return f_to_m(alpha);
    case Basis::YoungQS:
    case Basis::DualImmaculate:
      return cache.get({static_cast<int>(b), alpha}, [&] {
        const BasisExpansion fe =
            b == Basis::YoungQS ? yqs_f_expansion(alpha) : dimm_f_expansion(alpha);
        MExpr out(alpha.size());
        for (const auto& [beta, c] : fe.coeffs) out += f_to_m(beta) * c;
        return out;
      });
    default:
      throw std::invalid_argument("basis_element: " + to_string(b) + " is not a QSym basis");
  }
}

Coeff monomial_coefficient_oracle(Basis b, const Composition& alpha, const Composition& gamma) {
  if (b != Basis::YoungQS && b != Basis::DualImmaculate) {
    throw std::invalid_argument("monomial_coefficient_oracle: basis must be youngqs or dualimmaculate");
  }
  if (alpha.size() != gamma.size()) {
    throw std::invalid_argument("monomial_coefficient_oracle: degree mismatch between " +
                                alpha.to_string() + " and " + gamma.to_string());
  }
  const auto kind = b == Basis::YoungQS ? SemistandardKind::Ssyct : SemistandardKind::Immaculate;
  Coeff count = 0;
  const int m = static_cast<int>(gamma.length());
  for (const auto& t : enumerate_semistandard(alpha, kind, m)) {
    if (weight(t) == gamma.as_vector()) ++count;
  }
  return count;
}

MExpr schur_m_expansion(const Composition& lambda) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("schur_m_expansion: " + lambda.to_string() + " is not a partition");
  }
  std::vector<int> parts = lambda.as_vector();
  std::sort(parts.begin(), parts.end());
  MExpr out(lambda.size());
  do {
    out += basis_element(Basis::YoungQS, Composition(parts));
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

// ---- product ----------------------------------------------------------------

namespace {

void shuffle_words(std::span<const int> u, std::span<const int> v, std::vector<int>& prefix,
                   CoeffMap& out, Coeff c) {
  if (u.empty() || v.empty()) {
    std::vector<int> w = prefix;
    w.insert(w.end(), u.begin(), u.end());
    w.insert(w.end(), v.begin(), v.end());
    add_into(out, Composition(std::move(w)), c);
    return;
  }
  prefix.push_back(u[0]);
  shuffle_words(u.subspan(1), v, prefix, out, c);
  prefix.back() = v[0];
  shuffle_words(u, v.subspan(1), prefix, out, c);
  prefix.back() = u[0] + v[0];
  shuffle_words(u.subspan(1), v.subspan(1), prefix, out, c);
  prefix.pop_back();
}

}  // namespace

MExpr quasi_shuffle(const MExpr& f, const MExpr& g) {
  CoeffMap acc;
  std::vector<int> prefix;
  for (const auto& [a, ca] : f.coeffs()) {
    for (const auto& [b, cb] : g.coeffs()) {
      shuffle_words(a.parts(), b.parts(), prefix, acc, checked_mul(ca, cb));
    }
  }
  MExpr out(f.degree() + g.degree());
  for (const auto& [gamma, c] : acc) out.add(gamma, c);
  return out;
}

// ---- exact change of basis ---------------------------------------------------

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse over Q with partial pivoting on the first nonzero.
RMatrix invert(RMatrix a) {
  const std::size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("expand_in: singular change-of-basis matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (a[col][j] != 0) a[r][j] -= factor * a[col][j];
        if (inv[col][j] != 0) inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Rows: target basis elements; columns: monomial compositions. Both indexed in
// GrevlexLess order.
const RMatrix& inverse_for(Basis target, int n) {
  static Memo<std::pair<int, int>, std::shared_ptr<const RMatrix>> cache;
  auto ptr = cache.get({static_cast<int>(target), n}, [&] {
    const auto comps = compositions_of(n);
    const std::size_t dim = comps.size();
    // a[i][j] = coefficient of M_{comps[i]} in target_{comps[j]}
    RMatrix a(dim, std::vector<Rational>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
      const MExpr col = basis_element(target, comps[j]);
      for (std::size_t i = 0; i < dim; ++i) a[i][j] = col.coefficient(comps[i]);
    }
    return std::make_shared<const RMatrix>(invert(std::move(a)));
  });
  return *ptr;
}

}  // namespace

BasisExpansion expand_in(const MExpr& f, Basis target) {
  if (target != Basis::Fundamental && target != Basis::YoungQS && target != Basis::DualImmaculate &&
      target != Basis::Monomial) {
    throw std::invalid_argument("expand_in: unsupported target " + to_string(target));
  }
  BasisExpansion out{target, f.degree(), {}};
  if (target == Basis::Monomial) {
    out.coeffs = f.coeffs();
    return out;
  }
  if (f.is_zero()) return out;
  const int n = f.degree();
  const auto comps = compositions_of(n);
  const RMatrix& inv = inverse_for(target, n);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    Rational x = 0;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const Coeff b = f.coefficient(comps[j]);
      if (b != 0 && inv[i][j] != 0) x += inv[i][j] * b;
    }
    if (x == 0) continue;
    if (mp::denominator(x) != 1) {
      throw std::logic_error("expand_in: non-integral coefficient at " + comps[i].to_string());
    }
    const mp::cpp_int num = mp::numerator(x);
    if (num > std::numeric_limits<Coeff>::max() || num < std::numeric_limits<Coeff>::min()) {
      throw std::overflow_error("expand_in: coefficient exceeds 64 bits");
    }
    out.add(comps[i], static_cast<Coeff>(num));
  }
  return out;
}

bool is_symmetric(const MExpr& f) {
  std::map<Composition, Coeff> class_value;
  for (const auto& alpha : compositions_of(f.degree())) {
    const Coeff c = f.coefficient(alpha);
    auto [it, inserted] = class_value.try_emplace(sorted_decreasing(alpha), c);
    if (!inserted && it->second != c) return false;
  }
  return true;
}

// ---- DIRT-count maps -----------------------------------------------------------

BasisExpansion dimm_to_yqs(const Composition& alpha) {
  BasisExpansion out{Basis::YoungQS, alpha.size(), {}};
  const Composition strips = reverse(alpha);
  const Composition sorted = sorted_decreasing(alpha);
  for (const auto& beta : compositions_of(alpha.size(), alpha.length())) {
    if (!dominates(sorted, beta)) continue;
    out.add(beta, static_cast<Coeff>(count_dirts(beta, strips)));
  }
  return out;
}

BasisExpansion yns_to_imm(const Composition& alpha) {
  BasisExpansion out{Basis::Immaculate, alpha.size(), {}};
  for (const auto& beta : compositions_of(alpha.size(), alpha.length())) {
    out.add(beta, static_cast<Coeff>(count_dirts(alpha, reverse(beta))));
  }
  return out;
}

// ---- conjectures ---------------------------------------------------------------

bool is_hook_shape(const Composition& alpha) {
  if (alpha.empty()) return false;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    if (alpha[i] != 1) return false;
  }
  return true;
}

ConjectureReport check_conjectures(int n) {
  if (n < 1) throw std::invalid_argument("check_conjectures: n must be at least 1");
  ConjectureReport rep;
  rep.n = n;
  for (const auto& alpha : compositions_of(n)) {
    BasisExpansion b = expand_in(basis_element(Basis::YoungQS, alpha), Basis::DualImmaculate);
    Coeff sum = 0;
    for (const auto& [beta, c] : b.coeffs) {
      sum = checked_add(sum, c);
      if (c < -1 || c > 1) rep.range_violations.push_back({alpha, beta, c});
    }
    const Coeff expected = is_hook_shape(alpha) ? 1 : 0;
    if (sum != expected) rep.sum_rule_violations.push_back({alpha, expected, sum});
    rep.expansions.emplace(alpha, std::move(b));
  }

  for (const auto& lambda : partitions_of(n)) {
    const auto& parts = lambda.as_vector();
    if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) continue;
    ++rep.distinct_part_partitions_checked;
    // Sign of a rearrangement: one factor -1 per pair of positions that is
    // in increasing order (lambda itself has none).
    std::map<Composition, Coeff, GrevlexLess> expected;
    std::vector<int> perm = parts;
    std::sort(perm.begin(), perm.end());
    do {
      int ascents = 0;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) ascents += perm[i] < perm[j];
      }
      expected[Composition(perm)] = ascents % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const BasisExpansion& actual = rep.expansions.at(lambda);
    for (const auto& beta : compositions_of(n)) {
      auto it = expected.find(beta);
      const Coeff e = it == expected.end() ? 0 : it->second;
      const Coeff a = actual.coefficient(beta);
      if (e != a) rep.alternating_violations.push_back({lambda, beta, e, a});
    }
  }
  return rep;
}

}  // namespace qsc
