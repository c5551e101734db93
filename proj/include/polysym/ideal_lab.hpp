#pragma once

// Per-multidegree linear algebra for the kernel of t(w) -> [w] and for the
// ideal (P) generated by the primary invariants [x_j^k], k <= n.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polysym/charring.hpp"
#include "polysym/congruence_tables.hpp"
#include "polysym/free_algebra.hpp"
#include "polysym/linalg.hpp"
#include "polysym/notation.hpp"
#include "polysym/parallel.hpp"
#include "polysym/relations.hpp"
#include "polysym/schur.hpp"

namespace polysym {

/// Degree through which the kernel must be checked: n^2 - n + 2.
inline int generation_degree_bound(int n) { return n * n - n + 2; }
inline constexpr int kGenerationDegreeBoundN3 = 8;

// ---------------------------------------------------------------------------
// Components of F

/// All t-monomials of a fixed weight with index degree at most cap, decreasing.
class FComponent {
 public:
  FComponent(int m, int cap, ExpVec alpha) : space_(t_space(m, cap)), alpha_(alpha) {
    if (alpha_.size() != static_cast<std::size_t>(m)) throw StructuralError("weight length differs from m");
    std::vector<ExpVec> words;
    for (const auto& w : index_words(m, cap))
      if (w.divides(alpha_)) words.push_back(w);
    enumerate(words, 0, alpha_, TMonomial{});
    std::sort(monos_.begin(), monos_.end(), std::greater<>());
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<std::uint32_t>(i));
  }

  const TSpace& space() const { return space_; }
  const ExpVec& multidegree() const { return alpha_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<TMonomial>& monomials() const { return monos_; }

  std::optional<std::uint32_t> index_of(const TMonomial& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  RatVec coordinates(const FPoly& f) const {
    RatVec out;
    out.reserve(f.size());
    for (const auto& [mono, c] : f.terms()) {
      auto idx = index_of(mono);
      if (!idx) throw DomainError("polynomial has a term outside the component");
      out.emplace_back(*idx, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Coordinates of mono * f, where mono * f must land in this component.
  RatVec shifted_coordinates(const FPoly& f, const TMonomial& mono) const {
    RatVec out;
    out.reserve(f.size());
    for (const auto& [t, c] : f.terms()) {
      auto idx = index_of(t * mono);
      if (!idx) throw DomainError("product has a term outside the component");
      out.emplace_back(*idx, c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  FPoly element(const RatVec& v) const {
    FPoly out(space_);
    for (const auto& [i, c] : v) out.add_term(monos_.at(i), c);
    return out;
  }

 private:
  void enumerate(const std::vector<ExpVec>& words, std::size_t k, const ExpVec& left, const TMonomial& current) {
    if (left.is_zero()) {
      monos_.push_back(current);
      return;
    }
    if (k == words.size()) return;
    const ExpVec& w = words[k];
    enumerate(words, k + 1, left, current);
    ExpVec rest = left;
    TMonomial grown = current;
    while (w.divides(rest)) {
      rest = rest - w;
      grown = grown * TMonomial::variable(w);
      enumerate(words, k + 1, rest, grown);
    }
  }

  TSpace space_;
  ExpVec alpha_;
  std::vector<TMonomial> monos_;
  std::map<TMonomial, std::uint32_t> index_;
};

/// Coordinates of the image of f in the orbit basis of its multidegree.
inline std::vector<Rational> phi_coordinates(const FPoly& f, const OrbitBasis& basis) {
  std::vector<Rational> out(basis.size());
  for (const auto& [mono, c] : f.terms()) {
    const auto counts = phi_monomial_coordinates(mono, basis);
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] != 0) out[i] += c * counts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kernel components

struct KernelComponent {
  ExpVec multidegree;
  std::size_t dim_f = 0;
  std::size_t phi_rank = 0;  ///< dim of the image, equals dim R^alpha
  std::vector<FPoly> basis;
};

/// Exact basis of the weight-alpha part of ker(t(w) -> [w]) on F with index cap
/// (default n), as the left nullspace of the evaluation matrix.
inline KernelComponent kernel_component(int n, int m, const ExpVec& alpha, int cap = 0) {
  if (cap <= 0) cap = n;
  FComponent fc(m, cap, alpha);
  OrbitBasis basis(n, m, alpha);
  std::vector<std::vector<Integer>> images;
  images.reserve(fc.size());
  for (const auto& mono : fc.monomials()) images.push_back(phi_monomial_coordinates(mono, basis));
  Echelon e(fc.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    RatVec row;
    for (std::size_t i = 0; i < fc.size(); ++i)
      if (images[i][r] != 0) row.emplace_back(static_cast<std::uint32_t>(i), Rational(images[i][r]));
    e.insert(row);
  }
  KernelComponent out{alpha, fc.size(), e.rank(), {}};
  for (const auto& v : e.nullspace()) out.basis.push_back(fc.element(v));
  return out;
}

inline std::vector<FPoly> kernel_component_basis(int n, int m, const ExpVec& alpha, int cap = 0) {
  return kernel_component(n, m, alpha, cap).basis;
}

/// dim K^alpha from the two counting formulas (surjectivity of the evaluation).
inline std::size_t kernel_dimension(int n, int m, const ExpVec& alpha) {
  Integer d = dim_F_component(n, m, alpha) - dim_invariant_component_exact(n, m, alpha);
  if (d < 0) throw ConsistencyError("negative kernel dimension");
  return d.get_ui();
}

// ---------------------------------------------------------------------------
// The ideal (P)

struct PGenerator {
  int symbol = 0;  ///< 0-based
  int power = 0;
  ExpVec rep;  ///< orbit representative of the cofactor
};

struct PCertificateTerm {
  PGenerator generator;
  Rational coeff;
};

struct PMembership {
  ExpVec multidegree;
  bool member = false;
  std::vector<PCertificateTerm> certificate;  ///< p = sum coeff * [x_j^k] * orbit_sum(rep)
  RatVec residue;                             ///< canonical normal form modulo (P)
};

inline std::string certificate_text(const XSpace& s, const PCertificateTerm& t) {
  ExpVec w = ExpVec::unit(static_cast<std::size_t>(s.m), static_cast<std::size_t>(t.generator.symbol), t.generator.power);
  return t.coeff.get_str() + "*[" + word_text(w) + "]*orbit(" + monomial_text(s, t.generator.rep) + ")";
}

/// The multidegree-alpha component of (P), spanned by [x_j^k] * b with b an
/// orbit sum of multidegree alpha - k e_j.
class PComponent {
 public:
  PComponent(int n, int m, const ExpVec& alpha, int max_power)
      : basis_(n, m, alpha), echelon_(basis_.size(), true) {
    for (int j = 0; j < m; ++j) {
      for (int k = 1; k <= max_power && k <= alpha[j]; ++k) {
        const ExpVec cof = alpha - ExpVec::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(j), k);
        const XPoly prim = polarized_power_sum(ExpVec::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(j), k), n).body();
        OrbitBasis cb(n, m, cof);
        for (std::size_t b = 0; b < cb.size(); ++b) {
          XPoly prod = prim * cb.element(b).body();
          RatVec row = dense_to_sparse(representative_coordinates(prod, basis_));
          generators_.push_back({j, k, cb.representatives()[b]});
          rows_.push_back(row);
          echelon_.insert(row, generators_.size() - 1);
        }
      }
    }
  }

  const OrbitBasis& basis() const { return basis_; }
  std::size_t rank() const { return echelon_.rank(); }
  const std::vector<RatVec>& rows() const { return rows_; }
  const std::vector<PGenerator>& generators() const { return generators_; }

  RatVec residue(const std::vector<Rational>& coords) const { return echelon_.remainder(dense_to_sparse(coords)); }

  /// Decides membership; a positive answer carries a certificate that is
  /// re-multiplied and compared exactly before being returned.
  PMembership decide(const std::vector<Rational>& coords) const {
    PMembership out;
    out.multidegree = basis_.multidegree();
    out.residue = residue(coords);
    out.member = out.residue.empty();
    if (!out.member) return out;
    auto combo = echelon_.solve(dense_to_sparse(coords));
    if (!combo) throw ConsistencyError("zero residue without a combination");
    for (const auto& [label, c] : *combo) out.certificate.push_back({generators_.at(label), c});
    verify(out.certificate, coords);
    return out;
  }

  /// Exact check that the certificate multiplies out to the given element.
  void verify(const std::vector<PCertificateTerm>& cert, const std::vector<Rational>& coords) const {
    const XSpace s = basis_.space();
    XPoly lhs(s);
    for (const auto& t : cert) {
      const ExpVec w = ExpVec::unit(static_cast<std::size_t>(s.m), static_cast<std::size_t>(t.generator.symbol), t.generator.power);
      lhs += t.coeff * (polarized_power_sum(w, s.n).body() * orbit_sum(s, t.generator.rep).body());
    }
    XPoly rhs(s);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) rhs += coords[i] * basis_.element(i).body();
    if (!(lhs == rhs)) throw ConsistencyError("membership certificate does not reproduce the element");
  }

 private:
  OrbitBasis basis_;
  Echelon echelon_;
  std::vector<PGenerator> generators_;
  std::vector<RatVec> rows_;
};

/// Lazily built components of (P) for fixed n, m. Not thread-safe.
class PIdeal {
 public:
  PIdeal(int n, int m, int max_power = 0) : n_(n), m_(m), max_power_(max_power > 0 ? max_power : n) {}

  int n() const { return n_; }
  int m() const { return m_; }

  const PComponent& component(const ExpVec& alpha) {
    auto it = cache_.find(alpha);
    if (it == cache_.end()) it = cache_.emplace(alpha, PComponent(n_, m_, alpha, max_power_)).first;
    return it->second;
  }

  /// Membership of the image of a multihomogeneous f in F.
  PMembership decide(const FPoly& f) {
    if (f.space().m != m_) throw StructuralError("expression uses a different number of symbols");
    if (f.is_zero()) return {ExpVec(static_cast<std::size_t>(m_)), true, {}, {}};
    auto alpha = f.multidegree();
    if (!alpha) throw DomainError("expression is not multihomogeneous");
    const PComponent& c = component(*alpha);
    return c.decide(phi_coordinates(f, c.basis()));
  }

  RatVec residue(const FPoly& f) {
    auto alpha = f.multidegree();
    if (!alpha) throw DomainError("expression is not multihomogeneous");
    const PComponent& c = component(*alpha);
    return c.residue(phi_coordinates(f, c.basis()));
  }

 private:
  int n_;
  int m_;
  int max_power_;
  std::map<ExpVec, PComponent> cache_;
};

/// Decides p in (P) with P = {[x_j^k] : k <= n}.
inline PMembership reduce_mod_P(const InvariantPoly& p) {
  const int m = p.m();
  if (p.is_zero()) return {ExpVec(static_cast<std::size_t>(m)), true, {}, {}};
  auto alpha = p.multidegree();
  if (!alpha) throw DomainError("reduction modulo (P) needs a multihomogeneous element");
  PComponent comp(p.n(), m, *alpha, p.n());
  const std::vector<Rational> coords = coordinates(p, comp.basis());
  return comp.decide(coords);
}

// ---------------------------------------------------------------------------
// Table reports

enum class EntryStatus { verified, failed, skipped };

inline const char* status_text(EntryStatus s) {
  switch (s) {
    case EntryStatus::verified:
      return "verified";
    case EntryStatus::failed:
      return "failed";
    default:
      return "skipped";
  }
}

struct TableEntry {
  std::string label;
  std::vector<int> multidegree;
  std::string claim;
  EntryStatus status = EntryStatus::skipped;
  std::string detail;
  std::vector<std::string> witness;
};

struct TableReport {
  int table = 0;
  std::vector<TableEntry> entries;
  std::vector<std::string> notes;

  bool passed() const {
    return std::none_of(entries.begin(), entries.end(), [](const TableEntry& e) { return e.status == EntryStatus::failed; });
  }
  std::size_t count(EntryStatus s) const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [s](const TableEntry& e) { return e.status == s; }));
  }
};

inline ExpVec weight_from(const std::vector<int>& v) { return ExpVec::from(v); }

/// Distinct images of f under all permutations of the symbols, up to nonzero scalars.
inline std::size_t translate_count(const FPoly& f) {
  if (f.is_zero()) throw DomainError("zero element has no translates");
  const int m = f.space().m;
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::string> seen;
  do {
    FPoly g = permute_symbols(f, perm);
    g *= Rational(1) / g.terms().begin()->second;
    seen.insert(g.text());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return seen.size();
}

namespace detail {

inline std::string multidegree_text(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

inline TableEntry count_entry(const std::string& label, const std::vector<int>& md, const std::string& group, std::size_t got,
                              int expected) {
  TableEntry e{label + " " + group + " translates", md, std::to_string(expected), EntryStatus::failed, "", {}};
  e.detail = "computed " + std::to_string(got);
  if (static_cast<int>(got) == expected) e.status = EntryStatus::verified;
  return e;
}

struct MonomialItem {
  std::vector<std::string> members;  ///< more than one for a proportionality chain
  bool zero = false;
};

inline std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline std::vector<MonomialItem> split_items(const std::string& text) {
  std::vector<MonomialItem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    MonomialItem mi;
    if (item.back() == '*') {
      mi.zero = true;
      item = trim(item.substr(0, item.size() - 1));
    }
    std::stringstream cs(item);
    std::string member;
    while (std::getline(cs, member, '~')) mi.members.push_back(trim(member));
    out.push_back(std::move(mi));
  }
  return out;
}

}  // namespace detail

/// Certifies every congruence of the three-symbol (2) or four-symbol (4)
/// relation table and recomputes its translate counts.
inline TableReport verify_congruence_table(int table) {
  if (table != 2 && table != 4) throw DomainError("congruence tables are 2 and 4");
  const int m = table == 2 ? 3 : 4;
  const auto& rows = table == 2 ? congruence_table_m3() : congruence_table_m4();
  TableReport report;
  report.table = table;
  PIdeal ideal(3, m);
  for (const auto& row : rows) {
    const FPoly f = parse_fpoly(row.expression, m, 3);
    TableEntry e{row.relation, row.multidegree, row.expression + " == 0 mod (P)", EntryStatus::failed, "", {}};
    auto alpha = f.multidegree();
    if (!alpha || !(*alpha == weight_from(row.multidegree))) {
      e.detail = "expression is not of the stated multidegree";
    } else {
      PMembership mem = ideal.decide(f);
      if (mem.member) {
        e.status = EntryStatus::verified;
        for (const auto& t : mem.certificate) e.witness.push_back(certificate_text({3, m}, t));
        e.detail = std::to_string(mem.certificate.size()) + " certificate terms";
      } else {
        e.detail = "residue has " + std::to_string(mem.residue.size()) + " nonzero coordinates";
      }
    }
    report.entries.push_back(std::move(e));
    if (row.translates_s3 > 0)
      report.entries.push_back(detail::count_entry(row.relation, row.multidegree, "S_3", translate_count(parse_fpoly(row.expression, 3, 3)),
                                                   row.translates_s3));
    if (row.translates_s4 > 0)
      report.entries.push_back(detail::count_entry(row.relation, row.multidegree, "S_4",
                                                   translate_count(embed(parse_fpoly(row.expression, m, 3), 4)), row.translates_s4));
  }
  return report;
}

/// Products of generators [w] (1 <= deg w <= n) where no w is a power of a single symbol.
inline std::vector<TMonomial> non_primary_monomials(int n, int m, const ExpVec& alpha) {
  FComponent fc(m, n, alpha);
  std::vector<TMonomial> out;
  for (const auto& mono : fc.monomials()) {
    bool primary = false;
    for (const auto& f : mono.factors()) {
      int nonzero = 0;
      for (std::size_t j = 0; j < f.word.size(); ++j) nonzero += f.word[j] > 0;
      if (nonzero == 1) primary = true;
    }
    if (!primary) out.push_back(mono);
  }
  return out;
}

/// Certifies the zero and proportionality claims of monomial table 1 (three
/// symbols) or 6 (four symbols). Unmarked items are claimed nonzero modulo (P).
inline TableReport verify_monomial_table(int table) {
  if (table != 1 && table != 6) throw DomainError("monomial tables are 1 and 6");
  const int m = table == 1 ? 3 : 4;
  const auto& rows = table == 1 ? monomial_table_m3() : monomial_table_m4();
  TableReport report;
  report.table = table;
  PIdeal ideal(3, m);
  for (const auto& row : rows) {
    const std::string md = detail::multidegree_text(row.multidegree);
    const ExpVec alpha = weight_from(row.multidegree);
    std::set<std::string> listed;
    bool row_all_zero = true;
    for (const auto& item : detail::split_items(row.items)) {
      std::vector<FPoly> members;
      std::vector<RatVec> residues;
      std::string bad;
      for (const auto& text : item.members) {
        FPoly f = parse_fpoly(text, m, 3);
        listed.insert(f.text());
        auto w = f.multidegree();
        if (!w || !(*w == alpha)) bad = text;
        members.push_back(f);
        residues.push_back(bad.empty() ? ideal.residue(f) : RatVec{});
      }
      std::string joined;
      for (const auto& t : item.members) joined += (joined.empty() ? "" : " ~ ") + t;
      if (!bad.empty()) {
        report.entries.push_back({md + " " + joined, row.multidegree, "multidegree", EntryStatus::failed, bad + " has another multidegree", {}});
        row_all_zero = false;
        continue;
      }
      if (item.zero) {
        bool zero = std::all_of(residues.begin(), residues.end(), [](const RatVec& r) { return r.empty(); });
        report.entries.push_back({md + " " + joined, row.multidegree, "== 0 mod (P)", zero ? EntryStatus::verified : EntryStatus::failed, "", {}});
        if (!zero) row_all_zero = false;
        continue;
      }
      row_all_zero = false;
      if (item.members.size() == 1) {
        const bool nonzero = !residues[0].empty();
        report.entries.push_back({md + " " + joined, row.multidegree, "!= 0 mod (P)", nonzero ? EntryStatus::verified : EntryStatus::failed, "", {}});
        continue;
      }
      // Chain: every member nonzero and proportional to the first.
      TableEntry e{md + " " + joined, row.multidegree, "proportional mod (P)", EntryStatus::verified, "", {}};
      const RatVec& base = residues[0];
      if (base.empty()) {
        e.status = EntryStatus::failed;
        e.detail = item.members[0] + " is zero mod (P)";
      }
      for (std::size_t k = 1; k < residues.size() && e.status == EntryStatus::verified; ++k) {
        const RatVec& r = residues[k];
        if (r.empty() || r.front().first != base.front().first) {
          e.status = EntryStatus::failed;
          e.detail = item.members[k] + " is not a nonzero multiple of " + item.members[0];
          break;
        }
        const Rational c = r.front().second / base.front().second;
        RatVec scaled = base;
        for (auto& [i, v] : scaled) v *= c;
        if (scaled != r) {
          e.status = EntryStatus::failed;
          e.detail = item.members[k] + " is not a multiple of " + item.members[0];
          break;
        }
        e.witness.push_back(item.members[k] + " == " + c.get_str() + " * " + item.members[0]);
      }
      report.entries.push_back(std::move(e));
    }
    if (row.all_zero) {
      report.entries.push_back({md + " row", row.multidegree, "all listed products == 0 mod (P)",
                                row_all_zero ? EntryStatus::verified : EntryStatus::failed, "", {}});
    }
    const auto all = non_primary_monomials(3, m, alpha);
    std::size_t covered = 0;
    for (const auto& mono : all)
      if (listed.count(FPoly::monomial(t_space(m, 3), mono).text())) ++covered;
    report.notes.push_back(md + ": " + std::to_string(covered) + " of " + std::to_string(all.size()) +
                           " non-primary products listed");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Secondary generators

struct SecondaryBuild {
  int m = 0;
  int max_degree = 0;
  std::map<ExpVec, std::vector<FPoly>> chosen;
  std::vector<std::string> count_failures;  ///< multidegrees where the target was not reached
  TableReport comparison;
  bool passed() const { return count_failures.empty() && comparison.passed(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [a, v] : chosen) t += v.size();
    return t;
  }
};

/// Tabulated secondary generators in descending multidegrees with at most m symbols.
inline std::map<ExpVec, std::vector<std::string>> tabulated_secondaries(int m) {
  std::map<ExpVec, std::vector<std::string>> out;
  auto add = [&](const SecondaryRow& row) {
    ExpVec a(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < row.multidegree.size(); ++j) {
      if (row.multidegree[j] == 0) continue;
      if (j >= static_cast<std::size_t>(m)) return;
      a.set(j, row.multidegree[j]);
    }
    out[a] = row.generators;
  };
  for (const auto& row : secondary_table_m3()) add(row);
  if (m >= 4)
    for (const auto& row : secondary_table_m4()) add(row);
  return out;
}

inline bool is_descending(const ExpVec& a) {
  for (std::size_t j = 0; j + 1 < a.size(); ++j)
    if (a[j] < a[j + 1]) return false;
  return true;
}

/// Greedy choice, per multidegree, of non-primary products that are independent
/// modulo (P), until the count predicted by the secondary Hilbert series is met.
inline SecondaryBuild build_secondary_generators(int m, int max_degree) {
  if (m < 1 || m > 4) throw DomainError("secondary generators are built for m <= 4");
  SecondaryBuild out;
  out.m = m;
  out.max_degree = max_degree;
  out.comparison.table = m >= 4 ? 5 : 3;
  const TruncatedSeries target = secondary_hilbert(m, max_degree);
  PIdeal ideal(3, m);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& alpha : weights_of_degree(m, d)) {
      const PComponent& comp = ideal.component(alpha);
      Echelon e(comp.basis().size());
      for (const auto& row : comp.rows()) e.insert(row);
      const std::size_t goal = target.at(alpha).get_ui();
      std::vector<FPoly> picked;
      for (const auto& mono : non_primary_monomials(3, m, alpha)) {
        if (picked.size() == goal) break;
        FPoly f = FPoly::monomial(t_space(m, 3), mono);
        if (e.insert(dense_to_sparse(phi_coordinates(f, comp.basis())))) picked.push_back(std::move(f));
      }
      // Quotient dimension must also equal the target exactly.
      const std::size_t quotient = comp.basis().size() - comp.rank();
      if (picked.size() != goal || quotient != goal) {
        std::ostringstream os;
        os << "multidegree " << detail::multidegree_text(alpha.to_vector()) << ": target " << goal << ", chosen " << picked.size()
           << ", quotient dimension " << quotient;
        out.count_failures.push_back(os.str());
      }
      if (!picked.empty()) out.chosen[alpha] = std::move(picked);
    }
  }
  // Compare counts with the tables at descending multidegrees.
  const auto table = tabulated_secondaries(m);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& alpha : weights_of_degree(m, d)) {
      if (!is_descending(alpha)) continue;
      auto it = table.find(alpha);
      const std::size_t expected = it == table.end() ? 0 : it->second.size();
      auto ct = out.chosen.find(alpha);
      const std::size_t got = ct == out.chosen.end() ? 0 : ct->second.size();
      if (expected == 0 && got == 0) continue;
      TableEntry e{detail::multidegree_text(alpha.to_vector()) + " count", alpha.to_vector(), std::to_string(expected),
                   got == expected ? EntryStatus::verified : EntryStatus::failed, "built " + std::to_string(got), {}};
      out.comparison.entries.push_back(std::move(e));
      if (it == table.end()) continue;
      // The tabulated generators themselves are independent modulo (P).
      const PComponent& comp = ideal.component(alpha);
      Echelon e2(comp.basis().size());
      for (const auto& row : comp.rows()) e2.insert(row);
      bool independent = true;
      for (const auto& g : it->second) {
        FPoly f = parse_fpoly(g, m, 3);
        if (!e2.insert(dense_to_sparse(phi_coordinates(f, comp.basis())))) independent = false;
      }
      std::string joined;
      for (const auto& g : it->second) joined += (joined.empty() ? "" : ", ") + g;
      out.comparison.entries.push_back({detail::multidegree_text(alpha.to_vector()) + " " + joined, alpha.to_vector(),
                                        "independent mod (P)", independent ? EntryStatus::verified : EntryStatus::failed, "", {}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generating sets of the kernel

struct Generator {
  std::string name;
  FPoly element;
  WeightVector weight;
  std::string seed;
};

struct GeneratorSet {
  int m = 0;
  std::vector<Generator> members;
  int max_degree() const {
    int d = 0;
    for (const auto& g : members) d = std::max(d, g.weight.degree());
    return d;
  }
};

/// Bases of the gl_m-modules generated by J32, J42 and (m >= 3) J222.
inline GeneratorSet polarization_generators(int m) {
  if (m < 2) throw DomainError("generator sets need m >= 2");
  GeneratorSet out;
  out.m = m;
  std::vector<RelationRecord> seeds = {j32(m), j42(m)};
  if (m >= 3) seeds.push_back(j222(m));
  for (const auto& seed : seeds) {
    const auto span = gl_orbit_span(seed.element);
    for (std::size_t k = 0; k < span.size(); ++k)
      out.members.push_back({seed.name + "#" + std::to_string(k), span[k], *span[k].multidegree(), seed.name});
  }
  return out;
}

struct ComponentCheck {
  ExpVec multidegree;
  std::size_t target = 0;  ///< dim K^alpha
  std::size_t rank = 0;
  bool passed = false;
};

struct GenerationReport {
  int m = 0;
  int max_degree = 0;
  std::size_t generators = 0;
  std::vector<ComponentCheck> components;
  std::map<int, bool> by_degree;
  bool passed() const {
    return std::all_of(by_degree.begin(), by_degree.end(), [](const auto& kv) { return kv.second; });
  }
};

inline void require_kernel_members(const GeneratorSet& g, int n) {
  PhiEvaluator phi(n, g.m);
  for (const auto& member : g.members)
    if (!phi(member.element).is_zero()) throw DomainError("generator " + member.name + " is not in the kernel");
}

/// rank of span{mono * g} in F^alpha; stops once the rank reaches `target`.
inline std::size_t ideal_component_rank(const GeneratorSet& g, int cap, const ExpVec& alpha, std::size_t target) {
  FComponent fc(g.m, cap, alpha);
  Echelon e(fc.size());
  std::map<ExpVec, FComponent> cofactors;
  for (const auto& member : g.members) {
    if (!member.weight.divides(alpha)) continue;
    const ExpVec rest = alpha - member.weight;
    auto it = cofactors.find(rest);
    if (it == cofactors.end()) it = cofactors.emplace(rest, FComponent(g.m, cap, rest)).first;
    for (const auto& mono : it->second.monomials()) {
      e.insert(fc.shifted_coordinates(member.element, mono));
      if (e.rank() >= target) return e.rank();
    }
  }
  return e.rank();
}

/// For every weight of degree <= max_degree, the ideal generated by G fills the
/// kernel component. With `dominant_only`, only weakly decreasing weights are
/// checked; this suffices when the span of G is stable under permuting symbols.
inline GenerationReport check_generation(const GeneratorSet& g, int n, int max_degree, unsigned threads = 1,
                                         bool dominant_only = false) {
  require_kernel_members(g, n);
  GenerationReport out;
  out.m = g.m;
  out.max_degree = max_degree;
  out.generators = g.members.size();
  std::vector<ExpVec> weights;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& a : weights_of_degree(g.m, d))
      if (!dominant_only || is_descending(a)) weights.push_back(a);
  out.components = parallel_map(
      weights,
      [&](const ExpVec& alpha) {
        ComponentCheck c;
        c.multidegree = alpha;
        c.target = kernel_dimension(n, g.m, alpha);
        c.rank = c.target == 0 ? 0 : ideal_component_rank(g, n, alpha, c.target);
        c.passed = c.rank == c.target;
        return c;
      },
      threads);
  for (int d = 1; d <= max_degree; ++d) out.by_degree[d] = true;
  for (const auto& c : out.components)
    if (!c.passed) out.by_degree[c.multidegree.degree()] = false;
  return out;
}

// ---------------------------------------------------------------------------
// Minimality and the lower bound

/// Echelon of (F^+ K)^alpha = sum_w t(w) K^{alpha - wt(w)}, with kernel bases cached by weight.
class FPlusKBuilder {
 public:
  FPlusKBuilder(int n, int m, int cap) : n_(n), m_(m), cap_(cap) {}

  struct Result {
    FComponent component;
    Echelon echelon;
  };

  Result build(const ExpVec& alpha) {
    FComponent fc(m_, cap_, alpha);
    Echelon e(fc.size());
    for (const auto& w : index_words(m_, cap_)) {
      if (!w.divides(alpha)) continue;
      const ExpVec rest = alpha - w;
      if (rest.is_zero()) continue;
      const TMonomial tw = TMonomial::variable(w);
      for (const auto& k : kernel(rest)) e.insert(fc.shifted_coordinates(k, tw));
    }
    return {std::move(fc), std::move(e)};
  }

  const std::vector<FPoly>& kernel(const ExpVec& beta) {
    auto it = cache_.find(beta);
    if (it == cache_.end()) it = cache_.emplace(beta, kernel_component_basis(n_, m_, beta, cap_)).first;
    return it->second;
  }

 private:
  int n_, m_, cap_;
  std::map<ExpVec, std::vector<FPoly>> cache_;
};

struct MinimalityComponent {
  ExpVec multidegree;
  std::size_t dim_kernel = 0;
  std::size_t dim_decomposable = 0;  ///< dim (F^+ K)^alpha
  std::size_t members = 0;
  bool independent = false;
  bool passed = false;
};

struct MinimalityReport {
  int m = 0;
  int beta = 0;  ///< largest degree in the generating set
  std::vector<MinimalityComponent> components;
  std::map<int, std::size_t> members_by_degree;
  bool passed() const {
    return std::all_of(components.begin(), components.end(), [](const MinimalityComponent& c) { return c.passed; });
  }
};

/// G is minimal in the given degrees iff, in every weight, its members are
/// independent modulo (F^+ K) and their number is dim K - dim (F^+ K).
inline MinimalityReport check_minimality(const GeneratorSet& g, int n, std::vector<int> degrees = {5, 6}, unsigned threads = 1) {
  require_kernel_members(g, n);
  MinimalityReport out;
  out.m = g.m;
  out.beta = g.max_degree();
  for (const auto& member : g.members) ++out.members_by_degree[member.weight.degree()];
  std::vector<ExpVec> weights;
  for (int d : degrees)
    for (const auto& a : weights_of_degree(g.m, d)) weights.push_back(a);
  out.components = parallel_map(
      weights,
      [&](const ExpVec& alpha) {
        FPlusKBuilder builder(n, g.m, n);
        MinimalityComponent c;
        c.multidegree = alpha;
        c.dim_kernel = kernel_dimension(n, g.m, alpha);
        auto fk = builder.build(alpha);
        c.dim_decomposable = fk.echelon.rank();
        c.independent = true;
        for (const auto& member : g.members) {
          if (!(member.weight == alpha)) continue;
          ++c.members;
          if (!fk.echelon.insert(fk.component.coordinates(member.element))) c.independent = false;
        }
        c.passed = c.independent && c.members + c.dim_decomposable == c.dim_kernel;
        return c;
      },
      threads);
  return out;
}

/// True iff f (of weight alpha) lies outside (F^+ K)^alpha for n rows and index cap n.
inline bool outside_decomposable(const FPoly& f, int n) {
  auto alpha = f.multidegree();
  if (!alpha) throw DomainError("element must be multihomogeneous");
  FPlusKBuilder builder(n, f.space().m, n);
  auto fk = builder.build(*alpha);
  return fk.echelon.insert(fk.component.coordinates(with_cap(f, n)));
}

struct LowerBoundResult {
  int n = 0;
  bool in_kernel = false;
  bool outside = false;
  bool supported = true;
  bool passed() const { return supported && in_kernel && outside; }
};

/// The Gram relation for n rows (m = n) is not in (F^+ K) in weight (2, ..., 2).
inline LowerBoundResult lowerbound_check(int n) {
  LowerBoundResult out;
  out.n = n;
  if (n < 2 || n > 4) {
    out.supported = false;
    return out;
  }
  const FPoly j = with_cap(gram_relation(n, n).element, n);
  out.in_kernel = phi_eval(j, n).is_zero();
  out.outside = outside_decomposable(j, n);
  return out;
}

}  // namespace polysym
