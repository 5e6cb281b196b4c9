#include "pbfa/sweep.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "pbfa/bit_table.hpp"
#include "pbfa/calculus.hpp"
#include "pbfa/decomposition.hpp"
#include "pbfa/expr_parser.hpp"
#include "pbfa/games.hpp"
#include "pbfa/monotonicity.hpp"
#include "pbfa/permutability.hpp"
#include "pbfa/polynomial.hpp"
#include "pbfa/reconstruction.hpp"

namespace pbfa {

namespace gen {

namespace {
long pick(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}
}  // namespace

FunctionTable random_rational_table(std::mt19937_64& rng, int arity) {
  FunctionTable f(arity);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    f[x] = Rational(pick(rng, -6, 6), pick(rng, 1, 4));
  }
  return f;
}

FunctionTable random_boolean_table(std::mt19937_64& rng, int arity) {
  FunctionTable f(arity);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    f[x] = Rational(static_cast<long>(rng() & 1u));
  }
  return f;
}

FunctionTable random_monotone_table(std::mt19937_64& rng, int arity) {
  FunctionTable f = random_rational_table(rng, arity);
  // Isotone closure: running max over the subset order.
  for (int b = 0; b < arity; ++b) {
    const std::uint32_t bit = 1u << b;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      if ((x & bit) && f[x] < f[x ^ bit]) f[x] = f[x ^ bit];
    }
  }
  const std::uint32_t flip = arity == 0 ? 0u : static_cast<std::uint32_t>(rng()) & ((1u << arity) - 1u);
  return negate_variables(f, SubsetMask(arity, flip));
}

SymmetricSequence random_sequence(std::mt19937_64& rng, int arity, bool boolean) {
  SymmetricSequence s;
  s.alpha.reserve(arity + 1);
  Rational last(0);
  for (int i = 0; i <= arity; ++i) {
    if (i > 0 && (rng() & 1u)) {
      s.alpha.push_back(last);  // repeat runs keep higher degrees reachable
      continue;
    }
    last = boolean ? Rational(static_cast<long>(rng() & 1u)) : Rational(pick(rng, -3, 3), pick(rng, 1, 2));
    s.alpha.push_back(last);
  }
  return s;
}

FunctionTable prefix_indicator_table(int arity) {
  FunctionTable f(arity);
  for (int m = 0; m <= arity; ++m) {
    f[(1u << m) - 1u] = Rational(1);
  }
  return f;
}

}  // namespace gen

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
  SweepResult* result;

  bool failed() const { return result->counterexample.has_value(); }

  void note(bool pass, const std::function<std::string()>& describe) {
    ++result->checked;
    if (pass) {
      ++result->passed;
    } else if (!result->counterexample) {
      result->counterexample = describe();
    }
  }
};

std::string show(const FunctionTable& f) {
  std::string out = "n=" + std::to_string(f.arity()) + " [";
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (x) out += ' ';
    out += f[x].str();
  }
  return out + "]";
}

std::string show(const BitTable& t) { return show(t.to_table()); }

std::string show(const SymmetricSequence& s) { return "alpha=" + format_sequence(s); }

// All Boolean functions of arity 0..max_arity (max_arity <= 4 enforced by
// the caller); stops when visit returns false.
void for_each_boolean(int max_arity, const std::function<bool(const BitTable&)>& visit) {
  for (int n = 0; n <= max_arity; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      BitTable t(n);
      for (std::uint32_t i = 0; i < t.size(); ++i) t.set(i, (bits >> i) & 1u);
      if (!visit(t)) return;
    }
  }
}

bool pointwise_le(const FunctionTable& a, const FunctionTable& b) {
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (b[x] < a[x]) return false;
  }
  return true;
}

int hamming_off(const Point& x, const Point& y, int k) {
  return std::popcount((x.bits() ^ y.bits()) & ~(1u << (k - 1)));
}

bool sign_witness_ok(const FunctionTable& f, const SignViolation& w, int p) {
  const FunctionTable d = delta(f, w.k);
  return d[w.x.bits()].sign() * d[w.y.bits()].sign() < 0 && hamming_off(w.x, w.y, w.k) < p;
}

bool permutability_counterexample_ok(const FunctionTable& f, const PermutabilityCounterexample& ce) {
  const FunctionTable a = apply_sequence(f, ce.order_a);
  const FunctionTable b = apply_sequence(f, ce.order_b);
  return !(a == b) && a[ce.point.bits()] == ce.value_a && b[ce.point.bits()] == ce.value_b &&
         !(ce.value_a == ce.value_b);
}

bool is_parity_type(const FunctionTable& f) {
  if (f.arity() < 1 || f[0] == f[1]) return false;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (!(f[x] == (std::popcount(x) % 2 == 0 ? f[0] : f[1]))) return false;
  }
  return true;
}

int brute_window_degree(const SymmetricSequence& s) {
  const int n = s.arity();
  int degree = n;
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      bool up = true, down = true;
      for (int t = i; t < j; ++t) {
        if (s.alpha[t] < s.alpha[t + 1]) down = false;
        if (s.alpha[t + 1] < s.alpha[t]) up = false;
      }
      if (!up && !down) degree = std::min(degree, j - i - 1);
    }
  }
  return degree;
}

Rational random_nonzero_scale(std::mt19937_64& rng) {
  static const Rational choices[] = {Rational(2), Rational(-1), Rational(1, 2), Rational(-3, 2), Rational(3)};
  return choices[rng() % 5];
}

struct Claim {
  std::string name;
  std::string population;
  std::function<void(const SweepOptions&, std::mt19937_64&, Tally&)> run;
};

// ---------------------------------------------------------------------------
// Claim bodies
// ---------------------------------------------------------------------------

void claim_lattice_laws(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 6;
    const FunctionTable f = gen::random_rational_table(rng, n);
    const int k = 1 + static_cast<int>(rng() % n);
    bool pass = meet_derivative(meet_derivative(f, k), k) == meet_derivative(f, k) &&
                join_derivative(join_derivative(f, k), k) == join_derivative(f, k);
    FunctionTable g = f;
    for (std::uint32_t x = 0; x < g.size(); ++x) g[x] += Rational(static_cast<long>(rng() % 3));
    pass = pass && pointwise_le(meet_derivative(f, k), meet_derivative(g, k)) &&
           pointwise_le(join_derivative(f, k), join_derivative(g, k));
    if (n >= 2) {
      int j = 1 + static_cast<int>(rng() % n);
      if (j == k) j = (j % n) + 1;
      pass = pass &&
             meet_derivative(meet_derivative(f, k), j) == meet_derivative(meet_derivative(f, j), k) &&
             join_derivative(join_derivative(f, k), j) == join_derivative(join_derivative(f, j), k) &&
             pointwise_le(join_derivative(meet_derivative(f, j), k), meet_derivative(join_derivative(f, k), j));
    }
    pass = pass && pointwise_le(meet_derivative(f, k), f) && pointwise_le(f, join_derivative(f, k)) &&
           !depends_on(delta(f, k), k) && !depends_on(meet_derivative(f, k), k) &&
           !depends_on(join_derivative(f, k), k);
    tally.note(pass, [&] { return "operator law failed on " + show(f) + " k=" + std::to_string(k); });
  }
}

void claim_monotone_decomposition(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  const auto check = [&](const FunctionTable& f) {
    const auto d = decompose(f);
    bool pass = d.has_value() == is_monotone(f);
    if (pass && d) {
      for (std::uint32_t x = 0; x < f.size() && pass; ++x) {
        pass = evaluate_decomposition(*d, Point(f.arity(), x)) == f[x];
      }
      for (const Rational& c : d->lattice_coef) {
        pass = pass && !(c < d->a) && !(d->b < c);
      }
    }
    tally.note(pass, [&] { return "decomposition mismatch on " + show(f); });
    return !tally.failed();
  };
  for_each_boolean(opt.max_arity, [&](const BitTable& t) { return check(t.to_table()); });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 6;
    check(i % 2 == 0 ? gen::random_monotone_table(rng, n) : gen::random_rational_table(rng, n));
  }
}

void claim_binary_census(const SweepOptions&, std::mt19937_64&, Tally& tally) {
  int nonmonotone = 0;
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    BitTable t(2);
    for (std::uint32_t i = 0; i < 4; ++i) t.set(i, (bits >> i) & 1u);
    const FunctionTable f = t.to_table();
    const bool expected = bits == 0b0110u || bits == 0b1001u;  // sum and its negation
    const bool actual = !is_monotone(f);
    if (actual) ++nonmonotone;
    tally.note(actual == expected, [&] { return "census mismatch on " + show(f); });
  }
  tally.note(nonmonotone == 2,
             [&] { return "expected exactly 2 non-monotone binary functions, found " + std::to_string(nonmonotone); });
}

void claim_scan_agreement(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  std::uint64_t index = 0;
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    bool pass = true;
    std::string detail;
    for (int p = 1; p <= t.arity() && pass; ++p) {
      const LocalMonotonicityCheck a = is_p_locally_monotone(t, p);
      const LocalMonotonicityCheck b = is_p_locally_monotone_by_definition(t, p);
      pass = a.holds == b.holds;
      if (!pass) detail = "p=" + std::to_string(p);
      if (pass && ++index % 97 == 0) {
        const FunctionTable f = t.to_table();
        pass = is_p_locally_monotone(f, p).holds == a.holds &&
               is_p_locally_monotone_by_definition(f, p).holds == a.holds;
        if (!pass) detail = "bit/rational disagreement at p=" + std::to_string(p);
        if (pass && !a.holds) {
          pass = sign_witness_ok(f, *a.witness, p) && sign_witness_ok(f, *b.witness, p);
          if (!pass) detail = "witness failed re-verification at p=" + std::to_string(p);
        }
      }
    }
    tally.note(pass, [&] { return "scan disagreement on " + show(t) + " " + detail; });
    return !tally.failed();
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 6;
    const FunctionTable f = gen::random_rational_table(rng, n);
    bool pass = true;
    for (int p = 1; p <= n && pass; ++p) {
      const LocalMonotonicityCheck a = is_p_locally_monotone(f, p);
      const LocalMonotonicityCheck b = is_p_locally_monotone_by_definition(f, p);
      pass = a.holds == b.holds;
      if (pass && !a.holds) pass = sign_witness_ok(f, *a.witness, p) && sign_witness_ok(f, *b.witness, p);
    }
    tally.note(pass, [&] { return "scan disagreement on " + show(f); });
  }
}

void claim_nesting(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 6;
    const FunctionTable f =
        i % 3 == 0 ? gen::random_boolean_table(rng, n) : gen::random_rational_table(rng, n);
    const LocalMonotonicityReport report = local_monotonicity_degree(f);
    bool pass = report.degree >= 1 && report.degree <= n;
    for (int p = 1; p <= report.degree && pass; ++p) pass = is_p_locally_monotone(f, p).holds;
    if (pass && report.degree < n) {
      pass = !is_p_locally_monotone(f, report.degree + 1).holds && report.witness.has_value() &&
             sign_witness_ok(f, *report.witness, report.degree + 1);
    }
    pass = pass && (is_monotone(f) == (report.degree == n)) &&
           (report.degree == n) == !report.witness.has_value();
    tally.note(pass, [&] { return "degree nesting failed on " + show(f); });
  }
}

void claim_locality_invariance(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 6;
    const FunctionTable f = gen::random_rational_table(rng, n);
    const int d = local_monotonicity_degree(f).degree;
    const FunctionTable g = affine_transform(f, random_nonzero_scale(rng), Rational(gen::pick(rng, -3, 3)));
    const FunctionTable h =
        negate_variables(f, SubsetMask(n, static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u)));
    const bool pass = local_monotonicity_degree(g).degree == d && local_monotonicity_degree(h).degree == d &&
                      essential_variables(h).size() == essential_variables(f).size();
    tally.note(pass, [&] { return "degree not invariant on " + show(f); });
  }
}

void claim_binary_section_criterion(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 2 + i % 5;
    const FunctionTable f = gen::random_rational_table(rng, n);
    const std::vector<ForbiddenSection> sections = forbidden_binary_sections(f);
    bool pass = sections.empty() == is_p_locally_monotone(f, 2).holds;
    for (const ForbiddenSection& fs : sections) {
      if (!pass) break;
      const std::uint32_t bj = 1u << (fs.j - 1);
      const std::uint32_t bk = 1u << (fs.k - 1);
      const std::uint32_t base = fs.base.bits();
      const Rational a1 = f[base | bj] - f[base];
      const Rational a2 = f[base | bk] - f[base];
      const Rational a12 = f[base | bj | bk] - f[base | bj] - f[base | bk] + f[base];
      pass = a1 == fs.a1 && a2 == fs.a2 && a12 == fs.a12 &&
             (a1 * (a1 + a12) < Rational(0) || a2 * (a2 + a12) < Rational(0));
    }
    tally.note(pass, [&] { return "binary section criterion failed on " + show(f); });
  }
}

void claim_xor_section_criterion(const SweepOptions& opt, std::mt19937_64&, Tally& tally) {
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    if (t.arity() < 2) return true;
    const FunctionTable f = t.to_table();
    const std::vector<ForbiddenSection> sections = forbidden_binary_sections(f);
    bool pass = sections.empty() == is_p_locally_monotone(t, 2).holds;
    for (const ForbiddenSection& fs : sections) {
      if (!pass) break;
      const FunctionTable g =
          section(f, SubsetMask::empty(f.arity()).with(fs.j).with(fs.k), fs.base);
      const FunctionTable want = fs.kind == SectionDefectKind::Xor
                                     ? FunctionTable(2, {Rational(0), Rational(1), Rational(1), Rational(0)})
                                     : FunctionTable(2, {Rational(1), Rational(0), Rational(0), Rational(1)});
      pass = (fs.kind == SectionDefectKind::Xor || fs.kind == SectionDefectKind::Xnor) && g == want;
    }
    tally.note(pass, [&] { return "xor section criterion failed on " + show(t); });
    return !tally.failed();
  });
}

void claim_boolean_equivalence(const SweepOptions& opt, std::mt19937_64&, Tally& tally) {
  std::uint64_t index = 0;
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    if (t.arity() < 2) return true;
    const bool local = is_p_locally_monotone(t, 2).holds;
    const bool permutable = has_p_permutable_derivatives(t, 2).permutable;
    bool pass = local == permutable;
    if (pass && ++index % 97 == 0) {
      const FunctionTable f = t.to_table();
      pass = is_p_locally_monotone(f, 2).holds == local &&
             has_p_permutable_derivatives(f, 2).permutable == permutable;
    }
    tally.note(pass, [&] { return "2-local vs 2-permutable mismatch on " + show(t); });
    return !tally.failed();
  });
}

void claim_two_permutability_criterion(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  const auto check = [&](const FunctionTable& f) {
    const BinaryPermutabilityCheck cond = binary_2permutability_condition(f);
    bool pass = cond.satisfied == has_p_permutable_derivatives(f, 2).permutable;
    pass = pass && cond.satisfied == cond.violations.empty();
    tally.note(pass, [&] { return "2-permutability criterion failed on " + show(f); });
    return !tally.failed();
  };
  for_each_boolean(std::min(opt.max_arity, 3), [&](const BitTable& t) {
    return t.arity() < 2 ? true : check(t.to_table());
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    check(gen::random_rational_table(rng, 2 + i % 5));
  }
}

void claim_local_implies_permutable(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    if (t.arity() < 2) return true;
    const int degree = local_monotonicity_degree(t).degree;
    bool pass = true;
    for (int p = 2; p <= degree && pass; ++p) pass = has_p_permutable_derivatives(t, p).permutable;
    tally.note(pass, [&] { return "p-local without p-permutable on " + show(t); });
    return !tally.failed();
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 2 + i % 4;
    const FunctionTable f =
        i % 3 == 0 ? gen::random_monotone_table(rng, n) : gen::random_rational_table(rng, n);
    const int degree = local_monotonicity_degree(f).degree;
    bool pass = true;
    for (int p = 2; p <= degree && pass; ++p) pass = has_p_permutable_derivatives(f, p).permutable;
    tally.note(pass, [&] { return "p-local without p-permutable on " + show(f); });
  }
}

void claim_permutability_chain(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  const auto downward_closed = [](const std::vector<bool>& verdicts) {
    for (std::size_t p = 0; p + 1 < verdicts.size(); ++p) {
      if (verdicts[p + 1] && !verdicts[p]) return false;
    }
    return true;
  };
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    std::vector<bool> verdicts;
    for (int p = 1; p <= t.arity(); ++p) verdicts.push_back(has_p_permutable_derivatives(t, p).permutable);
    tally.note(downward_closed(verdicts), [&] { return "permutability chain broken on " + show(t); });
    return !tally.failed();
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 2 + i % 4;
    const FunctionTable f = gen::random_rational_table(rng, n);
    std::vector<bool> verdicts;
    for (int p = 1; p <= n; ++p) verdicts.push_back(has_p_permutable_derivatives(f, p).permutable);
    tally.note(downward_closed(verdicts), [&] { return "permutability chain broken on " + show(f); });
  }
}

void claim_degree_drop(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    if (t.arity() < 1) return true;
    const int degree = local_monotonicity_degree(t).degree;
    bool pass = true;
    for (int j = 1; j <= t.arity() && pass; ++j) {
      pass = local_monotonicity_degree(meet_derivative(t, j)).degree >= degree - 1 &&
             local_monotonicity_degree(join_derivative(t, j)).degree >= degree - 1;
    }
    tally.note(pass, [&] { return "derivative degree dropped too far on " + show(t); });
    return !tally.failed();
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 6;
    const FunctionTable f = gen::random_rational_table(rng, n);
    const int degree = local_monotonicity_degree(f).degree;
    bool pass = true;
    for (int j = 1; j <= n && pass; ++j) {
      pass = local_monotonicity_degree(meet_derivative(f, j)).degree >= degree - 1 &&
             local_monotonicity_degree(join_derivative(f, j)).degree >= degree - 1;
    }
    tally.note(pass, [&] { return "derivative degree dropped too far on " + show(f); });
  }
}

void claim_permutability_invariance(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 4;
    const FunctionTable f = gen::random_rational_table(rng, n);
    const int max_p = max_permutability_degree(f).max_p;
    const FunctionTable g = affine_transform(f, random_nonzero_scale(rng), Rational(gen::pick(rng, -3, 3)));
    const FunctionTable h =
        negate_variables(f, SubsetMask(n, static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u)));
    const bool pass =
        max_permutability_degree(g).max_p == max_p && max_permutability_degree(h).max_p == max_p;
    tally.note(pass, [&] { return "permutability degree not invariant on " + show(f); });
  }
}

void claim_section_characterization(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  const auto check = [&](const FunctionTable& f) {
    bool pass = true;
    for (int p = 2; p <= f.arity() && pass; ++p) {
      bool sections_permutable = true;
      for_each_section(f, p, [&](const SubsetMask&, const Point&, const FunctionTable& g) {
        if (sections_permutable) {
          sections_permutable = has_p_permutable_derivatives(g, p).permutable;
        }
      });
      pass = has_p_permutable_derivatives(f, p).permutable == sections_permutable;
    }
    tally.note(pass, [&] { return "section characterization failed on " + show(f); });
    return !tally.failed();
  };
  for_each_boolean(std::min(opt.max_arity, 3), [&](const BitTable& t) {
    return t.arity() < 2 ? true : check(t.to_table());
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 2 + i % 4;
    check(i % 2 == 0 ? gen::random_boolean_table(rng, n) : gen::random_rational_table(rng, n));
  }
}

void claim_oracle_agreement(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  std::uint64_t index = 0;
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    bool pass = true;
    std::string detail;
    for (int p = 1; p <= t.arity() && pass; ++p) {
      const PermutabilityCheck fast = has_p_permutable_derivatives(t, p);
      const PermutabilityCheck full = has_p_permutable_derivatives_reference(t, p);
      pass = fast.permutable == full.permutable;
      if (!pass) detail = "p=" + std::to_string(p);
      if (pass && !fast.permutable && ++index % 29 == 0) {
        const FunctionTable f = t.to_table();
        pass = permutability_counterexample_ok(f, *fast.counterexample) &&
               permutability_counterexample_ok(f, *full.counterexample);
        if (!pass) detail = "counterexample failed re-verification at p=" + std::to_string(p);
      }
    }
    tally.note(pass, [&] { return "fast/reference disagreement on " + show(t) + " " + detail; });
    return !tally.failed();
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 2 + i % 5;
    const FunctionTable f = gen::random_rational_table(rng, n);
    bool pass = true;
    for (int p = 2; p <= std::min(n, 5) && pass; ++p) {
      const PermutabilityCheck fast = has_p_permutable_derivatives(f, p);
      const PermutabilityCheck full = has_p_permutable_derivatives_reference(f, p);
      pass = fast.permutable == full.permutable;
      if (pass && !fast.permutable) {
        pass = permutability_counterexample_ok(f, *fast.counterexample) &&
               permutability_counterexample_ok(f, *full.counterexample);
      }
    }
    tally.note(pass, [&] { return "fast/reference disagreement on " + show(f); });
  }
}

void claim_reconstruction_roundtrip(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  std::vector<int> parity_count(opt.max_arity + 1, 0);
  const auto check = [&](const FunctionTable& f, int* parity_counter) {
    const ReconstructionResult result = reconstruct(profile_of(f));
    bool pass = false;
    if (const auto* unique = std::get_if<FunctionTable>(&result)) {
      pass = *unique == f && !is_parity_type(f);
    } else if (const auto* pair = std::get_if<ParityPair>(&result)) {
      pass = is_parity_type(f) && pair->even_value == min(f[0], f[1]) && pair->odd_value == max(f[0], f[1]);
      if (parity_counter) ++*parity_counter;
    }
    tally.note(pass, [&] { return "reconstruction round-trip failed on " + show(f); });
    return !tally.failed();
  };
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    if (t.arity() == 0) return true;  // an empty profile determines nothing
    return check(t.to_table(), &parity_count[t.arity()]);
  });
  for (int n = 1; n <= opt.max_arity && !tally.failed(); ++n) {
    tally.note(parity_count[n] == 2, [&] {
      return "expected exactly 2 parity-type Boolean functions at arity " + std::to_string(n) + ", found " +
             std::to_string(parity_count[n]);
    });
  }
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    check(gen::random_rational_table(rng, 1 + i % 6), nullptr);
  }
}

void claim_tamper_detection(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 5;
    const FunctionTable f =
        i % 2 == 0 ? gen::random_boolean_table(rng, n) : gen::random_rational_table(rng, n);
    DerivativeProfile profile = profile_of(f);
    const int k = 1 + static_cast<int>(rng() % n);
    FunctionTable& target = (rng() & 1u) ? profile.meet[k - 1] : profile.join[k - 1];
    const std::uint32_t at = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u);
    target[at] += (rng() & 1u) ? Rational(1) : Rational(-1, 2);

    const ReconstructionResult result = reconstruct(profile);
    bool pass = false;
    if (std::holds_alternative<InconsistencyWitness>(result)) {
      pass = true;  // tampering detected outright
    } else if (const auto* unique = std::get_if<FunctionTable>(&result)) {
      pass = verify_profile(*unique, profile) && !(*unique == f);
    } else if (const auto* pair = std::get_if<ParityPair>(&result)) {
      FunctionTable even(n), odd(n);
      for (std::uint32_t x = 0; x < even.size(); ++x) {
        even[x] = std::popcount(x) % 2 == 0 ? pair->even_value : pair->odd_value;
        odd[x] = std::popcount(x) % 2 == 0 ? pair->odd_value : pair->even_value;
      }
      pass = verify_profile(even, profile) && verify_profile(odd, profile);
    }
    tally.note(pass, [&] { return "tampered profile slipped through on " + show(f); });
  }
}

void claim_prefix_family(const SweepOptions&, std::mt19937_64&, Tally& tally) {
  for (int n = 3; n <= 8 && !tally.failed(); ++n) {
    const FunctionTable f = gen::prefix_indicator_table(n);
    const BitTable bits = *BitTable::from_table(f);
    bool pass = local_monotonicity_degree(bits).degree == 2;
    pass = pass && delta(f, 2)[0] == Rational(-1);
    pass = pass && delta(f, 2)[0b101] == Rational(1);
    for (int p = 2; p <= n && pass; ++p) pass = has_p_permutable_derivatives(bits, p).permutable;
    const FunctionTable smaller = gen::prefix_indicator_table(n - 1);
    for (int k = 1; k <= n && pass; ++k) {
      const FunctionTable dropped =
          section(join_derivative(f, k), SubsetMask::single(n, k).complement(), Point::zero(n));
      pass = dropped == smaller;
      const FunctionTable m = meet_derivative(f, k);
      pass = pass && is_monotone(m);
    }
    tally.note(pass, [&] { return "prefix indicator family failed at arity " + std::to_string(n); });
  }
}

void claim_extremal_bounds(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 2 + i % 5;
    const FunctionTable f = gen::random_rational_table(rng, n);
    const int count = 1 + static_cast<int>(rng() % std::min(n, 4));
    std::vector<int> indices(n);
    for (int k = 0; k < n; ++k) indices[k] = k + 1;
    std::shuffle(indices.begin(), indices.end(), rng);
    std::vector<AskedPlayer> players;
    for (int k = 0; k < count; ++k) {
      players.push_back(AskedPlayer{indices[k], (rng() & 1u) ? PlayerRole::Benevolent : PlayerRole::Malevolent});
    }
    const SubsetMask coalition(n, static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u));
    const OutcomeRange range = extremal_outcomes(f, players, coalition);

    std::sort(players.begin(), players.end(),
              [](const AskedPlayer& a, const AskedPlayer& b) { return a.index < b.index; });
    bool pass = true;
    Rational least = range.greatest, greatest = range.least;
    AskOrder order(players.begin(), players.end());
    do {
      const Rational outcome = sequential_outcome(f, coalition, order);
      pass = pass && !(outcome < range.least) && !(range.greatest < outcome);
      least = min(least, outcome);
      greatest = max(greatest, outcome);
    } while (std::next_permutation(order.begin(), order.end(), [](const AskedPlayer& a, const AskedPlayer& b) {
      return a.index < b.index;
    }));
    pass = pass && least == range.least && greatest == range.greatest;
    tally.note(pass, [&] { return "extremal outcome bounds failed on " + show(f); });
  }
}

void claim_order_irrelevance(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  const auto check = [&](const FunctionTable& f) {
    bool pass = true;
    for (int p = 2; p <= f.arity() && pass; ++p) {
      bool all_irrelevant = true;
      for_each_subset_of_size((1u << f.arity()) - 1u, p, [&](std::uint32_t mask) {
        if (all_irrelevant) all_irrelevant = order_irrelevant(f, SubsetMask(f.arity(), mask));
      });
      pass = all_irrelevant == has_p_permutable_derivatives(f, p).permutable;
    }
    tally.note(pass, [&] { return "order irrelevance mismatch on " + show(f); });
    return !tally.failed();
  };
  for_each_boolean(std::min(opt.max_arity, 3), [&](const BitTable& t) {
    return t.arity() < 2 ? true : check(t.to_table());
  });
  const int budget = std::min(opt.samples, 500);
  for (int i = 0; i < budget && !tally.failed(); ++i) {
    check(i % 2 == 0 ? gen::random_boolean_table(rng, 4) : gen::random_rational_table(rng, 2 + i % 3));
  }
}

void claim_symmetric_window(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 10;
    const SymmetricSequence s = gen::random_sequence(rng, n, i % 2 == 0);
    const int fast = seq_local_monotonicity_degree(s);
    const int brute = brute_window_degree(s);
    const FunctionTable f = seq_to_function(s);
    bool pass = fast == brute && fast == local_monotonicity_degree(f).degree;
    pass = pass && detect_symmetric(f).has_value() && *detect_symmetric(f) == s;
    tally.note(pass, [&] { return "window criterion failed on " + show(s); });
  }
}

void claim_symmetric_derivatives(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 1 + i % 10;
    const SymmetricSequence s = gen::random_sequence(rng, n, i % 2 == 0);
    const FunctionTable f = seq_to_function(s);
    const FunctionTable meet_expected = seq_to_function(seq_meet(s));
    const FunctionTable join_expected = seq_to_function(seq_join(s));
    bool pass = true;
    for (int k = 1; k <= n && pass; ++k) {
      const SubsetMask keep = SubsetMask::single(n, k).complement();
      pass = section(meet_derivative(f, k), keep, Point::zero(n)) == meet_expected &&
             section(join_derivative(f, k), keep, Point::zero(n)) == join_expected;
    }
    tally.note(pass, [&] { return "sequence/table derivative mismatch on " + show(s); });
  }
}

void claim_symmetric_equivalence(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = 2 + i % 7;
    const SymmetricSequence s = gen::random_sequence(rng, n, i % 2 == 0);
    const int degree = seq_local_monotonicity_degree(s);
    const PermutabilityReport report = max_permutability_degree(seq_to_function(s));
    tally.note(degree == report.max_p, [&] {
      return "local degree " + std::to_string(degree) + " vs permutability degree " +
             std::to_string(report.max_p) + " on " + show(s);
    });
  }
}

void claim_staircase_family(const SweepOptions&, std::mt19937_64&, Tally& tally) {
  for (int p = 2; p <= 4 && !tally.failed(); ++p) {
    const SymmetricSequence s = staircase(p);
    SymmetricSequence meet_expected, join_expected;
    meet_expected.alpha.assign(2, Rational(0));
    meet_expected.alpha.insert(meet_expected.alpha.end(), p - 1, Rational(1));
    meet_expected.alpha.insert(meet_expected.alpha.end(), p + 1, Rational(0));
    meet_expected.alpha.insert(meet_expected.alpha.end(), 2, Rational(1));
    join_expected.alpha.assign(1, Rational(0));
    join_expected.alpha.insert(join_expected.alpha.end(), p + 1, Rational(1));
    join_expected.alpha.insert(join_expected.alpha.end(), p - 1, Rational(0));
    join_expected.alpha.insert(join_expected.alpha.end(), 3, Rational(1));

    bool pass = s.arity() == 2 * p + 4 && seq_local_monotonicity_degree(s) == p;
    pass = pass && seq_meet(s) == meet_expected && seq_join(s) == join_expected;
    pass = pass && seq_local_monotonicity_degree(seq_meet(s)) == p - 1 &&
           seq_local_monotonicity_degree(seq_join(s)) == p - 1;
    const FunctionTable f = seq_to_function(s);
    const BitTable bits = *BitTable::from_table(f);
    pass = pass && local_monotonicity_degree(bits).degree == p;
    pass = pass && has_p_permutable_derivatives(bits, p).permutable &&
           !has_p_permutable_derivatives(bits, p + 1).permutable;
    pass = pass && max_permutability_degree(f).max_p == p;
    tally.note(pass, [&] { return "staircase family failed at p=" + std::to_string(p); });
  }
}

void claim_mobius_roundtrip(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for_each_boolean(opt.max_arity, [&](const BitTable& t) {
    const FunctionTable f = t.to_table();
    const MultilinearPolynomial p = poly_from_table(f);
    tally.note(to_table(p) == f && degree(p) <= f.arity(),
               [&] { return "Moebius round-trip failed on " + show(t); });
    return !tally.failed();
  });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const FunctionTable f = gen::random_rational_table(rng, 1 + i % 6);
    tally.note(to_table(poly_from_table(f)) == f, [&] { return "Moebius round-trip failed on " + show(f); });
  }
}

void claim_formal_derivative(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  const auto check = [&](const FunctionTable& f) {
    const MultilinearPolynomial p = poly_from_table(f);
    bool pass = true;
    for (int k = 1; k <= f.arity() && pass; ++k) {
      const MultilinearPolynomial d = formal_derivative(p, k);
      pass = to_table(d) == delta(f, k) && d == poly_from_table(delta(f, k));
    }
    tally.note(pass, [&] { return "formal/table derivative mismatch on " + show(f); });
    return !tally.failed();
  };
  for_each_boolean(std::min(opt.max_arity, 3), [&](const BitTable& t) { return check(t.to_table()); });
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    check(gen::random_rational_table(rng, 1 + i % 6));
  }
}

void claim_parser_roundtrip(const SweepOptions& opt, std::mt19937_64& rng, Tally& tally) {
  for (int i = 0; i < opt.samples && !tally.failed(); ++i) {
    const int n = i % 7;
    MultilinearPolynomial p(n);
    for (std::uint32_t s = 0; s < p.size(); ++s) {
      if (rng() % 3 == 0) p[s] = Rational(gen::pick(rng, -5, 5), gen::pick(rng, 1, 4));
    }
    const std::string text = pretty_print(p);
    const MultilinearPolynomial q = parse_expression(text);
    tally.note(q.arity() <= n && q.extended(n) == p,
               [&] { return "parser round-trip failed on \"" + text + "\""; });
  }
}

// ---------------------------------------------------------------------------

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = {
      {"lattice-derivative-laws", "random rational tables, arity 1..6", claim_lattice_laws},
      {"monotone-iff-pseudo-polynomial", "all Boolean tables up to max arity; random monotone and rational tables",
       claim_monotone_decomposition},
      {"binary-nonmonotone-census", "all 16 Boolean tables of arity 2", claim_binary_census},
      {"local-monotonicity-scan-agreement",
       "all Boolean tables up to max arity (all p); random rational tables, arity 1..6", claim_scan_agreement},
      {"local-monotonicity-nesting", "random Boolean and rational tables, arity 1..6", claim_nesting},
      {"local-monotonicity-invariance", "random rational tables, arity 1..6", claim_locality_invariance},
      {"binary-section-criterion", "random rational tables, arity 2..6", claim_binary_section_criterion},
      {"boolean-xor-section-criterion", "all Boolean tables up to max arity", claim_xor_section_criterion},
      {"boolean-2local-iff-2permutable", "all Boolean tables up to max arity", claim_boolean_equivalence},
      {"two-permutability-criterion", "all Boolean tables up to arity 3; random rational tables, arity 2..6",
       claim_two_permutability_criterion},
      {"local-monotonicity-implies-permutability",
       "all Boolean tables up to max arity; random tables, arity 2..5", claim_local_implies_permutable},
      {"permutability-chain", "all Boolean tables up to max arity; random rational tables, arity 2..5",
       claim_permutability_chain},
      {"derivative-degree-drop", "all Boolean tables up to max arity; random rational tables, arity 1..6",
       claim_degree_drop},
      {"permutability-invariance", "random rational tables, arity 1..4", claim_permutability_invariance},
      {"permutability-section-characterization",
       "all Boolean tables up to arity 3; random tables, arity 2..5", claim_section_characterization},
      {"permutability-oracle-agreement",
       "all Boolean tables up to max arity (all p); random rational tables, arity 2..6 (p <= 5)",
       claim_oracle_agreement},
      {"reconstruction-roundtrip", "all Boolean tables up to max arity; random rational tables, arity 1..6",
       claim_reconstruction_roundtrip},
      {"profile-tamper-detection", "random profiles with one perturbed value, arity 1..5",
       claim_tamper_detection},
      {"prefix-indicator-family", "prefix indicator functions, arity 3..8", claim_prefix_family},
      {"extremal-outcome-bounds", "random games, arity 2..6, up to 4 asked players",
       claim_extremal_bounds},
      {"order-irrelevance-iff-permutability",
       "all Boolean tables up to arity 3; sampled Boolean arity 4 and rational tables", claim_order_irrelevance},
      {"symmetric-window-criterion", "random sequences, arity 1..10", claim_symmetric_window},
      {"symmetric-derivative-sequences", "random sequences, arity 1..10", claim_symmetric_derivatives},
      {"symmetric-equivalence", "random sequences, arity 2..8", claim_symmetric_equivalence},
      {"staircase-family", "staircase sequences, p = 2..4", claim_staircase_family},
      {"mobius-roundtrip", "all Boolean tables up to max arity; random rational tables, arity 1..6",
       claim_mobius_roundtrip},
      {"formal-derivative-agreement", "all Boolean tables up to arity 3; random rational tables, arity 1..6",
       claim_formal_derivative},
      {"parser-roundtrip", "random polynomials, arity 0..6", claim_parser_roundtrip},
  };
  return claims;
}

}  // namespace

const std::vector<std::string>& sweep_claim_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Claim& c : registry()) out.push_back(c.name);
    return out;
  }();
  return names;
}

SweepResult run_sweep_claim(std::string_view name, const SweepOptions& options) {
  if (options.max_arity < 0 || options.max_arity > 4) {
    throw std::invalid_argument("exhaustive Boolean sweeps support max arity 0..4");
  }
  if (options.samples < 0) throw std::invalid_argument("sample budget must be nonnegative");
  const auto& claims = registry();
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (claims[i].name != name) continue;
    SweepResult result;
    result.claim = claims[i].name;
    result.population = claims[i].population;
    std::mt19937_64 rng(options.seed * 1000003ull + i);
    Tally tally{&result};
    const auto start = Clock::now();
    claims[i].run(options, rng, tally);
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }
  throw std::invalid_argument("unknown sweep claim \"" + std::string(name) + "\"");
}

std::vector<SweepResult> run_sweeps(const std::vector<std::string>& names, const SweepOptions& options) {
  std::vector<SweepResult> results;
  if (names.empty()) {
    for (const std::string& name : sweep_claim_names()) results.push_back(run_sweep_claim(name, options));
    return results;
  }
  for (const std::string& name : names) results.push_back(run_sweep_claim(name, options));
  return results;
}

}  // namespace pbfa
