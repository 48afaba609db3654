#include "zzosp/parastat.hpp"

#include <array>
#include <functional>

namespace zzosp {

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::parafermion: return "parafermion";
    case GeneratorKind::paraboson: return "paraboson";
    case GeneratorKind::palev: return "palev";
  }
  return "?";
}

std::string to_string(RelationFamily f) {
  switch (f) {
    case RelationFamily::FF: return "FF";
    case RelationFamily::BB_same: return "BB_same";
    case RelationFamily::BB_mixed: return "BB_mixed";
    case RelationFamily::PF_family1: return "PF_family1";
    case RelationFamily::PF_family2: return "PF_family2";
    case RelationFamily::A_same: return "A_same";
    case RelationFamily::A_mixed: return "A_mixed";
  }
  return "?";
}

RelationFamily parse_relation_family(const std::string& name) {
  for (auto f : {RelationFamily::FF, RelationFamily::BB_same, RelationFamily::BB_mixed, RelationFamily::PF_family1,
                 RelationFamily::PF_family2, RelationFamily::A_same, RelationFamily::A_mixed}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown relation family '" + name + "'");
}

const GradedMatrix& GeneratorSet::op(std::size_t i, int sign) const {
  if (i < 1 || i > count()) throw std::out_of_range("generator index " + std::to_string(i));
  return sign > 0 ? creators[i - 1] : annihilators[i - 1];
}

Degree GeneratorSet::expected_degree(std::size_t i) const {
  const bool first = family_of(i) == 0;
  if (kind == GeneratorKind::parafermion) return first ? kDeg00 : kDeg11;
  return first ? kDeg10 : kDeg01;
}

// ---------------------------------------------------------------------------
// Generators

GeneratorSet parafermion_ops(const AlgebraSpec& spec) {
  if (spec.family != Family::ospB) throw UnsupportedFamily("parafermions live in ospB, got " + spec.to_string());
  const std::size_t m = spec.m();
  if (m == 0) throw SpecError("parafermion set is empty: m1+m2 = 0");
  const Signature sig = spec.signature();
  const std::size_t c = 2 * m + 1;
  GeneratorSet g{spec, GeneratorKind::parafermion, {}, {}, spec.m1};
  for (std::size_t i = 1; i <= m; ++i) {
    g.creators.push_back(Scalar::sqrt2() * (elem(sig, c, i) - elem(sig, m + i, c)));
    g.annihilators.push_back(Scalar::sqrt2() * (elem(sig, i, c) - elem(sig, c, m + i)));
  }
  return g;
}

GeneratorSet paraboson_ops(const AlgebraSpec& spec) {
  if (spec.family != Family::ospB) throw UnsupportedFamily("parabosons live in ospB, got " + spec.to_string());
  const std::size_t m = spec.m();
  const std::size_t n = spec.n();
  if (n == 0) throw SpecError("paraboson set is empty: n1+n2 = 0");
  const Signature sig = spec.signature();
  const std::size_t c = 2 * m + 1;
  GeneratorSet g{spec, GeneratorKind::paraboson, {}, {}, spec.n1};
  for (std::size_t i = 1; i <= n; ++i) {
    g.creators.push_back(Scalar::sqrt2() * (elem(sig, c, c + n + i) + elem(sig, c + i, c)));
    g.annihilators.push_back(Scalar::sqrt2() * (elem(sig, c, c + i) - elem(sig, c + n + i, c)));
  }
  return g;
}

GeneratorSet paraboson_ops_pure(std::size_t n1, std::size_t n2) {
  const AlgebraSpec spec{Family::ospB, 0, 0, n1, n2};
  const std::size_t n = n1 + n2;
  if (n == 0) throw SpecError("paraboson set is empty: n1+n2 = 0");
  const Signature sig = spec.signature();
  GeneratorSet g{spec, GeneratorKind::paraboson, {}, {}, n1};
  for (std::size_t i = 1; i <= n; ++i) {
    g.annihilators.push_back(Scalar::sqrt2() * (elem(sig, 1, i + 1) - elem(sig, n + i + 1, 1)));
    g.creators.push_back(Scalar::sqrt2() * (elem(sig, 1, n + i + 1) + elem(sig, i + 1, 1)));
  }
  return g;
}

GeneratorSet palev_ops(std::size_t n1, std::size_t n2) {
  const std::size_t n = n1 + n2;
  if (n == 0) throw SpecError("Palev set is empty: n1+n2 = 0");
  const AlgebraSpec spec{Family::sl, 1, 0, n1, n2};
  const Signature sig = spec.signature();
  GeneratorSet g{spec, GeneratorKind::palev, {}, {}, n1};
  for (std::size_t i = 1; i <= n; ++i) {
    g.creators.push_back(elem(sig, i + 1, 1));
    g.annihilators.push_back(elem(sig, 1, i + 1));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Relation clauses

namespace {

using Index3 = std::array<std::size_t, 3>;
using Sign3 = std::array<int, 3>;

/// One sub-relation: index i of the tuple draws from set `from[i]`
/// (0 = primary, 1 = bosons), the predicate restricts the ranges, and `sides`
/// returns LHS - RHS.
struct Clause {
  std::string name;
  int arity;       // 2 or 3 indices
  int sign_arity;  // 0 (signs fixed by the clause) or 3
  std::array<int, 3> from{0, 0, 0};
  std::function<bool(const Index3&)> admissible;
  std::function<GradedMatrix(const Index3&, const Sign3&)> residual;
};

Scalar delta(std::size_t a, std::size_t b) { return Scalar(a == b ? 1 : 0); }
Scalar num(int v) { return Scalar(long(v)); }
Scalar absnum(int v) { return Scalar(long(v < 0 ? -v : v)); }

std::vector<Clause> clauses_for(RelationFamily family, const GeneratorSet& p, const GeneratorSet* b) {
  using GM = GradedMatrix;
  std::vector<Clause> out;
  auto fam = [](const GeneratorSet& g) { return [&g](std::size_t i) { return g.family_of(i); }; };
  const auto pf = fam(p);
  auto any = [](const Index3&) { return true; };

  switch (family) {
    case RelationFamily::FF:
      out.push_back({"[[f,f],f]", 3, 3, {0, 0, 0}, any, [&p](const Index3& t, const Sign3& s) {
                       auto [j, k, l] = t;
                       auto [x, y, e] = s;
                       GM lhs = commutator(commutator(p.op(j, x), p.op(k, y)), p.op(l, e));
                       GM rhs = absnum(e - y) * delta(k, l) * p.op(j, x) - absnum(e - x) * delta(j, l) * p.op(k, y);
                       return lhs - rhs;
                     }});
      break;
    case RelationFamily::BB_same:
      out.push_back({"[{b,b},b]", 3, 3, {0, 0, 0},
                     [pf](const Index3& t) { return pf(t[0]) == pf(t[1]) && pf(t[1]) == pf(t[2]); },
                     [&p](const Index3& t, const Sign3& s) {
                       auto [j, k, l] = t;
                       auto [x, y, e] = s;
                       GM lhs = commutator(anticommutator(p.op(j, x), p.op(k, y)), p.op(l, e));
                       GM rhs = num(e - x) * delta(j, l) * p.op(k, y) + num(e - y) * delta(k, l) * p.op(j, x);
                       return lhs - rhs;
                     }});
      break;
    case RelationFamily::BB_mixed:
      out.push_back({"{[b,b],b}", 3, 3, {0, 0, 0}, [pf](const Index3& t) { return pf(t[0]) != pf(t[1]); },
                     [&p](const Index3& t, const Sign3& s) {
                       auto [j, k, l] = t;
                       auto [x, y, e] = s;
                       GM lhs = anticommutator(commutator(p.op(j, x), p.op(k, y)), p.op(l, e));
                       GM rhs = num(-(e - x)) * delta(j, l) * p.op(k, y) + num(e - y) * delta(k, l) * p.op(j, x);
                       return lhs - rhs;
                     }});
      break;
    case RelationFamily::PF_family1:
    case RelationFamily::PF_family2: {
      const GeneratorSet& f = p;
      const GeneratorSet& bo = *b;
      const int want = family == RelationFamily::PF_family1 ? 0 : 1;
      auto in_f = [&f, want](std::size_t i) { return f.family_of(i) == want; };
      out.push_back({"[[f,f],b]=0", 3, 3, {0, 0, 1}, [in_f](const Index3& t) { return in_f(t[0]) && in_f(t[1]); },
                     [&f, &bo](const Index3& t, const Sign3& s) {
                       return commutator(commutator(f.op(t[0], s[0]), f.op(t[1], s[1])), bo.op(t[2], s[2]));
                     }});
      out.push_back({"[{b,b},f]=0", 3, 3, {1, 1, 0}, [in_f](const Index3& t) { return in_f(t[2]); },
                     [&f, &bo](const Index3& t, const Sign3& s) {
                       return commutator(anticommutator(bo.op(t[0], s[0]), bo.op(t[1], s[1])), f.op(t[2], s[2]));
                     }});
      if (want == 0) {
        out.push_back({"[[f,b],f]", 3, 3, {0, 1, 0}, [in_f](const Index3& t) { return in_f(t[0]) && in_f(t[2]); },
                       [&f, &bo](const Index3& t, const Sign3& s) {
                         auto [j, k, l] = t;
                         auto [x, y, e] = s;
                         GM lhs = commutator(commutator(f.op(j, x), bo.op(k, y)), f.op(l, e));
                         GM rhs = -(absnum(e - x) * delta(j, l) * bo.op(k, y));
                         return lhs - rhs;
                       }});
        out.push_back({"{[f,b],b}", 3, 3, {0, 1, 1}, [in_f](const Index3& t) { return in_f(t[0]); },
                       [&f, &bo](const Index3& t, const Sign3& s) {
                         auto [j, k, l] = t;
                         auto [x, y, e] = s;
                         GM lhs = anticommutator(commutator(f.op(j, x), bo.op(k, y)), bo.op(l, e));
                         GM rhs = num(e - y) * delta(k, l) * f.op(j, x);
                         return lhs - rhs;
                       }});
      } else {
        out.push_back({"{{f,b},f}", 3, 3, {0, 1, 0}, [in_f](const Index3& t) { return in_f(t[0]) && in_f(t[2]); },
                       [&f, &bo](const Index3& t, const Sign3& s) {
                         auto [j, k, l] = t;
                         auto [x, y, e] = s;
                         GM lhs = anticommutator(anticommutator(f.op(j, x), bo.op(k, y)), f.op(l, e));
                         GM rhs = absnum(e - x) * delta(j, l) * bo.op(k, y);
                         return lhs - rhs;
                       }});
        out.push_back({"[{f,b},b]", 3, 3, {0, 1, 1}, [in_f](const Index3& t) { return in_f(t[0]); },
                       [&f, &bo](const Index3& t, const Sign3& s) {
                         auto [j, k, l] = t;
                         auto [x, y, e] = s;
                         GM lhs = commutator(anticommutator(f.op(j, x), bo.op(k, y)), bo.op(l, e));
                         GM rhs = num(e - y) * delta(k, l) * f.op(j, x);
                         return lhs - rhs;
                       }});
      }
      break;
    }
    case RelationFamily::A_same: {
      auto same2 = [pf](const Index3& t) { return pf(t[0]) == pf(t[1]); };
      auto same3 = [pf](const Index3& t) { return pf(t[0]) == pf(t[1]) && pf(t[1]) == pf(t[2]); };
      out.push_back({"{a+,a+}=0", 2, 0, {0, 0, 0}, same2,
                     [&p](const Index3& t, const Sign3&) { return anticommutator(p.op(t[0], 1), p.op(t[1], 1)); }});
      out.push_back({"{a-,a-}=0", 2, 0, {0, 0, 0}, same2,
                     [&p](const Index3& t, const Sign3&) { return anticommutator(p.op(t[0], -1), p.op(t[1], -1)); }});
      out.push_back({"[{a+,a-},a+]", 3, 0, {0, 0, 0}, same3, [&p](const Index3& t, const Sign3&) {
                       auto [i, j, k] = t;
                       GM lhs = commutator(anticommutator(p.op(i, 1), p.op(j, -1)), p.op(k, 1));
                       GM rhs = delta(j, k) * p.op(i, 1) - delta(i, j) * p.op(k, 1);
                       return lhs - rhs;
                     }});
      out.push_back({"[{a+,a-},a-]", 3, 0, {0, 0, 0}, same3, [&p](const Index3& t, const Sign3&) {
                       auto [i, j, k] = t;
                       GM lhs = commutator(anticommutator(p.op(i, 1), p.op(j, -1)), p.op(k, -1));
                       GM rhs = delta(i, j) * p.op(k, -1) - delta(i, k) * p.op(j, -1);
                       return lhs - rhs;
                     }});
      break;
    }
    case RelationFamily::A_mixed: {
      auto cross = [pf](const Index3& t) { return pf(t[0]) != pf(t[1]); };
      out.push_back({"[a+,a+]=0", 2, 0, {0, 0, 0}, cross,
                     [&p](const Index3& t, const Sign3&) { return commutator(p.op(t[0], 1), p.op(t[1], 1)); }});
      out.push_back({"[a-,a-]=0", 2, 0, {0, 0, 0}, cross,
                     [&p](const Index3& t, const Sign3&) { return commutator(p.op(t[0], -1), p.op(t[1], -1)); }});
      out.push_back({"{[a+,a-],a+}", 3, 0, {0, 0, 0}, cross, [&p](const Index3& t, const Sign3&) {
                       auto [i, j, k] = t;
                       GM lhs = anticommutator(commutator(p.op(i, 1), p.op(j, -1)), p.op(k, 1));
                       return lhs - delta(j, k) * p.op(i, 1);
                     }});
      out.push_back({"{[a+,a-],a-}", 3, 0, {0, 0, 0}, cross, [&p](const Index3& t, const Sign3&) {
                       auto [i, j, k] = t;
                       GM lhs = anticommutator(commutator(p.op(i, 1), p.op(j, -1)), p.op(k, -1));
                       return lhs - delta(i, k) * p.op(j, -1);
                     }});
      break;
    }
  }
  return out;
}

void require_kind(RelationFamily family, const GeneratorSet& gens, const GeneratorSet* bosons) {
  auto fail = [&](const std::string& want) {
    throw KindMismatch(to_string(family) + " needs " + want + ", got " + to_string(gens.kind) +
                       (bosons ? " and " + to_string(bosons->kind) : ""));
  };
  switch (family) {
    case RelationFamily::FF:
      if (gens.kind != GeneratorKind::parafermion || bosons) fail("a parafermion set");
      break;
    case RelationFamily::BB_same:
    case RelationFamily::BB_mixed:
      if (gens.kind != GeneratorKind::paraboson || bosons) fail("a paraboson set");
      break;
    case RelationFamily::PF_family1:
    case RelationFamily::PF_family2:
      if (gens.kind != GeneratorKind::parafermion || !bosons || bosons->kind != GeneratorKind::paraboson) {
        fail("a parafermion set and a paraboson set");
      }
      if (gens.spec != bosons->spec) throw SignatureMismatch("parafermions and parabosons come from different algebras");
      break;
    case RelationFamily::A_same:
    case RelationFamily::A_mixed:
      if (gens.kind != GeneratorKind::palev || bosons) fail("a Palev set");
      break;
  }
}

CheckReport run_clauses(RelationFamily family, const GeneratorSet& p, const GeneratorSet* b,
                        std::size_t max_counterexamples) {
  require_kind(family, p, b);
  CheckReport r;
  r.check = to_string(family);
  r.spec = p.spec;
  r.declared_total = declared_instances(family, p, b);

  for (const Clause& clause : clauses_for(family, p, b)) {
    std::array<std::size_t, 3> range{1, 1, 1};
    for (int pos = 0; pos < clause.arity; ++pos) range[pos] = (clause.from[pos] == 0 ? p : *b).count();
    const int sign_count = 1 << clause.sign_arity;
    Index3 t{1, 1, 1};
    for (t[0] = 1; t[0] <= range[0]; ++t[0]) {
      for (t[1] = 1; t[1] <= range[1]; ++t[1]) {
        for (t[2] = 1; t[2] <= range[2]; ++t[2]) {
          if (!clause.admissible(t)) continue;
          for (int mask = 0; mask < sign_count; ++mask) {
            // Bit set means -1; mask order puts (+,+,+) first.
            Sign3 s{1, 1, 1};
            for (int pos = 0; pos < clause.sign_arity; ++pos) {
              if (mask & (1 << (clause.sign_arity - 1 - pos))) s[pos] = -1;
            }
            GradedMatrix residual = clause.residual(t, s);
            const bool ok = residual.is_zero();
            std::vector<long> idx(t.begin(), t.begin() + clause.arity);
            std::vector<int> sg(s.begin(), s.begin() + clause.sign_arity);
            r.record(ok, max_counterexamples, {clause.name, std::move(idx), std::move(sg), std::move(residual)});
          }
        }
      }
    }
  }
  return r;
}

}  // namespace

std::size_t declared_instances(RelationFamily family, const GeneratorSet& primary, const GeneratorSet* bosons) {
  const std::size_t first = primary.family_split;
  const std::size_t second = primary.count() - primary.family_split;
  const std::size_t all = primary.count();
  switch (family) {
    case RelationFamily::FF: return all * all * all * 8;
    case RelationFamily::BB_same: return (first * first * first + second * second * second) * 8;
    case RelationFamily::BB_mixed: return 2 * first * second * all * 8;
    case RelationFamily::PF_family1:
    case RelationFamily::PF_family2: {
      if (!bosons) return 0;
      const std::size_t f = family == RelationFamily::PF_family1 ? first : second;
      const std::size_t nb = bosons->count();
      // [[f,f],b], [{b,b},f], the f-b-f clause and the f-b-b clause.
      return (f * f * nb + nb * nb * f + f * nb * f + f * nb * nb) * 8;
    }
    case RelationFamily::A_same:
      return 2 * (first * first + second * second) + 2 * (first * first * first + second * second * second);
    case RelationFamily::A_mixed: return 2 * (2 * first * second) + 2 * (2 * first * second * all);
  }
  return 0;
}

CheckReport verify_relations(RelationFamily family, const GeneratorSet& gens, std::size_t max_counterexamples) {
  return run_clauses(family, gens, nullptr, max_counterexamples);
}

CheckReport verify_relations(RelationFamily family, const GeneratorSet& fermions, const GeneratorSet& bosons,
                             std::size_t max_counterexamples) {
  return run_clauses(family, fermions, &bosons, max_counterexamples);
}

namespace {

struct LabeledOp {
  const GradedMatrix* matrix;
  long set;
  long index;
  int sign;
};

std::vector<LabeledOp> flatten(std::span<const GeneratorSet> sets) {
  std::vector<LabeledOp> ops;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (std::size_t i = 1; i <= sets[s].count(); ++i) {
      for (int sign : {1, -1}) ops.push_back({&sets[s].op(i, sign), long(s + 1), long(i), sign});
    }
  }
  return ops;
}

}  // namespace

CheckReport graded_bracket_consistency(std::span<const GeneratorSet> sets, std::size_t max_counterexamples) {
  const std::vector<LabeledOp> ops = flatten(sets);
  CheckReport r;
  r.check = "graded_bracket_consistency";
  if (!sets.empty()) r.spec = sets.front().spec;
  r.declared_total = ops.size() * ops.size();
  for (const auto& x : ops) {
    const auto dx = degree_of(*x.matrix);
    if (!dx) throw std::invalid_argument("graded_bracket_consistency: generator is not homogeneous");
    for (const auto& y : ops) {
      const auto dy = degree_of(*y.matrix);
      if (!dy) throw std::invalid_argument("graded_bracket_consistency: generator is not homogeneous");
      const bool anti = dot(*dx, *dy) == 1;
      GradedMatrix plain = anti ? anticommutator(*x.matrix, *y.matrix) : commutator(*x.matrix, *y.matrix);
      GradedMatrix residual = graded_bracket(*x.matrix, *y.matrix) - plain;
      const bool ok = residual.is_zero();
      r.record(ok, max_counterexamples,
               {anti ? "anticommutator" : "commutator", {x.set, x.index, y.set, y.index}, {x.sign, y.sign},
                std::move(residual)});
    }
  }
  return r;
}

CheckReport graded_bracket_consistency(const GeneratorSet& gens, std::size_t max_counterexamples) {
  return graded_bracket_consistency(std::span<const GeneratorSet>(&gens, 1), max_counterexamples);
}

CheckReport verify_generator_set(const GeneratorSet& gens, std::size_t max_counterexamples) {
  CheckReport r;
  r.check = "generators_" + to_string(gens.kind);
  r.spec = gens.spec;
  r.declared_total = 2 * gens.count();
  for (std::size_t i = 1; i <= gens.count(); ++i) {
    for (int sign : {1, -1}) {
      const GradedMatrix& g = gens.op(i, sign);
      const auto d = degree_of(g);
      const bool degree_ok = d && *d == gens.expected_degree(i) && !g.is_zero();
      GradedMatrix residual = membership_residual(gens.spec, g);
      const bool ok = degree_ok && residual.is_zero();
      r.record(ok, max_counterexamples,
               {degree_ok ? "membership" : "degree", {long(i)}, {sign}, degree_ok ? std::move(residual) : g});
    }
  }
  return r;
}

std::size_t generated_rank(const GeneratorSet& gens, int depth) {
  std::vector<GradedMatrix> base;
  for (std::size_t i = 1; i <= gens.count(); ++i) {
    base.push_back(gens.op(i, 1));
    base.push_back(gens.op(i, -1));
  }
  std::vector<GradedMatrix> all = base;
  std::vector<GradedMatrix> level = base;
  for (int d = 2; d <= depth; ++d) {
    std::vector<GradedMatrix> next;
    for (const auto& g : base) {
      for (const auto& w : level) next.push_back(graded_bracket(g, w));
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return rank_of(all);
}

}  // namespace zzosp
