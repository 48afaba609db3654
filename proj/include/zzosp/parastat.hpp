#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zzosp/algebras.hpp"
#include "zzosp/graded_matrix.hpp"
#include "zzosp/report.hpp"

namespace zzosp {

enum class GeneratorKind { parafermion, paraboson, palev };

std::string to_string(GeneratorKind k);

class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Creation (+) and annihilation (-) operators realized as matrices. Operators
/// 1..family_split form family one, the rest family two.
struct GeneratorSet {
  AlgebraSpec spec;
  GeneratorKind kind = GeneratorKind::paraboson;
  std::vector<GradedMatrix> creators;
  std::vector<GradedMatrix> annihilators;
  std::size_t family_split = 0;

  std::size_t count() const { return creators.size(); }

  /// The operator with 1-based index i and sign +1 (creator) or -1 (annihilator).
  const GradedMatrix& op(std::size_t i, int sign) const;

  /// 0 for family one, 1 for family two.
  int family_of(std::size_t i) const { return i <= family_split ? 0 : 1; }

  /// Degree the operators of index i must carry.
  Degree expected_degree(std::size_t i) const;
};

/// f_i^+ = sqrt2 (e_{c,i} - e_{m+i,c}), f_i^- = sqrt2 (e_{i,c} - e_{c,m+i}) with
/// c = 2m+1, m = m1+m2, inside ospB. Requires m >= 1.
GeneratorSet parafermion_ops(const AlgebraSpec& spec);

/// b_i^+ = sqrt2 (e_{c,c+n+i} + e_{c+i,c}), b_i^- = sqrt2 (e_{c,c+i} - e_{c+n+i,c})
/// inside ospB. Requires n = n1+n2 >= 1.
GeneratorSet paraboson_ops(const AlgebraSpec& spec);

/// The paraboson generators of osp(1,0|2n1,2n2) written directly,
/// b_i^- = sqrt2 (e_{1,i+1} - e_{n+i+1,1}), b_i^+ = sqrt2 (e_{1,n+i+1} + e_{i+1,1}).
GeneratorSet paraboson_ops_pure(std::size_t n1, std::size_t n2);

/// a_i^+ = e_{i+1,1}, a_i^- = e_{1,i+1} in sl(1,0|n1,n2).
GeneratorSet palev_ops(std::size_t n1, std::size_t n2);

enum class RelationFamily { FF, BB_same, BB_mixed, PF_family1, PF_family2, A_same, A_mixed };

std::string to_string(RelationFamily f);
/// Accepts the names produced by to_string. Throws std::invalid_argument.
RelationFamily parse_relation_family(const std::string& name);

/// Number of instances (index tuples times sign tuples) the family declares
/// for the given operator counts, computed from the index-range predicates
/// without evaluating anything.
std::size_t declared_instances(RelationFamily family, const GeneratorSet& primary,
                               const GeneratorSet* bosons = nullptr);

/// FF on parafermions, BB_* on parabosons, A_* on Palev generators.
CheckReport verify_relations(RelationFamily family, const GeneratorSet& gens,
                             std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// PF_family1 / PF_family2 on a parafermion set and a paraboson set.
CheckReport verify_relations(RelationFamily family, const GeneratorSet& fermions, const GeneratorSet& bosons,
                             std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// For each ordered pair of operators x, y drawn from the sets: the graded
/// bracket equals the anticommutator when dot(deg x, deg y) = 1 and the
/// commutator otherwise.
CheckReport graded_bracket_consistency(std::span<const GeneratorSet> sets,
                                       std::size_t max_counterexamples = kDefaultMaxCounterexamples);
CheckReport graded_bracket_consistency(const GeneratorSet& gens,
                                       std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// Each operator carries its family's degree and (parafermion/paraboson) lies
/// in the ambient ospB.
CheckReport verify_generator_set(const GeneratorSet& gens,
                                 std::size_t max_counterexamples = kDefaultMaxCounterexamples);

/// Rank of the span of the generators together with all nested brackets up to
/// the given depth (1 = generators, 2 = pairwise, 3 = triple brackets).
std::size_t generated_rank(const GeneratorSet& gens, int depth);

}  // namespace zzosp
