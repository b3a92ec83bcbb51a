#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tosc/oscillation.hpp"

namespace tosc {

/// A FuncTree on an unrolled presentation of a space, read through original
/// addresses.
struct PresentedFunction {
  Unrolled presentation;
  FuncTree func;

  Rational eval(const PointAddress& original_addr) const;
  bool is_continuous() const { return tosc::is_continuous(func); }
};

/// Continuous extension of f|C to the whole space. Points outside C copy the
/// value of their nearest ancestor in C (0 when there is none); tails leaving
/// C are constant. Throws std::invalid_argument when C is not closed or f|C
/// is not continuous.
PresentedFunction tietze_extend(const FuncTree& f, const SubsetTree& c);

enum class SequenceKind { Stabilizing, Summable };
const char* kind_name(SequenceKind k);

/// n |-> f_n for n = 1, 2, ..., each term continuous.
class FunctionSequence {
 public:
  virtual ~FunctionSequence() = default;

  virtual SequenceKind kind() const = 0;
  virtual const SpaceTree& space() const = 0;
  virtual Rational value(std::size_t n, const PointAddress& x) const = 0;
  virtual PresentedFunction term(std::size_t n) const = 0;
  virtual Rational target(const PointAddress& x) const = 0;
  /// m with f_n(x) = target(x) for all n >= m, when the sequence stabilizes.
  virtual std::optional<std::size_t> stabilization_index(const PointAddress& x) const = 0;
  /// Exact sum over k >= n0 of |f_{k+1}(x) - f_k(x)|.
  virtual Extended variation_from(const PointAddress& x, std::size_t n0) const = 0;
};

using SequencePtr = std::shared_ptr<const FunctionSequence>;

/// f_n = f for every n.
SequencePtr constant_sequence(const FuncTree& f);

struct GluePiece {
  SubsetTree set;
  SequencePtr source;
};

/// Sequence glued from pieces. Term n agrees with the source of piece j on
/// G_n^j for j <= n, where G_n^j is the part of the disjointified piece
/// whose copy numbers are all below n.
class GluedSequence : public FunctionSequence {
 public:
  GluedSequence(SpaceTree space, std::vector<GluePiece> pieces, SequenceKind kind);

  SequenceKind kind() const override { return kind_; }
  const SpaceTree& space() const override { return space_; }
  Rational value(std::size_t n, const PointAddress& x) const override;
  PresentedFunction term(std::size_t n) const override;
  Rational target(const PointAddress& x) const override;
  std::optional<std::size_t> stabilization_index(const PointAddress& x) const override;
  Extended variation_from(const PointAddress& x, std::size_t n0) const override;

  /// The disjointified pieces.
  const std::vector<SubsetTree>& pieces() const { return disjoint_; }
  /// G_n^j (j counted from 1).
  SubsetTree exhaustion_set(std::size_t n, std::size_t j) const;
  /// 1-based index of the piece containing x.
  std::size_t piece_of(const PointAddress& x) const;
  /// First n from which term n follows the piece's source at x.
  std::size_t capture_index(const PointAddress& x) const;

 private:
  std::optional<Rational> anchored(std::size_t n, const PointAddress& a) const;

  SpaceTree space_;
  std::vector<GluePiece> pieces_;
  std::vector<SubsetTree> disjoint_;
  SequenceKind kind_;
};

/// Pointwise stabilizing sequence for a piecewise continuous target. Throws
/// std::invalid_argument on a cover failure, a non-ambiguous piece or a
/// discontinuous restriction.
std::shared_ptr<const GluedSequence> glue_stabilizing(const SpaceTree& space,
                                                      const std::vector<std::pair<SubsetTree, FuncTree>>& pieces);
/// Absolutely summable sequence glued from summable (or stabilizing) sources.
std::shared_ptr<const GluedSequence> glue_dsc(const SpaceTree& space, const std::vector<GluePiece>& pieces);

/// Stabilizing witness for f: pieces are the Cantor-Bendixson rank layers.
std::shared_ptr<const GluedSequence> ps_witness(const FuncTree& f);

struct SequenceCheck {
  std::size_t points = 0;
  std::size_t violations = 0;
  std::vector<std::string> messages;
};

/// Terms continuous; f_n(x) = target(x) from the stabilization index up to
/// the horizon, at every point of enumerate_points(budget).
SequenceCheck check_stabilization(const FunctionSequence& s, std::size_t budget, std::size_t horizon);
/// Partial sums of |f_{k+1} - f_k| up to the horizon plus the certified
/// remainder reproduce the certificate exactly. Term continuity is checked
/// only when requested.
SequenceCheck check_summability(const FunctionSequence& s, std::size_t budget, std::size_t horizon,
                                bool require_continuous = true);

struct LayerReport {
  bool pieces_locally_closed = false;
  bool pieces_partition = false;
  bool restrictions_continuous = false;
  bool witness_stabilizes = false;
  bool witness_matches_target = false;
  bool ok() const {
    return pieces_locally_closed && pieces_partition && restrictions_continuous && witness_stabilizes &&
           witness_matches_target;
  }
};

/// Both directions of the PS / locally-closed-pieces equivalence.
LayerReport check_layer_decomposition(const FuncTree& f, std::size_t budget);

struct StepApproximation {
  std::size_t n = 0;
  FuncTree step;
  /// W_i with grid labels: value (m + j) / n on W_i, 1 <= j <= n.
  struct Piece {
    SubsetTree set;
    long m;
    long j;
  };
  std::vector<Piece> pieces;
  Rational error;
};

/// Step function with values in (1/n)Z within 3/n of f. Throws std::invalid_argument
/// for n < 2 or f with drift.
StepApproximation step_approximation(const FuncTree& f, std::size_t n);

struct StepCheck {
  bool error_within_bound = false;
  /// G <= A <= F for the closed and open level bands around each piece.
  bool bands_nested = false;
  /// f maps each piece into its open band.
  bool piece_in_band = false;
  bool partition = false;
  bool range_discrete = false;
  bool ps_verified = false;
  bool ok() const {
    return error_within_bound && bands_nested && piece_in_band && partition && range_discrete && ps_verified;
  }
};

StepCheck check_step_approximation(const FuncTree& f, const StepApproximation& s, std::size_t budget);

/// phi_1 .. phi_J, then phi_{J+t} = ratio^t * shape for t >= 1.
struct SeriesSpec {
  SpaceTree space;
  std::vector<FuncTree> terms;
  struct GeometricTail {
    FuncTree shape;
    Rational ratio;
    friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
  };
  std::optional<GeometricTail> tail;

  /// phi_j for j >= 1.
  FuncTree term(std::size_t j) const;
  /// phi_1 + ... + phi_n.
  FuncTree partial_sum(std::size_t n) const;
  /// Exact limit (throws std::domain_error when |ratio| >= 1).
  FuncTree target() const;
  /// target - partial_sum(n), exact.
  FuncTree remainder(std::size_t n) const;
  /// Why the series hypotheses (no drift, |ratio| < 1) fail; empty when they hold.
  std::string hypothesis_violation() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// f_n as a FunctionSequence of kind Summable.
SequencePtr series_sequence(const SeriesSpec& s);

struct TailOscReport {
  bool hypothesis_ok = false;
  std::string hypothesis_message;
  std::size_t checks = 0;
  std::size_t violations = 0;
  /// Smallest slack of the pointwise tail inequality over all checks.
  Extended min_slack = Extended::pos_inf();
  /// Number of checks where the inequality is an equality.
  std::size_t equalities = 0;
  bool norm_conclusion = false;
};

/// osc_g(target - f_n) <= sum_{j>n} osc_g phi_j at every point, for all
/// g <= gamma_max and n = 0 .. J + 3, plus the matching norm bounds.
TailOscReport lemma53_check(const SeriesSpec& s, std::size_t gamma_max);

struct BlockReport {
  bool hypothesis_ok = false;
  std::string hypothesis_message;
  std::size_t alpha = 0;
  std::vector<std::size_t> blocks;  // n_1 < n_2 < ...
  /// Each block of osc_alpha phi_j has norm below 2^-i.
  bool block_bounds = false;
  /// osc of a block sum is at most the sum of the oscillations.
  bool block_subadditive = false;
  /// The block oscillation norms sum to less than 1.
  bool block_norms_summable = false;
  Verdict verdict = Verdict::NotDetermined;
  std::size_t dsc_index = 0;
  bool stable_osc_finite = false;
  bool ok() const { return hypothesis_ok && block_bounds && block_subadditive && block_norms_summable && verdict == Verdict::Dsc && stable_osc_finite; }
};

BlockReport cor54_check(const SeriesSpec& s, std::size_t block_count = 6);

}  // namespace tosc
