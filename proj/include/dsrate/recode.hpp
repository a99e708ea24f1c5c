#ifndef DSRATE_RECODE_HPP
#define DSRATE_RECODE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsrate/matrix.hpp"

namespace dsrate {

/// An n x p table of integer ratings on a declared 1..q scale.
struct RatingMatrix {
  std::size_t n = 0;  // respondents
  std::size_t p = 0;  // rated objects
  int q = 0;          // scale maximum; ratings live in 1..q
  std::vector<int> ratings;  // row-major, n*p entries
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::string source;  // dataset identity, used for provenance checks

  int at(std::size_t i, std::size_t j) const { return ratings[i * p + j]; }
};

/// Validates invariants (q >= 2, n >= 2, p >= 2, every rating in 1..q,
/// label counts) and fills in generated labels where none are given.
/// Throws InvalidInput / RatingOutOfRange.
RatingMatrix make_rating_matrix(std::size_t n, std::size_t p, int q,
                                std::vector<int> ratings,
                                std::vector<std::string> row_labels = {},
                                std::vector<std::string> col_labels = {},
                                std::string source = {});

/// The re-codings a RecodedMatrix can carry.
enum class RecodeKind {
  ShiftedCounts,       // T: ratings minus one, values 0..q-1
  ReversedCounts,      // S: (q-1) - T, the reversed-scale counts
  RankOrder,           // T*: per-row ascending midranks shifted to 0..p-1
  ReversedRankOrder,   // S*: (p-1) - T*
  SuccessiveCategory,  // joint midranks of objects and scale boundaries
  Dominance,           // E = T* - S*; rows sum to zero
  RowDoubled,          // [top; bottom] with constant cellwise sum
  ColumnDoubled,       // [T | S] with constant pairwise sum q-1
};

std::string_view to_string(RecodeKind kind);

/// A real matrix tagged with its re-coding provenance. `n`, `p`, `q` and
/// `source` describe the rating matrix it came from, which is how paired
/// recodings are checked for compatibility before doubling.
struct RecodedMatrix {
  Matrix data;
  RecodeKind kind;
  std::size_t n = 0, p = 0;
  int q = 0;
  std::string source;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

/// T = R - 1: each entry counts the scale points below the given rating.
RecodedMatrix shift_counts(const RatingMatrix& r);

/// S = (q-1) - T: the same ratings read on the reversed scale.
RecodedMatrix reverse_counts(const RecodedMatrix& t);

/// F_c = [T | S]: column-wise doubling. Column labels get "+" and "-"
/// suffixes for the original and reversed direction.
RecodedMatrix double_columns(const RecodedMatrix& t, const RecodedMatrix& s);

/// F_r = [top; bottom]: row-wise doubling of a matched recoding pair.
/// Accepted pairs are (RankOrder, ReversedRankOrder) and
/// (ShiftedCounts, ReversedCounts); row labels get "+" / "-" suffixes.
RecodedMatrix double_rows(const RecodedMatrix& top, const RecodedMatrix& bottom);

/// Per-row conversion of ratings to 0..p-1 rank order, ties resolved by
/// midranks (the average of the ranks a tied group spans). Returns
/// (T*, S*) with S* = (p-1) - T*.
std::pair<RecodedMatrix, RecodedMatrix> rank_rows(const RatingMatrix& r);

/// E = T* - S*: how often each object beats the others minus how often
/// it loses, per respondent. Every row sums to zero.
RecodedMatrix dominance(const RecodedMatrix& tstar, const RecodedMatrix& sstar);

/// Jointly midranks each respondent's p ratings together with the q-1
/// category boundaries (placed at k + 0.5). Output is n x (p+q-1) with
/// object columns first, boundary columns after, ranks starting at 1.
RecodedMatrix successive_categories(const RatingMatrix& r);

/// Shifts successive-category ranks to 0..m-1 and pairs them with the
/// reversed ranks, ready for row-wise doubling.
std::pair<RecodedMatrix, RecodedMatrix> scd_to_rank_pair(const RecodedMatrix& scd);

/// Maps every rating r to q+1-r. Used by the invariance checks.
RatingMatrix reverse_scale(const RatingMatrix& r);

}  // namespace dsrate

#endif  // DSRATE_RECODE_HPP
