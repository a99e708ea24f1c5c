#include "dsrate/recode.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dsrate/errors.hpp"

namespace dsrate {

namespace {

std::vector<std::string> generated_labels(std::string_view stem, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i)
    out.push_back(std::string(stem) + "_" + std::to_string(i));
  return out;
}

std::vector<std::string> suffixed(const std::vector<std::string>& labels,
                                  std::string_view suffix) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(l + std::string(suffix));
  return out;
}

void require_pair(const RecodedMatrix& a, const RecodedMatrix& b,
                  RecodeKind kind_a, RecodeKind kind_b) {
  if (a.kind != kind_a || b.kind != kind_b)
    throw MismatchedRecodings(std::string("expected a (") +
                              std::string(to_string(kind_a)) + ", " +
                              std::string(to_string(kind_b)) + ") pair, got (" +
                              std::string(to_string(a.kind)) + ", " +
                              std::string(to_string(b.kind)) + ")");
  if (!a.data.same_shape(b.data) || a.source != b.source || a.q != b.q)
    throw MismatchedRecodings("recodings come from different sources or shapes");
}

// Ascending midranks, starting at 1. Ties get the average of the ranks
// they span; halves are exact in binary floating point.
std::vector<double> midranks(const std::vector<double>& values) {
  const std::size_t m = values.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(m);
  std::size_t i = 0;
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && values[order[j + 1]] == values[order[i]]) ++j;
    const double mid = static_cast<double>(i + 1 + j + 1) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::string_view to_string(RecodeKind kind) {
  switch (kind) {
    case RecodeKind::ShiftedCounts: return "ShiftedCounts";
    case RecodeKind::ReversedCounts: return "ReversedCounts";
    case RecodeKind::RankOrder: return "RankOrder";
    case RecodeKind::ReversedRankOrder: return "ReversedRankOrder";
    case RecodeKind::SuccessiveCategory: return "SuccessiveCategory";
    case RecodeKind::Dominance: return "Dominance";
    case RecodeKind::RowDoubled: return "RowDoubled";
    case RecodeKind::ColumnDoubled: return "ColumnDoubled";
  }
  return "Unknown";
}

RatingMatrix make_rating_matrix(std::size_t n, std::size_t p, int q,
                                std::vector<int> ratings,
                                std::vector<std::string> row_labels,
                                std::vector<std::string> col_labels,
                                std::string source) {
  if (n < 2 || p < 2)
    throw InvalidInput("a rating matrix needs at least 2 respondents and "
                       "2 objects, got " + std::to_string(n) + "x" +
                       std::to_string(p));
  if (q < 2)
    throw InvalidInput("scale maximum must be at least 2, got " +
                       std::to_string(q));
  if (ratings.size() != n * p)
    throw InvalidInput("expected " + std::to_string(n * p) +
                       " ratings, got " + std::to_string(ratings.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const int v = ratings[i * p + j];
      if (v < 1 || v > q) throw RatingOutOfRange(i, j, v, q);
    }
  if (row_labels.empty()) row_labels = generated_labels("ind", n);
  if (col_labels.empty()) col_labels = generated_labels("obj", p);
  if (row_labels.size() != n || col_labels.size() != p)
    throw InvalidInput("label counts do not match matrix shape");

  RatingMatrix r;
  r.n = n;
  r.p = p;
  r.q = q;
  r.ratings = std::move(ratings);
  r.row_labels = std::move(row_labels);
  r.col_labels = std::move(col_labels);
  r.source = source.empty()
                 ? std::to_string(n) + "x" + std::to_string(p) + "q" + std::to_string(q)
                 : std::move(source);
  return r;
}

RecodedMatrix shift_counts(const RatingMatrix& r) {
  RecodedMatrix out;
  out.data = Matrix(r.n, r.p);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.p; ++j)
      out.data(i, j) = static_cast<double>(r.at(i, j) - 1);
  out.kind = RecodeKind::ShiftedCounts;
  out.n = r.n;
  out.p = r.p;
  out.q = r.q;
  out.source = r.source;
  out.row_labels = r.row_labels;
  out.col_labels = r.col_labels;
  return out;
}

RecodedMatrix reverse_counts(const RecodedMatrix& t) {
  if (t.kind != RecodeKind::ShiftedCounts)
    throw MismatchedRecodings("reverse_counts expects shifted counts, got " +
                              std::string(to_string(t.kind)));
  RecodedMatrix out = t;
  out.kind = RecodeKind::ReversedCounts;
  const double top = static_cast<double>(t.q - 1);
  for (double& v : out.data.data()) v = top - v;
  return out;
}

RecodedMatrix double_columns(const RecodedMatrix& t, const RecodedMatrix& s) {
  require_pair(t, s, RecodeKind::ShiftedCounts, RecodeKind::ReversedCounts);
  RecodedMatrix out;
  const std::size_t n = t.data.rows();
  const std::size_t p = t.data.cols();
  out.data = Matrix(n, 2 * p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      out.data(i, j) = t.data(i, j);
      out.data(i, j + p) = s.data(i, j);
    }
  }
  out.kind = RecodeKind::ColumnDoubled;
  out.n = t.n;
  out.p = t.p;
  out.q = t.q;
  out.source = t.source;
  out.row_labels = t.row_labels;
  out.col_labels = suffixed(t.col_labels, "+");
  const auto reversed = suffixed(t.col_labels, "-");
  out.col_labels.insert(out.col_labels.end(), reversed.begin(), reversed.end());
  return out;
}

RecodedMatrix double_rows(const RecodedMatrix& top, const RecodedMatrix& bottom) {
  const bool rank_pair = top.kind == RecodeKind::RankOrder &&
                         bottom.kind == RecodeKind::ReversedRankOrder;
  const bool count_pair = top.kind == RecodeKind::ShiftedCounts &&
                          bottom.kind == RecodeKind::ReversedCounts;
  if (!rank_pair && !count_pair)
    throw MismatchedRecodings(
        "double_rows expects (RankOrder, ReversedRankOrder) or "
        "(ShiftedCounts, ReversedCounts), got (" +
        std::string(to_string(top.kind)) + ", " +
        std::string(to_string(bottom.kind)) + ")");
  if (!top.data.same_shape(bottom.data) || top.source != bottom.source ||
      top.q != bottom.q)
    throw MismatchedRecodings("recodings come from different sources or shapes");

  RecodedMatrix out;
  const std::size_t n = top.data.rows();
  const std::size_t cols = top.data.cols();
  out.data = Matrix(2 * n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out.data(i, j) = top.data(i, j);
      out.data(i + n, j) = bottom.data(i, j);
    }
  }
  out.kind = RecodeKind::RowDoubled;
  out.n = top.n;
  out.p = top.p;
  out.q = top.q;
  out.source = top.source;
  out.row_labels = suffixed(top.row_labels, "+");
  const auto reversed = suffixed(top.row_labels, "-");
  out.row_labels.insert(out.row_labels.end(), reversed.begin(), reversed.end());
  out.col_labels = top.col_labels;
  return out;
}

std::pair<RecodedMatrix, RecodedMatrix> rank_rows(const RatingMatrix& r) {
  RecodedMatrix tstar;
  tstar.data = Matrix(r.n, r.p);
  std::vector<double> row(r.p);
  for (std::size_t i = 0; i < r.n; ++i) {
    for (std::size_t j = 0; j < r.p; ++j) row[j] = static_cast<double>(r.at(i, j));
    const auto ranks = midranks(row);
    for (std::size_t j = 0; j < r.p; ++j) tstar.data(i, j) = ranks[j] - 1.0;
  }
  tstar.kind = RecodeKind::RankOrder;
  tstar.n = r.n;
  tstar.p = r.p;
  tstar.q = r.q;
  tstar.source = r.source;
  tstar.row_labels = r.row_labels;
  tstar.col_labels = r.col_labels;

  RecodedMatrix sstar = tstar;
  sstar.kind = RecodeKind::ReversedRankOrder;
  const double top = static_cast<double>(r.p - 1);
  for (double& v : sstar.data.data()) v = top - v;
  return {std::move(tstar), std::move(sstar)};
}

RecodedMatrix dominance(const RecodedMatrix& tstar, const RecodedMatrix& sstar) {
  require_pair(tstar, sstar, RecodeKind::RankOrder, RecodeKind::ReversedRankOrder);
  RecodedMatrix out = tstar;
  out.kind = RecodeKind::Dominance;
  for (std::size_t i = 0; i < out.data.rows(); ++i)
    for (std::size_t j = 0; j < out.data.cols(); ++j)
      out.data(i, j) = tstar.data(i, j) - sstar.data(i, j);
  return out;
}

RecodedMatrix successive_categories(const RatingMatrix& r) {
  const std::size_t nb = static_cast<std::size_t>(r.q) - 1;  // boundaries
  const std::size_t m = r.p + nb;
  RecodedMatrix out;
  out.data = Matrix(r.n, m);
  std::vector<double> row(m);
  for (std::size_t i = 0; i < r.n; ++i) {
    for (std::size_t j = 0; j < r.p; ++j) row[j] = static_cast<double>(r.at(i, j));
    // boundary k sits between ratings k and k+1; the exact value only
    // needs to interleave, so the canonical half-integers are used
    for (std::size_t b = 0; b < nb; ++b) row[r.p + b] = static_cast<double>(b + 1) + 0.5;
    const auto ranks = midranks(row);
    for (std::size_t j = 0; j < m; ++j) out.data(i, j) = ranks[j];
  }
  out.kind = RecodeKind::SuccessiveCategory;
  out.n = r.n;
  out.p = r.p;
  out.q = r.q;
  out.source = r.source;
  out.row_labels = r.row_labels;
  out.col_labels = r.col_labels;
  for (std::size_t b = 1; b <= nb; ++b)
    out.col_labels.push_back("bnd_" + std::to_string(b));
  return out;
}

std::pair<RecodedMatrix, RecodedMatrix> scd_to_rank_pair(const RecodedMatrix& scd) {
  if (scd.kind != RecodeKind::SuccessiveCategory)
    throw MismatchedRecodings("scd_to_rank_pair expects successive-category "
                              "data, got " + std::string(to_string(scd.kind)));
  RecodedMatrix tstar = scd;
  tstar.kind = RecodeKind::RankOrder;
  for (double& v : tstar.data.data()) v -= 1.0;

  RecodedMatrix sstar = tstar;
  sstar.kind = RecodeKind::ReversedRankOrder;
  const double top = static_cast<double>(scd.data.cols() - 1);
  for (double& v : sstar.data.data()) v = top - v;
  return {std::move(tstar), std::move(sstar)};
}

RatingMatrix reverse_scale(const RatingMatrix& r) {
  RatingMatrix out = r;
  for (int& v : out.ratings) v = r.q + 1 - v;
  out.source = r.source + ":reversed";
  return out;
}

}  // namespace dsrate
