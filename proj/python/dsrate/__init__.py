"""Dual scaling and correspondence analysis of rating data."""

from dsrate._core import (
    Error,
    MeanRating,
    RatingMatrix,
    Recoded,
    Result,
    View,
    builtin,
    builtin_names,
    dominance_matrix,
    double_columns,
    double_rows,
    estimate_mean_ratings,
    load_csv,
    rank_order,
    rating_matrix,
    reverse_scale,
    run,
    serialize,
    shifted_counts,
    successive_categories,
    write_svg,
)

__all__ = [
    "Error",
    "MeanRating",
    "RatingMatrix",
    "Recoded",
    "Result",
    "View",
    "builtin",
    "builtin_names",
    "dominance_matrix",
    "double_columns",
    "double_rows",
    "estimate_mean_ratings",
    "load_csv",
    "rank_order",
    "rating_matrix",
    "reverse_scale",
    "run",
    "serialize",
    "shifted_counts",
    "successive_categories",
    "write_svg",
]

__version__ = "0.1.0"
