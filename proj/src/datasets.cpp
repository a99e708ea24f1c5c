#include <string>
#include <vector>

#include "dsrate/errors.hpp"
#include "dsrate/io.hpp"
#include "dsrate/recode.hpp"

namespace dsrate {

namespace {

// 4 individuals rating 3 objects on a 1..5 scale; the running example
// used throughout the worked recodings.
RatingMatrix make_toy() {
  return make_rating_matrix(4, 3, 5,
                            {2, 4, 5,
                             3, 3, 1,
                             2, 1, 4,
                             1, 5, 3},
                            {}, {}, "toy");
}

// Perceived seriousness of 8 crimes, 17 respondents, scale 1 ("somewhat
// serious") to 4 ("extremely serious"). Homicide is rated 4 by everyone,
// which makes its reversed column empty in column-doubled analyses.
const std::vector<std::string> kCrimeNames = {
    "Arson",      "Burglary", "Counterfeiting", "Forgery",
    "Homicide",   "Kidnapping", "Mugging",      "Receiving stolen goods"};

constexpr int kCrimeRatings[17][8] = {
    {4, 2, 2, 2, 4, 3, 3, 1},
    {4, 2, 2, 2, 4, 4, 3, 1},
    {3, 2, 2, 2, 4, 3, 3, 1},
    {4, 3, 2, 2, 4, 4, 4, 3},
    {4, 3, 2, 2, 4, 4, 3, 2},
    {4, 3, 3, 2, 4, 4, 3, 2},
    {4, 1, 2, 2, 4, 4, 2, 1},
    {4, 4, 2, 2, 4, 4, 3, 2},
    {3, 2, 1, 2, 4, 4, 3, 1},
    {4, 3, 3, 3, 4, 4, 3, 2},
    {4, 2, 3, 3, 4, 4, 4, 1},
    {4, 4, 3, 3, 4, 4, 4, 2},
    {4, 3, 3, 2, 4, 4, 3, 1},
    {4, 2, 2, 2, 4, 3, 3, 1},
    {4, 2, 1, 1, 4, 4, 2, 1},
    {3, 2, 2, 2, 4, 3, 3, 1},
    {3, 2, 2, 2, 4, 4, 3, 2},
};

RatingMatrix make_crimes(bool with_homicide) {
  std::vector<int> ratings;
  std::vector<std::string> cols;
  for (std::size_t j = 0; j < 8; ++j) {
    if (!with_homicide && kCrimeNames[j] == "Homicide") continue;
    cols.push_back(kCrimeNames[j]);
  }
  for (const auto& row : kCrimeRatings)
    for (std::size_t j = 0; j < 8; ++j) {
      if (!with_homicide && kCrimeNames[j] == "Homicide") continue;
      ratings.push_back(row[j]);
    }
  const std::size_t p = cols.size();
  return make_rating_matrix(17, p, 4, std::move(ratings), {}, std::move(cols),
                            with_homicide ? "crimes" : "crimes_no_homicide");
}

}  // namespace

RatingMatrix builtin(const std::string& name) {
  if (name == "toy") return make_toy();
  if (name == "crimes") return make_crimes(true);
  if (name == "crimes_no_homicide") return make_crimes(false);
  throw UnknownDataset(name);
}

std::vector<std::string> builtin_names() {
  return {"toy", "crimes", "crimes_no_homicide"};
}

}  // namespace dsrate
