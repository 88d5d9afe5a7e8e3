#pragma once

#include "nvl/krylov_strata.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <gmpxx.h>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nvl {

enum class Variety { N, S };

/// One histogram row. r and s are empty for unstratified rows (written as "*").
struct CensusRecord {
  Variety variety = Variety::N;
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::optional<std::size_t> r;
  std::optional<std::size_t> s;
  bool commuting = false;
  mpz_class count;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Number of (i, j) with ij = -C over F_q (C must be over F_q).
mpz_class count_ij_solutions(const Matrix& c);

/// Largest n for which exhaustive enumeration is allowed.
inline constexpr std::size_t kMaxCensusN = 3;

/// Full point count of N(F_q), grouped by (r, s, commuting). Rank-one commutators
/// are always stratified; commuting pairs only when stratified and n, q <= 3.
/// threads = 0 picks the hardware concurrency.
std::vector<CensusRecord> enumerate_N(std::size_t n, std::uint64_t q, bool stratified, unsigned threads = 0);

/// Full point count of S(F_q), grouped by (dim K[A]i, dim jK[A], [A,B] = 0).
std::vector<CensusRecord> enumerate_S(std::size_t n, std::uint64_t q, bool stratified, unsigned threads = 0);

/// |{(X, Y) nilpotent : XY = YX}| over F_q, by enumerating the centralizer of each X.
mpz_class count_commuting_nilpotent_pairs(std::size_t n, std::uint64_t q);

/// Merges rows with identical keys and sorts them.
std::vector<CensusRecord> merge_records(std::vector<CensusRecord> records);

/// A point over F_q with small integer entries in [0, q), row-major.
struct SmallPoint {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::array<int, 9> X{};
  std::array<int, 9> Y{};
  std::array<int, 3> i{};
  std::array<int, 3> j{};

  Quadruple to_quadruple() const;
};

/// Visits every point of N(F_q) (all i, j, not one per scaling class).
void for_each_N_point(std::size_t n, std::uint64_t q, const std::function<void(const SmallPoint&)>& fn);
/// Visits every point of S(F_q) with (A, B) in (X, Y).
void for_each_S_point(std::size_t n, std::uint64_t q, const std::function<void(const SmallPoint&)>& fn);

struct RecordFilter {
  std::optional<Variety> variety;
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  std::optional<std::size_t> s;
  std::optional<bool> commuting;

  bool matches(const CensusRecord& rec) const;
  /// "n=3,variety=N,r=1,s=1,commuting=false"; empty text matches everything.
  static RecordFilter parse(const std::string& text);
};

/// Sum of matching counts per q, ascending in q.
std::vector<std::pair<std::uint64_t, mpz_class>> totals_by_q(const std::vector<CensusRecord>& records,
                                                             const RecordFilter& filter);

struct SlopeEstimate {
  std::vector<std::pair<std::uint64_t, mpz_class>> points;
  /// Least-squares slope of log count against log q, 40 significant digits.
  std::string slope_text;
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;
};

/// Needs at least two distinct q and positive counts.
SlopeEstimate dimension_slope(const std::vector<std::pair<std::uint64_t, mpz_class>>& points);

void write_csv(std::ostream& out, const std::vector<CensusRecord>& records);
std::vector<CensusRecord> read_csv(std::istream& in);

std::string to_string(Variety v);
Variety parse_variety(const std::string& text);

} // namespace nvl
