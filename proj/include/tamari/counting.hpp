#pragma once

// Closed-form counts, the canopy trivariate series and the modern series,
// all in exact integer arithmetic.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tamari/intervals.hpp"

namespace tamari {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { General, Synchronized, Modern, New, ModernSynchronized, InfinitelyModern, Kreweras };

inline constexpr std::array<Family, 7> kAllFamilies{Family::General,          Family::Synchronized,
                                                    Family::Modern,           Family::New,
                                                    Family::ModernSynchronized, Family::InfinitelyModern,
                                                    Family::Kreweras};

std::string_view family_name(Family f);
/// Accepts the lowercase names used by the CLI ("general", "modern-synchronized", ...).
Family parse_family(std::string_view name);

/// Membership of an interval in a family, from the direct definitions.
bool in_family(const TamariInterval& interval, Family f);

BigInt binomial(int n, int k);
BigInt catalan(int n);

/// count(Modern, 0) = 1 so that count(New, 1) = 1.
BigInt count(Family f, int n);
BigInt count_self_dual(Family f, int n);
/// Intervals of size n whose canopies agree at exactly k + 2 positions.
BigInt count_J(int n, int k);
/// Synchronized intervals with i ones and j zeros in their common canopy.
BigInt count_sync_ij(int i, int j);
BigInt narayana(int i, int j);

/// Sparse truncated series in x, y, z keyed by exponent triple.
class TriSeries {
public:
    using Key = std::array<int, 3>;

    explicit TriSeries(int max_degree = 0) : max_degree_(max_degree) {}

    static TriSeries monomial(int max_degree, int i, int j, int m, BigInt c = 1);

    int max_degree() const noexcept { return max_degree_; }
    const std::map<Key, BigInt>& terms() const noexcept { return terms_; }
    BigInt coefficient(int i, int j, int m) const;
    void set(int i, int j, int m, BigInt c);

    TriSeries operator+(const TriSeries& o) const;
    TriSeries operator-(const TriSeries& o) const;
    TriSeries operator*(const TriSeries& o) const;
    /// 1 / (1 - S); S must have zero constant term.
    TriSeries geometric() const;
    /// S(y, x, z).
    TriSeries swap_xy() const;

    friend bool operator==(const TriSeries&, const TriSeries&) = default;

private:
    int max_degree_;
    std::map<Key, BigInt> terms_;
};

struct TrivariateResult {
    TriSeries a;
    TriSeries b;
    /// (i, j, m) -> number of intervals with i, j, m canopy entries of type S11, S00, M10.
    std::map<TriSeries::Key, BigInt> coefficients;
    int rounds = 0;
};

constexpr int kDefaultSeriesCap = 9;

/// Coefficients for every size n <= max_n. Throws OracleDisagreement if the
/// edge-marked identity fails or A(x,y,z) != B(y,x,z).
TrivariateResult trivariate_coefficients(int max_n, int cap = kDefaultSeriesCap);

struct ModernSeries {
    std::vector<BigInt> a;  ///< planted modern trees
    std::vector<BigInt> b;  ///< planted with a bud right after the root
    std::vector<BigInt> c;  ///< a / (1 - b)
};

/// Coefficients up to z^max_n; checks C against its closed form and the
/// derived modern counts against count(Modern, n).
ModernSeries modern_series_coefficients(int max_n, int cap = 40);

/// Brute-force counts over all intervals of one size (filled by the scan module).
struct Tally {
    int n = 0;
    std::uint64_t total = 0;
    std::map<Family, std::uint64_t> family;
    std::map<Family, std::uint64_t> self_dual;  ///< self-dual members per family
    std::map<TriSeries::Key, std::uint64_t> canopy;  ///< (i, j, m) canopy-type counts
    std::vector<std::uint64_t> equal_canopy;  ///< index k: canopies agree at exactly k + 2 leaves
    std::map<std::pair<int, int>, std::uint64_t> synchronized_ij;
    std::map<std::pair<int, int>, std::uint64_t> modern_synchronized_ij;

    void merge(const Tally& o);
    friend bool operator==(const Tally&, const Tally&) = default;
};

}  // namespace tamari
