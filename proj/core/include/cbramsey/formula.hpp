#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbramsey/rational.hpp"

namespace cbramsey {

/// Which closed form produced a prediction.
///
/// For k >= 2 the classification by sigma = m - p is CaseI (p < m - k),
/// CaseII (ceil(k/2)+1 <= sigma <= k) or CaseIII (2 <= sigma <= ceil(k/2)).
/// A k = 2 prediction reports K2Generic for the p + 1 < m - 1 branch and
/// CaseII (sigma = 2) for the p + 1 = m - 1 branch.
enum class CaseKind { K1, K2Generic, CaseI, CaseII, CaseIII };

std::string_view to_string(CaseKind kind);

struct CaseTag {
    CaseKind kind = CaseKind::K1;
    std::optional<std::int64_t> sigma;
    std::optional<std::int64_t> ell;
};

/// Validated parameters (t, k, n, m) with the derived quantities
/// p = floor((n-1)/t), q = n-1-t*p and, when p >= m-k, sigma = m-p.
struct ParamContext {
    std::int64_t t = 0;
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::optional<std::int64_t> sigma;
    std::vector<std::string> hypothesis_flags;
};

/// Flag raised when m < 1.728e10 * (t+k)^9, the explicit size threshold
/// under which the exact values are proven.
inline constexpr std::string_view kFlagBelowThreshold = "m_below_size_threshold";

/// Throws OddCycleLength for odd m, OutOfRange when t < 2, k < 1, n < 2,
/// m < 4, or (t-1)(m-1) <= n-1 < t(m-1) fails.
ParamContext validate(std::int64_t t, std::int64_t k, std::int64_t n, std::int64_t m);

/// CaseI / CaseII / CaseIII for k >= 2, K1 for k = 1.
CaseKind classify(const ParamContext& ctx);

/// One CaseIII recursion level.
struct TraceLevel {
    std::int64_t k = 0;
    std::int64_t g_prev = 0;  ///< g_{k-1} for the same (t, n, m)
    std::int64_t ell = 0;
    std::int64_t mu = 0;
    std::int64_t alpha = 0;
    std::int64_t r_k = 0;
    Rational r;
    bool r_k_within_r = false;  ///< r_k <= r
};

struct Prediction {
    std::int64_t g = 0;
    CaseTag case_tag;
    std::vector<TraceLevel> trace;  ///< CaseIII levels, ascending in k
    std::vector<std::string> flags;
};

/// r = ((mu-1)/mu)(t+k-alpha) + alpha*mu, exactly.
Rational duplication_bound(std::int64_t mu, std::int64_t alpha, std::int64_t t, std::int64_t k);
/// r_k <= r decided in integers: mu*r_k <= (mu-1)(t+k-alpha) + alpha*mu^2.
bool within_duplication_bound(std::int64_t r_k, std::int64_t mu, std::int64_t alpha, std::int64_t t, std::int64_t k);

/// g_1 = m for even m >= 2n >= 4; OutOfRange otherwise.
std::int64_t g1_large_m(std::int64_t n, std::int64_t m);

Prediction g1(const ParamContext& ctx);
Prediction g2(const ParamContext& ctx);
/// k >= 3. Throws EllOutOfRange when a CaseIII level computes ell outside
/// [sigma-1, ceil((k-1)/2)].
Prediction gk(const ParamContext& ctx);

/// Dispatches on ctx.k.
Prediction predict(const ParamContext& ctx);

/// Entry point for raw parameters. For k = 1 outside the standing hypothesis
/// it falls back to g1_large_m when m >= 2n, else throws Unsupported.
Prediction predict(std::int64_t t, std::int64_t k, std::int64_t n, std::int64_t m);

/// (k+1)(n-1)+1, cross-checked against predict(validate(2, k, n, n)).
std::int64_t corollary_diag(std::int64_t k, std::int64_t n);

nlohmann::ordered_json to_json(const ParamContext& ctx);
nlohmann::ordered_json to_json(const Prediction& pred);

}  // namespace cbramsey
