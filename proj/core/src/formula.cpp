#include "cbramsey/formula.hpp"

#include <algorithm>
#include <cmath>

#include "cbramsey/error.hpp"

namespace cbramsey {

namespace {

constexpr std::int64_t kParamCeiling = 1'000'000'000'000;
constexpr std::int64_t kMaxBookSize = 1'000'000;

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

std::string str(std::int64_t v) { return std::to_string(v); }

Prediction finish(const ParamContext& ctx, std::int64_t g, CaseTag tag) {
    Prediction p;
    p.g = g;
    p.case_tag = tag;
    p.flags = ctx.hypothesis_flags;
    return p;
}

}  // namespace

std::string_view to_string(CaseKind kind) {
    switch (kind) {
        case CaseKind::K1: return "K1";
        case CaseKind::K2Generic: return "K2_GENERIC";
        case CaseKind::CaseI: return "CASE_I";
        case CaseKind::CaseII: return "CASE_II";
        case CaseKind::CaseIII: return "CASE_III";
    }
    return "UNKNOWN";
}

ParamContext validate(std::int64_t t, std::int64_t k, std::int64_t n, std::int64_t m) {
    if (m % 2 != 0) throw Error(ErrorKind::OddCycleLength, "m = " + str(m) + " is odd");
    if (t < 2) throw Error(ErrorKind::OutOfRange, "t must be >= 2, got " + str(t));
    if (k < 1 || k > kMaxBookSize) throw Error(ErrorKind::OutOfRange, "k must be in [1, 10^6], got " + str(k));
    if (n < 2) throw Error(ErrorKind::OutOfRange, "n must be >= 2, got " + str(n));
    if (m < 4) throw Error(ErrorKind::OutOfRange, "m must be >= 4, got " + str(m));
    if (t > kParamCeiling || n > kParamCeiling || m > kParamCeiling)
        throw Error(ErrorKind::OutOfRange, "parameters above 10^12 are not supported");
    if ((t - 1) * (m - 1) > n - 1 || n - 1 >= t * (m - 1))
        throw Error(ErrorKind::OutOfRange, "need (t-1)(m-1) <= n-1 < t(m-1); got t=" + str(t) + ", n=" + str(n) +
                                               ", m=" + str(m));

    ParamContext ctx;
    ctx.t = t;
    ctx.k = k;
    ctx.n = n;
    ctx.m = m;
    ctx.p = (n - 1) / t;
    ctx.q = n - 1 - t * ctx.p;
    if (ctx.p >= m - k) ctx.sigma = m - ctx.p;

    const long double threshold = 1.728e10L * std::pow(static_cast<long double>(t + k), 9.0L);
    if (static_cast<long double>(m) < threshold) ctx.hypothesis_flags.emplace_back(kFlagBelowThreshold);
    return ctx;
}

CaseKind classify(const ParamContext& ctx) {
    if (ctx.k == 1) return CaseKind::K1;
    if (!ctx.sigma) return CaseKind::CaseI;
    const std::int64_t s = *ctx.sigma;
    if (s >= ceil_half(ctx.k) + 1 && s <= ctx.k) return CaseKind::CaseII;
    return CaseKind::CaseIII;
}

Rational duplication_bound(std::int64_t mu, std::int64_t alpha, std::int64_t t, std::int64_t k) {
    return Rational((mu - 1) * (t + k - alpha), mu) + Rational(alpha * mu);
}

bool within_duplication_bound(std::int64_t r_k, std::int64_t mu, std::int64_t alpha, std::int64_t t, std::int64_t k) {
    return mu * r_k <= (mu - 1) * (t + k - alpha) + alpha * mu * mu;
}

std::int64_t g1_large_m(std::int64_t n, std::int64_t m) {
    if (m % 2 != 0) throw Error(ErrorKind::OddCycleLength, "m = " + str(m) + " is odd");
    if (n < 2 || m < 2 * n) throw Error(ErrorKind::OutOfRange, "need even m >= 2n >= 4");
    return m;
}

Prediction g1(const ParamContext& ctx) {
    if (ctx.k != 1) throw Error(ErrorKind::OutOfRange, "g1 needs k = 1");
    const std::int64_t g = std::max(ctx.t * (ctx.m - 1) + 1, ctx.n + ctx.p + 1);
    return finish(ctx, g, {CaseKind::K1, {}, {}});
}

Prediction g2(const ParamContext& ctx) {
    if (ctx.k != 2) throw Error(ErrorKind::OutOfRange, "g2 needs k = 2");
    if (ctx.p + 1 < ctx.m - 1) {
        const std::int64_t g = std::max((ctx.t + 1) * (ctx.m - 1) + 1, ctx.n + 2 * ctx.p + 2);
        return finish(ctx, g, {CaseKind::K2Generic, {}, {}});
    }
    return finish(ctx, ctx.n + 2 * ctx.p + 1, {CaseKind::CaseII, ctx.sigma, {}});
}

Prediction gk(const ParamContext& ctx) {
    if (ctx.k < 3) throw Error(ErrorKind::OutOfRange, "gk needs k >= 3");
    const auto [t, k, n, m, p, q, sigma, flags] = ctx;

    switch (classify(ctx)) {
        case CaseKind::CaseI:
            return finish(ctx, std::max((t + k - 1) * (m - 1) + 1, n + k * p + k), {CaseKind::CaseI, {}, {}});
        case CaseKind::CaseII:
            return finish(ctx, n + k * p + *sigma - 1, {CaseKind::CaseII, sigma, {}});
        default:
            break;
    }

    // CaseIII recursion on k with (t, n, m) fixed: walk down to the first
    // level that is not CaseIII, then rebuild upward.
    std::int64_t base = k;
    while (base > 2) {
        ParamContext lower = ctx;
        lower.k = base - 1;
        lower.sigma = p >= m - lower.k ? std::optional<std::int64_t>(m - p) : std::nullopt;
        if (classify(lower) != CaseKind::CaseIII) break;
        --base;
    }
    ParamContext base_ctx = ctx;
    base_ctx.k = base - 1;
    base_ctx.sigma = p >= m - base_ctx.k ? std::optional<std::int64_t>(m - p) : std::nullopt;
    std::int64_t g_prev = predict(base_ctx).g;

    Prediction out;
    for (std::int64_t level = base; level <= k; ++level) {
        TraceLevel tl;
        tl.k = level;
        tl.g_prev = g_prev;
        tl.ell = g_prev - n - (level - 1) * p;
        if (tl.ell < *sigma - 1 || tl.ell > ceil_half(level - 1))
            throw Error(ErrorKind::EllOutOfRange, "at k=" + str(level) + ": ell=" + str(tl.ell) + " outside [" +
                                                      str(*sigma - 1) + ", " + str(ceil_half(level - 1)) + "]");
        tl.mu = (level - 1) / tl.ell;
        tl.alpha = (level - 1) % tl.ell;
        tl.r_k = t * p + t + level - tl.ell - n;
        tl.r = duplication_bound(tl.mu, tl.alpha, t, level);
        tl.r_k_within_r = within_duplication_bound(tl.r_k, tl.mu, tl.alpha, t, level);
        g_prev = n + level * p + tl.ell + (tl.r_k_within_r ? 1 : 0);
        out.trace.push_back(tl);
    }
    out.g = g_prev;
    out.case_tag = {CaseKind::CaseIII, sigma, out.trace.back().ell};
    out.flags = ctx.hypothesis_flags;
    return out;
}

Prediction predict(const ParamContext& ctx) {
    if (ctx.k == 1) return g1(ctx);
    if (ctx.k == 2) return g2(ctx);
    return gk(ctx);
}

Prediction predict(std::int64_t t, std::int64_t k, std::int64_t n, std::int64_t m) {
    if (k == 1 && m % 2 == 0 && n >= 2 && m >= 2 * n) {
        Prediction p;
        p.g = g1_large_m(n, m);
        p.case_tag = {CaseKind::K1, {}, {}};
        return p;
    }
    try {
        return predict(validate(t, k, n, m));
    } catch (const Error& e) {
        if (k == 1 && e.kind() == ErrorKind::OutOfRange && t >= 2 && n >= 2 && m >= 4)
            throw Error(ErrorKind::Unsupported, "k = 1 with m < 2n outside (t-1)(m-1) <= n-1 < t(m-1)");
        throw;
    }
}

std::int64_t corollary_diag(std::int64_t k, std::int64_t n) {
    const ParamContext ctx = validate(2, k, n, n);
    if (classify(ctx) != CaseKind::CaseI && classify(ctx) != CaseKind::K1)
        throw Error(ErrorKind::OutOfRange, "n = " + str(n) + " too small for k = " + str(k));
    const std::int64_t value = (k + 1) * (n - 1) + 1;
    const std::int64_t g = predict(ctx).g;
    if (g != value) throw std::logic_error("diagonal value disagrees with the general formula");
    return value;
}

nlohmann::ordered_json to_json(const ParamContext& ctx) {
    nlohmann::ordered_json j;
    j["t"] = ctx.t;
    j["k"] = ctx.k;
    j["n"] = ctx.n;
    j["m"] = ctx.m;
    j["p"] = ctx.p;
    j["q"] = ctx.q;
    j["sigma"] = ctx.sigma ? nlohmann::ordered_json(*ctx.sigma) : nlohmann::ordered_json(nullptr);
    j["flags"] = ctx.hypothesis_flags;
    return j;
}

nlohmann::ordered_json to_json(const Prediction& pred) {
    nlohmann::ordered_json j;
    j["g"] = pred.g;
    j["case"] = std::string(to_string(pred.case_tag.kind));
    auto trace = nlohmann::ordered_json::array();
    for (const auto& tl : pred.trace) {
        nlohmann::ordered_json e;
        e["k"] = tl.k;
        e["g_prev"] = tl.g_prev;
        e["ell"] = tl.ell;
        e["mu"] = tl.mu;
        e["alpha"] = tl.alpha;
        e["r_k"] = tl.r_k;
        e["r"] = tl.r.str();
        e["branch"] = tl.r_k_within_r ? "r_k<=r" : "r_k>r";
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
    j["flags"] = pred.flags;
    if (pred.case_tag.sigma) j["sigma"] = *pred.case_tag.sigma;
    if (pred.case_tag.ell) j["ell"] = *pred.case_tag.ell;
    return j;
}

}  // namespace cbramsey
