#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qrank/verifier/check.hpp"

namespace qrank::verifier {

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::error: return "ERROR";
    }
    return "?";
}

Tally& Tally::require(std::string_view label, bool cond, long at, std::string lhs, std::string rhs, int checked)
{
    if (!v_.pass)
        return *this;
    record(label, cond, checked < 0 ? order_ : checked);
    if (!cond)
        v_.mismatch = Mismatch{at, std::move(lhs), std::move(rhs)};
    return *this;
}

const std::vector<CheckSpec>& registry()
{
    static const std::vector<CheckSpec> specs = [] {
        std::vector<CheckSpec> v;
        register_foundations(v);
        register_appell(v);
        register_mod5(v);
        register_ramanujan(v);
        register_mod7(v);
        register_oracles(v);
        std::sort(v.begin(), v.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.name < b.name; });
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i].name == v[i - 1].name)
                throw internal_error("duplicate check name " + v[i].name);
        return v;
    }();
    return specs;
}

const CheckSpec* find_check(std::string_view name)
{
    const auto& r = registry();
    auto it = std::lower_bound(r.begin(), r.end(), name, [](const CheckSpec& s, std::string_view n) { return s.name < n; });
    return it != r.end() && it->name == name ? &*it : nullptr;
}

const std::vector<std::string>& in_scope_anchors()
{
    static const std::vector<std::string> anchors{
        // partitions, ranks and the conjectures
        "partition-rank-counts", "eq:ramcong5", "eq:ramcong7", "eq:ramcong11", "eq:Dysonconj5", "eq:Dysonconj7",
        "mod11-failure",
        // theta functions, Appell-Lerch sums and the rank identities
        "eq:NRid", "eq:jacp", "eq:Jba", "thm:jbt", "eq:fabcdef", "eq:mxqzdef", "eq:mdef", "eq:gdef", "eq:Rzqgzqid",
        "eq:gzqmid", "eq:mid1a", "eq:mid1b", "eq:mid1c", "eq:mid1d", "eq:weier", "lem:jzqm", "thm:rankids",
        "eq:HReta2", "eq:fHRid", "eq:fgjzmid", "thm:HiMoThm1p6",
        // mod 5
        "eq:pdissdef", "eq:Uprdef", "lem:5disstheta", "lem:5sifttheta", "eq:HRE12", "lem:zR5dis", "eq:T4EHRid",
        "lem:zR52dis", "eq:DRC5a", "eq:DRC5b", "eq:EQ1", "eq:EQ2", "eq:EQ3", "eq:EQNSOL3", "detD-expansion",
        "eq:Jsimp", "R3-zero", "detD-eta-quotient", "eq:R2+4prodforms",
        // Ramanujan's identity
        "eq:Ramid5", "Ramid5-products", "eq:R124dis5", "eq:R05id", "eq:R35id", "eq:Rtwiddef", "lem:U503ids",
        "eq:Vdef", "eq:V513", "eq:A50", "eq:bigsum50", "eq:Rtwidq15", "eq:U50left",
        // mod 7
        "eq:zth7dis", "lem:zR7dis1", "eq:EQN71", "eq:EQN72", "eq:EQN73", "mod7-product-forms"};
    return anchors;
}

std::vector<std::string> anchor_tokens(const CheckSpec& spec)
{
    std::vector<std::string> out;
    std::istringstream in(spec.anchor);
    for (std::string tok; in >> tok;)
        out.push_back(tok);
    return out;
}

int effective_default_order(const CheckSpec& spec)
{
    if (spec.kind != CheckKind::oracle) {
        if (const char* env = std::getenv("QRANK_DEFAULT_ORDER")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || v < 0)
                throw invalid_argument("QRANK_DEFAULT_ORDER must be a nonnegative integer, got '" + std::string(env) +
                                       "'");
            return static_cast<int>(v);
        }
    }
    return spec.default_order;
}

CheckResult run_check(std::string_view name, std::optional<int> order)
{
    CheckResult res;
    res.name = std::string(name);
    const CheckSpec* spec = find_check(name);
    if (!spec) {
        res.status = Status::error;
        res.detail = "unregistered check";
        return res;
    }
    res.anchor = spec->anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
        const int N = order ? *order : effective_default_order(*spec);
        res.order_checked = N;
        if (N < 0)
            throw invalid_argument("negative order");
        if (N > spec->max_order)
            throw precision_error("order " + std::to_string(N) + " exceeds the limit " +
                                  std::to_string(spec->max_order) + " for this check");
        Verdict v = spec->run(N);
        res.status = v.pass ? Status::pass : Status::fail;
        if (v.checked_to > 0)
            res.order_checked = v.checked_to;
        res.first_mismatch = v.mismatch;
        res.detail = v.label;
        res.notes = std::move(v.notes);
        if (!v.pass && !res.first_mismatch)
            res.first_mismatch = Mismatch{-1, "?", "?"};
    } catch (const error& e) {
        res.status = Status::error;
        res.detail = std::string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
        res.status = Status::error;
        res.detail = std::string("internal: ") + e.what();
    }
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<CheckResult> run_all(const RunOptions& opts)
{
    std::vector<std::string> names;
    if (opts.all) {
        for (const auto& s : registry())
            names.push_back(s.name);
    } else {
        std::set<std::string> uniq(opts.names.begin(), opts.names.end());
        names.assign(uniq.begin(), uniq.end());
    }
    std::vector<CheckResult> results(names.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < names.size(); i = next++)
            results[i] = run_check(names[i], opts.order);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(names.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return results;
}

int exit_code(const std::vector<CheckResult>& results)
{
    bool error_seen = false;
    for (const auto& r : results) {
        if (r.status == Status::fail)
            return 1;
        error_seen = error_seen || r.status == Status::error;
    }
    return error_seen ? 3 : 0;
}

} // namespace qrank::verifier
