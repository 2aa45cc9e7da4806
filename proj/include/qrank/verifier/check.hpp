#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "../errors.hpp"
#include "../qseries.hpp"

namespace qrank::verifier {

enum class Status { pass, fail, error };

std::string_view status_name(Status s);

struct Mismatch {
    long exponent = 0;
    std::string lhs;
    std::string rhs;
};

/// Outcome of a check body: a first failing comparison (with the label of
/// the sub-identity it belongs to) or a pass through `checked_to`.
struct Verdict {
    bool pass = true;
    int checked_to = 0;
    std::string label;
    std::optional<Mismatch> mismatch;
    std::vector<std::string> notes;
};

enum class CheckKind { univariate, bivariate, oracle };

struct CheckSpec {
    std::string name;
    std::string anchor;
    CheckKind kind = CheckKind::univariate;
    int default_order = 60;
    int max_order = 1000;
    std::string params;
    std::vector<std::string> dependencies;
    std::function<Verdict(int)> run;
};

struct CheckResult {
    std::string name;
    std::string anchor;
    Status status = Status::error;
    int order_checked = 0;
    std::optional<Mismatch> first_mismatch;
    std::string detail;
    std::vector<std::string> notes;
    double wall_ms = 0;
};

/// Accumulates comparisons for one check; the first mismatch wins and later
/// comparisons are skipped.
class Tally {
public:
    explicit Tally(int order) : order_(order) {}

    int order() const { return order_; }
    bool ok() const { return v_.pass; }

    template <class R>
    Tally& equal(std::string_view label, const Series<R>& lhs, const Series<R>& rhs, std::optional<int> up_to = {})
    {
        if (!v_.pass)
            return *this;
        const int n = up_to.value_or(order_);
        Comparison c = series_equal(lhs, rhs, n);
        record(label, c.equal, c.checked_to);
        if (!c.equal)
            v_.mismatch = Mismatch{*c.exponent, c.lhs, c.rhs};
        return *this;
    }

    template <class R>
    Tally& zero(std::string_view label, const Series<R>& f, std::optional<int> up_to = {})
    {
        const int n = up_to.value_or(order_);
        return equal(label, f, Series<R>(f.lower(), std::max(n, f.trunc())), n);
    }

    /// A scalar fact; on failure `lhs`/`rhs` describe the disagreement.
    Tally& require(std::string_view label, bool cond, long at, std::string lhs, std::string rhs, int checked = -1);

    Tally& note(std::string n)
    {
        v_.notes.push_back(std::move(n));
        return *this;
    }

    Verdict verdict() const { return v_; }

private:
    void record(std::string_view label, bool equal, int checked)
    {
        if (!equal) {
            v_.pass = false;
            v_.label = std::string(label);
        }
        v_.checked_to = v_.checked_to == 0 ? checked : std::min(v_.checked_to, checked);
    }

    int order_;
    Verdict v_;
};

/// Throws non_generic when `f` vanishes through its precision: a side that is
/// identically zero at a specialization proves nothing.
template <class R>
void require_nonzero(std::string_view what, const Series<R>& f)
{
    if (f.is_zero())
        throw non_generic(std::string(what) + " vanishes at this specialization");
}

/// Runs `body(spec, tally)` over a specialization set until `needed` of them
/// pass. Non-generic specializations are skipped; a mismatch stops at once.
template <class S, class Body>
Verdict rotate(int order, const std::vector<S>& specs, int needed, Body&& body,
               const std::function<std::string(const S&)>& describe)
{
    int passes = 0;
    std::vector<std::string> notes;
    int checked = order;
    for (const S& s : specs) {
        if (passes >= needed)
            break;
        Tally t(order);
        try {
            body(s, t);
        } catch (const non_generic& e) {
            notes.push_back("skipped " + describe(s) + ": " + e.what());
            continue;
        }
        Verdict v = t.verdict();
        if (!v.pass) {
            v.label = describe(s) + (v.label.empty() ? "" : ": " + v.label);
            v.notes.insert(v.notes.begin(), notes.begin(), notes.end());
            return v;
        }
        checked = std::min(checked, v.checked_to);
        notes.push_back("passed " + describe(s));
        ++passes;
    }
    if (passes < needed)
        throw non_generic("only " + std::to_string(passes) + " of " + std::to_string(needed) +
                          " required generic specializations passed");
    Verdict out;
    out.checked_to = checked;
    out.notes = std::move(notes);
    return out;
}

// Registry -------------------------------------------------------------------

/// Every registered check, sorted by name.
const std::vector<CheckSpec>& registry();
const CheckSpec* find_check(std::string_view name);

/// Order used when none is given: QRANK_DEFAULT_ORDER if set (series checks
/// only), otherwise the check's own default.
int effective_default_order(const CheckSpec& spec);

CheckResult run_check(std::string_view name, std::optional<int> order = {});

struct RunOptions {
    std::optional<int> order;
    std::vector<std::string> names;
    bool all = true;
    unsigned jobs = 1;
};

/// Runs the selected checks (all when `all` is set), sorted by name.
std::vector<CheckResult> run_all(const RunOptions& opts);

/// 0 all pass, 1 any FAIL, 3 any ERROR without a FAIL.
int exit_code(const std::vector<CheckResult>& results);

/// Anchors of every in-scope statement, one token each. The registry must
/// cover exactly this set.
const std::vector<std::string>& in_scope_anchors();

/// Space-separated anchor tokens of a check.
std::vector<std::string> anchor_tokens(const CheckSpec& spec);

// Groups of checks, one per source file.
void register_foundations(std::vector<CheckSpec>& out);
void register_appell(std::vector<CheckSpec>& out);
void register_mod5(std::vector<CheckSpec>& out);
void register_ramanujan(std::vector<CheckSpec>& out);
void register_mod7(std::vector<CheckSpec>& out);
void register_oracles(std::vector<CheckSpec>& out);

} // namespace qrank::verifier
