#pragma once

#include <vector>

#include "jseq/ball.hpp"
#include "jseq/numeric.hpp"

namespace jseq {

// Contiguous window of strictly positive exact integers a(start..start+len-1).
struct SequenceWindow {
    long start = 0;
    std::vector<BigInt> values;

    SequenceWindow() = default;
    SequenceWindow(long start_, std::vector<BigInt> values_);  // checks positivity

    long size() const { return static_cast<long>(values.size()); }
    long last() const { return start + size() - 1; }
    bool covers(long n) const { return n >= start && n <= last(); }
    const BigInt& at(long n) const;
};

enum class Verdict { holds, fails, unresolved };
const char* verdict_name(Verdict v);

struct VerdictEntry {
    long n = 0;
    Verdict verdict = Verdict::unresolved;
    long precision_used = 0;   // 0 = exact integer arithmetic
    std::string witness;       // defect value (exact decimal or enclosure)
};

// a(n)a(n+2) - a(n+1)^2 <= 0, exact; defined for n in [start, last-2].
std::vector<VerdictEntry> check_log_concave(const SequenceWindow& w);

// ratio sequence r(n)=a(n+1)/a(n) log-convex:
// a(n+1)^3 a(n+3) >= a(n) a(n+2)^3 cross-multiplied; n in [start, last-3].
std::vector<VerdictEntry> check_ratio_log_convex(const SequenceWindow& w);

// 4(a_n^2-a_{n-1}a_{n+1})(a_{n+1}^2-a_n a_{n+2}) - (a_n a_{n+1}-a_{n-1}a_{n+2})^2 >= 0,
// exact; n in [start+1, last-2].
std::vector<VerdictEntry> check_higher_turan(const SequenceWindow& w);

// L_m(a_n) >= 0 per the order-m Laguerre form; m=2 expands to
// a(n)a(n+4) - 4 a(n+1)a(n+3) + 3 a(n+2)^2. Exact; n in [start, last-2m].
std::vector<VerdictEntry> check_laguerre(const SequenceWindow& w, unsigned m);
BigInt laguerre_value(const SequenceWindow& w, unsigned m, long n);

struct RootCheckPolicy {
    long exact_crossover = 30;  // exact big-integer powers up to here, logs beyond
    PrecisionPolicy precision;
};

// log a(n)/n + log a(n+2)/(n+2) - 2 log a(n+1)/(n+1) >= 0. Window must start
// at n >= 1. Dual route: exact power comparison below the crossover, certified
// logs beyond.
std::vector<VerdictEntry> check_root_log_convex(const SequenceWindow& w,
                                                const RootCheckPolicy& policy);
// ratio of the root sequence log-concave: with L(n) = log a(n)/n,
// 3L(n+1) - 3L(n) - L(n+2)/... rearranged to 2 dlog(n) >= dlog(n-1) + dlog(n+1);
// n in [start+1, last-2].
std::vector<VerdictEntry> check_root_ratio_log_concave(const SequenceWindow& w,
                                                       const RootCheckPolicy& policy);

// Single-route versions, used to cross-check each other.
Verdict root_log_convex_exact(const SequenceWindow& w, long n);
Verdict root_log_convex_ball(const SequenceWindow& w, long n, const PrecisionPolicy& policy,
                             long* precision_used = nullptr, std::string* witness = nullptr);
Verdict root_ratio_log_concave_exact(const SequenceWindow& w, long n);
Verdict root_ratio_log_concave_ball(const SequenceWindow& w, long n,
                                    const PrecisionPolicy& policy, long* precision_used = nullptr,
                                    std::string* witness = nullptr);

}  // namespace jseq
