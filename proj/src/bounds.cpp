#include "jseq/bounds.hpp"

#include <chrono>

#include "jseq/errors.hpp"
#include "jseq/parallel.hpp"

namespace jseq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const Rational& c5_constant() {
    static const Rational c = rational_from_decimal("2.21073e-5");
    return c;
}
const Rational& c6_constant() {
    static const Rational c = rational_from_decimal("1.57696e-5");
    return c;
}

Ball ratl(const char* lit, mpfr_prec_t pr) { return Ball::from_decimal(lit, pr); }

Ball rat(const Rational& q, mpfr_prec_t pr) { return Ball::from_rational(q, pr); }

Ball inv_pow_half(const Ball& x, long half_steps, mpfr_prec_t pr) {
    // x^{-half_steps/2}
    return x.pow(Rational(-half_steps, 2));
}

Ball eval_d(const Ball& x, mpfr_prec_t pr) { return main_partial_sum(x, 5, pr); }
Ball eval_m(const Ball& x, mpfr_prec_t pr) { return main_partial_sum(x, 6, pr); }

Ball eval_a(const Ball& x, mpfr_prec_t pr) {
    return asymptotic_prefactor(x, pr) *
           (eval_d(x, pr) - rat(c5_constant(), pr) * inv_pow_half(x, 5, pr));
}
Ball eval_b(const Ball& x, mpfr_prec_t pr) {
    return asymptotic_prefactor(x, pr) *
           (eval_d(x, pr) + rat(c5_constant(), pr) * inv_pow_half(x, 5, pr));
}
Ball eval_k(const Ball& x, mpfr_prec_t pr) {
    return asymptotic_prefactor(x, pr) *
           (eval_m(x, pr) - rat(c6_constant(), pr) * x.pow_si(-3));
}
Ball eval_l(const Ball& x, mpfr_prec_t pr) {
    return asymptotic_prefactor(x, pr) *
           (eval_m(x, pr) + rat(c6_constant(), pr) * x.pow_si(-3));
}
Ball eval_e(const Ball& x, mpfr_prec_t pr) {
    Ball pi = Ball::pi(pr);
    Ball four_pi_sqrt = Ball::from_si(4, pr) * pi * x.sqrt();
    Ball sqrt2 = Ball::from_si(2, pr).sqrt();
    return four_pi_sqrt.exp() / (sqrt2 * x);
}

Ball eval_h(const Ball& x, mpfr_prec_t pr) {
    Ball pi = Ball::pi(pr);
    Ball pi2 = pi * pi;
    Ball pi3 = pi2 * pi;
    Ball pi4 = pi2 * pi2;
    Ball one = Ball::from_si(1, pr);
    Ball c1 = Ball::from_si(2, pr) * pi;
    Ball c2 = rat(Rational(-3, 4), pr) + Ball::from_si(2, pr) * pi2;
    Ball c3 = rat(Rational(3, 64), pr) / pi - Ball::from_si(2, pr) * pi +
              rat(Rational(4, 3), pr) * pi3;
    Ball c4 = rat(Rational(3, 4), pr) + rat(Rational(3, 256), pr) / pi2 -
              rat(Rational(5, 2), pr) * pi2 + rat(Rational(2, 3), pr) * pi4;
    return one + c1 * inv_pow_half(x, 1, pr) + c2 * x.pow_si(-1) + c3 * inv_pow_half(x, 3, pr) +
           c4 * x.pow_si(-2);
}

Ball eval_f(const Ball& x, mpfr_prec_t pr) {
    return eval_h(x, pr) + ratl("25.9592", pr) * inv_pow_half(x, 5, pr) -
           ratl("1.78935", pr) * x.pow_si(-3) - ratl("18.3114", pr) * inv_pow_half(x, 7, pr) -
           ratl("11.5407", pr) * x.pow_si(-4);
}
Ball eval_g(const Ball& x, mpfr_prec_t pr) {
    return eval_h(x, pr) + ratl("25.9593", pr) * inv_pow_half(x, 5, pr) -
           ratl("0.78879", pr) * x.pow_si(-3);
}

Ball eval_p(const Ball& x, mpfr_prec_t pr) {
    Ball pi = Ball::pi(pr);
    Ball nine_over = rat(Rational(9, 128), pr) / pi - Ball::from_si(1, pr);
    return Ball::from_si(1, pr) - pi * inv_pow_half(x, 3, pr) +
           rat(Rational(3, 4), pr) * x.pow_si(-2) - nine_over * inv_pow_half(x, 5, pr);
}
Ball eval_q(const Ball& x, mpfr_prec_t pr) {
    Ball pi = Ball::pi(pr);
    return Ball::from_si(1, pr) - pi * inv_pow_half(x, 3, pr) +
           rat(Rational(3, 4), pr) * x.pow_si(-2) -
           (rat(Rational(9, 128), pr) / pi) * inv_pow_half(x, 5, pr) +
           ratl("5.93249", pr) * x.pow_si(-3);
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    void stamp(CheckBlock& b) const { b.elapsed_ms = ms_since(t0); }
};

// Evaluates per-n work across the range with deterministic entry order.
template <typename Fn>
void fill_entries(CheckBlock& block, long n_lo, long n_hi, int jobs, Fn&& per_n) {
    block.n_from = n_lo;
    block.n_to = n_hi;
    block.entries.assign(static_cast<size_t>(n_hi - n_lo + 1), CheckEntry{});
    parallel_for(n_lo, n_hi, jobs, [&](long n) {
        CheckEntry& e = block.entries[static_cast<size_t>(n - n_lo)];
        e.n = n;
        try {
            per_n(n, e);
        } catch (const std::exception& ex) {
            e.outcome = Outcome::unresolved;
            e.witnesses.push_back({"error", ex.what()});
        }
    });
}

void apply_cert(CheckEntry& e, const SignCertificate& cert, const char* witness_name,
                bool want_positive = true) {
    bool ok = want_positive ? cert.positive() : cert.negative();
    bool strict_other = want_positive ? cert.negative() : cert.positive();
    Outcome o = ok ? Outcome::pass : (strict_other ? Outcome::fail : Outcome::unresolved);
    if (e.witnesses.empty() && e.outcome == Outcome::unresolved && e.precision_used == 0)
        e.outcome = o;  // first certificate decides the starting outcome
    else if (o == Outcome::fail || e.outcome == Outcome::fail)
        e.outcome = Outcome::fail;
    else if (o == Outcome::unresolved || e.outcome == Outcome::unresolved)
        e.outcome = Outcome::unresolved;
    e.precision_used = std::max(e.precision_used, static_cast<long>(cert.precision_used));
    e.witnesses.push_back(
        {witness_name, cert.enclosure ? cert.enclosure->str() : std::string("domain-error")});
}

}  // namespace

const char* bound_name(BoundName b) {
    switch (b) {
        case BoundName::a: return "a";
        case BoundName::b: return "b";
        case BoundName::d: return "d";
        case BoundName::e: return "e";
        case BoundName::f: return "f";
        case BoundName::g: return "g";
        case BoundName::h: return "h";
        case BoundName::k: return "k";
        case BoundName::l: return "l";
        case BoundName::m: return "m";
        case BoundName::p: return "p";
        default: return "q";
    }
}

BoundName bound_from_name(std::string_view name) {
    static const std::pair<const char*, BoundName> table[] = {
        {"a", BoundName::a}, {"b", BoundName::b}, {"d", BoundName::d}, {"e", BoundName::e},
        {"f", BoundName::f}, {"g", BoundName::g}, {"h", BoundName::h}, {"k", BoundName::k},
        {"l", BoundName::l}, {"m", BoundName::m}, {"p", BoundName::p}, {"q", BoundName::q}};
    for (const auto& [n, b] : table)
        if (name == n) return b;
    throw DomainError("unknown bound '" + std::string(name) + "'");
}

long bound_valid_from(BoundName b) {
    switch (b) {
        case BoundName::a:
        case BoundName::b: return 6;
        case BoundName::e: return 2;
        case BoundName::k:
        case BoundName::l: return 7;
        default: return 1;  // d, f, g, h, m, p, q
    }
}

Rational expansion_coeff(unsigned k) {
    Rational num(1);
    for (unsigned j = 0; j < k; ++j) {
        long odd = 2L * j + 1;
        num *= Rational(4 - odd * odd);
    }
    BigInt den(1);
    mpz_ui_pow_ui(den.get_mpz_t(), 4, k);
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    Rational r = num / Rational(den * fact);
    r.canonicalize();
    return r;
}

Ball main_partial_sum(const Ball& x, unsigned p, mpfr_prec_t prec) {
    Ball pi = Ball::pi(prec);
    Ball inv8pi = (Ball::from_si(8, prec) * pi).recip();
    Ball sum = Ball::zero(prec);
    for (unsigned k = 0; k < p; ++k) {
        Rational signed_coeff = expansion_coeff(k);
        if (k % 2 == 1) signed_coeff = -signed_coeff;  // the (-1)^k of (-1/(8 pi))^k
        Ball term = rat(signed_coeff, prec) * inv8pi.pow_si(static_cast<long>(k));
        if (k > 0) term = term * x.pow(Rational(-static_cast<long>(k), 2));
        sum = sum + term;
    }
    return sum;
}

Ball asymptotic_prefactor(const Ball& x, mpfr_prec_t prec) {
    Ball pi = Ball::pi(prec);
    Ball num = (Ball::from_si(4, prec) * pi * x.sqrt()).exp();
    Ball den = Ball::from_si(2, prec).sqrt() * x.pow(Rational(3, 4));
    return num / den;
}

Ball truncated_main(long n, unsigned p, mpfr_prec_t prec) {
    if (n < 1 || p < 1) throw DomainError("truncated_main wants n >= 1, p >= 1");
    Ball x = Ball::from_si(n, prec);
    return asymptotic_prefactor(x, prec) * main_partial_sum(x, p, prec);
}

Ball remainder_bound_limit(unsigned p, mpfr_prec_t prec) {
    Rational cp = expansion_coeff(p);
    if (cp < 0) cp = -cp;
    Ball pi = Ball::pi(prec);
    Ball sqrt2 = Ball::from_si(2, prec).sqrt();
    return rat(cp, prec) / (sqrt2 * (Ball::from_si(4, prec) * pi).pow_si(static_cast<long>(p)));
}

Ball remainder_bound(long n, unsigned p, mpfr_prec_t prec) {
    if (n < 1 || p < 1) throw DomainError("remainder_bound wants n >= 1, p >= 1");
    Ball x = Ball::from_si(n, prec);
    Ball pi = Ball::pi(prec);
    Ball sqrt2 = Ball::from_si(2, prec).sqrt();
    Ball tail = Ball::from_si(62, prec) * sqrt2 *
                (-(Ball::from_si(2, prec) * pi * x.sqrt())).exp() *
                x.pow(Rational(static_cast<long>(p), 2));
    return remainder_bound_limit(p, prec) + tail;
}

Ball eval_bound_at(BoundName name, const Ball& x, mpfr_prec_t prec) {
    switch (name) {
        case BoundName::a: return eval_a(x, prec);
        case BoundName::b: return eval_b(x, prec);
        case BoundName::d: return eval_d(x, prec);
        case BoundName::e: return eval_e(x, prec);
        case BoundName::f: return eval_f(x, prec);
        case BoundName::g: return eval_g(x, prec);
        case BoundName::h: return eval_h(x, prec);
        case BoundName::k: return eval_k(x, prec);
        case BoundName::l: return eval_l(x, prec);
        case BoundName::m: return eval_m(x, prec);
        case BoundName::p: return eval_p(x, prec);
        default: return eval_q(x, prec);
    }
}

Ball eval_bound(BoundName name, long n, mpfr_prec_t prec) {
    long from = bound_valid_from(name);
    if (n < from)
        throw DomainError(std::string("bound ") + bound_name(name) + " is asserted only from n=" +
                          std::to_string(from) + " (got n=" + std::to_string(n) + ")");
    return eval_bound_at(name, Ball::from_si(n, prec), prec);
}

Ball lower_margin_a(const Ball& x, mpfr_prec_t prec) {
    return x.pow(Rational(1, 4)) *
               (eval_d(x, prec) - rat(c5_constant(), prec) * inv_pow_half(x, 5, prec)) -
           Ball::from_si(1, prec);
}

CheckBlock sandwich_check(SandwichPair pair, long n_lo, long n_hi, const CoefficientTable& table,
                          const RunLimits& limits) {
    Timer timer;
    const bool ab = pair == SandwichPair::ab;
    const BoundName lo_name = ab ? BoundName::a : BoundName::k;
    const BoundName hi_name = ab ? BoundName::b : BoundName::l;
    const long threshold = bound_valid_from(lo_name);
    CheckBlock block;
    block.check = ab ? "sandwich-ab" : "sandwich-kl";
    fill_entries(block, n_lo, n_hi, limits.jobs, [&](long n, CheckEntry& e) {
        e.below_threshold = n < threshold;
        const BigInt& cn = table.c(n);
        auto lower_gap = [&](mpfr_prec_t pr) {
            return Ball::from_bigint(cn, pr) - eval_bound_at(lo_name, Ball::from_si(n, pr), pr);
        };
        auto upper_gap = [&](mpfr_prec_t pr) {
            return eval_bound_at(hi_name, Ball::from_si(n, pr), pr) - Ball::from_bigint(cn, pr);
        };
        std::string id_lo = std::string("c-") + bound_name(lo_name);
        std::string id_hi = std::string(bound_name(hi_name)) + "-c";
        apply_cert(e, certify_sign(lower_gap, id_lo, n, limits.policy), id_lo.c_str());
        apply_cert(e, certify_sign(upper_gap, id_hi, n, limits.policy), id_hi.c_str());
    });
    timer.stamp(block);
    return block;
}

std::vector<CheckBlock> ratio_bound_consistency(RatioPair pair, long n_lo, long n_hi,
                                                const CoefficientTable& table,
                                                const RunLimits& limits) {
    Timer timer;
    const bool fg = pair == RatioPair::fg;
    std::vector<CheckBlock> out;

    // direct: bound pair against the exact ratio from the coefficient table
    CheckBlock direct;
    direct.check = fg ? "ratio-fg-direct" : "u-pq-direct";
    long d_lo = std::max(n_lo, 1L);
    fill_entries(direct, d_lo, n_hi, limits.jobs, [&](long n, CheckEntry& e) {
        Rational exact = fg ? Rational(table.c(n + 1)) / Rational(table.c(n))
                            : (Rational(table.c(n - 1)) * Rational(table.c(n + 1))) /
                                  (Rational(table.c(n)) * Rational(table.c(n)));
        exact.canonicalize();
        const BoundName lo_name = fg ? BoundName::f : BoundName::p;
        const BoundName hi_name = fg ? BoundName::g : BoundName::q;
        auto lower_gap = [&, exact](mpfr_prec_t pr) {
            return Ball::from_rational(exact, pr) - eval_bound_at(lo_name, Ball::from_si(n, pr), pr);
        };
        auto upper_gap = [&, exact](mpfr_prec_t pr) {
            return eval_bound_at(hi_name, Ball::from_si(n, pr), pr) - Ball::from_rational(exact, pr);
        };
        std::string id_lo = fg ? "r-f" : "u-p";
        std::string id_hi = fg ? "g-r" : "q-u";
        apply_cert(e, certify_sign(lower_gap, id_lo, n, limits.policy), id_lo.c_str());
        apply_cert(e, certify_sign(upper_gap, id_hi, n, limits.policy), id_hi.c_str());
    });
    timer.stamp(direct);
    out.push_back(std::move(direct));

    // chain: bound pair against the interval induced by the c(n) sandwich
    Timer timer2;
    CheckBlock chain;
    chain.check = fg ? "ratio-fg-chain" : "u-pq-chain";
    long threshold = fg ? bound_valid_from(BoundName::a) : bound_valid_from(BoundName::k) + 1;
    long c_lo = std::max(n_lo, threshold);
    if (c_lo <= n_hi) {
        fill_entries(chain, c_lo, n_hi, limits.jobs, [&](long n, CheckEntry& e) {
            if (fg) {
                // f(n) <= a(n+1)/b(n),  b(n+1)/a(n) <= g(n)
                auto lower_gap = [&](mpfr_prec_t pr) {
                    Ball x = Ball::from_si(n, pr), x1 = Ball::from_si(n + 1, pr);
                    return eval_bound_at(BoundName::a, x1, pr) / eval_bound_at(BoundName::b, x, pr) -
                           eval_bound_at(BoundName::f, x, pr);
                };
                auto upper_gap = [&](mpfr_prec_t pr) {
                    Ball x = Ball::from_si(n, pr), x1 = Ball::from_si(n + 1, pr);
                    return eval_bound_at(BoundName::g, x, pr) -
                           eval_bound_at(BoundName::b, x1, pr) / eval_bound_at(BoundName::a, x, pr);
                };
                apply_cert(e, certify_sign(lower_gap, "a(n+1)/b(n)-f", n, limits.policy),
                           "a(n+1)/b(n)-f");
                apply_cert(e, certify_sign(upper_gap, "g-b(n+1)/a(n)", n, limits.policy),
                           "g-b(n+1)/a(n)");
            } else {
                // p(n) <= k(n-1)k(n+1)/l(n)^2,  l(n-1)l(n+1)/k(n)^2 <= q(n)
                auto lower_gap = [&](mpfr_prec_t pr) {
                    Ball xm = Ball::from_si(n - 1, pr), x = Ball::from_si(n, pr),
                         xp = Ball::from_si(n + 1, pr);
                    return eval_bound_at(BoundName::k, xm, pr) * eval_bound_at(BoundName::k, xp, pr) /
                               eval_bound_at(BoundName::l, x, pr).pow_si(2) -
                           eval_bound_at(BoundName::p, x, pr);
                };
                auto upper_gap = [&](mpfr_prec_t pr) {
                    Ball xm = Ball::from_si(n - 1, pr), x = Ball::from_si(n, pr),
                         xp = Ball::from_si(n + 1, pr);
                    return eval_bound_at(BoundName::q, x, pr) -
                           eval_bound_at(BoundName::l, xm, pr) * eval_bound_at(BoundName::l, xp, pr) /
                               eval_bound_at(BoundName::k, x, pr).pow_si(2);
                };
                apply_cert(e, certify_sign(lower_gap, "kk/l^2-p", n, limits.policy), "kk/l^2-p");
                apply_cert(e, certify_sign(upper_gap, "q-ll/k^2", n, limits.policy), "q-ll/k^2");
            }
        });
    } else {
        chain.n_from = c_lo;
        chain.n_to = n_hi;
    }
    timer2.stamp(chain);
    out.push_back(std::move(chain));
    return out;
}

CheckBlock remainder_reconstruction(unsigned p_order, const std::string& constant_literal,
                                    long horizon, const RunLimits& limits) {
    Timer timer;
    CheckBlock block;
    block.check = "remainder-p" + std::to_string(p_order);
    const Rational constant = rational_from_decimal(constant_literal);

    // the tail term decreases once p/2 < pi sqrt(n); search the first certified n*
    long n_star = -1;
    for (long n = 1; n <= horizon; ++n) {
        auto margin = [&](mpfr_prec_t pr) {
            return Ball::from_rational(constant, pr) - remainder_bound(n, p_order, pr);
        };
        SignCertificate cert = certify_sign(margin, "C-R", n, limits.policy);
        if (cert.positive()) {
            n_star = n;
            break;
        }
    }
    block.notes["constant"] = constant_literal;
    block.notes["n_star"] = n_star < 0 ? "not-found" : std::to_string(n_star);
    {
        Ball lim = remainder_bound_limit(p_order, limits.policy.start);
        block.notes["limit_term"] = lim.str();
    }

    fill_entries(block, 1, horizon, limits.jobs, [&](long n, CheckEntry& e) {
        e.below_threshold = n_star > 0 && n < n_star;
        auto margin = [&](mpfr_prec_t pr) {
            return Ball::from_rational(constant, pr) - remainder_bound(n, p_order, pr);
        };
        apply_cert(e, certify_sign(margin, "C-R", n, limits.policy), "C-R(n)");
        if (n_star > 0 && n >= n_star) {
            auto decrease = [&](mpfr_prec_t pr) {
                return remainder_bound(n, p_order, pr) - remainder_bound(n + 1, p_order, pr);
            };
            apply_cert(e, certify_sign(decrease, "R(n)-R(n+1)", n, limits.policy), "R(n)-R(n+1)");
        }
    });
    timer.stamp(block);
    return block;
}

CheckBlock bound_order_check(long n_lo, long n_hi, const CoefficientTable& table,
                             const RunLimits& limits) {
    Timer timer;
    CheckBlock block;
    block.check = "bound-order";
    fill_entries(block, n_lo, n_hi, limits.jobs, [&](long n, CheckEntry& e) {
        auto gap = [&](BoundName lo, BoundName hi) {
            return [lo, hi, n](mpfr_prec_t pr) {
                Ball x = Ball::from_si(n, pr);
                return eval_bound_at(hi, x, pr) - eval_bound_at(lo, x, pr);
            };
        };
        if (n >= 6) apply_cert(e, certify_sign(gap(BoundName::a, BoundName::b), "b-a", n, limits.policy), "b-a");
        if (n >= 7) apply_cert(e, certify_sign(gap(BoundName::k, BoundName::l), "l-k", n, limits.policy), "l-k");
        apply_cert(e, certify_sign(gap(BoundName::f, BoundName::g), "g-f", n, limits.policy), "g-f");
        apply_cert(e, certify_sign(gap(BoundName::p, BoundName::q), "q-p", n, limits.policy), "q-p");
        if (n >= 2) apply_cert(e, certify_sign(gap(BoundName::e, BoundName::a), "a-e", n, limits.policy), "a-e");
        if (n >= 7) {
            apply_cert(e, certify_sign(gap(BoundName::a, BoundName::k), "k-a", n, limits.policy), "k-a");
            apply_cert(e, certify_sign(gap(BoundName::l, BoundName::b), "b-l", n, limits.policy), "b-l");
        }
        if (n >= 4) {
            auto below_one = [n](mpfr_prec_t pr) {
                return Ball::from_si(1, pr) - eval_bound_at(BoundName::q, Ball::from_si(n, pr), pr);
            };
            apply_cert(e, certify_sign(below_one, "1-q", n, limits.policy), "1-q");
        }
        if (table.has(n - 1) && table.has(n + 1)) {
            // u(n) < 1 exactly: c(n-1) c(n+1) < c(n)^2
            BigInt defect = table.c(n) * table.c(n) - table.c(n - 1) * table.c(n + 1);
            Outcome o = defect > 0 ? Outcome::pass : Outcome::fail;
            if (o == Outcome::fail) e.outcome = Outcome::fail;
            else if (e.witnesses.empty()) e.outcome = o;
            e.witnesses.push_back({"c^2-cc", defect.get_str()});
        }
    });
    timer.stamp(block);
    return block;
}

CheckBlock asymptotic_check(const std::vector<std::pair<long, std::string>>& n_and_tolerance,
                            const CoefficientTable& table, const RunLimits& limits) {
    Timer timer;
    CheckBlock block;
    block.check = "asymptotic";
    for (const auto& [n, tol_lit] : n_and_tolerance) {
        CheckEntry e;
        e.n = n;
        Rational tol = rational_from_decimal(tol_lit);
        const BigInt& cn = table.c(n);
        auto ratio = [&, n](mpfr_prec_t pr) {
            Ball x = Ball::from_si(n, pr);
            Ball pi = Ball::pi(pr);
            return Ball::from_bigint(cn, pr) * Ball::from_si(2, pr).sqrt() *
                   x.pow(Rational(3, 4)) * (-(Ball::from_si(4, pr) * pi * x.sqrt())).exp();
        };
        auto above = [&](mpfr_prec_t pr) {
            return ratio(pr) - Ball::from_rational(Rational(1) - tol, pr);
        };
        auto below = [&](mpfr_prec_t pr) { return Ball::from_si(1, pr) - ratio(pr); };
        apply_cert(e, certify_sign(above, "ratio-(1-tol)", n, limits.policy), "ratio-(1-tol)");
        apply_cert(e, certify_sign(below, "1-ratio", n, limits.policy), "1-ratio");
        e.witnesses.push_back({"ratio", ratio(limits.policy.start).str()});
        block.entries.push_back(std::move(e));
    }
    if (!block.entries.empty()) {
        block.n_from = block.entries.front().n;
        block.n_to = block.entries.back().n;
    }
    timer.stamp(block);
    return block;
}

}  // namespace jseq
