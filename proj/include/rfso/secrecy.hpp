#pragma once

#include "rfso/fso_channel.hpp"
#include "rfso/precision.hpp"
#include "rfso/rf_channel.hpp"

namespace rfso {

// Main-path RF hop, relayed FSO hop, and the eavesdropper's RF link.
struct SecrecyLinks {
    const RfLink& main;
    const FsoLink& fso;
    const RfLink& eve;
};

struct MetricEval {
    double value;
    double error;  // estimated absolute error
};

// Average secrecy capacity in nats. The quadrature route integrates
// F_eve * (1 - F_endtoend) / (1 + gamma) directly; the closed-form
// route evaluates the series/special-function expression.
MetricEval asc_quadrature(const SecrecyLinks& links, const Precision& prec = {});
MetricEval asc_closed_form(const SecrecyLinks& links, const Precision& prec = {});

// Lower bound of the secrecy outage probability at target rate rs
// (bits/s/Hz). The bound replaces the exact outage threshold
// theta*gamma + theta - 1 with theta*gamma.
MetricEval sop_lower_quadrature(const SecrecyLinks& links, double rs,
                                const Precision& prec = {});
MetricEval sop_lower_closed_form(const SecrecyLinks& links, double rs,
                                 const Precision& prec = {});

// Individual building blocks of the closed-form series, exposed so the
// assembly can be checked term by term against direct quadrature of
// the defining integrals. t_sum is the merged exponent index t1+t2 of
// the cross terms; m indexes the optical finite sum; n2 the
// eavesdropper series term.
MetricEval asc_term_s1(const SecrecyLinks& links, int t1,
                       const Precision& prec = {});
MetricEval asc_term_s2(const SecrecyLinks& links, int t_sum,
                       const Precision& prec = {});
MetricEval asc_term_s3(const SecrecyLinks& links, int t1, int m,
                       const Precision& prec = {});
MetricEval asc_term_s4(const SecrecyLinks& links, int t_sum, int m,
                       const Precision& prec = {});
MetricEval sop_term_h1(const SecrecyLinks& links, double rs, int t1, int n2);
MetricEval sop_term_h2(const SecrecyLinks& links, double rs, int t1, int n2,
                       int m, const Precision& prec = {});

// Probability of non-zero secrecy capacity, P(gamma_main > gamma_eve).
MetricEval pnsc_quadrature(const SecrecyLinks& links, const Precision& prec = {});
MetricEval pnsc_closed_form(const SecrecyLinks& links, const Precision& prec = {});

}  // namespace rfso
