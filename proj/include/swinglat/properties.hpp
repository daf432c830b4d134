#pragma once

#include <map>
#include <string>
#include <vector>

#include "swinglat/swing.hpp"

namespace swinglat {

/// Outcome of one property suite on one diagram.
struct PropertyResult {
    std::string name;
    long checks = 0;
    bool skipped = false;  // precondition (e.g. slimness, size) not met
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// A = con(p) collapses q, B = SL-reachable, C = SSL-reachable, all pairs.
PropertyResult check_swing_lemma(const SwingAnalysis& a);
/// Slim only: no tilts, and SL = SSL = SS reachability.
PropertyResult check_slim_coincidence(const SwingAnalysis& a);
/// Size <= max_size only: con(p) equals the enumerated least congruence.
PropertyResult check_oracle_minimality(const SwingAnalysis& a, int max_size = 8);
/// [a,b] spans [a∧c, b∧c]: variant SS on slim input, SSL always.
PropertyResult check_spanning(const SwingAnalysis& a);
/// span_relation(p, SSL) is a congruence equal to con(p).
PropertyResult check_beta(const SwingAnalysis& a);
/// up_perspective(p, q) iff q is reachable from p by upward cell-perspectivities.
PropertyResult check_perspectivity(const SwingAnalysis& a);
/// Slim and size <= max_size only: in repetition-free SS-sequences with at
/// most max_steps steps, an up-perspective step is preceded only by
/// up-perspective steps.
PropertyResult check_sequence_order(const SwingAnalysis& a, int max_size = 12, int max_steps = 6);
/// The SSL step digraph of M_n is strongly connected and every con(p) of
/// M_n is the one-block partition.
PropertyResult check_mn_cyclic(int n);

/// Edge-pair check against stored reachable sets (from -> edges) instead of
/// computed ones; used to self-test the harness.
PropertyResult check_stored_reachable(const SwingAnalysis& a,
                                      const std::map<PrimeInterval, std::vector<PrimeInterval>>& stored);

/// Names accepted by run_property, in canonical order.
const std::vector<std::string>& property_names();
PropertyResult run_property(const std::string& name, const SwingAnalysis& a);

} // namespace swinglat
