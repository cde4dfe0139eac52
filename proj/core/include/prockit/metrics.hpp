#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "prockit/corpus.hpp"

namespace prockit {

enum class MatchRegime { exact, fuzzy, partial_fuzzy };

const char* to_string(MatchRegime regime);
MatchRegime regime_from_string(std::string_view name);

/// Unit-cost edit distance over the code points of the strings as given.
/// Callers wanting case/punctuation-insensitive distances normalize first.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// 1 - levenshtein/max-length on match-normalized phrases; in [0,1], and 1
/// exactly when the normalized phrases are equal.
/// Throws std::invalid_argument if either phrase normalizes to nothing.
double fuzzy_sim(std::string_view a, std::string_view b);

/// Best fuzzy score between the shorter phrase and any equal-length
/// contiguous substring of the longer one (both match-normalized).
/// Throws std::invalid_argument if either phrase normalizes to nothing.
double partial_fuzzy_sim(std::string_view a, std::string_view b);

/// Real-valued true-positive mass: maximum-weight one-to-one matching of
/// predicted against gold phrases under the regime's pairwise score.
/// Duplicates are matched one-to-one; unmatched phrases contribute zero.
double soft_tp(const std::vector<std::string>& predicted, const std::vector<std::string>& gold,
               MatchRegime regime);

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    bool operator==(const Prf&) const = default;
};

/// P = tp/n_predicted, R = tp/n_gold, F1 = harmonic mean; each 0 when its
/// denominator is 0. Throws std::invalid_argument when tp is negative or
/// exceeds min(n_predicted, n_gold) beyond rounding slack.
Prf prf(double tp, std::size_t n_predicted, std::size_t n_gold);

enum class AggMode { micro, macro };

const char* to_string(AggMode mode);
AggMode agg_from_string(std::string_view name);

/// Per-clip soft true positives and phrase counts for one scored field.
struct ClipScore {
    ClipKey key;
    double verb_tp = 0.0;
    double arg_tp = 0.0;
    std::size_t n_pred_verbs = 0;
    std::size_t n_gold_verbs = 0;
    std::size_t n_pred_args = 0;
    std::size_t n_gold_args = 0;
};

struct MatchReport {
    MatchRegime regime = MatchRegime::exact;
    AggMode agg = AggMode::micro;
    std::vector<ClipScore> clips;  // sorted by key
    Prf verbs;
    Prf arguments;
};

/// Score predicted tuples against gold tuples clip by clip. Verbs of all
/// tuples in a clip form one phrase multiset, arguments another; clips
/// present on only one side still count toward that side's totals.
/// When a corpus is supplied, tuples referencing clips outside it are an
/// error.
MatchReport score_extractions(const std::vector<TupleRecord>& predicted,
                              const std::vector<TupleRecord>& gold, MatchRegime regime,
                              AggMode agg = AggMode::micro, const Corpus* corpus = nullptr);

/// Two-rater agreement for binary labels; 1.0 when chance agreement is
/// total and the raters agree everywhere.
double cohen_kappa(const std::vector<bool>& labels_a, const std::vector<bool>& labels_b);

/// |A∩B|/|A∪B|, with 1.0 when both sets are empty.
double jaccard_tokens(const std::set<std::string>& tokens_a,
                      const std::set<std::string>& tokens_b);

}  // namespace prockit
