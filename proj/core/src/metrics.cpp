#include "prockit/metrics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "prockit/assignment.hpp"
#include "prockit/text.hpp"

namespace prockit {

const char* to_string(MatchRegime regime) {
    switch (regime) {
        case MatchRegime::exact: return "exact";
        case MatchRegime::fuzzy: return "fuzzy";
        case MatchRegime::partial_fuzzy: return "partial_fuzzy";
    }
    return "?";
}

MatchRegime regime_from_string(std::string_view name) {
    if (name == "exact") return MatchRegime::exact;
    if (name == "fuzzy") return MatchRegime::fuzzy;
    if (name == "partial_fuzzy") return MatchRegime::partial_fuzzy;
    throw std::invalid_argument("unknown match regime: " + std::string(name));
}

const char* to_string(AggMode mode) {
    return mode == AggMode::micro ? "micro" : "macro";
}

AggMode agg_from_string(std::string_view name) {
    if (name == "micro") return AggMode::micro;
    if (name == "macro") return AggMode::macro;
    throw std::invalid_argument("unknown aggregation mode: " + std::string(name));
}

namespace {

std::size_t levenshtein_cps(const std::u32string& a, const std::u32string& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

}  // namespace

namespace {

double fuzzy_cps(const std::u32string& a, const std::u32string& b) {
    const double longest = static_cast<double>(std::max(a.size(), b.size()));
    return 1.0 - static_cast<double>(levenshtein_cps(a, b)) / longest;
}

double partial_fuzzy_cps(std::u32string a, std::u32string b) {
    if (a.size() > b.size()) std::swap(a, b);
    const std::size_t w = a.size();
    double best = 0.0;
    for (std::size_t off = 0; off + w <= b.size(); ++off) {
        std::u32string window = b.substr(off, w);
        double sim =
            1.0 - static_cast<double>(levenshtein_cps(a, window)) / static_cast<double>(w);
        best = std::max(best, sim);
        if (best == 1.0) break;
    }
    return std::clamp(best, 0.0, 1.0);
}

// Pairwise score on match-normalized code points; total even for phrases
// that normalize to nothing (two empties count as equal).
double pair_score(const std::u32string& a, const std::u32string& b, MatchRegime regime) {
    if (a.empty() || b.empty()) {
        return (a.empty() && b.empty()) ? 1.0 : 0.0;
    }
    switch (regime) {
        case MatchRegime::exact:
            return a == b ? 1.0 : 0.0;
        case MatchRegime::fuzzy:
            return fuzzy_cps(a, b);
        case MatchRegime::partial_fuzzy:
            return partial_fuzzy_cps(a, b);
    }
    return 0.0;
}

}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
    return levenshtein_cps(decode_utf8(a), decode_utf8(b));
}

double fuzzy_sim(std::string_view a, std::string_view b) {
    std::u32string na = decode_utf8(normalize_match(a));
    std::u32string nb = decode_utf8(normalize_match(b));
    if (na.empty() || nb.empty()) {
        throw std::invalid_argument("fuzzy_sim: phrase is empty after normalization");
    }
    return fuzzy_cps(na, nb);
}

double partial_fuzzy_sim(std::string_view a, std::string_view b) {
    std::u32string na = decode_utf8(normalize_match(a));
    std::u32string nb = decode_utf8(normalize_match(b));
    if (na.empty() || nb.empty()) {
        throw std::invalid_argument("partial_fuzzy_sim: phrase is empty after normalization");
    }
    return partial_fuzzy_cps(std::move(na), std::move(nb));
}

double soft_tp(const std::vector<std::string>& predicted, const std::vector<std::string>& gold,
               MatchRegime regime) {
    if (predicted.empty() || gold.empty()) return 0.0;
    std::vector<std::u32string> np, ng;
    np.reserve(predicted.size());
    ng.reserve(gold.size());
    for (const std::string& p : predicted) np.push_back(decode_utf8(normalize_match(p)));
    for (const std::string& g : gold) ng.push_back(decode_utf8(normalize_match(g)));

    std::vector<std::vector<double>> weights(np.size(), std::vector<double>(ng.size()));
    for (std::size_t i = 0; i < np.size(); ++i) {
        for (std::size_t j = 0; j < ng.size(); ++j) {
            weights[i][j] = pair_score(np[i], ng[j], regime);
        }
    }
    return max_weight_assignment(weights).total;
}

Prf prf(double tp, std::size_t n_predicted, std::size_t n_gold) {
    constexpr double kSlack = 1e-9;
    if (tp < -kSlack) {
        throw std::invalid_argument("prf: negative tp");
    }
    const double cap = static_cast<double>(std::min(n_predicted, n_gold));
    if (tp > cap + kSlack) {
        throw std::invalid_argument("prf: tp exceeds min(predicted, gold) counts");
    }
    tp = std::clamp(tp, 0.0, cap);
    Prf out;
    out.precision = n_predicted == 0 ? 0.0 : tp / static_cast<double>(n_predicted);
    out.recall = n_gold == 0 ? 0.0 : tp / static_cast<double>(n_gold);
    const double pr = out.precision + out.recall;
    out.f1 = pr == 0.0 ? 0.0 : 2.0 * out.precision * out.recall / pr;
    return out;
}

MatchReport score_extractions(const std::vector<TupleRecord>& predicted,
                              const std::vector<TupleRecord>& gold, MatchRegime regime,
                              AggMode agg, const Corpus* corpus) {
    struct Cell {
        std::vector<std::string> pred_verbs, gold_verbs, pred_args, gold_args;
    };
    std::map<ClipKey, Cell> cells;

    auto check_ref = [&](const TupleRecord& rec, const char* side) {
        if (corpus == nullptr) return;
        const VideoRecord* video = corpus->find_video(rec.video_id);
        if (video == nullptr || rec.clip < 0 ||
            rec.clip >= static_cast<int>(video->clips.size())) {
            throw Error(std::string(side) + " tuple references unknown clip " + rec.video_id +
                        "/" + std::to_string(rec.clip));
        }
    };

    for (const TupleRecord& rec : predicted) {
        check_ref(rec, "predicted");
        Cell& cell = cells[{rec.video_id, rec.clip}];
        cell.pred_verbs.push_back(rec.verb);
        cell.pred_args.insert(cell.pred_args.end(), rec.args.begin(), rec.args.end());
    }
    for (const TupleRecord& rec : gold) {
        check_ref(rec, "gold");
        Cell& cell = cells[{rec.video_id, rec.clip}];
        cell.gold_verbs.push_back(rec.verb);
        cell.gold_args.insert(cell.gold_args.end(), rec.args.begin(), rec.args.end());
    }

    MatchReport report;
    report.regime = regime;
    report.agg = agg;

    double verb_tp_sum = 0.0, arg_tp_sum = 0.0;
    std::size_t verb_pred = 0, verb_gold = 0, arg_pred = 0, arg_gold = 0;
    Prf verb_macro, arg_macro;

    for (const auto& [key, cell] : cells) {
        ClipScore score;
        score.key = key;
        score.verb_tp = soft_tp(cell.pred_verbs, cell.gold_verbs, regime);
        score.arg_tp = soft_tp(cell.pred_args, cell.gold_args, regime);
        score.n_pred_verbs = cell.pred_verbs.size();
        score.n_gold_verbs = cell.gold_verbs.size();
        score.n_pred_args = cell.pred_args.size();
        score.n_gold_args = cell.gold_args.size();
        report.clips.push_back(score);

        verb_tp_sum += score.verb_tp;
        arg_tp_sum += score.arg_tp;
        verb_pred += score.n_pred_verbs;
        verb_gold += score.n_gold_verbs;
        arg_pred += score.n_pred_args;
        arg_gold += score.n_gold_args;

        Prf vc = prf(score.verb_tp, score.n_pred_verbs, score.n_gold_verbs);
        Prf ac = prf(score.arg_tp, score.n_pred_args, score.n_gold_args);
        verb_macro.precision += vc.precision;
        verb_macro.recall += vc.recall;
        verb_macro.f1 += vc.f1;
        arg_macro.precision += ac.precision;
        arg_macro.recall += ac.recall;
        arg_macro.f1 += ac.f1;
    }

    if (agg == AggMode::micro) {
        report.verbs = prf(verb_tp_sum, verb_pred, verb_gold);
        report.arguments = prf(arg_tp_sum, arg_pred, arg_gold);
    } else if (!report.clips.empty()) {
        const double n = static_cast<double>(report.clips.size());
        report.verbs = {verb_macro.precision / n, verb_macro.recall / n, verb_macro.f1 / n};
        report.arguments = {arg_macro.precision / n, arg_macro.recall / n, arg_macro.f1 / n};
    }
    return report;
}

double cohen_kappa(const std::vector<bool>& labels_a, const std::vector<bool>& labels_b) {
    if (labels_a.size() != labels_b.size()) {
        throw std::invalid_argument("cohen_kappa: sequences differ in length");
    }
    if (labels_a.empty()) {
        throw std::invalid_argument("cohen_kappa: empty sequences");
    }
    const double n = static_cast<double>(labels_a.size());
    double agree = 0.0, a_pos = 0.0, b_pos = 0.0;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        if (labels_a[i] == labels_b[i]) agree += 1.0;
        if (labels_a[i]) a_pos += 1.0;
        if (labels_b[i]) b_pos += 1.0;
    }
    const double p_o = agree / n;
    const double pa = a_pos / n;
    const double pb = b_pos / n;
    const double p_e = pa * pb + (1.0 - pa) * (1.0 - pb);
    if (p_e == 1.0) return 1.0;  // both raters constant and identical
    return (p_o - p_e) / (1.0 - p_e);
}

double jaccard_tokens(const std::set<std::string>& tokens_a,
                      const std::set<std::string>& tokens_b) {
    if (tokens_a.empty() && tokens_b.empty()) return 1.0;
    std::size_t intersection = 0;
    for (const std::string& t : tokens_a) {
        intersection += tokens_b.count(t);
    }
    const std::size_t unions = tokens_a.size() + tokens_b.size() - intersection;
    return static_cast<double>(intersection) / static_cast<double>(unions);
}

}  // namespace prockit
