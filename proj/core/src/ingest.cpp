#include "prockit/ingest.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "io_util.hpp"
#include "prockit/errors.hpp"
#include "prockit/text.hpp"

namespace prockit {

using ordered_json = nlohmann::ordered_json;

bool RoleLabel::valid_syntax(std::string_view s) {
    if (s.empty()) return false;
    bool segment_start = true;
    std::size_t segments = 1;
    for (char c : s) {
        if (c == '-') {
            if (segment_start) return false;  // empty segment
            segment_start = true;
            ++segments;
            continue;
        }
        if (segment_start) {
            if (c < 'A' || c > 'Z') return false;
            segment_start = false;
        } else if (!((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9'))) {
            return false;
        }
    }
    return !segment_start && segments <= 3;
}

namespace {

std::string fold_argm(std::string label) {
    // ARGM-X -> AM-X, also behind a C-/R- prefix
    for (const char* prefix : {"", "C-", "R-"}) {
        std::string needle = std::string(prefix) + "ARGM-";
        if (label.rfind(needle, 0) == 0) {
            return std::string(prefix) + "AM-" + label.substr(needle.size());
        }
    }
    return label;
}

}  // namespace

std::string RoleLabel::canonical() const { return fold_argm(label); }

bool RoleLabel::is_continuation() const { return label.rfind("C-", 0) == 0; }

std::string RoleLabel::base() const {
    std::string c = canonical();
    if (c.rfind("C-", 0) == 0 || c.rfind("R-", 0) == 0) {
        c = c.substr(2);
    }
    return c;
}

FrameMap load_frames(const std::filesystem::path& path) {
    const std::string text = detail::read_file(path);
    const std::string pstr = path.string();
    FrameMap out;
    std::size_t lineno = 0;
    for (const std::string& line : detail::split_lines(text)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw ParseError(pstr, lineno, "not a JSON object");
        }

        PredicateFrame frame;
        auto get = [&](const char* field) -> const ordered_json& {
            auto it = j.find(field);
            if (it == j.end()) {
                throw ParseError(pstr, lineno, std::string("missing field '") + field + "'");
            }
            return *it;
        };
        const ordered_json& vid = get("video_id");
        const ordered_json& clip = get("clip");
        const ordered_json& pred = get("predicate");
        const ordered_json& args = get("arguments");
        if (!vid.is_string() || !clip.is_number_integer() || !pred.is_string() ||
            !args.is_array()) {
            throw ParseError(pstr, lineno,
                             "expected {video_id: string, clip: int, predicate: string, "
                             "arguments: array}");
        }
        frame.video_id = vid.get<std::string>();
        frame.clip_index = clip.get<int>();
        frame.predicate = normalize_stored(pred.get<std::string>());
        if (frame.predicate.empty()) {
            throw ParseError(pstr, lineno, "predicate is empty");
        }

        std::size_t verb_roles = 0;
        for (const ordered_json& aj : args) {
            if (!aj.is_object() || !aj.contains("role") || !aj.contains("text") ||
                !aj["role"].is_string() || !aj["text"].is_string()) {
                throw ParseError(pstr, lineno, "arguments must be {role, text} objects");
            }
            RoleArgument arg;
            arg.role.label = aj["role"].get<std::string>();
            if (!RoleLabel::valid_syntax(arg.role.label)) {
                throw ParseError(pstr, lineno,
                                 "unknown role-label syntax: '" + arg.role.label + "'");
            }
            arg.text = normalize_stored(aj["text"].get<std::string>());
            if (arg.text.empty()) {
                throw ParseError(pstr, lineno, "argument text is empty");
            }
            if (arg.role.is_verb()) ++verb_roles;
            frame.arguments.push_back(std::move(arg));
        }
        if (verb_roles > 1) {
            throw ParseError(pstr, lineno, "frame carries more than one role-V argument");
        }

        ClipKey key{frame.video_id, frame.clip_index};
        out[key].push_back(std::move(frame));
    }
    return out;
}

namespace {

std::string split_underscores(std::string label) {
    std::replace(label.begin(), label.end(), '_', ' ');
    return normalize_stored(label);
}

}  // namespace

std::vector<DetectionEvent> load_detections(const std::filesystem::path& path) {
    const std::string text = detail::read_file(path);
    const std::string pstr = path.string();
    std::vector<DetectionEvent> out;
    std::size_t lineno = 0;
    for (const std::string& line : detail::split_lines(text)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json j = ordered_json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw ParseError(pstr, lineno, "not a JSON object");
        }
        for (const char* field : {"video_id", "start", "end", "verb", "noun", "confidence"}) {
            if (!j.contains(field)) {
                throw ParseError(pstr, lineno, std::string("missing field '") + field + "'");
            }
        }
        if (!j["video_id"].is_string() || !j["start"].is_number() || !j["end"].is_number() ||
            !j["verb"].is_string() || !j["noun"].is_string() || !j["confidence"].is_number()) {
            throw ParseError(pstr, lineno, "malformed detection record");
        }
        DetectionEvent ev;
        ev.video_id = j["video_id"].get<std::string>();
        ev.span.start = j["start"].get<double>();
        ev.span.end = j["end"].get<double>();
        ev.verb_label = split_underscores(j["verb"].get<std::string>());
        ev.noun_label = split_underscores(j["noun"].get<std::string>());
        ev.confidence = j["confidence"].get<double>();
        if (!(ev.span.end - ev.span.start > 0.0)) {
            throw ParseError(pstr, lineno, "detection span must have positive length");
        }
        if (ev.confidence < 0.0 || ev.confidence > 1.0) {
            throw ParseError(pstr, lineno, "confidence outside [0,1]");
        }
        out.push_back(std::move(ev));
    }
    std::stable_sort(out.begin(), out.end(), [](const DetectionEvent& a, const DetectionEvent& b) {
        if (a.video_id != b.video_id) return a.video_id < b.video_id;
        return a.span.start < b.span.start;
    });
    return out;
}

namespace {

double overlap(const TimeSpan& a, const TimeSpan& b) {
    return std::min(a.end, b.end) - std::max(a.start, b.start);
}

void push_unique(std::vector<std::string>& labels, const std::string& label) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
        labels.push_back(label);
    }
}

}  // namespace

AlignmentResult align_detections_to_clips(const std::vector<DetectionEvent>& events,
                                          const VideoRecord& video, double min_confidence) {
    AlignmentResult result;
    result.per_clip.resize(video.clips.size());
    for (const DetectionEvent& ev : events) {
        if (ev.video_id != video.video_id) {
            throw std::invalid_argument("event for video '" + ev.video_id +
                                        "' aligned against video '" + video.video_id + "'");
        }
        if (ev.confidence < min_confidence) continue;
        int best_clip = -1;
        double best_overlap = 0.0;
        for (const Clip& clip : video.clips) {
            double o = overlap(ev.span, clip.span);
            if (o > best_overlap) {  // strict: ties stay with the earlier clip
                best_overlap = o;
                best_clip = clip.index;
            }
        }
        if (best_clip < 0) {
            ++result.dropped;
            continue;
        }
        ++result.assigned;
        push_unique(result.per_clip[static_cast<std::size_t>(best_clip)].verbs, ev.verb_label);
        push_unique(result.per_clip[static_cast<std::size_t>(best_clip)].nouns, ev.noun_label);
    }
    return result;
}

}  // namespace prockit
