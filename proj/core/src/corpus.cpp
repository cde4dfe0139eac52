#include "prockit/corpus.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "io_util.hpp"
#include "prockit/errors.hpp"
#include "prockit/text.hpp"

namespace prockit {

using ordered_json = nlohmann::ordered_json;

const VideoRecord* Corpus::find_video(const std::string& video_id) const {
    for (const VideoRecord& v : videos) {
        if (v.video_id == video_id) return &v;
    }
    return nullptr;
}

std::string Violation::to_string() const {
    std::ostringstream os;
    os << "video=" << (video_id.empty() ? "<none>" : video_id);
    if (clip_index >= 0) os << " clip=" << clip_index;
    if (tuple_index >= 0) os << " tuple=" << tuple_index;
    os << " rule=" << rule << ": " << detail;
    return os.str();
}

std::vector<Violation> validate_corpus(const Corpus& corpus) {
    std::vector<Violation> out;
    std::set<std::string> seen_ids;
    for (const VideoRecord& video : corpus.videos) {
        if (!seen_ids.insert(video.video_id).second) {
            out.push_back({video.video_id, "duplicate-video-id", -1, -1,
                           "video_id appears more than once"});
        }
        const int n = static_cast<int>(video.clips.size());
        for (int i = 0; i < n; ++i) {
            const Clip& clip = video.clips[i];
            if (clip.index != i) {
                out.push_back({video.video_id, "clip-index", i, -1,
                               "expected index " + std::to_string(i) + ", found " +
                                   std::to_string(clip.index)});
            }
            if (!(clip.span.end > clip.span.start)) {
                out.push_back({video.video_id, "clip-span", i, -1,
                               "span end must exceed start"});
            }
            if (normalize_stored(clip.sentence).empty()) {
                out.push_back({video.video_id, "empty-sentence", i, -1,
                               "sentence is empty after trimming"});
            }
            if (i > 0) {
                const Clip& prev = video.clips[i - 1];
                if (clip.span.start < prev.span.start) {
                    out.push_back({video.video_id, "clip-ordering", i, -1,
                                   "clips are not sorted by start time"});
                } else if (prev.span.end > clip.span.start + kClipOverlapTolerance) {
                    out.push_back({video.video_id, "clip-overlap", i, -1,
                                   "overlaps previous clip"});
                }
            }
        }
        const int m = static_cast<int>(video.gold_tuples.size());
        for (int j = 0; j < m; ++j) {
            const ProcedureTuple& tuple = video.gold_tuples[j];
            if (normalize_stored(tuple.verb).empty()) {
                out.push_back({video.video_id, "empty-verb", -1, j, "tuple verb is empty"});
            }
            for (const std::string& arg : tuple.args) {
                if (normalize_stored(arg).empty()) {
                    out.push_back({video.video_id, "empty-argument", -1, j,
                                   "tuple has an empty argument"});
                    break;
                }
            }
            if (tuple.clip_index < 0 || tuple.clip_index >= n) {
                out.push_back({video.video_id, "dangling-tuple", -1, j,
                               "clip_index " + std::to_string(tuple.clip_index) +
                                   " out of range [0," + std::to_string(n) + ")"});
            } else {
                const std::optional<bool>& key = video.clips[tuple.clip_index].key;
                if (key.has_value() && !*key) {
                    out.push_back({video.video_id, "tuple-on-non-key-clip", tuple.clip_index, j,
                                   "gold tuple grounded to a clip labeled non-key"});
                }
            }
        }
    }
    return out;
}

namespace {

std::vector<std::string> violation_strings(const std::vector<Violation>& violations) {
    std::vector<std::string> out;
    out.reserve(violations.size());
    for (const Violation& v : violations) out.push_back(v.to_string());
    return out;
}

[[noreturn]] void throw_validation(const std::string& context,
                                   const std::vector<Violation>& violations) {
    std::ostringstream os;
    os << context << " (" << violations.size() << " violation"
       << (violations.size() == 1 ? "" : "s") << "):";
    for (const Violation& v : violations) os << "\n  " << v.to_string();
    throw ValidationError(os.str(), violation_strings(violations));
}

ordered_json parse_line(const std::string& path, std::size_t lineno, const std::string& line) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw ParseError(path, lineno, "not a JSON object");
    }
    return j;
}

const ordered_json& require_field(const ordered_json& j, const char* field,
                                  const std::string& path, std::size_t lineno) {
    auto it = j.find(field);
    if (it == j.end()) {
        throw ParseError(path, lineno, std::string("missing field '") + field + "'");
    }
    return *it;
}

std::string string_field(const ordered_json& j, const char* field, const std::string& path,
                         std::size_t lineno) {
    const ordered_json& v = require_field(j, field, path, lineno);
    if (!v.is_string()) {
        throw ParseError(path, lineno, std::string("field '") + field + "' must be a string");
    }
    return v.get<std::string>();
}

double number_field(const ordered_json& j, const char* field, const std::string& path,
                    std::size_t lineno) {
    const ordered_json& v = require_field(j, field, path, lineno);
    if (!v.is_number()) {
        throw ParseError(path, lineno, std::string("field '") + field + "' must be a number");
    }
    return v.get<double>();
}

int int_field(const ordered_json& j, const char* field, const std::string& path,
              std::size_t lineno) {
    const ordered_json& v = require_field(j, field, path, lineno);
    if (!v.is_number_integer()) {
        throw ParseError(path, lineno, std::string("field '") + field + "' must be an integer");
    }
    return v.get<int>();
}

ProcedureTuple tuple_from_json(const ordered_json& j, const std::string& path,
                               std::size_t lineno) {
    ProcedureTuple tuple;
    tuple.clip_index = int_field(j, "clip", path, lineno);
    tuple.verb = normalize_stored(string_field(j, "verb", path, lineno));
    const ordered_json& args = require_field(j, "args", path, lineno);
    if (!args.is_array()) {
        throw ParseError(path, lineno, "field 'args' must be an array");
    }
    for (const ordered_json& a : args) {
        if (!a.is_string()) {
            throw ParseError(path, lineno, "field 'args' must contain strings");
        }
        tuple.args.push_back(normalize_stored(a.get<std::string>()));
    }
    return tuple;
}

ordered_json tuple_to_json(const std::string& verb, const std::vector<std::string>& args,
                           int clip) {
    ordered_json j;
    j["clip"] = clip;
    j["verb"] = verb;
    j["args"] = args;
    return j;
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& path) {
    const std::string text = detail::read_file(path);
    const std::string pstr = path.string();
    Corpus corpus;
    std::size_t lineno = 0;
    for (const std::string& line : detail::split_lines(text)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json j = parse_line(pstr, lineno, line);

        VideoRecord video;
        video.video_id = string_field(j, "video_id", pstr, lineno);
        video.task = normalize_stored(string_field(j, "task", pstr, lineno));

        const ordered_json& clips = require_field(j, "clips", pstr, lineno);
        if (!clips.is_array()) {
            throw ParseError(pstr, lineno, "field 'clips' must be an array");
        }
        int index = 0;
        for (const ordered_json& cj : clips) {
            if (!cj.is_object()) {
                throw ParseError(pstr, lineno, "clip entries must be objects");
            }
            Clip clip;
            clip.index = index++;
            clip.span.start = number_field(cj, "start", pstr, lineno);
            clip.span.end = number_field(cj, "end", pstr, lineno);
            clip.sentence = normalize_stored(string_field(cj, "sentence", pstr, lineno));
            if (auto it = cj.find("key"); it != cj.end()) {
                if (!it->is_boolean()) {
                    throw ParseError(pstr, lineno, "field 'key' must be a boolean");
                }
                clip.key = it->get<bool>();
            }
            video.clips.push_back(std::move(clip));
        }

        const ordered_json& tuples = require_field(j, "gold_tuples", pstr, lineno);
        if (!tuples.is_array()) {
            throw ParseError(pstr, lineno, "field 'gold_tuples' must be an array");
        }
        for (const ordered_json& tj : tuples) {
            if (!tj.is_object()) {
                throw ParseError(pstr, lineno, "gold_tuples entries must be objects");
            }
            video.gold_tuples.push_back(tuple_from_json(tj, pstr, lineno));
        }
        corpus.videos.push_back(std::move(video));
    }

    std::vector<Violation> violations = validate_corpus(corpus);
    if (!violations.empty()) {
        throw_validation("corpus " + pstr + " failed validation", violations);
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::vector<Violation> violations = validate_corpus(corpus);
    if (!violations.empty()) {
        throw_validation("refusing to save invalid corpus", violations);
    }
    std::string out;
    for (const VideoRecord& video : corpus.videos) {
        ordered_json j;
        j["video_id"] = video.video_id;
        j["task"] = video.task;
        ordered_json clips = ordered_json::array();
        for (const Clip& clip : video.clips) {
            ordered_json cj;
            cj["start"] = clip.span.start;
            cj["end"] = clip.span.end;
            cj["sentence"] = clip.sentence;
            if (clip.key.has_value()) cj["key"] = *clip.key;
            clips.push_back(std::move(cj));
        }
        j["clips"] = std::move(clips);
        ordered_json tuples = ordered_json::array();
        for (const ProcedureTuple& tuple : video.gold_tuples) {
            tuples.push_back(tuple_to_json(tuple.verb, tuple.args, tuple.clip_index));
        }
        j["gold_tuples"] = std::move(tuples);
        out += j.dump();
        out += '\n';
    }
    detail::write_file_atomic(path, out);
}

std::vector<TupleRecord> load_tuples(const std::filesystem::path& path) {
    const std::string text = detail::read_file(path);
    const std::string pstr = path.string();
    std::vector<TupleRecord> out;
    std::size_t lineno = 0;
    for (const std::string& line : detail::split_lines(text)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json j = parse_line(pstr, lineno, line);
        TupleRecord rec;
        rec.video_id = string_field(j, "video_id", pstr, lineno);
        ProcedureTuple t = tuple_from_json(j, pstr, lineno);
        rec.clip = t.clip_index;
        rec.verb = std::move(t.verb);
        rec.args = std::move(t.args);
        if (rec.verb.empty()) {
            throw ParseError(pstr, lineno, "field 'verb' must be non-empty");
        }
        for (const std::string& arg : rec.args) {
            if (arg.empty()) {
                throw ParseError(pstr, lineno, "field 'args' must not contain empty phrases");
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

void save_tuples(const std::vector<TupleRecord>& tuples, const std::filesystem::path& path) {
    std::string out;
    for (const TupleRecord& rec : tuples) {
        ordered_json j;
        j["video_id"] = rec.video_id;
        j["clip"] = rec.clip;
        j["verb"] = rec.verb;
        j["args"] = rec.args;
        out += j.dump();
        out += '\n';
    }
    detail::write_file_atomic(path, out);
}

std::vector<TupleRecord> gold_tuple_records(const Corpus& corpus) {
    std::vector<TupleRecord> out;
    for (const VideoRecord& video : corpus.videos) {
        for (const ProcedureTuple& tuple : video.gold_tuples) {
            out.push_back({video.video_id, tuple.clip_index, tuple.verb, tuple.args});
        }
    }
    return out;
}

}  // namespace prockit
