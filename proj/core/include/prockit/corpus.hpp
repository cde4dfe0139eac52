#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace prockit {

struct TimeSpan {
    double start = 0.0;
    double end = 0.0;

    double length() const { return end - start; }
    bool operator==(const TimeSpan&) const = default;
};

/// One transcript-aligned video clip. `key` is the gold key-clip label;
/// absent means unlabeled, which is distinct from false.
struct Clip {
    int index = 0;
    TimeSpan span;
    std::string sentence;
    std::optional<bool> key;

    bool operator==(const Clip&) const = default;
};

/// A verb phrase plus zero or more argument phrases, grounded to one clip.
struct ProcedureTuple {
    std::string verb;
    std::vector<std::string> args;
    int clip_index = 0;

    bool operator==(const ProcedureTuple&) const = default;
};

struct VideoRecord {
    std::string video_id;
    std::string task;
    std::vector<Clip> clips;
    std::vector<ProcedureTuple> gold_tuples;

    bool operator==(const VideoRecord&) const = default;
};

struct Corpus {
    std::vector<VideoRecord> videos;

    const VideoRecord* find_video(const std::string& video_id) const;
    bool operator==(const Corpus&) const = default;
};

/// Identifies one clip across the corpus.
struct ClipKey {
    std::string video_id;
    int clip = 0;

    auto operator<=>(const ClipKey&) const = default;
};

struct Violation {
    std::string video_id;
    std::string rule;
    int clip_index = -1;   // -1 when not clip-scoped
    int tuple_index = -1;  // -1 when not tuple-scoped
    std::string detail;

    std::string to_string() const;
};

/// Total check of every corpus invariant. Empty result means valid.
std::vector<Violation> validate_corpus(const Corpus& corpus);

/// Clip spans may touch but not overlap; this slack absorbs timestamp noise.
inline constexpr double kClipOverlapTolerance = 1e-6;

/// Load a line-delimited corpus file. Sentences and phrases are normalized
/// (NFC, collapsed whitespace); clip indices follow document order.
/// Throws ParseError on malformed lines and ValidationError when the loaded
/// corpus breaks an invariant.
Corpus load_corpus(const std::filesystem::path& path);

/// Write a corpus in the same line-delimited format, deterministically.
/// Refuses (ValidationError) a corpus that fails validate_corpus.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// A predicted or gold tuple as stored in tuple files; same schema for both
/// so predictions can be scored against each other.
struct TupleRecord {
    std::string video_id;
    int clip = 0;
    std::string verb;
    std::vector<std::string> args;

    bool operator==(const TupleRecord&) const = default;
};

std::vector<TupleRecord> load_tuples(const std::filesystem::path& path);
void save_tuples(const std::vector<TupleRecord>& tuples, const std::filesystem::path& path);

/// Flatten a corpus's gold annotations into tuple records.
std::vector<TupleRecord> gold_tuple_records(const Corpus& corpus);

}  // namespace prockit
