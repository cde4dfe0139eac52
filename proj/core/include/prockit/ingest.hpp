#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prockit/corpus.hpp"

namespace prockit {

/// A semantic-role label as emitted by an external parser (V, ARG0..ARG5,
/// AM-*/ARGM-*, R-ARG*, C-ARG*). The ARGM- spelling is accepted and folded
/// to AM- for comparisons.
struct RoleLabel {
    std::string label;

    /// Non-empty uppercase token, optionally with hyphenated qualifiers.
    static bool valid_syntax(std::string_view s);

    /// Canonical form: ARGM-X becomes AM-X (also inside C-/R- prefixes).
    std::string canonical() const;

    /// Canonical form with a leading continuation/reference prefix removed;
    /// "C-ARG1" has base "ARG1", "R-ARGM-TMP" has base "AM-TMP".
    std::string base() const;

    bool is_verb() const { return label == "V"; }
    bool is_continuation() const;

    bool operator==(const RoleLabel&) const = default;
};

struct RoleArgument {
    RoleLabel role;
    std::string text;

    bool operator==(const RoleArgument&) const = default;
};

/// One predicate with role-labeled argument spans from an external parser.
struct PredicateFrame {
    std::string video_id;
    int clip_index = 0;
    std::string predicate;
    std::vector<RoleArgument> arguments;

    bool operator==(const PredicateFrame&) const = default;
};

/// One (time span, verb, noun, confidence) record from an external video
/// action detector.
struct DetectionEvent {
    std::string video_id;
    TimeSpan span;
    std::string verb_label;
    std::string noun_label;
    double confidence = 0.0;

    bool operator==(const DetectionEvent&) const = default;
};

using FrameMap = std::map<ClipKey, std::vector<PredicateFrame>>;

/// Load line-delimited predicate frames grouped by (video_id, clip); file
/// order is preserved within each clip. Referenced clips need not exist in
/// any corpus — cross-checks happen downstream.
FrameMap load_frames(const std::filesystem::path& path);

/// Load line-delimited detection events, sorted by (video_id, span.start).
/// Multi-word labels using underscores are split into spaced phrases.
std::vector<DetectionEvent> load_detections(const std::filesystem::path& path);

/// Per-clip detector labels, deduplicated in first-seen order.
struct ClipLabels {
    std::vector<std::string> verbs;
    std::vector<std::string> nouns;
};

struct AlignmentResult {
    std::vector<ClipLabels> per_clip;  // indexed by clip
    std::size_t assigned = 0;
    std::size_t dropped = 0;  // zero overlap with every clip
};

/// Assign each event to the clip with maximal temporal overlap (ties go to
/// the earlier clip); events below min_confidence or with no overlap at all
/// are dropped. Every event must carry the video's id.
AlignmentResult align_detections_to_clips(const std::vector<DetectionEvent>& events,
                                          const VideoRecord& video,
                                          double min_confidence = 0.0);

}  // namespace prockit
