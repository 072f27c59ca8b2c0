#pragma once

// Text meaning representations: ontologically grounded frame graphs in the
// "ontogen-tmr/1" JSON schema.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontogen {

struct InstanceRef {
  std::string id;
  friend bool operator==(const InstanceRef&, const InstanceRef&) = default;
};

struct ConceptRef {
  std::string name;
  friend bool operator==(const ConceptRef&, const ConceptRef&) = default;
};

struct Literal {
  std::string text;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CalendarDate {
  int month = 1;
  int day = 1;
  int year = 1970;
  friend auto operator<=>(const CalendarDate&, const CalendarDate&) = default;
};

struct ClockTime {
  int hour = 0;
  int minute = 0;
  friend auto operator<=>(const ClockTime&, const ClockTime&) = default;
};

/// Opaque call to a procedural-semantic routine, e.g. "< find-anchor-time".
struct ProceduralCall {
  std::string text;
  friend bool operator==(const ProceduralCall&, const ProceduralCall&) = default;
};

enum class RelativeTime { BeforeReference, AtReference, AfterReference };

std::string_view toString(RelativeTime t);

using Filler = std::variant<InstanceRef, ConceptRef, double, Literal, CalendarDate, ClockTime,
                            ProceduralCall, RelativeTime>;

struct FrameMetadata {
  std::string fromSense;
  int wordNum = 0;
  friend bool operator==(const FrameMetadata&, const FrameMetadata&) = default;
};

struct TmrFrame {
  std::string instanceId;
  std::map<std::string, std::vector<Filler>> slots;
  std::optional<FrameMetadata> metadata;
  std::optional<std::string> coref;

  const Filler* first(std::string_view property) const;
  const std::string* instanceFiller(std::string_view property) const;
  bool has(std::string_view property) const { return first(property) != nullptr; }
};

struct DateTime {
  CalendarDate date;
  ClockTime time;
  friend auto operator<=>(const DateTime&, const DateTime&) = default;
};

/// What the listener already has in mind: instances mentioned recently
/// (pronoun antecedents) and the sentences already produced.
struct DiscourseContext {
  std::vector<std::string> salient;
  std::vector<std::string> history;

  bool isSalient(std::string_view id) const;
};

struct Tmr {
  std::vector<TmrFrame> frames;
  std::optional<std::string> speakerId;
  std::optional<std::string> hearerId;
  std::optional<DateTime> referenceTime;
  DiscourseContext context;

  const TmrFrame* find(std::string_view id) const;
};

/// Instance-id concept prefix: FASTEN-18 -> FASTEN. Throws MalformedId.
std::string conceptOf(std::string_view instanceId);
std::string conceptOf(const TmrFrame& frame);
bool isInstanceId(std::string_view text);

/// Slots managed by the pipeline rather than expressed by words.
bool isInverseProperty(std::string_view property);
bool isTimeProperty(std::string_view property);
std::string inverseOf(std::string_view property);

/// Frames with CARDINALITY > 1 are plural.
bool isPlural(const TmrFrame& frame);

/// Parses and validates; inverse slots are completed when only one
/// direction is given. Throws ParseError on malformed text, duplicate ids
/// or contradictory inverse slots.
Tmr parseTmr(std::string_view text, const std::string& source = "<tmr>");
std::string serializeTmr(const Tmr& tmr);

/// Removes NLU metadata and rewrites "< find-anchor-time" TIME fillers as
/// before-reference. Idempotent.
Tmr stripMetadata(const Tmr& nluTmr);

/// The tense-relevant time of a frame relative to the TMR's reference time.
std::optional<RelativeTime> relativeTimeOf(const TmrFrame& frame, const Tmr& tmr);

struct IsomorphismResult {
  bool isomorphic = false;
  std::map<std::string, std::string> mapping;  // instance ids of a -> b
  explicit operator bool() const { return isomorphic; }
};

/// Searches for a concept- and slot-preserving bijection between instance
/// ids. Metadata is ignored and time encodings compare as relative times.
/// HAS-NAME is compared only when both frames carry it.
IsomorphismResult tmrIsomorphic(const Tmr& a, const Tmr& b);

}  // namespace ontogen
