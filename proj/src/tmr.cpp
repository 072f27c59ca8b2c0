#include "ontogen/tmr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "json_util.hpp"
#include "ontogen/error.hpp"

namespace ontogen {

using detail::Json;

namespace {

bool isConceptChar(char c) { return std::isupper(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '-'; }

bool looksLikeConcept(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), isConceptChar) && s.back() != '-';
}

constexpr std::string_view kAnchorTimeCall = "< find-anchor-time";

std::optional<CalendarDate> parseDate(std::string_view text) {
  CalendarDate d;
  char extra = 0;
  if (std::sscanf(std::string(text).c_str(), "%d.%d.%d%c", &d.month, &d.day, &d.year, &extra) != 3) return std::nullopt;
  if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) return std::nullopt;
  return d;
}

std::optional<ClockTime> parseClock(std::string_view text) {
  ClockTime t;
  char extra = 0;
  if (std::sscanf(std::string(text).c_str(), "%d:%d%c", &t.hour, &t.minute, &extra) != 2) return std::nullopt;
  if (t.hour < 0 || t.hour > 23 || t.minute < 0 || t.minute > 59) return std::nullopt;
  return t;
}

std::string formatDate(const CalendarDate& d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02d.%02d.%04d", d.month, d.day, d.year);
  return buf;
}

std::string formatClock(const ClockTime& t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d:%02d", t.hour, t.minute);
  return buf;
}

std::optional<RelativeTime> parseRelative(std::string_view text) {
  if (text == "before-reference") return RelativeTime::BeforeReference;
  if (text == "at-reference") return RelativeTime::AtReference;
  if (text == "after-reference") return RelativeTime::AfterReference;
  return std::nullopt;
}

Filler parseFiller(const Json& j, std::string_view property) {
  if (j.is_number()) {
    const double v = j.get<double>();
    if (property != "CARDINALITY" && (v < 0.0 || v > 1.0)) {
      throw std::invalid_argument("scalar filler of " + std::string(property) + " outside [0,1]");
    }
    return v;
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (isInstanceId(s)) return InstanceRef{s};
    if (looksLikeConcept(s)) return ConceptRef{s};
    return Literal{s};
  }
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("unrecognised filler " + j.dump());
  const auto& [key, value] = *j.items().begin();
  const auto text = value.get<std::string>();
  if (key == "instance") return InstanceRef{text};
  if (key == "concept") return ConceptRef{text};
  if (key == "literal") return Literal{text};
  if (key == "call") return ProceduralCall{text};
  if (key == "date") {
    if (auto d = parseDate(text)) return *d;
    throw std::invalid_argument("bad date '" + text + "' (expected MM.DD.YYYY)");
  }
  if (key == "time") {
    if (auto t = parseClock(text)) return *t;
    throw std::invalid_argument("bad clock time '" + text + "' (expected HH:MM)");
  }
  if (key == "relative") {
    if (auto r = parseRelative(text)) return *r;
    throw std::invalid_argument("bad relative time '" + text + "'");
  }
  throw std::invalid_argument("unrecognised filler key '" + key + "'");
}

Json fillerToJson(const Filler& f) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, InstanceRef>) {
          return isInstanceId(v.id) ? Json(v.id) : Json{{"instance", v.id}};
        } else if constexpr (std::is_same_v<T, ConceptRef>) {
          return looksLikeConcept(v.name) && !isInstanceId(v.name) ? Json(v.name) : Json{{"concept", v.name}};
        } else if constexpr (std::is_same_v<T, double>) {
          return v;
        } else if constexpr (std::is_same_v<T, Literal>) {
          return looksLikeConcept(v.text) ? Json{{"literal", v.text}} : Json(v.text);
        } else if constexpr (std::is_same_v<T, CalendarDate>) {
          return Json{{"date", formatDate(v)}};
        } else if constexpr (std::is_same_v<T, ClockTime>) {
          return Json{{"time", formatClock(v)}};
        } else if constexpr (std::is_same_v<T, ProceduralCall>) {
          return Json{{"call", v.text}};
        } else {
          return Json{{"relative", std::string(toString(v))}};
        }
      },
      f);
}

bool containsRef(const std::vector<Filler>& fillers, const std::string& id) {
  return std::any_of(fillers.begin(), fillers.end(), [&](const Filler& f) {
    const auto* r = std::get_if<InstanceRef>(&f);
    return r && r->id == id;
  });
}

void completeInverses(Tmr& tmr, const std::string& source) {
  struct Link {
    std::string from, property, to;
  };
  std::vector<Link> links;
  for (const auto& frame : tmr.frames) {
    for (const auto& [prop, fillers] : frame.slots) {
      for (const auto& f : fillers) {
        if (const auto* r = std::get_if<InstanceRef>(&f); r && tmr.find(r->id)) {
          links.push_back({frame.instanceId, prop, r->id});
        }
      }
    }
  }
  auto frameById = [&](const std::string& id) -> TmrFrame& {
    return *std::find_if(tmr.frames.begin(), tmr.frames.end(), [&](const auto& fr) { return fr.instanceId == id; });
  };
  // Check every declared link against its target before completing any.
  for (const auto& link : links) {
    const auto& target = frameById(link.to);
    const auto inverse = inverseOf(link.property);
    if (auto it = target.slots.find(inverse); it != target.slots.end() && !containsRef(it->second, link.from)) {
      throw ParseError(source, "inverse-slot contradiction: " + link.from + " " + link.property + " " + link.to +
                                   " but " + link.to + " " + inverse + " does not name " + link.from);
    }
  }
  for (const auto& link : links) {
    auto& target = frameById(link.to);
    auto& fillers = target.slots[inverseOf(link.property)];
    if (!containsRef(fillers, link.from)) fillers.push_back(InstanceRef{link.from});
  }
}

}  // namespace

std::string_view toString(RelativeTime t) {
  switch (t) {
    case RelativeTime::BeforeReference: return "before-reference";
    case RelativeTime::AtReference: return "at-reference";
    case RelativeTime::AfterReference: return "after-reference";
  }
  return "?";
}

const Filler* TmrFrame::first(std::string_view property) const {
  auto it = slots.find(std::string(property));
  if (it == slots.end() || it->second.empty()) return nullptr;
  return &it->second.front();
}

const std::string* TmrFrame::instanceFiller(std::string_view property) const {
  const Filler* f = first(property);
  if (!f) return nullptr;
  if (const auto* r = std::get_if<InstanceRef>(f)) return &r->id;
  return nullptr;
}

bool DiscourseContext::isSalient(std::string_view id) const {
  return std::find(salient.begin(), salient.end(), id) != salient.end();
}

const TmrFrame* Tmr::find(std::string_view id) const {
  auto it = std::find_if(frames.begin(), frames.end(), [&](const TmrFrame& f) { return f.instanceId == id; });
  return it == frames.end() ? nullptr : &*it;
}

bool isInstanceId(std::string_view text) {
  const auto dash = text.rfind('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 == text.size()) return false;
  const auto digits = text.substr(dash + 1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return false;
  }
  return looksLikeConcept(text.substr(0, dash));
}

std::string conceptOf(std::string_view instanceId) {
  if (!isInstanceId(instanceId)) throw MalformedId(std::string(instanceId));
  return std::string(instanceId.substr(0, instanceId.rfind('-')));
}

std::string conceptOf(const TmrFrame& frame) { return conceptOf(frame.instanceId); }

bool isInverseProperty(std::string_view property) {
  return property.size() > 3 && property.substr(property.size() - 3) == "-OF";
}

bool isTimeProperty(std::string_view property) {
  return property == "TIME" || property == "DATE" || property == "CLOCK-TIME";
}

std::string inverseOf(std::string_view property) {
  if (isInverseProperty(property)) return std::string(property.substr(0, property.size() - 3));
  return std::string(property) + "-OF";
}

bool isPlural(const TmrFrame& frame) {
  const Filler* f = frame.first("CARDINALITY");
  if (!f) return false;
  const auto* d = std::get_if<double>(f);
  return d && *d > 1.0;
}

Tmr parseTmr(std::string_view text, const std::string& source) {
  const Json doc = detail::parseJson(text, source);
  detail::requireSchema(doc, "ontogen-tmr/1", source);
  Tmr tmr;
  try {
    if (doc.contains("speaker")) tmr.speakerId = doc.at("speaker").get<std::string>();
    if (doc.contains("hearer")) tmr.hearerId = doc.at("hearer").get<std::string>();
    if (doc.contains("referenceTime")) {
      const auto s = doc.at("referenceTime").get<std::string>();
      const auto space = s.find(' ');
      auto date = parseDate(s.substr(0, space));
      auto clock = space == std::string::npos ? std::optional<ClockTime>(ClockTime{}) : parseClock(s.substr(space + 1));
      if (!date || !clock) throw std::invalid_argument("bad referenceTime '" + s + "'");
      tmr.referenceTime = DateTime{*date, *clock};
    }
    if (doc.contains("context")) {
      const auto& c = doc.at("context");
      if (c.contains("salient")) tmr.context.salient = c.at("salient").get<std::vector<std::string>>();
      if (c.contains("history")) tmr.context.history = c.at("history").get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    throw ParseError(source, e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, e.what());
  }

  std::set<std::string> ids;
  for (const auto& rec : doc.value("frames", Json::array())) {
    const std::string key = rec.is_object() && rec.contains("id") && rec.at("id").is_string()
                                ? "\"" + rec.at("id").get<std::string>() + "\""
                                : std::string();
    const int line = key.empty() ? 0 : detail::lineOf(text, key);
    const std::string where = line > 0 ? source + ":" + std::to_string(line) : source;
    TmrFrame frame;
    try {
      frame.instanceId = rec.at("id").get<std::string>();
      if (!isInstanceId(frame.instanceId)) throw MalformedId(frame.instanceId);
      if (rec.contains("coref")) frame.coref = rec.at("coref").get<std::string>();
      if (rec.contains("meta")) {
        const auto& m = rec.at("meta");
        frame.metadata = FrameMetadata{m.value("fromSense", ""), m.value("wordNum", 0)};
      }
      const Json slotsDoc = rec.value("slots", Json::object());
      for (const auto& [prop, value] : slotsDoc.items()) {
        if (prop == "COREF" || prop == "COREFER") {
          frame.coref = value.get<std::string>();
          continue;
        }
        auto& fillers = frame.slots[prop];
        const auto add = [&](const Json& v) {
          Filler f = parseFiller(v, prop);
          if (std::holds_alternative<ProceduralCall>(f) && prop != "TIME") {
            throw std::invalid_argument("procedural call outside a TIME slot (" + prop + ")");
          }
          fillers.push_back(std::move(f));
        };
        if (value.is_array()) {
          for (const auto& v : value) add(v);
        } else {
          add(value);
        }
      }
    } catch (const Json::exception& e) {
      throw ParseError(where, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where, e.what());
    } catch (const MalformedId& e) {
      throw ParseError(where, e.what());
    }
    if (!ids.insert(frame.instanceId).second) throw ParseError(where, "duplicate instance id " + frame.instanceId);
    tmr.frames.push_back(std::move(frame));
  }
  completeInverses(tmr, source);
  return tmr;
}

std::string serializeTmr(const Tmr& tmr) {
  Json doc;
  doc["schema"] = "ontogen-tmr/1";
  if (tmr.speakerId) doc["speaker"] = *tmr.speakerId;
  if (tmr.hearerId) doc["hearer"] = *tmr.hearerId;
  if (tmr.referenceTime) {
    doc["referenceTime"] = formatDate(tmr.referenceTime->date) + " " + formatClock(tmr.referenceTime->time);
  }
  if (!tmr.context.salient.empty() || !tmr.context.history.empty()) {
    doc["context"] = Json{{"salient", tmr.context.salient}, {"history", tmr.context.history}};
  }
  Json frames = Json::array();
  for (const auto& f : tmr.frames) {
    Json jf;
    jf["id"] = f.instanceId;
    if (f.coref) jf["coref"] = *f.coref;
    if (f.metadata) jf["meta"] = Json{{"fromSense", f.metadata->fromSense}, {"wordNum", f.metadata->wordNum}};
    Json slots = Json::object();
    for (const auto& [prop, fillers] : f.slots) {
      if (fillers.size() == 1) {
        slots[prop] = fillerToJson(fillers.front());
      } else {
        Json arr = Json::array();
        for (const auto& x : fillers) arr.push_back(fillerToJson(x));
        slots[prop] = std::move(arr);
      }
    }
    jf["slots"] = std::move(slots);
    frames.push_back(std::move(jf));
  }
  doc["frames"] = std::move(frames);
  return doc.dump(2) + "\n";
}

Tmr stripMetadata(const Tmr& nluTmr) {
  Tmr out = nluTmr;
  for (auto& frame : out.frames) {
    frame.metadata.reset();
    if (auto it = frame.slots.find("TIME"); it != frame.slots.end()) {
      for (auto& f : it->second) {
        if (const auto* call = std::get_if<ProceduralCall>(&f); call && call->text == kAnchorTimeCall) {
          f = RelativeTime::BeforeReference;
        }
      }
    }
  }
  return out;
}

std::optional<RelativeTime> relativeTimeOf(const TmrFrame& frame, const Tmr& tmr) {
  if (const Filler* t = frame.first("TIME")) {
    if (const auto* r = std::get_if<RelativeTime>(t)) return *r;
    if (const auto* call = std::get_if<ProceduralCall>(t); call && call->text == kAnchorTimeCall) {
      return RelativeTime::BeforeReference;
    }
  }
  const Filler* d = frame.first("DATE");
  if (!d || !tmr.referenceTime) return std::nullopt;
  const auto* date = std::get_if<CalendarDate>(d);
  if (!date) return std::nullopt;
  const auto& ref = *tmr.referenceTime;
  if (*date < ref.date) return RelativeTime::BeforeReference;
  if (*date > ref.date) return RelativeTime::AfterReference;
  const Filler* c = frame.first("CLOCK-TIME");
  const auto* clock = c ? std::get_if<ClockTime>(c) : nullptr;
  if (!clock || *clock == ref.time) return RelativeTime::AtReference;
  return *clock < ref.time ? RelativeTime::BeforeReference : RelativeTime::AfterReference;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct IsoSearch {
  const Tmr& a;
  const Tmr& b;
  std::map<std::string, std::string> mapping;
  std::set<std::string> usedB;

  // External references (coref targets outside the TMR) must map
  // consistently and injectively onto externals of the same concept.
  bool matchExternal(const std::string& x, const std::string& y, std::map<std::string, std::string>& ext,
                     std::set<std::string>& extUsed) const {
    if (b.find(y)) return false;
    if (!isInstanceId(x) || !isInstanceId(y) || conceptOf(x) != conceptOf(y)) return x == y;
    if (auto it = ext.find(x); it != ext.end()) return it->second == y;
    if (extUsed.count(y)) return false;
    ext[x] = y;
    extUsed.insert(y);
    return true;
  }

  bool matchRef(const std::string& x, const std::string& y, std::map<std::string, std::string>& ext,
                std::set<std::string>& extUsed) const {
    if (a.find(x)) {
      auto it = mapping.find(x);
      return it != mapping.end() && it->second == y;
    }
    return matchExternal(x, y, ext, extUsed);
  }

  static std::map<std::string, std::vector<Filler>> comparable(const TmrFrame& f, const Tmr& t) {
    std::map<std::string, std::vector<Filler>> out;
    for (const auto& [prop, fillers] : f.slots) {
      if (!isTimeProperty(prop)) out[prop] = fillers;
    }
    if (auto rel = relativeTimeOf(f, t)) out["TIME"] = {*rel};
    return out;
  }

  bool fillersMatch(const std::vector<Filler>& xs, const std::vector<Filler>& ys, std::map<std::string, std::string>& ext,
                    std::set<std::string>& extUsed) const {
    if (xs.size() != ys.size()) return false;
    std::vector<bool> taken(ys.size(), false);
    for (const auto& x : xs) {
      bool found = false;
      for (std::size_t j = 0; j < ys.size() && !found; ++j) {
        if (taken[j]) continue;
        const auto* rx = std::get_if<InstanceRef>(&x);
        const auto* ry = std::get_if<InstanceRef>(&ys[j]);
        bool ok = false;
        if (rx && ry) {
          auto extCopy = ext;
          auto usedCopy = extUsed;
          ok = matchRef(rx->id, ry->id, extCopy, usedCopy);
          if (ok) {
            ext = std::move(extCopy);
            extUsed = std::move(usedCopy);
          }
        } else if (!rx && !ry) {
          ok = x == ys[j];
        }
        if (ok) {
          taken[j] = true;
          found = true;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  bool framesMatch(const TmrFrame& fa, const TmrFrame& fb, std::map<std::string, std::string>& ext,
                   std::set<std::string>& extUsed) const {
    auto sa = comparable(fa, a);
    auto sb = comparable(fb, b);
    // A name known on one side only identifies the same referent.
    if (!(sa.count("HAS-NAME") && sb.count("HAS-NAME"))) {
      sa.erase("HAS-NAME");
      sb.erase("HAS-NAME");
    }
    if (sa.size() != sb.size()) return false;
    for (const auto& [prop, xs] : sa) {
      auto it = sb.find(prop);
      if (it == sb.end() || !fillersMatch(xs, it->second, ext, extUsed)) return false;
    }
    if (fa.coref.has_value() != fb.coref.has_value()) return false;
    return !fa.coref || matchRef(*fa.coref, *fb.coref, ext, extUsed);
  }

  bool verify() const {
    std::map<std::string, std::string> ext;
    std::set<std::string> extUsed;
    for (const auto& fa : a.frames) {
      const TmrFrame* fb = b.find(mapping.at(fa.instanceId));
      if (!framesMatch(fa, *fb, ext, extUsed)) return false;
    }
    const auto mapped = [&](const std::optional<std::string>& x, const std::optional<std::string>& y) {
      if (x.has_value() != y.has_value()) return false;
      if (!x) return true;
      auto it = mapping.find(*x);
      return it != mapping.end() ? it->second == *y : *x == *y;
    };
    return mapped(a.speakerId, b.speakerId) && mapped(a.hearerId, b.hearerId);
  }

  bool search(std::size_t index) {
    if (index == a.frames.size()) return verify();
    const auto& fa = a.frames[index];
    const auto cname = conceptOf(fa);
    for (const auto& fb : b.frames) {
      if (usedB.count(fb.instanceId) || conceptOf(fb) != cname) continue;
      mapping[fa.instanceId] = fb.instanceId;
      usedB.insert(fb.instanceId);
      if (search(index + 1)) return true;
      usedB.erase(fb.instanceId);
      mapping.erase(fa.instanceId);
    }
    return false;
  }
};

}  // namespace

IsomorphismResult tmrIsomorphic(const Tmr& a, const Tmr& b) {
  IsomorphismResult result;
  if (a.frames.size() != b.frames.size()) return result;
  IsoSearch s{a, b, {}, {}};
  if (s.search(0)) {
    result.isomorphic = true;
    result.mapping = std::move(s.mapping);
  }
  return result;
}

}  // namespace ontogen
