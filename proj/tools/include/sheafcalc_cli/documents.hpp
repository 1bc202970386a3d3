#pragma once

// JSON documents for sites, frames and suites, and their conversions to the
// core types. Schema errors are reported with a JSON pointer to the offending
// value.

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "sheafcalc/caps.hpp"
#include "sheafcalc/catalog.hpp"
#include "sheafcalc/frame.hpp"
#include "sheafcalc/omega.hpp"

namespace sheafcalc::cli {

inline constexpr const char* kSiteFormat = "sheafcalc/site@1";
inline constexpr const char* kFrameFormat = "sheafcalc/frame@1";
inline constexpr const char* kSuiteFormat = "sheafcalc/suite@1";

struct SiteDocument {
  std::string name;
  RawCategory category;
  std::string coverage_kind = "trivial";  // trivial | explicit | canonical-frame
  /// explicit only: object -> generating sieves, each given by generator arrows.
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> coverage;
};

struct FrameDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
};

struct SuiteEntry {
  std::string name;
  std::string path;                  // resolved against the suite's directory
  std::string logic;                 // registry name
  std::optional<bool> expect_holds;  // absent: only reported
};

struct SuiteDocument {
  std::string name;
  std::vector<SuiteEntry> entries;
};

using Document = std::variant<SiteDocument, FrameDocument, SuiteDocument>;

/// Throws InputError naming the JSON pointer of the first schema problem.
Document parse_document(const nlohmann::json& j);
Document parse_document_text(const std::string& text);
Document load_document(const std::filesystem::path& path);

nlohmann::json to_json(const SiteDocument& d);
nlohmann::json to_json(const FrameDocument& d);
nlohmann::json to_json(const SuiteDocument& d);

/// Builds the site; the explicit coverage is saturated to a topology.
Site build_site(const SiteDocument& d, const Caps& caps = {});
/// Throws CapExceeded when the frame has more than caps.max_frame elements.
FiniteFrame build_frame(const FrameDocument& d, const Caps& caps = {});

/// A document listing every covering sieve of the site's topology by its
/// members; reloading it gives back the same topology.
SiteDocument topology_listing(const Site& site, std::string name);
SiteDocument site_document(const std::string& name, const RawCategory& raw);
FrameDocument frame_document(const std::string& name, const FiniteFrame& A);

/// Caps from a JSON config file ({"max_fanin": .., "max_enum": .., "max_frame": ..}).
Caps load_caps(const std::filesystem::path& path, Caps base = {});

}  // namespace sheafcalc::cli
