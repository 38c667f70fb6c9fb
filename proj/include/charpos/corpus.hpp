#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charpos/classify.hpp"
#include "charpos/perm_group.hpp"
#include "charpos/report_json.hpp"

namespace charpos {

// ---------------------------------------------------------------------------
// Group files: a "degree N" line, then one generator per line in cycle
// notation. Blank lines and lines starting with '#' are ignored.

PermGroup parse_group_text(std::string_view text, std::size_t cap = kDefaultElementCap);
PermGroup parse_group_file(const std::filesystem::path& path, std::size_t cap = kDefaultElementCap);
std::string write_group_text(const PermGroup& G);

// ---------------------------------------------------------------------------
// Corpus

struct CorpusEntry {
  std::string name;
  /// A constructor expression, or "file:" followed by a group file path.
  std::string source;
};

struct CorpusSpec {
  std::vector<CorpusEntry> entries;
  /// Groups above this order are not classified; it also bounds subgroup
  /// enumeration.
  std::size_t cap = kDefaultSubgroupCap;
  bool fast_paths = true;
};

/// Every constructor through order 96 plus the direct products of interest.
CorpusSpec default_corpus();

/// Lines "cap N", "fast_paths on|off" and "group NAME SOURCE"; '#' starts a
/// comment. Relative file paths are resolved against base_dir. Throws
/// ParseError with the offending line, including for duplicate names.
CorpusSpec parse_corpus(std::string_view text, const std::filesystem::path& base_dir = {});
CorpusSpec load_corpus(const std::filesystem::path& path);

/// Builds the group of an entry; CapExceeded if its order passes `cap`.
PermGroup resolve(const CorpusEntry& entry, std::size_t cap);

/// Resolves a command-line group reference: a corpus entry name (from the
/// default corpus), a constructor expression, or "file:PATH".
PermGroup resolve_reference(std::string_view ref, std::size_t cap);

struct ScanViolation {
  std::string group;
  std::string statement;
  std::string detail;
};

struct Unverified {
  std::string group;
  std::string reason;
};

/// Counterexamples to an empirical implication over the scanned groups.
struct ClaimTally {
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;
};

struct ScanReport {
  std::size_t cap = 0;
  bool fast_paths = true;
  std::vector<ClassificationReport> groups;
  std::map<std::string, std::size_t> counts;
  std::vector<ScanViolation> violations;
  std::vector<Unverified> unverified;
  ClaimTally m_implies_ipr;
  ClaimTally taketa_implies_pr;
};

ScanReport scan(const CorpusSpec& spec);
Json to_json(const ScanReport& r);
std::string to_text(const ScanReport& r);

} // namespace charpos
